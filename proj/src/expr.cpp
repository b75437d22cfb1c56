#include "gpmfix/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace gpmfix {

struct ExprAst::Node {
    enum class Kind { Number, Variable, Neg, Binary, Call } kind;
    double number = 0.0;
    std::string name;  // variable or function name
    char op = 0;       // binary operator
    std::vector<std::shared_ptr<const Node>> args;
};

ExprAst::ExprAst(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

namespace {

using NodePtr = std::shared_ptr<const ExprAst::Node>;

}  // namespace

class Parser {
public:
    Parser(const std::string& src, const std::set<std::string>& vars)
        : src_(src), vars_(vars) {}

    std::shared_ptr<const ExprAst::Node> run() {
        skip_ws();
        if (pos_ >= src_.size()) throw ExprError("empty expression", pos_);
        auto e = expression();
        skip_ws();
        if (pos_ < src_.size())
            throw ExprError("unexpected trailing input", pos_);
        return e;
    }

private:
    using Node = ExprAst::Node;
    using Ptr = std::shared_ptr<const Node>;

    Ptr expression() {
        auto lhs = term();
        for (;;) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = src_[pos_++];
                lhs = binary(op, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Ptr term() {
        auto lhs = unary();
        for (;;) {
            skip_ws();
            if (peek() == '*' || peek() == '/') {
                char op = src_[pos_++];
                lhs = binary(op, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    Ptr unary() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Neg;
            n->args.push_back(unary());
            return n;
        }
        return power();
    }

    Ptr power() {
        auto base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return binary('^', base, unary());  // right associative
        }
        return base;
    }

    Ptr primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ExprError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = expression();
            skip_ws();
            if (peek() != ')') throw ExprError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw ExprError(std::string("unexpected character '") + c + "'", pos_);
    }

    Ptr number() {
        std::size_t start = pos_;
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(src_.substr(start), &used);
        } catch (const std::exception&) {
            throw ExprError("malformed number", start);
        }
        pos_ = start + used;
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Number;
        n->number = v;
        return n;
    }

    Ptr identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        skip_ws();
        if (peek() == '(') {
            static const std::set<std::string> fns = {"sin", "cos", "exp",
                                                      "sqrt", "abs", "pow"};
            if (!fns.count(name))
                throw ExprError("unknown function '" + name + "'", start);
            ++pos_;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::Call;
            n->name = name;
            n->args.push_back(expression());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                n->args.push_back(expression());
                skip_ws();
            }
            if (peek() != ')') throw ExprError("expected ')'", pos_);
            ++pos_;
            std::size_t want = (name == "pow") ? 2 : 1;
            if (n->args.size() != want)
                throw ExprError("function '" + name + "' expects " +
                                    std::to_string(want) + " argument(s)",
                                start);
            return n;
        }
        if (!vars_.count(name))
            throw ExprError("unknown variable '" + name + "'", start);
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Variable;
        n->name = name;
        return n;
    }

    Ptr binary(char op, Ptr lhs, Ptr rhs) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::Binary;
        n->op = op;
        n->args = {std::move(lhs), std::move(rhs)};
        return n;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    const std::string& src_;
    const std::set<std::string>& vars_;
    std::size_t pos_ = 0;
};

ExprAst ExprAst::parse(const std::string& src,
                       const std::set<std::string>& allowed_vars) {
    return ExprAst(Parser(src, allowed_vars).run());
}

namespace {

double eval_node(const ExprAst::Node& n,
                 const std::map<std::string, double>& bindings);

double checked(double v) {
    if (!std::isfinite(v)) throw EvalError("non-finite result");
    return v;
}

double eval_call(const ExprAst::Node& n,
                 const std::map<std::string, double>& bindings) {
    double a = eval_node(*n.args[0], bindings);
    if (n.name == "sin") return std::sin(a);
    if (n.name == "cos") return std::cos(a);
    if (n.name == "exp") return checked(std::exp(a));
    if (n.name == "abs") return std::abs(a);
    if (n.name == "sqrt") {
        if (a < 0.0) throw EvalError("sqrt of negative value");
        return std::sqrt(a);
    }
    // pow
    double b = eval_node(*n.args[1], bindings);
    return checked(std::pow(a, b));
}

double eval_node(const ExprAst::Node& n,
                 const std::map<std::string, double>& bindings) {
    using Kind = ExprAst::Node::Kind;
    switch (n.kind) {
        case Kind::Number:
            return n.number;
        case Kind::Variable: {
            auto it = bindings.find(n.name);
            if (it == bindings.end())
                throw EvalError("unbound variable '" + n.name + "'");
            return it->second;
        }
        case Kind::Neg:
            return -eval_node(*n.args[0], bindings);
        case Kind::Call:
            return eval_call(n, bindings);
        case Kind::Binary: {
            double a = eval_node(*n.args[0], bindings);
            double b = eval_node(*n.args[1], bindings);
            switch (n.op) {
                case '+': return checked(a + b);
                case '-': return checked(a - b);
                case '*': return checked(a * b);
                case '/':
                    if (b == 0.0) throw EvalError("division by zero");
                    return checked(a / b);
                case '^': return checked(std::pow(a, b));
            }
            break;
        }
    }
    throw EvalError("malformed expression tree");
}

}  // namespace

double ExprAst::eval(const std::map<std::string, double>& bindings) const {
    return eval_node(*root_, bindings);
}

}  // namespace gpmfix
