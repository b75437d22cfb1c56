#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

namespace gpmfix {

struct ExprError : std::runtime_error {
    ExprError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Small arithmetic expression language for user-supplied forcings, metrics
/// and right-hand sides: numbers, declared variables, + - * / ^ (right
/// associative), unary minus, and sin/cos/exp/sqrt/abs/pow.
class ExprAst {
public:
    /// Parses `src` with the given allowed variable names. Unknown
    /// identifiers and malformed syntax raise ExprError with the offending
    /// position.
    static ExprAst parse(const std::string& src,
                         const std::set<std::string>& allowed_vars);

    /// Evaluates with every free variable bound. Division by zero, sqrt of a
    /// negative, and non-finite results raise EvalError.
    double eval(const std::map<std::string, double>& bindings) const;

    struct Node;

private:
    explicit ExprAst(std::shared_ptr<const Node> root);
    std::shared_ptr<const Node> root_;  // immutable tree, cheap to share
};

}  // namespace gpmfix
