#include "gpmfix/combine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpmfix {

CombineOp CombineOp::max_op() {
    return CombineOp(CombineKind::Max,
                     [](double a, double b) { return std::max(a, b); }, "max");
}

CombineOp CombineOp::sum_op() {
    return CombineOp(CombineKind::Sum,
                     [](double a, double b) { return a + b; }, "sum");
}

CombineOp CombineOp::custom_op(std::function<double(double, double)> fn,
                               std::string name) {
    if (!fn) throw std::invalid_argument("custom combine op requires a function");
    return CombineOp(CombineKind::Custom, std::move(fn), std::move(name));
}

double CombineOp::operator()(double a, double b) const {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::domain_error("combine: non-finite operand");
    if (a < 0.0 || b < 0.0)
        throw std::domain_error("combine: negative operand");
    return fn_(a, b);
}

}  // namespace gpmfix
