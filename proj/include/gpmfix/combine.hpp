#pragma once

#include <functional>
#include <string>

namespace gpmfix {

enum class CombineKind { Max, Sum, Custom };

/// Binary operation `o` on the nonnegative reals: associative, commutative,
/// monotone, with identity 0. Max and Sum are the canonical instances; a
/// Custom operation is sample-tested by the axiom checker, not trusted.
class CombineOp {
public:
    static CombineOp max_op();
    static CombineOp sum_op();
    static CombineOp custom_op(std::function<double(double, double)> fn,
                               std::string name = "custom");

    CombineKind kind() const { return kind_; }
    const std::string& name() const { return name_; }

    /// Applies the operation. Rejects negative or non-finite operands.
    double operator()(double a, double b) const;

private:
    CombineOp(CombineKind kind, std::function<double(double, double)> fn,
              std::string name)
        : kind_(kind), fn_(std::move(fn)), name_(std::move(name)) {}

    CombineKind kind_;
    std::function<double(double, double)> fn_;
    std::string name_;
};

}  // namespace gpmfix
