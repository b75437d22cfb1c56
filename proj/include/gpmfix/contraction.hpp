#pragma once

#include <stdexcept>
#include <variant>

#include "gpmfix/gauge.hpp"

namespace gpmfix {

/// Banach contraction hypothesis: rho(Tx, Ty, t) <= kappa * rho(x, y, t).
struct BanachSpec {
    double kappa;
};

/// Boyd-Wong hypothesis: rho(Tx, Ty, t) <= phi(rho(x, y, t)) with phi(s) < s.
struct BoydWongSpec {
    GaugeFunction gauge;
};

class ContractionSpec {
public:
    static ContractionSpec banach(double kappa) {
        if (!(kappa >= 0.0 && kappa < 1.0))
            throw std::domain_error("contraction: kappa must lie in [0, 1)");
        return ContractionSpec(BanachSpec{kappa});
    }
    static ContractionSpec boyd_wong(GaugeFunction gauge) {
        return ContractionSpec(BoydWongSpec{std::move(gauge)});
    }

    bool is_banach() const { return std::holds_alternative<BanachSpec>(v_); }
    double kappa() const { return std::get<BanachSpec>(v_).kappa; }
    const GaugeFunction& gauge() const { return std::get<BoydWongSpec>(v_).gauge; }

    /// The comparison bound applied to a sampled distance s.
    double bound(double s) const {
        if (is_banach()) return kappa() * s;
        return std::get<BoydWongSpec>(v_).gauge(s);
    }

private:
    explicit ContractionSpec(std::variant<BanachSpec, BoydWongSpec> v)
        : v_(std::move(v)) {}
    std::variant<BanachSpec, BoydWongSpec> v_;
};

}  // namespace gpmfix
