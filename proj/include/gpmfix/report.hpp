#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gpmfix {

/// One failed inequality instance: the sampled inputs and the two sides that
/// were supposed to satisfy lhs <= rhs (+ tol).
struct Violation {
    std::string axiom;
    std::vector<double> inputs;
    double lhs = 0.0;
    double rhs = 0.0;

    double gap() const { return lhs - rhs; }
};

/// Result of one property check. `pass` is true exactly when `violations`
/// is empty. Notes carry documented exceptions and the standing caveat that
/// sampled continuity checks are necessary conditions, not proofs.
struct CheckReport {
    std::string axiom;
    std::size_t samples = 0;
    double tol = 0.0;
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    std::optional<double> max_ratio;  // contraction checks: max lhs/rhs seen

    bool pass() const { return violations.empty(); }

    void record(std::string axiom_id, std::vector<double> inputs, double lhs,
                double rhs) {
        violations.push_back({std::move(axiom_id), std::move(inputs), lhs, rhs});
    }

    std::string to_json() const;
};

}  // namespace gpmfix
