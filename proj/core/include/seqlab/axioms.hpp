#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seqlab {

struct AxiomCheck {
    AxiomCheck() = default;
    explicit AxiomCheck(std::string name) : axiom(std::move(name)) {}

    std::string axiom;
    bool passed = true;
    // Inputs witnessing the failure. Single-argument axioms leave `second` at 0.
    std::optional<std::pair<double, double>> witness;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_passed() const;
    // nullptr when no check with that name ran.
    const AxiomCheck* find(const std::string& axiom) const;
};

// Logarithmically spaced points over [lo, hi], `per_decade` per factor of 10.
std::vector<double> log_grid(double lo = 1e-6, double hi = 1e6, int per_decade = 4);

}  // namespace seqlab
