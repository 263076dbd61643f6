#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>

#include "seqlab/axioms.hpp"

namespace seqlab {

// A modulus function f: [0, inf) -> [0, inf). Whether the axioms hold is a
// property checked by check_modulus_axioms, not enforced at construction.
class Modulus {
public:
    using Fn = std::function<double(double)>;

    Modulus(std::string name, Fn eval, bool unbounded);

    double operator()(double x) const { return (*eval_)(x); }
    const std::string& name() const noexcept { return name_; }
    bool unbounded() const noexcept { return unbounded_; }

private:
    std::string name_;
    std::shared_ptr<const Fn> eval_;
    bool unbounded_;
};

// id, log1p, pow:p (0 < p <= 1), bounded (x / (1 + x)).
Modulus make_modulus(const std::string& spec);

// Sampled check of f(0) = 0, subadditivity over all grid pairs, monotonicity
// over the sorted grid, and right-continuity at 0 (f(10^-k) <= 1e-6 for some
// k <= 12). Unbounded moduli additionally get a growth check on f(10^k).
AxiomReport check_modulus_axioms(const Modulus& f, std::span<const double> grid);

}  // namespace seqlab
