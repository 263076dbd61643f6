#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqlab/index_set.hpp"
#include "seqlab/modulus.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

enum class DensityVerdict { converged, oscillating, undetermined };
std::string to_string(DensityVerdict v);

struct DensityEstimate {
    std::vector<Index> checkpoints;  // increasing
    std::vector<double> ratios;      // one per checkpoint, clamped to [0, 1]
    std::optional<double> value;     // set only when verdict == converged
    DensityVerdict verdict = DensityVerdict::undetermined;
    double tol = 0.0;
    double tail_spread = 0.0;  // max pairwise spread over the tail window
    double final_ratio() const { return ratios.back(); }
};

// ceil(N / 2^j) for j = m..0, smallest first, keeping checkpoints >= 10.
// Throws DomainError if fewer than three fit.
std::vector<Index> density_checkpoints(Index n);

// Prefix ratios count(n)/n. The value is the final ratio.
DensityEstimate natural_density(const IndexSet& set, Index n, double tol);

// Prefix ratios f(count(n)) / f(n). The value is extrapolated to the limit
// along 1/f(n) from the two largest checkpoints and clamped to [0, 1].
// Throws DomainError for bounded moduli.
DensityEstimate f_density(const IndexSet& set, const Modulus& f, Index n, double tol);

struct ComplementCheck {
    bool passed = true;
    std::optional<Index> first_violation;
    Index checked = 0;
};

// f(n) <= f(|A(n)|) + f(|(N \ A)(n)|) + 1e-12 for every n <= N.
ComplementCheck complement_inequality_check(const IndexSet& set, const Modulus& f, Index n);

// {i <= N : s_i > eps} as an explicit set bounded by N.
IndexSet exceedance_set(const SequencePrefix& scores, double eps);

}  // namespace seqlab

namespace seqlab {

// First index of the tail window read by the convergence test: the smallest
// checkpoint among the last third.
Index tail_window_start(Index n);

// True when the set has no member in (tail_window_start(n), n]. Such a set
// looks finite at this truncation, and finite sets have f-density 0 for every
// unbounded f.
bool empty_tail(const IndexSet& set, Index n);

}  // namespace seqlab
