#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqlab/membership.hpp"

namespace seqlab {

struct WitnessSet {
    IndexSet set;
    std::vector<Index> thresholds;                // r_1 < r_2 < ... < r_J
    std::vector<Index> checkpoints;               // density checkpoints
    std::vector<std::vector<Index>> level_counts; // |B_j(n)| at each checkpoint
    DensityEstimate density;                      // f-density of the witness set
    double off_set_tail_sup = 0.0;                // sup of s_i over i >= r_J, i not in X
};

struct WitnessExtraction {
    std::optional<WitnessSet> witness;
    std::optional<Index> stuck_level;
    std::string diagnostic;
};

// Builds B_j = {i : s_i > 1/j}, thresholds r_j with f(|B_j(i)|)/f(i) <= 1/j
// for every i >= r_j up to N, and X = union of [r_j, r_{j+1}) ∩ B_j.
WitnessExtraction extract_witness_set(const SequencePrefix& x, const SpaceParams& p,
                                      const Modulus& f, Index depth);

struct OffWitnessResult {
    bool pass = false;
    double tail_sup = 0.0;  // max s_i over i not in X in the last third of indices
    Index i0 = 0;           // smallest i0 with {s_i > eps} ⊆ X ∪ {1..i0}
};

OffWitnessResult converge_off_witness(const SequencePrefix& x, const SpaceParams& p,
                                      const IndexSet& witness, double tol);

struct CauchyLimit {
    bool ok = false;
    double estimate = 0.0;  // midpoint of the nested interval
    double lower = 0.0;
    double upper = 0.0;
    std::vector<Index> anchors;  // N_1..N_K
    std::string diagnostic;
    double width() const { return upper - lower; }
};

// Anchors N_k at levels 1/k and the intersection of [A_{N_k} - 1/k, A_{N_k} + 1/k].
CauchyLimit cauchy_limit_construction(const SequencePrefix& x, const SpaceParams& p,
                                      const Modulus& f, Index depth, double tol);

struct Instance {
    SequencePrefix x;
    SpaceParams params;
    std::vector<double> spike_heights;  // nu_r, spike generator only
};

// Half-filled blocks over the decaying family M_i(t) = t / i. Inclusion of w
// in the block statistical space fails on this instance.
Instance gen_thm36_instance(double nu, double rho, Index blocks);

// One spike nu_r at each cut k_r with M(nu_r / rho) >= h_r^alpha. Throws
// GenerationError when `base` stays below the target (bounded base).
Instance gen_thm37_instance(const OrliczFn& base, const LacunaryScheme& scheme, double rho,
                            double alpha);

struct ModulusProbe {
    std::vector<std::string> moduli;
    std::vector<std::optional<double>> limits;
    bool all_agree = false;
    std::optional<double> common_limit;
    bool norm_convergent = false;
    double tail_deviation = 0.0;  // sup |A_i(x) - L| over the last third of indices
};

ModulusProbe multi_modulus_probe(const SequencePrefix& x, const SpaceParams& p,
                                 const std::vector<Modulus>& family, double tol);

}  // namespace seqlab

namespace seqlab {

// Attached to reports on the spike construction: its block residuals stay >= 1,
// so the instance is not in w, although the argument it comes from closes by
// asserting that it is.
inline constexpr const char* kSpikeDiscrepancyWarning =
    "thm37-final-line: the spike construction has block residuals >= 1 for every block, so the "
    "instance is NOT in w_theta^alpha(A,M); the closing claim of w-membership in the source "
    "argument contradicts its own computation. Reporting the computed non-membership.";

}  // namespace seqlab
