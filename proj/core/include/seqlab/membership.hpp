#pragma once

#include <optional>
#include <string>
#include <vector>

#include "seqlab/density.hpp"
#include "seqlab/lacunary.hpp"
#include "seqlab/matrix.hpp"
#include "seqlab/modulus.hpp"
#include "seqlab/orlicz.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

struct SpaceParams {
    SummabilityMatrix matrix = SummabilityMatrix::identity();
    OrliczFamily family = OrliczFamily::uniform(OrliczFn::linear());
    LacunaryScheme scheme = LacunaryScheme({0, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024});
    double alpha = 1.0;
    RhoSchedule rho = RhoSchedule::constant(1.0);
    double limit = 0.0;  // candidate L
    double eps = 0.1;

    // Throws DomainError unless 0 < alpha <= 1 and eps > 0.
    void validate() const;
    SpaceParams with_limit(double l) const;
};

enum class Verdict { member, non_member, inconclusive };
enum class Mode { w, fstat_block, fstat_global };
std::string to_string(Verdict v);
std::string to_string(Mode m);

inline constexpr double kDefaultTol = 1e-2;

struct MembershipReport {
    Mode mode = Mode::fstat_block;
    std::vector<double> block_residuals;    // t_r
    std::vector<double> exceedance_ratios;  // c_r
    std::optional<DensityEstimate> density; // global mode only
    Verdict verdict = Verdict::inconclusive;
    std::vector<double> trail;  // the series the verdict was read from
    std::vector<std::string> warnings;
};

// s_i = M_i(|A_i(x) - L| / rho^(i)) for i = 1..N.
SequencePrefix pointwise_scores(const SequencePrefix& x, const SpaceParams& p);

// t_r = h_r^-alpha * sum_{i in J_r} s_i.
std::vector<double> block_residuals(const SequencePrefix& x, const SpaceParams& p);
// c_r = h_r^-alpha * #{i in J_r : s_i >= eps}.
std::vector<double> exceedance_ratios(const SequencePrefix& x, const SpaceParams& p);

// Reads the last third of the residual trail. Needs >= 6 blocks.
MembershipReport w_membership(const SequencePrefix& x, const SpaceParams& p, double tol);
// Per-block exceedance counting, the reading exercised by the construction proofs.
MembershipReport fstat_membership_block(const SequencePrefix& x, const SpaceParams& p, double tol);
// f-density of the global exceedance set {i : s_i > eps}, the reading of the
// set-based definition.
MembershipReport fstat_membership_global(const SequencePrefix& x, const SpaceParams& p,
                                         const Modulus& f, double tol);

struct LimitEstimate {
    std::optional<double> limit;
    std::vector<double> candidates;  // in the order tried
    std::vector<Verdict> verdicts;
};

// Tries histogram modes of A_i(x) (bin width eps) as L, most populated first.
LimitEstimate fstat_limit_estimate(const SequencePrefix& x, const SpaceParams& p,
                                   const Modulus& f, double eps, double tol);

struct CauchyCheck {
    bool cauchy = false;
    std::optional<Index> anchor;
    std::vector<Index> anchors_tried;
    std::vector<double> anchor_densities;  // f-density value or final ratio
};

// Looks for an anchor N* among the density checkpoints (largest first) with
// {i : |A_i(x) - A_N*(x)| > eps} f-null at truncation.
CauchyCheck fstat_cauchy_check(const SequencePrefix& x, const SpaceParams& p, const Modulus& f,
                               double eps, double tol);

struct InclusionProbe {
    bool hypothesis_met = false;
    std::string hypothesis_note;
    bool bounded = false;
    double ratio_deviation = 0.0;  // max |h_r / h_r^alpha - 1| over the last third
    std::optional<MembershipReport> fstat_block;
    std::optional<MembershipReport> w;
    std::optional<MembershipReport> fstat_global;
    // False only if fstat_block says member and w says non-member.
    bool consistent = true;
};

// Bounded x with h_r / h_r^alpha -> 1: block f-membership should imply w-membership.
InclusionProbe boundedness_inclusion_probe(const SequencePrefix& x, const SpaceParams& p,
                                           const Modulus& f, double tol);

}  // namespace seqlab
