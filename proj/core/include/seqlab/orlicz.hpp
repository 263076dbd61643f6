#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqlab/axioms.hpp"
#include "seqlab/lacunary.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

// An Orlicz function M: [0, inf) -> [0, inf).
class OrliczFn {
public:
    using Fn = std::function<double(double)>;

    OrliczFn(std::string name, Fn eval);

    double operator()(double t) const { return (*eval_)(t); }
    const std::string& name() const noexcept { return name_; }

    static OrliczFn linear();
    static OrliczFn power(double p);
    static OrliczFn explog();

private:
    std::string name_;
    std::shared_ptr<const Fn> eval_;
};

// Index-dependent family i -> M_i.
class OrliczFamily {
public:
    enum class Kind { uniform, weighted, custom };
    using WeightFn = std::function<double(Index)>;
    using MemberFn = std::function<OrliczFn(Index)>;

    static OrliczFamily uniform(OrliczFn base);
    // M_i(t) = w(i) * base(t), w(i) > 0.
    static OrliczFamily weighted(OrliczFn base, WeightFn weight, std::string weight_name);
    static OrliczFamily weighted(OrliczFn base, std::vector<double> weights);
    static OrliczFamily custom(MemberFn member, std::string name);

    Kind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    // M_i(t).
    double eval(Index i, double t) const;
    OrliczFn at(Index i) const;

private:
    OrliczFamily(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    Kind kind_;
    std::string name_;
    std::optional<OrliczFn> base_;
    std::shared_ptr<const WeightFn> weight_;
    std::shared_ptr<const MemberFn> member_;
};

// Per-index scale rho^(i) > 0.
class RhoSchedule {
public:
    static RhoSchedule constant(double c);
    static RhoSchedule table(std::vector<double> values);

    double at(Index i) const;
    const std::string& name() const noexcept { return name_; }

private:
    RhoSchedule() = default;

    std::string name_;
    double constant_ = 1.0;
    std::shared_ptr<const std::vector<double>> table_;
};

// poly:p (p >= 1), explog, linear. Function specs only.
OrliczFn make_orlicz_fn(const std::string& spec);
// Any function spec (uniform family) or weighted:base=SPEC,weights=file:PATH.
OrliczFamily make_orlicz_family(const std::string& spec);
// const:c, file:PATH.
RhoSchedule make_rho(const std::string& spec);

struct ModularValue {
    double value = 0.0;  // +inf on overflow
    std::optional<Index> overflow_at;
};

// I(x) = sum_k M_k(|x_k|).
ModularValue modular(const OrliczFamily& family, std::span<const double> x);
ModularValue modular(const OrliczFamily& family, const SequencePrefix& x);
// I(scale * x) without materializing the scaled vector.
double scaled_modular(const OrliczFamily& family, std::span<const double> x, double scale);

struct LuxemburgResult {
    double value = 0.0;  // upper end of the final bracket
    double lower = 0.0;  // I(x / lower) >= 1
    int iterations = 0;
};

// inf{k > 0 : I(x / k) <= 1} by bracketing and bisection to width tol.
// Throws UnboundedNormError if no bracket closes within 2^50 doublings.
LuxemburgResult luxemburg_norm(const OrliczFamily& family, const SequencePrefix& x, double tol);

enum class Attainment { interior, edge };
std::string to_string(Attainment a);

struct OrliczNormResult {
    double value = 0.0;
    double argmin = 0.0;  // minimizing k; +inf when approached at the edge
    Attainment attained = Attainment::interior;
    int iterations = 0;
};

// inf over k > 0 of (1 + I(k x)) / k, golden-section on a doubling bracket.
OrliczNormResult orlicz_norm(const OrliczFamily& family, const SequencePrefix& x, double tol);

struct ComplementaryResult {
    double value = 0.0;
    double argmax = 0.0;
    bool divergent = false;
};

// N_i(v) = sup{|v| u - M_i(u) : 0 <= u <= u_max} by grid search with local
// golden-section refinement.
ComplementaryResult complementary(const OrliczFamily& family, Index i, double v, double u_max,
                                  Index grid = 4096);

struct Delta2Result {
    bool passed = true;  // "no counterexample found" on the sample
    std::optional<std::pair<Index, double>> witness;  // (k, u)
    Index checked = 0;
    double c_sum = 0.0;
};

// M_k(2u) <= K M_k(u) + c_k on every sampled (k, u) with M_k(u) <= a.
Delta2Result delta2_check(const OrliczFamily& family, double a, double K,
                          const std::function<double(Index)>& c, std::span<const Index> ks,
                          std::span<const double> us);

// sup_r (1/h_r) sum_{k in J_r} |x_k|. Throws TruncationError when k_R > N.
double ntheta_norm(const SequencePrefix& x, const LacunaryScheme& scheme);

// M(0) = 0, positivity, monotonicity, midpoint convexity (pairs drawn from
// {0} and the grid), right-continuity at 0, growth of M(10^k).
AxiomReport check_orlicz_axioms(const OrliczFn& m, std::span<const double> grid);

}  // namespace seqlab
