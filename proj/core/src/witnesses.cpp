#include "seqlab/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "seqlab/parse.hpp"

namespace seqlab {

namespace {

constexpr Index kMaxInstanceLength = Index{1} << 24;

}  // namespace

WitnessExtraction extract_witness_set(const SequencePrefix& x, const SpaceParams& p, const Modulus& f,
                                      Index depth) {
    if (!f.unbounded()) throw DomainError("witness extraction needs an unbounded modulus");
    if (depth < 2) throw DomainError("witness depth must be >= 2");
    const Index n = x.size();
    const Index latest = tail_window_start(n);
    auto s = pointwise_scores(x, p);
    auto checkpoints = density_checkpoints(n);

    WitnessExtraction out;
    std::vector<Index> thresholds;
    std::vector<std::vector<char>> levels;
    std::vector<std::vector<Index>> level_counts;
    Index previous = 0;
    for (Index j = 1; j <= depth; ++j) {
        const double cut = 1.0 / static_cast<double>(j);
        std::vector<char> in(n + 1, 0);
        std::vector<Index> count(n + 1, 0);
        for (Index i = 1; i <= n; ++i) {
            in[i] = s.at(i) > cut ? 1 : 0;
            count[i] = count[i - 1] + in[i];
        }
        // suffix maximum of f(|B_j(i)|) / f(i)
        std::vector<double> worst(n + 2, 0.0);
        for (Index i = n; i >= 1; --i) {
            double fi = f(static_cast<double>(i));
            double ratio = fi > 0.0 ? f(static_cast<double>(count[i])) / fi : 0.0;
            worst[i] = std::max(worst[i + 1], ratio);
        }
        Index r = previous + 1;
        while (r <= latest && worst[r] > cut) ++r;
        if (r > latest) {
            out.stuck_level = j;
            out.diagnostic = "no threshold r_" + std::to_string(j) + " in (" + std::to_string(previous) + ", " +
                             std::to_string(latest) + "] keeps f(|B_" + std::to_string(j) +
                             "(i)|)/f(i) <= 1/" + std::to_string(j) +
                             " through N; the scores are not f-statistically null at this truncation";
            return out;
        }
        thresholds.push_back(r);
        previous = r;
        std::vector<Index> at_checkpoints;
        for (Index c : checkpoints) at_checkpoints.push_back(count[c]);
        level_counts.push_back(std::move(at_checkpoints));
        levels.push_back(std::move(in));
    }

    std::vector<Index> members;
    for (Index j = 0; j < depth; ++j) {
        Index end = j + 1 < depth ? thresholds[j + 1] : n + 1;
        for (Index i = thresholds[j]; i < end; ++i)
            if (levels[j][i]) members.push_back(i);
    }
    auto set = IndexSet::from_sorted("witness(" + x.label() + ")", std::move(members), n);

    double off_sup = 0.0;
    for (Index i = thresholds.back(); i <= n; ++i)
        if (!set.contains(i)) off_sup = std::max(off_sup, s.at(i));

    WitnessSet w{set, thresholds, checkpoints, level_counts, f_density(set, f, n, kDefaultTol), off_sup};
    out.witness = std::move(w);
    return out;
}

OffWitnessResult converge_off_witness(const SequencePrefix& x, const SpaceParams& p, const IndexSet& witness,
                                      double tol) {
    auto s = pointwise_scores(x, p);
    const Index n = x.size();
    const Index tail_from = n - (n + 2) / 3 + 1;
    OffWitnessResult out;
    for (Index i = 1; i <= n; ++i) {
        if (witness.contains(i)) continue;
        if (i >= tail_from) out.tail_sup = std::max(out.tail_sup, s.at(i));
        if (s.at(i) > p.eps) out.i0 = i;
    }
    out.pass = out.tail_sup <= tol;
    return out;
}

CauchyLimit cauchy_limit_construction(const SequencePrefix& x, const SpaceParams& p, const Modulus& f,
                                      Index depth, double tol) {
    if (depth < 1) throw DomainError("Cauchy depth must be >= 1");
    auto a = transform_prefix(p.matrix, x, x.size());
    CauchyLimit out;
    out.lower = -std::numeric_limits<double>::infinity();
    out.upper = std::numeric_limits<double>::infinity();
    for (Index k = 1; k <= depth; ++k) {
        const double radius = 1.0 / static_cast<double>(k);
        auto check = fstat_cauchy_check(x, p, f, radius, tol);
        if (!check.cauchy) {
            out.diagnostic = "no anchor realizes the Cauchy condition at level 1/" + std::to_string(k);
            return out;
        }
        const double centre = a.at(*check.anchor);
        out.anchors.push_back(*check.anchor);
        out.lower = std::max(out.lower, centre - radius);
        out.upper = std::min(out.upper, centre + radius);
        if (out.lower > out.upper) {
            out.diagnostic = "nested intervals empty at level 1/" + std::to_string(k) +
                             "; the Cauchy verdict does not hold at this truncation";
            return out;
        }
    }
    out.ok = true;
    out.estimate = out.lower + (out.upper - out.lower) / 2.0;
    return out;
}

Instance gen_thm36_instance(double nu, double rho, Index blocks) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("nu must be finite and >= 0");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
    if (blocks < 6) throw DomainError("the construction needs at least 6 blocks");
    const double scale = nu / rho;

    std::vector<Index> cuts{0};
    for (Index r = 1; r <= blocks; ++r) {
        double target = std::ceil(scale * std::ldexp(1.0, static_cast<int>(r)));
        if (!(target < static_cast<double>(kMaxInstanceLength)))
            throw GenerationError("cut n_" + std::to_string(r) + " exceeds the truncation budget of " +
                                  std::to_string(kMaxInstanceLength) + " terms");
        cuts.push_back(std::max(cuts.back() + 2, static_cast<Index>(target)));
        if (cuts.back() > kMaxInstanceLength) throw GenerationError("instance exceeds the truncation budget");
    }
    LacunaryScheme scheme(cuts);

    std::vector<double> v(scheme.last(), 0.0);
    for (Index r = 1; r <= blocks; ++r) {
        Index half = (scheme.cut(r) + scheme.cut(r - 1)) / 2;
        for (Index i = scheme.first_in(r); i <= half; ++i) v[i - 1] = nu;
    }

    SpaceParams params;
    params.family = OrliczFamily::weighted(
        OrliczFn::linear(), [](Index i) { return 1.0 / static_cast<double>(i); }, "1/i");
    params.scheme = scheme;
    params.alpha = 1.0;
    params.rho = RhoSchedule::constant(rho);
    params.limit = 0.0;
    // Below every nonzero score: the smallest is M_i(nu/rho) at the last filled index.
    params.eps = nu > 0.0 ? 0.5 * params.family.eval(scheme.last(), scale) : 0.1;

    return Instance{SequencePrefix(std::move(v), "thm36(nu=" + parse::num(nu) + ",rho=" +
                                                     parse::num(rho) + ")"),
                    std::move(params), {}};
}

namespace {

// Smallest nu (to ~1e-13 relative) with base(nu / rho) >= target.
double solve_spike(const OrliczFn& base, double rho, double target, Index r) {
    auto reaches = [&](double nu) { return base(nu / rho) >= target; };
    double hi = rho;
    if (reaches(hi)) {
        for (int k = 0; k < 1100 && hi / 2.0 > 0.0 && reaches(hi / 2.0); ++k) hi /= 2.0;
    } else {
        int k = 0;
        while (!reaches(hi)) {
            hi *= 2.0;
            if (++k > 1000 || !std::isfinite(hi))
                throw GenerationError("base Orlicz function stays below h_" + std::to_string(r) +
                                      "^alpha = " + std::to_string(target) +
                                      "; the spike construction needs an unbounded base");
        }
    }
    double lo = hi / 2.0;
    for (int k = 0; k < 200 && hi - lo > 1e-13 * hi; ++k) {
        double mid = lo + (hi - lo) / 2.0;
        if (reaches(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

Instance gen_thm37_instance(const OrliczFn& base, const LacunaryScheme& scheme, double rho, double alpha) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
    if (scheme.last() > kMaxInstanceLength) throw GenerationError("scheme exceeds the truncation budget");

    std::vector<double> v(scheme.last(), 0.0);
    std::vector<double> heights;
    for (Index r = 1; r <= scheme.blocks(); ++r) {
        double target = std::pow(static_cast<double>(scheme.length(r)), alpha);
        double nu = solve_spike(base, rho, target, r);
        heights.push_back(nu);
        v[scheme.cut(r) - 1] = nu;
    }

    SpaceParams params;
    params.family = OrliczFamily::uniform(base);
    params.scheme = scheme;
    params.alpha = alpha;
    params.rho = RhoSchedule::constant(rho);
    params.limit = 0.0;
    params.eps = 0.1;
    return Instance{SequencePrefix(std::move(v), "thm37(" + base.name() + ")"), std::move(params),
                    std::move(heights)};
}

ModulusProbe multi_modulus_probe(const SequencePrefix& x, const SpaceParams& p,
                                 const std::vector<Modulus>& family, double tol) {
    if (family.empty()) throw DomainError("probe needs at least one modulus");
    ModulusProbe out;
    for (const auto& f : family) {
        if (!f.unbounded()) throw DomainError("probe moduli must be unbounded; '" + f.name() + "' is bounded");
        out.moduli.push_back(f.name());
        out.limits.push_back(fstat_limit_estimate(x, p, f, p.eps, tol).limit);
    }
    std::optional<double> first;
    for (const auto& l : out.limits)
        if (l) {
            first = l;
            break;
        }
    out.all_agree = std::all_of(out.limits.begin(), out.limits.end(), [&](const std::optional<double>& l) {
        return l && std::abs(*l - *first) <= tol;
    });
    if (out.all_agree) out.common_limit = first;
    if (first) {
        auto a = transform_prefix(p.matrix, x, x.size());
        const Index n = x.size();
        for (Index i = n - (n + 2) / 3 + 1; i <= n; ++i)
            out.tail_deviation = std::max(out.tail_deviation, std::abs(a.at(i) - *first));
        out.norm_convergent = out.all_agree && out.tail_deviation <= tol;
    }
    return out;
}

}  // namespace seqlab
