#include "seqlab/density.hpp"

#include <algorithm>
#include <cmath>

namespace seqlab {

std::string to_string(DensityVerdict v) {
    switch (v) {
        case DensityVerdict::converged: return "converged";
        case DensityVerdict::oscillating: return "oscillating";
        case DensityVerdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

std::vector<Index> density_checkpoints(Index n) {
    if (n < 100) throw DomainError("density needs N >= 100, got " + std::to_string(n));
    std::vector<Index> cps;
    for (Index j = 0; j < 64; ++j) {
        Index div = Index{1} << j;
        Index c = (n + div - 1) / div;
        if (c < 10) break;
        cps.push_back(c);
    }
    if (cps.size() < 3) throw DomainError("N too small to place three checkpoints");
    std::reverse(cps.begin(), cps.end());
    return cps;
}

namespace {

Index tail_size(std::size_t count) { return (count + 2) / 3; }

double spread(std::span<const double> v) {
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

// Direction changes of successive differences, ignoring exact ties.
int sign_changes(std::span<const double> v) {
    int changes = 0, last = 0;
    for (std::size_t k = 1; k < v.size(); ++k) {
        double d = v[k] - v[k - 1];
        int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

void diagnose(DensityEstimate& est) {
    const auto count = est.ratios.size();
    const auto tail = tail_size(count);
    std::span<const double> all(est.ratios);
    auto tail_view = all.subspan(count - tail);
    est.tail_spread = spread(tail_view);
    if (est.tail_spread <= est.tol) {
        est.verdict = DensityVerdict::converged;
        return;
    }
    auto mid_begin = count >= 2 * tail ? count - 2 * tail : 0;
    auto mid_view = all.subspan(mid_begin, count - tail - mid_begin);
    double mid_spread = mid_view.empty() ? 0.0 : spread(mid_view);
    bool persistent = est.tail_spread >= 0.5 * mid_spread;
    est.verdict = (persistent && sign_changes(all.subspan(mid_begin)) >= 2)
                      ? DensityVerdict::oscillating
                      : DensityVerdict::undetermined;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

Index tail_window_start(Index n) {
    auto cps = density_checkpoints(n);
    return cps[cps.size() - tail_size(cps.size())];
}

bool empty_tail(const IndexSet& set, Index n) { return set.count(n) == set.count(tail_window_start(n)); }

DensityEstimate natural_density(const IndexSet& set, Index n, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    DensityEstimate est;
    est.tol = tol;
    est.checkpoints = density_checkpoints(n);
    for (Index c : est.checkpoints)
        est.ratios.push_back(clamp01(static_cast<double>(set.count(c)) / static_cast<double>(c)));
    diagnose(est);
    if (est.verdict == DensityVerdict::converged) est.value = est.final_ratio();
    return est;
}

DensityEstimate f_density(const IndexSet& set, const Modulus& f, Index n, double tol) {
    if (!f.unbounded())
        throw DomainError("f-density needs an unbounded modulus; '" + f.name() + "' is a bounded modulus");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    DensityEstimate est;
    est.tol = tol;
    est.checkpoints = density_checkpoints(n);
    std::vector<double> scale;
    for (Index c : est.checkpoints) {
        double fc = f(static_cast<double>(c));
        double r = fc > 0.0 ? f(static_cast<double>(set.count(c))) / fc : 0.0;
        est.ratios.push_back(clamp01(r));
        scale.push_back(fc > 0.0 ? 1.0 / fc : 0.0);
    }
    diagnose(est);
    if (est.verdict == DensityVerdict::converged) {
        // Linear extrapolation of the ratio in 1/f(n) to 1/f(n) = 0.
        const auto m = est.ratios.size();
        double r1 = est.ratios[m - 1], r2 = est.ratios[m - 2];
        double u1 = scale[m - 1], u2 = scale[m - 2];
        double value = u2 > u1 ? r1 + (r1 - r2) * u1 / (u2 - u1) : r1;
        est.value = clamp01(value);
    }
    return est;
}

ComplementCheck complement_inequality_check(const IndexSet& set, const Modulus& f, Index n) {
    ComplementCheck out;
    auto counts = set.prefix_counts(n);
    for (Index k = 1; k <= n; ++k) {
        double in = static_cast<double>(counts[k]);
        double lhs = f(static_cast<double>(k));
        double rhs = f(in) + f(static_cast<double>(k) - in);
        ++out.checked;
        if (lhs > rhs + 1e-12) {
            out.passed = false;
            out.first_violation = k;
            break;
        }
    }
    return out;
}

IndexSet exceedance_set(const SequencePrefix& scores, double eps) {
    if (!(eps > 0.0)) throw DomainError("exceedance threshold must be positive");
    std::vector<Index> hits;
    for (Index i = 1; i <= scores.size(); ++i)
        if (scores.at(i) > eps) hits.push_back(i);
    return IndexSet::from_sorted("exceedance(" + scores.label() + ")", std::move(hits), scores.size());
}

}  // namespace seqlab
