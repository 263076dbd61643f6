#include "seqlab/membership.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "accumulate.hpp"

namespace seqlab {

namespace {

constexpr const char* kReadingNote =
    "fstat-reading: the set-based definition nests a block limit inside a set over indices; "
    "block mode counts exceedances per block, global mode takes the f-density of {i : s_i > eps}";

Index tail_count(Index n) { return (n + 2) / 3; }

std::span<const double> tail_of(const std::vector<double>& v) {
    return std::span<const double>(v).subspan(v.size() - tail_count(v.size()));
}

bool settles_without_decay(std::span<const double> tail, double tol) {
    for (std::size_t k = 1; k < tail.size(); ++k)
        if (tail[k] < tail[k - 1] - tol) return false;
    return true;
}

// member: tail <= tol; non-member: tail >= 2 tol and not decaying; else inconclusive.
Verdict read_trail(const std::vector<double>& trail, double tol) {
    auto tail = tail_of(trail);
    auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
    if (*hi <= tol) return Verdict::member;
    if (*lo >= 2.0 * tol && settles_without_decay(tail, tol)) return Verdict::non_member;
    return Verdict::inconclusive;
}

SequencePrefix scores_upto(const SequencePrefix& x, const SpaceParams& p, Index upto) {
    p.validate();
    auto a = transform_prefix(p.matrix, x, upto);
    std::vector<double> s(upto);
    for (Index i = 1; i <= upto; ++i)
        s[i - 1] = p.family.eval(i, std::abs(a.at(i) - p.limit) / p.rho.at(i));
    return SequencePrefix(std::move(s), "scores(" + x.label() + ")");
}

SequencePrefix block_scores(const SequencePrefix& x, const SpaceParams& p) {
    if (p.scheme.last() > x.size()) throw TruncationError(p.scheme.blocks(), p.scheme.last(), x.size());
    return scores_upto(x, p, p.scheme.last());
}

std::vector<double> residuals_from(const SequencePrefix& s, const SpaceParams& p) {
    std::vector<double> t;
    for (Index r = 1; r <= p.scheme.blocks(); ++r) {
        detail::CompensatedSum sum;
        for (Index i = p.scheme.first_in(r); i <= p.scheme.last_in(r); ++i) sum.add(s.at(i));
        t.push_back(sum.value() / std::pow(static_cast<double>(p.scheme.length(r)), p.alpha));
    }
    return t;
}

std::vector<double> ratios_from(const SequencePrefix& s, const SpaceParams& p) {
    std::vector<double> c;
    for (Index r = 1; r <= p.scheme.blocks(); ++r) {
        Index hits = 0;
        for (Index i = p.scheme.first_in(r); i <= p.scheme.last_in(r); ++i) hits += s.at(i) >= p.eps ? 1 : 0;
        c.push_back(static_cast<double>(hits) / std::pow(static_cast<double>(p.scheme.length(r)), p.alpha));
    }
    return c;
}

void require_blocks(const SpaceParams& p) {
    if (p.scheme.blocks() < 6)
        throw DomainError("membership needs at least 6 blocks, got " + std::to_string(p.scheme.blocks()));
}

bool f_null(const IndexSet& set, const Modulus& f, Index n, double tol, DensityEstimate& est) {
    est = f_density(set, f, n, tol);
    if (empty_tail(set, n)) return true;
    return est.verdict == DensityVerdict::converged && *est.value <= tol;
}

}  // namespace

void SpaceParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    if (!std::isfinite(limit)) throw DomainError("candidate limit must be finite");
}

SpaceParams SpaceParams::with_limit(double l) const {
    SpaceParams q = *this;
    q.limit = l;
    return q;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::member: return "member";
        case Verdict::non_member: return "non-member";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(Mode m) {
    switch (m) {
        case Mode::w: return "w";
        case Mode::fstat_block: return "fstat-block";
        case Mode::fstat_global: return "fstat-global";
    }
    return "w";
}

SequencePrefix pointwise_scores(const SequencePrefix& x, const SpaceParams& p) {
    return scores_upto(x, p, x.size());
}

std::vector<double> block_residuals(const SequencePrefix& x, const SpaceParams& p) {
    return residuals_from(block_scores(x, p), p);
}

std::vector<double> exceedance_ratios(const SequencePrefix& x, const SpaceParams& p) {
    return ratios_from(block_scores(x, p), p);
}

MembershipReport w_membership(const SequencePrefix& x, const SpaceParams& p, double tol) {
    require_blocks(p);
    auto s = block_scores(x, p);
    MembershipReport rep;
    rep.mode = Mode::w;
    rep.block_residuals = residuals_from(s, p);
    rep.exceedance_ratios = ratios_from(s, p);
    rep.trail = rep.block_residuals;
    rep.verdict = read_trail(rep.trail, tol);
    return rep;
}

MembershipReport fstat_membership_block(const SequencePrefix& x, const SpaceParams& p, double tol) {
    require_blocks(p);
    auto s = block_scores(x, p);
    MembershipReport rep;
    rep.mode = Mode::fstat_block;
    rep.block_residuals = residuals_from(s, p);
    rep.exceedance_ratios = ratios_from(s, p);
    rep.trail = rep.exceedance_ratios;
    rep.verdict = read_trail(rep.trail, tol);
    rep.warnings.emplace_back(kReadingNote);
    return rep;
}

MembershipReport fstat_membership_global(const SequencePrefix& x, const SpaceParams& p,
                                         const Modulus& f, double tol) {
    if (!f.unbounded()) throw DomainError("global f-statistical mode needs an unbounded modulus");
    auto s = pointwise_scores(x, p);
    MembershipReport rep;
    rep.mode = Mode::fstat_global;
    if (p.scheme.last() <= x.size()) {
        auto head = s.head(p.scheme.last());
        rep.block_residuals = residuals_from(head, p);
        rep.exceedance_ratios = ratios_from(head, p);
    }
    auto e = exceedance_set(s, p.eps);
    DensityEstimate est;
    bool null_set = f_null(e, f, x.size(), tol, est);
    rep.trail = est.ratios;
    if (null_set)
        rep.verdict = Verdict::member;
    else if (est.verdict == DensityVerdict::converged && *est.value >= 2.0 * tol)
        rep.verdict = Verdict::non_member;
    else
        rep.verdict = Verdict::inconclusive;
    rep.density = std::move(est);
    rep.warnings.emplace_back(kReadingNote);
    return rep;
}

LimitEstimate fstat_limit_estimate(const SequencePrefix& x, const SpaceParams& p, const Modulus& f,
                                   double eps, double tol) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    auto a = transform_prefix(p.matrix, x, x.size());
    std::map<long long, std::vector<double>> bins;
    for (double v : a.values()) bins[static_cast<long long>(std::floor(v / eps))].push_back(v);

    std::vector<std::pair<long long, std::vector<double>*>> order;
    for (auto& [key, values] : bins) order.emplace_back(key, &values);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& l, const auto& r) { return l.second->size() > r.second->size(); });

    LimitEstimate out;
    SpaceParams q = p;
    q.eps = eps;
    const std::size_t tries = std::min<std::size_t>(order.size(), 8);
    for (std::size_t k = 0; k < tries; ++k) {
        auto& values = *order[k].second;
        auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
        std::nth_element(values.begin(), mid, values.end());
        double candidate = *mid;
        auto rep = fstat_membership_global(x, q.with_limit(candidate), f, tol);
        out.candidates.push_back(candidate);
        out.verdicts.push_back(rep.verdict);
        if (rep.verdict == Verdict::member) {
            out.limit = candidate;
            break;
        }
    }
    return out;
}

CauchyCheck fstat_cauchy_check(const SequencePrefix& x, const SpaceParams& p, const Modulus& f,
                               double eps, double tol) {
    if (!f.unbounded()) throw DomainError("Cauchy check needs an unbounded modulus");
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    const Index n = x.size();
    auto a = transform_prefix(p.matrix, x, n);
    auto anchors = density_checkpoints(n);
    std::reverse(anchors.begin(), anchors.end());

    CauchyCheck out;
    for (Index anchor : anchors) {
        const double centre = a.at(anchor);
        std::vector<Index> far;
        for (Index i = 1; i <= n; ++i)
            if (std::abs(a.at(i) - centre) > eps) far.push_back(i);
        auto set = IndexSet::from_sorted("far(" + std::to_string(anchor) + ")", std::move(far), n);
        DensityEstimate est;
        bool ok = f_null(set, f, n, tol, est);
        out.anchors_tried.push_back(anchor);
        out.anchor_densities.push_back(est.value.value_or(est.final_ratio()));
        if (ok) {
            out.cauchy = true;
            out.anchor = anchor;
            break;
        }
    }
    return out;
}

InclusionProbe boundedness_inclusion_probe(const SequencePrefix& x, const SpaceParams& p,
                                           const Modulus& f, double tol) {
    require_blocks(p);
    if (p.scheme.last() > x.size()) throw TruncationError(p.scheme.blocks(), p.scheme.last(), x.size());
    InclusionProbe out;
    const Index blocks = p.scheme.blocks();
    const Index tail_from = blocks - tail_count(blocks) + 1;

    for (Index r = tail_from; r <= blocks; ++r) {
        double h = static_cast<double>(p.scheme.length(r));
        out.ratio_deviation = std::max(out.ratio_deviation, std::abs(h / std::pow(h, p.alpha) - 1.0));
    }
    double head_sup = 0.0, tail_sup = 0.0;
    for (Index i = 1; i <= p.scheme.last(); ++i) {
        double v = std::abs(x.at(i));
        if (i <= p.scheme.cut(tail_from - 1))
            head_sup = std::max(head_sup, v);
        else
            tail_sup = std::max(tail_sup, v);
    }
    out.bounded = tail_sup <= (1.0 + tol) * head_sup;

    if (!out.bounded) {
        out.hypothesis_note = "sequence does not look bounded: tail sup " + std::to_string(tail_sup) +
                              " exceeds head sup " + std::to_string(head_sup);
        return out;
    }
    if (out.ratio_deviation > tol) {
        out.hypothesis_note = "h_r / h_r^alpha is " + std::to_string(out.ratio_deviation) +
                              " away from 1 on the last third of blocks";
        return out;
    }
    out.hypothesis_met = true;
    out.fstat_block = fstat_membership_block(x, p, tol);
    out.w = w_membership(x, p, tol);
    if (f.unbounded()) out.fstat_global = fstat_membership_global(x, p, f, tol);
    out.consistent = !(out.fstat_block->verdict == Verdict::member && out.w->verdict == Verdict::non_member);
    return out;
}

}  // namespace seqlab
