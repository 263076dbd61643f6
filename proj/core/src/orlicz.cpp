#include "seqlab/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "accumulate.hpp"
#include "seqlab/parse.hpp"

namespace seqlab {

OrliczFn::OrliczFn(std::string name, Fn eval)
    : name_(std::move(name)), eval_(std::make_shared<const Fn>(std::move(eval))) {}

OrliczFn OrliczFn::linear() { return OrliczFn("linear", [](double t) { return t; }); }

OrliczFn OrliczFn::power(double p) {
    if (!(p >= 1.0)) throw SpecError("poly exponent must be >= 1 for convexity");
    std::string name = "poly:" + parse::num(p);
    if (p == 1.0) return OrliczFn(name, [](double t) { return t; });
    if (p == 2.0) return OrliczFn(name, [](double t) { return t * t; });
    return OrliczFn(name, [p](double t) { return std::pow(t, p); });
}

OrliczFn OrliczFn::explog() { return OrliczFn("explog", [](double t) { return std::expm1(t); }); }

OrliczFamily OrliczFamily::uniform(OrliczFn base) {
    OrliczFamily f(Kind::uniform, base.name());
    f.base_ = std::move(base);
    return f;
}

OrliczFamily OrliczFamily::weighted(OrliczFn base, WeightFn weight, std::string weight_name) {
    OrliczFamily f(Kind::weighted, "weighted(" + base.name() + "," + weight_name + ")");
    f.base_ = std::move(base);
    f.weight_ = std::make_shared<const WeightFn>(std::move(weight));
    return f;
}

OrliczFamily OrliczFamily::weighted(OrliczFn base, std::vector<double> weights) {
    for (double w : weights)
        if (!(w > 0.0) || !std::isfinite(w)) throw SpecError("family weights must be positive and finite");
    auto table = std::make_shared<const std::vector<double>>(std::move(weights));
    return weighted(
        std::move(base),
        [table](Index i) {
            if (i < 1 || i > table->size())
                throw DomainError("no family weight for index " + std::to_string(i));
            return (*table)[i - 1];
        },
        "table[" + std::to_string(table->size()) + "]");
}

OrliczFamily OrliczFamily::custom(MemberFn member, std::string name) {
    OrliczFamily f(Kind::custom, std::move(name));
    f.member_ = std::make_shared<const MemberFn>(std::move(member));
    return f;
}

double OrliczFamily::eval(Index i, double t) const {
    switch (kind_) {
        case Kind::uniform: return (*base_)(t);
        case Kind::weighted: return (*weight_)(i) * (*base_)(t);
        case Kind::custom: return (*member_)(i)(t);
    }
    return 0.0;
}

OrliczFn OrliczFamily::at(Index i) const {
    if (kind_ == Kind::uniform) return *base_;
    auto self = *this;
    return OrliczFn(name_ + "[" + std::to_string(i) + "]", [self, i](double t) { return self.eval(i, t); });
}

RhoSchedule RhoSchedule::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw SpecError("rho must be positive and finite");
    RhoSchedule r;
    r.constant_ = c;
    r.name_ = "const:" + parse::num(c);
    return r;
}

RhoSchedule RhoSchedule::table(std::vector<double> values) {
    for (double v : values)
        if (!(v > 0.0) || !std::isfinite(v)) throw SpecError("rho values must be positive and finite");
    RhoSchedule r;
    r.name_ = "table[" + std::to_string(values.size()) + "]";
    r.table_ = std::make_shared<const std::vector<double>>(std::move(values));
    return r;
}

double RhoSchedule::at(Index i) const {
    if (!table_) return constant_;
    if (i < 1 || i > table_->size()) throw DomainError("no rho value for index " + std::to_string(i));
    return (*table_)[i - 1];
}

OrliczFn make_orlicz_fn(const std::string& spec) {
    auto [name, args] = parse::head(spec);
    if (name == "linear") return OrliczFn::linear();
    if (name == "explog") return OrliczFn::explog();
    if (name == "poly") {
        double p = parse::to_double(args, "poly exponent");
        if (p < 1.0) throw SpecError("poly exponent must be >= 1, got " + parse::trim(args));
        return OrliczFn::power(p);
    }
    throw SpecError("unknown orlicz spec: '" + spec + "'");
}

OrliczFamily make_orlicz_family(const std::string& spec) {
    auto [name, args] = parse::head(spec);
    if (name != "weighted") return OrliczFamily::uniform(make_orlicz_fn(spec));
    std::string base, weights;
    for (auto& [key, value] : parse::key_values(args)) {
        if (key == "base") base = value;
        else if (key == "weights") weights = value;
        else throw SpecError("unknown weighted key '" + key + "'");
    }
    if (base.empty() || weights.rfind("file:", 0) != 0)
        throw SpecError("weighted expects 'weighted:base=SPEC,weights=file:PATH'");
    std::vector<double> w;
    for (auto& line : parse::read_lines(weights.substr(5))) w.push_back(parse::to_double(line, "weight"));
    return OrliczFamily::weighted(make_orlicz_fn(base), std::move(w));
}

RhoSchedule make_rho(const std::string& spec) {
    auto [name, args] = parse::head(spec);
    if (name == "const") return RhoSchedule::constant(parse::to_double(args, "rho"));
    if (name == "file") {
        std::vector<double> v;
        for (auto& line : parse::read_lines(args)) v.push_back(parse::to_double(line, "rho"));
        return RhoSchedule::table(std::move(v));
    }
    throw SpecError("unknown rho spec: '" + spec + "'");
}

ModularValue modular(const OrliczFamily& family, std::span<const double> x) {
    ModularValue out;
    detail::CompensatedSum acc;
    for (Index k = 1; k <= x.size(); ++k) {
        double v = family.eval(k, std::abs(x[k - 1]));
        if (!std::isfinite(v)) {
            out.value = std::numeric_limits<double>::infinity();
            out.overflow_at = k;
            return out;
        }
        acc.add(v);
    }
    out.value = acc.value();
    if (!std::isfinite(out.value)) out.value = std::numeric_limits<double>::infinity();
    return out;
}

ModularValue modular(const OrliczFamily& family, const SequencePrefix& x) {
    return modular(family, x.values());
}

double scaled_modular(const OrliczFamily& family, std::span<const double> x, double scale) {
    detail::CompensatedSum acc;
    for (Index k = 1; k <= x.size(); ++k) {
        double v = family.eval(k, std::abs(x[k - 1]) * scale);
        if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
        acc.add(v);
    }
    return acc.value();
}

namespace {

double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

// I(x / k) computed with a true division so the bracket ends are exact.
double divided_modular(const OrliczFamily& family, std::span<const double> x, double k) {
    detail::CompensatedSum acc;
    for (Index j = 1; j <= x.size(); ++j) {
        double v = family.eval(j, std::abs(x[j - 1]) / k);
        if (!std::isfinite(v)) return std::numeric_limits<double>::infinity();
        acc.add(v);
    }
    return acc.value();
}

}  // namespace

LuxemburgResult luxemburg_norm(const OrliczFamily& family, const SequencePrefix& x, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    auto v = x.values();
    LuxemburgResult res;
    const double top = max_abs(v);
    if (top == 0.0) return res;

    double hi = std::max(1.0, top);
    int doublings = 0;
    while (divided_modular(family, v, hi) > 1.0) {
        hi *= 2.0;
        if (++doublings > 50)
            throw UnboundedNormError("modular stays above 1 up to k = " + std::to_string(hi) +
                                     "; Luxemburg norm is unbounded at this truncation");
    }
    double lo = 0.0;
    if (doublings > 0) {
        lo = hi / 2.0;
    } else {
        for (int halvings = 0; halvings < 1100; ++halvings) {
            double cand = hi / 2.0;
            if (cand == 0.0) break;
            if (divided_modular(family, v, cand) > 1.0) {
                lo = cand;
                break;
            }
            hi = cand;
        }
    }
    while (hi - lo > tol && res.iterations < 400) {
        double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        ++res.iterations;
        if (divided_modular(family, v, mid) <= 1.0)
            hi = mid;
        else
            lo = mid;
    }
    res.value = hi;
    res.lower = lo;
    return res;
}

std::string to_string(Attainment a) { return a == Attainment::interior ? "interior" : "edge"; }

OrliczNormResult orlicz_norm(const OrliczFamily& family, const SequencePrefix& x, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    auto v = x.values();
    OrliczNormResult res;
    const double top = max_abs(v);
    if (top == 0.0) {
        res.argmin = std::numeric_limits<double>::infinity();
        res.attained = Attainment::edge;
        return res;
    }
    auto g = [&](double k) { return (1.0 + scaled_modular(family, v, k)) / k; };

    double k = 1.0 / top;
    double gk = g(k);
    // g -> inf as k -> 0, so moving left terminates.
    for (int it = 0; it < 2000; ++it) {
        double gl = g(k / 2.0);
        if (!(gl < gk)) break;
        k /= 2.0;
        gk = gl;
    }
    double a = k / 2.0, c = 0.0;
    for (int it = 0;; ++it) {
        // Once 1/k is below the resolution of g, further decrease is unobservable.
        if (it >= 2000 || 1.0 / k <= std::numeric_limits<double>::epsilon() * gk) {
            res.value = gk;
            res.argmin = std::numeric_limits<double>::infinity();
            res.attained = Attainment::edge;
            res.iterations = it;
            return res;
        }
        double gr = g(2.0 * k);
        if (!(gr < gk)) {
            c = 2.0 * k;
            break;
        }
        a = k;
        k *= 2.0;
        gk = gr;
    }

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const double rel = std::min(tol, 1e-9);
    double x1 = c - inv_phi * (c - a), x2 = a + inv_phi * (c - a);
    double g1 = g(x1), g2 = g(x2);
    while (c - a > rel * (a + c) / 2.0 && res.iterations < 300) {
        ++res.iterations;
        if (g1 <= g2) {
            c = x2;
            x2 = x1;
            g2 = g1;
            x1 = c - inv_phi * (c - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + inv_phi * (c - a);
            g2 = g(x2);
        }
    }
    double best = g1 <= g2 ? x1 : x2;
    double gbest = std::min(g1, g2);
    if (gk < gbest) {
        best = k;
        gbest = gk;
    }
    res.value = gbest;
    res.argmin = best;
    res.attained = Attainment::interior;
    return res;
}

ComplementaryResult complementary(const OrliczFamily& family, Index i, double v, double u_max, Index grid) {
    if (!(u_max > 0.0)) throw DomainError("u_max must be positive");
    if (grid < 1000) throw DomainError("complementary grid needs >= 1000 points");
    const double av = std::abs(v);
    auto phi = [&](double u) { return av * u - family.eval(i, u); };
    const double du = u_max / static_cast<double>(grid - 1);

    Index best = 0;
    double best_val = phi(0.0);
    for (Index j = 1; j < grid; ++j) {
        double val = phi(du * static_cast<double>(j));
        if (val > best_val) {
            best_val = val;
            best = j;
        }
    }
    ComplementaryResult res;
    if (best == grid - 1) {
        res.divergent = phi(u_max) > phi(u_max - du);
        res.value = best_val;
        res.argmax = u_max;
        return res;
    }
    // phi is concave for convex M, so the bracket around the grid maximizer is unimodal.
    double a = best == 0 ? 0.0 : du * static_cast<double>(best - 1);
    double c = du * static_cast<double>(best + 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = c - inv_phi * (c - a), x2 = a + inv_phi * (c - a);
    double p1 = phi(x1), p2 = phi(x2);
    for (int it = 0; it < 200 && c - a > 1e-14 * std::max(1.0, c); ++it) {
        if (p1 >= p2) {
            c = x2;
            x2 = x1;
            p2 = p1;
            x1 = c - inv_phi * (c - a);
            p1 = phi(x1);
        } else {
            a = x1;
            x1 = x2;
            p1 = p2;
            x2 = a + inv_phi * (c - a);
            p2 = phi(x2);
        }
    }
    res.value = best_val;
    res.argmax = du * static_cast<double>(best);
    if (std::max(p1, p2) > best_val) {
        res.value = std::max(p1, p2);
        res.argmax = p1 >= p2 ? x1 : x2;
    }
    return res;
}

Delta2Result delta2_check(const OrliczFamily& family, double a, double K,
                          const std::function<double(Index)>& c, std::span<const Index> ks,
                          std::span<const double> us) {
    if (!(a > 0.0) || !(K > 0.0)) throw DomainError("delta2 needs a > 0 and K > 0");
    Delta2Result res;
    for (Index k : ks) {
        double ck = c(k);
        if (!(ck >= 0.0)) throw DomainError("delta2 schedule c_k must be >= 0");
        res.c_sum += ck;
    }
    if (!std::isfinite(res.c_sum)) throw DomainError("delta2 schedule is not summable on the sample");
    for (Index k : ks) {
        double ck = c(k);
        for (double u : us) {
            double mu = family.eval(k, u);
            if (!(mu <= a)) continue;
            ++res.checked;
            double rhs = K * mu + ck;
            if (family.eval(k, 2.0 * u) > rhs + 1e-12 * std::max(1.0, rhs)) {
                res.passed = false;
                res.witness = std::pair{k, u};
                return res;
            }
        }
    }
    return res;
}

double ntheta_norm(const SequencePrefix& x, const LacunaryScheme& scheme) {
    if (scheme.last() > x.size()) throw TruncationError(scheme.blocks(), scheme.last(), x.size());
    double best = 0.0;
    for (Index r = 1; r <= scheme.blocks(); ++r) {
        detail::CompensatedSum acc;
        for (Index k = scheme.first_in(r); k <= scheme.last_in(r); ++k) acc.add(std::abs(x.at(k)));
        best = std::max(best, acc.value() / static_cast<double>(scheme.length(r)));
    }
    return best;
}

AxiomReport check_orlicz_axioms(const OrliczFn& m, std::span<const double> grid) {
    if (grid.empty()) throw DomainError("axiom grid must be nonempty");
    for (double g : grid)
        if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("axiom grid values must be positive and finite");
    auto slack = [](double v) { return 1e-12 * std::max(1.0, std::abs(v)); };

    AxiomReport report;
    AxiomCheck zero{"zero"};
    if (m(0.0) != 0.0) {
        zero.passed = false;
        zero.witness = std::pair{0.0, 0.0};
    }
    report.checks.push_back(zero);

    AxiomCheck pos{"positive"};
    for (double g : grid)
        if (!(m(g) > 0.0)) {
            pos.passed = false;
            pos.witness = std::pair{g, 0.0};
            break;
        }
    report.checks.push_back(pos);

    std::vector<double> pts{0.0};
    pts.insert(pts.end(), grid.begin(), grid.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    AxiomCheck mono{"monotone"};
    for (std::size_t a = 1; a < pts.size(); ++a) {
        double prev = m(pts[a - 1]);
        if (prev > m(pts[a]) + slack(prev)) {
            mono.passed = false;
            mono.witness = std::pair{pts[a - 1], pts[a]};
            break;
        }
    }
    report.checks.push_back(mono);

    AxiomCheck convex{"convex"};
    for (std::size_t a = 0; a < pts.size() && convex.passed; ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            double s = pts[a], t = pts[b];
            double rhs = (m(s) + m(t)) / 2.0;
            double mid = m((s + t) / 2.0);
            if (std::isinf(rhs)) continue;
            if (mid > rhs + slack(rhs)) {
                convex.passed = false;
                convex.witness = std::pair{s, t};
                break;
            }
        }
    }
    report.checks.push_back(convex);

    AxiomCheck cont{"right_continuous_at_zero"};
    cont.passed = false;
    for (int k = 1; k <= 12; ++k)
        if (m(std::pow(10.0, -k)) <= 1e-6 * (1.0 + 1e-9)) {
            cont.passed = true;
            break;
        }
    if (!cont.passed) cont.witness = std::pair{1e-12, 0.0};
    report.checks.push_back(cont);

    AxiomCheck grow{"unbounded_growth"};
    double prev = m(1.0);
    for (int k = 1; k <= 300; ++k) {
        double x = std::pow(10.0, k);
        double v = m(x);
        if (std::isinf(v)) break;
        if (!(v > prev)) {
            grow.passed = false;
            grow.witness = std::pair{x / 10.0, x};
            break;
        }
        prev = v;
    }
    report.checks.push_back(grow);
    return report;
}

}  // namespace seqlab
