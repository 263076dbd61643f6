#include "seqlab/modulus.hpp"

#include <algorithm>
#include <cmath>

#include "seqlab/parse.hpp"

namespace seqlab {

bool AxiomReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& axiom) const {
    for (const auto& c : checks)
        if (c.axiom == axiom) return &c;
    return nullptr;
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
    std::vector<double> g;
    const double step = 1.0 / per_decade;
    for (double e = std::log10(lo); e <= std::log10(hi) + 1e-9; e += step) g.push_back(std::pow(10.0, e));
    return g;
}

Modulus::Modulus(std::string name, Fn eval, bool unbounded)
    : name_(std::move(name)), eval_(std::make_shared<const Fn>(std::move(eval))), unbounded_(unbounded) {}

Modulus make_modulus(const std::string& spec) {
    auto [name, args] = parse::head(spec);
    if (name == "id") return Modulus("id", [](double x) { return x; }, true);
    if (name == "log1p") return Modulus("log1p", [](double x) { return std::log1p(x); }, true);
    if (name == "bounded") return Modulus("bounded", [](double x) { return x / (1.0 + x); }, false);
    if (name == "pow") {
        double p = parse::to_double(args, "pow exponent");
        if (p <= 0.0 || p > 1.0)
            throw SpecError("pow modulus needs 0 < p <= 1 (subadditivity), got " + parse::trim(args));
        return Modulus("pow:" + parse::trim(args), [p](double x) { return std::pow(x, p); }, true);
    }
    throw SpecError("unknown modulus spec: '" + spec + "'");
}

namespace {

// Rounding slack for comparisons of function values of magnitude ~rhs.
double slack(double rhs) { return 1e-12 * std::max(1.0, std::abs(rhs)); }

}  // namespace

AxiomReport check_modulus_axioms(const Modulus& f, std::span<const double> grid) {
    if (grid.empty()) throw DomainError("axiom grid must be nonempty");
    for (double g : grid)
        if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("axiom grid values must be positive and finite");

    AxiomReport report;

    AxiomCheck zero{"zero"};
    if (f(0.0) != 0.0) {
        zero.passed = false;
        zero.witness = std::pair{0.0, 0.0};
        zero.detail = "f(0) = " + std::to_string(f(0.0));
    }
    report.checks.push_back(zero);

    AxiomCheck sub{"subadditive"};
    for (std::size_t a = 0; a < grid.size() && sub.passed; ++a) {
        for (std::size_t b = a; b < grid.size(); ++b) {
            double x = grid[a], y = grid[b];
            double rhs = f(x) + f(y);
            if (f(x + y) > rhs + slack(rhs)) {
                sub.passed = false;
                sub.witness = std::pair{x, y};
                break;
            }
        }
    }
    report.checks.push_back(sub);

    std::vector<double> sorted(grid.begin(), grid.end());
    std::sort(sorted.begin(), sorted.end());
    AxiomCheck mono{"monotone"};
    for (std::size_t a = 1; a < sorted.size(); ++a) {
        double prev = f(sorted[a - 1]);
        if (prev > f(sorted[a]) + slack(prev)) {
            mono.passed = false;
            mono.witness = std::pair{sorted[a - 1], sorted[a]};
            break;
        }
    }
    report.checks.push_back(mono);

    AxiomCheck cont{"right_continuous_at_zero"};
    cont.passed = false;
    for (int k = 1; k <= 12; ++k) {
        double eps = std::pow(10.0, -k);
        if (f(eps) <= 1e-6 * (1.0 + 1e-9)) {
            cont.passed = true;
            break;
        }
    }
    if (!cont.passed) {
        cont.witness = std::pair{1e-12, 0.0};
        cont.detail = "f(1e-12) = " + std::to_string(f(1e-12)) + " > 1e-6";
    }
    report.checks.push_back(cont);

    if (f.unbounded()) {
        AxiomCheck grow{"unbounded_growth"};
        double prev = f(1.0);
        for (int k = 1; k <= 300; ++k) {
            double x = std::pow(10.0, k);
            double v = f(x);
            if (std::isinf(v)) break;
            if (!(v > prev)) {
                grow.passed = false;
                grow.witness = std::pair{x / 10.0, x};
                break;
            }
            prev = v;
        }
        report.checks.push_back(grow);
    }
    return report;
}

}  // namespace seqlab
