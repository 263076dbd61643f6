#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "seqlab/density.hpp"
#include "seqlab/membership.hpp"
#include "seqlab/modulus.hpp"
#include "seqlab/orlicz.hpp"
#include "seqlab/parse.hpp"
#include "seqlab/witnesses.hpp"

namespace seqlab::cli {

namespace {

Json numbers(std::span<const double> v) {
    Json a = Json::array();
    for (double x : v) a.push_back(number(x));
    return a;
}

Json indices(const std::vector<Index>& v) {
    Json a = Json::array();
    for (Index i : v) a.push_back(i);
    return a;
}

template <class T>
Json optional_number(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_floating_point_v<T>)
        return number(*v);
    else
        return *v;
}

Json density_json(const DensityEstimate& e) {
    return Json{{"checkpoints", indices(e.checkpoints)},
                {"ratios", numbers(e.ratios)},
                {"final_ratio", number(e.final_ratio())},
                {"value", optional_number(e.value)},
                {"verdict", to_string(e.verdict)},
                {"tol", number(e.tol)},
                {"tail_spread", number(e.tail_spread)}};
}

Json membership_json(const MembershipReport& r) {
    Json j{{"mode", to_string(r.mode)},
           {"verdict", to_string(r.verdict)},
           {"block_residuals", numbers(r.block_residuals)},
           {"exceedance_ratios", numbers(r.exceedance_ratios)},
           {"trail", numbers(r.trail)}};
    j["density"] = r.density ? density_json(*r.density) : Json(nullptr);
    return j;
}

Json axioms_json(const AxiomReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json w = nullptr;
        if (c.witness) w = Json::array({number(c.witness->first), number(c.witness->second)});
        checks.push_back(Json{{"axiom", c.axiom}, {"passed", c.passed}, {"witness", w}, {"detail", c.detail}});
    }
    return Json{{"all_passed", r.all_passed()}, {"checks", checks}};
}

// A bare number is read as a constant schedule.
RhoSchedule rho_schedule(const std::string& spec) {
    double v = 0.0;
    auto t = parse::trim(spec);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec == std::errc() && ptr == t.data() + t.size()) return RhoSchedule::constant(v);
    return make_rho(spec);
}

double rho_scalar(const std::string& spec) {
    auto t = parse::trim(spec);
    auto [name, args] = parse::head(t);
    if (name == "const") return parse::to_double(args, "rho");
    if (args.empty()) return parse::to_double(t, "rho");
    throw SpecError("this construction needs a scalar rho (a number or const:c), got '" + spec + "'");
}

Json new_doc(const RunConfig& cfg, Json inputs) {
    Json common{{"n", cfg.n},
                {"blocks", cfg.blocks},
                {"tol", number(cfg.effective_tol())},
                {"eps", cfg.eps ? number(*cfg.eps) : Json(nullptr)},
                {"alpha", number(cfg.alpha)},
                {"format", cfg.format}};
    for (auto& [k, v] : inputs.items()) common[k] = v;
    return Json{{"schema_version", kSchemaVersion},
                {"command", cfg.subcommand},
                {"inputs", common},
                {"results", Json::object()},
                {"warnings", Json::array()},
                {"timing", nullptr}};
}

void add_warnings(Json& doc, const std::vector<std::string>& w) {
    for (const auto& s : w) doc["warnings"].push_back(s);
}

SpaceParams space_params(const RunConfig& cfg) {
    SpaceParams p;
    p.matrix = make_matrix(cfg.matrix);
    p.family = make_orlicz_family(cfg.orlicz);
    p.scheme = make_lacunary(cfg.theta, cfg.blocks);
    p.alpha = cfg.alpha;
    p.rho = rho_schedule(cfg.rho);
    p.eps = cfg.effective_eps();
    p.limit = cfg.limit.value_or(0.0);
    p.validate();
    return p;
}

Json space_inputs(const RunConfig& cfg) {
    return Json{{"seq", cfg.seq},         {"matrix", cfg.matrix}, {"orlicz", cfg.orlicz},
                {"rho", cfg.rho},         {"theta", cfg.theta},   {"modulus", cfg.modulus},
                {"L", optional_number(cfg.limit)}, {"estimate_L", cfg.estimate_limit}};
}

Json limit_json(const LimitEstimate& e) {
    Json verdicts = Json::array();
    for (auto v : e.verdicts) verdicts.push_back(to_string(v));
    return Json{{"limit", optional_number(e.limit)}, {"candidates", numbers(e.candidates)}, {"verdicts", verdicts}};
}

// Fills p.limit from --L, or from the f-statistical estimate when asked (or
// when `estimate_by_default`). Returns false if estimation found nothing.
bool resolve_limit(const RunConfig& cfg, const SequencePrefix& x, SpaceParams& p, Json& results,
                   bool estimate_by_default) {
    if (cfg.limit) {
        p.limit = *cfg.limit;
        results["limit"] = number(p.limit);
        return true;
    }
    if (!cfg.estimate_limit && !estimate_by_default)
        throw SpecError("a candidate limit is required: pass --L or --estimate-L");
    auto est = fstat_limit_estimate(x, p, make_modulus(cfg.modulus), p.eps, cfg.effective_tol());
    results["limit_estimate"] = limit_json(est);
    results["limit"] = optional_number(est.limit);
    if (!est.limit) return false;
    p.limit = *est.limit;
    return true;
}

Json instance_json(const Instance& inst) {
    return Json{{"label", inst.x.label()},
                {"length", inst.x.size()},
                {"cuts", indices(inst.params.scheme.cuts())},
                {"family", inst.params.family.name()},
                {"alpha", number(inst.params.alpha)},
                {"eps", number(inst.params.eps)},
                {"spike_heights", numbers(inst.spike_heights)}};
}

Json verdict_pair(const Instance& inst, double tol) {
    auto w = w_membership(inst.x, inst.params, tol);
    auto b = fstat_membership_block(inst.x, inst.params, tol);
    return Json{{"w", to_string(w.verdict)}, {"fstat_block", to_string(b.verdict)}};
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "null";
    return v.dump();
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, Json>>& out) {
    if (v.is_object()) {
        for (auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, out);
    } else {
        out.emplace_back(path, v);
    }
}

std::string quote_csv(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace

Json number(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::stod(buf);
}

double RunConfig::effective_tol() const {
    if (tol) return *tol;
    return subcommand == "norm" ? 1e-12 : kDefaultTol;
}

Report run_density(const RunConfig& cfg) {
    if (cfg.set.empty()) throw SpecError("density needs --set");
    Json doc = new_doc(cfg, Json{{"set", cfg.set}, {"modulus", cfg.modulus}, {"complement", cfg.complement}});
    auto set = make_index_set(cfg.set);
    auto f = make_modulus(cfg.modulus);
    const double tol = cfg.effective_tol();
    auto& res = doc["results"];
    res["density"] = density_json(f_density(set, f, cfg.n, tol));
    res["natural_density"] = density_json(natural_density(set, cfg.n, tol));
    if (cfg.complement) {
        auto c = complement_inequality_check(set, f, cfg.n);
        res["complement_check"] =
            Json{{"passed", c.passed}, {"first_violation", optional_number(c.first_violation)}, {"checked", c.checked}};
    }
    return Report{std::move(doc)};
}

Report run_membership(const RunConfig& cfg) {
    Json inputs = space_inputs(cfg);
    inputs["mode"] = cfg.mode;
    inputs["witness"] = cfg.witness;
    inputs["nu"] = number(cfg.nu);
    Json doc = new_doc(cfg, inputs);
    auto& res = doc["results"];
    const double tol = cfg.effective_tol();

    std::optional<Instance> inst;
    if (cfg.witness == "thm36") {
        inst = gen_thm36_instance(cfg.nu, rho_scalar(cfg.rho), cfg.blocks);
    } else if (cfg.witness == "thm37") {
        inst = gen_thm37_instance(make_orlicz_fn(cfg.orlicz), make_lacunary(cfg.theta, cfg.blocks),
                                  rho_scalar(cfg.rho), cfg.alpha);
        doc["warnings"].push_back(kSpikeDiscrepancyWarning);
    } else if (!cfg.witness.empty()) {
        throw SpecError("unknown --witness '" + cfg.witness + "' (expected thm36 or thm37)");
    }

    std::optional<SequencePrefix> x;
    SpaceParams p;
    if (inst) {
        x = inst->x;
        p = inst->params;
        if (cfg.eps) p.eps = *cfg.eps;
        res["instance"] = instance_json(*inst);
        res["limit"] = number(p.limit);
    } else {
        if (cfg.seq.empty()) throw SpecError("membership needs --seq or --witness");
        x = make_sequence(cfg.seq, cfg.n);
        p = space_params(cfg);
        if (!resolve_limit(cfg, *x, p, res, false)) {
            res["verdict"] = to_string(Verdict::inconclusive);
            doc["warnings"].push_back("no candidate limit passed the f-statistical test");
            return Report{std::move(doc)};
        }
    }

    MembershipReport rep;
    if (cfg.mode == "w")
        rep = w_membership(*x, p, tol);
    else if (cfg.mode == "fstat-block")
        rep = fstat_membership_block(*x, p, tol);
    else if (cfg.mode == "fstat-global")
        rep = fstat_membership_global(*x, p, make_modulus(cfg.modulus), tol);
    else
        throw SpecError("unknown --mode '" + cfg.mode + "' (expected w, fstat-block or fstat-global)");
    Json body = membership_json(rep);
    for (auto& [k, v] : body.items()) res[k] = v;
    add_warnings(doc, rep.warnings);
    return Report{std::move(doc)};
}

Report run_norm(const RunConfig& cfg) {
    if (cfg.seq.empty()) throw SpecError("norm needs --seq");
    Json doc = new_doc(cfg, Json{{"kind", cfg.kind}, {"seq", cfg.seq}, {"orlicz", cfg.orlicz}, {"theta", cfg.theta}});
    auto x = make_sequence(cfg.seq, cfg.n);
    const double tol = cfg.effective_tol();
    auto& res = doc["results"];
    res["kind"] = cfg.kind;
    if (cfg.kind == "luxemburg") {
        auto r = luxemburg_norm(make_orlicz_family(cfg.orlicz), x, tol);
        res["value"] = number(r.value);
        res["bracket"] = Json::array({number(r.lower), number(r.value)});
        res["iterations"] = r.iterations;
    } else if (cfg.kind == "orlicz") {
        auto r = orlicz_norm(make_orlicz_family(cfg.orlicz), x, tol);
        res["value"] = number(r.value);
        res["argmin"] = number(r.argmin);
        res["attained"] = to_string(r.attained);
        res["iterations"] = r.iterations;
    } else if (cfg.kind == "ntheta") {
        auto scheme = make_lacunary(cfg.theta, cfg.blocks);
        res["value"] = number(ntheta_norm(x, scheme));
        res["cuts"] = indices(scheme.cuts());
    } else if (cfg.kind == "modular") {
        auto m = modular(make_orlicz_family(cfg.orlicz), x);
        res["value"] = number(m.value);
        res["overflow_at"] = optional_number(m.overflow_at);
    } else {
        throw SpecError("unknown --kind '" + cfg.kind + "' (expected luxemburg, orlicz, ntheta or modular)");
    }
    return Report{std::move(doc)};
}

Report run_witness(const RunConfig& cfg) {
    Json inputs = space_inputs(cfg);
    inputs["theorem"] = cfg.theorem;
    inputs["nu"] = number(cfg.nu);
    inputs["depth"] = optional_number(cfg.depth);
    inputs["probe_moduli"] = cfg.probe_moduli;
    Json doc = new_doc(cfg, inputs);
    auto& res = doc["results"];
    const double tol = cfg.effective_tol();
    const std::string& t = cfg.theorem;

    if (t == "3.6") {
        auto inst = gen_thm36_instance(cfg.nu, rho_scalar(cfg.rho), cfg.blocks);
        if (cfg.eps) inst.params.eps = *cfg.eps;
        auto tr = block_residuals(inst.x, inst.params);
        std::vector<double> bound;
        bool holds = true;
        for (Index r = 1; r <= tr.size(); ++r) {
            bound.push_back(std::ldexp(1.0, -static_cast<int>(r)));
            holds = holds && tr[r - 1] <= bound.back();
        }
        res["instance"] = instance_json(inst);
        res["block_residuals"] = numbers(tr);
        res["residual_bound"] = numbers(bound);
        res["residual_bound_holds"] = holds;
        res["exceedance_ratios"] = numbers(exceedance_ratios(inst.x, inst.params));
        res["verdicts"] = verdict_pair(inst, tol);
        return Report{std::move(doc)};
    }
    if (t == "3.7") {
        auto inst = gen_thm37_instance(make_orlicz_fn(cfg.orlicz), make_lacunary(cfg.theta, cfg.blocks),
                                       rho_scalar(cfg.rho), cfg.alpha);
        if (cfg.eps) inst.params.eps = *cfg.eps;
        auto tr = block_residuals(inst.x, inst.params);
        res["instance"] = instance_json(inst);
        res["block_residuals"] = numbers(tr);
        res["min_block_residual"] = number(*std::min_element(tr.begin(), tr.end()));
        res["exceedance_ratios"] = numbers(exceedance_ratios(inst.x, inst.params));
        res["verdicts"] = verdict_pair(inst, tol);
        doc["warnings"].push_back(kSpikeDiscrepancyWarning);
        return Report{std::move(doc)};
    }

    if (t != "3.1" && t != "3.3" && t != "3.4" && t != "3.5")
        throw SpecError("unknown --theorem '" + t + "' (expected 3.1, 3.3, 3.4, 3.5, 3.6 or 3.7)");
    if (cfg.seq.empty()) throw SpecError("--theorem " + t + " needs --seq");
    auto x = make_sequence(cfg.seq, cfg.n);
    SpaceParams p = space_params(cfg);
    auto f = make_modulus(cfg.modulus);

    if (t == "3.1") {
        const Index depth = cfg.depth.value_or(5);
        if (!resolve_limit(cfg, x, p, res, true)) {
            res["ok"] = false;
            res["diagnostic"] = "no f-statistical limit candidate found";
            return Report{std::move(doc)};
        }
        auto ext = extract_witness_set(x, p, f, depth);
        res["ok"] = ext.witness.has_value();
        res["stuck_level"] = optional_number(ext.stuck_level);
        res["diagnostic"] = ext.diagnostic;
        if (ext.witness) {
            const auto& w = *ext.witness;
            auto members = w.set.materialize(x.size());
            std::vector<Index> head(members.begin(), members.begin() + std::min<std::ptrdiff_t>(members.size(), 20));
            Json counts = Json::array();
            for (const auto& c : w.level_counts) counts.push_back(indices(c));
            res["thresholds"] = indices(w.thresholds);
            res["witness_size"] = members.size();
            res["witness_head"] = indices(head);
            res["level_counts"] = counts;
            res["density"] = density_json(w.density);
            res["off_set_tail_sup"] = number(w.off_set_tail_sup);
            auto off = converge_off_witness(x, p, w.set, 1.0 / static_cast<double>(depth));
            res["off_witness"] = Json{{"pass", off.pass}, {"tail_sup", number(off.tail_sup)}, {"i0", off.i0}};
        }
        return Report{std::move(doc)};
    }
    if (t == "3.3") {
        auto c = cauchy_limit_construction(x, p, f, cfg.depth.value_or(10), tol);
        res["ok"] = c.ok;
        res["estimate"] = c.ok ? number(c.estimate) : Json(nullptr);
        res["interval"] = Json::array({number(c.lower), number(c.upper)});
        res["width"] = number(c.width());
        res["anchors"] = indices(c.anchors);
        res["diagnostic"] = c.diagnostic;
        return Report{std::move(doc)};
    }
    if (t == "3.4") {
        std::vector<Modulus> family;
        for (const auto& spec : parse::split(cfg.probe_moduli, ',')) family.push_back(make_modulus(spec));
        auto probe = multi_modulus_probe(x, p, family, tol);
        Json limits = Json::object();
        for (std::size_t k = 0; k < probe.moduli.size(); ++k) limits[probe.moduli[k]] = optional_number(probe.limits[k]);
        res["limits"] = limits;
        res["all_agree"] = probe.all_agree;
        res["common_limit"] = optional_number(probe.common_limit);
        res["norm_convergent"] = probe.norm_convergent;
        res["tail_deviation"] = number(probe.tail_deviation);
        return Report{std::move(doc)};
    }
    // 3.5
    if (!resolve_limit(cfg, x, p, res, false)) {
        res["hypothesis_met"] = false;
        res["hypothesis_note"] = "no f-statistical limit candidate found";
        return Report{std::move(doc)};
    }
    auto probe = boundedness_inclusion_probe(x, p, f, tol);
    res["hypothesis_met"] = probe.hypothesis_met;
    res["hypothesis_note"] = probe.hypothesis_note;
    res["bounded"] = probe.bounded;
    res["ratio_deviation"] = number(probe.ratio_deviation);
    res["fstat_block"] = probe.fstat_block ? membership_json(*probe.fstat_block) : Json(nullptr);
    res["w"] = probe.w ? membership_json(*probe.w) : Json(nullptr);
    res["fstat_global"] = probe.fstat_global ? membership_json(*probe.fstat_global) : Json(nullptr);
    res["consistent"] = probe.consistent;
    return Report{std::move(doc)};
}

Report run_check(const RunConfig& cfg) {
    Json doc = new_doc(cfg, Json{{"modulus", cfg.check_moduli},
                                 {"orlicz", cfg.check_orlicz},
                                 {"matrix", cfg.check_matrices},
                                 {"delta2", cfg.check_delta2},
                                 {"K", number(cfg.delta2_k)},
                                 {"a", number(cfg.delta2_a)},
                                 {"rows", cfg.rows}});
    if (cfg.check_moduli.empty() && cfg.check_orlicz.empty() && cfg.check_matrices.empty())
        throw SpecError("check needs at least one --modulus, --orlicz or --matrix");
    if (cfg.check_delta2 && cfg.check_orlicz.empty()) throw SpecError("--delta2 needs --orlicz");
    auto& res = doc["results"];

    if (!cfg.check_moduli.empty()) {
        Json list = Json::array();
        for (const auto& spec : cfg.check_moduli) {
            Json j{{"spec", spec}};
            j.update(axioms_json(check_modulus_axioms(make_modulus(spec), log_grid())));
            list.push_back(j);
        }
        res["modulus"] = list;
    }
    if (!cfg.check_orlicz.empty()) {
        Json list = Json::array();
        Json d2 = Json::array();
        for (const auto& spec : cfg.check_orlicz) {
            Json j{{"spec", spec}};
            j.update(axioms_json(check_orlicz_axioms(make_orlicz_fn(spec), log_grid(1e-6, 1e2))));
            list.push_back(j);
            if (cfg.check_delta2) {
                std::vector<Index> ks;
                for (Index k = 1; k <= 20; ++k) ks.push_back(k);
                auto us = log_grid(1e-4, 1e2, 8);
                auto r = delta2_check(make_orlicz_family(spec), cfg.delta2_a, cfg.delta2_k,
                                      [](Index) { return 0.0; }, ks, us);
                Json w = nullptr;
                if (r.witness) w = Json::array({r.witness->first, number(r.witness->second)});
                d2.push_back(Json{{"spec", spec}, {"passed", r.passed}, {"witness", w}, {"checked", r.checked},
                                  {"c_sum", number(r.c_sum)}});
            }
        }
        res["orlicz"] = list;
        if (cfg.check_delta2) res["delta2"] = d2;
    }
    if (!cfg.check_matrices.empty()) {
        Json list = Json::array();
        for (const auto& spec : cfg.check_matrices) {
            auto a = make_matrix(spec);
            auto r = regularity_check(a, std::min(cfg.rows, a.max_row()), cfg.effective_tol());
            list.push_back(Json{{"spec", spec},
                                {"kind", a.kind_name()},
                                {"rows", r.row_sums.size()},
                                {"sup_abs_row_sum", number(r.sup_abs_row_sum)},
                                {"sup_row", r.sup_row},
                                {"row_sum_deviation", number(r.row_sum_deviation)},
                                {"column_last", numbers(r.column_last)},
                                {"column_tail_max", numbers(r.column_tail_max)},
                                {"bounded", r.bounded},
                                {"columns_vanish", r.columns_vanish},
                                {"rows_sum_to_one", r.rows_sum_to_one}});
        }
        res["matrix"] = list;
    }
    return Report{std::move(doc)};
}

Report run(const RunConfig& cfg) {
    using Runner = Report (*)(const RunConfig&);
    static const std::map<std::string, Runner> runners{{"density", run_density},
                                                        {"membership", run_membership},
                                                        {"norm", run_norm},
                                                        {"witness", run_witness},
                                                        {"check", run_check}};
    auto it = runners.find(cfg.subcommand);
    if (it == runners.end()) throw SpecError("unknown subcommand '" + cfg.subcommand + "'");
    if (cfg.n < 100 && cfg.subcommand != "norm" && cfg.subcommand != "check")
        throw SpecError("--n must be >= 100");
    if (!(cfg.effective_tol() > 0.0)) throw SpecError("--tol must be positive");
    if (cfg.eps && !(*cfg.eps > 0.0)) throw SpecError("--eps must be positive");

    auto start = std::chrono::steady_clock::now();
    Report r = it->second(cfg);
    if (cfg.timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        r.doc["timing"] = Json{{"seconds", dt.count()}};
    }
    return r;
}

std::string render(const Report& report, const std::string& format) {
    if (format == "json") return report.doc.dump(2) + "\n";

    std::vector<std::pair<std::string, Json>> rows;
    flatten(report.doc, "", rows);
    std::ostringstream os;
    if (format == "csv") {
        os << "field,index,value\n";
        for (const auto& [path, v] : rows) {
            if (v.is_array() && !v.empty()) {
                for (std::size_t k = 0; k < v.size(); ++k)
                    os << quote_csv(path) << ',' << k + 1 << ',' << quote_csv(scalar_text(v[k])) << '\n';
            } else {
                os << quote_csv(path) << ",," << quote_csv(v.is_array() ? "" : scalar_text(v)) << '\n';
            }
        }
        return os.str();
    }
    if (format == "table") {
        std::size_t width = 0;
        for (const auto& [path, v] : rows) width = std::max(width, path.size());
        for (const auto& [path, v] : rows) {
            os << path << std::string(width - path.size() + 2, ' ');
            if (v.is_array()) {
                for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << scalar_text(v[k]);
            } else {
                os << scalar_text(v);
            }
            os << '\n';
        }
        return os.str();
    }
    throw SpecError("unknown --format '" + format + "'");
}

namespace {

void add_common(CLI::App* app, RunConfig& c) {
    app->add_option("--n", c.n, "Truncation N")->capture_default_str();
    app->add_option("--blocks", c.blocks, "Number of lacunary blocks R")->capture_default_str();
    app->add_option("--tol", c.tol, "Tolerance (default 1e-2; 1e-12 for norms)");
    app->add_option("--eps", c.eps, "Exceedance threshold (default 0.1)");
    app->add_option("--alpha", c.alpha, "Order alpha in (0, 1]")->capture_default_str();
    app->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app->add_option("--out", c.out, "Write the report to PATH");
    app->add_flag("--timing", c.timing, "Record wall-clock time in the report");
}

void add_space(CLI::App* app, RunConfig& c) {
    app->add_option("--seq", c.seq, "Sequence spec");
    app->add_option("--matrix", c.matrix, "Matrix spec")->capture_default_str();
    app->add_option("--orlicz", c.orlicz, "Orlicz spec")->capture_default_str();
    app->add_option("--rho", c.rho, "Rho spec or number")->capture_default_str();
    app->add_option("--theta", c.theta, "Lacunary spec")->capture_default_str();
    app->add_option("--modulus", c.modulus, "Modulus spec")->capture_default_str();
    app->add_option("--L", c.limit, "Candidate limit L");
    app->add_flag("--estimate-L", c.estimate_limit, "Estimate L from histogram modes");
    app->add_option("--nu", c.nu, "Construction amplitude nu")->capture_default_str();
}

}  // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"seqlab: density, summability and Orlicz diagnostics for truncated sequences", "seqlab"};
    app.require_subcommand(1);

    auto* density = app.add_subcommand("density", "Natural and f-density of an index set");
    add_common(density, cfg);
    density->add_option("--set", cfg.set, "Set spec")->required();
    density->add_option("--modulus", cfg.modulus, "Modulus spec")->capture_default_str();
    density->add_flag("--complement", cfg.complement, "Also run the complement inequality check");

    auto* membership = app.add_subcommand("membership", "Block and f-statistical membership diagnostics");
    add_common(membership, cfg);
    add_space(membership, cfg);
    membership->add_option("--mode", cfg.mode, "w, fstat-block or fstat-global")
        ->check(CLI::IsMember({"w", "fstat-block", "fstat-global"}))
        ->capture_default_str();
    membership->add_option("--witness", cfg.witness, "Generated instance: thm36 or thm37")
        ->check(CLI::IsMember({"thm36", "thm37"}));

    auto* norm = app.add_subcommand("norm", "Modular, Luxemburg, Orlicz and N_theta norms");
    add_common(norm, cfg);
    norm->add_option("--kind", cfg.kind, "luxemburg, orlicz, ntheta or modular")
        ->check(CLI::IsMember({"luxemburg", "orlicz", "ntheta", "modular"}))
        ->capture_default_str();
    norm->add_option("--seq", cfg.seq, "Sequence spec")->required();
    norm->add_option("--orlicz", cfg.orlicz, "Orlicz spec")->capture_default_str();
    norm->add_option("--theta", cfg.theta, "Lacunary spec")->capture_default_str();

    auto* witness = app.add_subcommand("witness", "Constructions: witness sets, Cauchy limits, generators");
    add_common(witness, cfg);
    add_space(witness, cfg);
    witness->add_option("--theorem", cfg.theorem, "3.1, 3.3, 3.4, 3.5, 3.6 or 3.7")->required();
    witness->add_option("--probe-moduli", cfg.probe_moduli, "Comma-separated moduli")->capture_default_str();
    witness->add_option("--depth", cfg.depth, "Depth J (3.1, default 5) or K (3.3, default 10)");

    auto* check = app.add_subcommand("check", "Axiom, Delta_2 and regularity checks");
    add_common(check, cfg);
    check->add_option("--modulus", cfg.check_moduli, "Modulus spec (repeatable)");
    check->add_option("--orlicz", cfg.check_orlicz, "Orlicz function spec (repeatable)");
    check->add_option("--matrix", cfg.check_matrices, "Matrix spec (repeatable)");
    check->add_flag("--delta2", cfg.check_delta2, "Run the Delta_2 check on each --orlicz");
    check->add_option("--K", cfg.delta2_k, "Delta_2 constant")->capture_default_str();
    check->add_option("--a", cfg.delta2_a, "Delta_2 threshold")->capture_default_str();
    check->add_option("--rows", cfg.rows, "Rows examined by the regularity check")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

    try {
        std::string text = render(run(cfg), cfg.format);
        if (cfg.out.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw SpecError("cannot write " + cfg.out);
            f << text;
            if (!f) throw SpecError("failed writing " + cfg.out);
        }
    } catch (const Error& e) {
        err << "seqlab: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "seqlab: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace seqlab::cli
