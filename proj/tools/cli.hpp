#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqlab/error.hpp"

namespace seqlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "seqlab/1";

struct RunConfig {
    std::string subcommand;

    Index n = 100000;
    Index blocks = 12;
    std::optional<double> tol;  // 1e-2, or 1e-12 for norms
    std::optional<double> eps;  // 0.1 unless a generator picks its own
    double alpha = 1.0;
    std::string format = "json";
    std::string out;
    bool timing = false;

    std::string set;
    std::string modulus = "id";
    std::string seq;
    std::string matrix = "identity";
    std::string orlicz = "linear";
    std::string rho = "const:1";
    std::string theta = "powers2";
    std::optional<double> limit;
    bool estimate_limit = false;
    bool complement = false;

    std::string mode = "fstat-block";
    std::string witness;  // thm36 | thm37
    double nu = 1.0;

    std::string kind = "luxemburg";

    std::string theorem;
    std::string probe_moduli = "id,log1p,pow:0.5";
    std::optional<Index> depth;

    std::vector<std::string> check_moduli;
    std::vector<std::string> check_orlicz;
    std::vector<std::string> check_matrices;
    Index rows = 1000;
    bool check_delta2 = false;
    double delta2_k = 4.0;
    double delta2_a = 1.0;

    double effective_tol() const;
    double effective_eps() const { return eps.value_or(0.1); }
};

struct Report {
    Json doc;
};

Report run_density(const RunConfig& cfg);
Report run_membership(const RunConfig& cfg);
Report run_norm(const RunConfig& cfg);
Report run_witness(const RunConfig& cfg);
Report run_check(const RunConfig& cfg);

// Dispatches on cfg.subcommand.
Report run(const RunConfig& cfg);

// json, csv or table.
std::string render(const Report& report, const std::string& format);

// Parses arguments (without the program name), runs and writes the rendered
// report. Returns the process exit status: 0 on success, 1 on spec, I/O or
// parse errors. Verdicts never change it.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rounds to 12 significant digits; non-finite values become strings.
Json number(double v);

}  // namespace seqlab::cli
