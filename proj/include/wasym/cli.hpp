#pragma once

// Command-line driver internals: run configuration, flat key-value config
// files with one section per command, and deterministic CSV/JSON emission
// (numbers at 17 significant digits, LF line endings, no timestamps in data
// files; provenance goes to a sidecar).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wasym/oracle.hpp"
#include "wasym/remainder.hpp"
#include "wasym/special_functions.hpp"

namespace wasym {

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
};

struct RunConfig {
    enum class Command { eval, converge, golden, hypotheses } command =
        Command::eval;
    std::string profile_name = "gauss";
    std::string wavelet_spec = "mexican";
    double b = 0.0;
    std::optional<double> a;
    std::optional<GridSpec> a_grid;
    int n_terms = 1;
    int m = 2;                      // hypotheses command
    QuadratureSettings quadrature;
    SpecialFnAccuracy specfn;
    std::string csv_path, json_path;
    std::string golden_dir = "golden";

    void validate() const;   // throws std::invalid_argument on config errors
};

// Flat INI-style config: `key = value` lines, `[section]` headers matching the
// command names plus [quadrature] and [specfn]; '#' comments.  Section-less
// keys apply to every command.
std::map<std::string, std::string> parse_config_file(const std::string& path,
                                                     const std::string& section);
void apply_config(RunConfig& cfg,
                  const std::map<std::string, std::string>& kv);

// Fixed-format helpers shared by every emitter.
std::string format_double(double v);          // %.17g
std::string format_complex(cplx v);           // "re,im" pair for CSV use

std::string eval_record_json(const RunConfig& cfg, const OracleDetail& oracle,
                             const ExpansionResult& expansion, cplx remainder,
                             const HypothesisReport& hypotheses);
std::string converge_csv(const ConvergenceReport& report);
std::string hypotheses_json(const RunConfig& cfg, const HypothesisReport& rep);

// Exit codes: 0 success, 2 config error, 3 numeric failure.
int run_eval(const RunConfig& cfg);
int run_converge(const RunConfig& cfg);
int run_golden(const RunConfig& cfg);
int run_hypotheses(const RunConfig& cfg);
int run_command(const RunConfig& cfg);

// Golden-file pipeline (also used directly by tests): every case is evaluated
// with both quadrature rules and refused when they disagree beyond the gate.
struct GoldenCase {
    std::string id;
    std::string profile;
    std::string wavelet;
    double b;
    double a;
};
const std::vector<GoldenCase>& golden_cases();
std::string golden_json(const RunConfig& cfg);   // throws on rule disagreement
inline constexpr double kGoldenAgreementTol = 1e-9;

} // namespace wasym
