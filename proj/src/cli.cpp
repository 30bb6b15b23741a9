#include "wasym/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace wasym {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    char sep1, sep2;
    std::istringstream is(s);
    if (!(is >> g.start >> sep1 >> g.stop >> sep2 >> g.points) || sep1 != ':' ||
        sep2 != ':')
        throw std::invalid_argument("bad a-grid spec '" + s +
                                    "' (expected START:STOP:POINTS)");
    return g;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
}

std::string json_complex(cplx v) {
    return "{\"re\": " + format_double(v.real()) +
           ", \"im\": " + format_double(v.imag()) + "}";
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

FreqProfile cfg_profile(const RunConfig& cfg) {
    return make_profile(cfg.profile_name);
}

WaveletSpec cfg_wavelet(const RunConfig& cfg) {
    return make_wavelet(cfg.wavelet_spec);
}

ExpansionResult cfg_expansion(const RunConfig& cfg, const FreqProfile& p,
                              const WaveletSpec& w, double a) {
    ExpansionRequest req{p, w, cfg.b, a, cfg.n_terms};
    switch (w.kind()) {
        case WaveletSpec::Kind::morlet: return morlet_expansion(req);
        case WaveletSpec::Kind::mexican_hat: return mexican_expansion(req);
        case WaveletSpec::Kind::haar:
            return haar_expansion(req,
                                  haar_F_integral(p, cfg.b, cfg.quadrature));
    }
    throw std::logic_error("unreachable");
}

const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::general: return "general";
        case FormulaId::morlet: return "morlet";
        case FormulaId::mexican_hat: return "mexican_hat";
        case FormulaId::haar: return "haar";
    }
    return "";
}

} // namespace

void RunConfig::validate() const {
    quadrature.validate();
    if (n_terms < 1) throw std::invalid_argument("config: n >= 1 required");
    if (command == Command::eval && !a)
        throw std::invalid_argument("config: eval requires --a");
    if (command == Command::converge) {
        if (!a_grid)
            throw std::invalid_argument("config: converge requires --a-grid");
        if (a_grid->points < 4)
            throw std::invalid_argument(
                "config: converge grid needs at least 4 points");
        if (!(a_grid->start > 0.0) || !(a_grid->stop > a_grid->start))
            throw std::invalid_argument("config: bad a-grid range");
    }
    if (a && !(*a > 0.0)) throw std::invalid_argument("config: a > 0 required");
    if (m < 0) throw std::invalid_argument("config: m >= 0 required");
}

std::map<std::string, std::string> parse_config_file(const std::string& path,
                                                     const std::string& section) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not found: " + path);
    std::map<std::string, std::string> kv;
    std::string line, cur;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            cur = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: bad line '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (cur.empty() || cur == section)
            kv[key] = val;
        else if (cur == "quadrature" || cur == "specfn")
            kv[cur + "." + key] = val;
    }
    return kv;
}

void apply_config(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
    auto get = [&](const char* k) -> const std::string* {
        auto it = kv.find(k);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (auto* v = get("profile")) cfg.profile_name = *v;
    if (auto* v = get("wavelet")) cfg.wavelet_spec = *v;
    if (auto* v = get("b")) cfg.b = std::stod(*v);
    if (auto* v = get("a")) cfg.a = std::stod(*v);
    if (auto* v = get("a_grid")) cfg.a_grid = parse_grid(*v);
    if (auto* v = get("n")) cfg.n_terms = std::stoi(*v);
    if (auto* v = get("m")) cfg.m = std::stoi(*v);
    if (auto* v = get("csv")) cfg.csv_path = *v;
    if (auto* v = get("json")) cfg.json_path = *v;
    if (auto* v = get("golden_dir")) cfg.golden_dir = *v;
    if (auto* v = get("quadrature.abs_tol")) cfg.quadrature.abs_tol = std::stod(*v);
    if (auto* v = get("quadrature.rel_tol")) cfg.quadrature.rel_tol = std::stod(*v);
    if (auto* v = get("quadrature.max_subdivisions"))
        cfg.quadrature.max_subdivisions = std::stoi(*v);
    if (auto* v = get("quadrature.envelope_tol"))
        cfg.quadrature.envelope_tol = std::stod(*v);
    if (auto* v = get("quadrature.omega_max")) {
        cfg.quadrature.omega_max = std::stod(*v);
        cfg.quadrature.cutoff_strategy = quad::Settings::Cutoff::fixed;
    }
    if (auto* v = get("specfn.abs_tol")) cfg.specfn.abs_tol = std::stod(*v);
    if (auto* v = get("specfn.rel_tol")) cfg.specfn.rel_tol = std::stod(*v);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(cplx v) {
    return format_double(v.real()) + "," + format_double(v.imag());
}

std::string eval_record_json(const RunConfig& cfg, const OracleDetail& oracle,
                             const ExpansionResult& expansion, cplx remainder,
                             const HypothesisReport& hypotheses) {
    std::ostringstream o;
    o << "{\n";
    o << "  \"command\": \"eval\",\n";
    o << "  \"profile\": \"" << json_escape(cfg.profile_name) << "\",\n";
    o << "  \"wavelet\": \"" << json_escape(cfg.wavelet_spec) << "\",\n";
    o << "  \"b\": " << format_double(cfg.b) << ",\n";
    o << "  \"a\": " << format_double(cfg.a.value_or(0.0)) << ",\n";
    o << "  \"n_terms\": " << cfg.n_terms << ",\n";
    o << "  \"oracle\": {\"value\": " << json_complex(oracle.value)
      << ", \"i1\": " << json_complex(oracle.i1)
      << ", \"i2\": " << json_complex(oracle.i2)
      << ", \"err_estimate\": " << format_double(oracle.err) << "},\n";
    o << "  \"expansion\": {\n";
    o << "    \"formula_id\": \"" << formula_name(expansion.formula_id)
      << "\",\n";
    o << "    \"constant_policy\": \"" << json_escape(expansion.constant_note)
      << "\",\n";
    o << "    \"n_m_note\": \"" << json_escape(expansion.n_m_note) << "\",\n";
    o << "    \"leading_extra\": "
      << (expansion.leading_extra ? json_complex(*expansion.leading_extra)
                                  : std::string("null"))
      << ",\n";
    o << "    \"value\": " << json_complex(expansion.value()) << ",\n";
    auto arr = [&o](const char* name, const std::vector<cplx>& v,
                    bool trailing_comma) {
        o << "    \"" << name << "\": [";
        for (size_t i = 0; i < v.size(); ++i)
            o << (i ? ", " : "") << json_complex(v[i]);
        o << "]" << (trailing_comma ? "," : "") << "\n";
    };
    arr("terms", expansion.terms, true);
    arr("partial_sums", expansion.partial_sums, true);
    o << "    \"scale_power\": [";
    for (size_t i = 0; i < expansion.scale_power.size(); ++i)
        o << (i ? ", " : "") << format_double(expansion.scale_power[i]);
    o << "]\n  },\n";
    o << "  \"remainder\": {\"value\": " << json_complex(remainder)
      << ", \"abs\": " << format_double(std::abs(remainder)) << "},\n";
    o << "  \"hypotheses\": [";
    for (size_t i = 0; i < hypotheses.items.size(); ++i) {
        const auto& it = hypotheses.items[i];
        o << (i ? ", " : "") << "{\"id\": \"" << it.id << "\", \"passed\": "
          << (it.passed ? "true" : "false")
          << ", \"witness\": " << format_double(it.witness) << "}";
    }
    o << "]\n}\n";
    return o.str();
}

std::string converge_csv(const ConvergenceReport& rep) {
    std::ostringstream o;
    o << "a,abs_error,partial_sum_re,partial_sum_im,oracle_re,oracle_im,"
         "fitted_slope,predicted_slope,pass\n";
    for (size_t i = 0; i < rep.a_grid.size(); ++i) {
        o << format_double(rep.a_grid[i]) << ','
          << format_double(rep.errors[i]) << ','
          << format_double(rep.expansion_values[i].real()) << ','
          << format_double(rep.expansion_values[i].imag()) << ','
          << format_double(rep.oracle_values[i].real()) << ','
          << format_double(rep.oracle_values[i].imag()) << ','
          << format_double(rep.fitted_slope) << ','
          << format_double(rep.predicted_slope) << ','
          << (rep.pass ? "true" : "false") << '\n';
    }
    return o.str();
}

std::string hypotheses_json(const RunConfig& cfg, const HypothesisReport& rep) {
    std::ostringstream o;
    o << "{\n  \"command\": \"hypotheses\",\n";
    o << "  \"profile\": \"" << json_escape(cfg.profile_name) << "\",\n";
    o << "  \"wavelet\": \"" << json_escape(cfg.wavelet_spec) << "\",\n";
    o << "  \"m\": " << cfg.m << ",\n  \"items\": [\n";
    for (size_t i = 0; i < rep.items.size(); ++i) {
        const auto& it = rep.items[i];
        o << "    {\"id\": \"" << it.id << "\", \"description\": \""
          << json_escape(it.description) << "\", \"passed\": "
          << (it.passed ? "true" : "false")
          << ", \"witness\": " << format_double(it.witness) << ", \"note\": \""
          << json_escape(it.note) << "\"}" << (i + 1 < rep.items.size() ? "," : "")
          << "\n";
    }
    o << "  ],\n  \"all_passed\": " << (rep.all_passed() ? "true" : "false")
      << "\n}\n";
    return o.str();
}

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases{
        {"haar_p3l05_b0_a100", "haar-admissible:0.5", "haar", 0.0, 100.0},
        {"haar_p3l05_b1_a100", "haar-admissible:0.5", "haar", 1.0, 100.0},
        {"mexhat_p1l1_b0_a100", "gauss:1", "mexican", 0.0, 100.0},
        {"mexhat_p1l1_b0_a200", "gauss:1", "mexican", 0.0, 200.0},
        {"mexhat_p1l1_b1.5_a100", "gauss:1", "mexican", 1.5, 100.0},
        {"morlet2_p1l05_b0_a100", "gauss:0.5", "morlet:2", 0.0, 100.0},
        {"morlet2_p1l1_b0_a100", "gauss:1", "morlet:2", 0.0, 100.0},
        {"morlet2_p1l1_b05_a100", "gauss:1", "morlet:2", 0.5, 100.0},
    };
    return cases;
}

std::string golden_json(const RunConfig& cfg) {
    std::ostringstream o;
    o << "{\n  \"agreement_tol\": " << format_double(kGoldenAgreementTol)
      << ",\n  \"records\": [\n";
    const auto& cases = golden_cases();
    for (size_t i = 0; i < cases.size(); ++i) {
        const auto& c = cases[i];
        const FreqProfile p = make_profile(c.profile);
        const WaveletSpec w = make_wavelet(c.wavelet);
        const OracleDetail a = cwt_oracle_detail(p, w, c.b, c.a, cfg.quadrature,
                                                 quad::Rule::gauss_kronrod);
        const OracleDetail b = cwt_oracle_detail(p, w, c.b, c.a, cfg.quadrature,
                                                 quad::Rule::double_exponential);
        const double dis = std::abs(a.value - b.value);
        if (dis > std::max(kGoldenAgreementTol,
                           kGoldenAgreementTol * std::abs(a.value)))
            throw quad::non_convergence(
                "golden: quadrature rules disagree on " + c.id + " by " +
                std::to_string(dis) + "; refusing to write");
        o << "    {\"id\": \"" << c.id << "\", \"profile\": \"" << c.profile
          << "\", \"wavelet\": \"" << c.wavelet
          << "\", \"b\": " << format_double(c.b)
          << ", \"a\": " << format_double(c.a)
          << ", \"value\": " << json_complex(a.value)
          << ", \"rule_gk\": " << json_complex(a.value)
          << ", \"rule_de\": " << json_complex(b.value)
          << ", \"disagreement\": " << format_double(dis) << "}"
          << (i + 1 < cases.size() ? "," : "") << "\n";
    }
    o << "  ]\n}\n";
    return o.str();
}

int run_eval(const RunConfig& cfg) {
    cfg.validate();
    const FreqProfile p = cfg_profile(cfg);
    const WaveletSpec w = cfg_wavelet(cfg);
    const OracleDetail oracle =
        cwt_oracle_detail(p, w, cfg.b, *cfg.a, cfg.quadrature);
    const ExpansionResult exp_r = cfg_expansion(cfg, p, w, *cfg.a);
    const cplx rem = oracle.value - exp_r.value();
    const HypothesisReport hyp = check_hypotheses(p, w, cfg.m);
    const std::string record = eval_record_json(cfg, oracle, exp_r, rem, hyp);
    if (!cfg.json_path.empty()) {
        write_file(cfg.json_path, record);
        write_file(cfg.json_path + ".meta",
                   "tool: wavelet-asym\ncommand: eval\nprofile: " +
                       cfg.profile_name + "\nwavelet: " + cfg.wavelet_spec + "\n");
    } else {
        std::cout << record;
    }
    std::cout << "eval " << w.id() << " x " << p.name << ": oracle=("
              << format_double(oracle.value.real()) << ", "
              << format_double(oracle.value.imag()) << ") |remainder|="
              << format_double(std::abs(rem)) << "\n";
    return 0;
}

int run_converge(const RunConfig& cfg) {
    cfg.validate();
    const FreqProfile p = cfg_profile(cfg);
    const WaveletSpec w = cfg_wavelet(cfg);
    const std::vector<double> grid =
        log_spaced_grid(cfg.a_grid->start, cfg.a_grid->stop, cfg.a_grid->points);
    const ConvergenceReport rep =
        convergence_study(p, w, cfg.b, cfg.n_terms, grid, cfg.quadrature);
    const std::string csv = converge_csv(rep);
    if (!cfg.csv_path.empty()) {
        write_file(cfg.csv_path, csv);
        write_file(cfg.csv_path + ".meta",
                   "tool: wavelet-asym\ncommand: converge\nprofile: " +
                       cfg.profile_name + "\nwavelet: " + cfg.wavelet_spec +
                       "\nn: " + std::to_string(cfg.n_terms) + "\n");
    } else {
        std::cout << csv;
    }
    std::cout << "converge " << w.id() << " x " << p.name << " n=" << cfg.n_terms
              << ": fitted=" << format_double(rep.fitted_slope)
              << " predicted=" << format_double(rep.predicted_slope)
              << (rep.degenerate ? " DEGENERATE" : (rep.pass ? " PASS" : " FAIL"))
              << "\n";
    for (const auto& warning : rep.warnings)
        std::cerr << "warning: " << warning << "\n";
    return 0;
}

int run_golden(const RunConfig& cfg) {
    cfg.validate();
    namespace fs = std::filesystem;
    fs::create_directories(cfg.golden_dir);
    const std::string body = golden_json(cfg);
    write_file(cfg.golden_dir + "/cwt_golden.json", body);
    write_file(cfg.golden_dir + "/provenance.txt",
               "tool: wavelet-asym\ncommand: golden\nrules: gauss_kronrod + "
               "double_exponential\nagreement_tol: " +
                   format_double(kGoldenAgreementTol) + "\nabs_tol: " +
                   format_double(cfg.quadrature.abs_tol) + "\n");
    std::cout << "golden: wrote " << golden_cases().size() << " records to "
              << cfg.golden_dir << "\n";
    return 0;
}

int run_hypotheses(const RunConfig& cfg) {
    cfg.validate();
    const FreqProfile p = cfg_profile(cfg);
    const WaveletSpec w = cfg_wavelet(cfg);
    const HypothesisReport rep = check_hypotheses(p, w, cfg.m);
    const std::string body = hypotheses_json(cfg, rep);
    if (!cfg.json_path.empty())
        write_file(cfg.json_path, body);
    else
        std::cout << body;
    return rep.all_passed() ? 0 : 0;  // failures are reported, not fatal
}

int run_command(const RunConfig& cfg) {
    try {
        switch (cfg.command) {
            case RunConfig::Command::eval: return run_eval(cfg);
            case RunConfig::Command::converge: return run_converge(cfg);
            case RunConfig::Command::golden: return run_golden(cfg);
            case RunConfig::Command::hypotheses: return run_hypotheses(cfg);
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    }
}

} // namespace wasym
