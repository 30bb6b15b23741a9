// wavelet-asym: evaluate large-scale asymptotic expansions of the continuous
// wavelet transform against a brute-force quadrature oracle.
//
//   wavelet-asym <eval|converge|golden|hypotheses>
//       --profile NAME[:LAMBDA] --wavelet {morlet:OMEGA0|mexican|haar}
//       --b REAL (--a REAL | --a-grid START:STOP:POINTS) --n INT
//       [--config PATH] [--csv PATH] [--json PATH]
//
// Exit codes: 0 success, 2 config error, 3 numeric failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wasym/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"large-a wavelet transform asymptotics"};
    app.require_subcommand(1);

    std::string config_path, a_grid_spec, profile, wavelet, csv, json, golden_dir;
    double b = 0.0, a = 0.0, abs_tol = 0.0, rel_tol = 0.0;
    int n = 0, m = -1, max_subdiv = 0;
    bool have_a = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "config file (flat key = value)");
        cmd->add_option("--profile", profile, "profile name, e.g. gauss or gauss:0.5");
        cmd->add_option("--wavelet", wavelet, "morlet:OMEGA0 | mexican | haar");
        cmd->add_option("--b", b, "translation parameter");
        cmd->add_option("--n", n, "number of expansion terms");
        cmd->add_option("--csv", csv, "CSV output path");
        cmd->add_option("--json", json, "JSON output path");
        cmd->add_option("--abs-tol", abs_tol, "oracle absolute tolerance");
        cmd->add_option("--rel-tol", rel_tol, "oracle relative tolerance");
        cmd->add_option("--max-subdiv", max_subdiv, "subdivision limit");
    };

    CLI::App* c_eval = app.add_subcommand("eval", "single (b, a) evaluation");
    c_eval->add_option("--a", a, "scale")->each([&](std::string) { have_a = true; });
    add_common(c_eval);

    CLI::App* c_conv = app.add_subcommand("converge", "slope study over an a-grid");
    c_conv->add_option("--a-grid", a_grid_spec, "START:STOP:POINTS (log spaced)");
    add_common(c_conv);

    CLI::App* c_gold = app.add_subcommand("golden", "regenerate golden records");
    c_gold->add_option("--out", golden_dir, "golden directory");
    add_common(c_gold);

    CLI::App* c_hyp = app.add_subcommand("hypotheses", "check theorem hypotheses");
    c_hyp->add_option("--m", m, "smoothness order m");
    add_common(c_hyp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    wasym::RunConfig cfg;
    if (app.got_subcommand(c_eval)) cfg.command = wasym::RunConfig::Command::eval;
    if (app.got_subcommand(c_conv)) cfg.command = wasym::RunConfig::Command::converge;
    if (app.got_subcommand(c_gold)) cfg.command = wasym::RunConfig::Command::golden;
    if (app.got_subcommand(c_hyp))
        cfg.command = wasym::RunConfig::Command::hypotheses;

    try {
        if (!config_path.empty()) {
            const char* section = app.got_subcommand(c_eval)       ? "eval"
                                  : app.got_subcommand(c_conv)     ? "converge"
                                  : app.got_subcommand(c_gold)     ? "golden"
                                                                   : "hypotheses";
            wasym::apply_config(cfg,
                                wasym::parse_config_file(config_path, section));
        }
        // CLI flags override file values
        if (!profile.empty()) cfg.profile_name = profile;
        if (!wavelet.empty()) cfg.wavelet_spec = wavelet;
        if (c_eval->count("--b") || c_conv->count("--b") ||
            c_hyp->count("--b") || c_gold->count("--b"))
            cfg.b = b;
        if (have_a) cfg.a = a;
        if (!a_grid_spec.empty()) {
            wasym::GridSpec g;
            if (std::sscanf(a_grid_spec.c_str(), "%lf:%lf:%d", &g.start, &g.stop,
                            &g.points) != 3)
                throw std::invalid_argument("bad --a-grid '" + a_grid_spec + "'");
            cfg.a_grid = g;
        }
        if (n > 0) cfg.n_terms = n;
        if (m >= 0) cfg.m = m;
        if (!csv.empty()) cfg.csv_path = csv;
        if (!json.empty()) cfg.json_path = json;
        if (!golden_dir.empty()) cfg.golden_dir = golden_dir;
        if (abs_tol > 0.0) cfg.quadrature.abs_tol = abs_tol;
        if (rel_tol > 0.0) cfg.quadrature.rel_tol = rel_tol;
        if (max_subdiv > 0) cfg.quadrature.max_subdivisions = max_subdiv;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    return wasym::run_command(cfg);
}
