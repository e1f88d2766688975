// bgk-sl: run scenarios and reproduce the convergence, CFL and cost studies.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bgk/harness.hpp"
#include "bgk/moments.hpp"
#include "bgk/report_io.hpp"

namespace {

using nlohmann::json;

struct Options {
    std::string config;
    std::string scenario;
    std::vector<std::string> schemes;
    std::string interp;
    std::string bc;
    std::vector<double> eps;
    std::vector<int> nx;
    int nv = 0;
    double vmax = 0.0;
    std::vector<double> cfl;
    double tfinal = 0.0;
    std::string out;
    int threads = 0;
    bool seed_meta = false;
    bool parallel_runs = false;
};

/// Which flags were given on the command line.
struct Given {
    CLI::Option* scenario;
    CLI::Option* schemes;
    CLI::Option* interp;
    CLI::Option* bc;
    CLI::Option* eps;
    CLI::Option* nx;
    CLI::Option* nv;
    CLI::Option* vmax;
    CLI::Option* cfl;
    CLI::Option* tfinal;
    CLI::Option* out;
    CLI::Option* threads;
    CLI::Option* seed_meta;
    CLI::Option* parallel_runs;
};

Given add_options(CLI::App* app, Options& o) {
    Given g{};
    app->add_option("--config", o.config, "JSON file mirroring the flags; flags win");
    g.scenario = app->add_option("--scenario", o.scenario, "built-in name or scenario JSON file");
    g.schemes = app->add_option("--scheme", o.schemes,
                                "Euler1|RK2|RK3|BDF2|BDF3|LatEuler|LatBDF2|LatBDF3|LatRK2, "
                                "optionally suffixed L|W23|W35");
    g.interp = app->add_option("--interp", o.interp, "linear|weno23|weno35|none");
    g.bc = app->add_option("--bc", o.bc, "periodic|reflective|freeflow");
    g.eps = app->add_option("--eps", o.eps, "relaxation time(s)");
    g.nx = app->add_option("--nx", o.nx, "space cell count(s)");
    g.nv = app->add_option("--nv", o.nv, "velocity half-count");
    g.vmax = app->add_option("--vmax", o.vmax, "velocity bound");
    g.cfl = app->add_option("--cfl", o.cfl, "CFL number(s)");
    g.tfinal = app->add_option("--tfinal", o.tfinal, "final time");
    g.out = app->add_option("--out", o.out, "output CSV (stdout when absent)");
    g.threads = app->add_option("--threads", o.threads, "worker threads per run");
    g.seed_meta = app->add_flag("--seed-meta", o.seed_meta, "write <out>.meta.json");
    g.parallel_runs = app->add_flag("--parallel-runs", o.parallel_runs,
                                    "run independent study members concurrently");
    return g;
}

template <class T>
std::vector<T> as_list(const json& j) {
    if (j.is_array()) return j.get<std::vector<T>>();
    return {j.get<T>()};
}

/// Fills options not given on the command line from the config file.
void merge_config(Options& o, const Given& g) {
    if (o.config.empty()) return;
    std::ifstream in(o.config);
    if (!in) throw bgk::ConfigError("cannot read config file '" + o.config + "'");
    json j;
    try {
        j = json::parse(in);
        auto take = [&](const char* key, CLI::Option* flag, auto& field) {
            if (flag->count() == 0 && j.contains(key))
                field = j.at(key).get<std::decay_t<decltype(field)>>();
        };
        auto take_list = [&](const char* key, CLI::Option* flag, auto& field) {
            using T = typename std::decay_t<decltype(field)>::value_type;
            if (flag->count() == 0 && j.contains(key)) field = as_list<T>(j.at(key));
        };
        take("scenario", g.scenario, o.scenario);
        take_list("scheme", g.schemes, o.schemes);
        take("interp", g.interp, o.interp);
        take("bc", g.bc, o.bc);
        take_list("eps", g.eps, o.eps);
        take_list("nx", g.nx, o.nx);
        take("nv", g.nv, o.nv);
        take("vmax", g.vmax, o.vmax);
        take_list("cfl", g.cfl, o.cfl);
        take("tfinal", g.tfinal, o.tfinal);
        take("out", g.out, o.out);
        take("threads", g.threads, o.threads);
        take("seed-meta", g.seed_meta, o.seed_meta);
        take("parallel-runs", g.parallel_runs, o.parallel_runs);
    } catch (const json::exception& e) {
        throw bgk::ConfigError("config file '" + o.config + "': " + e.what());
    }
}

struct Resolved {
    bgk::Scenario scenario;
    std::string scenario_source;
    std::vector<bgk::SchemeConfig> schemes;
    std::optional<bgk::Boundary> bc;
    bgk::StudyOptions study;
};

Resolved resolve(const Options& o, const std::vector<std::string>& default_schemes) {
    Resolved r;
    r.scenario_source = o.scenario.empty() ? "smooth" : o.scenario;
    r.scenario = bgk::load_scenario(r.scenario_source);
    const auto labels = o.schemes.empty() ? default_schemes : o.schemes;
    for (const auto& label : labels) {
        bgk::SchemeConfig cfg = bgk::parse_scheme_label(label);
        if (!o.interp.empty()) cfg.interpolation = bgk::parse_interpolation(o.interp);
        if (o.threads < 0) throw bgk::ConfigError("--threads must be >= 1");
        cfg.threads = o.threads > 0 ? o.threads : 1;
        r.schemes.push_back(cfg);
    }
    if (!o.bc.empty()) r.bc = bgk::parse_boundary(o.bc);
    r.study = bgk::study_defaults(r.scenario);
    if (o.nv != 0) r.study.nv = o.nv;
    if (o.vmax != 0.0) r.study.vmax = o.vmax;
    if (o.tfinal != 0.0) r.study.t_final = o.tfinal;
    if (o.cfl.size() == 1) r.study.cfl = o.cfl.front();
    r.study.threads = o.threads > 0 ? o.threads : 1;
    r.study.boundary = r.bc;
    r.study.parallel_runs = o.parallel_runs;
    return r;
}

json base_meta(const std::string& command, const Options& o, const Resolved& r) {
    json meta;
    meta["command"] = command;
    meta["scenario"] = r.scenario_source;
    json schemes = json::array();
    for (const auto& s : r.schemes) schemes.push_back(bgk::scheme_label(s));
    meta["scheme"] = schemes;
    if (!o.interp.empty()) meta["interp"] = o.interp;
    meta["bc"] = std::string(bgk::to_string(r.bc.value_or(r.scenario.boundary)));
    meta["nv"] = r.study.nv;
    meta["vmax"] = r.study.vmax;
    meta["tfinal"] = r.study.t_final;
    meta["threads"] = r.study.threads;
    return meta;
}

class Output {
  public:
    explicit Output(const std::string& path) : path_(path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw bgk::ConfigError("cannot open output '" + path + "'");
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    void write_meta(const json& meta) const {
        if (path_.empty()) throw bgk::ConfigError("--seed-meta needs --out");
        std::ofstream m(path_ + ".meta.json");
        m << meta.dump(2) << '\n';
    }

  private:
    std::string path_;
    std::ofstream file_;
};

const bgk::SchemeConfig& single_scheme(const Resolved& r, const char* command) {
    if (r.schemes.size() != 1)
        throw bgk::ConfigError(std::string(command) + " takes exactly one --scheme");
    return r.schemes.front();
}

int command_run(const Options& o, Output& out) {
    Resolved r = resolve(o, {"Euler1"});
    const auto& scheme = single_scheme(r, "run");
    if (o.nx.size() > 1 || o.eps.size() > 1 || o.cfl.size() > 1)
        throw bgk::ConfigError("run takes a single --nx, --eps and --cfl");
    bgk::RunSpec spec = bgk::make_run_spec(r.scenario, scheme, o.nx.empty() ? 100 : o.nx.front());
    spec.scenario_source = r.scenario_source;
    if (r.bc) spec.scheme.boundary = *r.bc;
    spec.scheme.eps = o.eps.empty() ? 1e-4 : o.eps.front();
    spec.nv = r.study.nv;
    spec.vmax = r.study.vmax;
    spec.cfl = r.study.cfl;
    spec.t_final = r.study.t_final;
    const bgk::RunReport report = bgk::run(spec, true);
    bgk::write_run_csv(out.stream(), report);
    if (o.seed_meta) {
        json meta = base_meta("run", o, r);
        meta["config"] = json::parse(report.config_echo);
        meta["steps"] = report.steps;
        meta["cfl_actual"] = report.cfl_actual;
        if (report.fluid_L1_rho) meta["fluid_L1_rho"] = *report.fluid_L1_rho;
        if (report.failure) meta["failure"] = *report.failure;
        out.write_meta(meta);
    }
    if (report.failure) {
        std::cerr << "bgk-sl: numerical failure: " << *report.failure << '\n';
        return 3;
    }
    return 0;
}

int command_converge(const Options& o, Output& out) {
    Resolved r = resolve(o, {"Euler1"});
    const auto& scheme = single_scheme(r, "converge");
    const std::vector<int> nx = o.nx.empty() ? std::vector<int>{40, 80, 160, 320} : o.nx;
    const std::vector<double> eps = o.eps.empty() ? std::vector<double>{1e-2, 1e-4, 1e-6} : o.eps;
    if (o.cfl.size() > 1) throw bgk::ConfigError("converge takes a single --cfl");
    if (o.seed_meta) {
        json meta = base_meta("converge", o, r);
        meta["nx"] = nx;
        meta["eps"] = eps;
        meta["cfl"] = r.study.cfl;
        out.write_meta(meta);
    }
    const auto table = bgk::convergence_study(r.scenario, scheme, nx, eps, r.study);
    for (const auto& w : table.warnings) std::cerr << "bgk-sl: warning: " << w << '\n';
    bgk::write_convergence_csv(out.stream(), table);
    return 0;
}

int command_cfl_sweep(const Options& o, Output& out) {
    Resolved r = resolve(o, {"RK2W23"});
    const auto& scheme = single_scheme(r, "cfl-sweep");
    if (o.tfinal == 0.0) r.study.t_final = 0.3;
    const double eps = o.eps.empty() ? 1e-4 : o.eps.front();
    if (o.eps.size() > 1) throw bgk::ConfigError("cfl-sweep takes a single --eps");
    if (o.nx.size() > 1) throw bgk::ConfigError("cfl-sweep takes a single (coarse) --nx");
    const int nx = o.nx.empty() ? 160 : o.nx.front();
    const std::vector<double> cfl = o.cfl.empty() ? bgk::default_cfl_grid() : o.cfl;
    bgk::SchemeConfig cfg = scheme;
    cfg.eps = eps;
    const auto rows = bgk::cfl_sweep(r.scenario, cfg, cfl, nx, r.study);
    if (o.seed_meta) {
        json meta = base_meta("cfl-sweep", o, r);
        meta["eps"] = eps;
        meta["nx"] = {nx, 2 * nx};
        json grid = json::array();
        for (const auto& row : rows) grid.push_back({row.cfl_requested, row.cfl_actual});
        meta["cfl_grid"] = grid;
        out.write_meta(meta);
    }
    bgk::write_cfl_csv(out.stream(), rows);
    int failed = 0;
    for (const auto& row : rows) failed += row.failure ? 1 : 0;
    if (failed > 0) {
        std::cerr << "bgk-sl: numerical failure at " << failed << " CFL value(s)\n";
        return 3;
    }
    return 0;
}

int command_cost(const Options& o, Output& out) {
    Resolved r = resolve(o, {"LatBDF3", "BDF3W23"});
    const std::vector<int> nx = o.nx.empty() ? std::vector<int>{40, 80, 160, 320} : o.nx;
    if (o.eps.size() > 1) throw bgk::ConfigError("cost takes a single --eps");
    const double eps = o.eps.empty() ? 1e-4 : o.eps.front();
    if (o.seed_meta) {
        json meta = base_meta("cost", o, r);
        meta["nx"] = nx;
        meta["eps"] = eps;
        meta["reference"] = bgk::scheme_label(bgk::cost_reference_scheme());
        out.write_meta(meta);
    }
    const auto rows = bgk::cost_study(r.scenario, r.schemes, nx, eps, r.study);
    bgk::write_cost_csv(out.stream(), rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-Lagrangian BGK solver"};
    app.require_subcommand(1);
    Options opts;
    std::vector<std::pair<CLI::App*, Given>> subs;
    for (const char* name : {"run", "converge", "cfl-sweep", "cost"}) {
        CLI::App* sub = app.add_subcommand(name);
        subs.emplace_back(sub, add_options(sub, opts));
    }
    subs[0].first->description("march one scenario and write moment profiles");
    subs[1].first->description("successive-refinement order table");
    subs[2].first->description("error against CFL at fixed resolution pair");
    subs[3].first->description("wall time against error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::unique_ptr<Output> out;
    try {
        for (auto& [sub, given] : subs) {
            if (!sub->parsed()) continue;
            merge_config(opts, given);
            out = std::make_unique<Output>(opts.out);
            const std::string name = sub->get_name();
            if (name == "run") return command_run(opts, *out);
            if (name == "converge") return command_converge(opts, *out);
            if (name == "cfl-sweep") return command_cfl_sweep(opts, *out);
            return command_cost(opts, *out);
        }
    } catch (const bgk::ConfigError& e) {
        std::cerr << "bgk-sl: configuration error: " << e.what() << '\n';
        return 2;
    } catch (const bgk::NumericalError& e) {
        if (out) bgk::write_failure(out->stream(), e.what());
        std::cerr << "bgk-sl: numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bgk-sl: configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "bgk-sl: configuration error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
