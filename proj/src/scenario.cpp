#include "bgk/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bgk/chu.hpp"

namespace bgk {

std::string_view to_string(ModelKind kind) {
    return kind == ModelKind::Classic ? "classic" : "chu";
}

ModelKind parse_model(std::string_view name) {
    if (name == "classic") return ModelKind::Classic;
    if (name == "chu") return ModelKind::Chu;
    throw ConfigError("unknown model '" + std::string(name) + "' (classic|chu)");
}

std::unique_ptr<KineticModel> make_model(ModelKind kind, double R) {
    if (kind == ModelKind::Chu) return std::make_unique<ChuModel>(R);
    return std::make_unique<ClassicModel>(R);
}

double smooth_velocity(double x) {
    const double a = 10.0 * x - 1.0;
    const double b = 10.0 * x + 3.0;
    return 0.1 * std::exp(-a * a) - 2.0 * std::exp(-b * b);
}

PhaseField Scenario::initial_field(const PhaseGrid& g, const KineticModel& model) const {
    if (!moments) throw ConfigError("scenario '" + name + "' has no initial moments");
    const int nc = model.components();
    const auto width = static_cast<std::size_t>(nc * g.velocity_nodes());
    PhaseField f(nc, g);
    std::vector<double> rows(width), other(width);
    const double tol = 1e-9 * g.dx();
    for (int i = 0; i < g.space_nodes(); ++i) {
        const double x = g.x(i);
        if (riemann && std::abs(x - riemann->x_split) < tol) {
            model.equilibrium(riemann->left, g, rows);
            model.equilibrium(riemann->right, g, other);
            for (std::size_t m = 0; m < width; ++m) rows[m] = 0.5 * (rows[m] + other[m]);
        } else {
            model.equilibrium(moments(x), g, rows);
        }
        f.scatter_rows(i, rows);
    }
    return f;
}

std::optional<ExactRiemann> Scenario::fluid_limit(double gamma) const {
    if (!riemann) return std::nullopt;
    const auto euler = [](const HydroState& s) { return EulerState{s.rho, s.u, s.rho * s.T}; };
    return ExactRiemann(euler(riemann->left), euler(riemann->right), gamma);
}

namespace {

Scenario riemann_scenario(std::string name, ModelKind model, HydroState left, HydroState right,
                          double t_final) {
    Scenario s;
    s.name = std::move(name);
    s.model = model;
    s.x0 = 0.0;
    s.xN = 1.0;
    s.boundary = Boundary::FreeFlow;
    s.nv = 30;
    s.vmax = 10.0;
    s.cfl = 2.0;
    s.t_final = t_final;
    s.riemann = RiemannData{left, right, 0.5};
    s.moments = [left, right](double x) { return x < 0.5 ? left : right; };
    return s;
}

Scenario smooth_scenario(std::string name, ModelKind model) {
    Scenario s;
    s.name = std::move(name);
    s.model = model;
    s.moments = [](double x) { return HydroState{1.0, smooth_velocity(x), 1.0}; };
    if (model == ModelKind::Classic) {
        s.smooth_until = 0.32;
    } else {
        s.boundary = Boundary::Reflective;
        s.cfl = 2.0;
        s.t_final = 0.4;
    }
    return s;
}

Scenario uniform_scenario(std::string name, ModelKind model) {
    Scenario s;
    s.name = std::move(name);
    s.model = model;
    s.t_final = 1.0;
    s.moments = [](double) { return HydroState{1.0, 0.0, 1.0}; };
    return s;
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"smooth", "riemann", "uniform", "chu-smooth", "chu-riemann", "chu-uniform"};
}

Scenario builtin_scenario(const std::string& name) {
    if (name == "smooth") return smooth_scenario(name, ModelKind::Classic);
    if (name == "chu-smooth") return smooth_scenario(name, ModelKind::Chu);
    if (name == "riemann")
        return riemann_scenario(name, ModelKind::Classic, {2.25, 0.0, 1.125},
                                {3.0 / 7.0, 0.0, 1.0 / 6.0}, 0.16);
    if (name == "chu-riemann")
        return riemann_scenario(name, ModelKind::Chu, {1.0, 0.0, 5.0 / 3.0},
                                {1.0 / 8.0, 0.0, 4.0 / 3.0}, 0.25);
    if (name == "uniform") return uniform_scenario(name, ModelKind::Classic);
    if (name == "chu-uniform") return uniform_scenario(name, ModelKind::Chu);
    std::string known;
    for (const auto& n : scenario_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown scenario '" + name + "' (built-in: " + known + ")");
}

namespace {

HydroState state_from_json(const nlohmann::json& j) {
    HydroState s{j.at("rho").get<double>(), j.value("u", 0.0), j.at("T").get<double>()};
    if (!(s.rho > 0.0) || !(s.T > 0.0)) throw ConfigError("scenario state needs rho > 0 and T > 0");
    return s;
}

}  // namespace

Scenario parse_scenario_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("scenario JSON: ") + e.what());
    }
    try {
        Scenario s = j.contains("base") ? builtin_scenario(j.at("base").get<std::string>())
                                        : uniform_scenario("custom", ModelKind::Classic);
        if (j.contains("name")) s.name = j.at("name").get<std::string>();
        if (j.contains("model")) s.model = parse_model(j.at("model").get<std::string>());
        s.x0 = j.value("x0", s.x0);
        s.xN = j.value("xN", s.xN);
        if (j.contains("bc")) s.boundary = parse_boundary(j.at("bc").get<std::string>());
        s.nv = j.value("nv", s.nv);
        s.vmax = j.value("vmax", s.vmax);
        s.cfl = j.value("cfl", s.cfl);
        s.t_final = j.value("tfinal", s.t_final);
        if (j.contains("uniform")) {
            const HydroState st = state_from_json(j.at("uniform"));
            s.moments = [st](double) { return st; };
            s.riemann.reset();
            s.smooth_until.reset();
        }
        if (j.contains("riemann")) {
            const auto& r = j.at("riemann");
            RiemannData data{state_from_json(r.at("left")), state_from_json(r.at("right")),
                             r.value("x_split", 0.5 * (s.x0 + s.xN))};
            s.riemann = data;
            s.moments = [data](double x) { return x < data.x_split ? data.left : data.right; };
            s.smooth_until.reset();
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("scenario JSON: ") + e.what());
    }
}

Scenario load_scenario(const std::string& name_or_path) {
    if (!std::filesystem::is_regular_file(name_or_path)) return builtin_scenario(name_or_path);
    std::ifstream in(name_or_path);
    if (!in) throw ConfigError("cannot read scenario file '" + name_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str());
}

}  // namespace bgk
