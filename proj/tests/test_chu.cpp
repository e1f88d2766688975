#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "bgk/chu.hpp"
#include "bgk/integrators.hpp"

using namespace bgk;

namespace {

std::vector<double> gauss_row(const PhaseGrid& g, double rho, double u, double T) {
    std::vector<double> row(g.velocity_nodes());
    for (int k = 0; k < g.velocity_nodes(); ++k) {
        const double w = g.velocity_at(k) - u;
        row[k] = rho / std::sqrt(2.0 * std::numbers::pi * T) * std::exp(-w * w / (2.0 * T));
    }
    return row;
}

ReducedField pair_field(const PhaseGrid& g, double (*rho)(double), double (*u)(double),
                        double (*T)(double), double g2_factor) {
    ReducedField f(2, g);
    for (int i = 0; i < g.space_nodes(); ++i) {
        const double x = g.x(i);
        const auto row = gauss_row(g, rho(x), u(x), T(x));
        for (int k = 0; k < g.velocity_nodes(); ++k) {
            f(0, i, k) = row[k];
            f(1, i, k) = g2_factor * T(x) * row[k];
        }
    }
    return f;
}

struct RawMoments {
    double rho = 0.0, momentum = 0.0, energy = 0.0;
};

// rho, rho u and 2 x total energy (sum v^2 g1 + sum g2).
RawMoments raw(std::span<const double> g1, std::span<const double> g2, const PhaseGrid& g) {
    RawMoments m;
    for (int k = 0; k < g.velocity_nodes(); ++k) {
        const double v = g.velocity_at(k);
        m.rho += g1[k] * g.dv();
        m.momentum += v * g1[k] * g.dv();
        m.energy += (v * v * g1[k] + g2[k]) * g.dv();
    }
    return m;
}

}  // namespace

TEST_CASE("moments of the equilibrium pair") {
    const PhaseGrid g(0.0, 1.0, 10, 10.0, 30);
    const auto m1 = gauss_row(g, 1.0, 0.0, 1.0);
    std::vector<double> m2(m1.size());
    for (std::size_t k = 0; k < m1.size(); ++k) m2[k] = 2.0 * m1[k];
    const ChuMoments m = chu_moments(m1, m2, g);
    CHECK(std::abs(m.rho - 1.0) < 1e-10);
    CHECK(std::abs(m.momentum) < 1e-10);
    CHECK(std::abs(m.T - 1.0) < 1e-10);
    CHECK(std::abs(m.thermal - 3.0) < 1e-10);

    const auto s1 = gauss_row(g, 0.125, 0.4, 4.0 / 3.0);
    std::vector<double> s2(s1.size());
    for (std::size_t k = 0; k < s1.size(); ++k) s2[k] = 2.0 * (4.0 / 3.0) * s1[k];
    const HydroState h = chu_moments(s1, s2, g).hydro();
    CHECK(h.rho == doctest::Approx(0.125).epsilon(1e-10));
    CHECK(h.u == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(h.T == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("degenerate Chu moments") {
    const PhaseGrid g(0.0, 1.0, 10, 10.0, 30);
    std::vector<double> g1(g.velocity_nodes(), 0.0), g2(g.velocity_nodes(), 0.0);
    CHECK_THROWS_AS(chu_moments(g1, g2, g), DegenerateMoments);
    g1[37] = 1.0 / g.dv();
    CHECK_THROWS_AS(chu_moments(g1, g2, g), DegenerateMoments);
    std::vector<double> shorter(5, 1.0);
    CHECK_THROWS_AS(chu_moments(shorter, g2, g), std::invalid_argument);
}

TEST_CASE("raw Chu moments are linear") {
    const PhaseGrid g(0.0, 1.0, 10, 10.0, 30);
    const auto a1 = gauss_row(g, 1.0, 0.3, 1.2), b1 = gauss_row(g, 0.5, -0.6, 0.7);
    std::vector<double> a2(a1.size()), b2(a1.size()), c1(a1.size()), c2(a1.size());
    for (std::size_t k = 0; k < a1.size(); ++k) {
        a2[k] = 1.5 * a1[k];
        b2[k] = 0.9 * b1[k];
        c1[k] = 0.3 * a1[k] + 0.7 * b1[k];
        c2[k] = 0.3 * a2[k] + 0.7 * b2[k];
    }
    const ChuMoments ma = chu_moments(a1, a2, g), mb = chu_moments(b1, b2, g),
                     mc = chu_moments(c1, c2, g);
    auto total = [](const ChuMoments& m) { return m.thermal + m.momentum * m.momentum / m.rho; };
    CHECK(mc.rho == doctest::Approx(0.3 * ma.rho + 0.7 * mb.rho).epsilon(1e-14));
    CHECK(mc.momentum == doctest::Approx(0.3 * ma.momentum + 0.7 * mb.momentum).epsilon(1e-13));
    CHECK(total(mc) == doctest::Approx(0.3 * total(ma) + 0.7 * total(mb)).epsilon(1e-13));
}

TEST_CASE("equilibrium pair") {
    const PhaseGrid g(0.0, 1.0, 10, 10.0, 30);
    std::vector<double> m1(g.velocity_nodes()), m2(g.velocity_nodes());
    chu_equilibrium({1.0, 0.0, 1.0}, g, 1.0, m1, m2);
    const int k0 = g.nv();
    CHECK(m1[k0] == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
    CHECK(m2[k0] == doctest::Approx(2.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));

    const HydroState s{0.7, -0.35, 1.4};
    chu_equilibrium(s, g, 1.0, m1, m2);
    for (std::size_t k = 0; k < m1.size(); ++k) CHECK(m2[k] == doctest::Approx(2.8 * m1[k]).epsilon(1e-15));
    const HydroState back = chu_moments(m1, m2, g).hydro();
    CHECK(back.rho == doctest::Approx(s.rho).epsilon(1e-12));
    CHECK(back.u == doctest::Approx(s.u).epsilon(1e-12));
    CHECK(back.T == doctest::Approx(s.T).epsilon(1e-12));

    std::vector<double> d1(m1.size()), d2(m1.size());
    chu_equilibrium({1.4, -0.35, 1.4}, g, 1.0, d1, d2);
    for (std::size_t k = 0; k < m1.size(); ++k) {
        CHECK(d1[k] == doctest::Approx(2.0 * m1[k]).epsilon(1e-15));
        CHECK(d2[k] == doctest::Approx(2.0 * m2[k]).epsilon(1e-15));
    }
}

TEST_CASE("Chu model energy relation") {
    const ChuModel chu;
    CHECK(chu.components() == 2);
    CHECK(chu.velocity_dimension() == 3);
    CHECK(chu.gas_gamma() == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    const HydroState s{1.2, 0.5, 0.9};
    CHECK(chu.total_energy(s) == doctest::Approx(0.5 * 1.2 * 0.25 + 1.5 * 1.2 * 0.9).epsilon(1e-15));
    // Discrete total energy of the equilibrium pair: (sum v^2 M1 + sum M2) dv / 2.
    const PhaseGrid g(0.0, 1.0, 10, 10.0, 30);
    std::vector<double> m1(g.velocity_nodes()), m2(g.velocity_nodes());
    chu_equilibrium(s, g, 1.0, m1, m2);
    CHECK(0.5 * raw(m1, m2, g).energy == doctest::Approx(chu.total_energy(s)).epsilon(1e-12));
}

TEST_CASE("Chu implicit solve conserves and satisfies the temperature identity") {
    const PhaseGrid g(0.0, 1.0, 10, 16.0, 32);
    const ChuModel model;
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> T(0.5, 1.0), u(-1.0, 1.0), rho(0.5, 2.0), c(1.0, 3.0);
    const double machine = std::numeric_limits<double>::epsilon();
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = gauss_row(g, rho(rng), u(rng), T(rng));
        const auto b = gauss_row(g, rho(rng), u(rng), T(rng));
        const double ca = c(rng), cb = c(rng);
        std::vector<double> rows(2 * a.size()), eq(rows.size()), out(rows.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            rows[k] = 0.5 * (a[k] + b[k]);
            rows[a.size() + k] = 0.5 * (ca * a[k] + cb * b[k]);
        }
        const std::span<const double> all(rows);
        const auto n = a.size();
        const ChuMoments before = chu_moments(all.subspan(0, n), all.subspan(n, n), g);
        model.equilibrium(before.hydro(), g, eq);
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double v = g.velocity_at(static_cast<int>(k));
            norm += (1.0 + std::abs(v) + v * v) * rows[k] * g.dv() + rows[n + k] * g.dv();
        }
        for (double tau : {0.0, 1.0, 1e6}) {
            for (std::size_t m = 0; m < rows.size(); ++m) out[m] = relaxation_solve(rows[m], eq[m], tau);
            const std::span<const double> o(out);
            const ChuMoments after = chu_moments(o.subspan(0, n), o.subspan(n, n), g);
            CHECK(std::abs(after.rho - before.rho) <= 10 * machine * norm);
            CHECK(std::abs(after.momentum - before.momentum) <= 10 * machine * norm);
            CHECK(std::abs(after.thermal - before.thermal) <= 10 * machine * norm);
            // Temperature identity with the u of the input rows.
            const double ubar = before.momentum / before.rho;
            double identity = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double w = g.velocity_at(static_cast<int>(k)) - ubar;
                identity += w * w * (eq[k] - out[k]) * g.dv() + (eq[n + k] - out[n + k]) * g.dv();
            }
            CHECK(std::abs(identity) <= 10 * machine * norm);
        }
    }
}

TEST_CASE("Chu steps") {
    const PhaseGrid g(0.0, 1.0, 20, 10.0, 30);
    const ChuModel model;
    const ReducedField eq = pair_field(
        g, [](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 1.0; }, 2.0);
    for (auto interp : {Interpolation::Linear, Interpolation::WENO23, Interpolation::WENO35}) {
        SchemeConfig cfg;
        cfg.interpolation = interp;
        cfg.boundary = Boundary::Reflective;
        cfg.eps = 1e-3;
        const StepContext ctx = make_context(g, model, cfg, 0.004);
        const ReducedField hist[3] = {eq, eq, eq};
        for (auto integ : {Integrator::Euler1, Integrator::RK2, Integrator::RK3, Integrator::BDF2,
                           Integrator::BDF3})
            CHECK(max_abs_difference(step_chu(hist, integ, ctx), eq) < 1e-14);
    }

    // Non-equilibrium pair: g2 is not 2 R T g1.
    const ReducedField f = pair_field(
        g, [](double x) { return 1.0 + 0.2 * x; }, [](double x) { return 0.3 * x; },
        [](double x) { return 1.0 + 0.1 * x * x; }, 1.4);
    SchemeConfig cfg;
    cfg.boundary = Boundary::FreeFlow;
    cfg.eps = 1e-14;
    const StepContext ctx = make_context(g, model, cfg, 0.004);
    const ReducedField one[1] = {f};
    PhaseField target;
    relax(transport(f, ctx, 1.0), ctx, 0.0, &target);
    const ReducedField next = step_chu(one, Integrator::Euler1, ctx);
    CHECK(max_abs_difference(next, target) < 1e-10);

    cfg.eps = 0.05;
    const StepContext mild = make_context(g, model, cfg, 0.004);
    const ReducedField base = transport(f, mild, 1.0);
    const ReducedField upd = step_chu(one, Integrator::Euler1, mild);
    std::vector<double> rb(2 * g.velocity_nodes()), ru(rb.size());
    const auto n = static_cast<std::size_t>(g.velocity_nodes());
    for (int i = 0; i < g.space_nodes(); ++i) {
        base.gather_rows(i, rb);
        upd.gather_rows(i, ru);
        const std::span<const double> sb(rb), su(ru);
        const ChuMoments mb = chu_moments(sb.subspan(0, n), sb.subspan(n, n), g);
        const ChuMoments mu = chu_moments(su.subspan(0, n), su.subspan(n, n), g);
        CHECK(mu.rho == doctest::Approx(mb.rho).epsilon(1e-14));
        CHECK(mu.momentum == doctest::Approx(mb.momentum).epsilon(1e-13));
        CHECK(mu.T == doctest::Approx(mb.T).epsilon(1e-13));
    }

    const ClassicModel classic;
    const StepContext wrong = make_context(g, classic, cfg, 0.004);
    CHECK_THROWS_AS(step_chu(one, Integrator::Euler1, wrong), std::invalid_argument);
}
