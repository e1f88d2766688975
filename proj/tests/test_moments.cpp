#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "bgk/moments.hpp"

using namespace bgk;

namespace {

// Composite Simpson rule on [-a, a] in long double; the Gaussian tails past
// a = 14 are below 1e-40.
template <class F>
long double simpson(F f, long double a = 14.0L, int n = 40000) {
    const long double h = 2.0L * a / n;
    long double sum = f(-a) + f(a);
    for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0L : 2.0L) * f(-a + k * h);
    return sum * h / 3.0L;
}

long double gaussian(long double rho, long double u, long double T, long double v) {
    return rho / std::sqrt(2.0L * std::numbers::pi_v<long double> * T) *
           std::exp(-(v - u) * (v - u) / (2.0L * T));
}

}  // namespace

TEST_CASE("moments of the zero field") {
    const PhaseGrid g(-1.0, 1.0, 10, 10.0, 20);
    const std::vector<double> row(g.velocity_nodes(), 0.0);
    const MacroMoments m = discrete_moments(row, g);
    CHECK(m.rho == 0.0);
    CHECK(m.momentum == 0.0);
    CHECK(m.energy == 0.0);
    CHECK_THROWS_AS(m.velocity(), DegenerateMoments);
    CHECK_THROWS_AS(m.temperature(), DegenerateMoments);
    CHECK_THROWS_AS(maxwellian_eval(m, 0.0), DegenerateMoments);
}

TEST_CASE("discrete delta") {
    const PhaseGrid g(-1.0, 1.0, 10, 10.0, 20);
    for (int k : {0, 7, 20, 33, 40}) {
        std::vector<double> row(g.velocity_nodes(), 0.0);
        row[k] = 1.0 / g.dv();
        const MacroMoments m = discrete_moments(row, g);
        const double v = g.velocity_at(k);
        CHECK(m.rho == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(m.momentum == doctest::Approx(v).epsilon(1e-15));
        CHECK(m.energy == doctest::Approx(0.5 * v * v).epsilon(1e-15));
    }
}

TEST_CASE("sampled Maxwellian matches the quadrature oracle") {
    const PhaseGrid g(-1.0, 1.0, 100, 10.0, 20);
    const HydroState states[] = {{1.0, 0.0, 1.0}, {2.25, 0.3, 1.125}, {0.7, -1.2, 0.8}};
    for (const HydroState& s : states) {
        const long double rho_q = simpson([&](long double v) { return gaussian(s.rho, s.u, s.T, v); });
        const long double mom_q =
            simpson([&](long double v) { return v * gaussian(s.rho, s.u, s.T, v); });
        const long double en_q =
            simpson([&](long double v) { return 0.5L * v * v * gaussian(s.rho, s.u, s.T, v); });

        std::vector<double> row(g.velocity_nodes());
        maxwellian_row(s, g, 1.0, row);
        const MacroMoments m = discrete_moments(row, g);
        CHECK(std::abs(m.rho - static_cast<double>(rho_q)) < 1e-10);
        CHECK(std::abs(m.momentum - static_cast<double>(mom_q)) < 1e-10);
        CHECK(std::abs(m.energy - static_cast<double>(en_q)) < 1e-10);

        const HydroState back = m.hydro();
        CHECK(back.rho == doctest::Approx(s.rho).epsilon(1e-10));
        CHECK(back.u == doctest::Approx(s.u).epsilon(1e-10));
        CHECK(back.T == doctest::Approx(s.T).epsilon(1e-10));
    }
    // Standard state: (1, 0, 1/2).
    std::vector<double> row(g.velocity_nodes());
    maxwellian_row({1.0, 0.0, 1.0}, g, 1.0, row);
    const MacroMoments m = discrete_moments(row, g);
    CHECK(std::abs(m.rho - 1.0) < 1e-10);
    CHECK(std::abs(m.momentum) < 1e-10);
    CHECK(std::abs(m.energy - 0.5) < 1e-10);
}

TEST_CASE("Maxwellian evaluation") {
    CHECK(maxwellian({1.0, 0.0, 1.0}, 0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
    const HydroState s{1.3, 0.4, 0.7};
    double previous = maxwellian(s, s.u);
    for (double w = 0.05; w < 6.0; w += 0.05) {
        CHECK(maxwellian(s, s.u + w) == doctest::Approx(maxwellian(s, s.u - w)).epsilon(1e-14));
        const double now = maxwellian(s, s.u + w);
        CHECK(now > 0.0);
        CHECK(now < previous);
        previous = now;
    }
    const MacroMoments mom{1.3, 1.3 * 0.4, 0.5 * 1.3 * (0.4 * 0.4 + 0.7)};
    CHECK(maxwellian_eval(mom, 1.1) == doctest::Approx(maxwellian(s, 1.1)).epsilon(1e-13));
    CHECK(maxwellian({2.0, 0.0, 0.5}, 0.3, 2.0) ==
          doctest::Approx(maxwellian({2.0, 0.0, 1.0}, 0.3, 1.0)).epsilon(1e-15));
}

TEST_CASE("degenerate temperature is rejected") {
    // Energy below the kinetic part: negative temperature.
    const MacroMoments m{1.0, 1.0, 0.4};
    CHECK_THROWS_AS(m.temperature(), DegenerateMoments);
    CHECK_THROWS_AS(maxwellian_eval(m, 0.0), DegenerateMoments);
    CHECK_THROWS_AS(maxwellian_eval(MacroMoments{1e-15, 0.0, 1.0}, 0.0), DegenerateMoments);
}

TEST_CASE("degenerate moments carry their location") {
    const DegenerateMoments e("density 0 <= rho_min");
    CHECK_FALSE(e.node().has_value());
    const DegenerateMoments located = e.located(17, 42);
    CHECK(located.node() == 17);
    CHECK(located.step() == 42);
    const std::string what = located.what();
    CHECK(what.find("17") != std::string::npos);
    CHECK(what.find("42") != std::string::npos);
}

TEST_CASE("relaxation solve") {
    CHECK(relaxation_solve(0.3, 0.9, 0.0) == 0.3);
    CHECK(relaxation_solve(0.3, 0.9, 1.0) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(relaxation_solve(0.3, 0.9, std::numeric_limits<double>::infinity()) == 0.9);
    CHECK(std::abs(relaxation_solve(0.3, 0.9, 1e12) - 0.9) < 1e-12);
    // (eps f + a dt M)/(eps + a dt) with eps = 1e-3, a dt = 0.02.
    const double eps = 1e-3, adt = 0.02, f = 0.25, M = 0.75;
    CHECK(relaxation_solve(f, M, adt / eps) ==
          doctest::Approx((eps * f + adt * M) / (eps + adt)).epsilon(1e-15));
}

TEST_CASE("relaxation conserves the moments of the foot row") {
    // Maxwellians with T >= 0.5 on dv = 0.5 and |v| <= 16: the midpoint rule
    // reproduces their moments below roundoff, so the equilibrium shares the
    // row's discrete moments.
    const PhaseGrid g(-1.0, 1.0, 10, 16.0, 32);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> T(0.5, 1.0), u(-1.0, 1.0), rho(0.5, 2.0);
    const double machine = std::numeric_limits<double>::epsilon();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(g.velocity_nodes()), b(g.velocity_nodes()), foot(g.velocity_nodes());
        maxwellian_row({rho(rng), u(rng), T(rng)}, g, 1.0, a);
        maxwellian_row({rho(rng), u(rng), T(rng)}, g, 1.0, b);
        for (std::size_t k = 0; k < foot.size(); ++k) foot[k] = 0.5 * (a[k] + b[k]);
        const MacroMoments before = discrete_moments(foot, g);
        std::vector<double> eq(g.velocity_nodes());
        maxwellian_row(before.hydro(), g, 1.0, eq);
        for (double tau : {0.0, 1.0, 1e6}) {
            std::vector<double> out(foot.size());
            for (std::size_t k = 0; k < foot.size(); ++k)
                out[k] = relaxation_solve(foot[k], eq[k], tau);
            const MacroMoments after = discrete_moments(out, g);
            double n0 = 0.0, n1 = 0.0, n2 = 0.0;
            for (int k = 0; k < g.velocity_nodes(); ++k) {
                const double v = g.velocity_at(k);
                n0 += std::abs(foot[k]) * g.dv();
                n1 += std::abs(v * foot[k]) * g.dv();
                n2 += std::abs(0.5 * v * v * foot[k]) * g.dv();
            }
            CHECK(std::abs(after.rho - before.rho) <= 10 * machine * n0);
            CHECK(std::abs(after.momentum - before.momentum) <= 10 * machine * n1);
            CHECK(std::abs(after.energy - before.energy) <= 10 * machine * n2);
        }
    }
}

TEST_CASE("discrete moments are linear") {
    const PhaseGrid g(-1.0, 1.0, 10, 10.0, 20);
    std::vector<double> a(g.velocity_nodes()), b(g.velocity_nodes()), c(g.velocity_nodes());
    maxwellian_row({1.0, 0.2, 0.9}, g, 1.0, a);
    maxwellian_row({0.4, -0.5, 0.6}, g, 1.0, b);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = 0.75 * a[k] + 0.25 * b[k];
    const MacroMoments combo = 0.75 * discrete_moments(a, g) + 0.25 * discrete_moments(b, g);
    const MacroMoments direct = discrete_moments(c, g);
    CHECK(direct.rho == doctest::Approx(combo.rho).epsilon(1e-15));
    CHECK(direct.momentum == doctest::Approx(combo.momentum).epsilon(1e-14));
    CHECK(direct.energy == doctest::Approx(combo.energy).epsilon(1e-15));
}
