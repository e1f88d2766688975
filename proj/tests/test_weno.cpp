#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "bgk/weno.hpp"

using namespace bgk;

namespace {

// Smoothness indicator oracle: the polynomial through values at unit nodes
// `first`, first+1, ... (cell [0, 1]); sum over l >= 1 of the integral over
// the cell of the squared l-th derivative. Coefficients come from a
// Vandermonde solve and the integrals are exact polynomial integrals.
double beta_oracle(const std::vector<double>& values, int first) {
    const int n = static_cast<int>(values.size());
    std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1));
    for (int r = 0; r < n; ++r) {
        long double p = 1.0L;
        for (int c = 0; c < n; ++c) {
            a[r][c] = p;
            p *= static_cast<long double>(first + r);
        }
        a[r][n] = values[r];
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const long double f = a[r][c] / a[c][c];
            for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<long double> coef(n);
    for (int c = 0; c < n; ++c) coef[c] = a[c][n] / a[c][c];

    long double beta = 0.0L;
    std::vector<long double> d = coef;
    for (int l = 1; l < n; ++l) {
        std::vector<long double> next(d.size() - 1);
        for (std::size_t k = 1; k < d.size(); ++k) next[k - 1] = d[k] * static_cast<long double>(k);
        d = next;
        for (std::size_t p = 0; p < d.size(); ++p)
            for (std::size_t q = 0; q < d.size(); ++q)
                beta += d[p] * d[q] / static_cast<long double>(p + q + 1);
    }
    return static_cast<double>(beta);
}

std::vector<double> sample(int n, double x0, double dx, double (*f)(double)) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = f(x0 + i * dx);
    return out;
}

}  // namespace

TEST_CASE("smoothness indicators agree with the integral oracle") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double a = U(rng), b = U(rng), c = U(rng), d = U(rng), e = U(rng), f = U(rng);
        auto close = [](double got, double want) {
            return std::abs(got - want) <= 1e-11 * (1.0 + std::abs(want));
        };
        // Values at nodes j-2 .. j+3 are a .. f.
        CHECK(close(weno::beta23_left(b, c, d), beta_oracle({b, c, d}, -1)));
        CHECK(close(weno::beta23_right(c, d, e), beta_oracle({c, d, e}, 0)));
        CHECK(close(weno::beta35_left(a, b, c, d), beta_oracle({a, b, c, d}, -2)));
        CHECK(close(weno::beta35_center(b, c, d, e), beta_oracle({b, c, d, e}, -1)));
        CHECK(close(weno::beta35_right(c, d, e, f), beta_oracle({c, d, e, f}, 0)));
    }
}

TEST_CASE("smoothness indicators vanish on constants") {
    for (double c : {0.0, 1.0, -3.5, 0.1, 1e3}) {
        CHECK(std::abs(weno::beta23_left(c, c, c)) <= 1e-14);
        CHECK(std::abs(weno::beta23_right(c, c, c)) <= 1e-14);
        CHECK(std::abs(weno::beta35_left(c, c, c, c)) <= 1e-14);
        CHECK(std::abs(weno::beta35_center(c, c, c, c)) <= 1e-14);
        CHECK(std::abs(weno::beta35_right(c, c, c, c)) <= 1e-14);
    }
}

TEST_CASE("WENO23 indicators on linear data equal the squared slope") {
    for (double s : {0.5, -2.0, 3.0}) {
        CHECK(weno::beta23_left(-s, 0.0, s) == doctest::Approx(s * s).epsilon(1e-14));
        CHECK(weno::beta23_right(0.0, s, 2.0 * s) == doctest::Approx(s * s).epsilon(1e-14));
        const auto lin = weno::linear_weights23(0.3);
        const auto w = weno::nonlinear_weights<2>(lin, {s * s, s * s}, 1e-6);
        CHECK(w[0] == doctest::Approx(lin[0]).epsilon(1e-14));
        CHECK(w[1] == doctest::Approx(lin[1]).epsilon(1e-14));
    }
}

TEST_CASE("linear weights") {
    const auto mid = weno::linear_weights23(0.5);
    CHECK(mid[0] == doctest::Approx(0.5));
    CHECK(mid[1] == doctest::Approx(0.5));
    for (double theta = 0.0; theta <= 1.0; theta += 0.03125) {
        const auto c23 = weno::linear_weights23(theta);
        CHECK(c23[0] + c23[1] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(c23[0] >= 0.0);
        CHECK(c23[1] >= 0.0);
        const auto c35 = weno::linear_weights35(theta);
        CHECK(c35[0] + c35[1] + c35[2] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(c35[1] >= 0.0);
    }
}

TEST_CASE("optimal linear combinations reach the full-stencil degree") {
    // WENO23 linear weights give the cubic on j-1..j+2; WENO35 the quintic on j-2..j+3.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0), C(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        double p[6];
        for (double& c : p) c = C(rng);
        auto poly = [&](double x, int deg) {
            double v = 0.0;
            for (int k = deg; k >= 0; --k) v = v * x + p[k];
            return v;
        };
        const double theta = U(rng);
        double s3[4], s5[6];
        for (int m = 0; m < 4; ++m) s3[m] = poly(m - 1, 3);
        for (int m = 0; m < 6; ++m) s5[m] = poly(m - 2, 5);
        CHECK(std::abs(weno::weno23_linear_kernel(s3 + 1, theta) - poly(theta, 3)) < 1e-13);
        CHECK(std::abs(weno::weno35_linear_kernel(s5 + 2, theta) - poly(theta, 5)) < 1e-12);
    }
}

TEST_CASE("polynomial exactness at random points") {
    std::mt19937_64 rng(5);
    const double x0 = -1.0, dx = 0.1;
    const int n = 21;
    std::uniform_real_distribution<double> X(x0 + 3 * dx, x0 + (n - 4) * dx), C(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = C(rng), b = C(rng), c = C(rng), d = C(rng);
        std::vector<double> quad(n), cub(n);
        for (int i = 0; i < n; ++i) {
            const double x = x0 + i * dx;
            quad[i] = a + x * (b + x * c);
            cub[i] = a + x * (b + x * (c + x * d));
        }
        const double x = X(rng);
        CHECK(std::abs(weno23_interp(quad, x0, dx, x) - (a + x * (b + x * c))) <= 1e-12);
        CHECK(std::abs(weno35_interp(cub, x0, dx, x) - (a + x * (b + x * (c + x * d)))) <= 1e-12);
    }
}

TEST_CASE("linear interpolation") {
    const std::vector<double> data{0.0, 0.5, 1.0, 1.5, 2.0};
    CHECK(linear_interp(data, 0.0, 0.5, 1.0) == 1.0);
    CHECK(linear_interp(data, 0.0, 0.5, 1.3) == doctest::Approx(1.3));
    const std::vector<double> flat{2.0, 2.0, 2.0};
    CHECK(linear_interp(flat, 0.0, 1.0, 0.5) == 2.0);
}

TEST_CASE("nodal reproduction") {
    const auto data = sample(30, 0.0, 0.0625, [](double x) { return std::sin(7.0 * x) + x * x; });
    for (int i = 3; i < 26; ++i) {
        const double x = i * 0.0625;
        for (auto kind : {Interpolation::Linear, Interpolation::WENO23, Interpolation::WENO35,
                          Interpolation::None})
            CHECK(interpolate(kind, data, 0.0, 0.0625, x) == data[i]);
    }
}

TEST_CASE("stencil coverage and off-grid requests") {
    const std::vector<double> data(10, 1.0);
    CHECK_THROWS_AS(weno35_interp(data, 0.0, 1.0, 1.5), std::out_of_range);
    CHECK_THROWS_AS(weno35_interp(data, 0.0, 1.0, 7.5), std::out_of_range);
    CHECK_NOTHROW(weno35_interp(data, 0.0, 1.0, 2.5));
    CHECK_NOTHROW(weno35_interp(data, 0.0, 1.0, 6.5));
    CHECK_THROWS_AS(weno23_interp(data, 0.0, 1.0, 0.5), std::out_of_range);
    CHECK_THROWS_AS(linear_interp(data, 0.0, 1.0, -0.5), std::out_of_range);
    CHECK_THROWS_AS(linear_interp(data, 0.0, 1.0, 12.0), std::out_of_range);
    CHECK_THROWS_AS(interpolate(Interpolation::None, data, 0.0, 1.0, 3.5), std::invalid_argument);
    CHECK(stencil_left(Interpolation::WENO35) == 2);
    CHECK(stencil_right(Interpolation::WENO35) == 3);
    CHECK(stencil_left(Interpolation::WENO23) == 1);
    CHECK(stencil_right(Interpolation::Linear) == 1);
}

TEST_CASE("no overshoot at a step") {
    const double jump = 2.0;
    std::vector<double> step(40);
    for (int i = 0; i < 40; ++i) step[i] = i < 20 ? 1.0 : 1.0 + jump;
    for (double x = 3.0; x < 36.0; x += 0.01) {
        const int j = static_cast<int>(std::floor(x));
        for (auto [kind, left, right] : {std::tuple{Interpolation::WENO23, 1, 2},
                                         std::tuple{Interpolation::WENO35, 2, 3}}) {
            const auto first = step.begin() + (j - left);
            const auto last = step.begin() + (j + right + 1);
            const double lo = *std::min_element(first, last);
            const double hi = *std::max_element(first, last);
            const double v = interpolate(kind, step, 0.0, 1.0, x);
            CHECK(v >= lo - 1e-6 * jump);
            CHECK(v <= hi + 1e-6 * jump);
        }
    }
}

TEST_CASE("WENO35 pointwise error on smooth monotone data is sixth order") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double previous = 0.0;
    for (int n : {10, 20, 40, 80}) {
        const double dx = 1.0 / n;
        std::vector<double> data(n + 7);
        for (int i = 0; i < n + 7; ++i) data[i] = std::exp((i - 3) * dx);
        double err = 0.0;
        for (int k = 0; k < 200; ++k) {
            const double x = U(rng);
            err = std::max(err, std::abs(weno35_interp(data, -3 * dx, dx, x) - std::exp(x)));
        }
        if (previous > 0.0) CHECK(std::log2(previous / err) >= 5.6);
        previous = err;
    }
}

TEST_CASE("WENO35 advection converges at fifth order") {
    // One period of periodic shifts by dx/4 per step.
    auto profile = [](double x) { return std::exp(std::sin(2.0 * std::numbers::pi * x)); };
    double previous = 0.0;
    for (int n : {40, 80, 160, 320}) {
        const double dx = 1.0 / n;
        std::vector<double> u(n), ext(n + 7);
        for (int i = 0; i < n; ++i) u[i] = profile(i * dx);
        for (int step = 0; step < 4 * n; ++step) {
            for (int i = 0; i < n + 7; ++i) ext[i] = u[((i - 3) % n + n) % n];
            for (int i = 0; i < n; ++i) u[i] = weno35_interp(ext, -3 * dx, dx, (i - 0.25) * dx);
        }
        double err = 0.0;
        for (int i = 0; i < n; ++i) err += std::abs(u[i] - profile(i * dx)) * dx;
        if (previous > 0.0) CHECK(std::abs(std::log2(previous / err) - 5.0) <= 0.4);
        previous = err;
    }
}
