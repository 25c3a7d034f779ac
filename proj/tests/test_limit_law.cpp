#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fuss/fuss_catalan.hpp"
#include "fuss/limit_law.hpp"
#include "fuss/polyroots.hpp"

namespace {

using cd = std::complex<double>;

// Expand prod_k (z - r_k), scaled by lead, into ascending coefficients.
std::vector<cd> coeffs_from_roots(const std::vector<cd>& roots, cd lead) {
    std::vector<cd> c{lead};
    for (const cd& r : roots) {
        std::vector<cd> next(c.size() + 1, cd(0.0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= c[k] * r;
        }
        c = next;
    }
    return c;
}

// Greedy matching of computed roots to planted ones; returns worst distance.
double match_distance(std::vector<cd> got, const std::vector<cd>& expected) {
    double worst = 0.0;
    for (const cd& e : expected) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < got.size(); ++k)
            if (std::abs(got[k] - e) < std::abs(got[best] - e)) best = k;
        worst = std::max(worst, std::abs(got[best] - e));
        got.erase(got.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

// Order-one transform in closed form: s solves z s^2 + (z + 1) s + 1 = 0
// equivalently s = (sqrt(1 - 4/z) - 1)/2 on the branch with Im s > 0.
cd order_one_transform(cd z) {
    const cd root = std::sqrt(1.0 - 4.0 / z);
    const cd a = (root - 1.0) / 2.0, b = (-root - 1.0) / 2.0;
    return a.imag() > b.imag() ? a : b;
}

// Distribution function of the order-one law, from integrating
// sqrt((4-x)/x)/(2 pi) with x = v^2.
double order_one_cdf(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 4.0) return 1.0;
    const double v = std::sqrt(x);
    return ((v / 2.0) * std::sqrt(4.0 - x) + 2.0 * std::asin(v / 2.0)) / M_PI;
}

double simpson_on_grid(const std::vector<double>& f, double h) {
    REQUIRE(f.size() % 2 == 1);
    double acc = f.front() + f.back();
    for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i] * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Moments of the order-one law through the substitution x = 2 + 2 cos(theta),
// which turns the weight into sin^2(theta).
double order_one_moment_quadrature(unsigned p) {
    if (p == 0) return 1.0;
    const unsigned panels = 2000;
    const double h = M_PI / panels;
    std::vector<double> f(panels + 1);
    for (unsigned i = 0; i <= panels; ++i) {
        const double th = i * h;
        const double s = std::sin(th);
        f[i] = std::pow(2.0 + 2.0 * std::cos(th), static_cast<double>(p) - 1.0) * s * s;
    }
    return (2.0 / M_PI) * simpson_on_grid(f, h);
}

double fc_double(unsigned m, unsigned p) {
    return static_cast<double>(fuss::fuss_catalan(m, p));
}

const fuss::LimitLaw& cached_law(unsigned m) {
    static std::vector<fuss::LimitLaw> laws = [] {
        std::vector<fuss::LimitLaw> v;
        for (unsigned mm = 1; mm <= 3; ++mm) v.emplace_back(mm);
        return v;
    }();
    REQUIRE((m >= 1 && m <= laws.size()));
    return laws[m - 1];
}

}  // namespace

TEST_CASE("polynomial root finder recovers known factorizations") {
    CHECK(fuss::polynomial_value({1.0, 0.0, 1.0}, cd(2.0)) == cd(5.0));

    auto cubic = fuss::polynomial_roots({cd(-6.0), cd(11.0), cd(-6.0), cd(1.0)});
    REQUIRE(cubic.size() == 3);
    std::sort(cubic.begin(), cubic.end(),
              [](cd a, cd b) { return a.real() < b.real(); });
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(cubic[static_cast<std::size_t>(k)].real() - (k + 1.0)) < 1e-10);
        CHECK(std::abs(cubic[static_cast<std::size_t>(k)].imag()) < 1e-10);
    }

    auto quad = fuss::polynomial_roots({cd(1.0), cd(0.0), cd(1.0)});
    REQUIRE(quad.size() == 2);
    std::sort(quad.begin(), quad.end(), [](cd a, cd b) { return a.imag() < b.imag(); });
    CHECK(std::abs(quad[0] - cd(0.0, -1.0)) < 1e-12);
    CHECK(std::abs(quad[1] - cd(0.0, 1.0)) < 1e-12);

    auto lin = fuss::polynomial_roots({cd(-3.0), cd(2.0)});
    REQUIRE(lin.size() == 1);
    CHECK(std::abs(lin[0] - cd(1.5)) < 1e-14);
}

TEST_CASE("polynomial root finder matches randomly planted roots") {
    std::mt19937 gen(20260822u);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    std::uniform_real_distribution<double> lead_mag(0.5, 2.0);
    for (unsigned deg = 2; deg <= 7; ++deg) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<cd> planted;
            while (planted.size() < deg) {
                const cd cand(box(gen), box(gen));
                bool far = true;
                for (const cd& r : planted) far = far && std::abs(cand - r) > 5e-2;
                if (far) planted.push_back(cand);
            }
            const cd lead(lead_mag(gen), box(gen) / 4.0);
            auto got = fuss::polynomial_roots(coeffs_from_roots(planted, lead));
            REQUIRE(got.size() == deg);
            CHECK(match_distance(got, planted) < 1e-9);
        }
    }
}

TEST_CASE("polynomial root finder rejects degenerate input") {
    CHECK_THROWS_AS(fuss::polynomial_roots({}), std::invalid_argument);
    CHECK_THROWS_AS(fuss::polynomial_roots({cd(1.0)}), std::invalid_argument);
    CHECK_THROWS_AS(fuss::polynomial_roots({cd(1.0), cd(2.0), cd(0.0)}),
                    std::invalid_argument);
}

TEST_CASE("support edge values") {
    CHECK(fuss::support_edge(1) == 4.0);
    CHECK(fuss::support_edge(2) == 6.75);
    CHECK(fuss::support_edge(3) == Catch::Approx(256.0 / 27.0).epsilon(1e-14));
    CHECK(fuss::support_edge(4) == Catch::Approx(3125.0 / 256.0).epsilon(1e-14));
    CHECK_THROWS_AS(fuss::support_edge(0), std::invalid_argument);
}

TEST_CASE("transform matches the closed form at order one") {
    const std::vector<cd> points{{2.0, 1e-6}, {0.5, 0.3},  {-1.0, 0.1},
                                 {5.0, 0.01}, {3.7, 1e-5}, {0.03, 1e-4}};
    for (const cd& z : points) {
        const cd got = fuss::stieltjes_transform(1, z);
        const cd want = order_one_transform(z);
        CHECK(std::abs(got - want) < 1e-10 * (1.0 + std::abs(want)));
    }
    // frozen anchor: at x = 2 the density is 1/(2 pi), so Im s -> 1/2
    CHECK(fuss::stieltjes_transform(1, {2.0, 1e-6}).imag() ==
          Catch::Approx(0.5).margin(1e-5));
}

TEST_CASE("transform reproduces the moment series far from the support") {
    struct Probe {
        unsigned m;
        cd z;
    };
    const std::vector<Probe> probes{
        {1, {50.0, 37.0}}, {2, {50.0, 37.0}}, {3, {50.0, 37.0}},
        {1, {12.0, 3.0}},  {3, {-40.0, 25.0}}};
    for (const auto& pr : probes) {
        cd series = 0.0;
        for (unsigned p = 0; p <= 16; ++p)
            series -= fc_double(pr.m, p) / std::pow(pr.z, p + 1.0);
        const cd got = fuss::stieltjes_transform(pr.m, pr.z);
        CHECK(std::abs(got - series) < 1e-6 * std::abs(series));
    }
}

TEST_CASE("transform stays in the upper half plane") {
    for (unsigned m = 1; m <= 3; ++m)
        for (double x : {-3.0, 0.3, 2.0, 6.0, 11.0})
            for (double y : {1e-5, 0.1, 2.0}) {
                const cd s = fuss::stieltjes_transform(m, {x, y});
                INFO("m=" << m << " z=" << x << "+" << y << "i");
                CHECK(s.imag() > 0.0);
            }
}

TEST_CASE("transform input validation") {
    CHECK_THROWS_AS(fuss::stieltjes_transform(0, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(fuss::stieltjes_transform(1, {2.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(fuss::stieltjes_transform(1, {2.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(fuss::LimitLaw(1, 4), std::invalid_argument);
    fuss::StieltjesSweep sweep(1, 1e-4);
    CHECK(sweep.transform_at(3.0).imag() > 0.0);
    CHECK_THROWS_AS(sweep.transform_at(3.5), std::logic_error);
}

TEST_CASE("density anchors at order one") {
    CHECK(fuss::limit_density(1, 1.0) ==
          Catch::Approx(std::sqrt(3.0) / (2.0 * M_PI)).margin(1e-7));

    std::vector<double> grid(64);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a = 1e-3, b = 4.0 - 1e-3;
        grid[i] = a + (b - a) * static_cast<double>(i) / (grid.size() - 1.0);
    }
    const auto batch = fuss::limit_density_batch(1, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, std::abs(batch[i] - fuss::mp_density(grid[i])));
    CHECK(worst < 1e-6);

    // the shared-sweep route and the per-point route agree
    for (std::size_t i : {0ul, 17ul, 40ul, 63ul})
        CHECK(batch[i] == Catch::Approx(fuss::limit_density(1, grid[i])).margin(1e-9));

    CHECK(fuss::limit_density(1, -0.5) == 0.0);
    CHECK(fuss::limit_density(1, 4.0) == 0.0);
    CHECK(fuss::limit_density(1, 5.0) == 0.0);
}

TEST_CASE("density ladder diagnostics converge") {
    const auto eval = fuss::limit_density_detailed(2, 3.0);
    CHECK(eval.value > 0.0);
    const double d01 = std::abs(eval.rung_values[1] - eval.rung_values[0]);
    const double d12 = std::abs(eval.rung_values[2] - eval.rung_values[1]);
    CHECK(d12 < 0.3 * d01 + 1e-12);  // linear-in-height error shrinks with the rung
    CHECK(std::abs(eval.value - eval.rung_values[2]) < 2.0 * d12 + 1e-12);

    const auto outside = fuss::limit_density_detailed(2, 7.0);
    CHECK(outside.value == 0.0);
    CHECK(outside.rung_values[0] == 0.0);
}

TEST_CASE("density scaling near zero") {
    for (unsigned m = 1; m <= 3; ++m) {
        const double expo = m / (m + 1.0);
        const double constant = std::sin(M_PI / (m + 1.0)) / M_PI;
        double prev = 0.0;
        for (double x : {1e-4, 1e-5, 1e-6}) {
            const double c = fuss::limit_density(m, x) * std::pow(x, expo);
            INFO("m=" << m << " x=" << x);
            CHECK(c > 0.0);
            if (prev > 0.0) CHECK(c == Catch::Approx(prev).epsilon(0.05));
            prev = c;
        }
        // subleading correction enters at order x^(1/(m+1))
        const double slack = 0.5 * std::pow(1e-6, 1.0 / (m + 1.0)) + 0.005;
        CHECK(prev == Catch::Approx(constant).epsilon(slack));
    }
}

TEST_CASE("density vanishes like a square root at the edge") {
    for (unsigned m = 1; m <= 3; ++m) {
        const double edge = fuss::support_edge(m);
        const double delta = 1e-3;
        const double near = fuss::limit_density(m, edge - delta);
        const double fourfold = fuss::limit_density(m, edge - 4.0 * delta);
        INFO("m=" << m);
        CHECK(near > 0.0);
        CHECK(near / fourfold == Catch::Approx(0.5).epsilon(0.05));
    }
}

TEST_CASE("tabulated law normalization and moments") {
    for (unsigned m = 1; m <= 3; ++m) {
        const auto& law = cached_law(m);
        INFO("m=" << m);
        CHECK(law.order() == m);
        CHECK(law.edge() == fuss::support_edge(m));
        CHECK(std::abs(law.normalization() - 1.0) < 1e-6);
        // the two integrals use different composite rules over the same
        // samples, so they agree to quadrature accuracy rather than exactly
        CHECK(law.moment(0) == Catch::Approx(law.normalization()).margin(1e-8));
        for (unsigned p = 1; p <= 6; ++p) {
            const double want = fc_double(m, p);
            INFO("p=" << p);
            CHECK(std::abs(law.moment(p) - want) < 1e-4 * want);
        }
    }
}

TEST_CASE("order-one moments agree across three routes") {
    const double catalan[7] = {1.0, 1.0, 2.0, 5.0, 14.0, 42.0, 132.0};
    const auto& law = cached_law(1);
    for (unsigned p = 0; p <= 6; ++p) {
        const double quad = order_one_moment_quadrature(p);
        INFO("p=" << p);
        CHECK(quad == Catch::Approx(catalan[p]).epsilon(1e-9));
        CHECK(quad == Catch::Approx(fc_double(1, p)).epsilon(1e-12));
        CHECK(law.moment(p) == Catch::Approx(quad).epsilon(1e-4));
    }
}

TEST_CASE("distribution function properties") {
    const auto& law1 = cached_law(1);
    CHECK(law1.cdf(-1.0) == 0.0);
    CHECK(law1.cdf(0.0) == 0.0);
    CHECK(law1.cdf(5.0) >= 1.0 - 2e-6);
    CHECK(law1.cdf(5.0) <= 1.0);
    CHECK(law1.cdf(2.0) == Catch::Approx(0.5 + 1.0 / M_PI).margin(1e-5));

    double worst = 0.0;
    for (int i = 0; i <= 32; ++i) {
        const double x = 0.05 + (3.95 - 0.05) * i / 32.0;
        worst = std::max(worst, std::abs(law1.cdf(x) - order_one_cdf(x)));
    }
    CHECK(worst < 1e-6);

    for (unsigned m : {1u, 2u, 3u}) {
        const auto& law = cached_law(m);
        const double hi = law.edge() + 0.5;
        double prev = -1.0;
        for (int i = 0; i <= 100; ++i) {
            const double x = -0.5 + (hi + 0.5) * i / 100.0;
            const double F = law.cdf(x);
            INFO("m=" << m << " x=" << x);
            CHECK(F >= prev);
            CHECK(F >= 0.0);
            CHECK(F <= 1.0);
            prev = F;
        }
    }
}
