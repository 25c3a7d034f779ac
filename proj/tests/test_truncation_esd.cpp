#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fuss/esd.hpp"
#include "fuss/jacobi.hpp"
#include "fuss/truncation.hpp"

TEST_CASE("entry truncation reports its footprint") {
    fuss::ComplexMatrix x(3);
    x.set(0, 0, 0.5);
    x.set(0, 2, {3.0, 4.0});  // magnitude 5
    x.set(1, 1, -2.0);
    x.set(2, 2, {0.0, 7.0});
    auto cut = fuss::truncate_entries(x, 1.5);
    CHECK(cut.entries_cut == 3);
    CHECK(cut.rows_touched == 3);   // rows 0, 1, 2
    CHECK(cut.cols_touched == 2);   // cols 1, 2
    CHECK(cut.rank_footprint() == 2);
    CHECK(cut.matrix.at(0, 2) == std::complex<double>(0.0, 0.0));
    CHECK(cut.matrix.at(1, 1) == std::complex<double>(0.0, 0.0));
    CHECK(cut.matrix.at(2, 2) == std::complex<double>(0.0, 0.0));
    CHECK(cut.matrix.at(0, 0) == std::complex<double>(0.5, 0.0));

    auto untouched = fuss::truncate_entries(x, 10.0);
    CHECK(untouched.entries_cut == 0);
    CHECK(untouched.rank_footprint() == 0);
}

TEST_CASE("threshold schedules") {
    CHECK(fuss::parse_alpha_schedule("n18") == 0.125);
    CHECK(fuss::parse_alpha_schedule("n32") == 1.0 / 32.0);
    CHECK_THROWS_AS(fuss::parse_alpha_schedule("n7"), std::invalid_argument);
    CHECK(fuss::alpha_threshold(256, 0.125) == Catch::Approx(0.5).epsilon(1e-15));
    CHECK(fuss::alpha_threshold(65536, 0.125) == Catch::Approx(0.25).epsilon(1e-15));
    CHECK(fuss::alpha_threshold(1, 0.125) == 1.0);
}

TEST_CASE("rank bound arithmetic") {
    CHECK(fuss::esd_rank_bound(2, 3, 100) == Catch::Approx(0.12));
    CHECK(fuss::esd_rank_bound(1, 0, 50) == 0.0);
    CHECK(fuss::esd_rank_bound(1, 60, 100) == 1.0);  // capped
    CHECK_THROWS_AS(fuss::esd_rank_bound(1, 1, 0), std::invalid_argument);
}

TEST_CASE("spectral shift of factor truncation obeys the rank bound") {
    fuss::EnsembleSpec spec;
    spec.family = fuss::Family::heavy4;
    spec.n = 48;
    spec.m = 2;
    spec.seed = 101;
    for (unsigned trial = 0; trial < 3; ++trial) {
        // Cutoff low enough that heavy draws actually get clipped.
        const double cutoff = 3.0;
        auto plain = fuss::hermitian_eigenvalues(fuss::sample_product_matrix(spec, trial));
        auto cut = fuss::truncated_product_matrix(spec, trial, cutoff);
        INFO("trial " << trial << ": footprint " << cut.max_rank_footprint << ", entries "
                      << cut.entries_cut);
        CHECK(cut.entries_cut > 0);
        auto clipped = fuss::hermitian_eigenvalues(cut.matrix);
        double ks = fuss::kolmogorov_distance(fuss::EmpiricalCdf(plain.eigenvalues),
                                              fuss::EmpiricalCdf(clipped.eigenvalues));
        double bound = fuss::esd_rank_bound(spec.m, cut.max_rank_footprint, spec.n);
        CHECK(ks <= bound + 1e-12);
    }

    // A cutoff nothing crosses leaves the spectrum untouched.
    auto same = fuss::truncated_product_matrix(spec, 0, 1e9);
    CHECK(same.entries_cut == 0);
    auto a = fuss::hermitian_eigenvalues(fuss::sample_product_matrix(spec, 0));
    auto b = fuss::hermitian_eigenvalues(same.matrix);
    double ks = fuss::kolmogorov_distance(fuss::EmpiricalCdf(a.eigenvalues),
                                          fuss::EmpiricalCdf(b.eigenvalues));
    CHECK(ks == 0.0);
}

TEST_CASE("empirical distribution function evaluates with both limits") {
    fuss::EmpiricalCdf f({1.0, 0.0});  // sorts internally
    CHECK(f(-0.5) == 0.0);
    CHECK(f(0.0) == 0.5);
    CHECK(f(0.5) == 0.5);
    CHECK(f(1.0) == 1.0);
    CHECK(f(2.0) == 1.0);
    CHECK(f.left_limit(0.0) == 0.0);
    CHECK(f.left_limit(1.0) == 0.5);
    CHECK(f.knots() == std::vector<double>{0.0, 1.0});
    CHECK_THROWS_AS(fuss::EmpiricalCdf({}), std::invalid_argument);

    auto pooled = fuss::EmpiricalCdf::pooled({{3.0, 1.0}, {2.0, 0.0}});
    CHECK(pooled.knots() == std::vector<double>{0.0, 1.0, 2.0, 3.0});
    CHECK(pooled(1.5) == 0.5);
}

TEST_CASE("sup distance between step functions") {
    fuss::EmpiricalCdf f({0.0, 1.0});
    fuss::EmpiricalCdf g({0.0, 2.0});
    CHECK(fuss::kolmogorov_distance(f, g) == 0.5);  // gap on [1, 2)
    CHECK(fuss::kolmogorov_distance(g, f) == 0.5);
    CHECK(fuss::kolmogorov_distance(f, f) == 0.0);

    fuss::EmpiricalCdf h({5.0});
    fuss::EmpiricalCdf k({6.0});
    CHECK(fuss::kolmogorov_distance(h, k) == 1.0);
}

TEST_CASE("sup distance against a continuous reference") {
    auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
    fuss::EmpiricalCdf two({0.25, 0.75});
    CHECK(fuss::kolmogorov_distance(two, uniform) == Catch::Approx(0.25).margin(1e-15));
    fuss::EmpiricalCdf one({0.5});
    CHECK(fuss::kolmogorov_distance(one, uniform) == Catch::Approx(0.5).margin(1e-15));
    // Probe points can only tighten the estimate upward.
    double base = fuss::kolmogorov_distance(two, uniform);
    double probed = fuss::kolmogorov_distance(two, uniform, {0.1, 0.5, 0.9});
    CHECK(probed >= base);
}
