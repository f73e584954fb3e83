#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modeseek/kernel.hpp"

#include "support/testutil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace modeseek;

TEST_CASE("epanechnikov profile values") {
    const KernelProfile p = epanechnikov_profile();
    CHECK(profile_eval(p, 0.0) == 1.0);
    CHECK(profile_eval(p, 0.5) == 0.5);
    CHECK(profile_eval(p, 1.0) == 0.0);
    CHECK(profile_eval(p, 2.0) == 0.0);
    CHECK(p.norm_const_1d == 0.75);
}

TEST_CASE("gaussian profile values") {
    const KernelProfile p = gaussian_profile();
    CHECK(profile_eval(p, 0.0) == 1.0);
    CHECK(profile_eval(p, 2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(p.norm_const_1d ==
          doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("g values") {
    const KernelProfile gauss = gaussian_profile();
    CHECK(g_eval(gauss, 0.0) == 0.5);
    CHECK(g_eval(gauss, 2.0) ==
          doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));

    const KernelProfile epan = epanechnikov_profile();
    CHECK(g_eval(epan, 0.3) == 1.0);
    CHECK(g_eval(epan, 1.0 - 1e-12) == 1.0);
    // Right-continuous zero at the support edge: a sample exactly one
    // bandwidth away carries no weight.
    CHECK(g_eval(epan, 1.0) == 0.0);
    CHECK(g_eval(epan, 7.0) == 0.0);
}

TEST_CASE("negative and non-finite arguments are rejected") {
    const KernelProfile p = gaussian_profile();
    CHECK_THROWS_AS(profile_eval(p, -0.1), std::domain_error);
    CHECK_THROWS_AS(g_eval(p, -1.0), std::domain_error);
    CHECK_THROWS_AS(profile_eval(p, std::nan("")), std::domain_error);
}

TEST_CASE("g is the negated profile derivative") {
    std::mt19937_64 engine(101);
    const double delta = 1e-6;
    for (const char* name : {"gaussian", "epanechnikov"}) {
        const KernelProfile p = find_profile(name);
        for (int i = 0; i < 200; ++i) {
            double x = testutil::uniform_in(engine, delta, 3.0);
            // The Epanechnikov profile has a corner at x = 1; step over it.
            if (std::abs(x - 1.0) < 2.0 * delta) {
                x += 4.0 * delta;
            }
            const double fd =
                testutil::central_diff([&](double t) { return p.k(t); }, x, delta);
            CHECK(std::abs(fd + g_eval(p, x)) < 1e-6);
        }
    }
}

TEST_CASE("profiles are non-increasing; flags match behavior") {
    const KernelProfile gauss = gaussian_profile();
    const KernelProfile epan = epanechnikov_profile();
    CHECK(gauss.strictly_decreasing_g);
    CHECK_FALSE(epan.strictly_decreasing_g);
    CHECK(gauss.convex_profile);
    CHECK(epan.convex_profile);

    std::mt19937_64 engine(202);
    for (int i = 0; i < 1000; ++i) {
        const double a = testutil::uniform_in(engine, 0.0, 4.0);
        const double b = testutil::uniform_in(engine, 0.0, 4.0);
        const double lo = std::min(a, b);
        const double hi = std::max(a, b);
        if (lo == hi) {
            continue;
        }
        CHECK(gauss.k(lo) > gauss.k(hi));
        CHECK(gauss.g(lo) > gauss.g(hi));
        CHECK(epan.k(lo) >= epan.k(hi));
        CHECK(epan.g(lo) >= epan.g(hi));
    }
    // Witness for the cleared Epanechnikov flag: g is flat inside the support.
    CHECK(epan.g(0.1) == epan.g(0.9));
}

TEST_CASE("normalization constants integrate the kernel to one") {
    const KernelProfile epan = epanechnikov_profile();
    // The integrand is quadratic on [-1, 1], so Simpson is exact there.
    const double epan_integral = testutil::simpson(
        [&](double x) { return epan.norm_const_1d * epan.k(x * x); }, -1.0, 1.0,
        2);
    CHECK(std::abs(epan_integral - 1.0) < 1e-12);

    const KernelProfile gauss = gaussian_profile();
    const double gauss_integral = testutil::simpson(
        [&](double x) { return gauss.norm_const_1d * gauss.k(x * x); }, -12.0,
        12.0, 4800);
    CHECK(std::abs(gauss_integral - 1.0) < 1e-9);
}

TEST_CASE("registry lookup and registration") {
    CHECK(find_profile("gaussian").name == "gaussian");
    CHECK(find_profile("epanechnikov").name == "epanechnikov");
    CHECK_THROWS_AS(find_profile("tricube"), std::invalid_argument);

    KernelProfile quartic;
    quartic.name = "quartic";
    quartic.k = [](double x) {
        return x <= 1.0 ? (1.0 - x) * (1.0 - x) : 0.0;
    };
    quartic.g = [](double x) { return x < 1.0 ? 2.0 * (1.0 - x) : 0.0; };
    quartic.norm_const_1d = 15.0 / 16.0;
    register_profile(quartic);
    CHECK(find_profile("quartic").k(0.5) == 0.25);

    const auto names = registered_profile_names();
    CHECK(std::find(names.begin(), names.end(), "quartic") != names.end());

    KernelProfile nameless;
    nameless.k = [](double) { return 1.0; };
    nameless.g = [](double) { return 0.0; };
    CHECK_THROWS_AS(register_profile(nameless), std::invalid_argument);
}
