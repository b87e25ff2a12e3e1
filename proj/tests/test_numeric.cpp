/**
 * @file test_numeric.cpp
 * @brief Quadrature, distribution functions, bracketing, RNG determinism.
 */

#include <doctest.h>

#include <hsdepth/numeric.hpp>

using namespace hsdepth;

TEST_CASE("adaptive quadrature") {
    CHECK(integrate([](double x) { return x * x; }, 0, 3) ==
          doctest::Approx(9.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::sin(x); }, 0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::exp(-x * x / 2); }, -10, 10) ==
          doctest::Approx(std::sqrt(2 * M_PI)).epsilon(1e-10));
}

TEST_CASE("normal cdf/quantile round trip") {
    for (double p : {1e-8, 1e-4, 0.025, 0.3, 0.5, 0.8, 0.975, 1 - 1e-6}) {
        CHECK(norm_cdf(norm_quantile(p)) == doctest::Approx(p).epsilon(1e-11));
    }
    CHECK(norm_quantile(0.5) == doctest::Approx(0.0));
    CHECK(norm_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-10));
    CHECK_THROWS_AS((void)norm_quantile(0.0), std::invalid_argument);
}

TEST_CASE("cauchy cdf/quantile") {
    CHECK(cauchy_cdf(0.0) == doctest::Approx(0.5));
    CHECK(cauchy_cdf(1.0) == doctest::Approx(0.75));
    CHECK(cauchy_quantile(cauchy_cdf(2.7)) == doctest::Approx(2.7).epsilon(1e-12));
}

TEST_CASE("bisect boundary and golden section") {
    // pred true below sqrt(2)
    double r = bisect_boundary([](double x) { return x * x < 2.0; }, 0, 2);
    CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    double m = golden_max([](double x) { return -(x - 0.7) * (x - 0.7); }, -1, 2);
    CHECK(m == doctest::Approx(0.7).epsilon(1e-8));
}

TEST_CASE("rng determinism and distribution sanity") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng r(123);
    double sum = 0, sum2 = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.02));
    CHECK(sum2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.03));

    Rng g(9);
    double gs = 0, gs2 = 0;
    for (int i = 0; i < n; ++i) {
        const double z = g.normal();
        gs += z;
        gs2 += z * z;
    }
    CHECK(gs / n == doctest::Approx(0.0).epsilon(0.05));
    CHECK(gs2 / n == doctest::Approx(1.0).epsilon(0.05));

    // spawned streams differ from the parent and from each other
    Rng p(5);
    CHECK(p.spawn(0).next_u64() != p.spawn(1).next_u64());
}
