/**
 * @file numeric.hpp
 * @brief Quadrature, root bracketing, normal/Cauchy CDFs, seeded sampling.
 */

#ifndef HSDEPTH_NUMERIC_HPP
#define HSDEPTH_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace hsdepth {

/// Adaptive Simpson quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-9, int max_depth = 50);

/// Standard normal CDF.
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Standard normal quantile (Acklam's rational approximation + one Newton
/// polish step; |error| < 1e-12 on (1e-300, 1 - 1e-16)).
double norm_quantile(double p);

/// Standard Cauchy CDF.
inline double cauchy_cdf(double x) { return 0.5 + std::atan(x) / M_PI; }

inline double cauchy_quantile(double p) {
    return std::tan(M_PI * (p - 0.5));
}

/// Monotone bisection: smallest t in [lo, hi] with pred(t) false is
/// approached from both sides; returns the boundary of {pred == true}
/// assuming pred is true at lo and false at hi.
double bisect_boundary(const std::function<bool(double)>& pred, double lo,
                       double hi, double tol = 1e-12, int max_iter = 200);

/// Golden-section maximization of a unimodal f on [a, b].
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-10);

/// Deterministic 64-bit RNG (xoshiro-free: SplitMix64 stream); identical
/// output on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via inverse-CDF (deterministic across platforms).
    double normal() {
        double u;
        do { u = uniform(); } while (u <= 0.0);
        return norm_quantile(u);
    }

    /// Derived stream for shard i.
    Rng spawn(std::uint64_t i) const {
        Rng r(state_ ^ (0xA0761D6478BD642FULL * (i + 1)));
        r.next_u64();
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace hsdepth

#endif  // HSDEPTH_NUMERIC_HPP
