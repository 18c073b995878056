#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace livlab {

// All randomness in the library flows through this wrapper around
// std::mt19937_64.  Doubles are produced by the 53-bit shift recipe rather
// than std::uniform_real_distribution, whose output is implementation
// defined; identical seeds give identical streams on any platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [lo, hi] via rejection-free modulo (bias < 2^-53 for
    // the small ranges used here)
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(uniform() * static_cast<double>(hi - lo + 1));
    }

    // log-uniform in [lo, hi], lo > 0
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    double sign() { return uniform() < 0.5 ? -1.0 : 1.0; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace livlab
