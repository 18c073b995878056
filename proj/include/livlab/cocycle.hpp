#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "livlab/torus.hpp"

namespace livlab {

// Real-valued trigonometric polynomial on T^2:
//   phi(x) = mean + sum_k a_k cos(2 pi k.x) + b_k sin(2 pi k.x),
// finitely many modes k != 0.  Modes are kept in the canonical half-lattice
// (k1 > 0, or k1 == 0 and k2 > 0); cos is even and sin odd, so a mode from
// the other half folds in with b negated.  Composition with an integer
// matrix is exact: mode k maps to A^T k.
class FourierCocycle {
  public:
    using Key = std::pair<std::int64_t, std::int64_t>;
    struct Coeff {
        double a = 0.0;  // cos coefficient
        double b = 0.0;  // sin coefficient
    };

    FourierCocycle() = default;
    explicit FourierCocycle(double mean) : mean_(mean) {}

    static FourierCocycle zero() { return FourierCocycle(); }

    void add_mode(std::int64_t k1, std::int64_t k2, double a, double b);
    void set_mean(double m) { mean_ = m; }

    double mean() const { return mean_; }
    const std::map<Key, Coeff>& modes() const { return modes_; }
    std::int64_t max_mode_index() const;

    double eval(TorusPoint p) const;
    double eval_lift(Vec2 v) const;

    // Upper bound sum_k 2 pi ||k|| (|a_k| + |b_k|) for the Lipschitz constant.
    double lipschitz_bound() const;

    // C_alpha = Lip * diam(T^2)^(1-alpha), valid since d <= diam.
    double holder_bound(double alpha) const;

    // Crude sup-norm bound |mean| + sum (|a|+|b|).
    double sup_bound() const;

    FourierCocycle compose_with(const HyperbolicAutomorphism& map) const;

    FourierCocycle operator+(const FourierCocycle& rhs) const;
    FourierCocycle operator-(const FourierCocycle& rhs) const;
    FourierCocycle scaled(double s) const;

  private:
    double mean_ = 0.0;
    std::map<Key, Coeff> modes_;
};

// Psi o A - Psi, exact in Fourier space; the result has zero mean.
FourierCocycle coboundary_of(const FourierCocycle& transfer, const HyperbolicAutomorphism& map);

// sum_{i=0}^{n-1} phi(A^i x)
double birkhoff_sum(const FourierCocycle& phi, const HyperbolicAutomorphism& map, TorusPoint x,
                    int n);

struct RegularityBound {
    double lipschitz = 0.0;
    double alpha = 1.0;
    double holder = 0.0;
};

RegularityBound regularity_bound(const FourierCocycle& phi, double alpha);

}  // namespace livlab
