#pragma once

#include <cstdint>
#include <utility>

#include "livlab/cocycle.hpp"
#include "livlab/torus.hpp"

namespace livlab {

struct PcfValue {
    double value = 0.0;
    double error_bound = 0.0;  // certified bound on the discarded tail
    std::int64_t terms_used = 0;
};

inline PcfValue operator+(PcfValue a, PcfValue b) {
    return {a.value + b.value, a.error_bound + b.error_bound, a.terms_used + b.terms_used};
}

// Certified truncation budget: one leg may sum at most this many terms.
inline constexpr std::int64_t kPcfTermBudget = 1'000'000;

// Stable-pair series sum_{i >= 0} [phi(A^i x') - phi(A^i x)] for x' on the
// stable leaf through x at signed leaf displacement leg.displacement.  The
// truncation index comes from the closed-form geometric tail bound
// Lip(phi) |d| |lambda_s|^n / (1 - |lambda_s|) <= tol.
PcfValue pcf_stable(const FourierCocycle& phi, const HyperbolicAutomorphism& map, const SuLeg& leg,
                    double tol);

// Unstable-pair series sum_{i >= 1} [phi(A^-i x) - phi(A^-i x')].
PcfValue pcf_unstable(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                      const SuLeg& leg, double tol);

PcfValue pcf_leg(const FourierCocycle& phi, const HyperbolicAutomorphism& map, const SuLeg& leg,
                 double tol);

// Additive extension over an su-path; per-leg tolerance tol / leg count.
PcfValue pcf_path(const FourierCocycle& phi, const HyperbolicAutomorphism& map, const SuPath& path,
                  double tol);

struct LiftedPoint {
    TorusPoint x;
    double t = 0.0;
    double error_bound = 0.0;
};

// Point of the lifted leaf through (x, t) over the end of the leg:
// t' = t + PCF of the leg.
LiftedPoint lifted_leaf_point(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                              TorusPoint x, double t, const SuLeg& leg, double tol);

}  // namespace livlab
