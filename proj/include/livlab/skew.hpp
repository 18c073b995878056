#pragma once

#include <string>
#include <vector>

#include "livlab/cocycle.hpp"
#include "livlab/torus.hpp"

namespace livlab {

enum class FiberKind { circle, line };

// Skew product f_phi(p, t) = (A p, t + phi(p)) on T^2 x S^1 or T^2 x R.
struct SkewSystem {
    HyperbolicAutomorphism base;
    FourierCocycle cocycle;
    FiberKind fiber = FiberKind::circle;
};

struct FiberedPoint {
    TorusPoint p;
    double t = 0.0;
};

FiberedPoint apply_skew(const SkewSystem& s, FiberedPoint z);
FiberedPoint apply_skew_inverse(const SkewSystem& s, FiberedPoint z);
FiberedPoint apply_skew_n(const SkewSystem& s, FiberedPoint z, int n);  // n may be negative

// Constant-rate specialization of the paper's comparison functions: the
// fiber acts isometrically, so nu = nu_hat = 1/lambda_u and gamma =
// gamma_hat = 1.
struct BunchingRates {
    double nu = 0.0;
    double nu_hat = 0.0;
    double gamma = 1.0;
    double gamma_hat = 1.0;
};

BunchingRates rates(const SkewSystem& s);

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double margin = 0.0;  // rhs - lhs
};

struct BunchingReport {
    std::vector<InequalityCheck> checks;
    bool all_hold = false;
};

// Partial hyperbolicity in its 0-bunching form:
// nu < 1, nu_hat < 1, nu < gamma, nu_hat < gamma_hat.
BunchingReport check_partial_hyperbolicity(const BunchingRates& r);

// max{nu, nu_hat} < gamma * gamma_hat.
BunchingReport check_center_bunched(const BunchingRates& r);

// nu < gamma^r, nu_hat < gamma_hat^r, nu < gamma gamma_hat^r,
// nu_hat < gamma_hat gamma^r.
BunchingReport check_r_bunched(const BunchingRates& r, double order);

// max{nu, nu_hat} < gamma^r, max{nu, nu_hat} < gamma_hat^r, plus the same
// second pair as r-bunching.
BunchingReport check_strong_r_bunched(const BunchingRates& r, double order);

struct HolonomyExponent {
    double theta_sup = 0.0;  // open supremum, never attained
    bool attained = false;   // always false; kept explicit in reports
};

// Supremum of theta in (0, alpha] with nu < (nu mu_hat)^(theta/alpha) and
// nu/gamma < (nu mu_hat)^(theta/alpha), mu_hat = nu_hat in the linear model.
// Closed form from logarithms.
HolonomyExponent holonomy_exponent(const BunchingRates& r, double alpha);

}  // namespace livlab
