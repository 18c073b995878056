#include "livlab/skew.hpp"

#include <algorithm>
#include <cmath>

#include "livlab/error.hpp"

namespace livlab {

namespace {

double wrap_fiber(const SkewSystem& s, double t) {
    if (s.fiber == FiberKind::line) return t;
    double w = t - std::floor(t);
    if (w >= 1.0) w -= 1.0;
    if (w < 0.0) w += 1.0;
    return w;
}

InequalityCheck strict_less(std::string name, double lhs, double rhs) {
    InequalityCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.holds = lhs < rhs;
    c.margin = rhs - lhs;
    return c;
}

BunchingReport finish(std::vector<InequalityCheck> checks) {
    BunchingReport rep;
    rep.all_hold = true;
    for (const auto& c : checks) rep.all_hold = rep.all_hold && c.holds;
    rep.checks = std::move(checks);
    return rep;
}

void validate_rates(const BunchingRates& r) {
    for (double v : {r.nu, r.nu_hat, r.gamma, r.gamma_hat})
        if (!(v > 0.0) || !std::isfinite(v))
            fail(ErrorKind::invalid_rates, "bunching rates must be positive and finite");
}

}  // namespace

FiberedPoint apply_skew(const SkewSystem& s, FiberedPoint z) {
    double t = z.t + s.cocycle.eval(z.p);
    return {s.base.apply(z.p), wrap_fiber(s, t)};
}

FiberedPoint apply_skew_inverse(const SkewSystem& s, FiberedPoint z) {
    TorusPoint p = s.base.apply_inverse(z.p);
    return {p, wrap_fiber(s, z.t - s.cocycle.eval(p))};
}

FiberedPoint apply_skew_n(const SkewSystem& s, FiberedPoint z, int n) {
    for (int i = 0; i < n; ++i) z = apply_skew(s, z);
    for (int i = 0; i > n; --i) z = apply_skew_inverse(s, z);
    return z;
}

BunchingRates rates(const SkewSystem& s) {
    double nu = 1.0 / std::fabs(s.base.lambda_u());
    return {nu, nu, 1.0, 1.0};
}

BunchingReport check_partial_hyperbolicity(const BunchingRates& r) {
    validate_rates(r);
    return finish({strict_less("nu < 1", r.nu, 1.0),
                   strict_less("nu_hat < 1", r.nu_hat, 1.0),
                   strict_less("nu < gamma", r.nu, r.gamma),
                   strict_less("nu_hat < gamma_hat", r.nu_hat, r.gamma_hat)});
}

BunchingReport check_center_bunched(const BunchingRates& r) {
    validate_rates(r);
    return finish(
        {strict_less("max{nu,nu_hat} < gamma*gamma_hat", std::max(r.nu, r.nu_hat),
                     r.gamma * r.gamma_hat)});
}

BunchingReport check_r_bunched(const BunchingRates& r, double order) {
    validate_rates(r);
    if (!(order >= 0.0)) fail(ErrorKind::invalid_input, "bunching order must be >= 0");
    double gr = std::pow(r.gamma, order);
    double ghr = std::pow(r.gamma_hat, order);
    return finish({strict_less("nu < gamma^r", r.nu, gr),
                   strict_less("nu_hat < gamma_hat^r", r.nu_hat, ghr),
                   strict_less("nu < gamma*gamma_hat^r", r.nu, r.gamma * ghr),
                   strict_less("nu_hat < gamma_hat*gamma^r", r.nu_hat, r.gamma_hat * gr)});
}

BunchingReport check_strong_r_bunched(const BunchingRates& r, double order) {
    validate_rates(r);
    if (!(order >= 0.0)) fail(ErrorKind::invalid_input, "bunching order must be >= 0");
    double gr = std::pow(r.gamma, order);
    double ghr = std::pow(r.gamma_hat, order);
    double mx = std::max(r.nu, r.nu_hat);
    return finish({strict_less("max{nu,nu_hat} < gamma^r", mx, gr),
                   strict_less("max{nu,nu_hat} < gamma_hat^r", mx, ghr),
                   strict_less("nu < gamma*gamma_hat^r", r.nu, r.gamma * ghr),
                   strict_less("nu_hat < gamma_hat*gamma^r", r.nu_hat, r.gamma_hat * gr)});
}

HolonomyExponent holonomy_exponent(const BunchingRates& r, double alpha) {
    validate_rates(r);
    if (!(alpha > 0.0 && alpha <= 1.0))
        fail(ErrorKind::invalid_input, "holonomy_exponent: alpha must lie in (0,1]");
    if (!check_partial_hyperbolicity(r).all_hold)
        fail(ErrorKind::invalid_rates, "holonomy_exponent: rates are not partially hyperbolic");

    double log_nu = std::log(r.nu);
    double log_nuhat = std::log(r.nu_hat);
    double log_q = log_nu + log_nuhat;  // log(nu * mu_hat), mu_hat = nu_hat
    double log_ng = log_nu - std::log(r.gamma);
    if (!(log_q < 0.0)) fail(ErrorKind::invalid_rates, "holonomy_exponent: nu*nu_hat >= 1");
    if (!(log_ng < 0.0)) fail(ErrorKind::invalid_rates, "holonomy_exponent: nu/gamma >= 1");

    double t1 = log_nu / log_q;   // first constraint of (16)
    double t2 = log_ng / log_q;   // second constraint
    double theta = alpha * std::min({1.0, t1, t2});
    return {theta, false};
}

}  // namespace livlab
