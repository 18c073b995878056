#include "livlab/pcf.hpp"

#include <cmath>

#include "livlab/error.hpp"

namespace livlab {

namespace {

constexpr double kRoundoffSlack = 1.0 + 1e-9;

// Smallest n >= 1 with lead * ratio^n / (1 - ratio) <= tol, ratio in (0,1).
std::int64_t truncation_index(double lead, double ratio, double tol) {
    if (lead <= 0.0) return 1;
    double t0 = lead / (1.0 - ratio);
    if (t0 <= tol) return 1;
    double n = std::ceil(std::log(tol / t0) / std::log(ratio));
    std::int64_t ni = n < 1.0 ? 1 : static_cast<std::int64_t>(n);
    // guard against log roundoff leaving the bound a hair above tol
    while (t0 * std::pow(ratio, static_cast<double>(ni)) > tol && ni < kPcfTermBudget + 1) ++ni;
    return ni;
}

void check_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        fail(ErrorKind::invalid_input, "pcf: tolerance must be positive");
}

}  // namespace

PcfValue pcf_stable(const FourierCocycle& phi, const HyperbolicAutomorphism& map, const SuLeg& leg,
                    double tol) {
    check_tol(tol);
    if (leg.kind != LegKind::stable) fail(ErrorKind::invalid_input, "pcf_stable: leg is not stable");
    double lam = map.lambda_s();
    double contraction = std::fabs(lam);
    double lip = phi.lipschitz_bound();
    double d = leg.displacement;
    std::int64_t n = truncation_index(lip * std::fabs(d), contraction, tol);
    if (n > kPcfTermBudget)
        fail(ErrorKind::budget_exceeded, "pcf_stable: term budget exceeded before tolerance");

    Vec2 vs = map.dir_s();
    TorusPoint x = leg.start;
    double offset = d;  // signed stable coordinate of x' - x, decays as lambda_s^i
    double sum = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        // x'_i = x_i + offset * v_s in the lift, exact along the leaf
        double at_x = phi.eval(x);
        double at_xp = phi.eval_lift(lift(x) + offset * vs);
        sum += at_xp - at_x;
        x = map.apply(x);
        offset *= lam;
    }
    double tail = lip * std::fabs(d) * std::pow(contraction, static_cast<double>(n)) /
                  (1.0 - contraction);
    return {sum, tail * kRoundoffSlack, n};
}

PcfValue pcf_unstable(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                      const SuLeg& leg, double tol) {
    check_tol(tol);
    if (leg.kind != LegKind::unstable)
        fail(ErrorKind::invalid_input, "pcf_unstable: leg is not unstable");
    double lam_u = map.lambda_u();
    double mu = 1.0 / lam_u;  // backward contraction factor along the unstable leaf
    double contraction = std::fabs(mu);
    double lip = phi.lipschitz_bound();
    double d = leg.displacement;
    // tail after n terms: sum_{i > n} Lip |d| |mu|^i = Lip |d| |mu|^{n+1}/(1-|mu|)
    std::int64_t n = truncation_index(lip * std::fabs(d) * contraction, contraction, tol);
    if (n > kPcfTermBudget)
        fail(ErrorKind::budget_exceeded, "pcf_unstable: term budget exceeded before tolerance");

    Vec2 vu = map.dir_u();
    TorusPoint x = leg.start;
    double offset = d;
    double sum = 0.0;
    for (std::int64_t i = 1; i <= n; ++i) {
        x = map.apply_inverse(x);
        offset *= mu;
        double at_x = phi.eval(x);
        double at_xp = phi.eval_lift(lift(x) + offset * vu);
        sum += at_x - at_xp;
    }
    double tail = lip * std::fabs(d) * std::pow(contraction, static_cast<double>(n) + 1.0) /
                  (1.0 - contraction);
    return {sum, tail * kRoundoffSlack, n};
}

PcfValue pcf_leg(const FourierCocycle& phi, const HyperbolicAutomorphism& map, const SuLeg& leg,
                 double tol) {
    return leg.kind == LegKind::stable ? pcf_stable(phi, map, leg, tol)
                                       : pcf_unstable(phi, map, leg, tol);
}

PcfValue pcf_path(const FourierCocycle& phi, const HyperbolicAutomorphism& map, const SuPath& path,
                  double tol) {
    check_tol(tol);
    if (path.legs.empty()) return {0.0, 0.0, 1};
    for (std::size_t i = 0; i + 1 < path.legs.size(); ++i) {
        if (torus_distance(path.legs[i].end, path.legs[i + 1].start) > 1e-9)
            fail(ErrorKind::invalid_input, "pcf_path: legs do not chain");
    }
    double per_leg = tol / static_cast<double>(path.legs.size());
    PcfValue acc{0.0, 0.0, 0};
    for (const SuLeg& leg : path.legs) acc = acc + pcf_leg(phi, map, leg, per_leg);
    return acc;
}

LiftedPoint lifted_leaf_point(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                              TorusPoint x, double t, const SuLeg& leg, double tol) {
    if (torus_distance(leg.start, x) > 1e-9)
        fail(ErrorKind::invalid_input, "lifted_leaf_point: leg does not start at x");
    PcfValue v = pcf_leg(phi, map, leg, tol);
    return {leg.end, t + v.value, v.error_bound};
}

}  // namespace livlab
