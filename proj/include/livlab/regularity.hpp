#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "livlab/torus.hpp"

namespace livlab {

// Transverse pair of plaque families on I^2, normalized so every plaque
// passes through its center (beta_z(0) = 0) and the base plaques through the
// origin are flat.  Horizontal plaques are graphs over the x-axis,
// omega_z^H(x) = z + (x, beta_h(z, x)); vertical ones are graphs over the
// y-axis, omega_z^V(y) = z + (beta_v(z, y), y).
struct PlaquePair {
    std::function<double(Vec2, double)> beta_h;
    std::function<double(Vec2, double)> beta_v;
    int ell = 2;
    double alpha = 0.5;
    double norm_bound = 1.0;

    static PlaquePair flat(int ell, double alpha);
};

// Calibrated interpolation constant C_0(B) for degree <= ell (Lemma-style
// bound sum_p |c_p| R^p <= C_0 sup |b_j| over node sets with R/eta <= B).
double c0_calibrated(int ell, double b_ratio);

struct Interp1dResult {
    std::vector<double> coeffs;  // c_0..c_ell
    double r = 0.0;              // sup |z_j|
    double eta = 0.0;            // min pairwise gap
    double coeff_bound_sum = 0.0;  // sum |c_p| R^p
    double c0_used = 0.0;
    bool bound_ok = false;
    double eval(double x) const;
};

Interp1dResult interpolate_1d(const std::vector<double>& nodes, const std::vector<double>& values,
                              double b_ratio_cap);

struct Interp2dResult {
    int degree = 0;                 // tensor degree per axis
    std::vector<double> coeffs;     // c_pq at index p*(degree+1)+q
    double r = 0.0;
    double eta = 0.0;
    double condition = 0.0;
    double coeff_bound_sum = 0.0;   // sum |c_pq| R^(p+q)
    double c0_used = 0.0;
    bool bound_ok = false;
    double eval(Vec2 z) const;
    double coeff(int p, int q) const { return coeffs[static_cast<std::size_t>(p) * (degree + 1) + q]; }
};

// Tensor-degree interpolation on (degree+1)^2 points by direct solve with
// condition monitoring (> 1e12 rejected).
Interp2dResult interpolate_rect(const std::vector<Vec2>& points,
                                const std::vector<double>& values, int degree,
                                double b_ratio_cap);

struct InterpolationGrid {
    std::vector<Vec2> points;
    std::vector<double> xs, ys;
    double r = 0.0;
    double eta = 0.0;
    double ratio_bound = 0.0;
};

// One interpolation set S_m = {0} u (H_m x {0}) u ({0} x V_m) u J_m.
struct GridSet {
    int m = 0;
    std::vector<Vec2> points;    // full S_m, (ell+2)^2 points
    std::vector<Vec2> j_points;  // the (ell+1)^2 rectangle J_m
    double r_m = 0.0;            // sup |z| over J_m
    double eta_m = 0.0;          // min pairwise distance over J_m
    double ratio = 0.0;          // r_m / eta_m
};

// Geometric grid sequence from plaque intersections; the vertical plaque
// closest to w is replaced by the plaque through w.  Verifies
// R_m <= 3 r^((m-1)/2) and the ratio bound 6 r^(ell-2).
std::vector<GridSet> build_grids(const PlaquePair& plaques, double r, int ell, Vec2 w, int m_lo,
                                 int m_hi, double kappa = 2.0);

struct JourneRow {
    int m = 0;
    double r_m = 0.0;
    double eta_m = 0.0;
    double ratio = 0.0;
    double decay_exponent = 0.0;  // local coefficient-difference exponent; NaN on last row
};

struct JourneReport {
    int ell = 0;
    double alpha = 0.0;
    std::vector<double> limit_coeffs;  // degree-<=ell part, index p*(ell+1)+q for p+q<=ell
    std::vector<JourneRow> rows;
    std::map<std::pair<int, int>, double> decay_exponents;  // fitted per (p,q), p+q <= ell
    double max_coeff_diff_last = 0.0;
    double max_residual_ratio = 0.0;  // sup |psi - poly| / |z|^(ell+alpha) on the cone sample
    double limit_eval(Vec2 z) const;
};

JourneReport journe_limit_poly(const std::function<double(Vec2)>& psi, const PlaquePair& plaques,
                               int ell, double alpha, double r, Vec2 w, int m_lo, int m_hi,
                               double kappa = 2.0);

struct ExpansionReport {
    int ell = 0;
    double alpha = 0.0;
    std::vector<double> coeffs;  // degree-<=ell 2-D polynomial around the center
    double c = 0.0;              // max residual ratio
    bool admits = false;
    double eval(Vec2 dz) const;
};

// Least-squares degree-<=ell fit on the inner half of the samples; C is the
// max of |psi(z') - p(z')| / |z'-z|^(ell+alpha) over all samples.
ExpansionReport expansion_fit(const std::vector<std::pair<Vec2, double>>& samples, Vec2 center,
                              int ell, double alpha, double c_cap);

struct HolderPairSample {
    double pair_dist = 0.0;
    double delta = 0.0;
    double log_dist = 0.0;
    double log_delta = 0.0;
};

struct HolderEstimate {
    double alpha_hat = 0.0;
    double r2 = 0.0;
    int n_pairs = 0;
    bool flagged = false;  // set when the function looks constant at the sampled scales
    std::vector<HolderPairSample> pairs;
};

// Robust (median-of-slopes) fit of log |delta psi| against log distance over
// pseudorandom close pairs.
HolderEstimate holder_exponent_estimate(const std::function<double(double)>& f, double lo,
                                        double hi, double d_min, double d_max, int pair_budget,
                                        std::uint64_t seed);

// Same estimator fed by values on the n x n torus grid (index i*n + j).
HolderEstimate holder_exponent_grid(const std::vector<double>& values, int grid_n,
                                    int pair_budget, std::uint64_t seed);

// Classical lacunary test function sum_{k<=20} 2^-k cos(2 pi 3^k x); Holder
// exponent ln 2 / ln 3.
double weierstrass_fixture(double x);

}  // namespace livlab
