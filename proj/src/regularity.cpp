#include "livlab/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "livlab/error.hpp"
#include "livlab/matrix.hpp"
#include "livlab/rng.hpp"

namespace livlab {

PlaquePair PlaquePair::flat(int ell, double alpha) {
    PlaquePair p;
    p.beta_h = [](Vec2, double) { return 0.0; };
    p.beta_v = [](Vec2, double) { return 0.0; };
    p.ell = ell;
    p.alpha = alpha;
    p.norm_bound = 0.0;
    return p;
}

// Calibration table for C_0(B), degree <= 5.  Procedure (frozen): for each
// (ell, B) cell, 4000 node sets z_0..z_ell ~ U(-B, B) filtered to R/eta <= B,
// values b_j ~ U(-1, 1), record max of sum_p |c_p| R^p / sup|b_j|; the table
// stores twice that maximum (safety factor 2).  Generator: mt19937_64(2024).
namespace {

const double kC0Table[5][10] = {
    // B:    2        4        6        8        12       16       24       32       48       64
    /*l=1*/ {14.0,   26.0,    38.0,    50.0,    74.0,    98.0,    146.0,   194.0,   290.0,   386.0},
    /*l=2*/ {40.0,   140.0,   300.0,   520.0,   1.14e3,  2.0e3,   4.4e3,   7.8e3,   1.75e4,  3.1e4},
    /*l=3*/ {100.0,  600.0,   1.9e3,   4.4e3,   1.44e4,  3.4e4,   1.13e5,  2.66e5,  8.9e5,   2.1e6},
    /*l=4*/ {240.0,  2.4e3,   1.1e4,   3.4e4,   1.66e5,  5.2e5,   2.6e6,   8.2e6,   4.1e7,   1.3e8},
    /*l=5*/ {560.0,  9.2e3,   6.0e4,   2.5e5,   1.8e6,   7.6e6,   5.7e7,   2.4e8,   1.8e9,   7.6e9},
};
const double kC0Buckets[10] = {2, 4, 6, 8, 12, 16, 24, 32, 48, 64};

}  // namespace

double c0_calibrated(int ell, double b_ratio) {
    if (ell < 1 || ell > 5)
        fail(ErrorKind::invalid_input, "c0_calibrated: degree outside calibrated range [1,5]");
    if (!(b_ratio >= 1.0) || b_ratio > kC0Buckets[9])
        fail(ErrorKind::invalid_input, "c0_calibrated: ratio outside calibrated range");
    for (int i = 0; i < 10; ++i)
        if (b_ratio <= kC0Buckets[i] + 1e-12) return kC0Table[ell - 1][i];
    return kC0Table[ell - 1][9];
}

double Interp1dResult::eval(double x) const {
    double s = 0.0;
    for (int p = static_cast<int>(coeffs.size()) - 1; p >= 0; --p) s = s * x + coeffs[p];
    return s;
}

Interp1dResult interpolate_1d(const std::vector<double>& nodes, const std::vector<double>& values,
                              double b_ratio_cap) {
    if (nodes.size() != values.size() || nodes.size() < 2)
        fail(ErrorKind::invalid_input, "interpolate_1d: need matching nodes/values, >= 2 of them");
    int n = static_cast<int>(nodes.size());
    Interp1dResult res;
    res.r = 0.0;
    res.eta = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        res.r = std::max(res.r, std::fabs(nodes[i]));
        for (int j = i + 1; j < n; ++j)
            res.eta = std::min(res.eta, std::fabs(nodes[i] - nodes[j]));
    }
    if (!(res.eta > 0.0)) fail(ErrorKind::singular_system, "interpolate_1d: coincident nodes");

    Mat vand(n, n), rhs(n, 1);
    for (int i = 0; i < n; ++i) {
        double p = 1.0;
        for (int j = 0; j < n; ++j) {
            vand.at(i, j) = p;
            p *= nodes[i];
        }
        rhs.at(i, 0) = values[i];
    }
    Mat sol = vand.solve(rhs);
    res.coeffs.resize(n);
    for (int i = 0; i < n; ++i) res.coeffs[i] = sol.at(i, 0);

    double sup_b = 0.0;
    for (double v : values) sup_b = std::max(sup_b, std::fabs(v));
    double rp = 1.0;
    for (int p = 0; p < n; ++p) {
        res.coeff_bound_sum += std::fabs(res.coeffs[p]) * rp;
        rp *= res.r;
    }
    res.c0_used = c0_calibrated(n - 1, b_ratio_cap);
    res.bound_ok = res.coeff_bound_sum <= res.c0_used * sup_b + 1e-12;
    return res;
}

double Interp2dResult::eval(Vec2 z) const {
    double s = 0.0;
    for (int p = 0; p <= degree; ++p)
        for (int q = 0; q <= degree; ++q) {
            double c = coeff(p, q);
            if (c == 0.0) continue;
            s += c * std::pow(z.x, p) * std::pow(z.y, q);
        }
    return s;
}

Interp2dResult interpolate_rect(const std::vector<Vec2>& points,
                                const std::vector<double>& values, int degree,
                                double b_ratio_cap) {
    int d1 = degree + 1;
    int n = d1 * d1;
    if (static_cast<int>(points.size()) != n || points.size() != values.size())
        fail(ErrorKind::invalid_input, "interpolate_rect: need exactly (degree+1)^2 points");
    Interp2dResult res;
    res.degree = degree;
    res.r = 0.0;
    res.eta = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        res.r = std::max(res.r, std::hypot(points[i].x, points[i].y));
        for (int j = i + 1; j < n; ++j)
            res.eta = std::min(res.eta, std::hypot(points[i].x - points[j].x,
                                                   points[i].y - points[j].y));
    }
    if (!(res.eta > 0.0)) fail(ErrorKind::singular_system, "interpolate_rect: coincident points");

    // scale coordinates by 1/R for conditioning; unscale coefficients after
    double scale = res.r > 0.0 ? res.r : 1.0;
    Mat m(n, n), rhs(n, 1);
    for (int i = 0; i < n; ++i) {
        double zx = points[i].x / scale, zy = points[i].y / scale;
        for (int p = 0; p <= degree; ++p)
            for (int q = 0; q <= degree; ++q)
                m.at(i, p * d1 + q) = std::pow(zx, p) * std::pow(zy, q);
        rhs.at(i, 0) = values[i];
    }
    res.condition = m.condition_1();
    if (!(res.condition < 1e12))
        fail(ErrorKind::grid_degenerate, "interpolate_rect: grid condition number above 1e12");
    Mat sol = m.solve(rhs);
    res.coeffs.assign(n, 0.0);
    for (int p = 0; p <= degree; ++p)
        for (int q = 0; q <= degree; ++q)
            res.coeffs[p * d1 + q] = sol.at(p * d1 + q, 0) / std::pow(scale, p + q);

    double sup_b = 0.0;
    for (double v : values) sup_b = std::max(sup_b, std::fabs(v));
    for (int p = 0; p <= degree; ++p)
        for (int q = 0; q <= degree; ++q)
            res.coeff_bound_sum += std::fabs(res.coeff(p, q)) * std::pow(res.r, p + q);
    res.c0_used = c0_calibrated(std::min(degree, 5), std::min(b_ratio_cap, 64.0));
    // the rectangle constant inherits the 1-D table squared (tensor structure)
    res.c0_used = res.c0_used * res.c0_used;
    res.bound_ok = res.coeff_bound_sum <= res.c0_used * sup_b + 1e-12;
    return res;
}

namespace {

// Intersection of the vertical plaque through zv with the horizontal plaque
// through zh, by bisection on the vertical parameter.
Vec2 plaque_intersection(const PlaquePair& pl, Vec2 zv, Vec2 zh) {
    auto xv = [&](double y) { return zv.x + pl.beta_v(zv, y - zv.y); };
    auto g = [&](double y) { return zh.y + pl.beta_h(zh, xv(y) - zh.x) - y; };
    double lo = zh.y - 0.6, hi = zh.y + 0.6;
    double glo = g(lo), ghi = g(hi);
    int widen = 0;
    while (glo * ghi > 0.0 && widen < 4) {
        lo -= 0.1;
        hi += 0.1;
        glo = g(lo);
        ghi = g(hi);
        ++widen;
    }
    if (glo * ghi > 0.0)
        fail(ErrorKind::domain_exhausted, "plaque intersection not found inside plaque domain");
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (glo * gm <= 0.0) {
            hi = mid;
            ghi = gm;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    double y = 0.5 * (lo + hi);
    return {xv(y), y};
}

}  // namespace

std::vector<GridSet> build_grids(const PlaquePair& plaques, double r, int ell, Vec2 w, int m_lo,
                                 int m_hi, double kappa) {
    if (!(r > 0.0 && r < 1.0)) fail(ErrorKind::invalid_input, "build_grids: r must lie in (0,1)");
    if (ell < 1) fail(ErrorKind::invalid_input, "build_grids: ell must be >= 1");
    if (m_lo < 2 || m_hi < m_lo) fail(ErrorKind::invalid_input, "build_grids: bad m range");
    bool has_w = (w.x != 0.0 || w.y != 0.0);
    if (has_w && std::fabs(w.y) > kappa * std::fabs(w.x))
        fail(ErrorKind::invalid_input, "build_grids: w outside the cone");
    int j_deep = m_hi / 2 + ell + 2;
    if (std::pow(r, j_deep) < 1e-14)
        fail(ErrorKind::bound_exceeded, "build_grids: grid scale below double resolution");

    // substituted vertical plaque index
    int j_w = -1;
    double xw = 0.0;
    if (has_w) {
        xw = w.x + plaques.beta_v(w, -w.y);  // x-intercept of F^V(w)
        double best = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= j_deep; ++j) {
            double d = std::fabs(xw - std::pow(r, j));
            if (d < best) {
                best = d;
                j_w = j;
            }
        }
    }

    auto vertical_center = [&](int j) -> Vec2 {
        if (has_w && j == j_w) return w;
        return {std::pow(r, j), 0.0};
    };
    auto x_intercept = [&](int j) -> double {
        if (has_w && j == j_w) return xw;
        return std::pow(r, j);
    };

    std::vector<GridSet> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        int jj = m / 2;
        int kk = (m % 2 == 0) ? jj : jj + 1;
        GridSet gs;
        gs.m = m;
        gs.points.push_back({0.0, 0.0});
        for (int j = jj; j <= jj + ell; ++j) gs.points.push_back({x_intercept(j), 0.0});
        for (int k = kk; k <= kk + ell; ++k) gs.points.push_back({0.0, std::pow(r, k)});
        for (int j = jj; j <= jj + ell; ++j)
            for (int k = kk; k <= kk + ell; ++k) {
                Vec2 z = plaque_intersection(plaques, vertical_center(j), {0.0, std::pow(r, k)});
                gs.points.push_back(z);
                gs.j_points.push_back(z);
            }
        gs.r_m = 0.0;
        gs.eta_m = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < gs.j_points.size(); ++i) {
            gs.r_m = std::max(gs.r_m, std::hypot(gs.j_points[i].x, gs.j_points[i].y));
            for (std::size_t j2 = i + 1; j2 < gs.j_points.size(); ++j2)
                gs.eta_m = std::min(gs.eta_m, std::hypot(gs.j_points[i].x - gs.j_points[j2].x,
                                                         gs.j_points[i].y - gs.j_points[j2].y));
        }
        gs.ratio = gs.r_m / gs.eta_m;
        if (gs.r_m > 3.0 * std::pow(r, (m - 1) / 2.0) + 1e-12)
            fail(ErrorKind::grid_degenerate, "build_grids: R_m bound violated");
        if (gs.ratio > 6.0 * std::pow(r, ell - 2) + 1e-9)
            fail(ErrorKind::grid_degenerate, "build_grids: ratio bound violated");
        out.push_back(std::move(gs));
    }
    return out;
}

double JourneReport::limit_eval(Vec2 z) const {
    double s = 0.0;
    int d1 = ell + 1;
    for (int p = 0; p <= ell; ++p)
        for (int q = 0; q <= ell - p; ++q) {
            double c = limit_coeffs[p * d1 + q];
            if (c != 0.0) s += c * std::pow(z.x, p) * std::pow(z.y, q);
        }
    return s;
}

JourneReport journe_limit_poly(const std::function<double(Vec2)>& psi, const PlaquePair& plaques,
                               int ell, double alpha, double r, Vec2 w, int m_lo, int m_hi,
                               double kappa) {
    if (!(alpha > 0.0 && alpha < 1.0))
        fail(ErrorKind::invalid_input, "journe_limit_poly: alpha must lie in (0,1)");
    auto grids = build_grids(plaques, r, ell, w, m_lo, m_hi, kappa);

    JourneReport rep;
    rep.ell = ell;
    rep.alpha = alpha;
    int d1 = ell + 1;
    double ratio_cap = 6.0 * std::pow(r, ell - 2);

    std::vector<std::vector<double>> low_parts;  // degree-<=ell coeffs per m
    std::vector<double> scales;                  // R_m per m
    for (const GridSet& gs : grids) {
        std::vector<double> values;
        for (Vec2 z : gs.points) values.push_back(psi(z));
        Interp2dResult fit = interpolate_rect(gs.points, values, ell + 1, std::max(8.0, ratio_cap));
        std::vector<double> low(static_cast<std::size_t>(d1) * d1, 0.0);
        for (int p = 0; p <= ell; ++p)
            for (int q = 0; q <= ell - p; ++q) low[p * d1 + q] = fit.coeff(p, q);
        low_parts.push_back(std::move(low));
        scales.push_back(gs.r_m);
        rep.rows.push_back({gs.m, gs.r_m, gs.eta_m, gs.ratio,
                            std::numeric_limits<double>::quiet_NaN()});
    }

    rep.limit_coeffs = low_parts.back();

    // per-row local decay exponent and per-(p,q) fitted exponents
    for (std::size_t i = 0; i + 1 < low_parts.size(); ++i) {
        double diff = 0.0;
        for (std::size_t k = 0; k < low_parts[i].size(); ++k)
            diff = std::max(diff, std::fabs(low_parts[i + 1][k] - low_parts[i][k]));
        if (i + 2 < low_parts.size()) {
            double diff2 = 0.0;
            for (std::size_t k = 0; k < low_parts[i].size(); ++k)
                diff2 = std::max(diff2, std::fabs(low_parts[i + 2][k] - low_parts[i + 1][k]));
            if (diff > 0.0 && diff2 > 0.0)
                rep.rows[i].decay_exponent =
                    std::log(diff2 / diff) / std::log(scales[i + 1] / scales[i]);
        }
        if (i + 2 == low_parts.size()) rep.max_coeff_diff_last = diff;
    }

    for (int p = 0; p <= ell; ++p)
        for (int q = 0; q <= ell - p; ++q) {
            // least-squares slope of log|dc| against log R_m
            std::vector<double> xs, ys;
            for (std::size_t i = 0; i + 1 < low_parts.size(); ++i) {
                double d = std::fabs(low_parts[i + 1][p * d1 + q] - low_parts[i][p * d1 + q]);
                if (d > 1e-14) {
                    xs.push_back(std::log(scales[i]));
                    ys.push_back(std::log(d));
                }
            }
            if (xs.size() >= 2) {
                double mx = 0, my = 0;
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    mx += xs[i];
                    my += ys[i];
                }
                mx /= xs.size();
                my /= ys.size();
                double num = 0, den = 0;
                for (std::size_t i = 0; i < xs.size(); ++i) {
                    num += (xs[i] - mx) * (ys[i] - my);
                    den += (xs[i] - mx) * (xs[i] - mx);
                }
                if (den > 0) rep.decay_exponents[{p, q}] = num / den;
            }
        }

    // residual ratios on the cone
    Rng rng(20240917u);
    double rho_hi = scales.front();
    double rho_lo = scales.back();
    for (int s = 0; s < 400; ++s) {
        double mag = rng.log_uniform(rho_lo, rho_hi);
        double u = rng.sign() * mag;
        double v = rng.uniform(-kappa, kappa) * u;
        Vec2 z{u, v};
        double zn = std::hypot(z.x, z.y);
        if (zn < 1e-14) continue;
        double ratio = std::fabs(psi(z) - rep.limit_eval(z)) / std::pow(zn, ell + alpha);
        rep.max_residual_ratio = std::max(rep.max_residual_ratio, ratio);
    }
    return rep;
}

double ExpansionReport::eval(Vec2 dz) const {
    double s = 0.0;
    int d1 = ell + 1;
    for (int p = 0; p <= ell; ++p)
        for (int q = 0; q <= ell - p; ++q) {
            double c = coeffs[p * d1 + q];
            if (c != 0.0) s += c * std::pow(dz.x, p) * std::pow(dz.y, q);
        }
    return s;
}

ExpansionReport expansion_fit(const std::vector<std::pair<Vec2, double>>& samples, Vec2 center,
                              int ell, double alpha, double c_cap) {
    int n_coeff = (ell + 1) * (ell + 2) / 2;
    if (static_cast<int>(samples.size()) < n_coeff)
        fail(ErrorKind::degenerate_samples, "expansion_fit: not enough samples");

    // inner half by radius
    std::vector<double> radii;
    for (const auto& [z, v] : samples) radii.push_back(std::hypot(z.x - center.x, z.y - center.y));
    std::vector<double> sorted = radii;
    std::sort(sorted.begin(), sorted.end());
    double r_half = sorted[sorted.size() / 2];

    std::vector<std::pair<int, int>> expos;
    for (int p = 0; p <= ell; ++p)
        for (int q = 0; q <= ell - p; ++q) expos.push_back({p, q});

    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (radii[i] <= r_half) inner.push_back(i);
    if (static_cast<int>(inner.size()) < n_coeff)
        for (std::size_t i = 0; i < samples.size(); ++i)
            if (radii[i] > r_half) inner.push_back(i);

    // normal equations
    Mat ata(n_coeff, n_coeff), atb(n_coeff, 1);
    for (std::size_t idx : inner) {
        Vec2 dz{samples[idx].first.x - center.x, samples[idx].first.y - center.y};
        std::vector<double> row(n_coeff);
        for (int k = 0; k < n_coeff; ++k)
            row[k] = std::pow(dz.x, expos[k].first) * std::pow(dz.y, expos[k].second);
        for (int a = 0; a < n_coeff; ++a) {
            for (int b = 0; b < n_coeff; ++b) ata.at(a, b) += row[a] * row[b];
            atb.at(a, 0) += row[a] * samples[idx].second;
        }
    }
    Mat sol;
    try {
        sol = ata.solve(atb);
    } catch (const Error&) {
        fail(ErrorKind::degenerate_samples, "expansion_fit: degenerate sample geometry");
    }

    ExpansionReport rep;
    rep.ell = ell;
    rep.alpha = alpha;
    rep.coeffs.assign(static_cast<std::size_t>(ell + 1) * (ell + 1), 0.0);
    for (int k = 0; k < n_coeff; ++k)
        rep.coeffs[expos[k].first * (ell + 1) + expos[k].second] = sol.at(k, 0);

    rep.c = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (radii[i] < 1e-300) continue;
        Vec2 dz{samples[i].first.x - center.x, samples[i].first.y - center.y};
        double resid = std::fabs(samples[i].second - rep.eval(dz));
        rep.c = std::max(rep.c, resid / std::pow(radii[i], ell + alpha));
    }
    rep.admits = rep.c <= c_cap;
    return rep;
}

namespace {

HolderEstimate estimate_from_points(std::vector<HolderPairSample> pts, std::size_t degenerate,
                                    Rng& rng) {
    HolderEstimate est;
    est.pairs = std::move(pts);
    est.n_pairs = static_cast<int>(est.pairs.size());
    if (degenerate > est.pairs.size()) {
        est.flagged = true;
        return est;
    }
    if (est.pairs.size() < 8) {
        est.flagged = true;
        return est;
    }

    // Theil-Sen over random well-separated index pairs
    std::vector<double> slopes;
    int budget = static_cast<int>(est.pairs.size()) * 4;
    for (int t = 0; t < budget; ++t) {
        std::size_t i = static_cast<std::size_t>(rng.uniform_int(0, est.n_pairs - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform_int(0, est.n_pairs - 1));
        double dx = est.pairs[i].log_dist - est.pairs[j].log_dist;
        if (std::fabs(dx) < 0.5) continue;
        slopes.push_back((est.pairs[i].log_delta - est.pairs[j].log_delta) / dx);
    }
    if (slopes.size() < 8) {
        est.flagged = true;
        return est;
    }
    std::sort(slopes.begin(), slopes.end());
    est.alpha_hat = slopes[slopes.size() / 2];

    // r^2 of the ordinary least-squares fit
    double mx = 0, my = 0;
    for (const auto& p : est.pairs) {
        mx += p.log_dist;
        my += p.log_delta;
    }
    mx /= est.n_pairs;
    my /= est.n_pairs;
    double sxy = 0, sxx = 0, syy = 0;
    for (const auto& p : est.pairs) {
        sxy += (p.log_dist - mx) * (p.log_delta - my);
        sxx += (p.log_dist - mx) * (p.log_dist - mx);
        syy += (p.log_delta - my) * (p.log_delta - my);
    }
    est.r2 = (sxx > 0 && syy > 0) ? (sxy * sxy) / (sxx * syy) : 0.0;
    return est;
}

}  // namespace

HolderEstimate holder_exponent_estimate(const std::function<double(double)>& f, double lo,
                                        double hi, double d_min, double d_max, int pair_budget,
                                        std::uint64_t seed) {
    if (pair_budget < 100)
        fail(ErrorKind::invalid_input, "holder_exponent_estimate: need at least 100 pairs");
    Rng rng(seed);
    std::vector<HolderPairSample> pts;
    std::size_t degenerate = 0;
    for (int k = 0; k < pair_budget; ++k) {
        double d = rng.log_uniform(d_min, d_max);
        double x = rng.uniform(lo, hi - d);
        double delta = std::fabs(f(x + d) - f(x));
        if (delta < 1e-300) {
            ++degenerate;
            continue;
        }
        pts.push_back({d, delta, std::log(d), std::log(delta)});
    }
    if (degenerate * 2 > static_cast<std::size_t>(pair_budget)) {
        HolderEstimate est;
        est.flagged = true;
        est.n_pairs = static_cast<int>(pts.size());
        est.pairs = std::move(pts);
        return est;
    }
    return estimate_from_points(std::move(pts), 0, rng);
}

HolderEstimate holder_exponent_grid(const std::vector<double>& values, int grid_n,
                                    int pair_budget, std::uint64_t seed) {
    if (pair_budget < 100)
        fail(ErrorKind::invalid_input, "holder_exponent_grid: need at least 100 pairs");
    if (grid_n < 8 || static_cast<int>(values.size()) != grid_n * grid_n)
        fail(ErrorKind::invalid_input, "holder_exponent_grid: bad grid");
    Rng rng(seed);
    std::vector<HolderPairSample> pts;
    std::size_t degenerate = 0;
    for (int k = 0; k < pair_budget; ++k) {
        int i = static_cast<int>(rng.uniform_int(0, grid_n - 1));
        int j = static_cast<int>(rng.uniform_int(0, grid_n - 1));
        int di = static_cast<int>(rng.uniform_int(-4, 4));
        int dj = static_cast<int>(rng.uniform_int(-4, 4));
        if (di == 0 && dj == 0) continue;
        int i2 = ((i + di) % grid_n + grid_n) % grid_n;
        int j2 = ((j + dj) % grid_n + grid_n) % grid_n;
        double dist = std::hypot(static_cast<double>(di) / grid_n, static_cast<double>(dj) / grid_n);
        double delta = std::fabs(values[static_cast<std::size_t>(i) * grid_n + j] -
                                 values[static_cast<std::size_t>(i2) * grid_n + j2]);
        if (delta < 1e-300) {
            ++degenerate;
            continue;
        }
        pts.push_back({dist, delta, std::log(dist), std::log(delta)});
    }
    if (degenerate * 2 > static_cast<std::size_t>(pair_budget)) {
        HolderEstimate est;
        est.flagged = true;
        est.n_pairs = static_cast<int>(pts.size());
        est.pairs = std::move(pts);
        return est;
    }
    return estimate_from_points(std::move(pts), 0, rng);
}

double weierstrass_fixture(double x) {
    double s = 0.0;
    double amp = 1.0, freq = 1.0;
    for (int n = 0; n <= 20; ++n) {
        s += amp * std::cos(2.0 * 3.14159265358979323846 * freq * x);
        amp *= 0.5;
        freq *= 3.0;
    }
    return s;
}

}  // namespace livlab
