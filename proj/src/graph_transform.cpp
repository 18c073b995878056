#include "livlab/graph_transform.hpp"

#include <algorithm>
#include <cmath>

#include "livlab/error.hpp"

namespace livlab {

LeafGraph LeafGraph::zero(TorusPoint base, double delta, double alpha, int n_samples) {
    if (n_samples < 5 || n_samples % 2 == 0)
        fail(ErrorKind::invalid_input, "LeafGraph: sample count must be odd and >= 5");
    if (!(delta > 0.0)) fail(ErrorKind::invalid_input, "LeafGraph: delta must be positive");
    if (!(alpha > 0.0 && alpha <= 1.0))
        fail(ErrorKind::invalid_input, "LeafGraph: alpha must lie in (0,1]");
    LeafGraph g;
    g.base = base;
    g.delta = delta;
    g.alpha = alpha;
    g.samples.assign(n_samples, 0.0);
    return g;
}

namespace {

// Fritsch-Carlson slopes for monotone cubic interpolation on a uniform grid.
std::vector<double> fc_slopes(const std::vector<double>& y, double h) {
    int n = static_cast<int>(y.size());
    std::vector<double> d(n - 1), m(n);
    for (int i = 0; i < n - 1; ++i) d[i] = (y[i + 1] - y[i]) / h;
    m[0] = d[0];
    m[n - 1] = d[n - 2];
    for (int i = 1; i < n - 1; ++i)
        m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    for (int i = 0; i < n - 1; ++i) {
        if (d[i] == 0.0) {
            m[i] = 0.0;
            m[i + 1] = 0.0;
            continue;
        }
        double a = m[i] / d[i], b = m[i + 1] / d[i];
        double s = a * a + b * b;
        if (s > 9.0) {
            double f = 3.0 / std::sqrt(s);
            m[i] = f * a * d[i];
            m[i + 1] = f * b * d[i];
        }
    }
    return m;
}

}  // namespace

std::vector<double> LeafGraph::interpolation_slopes() const { return fc_slopes(samples, step()); }

double LeafGraph::interpolate_with(const std::vector<double>& slopes, double u) const {
    int n = size();
    double h = step();
    if (u < -delta - 1e-12 || u > delta + 1e-12)
        fail(ErrorKind::invalid_input, "LeafGraph::interpolate: parameter outside [-delta,delta]");
    double pos = (u + delta) / h;
    int i = static_cast<int>(std::floor(pos));
    i = std::clamp(i, 0, n - 2);
    double t = pos - i;
    if (t < 1e-14) return samples[i];
    if (t > 1.0 - 1e-14) return samples[i + 1];
    double y0 = samples[i], y1 = samples[i + 1];
    double m0 = slopes[i] * h, m1 = slopes[i + 1] * h;
    double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * y1 +
           (t3 - t2) * m1;
}

double LeafGraph::interpolate(double u) const { return interpolate_with(interpolation_slopes(), u); }

double LeafGraph::alpha_norm() const {
    int n = size();
    int mid = (n - 1) / 2;
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == mid) continue;
        double u = param(i);
        best = std::max(best, std::fabs(samples[i]) / std::pow(std::fabs(u), alpha));
    }
    return best;
}

double LeafGraph::sup_norm() const {
    double best = 0.0;
    for (double v : samples) best = std::max(best, std::fabs(v));
    return best;
}

TorusPoint LeafGraph::leaf_point(const HyperbolicAutomorphism& map, double u) const {
    return wrap(lift(base) + u * map.dir_u());
}

double LeafGraph::interpolation_error_bound(const HyperbolicAutomorphism& map) const {
    double h = step();
    int n = size();
    double second = 0.0;
    for (int i = 1; i + 1 < n; ++i)
        second = std::max(second,
                          std::fabs(samples[i + 1] - 2.0 * samples[i] + samples[i - 1]) / (h * h));
    double per_step = h * h / 8.0 * second;
    double rate = std::pow(std::fabs(map.lambda_u()), -alpha);
    return per_step / (1.0 - rate);
}

LeafGraph graph_transform_step(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                               const LeafGraph& g) {
    if (torus_distance(map.apply(g.base), g.base) > 1e-12)
        fail(ErrorKind::invalid_base, "graph_transform_step: base is not a fixed point");
    LeafGraph out = g;
    double inv = 1.0 / map.lambda_u();
    double phi_base = phi.eval(g.base);
    int n = g.size();
    std::vector<double> slopes = g.interpolation_slopes();
    for (int i = 0; i < n; ++i) {
        double u_pre = g.param(i) * inv;
        out.samples[i] =
            g.interpolate_with(slopes, u_pre) + phi.eval(g.leaf_point(map, u_pre)) - phi_base;
    }
    int mid = (n - 1) / 2;
    out.samples[mid] = 0.0;  // u = 0 maps to itself; pin the normalization exactly
    return out;
}

FixedPointResult iterate_to_fixed_point(const FourierCocycle& phi,
                                        const HyperbolicAutomorphism& map, LeafGraph g0,
                                        int max_iter, double tol) {
    if (max_iter < 1) fail(ErrorKind::invalid_input, "iterate_to_fixed_point: max_iter >= 1");
    if (!(tol > 0.0)) fail(ErrorKind::invalid_input, "iterate_to_fixed_point: tol must be positive");
    FixedPointResult res;
    std::vector<double> deltas;
    LeafGraph cur = std::move(g0);
    for (int it = 1; it <= max_iter; ++it) {
        LeafGraph next = graph_transform_step(phi, map, cur);
        double d = 0.0;
        for (int i = 0; i < cur.size(); ++i)
            d = std::max(d, std::fabs(next.samples[i] - cur.samples[i]));
        cur = std::move(next);
        res.iterations = it;
        res.final_delta = d;
        deltas.push_back(d);
        if (d <= tol) {
            double logsum = 0.0;
            int count = 0;
            for (std::size_t k = 1; k < deltas.size(); ++k) {
                if (deltas[k] > 0.0 && deltas[k - 1] > 0.0) {
                    logsum += std::log(deltas[k] / deltas[k - 1]);
                    ++count;
                }
            }
            res.rate_estimate = count > 0 ? std::exp(logsum / count) : 0.0;
            res.graph = std::move(cur);
            return res;
        }
    }
    fail(ErrorKind::non_convergence, "iterate_to_fixed_point: max_iter exceeded");
}

}  // namespace livlab
