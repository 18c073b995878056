#pragma once

#include <vector>

#include "livlab/cocycle.hpp"
#include "livlab/torus.hpp"

namespace livlab {

// Graph over the unstable leaf through a fixed point of the base map:
// samples of g on a uniform grid of the leaf parameter u in [-delta, delta]
// (odd sample count so u = 0 is a node), with g(0) = 0 and finite alpha-norm
// max |g(u)| / |u|^alpha.
struct LeafGraph {
    TorusPoint base;
    double delta = 0.5;
    double alpha = 1.0;
    std::vector<double> samples;

    static LeafGraph zero(TorusPoint base, double delta = 0.5, double alpha = 1.0,
                          int n_samples = 2049);

    int size() const { return static_cast<int>(samples.size()); }
    double step() const { return 2.0 * delta / (size() - 1); }
    double param(int i) const { return -delta + step() * i; }

    // Monotone cubic (Fritsch-Carlson) interpolation; exact at nodes.
    double interpolate(double u) const;
    std::vector<double> interpolation_slopes() const;
    double interpolate_with(const std::vector<double>& slopes, double u) const;

    double alpha_norm() const;
    double sup_norm() const;

    // Point on the leaf at parameter u.
    TorusPoint leaf_point(const HyperbolicAutomorphism& map, double u) const;

    // Accumulation bound for the per-step interpolation error of the
    // transform iteration: (h^2/8) max|g''| estimated from second
    // differences, divided by (1 - lambda_u^-alpha).
    double interpolation_error_bound(const HyperbolicAutomorphism& map) const;
};

// One pull-back step of the leaf graph transform
//   (T g)(u) = g(u / lambda_u) + phi(point(u / lambda_u)) - phi(base),
// requiring base to be a fixed point of the map.
LeafGraph graph_transform_step(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                               const LeafGraph& g);

struct FixedPointResult {
    LeafGraph graph;
    double rate_estimate = 0.0;  // geometric mean of successive sup-distance ratios
    int iterations = 0;
    double final_delta = 0.0;
};

FixedPointResult iterate_to_fixed_point(const FourierCocycle& phi,
                                        const HyperbolicAutomorphism& map, LeafGraph g0,
                                        int max_iter, double tol);

}  // namespace livlab
