#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "livlab/cocycle.hpp"
#include "livlab/pcf.hpp"
#include "livlab/torus.hpp"

namespace livlab {

// Values of the reconstructed transfer function on the n x n uniform torus
// grid, node (i,j) at (i/n, j/n), storage index i*n + j.
struct TransferSolution {
    int grid_n = 0;
    std::vector<double> values;
    std::vector<double> errors;  // per-node PCF truncation bound
    double c = 0.0;
    TorusPoint anchor;
    double residual_sup = -1.0;        // filled by residual()
    double consistency_spread = -1.0;  // filled by consistency_check()
    double spread_allowance = 0.0;     // certified error allowance for the spread

    double value_at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid_n + j]; }
    // Periodic bilinear interpolation of the grid values.
    double interpolate(TorusPoint p) const;
};

struct ObstructionWitness {
    enum class Kind { periodic_orbit, accessible_cycle };
    Kind kind = Kind::periodic_orbit;
    std::variant<std::vector<TorusPoint>, AccessibleCycle> payload;
    double magnitude = 0.0;
    double certified_floor = 0.0;  // magnitude minus the error bound
};

// c forced by integration against the invariant volume; the Fourier mean.
double mean_constant(const FourierCocycle& phi);

// Birkhoff sums of (phi - c) over every orbit of period <= max_period;
// witnesses with certified floor above 1e-9 are returned sorted by
// decreasing magnitude.
std::vector<ObstructionWitness> periodic_obstruction(const FourierCocycle& phi,
                                                     const HyperbolicAutomorphism& map,
                                                     int max_period);

// Anchored su-path reconstruction: Phi(y) = -PCF over su_path(anchor, y) of
// (phi - c), Phi(anchor) = 0.  The sign makes Phi solve
// phi = Phi o A - Phi + c directly (checked by residual()).
TransferSolution solve_via_su_paths(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                                    TorusPoint anchor, int grid_n, double tol,
                                    double bracket_radius = 2.0);

// Recompute Phi at sampled nodes along alternate su-paths (forced lattice
// translates and detours through random intermediate points); the spread
// max(recomputed) - min(recomputed) equals the max |PCF| over the induced
// cycles.  Stores spread and its certified allowance in sol.
double consistency_check(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                         TransferSolution& sol, int n_alternates, std::uint64_t seed,
                         double tol = 1e-7, double bracket_radius = 2.0);

// sup over cell-midpoints p of |phi(p) - Phi(Ap) + Phi(p) - c| with Phi the
// bilinear interpolant; midpoints rather than nodes so the interpolation is
// actually exercised (A maps grid nodes to grid nodes exactly).
double residual(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                TransferSolution& sol);

struct ClassifyConfig {
    TorusPoint anchor{0.0, 0.0};
    int grid_n = 64;
    double tol = 1e-7;
    int max_period = 8;
    int n_alternates = 4;
    std::uint64_t seed = 1;
    double bracket_radius = 2.0;
    double witness_tol = 1e-9;
};

struct ClassifyResult {
    enum class Verdict { coboundary, obstructed };
    Verdict verdict = Verdict::coboundary;
    TransferSolution solution;
    std::optional<ObstructionWitness> witness;
};

// Obstructed when a periodic witness or the consistency spread exceeds its
// certified floor threshold; otherwise Coboundary ("no obstruction found at
// the tested scale").
ClassifyResult classify(const FourierCocycle& phi, const HyperbolicAutomorphism& map,
                        const ClassifyConfig& config);

}  // namespace livlab
