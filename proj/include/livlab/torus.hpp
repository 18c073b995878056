#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace livlab {

// Point on T^2 = R^2/Z^2, coordinates in [0,1).
struct TorusPoint {
    double x1 = 0.0;
    double x2 = 0.0;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

struct LatticeVector {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
};

// Componentwise reduction mod 1 into [0,1); rejects non-finite input.
TorusPoint wrap(double v1, double v2);
TorusPoint wrap(Vec2 v);

inline Vec2 lift(TorusPoint p) { return {p.x1, p.x2}; }

// Distance on the flat torus (shortest representative).
double torus_distance(TorusPoint a, TorusPoint b);

// Shortest lift of b - a, componentwise in [-1/2, 1/2).
Vec2 torus_delta(TorusPoint a, TorusPoint b);

// Integer 2x2 hyperbolic automorphism of T^2 with its eigen frame.
// |det| = 1, |trace| > 2; lambda_u is the eigenvalue of modulus > 1 and
// lambda_s = det/lambda_u.  Eigendirections are unit length with positive
// first component (second positive when the first vanishes).
class HyperbolicAutomorphism {
  public:
    static HyperbolicAutomorphism from_matrix(std::int64_t a, std::int64_t b, std::int64_t c,
                                              std::int64_t d);

    std::array<std::int64_t, 4> entries() const { return {a_, b_, c_, d_}; }
    std::int64_t det() const { return a_ * d_ - b_ * c_; }
    std::int64_t trace() const { return a_ + d_; }

    double lambda_u() const { return lambda_u_; }
    double lambda_s() const { return lambda_s_; }
    Vec2 dir_u() const { return v_u_; }
    Vec2 dir_s() const { return v_s_; }

    TorusPoint apply(TorusPoint p) const;
    TorusPoint apply_inverse(TorusPoint p) const;
    Vec2 apply_linear(Vec2 v) const;
    Vec2 apply_inverse_linear(Vec2 v) const;

    // Transpose action on lattice vectors (exact), used for Fourier modes.
    LatticeVector transpose_apply(LatticeVector k) const;

    // Inverse matrix entries (integer because |det| = 1).
    std::array<std::int64_t, 4> inverse_entries() const;

  private:
    HyperbolicAutomorphism() = default;
    std::int64_t a_ = 0, b_ = 0, c_ = 0, d_ = 0;
    double lambda_u_ = 0.0, lambda_s_ = 0.0;
    Vec2 v_u_, v_s_;
};

// Convenience: the standard cat map [[2,1],[1,1]].
HyperbolicAutomorphism cat_map();

enum class LegKind { stable, unstable };

// One leaf arc: from start to end inside a single stable or unstable leaf,
// displacement measured in signed eigencoordinate length in the lift.
struct SuLeg {
    LegKind kind = LegKind::stable;
    TorusPoint start;
    TorusPoint end;
    double displacement = 0.0;
};

struct SuPath {
    std::vector<SuLeg> legs;
    TorusPoint anchor;
};

struct AccessibleCycle {
    SuPath path;
};

struct BracketResult {
    TorusPoint point;                // z = W^u(x) cap W^s(y) for the chosen translate
    SuLeg unstable_leg;              // x -> z
    SuLeg stable_leg;                // z -> y
    LatticeVector lattice;           // translate applied to lift(y)
    double s = 0.0;                  // unstable coordinate of z - x
    double t = 0.0;                  // stable coordinate of z - (y + k)
};

// Local product bracket, computed in the universal cover: solve
// lift(x) + s v_u = lift(y) + t v_s + k over lattice vectors ||k|| <= radius,
// keeping the solution minimizing |s|+|t| (ties: lexicographically smallest
// (k1,k2)).  radius <= 0 leaves an empty search set.
BracketResult bracket(const HyperbolicAutomorphism& map, TorusPoint x, TorusPoint y,
                      double radius);

// Two-leg su-path x -> bracket point -> y.
SuPath su_path(const HyperbolicAutomorphism& map, TorusPoint x, TorusPoint y, double radius);

// As su_path but with a forced lattice translate instead of the minimizer.
SuPath su_path_via(const HyperbolicAutomorphism& map, TorusPoint x, TorusPoint y,
                   LatticeVector k);

// Four-leg cycle with eigencoordinate displacements (+a,u) (+b,s) (-a,u) (-b,s);
// closes exactly because the leaf translations commute.
AccessibleCycle quad_cycle(const HyperbolicAutomorphism& map, TorusPoint x, double a, double b);

SuPath reverse_path(const SuPath& path);
SuPath concat_paths(const SuPath& first, const SuPath& second);

// All orbits of points with A^n p = p (mod Z^2); total point count equals
// |det(A^n - I)|.  n in [1, max_n]; integer overflow in A^n is rejected.
std::vector<std::vector<TorusPoint>> periodic_points(const HyperbolicAutomorphism& map, int n,
                                                     int max_n = 12);

}  // namespace livlab
