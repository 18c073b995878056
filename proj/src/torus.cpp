#include "livlab/torus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "livlab/error.hpp"

namespace livlab {

namespace {

double wrap1(double v) {
    double w = v - std::floor(v);
    if (w >= 1.0) w -= 1.0;  // v a hair below an integer can round to 1.0
    if (w < 0.0) w += 1.0;
    return w;
}

double half_wrap(double v) { return v - std::floor(v + 0.5); }

}  // namespace

TorusPoint wrap(double v1, double v2) {
    if (!std::isfinite(v1) || !std::isfinite(v2))
        fail(ErrorKind::invalid_input, "wrap: non-finite coordinate");
    return {wrap1(v1), wrap1(v2)};
}

TorusPoint wrap(Vec2 v) { return wrap(v.x, v.y); }

Vec2 torus_delta(TorusPoint a, TorusPoint b) {
    return {half_wrap(b.x1 - a.x1), half_wrap(b.x2 - a.x2)};
}

double torus_distance(TorusPoint a, TorusPoint b) {
    Vec2 d = torus_delta(a, b);
    return std::hypot(d.x, d.y);
}

HyperbolicAutomorphism HyperbolicAutomorphism::from_matrix(std::int64_t a, std::int64_t b,
                                                           std::int64_t c, std::int64_t d) {
    HyperbolicAutomorphism m;
    m.a_ = a;
    m.b_ = b;
    m.c_ = c;
    m.d_ = d;
    std::int64_t det = a * d - b * c;
    std::int64_t tr = a + d;
    if (det != 1 && det != -1)
        fail(ErrorKind::not_anosov, "matrix is not in GL(2,Z): |det| != 1");
    if (std::llabs(tr) <= 2) fail(ErrorKind::not_anosov, "matrix is not hyperbolic: |trace| <= 2");

    double trd = static_cast<double>(tr);
    double disc = std::sqrt(trd * trd - 4.0 * static_cast<double>(det));
    double dominant = (trd + (trd >= 0 ? disc : -disc)) / 2.0;
    m.lambda_u_ = dominant;
    m.lambda_s_ = static_cast<double>(det) / dominant;

    auto eigvec = [&](double lambda) -> Vec2 {
        Vec2 v;
        if (std::llabs(b) >= std::llabs(c))
            v = {static_cast<double>(b), lambda - static_cast<double>(a)};
        else
            v = {lambda - static_cast<double>(d), static_cast<double>(c)};
        double nrm = std::hypot(v.x, v.y);
        if (nrm == 0.0) fail(ErrorKind::not_anosov, "degenerate eigenvector");
        v = (1.0 / nrm) * v;
        if (v.x < 0.0 || (std::fabs(v.x) < 1e-15 && v.y < 0.0)) v = -1.0 * v;
        return v;
    };
    m.v_u_ = eigvec(m.lambda_u_);
    m.v_s_ = eigvec(m.lambda_s_);

    for (auto [lam, v] : {std::pair{m.lambda_u_, m.v_u_}, std::pair{m.lambda_s_, m.v_s_}}) {
        Vec2 av = m.apply_linear(v);
        double res = std::hypot(av.x - lam * v.x, av.y - lam * v.y);
        if (res > 1e-12) fail(ErrorKind::not_anosov, "eigen frame residual above 1e-12");
    }
    return m;
}

HyperbolicAutomorphism cat_map() { return HyperbolicAutomorphism::from_matrix(2, 1, 1, 1); }

Vec2 HyperbolicAutomorphism::apply_linear(Vec2 v) const {
    return {static_cast<double>(a_) * v.x + static_cast<double>(b_) * v.y,
            static_cast<double>(c_) * v.x + static_cast<double>(d_) * v.y};
}

std::array<std::int64_t, 4> HyperbolicAutomorphism::inverse_entries() const {
    std::int64_t det = this->det();
    return {det * d_, -det * b_, -det * c_, det * a_};
}

Vec2 HyperbolicAutomorphism::apply_inverse_linear(Vec2 v) const {
    auto inv = inverse_entries();
    return {static_cast<double>(inv[0]) * v.x + static_cast<double>(inv[1]) * v.y,
            static_cast<double>(inv[2]) * v.x + static_cast<double>(inv[3]) * v.y};
}

TorusPoint HyperbolicAutomorphism::apply(TorusPoint p) const {
    return wrap(apply_linear(lift(p)));
}

TorusPoint HyperbolicAutomorphism::apply_inverse(TorusPoint p) const {
    return wrap(apply_inverse_linear(lift(p)));
}

LatticeVector HyperbolicAutomorphism::transpose_apply(LatticeVector k) const {
    return {a_ * k.k1 + c_ * k.k2, b_ * k.k1 + d_ * k.k2};
}

BracketResult bracket(const HyperbolicAutomorphism& map, TorusPoint x, TorusPoint y,
                      double radius) {
    if (!std::isfinite(radius) || radius <= 0.0)
        fail(ErrorKind::search_radius_exhausted, "bracket: empty lattice search set");

    Vec2 vu = map.dir_u(), vs = map.dir_s();
    double det = vs.x * vu.y - vu.x * vs.y;  // columns (v_u, -v_s)

    int kmax = static_cast<int>(std::floor(radius + 1e-9));
    bool found = false;
    double best_cost = 0.0, best_s = 0.0, best_t = 0.0;
    LatticeVector best_k;
    for (std::int64_t k1 = -kmax; k1 <= kmax; ++k1)
        for (std::int64_t k2 = -kmax; k2 <= kmax; ++k2) {
            if (std::hypot(static_cast<double>(k1), static_cast<double>(k2)) > radius + 1e-9)
                continue;
            Vec2 rhs{y.x1 + static_cast<double>(k1) - x.x1, y.x2 + static_cast<double>(k2) - x.x2};
            double s = (vs.x * rhs.y - vs.y * rhs.x) / det;
            double t = (vu.x * rhs.y - vu.y * rhs.x) / det;
            double cost = std::fabs(s) + std::fabs(t);
            bool better = !found || cost < best_cost - 1e-12 * (1.0 + best_cost);
            bool tie = found && std::fabs(cost - best_cost) <= 1e-12 * (1.0 + best_cost);
            if (tie && (k1 < best_k.k1 || (k1 == best_k.k1 && k2 < best_k.k2))) better = true;
            if (better) {
                found = true;
                best_cost = cost;
                best_s = s;
                best_t = t;
                best_k = {k1, k2};
            }
        }
    if (!found) fail(ErrorKind::search_radius_exhausted, "bracket: no lattice translate in radius");

    Vec2 zl = lift(x) + best_s * vu;
    TorusPoint z = wrap(zl);
    BracketResult r;
    r.point = z;
    r.lattice = best_k;
    r.s = best_s;
    r.t = best_t;
    r.unstable_leg = {LegKind::unstable, x, z, best_s};
    r.stable_leg = {LegKind::stable, z, y, -best_t};
    return r;
}

SuPath su_path(const HyperbolicAutomorphism& map, TorusPoint x, TorusPoint y, double radius) {
    BracketResult b = bracket(map, x, y, radius);
    SuPath p;
    p.anchor = x;
    p.legs = {b.unstable_leg, b.stable_leg};
    return p;
}

SuPath su_path_via(const HyperbolicAutomorphism& map, TorusPoint x, TorusPoint y,
                   LatticeVector k) {
    Vec2 vu = map.dir_u(), vs = map.dir_s();
    double det = vs.x * vu.y - vu.x * vs.y;
    Vec2 rhs{y.x1 + static_cast<double>(k.k1) - x.x1, y.x2 + static_cast<double>(k.k2) - x.x2};
    double s = (vs.x * rhs.y - vs.y * rhs.x) / det;
    double t = (vu.x * rhs.y - vu.y * rhs.x) / det;
    TorusPoint z = wrap(lift(x) + s * vu);
    SuPath p;
    p.anchor = x;
    p.legs = {{LegKind::unstable, x, z, s}, {LegKind::stable, z, y, -t}};
    return p;
}

AccessibleCycle quad_cycle(const HyperbolicAutomorphism& map, TorusPoint x, double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        fail(ErrorKind::invalid_input, "quad_cycle: non-finite displacement");
    Vec2 vu = map.dir_u(), vs = map.dir_s();
    Vec2 q0 = lift(x);
    TorusPoint p1 = wrap(q0 + a * vu);
    TorusPoint p2 = wrap(q0 + a * vu + b * vs);
    TorusPoint p3 = wrap(q0 + b * vs);
    AccessibleCycle cyc;
    cyc.path.anchor = x;
    cyc.path.legs = {{LegKind::unstable, x, p1, a},
                     {LegKind::stable, p1, p2, b},
                     {LegKind::unstable, p2, p3, -a},
                     {LegKind::stable, p3, x, -b}};
    return cyc;
}

SuPath reverse_path(const SuPath& path) {
    SuPath out;
    out.anchor = path.legs.empty() ? path.anchor : path.legs.back().end;
    for (auto it = path.legs.rbegin(); it != path.legs.rend(); ++it)
        out.legs.push_back({it->kind, it->end, it->start, -it->displacement});
    return out;
}

SuPath concat_paths(const SuPath& first, const SuPath& second) {
    SuPath out = first;
    out.legs.insert(out.legs.end(), second.legs.begin(), second.legs.end());
    return out;
}

namespace {

struct I64Mat {
    std::int64_t a, b, c, d;
};

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        fail(ErrorKind::bound_exceeded, "integer overflow in matrix power");
    return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        fail(ErrorKind::bound_exceeded, "integer overflow in matrix power");
    return r;
}

I64Mat imul(I64Mat p, I64Mat q) {
    return {checked_add(checked_mul(p.a, q.a), checked_mul(p.b, q.c)),
            checked_add(checked_mul(p.a, q.b), checked_mul(p.b, q.d)),
            checked_add(checked_mul(p.c, q.a), checked_mul(p.d, q.c)),
            checked_add(checked_mul(p.c, q.b), checked_mul(p.d, q.d))};
}

struct PairHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& p) const {
        std::uint64_t h = static_cast<std::uint64_t>(p.first) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(p.second) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

std::int64_t mod_pos(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

std::vector<std::vector<TorusPoint>> periodic_points(const HyperbolicAutomorphism& map, int n,
                                                     int max_n) {
    if (n < 1) fail(ErrorKind::invalid_input, "periodic_points: period must be >= 1");
    if (n > max_n) fail(ErrorKind::bound_exceeded, "periodic_points: period above configured bound");

    auto e = map.entries();
    I64Mat a{e[0], e[1], e[2], e[3]};
    I64Mat an{1, 0, 0, 1};
    for (int i = 0; i < n; ++i) an = imul(an, a);
    // M = A^n - I
    I64Mat m{an.a - 1, an.b, an.c, an.d - 1};

    // Diagonalize M by unimodular row/column operations, tracking only the
    // column side: S = R M C with S diagonal, so solutions of M p in Z^2 are
    // p = C q with q in (1/|d1|)Z x (1/|d2|)Z.
    I64Mat s = m;
    I64Mat cmat{1, 0, 0, 1};
    auto col_swap = [&]() {
        std::swap(s.a, s.b);
        std::swap(s.c, s.d);
        std::swap(cmat.a, cmat.b);
        std::swap(cmat.c, cmat.d);
    };
    auto row_swap = [&]() {
        std::swap(s.a, s.c);
        std::swap(s.b, s.d);
    };
    for (int guard = 0; guard < 256 && (s.b != 0 || s.c != 0); ++guard) {
        if (s.a == 0) {
            if (s.c != 0)
                row_swap();
            else if (s.b != 0)
                col_swap();
        }
        while (s.c != 0) {
            if (s.a == 0) { row_swap(); continue; }
            std::int64_t q = s.c / s.a;
            // subtract q*row0 from row1
            s.c = checked_add(s.c, -checked_mul(q, s.a));
            s.d = checked_add(s.d, -checked_mul(q, s.b));
            if (s.c != 0) row_swap();
        }
        while (s.b != 0) {
            if (s.a == 0) { col_swap(); continue; }
            std::int64_t q = s.b / s.a;
            // subtract q*col0 from col1
            s.b = checked_add(s.b, -checked_mul(q, s.a));
            s.d = checked_add(s.d, -checked_mul(q, s.c));
            cmat.b = checked_add(cmat.b, -checked_mul(q, cmat.a));
            cmat.d = checked_add(cmat.d, -checked_mul(q, cmat.c));
            if (s.b != 0) col_swap();
        }
    }
    if (s.b != 0 || s.c != 0)
        fail(ErrorKind::bound_exceeded, "periodic_points: diagonalization failed");

    std::int64_t d1 = std::llabs(s.a), d2 = std::llabs(s.d);
    if (d1 == 0 || d2 == 0) fail(ErrorKind::not_anosov, "A^n - I is singular");
    std::int64_t total = checked_mul(d1, d2);
    if (total > 5'000'000)
        fail(ErrorKind::bound_exceeded, "periodic_points: too many points to enumerate");

    // Points have exact coordinates (n1/total, n2/total); iterate the orbit
    // of A on numerator pairs mod total.
    std::unordered_set<std::pair<std::int64_t, std::int64_t>, PairHash> seen;
    std::vector<std::vector<TorusPoint>> orbits;
    for (std::int64_t i = 0; i < d1; ++i)
        for (std::int64_t j = 0; j < d2; ++j) {
            std::int64_t n1 = mod_pos(checked_add(checked_mul(cmat.a, checked_mul(i, d2)),
                                                  checked_mul(cmat.b, checked_mul(j, d1))),
                                      total);
            std::int64_t n2 = mod_pos(checked_add(checked_mul(cmat.c, checked_mul(i, d2)),
                                                  checked_mul(cmat.d, checked_mul(j, d1))),
                                      total);
            if (seen.count({n1, n2})) continue;
            std::vector<TorusPoint> orbit;
            std::int64_t p1 = n1, p2 = n2;
            do {
                seen.insert({p1, p2});
                orbit.push_back(wrap(static_cast<double>(p1) / static_cast<double>(total),
                                     static_cast<double>(p2) / static_cast<double>(total)));
                std::int64_t q1 = mod_pos(
                    checked_add(checked_mul(e[0], p1), checked_mul(e[1], p2)), total);
                std::int64_t q2 = mod_pos(
                    checked_add(checked_mul(e[2], p1), checked_mul(e[3], p2)), total);
                p1 = q1;
                p2 = q2;
            } while (!(p1 == n1 && p2 == n2));
            orbits.push_back(std::move(orbit));
        }
    return orbits;
}

}  // namespace livlab
