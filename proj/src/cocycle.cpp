#include "livlab/cocycle.hpp"

#include <algorithm>
#include <cmath>

#include "livlab/error.hpp"

namespace livlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
// diameter of the flat unit torus
const double kTorusDiam = std::sqrt(0.5);
}  // namespace

void FourierCocycle::add_mode(std::int64_t k1, std::int64_t k2, double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        fail(ErrorKind::invalid_input, "cocycle mode with non-finite coefficient");
    if (k1 == 0 && k2 == 0) {
        mean_ += a;  // cos(0) = 1; the sin part vanishes identically
        return;
    }
    if (k1 < 0 || (k1 == 0 && k2 < 0)) {
        k1 = -k1;
        k2 = -k2;
        b = -b;
    }
    Coeff& c = modes_[{k1, k2}];
    c.a += a;
    c.b += b;
    if (c.a == 0.0 && c.b == 0.0) modes_.erase({k1, k2});
}

std::int64_t FourierCocycle::max_mode_index() const {
    std::int64_t m = 0;
    for (const auto& [k, c] : modes_) {
        m = std::max({m, static_cast<std::int64_t>(std::llabs(k.first)),
                      static_cast<std::int64_t>(std::llabs(k.second))});
    }
    return m;
}

double FourierCocycle::eval_lift(Vec2 v) const {
    double s = mean_;
    for (const auto& [k, c] : modes_) {
        double ph = kTwoPi * (static_cast<double>(k.first) * v.x +
                              static_cast<double>(k.second) * v.y);
        s += c.a * std::cos(ph) + c.b * std::sin(ph);
    }
    return s;
}

double FourierCocycle::eval(TorusPoint p) const { return eval_lift(lift(p)); }

double FourierCocycle::lipschitz_bound() const {
    double s = 0.0;
    for (const auto& [k, c] : modes_) {
        double knorm = std::hypot(static_cast<double>(k.first), static_cast<double>(k.second));
        s += kTwoPi * knorm * (std::fabs(c.a) + std::fabs(c.b));
    }
    return s;
}

double FourierCocycle::holder_bound(double alpha) const {
    if (!(alpha > 0.0 && alpha <= 1.0))
        fail(ErrorKind::invalid_input, "holder_bound: alpha must lie in (0,1]");
    return lipschitz_bound() * std::pow(kTorusDiam, 1.0 - alpha);
}

double FourierCocycle::sup_bound() const {
    double s = std::fabs(mean_);
    for (const auto& [k, c] : modes_) s += std::fabs(c.a) + std::fabs(c.b);
    return s;
}

FourierCocycle FourierCocycle::compose_with(const HyperbolicAutomorphism& map) const {
    FourierCocycle out(mean_);
    for (const auto& [k, c] : modes_) {
        LatticeVector kk = map.transpose_apply({k.first, k.second});
        out.add_mode(kk.k1, kk.k2, c.a, c.b);
    }
    return out;
}

FourierCocycle FourierCocycle::operator+(const FourierCocycle& rhs) const {
    FourierCocycle out = *this;
    out.mean_ += rhs.mean_;
    for (const auto& [k, c] : rhs.modes_) out.add_mode(k.first, k.second, c.a, c.b);
    return out;
}

FourierCocycle FourierCocycle::operator-(const FourierCocycle& rhs) const {
    return *this + rhs.scaled(-1.0);
}

FourierCocycle FourierCocycle::scaled(double s) const {
    FourierCocycle out(mean_ * s);
    for (const auto& [k, c] : modes_) out.add_mode(k.first, k.second, c.a * s, c.b * s);
    return out;
}

FourierCocycle coboundary_of(const FourierCocycle& transfer, const HyperbolicAutomorphism& map) {
    FourierCocycle out = transfer.compose_with(map) - transfer;
    out.set_mean(0.0);  // means cancel exactly; clear roundoff
    return out;
}

double birkhoff_sum(const FourierCocycle& phi, const HyperbolicAutomorphism& map, TorusPoint x,
                    int n) {
    if (n < 1) fail(ErrorKind::invalid_input, "birkhoff_sum: n must be >= 1");
    double s = 0.0;
    TorusPoint p = x;
    for (int i = 0; i < n; ++i) {
        s += phi.eval(p);
        p = map.apply(p);
    }
    return s;
}

RegularityBound regularity_bound(const FourierCocycle& phi, double alpha) {
    RegularityBound r;
    r.lipschitz = phi.lipschitz_bound();
    r.alpha = alpha;
    r.holder = phi.holder_bound(alpha);
    return r;
}

}  // namespace livlab
