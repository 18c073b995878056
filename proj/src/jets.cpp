#include "livlab/jets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "livlab/error.hpp"
#include "livlab/rng.hpp"

namespace livlab {

namespace {

int total_degree(const std::vector<int>& expo) {
    return std::accumulate(expo.begin(), expo.end(), 0);
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::int64_t ipow(int base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, int cap, double c) {
    MultiPoly p(nvars, cap);
    if (c != 0.0) p.terms_[std::vector<int>(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int cap, int index) {
    MultiPoly p(nvars, cap);
    if (cap >= 1) {
        std::vector<int> e(nvars, 0);
        e[index] = 1;
        p.terms_[e] = 1.0;
    }
    return p;
}

double MultiPoly::coeff(const std::vector<int>& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? 0.0 : it->second;
}

void MultiPoly::add_term(const std::vector<int>& expo, double c) {
    if (c == 0.0 || total_degree(expo) > cap_) return;
    double& slot = terms_[expo];
    slot += c;
    if (slot == 0.0) terms_.erase(expo);
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out(nvars_, cap_);
    std::vector<int> e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            int deg = 0;
            for (int i = 0; i < nvars_; ++i) {
                e[i] = ea[i] + eb[i];
                deg += e[i];
            }
            if (deg > cap_) continue;
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(double s) const {
    MultiPoly out(nvars_, cap_);
    if (s == 0.0) return out;
    for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
    return out;
}

double MultiPoly::eval(const std::vector<double>& v) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= v[i];
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& args) const {
    if (static_cast<int>(args.size()) != nvars_)
        fail(ErrorKind::dimension_mismatch, "MultiPoly::compose: argument count mismatch");
    int out_vars = args.empty() ? 0 : args[0].nvars();
    int out_cap = args.empty() ? cap_ : args[0].cap();
    // power cache per variable
    std::vector<std::vector<MultiPoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) pows[i].push_back(MultiPoly::constant(out_vars, out_cap, 1.0));
    MultiPoly out(out_vars, out_cap);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(out_vars, out_cap, c);
        for (int i = 0; i < nvars_; ++i) {
            while (static_cast<int>(pows[i].size()) <= e[i])
                pows[i].push_back(pows[i].back() * args[i]);
            if (e[i] > 0) term = term * pows[i][e[i]];
        }
        out = out + term;
    }
    return out;
}

MultiPoly MultiPoly::shifted(const std::vector<double>& v0) const {
    std::vector<MultiPoly> args;
    for (int i = 0; i < nvars_; ++i)
        args.push_back(MultiPoly::variable(nvars_, cap_, i) +
                       MultiPoly::constant(nvars_, cap_, v0[i]));
    return compose(args);
}

MultiPoly MultiPoly::partial(int var) const {
    MultiPoly out(nvars_, cap_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.add_term(d, c * e[var]);
    }
    return out;
}

double MultiPoly::constant_term() const { return coeff(std::vector<int>(nvars_, 0)); }

MultiPoly MultiPoly::without_constant() const {
    MultiPoly out = *this;
    out.terms_.erase(std::vector<int>(nvars_, 0));
    return out;
}

JetPoly::JetPoly(int m, int n, int degree) : m_(m), n_(n), degree_(degree) {
    if (m < 1 || n < 1 || degree < 0) fail(ErrorKind::invalid_input, "JetPoly: bad dimensions");
    for (int i = 0; i <= degree; ++i)
        tensors_.emplace_back(static_cast<std::size_t>(n) * ipow(m, i), 0.0);
}

JetPoly JetPoly::identity(int m, int degree) {
    JetPoly j(m, m, degree);
    if (degree >= 1)
        for (int i = 0; i < m; ++i) j.set_tensor_entry(1, i, {i}, 1.0);
    return j;
}

JetPoly JetPoly::from_linear(const Mat& a, int degree) {
    JetPoly j(a.cols(), a.rows(), degree);
    if (degree >= 1)
        for (int out = 0; out < a.rows(); ++out)
            for (int in = 0; in < a.cols(); ++in) j.set_tensor_entry(1, out, {in}, a.at(out, in));
    return j;
}

double JetPoly::tensor_entry(int order, int out, const std::vector<int>& idx) const {
    std::size_t flat = out;
    for (int k : idx) flat = flat * m_ + k;
    return tensors_[order][flat];
}

void JetPoly::set_tensor_entry(int order, int out, const std::vector<int>& idx, double v) {
    std::size_t flat = out;
    for (int k : idx) flat = flat * m_ + k;
    tensors_[order][flat] = v;
}

std::vector<double> JetPoly::value() const { return tensors_[0]; }

void JetPoly::set_value(const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != n_) fail(ErrorKind::dimension_mismatch, "set_value size");
    tensors_[0] = v;
}

Mat JetPoly::linear_part() const {
    Mat a(n_, m_);
    if (degree_ >= 1)
        for (int out = 0; out < n_; ++out)
            for (int in = 0; in < m_; ++in) a.at(out, in) = tensor_entry(1, out, {in});
    return a;
}

void JetPoly::set_linear_part(const Mat& a) {
    for (int out = 0; out < n_; ++out)
        for (int in = 0; in < m_; ++in) set_tensor_entry(1, out, {in}, a.at(out, in));
}

std::vector<MultiPoly> JetPoly::to_polys() const {
    std::vector<MultiPoly> polys(n_, MultiPoly(m_, degree_));
    for (int order = 0; order <= degree_; ++order) {
        double inv_fact = 1.0 / factorial(order);
        std::int64_t count = ipow(m_, order);
        std::vector<int> idx(order, 0);
        for (std::int64_t flatidx = 0; flatidx < count; ++flatidx) {
            std::int64_t rest = flatidx;
            for (int k = order - 1; k >= 0; --k) {
                idx[k] = static_cast<int>(rest % m_);
                rest /= m_;
            }
            std::vector<int> expo(m_, 0);
            for (int k : idx) expo[k] += 1;
            for (int out = 0; out < n_; ++out) {
                double t = tensors_[order][static_cast<std::size_t>(out) * count + flatidx];
                if (t != 0.0) polys[out].add_term(expo, t * inv_fact);
            }
        }
    }
    return polys;
}

JetPoly JetPoly::from_polys(int m, int n, int degree, const std::vector<MultiPoly>& polys) {
    if (static_cast<int>(polys.size()) != n)
        fail(ErrorKind::dimension_mismatch, "from_polys: output count mismatch");
    JetPoly j(m, n, degree);
    for (int out = 0; out < n; ++out)
        for (const auto& [expo, c] : polys[out].terms()) {
            int order = total_degree(expo);
            if (order > degree) continue;
            // tensor entry is c * alpha! on every index tuple with exponent alpha
            double alpha_fact = 1.0;
            for (int e : expo) alpha_fact *= factorial(e);
            double entry = c * alpha_fact;
            // enumerate all tuples with this exponent multiset
            std::vector<int> tuple;
            for (int var = 0; var < m; ++var)
                for (int k = 0; k < expo[var]; ++k) tuple.push_back(var);
            std::sort(tuple.begin(), tuple.end());
            do {
                j.set_tensor_entry(order, out, tuple, entry);
            } while (std::next_permutation(tuple.begin(), tuple.end()));
        }
    return j;
}

std::vector<double> JetPoly::eval(const std::vector<double>& v) const {
    auto polys = to_polys();
    std::vector<double> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = polys[i].eval(v);
    return out;
}

double JetPoly::order_norm(int order) const {
    double s = 0.0;
    for (double x : tensors_[order]) s += x * x;
    return std::sqrt(s);
}

double JetPoly::symmetry_defect(std::uint64_t seed, int trials) const {
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        int order = degree_ >= 2 ? 2 + static_cast<int>(rng.uniform_int(0, degree_ - 2)) : 0;
        if (order < 2) continue;
        std::vector<int> idx(order);
        for (int& k : idx) k = static_cast<int>(rng.uniform_int(0, m_ - 1));
        int out = static_cast<int>(rng.uniform_int(0, n_ - 1));
        std::vector<int> perm = idx;
        for (int k = order - 1; k > 0; --k)
            std::swap(perm[k], perm[rng.uniform_int(0, k)]);
        worst = std::max(worst,
                         std::fabs(tensor_entry(order, out, idx) - tensor_entry(order, out, perm)));
    }
    return worst;
}

JetPoly jet_compose(const JetPoly& outer, const JetPoly& inner) {
    if (outer.input_dim() != inner.output_dim())
        fail(ErrorKind::dimension_mismatch, "jet_compose: dimensions do not chain");
    int degree = std::min(outer.degree(), inner.degree());
    auto outer_polys = outer.to_polys();
    auto inner_polys = inner.to_polys();
    std::vector<MultiPoly> args;
    for (auto& p : inner_polys) {
        MultiPoly q = p.without_constant();
        args.push_back(MultiPoly(inner.input_dim(), degree) + q);
    }
    std::vector<MultiPoly> out_polys;
    for (auto& p : outer_polys) out_polys.push_back(p.compose(args));
    return JetPoly::from_polys(inner.input_dim(), outer.output_dim(), degree, out_polys);
}

JetPoly jet_invert(const JetPoly& jet) {
    if (jet.input_dim() != jet.output_dim())
        fail(ErrorKind::invalid_input, "jet_invert: map must be square");
    for (double v : jet.value())
        if (std::fabs(v) > 1e-12)
            fail(ErrorKind::invalid_input, "jet_invert: constant term must vanish");
    Mat p1 = jet.linear_part();
    Mat p1inv;
    try {
        p1inv = p1.inverse();
    } catch (const Error&) {
        fail(ErrorKind::singular_system, "jet_invert: singular linear part");
    }
    int m = jet.input_dim();
    int degree = jet.degree();

    auto polys = jet.to_polys();
    // higher-order part N = jet - linear
    std::vector<MultiPoly> npolys;
    for (int out = 0; out < m; ++out) {
        MultiPoly lin(m, degree);
        for (int in = 0; in < m; ++in) {
            std::vector<int> e(m, 0);
            e[in] = 1;
            lin.add_term(e, p1.at(out, in));
        }
        npolys.push_back(polys[out].without_constant() - lin);
    }

    // R_{k+1}(w) = P1^-1 (w - N(R_k(w))), converges in <= degree steps
    std::vector<MultiPoly> r;
    for (int out = 0; out < m; ++out) {
        MultiPoly p(m, degree);
        for (int in = 0; in < m; ++in) {
            std::vector<int> e(m, 0);
            e[in] = 1;
            p.add_term(e, p1inv.at(out, in));
        }
        r.push_back(p);
    }
    for (int it = 0; it < degree; ++it) {
        std::vector<MultiPoly> nr;
        for (auto& np : npolys) nr.push_back(np.compose(r));
        std::vector<MultiPoly> next;
        for (int out = 0; out < m; ++out) {
            MultiPoly p(m, degree);
            for (int in = 0; in < m; ++in) {
                MultiPoly w = MultiPoly::variable(m, degree, in) - nr[in];
                p = p + w.scaled(p1inv.at(out, in));
            }
            next.push_back(p);
        }
        r = std::move(next);
    }
    return JetPoly::from_polys(m, m, degree, r);
}

JetPoly jet_recenter(const JetPoly& global, const std::vector<double>& v0) {
    if (static_cast<int>(v0.size()) != global.input_dim())
        fail(ErrorKind::dimension_mismatch, "jet_recenter: base point dimension mismatch");
    auto polys = global.to_polys();
    std::vector<MultiPoly> shifted;
    for (auto& p : polys) shifted.push_back(p.shifted(v0));
    return JetPoly::from_polys(global.input_dim(), global.output_dim(), global.degree(), shifted);
}

BlockLinearMap jet_blocks(const JetPoly& h, const JetPoly& g, const std::vector<double>& v) {
    int mn = h.input_dim();
    int m = h.output_dim();
    int n = g.output_dim();
    if (g.input_dim() != mn || m + n != mn)
        fail(ErrorKind::dimension_mismatch, "jet_blocks: inconsistent dimensions");
    auto hp = h.to_polys();
    auto gp = g.to_polys();
    BlockLinearMap bl{Mat(m, m), Mat(m, n), Mat(n, m), Mat(n, n)};
    for (int out = 0; out < m; ++out)
        for (int in = 0; in < mn; ++in) {
            double d = hp[out].partial(in).eval(v);
            if (in < m)
                bl.a.at(out, in) = d;
            else
                bl.b.at(out, in - m) = d;
        }
    for (int out = 0; out < n; ++out)
        for (int in = 0; in < mn; ++in) {
            double d = gp[out].partial(in).eval(v);
            if (in < m)
                bl.c.at(out, in) = d;
            else
                bl.k.at(out, in - m) = d;
        }
    return bl;
}

double q_norm_bound(const BlockLinearMap& blocks, int ell) {
    if (ell < 0) fail(ErrorKind::invalid_input, "q_norm_bound: order must be >= 0");
    double ma = blocks.a.conorm();
    if (!(ma > 1e-14)) fail(ErrorKind::singular_system, "q_norm_bound: singular A block");
    return blocks.k.spectral_norm() / std::pow(ma, ell);
}

double scaled_norm(double l_weight, const std::vector<double>& order_norms) {
    if (!(l_weight > 0.0)) fail(ErrorKind::invalid_input, "scaled_norm: L must be positive");
    int ell = static_cast<int>(order_norms.size());
    double s = 0.0;
    for (int i = 1; i <= ell; ++i)
        s += std::pow(l_weight, ell + 1 - i) * order_norms[i - 1];
    return s;
}

double scaled_norm(double l_weight, const JetPoly& jet) {
    std::vector<double> norms;
    for (int i = 1; i <= jet.degree(); ++i) norms.push_back(jet.order_norm(i));
    return scaled_norm(l_weight, norms);
}

double scaled_norm_diff(double l_weight, const JetPoly& a, const JetPoly& b) {
    if (a.degree() != b.degree() || a.input_dim() != b.input_dim() ||
        a.output_dim() != b.output_dim())
        fail(ErrorKind::dimension_mismatch, "scaled_norm_diff: jet shape mismatch");
    std::vector<double> norms;
    for (int i = 1; i <= a.degree(); ++i) {
        double s = 0.0;
        const auto& ta = a.tensor(i);
        const auto& tb = b.tensor(i);
        for (std::size_t k = 0; k < ta.size(); ++k) s += (ta[k] - tb[k]) * (ta[k] - tb[k]);
        norms.push_back(std::sqrt(s));
    }
    return scaled_norm(l_weight, norms);
}

JetPoly jet_graph_transform(const JetPoly& h, const JetPoly& g, const JetPoly& psi) {
    int m = psi.input_dim();
    int n = psi.output_dim();
    if (h.input_dim() != m + n || h.output_dim() != m || g.input_dim() != m + n ||
        g.output_dim() != n)
        fail(ErrorKind::dimension_mismatch, "jet_graph_transform: inconsistent dimensions");
    int degree = psi.degree();

    // inner(v) = (v, psi(v) - psi(0)) as a jet R^m -> R^(m+n)
    auto psi_polys = psi.to_polys();
    std::vector<MultiPoly> inner_polys;
    for (int i = 0; i < m; ++i) inner_polys.push_back(MultiPoly::variable(m, degree, i));
    for (int i = 0; i < n; ++i) inner_polys.push_back(psi_polys[i].without_constant());
    JetPoly inner = JetPoly::from_polys(m, m + n, degree, inner_polys);

    JetPoly hc = jet_compose(h, inner);  // R^m -> R^m, constant = image base offset
    JetPoly gc = jet_compose(g, inner);  // R^m -> R^n

    Mat a1 = hc.linear_part();  // A + B psi_1
    if (a1.conorm() < 1e-12)
        fail(ErrorKind::graph_transform_undefined, "jet_graph_transform: A + B p1 singular");

    JetPoly hc_centered = hc;
    hc_centered.set_value(std::vector<double>(m, 0.0));
    JetPoly hcinv = jet_invert(hc_centered);

    return jet_compose(gc, hcinv);
}

Mat h1_explicit(const BlockLinearMap& blocks, const Mat& p1) {
    Mat left = blocks.c + blocks.k * p1;
    Mat right = blocks.a + blocks.b * p1;
    return left * right.inverse();
}

namespace {

JetPoly random_jet(Rng& rng, int m, int n, int degree, const std::vector<double>& value,
                   double l_weight) {
    JetPoly j(m, n, degree);
    j.set_value(value);
    // symmetric random tensors per order
    for (int order = 1; order <= degree; ++order) {
        std::vector<int> tuple(order);
        std::vector<bool> done(j.tensor(order).size(), false);
        std::int64_t count = 1;
        for (int k = 0; k < order; ++k) count *= m;
        for (int out = 0; out < n; ++out)
            for (std::int64_t flat = 0; flat < count; ++flat) {
                std::int64_t rest = flat;
                for (int k = order - 1; k >= 0; --k) {
                    tuple[k] = static_cast<int>(rest % m);
                    rest /= m;
                }
                std::vector<int> sorted = tuple;
                std::sort(sorted.begin(), sorted.end());
                if (sorted != tuple) continue;  // canonical representative only
                double v = rng.uniform(-1.0, 1.0);
                std::vector<int> perm = sorted;
                do {
                    j.set_tensor_entry(order, out, perm, v);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
    }
    double nrm = scaled_norm(l_weight, j);
    if (nrm > 0.0) {
        double target = 0.2 + 0.8 * rng.uniform();
        for (int order = 1; order <= degree; ++order)
            for (double& x : j.tensor(order)) x *= target / nrm;
    }
    return j;
}

}  // namespace

FiberContractionReport verify_fiber_contraction(const JetPoly& h_global, const JetPoly& g_global,
                                                int ell, double kappa, double eps, double l_weight,
                                                int sample_count, std::uint64_t seed) {
    if (ell < 1) fail(ErrorKind::invalid_input, "verify_fiber_contraction: ell must be >= 1");
    if (!(kappa > 0.0 && kappa < 1.0))
        fail(ErrorKind::invalid_input, "verify_fiber_contraction: kappa must lie in (0,1)");
    int m = h_global.output_dim();
    int n = g_global.output_dim();
    int mn = h_global.input_dim();
    if (mn != m + n || g_global.input_dim() != mn)
        fail(ErrorKind::dimension_mismatch, "verify_fiber_contraction: bad H dimensions");

    FiberContractionReport rep;
    Rng rng(seed);

    // hypothesis scan over the unit ball
    for (int s = 0; s < sample_count; ++s) {
        std::vector<double> v(mn);
        double r2 = 0.0;
        for (double& x : v) {
            x = rng.uniform(-1.0, 1.0);
            r2 += x * x;
        }
        double scale = rng.uniform() / std::max(1.0, std::sqrt(r2));
        for (double& x : v) x *= scale;
        BlockLinearMap bl = jet_blocks(h_global, g_global, v);
        double bnorm = bl.b.spectral_norm();
        rep.sup_b_norm = std::max(rep.sup_b_norm, bnorm);
        double ma = bl.a.conorm();
        if (!(ma > 1e-14)) {
            rep.hypothesis_ok = false;
            rep.violation = "m(A) vanishes inside the unit ball";
            return rep;
        }
        double kn = bl.k.spectral_norm();
        double ratio = std::max(kn / ma, kn / std::pow(ma, ell));
        rep.sup_kq_ratio = std::max(rep.sup_kq_ratio, ratio);
    }
    if (rep.sup_b_norm > eps) {
        rep.hypothesis_ok = false;
        rep.violation = "||B|| exceeds eps on samples";
        return rep;
    }
    if (rep.sup_kq_ratio >= kappa) {
        rep.hypothesis_ok = false;
        rep.violation = "kappa does not dominate ||K||/m(A)^i on samples";
        return rep;
    }

    // contraction measurement over jet pairs sharing order-0 data
    for (int s = 0; s < sample_count; ++s) {
        std::vector<double> x0(m), p0(n);
        for (double& x : x0) x = rng.uniform(-0.25, 0.25);
        for (double& x : p0) x = rng.uniform(-0.25, 0.25);
        std::vector<double> base(mn);
        for (int i = 0; i < m; ++i) base[i] = x0[i];
        for (int i = 0; i < n; ++i) base[m + i] = p0[i];

        JetPoly h_at = jet_recenter(h_global, base);
        JetPoly g_at = jet_recenter(g_global, base);

        JetPoly psi = random_jet(rng, m, n, ell, p0, l_weight);
        JetPoly psi2 = random_jet(rng, m, n, ell, p0, l_weight);

        double denom = scaled_norm_diff(l_weight, psi, psi2);
        if (denom < 1e-14) {
            ++rep.pairs_skipped;
            continue;
        }
        JetPoly t1 = jet_graph_transform(h_at, g_at, psi);
        JetPoly t2 = jet_graph_transform(h_at, g_at, psi2);
        double numer = scaled_norm_diff(l_weight, t1, t2);
        rep.max_ratio = std::max(rep.max_ratio, numer / denom);
        ++rep.pairs_tested;
    }
    return rep;
}

double find_scaling_weight(const JetPoly& h_global, const JetPoly& g_global, int ell, double kappa,
                           double eps, int sample_count, std::uint64_t seed, int max_pow) {
    double l_weight = 1.0;
    for (int p = 0; p <= max_pow; ++p) {
        FiberContractionReport rep =
            verify_fiber_contraction(h_global, g_global, ell, kappa, eps, l_weight, sample_count,
                                     seed);
        if (rep.hypothesis_ok && rep.max_ratio <= kappa) return l_weight;
        l_weight *= 10.0;
    }
    fail(ErrorKind::non_convergence, "find_scaling_weight: no L up to bound achieves the bound");
}

}  // namespace livlab
