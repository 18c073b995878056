#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "livlab/matrix.hpp"

namespace livlab {

// Scalar multivariate polynomial truncated at a total-degree cap; the
// workhorse behind jet composition and reversion.
class MultiPoly {
  public:
    MultiPoly() : nvars_(0), cap_(0) {}
    MultiPoly(int nvars, int cap) : nvars_(nvars), cap_(cap) {}

    static MultiPoly constant(int nvars, int cap, double c);
    static MultiPoly variable(int nvars, int cap, int index);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<std::vector<int>, double>& terms() const { return terms_; }

    double coeff(const std::vector<int>& expo) const;
    void add_term(const std::vector<int>& expo, double c);

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly scaled(double s) const;

    double eval(const std::vector<double>& v) const;

    // Substitute variable i by args[i] (all args share nvars/cap).
    MultiPoly compose(const std::vector<MultiPoly>& args) const;

    // Recenter: p(v0 + w) as a polynomial in w.
    MultiPoly shifted(const std::vector<double>& v0) const;

    MultiPoly partial(int var) const;

    double constant_term() const;
    MultiPoly without_constant() const;

  private:
    int nvars_, cap_;
    std::map<std::vector<int>, double> terms_;
};

// Degree-<= ell polynomial jet of a map R^m -> R^n.  Order-i data is the
// i-th derivative, a symmetric i-multilinear map stored as the full tensor
// (n x m^i entries, row-major over (out, j_1, ..., j_i)); the Taylor
// polynomial is sum_i P_i(v,...,v)/i!.
class JetPoly {
  public:
    JetPoly() : m_(0), n_(0), degree_(0) {}
    JetPoly(int m, int n, int degree);

    static JetPoly identity(int m, int degree);
    static JetPoly from_linear(const Mat& a, int degree);
    static JetPoly from_polys(int m, int n, int degree, const std::vector<MultiPoly>& polys);

    int input_dim() const { return m_; }
    int output_dim() const { return n_; }
    int degree() const { return degree_; }

    double tensor_entry(int order, int out, const std::vector<int>& idx) const;
    void set_tensor_entry(int order, int out, const std::vector<int>& idx, double v);
    const std::vector<double>& tensor(int order) const { return tensors_[order]; }
    std::vector<double>& tensor(int order) { return tensors_[order]; }

    std::vector<double> value() const;            // order-0 data
    void set_value(const std::vector<double>& v);
    Mat linear_part() const;
    void set_linear_part(const Mat& a);

    std::vector<double> eval(const std::vector<double>& v) const;
    std::vector<MultiPoly> to_polys() const;

    double order_norm(int order) const;  // Frobenius norm of the order tensor

    // max |T(i...) - T(perm(i...))| over random index tuples and permutations
    double symmetry_defect(std::uint64_t seed, int trials = 200) const;

  private:
    int m_, n_, degree_;
    std::vector<std::vector<double>> tensors_;  // [order][out * m^order + ...]
};

// Truncated composition outer o inner (Faa di Bruno via polynomial
// arithmetic); pre: dimensions chain and outer is based at inner's value.
JetPoly jet_compose(const JetPoly& outer, const JetPoly& inner);

// Compositional inverse of a jet with value 0 and invertible linear part.
JetPoly jet_invert(const JetPoly& jet);

// Jet of the map at base point v0 of the global polynomial map given by
// `global` (a jet centered at 0 read as a polynomial).
JetPoly jet_recenter(const JetPoly& global, const std::vector<double>& v0);

// Blocks of the derivative of H = (h, g) at displacement v from its center:
// Dv H = [[A, B], [C, K]].
struct BlockLinearMap {
    Mat a, b, c, k;
};

BlockLinearMap jet_blocks(const JetPoly& h, const JetPoly& g, const std::vector<double>& v);

// ||K|| / m(A)^ell with spectral norms; singular A rejected.
double q_norm_bound(const BlockLinearMap& blocks, int ell);

// |(p_1, ..., p_ell)|_L = L^ell |p_1| + ... + L |p_ell|
double scaled_norm(double l_weight, const std::vector<double>& order_norms);
double scaled_norm(double l_weight, const JetPoly& jet);
double scaled_norm_diff(double l_weight, const JetPoly& a, const JetPoly& b);

// Graph transform on jets: psi' = (g o (id, psi)) o (h o (id, psi))^-1.
// h: R^(m+n) -> R^m and g: R^(m+n) -> R^n are jets centered at the base
// point (x0, psi(x0)); psi is a jet R^m -> R^n at x0.
JetPoly jet_graph_transform(const JetPoly& h, const JetPoly& g, const JetPoly& psi);

// Order-1 closed form (C + K p1)(A + B p1)^-1 used as a cross-check.
Mat h1_explicit(const BlockLinearMap& blocks, const Mat& p1);

struct FiberContractionReport {
    bool hypothesis_ok = true;
    std::string violation;
    double sup_b_norm = 0.0;
    double sup_kq_ratio = 0.0;  // sup of max(||K||/m(A), ||K||/m(A)^ell)
    double max_ratio = 0.0;     // measured contraction ratio over jet pairs
    int pairs_tested = 0;
    int pairs_skipped = 0;
};

// Measures the Lipschitz constant of the order-(1..ell) action of H^ell in
// the |.|_L norm over pseudorandom jet pairs sharing their order-0 data,
// after checking the smallness hypotheses on B and ||K||/m(A)^i.
FiberContractionReport verify_fiber_contraction(const JetPoly& h_global,
                                                const JetPoly& g_global, int ell, double kappa,
                                                double eps, double l_weight, int sample_count,
                                                std::uint64_t seed);

// Smallest power of 10 in [1, 10^max_pow] for which the measured one-step
// bound holds; the paper only asks for "L sufficiently large".
double find_scaling_weight(const JetPoly& h_global, const JetPoly& g_global, int ell,
                           double kappa, double eps, int sample_count, std::uint64_t seed,
                           int max_pow = 6);

}  // namespace livlab
