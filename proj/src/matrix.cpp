#include "livlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "livlab/error.hpp"

namespace livlab {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::not_anosov: return "not-anosov";
        case ErrorKind::search_radius_exhausted: return "search-radius-exhausted";
        case ErrorKind::budget_exceeded: return "budget-exceeded";
        case ErrorKind::bound_exceeded: return "bound-exceeded";
        case ErrorKind::non_convergence: return "non-convergence";
        case ErrorKind::invalid_base: return "invalid-base";
        case ErrorKind::invalid_rates: return "invalid-rates";
        case ErrorKind::dimension_mismatch: return "dimension-mismatch";
        case ErrorKind::singular_system: return "singular-system";
        case ErrorKind::grid_degenerate: return "grid-degenerate";
        case ErrorKind::domain_exhausted: return "domain-exhausted";
        case ErrorKind::degenerate_samples: return "degenerate-samples";
        case ErrorKind::graph_transform_undefined: return "graph-transform-undefined";
        case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) fail(ErrorKind::dimension_mismatch, "matrix product shape mismatch");
    Mat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            double a = at(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(ErrorKind::dimension_mismatch, "matrix sum shape mismatch");
    Mat out = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] += rhs.v_[i];
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        fail(ErrorKind::dimension_mismatch, "matrix difference shape mismatch");
    Mat out = *this;
    for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] -= rhs.v_[i];
    return out;
}

Mat Mat::scaled(double s) const {
    Mat out = *this;
    for (double& x : out.v_) x *= s;
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Mat Mat::solve(const Mat& b) const {
    if (rows_ != cols_) fail(ErrorKind::dimension_mismatch, "solve needs a square matrix");
    if (b.rows_ != rows_) fail(ErrorKind::dimension_mismatch, "solve rhs shape mismatch");
    Mat a = *this;
    Mat x = b;
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(a.at(i, col)) > std::fabs(a.at(piv, col))) piv = i;
        if (std::fabs(a.at(piv, col)) < 1e-300)
            fail(ErrorKind::singular_system, "singular linear system");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            for (int j = 0; j < x.cols_; ++j) std::swap(x.at(piv, j), x.at(col, j));
        }
        double d = a.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            double f = a.at(i, col) / d;
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            for (int j = 0; j < x.cols_; ++j) x.at(i, j) -= f * x.at(col, j);
        }
    }
    for (int col = n - 1; col >= 0; --col) {
        double d = a.at(col, col);
        for (int j = 0; j < x.cols_; ++j) {
            double s = x.at(col, j);
            for (int k = col + 1; k < n; ++k) s -= a.at(col, k) * x.at(k, j);
            x.at(col, j) = s / d;
        }
    }
    return x;
}

Mat Mat::inverse() const { return solve(identity(rows_)); }

double Mat::frobenius_norm() const {
    double s = 0.0;
    for (double x : v_) s += x * x;
    return std::sqrt(s);
}

double Mat::one_norm() const {
    double best = 0.0;
    for (int j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows_; ++i) s += std::fabs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

double Mat::max_abs() const {
    double best = 0.0;
    for (double x : v_) best = std::max(best, std::fabs(x));
    return best;
}

std::vector<double> symmetric_eigenvalues(Mat a) {
    int n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a.at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double Mat::spectral_norm() const {
    Mat g = transpose() * (*this);
    auto ev = symmetric_eigenvalues(g);
    double top = ev.empty() ? 0.0 : std::max(0.0, ev.back());
    return std::sqrt(top);
}

double Mat::conorm() const {
    if (rows_ != cols_) fail(ErrorKind::dimension_mismatch, "conorm needs a square matrix");
    Mat g = transpose() * (*this);
    auto ev = symmetric_eigenvalues(g);
    double low = ev.empty() ? 0.0 : std::max(0.0, ev.front());
    return std::sqrt(low);
}

double Mat::condition_1() const {
    try {
        Mat inv = inverse();
        return one_norm() * inv.one_norm();
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace livlab
