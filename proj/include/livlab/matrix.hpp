#pragma once

#include <cstddef>
#include <vector>

namespace livlab {

// Dense row-major matrix, sized for the small (<= ~50x50) systems the lab
// solves: jet blocks, Vandermonde systems, rectangle interpolation.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& at(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
    double at(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(double s) const;
    Mat transpose() const;

    // Gauss-Jordan with partial pivoting; throws singular_system.
    Mat inverse() const;

    // Solves this * x = b (b one column per right-hand side).
    Mat solve(const Mat& b) const;

    double frobenius_norm() const;
    double one_norm() const;
    double max_abs() const;

    // Largest / smallest singular value via Jacobi eigenvalues of A^T A.
    double spectral_norm() const;
    double conorm() const;

    // 1-norm condition estimate ||A||_1 ||A^-1||_1; infinity when singular.
    double condition_1() const;

    const std::vector<double>& data() const { return v_; }
    std::vector<double>& data() { return v_; }

  private:
    int rows_, cols_;
    std::vector<double> v_;
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(Mat a);

}  // namespace livlab
