#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eigenstrata {

/// Square row-major dense matrix. Used for orthogonal frames and products.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t order() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> data() const noexcept { return data_; }

    DenseMatrix transposed() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

double max_abs(const DenseMatrix& m);
double frobenius_norm(const DenseMatrix& m);

inline constexpr double kSymmetryTolerance = 1e-9;

/// Real symmetric matrix with exact symmetry q(i,j) == q(j,i).
///
/// Construction averages (Q + Q^T)/2 when the largest asymmetry is within
/// kSymmetryTolerance * max|q|; anything larger raises NotSymmetric. Ragged
/// or empty input raises NotSquare, non-finite entries InvalidArgument.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;

    explicit SymmetricMatrix(const std::vector<std::vector<double>>& rows);
    explicit SymmetricMatrix(const DenseMatrix& m);

    static SymmetricMatrix diagonal(std::span<const double> values);
    static SymmetricMatrix identity(std::size_t n);

    std::size_t order() const noexcept { return dense_.order(); }
    double operator()(std::size_t i, std::size_t j) const { return dense_(i, j); }

    const DenseMatrix& dense() const noexcept { return dense_; }
    std::vector<std::vector<double>> rows() const;

    /// a*Q + b*I
    SymmetricMatrix affine(double a, double b) const;

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    void symmetrize_or_throw();

    DenseMatrix dense_;
};

}  // namespace eigenstrata
