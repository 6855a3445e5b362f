#include "eigenstrata/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.order() != b.order()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product of different orders");
    }
    const std::size_t n = a.order();
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.order() != b.order()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix difference of different orders");
    }
    DenseMatrix c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

double max_abs(const DenseMatrix& m) {
    double out = 0.0;
    for (double v : m.data()) out = std::max(out, std::abs(v));
    return out;
}

double frobenius_norm(const DenseMatrix& m) {
    const double scale = max_abs(m);
    if (scale == 0.0 || !std::isfinite(scale)) return scale;
    double sum = 0.0;
    for (double v : m.data()) sum += (v / scale) * (v / scale);
    return scale * std::sqrt(sum);
}

SymmetricMatrix::SymmetricMatrix(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorCode::NotSquare, "matrix is empty");
    dense_ = DenseMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw Error(ErrorCode::NotSquare, "row " + std::to_string(i + 1) + " has " +
                                                  std::to_string(rows[i].size()) +
                                                  " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) dense_(i, j) = rows[i][j];
    }
    symmetrize_or_throw();
}

SymmetricMatrix::SymmetricMatrix(const DenseMatrix& m) : dense_(m) {
    if (m.order() == 0) throw Error(ErrorCode::NotSquare, "matrix is empty");
    symmetrize_or_throw();
}

void SymmetricMatrix::symmetrize_or_throw() {
    const std::size_t n = dense_.order();
    for (double v : dense_.data()) {
        if (!std::isfinite(v)) {
            throw Error(ErrorCode::InvalidArgument, "matrix has a non-finite entry");
        }
    }
    const double scale = max_abs(dense_);
    double asym = 0.0;
    std::size_t worst_i = 0, worst_j = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::abs(dense_(i, j) - dense_(j, i));
            if (d > asym) {
                asym = d;
                worst_i = i;
                worst_j = j;
            }
        }
    if (asym > kSymmetryTolerance * scale) {
        throw Error(ErrorCode::NotSymmetric,
                    "matrix is not symmetric: entries (" + std::to_string(worst_i + 1) + "," +
                        std::to_string(worst_j + 1) + ") and (" + std::to_string(worst_j + 1) +
                        "," + std::to_string(worst_i + 1) + ") differ by " +
                        std::to_string(asym));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (dense_(i, j) + dense_(j, i));
            dense_(i, j) = avg;
            dense_(j, i) = avg;
        }
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> values) {
    DenseMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return SymmetricMatrix(m);
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
    return SymmetricMatrix(DenseMatrix::identity(n));
}

std::vector<std::vector<double>> SymmetricMatrix::rows() const {
    const std::size_t n = order();
    std::vector<std::vector<double>> out(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = dense_(i, j);
    return out;
}

SymmetricMatrix SymmetricMatrix::affine(double a, double b) const {
    DenseMatrix m(order());
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j < order(); ++j)
            m(i, j) = a * dense_(i, j) + (i == j ? b : 0.0);
    return SymmetricMatrix(m);
}

}  // namespace eigenstrata
