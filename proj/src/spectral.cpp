#include "eigenstrata/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

DenseMatrix EigenDecomposition::x_matrix() const {
    DenseMatrix x(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) x(i, i) = diag[i];
    return x;
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double scale = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            if (i != j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            if (i != j) sum += (a(i, j) / scale) * (a(i, j) / scale);
    return scale * std::sqrt(sum);
}

// a <- P^T a P and v <- v P, with P the rotation in the (p, q) plane that
// annihilates a(p, q). Incremental form: diagonal entries move by t * a(p, q).
void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);
    const std::size_t n = a.order();

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double g = a(r, p);
        const double h = a(r, q);
        a(r, p) = a(p, r) = g - s * (h + g * tau);
        a(r, q) = a(q, r) = h + s * (g - h * tau);
    }
    for (std::size_t r = 0; r < n; ++r) {
        const double g = v(r, p);
        const double h = v(r, q);
        v(r, p) = g - s * (h + g * tau);
        v(r, q) = h + s * (g - h * tau);
    }
}

void fix_row_signs(DenseMatrix& s) {
    const std::size_t n = s.order();
    for (std::size_t i = 0; i < n; ++i) {
        double biggest = 0.0;
        for (std::size_t j = 0; j < n; ++j) biggest = std::max(biggest, std::abs(s(i, j)));
        std::size_t lead = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(s(i, j)) >= biggest * (1.0 - 1e-12)) {
                lead = j;
                break;
            }
        }
        if (s(i, lead) < 0.0)
            for (std::size_t j = 0; j < n; ++j) s(i, j) = -s(i, j);
    }
}

}  // namespace

EigenDecomposition jacobi_eigen(const SymmetricMatrix& q, int max_sweeps) {
    const std::size_t n = q.order();
    DenseMatrix a = q.dense();
    DenseMatrix v = DenseMatrix::identity(n);
    const double target = kJacobiOffDiagonalTol * frobenius_norm(a);

    int sweeps = 0;
    while (off_diagonal_norm(a) > target) {
        if (sweeps >= max_sweeps) {
            throw Error(ErrorCode::NoConvergence,
                        "Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t r = p + 1; r < n; ++r)
                if (a(p, r) != 0.0) rotate(a, v, p, r);
        ++sweeps;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition out{q, DenseMatrix(n), std::vector<double>(n), sweeps};
    for (std::size_t k = 0; k < n; ++k) {
        out.diag[k] = a(order[k], order[k]);
        for (std::size_t j = 0; j < n; ++j) out.frame(k, j) = v(j, order[k]);
    }
    fix_row_signs(out.frame);
    return out;
}

Clustering cluster_partition(std::span<const double> ascending, double rel_tol) {
    Clustering clusters = cluster_sorted(ascending, rel_tol);
    if (clusters.count() < 2) {
        throw Error(ErrorCode::DegenerateForm,
                    "all eigenvalues coincide within tolerance: the form is a multiple of the identity");
    }
    return clusters;
}

SymmetricMatrix normalize_form(const SymmetricMatrix& q, double rel_tol) {
    const EigenDecomposition eig = jacobi_eigen(q);
    const Clustering clusters = cluster_partition(eig.diag, rel_tol);
    const double lo = clusters.representatives.front();
    const double range = clusters.representatives.back() - lo;
    const std::size_t n = q.order();
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (q(i, j) - (i == j ? lo : 0.0)) / range;
    return SymmetricMatrix(m);
}

EigenConfiguration eigen_configuration(const EigenDecomposition& eig, double rel_tol) {
    Clustering clusters = cluster_partition(eig.diag, rel_tol);
    const double lo = clusters.representatives.front();
    const double range = clusters.representatives.back() - lo;
    std::vector<double> normalized;
    normalized.reserve(eig.diag.size());
    for (double x : eig.diag) normalized.push_back((x - lo) / range);

    Partition partition = clusters.partition();
    SimplexPoint point = clustered_gap_point(clusters);
    const std::int64_t codim = arnold_codim(partition);
    const StratumDims dims = stratum_dims(partition);
    BigCount order = normalizer_order(partition);
    return {eig.diag,       std::move(normalized), std::move(clusters), std::move(point),
            std::move(partition), codim,           dims,                std::move(order)};
}

EigenConfiguration eigen_configuration(const SymmetricMatrix& q, double rel_tol) {
    return eigen_configuration(jacobi_eigen(q), rel_tol);
}

EigenDecomposition labelled_object(const SymmetricMatrix& q, double rel_tol) {
    return jacobi_eigen(normalize_form(q, rel_tol));
}

namespace {

void check_permutation(std::span<const int> perm, std::size_t n) {
    if (perm.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "permutation has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (int j : perm) {
        if (j < 0 || static_cast<std::size_t>(j) >= n || seen[static_cast<std::size_t>(j)]) {
            throw Error(ErrorCode::InvalidArgument, "not a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(j)] = true;
    }
}

}  // namespace

EigenDecomposition relabel(const EigenDecomposition& obj, std::span<const int> perm) {
    const std::size_t n = obj.diag.size();
    check_permutation(perm, n);
    EigenDecomposition out{obj.q, DenseMatrix(n), std::vector<double>(n), obj.sweeps};
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = static_cast<std::size_t>(perm[i]);
        out.diag[i] = obj.diag[src];
        for (std::size_t j = 0; j < n; ++j) out.frame(i, j) = obj.frame(src, j);
    }
    return out;
}

std::optional<std::vector<int>> find_morphism(const EigenDecomposition& a,
                                              const EigenDecomposition& b, double tol) {
    const std::size_t n = a.diag.size();
    if (b.diag.size() != n || a.q.order() != n || b.q.order() != n) {
        throw Error(ErrorCode::DimensionMismatch, "objects have different orders");
    }
    if (max_abs(a.q.dense() - b.q.dense()) > tol) return std::nullopt;

    std::vector<double> xa = a.diag, xb = b.diag;
    std::sort(xa.begin(), xa.end());
    std::sort(xb.begin(), xb.end());
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(xa[i] - xb[i]) > tol) return std::nullopt;

    const DenseMatrix m = b.frame * a.frame.transposed();
    if (max_abs(m * a.x_matrix() * m.transposed() - b.x_matrix()) > tol) return std::nullopt;

    std::vector<int> perm(n, -1);
    bool signed_permutation = true;
    for (std::size_t i = 0; i < n && signed_permutation; ++i) {
        int hit = -1;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = std::abs(m(i, j));
            if (v >= 1.0 - tol) {
                if (hit >= 0) signed_permutation = false;
                hit = static_cast<int>(j);
            } else if (v > tol) {
                signed_permutation = false;
            }
        }
        if (hit < 0) signed_permutation = false;
        perm[i] = hit;
    }
    if (signed_permutation) {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i)
            if (sorted[i] != static_cast<int>(i)) signed_permutation = false;
    }
    if (signed_permutation) return perm;

    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!used[j] && std::abs(b.diag[i] - a.diag[j]) <= tol) {
                used[j] = true;
                perm[i] = static_cast<int>(j);
                break;
            }
        }
        if (perm[i] < 0) return std::nullopt;
    }
    return perm;
}

DenseMatrix SignedPermutation::matrix() const {
    DenseMatrix m(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        m(i, static_cast<std::size_t>(perm[i])) = signs[i];
    return m;
}

DiagonalizerCensus diagonalizer_census(std::span<const double> ascending, double rel_tol) {
    const std::size_t n = ascending.size();
    if (n == 0 || n > kMaxCensusOrder) {
        throw Error(ErrorCode::OutOfRange, "diagonalizer census needs 1 <= n <= " +
                                               std::to_string(kMaxCensusOrder) + ", got " +
                                               std::to_string(n));
    }
    const Clustering clusters = cluster_sorted(ascending, rel_tol);
    DenseMatrix x(n);
    std::size_t pos = 0;
    for (std::size_t c = 0; c < clusters.count(); ++c)
        for (int k = 0; k < clusters.sizes[c]; ++k, ++pos) x(pos, pos) = clusters.representatives[c];

    DiagonalizerCensus census{clusters.partition(), {}};
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignedPermutation candidate{perm, std::vector<int>(n)};
            for (std::size_t i = 0; i < n; ++i) candidate.signs[i] = (mask >> i) & 1u ? -1 : 1;
            const DenseMatrix m = candidate.matrix();
            if (m * x == x * m) census.members.push_back(std::move(candidate));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return census;
}

}  // namespace eigenstrata
