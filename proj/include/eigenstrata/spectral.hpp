#pragma once

// Symmetric eigendecomposition and the eigenvalue-multiplicity stratum of a
// form, plus the finite data attached to a form with labelled eigenvalues:
// a triple (Q, S, X) with S orthogonal and S Q S^T = X diagonal.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eigenstrata/clustering.hpp"
#include "eigenstrata/combinatorics.hpp"
#include "eigenstrata/matrix.hpp"

namespace eigenstrata {

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiOffDiagonalTol = 1e-13;
inline constexpr std::size_t kMaxCensusOrder = 6;

/// Frame convention: the rows of `frame` are unit eigenvectors, so that
/// frame * q * frame^T = diag(diag). Each row's largest-magnitude entry is
/// positive (ties within 1e-12 relative go to the lowest index).
struct EigenDecomposition {
    SymmetricMatrix q;
    DenseMatrix frame;
    std::vector<double> diag;
    int sweeps = 0;

    DenseMatrix x_matrix() const;
};

/// Cyclic Jacobi. Eigenvalues ascending; equal eigenvalues keep the order
/// in which the iteration left them (a diagonal input is only sorted).
/// Throws NoConvergence if the off-diagonal Frobenius norm stays above
/// kJacobiOffDiagonalTol * ||q||_F after max_sweeps sweeps.
EigenDecomposition jacobi_eigen(const SymmetricMatrix& q, int max_sweeps = kMaxJacobiSweeps);

/// Clusters ascending eigenvalues; throws DegenerateForm if they form a
/// single cluster (a multiple of the identity, up to tolerance).
Clustering cluster_partition(std::span<const double> ascending, double rel_tol = kDefaultRelTol);

/// (q - lo I) / (hi - lo) with lo, hi the extreme cluster representatives.
SymmetricMatrix normalize_form(const SymmetricMatrix& q, double rel_tol = kDefaultRelTol);

struct EigenConfiguration {
    std::vector<double> eigenvalues;             // ascending, raw
    std::vector<double> normalized_eigenvalues;  // mapped so the extreme clusters sit at 0 and 1
    Clustering clusters;
    SimplexPoint point;
    Partition partition;
    std::int64_t codim;
    StratumDims stratum;
    BigCount normalizer_order;
};

EigenConfiguration eigen_configuration(const SymmetricMatrix& q, double rel_tol = kDefaultRelTol);

/// Same, reusing an existing decomposition of q.
EigenConfiguration eigen_configuration(const EigenDecomposition& eig, double rel_tol = kDefaultRelTol);

/// Normalizes q and diagonalizes the result.
EigenDecomposition labelled_object(const SymmetricMatrix& q, double rel_tol = kDefaultRelTol);

/// perm[i] = j means row i of the permutation matrix P has its 1 in
/// column j. Returns (Q, P S, P X P^T).
EigenDecomposition relabel(const EigenDecomposition& obj, std::span<const int> perm);

/// A morphism a -> b: the forms agree within tol and X_b is a rearrangement
/// of X_a compatible with S_b S_a^T. Returns the permutation in the
/// convention of relabel(), or nullopt. Throws DimensionMismatch.
///
/// When S_b S_a^T is itself a signed permutation its pattern is returned;
/// otherwise (repeated eigenvalues) the lowest-index matching of diagonal
/// entries is.
std::optional<std::vector<int>> find_morphism(const EigenDecomposition& a,
                                              const EigenDecomposition& b, double tol = 1e-9);

struct SignedPermutation {
    std::vector<int> perm;   // 0-based; row i has its entry in column perm[i]
    std::vector<int> signs;  // +1 / -1 per row

    DenseMatrix matrix() const;

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

struct DiagonalizerCensus {
    Partition partition;
    std::vector<SignedPermutation> members;

    std::size_t count() const noexcept { return members.size(); }
};

/// Exhaustive search over all 2^n n! signed permutation matrices commuting
/// with diag(x), entries snapped to their cluster means. n <= 6.
DiagonalizerCensus diagonalizer_census(std::span<const double> ascending,
                                       double rel_tol = kDefaultRelTol);

}  // namespace eigenstrata
