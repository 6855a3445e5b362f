#pragma once

// Labelled configurations of n points on the real line modulo x -> ax + b
// with a > 0.
//
// Sorting the points and recording the normalized gaps
//   t_k = (x_(k+1) - x_(k)) / (x_(n) - x_(1))
// gives a chamber (which label sits at each position) and a point of the open
// (n-2)-simplex. Allowing collisions closes this up to the Coxeter complex:
// colliding labels form the blocks of an ordered set partition and the
// corresponding t_k vanish.
//
// Reflection x -> -x (a < 0) is not quotiented out. It sends the chamber
// (s_1, ..., s_n) to (s_n, ..., s_1) and reverses t; normalize() reports this
// opposite chamber rather than identifying the two.
//
// Viewed as points of the real projective line, the configuration carries an
// (n+1)-st point at infinity; nothing here depends on it.

#include <vector>

#include "eigenstrata/clustering.hpp"
#include "eigenstrata/matrix.hpp"
#include "eigenstrata/polytopes.hpp"

namespace eigenstrata {

class Configuration {
public:
    /// Requires n >= 2 finite points.
    explicit Configuration(std::vector<double> points);

    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<double>& points() const noexcept { return points_; }

    /// a*x + b applied pointwise.
    Configuration affine(double a, double b) const;

private:
    std::vector<double> points_;
};

struct NormalizedConfiguration {
    std::vector<int> chamber;  // chamber[k] = 1-based label of the (k+1)-th smallest point
    SimplexPoint point;        // n-1 gap coordinates

    friend bool operator==(const NormalizedConfiguration&,
                           const NormalizedConfiguration&) = default;
};

struct CompactifiedCell {
    OrderedSetPartition cell;  // blocks in increasing value order
    SimplexPoint point;        // zero at every collided gap
    Partition multiplicities;  // block sizes
};

/// Labels ordered by value; ties keep the original label order.
std::vector<int> sorting_permutation(const Configuration& c);

/// Throws DegenerateConfiguration if all points coincide, DuplicatePoints if
/// any two do.
NormalizedConfiguration normalize(const Configuration& c);

/// Points whose gaps are <= rel_tol * range collide (single linkage).
/// Throws DegenerateConfiguration if everything collides.
CompactifiedCell compactified_cell(const Configuration& c, double rel_tol = kDefaultRelTol);

/// diag(x_1, ..., x_n)
SymmetricMatrix embed_diagonal(const Configuration& c);

}  // namespace eigenstrata
