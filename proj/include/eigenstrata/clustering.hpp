#pragma once

// Single-linkage clustering of sorted reals with a threshold relative to
// their range. Shared by eigenvalue clustering and point-collision detection
// so the two agree exactly on diagonal inputs.

#include <cstddef>
#include <span>
#include <vector>

#include "eigenstrata/combinatorics.hpp"

namespace eigenstrata {

inline constexpr double kDefaultRelTol = 1e-8;

struct SimplexPoint {
    std::vector<double> t;  // barycentric, t_k >= 0, sum 1

    friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;
};

struct Clustering {
    std::vector<int> sizes;               // positional, in increasing value order
    std::vector<double> representatives;  // cluster means
    std::vector<std::size_t> merged_gaps; // 0-based k: positions k and k+1 share a cluster
    double threshold = 0.0;               // rel_tol * (max - min)

    std::size_t count() const noexcept { return sizes.size(); }
    Partition partition() const { return Partition(sizes); }
};

/// Consecutive values whose gap is <= rel_tol * (max - min) are merged.
/// Values must be nonempty, finite and ascending; rel_tol finite and >= 0.
/// A constant input yields one cluster.
Clustering cluster_sorted(std::span<const double> ascending, double rel_tol);

/// Normalized gap coordinates over the clustered values: gaps inside a
/// cluster are exactly 0, the gap between clusters c and c+1 is
/// (rep[c+1] - rep[c]) / (rep.back() - rep.front()). Needs >= 2 clusters.
SimplexPoint clustered_gap_point(const Clustering& clusters);

}  // namespace eigenstrata
