#pragma once

// Face lattices of the type-A Coxeter complex and of the associahedron K_n.
//
// Coxeter complex: the (n-2)-sphere in {sum x_i = 0} cut by the hyperplanes
// x_i = x_j. A face is an ordered set partition of {1..n} into b >= 2
// blocks (the labels in each block have collided, blocks listed in
// increasing position); its dimension is b - 2, and the n! faces with
// singleton blocks are the chambers.
//
// Associahedron K_n: faces are laminar families of proper brackets [i..j]
// on the word 1..n, with 2 <= j-i+1 <= n-1. A family of k brackets is a face
// of codimension k; vertices carry n-2 brackets.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "eigenstrata/combinatorics.hpp"

namespace eigenstrata {

class OrderedSetPartition {
public:
    /// Labels are 1-based. Blocks are stored sorted; throws InvalidArgument
    /// unless the blocks are nonempty, disjoint, cover {1..n}, and b >= 2.
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

    int n() const noexcept { return n_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    int dim() const noexcept { return block_count() - 2; }
    bool is_chamber() const noexcept { return block_count() == n_; }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

    /// "{1,2}{3}"
    std::string to_string() const;

    friend auto operator<=>(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

struct Bracket {
    int lo;  // 1-based, inclusive
    int hi;

    int size() const noexcept { return hi - lo + 1; }
    bool contains(const Bracket& o) const noexcept { return lo <= o.lo && o.hi <= hi; }
    bool disjoint(const Bracket& o) const noexcept { return hi < o.lo || o.hi < lo; }
    bool compatible(const Bracket& o) const noexcept {
        return contains(o) || o.contains(*this) || disjoint(o);
    }

    friend auto operator<=>(const Bracket&, const Bracket&) = default;
};

class BracketSet {
public:
    /// Throws InvalidArgument on an improper bracket, a duplicate, or two
    /// partially overlapping brackets. n must be at least 2.
    BracketSet(int n, std::vector<Bracket> brackets);

    int n() const noexcept { return n_; }
    int codim() const noexcept { return static_cast<int>(brackets_.size()); }
    int dim() const noexcept { return n_ - 2 - codim(); }
    const std::vector<Bracket>& brackets() const noexcept { return brackets_; }

    /// Image under the relabeling i -> n+1-i.
    BracketSet reversed() const;

    /// "((12)3)4" style parenthesization of the word 1..n.
    std::string to_string() const;

    friend auto operator<=>(const BracketSet&, const BracketSet&) = default;

private:
    int n_;
    std::vector<Bracket> brackets_;  // sorted
};

struct FVector {
    std::vector<std::uint64_t> counts;  // by dimension 0..d

    /// Alternating sum of counts.
    std::int64_t euler_characteristic() const;

    friend bool operator==(const FVector&, const FVector&) = default;
};

inline constexpr int kMinCoxeterN = 3;
inline constexpr int kMaxCoxeterN = 8;
inline constexpr int kMaxAssociahedronN = 9;
inline constexpr int kMaxTilingN = 10;

/// Ordered set partitions of {1..n} into dim+2 blocks, in lexicographic
/// order of their block lists.
std::vector<OrderedSetPartition> coxeter_faces(int n, int dim);

FVector coxeter_fvector(int n);

/// Laminar bracket families of size `codim`, in lexicographic order.
std::vector<BracketSet> associahedron_faces(int n, int codim);

/// Face counts of K_n by dimension 0..n-2.
FVector associahedron_fvector(int n);

/// Gaps k (between the k-th and (k+1)-th positions, 1 <= k <= n-1) covered
/// by some bracket: the simplex face {t_k = 0} the K_n face blows down to.
std::set<int> blowdown(const BracketSet& face);

/// Every face of K_n whose blowdown is exactly `gaps`.
std::vector<BracketSet> blowdown_preimages(int n, const std::set<int>& gaps);

struct TilingStats {
    BigCount chambers;  // Coxeter chambers, n!
    BigCount tiles_M;   // associahedra tiling the real moduli space, n!/2
    BigCount tiles_OM;  // associahedra tiling its orientable double cover, n!

    friend bool operator==(const TilingStats&, const TilingStats&) = default;
};

TilingStats tiling_stats(int n);

/// Catalan number C_k.
std::uint64_t catalan(int k);

}  // namespace eigenstrata
