#pragma once

// Integer partitions and the dimension bookkeeping of the eigenvalue
// multiplicity stratification of real symmetric matrices.
//
// A partition n = n_1 + ... + n_r records the multiplicities of the distinct
// eigenvalues of a form. Everything here is exact integer arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eigenstrata {

/// Exact unbounded counts (group orders overflow 64 bits quickly).
using BigCount = boost::multiprecision::cpp_int;

class Partition {
public:
    /// Sorts into descending canonical order. Throws InvalidArgument on an
    /// empty list or a non-positive part.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Number of parts equal to i.
    int nu(int i) const noexcept;

    bool all_ones() const noexcept { return parts_.front() == 1; }

    /// "2+1+1"
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct SpaceDims {
    std::int64_t quad_dim;    // n(n+1)/2
    std::int64_t orth_dim;    // n(n-1)/2
    std::int64_t difference;  // always n

    friend bool operator==(const SpaceDims&, const SpaceDims&) = default;
};

struct StratumDims {
    std::int64_t orth_isotropy_dim;  // dim of the product of O(n_i)
    std::int64_t flag_dim;           // dim O(n)/prod O(n_i)
    std::int64_t relative_dim;       // isotropy + flag, always n(n-1)/2
    std::int64_t codim;
    std::int64_t family_dim;         // number of parts r

    friend bool operator==(const StratumDims&, const StratumDims&) = default;
};

inline constexpr int kMaxPartitionN = 30;

/// All partitions of n in reverse-lexicographic order, (n) first and
/// (1,...,1) last. Requires 1 <= n <= kMaxPartitionN.
std::vector<Partition> partitions_of(int n);

/// Codimension of the stratum: (1/2) sum_i (i+2)(i-1) nu_i.
std::int64_t arnold_codim(const Partition& p);

/// Same codimension from the dimension count
/// n(n+1)/2 - [r + (n(n-1) - sum n_i(n_i-1))/2].
std::int64_t arnold_codim_raw(const Partition& p);

SpaceDims space_dims(int n);

StratumDims stratum_dims(const Partition& p);

/// Order of prod_i (S_{n_i} wr Z_2), i.e. prod_i n_i! 2^{n_i}.
BigCount normalizer_order(const Partition& p);

/// n! as an exact integer.
BigCount factorial(int n);

}  // namespace eigenstrata
