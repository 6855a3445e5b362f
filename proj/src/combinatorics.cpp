#include "eigenstrata/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "partition must have at least one part");
    }
    for (int part : parts_) {
        if (part < 1) {
            throw Error(ErrorCode::InvalidArgument,
                        "partition parts must be positive, got " + std::to_string(part));
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::nu(int i) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k > 0) out += '+';
        out += std::to_string(parts_[k]);
    }
    return out;
}

namespace {

// Parts bounded above by `max_part`, descending; emits largest-first, which
// is reverse-lexicographic order.
void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1 || n > kMaxPartitionN) {
        throw Error(ErrorCode::OutOfRange, "partitions_of: n must lie in [1, " +
                                               std::to_string(kMaxPartitionN) + "], got " +
                                               std::to_string(n));
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

std::int64_t arnold_codim(const Partition& p) {
    std::int64_t twice = 0;
    for (int i = 1; i <= p.n(); ++i) {
        const std::int64_t nu = p.nu(i);
        twice += static_cast<std::int64_t>(i + 2) * (i - 1) * nu;
    }
    return twice / 2;
}

std::int64_t arnold_codim_raw(const Partition& p) {
    const std::int64_t n = p.n();
    const std::int64_t r = p.length();
    std::int64_t within = 0;
    for (int part : p.parts()) within += static_cast<std::int64_t>(part) * (part - 1);
    return n * (n + 1) / 2 - (r + (n * (n - 1) - within) / 2);
}

SpaceDims space_dims(int n) {
    if (n < 1) {
        throw Error(ErrorCode::OutOfRange, "space_dims: n must be positive");
    }
    const std::int64_t m = n;
    const std::int64_t quad = m * (m + 1) / 2;
    const std::int64_t orth = m * (m - 1) / 2;
    return {quad, orth, quad - orth};
}

StratumDims stratum_dims(const Partition& p) {
    const std::int64_t n = p.n();
    std::int64_t isotropy = 0;
    for (int part : p.parts()) isotropy += static_cast<std::int64_t>(part) * (part - 1) / 2;
    const std::int64_t flag = n * (n - 1) / 2 - isotropy;
    return {isotropy, flag, isotropy + flag, arnold_codim(p), p.length()};
}

BigCount factorial(int n) {
    BigCount out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

BigCount normalizer_order(const Partition& p) {
    BigCount out = 1;
    for (int part : p.parts()) {
        out *= factorial(part);
        out <<= part;
    }
    return out;
}

}  // namespace eigenstrata
