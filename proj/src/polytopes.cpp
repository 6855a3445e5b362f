#include "eigenstrata/polytopes.hpp"

#include <algorithm>
#include <numeric>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    if (blocks_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "ordered set partition needs at least 2 blocks");
    }
    for (auto& block : blocks_) {
        if (block.empty()) throw Error(ErrorCode::InvalidArgument, "empty block");
        std::sort(block.begin(), block.end());
        n_ += static_cast<int>(block.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (const auto& block : blocks_)
        for (int label : block) {
            if (label < 1 || label > n_ || seen[static_cast<std::size_t>(label)]) {
                throw Error(ErrorCode::InvalidArgument,
                            "blocks must partition {1.." + std::to_string(n_) + "}");
            }
            seen[static_cast<std::size_t>(label)] = true;
        }
}

std::string OrderedSetPartition::to_string() const {
    std::string out;
    for (const auto& block : blocks_) {
        out += '{';
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k > 0) out += ',';
            out += std::to_string(block[k]);
        }
        out += '}';
    }
    return out;
}

BracketSet::BracketSet(int n, std::vector<Bracket> brackets)
    : n_(n), brackets_(std::move(brackets)) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "bracket set needs n >= 2");
    std::sort(brackets_.begin(), brackets_.end());
    for (std::size_t a = 0; a < brackets_.size(); ++a) {
        const Bracket& b = brackets_[a];
        if (b.lo < 1 || b.hi > n || b.size() < 2 || b.size() > n - 1) {
            throw Error(ErrorCode::InvalidArgument,
                        "bracket [" + std::to_string(b.lo) + ".." + std::to_string(b.hi) +
                            "] is not a proper bracket on 1.." + std::to_string(n));
        }
        if (a > 0 && brackets_[a - 1] == b) {
            throw Error(ErrorCode::InvalidArgument, "duplicate bracket");
        }
        for (std::size_t c = 0; c < a; ++c) {
            if (!b.compatible(brackets_[c])) {
                throw Error(ErrorCode::InvalidArgument, "brackets partially overlap");
            }
        }
    }
}

BracketSet BracketSet::reversed() const {
    std::vector<Bracket> out;
    out.reserve(brackets_.size());
    for (const Bracket& b : brackets_) out.push_back({n_ + 1 - b.hi, n_ + 1 - b.lo});
    return BracketSet(n_, std::move(out));
}

std::string BracketSet::to_string() const {
    std::vector<int> opens(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<int> closes(static_cast<std::size_t>(n_) + 1, 0);
    for (const Bracket& b : brackets_) {
        ++opens[static_cast<std::size_t>(b.lo)];
        ++closes[static_cast<std::size_t>(b.hi)];
    }
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        if (i > 1) out += ' ';
        out.append(static_cast<std::size_t>(opens[static_cast<std::size_t>(i)]), '(');
        out += std::to_string(i);
        out.append(static_cast<std::size_t>(closes[static_cast<std::size_t>(i)]), ')');
    }
    return out;
}

std::int64_t FVector::euler_characteristic() const {
    std::int64_t sum = 0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        const auto c = static_cast<std::int64_t>(counts[d]);
        sum += (d % 2 == 0) ? c : -c;
    }
    return sum;
}

namespace {

void check_coxeter_n(int n) {
    if (n < kMinCoxeterN || n > kMaxCoxeterN) {
        throw Error(ErrorCode::OutOfRange, "Coxeter complex: n must lie in [" +
                                               std::to_string(kMinCoxeterN) + ", " +
                                               std::to_string(kMaxCoxeterN) + "], got " +
                                               std::to_string(n));
    }
}

void check_associahedron_n(int n) {
    if (n < kMinCoxeterN || n > kMaxAssociahedronN) {
        throw Error(ErrorCode::OutOfRange, "associahedron: n must lie in [" +
                                               std::to_string(kMinCoxeterN) + ", " +
                                               std::to_string(kMaxAssociahedronN) + "], got " +
                                               std::to_string(n));
    }
}

// Visits every unordered set partition of {0..n-1} as a restricted growth
// string: rgs[i] is the block of element i, and rgs[i] <= 1 + max(rgs[0..i)).
template <typename Visit>
void for_each_set_partition(int n, Visit&& visit) {
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == n) {
            visit(rgs, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    rec(rec, 0, 0);
}

std::vector<Bracket> proper_brackets(int n) {
    std::vector<Bracket> out;
    for (int lo = 1; lo <= n; ++lo)
        for (int hi = lo + 1; hi <= n; ++hi) {
            const Bracket b{lo, hi};
            if (b.size() <= n - 1) out.push_back(b);
        }
    return out;
}

// Visits each laminar family (as ascending indices into `all`) exactly once,
// in lexicographic order of index sequences.
template <typename Visit>
void for_each_laminar_family(const std::vector<Bracket>& all, int max_size, Visit&& visit) {
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        visit(chosen);
        if (static_cast<int>(chosen.size()) == max_size) return;
        for (std::size_t k = start; k < all.size(); ++k) {
            bool ok = true;
            for (std::size_t c : chosen) {
                if (!all[k].compatible(all[c])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(k);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<OrderedSetPartition> coxeter_faces(int n, int dim) {
    check_coxeter_n(n);
    if (dim < 0 || dim > n - 2) {
        throw Error(ErrorCode::OutOfRange, "Coxeter face dimension must lie in [0, " +
                                               std::to_string(n - 2) + "], got " +
                                               std::to_string(dim));
    }
    const int want = dim + 2;
    std::vector<OrderedSetPartition> out;
    for_each_set_partition(n, [&](const std::vector<int>& rgs, int blocks) {
        if (blocks != want) return;
        std::vector<std::vector<int>> unordered(static_cast<std::size_t>(blocks));
        for (int i = 0; i < n; ++i) unordered[static_cast<std::size_t>(rgs[i])].push_back(i + 1);
        std::vector<int> order(static_cast<std::size_t>(blocks));
        std::iota(order.begin(), order.end(), 0);
        do {
            std::vector<std::vector<int>> blocks_in_order;
            blocks_in_order.reserve(order.size());
            for (int b : order) blocks_in_order.push_back(unordered[static_cast<std::size_t>(b)]);
            out.emplace_back(std::move(blocks_in_order));
        } while (std::next_permutation(order.begin(), order.end()));
    });
    std::sort(out.begin(), out.end());
    return out;
}

FVector coxeter_fvector(int n) {
    check_coxeter_n(n);
    FVector f;
    f.counts.assign(static_cast<std::size_t>(n - 1), 0);
    for_each_set_partition(n, [&](const std::vector<int>&, int blocks) {
        if (blocks < 2) return;
        std::uint64_t orderings = 1;
        for (int k = 2; k <= blocks; ++k) orderings *= static_cast<std::uint64_t>(k);
        f.counts[static_cast<std::size_t>(blocks - 2)] += orderings;
    });
    return f;
}

std::vector<BracketSet> associahedron_faces(int n, int codim) {
    check_associahedron_n(n);
    if (codim < 0 || codim > n - 2) {
        throw Error(ErrorCode::OutOfRange, "associahedron codimension must lie in [0, " +
                                               std::to_string(n - 2) + "], got " +
                                               std::to_string(codim));
    }
    const auto all = proper_brackets(n);
    std::vector<BracketSet> out;
    for_each_laminar_family(all, codim, [&](const std::vector<std::size_t>& chosen) {
        if (static_cast<int>(chosen.size()) != codim) return;
        std::vector<Bracket> brackets;
        brackets.reserve(chosen.size());
        for (std::size_t k : chosen) brackets.push_back(all[k]);
        out.emplace_back(n, std::move(brackets));
    });
    return out;
}

FVector associahedron_fvector(int n) {
    check_associahedron_n(n);
    FVector f;
    f.counts.assign(static_cast<std::size_t>(n - 1), 0);
    const auto all = proper_brackets(n);
    for_each_laminar_family(all, n - 2, [&](const std::vector<std::size_t>& chosen) {
        const int dim = n - 2 - static_cast<int>(chosen.size());
        ++f.counts[static_cast<std::size_t>(dim)];
    });
    return f;
}

std::set<int> blowdown(const BracketSet& face) {
    std::set<int> gaps;
    for (const Bracket& b : face.brackets())
        for (int k = b.lo; k < b.hi; ++k) gaps.insert(k);
    return gaps;
}

std::vector<BracketSet> blowdown_preimages(int n, const std::set<int>& gaps) {
    check_associahedron_n(n);
    const auto all = proper_brackets(n);
    std::vector<BracketSet> out;
    for_each_laminar_family(all, n - 2, [&](const std::vector<std::size_t>& chosen) {
        std::vector<Bracket> brackets;
        for (std::size_t k : chosen) brackets.push_back(all[k]);
        BracketSet face(n, std::move(brackets));
        if (blowdown(face) == gaps) out.push_back(std::move(face));
    });
    std::sort(out.begin(), out.end());
    return out;
}

TilingStats tiling_stats(int n) {
    if (n < kMinCoxeterN || n > kMaxTilingN) {
        throw Error(ErrorCode::OutOfRange, "tiling: n must lie in [" +
                                               std::to_string(kMinCoxeterN) + ", " +
                                               std::to_string(kMaxTilingN) + "], got " +
                                               std::to_string(n));
    }
    const BigCount chambers = factorial(n);
    return {chambers, chambers / 2, chambers};
}

std::uint64_t catalan(int k) {
    // C_{j+1} = C_j * 2(2j+1)/(j+2), exact at every step
    std::uint64_t c = 1;
    for (int j = 0; j < k; ++j) c = c * 2 * (2 * static_cast<std::uint64_t>(j) + 1) / (j + 2);
    return c;
}

}  // namespace eigenstrata
