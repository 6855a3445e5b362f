#include "eigenstrata/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

Configuration::Configuration(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "configuration needs at least 2 points");
    }
    for (double x : points_) {
        if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite point");
    }
}

Configuration Configuration::affine(double a, double b) const {
    std::vector<double> out(points_.size());
    std::transform(points_.begin(), points_.end(), out.begin(),
                   [&](double x) { return a * x + b; });
    return Configuration(std::move(out));
}

std::vector<int> sorting_permutation(const Configuration& c) {
    std::vector<int> labels(c.size());
    std::iota(labels.begin(), labels.end(), 1);
    const auto& x = c.points();
    std::stable_sort(labels.begin(), labels.end(), [&](int a, int b) {
        return x[static_cast<std::size_t>(a - 1)] < x[static_cast<std::size_t>(b - 1)];
    });
    return labels;
}

namespace {

std::vector<double> sorted_values(const Configuration& c, const std::vector<int>& order) {
    std::vector<double> out;
    out.reserve(order.size());
    for (int label : order) out.push_back(c.points()[static_cast<std::size_t>(label - 1)]);
    return out;
}

}  // namespace

NormalizedConfiguration normalize(const Configuration& c) {
    NormalizedConfiguration out;
    out.chamber = sorting_permutation(c);
    const auto x = sorted_values(c, out.chamber);
    const double range = x.back() - x.front();
    if (range == 0.0) {
        throw Error(ErrorCode::DegenerateConfiguration, "all points coincide");
    }
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        if (x[k + 1] == x[k]) {
            throw Error(ErrorCode::DuplicatePoints,
                        "points " + std::to_string(out.chamber[k]) + " and " +
                            std::to_string(out.chamber[k + 1]) + " coincide");
        }
        out.point.t.push_back((x[k + 1] - x[k]) / range);
    }
    return out;
}

CompactifiedCell compactified_cell(const Configuration& c, double rel_tol) {
    const auto order = sorting_permutation(c);
    const auto x = sorted_values(c, order);
    const Clustering clusters = cluster_sorted(x, rel_tol);
    if (clusters.count() < 2) {
        throw Error(ErrorCode::DegenerateConfiguration,
                    "all points coincide within the collision tolerance");
    }
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    for (int size : clusters.sizes) {
        blocks.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(pos),
                            order.begin() + static_cast<std::ptrdiff_t>(pos) + size);
        pos += static_cast<std::size_t>(size);
    }
    return {OrderedSetPartition(std::move(blocks)), clustered_gap_point(clusters),
            clusters.partition()};
}

SymmetricMatrix embed_diagonal(const Configuration& c) {
    return SymmetricMatrix::diagonal(c.points());
}

}  // namespace eigenstrata
