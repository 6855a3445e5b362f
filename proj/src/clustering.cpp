#include "eigenstrata/clustering.hpp"

#include <cmath>
#include <string>

#include "eigenstrata/error.hpp"

namespace eigenstrata {

Clustering cluster_sorted(std::span<const double> ascending, double rel_tol) {
    if (ascending.empty()) throw Error(ErrorCode::InvalidArgument, "no values to cluster");
    if (!std::isfinite(rel_tol) || rel_tol < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be finite and non-negative");
    }
    for (std::size_t k = 0; k < ascending.size(); ++k) {
        if (!std::isfinite(ascending[k])) {
            throw Error(ErrorCode::InvalidArgument, "non-finite value in clustering input");
        }
        if (k > 0 && ascending[k] < ascending[k - 1]) {
            throw Error(ErrorCode::InvalidArgument, "clustering input is not ascending");
        }
    }

    Clustering out;
    out.threshold = rel_tol * (ascending.back() - ascending.front());

    double sum = ascending[0];
    int size = 1;
    auto close = [&] {
        out.sizes.push_back(size);
        out.representatives.push_back(sum / size);
    };
    for (std::size_t k = 1; k < ascending.size(); ++k) {
        if (ascending[k] - ascending[k - 1] <= out.threshold) {
            out.merged_gaps.push_back(k - 1);
            sum += ascending[k];
            ++size;
        } else {
            close();
            sum = ascending[k];
            size = 1;
        }
    }
    close();
    return out;
}

SimplexPoint clustered_gap_point(const Clustering& clusters) {
    if (clusters.count() < 2) {
        throw Error(ErrorCode::InvalidArgument, "gap coordinates need at least two clusters");
    }
    const auto& rep = clusters.representatives;
    const double range = rep.back() - rep.front();
    SimplexPoint p;
    for (std::size_t c = 0; c < clusters.count(); ++c) {
        p.t.insert(p.t.end(), static_cast<std::size_t>(clusters.sizes[c] - 1), 0.0);
        if (c + 1 < clusters.count()) p.t.push_back((rep[c + 1] - rep[c]) / range);
    }
    return p;
}

}  // namespace eigenstrata
