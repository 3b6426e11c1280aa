#pragma once

#include <vector>

#include <Eigen/Core>

#include "tcur/errors.hpp"

namespace tcur {

using Index = Eigen::Index;

/// Ordered list of distinct 1-based slice indices into a dimension of size
/// `bound`. Samplers produce these; slicing and CUR assembly consume them.
struct IndexSet {
    std::vector<Index> indices;
    Index bound = 0;

    IndexSet() = default;
    IndexSet(std::vector<Index> idx, Index bound_) : indices(std::move(idx)), bound(bound_) {
        validate();
    }

    Index size() const { return static_cast<Index>(indices.size()); }

    /// Throws IndexError on an out-of-range or duplicate entry.
    void validate() const;

    bool contains(Index i) const;
};

inline bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.bound == b.bound && a.indices == b.indices;
}

} // namespace tcur
