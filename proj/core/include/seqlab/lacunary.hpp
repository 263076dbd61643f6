#pragma once

#include <string>
#include <vector>

#include "seqlab/error.hpp"

namespace seqlab {

// Cut points 0 = k_0 < k_1 < ... < k_R with blocks J_r = (k_{r-1}, k_r].
class LacunaryScheme {
public:
    // `cuts` must start with 0 and be strictly increasing with at least one block.
    explicit LacunaryScheme(std::vector<Index> cuts);

    Index blocks() const noexcept { return cuts_.size() - 1; }
    Index cut(Index r) const { return cuts_.at(r); }
    Index last() const noexcept { return cuts_.back(); }
    const std::vector<Index>& cuts() const noexcept { return cuts_; }

    Index length(Index r) const { return cuts_.at(r) - cuts_.at(r - 1); }
    Index first_in(Index r) const { return cuts_.at(r - 1) + 1; }
    Index last_in(Index r) const { return cuts_.at(r); }
    // k_r / k_{r-1}, defined for r >= 2.
    double ratio(Index r) const;

    std::vector<Index> lengths() const;

    // The unique r with i in J_r. Throws DomainError unless 0 < i <= k_R.
    Index block_of(Index i) const;

    // The first `r` blocks.
    LacunaryScheme truncated(Index r) const;

private:
    std::vector<Index> cuts_;
};

// Theta-spec mini-language: powers2, geometric:q, explicit:k1,k2,...,
// file:PATH (one cut per line). Built-ins produce exactly R blocks; explicit
// and file schemes use the first R blocks, or all of them when R == 0.
LacunaryScheme make_lacunary(const std::string& spec, Index blocks);

}  // namespace seqlab
