#pragma once

#include <span>
#include <string>
#include <vector>

#include "seqlab/error.hpp"

namespace seqlab {

// The first N terms x_1..x_N of a real sequence. 1-indexed access through at().
class SequencePrefix {
public:
    // Throws DomainError if `values` is empty or holds a non-finite entry.
    SequencePrefix(std::vector<double> values, std::string label);

    Index size() const noexcept { return values_.size(); }
    double at(Index i) const { return values_[i - 1]; }
    std::span<const double> values() const noexcept { return values_; }
    const std::string& label() const noexcept { return label_; }

    // Copy of x_1..x_n (n <= size()).
    SequencePrefix head(Index n) const;
    // This prefix followed by `tail`.
    SequencePrefix extended(std::span<const double> tail) const;

private:
    std::vector<double> values_;
    std::string label_;
};

// Sequence-spec mini-language, materialized at length n:
//   const:c                 x_i = c
//   list:v1,v2,...          explicit values (length fixed by the list)
//   file:PATH               CSV with header `i,value`, 1-indexed, no gaps
//   alt:a,b                 x_i = a for odd i, b for even i
//   harmonic:L              x_i = L + 1/i
//   spike:set=S,base=b,delta=d   x_i = b + d on set S, b elsewhere
SequencePrefix make_sequence(const std::string& spec, Index n);

}  // namespace seqlab
