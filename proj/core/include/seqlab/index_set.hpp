#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "seqlab/error.hpp"

namespace seqlab {

inline constexpr Index kUnlimited = std::numeric_limits<Index>::max();

// A subset of {1, 2, 3, ...}. Immutable; copies share state.
//
// count(n) is |A ∩ {1..n}|. Built-in sets count in closed form, explicit sets
// by binary search and predicate sets by scanning.
class IndexSet {
public:
    using Predicate = std::function<bool(Index)>;
    using Counter = std::function<Index(Index)>;

    // Predicate set; `counter` is an optional closed form for count().
    static IndexSet from_predicate(std::string name, Predicate contains, Counter counter = {},
                                   Index n_max = kUnlimited);
    // Indices must be >= 1 and strictly increasing.
    static IndexSet from_sorted(std::string name, std::vector<Index> indices,
                                Index n_max = kUnlimited);

    static IndexSet all();
    static IndexSet empty(Index n_max = kUnlimited);

    const std::string& name() const noexcept { return state_->name; }
    Index n_max() const noexcept { return state_->n_max; }
    bool is_explicit() const noexcept { return state_->sorted != nullptr; }

    bool contains(Index i) const;
    Index count(Index n) const;
    Index count_complement(Index n) const { return n - count(n); }

    // Members <= n in increasing order.
    std::vector<Index> materialize(Index n) const;
    // counts[j] = count(j) for j = 0..n, from a single pass.
    std::vector<Index> prefix_counts(Index n) const;

    IndexSet complement() const;

private:
    struct State {
        std::string name;
        Index n_max = kUnlimited;
        Predicate contains;
        Counter counter;
        std::shared_ptr<const std::vector<Index>> sorted;
    };

    explicit IndexSet(std::shared_ptr<const State> state) : state_(std::move(state)) {}
    void require_range(Index n) const;

    std::shared_ptr<const State> state_;
};

// Set-spec mini-language: evens, odds, squares, all, arith:a,d, list:1,4,9,
// file:PATH (one index per line).
IndexSet make_index_set(const std::string& spec);

}  // namespace seqlab
