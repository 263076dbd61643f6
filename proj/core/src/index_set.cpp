#include "seqlab/index_set.hpp"

#include <algorithm>
#include <cmath>

#include "seqlab/parse.hpp"

namespace seqlab {

namespace {

Index isqrt(Index n) {
    auto r = static_cast<Index>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void require_sorted(const std::vector<Index>& v, const std::string& what) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] < 1) throw SpecError(what + ": indices must be >= 1");
        if (j > 0 && v[j] <= v[j - 1]) throw SpecError(what + ": indices must be strictly increasing");
    }
}

}  // namespace

IndexSet IndexSet::from_predicate(std::string name, Predicate contains, Counter counter,
                                  Index n_max) {
    auto s = std::make_shared<State>();
    s->name = std::move(name);
    s->n_max = n_max;
    s->contains = std::move(contains);
    s->counter = std::move(counter);
    return IndexSet(std::move(s));
}

IndexSet IndexSet::from_sorted(std::string name, std::vector<Index> indices, Index n_max) {
    require_sorted(indices, name);
    auto s = std::make_shared<State>();
    s->name = std::move(name);
    s->n_max = n_max;
    s->sorted = std::make_shared<const std::vector<Index>>(std::move(indices));
    return IndexSet(std::move(s));
}

IndexSet IndexSet::all() {
    return from_predicate("all", [](Index) { return true; }, [](Index n) { return n; });
}

IndexSet IndexSet::empty(Index n_max) { return from_sorted("empty", {}, n_max); }

void IndexSet::require_range(Index n) const {
    if (n > state_->n_max)
        throw DomainError("set '" + state_->name + "' is only known up to " +
                          std::to_string(state_->n_max) + ", asked for " + std::to_string(n));
}

bool IndexSet::contains(Index i) const {
    require_range(i);
    if (i == 0) return false;
    if (state_->sorted) return std::binary_search(state_->sorted->begin(), state_->sorted->end(), i);
    return state_->contains(i);
}

Index IndexSet::count(Index n) const {
    require_range(n);
    if (state_->sorted) {
        auto it = std::upper_bound(state_->sorted->begin(), state_->sorted->end(), n);
        return static_cast<Index>(it - state_->sorted->begin());
    }
    if (state_->counter) return state_->counter(n);
    Index c = 0;
    for (Index i = 1; i <= n; ++i) c += state_->contains(i) ? 1 : 0;
    return c;
}

std::vector<Index> IndexSet::materialize(Index n) const {
    require_range(n);
    std::vector<Index> out;
    if (state_->sorted) {
        auto end = std::upper_bound(state_->sorted->begin(), state_->sorted->end(), n);
        out.assign(state_->sorted->begin(), end);
        return out;
    }
    for (Index i = 1; i <= n; ++i)
        if (state_->contains(i)) out.push_back(i);
    return out;
}

std::vector<Index> IndexSet::prefix_counts(Index n) const {
    require_range(n);
    std::vector<Index> counts(n + 1, 0);
    if (state_->sorted) {
        auto it = state_->sorted->begin();
        const auto end = state_->sorted->end();
        for (Index i = 1; i <= n; ++i) {
            bool hit = it != end && *it == i;
            if (hit) ++it;
            counts[i] = counts[i - 1] + (hit ? 1 : 0);
        }
        return counts;
    }
    for (Index i = 1; i <= n; ++i) counts[i] = counts[i - 1] + (state_->contains(i) ? 1 : 0);
    return counts;
}

IndexSet IndexSet::complement() const {
    IndexSet self = *this;
    return from_predicate(
        "complement(" + name() + ")", [self](Index i) { return !self.contains(i); },
        [self](Index n) { return n - self.count(n); }, n_max());
}

IndexSet make_index_set(const std::string& spec) {
    auto [name, args] = parse::head(spec);
    if (name == "evens")
        return IndexSet::from_predicate("evens", [](Index i) { return i % 2 == 0; },
                                        [](Index n) { return n / 2; });
    if (name == "odds")
        return IndexSet::from_predicate("odds", [](Index i) { return i % 2 == 1; },
                                        [](Index n) { return (n + 1) / 2; });
    if (name == "squares")
        return IndexSet::from_predicate(
            "squares", [](Index i) { Index r = isqrt(i); return r * r == i; }, isqrt);
    if (name == "all") return IndexSet::all();
    if (name == "arith") {
        auto parts = parse::split(args, ',');
        if (parts.size() != 2) throw SpecError("arith expects 'arith:a,d', got '" + spec + "'");
        Index a = parse::to_index(parts[0], "arith start");
        Index d = parse::to_index(parts[1], "arith step");
        if (a < 1 || d < 1) throw SpecError("arith needs a >= 1 and d >= 1: '" + spec + "'");
        return IndexSet::from_predicate(
            "arith:" + std::to_string(a) + "," + std::to_string(d),
            [a, d](Index i) { return i >= a && (i - a) % d == 0; },
            [a, d](Index n) { return n < a ? Index{0} : (n - a) / d + 1; });
    }
    if (name == "list") {
        std::vector<Index> v;
        for (auto& p : parse::split(args, ',')) v.push_back(parse::to_index(p, "list element"));
        return IndexSet::from_sorted(spec, std::move(v));
    }
    if (name == "file") {
        std::vector<Index> v;
        for (auto& line : parse::read_lines(args)) v.push_back(parse::to_index(line, "index"));
        return IndexSet::from_sorted(spec, std::move(v));
    }
    throw SpecError("unknown set spec: '" + spec + "'");
}

}  // namespace seqlab
