#include "seqlab/lacunary.hpp"

#include <algorithm>
#include <cmath>

#include "seqlab/parse.hpp"

namespace seqlab {

LacunaryScheme::LacunaryScheme(std::vector<Index> cuts) : cuts_(std::move(cuts)) {
    if (cuts_.size() < 2) throw SpecError("lacunary scheme needs at least one block");
    if (cuts_.front() != 0) throw SpecError("lacunary scheme must start at k_0 = 0");
    for (std::size_t r = 1; r < cuts_.size(); ++r)
        if (cuts_[r] <= cuts_[r - 1])
            throw SpecError("lacunary cuts must be strictly increasing (k_" + std::to_string(r) +
                            " = " + std::to_string(cuts_[r]) + ")");
}

double LacunaryScheme::ratio(Index r) const {
    if (r < 2 || r > blocks()) throw DomainError("ratio defined for 2 <= r <= R");
    return static_cast<double>(cuts_[r]) / static_cast<double>(cuts_[r - 1]);
}

std::vector<Index> LacunaryScheme::lengths() const {
    std::vector<Index> h(blocks());
    for (Index r = 1; r <= blocks(); ++r) h[r - 1] = length(r);
    return h;
}

Index LacunaryScheme::block_of(Index i) const {
    if (i == 0 || i > last())
        throw DomainError("index " + std::to_string(i) + " outside (0, " + std::to_string(last()) +
                          "]");
    // first cut >= i closes the block containing i
    auto it = std::lower_bound(cuts_.begin() + 1, cuts_.end(), i);
    return static_cast<Index>(it - cuts_.begin());
}

LacunaryScheme LacunaryScheme::truncated(Index r) const {
    if (r < 1 || r > blocks()) throw DomainError("cannot truncate to " + std::to_string(r) + " blocks");
    return LacunaryScheme({cuts_.begin(), cuts_.begin() + static_cast<std::ptrdiff_t>(r + 1)});
}

namespace {

LacunaryScheme from_listed(std::vector<Index> cuts, Index blocks, const std::string& spec) {
    if (cuts.empty() || cuts.front() != 0) cuts.insert(cuts.begin(), 0);
    LacunaryScheme all(std::move(cuts));
    if (blocks == 0) return all;
    if (blocks > all.blocks())
        throw SpecError("'" + spec + "' has only " + std::to_string(all.blocks()) + " blocks");
    return all.truncated(blocks);
}

}  // namespace

LacunaryScheme make_lacunary(const std::string& spec, Index blocks) {
    auto [name, args] = parse::head(spec);
    if (name == "explicit") {
        std::vector<Index> cuts;
        for (auto& p : parse::split(args, ',')) cuts.push_back(parse::to_index(p, "cut"));
        return from_listed(std::move(cuts), blocks, spec);
    }
    if (name == "file") {
        std::vector<Index> cuts;
        for (auto& line : parse::read_lines(args)) cuts.push_back(parse::to_index(line, "cut"));
        return from_listed(std::move(cuts), blocks, spec);
    }
    if (blocks < 1) throw SpecError("block count must be >= 1");
    std::vector<Index> cuts{0};
    if (name == "powers2") {
        if (blocks > 62) throw SpecError("powers2 supports at most 62 blocks");
        for (Index r = 1; r <= blocks; ++r) cuts.push_back(Index{1} << r);
        return LacunaryScheme(std::move(cuts));
    }
    if (name == "geometric") {
        double q = parse::to_double(args, "geometric ratio");
        if (q <= 1.0) throw SpecError("geometric ratio must exceed 1, got " + parse::trim(args));
        for (Index r = 1; r <= blocks; ++r) {
            double target = std::ceil(std::pow(q, static_cast<double>(r)));
            if (target > 9e15) throw SpecError("geometric scheme overflows at block " + std::to_string(r));
            cuts.push_back(std::max(cuts.back() + 1, static_cast<Index>(target)));
        }
        return LacunaryScheme(std::move(cuts));
    }
    throw SpecError("unknown theta spec: '" + spec + "'");
}

}  // namespace seqlab
