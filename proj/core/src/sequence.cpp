#include "seqlab/sequence.hpp"

#include <cmath>

#include "seqlab/index_set.hpp"
#include "seqlab/parse.hpp"

namespace seqlab {

SequencePrefix::SequencePrefix(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) throw DomainError("sequence prefix must hold at least one term");
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (!std::isfinite(values_[k]))
            throw DomainError("non-finite value at index " + std::to_string(k + 1));
}

SequencePrefix SequencePrefix::head(Index n) const {
    if (n < 1 || n > size()) throw DomainError("head length out of range");
    return SequencePrefix({values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n)},
                          label_);
}

SequencePrefix SequencePrefix::extended(std::span<const double> tail) const {
    auto v = values_;
    v.insert(v.end(), tail.begin(), tail.end());
    return SequencePrefix(std::move(v), label_);
}

namespace {

SequencePrefix read_sequence_csv(const std::string& path) {
    auto lines = parse::read_lines(path);
    auto header = parse::split(lines.front(), ',');
    if (header.size() != 2 || header[0] != "i" || header[1] != "value")
        throw SpecError(path + ": expected header 'i,value'");
    std::vector<double> v;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        auto f = parse::split(lines[row], ',');
        if (f.size() != 2) throw SpecError(path + ": expected two columns on line " + lines[row]);
        Index i = parse::to_index(f[0], "i");
        if (i != v.size() + 1)
            throw SpecError(path + ": indices must run 1, 2, 3, ... without gaps (got " +
                            std::to_string(i) + ")");
        v.push_back(parse::to_double(f[1], "value"));
    }
    if (v.empty()) throw SpecError(path + ": no data rows");
    return SequencePrefix(std::move(v), "file:" + path);
}

}  // namespace

SequencePrefix make_sequence(const std::string& spec, Index n) {
    auto [name, args] = parse::head(spec);
    if (name == "list") {
        std::vector<double> v;
        for (auto& p : parse::split(args, ',')) v.push_back(parse::to_double(p, "list value"));
        return SequencePrefix(std::move(v), spec);
    }
    if (name == "file") return read_sequence_csv(args);
    if (n < 1) throw SpecError("sequence length must be >= 1");
    std::vector<double> v(n);
    if (name == "const") {
        double c = parse::to_double(args, "const");
        std::fill(v.begin(), v.end(), c);
    } else if (name == "alt") {
        auto parts = parse::split(args, ',');
        if (parts.size() != 2) throw SpecError("alt expects 'alt:a,b'");
        double a = parse::to_double(parts[0], "alt odd value");
        double b = parse::to_double(parts[1], "alt even value");
        for (Index i = 1; i <= n; ++i) v[i - 1] = (i % 2 == 1) ? a : b;
    } else if (name == "harmonic") {
        double l = parse::to_double(args, "harmonic limit");
        for (Index i = 1; i <= n; ++i) v[i - 1] = l + 1.0 / static_cast<double>(i);
    } else if (name == "spike") {
        std::string set_spec;
        double base = 0.0, delta = 1.0;
        for (auto& [key, value] : parse::key_values(args)) {
            if (key == "set") set_spec = value;
            else if (key == "base") base = parse::to_double(value, "spike base");
            else if (key == "delta") delta = parse::to_double(value, "spike delta");
            else throw SpecError("unknown spike key '" + key + "'");
        }
        if (set_spec.empty()) throw SpecError("spike needs set=SPEC");
        auto set = make_index_set(set_spec);
        for (Index i = 1; i <= n; ++i) v[i - 1] = set.contains(i) ? base + delta : base;
    } else {
        throw SpecError("unknown sequence spec: '" + spec + "'");
    }
    return SequencePrefix(std::move(v), spec);
}

}  // namespace seqlab
