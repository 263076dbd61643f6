#include "seqlab/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "accumulate.hpp"
#include "seqlab/parse.hpp"

namespace seqlab {

namespace {

constexpr Index kCompensateAbove = 10'000;

}  // namespace

SummabilityMatrix SummabilityMatrix::identity() { return SummabilityMatrix(Kind::identity); }

SummabilityMatrix SummabilityMatrix::cesaro() { return SummabilityMatrix(Kind::cesaro); }

SummabilityMatrix SummabilityMatrix::riesz(std::vector<double> weights) {
    if (weights.empty()) throw SpecError("riesz needs at least one weight");
    std::vector<double> sums;
    sums.reserve(weights.size());
    detail::CompensatedSum acc;
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) throw SpecError("riesz weights must be positive and finite");
        acc.add(w);
        sums.push_back(acc.value());
    }
    SummabilityMatrix m(Kind::riesz);
    m.weights_ = std::make_shared<const std::vector<double>>(std::move(weights));
    m.weight_sums_ = std::make_shared<const std::vector<double>>(std::move(sums));
    return m;
}

SummabilityMatrix SummabilityMatrix::table(std::map<Index, std::vector<Entry>> rows) {
    for (auto& [i, entries] : rows) {
        if (i < 1) throw SpecError("matrix rows are 1-indexed");
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.column < b.column; });
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (entries[j].column < 1) throw SpecError("matrix columns are 1-indexed");
            if (!std::isfinite(entries[j].value))
                throw SpecError("non-finite matrix entry in row " + std::to_string(i));
            if (j > 0 && entries[j].column == entries[j - 1].column)
                throw SpecError("duplicate entry (" + std::to_string(i) + "," +
                                std::to_string(entries[j].column) + ")");
        }
    }
    SummabilityMatrix m(Kind::table);
    m.rows_ = std::make_shared<const std::map<Index, std::vector<Entry>>>(std::move(rows));
    return m;
}

std::string SummabilityMatrix::kind_name() const {
    switch (kind_) {
        case Kind::identity: return "identity";
        case Kind::cesaro: return "cesaro";
        case Kind::riesz: return "riesz";
        case Kind::table: return "table";
    }
    return "table";
}

Index SummabilityMatrix::max_row() const {
    if (kind_ == Kind::riesz) return weights_->size();
    return kUnlimited;
}

std::pair<Index, Index> SummabilityMatrix::row_support(Index i) const {
    switch (kind_) {
        case Kind::identity: return {i, i};
        case Kind::cesaro:
        case Kind::riesz: return {1, i};
        case Kind::table: {
            auto it = rows_->find(i);
            if (it == rows_->end() || it->second.empty()) return {1, 0};
            return {it->second.front().column, it->second.back().column};
        }
    }
    return {1, 0};
}

double SummabilityMatrix::entry(Index i, Index k) const {
    switch (kind_) {
        case Kind::identity: return i == k ? 1.0 : 0.0;
        case Kind::cesaro: return k >= 1 && k <= i ? 1.0 / static_cast<double>(i) : 0.0;
        case Kind::riesz:
            if (i > max_row()) throw DomainError("riesz row " + std::to_string(i) + " beyond the weight table");
            return k >= 1 && k <= i ? (*weights_)[k - 1] / (*weight_sums_)[i - 1] : 0.0;
        case Kind::table: {
            auto it = rows_->find(i);
            if (it == rows_->end()) return 0.0;
            for (const auto& e : it->second)
                if (e.column == k) return e.value;
            return 0.0;
        }
    }
    return 0.0;
}

std::vector<SummabilityMatrix::Entry> SummabilityMatrix::row(Index i) const {
    if (kind_ == Kind::table) {
        auto it = rows_->find(i);
        return it == rows_->end() ? std::vector<Entry>{} : it->second;
    }
    auto [first, last] = row_support(i);
    std::vector<Entry> out;
    for (Index k = first; k <= last; ++k) out.push_back({k, entry(i, k)});
    return out;
}

namespace {

void check_row(const SummabilityMatrix& a, const SequencePrefix& x, Index i) {
    if (i < 1) throw DomainError("matrix rows are 1-indexed");
    if (i > a.max_row()) throw DomainError("row " + std::to_string(i) + " is not materializable");
    auto [first, last] = a.row_support(i);
    Index needed = std::max(i, first <= last ? last : i);
    if (needed > x.size()) throw TruncationError(i, needed, x.size());
}

double finite_or_throw(double v, Index i) {
    if (!std::isfinite(v)) throw DomainError("non-finite accumulation in row " + std::to_string(i));
    return v;
}

}  // namespace

// Row sums of cesaro and riesz rows always run through the compensated
// accumulator so that transform_prefix can share one running state with them.
double apply_row(const SummabilityMatrix& a, const SequencePrefix& x, Index i) {
    check_row(a, x, i);
    switch (a.kind()) {
        case SummabilityMatrix::Kind::identity: return x.at(i);
        case SummabilityMatrix::Kind::cesaro: {
            detail::CompensatedSum acc;
            for (Index k = 1; k <= i; ++k) acc.add(x.at(k));
            return finite_or_throw(acc.value() / static_cast<double>(i), i);
        }
        case SummabilityMatrix::Kind::riesz: {
            detail::CompensatedSum acc;
            for (Index k = 1; k <= i; ++k) acc.add(a.weight(k) * x.at(k));
            return finite_or_throw(acc.value() / a.weight_sum(i), i);
        }
        case SummabilityMatrix::Kind::table: {
            auto entries = a.row(i);
            if (entries.size() > kCompensateAbove) {
                detail::CompensatedSum acc;
                for (const auto& e : entries) acc.add(e.value * x.at(e.column));
                return finite_or_throw(acc.value(), i);
            }
            double s = 0.0;
            for (const auto& e : entries) s += e.value * x.at(e.column);
            return finite_or_throw(s, i);
        }
    }
    return 0.0;
}

SequencePrefix transform_prefix(const SummabilityMatrix& a, const SequencePrefix& x, Index upto) {
    if (upto < 1) throw DomainError("transform needs at least one row");
    std::vector<double> out(upto);
    const std::string label = a.kind_name() + "(" + x.label() + ")";
    switch (a.kind()) {
        case SummabilityMatrix::Kind::cesaro:
        case SummabilityMatrix::Kind::riesz: {
            check_row(a, x, upto);
            const bool riesz = a.kind() == SummabilityMatrix::Kind::riesz;
            detail::CompensatedSum acc;
            for (Index i = 1; i <= upto; ++i) {
                acc.add(riesz ? a.weight(i) * x.at(i) : x.at(i));
                double den = riesz ? a.weight_sum(i) : static_cast<double>(i);
                out[i - 1] = finite_or_throw(acc.value() / den, i);
            }
            break;
        }
        default:
            for (Index i = 1; i <= upto; ++i) out[i - 1] = apply_row(a, x, i);
    }
    return SequencePrefix(std::move(out), label);
}

RegularityReport regularity_check(const SummabilityMatrix& a, Index upto, double tol) {
    if (upto < 1) throw DomainError("regularity check needs at least one row");
    if (upto > a.max_row()) throw DomainError("rows up to " + std::to_string(upto) + " are not materializable");
    RegularityReport rep;
    for (Index i = 1; i <= upto; ++i) {
        detail::CompensatedSum sum, abs_sum;
        for (const auto& e : a.row(i)) {
            sum.add(e.value);
            abs_sum.add(std::abs(e.value));
        }
        rep.row_sums.push_back(sum.value());
        if (abs_sum.value() > rep.sup_abs_row_sum || i == 1) {
            rep.sup_abs_row_sum = abs_sum.value();
            rep.sup_row = i;
        }
    }
    rep.row_sum_deviation = std::abs(rep.row_sums.back() - 1.0);

    const Index columns = std::min<Index>(upto, 10);
    const Index tail_from = upto - (upto + 2) / 3 + 1;
    for (Index k = 1; k <= columns; ++k) {
        rep.column_last.push_back(a.entry(upto, k));
        double m = 0.0;
        for (Index i = tail_from; i <= upto; ++i) m = std::max(m, std::abs(a.entry(i, k)));
        rep.column_tail_max.push_back(m);
    }
    rep.bounded = std::isfinite(rep.sup_abs_row_sum);
    rep.columns_vanish = std::all_of(rep.column_last.begin(), rep.column_last.end(),
                                     [tol](double v) { return std::abs(v) <= tol; });
    rep.rows_sum_to_one = rep.row_sum_deviation <= tol;
    return rep;
}

SummabilityMatrix make_matrix(const std::string& spec) {
    auto [name, args] = parse::head(spec);
    if (name == "identity") return SummabilityMatrix::identity();
    if (name == "cesaro") return SummabilityMatrix::cesaro();
    if (name == "riesz") {
        auto kv = parse::key_values(args);
        if (kv.size() != 1 || kv[0].first != "file") throw SpecError("riesz expects 'riesz:file=PATH'");
        std::vector<double> w;
        for (auto& line : parse::read_lines(kv[0].second)) w.push_back(parse::to_double(line, "riesz weight"));
        return SummabilityMatrix::riesz(std::move(w));
    }
    if (name == "file") {
        auto lines = parse::read_lines(args);
        auto header = parse::split(lines.front(), ',');
        if (header != std::vector<std::string>{"i", "k", "a"}) throw SpecError(args + ": expected header 'i,k,a'");
        std::map<Index, std::vector<SummabilityMatrix::Entry>> rows;
        for (std::size_t r = 1; r < lines.size(); ++r) {
            auto f = parse::split(lines[r], ',');
            if (f.size() != 3) throw SpecError(args + ": expected three columns on line '" + lines[r] + "'");
            rows[parse::to_index(f[0], "i")].push_back(
                {parse::to_index(f[1], "k"), parse::to_double(f[2], "a")});
        }
        return SummabilityMatrix::table(std::move(rows));
    }
    throw SpecError("unknown matrix spec: '" + spec + "'");
}

}  // namespace seqlab
