#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "seqlab/index_set.hpp"
#include "seqlab/sequence.hpp"

namespace seqlab {

// Summability matrix A = (a_ik) with finite rows. Immutable.
class SummabilityMatrix {
public:
    enum class Kind { identity, cesaro, riesz, table };

    struct Entry {
        Index column;
        double value;
    };

    static SummabilityMatrix identity();
    static SummabilityMatrix cesaro();
    // Weighted means a_ik = p_k / (p_1 + ... + p_i); weights must be > 0.
    // Rows beyond the weight table are not materializable.
    static SummabilityMatrix riesz(std::vector<double> weights);
    // Explicit rows; a missing row is a zero row.
    static SummabilityMatrix table(std::map<Index, std::vector<Entry>> rows);

    Kind kind() const noexcept { return kind_; }
    std::string kind_name() const;

    // Inclusive column range [first, last] of row i's possible nonzeros;
    // {1, 0} for an empty row.
    std::pair<Index, Index> row_support(Index i) const;
    // Materialized entries of row i in column order.
    std::vector<Entry> row(Index i) const;
    double entry(Index i, Index k) const;

    // Largest row index that can be materialized at all.
    Index max_row() const;

    // Riesz weight p_k and partial sum p_1 + ... + p_i.
    double weight(Index k) const { return weights_->at(k - 1); }
    double weight_sum(Index i) const { return weight_sums_->at(i - 1); }

private:
    explicit SummabilityMatrix(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::shared_ptr<const std::vector<double>> weights_;
    std::shared_ptr<const std::vector<double>> weight_sums_;
    std::shared_ptr<const std::map<Index, std::vector<Entry>>> rows_;
};

// identity, cesaro, riesz:file=PATH, file:PATH (CSV header `i,k,a`).
SummabilityMatrix make_matrix(const std::string& spec);

// A_i(x) = sum_k a_ik x_k. Throws TruncationError when row i reaches past x.
double apply_row(const SummabilityMatrix& a, const SequencePrefix& x, Index i);

// (A_1(x), ..., A_upto(x)); element i equals apply_row(a, x, i) exactly.
SequencePrefix transform_prefix(const SummabilityMatrix& a, const SequencePrefix& x, Index upto);

struct RegularityReport {
    double sup_abs_row_sum = 0.0;
    Index sup_row = 0;
    std::vector<double> row_sums;  // i = 1..upto
    double row_sum_deviation = 0.0;  // |sum_k a_{upto,k} - 1|
    // Per tracked column k = 1..min(upto, 10): a_{upto,k} and max over the last third of rows.
    std::vector<double> column_last;
    std::vector<double> column_tail_max;
    bool bounded = true;
    bool columns_vanish = true;
    bool rows_sum_to_one = true;
};

// Silverman-Toeplitz style diagnostic at truncation. Advisory only.
RegularityReport regularity_check(const SummabilityMatrix& a, Index upto, double tol = 1e-2);

}  // namespace seqlab
