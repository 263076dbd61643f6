#include <doctest.h>

#include <cmath>

#include "seqlab/error.hpp"
#include "seqlab/membership.hpp"
#include "seqlab/witnesses.hpp"
#include "test_support.hpp"

using namespace seqlab;

namespace {

SpaceParams params(Index blocks, double limit = 0.0) {
    SpaceParams p;
    p.scheme = make_lacunary("powers2", blocks);
    p.limit = limit;
    return p;
}

SequencePrefix spike_on_squares(Index n, double base = 2.0) {
    return make_sequence("spike:set=squares,base=" + std::to_string(base) + ",delta=1", n);
}

// Independent count of {i in J_r : s_i >= eps} straight from the definition.
std::vector<Index> brute_counts(const SequencePrefix& x, const SpaceParams& p) {
    std::vector<Index> out;
    for (Index r = 1; r <= p.scheme.blocks(); ++r) {
        Index c = 0;
        for (Index i = p.scheme.cut(r - 1) + 1; i <= p.scheme.cut(r); ++i)
            if (std::abs(x.at(i) - p.limit) >= p.eps) ++c;
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_CASE("pointwise scores") {
    auto p = params(6, 3.0);
    auto z = pointwise_scores(make_sequence("const:3", 100), p);
    for (double s : z.values()) CHECK(s == 0.0);

    auto x = test::random_prefix(7, 100);
    auto s = pointwise_scores(x, p);
    for (Index i = 1; i <= 100; ++i) CHECK(s.at(i) == std::abs(x.at(i) - 3.0));

    auto q = params(6, 0.0);
    q.family = OrliczFamily::uniform(OrliczFn::power(2.0));
    auto sp = pointwise_scores(make_sequence("spike:set=squares,base=0,delta=1", 100), q);
    for (Index i = 1; i <= 100; ++i) {
        Index r = static_cast<Index>(std::sqrt(static_cast<double>(i)));
        CHECK(sp.at(i) == (r * r == i ? 1.0 : 0.0));
    }
}

TEST_CASE("reduction chain on random prefixes") {
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        auto p = params(8, 0.25 * seed - 10.0);
        p.eps = 0.5 + 0.01 * seed;
        auto x = test::random_prefix(1000 + seed, 256 + seed, -12.0, 12.0);
        auto s = pointwise_scores(x, p);
        for (Index i = 1; i <= x.size(); ++i) REQUIRE(s.at(i) == std::abs(x.at(i) - p.limit));

        auto c = exceedance_ratios(x, p);
        auto b = brute_counts(x, p);
        for (Index r = 1; r <= p.scheme.blocks(); ++r)
            REQUIRE(c[r - 1] == static_cast<double>(b[r - 1]) / static_cast<double>(p.scheme.length(r)));
    }
}

TEST_CASE("block residual properties") {
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        auto p = params(9, 0.5);
        p.alpha = 0.5 + 0.5 * (seed % 3) / 2.0;
        p.family = seed % 2 ? OrliczFamily::uniform(OrliczFn::power(2.0)) : OrliczFamily::uniform(OrliczFn::linear());
        auto x = test::random_prefix(2000 + seed, 512, -2.0, 2.0);
        for (double eps : {0.05, 0.3, 1.0, 2.5}) {
            p.eps = eps;
            auto t = block_residuals(x, p);
            auto c = exceedance_ratios(x, p);
            for (Index r = 1; r <= p.scheme.blocks(); ++r) {
                REQUIRE(t[r - 1] >= 0.0);
                REQUIRE(t[r - 1] >= eps * c[r - 1] * (1.0 - 1e-12));
                double h = static_cast<double>(p.scheme.length(r));
                REQUIRE(c[r - 1] <= std::pow(h, 1.0 - p.alpha) * (1.0 + 1e-12));
            }
        }
        auto lo = p;
        lo.eps = 0.2;
        auto hi = p;
        hi.eps = 0.7;
        auto clo = exceedance_ratios(x, lo);
        auto chi = exceedance_ratios(x, hi);
        for (std::size_t r = 0; r < clo.size(); ++r) REQUIRE(clo[r] >= chi[r]);
    }
}

TEST_CASE("block verdicts ignore values past the scheme") {
    auto p = params(10, 2.0);
    auto x = spike_on_squares(1024);
    std::vector<double> junk(500, 1e6);
    auto y = x.extended(junk);
    CHECK(w_membership(x, p, kDefaultTol).verdict == w_membership(y, p, kDefaultTol).verdict);
    CHECK(fstat_membership_block(x, p, kDefaultTol).trail == fstat_membership_block(y, p, kDefaultTol).trail);
    CHECK(block_residuals(x, p) == block_residuals(y, p));
}

TEST_CASE("constant sequences are members in every mode") {
    auto p = params(10, 3.0);
    auto x = make_sequence("const:3", 1024);
    auto w = w_membership(x, p, kDefaultTol);
    CHECK(w.verdict == Verdict::member);
    for (double t : w.block_residuals) CHECK(t == 0.0);
    auto b = fstat_membership_block(x, p, kDefaultTol);
    CHECK(b.verdict == Verdict::member);
    for (double c : b.exceedance_ratios) CHECK(c == 0.0);
    CHECK_FALSE(b.warnings.empty());
    for (const char* m : {"id", "log1p", "pow:0.5"})
        CHECK(fstat_membership_global(x, p, make_modulus(m), kDefaultTol).verdict == Verdict::member);
}

TEST_CASE("too few blocks") {
    auto p = params(5);
    CHECK_THROWS_AS(w_membership(make_sequence("const:0", 64), p, kDefaultTol), DomainError);
    CHECK_THROWS_AS(fstat_membership_block(make_sequence("const:0", 64), p, kDefaultTol), DomainError);
    CHECK_THROWS_AS(block_residuals(make_sequence("const:0", 10), params(6)), TruncationError);
}

TEST_CASE("global mode separates moduli on spikes over the squares") {
    auto p = params(10, 2.0);
    auto x = spike_on_squares(1000000);
    auto id = fstat_membership_global(x, p, make_modulus("id"), kDefaultTol);
    CHECK(id.verdict == Verdict::member);
    REQUIRE(id.density.has_value());
    CHECK(id.density->final_ratio() <= 1e-3);

    auto lg = fstat_membership_global(x, p, make_modulus("log1p"), 2e-2);
    CHECK(lg.verdict == Verdict::non_member);
    CHECK(std::abs(*lg.density->value - 0.5) <= 0.02);

    CHECK_THROWS_AS(fstat_membership_global(x, p, make_modulus("bounded"), kDefaultTol), DomainError);
}

TEST_CASE("limit estimation") {
    auto p = params(10);
    auto id = make_modulus("id");
    auto c = fstat_limit_estimate(make_sequence("const:4.5", 100000), p, id, 0.1, kDefaultTol);
    REQUIRE(c.limit.has_value());
    CHECK(*c.limit == 4.5);

    auto s = fstat_limit_estimate(spike_on_squares(100000), p, id, 0.1, kDefaultTol);
    REQUIRE(s.limit.has_value());
    CHECK(*s.limit == 2.0);

    auto a = fstat_limit_estimate(make_sequence("alt:1,0", 100000), p, id, 0.1, kDefaultTol);
    CHECK_FALSE(a.limit.has_value());
    CHECK(a.candidates.size() >= 2);
    for (auto v : a.verdicts) CHECK(v != Verdict::member);
}

TEST_CASE("f-statistical Cauchy check") {
    auto p = params(10);
    auto id = make_modulus("id");
    CHECK(fstat_cauchy_check(make_sequence("harmonic:1", 100000), p, id, 0.1, kDefaultTol).cauchy);
    auto s = fstat_cauchy_check(spike_on_squares(100000), p, id, 0.1, kDefaultTol);
    CHECK(s.cauchy);
    REQUIRE(s.anchor.has_value());
    Index r = static_cast<Index>(std::sqrt(static_cast<double>(*s.anchor)));
    CHECK(r * r != *s.anchor);
    auto a = fstat_cauchy_check(make_sequence("alt:1,0", 100000), p, id, 0.5, kDefaultTol);
    CHECK_FALSE(a.cauchy);
    CHECK_FALSE(a.anchor.has_value());
}

TEST_CASE("boundedness inclusion probe") {
    auto id = make_modulus("id");
    auto p = params(18, 0.0);
    auto bounded = make_sequence("spike:set=squares,base=0,delta=1", p.scheme.last());
    auto probe = boundedness_inclusion_probe(bounded, p, id, kDefaultTol);
    CHECK(probe.hypothesis_met);
    CHECK(probe.bounded);
    REQUIRE(probe.fstat_block.has_value());
    REQUIRE(probe.w.has_value());
    CHECK(probe.fstat_block->verdict == Verdict::member);
    CHECK(probe.w->verdict == Verdict::member);
    CHECK(probe.consistent);

    auto q = params(10, 1.0);
    auto c = boundedness_inclusion_probe(make_sequence("const:1", 1024), q, id, kDefaultTol);
    CHECK(c.hypothesis_met);
    CHECK(c.fstat_block->verdict == Verdict::member);
    CHECK(c.w->verdict == Verdict::member);

    auto inst = gen_thm37_instance(OrliczFn::linear(), make_lacunary("powers2", 12), 1.0, 1.0);
    auto u = boundedness_inclusion_probe(inst.x, inst.params, id, kDefaultTol);
    CHECK_FALSE(u.hypothesis_met);
    CHECK_FALSE(u.bounded);
    CHECK_FALSE(u.w.has_value());

    auto half = params(10);
    half.alpha = 0.5;
    auto h = boundedness_inclusion_probe(make_sequence("const:0", 1024), half, id, kDefaultTol);
    CHECK_FALSE(h.hypothesis_met);
    CHECK(h.ratio_deviation > 1.0);
}

TEST_CASE("parameter validation") {
    auto p = params(6);
    p.alpha = 1.5;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p.alpha = 1.0;
    p.eps = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    CHECK(params(6).with_limit(2.0).limit == 2.0);
    CHECK(to_string(Verdict::non_member) == "non-member");
    CHECK(to_string(Mode::fstat_global) == "fstat-global");
}
