#include <doctest.h>

#include <cmath>

#include "seqlab/error.hpp"
#include "seqlab/index_set.hpp"
#include "seqlab/lacunary.hpp"
#include "seqlab/sequence.hpp"
#include "test_support.hpp"

using namespace seqlab;

namespace {

Index brute_count(const IndexSet& s, Index n) {
    Index c = 0;
    for (Index i = 1; i <= n; ++i) c += s.contains(i) ? 1 : 0;
    return c;
}

}  // namespace

TEST_CASE("set specs count as documented") {
    CHECK(make_index_set("evens").count(10) == 5);
    CHECK(make_index_set("squares").count(100) == 10);
    auto ar = make_index_set("arith:3,5");
    CHECK(ar.count(20) == 4);
    CHECK(ar.materialize(20) == std::vector<Index>{3, 8, 13, 18});
    CHECK(make_index_set("odds").count(7) == 4);
    CHECK(make_index_set("all").count(1000) == 1000);
    CHECK(make_index_set("list:1,4,9").count(8) == 2);
    auto f = make_index_set("file:" + test::data("indices.txt"));
    CHECK(f.materialize(100) == std::vector<Index>{2, 5, 11});
}

TEST_CASE("closed-form counts agree with enumeration") {
    for (const char* spec : {"evens", "odds", "squares", "arith:3,5", "arith:1,7", "list:2,3,50", "all"}) {
        auto s = make_index_set(spec);
        auto prefix = s.prefix_counts(2000);
        for (Index n = 0; n <= 2000; n += 7) {
            CAPTURE(spec);
            CAPTURE(n);
            REQUIRE(s.count(n) == brute_count(s, n));
            REQUIRE(prefix[n] == s.count(n));
            REQUIRE(s.count(n) + s.count_complement(n) == n);
            REQUIRE(s.complement().count(n) == s.count_complement(n));
        }
    }
}

TEST_CASE("count is nondecreasing and bounded by n") {
    auto s = make_index_set("squares");
    Index prev = 0;
    for (Index n = 1; n <= 5000; ++n) {
        Index c = s.count(n);
        REQUIRE(c >= prev);
        REQUIRE(c <= n);
        prev = c;
    }
}

TEST_CASE("malformed set specs are rejected") {
    CHECK_THROWS_AS(make_index_set("primes"), SpecError);
    CHECK_THROWS_AS(make_index_set("arith:3"), SpecError);
    CHECK_THROWS_AS(make_index_set("arith:0,2"), SpecError);
    CHECK_THROWS_AS(make_index_set("arith:x,2"), SpecError);
    CHECK_THROWS_AS(make_index_set("list:4,2"), SpecError);
    CHECK_THROWS_AS(make_index_set("file:" + test::data("empty.txt")), SpecError);
    CHECK_THROWS_AS(make_index_set("file:/nonexistent/x"), SpecError);
}

TEST_CASE("bounded explicit sets refuse queries past n_max") {
    auto s = IndexSet::from_sorted("e", {1, 3}, 10);
    CHECK(s.count(10) == 2);
    CHECK_THROWS_AS(s.count(11), DomainError);
}

TEST_CASE("lacunary specs") {
    auto p = make_lacunary("powers2", 4);
    CHECK(p.cuts() == std::vector<Index>{0, 2, 4, 8, 16});
    CHECK(p.lengths() == std::vector<Index>{2, 2, 4, 8});

    auto g = make_lacunary("geometric:1.5", 3);
    // k_r = max(k_{r-1} + 1, ceil(1.5^r)): 2, max(3, 3), max(4, 4)
    CHECK(g.cuts() == std::vector<Index>{0, 2, 3, 4});
    for (Index r = 1; r <= g.blocks(); ++r) CHECK(g.length(r) >= 1);

    auto e = make_lacunary("explicit:0,3,7,20", 0);
    CHECK(e.lengths() == std::vector<Index>{3, 4, 13});
    CHECK(e.ratio(2) == doctest::Approx(7.0 / 3.0));

    auto f = make_lacunary("file:" + test::data("cuts.txt"), 2);
    CHECK(f.cuts() == std::vector<Index>{0, 3, 7});

    CHECK_THROWS_AS(make_lacunary("explicit:0,3,3", 0), SpecError);
    CHECK_THROWS_AS(make_lacunary("geometric:1", 4), SpecError);
    CHECK_THROWS_AS(make_lacunary("geometric:0.5", 4), SpecError);
    CHECK_THROWS_AS(make_lacunary("explicit:0,3,7", 5), SpecError);
    CHECK_THROWS_AS(make_lacunary("nope", 3), SpecError);
}

TEST_CASE("built-in schemes grow") {
    for (auto [spec, r] : {std::pair{"powers2", 20}, std::pair{"geometric:2", 20}, std::pair{"geometric:3.5", 12}}) {
        auto s = make_lacunary(spec, static_cast<Index>(r));
        auto h = s.lengths();
        for (std::size_t k = 1; k < h.size(); ++k) CHECK(h[k] >= h[k - 1]);
        CHECK(h.back() > h.front());
    }
}

TEST_CASE("block_of inverts block enumeration") {
    auto p = make_lacunary("powers2", 4);
    CHECK(p.block_of(3) == 2);
    CHECK(p.block_of(2) == 1);
    CHECK(p.block_of(16) == 4);
    CHECK_THROWS_AS(p.block_of(0), DomainError);
    CHECK_THROWS_AS(p.block_of(17), DomainError);

    for (const char* spec : {"powers2", "geometric:1.3", "geometric:2.7"}) {
        auto s = make_lacunary(spec, 12);
        Index total = 0;
        for (Index r = 1; r <= s.blocks(); ++r) {
            total += s.length(r);
            for (Index i = s.first_in(r); i <= s.last_in(r); ++i) REQUIRE(s.block_of(i) == r);
        }
        CHECK(total == s.last());
    }
}

TEST_CASE("sequence prefixes") {
    CHECK_THROWS_AS(SequencePrefix({}, "empty"), DomainError);
    CHECK_THROWS_AS(SequencePrefix({1.0, NAN}, "nan"), DomainError);
    CHECK_THROWS_AS(SequencePrefix({INFINITY}, "inf"), DomainError);

    auto c = make_sequence("const:3", 5);
    CHECK(c.size() == 5);
    CHECK(c.at(5) == 3.0);

    auto alt = make_sequence("alt:1,0", 4);
    CHECK(alt.at(1) == 1.0);
    CHECK(alt.at(2) == 0.0);

    auto h = make_sequence("harmonic:2", 4);
    CHECK(h.at(4) == 2.25);

    auto sp = make_sequence("spike:set=arith:3,5,base=2,delta=1", 10);
    CHECK(sp.at(3) == 3.0);
    CHECK(sp.at(8) == 3.0);
    CHECK(sp.at(4) == 2.0);

    auto f = make_sequence("file:" + test::data("seq.csv"), 0);
    CHECK(f.size() == 3);
    CHECK(f.at(2) == -1.25);

    CHECK_THROWS_AS(make_sequence("file:" + test::data("seq_gap.csv"), 0), SpecError);
    CHECK_THROWS_AS(make_sequence("spike:base=2", 10), SpecError);
    CHECK_THROWS_AS(make_sequence("wave:1", 10), SpecError);

    auto ext = c.extended(std::vector<double>{7.0});
    CHECK(ext.size() == 6);
    CHECK(ext.head(5).values().size() == 5);
}
