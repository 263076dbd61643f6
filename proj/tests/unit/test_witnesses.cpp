#include <doctest.h>

#include <cmath>

#include "seqlab/error.hpp"
#include "seqlab/witnesses.hpp"

using namespace seqlab;

namespace {

SpaceParams with_limit(double l) {
    SpaceParams p;
    p.limit = l;
    return p;
}

bool is_square(Index i) {
    auto r = static_cast<Index>(std::sqrt(static_cast<double>(i)));
    while (r * r > i) --r;
    while ((r + 1) * (r + 1) <= i) ++r;
    return r * r == i;
}

}  // namespace

TEST_CASE("witness set for spikes on the squares") {
    const Index n = 100000;
    auto x = make_sequence("spike:set=squares,base=2,delta=1", n);
    auto p = with_limit(2.0);
    auto ext = extract_witness_set(x, p, make_modulus("id"), 5);
    REQUIRE(ext.witness.has_value());
    const auto& w = *ext.witness;
    for (std::size_t j = 1; j < w.thresholds.size(); ++j) CHECK(w.thresholds[j] > w.thresholds[j - 1]);
    for (Index i : w.set.materialize(n)) REQUIRE(is_square(i));
    CHECK(w.density.final_ratio() <= 0.01);
    CHECK(w.off_set_tail_sup == 0.0);
    CHECK(w.level_counts.size() == 5);

    auto off = converge_off_witness(x, p, w.set, 1.0 / 5.0);
    CHECK(off.pass);
    // Oracle: last square left outside X (index 1 only enters B_j for j >= 2).
    Index expect = 0;
    for (Index i = 1; i <= n; ++i)
        if (is_square(i) && !w.set.contains(i)) expect = i;
    CHECK(expect < w.thresholds[1]);
    CHECK(off.i0 == expect);
}

TEST_CASE("witness round trip on generated sequences") {
    const Index n = 20000;
    for (const char* spec : {"harmonic:0", "spike:set=arith:7,1000,base=0,delta=3", "spike:set=squares,base=0,delta=0.5",
                             "const:0"}) {
        auto x = make_sequence(spec, n);
        auto p = with_limit(0.0);
        for (Index depth : {Index{2}, Index{4}, Index{8}}) {
            auto ext = extract_witness_set(x, p, make_modulus("id"), depth);
            if (!ext.witness) continue;
            CAPTURE(spec);
            CAPTURE(depth);
            auto off = converge_off_witness(x, p, ext.witness->set, 1.0 / static_cast<double>(depth));
            CHECK(off.pass);
            CHECK(ext.witness->off_set_tail_sup <= 1.0 / static_cast<double>(depth));
        }
    }
}

TEST_CASE("norm convergent sequences give finite witness sets") {
    auto x = make_sequence("harmonic:0", 100000);
    auto ext = extract_witness_set(x, with_limit(0.0), make_modulus("id"), 5);
    REQUIRE(ext.witness.has_value());
    // 1/i > 1/j only for i < j, so X has at most a few members.
    CHECK(ext.witness->set.count(100000) <= 5);
    CHECK(empty_tail(ext.witness->set, 100000));
}

TEST_CASE("alternating sequence gets stuck at level two") {
    auto x = make_sequence("alt:1,0", 100000);
    auto ext = extract_witness_set(x, with_limit(0.0), make_modulus("id"), 5);
    CHECK_FALSE(ext.witness.has_value());
    REQUIRE(ext.stuck_level.has_value());
    CHECK(*ext.stuck_level == 2);
    CHECK(ext.diagnostic.find("r_2") != std::string::npos);

    auto off = converge_off_witness(x, with_limit(0.0), make_index_set("odds"), 0.01);
    CHECK(off.pass);
    CHECK(off.i0 == 0);
    CHECK_THROWS_AS(extract_witness_set(x, with_limit(0.0), make_modulus("bounded"), 5), DomainError);
    CHECK_THROWS_AS(extract_witness_set(x, with_limit(0.0), make_modulus("id"), 1), DomainError);
}

TEST_CASE("off-witness convergence") {
    auto x = make_sequence("spike:set=squares,base=2,delta=1", 10000);
    auto r = converge_off_witness(x, with_limit(2.0), make_index_set("squares"), 0.01);
    CHECK(r.pass);
    CHECK(r.i0 == 0);
    auto h = converge_off_witness(make_sequence("harmonic:0", 10000), with_limit(0.0), IndexSet::empty(), 0.01);
    CHECK(h.pass);
    CHECK(h.i0 == 9);
    auto bad = converge_off_witness(x, with_limit(2.0), IndexSet::empty(), 0.01);
    CHECK_FALSE(bad.pass);
}

TEST_CASE("Cauchy nested intervals") {
    auto id = make_modulus("id");
    for (Index k : {Index{3}, Index{10}}) {
        auto h = cauchy_limit_construction(make_sequence("harmonic:0", 100000), SpaceParams{}, id, k, 1e-2);
        REQUIRE(h.ok);
        CHECK(h.width() <= 2.0 / static_cast<double>(k) + 1e-15);
        CHECK(std::abs(h.estimate) <= 2.0 / static_cast<double>(k));
        CHECK(h.anchors.size() == k);
    }

    auto c = cauchy_limit_construction(make_sequence("const:1.25", 10000), SpaceParams{}, id, 10, 1e-2);
    REQUIRE(c.ok);
    CHECK(c.estimate == 1.25);
    CHECK(c.width() <= 0.2 + 1e-12);

    auto s = cauchy_limit_construction(make_sequence("spike:set=squares,base=3,delta=1", 100000), SpaceParams{},
                                       id, 10, 1e-2);
    REQUIRE(s.ok);
    CHECK(std::abs(s.estimate - 3.0) <= 0.2);
    for (Index a : s.anchors) CHECK_FALSE(is_square(a));

    auto alt = cauchy_limit_construction(make_sequence("alt:1,0", 100000), SpaceParams{}, id, 4, 1e-2);
    CHECK_FALSE(alt.ok);
    CHECK_FALSE(alt.diagnostic.empty());
}

TEST_CASE("half-filled block instance") {
    auto inst = gen_thm36_instance(1.0, 1.0, 10);
    const auto& s = inst.params.scheme;
    CHECK(s.blocks() == 10);
    CHECK(s.last() == 1024);
    // Oracle: t_r from the definition, M_i(t) = t / i and x_i in {0, 1}.
    std::vector<double> t_expect;
    for (Index r = 1; r <= 10; ++r) {
        double sum = 0.0;
        for (Index i = s.cut(r - 1) + 1; i <= s.cut(r); ++i) sum += inst.x.at(i) / static_cast<double>(i);
        t_expect.push_back(sum / static_cast<double>(s.length(r)));
    }
    auto t = block_residuals(inst.x, inst.params);
    auto c = exceedance_ratios(inst.x, inst.params);
    for (Index r = 1; r <= 10; ++r) {
        CHECK(t[r - 1] == doctest::Approx(t_expect[r - 1]).epsilon(1e-12));
        CHECK(t[r - 1] <= std::ldexp(1.0, -static_cast<int>(r)));
    }
    for (Index r = 8; r <= 10; ++r) CHECK(std::abs(c[r - 1] - 0.5) <= 0.05);

    CHECK(w_membership(inst.x, inst.params, kDefaultTol).verdict == Verdict::member);
    CHECK(fstat_membership_block(inst.x, inst.params, kDefaultTol).verdict == Verdict::non_member);

    auto zero = gen_thm36_instance(0.0, 1.0, 8);
    for (double v : zero.x.values()) CHECK(v == 0.0);
    CHECK(w_membership(zero.x, zero.params, kDefaultTol).verdict == Verdict::member);
    CHECK(fstat_membership_block(zero.x, zero.params, kDefaultTol).verdict == Verdict::member);

    CHECK_THROWS_AS(gen_thm36_instance(1.0, 1.0, 5), DomainError);
    CHECK_THROWS_AS(gen_thm36_instance(1e9, 1.0, 10), GenerationError);
}

TEST_CASE("half-filled instances separate the two spaces for many parameters") {
    for (double nu : {0.5, 1.0, 3.0})
        for (double rho : {0.5, 1.0, 2.0})
            for (Index blocks : {Index{10}, Index{12}, Index{14}}) {
                auto inst = gen_thm36_instance(nu, rho, blocks);
                CAPTURE(nu);
                CAPTURE(rho);
                CAPTURE(blocks);
                CHECK(w_membership(inst.x, inst.params, kDefaultTol).verdict == Verdict::member);
                CHECK(fstat_membership_block(inst.x, inst.params, kDefaultTol).verdict == Verdict::non_member);
            }
}

TEST_CASE("spike instance") {
    auto scheme = make_lacunary("powers2", 12);
    auto inst = gen_thm37_instance(OrliczFn::linear(), scheme, 1.0, 1.0);
    for (Index r = 1; r <= 12; ++r) CHECK(inst.spike_heights[r - 1] == doctest::Approx(double(scheme.length(r))));
    auto t = block_residuals(inst.x, inst.params);
    auto c = exceedance_ratios(inst.x, inst.params);
    for (Index r = 1; r <= 12; ++r) {
        CHECK(t[r - 1] >= 1.0 - 1e-9);
        CHECK(c[r - 1] == 1.0 / static_cast<double>(scheme.length(r)));
    }
    CHECK(c.back() < 1e-3);
    CHECK(fstat_membership_block(inst.x, inst.params, kDefaultTol).verdict == Verdict::member);
    CHECK(w_membership(inst.x, inst.params, kDefaultTol).verdict == Verdict::non_member);

    auto sq = gen_thm37_instance(OrliczFn::power(2.0), scheme, 2.0, 1.0);
    for (Index r = 1; r <= 12; ++r)
        CHECK(sq.spike_heights[r - 1] == doctest::Approx(2.0 * std::sqrt(double(scheme.length(r)))).epsilon(1e-10));

    OrliczFn capped("capped", [](double t) { return t / (1.0 + t); });
    CHECK_THROWS_AS(gen_thm37_instance(capped, scheme, 1.0, 1.0), GenerationError);
}

TEST_CASE("spike instances separate the two spaces across schemes") {
    // c_r = h_r^-alpha has to reach tol on the last third of blocks, so smaller
    // alpha needs longer schemes.
    for (auto [theta, blocks] : {std::pair{"powers2", 20}, std::pair{"geometric:3", 12}})
        for (double alpha : {0.6, 1.0})
            for (const auto& base : {OrliczFn::linear(), OrliczFn::power(2.0), OrliczFn::explog()}) {
                auto inst = gen_thm37_instance(base, make_lacunary(theta, static_cast<Index>(blocks)), 1.0, alpha);
                CAPTURE(theta);
                CAPTURE(alpha);
                CAPTURE(base.name());
                CHECK(fstat_membership_block(inst.x, inst.params, kDefaultTol).verdict == Verdict::member);
                CHECK(w_membership(inst.x, inst.params, kDefaultTol).verdict == Verdict::non_member);
            }
}

TEST_CASE("multi-modulus probe") {
    std::vector<Modulus> fam{make_modulus("id"), make_modulus("log1p"), make_modulus("pow:0.5")};
    SpaceParams p;
    auto c = multi_modulus_probe(make_sequence("const:1.5", 100000), p, fam, kDefaultTol);
    CHECK(c.all_agree);
    CHECK(c.common_limit == 1.5);
    CHECK(c.norm_convergent);

    auto h = multi_modulus_probe(make_sequence("harmonic:1.5", 100000), p, fam, kDefaultTol);
    CHECK(h.all_agree);
    CHECK(std::abs(*h.common_limit - 1.5) <= kDefaultTol);
    CHECK(h.norm_convergent);

    std::vector<Modulus> two{make_modulus("id"), make_modulus("log1p")};
    auto s = multi_modulus_probe(make_sequence("spike:set=squares,base=2,delta=1", 1000000), p, two, 2e-2);
    REQUIRE(s.limits[0].has_value());
    CHECK(*s.limits[0] == 2.0);
    CHECK_FALSE(s.limits[1].has_value());
    CHECK_FALSE(s.all_agree);
    CHECK_FALSE(s.norm_convergent);

    CHECK_THROWS_AS(multi_modulus_probe(make_sequence("const:1", 1000), p, {make_modulus("bounded")}, kDefaultTol),
                    DomainError);
}
