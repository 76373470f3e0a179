#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewgenus/difficulty.hpp"
#include "skewgenus/semigroups.hpp"

using namespace skewgenus;

namespace {

// Primitive by construction: gaps are {1..s1-1} plus a subset of (s1, 2*s1),
// so every sum of two positive elements clears the largest gap.
NumericalSemigroup random_primitive(std::mt19937& rng, int max_genus = 12) {
    for (;;) {
        std::uniform_int_distribution<int> s1_dist(2, 13);
        const int s1 = s1_dist(rng);
        std::vector<int> gaps;
        for (int t = 1; t < s1; ++t) gaps.push_back(t);
        std::bernoulli_distribution coin(0.5);
        for (int t = s1 + 1; t < 2 * s1; ++t)
            if (coin(rng)) gaps.push_back(t);
        if (static_cast<int>(gaps.size()) > max_genus || gaps.empty()) continue;
        return NumericalSemigroup::from_gaps(std::move(gaps));
    }
}

}  // namespace

TEST_CASE("from_gaps validates closure") {
    const auto s = NumericalSemigroup::from_gaps({1, 2, 3, 4, 5, 8, 9, 10, 11});
    CHECK(s.genus() == 9);
    CHECK(s.contains(0));
    CHECK(s.contains(6));
    CHECK(s.contains(7));
    CHECK(!s.contains(8));
    CHECK(s.contains(12));

    CHECK(NumericalSemigroup::trivial().genus() == 0);
    CHECK(NumericalSemigroup::from_gaps({}).genus() == 0);

    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2}), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup::from_gaps({2, 1}), std::invalid_argument);
}

TEST_CASE("weight and primitivity") {
    const auto stage = NumericalSemigroup::from_gaps({1, 2, 3, 4, 5, 8, 9, 10, 11});
    CHECK(stage.weight() == 8);
    CHECK(stage.is_primitive());

    CHECK(NumericalSemigroup::trivial().weight() == 0);
    CHECK(NumericalSemigroup::trivial().is_primitive());

    const auto tiny = NumericalSemigroup::from_gaps({1, 3});
    CHECK(tiny.weight() == 1);
    CHECK(tiny.first_positive() == 2);
    CHECK(tiny.is_primitive());

    // hyperelliptic-style gaps are far from primitive
    const auto odd_gaps = NumericalSemigroup::from_gaps({1, 3, 5, 7});
    CHECK(!odd_gaps.is_primitive());
}

TEST_CASE("semigroup literals") {
    const auto s = parse_semigroup("gaps:{1,2,5}");
    CHECK(s.gaps() == std::vector<int>{1, 2, 5});
    CHECK(to_string(s) == "gaps:{1,2,5}");
    CHECK(parse_semigroup("gaps:{}").genus() == 0);
    CHECK_THROWS(parse_semigroup("1,2,5"));
}

TEST_CASE("stage-one family") {
    const auto k4 = stage_one_semigroup(4);
    CHECK(k4.gaps() == std::vector<int>{1, 2, 3, 4, 5, 8, 9, 10, 11});
    const auto k1 = stage_one_semigroup(1);
    CHECK(k1.gaps() == std::vector<int>{1, 2, 5});
    CHECK(k1.genus() == 3);
    CHECK(k1.weight() == 2);
    CHECK(stage_one_semigroup(2).genus() == 5);
    CHECK(stage_one_semigroup(2).weight() == 4);
    for (int k = 1; k <= 30; ++k) {
        const auto s = stage_one_semigroup(k);
        CHECK(s.genus() == 2 * k + 1);
        CHECK(s.weight() == 2 * k);
        CHECK(s.is_primitive());
    }
    CHECK_THROWS_AS(stage_one_semigroup(0), std::invalid_argument);
}

TEST_CASE("shapes from semigroups") {
    CHECK(komeda_shape(stage_one_semigroup(4), 8).upper ==
          RamSeq::make({1, 1, 1, 1, 1, 3, 3, 3, 3}));
    CHECK(komeda_shape(stage_one_semigroup(4), 8).lower == RamSeq::constant(0, 9));

    const auto trivial = komeda_shape(NumericalSemigroup::trivial(), 5);
    CHECK(trivial.size() == 0);

    CHECK(komeda_shape(NumericalSemigroup::from_gaps({1, 3}), 2) ==
          SkewShape::make(RamSeq::constant(0, 3), RamSeq::make({0, 1, 2})));
    CHECK_THROWS_AS(komeda_shape(stage_one_semigroup(4), 7), std::invalid_argument);

    // |shape| = weight + genus; 4k+1 for the stage-one family
    for (int k = 1; k <= 12; ++k) {
        const auto s = stage_one_semigroup(k);
        const auto shape = komeda_shape(s, s.genus() - 1 + k);
        CHECK(shape.size() == s.weight() + s.genus());
        CHECK(komeda_shape(s, 2 * k).size() == 4 * k + 1);
    }
}

TEST_CASE("axiom certificates check their hypotheses") {
    const auto cert = komeda_tg(stage_one_semigroup(4), 8);
    CHECK(cert.tg_value == 9);
    CHECK(cert.shape.upper == tau(9, 9, 4, 4));

    const auto trivial = komeda_tg(NumericalSemigroup::trivial(), 3);
    CHECK(trivial.tg_value == 0);
    CHECK(trivial.shape.lower == trivial.shape.upper);

    const auto tiny = komeda_tg(NumericalSemigroup::from_gaps({1, 3}), 2);
    CHECK(tiny.tg_value == 2);

    // primitive but overweight: weight 10 > genus-1 = 7
    const auto heavy = NumericalSemigroup::from_gaps({1, 2, 3, 4, 5, 6, 12, 13});
    CHECK(heavy.is_primitive());
    CHECK(heavy.weight() == 10);
    CHECK_THROWS_AS(komeda_tg(heavy, 10), std::invalid_argument);
    // not primitive
    CHECK_THROWS_AS(komeda_tg(NumericalSemigroup::from_gaps({1, 3, 5, 7}), 8),
                    std::invalid_argument);
}

TEST_CASE("gap shift") {
    const auto shifted = gap_shift(stage_one_semigroup(4));
    CHECK(shifted.gaps() == std::vector<int>{1, 2, 3, 4, 5, 7, 9, 10, 11});
    CHECK(shifted.weight() == 7);

    const auto weight_one = NumericalSemigroup::from_gaps({1, 3});
    CHECK(gap_shift(weight_one).gaps() == std::vector<int>{1, 2});
    CHECK(gap_shift(weight_one).weight() == 0);

    CHECK_THROWS_AS(gap_shift(NumericalSemigroup::from_gaps({1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(gap_shift(NumericalSemigroup::trivial()), std::invalid_argument);

    // iterating weight(S) times reaches the ordinary gap set {1..g}
    auto s = stage_one_semigroup(3);
    const int g = s.genus();
    const long long w = s.weight();
    for (long long i = 0; i < w; ++i) s = gap_shift(s);
    std::vector<int> ordinary;
    for (int t = 1; t <= g; ++t) ordinary.push_back(t);
    CHECK(s.gaps() == ordinary);
}

TEST_CASE("gap shift on 500 random primitive semigroups") {
    std::mt19937 rng(321);
    int done = 0;
    while (done < 500) {
        const auto s = random_primitive(rng);
        if (s.weight() == 0) continue;
        ++done;
        const auto shifted = gap_shift(s);
        CHECK(shifted.weight() == s.weight() - 1);
        CHECK(shifted.is_primitive());
        CHECK(shifted.genus() == s.genus());

        const int r = s.genus() - 1;
        const auto step = SkewShape::make(komeda_shape(shifted, r).upper,
                                          komeda_shape(s, r).upper);
        CHECK(classify_link(step).kind == LinkKind::OneLink);
    }
}
