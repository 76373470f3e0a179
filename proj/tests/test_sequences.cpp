#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewgenus/brill_noether.hpp"
#include "skewgenus/sequences.hpp"

using namespace skewgenus;

TEST_CASE("make_ram_seq validates monotonicity") {
    const RamSeq s = RamSeq::make({0, 0, 1, 1, 1, 2});
    CHECK(s.rank() == 5);
    CHECK(parse_ram_seq("0^2 1^3 2") == s);
    CHECK(RamSeq::make({0}).rank() == 0);
    CHECK_THROWS_AS(RamSeq::make({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(RamSeq::make({}), std::invalid_argument);
}

TEST_CASE("sequence literals round-trip") {
    CHECK(parse_ram_seq("(0,0,2,2,4)") == RamSeq::make({0, 0, 2, 2, 4}));
    CHECK(parse_ram_seq("0,0,2,2,4") == RamSeq::make({0, 0, 2, 2, 4}));
    CHECK(parse_ram_seq("0^2 2^2 4") == RamSeq::make({0, 0, 2, 2, 4}));
    CHECK(parse_ram_seq("-1^2 0") == RamSeq::make({-1, -1, 0}));
    CHECK(to_string(RamSeq::make({2, 3, 5})) == "(2,3,5)");
    CHECK_THROWS(parse_ram_seq("2,1"));
    CHECK_THROWS(parse_ram_seq(""));
    CHECK_THROWS(parse_ram_seq("1^0"));
}

TEST_CASE("vanishing sequence round-trips") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> len(1, 7), entry(-3, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (int& e : entries) e = entry(rng);
        std::sort(entries.begin(), entries.end());
        const RamSeq seq = RamSeq::make(entries);
        CHECK(RamSeq::from_vanishing(seq.vanishing()) == seq);
    }
    CHECK_THROWS(RamSeq::from_vanishing({0, 0}));
}

TEST_CASE("skew shapes: size, translate, reflect") {
    const SkewShape s = parse_shape("(2,3,5)/(2,2,4)");
    CHECK(s.size() == 2);
    CHECK(SkewShape::make(s.lower, s.lower).size() == 0);
    // entrywise differences: 0+2+1+0+0+3+3
    CHECK(parse_shape("(0,2,2,2,3,7,7)/(0,0,1,2,3,4,4)").size() == 9);

    CHECK(translated(s, -2) == parse_shape("(0,1,3)/(0,0,2)"));
    CHECK(reflected(s, 5) == parse_shape("(1,3,3)/(0,2,3)"));
    CHECK(reflected(reflected(s, 5), 5) == s);
    CHECK(translated(translated(s, 7), -7) == s);
    CHECK(translated(s, 3).size() == s.size());
    CHECK(reflected(s, 11).size() == s.size());

    CHECK_THROWS(SkewShape::make(RamSeq::make({0, 1}), RamSeq::make({0, 0})));
    CHECK_THROWS(SkewShape::make(RamSeq::make({0}), RamSeq::make({0, 1})));
}

TEST_CASE("shape literal accepts spaces") {
    CHECK(parse_shape("2,3,5 / 2,2,4") == parse_shape("(2,3,5)/(2,2,4)"));
    CHECK_THROWS(parse_shape("(2,3,5)"));
}

TEST_CASE("rho") {
    CHECK(rho(9, 3, 8) == -7);
    CHECK(rho(4, 1, 4) == 2);
    CHECK(rho(0, 2, 2) == 0);
}

TEST_CASE("rho_hat") {
    const RamSeq zero2 = RamSeq::constant(0, 2);
    CHECK(rho_hat(1, 1, 2, zero2, RamSeq::make({0, 1})) == 0);
    CHECK_THROWS_AS(rho_hat(1, 1, 2, zero2, RamSeq::make({0, 1, 2})),
                    std::invalid_argument);

    // with no imposed ramification this is the plain count
    for (long long g = 0; g <= 20; ++g)
        for (long long r = 0; r <= 20; ++r)
            for (long long d = 0; d <= 20; ++d) {
                if (g - d + r < 0) continue;
                const RamSeq zero = RamSeq::constant(0, static_cast<int>(r) + 1);
                CHECK(rho_hat(g, r, d, zero, zero) == rho(g, r, d));
            }
}

TEST_CASE("rho_hat at the balanced degree counts boxes") {
    const RamSeq alpha = RamSeq::make({0, 1, 1, 3});
    const RamSeq beta = RamSeq::make({1, 1, 2, 4});
    for (long long g : {0, 1, 5, 9}) {
        const long long r = alpha.rank();
        CHECK(rho_hat(g, r, r + g, alpha.reflected(0), beta) ==
              g - (beta.sum() - alpha.sum()));
    }
}

TEST_CASE("diagram rendering") {
    CHECK(render_diagram(parse_shape("(2,2)/(0,0)")) == "[][]\n[][]\n");
    CHECK(render_diagram(parse_shape("(0,2,2,2,3,7,7)/(0,0,1,2,3,4,4)")) ==
          "        [][][]\n"
          "        [][][]\n"
          "      |\n"
          "    |\n"
          "  []\n"
          "[][]\n"
          "|\n");
    // identity shapes render guides only
    CHECK(render_diagram(parse_shape("(1,2)/(1,2)")) == "    |\n  |\n");
    // negative entries shift the origin so nothing renders off-screen
    CHECK(render_diagram(parse_shape("(0,1)/(-2,0)")) == "    []\n[][]\n");
    CHECK(render_diagram(translated(parse_shape("(2,2)/(0,0)"), -5)) ==
          render_diagram(parse_shape("(2,2)/(0,0)")));
}

TEST_CASE("parser corners") {
    CHECK(parse_ram_seq(" ( 0 , 1 , 3 ) ") == RamSeq::make({0, 1, 3}));
    CHECK(parse_ram_seq("-3,-1") == RamSeq::make({-3, -1}));
    CHECK(parse_ram_seq("7") == RamSeq::make({7}));
    CHECK_THROWS(parse_ram_seq("1,,2"));
    CHECK_THROWS(parse_ram_seq("1 2 ^"));
    CHECK_THROWS(parse_ram_seq("(1,2"));
}
