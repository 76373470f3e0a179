#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewgenus/elliptic.hpp"

using namespace skewgenus;

TEST_CASE("markings of the unique series") {
    const auto m = elliptic_markings(RamSeq::make({2, 2, 4}), Progression::residue(1, 3));
    CHECK(m.at_p == RamSeq::make({-4, -2, -2}));
    CHECK(m.at_q == RamSeq::make({2, 3, 5}));

    const RamSeq gamma = RamSeq::make({0, 1, 1, 3});
    const auto fixed = elliptic_markings(gamma, Progression::empty());
    CHECK(fixed.at_p == gamma.reflected(0));
    CHECK(fixed.at_q == gamma);

    const auto rank0_in = elliptic_markings(RamSeq::make({0}), Progression::singleton(1));
    CHECK(rank0_in.at_q == RamSeq::make({1}));
    const auto rank0_out = elliptic_markings(RamSeq::make({0}), Progression::singleton(2));
    CHECK(rank0_out.at_q == RamSeq::make({0}));
}

TEST_CASE("status of the exact-ramification locus") {
    const SkewShape two_link = parse_shape("(2,3,5)/(2,2,4)");
    CHECK(elliptic_status(two_link, 3) == EllipticStatus::UniquePoint);
    CHECK(elliptic_status(two_link, 0) == EllipticStatus::Empty);
    CHECK(elliptic_status(two_link, 5) == EllipticStatus::Empty);

    const SkewShape identity = parse_shape("(2,2,4)/(2,2,4)");
    for (long long m : {0, 2, 3, 7})
        CHECK(elliptic_status(identity, m) == EllipticStatus::OneDimensional);

    const SkewShape one_box = parse_shape("(2,3,4)/(2,2,4)");
    CHECK(elliptic_status(one_box, 0) == EllipticStatus::UniquePoint);

    CHECK_THROWS_AS(elliptic_status(two_link, 1), std::invalid_argument);
    CHECK_THROWS_AS(elliptic_status(two_link, -2), std::invalid_argument);
}

TEST_CASE("two-link fixtures are unique points at exactly their modulus") {
    const struct {
        const char* shape;
        long long modulus;
    } fixtures[] = {
        {"(2,3,5)/(2,2,4)", 3},
        {"(0,1,1,1,1,2,3,3,3,3)/(0,0,1,1,1,2,2,3,3,3)", 7},
        {"(1,1,1,1,2,3,3,3,3)/(0,1,1,1,1,3,3,3,3)", 5},
        {"(1,2)/(0,1)", 2},
    };
    for (const auto& fx : fixtures) {
        const SkewShape s = parse_shape(fx.shape);
        REQUIRE(classify_link(s).kind == LinkKind::TwoLink);
        CHECK(classify_link(s).progression->modulus() == fx.modulus);
        CHECK(elliptic_status(s, 0) == EllipticStatus::Empty);
        for (long long m = 2; m <= 20; ++m) {
            const auto expected =
                m == fx.modulus ? EllipticStatus::UniquePoint : EllipticStatus::Empty;
            CHECK(elliptic_status(s, m) == expected);
        }
    }
}

TEST_CASE("displacing any sequence yields linked endpoints") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> len(1, 7), entry(-3, 6), pick(0, 2), value(-5, 15),
        modulus(2, 8);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (int& e : entries) e = entry(rng);
        std::sort(entries.begin(), entries.end());
        const RamSeq gamma = RamSeq::make(entries);
        Progression lam = Progression::empty();
        switch (pick(rng)) {
            case 1: lam = Progression::singleton(value(rng)); break;
            case 2: lam = Progression::residue(value(rng), modulus(rng)); break;
            default: break;
        }
        CHECK(is_linked_by(disp_down(gamma, lam), disp_up(gamma, lam), lam));
    }
}

TEST_CASE("marking vanishing orders stay distinct") {
    std::mt19937 rng(4243);
    std::uniform_int_distribution<int> len(1, 7), entry(-3, 6), value(-5, 15), modulus(2, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> entries(static_cast<std::size_t>(len(rng)));
        for (int& e : entries) e = entry(rng);
        std::sort(entries.begin(), entries.end());
        const auto m = elliptic_markings(RamSeq::make(entries),
                                         Progression::residue(value(rng), modulus(rng)));
        const auto v = m.at_q.vanishing();
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
        CHECK(std::is_sorted(v.begin(), v.end()));
    }
}
