#include "doctest.h"

#include "oracles.hpp"
#include "torus/orbit_counter.hpp"

using namespace torus;

TEST_CASE("translation cycles") {
    const MatrixShape s(4, 6);
    CHECK(translation_cycles(s, 0, 0) == 24);
    CHECK(translation_cycles(s, 1, 0) == 6);   // rows cycle with order 4
    CHECK(translation_cycles(s, 2, 3) == 12);  // order lcm(2, 2) = 2
    CHECK(translation_cycles(s, 1, 1) == 2);   // order lcm(4, 6) = 12
}

TEST_CASE("count_burnside known values") {
    CHECK(count_burnside(MatrixShape(1, 1)).value == 2);
    CHECK(count_burnside(MatrixShape(2, 2)).value == 7);
    CHECK(count_burnside(MatrixShape(3, 3)).value == 64);
    CHECK(count_burnside(MatrixShape(4, 4)).value == 4156);
    CHECK(count_burnside(MatrixShape(2, 3)).value == 14);
    CHECK(count_burnside(MatrixShape(10, 10)).value == BigInt("12676506002282327791964489728"));
    CHECK(count_burnside(MatrixShape(12, 12)).value ==
          BigInt("154866286100907105149651981766316633972736"));
}

TEST_CASE("count_bruteforce") {
    CHECK(count_bruteforce(MatrixShape(1, 1)).value == 2);
    CHECK(oracle::necklace_count(4) == 6);
    CHECK(count_bruteforce(MatrixShape(1, 4)).value == 6);
    CHECK(count_bruteforce(MatrixShape(2, 2)).value == 7);
    CHECK_THROWS_AS(count_bruteforce(MatrixShape(3, 7)), CapacityError);
}

TEST_CASE("burnside agrees with brute force and the grid oracle") {
    for (const MatrixShape& s : oracle::shapes_up_to(16)) {
        const BigInt burnside = count_burnside(s).value;
        REQUIRE(burnside == count_bruteforce(s).value);
        if (s.cells() <= 12) {
            REQUIRE(burnside == oracle::grid_orbit_count(s));
        }
    }
}

TEST_CASE("count invariants") {
    for (std::uint32_t m = 1; m <= 12; ++m) {
        for (std::uint32_t n = 1; n <= 12; ++n) {
            const MatrixShape s(m, n);
            const BigInt value = count_burnside(s).value;
            REQUIRE(value == count_burnside(MatrixShape(n, m)).value);
            const BigInt ground = BigInt(1) << s.cells();
            REQUIRE(value >= 1);
            REQUIRE(value <= ground);
            REQUIRE(value * s.cells() >= ground);
        }
    }
    for (std::uint32_t n = 1; n <= 16; ++n) {
        REQUIRE(count_burnside(MatrixShape(1, n)).value == oracle::necklace_count(n));
    }
}

TEST_CASE("burnside sum divisibility up to 64x64") {
    for (std::uint32_t m = 1; m <= 64; ++m) {
        for (std::uint32_t n = 1; n <= 64; ++n) {
            REQUIRE(burnside_sum(MatrixShape(m, n)) % (std::uint64_t{m} * n) == 0);
        }
    }
}
