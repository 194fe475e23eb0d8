#include <doctest.h>

#include "fcmono/indexing.hpp"

using namespace fcmono;

TEST_CASE("position follows the lexicographic enumeration, i1 least significant") {
    CHECK(BinaryIndex(std::vector<int>{0, 0}).position() == 0);
    CHECK(BinaryIndex(std::vector<int>{1, 0}).position() == 1);
    CHECK(BinaryIndex(std::vector<int>{0, 1}).position() == 2);
    CHECK(BinaryIndex(std::vector<int>{1, 1, 0}).position() == 3);
    CHECK(BinaryIndex::ones(4).position() == 15);
}

TEST_CASE("position is a bijection onto [0, 2^m)") {
    for (int m = 1; m <= 4; ++m) {
        std::vector<bool> seen(1 << m, false);
        for (const auto& I : all_indices(m)) {
            REQUIRE(!seen[I.position()]);
            seen[I.position()] = true;
            CHECK(BinaryIndex::from_position(m, I.position()) == I);
        }
    }
}

TEST_CASE("leq is componentwise") {
    CHECK(leq(BinaryIndex(std::vector<int>{0, 1}), BinaryIndex(std::vector<int>{1, 1})));
    CHECK(!leq(BinaryIndex(std::vector<int>{1, 0}), BinaryIndex(std::vector<int>{0, 1})));
    for (const auto& I : all_indices(3)) CHECK(leq(I, I));
}

TEST_CASE("leq is a partial order for m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        auto idx = all_indices(m);
        for (const auto& I : idx)
            for (const auto& J : idx) {
                if (leq(I, J) && leq(J, I)) CHECK(I == J);
                for (const auto& K : idx)
                    if (leq(I, J) && leq(J, K)) CHECK(leq(I, K));
            }
    }
}

TEST_CASE("meet is the componentwise product") {
    auto I = BinaryIndex(std::vector<int>{1, 0});
    auto J = BinaryIndex(std::vector<int>{1, 1});
    CHECK(meet(I, J) == I);
    CHECK(meet(BinaryIndex::zero(2), J) == BinaryIndex::zero(2));
    CHECK(meet(J, J) == J);
    for (const auto& A : all_indices(3))
        for (const auto& B : all_indices(3)) {
            CHECK(meet(A, B).position() == (A.position() & B.position()));
            CHECK(meet(A, B).weight() <= std::min(A.weight(), B.weight()));
        }
}

TEST_CASE("weight counts ones") {
    CHECK(BinaryIndex::zero(3).weight() == 0);
    CHECK(BinaryIndex(std::vector<int>{1, 0, 1}).weight() == 2);
    CHECK(BinaryIndex::ones(5).weight() == 5);
}

TEST_CASE("lower_set lists exactly the J <= I") {
    for (const auto& I : all_indices(4)) {
        auto lows = lower_set(I);
        CHECK((int)lows.size() == (1 << I.weight()));
        for (const auto& J : lows) CHECK(leq(J, I));
    }
}

TEST_CASE("cross-m mixing is rejected") {
    CHECK_THROWS_AS(leq(BinaryIndex::zero(2), BinaryIndex::zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(meet(BinaryIndex::zero(2), BinaryIndex::zero(3)), std::invalid_argument);
}

TEST_CASE("bit string serialization puts i1 first") {
    CHECK(BinaryIndex(std::vector<int>{1, 0, 1}).to_string() == "101");
}
