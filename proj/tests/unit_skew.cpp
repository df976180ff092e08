#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "skewav/skew.hpp"

using namespace skewav;

TEST_CASE("346512 cuts into 3465|12") {
    const auto dec = skew_decompose(Permutation::parse("346512"));
    REQUIRE(dec.blocks.size() == 2);
    REQUIRE(dec.blocks[0] == Permutation::parse("1243"));
    REQUIRE(dec.blocks[1] == Permutation::parse("12"));
    REQUIRE(dec.offsets == std::vector<int>{2, 0});
}

TEST_CASE("6743521 has four skew blocks") {
    REQUIRE(block_count(Permutation::parse("6743521")) == 4);
    const auto dec = skew_decompose(Permutation::parse("6743521"));
    REQUIRE(dec.blocks.size() == 4);
    REQUIRE(dec.blocks[0] == Permutation::parse("12"));   // 67
    REQUIRE(dec.blocks[1] == Permutation::parse("213"));  // 435
    REQUIRE(dec.blocks[2] == Permutation::parse("1"));    // 2
    REQUIRE(dec.blocks[3] == Permutation::parse("1"));    // 1
}

TEST_CASE("3142 is skew indecomposable") {
    REQUIRE(is_skew_indecomposable(Permutation::parse("3142")));
    REQUIRE(block_count(Permutation::parse("3142")) == 1);
}

TEST_CASE("the empty permutation has no decomposition") {
    REQUIRE_THROWS_AS(skew_decompose(Permutation()), std::invalid_argument);
    REQUIRE_THROWS_AS(block_count(Permutation()), std::invalid_argument);
}

TEST_CASE("skew_sum examples") {
    REQUIRE(skew_sum({Permutation::parse("12")}) == Permutation::parse("12"));
    REQUIRE(skew_sum({Permutation::parse("12"), Permutation::parse("1")}) ==
            Permutation::parse("231"));
    REQUIRE_THROWS_AS(skew_sum({Permutation()}), std::invalid_argument);
}

TEST_CASE("decomposition invariants hold for every permutation up to length 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& p : test::all_permutations(n)) {
            const auto dec = skew_decompose(p);
            REQUIRE(dec.blocks.size() == dec.offsets.size());
            REQUIRE(static_cast<int>(dec.blocks.size()) == test::naive_block_count(p));

            // reassembly reproduces the input exactly
            std::vector<int> rebuilt;
            for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
                for (const int v : dec.blocks[b].values()) rebuilt.push_back(v + dec.offsets[b]);
            }
            REQUIRE(rebuilt == p.values());

            // every value of an earlier block exceeds every value of a later one
            for (std::size_t b = 0; b + 1 < dec.blocks.size(); ++b) {
                const int later_top = dec.offsets[b + 1] + dec.blocks[b + 1].size();
                REQUIRE(dec.offsets[b] + 1 > later_top);
            }

            // each block is itself skew indecomposable
            for (const auto& block : dec.blocks) {
                REQUIRE(is_skew_indecomposable(block));
            }

            // skew_sum inverts the decomposition
            REQUIRE(skew_sum(dec.blocks) == p);
        }
    }
}

TEST_CASE("at most one of q and its reverse is properly decomposable") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& q : test::all_permutations(n)) {
            const bool q_dec = !is_skew_indecomposable(q);
            const bool r_dec = !is_skew_indecomposable(q.reversed());
            REQUIRE_FALSE((q_dec && r_dec));
        }
    }
}

TEST_CASE("skew_cut_positions works on prefixes with gaps in the values") {
    // 5,3,4,1 is a prefix over {1..6}: cuts after 5 (index 0) and after 4 (index 2)
    const std::vector<int> prefix{5, 3, 4, 1};
    REQUIRE(skew_cut_positions(prefix) == std::vector<int>{0, 2});
}
