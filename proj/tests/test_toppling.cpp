#include "oracles.hpp"
#include "sandlab/core_asm.hpp"
#include "sandlab/error.hpp"
#include "sandlab/toppling.hpp"

#include <doctest.h>

#include <set>

using namespace sandlab;

TEST_CASE("CTI trace of the running example") {
    Shape s(5, 3);
    auto c = parse_configuration("7,6,5,2,1;5,4,4");
    auto t = topple_cti(s, c);
    REQUIRE(t.rounds.size() == 3);
    CHECK(t.rounds[0].clique == std::vector<int>{1});
    CHECK(t.rounds[0].independent == std::vector<int>{1, 2, 3});
    CHECK(t.rounds[1].clique == std::vector<int>{2, 3});
    CHECK(t.rounds[1].independent.empty());
    CHECK(t.rounds[2].clique == std::vector<int>{4, 5});
    CHECK(t.rounds[2].independent.empty());
    CHECK(t.sizes() == std::vector<int>{1, 3, 2, 0, 2, 0});
    CHECK(wtopple(t) == 14);
    CHECK(replay(s, c, t) == c);
}

TEST_CASE("ITC traces") {
    Shape s(5, 3);
    auto c = parse_configuration("7,6,5,2,1;5,4,4");
    auto t = topple_itc(s, c);
    CHECK(t.sizes() == std::vector<int>{1, 2, 2, 2, 0, 1});
    CHECK(wtopple(t) == 14);
    CHECK(itc_sequence_of(t) == ItcSequence{{1, 2, 0}, {2, 2, 1}});
    auto fig = topple_itc(s, parse_configuration("7,7,6,5,2;3,3,1"));
    CHECK(fig.sizes() == std::vector<int>{0, 2, 2, 2, 1, 1});
    CHECK(itc_sequence_of(fig) == ItcSequence{{0, 2, 1}, {2, 2, 1}});
    Shape s22(2, 2);
    CHECK(topple_itc(s22, parse_configuration("3,3;2,2")).sizes() == std::vector<int>{2, 2});
    CHECK(itc_sequence_of(topple_itc(s22, parse_configuration("3,3;2,2"))) == ItcSequence{{2}, {2}});
}

TEST_CASE("wtopple weights rounds") {
    CHECK(wtopple(std::vector<int>{2, 2}) == 4);
    CHECK(wtopple(std::vector<int>{0, 1, 1, 0, 1, 1}) == 9);
    CHECK(wtopple(topple_cti(Shape(2, 2), parse_configuration("2,1;2,0"))) == 9);
    CHECK(topple_cti(Shape(2, 2), parse_configuration("2,1;2,0")).sizes() == std::vector<int>{0, 1, 1, 0, 1, 1});
}

TEST_CASE("traces fire every vertex once and replay") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 3; ++d) {
            Shape s(n, d);
            for (const auto& c : enumerate_sorted_recurrent(s)) {
                for (auto mode : {ToppleMode::CTI, ToppleMode::ITC}) {
                    auto t = topple_trace(s, c, mode);
                    std::multiset<int> k, i;
                    for (const auto& r : t.rounds) {
                        k.insert(r.clique.begin(), r.clique.end());
                        i.insert(r.independent.begin(), r.independent.end());
                    }
                    CHECK(static_cast<int>(k.size()) == n);
                    CHECK(static_cast<int>(i.size()) == d);
                    CHECK(std::set<int>(k.begin(), k.end()).size() == k.size());
                    CHECK(replay(s, c, t) == c);
                }
            }
        }
    }
}

TEST_CASE("ITC sequences: enumeration equals the image of topple_itc") {
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 3; ++d) {
            Shape s(n, d);
            std::set<ItcSequence> image;
            for (const auto& c : enumerate_sorted_recurrent(s)) image.insert(itc_sequence_of(topple_itc(s, c)));
            auto listed = enumerate_itc_sequences(n, d);
            CHECK(std::set<ItcSequence>(listed.begin(), listed.end()) == image);
            CHECK(listed.size() == image.size());
            for (const auto& q : listed) CHECK(is_itc_sequence(n, d, q));
        }
    }
}

TEST_CASE("ITC counts") {
    auto listed = enumerate_itc_sequences(2, 2);
    CHECK(listed.size() == 9);
    CHECK(count_itc(2, 2) == 9);
    CHECK(count_itc(2, 2, 1) == 1);
    CHECK(count_itc(2, 2, 2) == 5);
    CHECK(count_itc(2, 2, 3) == 3);
    CHECK(count_ehkk(2, 2) == 9);
    CHECK(enumerate_itc_sequences(1, 0) == std::vector<ItcSequence>{ItcSequence{{0}, {1}}});
    // closed form sum_k C(d+k,d) C(n-1,k-1); (3,1) gives 2 + 6 + 4
    CHECK(count_itc(3, 1) == 12);
    CHECK(enumerate_itc_sequences(3, 1).size() == 12);
    for (int n = 1; n <= 5; ++n) {
        for (int d = 0; d <= 4; ++d) {
            BigInt closed = 0;
            for (int k = 1; k <= n; ++k) closed += oracle::choose(d + k, d) * oracle::choose(n - 1, k - 1);
            CHECK(count_itc(n, d) == closed);
            CHECK(count_ehkk(n, d) == closed);
            CHECK(count_itc(n, d, 1) == 1);
            CHECK(count_ehkk(n, d, 1) == d + 1);
        }
    }
}

TEST_CASE("canonical configurations lie in their fibers") {
    Shape s22(2, 2);
    CHECK(canonical_config(s22, ItcSequence{{2}, {2}}) == parse_configuration("1,1;2,2"));
    auto lone = canonical_config(s22, ItcSequence{{0, 0, 2}, {1, 1, 0}});
    int hits = 0;
    for (const auto& c : enumerate_sorted_recurrent(s22)) {
        if (itc_sequence_of(topple_itc(s22, c)) == ItcSequence{{0, 0, 2}, {1, 1, 0}}) {
            ++hits;
            CHECK(c == lone);
        }
    }
    CHECK(hits == 1);
    Shape s53(5, 3);
    ItcSequence ex{{1, 2, 0}, {2, 2, 1}};
    CHECK(itc_sequence_of(topple_itc(s53, canonical_config(s53, ex))) == ex);
    for (int n = 1; n <= 4; ++n) {
        for (int d = 0; d <= 3; ++d) {
            Shape s(n, d);
            for (const auto& q : enumerate_itc_sequences(n, d))
                CHECK(itc_sequence_of(topple_itc(s, canonical_config(s, q))) == q);
        }
    }
    CHECK_THROWS_AS(canonical_config(s22, ItcSequence{{1}, {1}}), PreconditionError);
}
