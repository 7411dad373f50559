#include "oracles.hpp"
#include "sandlab/error.hpp"
#include "sandlab/partition.hpp"
#include "sandlab/qt_poly.hpp"

#include <doctest.h>

using namespace sandlab;

TEST_CASE("partitions") {
    Partition mu({10, 10, 10, 7, 6, 5, 2});
    CHECK(mu.conjugate() == Partition({7, 7, 6, 6, 6, 5, 4, 3, 3, 3}));
    CHECK(mu.conjugate().conjugate() == mu);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    CHECK(Partition({2, 1}).n_statistic() == 1);
    CHECK(Partition({2, 1}).conjugate().n_statistic() == 1);
    CHECK(Partition({3, 1}).to_string() == "(3,1)");
    CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("arm and leg exchange under conjugation") {
    for (int N = 1; N <= 8; ++N) {
        for (const auto& mu : partitions_of(N)) {
            auto c = mu.conjugate();
            for (int i = 0; i < mu.length(); ++i) {
                for (int j = 0; j < mu.parts()[i]; ++j) {
                    CHECK(mu.arm(i, j) == c.leg(j, i));
                    CHECK(mu.leg(i, j) == c.arm(j, i));
                    CHECK(Partition::coarm(i, j) == Partition::coleg(j, i));
                    CHECK(Partition::coleg(i, j) == Partition::coarm(j, i));
                }
            }
        }
    }
}

TEST_CASE("weights") {
    Partition one({1});
    for (auto [q, t] : std::vector<std::pair<Rational, Rational>>{{2, 3}, {Rational(1, 2), 7}, {-3, Rational(5, 4)}})
        CHECK(w_weight(one, q, t, 5) == 6);
    CHECK(w_weight(Partition({2}), 2, 3, 5) == -84);
    CHECK_THROWS_AS(w_weight(Partition({2}), 1, 3, 5), DegeneratePoint);
}

TEST_CASE("symmetric function identity") {
    auto pts = sample_points(1, 3, 7);
    for (const auto& e : nabla_symmetry_check(1, pts)) {
        CHECK(e.ok);
        CHECK(e.weight_sum == 1 + e.point.z);
        CHECK(e.schroder_sum == 1 + e.point.z);
    }
    std::vector<SymmetryPoint> fixed = {{2, 3, 5}};
    auto r = nabla_symmetry_check(2, fixed);
    REQUIRE(r.size() == 1);
    Rational rhs = qt_schroder(2, 0).evaluate(2, 3) + 5 * qt_schroder(1, 1).evaluate(2, 3) +
                   25 * qt_schroder(0, 2).evaluate(2, 3);
    CHECK(r[0].weight_sum == rhs);
    CHECK(r[0].swapped_sum == rhs);
    for (int N = 1; N <= 4; ++N)
        for (const auto& e : nabla_symmetry_check(N, sample_points(N, 5, 11 + N))) CHECK(e.ok);
    CHECK(sample_points(3, 5, 42).size() == 5);
    auto a = sample_points(3, 5, 42), b = sample_points(3, 5, 42);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].q == b[i].q);
}
