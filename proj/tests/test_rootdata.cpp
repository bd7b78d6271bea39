#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qschub/rootdata.hpp"

#include <random>

using namespace qschub;

TEST_CASE("cartan tables") {
    const RootDatum a2 = build_root_datum('A', 2);
    CHECK(a2.cartan == IntMatrix{{2, -1}, {-1, 2}});
    CHECK(a2.d == IntVector{1, 1});

    const RootDatum a1 = build_root_datum('A', 1);
    CHECK(a1.cartan == IntMatrix{{2}});
    CHECK(a1.d == IntVector{1});

    const RootDatum b2 = build_root_datum('B', 2);
    CHECK(b2.cartan == IntMatrix{{2, -1}, {-2, 2}});
    CHECK(b2.d == IntVector{2, 1});
    CHECK(b2.positive_roots.size() == 4);

    CHECK(build_root_datum('G', 2).d == IntVector{1, 3});
    CHECK(build_root_datum('F', 4).positive_roots.size() == 24);
    CHECK(build_root_datum('E', 8).positive_roots.size() == 120);
    CHECK(build_root_datum('D', 5).positive_roots.size() == 20);
    CHECK(build_root_datum('C', 3).positive_roots.size() == 9);
}

TEST_CASE("invariants of every supported datum") {
    const std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 5}, {'B', 3}, {'C', 4}, {'D', 4}, {'D', 6},
                                                  {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    for (auto [t, r] : types) {
        const RootDatum d = build_root_datum(t, r);
        CAPTURE(d.name());
        CHECK(*std::min_element(d.d.begin(), d.d.end()) == 1);
        for (int i = 0; i < r; ++i) {
            CHECK(d.cartan[i][i] == 2);
            for (int j = 0; j < r; ++j) {
                if (i != j) CHECK(d.cartan[i][j] <= 0);
                CHECK((d.cartan[i][j] == 0) == (d.cartan[j][i] == 0));
                CHECK(d.d[i] * d.cartan[i][j] == d.d[j] * d.cartan[j][i]);
                CHECK(pairing(d.fundamental_weight(i), d.simple_root(j), d) == Rational(i == j ? d.d[j] : 0));
                CHECK(pairing(d.simple_root(i), d.simple_root(j), d) == Rational(d.d[i] * d.cartan[i][j]));
            }
            CHECK(pairing(d.simple_root(i), d.simple_root(i), d) == Rational(2 * d.d[i]));
        }
    }
}

TEST_CASE("invalid types are rejected") {
    CHECK_THROWS_AS(build_root_datum('A', 0), InputError);
    CHECK_THROWS_AS(build_root_datum('B', 1), InputError);
    CHECK_THROWS_AS(build_root_datum('D', 3), InputError);
    CHECK_THROWS_AS(build_root_datum('E', 9), InputError);
    CHECK_THROWS_AS(build_root_datum('F', 3), InputError);
    CHECK_THROWS_AS(build_root_datum('G', 3), InputError);
    CHECK_THROWS_AS(build_root_datum('H', 3), InputError);
}

TEST_CASE("pairing values") {
    const RootDatum a2 = build_root_datum('A', 2);
    CHECK(pairing(a2.fundamental_weight(0), a2.fundamental_weight(0), a2) == Rational(2, 3));
    CHECK(pairing(a2.fundamental_weight(0), a2.fundamental_weight(1), a2) == Rational(1, 3));
    const RootDatum b2 = build_root_datum('B', 2);
    CHECK(pairing(b2.fundamental_weight(0), b2.fundamental_weight(0), b2) == Rational(2));
    CHECK(pairing(b2.fundamental_weight(1), b2.fundamental_weight(1), b2) == Rational(1));
    CHECK(pairing(b2.fundamental_weight(0), b2.fundamental_weight(1), b2) == Rational(1));
}

TEST_CASE("reflections") {
    const RootDatum g2 = build_root_datum('G', 2);
    CHECK(reflect(0, g2.fundamental_weight(1), g2) == g2.fundamental_weight(1));
    CHECK(reflect(0, g2.fundamental_weight(0), g2) == add(g2.fundamental_weight(0), g2.simple_root(0), -1));
    CHECK(reflect(1, g2.simple_root(1), g2) == Weight{3, -2});

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'B', 3}, {'G', 2}, {'F', 4}, {'E', 6}}) {
        const RootDatum d = build_root_datum(t, r);
        for (int trial = 0; trial < 20; ++trial) {
            Weight x(r), y(r);
            for (int k = 0; k < r; ++k) {
                x[k] = coord(rng);
                y[k] = coord(rng);
            }
            CHECK(pairing(x, y, d) == pairing(y, x, d));
            for (int i = 0; i < r; ++i) {
                CHECK(reflect(i, reflect(i, x, d), d) == x);
                CHECK(pairing(reflect(i, x, d), reflect(i, y, d), d) == pairing(x, y, d));
            }
        }
    }
}

TEST_CASE("(sigma_i + 1)(Lambda_i) + sum_{j != i} a_ji Lambda_j = 0") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 4}, {'C', 3}, {'D', 5}, {'E', 7}, {'F', 4}, {'G', 2}}) {
        const RootDatum d = build_root_datum(t, r);
        for (int i = 0; i < r; ++i) {
            Weight v = add(reflect(i, d.fundamental_weight(i), d), d.fundamental_weight(i));
            for (int j = 0; j < r; ++j)
                if (j != i) v = add(v, d.fundamental_weight(j), d.cartan[j][i]);
            CHECK(v == Weight(r, 0));
        }
    }
}

TEST_CASE("root coordinates") {
    const RootDatum a3 = build_root_datum('A', 3);
    const Weight highest = add(add(a3.simple_root(0), a3.simple_root(1)), a3.simple_root(2));
    CHECK(root_coordinates(highest, a3) == RationalVector{1, 1, 1});
    CHECK(is_positive_root(highest, a3));
    CHECK_FALSE(is_positive_root(add(Weight(3, 0), highest, -1), a3));
    CHECK(a3.positive_roots.back() == highest);
}
