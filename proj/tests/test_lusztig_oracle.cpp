#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

#include <algorithm>

using namespace qschub;
using qschub::testing::table_of;

TEST_CASE("gamma sequence") {
    const PositionTable t = table_of('A', 2, {1});
    const RootDatum& d = t.datum();
    const GammaSequence g = gamma_sequence(t);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == d.simple_root(1));
    CHECK(g[1] == add(d.simple_root(0), d.simple_root(1)));
    for (const auto& inst : qschub::testing::standard_sweep()) {
        GammaSequence gs = gamma_sequence(inst.table);
        CHECK(gs.front() == inst.table.datum().simple_root(inst.table.word()[0]));
        std::vector<Weight> inv = inversion_set(inst.table.prefix(inst.table.M()), inst.table.datum());
        std::sort(gs.begin(), gs.end());
        std::sort(inv.begin(), inv.end());
        CHECK(gs == inv);
    }
}

TEST_CASE("z-commutation") {
    const PositionTable t = table_of('A', 2, {1});
    const GammaSequence g = gamma_sequence(t);
    ZMonomial z1, z2, unit;
    z1.exponents[1] = 1;
    z2.exponents[2] = 1;
    CHECK(z_commutation_exponent(z1, z2, g, t.datum()) == Rational(-1));
    CHECK(z_commutation_exponent(z2, z1, g, t.datum()) == Rational(1));
    CHECK(z_commutation_exponent(z1, unit, g, t.datum()) == Rational(0));
    ZMonomial big;
    big.exponents = {{1, 2}, {2, -1}};
    CHECK(z_commutation_exponent(big, z2, g, t.datum()) == -z_commutation_exponent(z2, big, g, t.datum()));
}

TEST_CASE("diagonal monomials") {
    const PositionTable t = table_of('A', 2, {}, IntVector{1, 2, 1});
    const ZMonomial unit = diagonal(make_label(1, 1, 0, t), t);
    CHECK(unit.exponents.empty());
    CHECK(unit.normalization == Rational(0));
    const ZMonomial single = diagonal(make_label(0, 1, 1, t), t);
    CHECK(single.exponents == std::map<int, int>{{2, 1}});
    CHECK(single.normalization == Rational(0));
    const ZMonomial two = diagonal(make_label(0, 2, 0, t), t);
    CHECK(two.exponents == std::map<int, int>{{1, 1}, {3, 1}});
    const GammaSequence g = gamma_sequence(t);
    // z_3 z_1 = q^{2 alpha} z_1 z_3
    CHECK(two.normalization == pairing(g[0], g[2], t.datum()) / 2);
    CHECK(two.normalization == Rational(-1, 2));
}

TEST_CASE("oracle exponent") {
    const PositionTable t = table_of('A', 2, {1});
    const MinorLabel x = make_label(0, 1, 1, t), y = make_label(0, 1, 0, t);
    CHECK(oracle_exponent(x, y, t) == Rational(-1));
    CHECK(oracle_exponent(y, x, t) == Rational(1));
    CHECK(oracle_exponent(x, x, t) == Rational(0));
    for (const auto& inst : qschub::testing::standard_sweep()) {
        const Cluster c = build_cluster({0, inst.table.M()}, Family::Standard, inst.table);
        for (const auto& l1 : c.labels)
            for (const auto& l2 : c.labels)
                CHECK(oracle_exponent(l1, l2, inst.table) == -oracle_exponent(l2, l1, inst.table));
    }
}
