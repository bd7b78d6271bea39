#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"

using namespace qschub;
using qschub::testing::table_of;

TEST_CASE("default word and positions") {
    const PositionTable t = table_of('A', 2, {1});
    CHECK(t.word() == IntVector{1, 0});
    CHECK(t.M() == 2);
    CHECK(t.letter_at(1) == std::make_pair(1, 1));
    CHECK(t.letter_at(2) == std::make_pair(0, 1));
    CHECK(t.pos(1, 0) == 0);
    CHECK(t.pos(1, 1) == 1);
    CHECK(t.pos(0, 1) == 2);
    CHECK(t.pos(0, 2) == 3);
    CHECK(t.prefix(0) == identity_element(t.datum()));
    CHECK(t.prefix(2) == omega_p(t.datum(), t.parabolic()));
}

TEST_CASE("M equals the nilradical size") {
    for (const auto& inst : qschub::testing::standard_sweep()) {
        CAPTURE(inst.name);
        const auto& t = inst.table;
        CHECK(static_cast<std::size_t>(t.M()) == nilradical_roots(t.parabolic(), t.datum()).size());
        CHECK(static_cast<std::size_t>(t.M()) == inversion_set(t.prefix(t.M()), t.datum()).size());
        for (int s = 0; s < t.rank(); ++s) {
            CHECK(t.occ(0, s) == 0);
            CHECK(t.occ(t.M(), s) == t.total(s));
            for (int m = 1; m <= t.M(); ++m) CHECK(t.occ(m - 1, s) <= t.occ(m, s));
        }
    }
}

TEST_CASE("p_index") {
    const PositionTable t = table_of('A', 2, {}, IntVector{1, 2, 1});
    CHECK(p_index(0, 2, 1, t) == 1);
    CHECK(p_index(0, 1, 1, t) == 0);
    for (const auto& inst : qschub::testing::standard_sweep())
        for (int a = 0; a < inst.table.rank(); ++a)
            for (int j = 0; j <= inst.table.total(a); ++j) CHECK(p_index(a, j, a, inst.table) == j);
}

TEST_CASE("index sets") {
    const PositionTable t = table_of('A', 2, {}, IntVector{1, 2, 1});
    for (int m = 0; m <= t.M(); ++m) CHECK(index_set(IndexKind::D, m, m, t).empty());
    CHECK(index_set_u(t.M(), t) == IndexSet{{0, 0}, {0, 1}, {1, 0}});
    CHECK(index_set_u(t.M(), t).size() == static_cast<std::size_t>(t.M()));
    CHECK(index_set_d(0, t) == IndexSet{{0, 1}, {0, 2}, {1, 1}});
    CHECK(index_set(IndexKind::DRightStrict, 0, 3, t) == IndexSet{{0, 1}});
    CHECK(index_set(IndexKind::ULeftStrict, 0, 3, t) == IndexSet{{0, 1}});
    CHECK_THROWS_AS(index_set(IndexKind::U, 2, 1, t), InputError);
}

TEST_CASE("word validation") {
    const RootDatum a2 = build_root_datum('A', 2);
    const ParabolicDatum borel = make_parabolic({}, a2);
    CHECK(fix_word(a2, borel, IntVector{1, 0, 1}).word() == IntVector{1, 0, 1});
    CHECK_THROWS_AS(fix_word(a2, borel, IntVector{0, 0, 1}), InputError);
    CHECK_THROWS_AS(fix_word(a2, borel, IntVector{0, 1}), InputError);
    CHECK_THROWS_AS(fix_word(a2, make_parabolic({0}, a2), IntVector{0, 1}), InputError);
}
