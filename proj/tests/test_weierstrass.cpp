#include <doctest.h>

#include "curve_table.hpp"
#include "weierstrass.hpp"

using namespace isogrowth;

TEST_CASE("standard invariants of 11a1") {
    WeierstrassModel E(0, -1, 1, -10, -20);
    CHECK(E.b2 == -4);
    CHECK(E.b4 == -20);
    CHECK(E.b6 == -79);
    CHECK(E.c4 == 496);
    CHECK(E.c6 == 20008);
    CHECK(E.disc == -161051);
    CHECK(E.disc == -pow_z(Z(11), 5));
    CHECK(E.j == Q(496 * 496 * 496) / -161051);
}

TEST_CASE("c4/c6/discriminant identity") {
    for (auto& rec : curve_table()) {
        WeierstrassModel E = curve_by_label(rec.label);
        CHECK(E.c4 * E.c4 * E.c4 - E.c6 * E.c6 == 1728 * E.disc);
        CHECK(E.c4 * E.c4 * E.c4 == E.j * E.disc);
    }
}

TEST_CASE("shifts preserve the invariants") {
    WeierstrassModel E(1, -1, 0, -123, -667);
    WeierstrassModel F = E.shift(3, -2, 5);
    CHECK(F.c4 == E.c4);
    CHECK(F.c6 == E.c6);
    CHECK(F.disc == E.disc);
    CHECK(F.j == E.j);
    CHECK_FALSE(F.same_coefficients(E));
}

TEST_CASE("scaling acts with the standard weights") {
    WeierstrassModel E(0, 0, 1, 0, -1);
    WeierstrassModel F = E.scale(Q(1, 2));  // u = 1/2 blows the model up
    CHECK(F.c4 == E.c4 * 16);
    CHECK(F.c6 == E.c6 * 64);
    CHECK(F.disc == E.disc * 4096);
    CHECK(F.j == E.j);
    CHECK(E.scale(Q(3)).disc * pow_z(Z(3), 12) == E.disc);
}

TEST_CASE("minimal models of the bundled curves") {
    auto dmin = [](const char* label) {
        return minimal_model(curve_by_label(label)).first.disc;
    };
    CHECK(dmin("75a1") == -3 * 625);
    CHECK(dmin("75a2") == -pow_z(Z(3), 5) * pow_z(Z(5), 8));
    CHECK(ord_p(Z(q_num(dmin("54a2"))), Z(3)) == 11);
    CHECK(ord_p(Z(q_num(dmin("54a3"))), Z(3)) == 3);
    CHECK(dmin("49a2") == 343);
    CHECK(dmin("64a1") == 4096);
}

TEST_CASE("minimalization undoes a scale") {
    WeierstrassModel E = curve_by_label("11a1");
    WeierstrassModel blown = E.scale(Q(1, 6)).shift(12, 6, -36);
    auto [Emin, u] = minimal_model(blown);
    CHECK(Emin.disc == E.disc);
    CHECK(Emin.c4 == E.c4);
    CHECK(Emin.c6 == E.c6);
    CHECK(Emin.integral());
    CHECK(u != 1);
}

TEST_CASE("already-minimal models stay put") {
    for (auto& rec : curve_table()) {
        WeierstrassModel E = curve_by_label(rec.label);
        auto [Emin, u] = minimal_model(E);
        CHECK(Emin.disc == E.disc);
        CHECK(u == 1);
    }
}

TEST_CASE("models from c4 and c6") {
    WeierstrassModel E = model_from_c4c6(Z(496), Z(20008));
    CHECK(E.c4 == 496);
    CHECK(E.c6 == 20008);
    CHECK(E.disc == -161051);
    CHECK_THROWS_AS(model_from_c4c6(Z(0), Z(0)), arith_error);
}

TEST_CASE("rational coefficients parse") {
    WeierstrassModel E = WeierstrassModel::from_strings(
        {"0", "-1/4", "1/8", "-10", "-20"});
    CHECK_FALSE(E.integral());
    CHECK(E.a2 == Q(-1, 4));
    CHECK(E.a3 == Q(1, 8));
    CHECK_THROWS_AS(E.az(2), arith_error);
    CHECK_THROWS(WeierstrassModel::from_strings({"0", "x", "0", "0", "0"}));
}

TEST_CASE("singular models are rejected") {
    CHECK_THROWS_AS(WeierstrassModel(0, 0, 0, 0, 0), arith_error);
    CHECK_THROWS_AS(WeierstrassModel(0, 0, 0, -3, 2), arith_error);
}
