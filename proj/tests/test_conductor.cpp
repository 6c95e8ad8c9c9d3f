#include <doctest.h>

#include "conductor.hpp"

using namespace isogrowth;

TEST_CASE("last ramification slope from the conductor exponent") {
    CHECK(m_from_f(Q(2), 2, false) == 0);
    CHECK(m_from_f(Q(8), 2, false) == 3);
    CHECK(m_from_f(Q(0), 2, false) == -1);
    CHECK(m_from_f(Q(0), 1, true) == -1);
    CHECK(m_from_f(Q(5, 2), 1, false) == Q(3, 2));

    CHECK_THROWS_AS(m_from_f(Q(1), 2, false), arith_error);
    CHECK_THROWS_AS(m_from_f(Q(3), 1, true), arith_error);
    CHECK_THROWS_AS(m_from_f(Q(2), 0, false), arith_error);

    // f = dim (m + 1) inverts back, rational slopes included
    const Q slopes[] = {Q(0), Q(1), Q(3), Q(1, 2), Q(7, 2), Q(11, 4)};
    for (long dim = 1; dim <= 4; ++dim)
        for (const Q& m : slopes)
            CHECK(m_from_f(dim * (m + 1), dim, false) == m);
}

TEST_CASE("tensor conductors are governed by the larger slope") {
    InertiaRepDatum rho{2, Q(2), Q(0)};
    InertiaRepDatum chi{1, Q(3), Q(2)};
    auto t = tensor_conductor(rho, chi);
    CHECK(t.f == 6);
    CHECK(t.exact);

    auto s = tensor_conductor(chi, rho);
    CHECK(s.f == t.f);
    CHECK(s.exact == t.exact);

    InertiaRepDatum unram{2, Q(0), Q(-1)};
    InertiaRepDatum wild{2, Q(4), Q(1)};
    CHECK(tensor_conductor(unram, wild).f == 8);
    CHECK(tensor_conductor(unram, wild).exact);

    // equal slopes allow cancellation: upper bound only
    InertiaRepDatum a{1, Q(2), Q(1)};
    InertiaRepDatum b{2, Q(4), Q(1)};
    auto eq = tensor_conductor(a, b);
    CHECK(eq.f == 4);
    CHECK_FALSE(eq.exact);
    CHECK(tensor_conductor(b, a).f == 4);

    CHECK_THROWS_AS(tensor_conductor(InertiaRepDatum{0, Q(2), Q(0)}, chi),
                    arith_error);
    CHECK_THROWS_AS(tensor_conductor(InertiaRepDatum{1, Q(-1), Q(0)}, chi),
                    arith_error);
}

TEST_CASE("base-change bound on the conductor exponent") {
    CHECK(base_change_conductor_bound(Q(8), Z(4)) == 26);
    CHECK(base_change_conductor_bound(Q(4), Z(3)) == 8);

    for (long e = 1; e <= 50; ++e)
        CHECK(base_change_conductor_bound(Q(2), Z(e)) == 2);

    // equality at e = 1, monotone growth in e
    for (long f = 2; f <= 10; ++f) {
        CHECK(base_change_conductor_bound(Q(f), Z(1)) == f);
        Q prev = f;
        for (long e = 2; e <= 12; ++e) {
            Q cur = base_change_conductor_bound(Q(f), Z(e));
            CHECK(cur >= prev);
            prev = cur;
        }
    }

    CHECK_THROWS_AS(base_change_conductor_bound(Q(1), Z(2)), arith_error);
    CHECK_THROWS_AS(base_change_conductor_bound(Q(4), Z(0)), arith_error);
}

TEST_CASE("stable conductor ceilings per residue characteristic") {
    for (long e = 1; e <= 6; ++e) {
        CHECK(tower_conductor_ceiling(Z(5), 1, Z(e)) == 2);
        CHECK(tower_conductor_ceiling(Z(7), 2, Z(e)) == 2);
    }
    CHECK(tower_conductor_ceiling(Z(2), 1, Z(1)) == 8);
    CHECK(tower_conductor_ceiling(Z(3), 1, Z(3)) == 11);
    CHECK(tower_conductor_ceiling(Z(3), 2, Z(1)) == 8);
    CHECK(tower_conductor_ceiling(Z(2), 2, Z(2)) == 26);

    for (long v = 1; v <= 3; ++v)
        for (long e = 1; e <= 8; ++e)
            for (long l : {2L, 3L, 5L, 11L})
                CHECK(tower_conductor_ceiling(Z(l), v, Z(e)) >= 2);

    CHECK_THROWS_AS(tower_conductor_ceiling(Z(4), 1, Z(1)), arith_error);
    CHECK_THROWS_AS(tower_conductor_ceiling(Z(3), 0, Z(1)), arith_error);
    CHECK_THROWS_AS(tower_conductor_ceiling(Z(3), 1, Z(0)), arith_error);
}
