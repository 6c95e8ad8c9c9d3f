#include <doctest.h>

#include <random>
#include <utility>

#include "curve_table.hpp"
#include "localred.hpp"

using namespace isogrowth;

namespace {

LocalReductionData local(const char* label, long p) {
    WeierstrassModel Emin = minimal_model(curve_by_label(label)).first;
    return tate_local_data(Emin, Z(p));
}

}  // namespace

TEST_CASE("reduction types of the bundled curves") {
    struct Row {
        const char* label;
        long p;
        const char* type;
        long f, c, m, delta;
    };
    const Row rows[] = {
        {"11a1", 11, "I5", 1, 5, 5, 5},
        {"11a2", 11, "I1", 1, 1, 1, 1},
        {"11a3", 11, "I1", 1, 1, 1, 1},
        {"75a1", 3, "I1", 1, 1, 1, 1},
        {"75a2", 3, "I5", 1, 1, 5, 5},
        {"75a1", 5, "IV", 2, 1, 3, 4},
        {"75a2", 5, "IV*", 2, 1, 7, 8},
        {"54a1", 2, "I3", 1, 1, 3, 3},
        {"54a2", 2, "I9", 1, 1, 9, 9},
        {"54a3", 2, "I1", 1, 1, 1, 1},
        {"54a1", 3, "IV*", 3, 3, 7, 9},
        {"54a2", 3, "II*", 3, 1, 9, 11},
        {"54a3", 3, "II", 3, 1, 1, 3},
        {"49a1", 7, "III", 2, 2, 2, 3},
        {"49a2", 7, "III", 2, 2, 2, 3},
        {"64a1", 2, "I2*", 6, 4, 7, 12},
        {"64a4", 2, "II", 6, 1, 1, 6},
        {"243a1", 3, "II", 5, 1, 1, 5},
        {"243a2", 3, "IV*", 5, 3, 7, 11},
    };
    for (const Row& r : rows) {
        CAPTURE(r.label);
        CAPTURE(r.p);
        LocalReductionData d = local(r.label, r.p);
        CHECK(kodaira_string(d.type, d.type_n) == r.type);
        CHECK(d.f == r.f);
        CHECK(d.c == r.c);
        CHECK(d.m == r.m);
        CHECK(d.delta == r.delta);
    }
}

TEST_CASE("multiplicative split/nonsplit flags") {
    CHECK(local("11a1", 11).reduction == ReductionClass::split_multiplicative);
    CHECK(local("11a1", 11).split);
    CHECK(local("11a2", 11).split);
    CHECK(local("11a3", 11).split);
    CHECK(local("75a1", 3).reduction ==
          ReductionClass::nonsplit_multiplicative);
    CHECK(local("75a2", 3).reduction ==
          ReductionClass::nonsplit_multiplicative);
    CHECK_FALSE(local("54a1", 2).split);
    CHECK_FALSE(local("54a2", 2).split);
    CHECK_FALSE(local("54a3", 2).split);
}

TEST_CASE("potential reduction classes") {
    CHECK(local("11a1", 11).potential == PotentialClass::multiplicative);
    CHECK(local("75a1", 3).potential == PotentialClass::multiplicative);
    CHECK(local("54a1", 2).potential == PotentialClass::multiplicative);
    for (const char* label : {"54a1", "54a2", "54a3"})
        CHECK(local(label, 3).potential == PotentialClass::good_supersingular);
    for (const char* label : {"64a1", "64a4"})
        CHECK(local(label, 2).potential == PotentialClass::good_supersingular);
    for (const char* label : {"243a1", "243a2"})
        CHECK(local(label, 3).potential == PotentialClass::good_supersingular);
    for (const char* label : {"75a1", "75a2"})
        CHECK(local(label, 5).potential == PotentialClass::good_supersingular);
    for (const char* label : {"49a1", "49a2"})
        CHECK(local(label, 7).potential == PotentialClass::good_supersingular);
}

TEST_CASE("tameness and the base-change invariant") {
    CHECK(local("49a1", 7).tame);
    CHECK(local("49a1", 7).eth == 3);
    CHECK(local("75a1", 5).tame);
    CHECK(local("75a1", 5).eth == 4);
    CHECK(local("75a2", 5).eth == 8);
    CHECK_FALSE(local("54a1", 3).tame);  // f = 3 > 2
    CHECK_FALSE(local("54a3", 3).tame);
    CHECK_FALSE(local("64a1", 2).tame);
    CHECK_FALSE(local("243a1", 3).tame);
    CHECK(local("64a1", 2).eth == 6);
    CHECK(local("64a4", 2).eth == 2);
    CHECK(local("243a2", 3).eth == 8);
    CHECK(local("11a1", 11).eth == -1);
    CHECK(local("11a1", 11).tame);
}

TEST_CASE("good reduction is good") {
    LocalReductionData d = local("11a1", 7);
    CHECK(d.type == KodairaType::I0);
    CHECK(d.reduction == ReductionClass::good);
    CHECK(d.f == 0);
    CHECK(d.c == 1);
    CHECK(d.m == 1);
}

TEST_CASE("conductors of the bundled curves") {
    CHECK(conductor(minimal_model(curve_by_label("11a1")).first) == 11);
    CHECK(conductor(minimal_model(curve_by_label("75a2")).first) == 75);
    CHECK(conductor(minimal_model(curve_by_label("54a3")).first) == 54);
    CHECK(conductor(minimal_model(curve_by_label("49a2")).first) == 49);
    CHECK(conductor(minimal_model(curve_by_label("64a4")).first) == 64);
    CHECK(conductor(minimal_model(curve_by_label("243a1")).first) == 243);
}

TEST_CASE("rational torsion orders") {
    struct Row {
        const char* label;
        long order;
    };
    const Row rows[] = {
        {"11a1", 5},  {"11a2", 1},  {"11a3", 5}, {"75a1", 1}, {"75a2", 1},
        {"54a1", 3},  {"54a2", 1},  {"54a3", 3}, {"49a1", 2}, {"49a2", 2},
        {"64a1", 4},  {"64a4", 2},  {"243a1", 1}, {"243a2", 3},
    };
    for (const Row& r : rows) {
        CAPTURE(r.label);
        CHECK(torsion_order(curve_by_label(r.label)) == r.order);
    }
    CHECK(torsion_p_part(curve_by_label("11a1"), Z(5)) == 5);
    CHECK(torsion_p_part(curve_by_label("11a1"), Z(2)) == 1);
    CHECK(torsion_p_part(curve_by_label("64a1"), Z(2)) == 4);
    CHECK(torsion_p_part(curve_by_label("54a1"), Z(3)) == 3);
}

TEST_CASE("traces of Frobenius at small good primes") {
    struct Row {
        const char* label;
        long qs[8];
        long aq[8];
    };
    const Row rows[] = {
        {"11a1", {2, 3, 5, 7, 13, 17, 19, 23}, {-2, -1, 1, -2, 4, -2, 0, -1}},
        {"75a1", {2, 7, 11, 13, 17, 19, 23, 29}, {2, -3, 2, 1, 2, -5, 6, 10}},
        {"54a1", {5, 7, 11, 13, 17, 19, 23, 29}, {3, -1, -3, -4, 0, 2, -6, 6}},
        {"49a1", {2, 3, 5, 11, 13, 17, 19, 23}, {1, 0, 0, 4, 0, 0, 0, 8}},
        {"64a1", {3, 5, 7, 11, 13, 17, 19, 23}, {0, 2, 0, 0, -6, 2, 0, 0}},
        {"243a1", {2, 5, 7, 11, 13, 17, 19, 23}, {0, 0, -4, 0, -7, 0, -1, 0}},
    };
    for (const Row& r : rows) {
        WeierstrassModel E = curve_by_label(r.label);
        for (int i = 0; i < 8; ++i) {
            CAPTURE(r.label);
            CAPTURE(r.qs[i]);
            CHECK(frobenius_trace(E, Z(r.qs[i])) == r.aq[i]);
        }
    }
}

TEST_CASE("isogenous curves share their traces") {
    const std::pair<const char*, const char*> pairs[] = {
        {"11a1", "11a2"}, {"75a1", "75a2"}, {"54a1", "54a3"},
        {"243a1", "243a2"}};
    for (auto& [a, b] : pairs) {
        WeierstrassModel E = curve_by_label(a), F = curve_by_label(b);
        Z N = conductor(minimal_model(E).first);
        for (long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (zmod(N, Z(q)) == 0)
                continue;
            CHECK(frobenius_trace(E, Z(q)) == frobenius_trace(F, Z(q)));
        }
    }
}

TEST_CASE("component counts satisfy the conductor relation") {
    std::mt19937 rng(20260815);
    std::uniform_int_distribution<long> coef(-6, 6);
    const Z primes[] = {Z(2), Z(3), Z(5), Z(7)};
    int done = 0;
    while (done < 800) {
        try {
            WeierstrassModel E(coef(rng), coef(rng), coef(rng), coef(rng),
                               coef(rng));
            WeierstrassModel Emin = minimal_model(E).first;
            for (const Z& p : primes) {
                LocalReductionData d = tate_local_data(Emin, p);
                CHECK(d.f == d.delta - d.m + 1);
                ++done;
            }
        } catch (const arith_error&) {
            continue;  // singular draw
        }
    }
}
