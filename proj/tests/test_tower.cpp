#include <doctest.h>

#include <json.hpp>

#include <random>

#include "tower.hpp"

using namespace isogrowth;

TEST_CASE("cyclotomic decomposition above rational primes") {
    struct Row {
        long l, q, n, e, f, g;
    };
    const Row rows[] = {
        {3, 11, 1, 1, 3, 1},  {3, 11, 2, 1, 9, 1},  {5, 7, 1, 1, 1, 5},
        {5, 2, 2, 1, 25, 1},  {2, 7, 3, 1, 4, 2},   {71, 11, 1, 1, 1, 71},
        {3, 3, 2, 9, 1, 1},   {5, 5, 3, 125, 1, 1}, {3, 11, 0, 1, 1, 1},
    };
    for (const Row& r : rows) {
        CAPTURE(r.l);
        CAPTURE(r.q);
        CAPTURE(r.n);
        EFG d = cyclotomic_local_data(Z(r.l), Z(r.q), r.n);
        CHECK(d.e == r.e);
        CHECK(d.f == r.f);
        CHECK(d.g == r.g);
    }
    CHECK_THROWS_AS(cyclotomic_local_data(Z(3), Z(11), -1), arith_error);
}

TEST_CASE("preset names parse") {
    TowerModel c = tower_by_name("cyclotomic:7");
    CHECK(c.kind == TowerKind::cyclotomic_q);
    CHECK(c.l == 7);
    CHECK(c.dim == 1);

    TowerModel ft = tower_by_name("false-tate:3:7");
    CHECK(ft.kind == TowerKind::false_tate);
    CHECK(ft.l == 3);
    CHECK(ft.m == 7);
    CHECK(ft.dim == 2);
    CHECK(ft.real_complex_after == 1);

    TowerModel z5 = tower_by_name("z5sq-qi");
    CHECK(z5.kind == TowerKind::z5sq_qi);
    CHECK(z5.l == 5);
    CHECK(z5.dim == 2);
    CHECK(z5.base_degree == 2);
    CHECK(z5.base_complex == 1);

    TowerModel ac = tower_by_name("anticyclotomic-qi");
    CHECK(ac.kind == TowerKind::generic_zl);
    CHECK(ac.l == 5);
    CHECK(ac.dim == 1);
    CHECK(ac.rule == "qi-split");
    CHECK(tower_by_name("anticyclotomic-qi:13").l == 13);
}

TEST_CASE("bad preset names are rejected") {
    CHECK_THROWS_AS(tower_by_name("cyclotomic:4"), arith_error);
    CHECK_THROWS_AS(tower_by_name("false-tate:3:9"), arith_error);   // 3 | 9
    CHECK_THROWS_AS(tower_by_name("false-tate:3:8"), arith_error);   // 8 = 2^3
    CHECK_THROWS_AS(tower_by_name("false-tate:2:5"), arith_error);
    CHECK_THROWS_AS(tower_by_name("maximal-abelian"), arith_error);
}

TEST_CASE("split radicand field data") {
    TowerModel T = tower_by_name("false-tate:3:7");

    // unramified prime away from l and the radicand
    struct Row {
        long n, f, g;
    };
    for (const Row& r : {Row{1, 2, 3}, Row{2, 6, 9}, Row{3, 18, 27}}) {
        auto groups = tower_local_data(T, "11", r.n);
        REQUIRE(groups.size() == 1);
        CHECK(groups[0].e == 1);
        CHECK(groups[0].f == r.f);
        CHECK(groups[0].count == r.g);
    }

    // the radicand ramifies through the Kummer part
    auto above7 = tower_local_data(T, "7", 2);
    REQUIRE(above7.size() == 1);
    CHECK(above7[0].e == 9);
    CHECK(above7[0].f == 3);
    CHECK(above7[0].count == 2);

    // l itself is totally ramified
    auto above3 = tower_local_data(T, "3", 2);
    REQUIRE(above3.size() == 1);
    CHECK(above3[0].e == 54);
    CHECK(above3[0].f == 1);
    CHECK(above3[0].count == 1);
}

TEST_CASE("layer signatures") {
    TowerModel ft = tower_by_name("false-tate:3:7");
    CHECK(layer_signature(ft, 0).degree_over_q == 1);
    CHECK(layer_signature(ft, 0).real_places == 1);
    CHECK(layer_signature(ft, 1).degree_over_q == 6);
    CHECK(layer_signature(ft, 1).complex_places == 3);
    CHECK(layer_signature(ft, 1).real_places == 0);
    CHECK(layer_signature(ft, 4).degree_over_q == 2 * pow_z(Z(3), 7));
    CHECK(layer_signature(ft, 4).complex_places == pow_z(Z(3), 7));

    TowerModel cyc = tower_by_name("cyclotomic:5");
    CHECK(layer_signature(cyc, 2).degree_over_q == 25);
    CHECK(layer_signature(cyc, 2).real_places == 25);
    CHECK(layer_signature(cyc, 2).complex_places == 0);

    TowerModel z5 = tower_by_name("z5sq-qi");
    CHECK(layer_signature(z5, 0).degree_over_q == 2);
    CHECK(layer_signature(z5, 0).complex_places == 1);
    CHECK(layer_signature(z5, 1).degree_over_q == 50);
    CHECK(layer_signature(z5, 1).complex_places == 25);

    TowerModel ac = tower_by_name("anticyclotomic-qi");
    CHECK(layer_signature(ac, 2).degree_over_q == 50);
    CHECK(layer_signature(ac, 2).complex_places == 25);
    CHECK(layer_signature(ac, 2).real_places == 0);
}

TEST_CASE("quadratic-imaginary splitting rule") {
    TowerModel z5 = tower_by_name("z5sq-qi");

    auto at2 = classify_place(z5, Z(2));
    REQUIRE(at2.size() == 1);
    CHECK(at2[0].copies == 1);
    CHECK(at2[0].e_base == 2);
    CHECK(at2[0].f_base == 1);
    CHECK(at2[0].dimD == 1);

    auto at13 = classify_place(z5, Z(13));
    REQUIRE(at13.size() == 1);
    CHECK(at13[0].copies == 2);
    CHECK(at13[0].e_base == 1);
    CHECK(at13[0].f_base == 1);

    auto at11 = classify_place(z5, Z(11));
    REQUIRE(at11.size() == 1);
    CHECK(at11[0].copies == 1);
    CHECK(at11[0].f_base == 2);
    CHECK(at11[0].dimD == 1);

    auto at5 = classify_place(z5, Z(5));
    REQUIRE(at5.size() == 1);
    CHECK(at5[0].copies == 2);
    CHECK(at5[0].dimD == 2);
    CHECK(at5[0].dimI == 1);

    TowerModel ac = tower_by_name("anticyclotomic-qi");
    auto inert = classify_place(ac, Z(11));
    REQUIRE(inert.size() == 1);
    CHECK(inert[0].dimD == 0);  // totally split up the tower
    auto split = classify_place(ac, Z(13));
    CHECK(split[0].dimD == 1);
    auto groups = tower_local_data(ac, "11", 3);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].e == 1);
    CHECK(groups[0].f == 2);
    CHECK(groups[0].count == 125);
}

TEST_CASE("degree bookkeeping across the presets") {
    const char* names[] = {"cyclotomic:2", "cyclotomic:3",  "cyclotomic:5",
                           "false-tate:3:7", "false-tate:5:2", "z5sq-qi",
                           "anticyclotomic-qi"};
    std::mt19937 rng(97);
    std::uniform_int_distribution<long> pick(0, 9999);
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                           31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    for (const char* name : names) {
        TowerModel T = tower_by_name(name);
        for (long n = 0; n <= 5; ++n) {
            LayerSignature s = layer_signature(T, n);
            CHECK(s.degree_over_q ==
                  s.real_places + 2 * s.complex_places);
            for (int i = 0; i < 12; ++i) {
                long q = primes[pick(rng) % 20];
                Z total = 0;
                for (const PlaceGroup& w :
                     tower_local_data(T, std::to_string(q), n))
                    total += w.e * w.f * w.count;
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(q);
                CHECK(total == s.degree_over_q);
            }
        }
    }
}

TEST_CASE("tower JSON round-trip") {
    for (const char* name :
         {"cyclotomic:3", "false-tate:3:7", "z5sq-qi", "anticyclotomic-qi"}) {
        TowerModel T = tower_by_name(name);
        std::string once = tower_to_json(T);
        std::string twice = tower_to_json(tower_from_json(once));
        CHECK(once == twice);
    }
}

TEST_CASE("tower JSON validation") {
    nlohmann::json j;
    j["kind"] = "generic-Zl";
    j["l"] = 5;
    j["d"] = 2;
    j["places"] = {{{"place", "11"},
                    {"residue_char", 11},
                    {"dimD", 2},
                    {"dimI", 1}}};
    TowerModel T = tower_from_json(j.dump());
    auto groups = tower_local_data(T, "11", 2);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].e == 25);
    CHECK(groups[0].f == 25);
    CHECK(groups[0].count == 1);

    j["places"][0]["dimI"] = 3;
    CHECK_THROWS_AS(tower_from_json(j.dump()), arith_error);
    j["places"][0]["dimI"] = 1;
    j["places"][0]["C1"] = "5";
    CHECK_THROWS_AS(tower_from_json(j.dump()), arith_error);
}
