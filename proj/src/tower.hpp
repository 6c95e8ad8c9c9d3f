#pragma once

#include <array>
#include <string>
#include <vector>

#include "arith.hpp"

namespace isogrowth {

enum class TowerKind {
    cyclotomic_q,
    generic_zl,
    generic_lie,
    false_tate,
    z5sq_qi
};

std::string tower_kind_string(TowerKind k);

struct EFG {
    Z e, f, g;
};

// places of the layer above one rational prime: `count` places sharing the
// absolute profile (e, f) over Q_p
struct PlaceGroup {
    Z e;
    Z f;
    Z count;
};

// one class of places of the base field K, with its behaviour up the tower:
// explicit table below the threshold, power laws above it
struct ZlPlaceClass {
    std::string place;
    Z residue_char = 0;
    long copies = 1;  // identical places of K in this class
    Z e_base = 1;     // e(K_v / Q_p)
    Z f_base = 1;     // f(K_v / Q_p)
    int dimD = 0;
    int dimI = 0;
    Q C1 = 1, C2 = 1, C3 = 1;
    long threshold = 0;
    std::vector<std::array<Z, 3>> table;  // (e,f,g) over K for n < threshold
};

struct TowerModel {
    TowerKind kind = TowerKind::cyclotomic_q;
    Z l = 2;
    int dim = 1;
    long base_degree = 1;
    long base_real = 1;
    long base_complex = 0;
    // layer index from which each real place of K sits under complex places
    // only; -1 if the tower keeps them real
    long real_complex_after = -1;
    Z m = 0;            // false-Tate radicand
    std::string rule;   // synthesis rule for unlisted rational primes
    std::vector<ZlPlaceClass> places;
};

// (e, f, g) at layer n of the cyclotomic Z_l-extension of Q, above q
EFG cyclotomic_local_data(const Z& l, const Z& q, long n);

Z layer_degree_over_base(const TowerModel& T, long n);

struct LayerSignature {
    Z degree_over_q;
    Z complex_places;
    Z real_places;
};

LayerSignature layer_signature(const TowerModel& T, long n);

// decomposition above one place at layer n; `place` is a rational prime in
// decimal or an abstract label listed in the model
std::vector<PlaceGroup> tower_local_data(const TowerModel& T,
                                         const std::string& place, long n);

// place classes of the base field above q, listed or synthesized from the
// model's rule; only kinds with classified places support this
std::vector<ZlPlaceClass> classify_place(const TowerModel& T, const Z& q);

// "cyclotomic:<l>" | "false-tate:<l>:<m>" | "z5sq-qi" | "anticyclotomic-qi"
TowerModel tower_by_name(const std::string& name);

TowerModel tower_from_json(const std::string& text);
std::string tower_to_json(const TowerModel& T);

}  // namespace isogrowth
