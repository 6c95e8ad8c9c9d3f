#include <doctest.h>

#include <utility>

#include "curve_table.hpp"
#include "isogeny.hpp"

using namespace isogrowth;

TEST_CASE("bundled table lookup") {
    CHECK(has_curve("11a1"));
    CHECK_FALSE(has_curve("389a1"));
    CHECK(curve_by_label("49a1").disc == -343);
    CHECK_THROWS_AS(curve_by_label("nope"), arith_error);
    CHECK(curve_table().size() == 14);
}

TEST_CASE("descriptors along table edges") {
    IsogenyDescriptor d = descriptor_between("11a1", "11a3");
    CHECK(d.degree == 5);
    CHECK(d.chain.size() == 1);
    CHECK(d.source.same_coefficients(curve_by_label("11a1")));
    CHECK(d.target.same_coefficients(curve_by_label("11a3")));
}

TEST_CASE("descriptors compose along the class graph") {
    IsogenyDescriptor d = descriptor_between("11a2", "11a3");
    CHECK(d.degree == 25);
    CHECK(d.chain.size() == 2);
    CHECK(d.chain[0].source.same_coefficients(curve_by_label("11a2")));
    CHECK(d.chain[0].target.same_coefficients(curve_by_label("11a1")));
    CHECK(d.chain[1].target.same_coefficients(curve_by_label("11a3")));
    CHECK(d.chain[0].degree == 5);
    CHECK(d.chain[1].degree == 5);

    IsogenyDescriptor e = descriptor_between("54a2", "54a3");
    CHECK(e.degree == 9);
    CHECK(e.chain.size() == 2);
}

TEST_CASE("no route across classes") {
    CHECK_THROWS_AS(descriptor_between("11a1", "49a1"), arith_error);
}

TEST_CASE("reversal swaps the ends") {
    IsogenyDescriptor d = descriptor_between("54a2", "54a3").reversed();
    CHECK(d.source.same_coefficients(curve_by_label("54a3")));
    CHECK(d.target.same_coefficients(curve_by_label("54a2")));
    CHECK(d.degree == 9);
    CHECK(d.chain.size() == 2);
    CHECK(d.chain[0].source.same_coefficients(curve_by_label("54a3")));
    CHECK(d.chain[1].target.same_coefficients(curve_by_label("54a2")));
}

TEST_CASE("validation passes on the bundled pairs") {
    const std::pair<const char*, const char*> pairs[] = {
        {"11a1", "11a2"}, {"75a1", "75a2"},   {"54a1", "54a2"},
        {"49a1", "49a2"}, {"64a1", "64a4"},   {"243a1", "243a2"},
        {"11a2", "11a3"}};
    for (auto& [a, b] : pairs) {
        CAPTURE(a);
        ValidationReport rep = validate_isogeny(descriptor_between(a, b), 60);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("validation flags a fake pair") {
    IsogenyDescriptor fake{curve_by_label("11a1"), curve_by_label("49a1"),
                           Z(2), {}};
    ValidationReport rep = validate_isogeny(fake, 60);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("validation rejects a wrong degree on a real pair") {
    IsogenyDescriptor d = descriptor_between("11a1", "11a3");
    d.degree = 7;
    d.chain.clear();
    ValidationReport rep = validate_isogeny(d, 60);
    CHECK_FALSE(rep.ok);
}
