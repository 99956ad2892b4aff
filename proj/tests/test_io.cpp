#include <doctest.h>

#include "pentachain/io.hpp"

using namespace pentachain;

namespace {

Scalar q(long long n, long long d = 1) { return Scalar(Rational(n, d)); }

}  // namespace

TEST_CASE("matrix JSON round trip") {
    ExactMatrix m(2, 3);
    m(0, 0) = q(1, 2);
    m(1, 2) = q(-7);
    const Json j = matrix_to_json(m);
    CHECK(j[0][0] == "1/2");
    CHECK(j[1][2] == "-7");
    CHECK(matrix_from_json(j) == m);
    CHECK_THROWS_AS(matrix_from_json(Json::array()), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), ParseError);
}

TEST_CASE("complex JSON round trip") {
    Sampler rng(521);
    const auto tri = Triangulation::single_tetrahedron().pachner_14(1, 5);
    const auto zeta = random_coordinates(tri, 2, rng, 9);
    const Json j = complex_to_json(tri, zeta);
    CHECK(j["n"] == 2);
    const auto [tri2, zeta2] = complex_from_json(j);
    CHECK(equivalent(tri, tri2));
    CHECK(zeta2.n == 2);
    for (const auto& [v, m] : zeta.zeta) CHECK(zeta2.at(v) == m);
    // Derived inner flags are present and correct.
    for (const auto& jv : j["vertices"])
        CHECK(jv["inner"] == (jv["id"] == 5));
}

TEST_CASE("pillow complexes round trip through explicit gluings") {
    const auto two = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const auto pillow = two.move_02({1, 2, 3}, 0, 6);
    CoordinateAssignment zeta;
    zeta.n = 1;
    Sampler rng(523);
    complete_random_coordinates(zeta, pillow, rng, 40);
    const Json j = complex_to_json(pillow, zeta);
    const auto [tri2, zeta2] = complex_from_json(j);
    CHECK(equivalent(pillow, tri2));
    CHECK(tri2.is_valid());

    // Without the gluing list the face labels are ambiguous.
    Json stripped = j;
    stripped.erase("gluings");
    CHECK_THROWS_AS(complex_from_json(stripped), ParseError);
}

TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS(complex_from_json(Json::parse(R"({"n":1})")));
    CHECK_THROWS(complex_from_json(Json::parse(
        R"({"n":1,"tetrahedra":[{"id":1,"vertices":[1,2,3],"orientation":1}]})")));
    CHECK_THROWS(complex_from_json(Json::parse(
        R"({"n":1,"tetrahedra":[{"id":1,"vertices":[1,2,3,4],"orientation":2}]})")));
    CHECK_THROWS(complex_from_json(Json::parse(
        R"({"n":0,"tetrahedra":[{"id":1,"vertices":[1,2,3,4],"orientation":1}]})")));
}

TEST_CASE("grassmann element JSON") {
    const GrassmannElement el =
        q(3, 4) * (GrassmannElement::generator(0) * GrassmannElement::generator(2));
    const Json j = element_to_json(el, [](int g) { return "a" + std::to_string(g); });
    REQUIRE(j.size() == 1);
    CHECK(j[0]["coeff"] == "3/4");
    CHECK(j[0]["monomial"] == Json::array({"a0", "a2"}));
}

TEST_CASE("invariant JSON carries the prefactor breakdown") {
    const auto tri = Triangulation::single_tetrahedron();
    const auto zeta = CoordinateAssignment::scalars({{1, q(0)}, {2, q(1)}, {3, q(2)}, {4, q(3)}});
    const auto iv = invariant_IC(
        tri, zeta, Coloring::of({{FaceKey{1, 2, 3}, 0}, {FaceKey{1, 2, 4}, 0}}));
    const Json j = invariant_to_json(iv);
    CHECK(j["value"] == "1/2");
    CHECK(j["tau"] == "-1/2");
    CHECK(j["prefactor"] == "-1");
    CHECK(j["prefactor_parts"]["tetrahedra"] == "-1");
}

TEST_CASE("labeled matrices JSON") {
    const auto tri = Triangulation::single_tetrahedron();
    const auto zeta = CoordinateAssignment::scalars({{1, q(0)}, {2, q(1)}, {3, q(2)}, {4, q(3)}});
    const auto data = build_complex(
        tri, zeta, Coloring::of({{FaceKey{1, 2, 3}, 0}, {FaceKey{1, 2, 4}, 0}}));
    const Json j = matrices_to_json(data);
    CHECK(j["f3_full"]["entries"][0][0] == "1");
    CHECK(j["f3_full"]["cols"].size() == 4);
    CHECK(j["c2_basis"].size() == 2);
}
