#include <doctest.h>

#include <algorithm>
#include <set>

#include "pentachain/triangulation.hpp"

using namespace pentachain;

namespace {

std::set<std::array<VertexId, 4>> tuple_set(const Triangulation& t) {
    std::set<std::array<VertexId, 4>> s;
    for (const auto& tet : t.tetras()) s.insert(tet.verts);
    return s;
}

std::set<FaceKey> boundary_set(const Triangulation& t) {
    std::set<FaceKey> s;
    for (const auto& f : t.classify().boundary_faces) s.insert(f);
    return s;
}

int sign_of(const Triangulation& t, std::array<VertexId, 4> verts) {
    for (const auto& tet : t.tetras())
        if (tet.verts == verts) return tet.sign;
    FAIL("tetrahedron not found");
    return 0;
}

}  // namespace

TEST_CASE("tuple normalization tracks parity") {
    std::array<VertexId, 4> w{5, 1, 2, 3};
    CHECK(sort_parity(w) == -1);
    CHECK(w == std::array<VertexId, 4>{1, 2, 3, 5});
    std::array<VertexId, 4> e{3, 1, 5, 4};
    CHECK(sort_parity(e) == 1);
    std::array<VertexId, 4> bad{1, 1, 2, 3};
    CHECK_THROWS(sort_parity(bad));
}

TEST_CASE("single tetrahedron classification") {
    const auto t = Triangulation::single_tetrahedron();
    const auto st = t.classify();
    CHECK(st.total == std::array<std::size_t, 4>{4, 6, 4, 1});
    CHECK(st.inner == std::array<std::size_t, 4>{0, 0, 0, 1});
    CHECK(boundary_set(t) ==
          std::set<FaceKey>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(t.is_valid());
}

TEST_CASE("two glued tetrahedra") {
    const auto t = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    CHECK(t.is_valid());
    const auto st = t.classify();
    CHECK(st.inner[2] == 1);
    CHECK(st.inner_faces == std::vector<FaceKey>{{1, 2, 3}});
    CHECK(st.inner[1] == 0);
    CHECK(sign_of(t, {1, 2, 3, 4}) == 1);
    CHECK(sign_of(t, {1, 2, 3, 5}) == -1);
}

TEST_CASE("2->3 move produces the three-tetrahedron cluster") {
    const auto lhs = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const auto rhs = lhs.pachner_23(1, 2);
    CHECK(rhs.is_valid());
    CHECK(tuple_set(rhs) ==
          std::set<std::array<VertexId, 4>>{{1, 2, 4, 5}, {2, 3, 4, 5}, {1, 3, 4, 5}});
    CHECK(boundary_set(rhs) == boundary_set(lhs));
    const auto st = rhs.classify();
    CHECK(st.inner_edges == std::vector<EdgeKey>{{4, 5}});
    CHECK(st.inner_faces == std::vector<FaceKey>{{1, 4, 5}, {2, 4, 5}, {3, 4, 5}});
}

TEST_CASE("2->3 bookkeeping: N3, inner faces, inner edges") {
    const auto lhs = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const auto rhs = lhs.pachner_23(1, 2);
    const auto a = lhs.classify(), b = rhs.classify();
    CHECK(b.total[3] == a.total[3] + 1);
    CHECK(b.inner[2] == a.inner[2] + 2);
    CHECK(b.inner[1] == a.inner[1] + 1);
}

TEST_CASE("3->2 inverts 2->3") {
    const auto lhs = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const auto rhs = lhs.pachner_23(1, 2);
    const auto back = rhs.pachner_32({4, 5});
    CHECK(back.is_valid());
    CHECK(equivalent(back, lhs));
    const auto st = back.classify();
    CHECK(st.total[3] == 2);
    CHECK(st.inner_edges.empty());
}

TEST_CASE("3->2 rejects boundary edges and wrong degrees") {
    const auto lhs = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    CHECK_THROWS_AS(lhs.pachner_32({1, 2}), MoveError);
    const auto rhs = lhs.pachner_23(1, 2);
    CHECK_THROWS_AS(rhs.pachner_32({1, 4}), MoveError);
}

TEST_CASE("1->4 move subdivides a tetrahedron") {
    const auto t = Triangulation::single_tetrahedron();
    const auto sub = t.pachner_14(t.tetras()[0].id, 5);
    CHECK(sub.is_valid());
    CHECK(tuple_set(sub) == std::set<std::array<VertexId, 4>>{
                                {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
    const auto st = sub.classify();
    CHECK(st.inner_vertices == std::vector<VertexId>{5});
    CHECK(st.inner[0] == 1);
    CHECK(boundary_set(sub) == boundary_set(t));
    // Orientations of the star, relative to ascending vertex order.
    CHECK(sign_of(sub, {1, 2, 3, 5}) == 1);
    CHECK(sign_of(sub, {1, 2, 4, 5}) == -1);
    CHECK(sign_of(sub, {1, 3, 4, 5}) == 1);
    CHECK(sign_of(sub, {2, 3, 4, 5}) == -1);
    CHECK_THROWS_AS(t.pachner_14(t.tetras()[0].id, 3), MoveError);
}

TEST_CASE("4->1 inverts 1->4") {
    const auto t = Triangulation::single_tetrahedron();
    const auto sub = t.pachner_14(1, 5);
    const auto back = sub.pachner_41(5);
    CHECK(back.is_valid());
    CHECK(equivalent(back, t));
    CHECK(back.classify().total[3] == 1);
    CHECK_THROWS_AS(sub.pachner_41(1), MoveError);
}

TEST_CASE("0->2 move builds a pillow with duplicate tuples") {
    const auto t = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const auto p = t.move_02({1, 2, 3}, 0, 6);
    CHECK(p.is_valid());
    const auto st = p.classify();
    CHECK(st.total[3] == 4);
    CHECK(st.inner[2] == t.classify().inner[2] + 4);
    CHECK(st.inner_vertices == std::vector<VertexId>{6});
    // Two copies of 1236 with opposite orientations.
    int plus = 0, minus = 0;
    for (const auto& tet : p.tetras())
        if (tet.verts == std::array<VertexId, 4>{1, 2, 3, 6}) (tet.sign > 0 ? plus : minus)++;
    CHECK(plus == 1);
    CHECK(minus == 1);
    CHECK(boundary_set(p) == boundary_set(t));
    CHECK_THROWS_AS(t.move_02({1, 2, 4}, 0, 6), MoveError);  // boundary face
}

TEST_CASE("0->2 then 2->3 realizes 1->4") {
    const auto t = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const auto p = t.move_02({1, 2, 3}, 0, 6);
    // Find the pillow copy glued to tetrahedron 1 (=1234) and do 2->3 there.
    int pillow_id = -1;
    for (const auto& tet : p.tetras())
        if (tet.verts == std::array<VertexId, 4>{1, 2, 3, 6})
            for (int k = 0; k < 4; ++k)
                if (auto pr = p.partner({tet.id, k}); pr && pr->tetra_id == 1) pillow_id = tet.id;
    REQUIRE(pillow_id > 0);
    const auto composed = p.pachner_23(1, pillow_id);

    const auto direct = t.pachner_14(1, 6);
    CHECK(composed.is_valid());
    CHECK(equivalent(composed, direct));
}

TEST_CASE("validation catches broken complexes") {
    CHECK(Triangulation::single_tetrahedron().is_valid());
    // Incoherent orientation: both tetra positively oriented across 123.
    Triangulation bad;
    bad.add_tetra({1, 2, 3, 4}, 1);
    bad.add_tetra({1, 2, 3, 5}, 1);
    bad.glue({1, 3}, {2, 3});
    const auto report = bad.validate();
    CHECK(std::any_of(report.begin(), report.end(), [](const std::string& s) {
        return s.find("incoherent orientations") != std::string::npos;
    }));
    // A face shared by three tetrahedra.
    const auto nm = Triangulation::from_tetra_list({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}});
    const auto report2 = nm.validate();
    CHECK(std::any_of(report2.begin(), report2.end(), [](const std::string& s) {
        return s.find("non-manifold") != std::string::npos;
    }));
}

TEST_CASE("moves preserve validity along a small ladder") {
    auto t = Triangulation::single_tetrahedron().pachner_14(1, 5);
    REQUIRE(t.is_valid());
    auto a = t.pachner_32({1, 5});
    CHECK(a.is_valid());
    const auto sites = a.applicable_23_sites();
    REQUIRE(!sites.empty());
    auto b = a.pachner_23(sites[0].first, sites[0].second);
    CHECK(b.is_valid());
    const auto inner = b.inner_face_sites();
    REQUIRE(!inner.empty());
    auto c = b.move_02(inner[0].first, inner[0].second, b.fresh_vertex_label());
    CHECK(c.is_valid());
    CHECK(boundary_set(c) == boundary_set(t));
}
