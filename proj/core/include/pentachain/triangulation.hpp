#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pentachain/errors.hpp"

namespace pentachain {

using VertexId = int;
using EdgeKey = std::array<VertexId, 2>;  // ascending
using FaceKey = std::array<VertexId, 3>;  // ascending

// Vertices stored ascending; `sign` is the orientation relative to the
// ascending order (odd permutations of a written tuple flip it).
struct Tetra {
    int id = 0;
    std::array<VertexId, 4> verts{};
    int sign = 1;
};

// Face slot of a tetrahedron: the face omitting verts[omit].
struct Slot {
    int tetra_id = 0;
    int omit = 0;
    auto operator<=>(const Slot&) const = default;
};

// One 2-face of the complex. Gluing is by slot, not by label: the pillow
// move creates distinct faces with identical label triples.
struct FaceInstance {
    FaceKey key{};
    Slot a{};
    std::optional<Slot> b;  // partner slot when the face is inner
    int copy = 0;           // ordinal among instances with the same key
    bool inner() const { return b.has_value(); }
};

struct SimplexStats {
    std::array<std::size_t, 4> total{};  // N_k
    std::array<std::size_t, 4> inner{};  // N'_k
    std::vector<VertexId> inner_vertices;
    std::vector<EdgeKey> inner_edges;
    std::vector<FaceKey> inner_faces;  // one entry per instance
    std::vector<FaceKey> boundary_faces;
};

FaceKey sorted_face(VertexId i, VertexId j, VertexId k);
EdgeKey sorted_edge(VertexId i, VertexId j);
// Parity sign of the permutation sorting the tuple; throws on repeats.
int sort_parity(std::array<VertexId, 4>& v);
int sort_parity(std::array<VertexId, 3>& v);

class Triangulation {
public:
    Triangulation() = default;

    static Triangulation single_tetrahedron(std::array<VertexId, 4> verts = {1, 2, 3, 4});
    // Builds from written tuples (orientation = written order), gluing
    // faces whose label triple occurs in exactly two slots.
    static Triangulation from_tetra_list(const std::vector<std::array<VertexId, 4>>& tuples);

    const std::vector<Tetra>& tetras() const { return tets_; }
    const std::map<Slot, Slot>& gluings() const { return glue_; }
    const Tetra& tetra(int id) const;
    bool has_tetra(int id) const;
    std::vector<Tetra> canonical_tetras() const;  // sorted by (verts, id)

    std::vector<VertexId> vertex_labels() const;
    VertexId fresh_vertex_label() const;
    FaceKey slot_face(const Slot& s) const;
    std::optional<Slot> partner(const Slot& s) const;

    // Canonical face-instance list, ordered by (key, smallest slot).
    std::vector<FaceInstance> faces() const;
    std::vector<EdgeKey> edges() const;
    bool edge_exists(VertexId a, VertexId b) const;

    SimplexStats classify() const;
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }
    // Boundary faces (unglued slots), grouped by shared edges.
    std::size_t boundary_component_count() const;
    bool boundary_connected() const;

    // Pachner moves and the pillow move; all return a new complex and
    // leave *this untouched. Preconditions raise MoveError.
    Triangulation pachner_23(int tetra_a, int tetra_b) const;
    Triangulation pachner_32(EdgeKey inner_edge) const;
    Triangulation pachner_14(int tetra_id, VertexId new_vertex) const;
    Triangulation pachner_41(VertexId inner_vertex) const;
    Triangulation move_02(const FaceKey& face, int copy, VertexId new_vertex) const;

    // Move-site enumeration, used by the CLI and randomized tests.
    std::vector<std::pair<int, int>> applicable_23_sites() const;
    std::vector<EdgeKey> applicable_32_sites() const;
    std::vector<std::pair<FaceKey, int>> inner_face_sites() const;

    // Structure comparison ignoring instance ids (used for move round-trips).
    friend bool equivalent(const Triangulation& x, const Triangulation& y);

    // Low-level construction (JSON loader).
    int add_tetra(std::array<VertexId, 4> written, int written_sign, int id = -1);
    void glue(const Slot& x, const Slot& y);

private:
    const Tetra* find(int id) const;
    void erase_tetra(int id);

    std::vector<Tetra> tets_;
    std::map<Slot, Slot> glue_;
    int next_id_ = 1;
};

}  // namespace pentachain
