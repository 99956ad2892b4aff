#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pentachain/coords.hpp"
#include "pentachain/triangulation.hpp"

namespace pentachain {

// --- Linear resolution of the phi / psi relations ---------------------------
//
// Canonical components live on sorted faces (dphi_b = dphi_{b0,b}) and on
// the two least vertices of sorted tetrahedra. Other components follow from
// the two linear relations per simplex plus antisymmetry under odd
// permutations.

// M with dphi_{v,b} = M * dphi_b for sorted face b containing v.
ExactMatrix phi_transfer(const CoordinateAssignment& zeta, const FaceKey& face, VertexId v);
// Ordered triple, including the permutation sign.
ExactMatrix phi_component(const CoordinateAssignment& zeta, const std::array<VertexId, 3>& ordered,
                          VertexId v);
// Given dphi_{i,b} for the least vertex i of sorted b, the remaining two.
std::pair<ExactMatrix, ExactMatrix> phi_solve(const CoordinateAssignment& zeta,
                                              const FaceKey& face, const ExactMatrix& dphi_i);

// (P, Q) with dpsi_{v,a} = P * dpsi_{i1,a} + Q * dpsi_{i2,a} for sorted a.
std::pair<ExactMatrix, ExactMatrix> psi_transfer(const CoordinateAssignment& zeta,
                                                 const std::array<VertexId, 4>& tetra, VertexId v);
std::pair<ExactMatrix, ExactMatrix> psi_solve(const CoordinateAssignment& zeta,
                                              const std::array<VertexId, 4>& tetra,
                                              const ExactMatrix& dpsi_i1,
                                              const ExactMatrix& dpsi_i2);

// --- Canonical bases of the complex spaces ----------------------------------

// Index bookkeeping shared by the complex matrices and the Grassmann
// generator tables: component (face_idx, c) sits at face_idx*n + c.
struct ComplexScheme {
    std::size_t n = 1;
    std::vector<FaceInstance> faces;  // canonical order: (key, slot)
    std::vector<Tetra> tets;          // canonical order: (verts, id)
    std::vector<VertexId> inner_vertices;

    static ComplexScheme build(const Triangulation& tri, std::size_t n);

    std::size_t phi_dim() const { return faces.size() * n; }
    std::size_t psi_dim() const { return tets.size() * 2 * n; }
    std::size_t z_dim() const { return inner_vertices.size() * n; }

    std::size_t phi_index(std::size_t face_idx, std::size_t comp) const {
        return face_idx * n + comp;
    }
    std::size_t face_of_phi(std::size_t idx) const { return idx / n; }
    std::size_t face_index(const FaceKey& key, int copy) const;
    std::size_t face_index_of_slot(const Slot& s) const;
    bool face_inner(std::size_t face_idx) const { return faces[face_idx].inner(); }

    std::vector<std::size_t> inner_phi_indices() const;
    std::vector<std::size_t> boundary_phi_indices() const;

    std::string face_name(std::size_t face_idx) const;
    std::string phi_label(std::size_t idx) const;
    std::string psi_label(std::size_t idx) const;
    std::string z_label(std::size_t idx) const;
    std::string chi_label(std::size_t idx) const;

private:
    std::map<std::pair<FaceKey, int>, std::size_t> face_idx_;
    std::map<Slot, std::size_t> slot_idx_;
};

// --- Colorings ---------------------------------------------------------------

// A choice of boundary face components completing the middle space; the
// boundary triangulation has no duplicate labels, so (key, comp) is stable
// across moves.
struct Coloring {
    std::vector<std::pair<FaceKey, std::size_t>> members;  // ascending

    static Coloring of(std::vector<std::pair<FaceKey, std::size_t>> members);
    friend bool operator<(const Coloring& a, const Coloring& b) { return a.members < b.members; }
    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.members == b.members;
    }
    std::string str() const;
};

std::size_t coloring_cardinality(const ComplexScheme& scheme);
void check_coloring(const ComplexScheme& scheme, const Coloring& c);
std::vector<Coloring> enumerate_colorings(const ComplexScheme& scheme);

// --- The complex -------------------------------------------------------------

struct ChainComplexData {
    ComplexScheme scheme;
    Coloring coloring;
    std::vector<std::size_t> c2_columns;  // phi indices forming the middle basis
    ExactMatrix f2;                       // |c2| x z_dim (rows restricted to c2)
    ExactMatrix f3full;                   // psi_dim x phi_dim
    ExactMatrix f3;                       // psi_dim x |c2|
    ExactMatrix f4;                       // z_dim x psi_dim
};

ExactMatrix build_f2_full(const ComplexScheme& scheme, const CoordinateAssignment& zeta);
ExactMatrix build_f2(const ComplexScheme& scheme, const CoordinateAssignment& zeta,
                     const Coloring& coloring);
ExactMatrix build_f3_full(const ComplexScheme& scheme, const CoordinateAssignment& zeta);
ExactMatrix build_f3(const ComplexScheme& scheme, const CoordinateAssignment& zeta,
                     const Coloring& coloring);
ExactMatrix build_f4(const ComplexScheme& scheme, const CoordinateAssignment& zeta);
ChainComplexData build_complex(const Triangulation& tri, const CoordinateAssignment& zeta,
                               const Coloring& coloring);

struct ComplexReport {
    bool f3_f2_zero = false;
    bool f4_f3_zero = false;
    std::size_t rank_f2 = 0;
    std::size_t rank_f3 = 0;
    std::size_t rank_f4 = 0;
    bool acyclic = false;
    bool ok() const { return f3_f2_zero && f4_f3_zero; }
};

ComplexReport verify_complex(const ChainComplexData& data);

// The vertex-circuit conditions on boundary dphi of a 2<->3 cluster; rank
// is 3n at generic coordinates.
ExactMatrix boundary_conditions_matrix(const Triangulation& tri,
                                       const CoordinateAssignment& zeta);
std::size_t boundary_conditions_rank(const Triangulation& tri, const CoordinateAssignment& zeta);

}  // namespace pentachain
