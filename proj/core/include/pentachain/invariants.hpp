#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pentachain/chain_complex.hpp"
#include "pentachain/grassmann.hpp"

namespace pentachain {

// Grassmann generators over a complex: the generator of component
// (face_idx, c) is the phi index face_idx * n + c, so matrix columns and
// generator order always agree.
struct GeneratorTable {
    ComplexScheme scheme;

    static GeneratorTable for_complex(const Triangulation& tri, std::size_t n);

    int count() const { return static_cast<int>(scheme.phi_dim()); }
    std::string name(int g) const;
    std::vector<int> all_gens() const;
    std::vector<int> inner_gens() const;
    // The 4n generators of one tetrahedron, ascending (= its f3t columns).
    std::vector<int> tetra_gens(const Tetra& t) const;
};

// The 2n x 4n block matrix of one tetrahedron, columns in face order
// (i1i2i3, i1i2i4, i1i3i4, i2i3i4).
ExactMatrix tetra_block(const CoordinateAssignment& zeta, const std::array<VertexId, 4>& verts);

// Six-term weight of an oriented tetrahedron written in the given vertex
// order (n = 1); odd permutations of the tuple negate it.
GrassmannElement scalar_weight(const GeneratorTable& table, const CoordinateAssignment& zeta,
                               const std::array<VertexId, 4>& written);

// Generating function of the tetrahedron block: the matrix-coordinate
// weight, a sum of degree-2n monomials.
GrassmannElement matrix_weight(const GeneratorTable& table, const CoordinateAssignment& zeta,
                               const Tetra& tet);

// n = 1 gauge transform of the block: columns scaled by the dets attached
// to their faces, second row divided by -(zeta_i3 - zeta_i4); turns the
// generating function into the six-term scalar weight.
ExactMatrix scaled_tetra_block(const CoordinateAssignment& zeta,
                               const std::array<VertexId, 4>& verts);

// Elements over boundary generators reindexed by (face key, component),
// comparable across triangulations with the same boundary.
GrassmannElement restrict_to_boundary(const GrassmannElement& el, const ComplexScheme& scheme);
std::string boundary_gen_name(const ComplexScheme& scheme, int g);

struct PentagonReport {
    bool equal = false;
    bool support_on_boundary = false;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    GrassmannElement lhs;
    GrassmannElement rhs;
};

// Both sides of the pentagon identity for the 2->3 move on tetrahedra
// 1234/1235 vs 1245/2345/1345; coordinates for vertices 1..5.
PentagonReport verify_pentagon_scalar(const CoordinateAssignment& zeta);
PentagonReport verify_pentagon_matrix(const CoordinateAssignment& zeta);

// State sum over scalar weights: product of weights integrated over inner
// faces, divided by the product of inner-edge coordinate differences.
// Defined up to an overall sign; n = 1 only.
GrassmannElement state_sum_scalar(const Triangulation& tri, const CoordinateAssignment& zeta);

struct Prefactor {
    Scalar face_product{1};   // inner faces: det(zeta_j2 - zeta_j3)
    Scalar edge_product{1};   // inner edges: det(zeta_i1 - zeta_i2)
    Scalar tetra_product{1};  // tetrahedra: det(zeta_k3 - zeta_k4)
    Scalar value() const { return face_product / (edge_product * tetra_product); }
};

Prefactor invariant_prefactor(const Triangulation& tri, const CoordinateAssignment& zeta);

// Prefactor times the integral of the product of matrix weights over inner
// face components; up to sign.
GrassmannElement tentative_invariant(const Triangulation& tri, const CoordinateAssignment& zeta);

struct TorsionResult {
    Scalar value{0};
    bool chain_found = false;
    std::vector<std::size_t> rows_f2;  // tau-chain subsets
    std::vector<std::size_t> rows_f3;
};

// tau = minor f3 / (minor f2 * minor f4) for a nondegenerate tau-chain;
// 0 when none exists. Empty minors count as 1.
TorsionResult torsion(const ChainComplexData& data);

struct InvariantValue {
    Scalar value{0};  // |prefactor * tau|, canonical sign
    Scalar tau{0};
    Prefactor prefactor;
    Coloring coloring;
};

InvariantValue invariant_IC(const Triangulation& tri, const CoordinateAssignment& zeta,
                            const Coloring& coloring);
std::vector<InvariantValue> invariant_table(const Triangulation& tri,
                                            const CoordinateAssignment& zeta);

}  // namespace pentachain
