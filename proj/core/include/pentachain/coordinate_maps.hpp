#pragma once

#include <array>
#include <map>

#include "pentachain/coords.hpp"
#include "pentachain/dual.hpp"

namespace pentachain {

// Parameters of the affine transformation group acting on coordinates.
struct AffineParams {
    ExactMatrix a;  // invertible
    ExactMatrix b;
};

struct PointAssignment {
    std::size_t n = 1;
    std::map<VertexId, ExactMatrix> z;

    const ExactMatrix& at(VertexId i) const {
        auto it = z.find(i);
        if (it == z.end()) throw Error("no point for vertex " + std::to_string(i));
        return it->second;
    }
    ExactMatrix diff(VertexId i, VertexId j) const { return at(i) - at(j); }
};

// z_i = zeta_i * a + b.
PointAssignment f1_apply(const AffineParams& params, const CoordinateAssignment& zeta);

// phi_ijk = zeta_ij^-1 z_ij z_ik^-1 zeta_ik for i < j < k.
ExactMatrix f2_apply(const PointAssignment& z, const CoordinateAssignment& zeta, VertexId i,
                     VertexId j, VertexId k);

// Same map for an arbitrary vertex order; satisfies phi_ikj = phi_ijk^-1
// and the cyclic permutation relation exactly.
ExactMatrix phi_permuted(const PointAssignment& z, const CoordinateAssignment& zeta,
                         std::array<VertexId, 3> ordered);

// psi_{v,a}: ordered triple product of phi's around vertex v of the
// tetrahedron; telescopes to the identity for consistent phi's.
ExactMatrix f3_apply(const PointAssignment& z, const CoordinateAssignment& zeta,
                     std::array<VertexId, 4> tetra, VertexId v);

// Differential of F2 at z = zeta with boundary dz fixed to zero: evaluates
// F2 on dual matrices, checks the eps-part against the explicit linear
// formula, and returns the per-face matrix differentials (sorted faces).
std::map<FaceKey, ExactMatrix> differential_f2(const Triangulation& t,
                                               const CoordinateAssignment& zeta,
                                               const std::map<VertexId, ExactMatrix>& dz);

// Differential of F3 on one tetrahedron from given per-face matrix
// differentials: the two sums of the linear map, cross-checked against the
// eps-part of F3 evaluated on dual matrices. Returns (dpsi_i1, dpsi_i2).
std::pair<ExactMatrix, ExactMatrix> differential_f3(const CoordinateAssignment& zeta,
                                                    std::array<VertexId, 4> tetra,
                                                    const std::map<FaceKey, ExactMatrix>& dphi);

// Column extraction used to pass from matrix differentials to the columns
// the chain complex works with.
ExactMatrix matrix_column(const ExactMatrix& m, std::size_t col);

}  // namespace pentachain
