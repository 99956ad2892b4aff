#pragma once

#include <map>

#include "pentachain/matrix.hpp"
#include "pentachain/rng.hpp"
#include "pentachain/triangulation.hpp"

namespace pentachain {

// Per-vertex n x n coordinate matrices zeta_i. Any two vertices sharing a
// simplex must have an invertible difference zeta_i - zeta_j.
struct CoordinateAssignment {
    std::size_t n = 1;
    std::map<VertexId, ExactMatrix> zeta;

    const ExactMatrix& at(VertexId i) const {
        auto it = zeta.find(i);
        if (it == zeta.end()) throw Error("no coordinate for vertex " + std::to_string(i));
        return it->second;
    }
    ExactMatrix diff(VertexId i, VertexId j) const { return at(i) - at(j); }
    ExactMatrix diff_inv(VertexId i, VertexId j) const {
        return diff(i, j).inverse("zeta_" + std::to_string(i) + " - zeta_" + std::to_string(j));
    }

    // n = 1 assignment from plain numbers, handy in tests and examples.
    static CoordinateAssignment scalars(const std::map<VertexId, Scalar>& values) {
        CoordinateAssignment c;
        c.n = 1;
        for (const auto& [v, x] : values) {
            ExactMatrix m(1, 1);
            m(0, 0) = x;
            c.zeta.emplace(v, std::move(m));
        }
        return c;
    }
};

// Throws SingularMatrixError naming the first offending pair.
void check_coordinates(const CoordinateAssignment& z, const Triangulation& t);

// Fills coordinates for vertices of t that have none, resampling until the
// shared-simplex differences are invertible; throws after `tries` rounds.
void complete_random_coordinates(CoordinateAssignment& z, const Triangulation& t, Sampler& rng,
                                 long long bound, int tries = 16);
CoordinateAssignment random_coordinates(const Triangulation& t, std::size_t n, Sampler& rng,
                                        long long bound, int tries = 16);

}  // namespace pentachain
