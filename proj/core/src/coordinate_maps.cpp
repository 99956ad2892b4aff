#include "pentachain/coordinate_maps.hpp"

#include <algorithm>

#include "pentachain/chain_complex.hpp"

namespace pentachain {

void check_coordinates(const CoordinateAssignment& z, const Triangulation& t) {
    for (const auto& [v, m] : z.zeta)
        if (m.rows() != z.n || m.cols() != z.n)
            throw Error("coordinate of vertex " + std::to_string(v) + " is not n x n");
    for (const auto& tet : t.tetras())
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                const auto d = z.diff(tet.verts[i], tet.verts[j]);
                if (d.det() == Scalar(0))
                    throw SingularMatrixError("zeta_" + std::to_string(tet.verts[i]) + " - zeta_" +
                                              std::to_string(tet.verts[j]) + " in tetrahedron " +
                                              std::to_string(tet.id));
            }
}

void complete_random_coordinates(CoordinateAssignment& z, const Triangulation& t, Sampler& rng,
                                 long long bound, int tries) {
    std::vector<VertexId> missing;
    for (VertexId v : t.vertex_labels())
        if (!z.zeta.count(v)) missing.push_back(v);
    for (int attempt = 0; attempt < tries; ++attempt) {
        for (VertexId v : missing) z.zeta[v] = rng.matrix(z.n, z.n, bound);
        try {
            check_coordinates(z, t);
            return;
        } catch (const SingularMatrixError&) {
            for (VertexId v : missing) z.zeta.erase(v);
        }
    }
    throw SingularMatrixError("could not sample invertible coordinate differences");
}

CoordinateAssignment random_coordinates(const Triangulation& t, std::size_t n, Sampler& rng,
                                        long long bound, int tries) {
    CoordinateAssignment z;
    z.n = n;
    complete_random_coordinates(z, t, rng, bound, tries);
    return z;
}

PointAssignment f1_apply(const AffineParams& params, const CoordinateAssignment& zeta) {
    PointAssignment out;
    out.n = zeta.n;
    for (const auto& [v, m] : zeta.zeta) out.z.emplace(v, m * params.a + params.b);
    return out;
}

namespace {

// phi for any ordered triple: zeta_ab^-1 z_ab z_ac^-1 zeta_ac. Works on
// plain and dual matrices alike.
template <class M, class DiffZ, class DiffZeta>
M phi_formula(const DiffZeta& zd, const DiffZ& zz, VertexId a, VertexId b, VertexId c) {
    const std::string ctx = "phi_" + std::to_string(a) + std::to_string(b) + std::to_string(c);
    return zd(a, b).inverse(ctx) * zz(a, b) * zz(a, c).inverse(ctx) * zd(a, c);
}

}  // namespace

ExactMatrix phi_permuted(const PointAssignment& z, const CoordinateAssignment& zeta,
                         std::array<VertexId, 3> o) {
    if (o[0] == o[1] || o[0] == o[2] || o[1] == o[2]) throw Error("degenerate face triple");
    auto zd = [&](VertexId i, VertexId j) { return zeta.diff(i, j); };
    auto zz = [&](VertexId i, VertexId j) { return z.diff(i, j); };
    return phi_formula<ExactMatrix>(zd, zz, o[0], o[1], o[2]);
}

ExactMatrix f2_apply(const PointAssignment& z, const CoordinateAssignment& zeta, VertexId i,
                     VertexId j, VertexId k) {
    if (!(i < j && j < k)) throw Error("f2_apply expects ascending vertices");
    return phi_permuted(z, zeta, {i, j, k});
}

ExactMatrix f3_apply(const PointAssignment& z, const CoordinateAssignment& zeta,
                     std::array<VertexId, 4> tetra, VertexId v) {
    std::array<VertexId, 3> rest{};
    int k = 0;
    for (VertexId w : tetra) {
        if (w == v) continue;
        if (k == 3) throw Error("vertex not in tetrahedron");
        rest[k++] = w;
    }
    if (k != 3) throw Error("vertex not in tetrahedron");
    std::sort(rest.begin(), rest.end());
    // psi_{v,a} = phi_{v r0 r1} phi_{v r1 r2} phi_{v r2 r0}
    return phi_permuted(z, zeta, {v, rest[0], rest[1]}) *
           phi_permuted(z, zeta, {v, rest[1], rest[2]}) *
           phi_permuted(z, zeta, {v, rest[2], rest[0]});
}

std::map<FaceKey, ExactMatrix> differential_f2(const Triangulation& t,
                                               const CoordinateAssignment& zeta,
                                               const std::map<VertexId, ExactMatrix>& dz) {
    const auto stats = t.classify();
    const std::size_t n = zeta.n;
    for (const auto& [v, m] : dz) {
        if (!std::binary_search(stats.inner_vertices.begin(), stats.inner_vertices.end(), v))
            throw Error("dz given for non-inner vertex " + std::to_string(v));
        if (m.rows() != n || m.cols() != n) throw Error("dz shape mismatch");
    }
    const ExactMatrix zero(n, n);
    auto dz_of = [&](VertexId v) -> const ExactMatrix& {
        auto it = dz.find(v);
        return it == dz.end() ? zero : it->second;
    };

    // Dual evaluation z_i = zeta_i + eps dz_i; boundary dz stay zero.
    auto zeta_dual = [&](VertexId i, VertexId j) { return DualMatrix(zeta.diff(i, j)); };
    auto z_dual = [&](VertexId i, VertexId j) {
        return DualMatrix(zeta.diff(i, j), dz_of(i) - dz_of(j));
    };

    std::map<FaceKey, ExactMatrix> out;
    std::set<FaceKey> keys;
    for (const auto& f : t.faces()) keys.insert(f.key);
    for (const auto& key : keys) {
        const VertexId i = key[0], j = key[1], k = key[2];
        ExactMatrix lin = zeta.diff_inv(i, j) * (dz_of(i) - dz_of(j)) -
                          zeta.diff_inv(i, k) * (dz_of(i) - dz_of(k));
        const DualMatrix dual = phi_formula<DualMatrix>(zeta_dual, z_dual, i, j, k);
        if (!(dual.value == ExactMatrix::identity(n)))
            throw Error("differential_f2: value part is not the identity");
        if (!(dual.diff == lin))
            throw Error("differential_f2: dual eps-part disagrees with the linear formula");
        out.emplace(key, std::move(lin));
    }
    return out;
}

namespace {

// Dual phi for an arbitrary ordered triple, generated from the canonical
// duals 1 + eps dphi_b on sorted faces through the permutation relations.
DualMatrix dual_phi(const CoordinateAssignment& zeta,
                    const std::map<FaceKey, ExactMatrix>& dphi, std::array<VertexId, 3> o) {
    FaceKey key{o[0], o[1], o[2]};
    sort_parity(key);
    auto it = dphi.find(key);
    if (it == dphi.end()) throw Error("missing dphi input for a face");
    DualMatrix phi(ExactMatrix::identity(zeta.n), it->second);
    std::array<VertexId, 3> cur{key[0], key[1], key[2]};
    // Rotate until the first vertices agree, then fix the last two.
    for (int step = 0; step < 2 && cur[0] != o[0]; ++step) {
        // phi_{cab} = (zeta_bc^-1 zeta_ac - zeta_bc^-1 zeta_ab phi_abc)^-1
        const VertexId a = cur[0], b = cur[1], c = cur[2];
        const ExactMatrix zbc_inv = zeta.diff_inv(b, c);
        DualMatrix m(zbc_inv * zeta.diff(a, c));
        m = m - DualMatrix(zbc_inv * zeta.diff(a, b)) * phi;
        phi = m.inverse("dual phi permutation");
        cur = {c, a, b};
    }
    if (cur[0] != o[0]) throw Error("triple rotation failed");
    if (cur[1] != o[1]) phi = phi.inverse("dual phi swap");
    return phi;
}

}  // namespace

std::pair<ExactMatrix, ExactMatrix> differential_f3(const CoordinateAssignment& zeta,
                                                    std::array<VertexId, 4> tetra,
                                                    const std::map<FaceKey, ExactMatrix>& dphi) {
    sort_parity(tetra);
    const VertexId i = tetra[0], j = tetra[1], k = tetra[2], l = tetra[3];
    auto term = [&](std::array<VertexId, 3> ordered, VertexId v) {
        FaceKey key = ordered;
        sort_parity(key);
        auto it = dphi.find(key);
        if (it == dphi.end()) throw Error("missing dphi input for a face");
        return phi_component(zeta, ordered, v) * it->second;
    };
    // dpsi_i = dphi_{i,ijk} + dphi_{i,ikl} + dphi_{i,ilj}
    const ExactMatrix di = term({i, j, k}, i) + term({i, k, l}, i) + term({i, l, j}, i);
    // dpsi_j = dphi_{j,ijk} + dphi_{j,ilj} + dphi_{j,jlk}
    const ExactMatrix dj = term({i, j, k}, j) + term({i, l, j}, j) + term({j, l, k}, j);

    // Cross-check against the eps-part of the product formula.
    const DualMatrix pi = dual_phi(zeta, dphi, {i, j, k}) * dual_phi(zeta, dphi, {i, k, l}) *
                          dual_phi(zeta, dphi, {i, l, j});
    const DualMatrix pj = dual_phi(zeta, dphi, {j, k, i}) * dual_phi(zeta, dphi, {j, i, l}) *
                          dual_phi(zeta, dphi, {j, l, k});
    if (!(pi.diff == di) || !(pj.diff == dj))
        throw Error("differential_f3: dual eps-part disagrees with the linear sums");
    return {di, dj};
}

ExactMatrix matrix_column(const ExactMatrix& m, std::size_t col) {
    if (col >= m.cols()) throw Error("column index out of range");
    ExactMatrix out(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, 0) = m(i, col);
    return out;
}

}  // namespace pentachain
