#include "pentachain/chain_complex.hpp"

#include <algorithm>

namespace pentachain {

namespace {

void place_block(ExactMatrix& m, std::size_t row0, std::size_t col0, const ExactMatrix& b,
                 bool add = true) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (add)
                m(row0 + i, col0 + j) += b(i, j);
            else
                m(row0 + i, col0 + j) = b(i, j);
        }
}

std::string face_key_str(const FaceKey& f) {
    return std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]);
}

}  // namespace

ExactMatrix phi_transfer(const CoordinateAssignment& zeta, const FaceKey& face, VertexId v) {
    const VertexId i = face[0], j = face[1], k = face[2];
    if (!(i < j && j < k)) throw Error("phi_transfer expects a sorted face");
    if (v == i) return ExactMatrix::identity(zeta.n);
    if (v == j) return -(zeta.diff_inv(j, k) * zeta.diff(i, k));
    if (v == k) return -(zeta.diff_inv(k, j) * zeta.diff(i, j));
    throw Error("vertex not in face");
}

ExactMatrix phi_component(const CoordinateAssignment& zeta, const std::array<VertexId, 3>& ordered,
                          VertexId v) {
    FaceKey key = ordered;
    const int parity = sort_parity(key);
    ExactMatrix m = phi_transfer(zeta, key, v);
    return parity > 0 ? m : -m;
}

std::pair<ExactMatrix, ExactMatrix> phi_solve(const CoordinateAssignment& zeta,
                                              const FaceKey& face, const ExactMatrix& dphi_i) {
    return {phi_transfer(zeta, face, face[1]) * dphi_i,
            phi_transfer(zeta, face, face[2]) * dphi_i};
}

std::pair<ExactMatrix, ExactMatrix> psi_transfer(const CoordinateAssignment& zeta,
                                                 const std::array<VertexId, 4>& tetra,
                                                 VertexId v) {
    const VertexId i1 = tetra[0], i2 = tetra[1], i3 = tetra[2], i4 = tetra[3];
    if (!(i1 < i2 && i2 < i3 && i3 < i4)) throw Error("psi_transfer expects a sorted tetrahedron");
    const std::size_t n = zeta.n;
    if (v == i1) return {ExactMatrix::identity(n), ExactMatrix(n, n)};
    if (v == i2) return {ExactMatrix(n, n), ExactMatrix::identity(n)};
    if (v == i3) {
        const ExactMatrix m = zeta.diff_inv(i3, i4);
        return {-(m * zeta.diff(i1, i4)), -(m * zeta.diff(i2, i4))};
    }
    if (v == i4) {
        const ExactMatrix m = zeta.diff_inv(i4, i3);
        return {-(m * zeta.diff(i1, i3)), -(m * zeta.diff(i2, i3))};
    }
    throw Error("vertex not in tetrahedron");
}

std::pair<ExactMatrix, ExactMatrix> psi_solve(const CoordinateAssignment& zeta,
                                              const std::array<VertexId, 4>& tetra,
                                              const ExactMatrix& dpsi_i1,
                                              const ExactMatrix& dpsi_i2) {
    const auto [p3, q3] = psi_transfer(zeta, tetra, tetra[2]);
    const auto [p4, q4] = psi_transfer(zeta, tetra, tetra[3]);
    return {p3 * dpsi_i1 + q3 * dpsi_i2, p4 * dpsi_i1 + q4 * dpsi_i2};
}

// ---------------------------------------------------------------------------

ComplexScheme ComplexScheme::build(const Triangulation& tri, std::size_t n) {
    ComplexScheme s;
    s.n = n;
    s.faces = tri.faces();
    s.tets = tri.canonical_tetras();
    s.inner_vertices = tri.classify().inner_vertices;
    for (std::size_t i = 0; i < s.faces.size(); ++i) {
        s.face_idx_[{s.faces[i].key, s.faces[i].copy}] = i;
        s.slot_idx_[s.faces[i].a] = i;
        if (s.faces[i].b) s.slot_idx_[*s.faces[i].b] = i;
    }
    return s;
}

std::size_t ComplexScheme::face_index(const FaceKey& key, int copy) const {
    auto it = face_idx_.find({key, copy});
    if (it == face_idx_.end()) throw Error("no face " + face_key_str(key));
    return it->second;
}

std::size_t ComplexScheme::face_index_of_slot(const Slot& s) const {
    auto it = slot_idx_.find(s);
    if (it == slot_idx_.end()) throw Error("slot does not belong to the complex");
    return it->second;
}

std::vector<std::size_t> ComplexScheme::inner_phi_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (faces[f].inner())
            for (std::size_t c = 0; c < n; ++c) out.push_back(phi_index(f, c));
    return out;
}

std::vector<std::size_t> ComplexScheme::boundary_phi_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (!faces[f].inner())
            for (std::size_t c = 0; c < n; ++c) out.push_back(phi_index(f, c));
    return out;
}

std::string ComplexScheme::face_name(std::size_t face_idx) const {
    const FaceInstance& f = faces[face_idx];
    std::string s = std::to_string(f.key[0]) + "." + std::to_string(f.key[1]) + "." +
                    std::to_string(f.key[2]);
    if (f.copy > 0) s += "#" + std::to_string(f.copy + 1);
    return s;
}

std::string ComplexScheme::phi_label(std::size_t idx) const {
    return "dphi[" + face_name(face_of_phi(idx)) + "][c" + std::to_string(idx % n) + "]";
}

std::string ComplexScheme::psi_label(std::size_t idx) const {
    const std::size_t t = idx / (2 * n), r = (idx / n) % 2, c = idx % n;
    const Tetra& tet = tets[t];
    std::string s = "dpsi[" + std::to_string(tet.verts[r]) + "|";
    for (int k = 0; k < 4; ++k) s += std::to_string(tet.verts[k]);
    return s + "@" + std::to_string(tet.id) + "][c" + std::to_string(c) + "]";
}

std::string ComplexScheme::z_label(std::size_t idx) const {
    return "dz[" + std::to_string(inner_vertices[idx / n]) + "][c" + std::to_string(idx % n) +
           "]";
}

std::string ComplexScheme::chi_label(std::size_t idx) const {
    return "dchi[" + std::to_string(inner_vertices[idx / n]) + "][c" + std::to_string(idx % n) +
           "]";
}

// ---------------------------------------------------------------------------

Coloring Coloring::of(std::vector<std::pair<FaceKey, std::size_t>> members) {
    std::sort(members.begin(), members.end());
    for (std::size_t k = 1; k < members.size(); ++k)
        if (members[k] == members[k - 1]) throw Error("duplicate coloring member");
    Coloring c;
    c.members = std::move(members);
    return c;
}

std::string Coloring::str() const {
    std::string s;
    for (const auto& [key, comp] : members) {
        if (!s.empty()) s += ",";
        s += std::to_string(key[0]) + "." + std::to_string(key[1]) + "." +
             std::to_string(key[2]) + ":" + std::to_string(comp);
    }
    return s;
}

std::size_t coloring_cardinality(const ComplexScheme& scheme) {
    std::size_t inner_faces = 0;
    for (const auto& f : scheme.faces)
        if (f.inner()) ++inner_faces;
    return scheme.n * (2 * scheme.tets.size() - inner_faces);
}

void check_coloring(const ComplexScheme& scheme, const Coloring& c) {
    if (c.members.size() != coloring_cardinality(scheme))
        throw Error("coloring has cardinality " + std::to_string(c.members.size()) +
                    ", expected " + std::to_string(coloring_cardinality(scheme)));
    for (const auto& [key, comp] : c.members) {
        if (comp >= scheme.n) throw Error("coloring component out of range");
        const std::size_t f = scheme.face_index(key, 0);
        if (scheme.faces[f].inner())
            throw Error("coloring member " + face_key_str(key) + " is not a boundary face");
    }
}

std::vector<Coloring> enumerate_colorings(const ComplexScheme& scheme) {
    std::vector<std::pair<FaceKey, std::size_t>> pool;
    for (const auto& f : scheme.faces)
        if (!f.inner())
            for (std::size_t c = 0; c < scheme.n; ++c) pool.push_back({f.key, c});
    const std::size_t want = coloring_cardinality(scheme);
    std::vector<Coloring> out;
    if (want > pool.size()) return out;
    std::vector<std::size_t> sel(want);
    for (std::size_t i = 0; i < want; ++i) sel[i] = i;
    for (;;) {
        std::vector<std::pair<FaceKey, std::size_t>> members;
        for (std::size_t i : sel) members.push_back(pool[i]);
        out.push_back(Coloring::of(std::move(members)));
        std::size_t i = want;
        while (i-- > 0) {
            if (sel[i] + (want - i) < pool.size()) {
                ++sel[i];
                for (std::size_t j = i + 1; j < want; ++j) sel[j] = sel[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

// ---------------------------------------------------------------------------

ExactMatrix build_f2_full(const ComplexScheme& scheme, const CoordinateAssignment& zeta) {
    const std::size_t n = scheme.n;
    ExactMatrix m(scheme.phi_dim(), scheme.z_dim());
    std::map<VertexId, std::size_t> zcol;
    for (std::size_t i = 0; i < scheme.inner_vertices.size(); ++i)
        zcol[scheme.inner_vertices[i]] = i * n;
    for (std::size_t f = 0; f < scheme.faces.size(); ++f) {
        const FaceKey& key = scheme.faces[f].key;
        const VertexId i = key[0], j = key[1], k = key[2];
        const ExactMatrix aij = zeta.diff_inv(i, j);
        const ExactMatrix aik = zeta.diff_inv(i, k);
        const std::size_t row = f * n;
        if (auto it = zcol.find(i); it != zcol.end()) place_block(m, row, it->second, aij - aik);
        if (auto it = zcol.find(j); it != zcol.end()) place_block(m, row, it->second, -aij);
        if (auto it = zcol.find(k); it != zcol.end()) place_block(m, row, it->second, aik);
    }
    return m;
}

ExactMatrix build_f3_full(const ComplexScheme& scheme, const CoordinateAssignment& zeta) {
    const std::size_t n = scheme.n;
    ExactMatrix m(scheme.psi_dim(), scheme.phi_dim());
    const ExactMatrix id = ExactMatrix::identity(n);
    for (std::size_t t = 0; t < scheme.tets.size(); ++t) {
        const Tetra& tet = scheme.tets[t];
        const VertexId i1 = tet.verts[0], i2 = tet.verts[1], i3 = tet.verts[2],
                       i4 = tet.verts[3];
        // Columns: the tetrahedron's face instances by omitted vertex.
        const std::size_t c123 = scheme.face_index_of_slot({tet.id, 3}) * n;
        const std::size_t c124 = scheme.face_index_of_slot({tet.id, 2}) * n;
        const std::size_t c134 = scheme.face_index_of_slot({tet.id, 1}) * n;
        const std::size_t c234 = scheme.face_index_of_slot({tet.id, 0}) * n;
        const std::size_t r1 = t * 2 * n, r2 = r1 + n;
        place_block(m, r1, c123, id);
        place_block(m, r1, c124, -id);
        place_block(m, r1, c134, id);
        place_block(m, r2, c123, zeta.diff_inv(i2, i3) * zeta.diff(i3, i1));
        place_block(m, r2, c124, -(zeta.diff_inv(i2, i4) * zeta.diff(i4, i1)));
        place_block(m, r2, c234, -id);
    }
    return m;
}

namespace {

std::vector<std::size_t> c2_basis(const ComplexScheme& scheme, const Coloring& coloring) {
    check_coloring(scheme, coloring);
    std::set<std::size_t> cols;
    for (std::size_t idx : scheme.inner_phi_indices()) cols.insert(idx);
    for (const auto& [key, comp] : coloring.members)
        cols.insert(scheme.phi_index(scheme.face_index(key, 0), comp));
    return {cols.begin(), cols.end()};
}

}  // namespace

ExactMatrix build_f2(const ComplexScheme& scheme, const CoordinateAssignment& zeta,
                     const Coloring& coloring) {
    const ExactMatrix full = build_f2_full(scheme, zeta);
    const auto rows = c2_basis(scheme, coloring);
    return full.submatrix(rows, full.all_cols());
}

ExactMatrix build_f3(const ComplexScheme& scheme, const CoordinateAssignment& zeta,
                     const Coloring& coloring) {
    const ExactMatrix full = build_f3_full(scheme, zeta);
    const auto cols = c2_basis(scheme, coloring);
    return full.submatrix(full.all_rows(), cols);
}

ExactMatrix build_f4(const ComplexScheme& scheme, const CoordinateAssignment& zeta) {
    const std::size_t n = scheme.n;
    ExactMatrix m(scheme.z_dim(), scheme.psi_dim());
    std::map<VertexId, std::size_t> chirow;
    for (std::size_t i = 0; i < scheme.inner_vertices.size(); ++i)
        chirow[scheme.inner_vertices[i]] = i * n;
    for (std::size_t t = 0; t < scheme.tets.size(); ++t) {
        const Tetra& tet = scheme.tets[t];
        for (int p = 0; p < 4; ++p) {
            const VertexId v = tet.verts[p];
            auto it = chirow.find(v);
            if (it == chirow.end()) continue;
            auto [P, Q] = psi_transfer(zeta, tet.verts, v);
            if (tet.sign < 0) {
                P = -P;
                Q = -Q;
            }
            place_block(m, it->second, t * 2 * n, P);
            place_block(m, it->second, t * 2 * n + n, Q);
        }
    }
    return m;
}

ChainComplexData build_complex(const Triangulation& tri, const CoordinateAssignment& zeta,
                               const Coloring& coloring) {
    ChainComplexData d;
    d.scheme = ComplexScheme::build(tri, zeta.n);
    d.coloring = coloring;
    d.c2_columns = c2_basis(d.scheme, coloring);
    d.f3full = build_f3_full(d.scheme, zeta);
    d.f3 = d.f3full.submatrix(d.f3full.all_rows(), d.c2_columns);
    const ExactMatrix f2full = build_f2_full(d.scheme, zeta);
    d.f2 = f2full.submatrix(d.c2_columns, f2full.all_cols());
    d.f4 = build_f4(d.scheme, zeta);
    return d;
}

ComplexReport verify_complex(const ChainComplexData& d) {
    ComplexReport r;
    r.f3_f2_zero = (d.f3 * d.f2).is_zero();
    r.f4_f3_zero = (d.f4 * d.f3).is_zero();
    r.rank_f2 = d.f2.rank();
    r.rank_f3 = d.f3.rank();
    r.rank_f4 = d.f4.rank();
    const std::size_t mid = d.scheme.psi_dim();
    r.acyclic = r.ok() && r.rank_f2 == d.scheme.z_dim() && r.rank_f2 + r.rank_f3 == mid &&
                r.rank_f3 + r.rank_f4 == mid;
    return r;
}

// ---------------------------------------------------------------------------

ExactMatrix boundary_conditions_matrix(const Triangulation& tri,
                                       const CoordinateAssignment& zeta) {
    const std::size_t n = zeta.n;
    std::vector<FaceInstance> bfaces;
    for (const auto& f : tri.faces())
        if (!f.inner()) bfaces.push_back(f);
    std::map<FaceKey, std::size_t> bcol;
    for (std::size_t i = 0; i < bfaces.size(); ++i) bcol[bfaces[i].key] = i * n;

    std::set<VertexId> bverts;
    for (const auto& f : bfaces)
        for (VertexId v : f.key) bverts.insert(v);

    ExactMatrix m(bverts.size() * n, bfaces.size() * n);
    std::size_t row = 0;
    for (VertexId v : bverts) {
        // Boundary faces around v, walked edge to edge into one circuit.
        std::vector<FaceKey> around;
        for (const auto& f : bfaces)
            if (std::find(f.key.begin(), f.key.end(), v) != f.key.end()) around.push_back(f.key);
        std::map<VertexId, std::vector<std::size_t>> by_other;
        auto others = [&](const FaceKey& f) {
            std::array<VertexId, 2> o{};
            int k = 0;
            for (VertexId w : f)
                if (w != v) o[k++] = w;
            return o;
        };
        for (std::size_t i = 0; i < around.size(); ++i) {
            const auto o = others(around[i]);
            by_other[o[0]].push_back(i);
            by_other[o[1]].push_back(i);
        }
        for (const auto& [u, fs] : by_other)
            if (fs.size() != 2)
                throw Error("boundary faces around vertex " + std::to_string(v) +
                            " do not close up");
        std::size_t cur = 0;
        VertexId in_v = others(around[0])[0];
        std::vector<bool> visited(around.size(), false);
        for (std::size_t step = 0; step < around.size(); ++step) {
            if (visited[cur])
                throw Error("boundary faces around vertex " + std::to_string(v) +
                            " split into several circuits");
            visited[cur] = true;
            const auto o = others(around[cur]);
            const VertexId out_v = (o[0] == in_v) ? o[1] : o[0];
            // dphi_{v, (v, in, out)} expressed through the canonical component.
            const ExactMatrix coeff = phi_component(zeta, {v, in_v, out_v}, v);
            place_block(m, row, bcol[around[cur]], coeff);
            const auto& pair = by_other[out_v];
            cur = (pair[0] == cur) ? pair[1] : pair[0];
            in_v = out_v;
        }
        row += n;
    }
    return m;
}

std::size_t boundary_conditions_rank(const Triangulation& tri,
                                     const CoordinateAssignment& zeta) {
    return boundary_conditions_matrix(tri, zeta).rank();
}

}  // namespace pentachain
