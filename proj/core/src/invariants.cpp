#include "pentachain/invariants.hpp"

#include <algorithm>

namespace pentachain {

namespace {

void check_generator_budget(const ComplexScheme& scheme) {
    if (scheme.phi_dim() > static_cast<std::size_t>(kMaxGenerators))
        throw Error("complex needs " + std::to_string(scheme.phi_dim()) +
                    " Grassmann generators, limit is " + std::to_string(kMaxGenerators) +
                    " (rebuild with PENTACHAIN_WIDE_MASK for more)");
}

Scalar det_diff(const CoordinateAssignment& zeta, VertexId a, VertexId b) {
    return zeta.diff(a, b).det();
}

// Vertical concatenation of the tetra blocks over the full face-component
// column space: exactly the f3^full matrix of the complex, optionally with
// the n = 1 gauge scaling applied per tetrahedron.
ExactMatrix weight_rows(const ComplexScheme& scheme, const CoordinateAssignment& zeta,
                        bool scaled) {
    if (!scaled) return build_f3_full(scheme, zeta);
    if (scheme.n != 1) throw Error("scaled weight rows are defined for n = 1 only");
    const std::size_t n = 1;
    ExactMatrix m(scheme.psi_dim(), scheme.phi_dim());
    for (std::size_t t = 0; t < scheme.tets.size(); ++t) {
        const Tetra& tet = scheme.tets[t];
        const ExactMatrix block = scaled_tetra_block(zeta, tet.verts);
        const std::array<std::size_t, 4> cols{
            scheme.face_index_of_slot({tet.id, 3}), scheme.face_index_of_slot({tet.id, 2}),
            scheme.face_index_of_slot({tet.id, 1}), scheme.face_index_of_slot({tet.id, 0})};
        for (std::size_t r = 0; r < 2 * n; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(t * 2 * n + r, cols[c]) = block(r, c);
    }
    return m;
}

GrassmannElement integrate_inner(const ComplexScheme& scheme, const ExactMatrix& rows) {
    std::vector<int> gens(scheme.phi_dim());
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = static_cast<int>(i);
    std::vector<int> inner;
    for (std::size_t idx : scheme.inner_phi_indices()) inner.push_back(static_cast<int>(idx));
    return gen_fun_inner(rows, gens, inner);
}

}  // namespace

GeneratorTable GeneratorTable::for_complex(const Triangulation& tri, std::size_t n) {
    GeneratorTable t;
    t.scheme = ComplexScheme::build(tri, n);
    check_generator_budget(t.scheme);
    return t;
}

namespace {

// a_123_0 while labels are single digits, a_10.11.12_0 beyond that.
std::string face_gen_name(const FaceInstance& f, std::size_t comp) {
    const bool compact = f.key[2] <= 9;
    std::string s = "a_";
    for (int i = 0; i < 3; ++i) {
        if (i > 0 && !compact) s += ".";
        s += std::to_string(f.key[i]);
    }
    if (f.copy > 0) s += "#" + std::to_string(f.copy + 1);
    return s + "_" + std::to_string(comp);
}

}  // namespace

std::string GeneratorTable::name(int g) const {
    return face_gen_name(scheme.faces[scheme.face_of_phi(g)], g % scheme.n);
}

std::vector<int> GeneratorTable::all_gens() const {
    std::vector<int> v(scheme.phi_dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    return v;
}

std::vector<int> GeneratorTable::inner_gens() const {
    std::vector<int> v;
    for (std::size_t idx : scheme.inner_phi_indices()) v.push_back(static_cast<int>(idx));
    return v;
}

std::vector<int> GeneratorTable::tetra_gens(const Tetra& t) const {
    std::vector<int> v;
    for (int omit = 3; omit >= 0; --omit) {
        const std::size_t f = scheme.face_index_of_slot({t.id, omit});
        for (std::size_t c = 0; c < scheme.n; ++c)
            v.push_back(static_cast<int>(scheme.phi_index(f, c)));
    }
    std::sort(v.begin(), v.end());
    return v;
}

ExactMatrix tetra_block(const CoordinateAssignment& zeta, const std::array<VertexId, 4>& verts) {
    const VertexId i1 = verts[0], i2 = verts[1], i3 = verts[2], i4 = verts[3];
    if (!(i1 < i2 && i2 < i3 && i3 < i4)) throw Error("tetra_block expects sorted vertices");
    const std::size_t n = zeta.n;
    ExactMatrix m(2 * n, 4 * n);
    const ExactMatrix id = ExactMatrix::identity(n);
    auto put = [&m](std::size_t r0, std::size_t c0, const ExactMatrix& b) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    };
    put(0, 0 * n, id);
    put(0, 1 * n, -id);
    put(0, 2 * n, id);
    put(n, 0 * n, zeta.diff_inv(i2, i3) * zeta.diff(i3, i1));
    put(n, 1 * n, -(zeta.diff_inv(i2, i4) * zeta.diff(i4, i1)));
    put(n, 3 * n, -id);
    return m;
}

ExactMatrix scaled_tetra_block(const CoordinateAssignment& zeta,
                               const std::array<VertexId, 4>& verts) {
    if (zeta.n != 1) throw Error("the gauge-scaled block is defined for n = 1 only");
    const VertexId i2 = verts[1], i3 = verts[2], i4 = verts[3];
    ExactMatrix m = tetra_block(zeta, verts);
    const Scalar col_scale[4] = {det_diff(zeta, i2, i3), det_diff(zeta, i2, i4),
                                 det_diff(zeta, i3, i4), det_diff(zeta, i3, i4)};
    const Scalar row2 = Scalar(-1) * det_diff(zeta, i3, i4);
    for (std::size_t c = 0; c < 4; ++c) {
        m(0, c) = m(0, c) * col_scale[c];
        m(1, c) = m(1, c) * col_scale[c] / row2;
    }
    return m;
}

GrassmannElement scalar_weight(const GeneratorTable& table, const CoordinateAssignment& zeta,
                               const std::array<VertexId, 4>& written) {
    if (zeta.n != 1) throw Error("scalar weight is defined for n = 1");
    std::array<VertexId, 4> sorted = written;
    const int parity = sort_parity(sorted);
    const Tetra* tet = nullptr;
    for (const auto& t : table.scheme.tets)
        if (t.verts == sorted) tet = &t;
    if (!tet) throw Error("tetrahedron not in the complex");
    const std::vector<int> gens = table.tetra_gens(*tet);  // faces in key order

    GrassmannElement w;
    // One term per edge (p,q): sign * zeta_pq * a_{pq+x} a_{pq+y}, where
    // x < y complete the edge to its two adjacent faces. Face keys ascend
    // as the omitted position descends, so the face omitting position r
    // carries generator gens[3 - r], and g1 < g2 holds automatically.
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) {
            std::array<int, 2> rest{};
            int k = 0;
            for (int r = 0; r < 4; ++r)
                if (r != p && r != q) rest[k++] = r;
            Scalar coeff = det_diff(zeta, sorted[p], sorted[q]);
            if ((p + q + 1) % 2 != 0) coeff = -coeff;
            if (parity < 0) coeff = -coeff;
            const int g1 = gens[3 - rest[1]];
            const int g2 = gens[3 - rest[0]];
            w = w + GrassmannElement::monomial({g1, g2}, coeff);
        }
    return w;
}

GrassmannElement matrix_weight(const GeneratorTable& table, const CoordinateAssignment& zeta,
                               const Tetra& tet) {
    check_generator_budget(table.scheme);
    return gen_fun(tetra_block(zeta, tet.verts), table.tetra_gens(tet));
}

GrassmannElement restrict_to_boundary(const GrassmannElement& el, const ComplexScheme& scheme) {
    const auto boundary = scheme.boundary_phi_indices();
    std::map<int, int> remap;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        remap[static_cast<int>(boundary[i])] = static_cast<int>(i);
    GrassmannElement out;
    for (const auto& [mask, coeff] : el.terms()) {
        GenMask nm = 0;
        for (int g = 0; g < kMaxGenerators; ++g) {
            if (!(mask & gen_bit(g))) continue;
            auto it = remap.find(g);
            if (it == remap.end())
                throw Error("element is supported outside the boundary generators");
            nm |= gen_bit(it->second);
        }
        out.add_term(nm, coeff);
    }
    return out;
}

std::string boundary_gen_name(const ComplexScheme& scheme, int g) {
    const auto boundary = scheme.boundary_phi_indices();
    const std::size_t idx = boundary.at(g);
    return face_gen_name(scheme.faces[scheme.face_of_phi(idx)], idx % scheme.n);
}

namespace {

// Sign relating the iterated integral (first-listed differential applied
// first) over m ascending generators to the inner generating function.
Scalar fold_parity(std::size_t m) {
    return (m * (m - 1) / 2) % 2 == 0 ? Scalar(1) : Scalar(-1);
}

PentagonReport pentagon_common(const CoordinateAssignment& zeta, bool scaled) {
    const std::size_t n = zeta.n;
    Triangulation lhs = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const Triangulation rhs = lhs.pachner_23(1, 2);
    check_coordinates(zeta, lhs);
    check_coordinates(zeta, rhs);

    const ComplexScheme ls = ComplexScheme::build(lhs, n);
    const ComplexScheme rs = ComplexScheme::build(rhs, n);
    check_generator_budget(ls);
    check_generator_budget(rs);

    GrassmannElement le = integrate_inner(ls, weight_rows(ls, zeta, scaled));
    GrassmannElement re = integrate_inner(rs, weight_rows(rs, zeta, scaled));

    Scalar lpref(1), rpref(1);
    if (scaled) {
        // Scalar identity: one inner edge 45 on the right, and both sides
        // written as iterated integrals in ascending generator order.
        lpref = fold_parity(n);
        rpref = fold_parity(3 * n) / det_diff(zeta, 4, 5);
    } else {
        // Matrix identity: both sides are inner generating functions of
        // the concatenated block matrices.
        lpref = det_diff(zeta, 2, 3) / (det_diff(zeta, 3, 4) * det_diff(zeta, 3, 5));
        rpref = Scalar(1) / det_diff(zeta, 4, 5);
    }

    PentagonReport rep;
    rep.lhs = restrict_to_boundary(lpref * le, ls);
    rep.rhs = restrict_to_boundary(rpref * re, rs);
    rep.lhs_terms = rep.lhs.term_count();
    rep.rhs_terms = rep.rhs.term_count();
    rep.equal = (rep.lhs == rep.rhs);
    rep.support_on_boundary = true;  // restrict_to_boundary would have thrown
    return rep;
}

}  // namespace

PentagonReport verify_pentagon_scalar(const CoordinateAssignment& zeta) {
    if (zeta.n != 1) throw Error("scalar pentagon needs n = 1");
    return pentagon_common(zeta, /*scaled=*/true);
}

PentagonReport verify_pentagon_matrix(const CoordinateAssignment& zeta) {
    return pentagon_common(zeta, /*scaled=*/false);
}

GrassmannElement state_sum_scalar(const Triangulation& tri, const CoordinateAssignment& zeta) {
    if (zeta.n != 1) throw Error("the scalar state sum needs n = 1");
    check_coordinates(zeta, tri);
    const ComplexScheme scheme = ComplexScheme::build(tri, 1);
    check_generator_budget(scheme);
    const GrassmannElement el = integrate_inner(scheme, weight_rows(scheme, zeta, /*scaled=*/true));
    Scalar inner_edges(1);
    for (const auto& e : tri.classify().inner_edges)
        inner_edges *= det_diff(zeta, e[0], e[1]);
    return restrict_to_boundary((Scalar(1) / inner_edges) * el, scheme);
}

Prefactor invariant_prefactor(const Triangulation& tri, const CoordinateAssignment& zeta) {
    Prefactor p;
    const auto stats = tri.classify();
    for (const auto& f : stats.inner_faces) p.face_product *= det_diff(zeta, f[1], f[2]);
    for (const auto& e : stats.inner_edges) p.edge_product *= det_diff(zeta, e[0], e[1]);
    for (const auto& t : tri.tetras()) p.tetra_product *= det_diff(zeta, t.verts[2], t.verts[3]);
    return p;
}

GrassmannElement tentative_invariant(const Triangulation& tri,
                                     const CoordinateAssignment& zeta) {
    check_coordinates(zeta, tri);
    const ComplexScheme scheme = ComplexScheme::build(tri, zeta.n);
    check_generator_budget(scheme);
    const GrassmannElement el =
        integrate_inner(scheme, weight_rows(scheme, zeta, /*scaled=*/false));
    return restrict_to_boundary(invariant_prefactor(tri, zeta).value() * el, scheme);
}

TorsionResult torsion(const ChainComplexData& d) {
    TorsionResult out;
    const std::size_t d1 = d.scheme.z_dim();
    const std::size_t mid = d.scheme.psi_dim();

    const auto ech2 = d.f2.echelon();
    if (ech2.rank != d1) return out;
    std::vector<std::size_t> r2 = ech2.pivot_rows;
    std::sort(r2.begin(), r2.end());
    const Scalar minor2 = d.f2.submatrix(r2, d.f2.all_cols()).det();
    if (minor2 == Scalar(0)) return out;

    std::vector<std::size_t> cols3;
    for (std::size_t c = 0; c < d.f3.cols(); ++c)
        if (!std::binary_search(r2.begin(), r2.end(), c)) cols3.push_back(c);
    const ExactMatrix f3r = d.f3.submatrix(d.f3.all_rows(), cols3);
    const auto ech3 = f3r.echelon();
    if (ech3.rank != mid - d1) return out;
    std::vector<std::size_t> r3 = ech3.pivot_rows;
    std::sort(r3.begin(), r3.end());
    const Scalar minor3 = f3r.submatrix(r3, f3r.all_cols()).det();
    if (minor3 == Scalar(0)) return out;

    std::vector<std::size_t> cols4;
    for (std::size_t c = 0; c < mid; ++c)
        if (!std::binary_search(r3.begin(), r3.end(), c)) cols4.push_back(c);
    const Scalar minor4 = d.f4.submatrix(d.f4.all_rows(), cols4).det();
    if (minor4 == Scalar(0)) return out;  // complex is not acyclic

    out.value = minor3 / (minor2 * minor4);
    out.chain_found = true;
    out.rows_f2 = std::move(r2);
    out.rows_f3 = std::move(r3);
    return out;
}

InvariantValue invariant_IC(const Triangulation& tri, const CoordinateAssignment& zeta,
                            const Coloring& coloring) {
    const auto bad = tri.validate();
    if (!bad.empty()) throw ValidationError("invalid triangulation: " + bad.front());
    const ChainComplexData data = build_complex(tri, zeta, coloring);
    const TorsionResult tau = torsion(data);
    InvariantValue v;
    v.coloring = coloring;
    v.tau = tau.value;
    v.prefactor = invariant_prefactor(tri, zeta);
    v.value = canonical_abs(Scalar(v.prefactor.value() * tau.value));
    return v;
}

std::vector<InvariantValue> invariant_table(const Triangulation& tri,
                                            const CoordinateAssignment& zeta) {
    const ComplexScheme scheme = ComplexScheme::build(tri, zeta.n);
    std::vector<InvariantValue> out;
    for (const auto& coloring : enumerate_colorings(scheme))
        out.push_back(invariant_IC(tri, zeta, coloring));
    return out;
}

}  // namespace pentachain
