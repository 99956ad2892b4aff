#include "pentachain/io.hpp"

#include <fstream>
#include <sstream>

namespace pentachain {

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_io<Scalar>::str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a non-empty array");
    const std::size_t rows = j.size();
    const std::size_t cols = j.at(0).size();
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw ParseError("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c)
            m(i, c) = scalar_io<Scalar>::parse(j.at(i).at(c).get<std::string>());
    }
    return m;
}

Json complex_to_json(const Triangulation& tri, const CoordinateAssignment& zeta) {
    Json out;
    out["n"] = zeta.n;
    const auto stats = tri.classify();
    Json verts = Json::array();
    for (VertexId v : tri.vertex_labels()) {
        Json jv;
        jv["id"] = v;
        if (zeta.zeta.count(v)) jv["coordinate"] = matrix_to_json(zeta.at(v));
        jv["inner"] = std::binary_search(stats.inner_vertices.begin(),
                                         stats.inner_vertices.end(), v);
        verts.push_back(std::move(jv));
    }
    out["vertices"] = std::move(verts);
    Json tets = Json::array();
    for (const auto& t : tri.canonical_tetras()) {
        Json jt;
        jt["id"] = t.id;
        jt["vertices"] = t.verts;
        jt["orientation"] = t.sign;
        tets.push_back(std::move(jt));
    }
    out["tetrahedra"] = std::move(tets);
    Json glues = Json::array();
    for (const auto& [x, y] : tri.gluings()) {
        if (!(x < y)) continue;
        glues.push_back(Json::array({Json::array({x.tetra_id, x.omit}),
                                     Json::array({y.tetra_id, y.omit})}));
    }
    out["gluings"] = std::move(glues);
    return out;
}

std::pair<Triangulation, CoordinateAssignment> complex_from_json(const Json& j) {
    Triangulation tri;
    CoordinateAssignment zeta;
    zeta.n = j.value("n", 1);
    if (zeta.n < 1) throw ParseError("n must be at least 1");
    if (!j.contains("tetrahedra")) throw ParseError("missing 'tetrahedra'");
    for (const auto& jt : j.at("tetrahedra")) {
        std::array<VertexId, 4> verts{};
        const auto& vv = jt.at("vertices");
        if (vv.size() != 4) throw ParseError("tetrahedron needs 4 vertices");
        for (int k = 0; k < 4; ++k) verts[k] = vv.at(k).get<VertexId>();
        const int orient = jt.value("orientation", 1);
        if (orient != 1 && orient != -1) throw ParseError("orientation must be 1 or -1");
        tri.add_tetra(verts, orient, jt.value("id", -1));
    }
    if (j.contains("gluings")) {
        for (const auto& jg : j.at("gluings")) {
            Slot a{jg.at(0).at(0).get<int>(), jg.at(0).at(1).get<int>()};
            Slot b{jg.at(1).at(0).get<int>(), jg.at(1).at(1).get<int>()};
            tri.glue(a, b);
        }
    } else {
        std::map<FaceKey, std::vector<Slot>> by_key;
        for (const auto& t : tri.tetras())
            for (int k = 0; k < 4; ++k) by_key[tri.slot_face({t.id, k})].push_back({t.id, k});
        for (const auto& [key, slots] : by_key) {
            if (slots.size() == 2) tri.glue(slots[0], slots[1]);
            if (slots.size() > 2)
                throw ParseError("face labels are ambiguous; an explicit 'gluings' list is required");
        }
    }
    if (j.contains("vertices")) {
        for (const auto& jv : j.at("vertices")) {
            if (!jv.contains("coordinate")) continue;
            ExactMatrix m = matrix_from_json(jv.at("coordinate"));
            if (m.rows() != zeta.n || m.cols() != zeta.n)
                throw ParseError("coordinate shape does not match n");
            zeta.zeta.emplace(jv.at("id").get<VertexId>(), std::move(m));
        }
    }
    return {std::move(tri), std::move(zeta)};
}

Json element_to_json(const GrassmannElement& el, const std::function<std::string(int)>& name) {
    Json out = Json::array();
    for (const auto& [mask, coeff] : el.terms()) {
        Json term;
        Json mono = Json::array();
        for (int g = 0; g < kMaxGenerators; ++g)
            if (mask & gen_bit(g)) mono.push_back(name(g));
        term["monomial"] = std::move(mono);
        term["coeff"] = scalar_io<Scalar>::str(coeff);
        out.push_back(std::move(term));
    }
    return out;
}

Json matrices_to_json(const ChainComplexData& d) {
    Json out;
    auto labels = [&](auto&& f, std::size_t count) {
        Json a = Json::array();
        for (std::size_t i = 0; i < count; ++i) a.push_back(f(i));
        return a;
    };
    const auto& s = d.scheme;
    Json c2 = Json::array();
    for (std::size_t idx : d.c2_columns) c2.push_back(s.phi_label(idx));
    out["c2_basis"] = c2;
    out["f2"] = {{"rows", c2},
                 {"cols", labels([&](std::size_t i) { return s.z_label(i); }, s.z_dim())},
                 {"entries", matrix_to_json(d.f2)}};
    out["f3_full"] = {
        {"rows", labels([&](std::size_t i) { return s.psi_label(i); }, s.psi_dim())},
        {"cols", labels([&](std::size_t i) { return s.phi_label(i); }, s.phi_dim())},
        {"entries", matrix_to_json(d.f3full)}};
    out["f3"] = {{"rows", labels([&](std::size_t i) { return s.psi_label(i); }, s.psi_dim())},
                 {"cols", c2},
                 {"entries", matrix_to_json(d.f3)}};
    out["f4"] = {{"rows", labels([&](std::size_t i) { return s.chi_label(i); }, s.z_dim())},
                 {"cols", labels([&](std::size_t i) { return s.psi_label(i); }, s.psi_dim())},
                 {"entries", matrix_to_json(d.f4)}};
    out["coloring"] = d.coloring.str();
    return out;
}

Json invariant_to_json(const InvariantValue& v) {
    Json out;
    Json coloring = Json::array();
    for (const auto& [key, comp] : v.coloring.members) {
        Json m;
        m["face"] = key;
        m["component"] = comp;
        coloring.push_back(std::move(m));
    }
    out["coloring"] = std::move(coloring);
    out["value"] = scalar_io<Scalar>::str(v.value);
    out["tau"] = scalar_io<Scalar>::str(v.tau);
    out["prefactor"] = scalar_io<Scalar>::str(v.prefactor.value());
    out["prefactor_parts"] = {{"inner_faces", scalar_io<Scalar>::str(v.prefactor.face_product)},
                              {"inner_edges", scalar_io<Scalar>::str(v.prefactor.edge_product)},
                              {"tetrahedra", scalar_io<Scalar>::str(v.prefactor.tetra_product)}};
    return out;
}

Json pentagon_report_to_json(const PentagonReport& rep, const std::string& identity,
                             std::size_t n, std::uint64_t seed) {
    Json out;
    out["identity"] = identity;
    out["n"] = n;
    out["seed"] = seed;
    out["equal"] = rep.equal;
    out["lhs_terms"] = rep.lhs_terms;
    out["rhs_terms"] = rep.rhs_terms;
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << contents;
}

}  // namespace pentachain
