#include "pentachain/triangulation.hpp"

#include <algorithm>
#include <queue>

namespace pentachain {

namespace {

template <std::size_t N>
int bubble_sort_parity(std::array<VertexId, N>& v) {
    int swaps = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j + 1 < N - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                ++swaps;
            }
    for (std::size_t i = 0; i + 1 < N; ++i)
        if (v[i] == v[i + 1]) throw Error("repeated vertex in simplex tuple");
    return (swaps % 2 == 0) ? 1 : -1;
}

int omit_index(const Tetra& t, VertexId v) {
    for (int k = 0; k < 4; ++k)
        if (t.verts[k] == v) return k;
    throw Error("vertex not in tetrahedron");
}

// Orientation induced on the slot's face (as ascending triple) by the
// tetrahedron: sign * (-1)^omit.
int induced_orientation(const Tetra& t, int omit) { return (omit % 2 == 0) ? t.sign : -t.sign; }

}  // namespace

FaceKey sorted_face(VertexId i, VertexId j, VertexId k) {
    FaceKey f{i, j, k};
    sort_parity(f);
    return f;
}

EdgeKey sorted_edge(VertexId i, VertexId j) {
    if (i == j) throw Error("degenerate edge");
    return i < j ? EdgeKey{i, j} : EdgeKey{j, i};
}

int sort_parity(std::array<VertexId, 4>& v) { return bubble_sort_parity<4>(v); }
int sort_parity(std::array<VertexId, 3>& v) { return bubble_sort_parity<3>(v); }

Triangulation Triangulation::single_tetrahedron(std::array<VertexId, 4> verts) {
    Triangulation t;
    t.add_tetra(verts, 1);
    return t;
}

Triangulation Triangulation::from_tetra_list(const std::vector<std::array<VertexId, 4>>& tuples) {
    Triangulation t;
    for (const auto& tup : tuples) t.add_tetra(tup, 1);
    std::map<FaceKey, std::vector<Slot>> by_key;
    for (const auto& tet : t.tets_)
        for (int k = 0; k < 4; ++k) by_key[t.slot_face({tet.id, k})].push_back({tet.id, k});
    for (const auto& [key, slots] : by_key)
        if (slots.size() == 2) t.glue(slots[0], slots[1]);
    return t;
}

int Triangulation::add_tetra(std::array<VertexId, 4> written, int written_sign, int id) {
    const int parity = sort_parity(written);
    Tetra t;
    t.id = (id >= 0) ? id : next_id_;
    if (has_tetra(t.id)) throw Error("duplicate tetrahedron id");
    next_id_ = std::max(next_id_, t.id + 1);
    t.verts = written;
    t.sign = written_sign * parity;
    tets_.push_back(t);
    return t.id;
}

void Triangulation::glue(const Slot& x, const Slot& y) {
    if (x == y) throw Error("cannot glue a slot to itself");
    if (x.tetra_id == y.tetra_id) throw Error("cannot glue a tetrahedron to itself");
    if (glue_.count(x) || glue_.count(y)) throw Error("slot already glued");
    if (slot_face(x) != slot_face(y)) throw Error("glued slots carry different faces");
    glue_[x] = y;
    glue_[y] = x;
}

const Tetra* Triangulation::find(int id) const {
    for (const auto& t : tets_)
        if (t.id == id) return &t;
    return nullptr;
}

const Tetra& Triangulation::tetra(int id) const {
    const Tetra* t = find(id);
    if (!t) throw Error("no tetrahedron with id " + std::to_string(id));
    return *t;
}

bool Triangulation::has_tetra(int id) const { return find(id) != nullptr; }

std::vector<Tetra> Triangulation::canonical_tetras() const {
    std::vector<Tetra> v = tets_;
    std::sort(v.begin(), v.end(), [](const Tetra& a, const Tetra& b) {
        if (a.verts != b.verts) return a.verts < b.verts;
        return a.id < b.id;
    });
    return v;
}

void Triangulation::erase_tetra(int id) {
    for (auto it = glue_.begin(); it != glue_.end();) {
        if (it->first.tetra_id == id || it->second.tetra_id == id)
            it = glue_.erase(it);
        else
            ++it;
    }
    std::erase_if(tets_, [&](const Tetra& t) { return t.id == id; });
}

std::vector<VertexId> Triangulation::vertex_labels() const {
    std::set<VertexId> s;
    for (const auto& t : tets_) s.insert(t.verts.begin(), t.verts.end());
    return {s.begin(), s.end()};
}

VertexId Triangulation::fresh_vertex_label() const {
    VertexId m = 0;
    for (const auto& t : tets_) m = std::max(m, t.verts[3]);
    return m + 1;
}

FaceKey Triangulation::slot_face(const Slot& s) const {
    const Tetra& t = tetra(s.tetra_id);
    FaceKey f;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != s.omit) f[k++] = t.verts[i];
    return f;  // verts ascending, so the face is already sorted
}

std::optional<Slot> Triangulation::partner(const Slot& s) const {
    auto it = glue_.find(s);
    if (it == glue_.end()) return std::nullopt;
    return it->second;
}

std::vector<FaceInstance> Triangulation::faces() const {
    std::vector<FaceInstance> out;
    std::set<Slot> seen;
    for (const auto& t : canonical_tetras()) {
        for (int k = 0; k < 4; ++k) {
            Slot s{t.id, k};
            if (seen.count(s)) continue;
            seen.insert(s);
            FaceInstance f;
            f.key = slot_face(s);
            f.a = s;
            if (auto p = partner(s)) {
                f.b = *p;
                seen.insert(*p);
                if (*p < f.a) std::swap(f.a, *f.b);
            }
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), [](const FaceInstance& x, const FaceInstance& y) {
        if (x.key != y.key) return x.key < y.key;
        return x.a < y.a;
    });
    std::map<FaceKey, int> counts;
    for (auto& f : out) f.copy = counts[f.key]++;
    return out;
}

std::vector<EdgeKey> Triangulation::edges() const {
    std::set<EdgeKey> s;
    for (const auto& t : tets_)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) s.insert({t.verts[i], t.verts[j]});
    return {s.begin(), s.end()};
}

bool Triangulation::edge_exists(VertexId a, VertexId b) const {
    for (const auto& t : tets_) {
        bool ha = false, hb = false;
        for (VertexId v : t.verts) {
            ha |= (v == a);
            hb |= (v == b);
        }
        if (ha && hb) return true;
    }
    return false;
}

SimplexStats Triangulation::classify() const {
    SimplexStats st;
    const auto fs = faces();
    std::set<VertexId> bverts;
    std::set<EdgeKey> bedges;
    for (const auto& f : fs) {
        if (f.inner()) {
            st.inner_faces.push_back(f.key);
        } else {
            st.boundary_faces.push_back(f.key);
            for (int i = 0; i < 3; ++i) {
                bverts.insert(f.key[i]);
                for (int j = i + 1; j < 3; ++j) bedges.insert({f.key[i], f.key[j]});
            }
        }
    }
    const auto vs = vertex_labels();
    const auto es = edges();
    st.total = {vs.size(), es.size(), fs.size(), tets_.size()};
    for (VertexId v : vs)
        if (!bverts.count(v)) st.inner_vertices.push_back(v);
    for (const auto& e : es)
        if (!bedges.count(e)) st.inner_edges.push_back(e);
    st.inner = {st.inner_vertices.size(), st.inner_edges.size(), st.inner_faces.size(),
                tets_.size()};
    return st;
}

std::size_t Triangulation::boundary_component_count() const {
    std::vector<FaceInstance> bf;
    for (const auto& f : faces())
        if (!f.inner()) bf.push_back(f);
    if (bf.empty()) return 0;
    // Two boundary faces are adjacent when they share an edge.
    std::map<EdgeKey, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < bf.size(); ++i)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                by_edge[{bf[i].key[a], bf[i].key[b]}].push_back(i);
    std::vector<int> comp(bf.size(), -1);
    std::size_t ncomp = 0;
    for (std::size_t seed = 0; seed < bf.size(); ++seed) {
        if (comp[seed] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(seed);
        comp[seed] = static_cast<int>(ncomp);
        while (!q.empty()) {
            const std::size_t i = q.front();
            q.pop();
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    for (std::size_t j : by_edge[{bf[i].key[a], bf[i].key[b]}])
                        if (comp[j] < 0) {
                            comp[j] = static_cast<int>(ncomp);
                            q.push(j);
                        }
        }
        ++ncomp;
    }
    return ncomp;
}

bool Triangulation::boundary_connected() const { return boundary_component_count() == 1; }

std::vector<std::string> Triangulation::validate() const {
    std::vector<std::string> bad;
    auto face_str = [](const FaceKey& f) {
        return std::to_string(f[0]) + "," + std::to_string(f[1]) + "," + std::to_string(f[2]);
    };

    std::set<int> ids;
    for (const auto& t : tets_)
        if (!ids.insert(t.id).second) bad.push_back("duplicate tetrahedron id " + std::to_string(t.id));

    // Gluing must be an involution over existing slots with matching faces
    // and opposite induced orientations.
    for (const auto& [x, y] : glue_) {
        if (!has_tetra(x.tetra_id) || !has_tetra(y.tetra_id)) {
            bad.push_back("gluing references a missing tetrahedron");
            continue;
        }
        auto it = glue_.find(y);
        if (it == glue_.end() || !(it->second == x)) bad.push_back("gluing map is not an involution");
        if (x < y) {
            if (slot_face(x) != slot_face(y))
                bad.push_back("glued slots carry different faces " + face_str(slot_face(x)));
            else if (induced_orientation(tetra(x.tetra_id), x.omit) ==
                     induced_orientation(tetra(y.tetra_id), y.omit))
                bad.push_back("incoherent orientations across inner face " + face_str(slot_face(x)));
        }
    }

    // Gluing disambiguates repeated label triples (pillow copies), but at
    // most one slot per triple may stay unglued: boundary faces are
    // referenced by label.
    std::map<FaceKey, int> unglued;
    for (const auto& t : tets_)
        for (int k = 0; k < 4; ++k)
            if (!glue_.count({t.id, k})) ++unglued[slot_face({t.id, k})];
    for (const auto& [key, count] : unglued)
        if (count > 1)
            bad.push_back("face " + face_str(key) + " is carried by " + std::to_string(count) +
                          " unglued slots (non-manifold gluing)");

    // Local manifold condition around each edge: face instances through the
    // edge must chain the surrounding tetrahedra into one path or cycle.
    for (const auto& e : edges()) {
        std::vector<int> around;
        for (const auto& t : tets_) {
            bool ha = false, hb = false;
            for (VertexId v : t.verts) {
                ha |= (v == e[0]);
                hb |= (v == e[1]);
            }
            if (ha && hb) around.push_back(t.id);
        }
        // The tetrahedra around e, linked through glued faces containing e,
        // must form one path (boundary edge) or one cycle (inner edge).
        std::map<int, int> deg;
        std::map<int, std::vector<int>> adj;
        int open_slots = 0;
        for (int id : around) {
            deg[id] = 0;
            for (int k = 0; k < 4; ++k) {
                const FaceKey f = slot_face({id, k});
                if (std::find(f.begin(), f.end(), e[0]) == f.end()) continue;
                if (std::find(f.begin(), f.end(), e[1]) == f.end()) continue;
                if (auto p = partner({id, k})) {
                    ++deg[id];
                    adj[id].push_back(p->tetra_id);
                } else {
                    ++open_slots;
                }
            }
        }
        std::set<int> reached;
        std::queue<int> q;
        q.push(around[0]);
        reached.insert(around[0]);
        while (!q.empty()) {
            const int id = q.front();
            q.pop();
            for (int nb : adj[id])
                if (reached.insert(nb).second) q.push(nb);
        }
        bool ok = reached.size() == around.size();
        int deg1 = 0;
        for (const auto& [id, d] : deg) {
            if (d > 2) ok = false;
            if (d == 1) ++deg1;
        }
        const bool path = (open_slots == 2 && deg1 <= 2);
        const bool cycle = (open_slots == 0 && deg1 == 0);
        if (!(ok && (path || cycle)))
            bad.push_back("edge " + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                          " has a non-manifold link");
    }

    const std::size_t ncomp = boundary_component_count();
    if (!tets_.empty() && ncomp == 0) bad.push_back("boundary is empty");
    if (ncomp > 1) bad.push_back("boundary has " + std::to_string(ncomp) + " components");

    return bad;
}

// ---------------------------------------------------------------------------
// Moves

Triangulation Triangulation::pachner_23(int tetra_a, int tetra_b) const {
    const Tetra& A = tetra(tetra_a);
    const Tetra& B = tetra(tetra_b);
    std::vector<std::pair<Slot, Slot>> shared;
    for (int k = 0; k < 4; ++k) {
        Slot s{tetra_a, k};
        if (auto p = partner(s); p && p->tetra_id == tetra_b) shared.push_back({s, *p});
    }
    if (shared.size() != 1)
        throw MoveError("2->3 move needs tetrahedra glued along exactly one face");
    const auto [sA, sB] = shared[0];
    const VertexId p = A.verts[sA.omit];
    const VertexId q = B.verts[sB.omit];
    if (p == q) throw MoveError("2->3 move: apexes coincide");
    if (edge_exists(p, q)) throw MoveError("2->3 move: edge between apexes already exists");

    // Write A as (c0,c1,c2,p) with positive written orientation.
    std::array<VertexId, 3> c{};
    {
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != sA.omit) c[k++] = A.verts[i];
        // Moving p from position sA.omit to the end costs 3-omit swaps.
        int sgn = A.sign * (((3 - sA.omit) % 2 == 0) ? 1 : -1);
        if (sgn < 0) std::swap(c[0], c[1]);
    }

    Triangulation nt = *this;
    // Harvest external partners before surgery: extA[i] faces the old
    // A-face omitting c[i] (and containing p), likewise extB for B.
    std::array<std::optional<Slot>, 3> extA, extB;
    for (int i = 0; i < 3; ++i) {
        extA[i] = partner(Slot{A.id, omit_index(A, c[i])});
        extB[i] = partner(Slot{B.id, omit_index(B, c[i])});
    }

    nt.erase_tetra(tetra_a);
    nt.erase_tetra(tetra_b);
    // New tetras (c_i, c_{i+1}, q, p), positive as written.
    std::array<int, 3> nid{};
    for (int i = 0; i < 3; ++i) nid[i] = nt.add_tetra({c[i], c[(i + 1) % 3], q, p}, 1);
    auto nslot = [&](int id, VertexId omit_label) {
        return Slot{id, omit_index(nt.tetra(id), omit_label)};
    };
    // Internal faces (c_i, q, p) shared by the two new tetras containing c_i.
    for (int i = 0; i < 3; ++i)
        nt.glue(nslot(nid[i], c[(i + 1) % 3]), nslot(nid[(i + 2) % 3], c[(i + 2) % 3]));
    // External faces: (c_i, c_{i+1}, p) and (c_i, c_{i+1}, q) live on tetra nid[i].
    for (int i = 0; i < 3; ++i) {
        const int missing = (i + 2) % 3;  // c index absent from nid[i]
        if (extA[missing]) nt.glue(nslot(nid[i], q), *extA[missing]);
        if (extB[missing]) nt.glue(nslot(nid[i], p), *extB[missing]);
    }
    return nt;
}

Triangulation Triangulation::pachner_32(EdgeKey inner_edge) const {
    const VertexId e0 = inner_edge[0], e1 = inner_edge[1];
    std::vector<int> around;
    for (const auto& t : tets_) {
        bool h0 = false, h1 = false;
        for (VertexId v : t.verts) {
            h0 |= (v == e0);
            h1 |= (v == e1);
        }
        if (h0 && h1) around.push_back(t.id);
    }
    if (around.size() != 3) throw MoveError("3->2 move needs an edge of degree 3");

    auto outer_pair = [&](int id) {
        std::array<VertexId, 2> o{};
        int k = 0;
        for (VertexId v : tetra(id).verts)
            if (v != e0 && v != e1) o[k++] = v;
        return o;
    };
    // The three outer pairs must form a triangle c0,c1,c2.
    const auto o0 = outer_pair(around[0]);
    std::set<VertexId> cset{o0[0], o0[1]};
    for (int m = 1; m < 3; ++m) {
        const auto o = outer_pair(around[m]);
        cset.insert(o[0]);
        cset.insert(o[1]);
    }
    if (cset.size() != 3) throw MoveError("3->2 move: tetrahedra do not close around the edge");

    // Orient the first tetrahedron as (u, v, q, p) positive as written.
    const VertexId u = o0[0], v = o0[1];
    VertexId q = e0, p = e1;
    {
        std::array<VertexId, 4> w{u, v, q, p};
        const int parity = sort_parity(w);
        if (w != tetra(around[0]).verts) throw Error("internal: tuple mismatch in 3->2");
        if (parity * tetra(around[0]).sign < 0) std::swap(q, p);
    }
    VertexId c2 = 0;
    for (VertexId x : cset)
        if (x != u && x != v) c2 = x;
    const std::array<VertexId, 3> c{u, v, c2};

    // Identify the tetra carrying each outer pair and check coherence:
    // (c_i, c_{i+1}, q, p) must be positively oriented for all i.
    std::array<int, 3> tid_of{};
    for (int i = 0; i < 3; ++i) {
        std::array<VertexId, 4> w{c[i], c[(i + 1) % 3], q, p};
        std::array<VertexId, 4> sorted = w;
        const int parity = sort_parity(sorted);
        int found = -1;
        for (int id : around)
            if (tetra(id).verts == sorted) found = id;
        if (found < 0) throw MoveError("3->2 move: tetrahedra do not close around the edge");
        if (tetra(found).sign != parity)
            throw MoveError("3->2 move: tetrahedra around the edge are incoherently oriented");
        tid_of[i] = found;
    }
    // Edge must be inner: every face through it glued, which for degree 3
    // means the three tetra are pairwise glued along the (c_i, q, p) faces.
    for (int i = 0; i < 3; ++i) {
        const Tetra& ti = tetra(tid_of[i]);
        auto pr = partner(Slot{ti.id, omit_index(ti, c[(i + 1) % 3])});
        if (!pr || pr->tetra_id != tid_of[(i + 2) % 3])
            throw MoveError("3->2 move: edge is not inner");
    }

    // Harvest external partners of faces (c_i, c_{i+1}, p) and (.., q).
    std::array<std::optional<Slot>, 3> extP, extQ;
    for (int i = 0; i < 3; ++i) {
        const Tetra& ti = tetra(tid_of[i]);
        extP[i] = partner(Slot{ti.id, omit_index(ti, q)});
        extQ[i] = partner(Slot{ti.id, omit_index(ti, p)});
    }

    Triangulation nt = *this;
    for (int id : around) nt.erase_tetra(id);
    const int ta = nt.add_tetra({c[0], c[1], c[2], p}, 1);
    const int tb = nt.add_tetra({q, c[0], c[1], c[2]}, 1);
    auto nslot = [&](int id, VertexId omit_label) {
        return Slot{id, omit_index(nt.tetra(id), omit_label)};
    };
    nt.glue(nslot(ta, p), nslot(tb, q));
    for (int i = 0; i < 3; ++i) {
        const VertexId missing = c[(i + 2) % 3];
        if (extP[i]) nt.glue(nslot(ta, missing), *extP[i]);
        if (extQ[i]) nt.glue(nslot(tb, missing), *extQ[i]);
    }
    return nt;
}

Triangulation Triangulation::pachner_14(int tetra_id, VertexId new_vertex) const {
    const Tetra T = tetra(tetra_id);
    for (VertexId v : vertex_labels())
        if (v == new_vertex) throw MoveError("1->4 move: vertex label already in use");

    std::array<std::optional<Slot>, 4> ext;
    for (int k = 0; k < 4; ++k) ext[k] = partner(Slot{tetra_id, k});

    Triangulation nt = *this;
    nt.erase_tetra(tetra_id);
    std::array<int, 4> nid{};
    for (int k = 0; k < 4; ++k) {
        std::array<VertexId, 4> w = T.verts;
        w[k] = new_vertex;  // new vertex sits inside: same written orientation
        nid[k] = nt.add_tetra(w, T.sign);
    }
    auto nslot = [&](int id, VertexId omit_label) {
        return Slot{id, omit_index(nt.tetra(id), omit_label)};
    };
    for (int k = 0; k < 4; ++k) {
        if (ext[k]) nt.glue(nslot(nid[k], new_vertex), *ext[k]);
        for (int j = k + 1; j < 4; ++j)
            nt.glue(nslot(nid[k], T.verts[j]), nslot(nid[j], T.verts[k]));
    }
    return nt;
}

Triangulation Triangulation::pachner_41(VertexId inner_vertex) const {
    std::vector<int> star;
    for (const auto& t : tets_)
        for (VertexId v : t.verts)
            if (v == inner_vertex) star.push_back(t.id);
    if (star.size() != 4) throw MoveError("4->1 move needs a vertex of degree 4");

    // Outer vertices and, per star tetra, the one it misses.
    std::set<VertexId> outer;
    for (int id : star)
        for (VertexId v : tetra(id).verts)
            if (v != inner_vertex) outer.insert(v);
    if (outer.size() != 4) throw MoveError("4->1 move: star is not a subdivided tetrahedron");

    std::optional<Tetra> candidate;
    std::map<VertexId, int> tetra_missing;  // outer vertex -> star tetra id
    for (int id : star) {
        const Tetra& N = tetra(id);
        VertexId missing = 0;
        int found = 0;
        for (VertexId v : outer) {
            bool has = false;
            for (VertexId w : N.verts) has |= (w == v);
            if (!has) {
                missing = v;
                ++found;
            }
        }
        if (found != 1) throw MoveError("4->1 move: star is not a subdivided tetrahedron");
        tetra_missing[missing] = id;
        std::array<VertexId, 4> w = N.verts;
        w[omit_index(N, inner_vertex)] = missing;
        std::array<VertexId, 4> sorted = w;
        const int parity = sort_parity(sorted);
        Tetra cand;
        cand.verts = sorted;
        cand.sign = N.sign * parity;
        if (!candidate) {
            candidate = cand;
        } else if (candidate->verts != cand.verts || candidate->sign != cand.sign) {
            throw MoveError("4->1 move: star tetrahedra are incoherent");
        }
    }
    // The six interior faces must be glued inside the star; exterior faces
    // must not touch the removed vertex.
    for (int id : star) {
        for (int k = 0; k < 4; ++k) {
            const FaceKey f = slot_face({id, k});
            const bool touches =
                std::find(f.begin(), f.end(), inner_vertex) != f.end();
            auto pr = partner(Slot{id, k});
            if (touches) {
                if (!pr || std::find(star.begin(), star.end(), pr->tetra_id) == star.end())
                    throw MoveError("4->1 move: vertex link is not a sphere");
            }
        }
    }

    std::map<VertexId, std::optional<Slot>> ext;
    for (const auto& [missing, id] : tetra_missing)
        ext[missing] = partner(Slot{id, omit_index(tetra(id), inner_vertex)});

    Triangulation nt = *this;
    for (int id : star) nt.erase_tetra(id);
    Tetra cand = *candidate;
    std::array<VertexId, 4> w = cand.verts;
    const int nid = nt.add_tetra(w, cand.sign);
    for (const auto& [missing, slot] : ext)
        if (slot) nt.glue(Slot{nid, omit_index(nt.tetra(nid), missing)}, *slot);
    return nt;
}

Triangulation Triangulation::move_02(const FaceKey& face, int copy, VertexId new_vertex) const {
    for (VertexId v : vertex_labels())
        if (v == new_vertex) throw MoveError("0->2 move: vertex label already in use");
    std::optional<FaceInstance> inst;
    for (const auto& f : faces())
        if (f.key == face && f.copy == copy) inst = f;
    if (!inst) throw MoveError("0->2 move: no such face instance");
    if (!inst->inner()) throw MoveError("0->2 move: face is on the boundary");

    const Slot sU = inst->a, sW = *inst->b;
    const int epsU = induced_orientation(tetra(sU.tetra_id), sU.omit);

    Triangulation nt = *this;
    nt.glue_.erase(sU);
    nt.glue_.erase(sW);

    std::array<VertexId, 4> sorted{face[0], face[1], face[2], new_vertex};
    sort_parity(sorted);
    int m = 0;  // position of the new vertex in the sorted tuple
    for (int i = 0; i < 4; ++i)
        if (sorted[i] == new_vertex) m = i;
    // The pillow copy glued to U must induce the opposite orientation on
    // the face: sign * (-1)^m = -epsU.
    const int signA = ((m % 2 == 0) ? -epsU : epsU);
    const int idA = nt.add_tetra(sorted, signA);
    const int idB = nt.add_tetra(sorted, -signA);
    auto nslot = [&](int id, VertexId omit_label) {
        return Slot{id, omit_index(nt.tetra(id), omit_label)};
    };
    nt.glue(nslot(idA, new_vertex), sU);
    nt.glue(nslot(idB, new_vertex), sW);
    for (int i = 0; i < 3; ++i) nt.glue(nslot(idA, face[i]), nslot(idB, face[i]));
    return nt;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> Triangulation::applicable_23_sites() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [x, y] : glue_) {
        if (!(x < y)) continue;
        const Tetra& A = tetra(x.tetra_id);
        const Tetra& B = tetra(y.tetra_id);
        int shared = 0;
        for (int k = 0; k < 4; ++k)
            if (auto p = partner(Slot{A.id, k}); p && p->tetra_id == B.id) ++shared;
        if (shared != 1) continue;
        const VertexId p = A.verts[x.omit], q = B.verts[y.omit];
        if (p == q || edge_exists(p, q)) continue;
        out.push_back({A.id, B.id});
    }
    return out;
}

std::vector<EdgeKey> Triangulation::applicable_32_sites() const {
    std::vector<EdgeKey> out;
    for (const auto& e : edges()) {
        try {
            pachner_32(e);
            out.push_back(e);
        } catch (const MoveError&) {
        }
    }
    return out;
}

std::vector<std::pair<FaceKey, int>> Triangulation::inner_face_sites() const {
    std::vector<std::pair<FaceKey, int>> out;
    for (const auto& f : faces())
        if (f.inner()) out.push_back({f.key, f.copy});
    return out;
}

bool equivalent(const Triangulation& x, const Triangulation& y) {
    auto summary = [](const Triangulation& t) {
        std::multiset<std::pair<std::array<VertexId, 4>, int>> tets;
        for (const auto& tet : t.tets_) tets.insert({tet.verts, tet.sign});
        using Desc = std::pair<std::array<VertexId, 4>, VertexId>;  // verts + omitted label
        std::multiset<std::pair<Desc, Desc>> glues;
        std::multiset<Desc> open;
        for (const auto& tet : t.tets_)
            for (int k = 0; k < 4; ++k) {
                Desc d{tet.verts, tet.verts[k]};
                auto p = t.partner({tet.id, k});
                if (!p) {
                    open.insert(d);
                } else if (Slot{tet.id, k} < *p) {
                    const Tetra& o = t.tetra(p->tetra_id);
                    Desc e{o.verts, o.verts[p->omit]};
                    glues.insert(d < e ? std::make_pair(d, e) : std::make_pair(e, d));
                }
            }
        return std::make_tuple(tets, glues, open);
    };
    return summary(x) == summary(y);
}

}  // namespace pentachain
