// Command-line driver: pentagon verification, complex construction,
// invariant tables, and Pachner-move experiments on triangulation files.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pentachain/coordinate_maps.hpp"
#include "pentachain/io.hpp"

using namespace pentachain;

namespace {

constexpr int kExitIdentityFailure = 1;
constexpr int kExitSamplingFailure = 2;
constexpr int kExitBoundaryComponents = 3;
constexpr int kExitMoveInapplicable = 4;
constexpr int kExitUsage = 64;
constexpr int kExitDataError = 65;

struct CommonOpts {
    std::size_t n = 1;
    std::uint64_t seed = 1;
    int trials = 10;
    long long bound = 100;
    int jobs = 1;
    bool timing = false;
};

long long ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

VertexId parse_vertex(const std::string& s) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size() || v <= 0) throw ParseError("bad vertex label '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad vertex label '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

FaceKey parse_face(const std::string& token) {
    std::vector<VertexId> verts;
    if (token.find('.') != std::string::npos) {
        for (const auto& part : split(token, '.')) verts.push_back(parse_vertex(part));
    } else {
        for (char c : token) {
            if (c < '1' || c > '9') throw ParseError("bad face '" + token + "'");
            verts.push_back(c - '0');
        }
    }
    if (verts.size() != 3) throw ParseError("face needs three vertices: '" + token + "'");
    return sorted_face(verts[0], verts[1], verts[2]);
}

// Coloring spec: comma-separated face:component tokens, e.g. "123:0,124:1"
// or "1.2.3:0" for multi-digit labels.
Coloring parse_coloring(const std::string& spec) {
    std::vector<std::pair<FaceKey, std::size_t>> members;
    for (const auto& token : split(spec, ',')) {
        const auto colon = token.find(':');
        const std::string face = token.substr(0, colon);
        std::size_t comp = 0;
        if (colon != std::string::npos) comp = std::stoul(token.substr(colon + 1));
        members.push_back({parse_face(face), comp});
    }
    return Coloring::of(std::move(members));
}

int parse_tetra_id(const std::string& s) {
    std::string t = s;
    if (!t.empty() && (t[0] == 'T' || t[0] == 't')) t = t.substr(1);
    try {
        return std::stoi(t);
    } catch (const std::exception&) {
        throw ParseError("bad tetrahedron id '" + s + "'");
    }
}

std::pair<Triangulation, CoordinateAssignment> load_complex(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    return complex_from_json(j);
}

void emit(const Json& j, const std::string& output) {
    const std::string text = j.dump(2) + "\n";
    if (output.empty() || output == "-")
        std::cout << text;
    else
        write_file(output, text);
}

// --- verify-pentagon ---------------------------------------------------------

int run_verify_pentagon(const CommonOpts& opt, bool scalar, bool matrix) {
    Triangulation lhs = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
    const Triangulation rhs = lhs.pachner_23(1, 2);  // constrains all vertex pairs

    struct Trial {
        std::vector<std::string> lines;
        bool equal = true;
        bool sampling_failed = false;
    };
    std::vector<Trial> results(opt.trials);

    auto run_one = [&](int index) {
        Trial& out = results[index];
        const std::uint64_t trial_seed = opt.seed + static_cast<std::uint64_t>(index);
        Sampler rng(trial_seed);
        CoordinateAssignment zeta;
        try {
            zeta = random_coordinates(rhs, opt.n, rng, opt.bound);
        } catch (const SingularMatrixError&) {
            out.sampling_failed = true;
            return;
        }
        auto record = [&](const char* identity, const PentagonReport& rep, long long ms) {
            Json j = pentagon_report_to_json(rep, identity, zeta.n, trial_seed);
            if (opt.timing) j["elapsed_ms"] = ms;
            out.lines.push_back(j.dump());
            out.equal = out.equal && rep.equal;
        };
        if (scalar) {
            const auto t0 = std::chrono::steady_clock::now();
            record("pentagon-scalar", verify_pentagon_scalar(zeta), ms_since(t0));
        }
        if (matrix) {
            const auto t0 = std::chrono::steady_clock::now();
            record("pentagon-matrix", verify_pentagon_matrix(zeta), ms_since(t0));
        }
    };

    const int jobs = std::max(1, std::min<int>(opt.jobs, opt.trials));
    if (jobs == 1) {
        for (int i = 0; i < opt.trials; ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < opt.trials; i = next.fetch_add(1)) run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    int ok = 0, failed = 0;
    for (const auto& r : results) {
        if (r.sampling_failed) {
            std::cerr << "error: could not sample invertible coordinates after bounded retries\n";
            return kExitSamplingFailure;
        }
        for (const auto& line : r.lines) std::cout << line << "\n";
        (r.equal ? ok : failed)++;
    }
    std::cerr << "pentagon: " << ok << "/" << opt.trials << " trials equal\n";
    return failed == 0 ? 0 : kExitIdentityFailure;
}

// --- invariant ---------------------------------------------------------------

int run_invariant(const std::string& input, const std::string& coloring_spec,
                  bool all_colorings, const std::string& output) {
    const auto [tri, zeta] = load_complex(input);
    const auto violations = tri.validate();
    for (const auto& v : violations) {
        if (v.find("boundary has") != std::string::npos) {
            std::cerr << "error: " << v
                      << "; the invariant is defined for manifolds with a one-component "
                         "boundary\n";
            return kExitBoundaryComponents;
        }
    }
    if (!violations.empty()) {
        std::cerr << "error: invalid complex: " << violations.front() << "\n";
        return kExitDataError;
    }
    check_coordinates(zeta, tri);

    std::vector<InvariantValue> rows;
    if (all_colorings) {
        rows = invariant_table(tri, zeta);
    } else {
        rows.push_back(invariant_IC(tri, zeta, parse_coloring(coloring_spec)));
    }
    Json out;
    out["n"] = zeta.n;
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(invariant_to_json(r));
    out["invariants"] = std::move(arr);
    emit(out, output);
    std::cerr << "invariant: " << rows.size() << " coloring(s)\n";
    return 0;
}

// --- pachner -----------------------------------------------------------------

int run_pachner(const std::string& input, const std::string& move, const std::string& tetras,
                const std::string& edge, int tetra_id, VertexId vertex, VertexId new_vertex,
                const std::string& face_spec, std::uint64_t coord_seed, long long coord_bound,
                bool check_invariants, const std::string& output) {
    auto [tri, zeta] = load_complex(input);
    check_coordinates(zeta, tri);

    std::vector<InvariantValue> before;
    if (check_invariants) before = invariant_table(tri, zeta);

    Triangulation moved;
    CoordinateAssignment zeta2 = zeta;
    try {
        if (move == "2-3") {
            const auto parts = split(tetras, ',');
            if (parts.size() != 2) throw ParseError("--tetras needs two ids, e.g. T1,T2");
            moved = tri.pachner_23(parse_tetra_id(parts[0]), parse_tetra_id(parts[1]));
        } else if (move == "3-2") {
            const auto parts = split(edge, ',');
            if (parts.size() != 2) throw ParseError("--edge needs two vertices, e.g. 4,5");
            moved = tri.pachner_32(sorted_edge(parse_vertex(parts[0]), parse_vertex(parts[1])));
        } else if (move == "1-4") {
            const VertexId w = new_vertex > 0 ? new_vertex : tri.fresh_vertex_label();
            moved = tri.pachner_14(tetra_id, w);
            Sampler rng(coord_seed);
            complete_random_coordinates(zeta2, moved, rng, coord_bound);
        } else if (move == "4-1") {
            moved = tri.pachner_41(vertex);
            zeta2.zeta.erase(vertex);
        } else if (move == "0-2") {
            std::string token = face_spec;
            int copy = 0;
            if (const auto at = token.find('@'); at != std::string::npos) {
                copy = std::stoi(token.substr(at + 1));
                token = token.substr(0, at);
            }
            FaceKey key{};
            if (token.find(',') != std::string::npos) {
                const auto parts = split(token, ',');
                if (parts.size() != 3) throw ParseError("--face needs three vertices");
                key = sorted_face(parse_vertex(parts[0]), parse_vertex(parts[1]),
                                  parse_vertex(parts[2]));
            } else {
                key = parse_face(token);
            }
            const VertexId w = new_vertex > 0 ? new_vertex : tri.fresh_vertex_label();
            moved = tri.move_02(key, copy, w);
            Sampler rng(coord_seed);
            complete_random_coordinates(zeta2, moved, rng, coord_bound);
        } else {
            std::cerr << "error: unknown move '" << move << "'\n";
            return kExitUsage;
        }
    } catch (const MoveError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMoveInapplicable;
    }

    emit(complex_to_json(moved, zeta2), output);

    if (check_invariants) {
        const auto after = invariant_table(moved, zeta2);
        bool match = before.size() == after.size();
        Json diff = Json::array();
        for (std::size_t k = 0; match && k < before.size(); ++k) {
            const bool row_ok = before[k].coloring == after[k].coloring &&
                                before[k].value == after[k].value;
            Json row;
            row["coloring"] = before[k].coloring.str();
            row["before"] = scalar_io<Scalar>::str(before[k].value);
            row["after"] = scalar_io<Scalar>::str(after[k].value);
            row["match"] = row_ok;
            diff.push_back(std::move(row));
            match = match && row_ok;
        }
        Json rep;
        rep["all_match"] = match;
        rep["rows"] = std::move(diff);
        std::cout << rep.dump(2) << "\n";
        std::cerr << (match ? "invariants match across the move\n"
                            : "INVARIANT MISMATCH across the move\n");
        if (!match) return kExitIdentityFailure;
    }
    return 0;
}

// --- build-complex -----------------------------------------------------------

int run_build_complex(const std::string& input, const std::string& coloring_spec,
                      const std::string& output) {
    const auto [tri, zeta] = load_complex(input);
    check_coordinates(zeta, tri);
    const auto scheme = ComplexScheme::build(tri, zeta.n);
    Coloring coloring = coloring_spec.empty() ? enumerate_colorings(scheme).front()
                                              : parse_coloring(coloring_spec);
    const auto data = build_complex(tri, zeta, coloring);
    const auto rep = verify_complex(data);
    Json out = matrices_to_json(data);
    out["checks"] = {{"f3_f2_zero", rep.f3_f2_zero},
                     {"f4_f3_zero", rep.f4_f3_zero},
                     {"rank_f2", rep.rank_f2},
                     {"rank_f3", rep.rank_f3},
                     {"rank_f4", rep.rank_f4},
                     {"acyclic", rep.acyclic}};
    emit(out, output);
    return rep.ok() ? 0 : kExitIdentityFailure;
}

// --- gen-coords --------------------------------------------------------------

int run_gen_coords(const std::string& input, std::size_t n, std::uint64_t seed, long long bound,
                   const std::string& output) {
    auto [tri, old_zeta] = load_complex(input);
    Sampler rng(seed);
    CoordinateAssignment zeta;
    try {
        zeta = random_coordinates(tri, n, rng, bound);
    } catch (const SingularMatrixError&) {
        std::cerr << "error: could not sample invertible coordinates\n";
        return kExitSamplingFailure;
    }
    emit(complex_to_json(tri, zeta), output);
    return 0;
}

// --- selftest ----------------------------------------------------------------

struct Scorecard {
    Json results = Json::array();
    bool all_ok = true;

    void add(const std::string& name, bool ok, const std::string& detail = "") {
        Json j;
        j["check"] = name;
        j["pass"] = ok;
        if (!detail.empty()) j["detail"] = detail;
        results.push_back(std::move(j));
        std::cerr << (ok ? "[PASS] " : "[FAIL] ") << name
                  << (detail.empty() ? "" : " - " + detail) << "\n";
        all_ok = all_ok && ok;
    }
};

int run_selftest(const std::string& only, std::uint64_t seed, int trials) {
    Scorecard card;
    Sampler rng(seed);
    auto want = [&](const char* section) { return only.empty() || only == section; };

    if (want("grassmann")) {
        bool lemma_mult = true, lemma_int = true;
        for (int t = 0; t < trials; ++t) {
            const std::size_t m = 4 + rng.below(3);
            const std::size_t p = 1 + rng.below(2), q = 1 + rng.below(2);
            if (p + q > m) continue;
            ExactMatrix a = rng.matrix(p, m, 5), b = rng.matrix(q, m, 5);
            ExactMatrix c(p + q, m);
            for (std::size_t j = 0; j < m; ++j) {
                for (std::size_t i = 0; i < p; ++i) c(i, j) = a(i, j);
                for (std::size_t i = 0; i < q; ++i) c(p + i, j) = b(i, j);
            }
            std::vector<int> gens(m);
            for (std::size_t i = 0; i < m; ++i) gens[i] = static_cast<int>(i);
            lemma_mult &= (gen_fun(c, gens) == gen_fun(a, gens) * gen_fun(b, gens));
            std::vector<int> inner;
            for (std::size_t j = 0; j < m && inner.size() < p + q; ++j)
                if (rng.below(3) == 0) inner.push_back(static_cast<int>(j));
            std::vector<int> fold(inner.rbegin(), inner.rend());
            lemma_int &=
                (gen_fun_inner(c, gens, inner) == berezin_multi(gen_fun(c, gens), fold));
        }
        card.add("concatenation products of generating functions", lemma_mult);
        card.add("inner generating function equals the iterated integral", lemma_int);
    }

    if (want("maps")) {
        bool ff21 = true, ff32 = true;
        for (int t = 0; t < trials; ++t) {
            const std::size_t n = 1 + t % 2;
            const auto tri = Triangulation::single_tetrahedron();
            CoordinateAssignment zeta;
            try {
                zeta = random_coordinates(tri, n, rng, 20, 64);
            } catch (const SingularMatrixError&) {
                continue;
            }
            AffineParams par{rng.invertible_matrix(n, 10), rng.matrix(n, n, 10)};
            const auto z = f1_apply(par, zeta);
            for (VertexId i = 1; i <= 4 && ff21; ++i)
                for (VertexId j = i + 1; j <= 4; ++j)
                    for (VertexId k = j + 1; k <= 4; ++k)
                        ff21 &= (f2_apply(z, zeta, i, j, k) == ExactMatrix::identity(n));
            CoordinateAssignment zp;
            try {
                zp = random_coordinates(tri, n, rng, 20, 64);
            } catch (const SingularMatrixError&) {
                continue;
            }
            PointAssignment pts;
            pts.n = n;
            pts.z = zp.zeta;
            for (VertexId v : {1, 2, 3, 4})
                ff32 &= (f3_apply(pts, zeta, {1, 2, 3, 4}, v) == ExactMatrix::identity(n));
        }
        card.add("F2 after F1 is constant", ff21);
        card.add("F3 after F2 is constant", ff32);
    }

    if (want("complex")) {
        bool ok = true;
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            const auto ball = Triangulation::single_tetrahedron().pachner_14(1, 5);
            const auto zeta = random_coordinates(ball, n, rng, 20, 64);
            const auto scheme = ComplexScheme::build(ball, n);
            const auto data = build_complex(ball, zeta, enumerate_colorings(scheme).front());
            const auto rep = verify_complex(data);
            ok &= rep.f3_f2_zero && rep.f4_f3_zero;
        }
        card.add("complex conditions f3 f2 = 0 and f4 f3 = 0", ok);
    }

    if (want("rank")) {
        bool ok = true;
        const auto lhs = Triangulation::from_tetra_list({{1, 2, 3, 4}, {5, 1, 2, 3}});
        const auto rhs = lhs.pachner_23(1, 2);
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            const auto zeta = random_coordinates(rhs, n, rng, 20, 64);
            ok &= (boundary_conditions_rank(lhs, zeta) == 3 * n);
            ok &= (boundary_conditions_rank(rhs, zeta) == 3 * n);
        }
        card.add("boundary conditions have rank 3n", ok);
    }

    if (want("weight")) {
        const auto tri = Triangulation::single_tetrahedron();
        const auto zeta2 = random_coordinates(tri, 2, rng, 20, 64);
        const GeneratorTable t2 = GeneratorTable::for_complex(tri, 2);
        card.add("matrix weight has 60 monomials at n=2",
                 matrix_weight(t2, zeta2, tri.tetras()[0]).term_count() == 60);
        bool gauge = true;
        const GeneratorTable t1 = GeneratorTable::for_complex(tri, 1);
        for (int t = 0; t < trials; ++t) {
            const auto zeta = random_coordinates(tri, 1, rng, 20, 64);
            gauge &= (gen_fun(scaled_tetra_block(zeta, {1, 2, 3, 4}),
                              t1.tetra_gens(tri.tetras()[0])) ==
                      scalar_weight(t1, zeta, {1, 2, 3, 4}));
        }
        card.add("gauge-scaled weight reduces to the scalar weight", gauge);
    }

    Json out;
    out["results"] = card.results;
    out["pass"] = card.all_ok;
    std::cout << out.dump(2) << "\n";
    return card.all_ok ? 0 : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pentagon-equation and torsion-invariant calculator"};
    app.require_subcommand(1);

    CommonOpts opt;

    auto* vp = app.add_subcommand("verify-pentagon", "check the pentagon identities on random data");
    bool vp_scalar = false, vp_matrix = false;
    vp->add_flag("--scalar", vp_scalar, "scalar identity (n = 1)");
    vp->add_flag("--matrix", vp_matrix, "matrix identity");
    vp->add_option("--n", opt.n, "matrix size")->check(CLI::Range(std::size_t{1}, std::size_t{8}));
    vp->add_option("--trials", opt.trials, "number of random trials")->check(CLI::PositiveNumber);
    vp->add_option("--seed", opt.seed, "base seed");
    vp->add_option("--bound", opt.bound, "coefficient magnitude bound")->check(CLI::PositiveNumber);
    vp->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    vp->add_flag("--timing", opt.timing, "include elapsed_ms in reports");

    auto* inv = app.add_subcommand("invariant", "compute I_C for a triangulation file");
    std::string in_path, out_path, coloring_spec;
    bool all_colorings = false;
    inv->add_option("--input", in_path, "triangulation JSON")->required();
    inv->add_option("--coloring", coloring_spec, "coloring spec, e.g. 123:0,124:0");
    inv->add_flag("--all-colorings", all_colorings, "enumerate every coloring");
    inv->add_option("--output", out_path, "output path (default stdout)");

    auto* pk = app.add_subcommand("pachner", "apply a move and optionally compare invariants");
    std::string pk_in, pk_out, pk_move, pk_tetras, pk_edge, pk_face;
    int pk_tetra = -1;
    VertexId pk_vertex = -1, pk_new_vertex = -1;
    std::uint64_t pk_coord_seed = 1;
    long long pk_coord_bound = 100;
    bool pk_check = false;
    pk->add_option("--input", pk_in, "triangulation JSON")->required();
    pk->add_option("--move", pk_move, "one of 2-3, 3-2, 1-4, 4-1, 0-2")->required();
    pk->add_option("--tetras", pk_tetras, "two tetrahedron ids for 2-3, e.g. T1,T2");
    pk->add_option("--edge", pk_edge, "inner edge for 3-2, e.g. 4,5");
    pk->add_option("--tetra", pk_tetra, "tetrahedron id for 1-4");
    pk->add_option("--vertex", pk_vertex, "inner vertex for 4-1");
    pk->add_option("--new-vertex", pk_new_vertex, "fresh vertex label for 1-4 / 0-2");
    pk->add_option("--face", pk_face, "inner face for 0-2, e.g. 1,2,3 or 123[@copy]");
    pk->add_option("--coord-seed,--coordinate", pk_coord_seed,
                   "seed for the new vertex coordinate");
    pk->add_option("--coord-bound", pk_coord_bound, "coefficient bound for new coordinates");
    pk->add_flag("--check-invariants", pk_check, "recompute invariants and compare");
    pk->add_option("--output", pk_out, "output path (default stdout)");

    auto* bc = app.add_subcommand("build-complex", "emit labeled f2/f3/f4 matrices");
    std::string bc_in, bc_out, bc_coloring;
    bc->add_option("--input", bc_in, "triangulation JSON")->required();
    bc->add_option("--coloring", bc_coloring, "coloring spec (default: first canonical)");
    bc->add_option("--output", bc_out, "output path (default stdout)");

    auto* gc = app.add_subcommand("gen-coords", "populate random vertex coordinates");
    std::string gc_in, gc_out;
    std::size_t gc_n = 1;
    std::uint64_t gc_seed = 1;
    long long gc_bound = 100;
    gc->add_option("--input", gc_in, "triangulation JSON")->required();
    gc->add_option("--n", gc_n, "matrix size")->check(CLI::Range(std::size_t{1}, std::size_t{8}));
    gc->add_option("--seed", gc_seed, "seed");
    gc->add_option("--bound", gc_bound, "coefficient magnitude bound")->check(CLI::PositiveNumber);
    gc->add_option("--output", gc_out, "output path (default stdout)");

    auto* st = app.add_subcommand("selftest", "run the built-in property suite");
    std::string st_only;
    std::uint64_t st_seed = 1;
    int st_trials = 25;
    st->add_option("--only", st_only,
                   "restrict to one section: grassmann, maps, complex, rank, weight");
    st->add_option("--seed", st_seed, "seed");
    st->add_option("--trials", st_trials, "randomized trials per check")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (const char* env = std::getenv("PENTACHAIN_JOBS")) {
        try {
            opt.jobs = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }

    try {
        if (vp->parsed()) {
            if (!vp_scalar && !vp_matrix) vp_scalar = vp_matrix = true;
            if (vp_scalar && opt.n != 1) {
                std::cerr << "error: the scalar identity requires --n 1\n";
                return kExitUsage;
            }
            return run_verify_pentagon(opt, vp_scalar, vp_matrix);
        }
        if (inv->parsed()) {
            if (coloring_spec.empty() && !all_colorings) {
                std::cerr << "error: pass --coloring or --all-colorings\n";
                return kExitUsage;
            }
            return run_invariant(in_path, coloring_spec, all_colorings, out_path);
        }
        if (pk->parsed())
            return run_pachner(pk_in, pk_move, pk_tetras, pk_edge, pk_tetra, pk_vertex,
                               pk_new_vertex, pk_face, pk_coord_seed, pk_coord_bound, pk_check,
                               pk_out);
        if (bc->parsed()) return run_build_complex(bc_in, bc_coloring, bc_out);
        if (gc->parsed()) return run_gen_coords(gc_in, gc_n, gc_seed, gc_bound, gc_out);
        if (st->parsed()) return run_selftest(st_only, st_seed, st_trials);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const SingularMatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSamplingFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}
