#ifndef COFIL_TESTUTIL_HPP
#define COFIL_TESTUTIL_HPP

#include "cofil/filtration.hpp"
#include "cofil/io.hpp"
#include "cofil/matrix.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

using namespace cofil;

inline Simplex sx(std::initializer_list<int> verts) { return Simplex(verts); }

inline OrderedComplex hollow_triangle() {
    return OrderedComplex::from_simplices({sx({0, 1}), sx({0, 2}), sx({1, 2})});
}

inline OrderedComplex full_triangle() {
    return OrderedComplex::from_simplices({sx({0, 1, 2})});
}

inline OrderedComplex path3() {
    return OrderedComplex::from_simplices({sx({0, 1}), sx({1, 2})});
}

inline OrderedComplex two_points() {
    return OrderedComplex::from_simplices({sx({0}), sx({1})});
}

inline OrderedComplex k4() {
    std::vector<Simplex> edges;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) edges.push_back(sx({a, b}));
    return OrderedComplex::from_simplices(edges);
}

/// all proper faces of the 3-simplex
inline OrderedComplex tetra_boundary() {
    return OrderedComplex::from_simplices(
        {sx({0, 1, 2}), sx({0, 1, 3}), sx({0, 2, 3}), sx({1, 2, 3})});
}

/// 6-vertex closed non-orientable surface: H1 = Z/2 over the integers
inline OrderedComplex projective_plane() {
    std::vector<Simplex> tris = {sx({0, 1, 4}), sx({0, 1, 5}), sx({0, 2, 3}),
                                 sx({0, 2, 5}), sx({0, 3, 4}), sx({1, 2, 3}),
                                 sx({1, 2, 4}), sx({1, 3, 5}), sx({2, 4, 5}),
                                 sx({3, 4, 5})};
    return OrderedComplex::from_simplices(tris);
}

inline std::string fixture_path(const std::string& name) {
    return std::string(COFIL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline FiltrationDocument load_fixture(const std::string& name) {
    return parse_filtration(read_file(fixture_path(name)));
}

// ----- random generators ----------------------------------------------------

inline OrderedComplex random_graph(std::mt19937& rng, int max_vertices = 10,
                                   double edge_prob = 0.4) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    std::bernoulli_distribution coin(edge_prob);
    int v = nv(rng);
    std::vector<Simplex> gens;
    for (int i = 0; i < v; ++i) gens.push_back(Simplex{i});
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (coin(rng)) gens.push_back(sx({a, b}));
    return OrderedComplex::from_simplices(gens);
}

inline OrderedComplex random_2complex(std::mt19937& rng, int max_vertices = 6) {
    std::uniform_int_distribution<int> nv(3, max_vertices);
    std::bernoulli_distribution tri(0.3), extra_edge(0.3);
    int v = nv(rng);
    std::vector<Simplex> gens;
    for (int i = 0; i < v; ++i) gens.push_back(Simplex{i});
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            for (int c = b + 1; c < v; ++c)
                if (tri(rng)) gens.push_back(sx({a, b, c}));
            if (extra_edge(rng)) gens.push_back(sx({a, b}));
        }
    return OrderedComplex::from_simplices(gens);
}

/// Random multi-critical filtration on a 3x3 grid: vertices enter at the
/// bottom, edges get antichains of one or two grades, and occasionally a
/// triangle enters at a grade where all of its edges are present.
inline Filtration random_filtration(std::mt19937& rng, int max_vertices = 8) {
    Poset poset = Poset::grid({3, 3});
    std::uniform_int_distribution<int> nv(3, max_vertices);
    std::uniform_int_distribution<std::size_t> grade(0, poset.size() - 1);
    std::bernoulli_distribution edge_coin(0.5), second_grade(0.4), tri_coin(0.25);

    int v = nv(rng);
    std::map<Simplex, std::vector<GradeIdx>> entry;
    std::vector<Simplex> gens;
    for (int i = 0; i < v; ++i) {
        gens.push_back(Simplex{i});
        entry.emplace(Simplex{i}, std::vector<GradeIdx>{poset.index_of("0,0")});
    }
    std::vector<Simplex> edges;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            if (!edge_coin(rng)) continue;
            Simplex e = sx({a, b});
            std::vector<GradeIdx> grades{grade(rng)};
            if (second_grade(rng)) grades.push_back(grade(rng));
            entry.emplace(e, reduce_to_antichain(poset, grades));
            edges.push_back(e);
            gens.push_back(e);
        }

    auto present_at = [&](const Simplex& s, GradeIdx q) {
        auto it = entry.find(s);
        if (it == entry.end()) return false;
        for (GradeIdx g : it->second)
            if (poset.leq(g, q)) return true;
        return false;
    };
    // triangles entering once all three edges are there
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c) {
                if (!tri_coin(rng)) continue;
                Simplex ab = sx({a, b}), ac = sx({a, c}), bc = sx({b, c});
                if (!entry.count(ab) || !entry.count(ac) || !entry.count(bc)) continue;
                std::vector<GradeIdx> candidates;
                for (GradeIdx q = 0; q < poset.size(); ++q)
                    if (present_at(ab, q) && present_at(ac, q) && present_at(bc, q))
                        candidates.push_back(q);
                if (candidates.empty()) continue;
                Simplex t = sx({a, b, c});
                entry.emplace(t, std::vector<GradeIdx>{candidates[grade(rng) %
                                                                  candidates.size()]});
                gens.push_back(t);
            }

    return Filtration(poset, OrderedComplex::from_simplices(gens), std::move(entry));
}

inline ExactMatrix random_int_matrix(std::mt19937& rng, std::size_t max_rows,
                                     std::size_t max_cols, int lo, int hi,
                                     Ring ring = Ring::z()) {
    std::uniform_int_distribution<std::size_t> nr(1, max_rows), nc(1, max_cols);
    std::uniform_int_distribution<int> val(lo, hi);
    ExactMatrix m(ring, nr(rng), nc(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, val(rng));
    return m;
}

} // namespace testutil

#endif
