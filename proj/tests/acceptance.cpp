// Integration gate: every release criterion in one binary, one line per
// criterion, exact expected values, wall-clock budgets enforced.

#include "cofil/cofiltration.hpp"
#include "cofil/oracle.hpp"
#include "cofil/precover.hpp"

#include "testutil.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace cofil;
using testutil::sx;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// ----- criterion 1: triangle minimal tree vs exhaustive enumeration --------

void triangle_minimal_tree(Check& c) {
    OrderedComplex x = testutil::hollow_triangle();
    SpanningTree greedy = order_minimal_spanning_tree(x);
    c.require(greedy.edges == std::set<Simplex>{sx({0, 1}), sx({0, 2})},
              "greedy tree is not {12, 13}");

    std::vector<Simplex> edges = x.simplices_of_dim(1);
    std::vector<std::set<Simplex>> trees;
    for (std::size_t mask = 0; mask < (1u << edges.size()); ++mask) {
        std::set<Simplex> t;
        for (int v : x.vertex_ids()) t.insert(Simplex{v});
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask & (1u << i)) t.insert(edges[i]);
        if (is_spanning_tree(x, t).ok) trees.push_back(std::move(t));
    }
    c.require(trees.size() == 3, "triangle should have exactly 3 spanning trees");
    std::set<Simplex> best = trees.front();
    for (const auto& t : trees)
        if (lex_compare(t, best, x) == Cmp::LT) best = t;
    c.require(best == greedy.as_subcomplex(),
              "greedy tree differs from the lexicographic minimum");
}

// ----- criterion 2: the 28-entry relation table on subsets of {1,2,3} ------

void lex_relation_table(Check& c) {
    OrderedComplex host =
        OrderedComplex::from_simplices({sx({1}), sx({2}), sx({3})});
    auto S = [&](std::initializer_list<int> verts) {
        std::set<Simplex> s;
        for (int v : verts) s.insert(Simplex{v});
        return s;
    };
    std::vector<std::set<Simplex>> subsets = {S({}),     S({1}),    S({2}),
                                              S({3}),    S({1, 2}), S({1, 3}),
                                              S({2, 3}), S({1, 2, 3})};
    // upper triangle, row by row; G = row after column, L = row before
    const char* expected = "GGGGGGG"
                           "LLGGLG"
                           "LGGGG"
                           "GGGG"
                           "LLG"
                           "LG"
                           "G";
    std::size_t k = 0;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j, ++k) {
            Cmp got = lex_compare(subsets[i], subsets[j], host);
            Cmp want = expected[k] == 'G' ? Cmp::GT : Cmp::LT;
            c.require(got == want,
                      "relation table mismatch at entry " + std::to_string(k));
            // antisymmetry of the table
            Cmp flip = lex_compare(subsets[j], subsets[i], host);
            c.require(flip == (want == Cmp::GT ? Cmp::LT : Cmp::GT),
                      "relation table asymmetry at entry " + std::to_string(k));
        }
    c.require(k == 28, "table should have 28 entries");
}

// ----- criterion 3: the 3x3 fixture has a cofiltration but no nested family

void grid_counterexample(Check& c) {
    FiltrationDocument doc = testutil::load_fixture("square_3x3.filt");
    const Filtration& f = doc.filtration;
    c.require(!subfiltration_of_spanning_trees(f).has_value(),
              "the fixture should admit no nested family of trees");
    SpanningCofiltration cof = cofiltration_of_spanning_trees(f);
    std::vector<std::set<Simplex>> sets;
    for (const SpanningTree& t : cof.trees) sets.push_back(t.as_subcomplex());
    c.require(is_cofiltration(f, sets), "order-minimal trees must form a cofiltration");
}

// ----- criterion 4: epimorphism suite over Z, Q, Z/2 ------------------------

void epimorphism_suite(Check& c) {
    std::vector<Filtration> inputs;
    inputs.push_back(testutil::load_fixture("square_3x3.filt").filtration);
    std::mt19937 rng(101);
    for (int i = 0; i < 100; ++i) inputs.push_back(testutil::random_filtration(rng, 8));

    for (const Filtration& f : inputs) {
        SpanningCofiltration cof = cofiltration_of_spanning_trees(f);
        for (Ring ring : {Ring::z(), Ring::q(), Ring::zp(2)}) {
            for (const GradeEpiReport& r : precover_map_and_check(f, cof, ring)) {
                c.require(r.surjective, "evaluation not surjective at grade " +
                                            f.poset().id_of(r.grade));
                // oracle nullity: independent normal-form route over Z
                OrderedComplex frame = f.at(r.grade);
                ExactMatrix d1 = boundary_matrix(frame, 1, ring);
                std::size_t nullity =
                    ring.tag() == RingTag::Z
                        ? d1.cols() - smith_normal_form(d1).rank()
                        : d1.cols() - rank(d1);
                c.require(r.image_rank == nullity,
                          "image rank differs from the boundary nullity");
            }
            if (!c.ok) return;
        }
    }
}

// ----- criterion 5: exchange characterization on random graphs -------------

void tree_characterization(Check& c) {
    std::mt19937 rng(103);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        OrderedComplex x = testutil::random_graph(rng, 10);
        SpanningTree t = order_minimal_spanning_tree(x);
        c.require(is_spanning_tree(x, t).ok, "greedy result is not a spanning tree");

        auto basis = cycle_basis_rel_tree(x, t, Ring::z());
        for (const auto& [edge, z] : basis) {
            for (const Simplex& tau : edge_exchange_candidates(t, edge)) {
                c.require(x.rank(tau) < x.rank(edge),
                          "exchange pair with a later tree edge exists");
                std::set<Simplex> swapped = t.as_subcomplex();
                swapped.insert(edge);
                swapped.erase(tau);
                c.require(is_spanning_tree(x, swapped).ok,
                          "admissible exchange does not give a spanning tree");
            }
        }
        if (basis.empty()) continue;
        int produced = 0;
        while (produced < 20) {
            Chain z(Ring::z(), 1);
            for (const auto& [edge, cyc] : basis)
                z = chain_add(z, chain_scale(cyc, coeff(rng)));
            if (z.is_zero()) continue;
            ++produced;
            c.require(!t.edges.count(leading_simplex(z, x)),
                      "a cycle leads with a tree edge");
        }
        if (!c.ok) return;
    }
}

// ----- criterion 6: n-spanning complexes ------------------------------------

void spanning_complexes(Check& c) {
    OrderedComplex tetra = testutil::tetra_boundary();
    NSpanningComplex a = n_spanning_complex(tetra, 2);
    c.require(a.kept.size() == 3, "tetrahedron boundary should keep 3 of 4 triangles");
    c.require(a.cycles_trivial && a.boundary_span_equal,
              "tetrahedron verification failed");
    c.require(image_submodule_equal(boundary_matrix(a.complex, 2, Ring::z()),
                                    boundary_matrix(tetra, 2, Ring::z())),
              "boundary spans differ on the tetrahedron");

    std::mt19937 rng(107);
    for (int trial = 0; trial < 50; ++trial) {
        OrderedComplex x = testutil::random_2complex(rng, 6);
        NSpanningComplex sp = n_spanning_complex(x, 2);

        // zero silent passes: the flags must equal a fresh oracle run
        ExactMatrix da = boundary_matrix(sp.complex, 2, Ring::z());
        ExactMatrix dx = boundary_matrix(x, 2, Ring::z());
        bool z_trivial = rank(da) == da.cols();
        bool b_equal = image_submodule_equal(da, dx);
        c.require(sp.cycles_trivial == z_trivial, "acyclicity flag is stale");
        c.require(sp.boundary_span_equal == b_equal, "boundary-span flag is stale");

        if (!sp.flagged()) {
            std::size_t dropped = x.simplices_of_dim(2).size() - sp.kept.size();
            ExactMatrix d2q = boundary_matrix(x, 2, Ring::q());
            c.require(dropped == d2q.cols() - rank(d2q),
                      "rank identity fails in an unflagged run");
        }
        if (!c.ok) return;
    }
}

// ----- criterion 7: normal-form self-checks ----------------------------------

void oracle_self_check(Check& c) {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 200; ++trial) {
        ExactMatrix m = testutil::random_int_matrix(rng, 8, 8, -9, 9);
        c.require(smith_is_valid(m, smith_normal_form(m)),
                  "smith decomposition invalid at trial " + std::to_string(trial));
        if (!c.ok) return;
    }
    HomologySummary ht = homology(testutil::hollow_triangle(), 1, Ring::z());
    c.require(ht.betti == 1 && ht.torsion.empty(), "hollow triangle H1 should be Z");
    HomologySummary h2 = homology(testutil::tetra_boundary(), 2, Ring::z());
    c.require(h2.betti == 1 && h2.torsion.empty(), "tetrahedron boundary H2 should be Z");
    c.require(homology(testutil::full_triangle(), 1, Ring::z()).betti == 0,
              "full triangle H1 should vanish");
}

// ----- criterion 8: functoriality of the 1-difference ------------------------

void functoriality(Check& c) {
    std::mt19937 rng(113);
    std::bernoulli_distribution coin(0.6);
    for (int trial = 0; trial < 50; ++trial) {
        OrderedComplex x = testutil::random_graph(rng, 8);
        std::set<Simplex> members;
        for (const Simplex& s : x.simplices_of_dim(0)) members.insert(s);
        for (const Simplex& s : x.simplices_of_dim(1))
            if (coin(rng)) members.insert(s);
        OrderedComplex a = x.subcomplex(members);
        std::map<int, int> incl;
        for (int v : a.vertex_ids()) incl.emplace(v, v);
        c.require(check_tau1_functoriality(incl, a, x),
                  "inclusion fails the 1-difference containment");
        if (!c.ok) return;
    }
    OrderedComplex wedge =
        OrderedComplex::from_simplices({sx({0, 1, 3}), sx({0, 2, 4})});
    OrderedComplex tri = testutil::full_triangle();
    std::map<int, int> fold{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 2}};
    c.require(check_tau1_functoriality(fold, wedge, tri),
              "triangle folding fails the 1-difference containment");
}

struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<void(Check&)> body;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "triangle order-minimal tree equals the exhaustive lex minimum", 1.0,
         triangle_minimal_tree},
        {2, "lexicographic relation table on subsets of {1,2,3}", 1.0,
         lex_relation_table},
        {3, "3x3 fixture: no subfiltration, cofiltration exists", 5.0,
         grid_counterexample},
        {4, "epimorphism onto the cycle module over Z, Q, Z/2", 60.0,
         epimorphism_suite},
        {5, "exchange characterization and leading simplices on random graphs", 30.0,
         tree_characterization},
        {6, "2-spanning complexes verified over Z", 60.0, spanning_complexes},
        {7, "normal-form self-checks and homology fixtures", 30.0, oracle_self_check},
        {8, "1-difference functoriality for inclusions and foldings", 10.0,
         functoriality},
    };

    int passed = 0;
    for (const Criterion& cr : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check check;
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                    start)
                          .count();
        if (secs > cr.budget_seconds)
            check.require(false, "over time budget");
        std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)%s%s\n",
                    check.ok ? "PASS" : "FAIL", cr.number, cr.name, secs,
                    cr.budget_seconds, check.ok ? "" : " -- ",
                    check.ok ? "" : check.detail.c_str());
        if (check.ok) ++passed;
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
