#include "cofil/precover.hpp"

#include "cofil/errors.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <random>

using namespace cofil;
using testutil::sx;

namespace {

const Simplex e12 = sx({0, 1});
const Simplex e13 = sx({0, 2});
const Simplex e14 = sx({0, 3});
const Simplex e24 = sx({1, 3});
const Simplex e34 = sx({2, 3});

std::set<std::string> upper_ids(const Poset& p, const UpperSet& u) {
    std::set<std::string> out;
    for (GradeIdx g : u.members()) out.insert(p.id_of(g));
    return out;
}

} // namespace

TEST_CASE("representative sets of the fixture edges") {
    FiltrationDocument doc = testutil::load_fixture("square_3x3.filt");
    const Filtration& f = doc.filtration;
    SpanningCofiltration cof = cofiltration_of_spanning_trees(f);

    // the square's second diagonal-ish edge: same path chain everywhere
    RepresentativeSet b24 = representative_persistent_set(f, cof, e24, Ring::z());
    GradeIdx top = f.poset().index_of("2,2");
    REQUIRE(b24.set.fibers[top].size() == 1);
    const Chain& z24 = b24.cycles.at(b24.set.fibers[top][0]);
    CHECK(z24.coefficient(e24) == 1);
    CHECK(z24.coefficient(e14) == -1);
    CHECK(z24.coefficient(e12) == 1);
    CHECK(z24.term_count() == 3);

    // below every excluded grade the fiber is empty
    CHECK(b24.set.fibers[f.poset().index_of("0,1")].empty());
    CHECK(b24.set.fibers[f.poset().index_of("1,1")].empty());

    // the top edge has two distinct cycles by grade (1,2)
    RepresentativeSet b34 = representative_persistent_set(f, cof, e34, Ring::z());
    CHECK(b34.set.fibers[f.poset().index_of("1,2")].size() == 2);
    CHECK(b34.set.fibers[f.poset().index_of("1,1")].size() == 1);
    CHECK(b34.set.fibers[f.poset().index_of("2,0")].size() == 1);

    // an edge inside every tree that sees it has no representative set
    CHECK_THROWS_AS(representative_persistent_set(f, cof, e12, Ring::z()),
                    EdgeNeverExcluded);
}

TEST_CASE("the fixture precover has three upper-set summands") {
    FiltrationDocument doc = testutil::load_fixture("square_3x3.filt");
    const Filtration& f = doc.filtration;
    const Poset& p = f.poset();
    SpanningCofiltration cof = cofiltration_of_spanning_trees(f);
    Precover pc = precover(f, cof, Ring::z());

    CHECK(pc.edges == std::vector<Simplex>{e24, e34});
    CHECK(pc.decomposition.size() == 3);
    CHECK(pc.evaluation.size() == 3);

    // match classes by their cycles and check the upper sets
    bool saw_z24 = false, saw_za = false, saw_zb = false;
    for (const auto& [key, upper] : pc.decomposition) {
        const Chain& z = pc.evaluation.at(key);
        if (key.edge == e24) {
            saw_z24 = true;
            CHECK(z.coefficient(e24) == 1);
            CHECK(upper_ids(p, upper) ==
                  std::set<std::string>{"0,2", "1,2", "2,1", "2,2"});
        } else if (z.term_count() == 4) {
            // the square cycle through all four sides
            saw_za = true;
            CHECK(z.coefficient(e34) == 1);
            CHECK(z.coefficient(e13) == 1);
            CHECK(z.coefficient(e12) == -1);
            CHECK(z.coefficient(e24) == -1);
            CHECK(upper_ids(p, upper) ==
                  std::set<std::string>{"1,1", "1,2", "2,1", "2,2"});
        } else {
            // the triangle cycle through the diagonal
            saw_zb = true;
            CHECK(z.coefficient(e34) == 1);
            CHECK(z.coefficient(e14) == -1);
            CHECK(z.coefficient(e13) == 1);
            CHECK(upper_ids(p, upper) ==
                  std::set<std::string>{"1,2", "2,0", "2,1", "2,2"});
        }
    }
    CHECK(saw_z24);
    CHECK(saw_za);
    CHECK(saw_zb);
}

TEST_CASE("the evaluation is surjective onto the cycle module at every grade") {
    FiltrationDocument doc = testutil::load_fixture("square_3x3.filt");
    const Filtration& f = doc.filtration;
    SpanningCofiltration cof = cofiltration_of_spanning_trees(f);

    for (Ring ring : {Ring::z(), Ring::q(), Ring::zp(2)}) {
        Precover pc = precover(f, cof, ring);
        std::vector<GradeEpiReport> table = precover_map_and_check(f, pc);
        REQUIRE(table.size() == 9);
        for (const GradeEpiReport& r : table) {
            CHECK(r.surjective);
            CHECK(r.image_rank == r.z1_rank);
        }
        auto row = [&](const char* id) {
            for (const GradeEpiReport& r : table)
                if (f.poset().id_of(r.grade) == id) return r;
            FAIL("missing grade");
            return table.front();
        };
        CHECK(row("0,0").precover_rank == 0);
        CHECK(row("0,0").z1_rank == 0);
        CHECK(row("1,1").precover_rank == 1);
        CHECK(row("1,1").image_rank == 1);
        CHECK(row("1,1").z1_rank == 1);
        CHECK(row("2,2").precover_rank == 3);
        CHECK(row("2,2").image_rank == 2);
        CHECK(row("2,2").z1_rank == 2);
        require_epimorphism(f.poset(), table);
    }
}

TEST_CASE("an everywhere-acyclic filtration has an empty precover") {
    Poset p = Poset::grid({2, 2});
    std::map<Simplex, std::vector<GradeIdx>> entry;
    std::vector<Simplex> gens;
    for (int v = 0; v < 3; ++v) {
        gens.push_back(Simplex{v});
        entry.emplace(Simplex{v}, std::vector<GradeIdx>{0});
    }
    gens.push_back(sx({0, 1}));
    entry.emplace(sx({0, 1}), std::vector<GradeIdx>{p.index_of("0,1")});
    gens.push_back(sx({1, 2}));
    entry.emplace(sx({1, 2}), std::vector<GradeIdx>{p.index_of("1,0")});
    Filtration f(p, OrderedComplex::from_simplices(gens), entry);

    SpanningCofiltration cof = cofiltration_of_spanning_trees(f);
    Precover pc = precover(f, cof, Ring::z());
    CHECK(pc.edges.empty());
    CHECK(pc.decomposition.empty());
    for (const GradeEpiReport& r : precover_map_and_check(f, pc)) {
        CHECK(r.surjective); // vacuously
        CHECK(r.z1_rank == 0);
    }
}

TEST_CASE("a single-grade hollow triangle gives one principal summand") {
    Poset p = Poset::grid({1});
    OrderedComplex x = testutil::hollow_triangle();
    std::map<Simplex, std::vector<GradeIdx>> entry;
    for (const Simplex& s : x.simplices()) entry.emplace(s, std::vector<GradeIdx>{0});
    Filtration f(p, x, entry);
    SpanningCofiltration cof = cofiltration_of_spanning_trees(f);
    Precover pc = precover(f, cof, Ring::z());
    REQUIRE(pc.decomposition.size() == 1);
    const UpperSet& u = pc.decomposition.begin()->second;
    CHECK(u.members() == std::vector<GradeIdx>{0});
}

TEST_CASE("random filtrations stay surjective over all three rings") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        Filtration f = testutil::random_filtration(rng);
        SpanningCofiltration cof = cofiltration_of_spanning_trees(f);
        for (Ring ring : {Ring::z(), Ring::q(), Ring::zp(2)}) {
            std::vector<GradeEpiReport> table = precover_map_and_check(f, cof, ring);
            for (const GradeEpiReport& r : table) CHECK(r.surjective);
        }
    }
}
