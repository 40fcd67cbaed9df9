#include "cofil/persistent_set.hpp"

#include "cofil/errors.hpp"

#include <doctest.h>

#include <random>

using namespace cofil;

TEST_CASE("constant singleton has a one-point colimit with bijective projections") {
    Poset p = Poset::grid({2, 2});
    PersistentSet b;
    b.fibers.assign(p.size(), {"x"});
    Colimit col = colimit_persistent_set(p, b);
    CHECK(col.class_count == 1);
    for (GradeIdx q = 0; q < p.size(); ++q) {
        REQUIRE(col.projection[q].size() == 1);
        CHECK(col.projection[q].at("x") == 0);
    }
}

TEST_CASE("a merging structure map collapses the colimit") {
    Poset p = Poset::grid({2});
    PersistentSet b;
    b.fibers = {{"a", "b"}, {"c"}};
    b.maps[{0, 1}] = {{"a", "c"}, {"b", "c"}};
    Colimit col = colimit_persistent_set(p, b);
    CHECK(col.class_count == 1);
    CHECK(col.projection[0].at("a") == col.projection[0].at("b"));
    CHECK_THROWS_AS(upper_set_decompose(p, b), NotInjective);
    try {
        upper_set_decompose(p, b);
    } catch (const NotInjective& e) {
        CHECK(e.grade == 0);
    }
}

TEST_CASE("structure maps must stay inside the fibers") {
    Poset p = Poset::grid({2});
    PersistentSet b;
    b.fibers = {{"a"}, {"c"}};
    // inclusion default would need "a" in the larger fiber
    CHECK_THROWS_AS(colimit_persistent_set(p, b), Error);
    b.maps[{0, 1}] = {{"a", "c"}};
    CHECK(colimit_persistent_set(p, b).class_count == 1);
}

TEST_CASE("an upper-set supported singleton decomposes into itself") {
    Poset p = Poset::grid({2, 2});
    UpperSet u = UpperSet::principal(p, p.index_of("0,1"));
    PersistentSet b;
    b.fibers.assign(p.size(), {});
    for (GradeIdx q : u.members()) b.fibers[q] = {"pt"};
    UpperSetDecomposition dec = upper_set_decompose(p, b);
    REQUIRE(dec.upper_sets.size() == 1);
    CHECK(dec.upper_sets[0] == u);
}

TEST_CASE("decomposition accounts for every fiber element exactly once") {
    Poset p = Poset::grid({3, 3});
    PersistentSet b;
    b.fibers.assign(p.size(), {});
    UpperSet u1 = UpperSet::principal(p, p.index_of("0,1"));
    UpperSet u2 = UpperSet::principal(p, p.index_of("1,0"));
    for (GradeIdx q : u1.members()) b.insert(q, "one");
    for (GradeIdx q : u2.members()) b.insert(q, "two");
    UpperSetDecomposition dec = upper_set_decompose(p, b);
    REQUIRE(dec.upper_sets.size() == 2);
    std::size_t accounted = 0;
    for (const UpperSet& u : dec.upper_sets) accounted += u.size();
    CHECK(accounted == b.total_elements());

    // rebuild the persistent set from its classes: fibers match exactly
    PersistentSet rebuilt;
    rebuilt.fibers.assign(p.size(), {});
    for (std::size_t cls = 0; cls < dec.upper_sets.size(); ++cls)
        for (GradeIdx q : dec.upper_sets[cls].members()) {
            // find the key projecting to cls at q
            for (const auto& [key, c] : dec.colimit.projection[q])
                if (c == cls) rebuilt.insert(q, key);
        }
    CHECK(rebuilt.fibers == b.fibers);
}

TEST_CASE("same key at incomparable grades stays split until a join sees both") {
    // two-element antichain below nothing: {a, b} incomparable
    Poset p = Poset::from_covers({"a", "b"}, {});
    PersistentSet b;
    b.fibers = {{"z"}, {"z"}};
    Colimit col = colimit_persistent_set(p, b);
    CHECK(col.class_count == 2); // no zigzag connects the two occurrences

    Poset joined = Poset::from_covers({"a", "b", "top"}, {{"a", "top"}, {"b", "top"}});
    PersistentSet b2;
    b2.fibers = {{"z"}, {"z"}, {"z"}};
    CHECK(colimit_persistent_set(joined, b2).class_count == 1);
}

TEST_CASE("injective projections if and only if the decomposition succeeds") {
    std::mt19937 rng(59);
    Poset p = Poset::grid({2, 3});
    std::bernoulli_distribution coin(0.5), merge_coin(0.3);
    std::vector<std::string> keys = {"k0", "k1", "k2"};
    for (int trial = 0; trial < 60; ++trial) {
        // random inclusion-structured set: each key lives on a random upper set
        PersistentSet b;
        b.fibers.assign(p.size(), {});
        for (const std::string& k : keys) {
            std::vector<GradeIdx> seeds;
            for (GradeIdx q = 0; q < p.size(); ++q)
                if (coin(rng)) seeds.push_back(q);
            UpperSet support = UpperSet::closure(p, seeds);
            for (GradeIdx q : support.members()) b.insert(q, k);
        }
        // occasionally merge two keys along one cover pair
        bool merged = false;
        if (merge_coin(rng)) {
            for (auto& [a, c] : p.cover_pairs()) {
                if (b.fiber_contains(a, "k0") && b.fiber_contains(a, "k1") &&
                    b.fiber_contains(c, "k1")) {
                    b.maps[{a, c}] = {{"k0", "k1"}};
                    merged = true;
                    break;
                }
            }
        }

        Colimit col = colimit_persistent_set(p, b);
        bool injective = true;
        for (GradeIdx q = 0; q < p.size() && injective; ++q) {
            std::set<std::size_t> seen;
            for (const auto& [key, cls] : col.projection[q])
                if (!seen.insert(cls).second) injective = false;
        }
        if (injective) {
            UpperSetDecomposition dec = upper_set_decompose(p, b);
            std::size_t accounted = 0;
            for (const UpperSet& u : dec.upper_sets) accounted += u.size();
            CHECK(accounted == b.total_elements());
        } else {
            CHECK(merged);
            CHECK_THROWS_AS(upper_set_decompose(p, b), NotInjective);
        }
    }
}
