#include <benchmark/benchmark.h>

#include "cofil/cofiltration.hpp"
#include "cofil/oracle.hpp"
#include "cofil/precover.hpp"

#include <random>

using namespace cofil;

namespace {

OrderedComplex random_graph(std::mt19937& rng, int vertices, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Simplex> gens;
    for (int i = 0; i < vertices; ++i) gens.push_back(Simplex{i});
    for (int a = 0; a < vertices; ++a)
        for (int b = a + 1; b < vertices; ++b)
            if (coin(rng)) gens.push_back(Simplex{a, b});
    return OrderedComplex::from_simplices(gens);
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> val(-9, 9);
    ExactMatrix m(Ring::z(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, val(rng));
    return m;
}

Filtration grid_fixture() {
    Poset p = Poset::grid({3, 3});
    std::map<Simplex, std::vector<GradeIdx>> entry;
    std::vector<Simplex> gens;
    for (int v = 0; v < 4; ++v) {
        gens.push_back(Simplex{v});
        entry.emplace(Simplex{v}, std::vector<GradeIdx>{p.index_of("0,0")});
    }
    auto add = [&](Simplex e, std::vector<std::string> grades) {
        std::vector<GradeIdx> g;
        for (const auto& id : grades) g.push_back(p.index_of(id));
        entry.emplace(e, g);
        gens.push_back(std::move(e));
    };
    add(Simplex{0, 1}, {"0,1"});
    add(Simplex{1, 3}, {"0,1"});
    add(Simplex{0, 2}, {"1,0"});
    add(Simplex{2, 3}, {"1,0"});
    add(Simplex{0, 3}, {"0,2", "2,0"});
    return Filtration(p, OrderedComplex::from_simplices(gens), entry);
}

} // namespace

static void BM_OrderMinimalTree(benchmark::State& state) {
    std::mt19937 rng(1);
    OrderedComplex x = random_graph(rng, static_cast<int>(state.range(0)), 0.4);
    for (auto _ : state) {
        SpanningTree t = order_minimal_spanning_tree(x);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OrderMinimalTree)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937 rng(2);
    ExactMatrix m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        SmithDecomposition snf = smith_normal_form(m);
        benchmark::DoNotOptimize(snf);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 16)->Complexity();

static void BM_PrecoverGridFixture(benchmark::State& state) {
    Filtration f = grid_fixture();
    for (auto _ : state) {
        SpanningCofiltration cof = cofiltration_of_spanning_trees(f);
        Precover pc = precover(f, cof, Ring::z());
        auto table = precover_map_and_check(f, pc);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_PrecoverGridFixture);

static void BM_SubfiltrationSearch(benchmark::State& state) {
    Filtration f = grid_fixture();
    for (auto _ : state) {
        auto family = subfiltration_of_spanning_trees(f);
        benchmark::DoNotOptimize(family);
    }
}
BENCHMARK(BM_SubfiltrationSearch);

BENCHMARK_MAIN();
