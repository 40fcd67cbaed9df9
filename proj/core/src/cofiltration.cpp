#include "cofil/cofiltration.hpp"

#include "cofil/errors.hpp"
#include "cofil/union_find.hpp"

#include <algorithm>
#include <functional>

namespace cofil {

std::set<Simplex> tree_complement(const OrderedComplex& frame,
                                  const std::set<Simplex>& tree) {
    std::set<Simplex> out;
    for (const Simplex& s : frame.simplices())
        if (!tree.count(s)) out.insert(s);
    return out;
}

SpanningCofiltration cofiltration_of_spanning_trees(const Filtration& f) {
    SpanningCofiltration cof;
    cof.trees.reserve(f.poset().size());
    std::vector<std::set<Simplex>> complements(f.poset().size());
    for (GradeIdx q = 0; q < f.poset().size(); ++q) {
        OrderedComplex frame = f.at(q);
        cof.trees.push_back(order_minimal_spanning_tree(frame));
        complements[q] = tree_complement(frame, cof.trees.back().as_subcomplex());
    }
    for (auto& [a, b] : f.poset().comparable_pairs())
        for (const Simplex& s : complements[a])
            if (!complements[b].count(s))
                throw Error("complement monotonicity violated between grades " +
                            f.poset().id_of(a) + " and " + f.poset().id_of(b));
    return cof;
}

bool is_cofiltration(const Filtration& f, const std::vector<std::set<Simplex>>& trees) {
    if (trees.size() != f.poset().size()) return false;
    std::vector<std::set<Simplex>> complements(trees.size());
    for (GradeIdx q = 0; q < trees.size(); ++q) {
        OrderedComplex frame = f.at(q);
        if (!is_spanning_tree(frame, trees[q]).ok) return false;
        complements[q] = tree_complement(frame, trees[q]);
    }
    for (auto& [a, b] : f.poset().comparable_pairs())
        for (const Simplex& s : complements[a])
            if (!complements[b].count(s)) return false;
    return true;
}

namespace {

struct ForestSearch {
    std::uint64_t budget;
    std::uint64_t used = 0;

    void spend() {
        if (used >= budget)
            throw SearchBudgetExceeded(
                "subfiltration search exceeded its budget of " + std::to_string(budget),
                used);
        ++used;
    }

    /// Enumerates spanning forests of `frame` that contain `required`,
    /// invoking sink for each; sink returning true stops the enumeration.
    bool enumerate(const OrderedComplex& frame, const std::set<Simplex>& required,
                   const std::function<bool(const SpanningTree&)>& sink) {
        std::vector<int> verts = frame.vertex_ids();
        std::map<int, std::size_t> idx;
        for (std::size_t i = 0; i < verts.size(); ++i) idx.emplace(verts[i], i);

        std::vector<Simplex> edges = frame.simplices_of_dim(1);
        UnionFind base(verts.size());
        std::size_t components = verts.size();
        for (const Simplex& e : edges)
            if (base.unite(idx.at(e.vertex(0)), idx.at(e.vertex(1)))) --components;
        const std::size_t target = verts.size() - components;

        UnionFind uf(verts.size());
        std::size_t have = 0;
        std::vector<Simplex> free_edges;
        for (const Simplex& e : edges) {
            if (!required.count(e)) {
                free_edges.push_back(e);
                continue;
            }
            if (!uf.unite(idx.at(e.vertex(0)), idx.at(e.vertex(1))))
                return false; // required edges already close a cycle
            ++have;
        }

        std::vector<Simplex> chosen;
        std::function<bool(std::size_t, UnionFind, std::size_t)> dfs =
            [&](std::size_t i, UnionFind state, std::size_t count) -> bool {
            spend();
            if (count == target) {
                SpanningTree t;
                t.vertices = verts;
                for (const Simplex& e : edges)
                    if (required.count(e)) t.edges.insert(e);
                t.edges.insert(chosen.begin(), chosen.end());
                return sink(t);
            }
            if (i == free_edges.size() || free_edges.size() - i < target - count)
                return false;
            const Simplex& e = free_edges[i];
            UnionFind with = state;
            if (with.unite(idx.at(e.vertex(0)), idx.at(e.vertex(1)))) {
                chosen.push_back(e);
                if (dfs(i + 1, std::move(with), count + 1)) return true;
                chosen.pop_back();
            }
            return dfs(i + 1, std::move(state), count);
        };
        return dfs(0, std::move(uf), have);
    }
};

} // namespace

std::optional<std::vector<SpanningTree>>
subfiltration_of_spanning_trees(const Filtration& f, std::uint64_t budget) {
    const auto& order = f.poset().linear_extension();
    std::vector<OrderedComplex> frames;
    frames.reserve(f.poset().size());
    for (GradeIdx q = 0; q < f.poset().size(); ++q) frames.push_back(f.at(q));

    ForestSearch search{budget};
    std::vector<SpanningTree> assigned(f.poset().size());
    std::vector<bool> done(f.poset().size(), false);

    std::function<bool(std::size_t)> place = [&](std::size_t step) -> bool {
        if (step == order.size()) return true;
        GradeIdx q = order[step];
        // nesting constraints from already-assigned comparable grades
        std::set<Simplex> required;
        for (std::size_t j = 0; j < step; ++j) {
            GradeIdx p = order[j];
            if (!f.poset().leq(p, q)) continue;
            required.insert(assigned[p].edges.begin(), assigned[p].edges.end());
        }
        return search.enumerate(frames[q], required, [&](const SpanningTree& t) {
            assigned[q] = t;
            return place(step + 1);
        });
    };

    if (place(0)) return assigned;
    return std::nullopt;
}

bool check_tau1_functoriality(const std::map<int, int>& vertex_map,
                              const OrderedComplex& x, const OrderedComplex& y) {
    SimplicialMap f(vertex_map, x, y);
    for (const Simplex& s : x.simplices())
        if (f.apply(s).dim() != s.dim())
            throw NotDimensionPreserving("image of " + s.to_string() +
                                         " collapses to a lower dimension");
    // order preservation along the sorted simplex list
    std::size_t prev_rank = 0;
    bool first = true;
    for (const Simplex& s : x.simplices()) {
        std::size_t r = y.rank(f.apply(s));
        if (!first && r < prev_rank)
            throw NotOrderPreserving("image order breaks at " + s.to_string());
        prev_rank = r;
        first = false;
    }

    SpanningTree tx = order_minimal_spanning_tree(x);
    SpanningTree ty = order_minimal_spanning_tree(y);
    OrderedComplex dx = n_difference(x, x.subcomplex(tx.as_subcomplex()), 1);
    OrderedComplex dy = n_difference(y, y.subcomplex(ty.as_subcomplex()), 1);
    for (const Simplex& s : dx.simplices())
        if (!dy.contains(f.apply(s))) return false;
    return true;
}

} // namespace cofil
