#include "cofil/spanning.hpp"

#include "cofil/errors.hpp"
#include "cofil/matrix.hpp"
#include "cofil/oracle.hpp"
#include "cofil/union_find.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <deque>
#include <map>

namespace cofil {

namespace {

std::map<int, std::size_t> vertex_index(const std::vector<int>& vertices) {
    std::map<int, std::size_t> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i) idx.emplace(vertices[i], i);
    return idx;
}

} // namespace

std::set<Simplex> SpanningTree::as_subcomplex() const {
    std::set<Simplex> out(edges.begin(), edges.end());
    for (int v : vertices) out.insert(Simplex{v});
    return out;
}

const char* to_string(TreeDefect d) {
    switch (d) {
    case TreeDefect::None: return "none";
    case TreeDefect::NotSubcomplex: return "not a subcomplex of the host";
    case TreeDefect::VertexSetDiffers: return "vertex set differs from the host";
    case TreeDefect::HasCycle: return "contains a cycle";
    case TreeDefect::ComponentsDiffer: return "component partition differs";
    }
    return "?";
}

TreeCheck is_spanning_tree(const OrderedComplex& x, const std::set<Simplex>& t) {
    for (const Simplex& s : t) {
        if (!x.contains(s)) return {false, TreeDefect::NotSubcomplex};
        if (s.dim() >= 1)
            for (std::size_t i = 0; i <= static_cast<std::size_t>(s.dim()); ++i)
                if (!t.count(s.face_dropping(i)))
                    return {false, TreeDefect::NotSubcomplex};
    }

    std::vector<int> xv = x.vertex_ids();
    std::vector<int> tv;
    for (const Simplex& s : t)
        if (s.dim() == 0) tv.push_back(s.vertex(0));
    std::sort(tv.begin(), tv.end());
    if (tv != xv) return {false, TreeDefect::VertexSetDiffers};

    auto idx = vertex_index(xv);
    UnionFind tree_uf(xv.size());
    for (const Simplex& s : t) {
        if (s.dim() != 1) continue;
        if (!tree_uf.unite(idx.at(s.vertex(0)), idx.at(s.vertex(1))))
            return {false, TreeDefect::HasCycle};
    }

    UnionFind host_uf(xv.size());
    for (const Simplex& s : x.simplices_of_dim(1))
        host_uf.unite(idx.at(s.vertex(0)), idx.at(s.vertex(1)));
    if (tree_uf.partition_labels() != host_uf.partition_labels())
        return {false, TreeDefect::ComponentsDiffer};

    return {true, TreeDefect::None};
}

TreeCheck is_spanning_tree(const OrderedComplex& x, const SpanningTree& t) {
    return is_spanning_tree(x, t.as_subcomplex());
}

SpanningTree order_minimal_spanning_tree(const OrderedComplex& x) {
    SpanningTree t;
    t.vertices = x.vertex_ids();
    auto idx = vertex_index(t.vertices);
    UnionFind uf(t.vertices.size());
    for (const Simplex& e : x.simplices_of_dim(1))
        if (uf.unite(idx.at(e.vertex(0)), idx.at(e.vertex(1)))) t.edges.insert(e);
    return t;
}

Chain tree_path_chain(const SpanningTree& t, const Simplex& edge, Ring ring) {
    if (edge.dim() != 1)
        throw DimensionMismatch("tree_path_chain expects a 1-simplex");
    auto idx = vertex_index(t.vertices);
    if (!idx.count(edge.vertex(0)) || !idx.count(edge.vertex(1)))
        throw NoPath("edge endpoint outside the tree's vertex set");

    // adjacency on tree edges
    std::vector<std::vector<std::size_t>> adj(t.vertices.size());
    for (const Simplex& e : t.edges) {
        std::size_t a = idx.at(e.vertex(0)), b = idx.at(e.vertex(1));
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    const std::size_t src = idx.at(edge.vertex(0));
    const std::size_t dst = idx.at(edge.vertex(1));
    std::vector<std::size_t> pred(t.vertices.size(), t.vertices.size());
    std::deque<std::size_t> queue{src};
    pred[src] = src;
    while (!queue.empty() && pred[dst] == t.vertices.size()) {
        std::size_t a = queue.front();
        queue.pop_front();
        for (std::size_t b : adj[a])
            if (pred[b] == t.vertices.size()) {
                pred[b] = a;
                queue.push_back(b);
            }
    }
    if (pred[dst] == t.vertices.size())
        throw NoPath("edge endpoints lie in different components of the tree");

    // walk dst -> src; the chain telescopes to the boundary of the edge
    Chain c(ring, 1);
    std::size_t cur = dst;
    while (cur != src) {
        std::size_t prev = pred[cur];
        int va = t.vertices[prev], vb = t.vertices[cur];
        // traversing from va to vb contributes +1 on [va vb] when va < vb
        c.add_term(Simplex{va, vb}, va < vb ? 1 : -1);
        cur = prev;
    }
    return c;
}

std::set<Simplex> edge_exchange_candidates(const SpanningTree& t, const Simplex& edge) {
    Chain c = tree_path_chain(t, edge, Ring::z());
    std::set<Simplex> out;
    for (const auto& [s, coeff] : c.terms()) out.insert(s);
    return out;
}

std::vector<std::pair<Simplex, Chain>> cycle_basis_rel_tree(const OrderedComplex& x,
                                                            const SpanningTree& t,
                                                            Ring ring) {
    std::vector<std::pair<Simplex, Chain>> basis;
    for (const Simplex& e : x.simplices_of_dim(1)) {
        if (t.edges.count(e)) continue;
        Chain z = Chain::unit(ring, e);
        z = chain_add(z, chain_negate(tree_path_chain(t, e, ring)));
        basis.emplace_back(e, std::move(z));
    }
    return basis;
}

namespace {

/// Incremental integer column elimination, fraction-free: a new column is
/// reduced by cross-multiplication against the stored pivots, then divided
/// by its content.
class ColumnEliminator {
public:
    bool try_insert(std::vector<Int> v) {
        using boost::multiprecision::gcd;
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            const std::size_t p = pivots_[k];
            if (v[p] == 0) continue;
            const Int a = cols_[k][p], b = v[p];
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = a * v[i] - b * cols_[k][i];
        }
        Int content = 0;
        std::size_t pivot = v.size();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (pivot == v.size()) pivot = i;
            content = gcd(content, v[i]);
        }
        if (pivot == v.size()) return false; // dependent
        for (Int& x : v) x /= content;
        cols_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    std::vector<std::vector<Int>> cols_;
    std::vector<std::size_t> pivots_;
};

} // namespace

NSpanningComplex n_spanning_complex(const OrderedComplex& x, int n) {
    if (n < 1) throw DimensionMismatch("n_spanning_complex needs n >= 1");

    std::vector<Simplex> rows = x.simplices_of_dim(n - 1);
    std::map<Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);

    NSpanningComplex out;
    out.n = n;
    ColumnEliminator elim;
    for (const Simplex& s : x.simplices_of_dim(n)) {
        std::vector<Int> col(rows.size(), 0);
        int sign = 1;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
            col[row_of.at(s.face_dropping(i))] = sign;
            sign = -sign;
        }
        if (elim.try_insert(std::move(col))) out.kept.insert(s);
    }

    std::set<Simplex> members;
    for (const Simplex& s : x.simplices())
        if (s.dim() < n) members.insert(s);
    members.insert(out.kept.begin(), out.kept.end());
    out.complex = x.subcomplex(members);

    // verify the defining conditions over Z instead of trusting the greedy
    Ring z = Ring::z();
    ExactMatrix da = boundary_matrix(out.complex, n, z);
    out.cycles_trivial = rank(da) == da.cols();
    out.boundary_span_equal = image_submodule_equal(da, boundary_matrix(x, n, z));
    return out;
}

} // namespace cofil
