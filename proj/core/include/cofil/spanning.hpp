#ifndef COFIL_SPANNING_HPP
#define COFIL_SPANNING_HPP

#include "cofil/chain.hpp"
#include "cofil/complex.hpp"

#include <optional>
#include <set>
#include <vector>

namespace cofil {

/// Homological spanning tree (possibly disconnected forest): all vertices
/// of the host, an acyclic edge set, and the same connected-component
/// partition as the host.
struct SpanningTree {
    std::vector<int> vertices; // host vertices, sorted
    std::set<Simplex> edges;   // 1-simplices

    /// vertices + edges as an explicit simplex set
    std::set<Simplex> as_subcomplex() const;
};

enum class TreeDefect {
    None,
    NotSubcomplex,    // contains simplices outside the host / missing faces
    VertexSetDiffers, // 0-simplices differ from the host's
    HasCycle,         // boundary not injective on 1-chains
    ComponentsDiffer, // component partition differs from the host's
};

struct TreeCheck {
    bool ok = false;
    TreeDefect defect = TreeDefect::None;
    explicit operator bool() const { return ok; }
};

const char* to_string(TreeDefect d);

/// Checks the three spanning-tree conditions. Acyclicity is a union-find
/// scan; the boundary-equality condition is checked as equality of the
/// connected-component partitions, which is equivalent over any PID.
TreeCheck is_spanning_tree(const OrderedComplex& x, const std::set<Simplex>& t);
TreeCheck is_spanning_tree(const OrderedComplex& x, const SpanningTree& t);

/// Greedy over the edges in increasing simplicial order, accepting an edge
/// iff it joins two distinct components. The result is the lexicographic
/// minimum of all spanning trees of x.
SpanningTree order_minimal_spanning_tree(const OrderedComplex& x);

/// The unique 1-chain c in T with boundary equal to the boundary of the
/// edge, found by walking the tree path between the endpoints. All
/// coefficients are +1 or -1. Throws NoPath when the endpoints lie in
/// different components of T.
Chain tree_path_chain(const SpanningTree& t, const Simplex& edge, Ring ring);

/// Support of the tree path chain: exactly the edges tau for which
/// T + edge - tau is again a spanning tree.
std::set<Simplex> edge_exchange_candidates(const SpanningTree& t, const Simplex& edge);

/// For each edge of x outside t, the fundamental cycle edge - path(edge).
/// The cycles form a basis of the 1-cycle module of x.
std::vector<std::pair<Simplex, Chain>> cycle_basis_rel_tree(const OrderedComplex& x,
                                                            const SpanningTree& t,
                                                            Ring ring);

/// Higher-dimensional spanning subcomplex: the full (n-1)-skeleton plus a
/// greedy-maximal set of n-simplices keeping the boundary injective.
struct NSpanningComplex {
    int n = 0;
    OrderedComplex complex;      // the subcomplex A
    std::set<Simplex> kept;      // accepted n-simplices
    bool boundary_span_equal = false; // B_{n-1}(A) = B_{n-1}(X) over Z
    bool cycles_trivial = false;      // Z_n(A) = 0
    /// Span verification failed: the result is still usable but the
    /// boundary-span or acyclicity check did not pass.
    bool flagged() const { return !(boundary_span_equal && cycles_trivial); }
};

/// Greedy over the n-simplices in simplicial order, accepting a simplex
/// iff its boundary column is independent of the accepted ones over the
/// fraction field (fraction-free incremental elimination). The two
/// defining conditions are then verified exactly over Z and flagged on
/// failure, never silently assumed.
NSpanningComplex n_spanning_complex(const OrderedComplex& x, int n);

} // namespace cofil

#endif
