#ifndef COFIL_COFILTRATION_HPP
#define COFIL_COFILTRATION_HPP

#include "cofil/filtration.hpp"
#include "cofil/spanning.hpp"

#include <cstdint>
#include <optional>

namespace cofil {

/// Per-grade spanning trees whose complements grow monotonically: for
/// q <= q' the simplices of X^q outside T^q stay outside T^{q'}.
struct SpanningCofiltration {
    std::vector<SpanningTree> trees; // indexed by grade

    std::set<Simplex> tree_at(GradeIdx q) const { return trees[q].as_subcomplex(); }
};

/// The set difference X^q \ T^q (all dimensions).
std::set<Simplex> tree_complement(const OrderedComplex& frame, const std::set<Simplex>& tree);

/// Chooses the order-minimal spanning tree in every frame. The complement
/// monotonicity this family enjoys is re-verified on all comparable pairs;
/// a violation would be a library bug and throws.
SpanningCofiltration cofiltration_of_spanning_trees(const Filtration& f);

/// True iff every frame gets a spanning tree and complements are monotone
/// across all comparable pairs.
bool is_cofiltration(const Filtration& f, const std::vector<std::set<Simplex>>& trees);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

/// Exact backtracking search for a nested family of spanning trees
/// (T^q subset of T^{q'} for q <= q'). Returns the family if one exists,
/// std::nullopt if none does. The search enumerates the spanning forests
/// of each frame grade by grade along a linear extension; the budget caps
/// the number of explored branch nodes and overruns throw
/// SearchBudgetExceeded.
std::optional<std::vector<SpanningTree>>
subfiltration_of_spanning_trees(const Filtration& f,
                                std::uint64_t budget = kDefaultSearchBudget);

/// Validates that the vertex map is simplicial, order-preserving, and
/// dimension-preserving, then checks that the image of every simplex
/// outside the order-minimal tree of X stays outside the order-minimal
/// tree of Y (in the 1-difference sense).
bool check_tau1_functoriality(const std::map<int, int>& vertex_map,
                              const OrderedComplex& x, const OrderedComplex& y);

} // namespace cofil

#endif
