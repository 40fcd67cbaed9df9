#ifndef COFIL_PRECOVER_HPP
#define COFIL_PRECOVER_HPP

#include "cofil/chain.hpp"
#include "cofil/cofiltration.hpp"
#include "cofil/persistent_set.hpp"

#include <map>
#include <string>
#include <vector>

namespace cofil {

/// Representative persistent set of a non-tree edge: the fiber at q holds
/// the fundamental cycles edge - path(edge) taken in T^{q'} over all
/// grades q' <= q where the edge is excluded, deduplicated by exact chain
/// equality. Keys are the canonical chain strings; structure maps are
/// inclusions.
struct RepresentativeSet {
    Simplex edge;
    PersistentSet set;
    std::map<std::string, Chain> cycles; // key -> cycle
};

/// Throws EdgeNeverExcluded when the edge belongs to every tree that sees it.
RepresentativeSet representative_persistent_set(const Filtration& f,
                                                const SpanningCofiltration& t,
                                                const Simplex& edge, Ring ring);

/// One generator of the precover: a colimit class of some B_edge together
/// with its upper set and the cycle it evaluates to.
struct CycleKey {
    Simplex edge;
    std::size_t class_index = 0;
    auto operator<=>(const CycleKey&) const = default;
    std::string to_string() const;
};

/// Direct sum over the excluded edges of the spans of their representative
/// persistent sets, with the upper-set decomposition of every summand and
/// the evaluation onto 1-cycles. Construction verifies that each recorded
/// cycle is a genuine 1-cycle of every frame in its upper set.
struct Precover {
    Ring ring = Ring::z();
    std::vector<Simplex> edges; // excluded edges, simplicial order
    std::map<Simplex, RepresentativeSet> summands;
    std::map<CycleKey, UpperSet> decomposition;
    std::map<CycleKey, Chain> evaluation;

    /// Summand fiber sizes summed at one grade (the pointwise rank of the
    /// precover module).
    std::size_t rank_at(GradeIdx q) const;
};

Precover precover(const Filtration& f, const SpanningCofiltration& t, Ring ring);

/// Pointwise surjectivity report of the evaluation onto the 1-cycle
/// module: at each grade the rank of the span of the evaluated cycles is
/// compared with the nullity of the edge boundary matrix.
struct GradeEpiReport {
    GradeIdx grade = 0;
    std::size_t precover_rank = 0;
    std::size_t z1_rank = 0;
    std::size_t image_rank = 0;
    bool surjective = false;
};

std::vector<GradeEpiReport> precover_map_and_check(const Filtration& f,
                                                   const SpanningCofiltration& t,
                                                   Ring ring);
std::vector<GradeEpiReport> precover_map_and_check(const Filtration& f, const Precover& pc);

/// Throws EpimorphismFailed naming the first non-surjective grade.
void require_epimorphism(const Poset& p, const std::vector<GradeEpiReport>& reports);

} // namespace cofil

#endif
