#ifndef COFIL_PERSISTENT_SET_HPP
#define COFIL_PERSISTENT_SET_HPP

#include "cofil/poset.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cofil {

/// Set-valued functor on a finite poset. Fiber elements are opaque string
/// keys. A comparable pair without an explicit structure map uses the
/// inclusion (the key must then be present in the larger fiber); explicit
/// maps on cover pairs express merges for the general case.
struct PersistentSet {
    std::vector<std::vector<std::string>> fibers; // per grade, sorted unique
    std::map<std::pair<GradeIdx, GradeIdx>, std::map<std::string, std::string>> maps;

    void insert(GradeIdx q, const std::string& key);
    bool fiber_contains(GradeIdx q, const std::string& key) const;
    std::size_t total_elements() const;

    /// Image of key under the structure map q -> q' (inclusion if no
    /// explicit map is stored for the pair).
    const std::string& image_of(GradeIdx from, GradeIdx to, const std::string& key) const;
};

/// Quotient of the disjoint union of the fibers by the equivalence the
/// structure maps generate, computed by union-find over the cover pairs.
/// Classes are numbered deterministically (first touch along the linear
/// extension, keys in sorted order).
struct Colimit {
    std::size_t class_count = 0;
    std::vector<std::string> class_rep;                        // per class
    std::vector<std::map<std::string, std::size_t>> projection; // per grade: key -> class
};

/// Validates functoriality on cover pairs (images must land in the target
/// fiber) and returns the colimit with its per-grade projections.
Colimit colimit_persistent_set(const Poset& p, const PersistentSet& b);

/// Upper-set decomposition of the span of b. Requires every colimit
/// projection to be injective (throws NotInjective with the offending
/// grade otherwise). Produces one upper set per colimit class; the member
/// count over all classes accounts for every fiber element exactly once.
struct UpperSetDecomposition {
    Colimit colimit;
    std::vector<UpperSet> upper_sets; // per class
};

UpperSetDecomposition upper_set_decompose(const Poset& p, const PersistentSet& b);

} // namespace cofil

#endif
