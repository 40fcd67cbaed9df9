#ifndef COFIL_FILTRATION_HPP
#define COFIL_FILTRATION_HPP

#include "cofil/complex.hpp"
#include "cofil/poset.hpp"

#include <map>
#include <vector>

namespace cofil {

/// Monotone family of subcomplexes of a total complex, indexed by a finite
/// poset and encoded by per-simplex entry grades. Each simplex carries an
/// antichain of minimal grades; it is present at q iff some entry grade is
/// <= q. Multi-critical entries are supported; one-critical filtrations
/// are the singleton-antichain case.
class Filtration {
public:
    /// Validates at construction: every simplex of the total complex has
    /// an entry, grades are reduced to antichains, and every face enters
    /// no later than each of its cofaces (face-closedness of every frame).
    Filtration(Poset poset, OrderedComplex total,
               std::map<Simplex, std::vector<GradeIdx>> entry);

    const Poset& poset() const { return poset_; }
    const OrderedComplex& total() const { return total_; }
    const std::map<Simplex, std::vector<GradeIdx>>& entries() const { return entry_; }
    const std::vector<GradeIdx>& entry(const Simplex& s) const;

    bool contains_at(const Simplex& s, GradeIdx q) const;
    /// The frame X^q with the restriction of the total simplicial order.
    OrderedComplex at(GradeIdx q) const;
    OrderedComplex at_id(const std::string& grade_id) const; // UnknownGrade

    bool operator==(const Filtration& other) const {
        return poset_ == other.poset_ && total_ == other.total_ && entry_ == other.entry_;
    }

private:
    Poset poset_;
    OrderedComplex total_;
    std::map<Simplex, std::vector<GradeIdx>> entry_;
};

/// Keep only the minimal grades (antichain reduction), sorted.
std::vector<GradeIdx> reduce_to_antichain(const Poset& p, std::vector<GradeIdx> grades);

} // namespace cofil

#endif
