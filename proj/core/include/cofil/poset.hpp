#ifndef COFIL_POSET_HPP
#define COFIL_POSET_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cofil {

using GradeIdx = std::size_t;

/// Finite partially ordered index set. Elements are canonical string ids;
/// the relation is kept as a dense reachability table after transitive
/// closure, so leq queries are O(1). Immutable once built.
class Poset {
public:
    /// Reflexive-transitive closure of the given cover pairs.
    /// Throws CycleInRelation if the closure violates antisymmetry and
    /// UnknownElement if a cover references an undeclared element.
    static Poset from_covers(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& covers);

    /// Product of chains: elements are integer tuples "i0,i1,...", ordered
    /// componentwise. Throws EmptyExtent if any extent is zero.
    static Poset grid(const std::vector<std::size_t>& extents);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& id_of(GradeIdx i) const { return elements_[i]; }
    GradeIdx index_of(const std::string& id) const; // UnknownElement
    bool has_element(const std::string& id) const { return index_.count(id) != 0; }

    bool leq(GradeIdx a, GradeIdx b) const { return leq_[a * size() + b] != 0; }
    bool leq_ids(const std::string& a, const std::string& b) const {
        return leq(index_of(a), index_of(b));
    }

    /// Fixed linear extension, used everywhere deterministic grade order
    /// matters (reports, colimit class numbering).
    const std::vector<GradeIdx>& linear_extension() const { return linear_ext_; }

    /// Pairs (a, b) with b covering a.
    const std::vector<std::pair<GradeIdx, GradeIdx>>& cover_pairs() const { return covers_; }

    /// All strict comparable pairs a < b.
    std::vector<std::pair<GradeIdx, GradeIdx>> comparable_pairs() const;

    /// Maximal elements (no strictly larger element).
    std::vector<GradeIdx> maximal_elements() const;

    /// Extents if this poset was built by grid(), empty otherwise.
    const std::vector<std::size_t>& grid_extents() const { return grid_extents_; }

    bool operator==(const Poset& other) const {
        return elements_ == other.elements_ && leq_ == other.leq_;
    }

private:
    Poset() = default;
    void index_elements();
    void close_and_check(); // Warshall closure + antisymmetry
    void compute_covers();
    void compute_linear_extension();

    std::vector<std::string> elements_;
    std::map<std::string, GradeIdx> index_;
    std::vector<char> leq_; // row-major size*size
    std::vector<std::pair<GradeIdx, GradeIdx>> covers_;
    std::vector<GradeIdx> linear_ext_;
    std::vector<std::size_t> grid_extents_;
};

/// Upward closed subset of a poset, stored as a sorted member list.
class UpperSet {
public:
    UpperSet() = default;

    /// Validates upward closure; throws Error if a member has an
    /// uncontained successor.
    static UpperSet from_members(const Poset& p, std::vector<GradeIdx> members);
    /// up(a) = { q : a <= q }.
    static UpperSet principal(const Poset& p, GradeIdx a);
    /// Union of principal upper sets of the seeds.
    static UpperSet closure(const Poset& p, const std::vector<GradeIdx>& seeds);

    const std::vector<GradeIdx>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool contains(GradeIdx g) const;
    bool operator==(const UpperSet&) const = default;

    static UpperSet union_of(const UpperSet& a, const UpperSet& b);
    static UpperSet intersection_of(const UpperSet& a, const UpperSet& b);

private:
    std::vector<GradeIdx> members_; // sorted, unique
};

bool is_upper_set(const Poset& p, const std::vector<GradeIdx>& members);
/// Id-based variant; throws UnknownElement for ids outside the poset.
bool is_upper_set(const Poset& p, const std::set<std::string>& ids);

} // namespace cofil

#endif
