#ifndef COFIL_COMPLEX_HPP
#define COFIL_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cofil {

/// Abstract simplex: a strictly increasing tuple of vertex ids. Vertex ids
/// are integers; the integer order is the vertex order.
class Simplex {
public:
    /// Sorts the vertices; throws DuplicateVertexInSimplex on repeats or
    /// an empty vertex list.
    explicit Simplex(std::vector<int> vertices);
    Simplex(std::initializer_list<int> vertices)
        : Simplex(std::vector<int>(vertices)) {}

    /// Image of a simplex under a vertex map: duplicates collapse.
    static Simplex collapsed(std::vector<int> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    std::span<const int> vertices() const { return verts_; }
    int vertex(std::size_t i) const { return verts_[i]; }

    /// Face obtained by dropping the i-th vertex (dim >= 1).
    Simplex face_dropping(std::size_t i) const;
    /// All proper nonempty faces.
    std::vector<Simplex> proper_faces() const;
    bool is_face_of(const Simplex& other) const;

    std::string to_string() const; // "[0 2 5]"

    // Container ordering on the vertex tuple; this is *not* a simplicial
    // order (use OrderedComplex::precedes for that).
    auto operator<=>(const Simplex&) const = default;

private:
    Simplex() = default;
    std::vector<int> verts_;
};

enum class Cmp { LT, EQ, GT };

/// Finite abstract simplicial complex carrying a total simplicial order in
/// which every face precedes its cofaces. Simplices are stored sorted by
/// that order; rank lookup is a map.
class OrderedComplex {
public:
    OrderedComplex() = default;

    /// Face closure of the generators with the default simplicial order:
    /// dimension first, then lexicographic on the vertex tuple.
    static OrderedComplex from_simplices(const std::vector<Simplex>& generators);

    /// Adopts an explicit simplicial order given as the full simplex list
    /// in increasing order. Validates face closure and that faces precede
    /// cofaces; throws InvalidSimplicialOrder / NotASubcomplex style errors.
    static OrderedComplex from_ordered(std::vector<Simplex> ordered);

    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }
    int dim() const; // -1 when empty
    const std::vector<Simplex>& simplices() const { return simplices_; }
    bool contains(const Simplex& s) const { return rank_.count(s) != 0; }

    std::size_t rank(const Simplex& s) const; // position in the order
    bool precedes(const Simplex& a, const Simplex& b) const { return rank(a) < rank(b); }
    Cmp compare(const Simplex& a, const Simplex& b) const;

    /// Simplices of one dimension, in simplicial order.
    std::vector<Simplex> simplices_of_dim(int n) const;
    std::vector<int> vertex_ids() const;

    OrderedComplex skeleton(int n) const;
    /// Subcomplex on the given members, order restricted. Validates that
    /// the members form a face-closed subset of this complex.
    OrderedComplex subcomplex(const std::set<Simplex>& members) const;
    bool is_subcomplex_of(const OrderedComplex& other) const;

    bool operator==(const OrderedComplex& other) const {
        return simplices_ == other.simplices_;
    }

private:
    static OrderedComplex adopt_sorted(std::vector<Simplex> sorted);

    std::vector<Simplex> simplices_; // sorted by the simplicial order
    std::map<Simplex, std::size_t> rank_;
};

/// dimension-major, then lexicographic on the vertex tuple
bool default_order_less(const Simplex& a, const Simplex& b);

/// n-difference: keep every simplex of dimension < n plus the n-simplices
/// of X not in A; everything above n is dropped. A must be a subcomplex.
OrderedComplex n_difference(const OrderedComplex& x, const OrderedComplex& a, int n);

/// Lexicographic comparison of simplex sets relative to the simplicial
/// order of `host`: A precedes B iff A = B or the order-minimal element of
/// the symmetric difference lies in A.
Cmp lex_compare(const std::set<Simplex>& a, const std::set<Simplex>& b,
                const OrderedComplex& host);

/// Simplicial map between complexes, given on vertices. Validated at
/// construction: the image of every simplex of X is a simplex of Y.
class SimplicialMap {
public:
    SimplicialMap(std::map<int, int> vertex_map, const OrderedComplex& x,
                  const OrderedComplex& y);

    const std::map<int, int>& vertex_map() const { return vmap_; }
    int apply_vertex(int v) const; // VertexNotInDomain
    Simplex apply(const Simplex& s) const;

private:
    std::map<int, int> vmap_;
};

} // namespace cofil

#endif
