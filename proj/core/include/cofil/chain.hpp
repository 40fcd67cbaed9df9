#ifndef COFIL_CHAIN_HPP
#define COFIL_CHAIN_HPP

#include "cofil/complex.hpp"
#include "cofil/ring.hpp"

#include <map>
#include <string>

namespace cofil {

/// Sparse formal linear combination of n-simplices with exact coefficients.
/// Terms with zero coefficient are never stored. Pure value type.
class Chain {
public:
    Chain(Ring ring, int dim) : ring_(ring), dim_(dim) {}

    /// The chain 1*s.
    static Chain unit(Ring ring, const Simplex& s);

    const Ring& ring() const { return ring_; }
    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Simplex, Rat>& terms() const { return terms_; }

    Rat coefficient(const Simplex& s) const;
    /// Adds coeff*s in place; cancelled terms disappear.
    void add_term(const Simplex& s, const Rat& coeff);

    bool operator==(const Chain& other) const {
        return dim_ == other.dim_ && terms_ == other.terms_;
    }

    /// Canonical text form, terms in (dimension, vertex tuple) order,
    /// e.g. "+[1 2] -2[1 3]". Used as a dictionary key for cycles.
    std::string to_string() const;

private:
    Ring ring_;
    int dim_;
    std::map<Simplex, Rat> terms_;
};

/// Alternating-sign boundary. For a 0-chain the result is the zero chain
/// in dimension -1 (reported by convention, never an error).
Chain boundary(const Chain& c);

/// Order-maximal simplex in the support; throws ZeroChain on the zero chain.
Simplex leading_simplex(const Chain& c, const OrderedComplex& order);

Chain chain_add(const Chain& a, const Chain& b); // RingMismatch, DimensionMismatch
Chain chain_scale(const Chain& c, const Rat& lambda);
Chain chain_negate(const Chain& c);

} // namespace cofil

#endif
