#ifndef COFIL_ORACLE_HPP
#define COFIL_ORACLE_HPP

#include "cofil/matrix.hpp"

#include <vector>

namespace cofil {

/// Smith decomposition U*M*V = S with S diagonal, the diagonal entries
/// forming a divisibility chain, and U, V invertible over the ring.
struct SmithDecomposition {
    ExactMatrix u, s, v;
    std::vector<Rat> diagonal() const; // nonzero invariant factors
    std::size_t rank() const { return diagonal().size(); }
};

/// Computes the Smith normal form over Z or over a field. Over Z the pivot
/// is always a minimal-absolute-value nonzero entry, which keeps the
/// coefficients small at this scale.
SmithDecomposition smith_normal_form(const ExactMatrix& m);

/// Exhaustive validity check: U*M*V = S, S diagonal with divisibility
/// chain, U and V invertible. Used by tests and the verify command.
bool smith_is_valid(const ExactMatrix& m, const SmithDecomposition& snf);

/// Canonical column Hermite normal form: column echelon, positive pivots,
/// off-pivot entries in each pivot row reduced into [0, pivot). Over a
/// field this is the reduced column echelon form. The column span is
/// unchanged and the form is unique per span, so two matrices have equal
/// column spans iff their forms agree up to trailing zero columns.
ExactMatrix column_hermite(const ExactMatrix& m);

/// Submodule equality of column spans. Over Z this compares canonical
/// Hermite forms; over a field it compares ranks of M, N, and [M|N].
bool image_submodule_equal(const ExactMatrix& m, const ExactMatrix& n);

struct HomologySummary {
    int n = 0;
    std::size_t betti = 0;
    std::vector<Int> torsion; // invariant factors > 1; empty over fields
    bool operator==(const HomologySummary&) const = default;
};

/// betti = nullity(d_n) - rank(d_{n+1}); torsion from the Smith form of
/// d_{n+1} (Z only).
HomologySummary homology(const OrderedComplex& x, int n, Ring ring);

} // namespace cofil

#endif
