#include "cofil/oracle.hpp"

#include "cofil/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cassert>
#include <limits>

namespace cofil {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// nearest-integer quotient: a = q*b + r with |r| <= |b|/2
Int balanced_quotient(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && 2 * boost::multiprecision::abs(r) > boost::multiprecision::abs(b)) {
        if ((r > 0) == (b > 0)) q += 1;
        else q -= 1;
    }
    return q;
}

// quotient used while clearing a pivot row/column: balanced over Z (halves
// the remainder, taming coefficient growth), exact over a field
Rat clearing_quotient(const Ring& ring, const Rat& a, const Rat& b) {
    if (ring.is_field()) return ring.exact_div(a, b);
    return Rat(balanced_quotient(numerator(a), numerator(b)));
}

// g = a*x + b*y with g = gcd(x, y) >= 0
void extended_gcd(const Int& x, const Int& y, Int& g, Int& a, Int& b) {
    Int old_r = x, r = y;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    g = old_r; a = old_s; b = old_t;
}

} // namespace

std::vector<Rat> SmithDecomposition::diagonal() const {
    std::vector<Rat> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
        if (s.at(i, i) != 0) d.push_back(s.at(i, i));
    return d;
}

SmithDecomposition smith_normal_form(const ExactMatrix& m) {
    const Ring& ring = m.ring();
    ExactMatrix s = m;
    ExactMatrix u = ExactMatrix::identity(ring, m.rows());
    ExactMatrix v = ExactMatrix::identity(ring, m.cols());

    const std::size_t limit = std::min(s.rows(), s.cols());
    std::size_t t = 0;
    bool trailing_zero = false;
    while (t < limit && !trailing_zero) {
        // Re-select the globally minimal pivot before every clearing pass.
        // With balanced quotients every leftover remainder is at most half
        // the pivot, so the pivot at least halves between passes.
        for (;;) {
            std::size_t pi = npos, pj = npos;
            for (std::size_t i = t; i < s.rows(); ++i)
                for (std::size_t j = t; j < s.cols(); ++j) {
                    if (s.at(i, j) == 0) continue;
                    if (pi == npos || abs_rat(s.at(i, j)) < abs_rat(s.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == npos) {
                trailing_zero = true;
                break;
            }
            s.swap_rows(t, pi); u.swap_rows(t, pi);
            s.swap_cols(t, pj); v.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Rat q = clearing_quotient(ring, s.at(i, t), s.at(t, t));
                if (q != 0) {
                    s.add_row_multiple(i, t, ring.neg(q));
                    u.add_row_multiple(i, t, ring.neg(q));
                }
                if (s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Rat q = clearing_quotient(ring, s.at(t, j), s.at(t, t));
                if (q != 0) {
                    s.add_col_multiple(j, t, ring.neg(q));
                    v.add_col_multiple(j, t, ring.neg(q));
                }
                if (s.at(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!trailing_zero) ++t;
    }

    // divisibility chain d_i | d_j for i < j
    if (!ring.is_field()) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = i + 1; j < t; ++j) {
                    Int di = numerator(s.at(i, i));
                    Int dj = numerator(s.at(j, j));
                    if (dj % di == 0) continue;
                    Int g, a, b;
                    extended_gcd(di, dj, g, a, b);
                    // rows i,j  <-  [a, b; -dj/g, di/g] * rows
                    // cols i,j  <-  cols * [1, -b*dj/g; 1, a*di/g]
                    auto row_op = [&](ExactMatrix& mat) {
                        for (std::size_t c = 0; c < mat.cols(); ++c) {
                            Rat ri = mat.at(i, c), rj = mat.at(j, c);
                            mat.at(i, c) = Rat(a) * ri + Rat(b) * rj;
                            mat.at(j, c) = Rat(-dj / g) * ri + Rat(di / g) * rj;
                        }
                    };
                    auto col_op = [&](ExactMatrix& mat) {
                        for (std::size_t r = 0; r < mat.rows(); ++r) {
                            Rat ci = mat.at(r, i), cj = mat.at(r, j);
                            mat.at(r, i) = ci + cj;
                            mat.at(r, j) = Rat(-b * dj / g) * ci + Rat(a * di / g) * cj;
                        }
                    };
                    row_op(s); row_op(u);
                    col_op(s); col_op(v);
                    changed = true;
                }
        }
    }

    // normalize pivots: positive over Z, one over a field
    for (std::size_t i = 0; i < t; ++i) {
        if (s.at(i, i) == 0) continue;
        if (ring.is_field()) {
            Rat inv = ring.exact_div(Rat(1), s.at(i, i));
            s.scale_col(i, inv);
            v.scale_col(i, inv);
        } else if (s.at(i, i) < 0) {
            s.scale_col(i, -1);
            v.scale_col(i, -1);
        }
    }
    SmithDecomposition out{std::move(u), std::move(s), std::move(v)};
    assert(smith_is_valid(m, out)); // exact reconstruction check in debug builds
    return out;
}

bool smith_is_valid(const ExactMatrix& m, const SmithDecomposition& snf) {
    const Ring& ring = m.ring();
    // diagonal shape
    for (std::size_t i = 0; i < snf.s.rows(); ++i)
        for (std::size_t j = 0; j < snf.s.cols(); ++j)
            if (i != j && snf.s.at(i, j) != 0) return false;
    // divisibility chain, zeros only after the nonzero prefix
    std::vector<Rat> d;
    bool seen_zero = false;
    for (std::size_t i = 0; i < std::min(snf.s.rows(), snf.s.cols()); ++i) {
        const Rat& x = snf.s.at(i, i);
        if (x == 0) { seen_zero = true; continue; }
        if (seen_zero) return false;
        d.push_back(x);
    }
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (!ring.divides(d[i], d[i + 1])) return false;
    if (!ring.is_field())
        for (const Rat& x : d)
            if (x < 0) return false;
    // exact reconstruction and invertibility
    if (!(snf.u.multiply(m).multiply(snf.v) == snf.s)) return false;
    return ring.is_unit(determinant(snf.u)) && ring.is_unit(determinant(snf.v));
}

ExactMatrix column_hermite(const ExactMatrix& m) {
    const Ring& ring = m.ring();
    ExactMatrix h = m;
    std::size_t pc = 0;
    for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
        // Euclid across columns >= pc until one nonzero entry remains in row r
        bool have_pivot = false;
        for (;;) {
            std::size_t jmin = npos;
            for (std::size_t j = pc; j < h.cols(); ++j) {
                if (h.at(r, j) == 0) continue;
                if (jmin == npos || abs_rat(h.at(r, j)) < abs_rat(h.at(r, jmin))) jmin = j;
            }
            if (jmin == npos) break;
            have_pivot = true;
            h.swap_cols(pc, jmin);
            bool clean = true;
            for (std::size_t j = pc + 1; j < h.cols(); ++j) {
                if (h.at(r, j) == 0) continue;
                Rat q = clearing_quotient(ring, h.at(r, j), h.at(r, pc));
                if (q != 0) h.add_col_multiple(j, pc, ring.neg(q));
                if (h.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (!have_pivot) continue;
        if (ring.is_field())
            h.scale_col(pc, ring.exact_div(Rat(1), h.at(r, pc)));
        else if (h.at(r, pc) < 0)
            h.scale_col(pc, -1);
        for (std::size_t k = 0; k < pc; ++k) {
            if (h.at(r, k) == 0) continue;
            auto [q, rem] = ring.euclid_div(h.at(r, k), h.at(r, pc));
            if (q != 0) h.add_col_multiple(k, pc, ring.neg(q));
        }
        ++pc;
    }
    return h;
}

bool image_submodule_equal(const ExactMatrix& m, const ExactMatrix& n) {
    if (m.rows() != n.rows())
        throw DimensionMismatch("span comparison needs equal row counts");
    if (!(m.ring() == n.ring()))
        throw RingMismatch("span comparison needs a common ring");
    if (m.ring().is_field()) {
        std::size_t rm = rank(m);
        if (rank(n) != rm) return false;
        return rank(m.augmented(n)) == rm;
    }
    ExactMatrix hm = column_hermite(m);
    ExactMatrix hn = column_hermite(n);
    auto nonzero_cols = [](const ExactMatrix& h) {
        std::size_t c = 0;
        for (; c < h.cols(); ++c) {
            bool zero = true;
            for (std::size_t i = 0; i < h.rows() && zero; ++i)
                if (h.at(i, c) != 0) zero = false;
            if (zero) break;
        }
        return c;
    };
    std::size_t cm = nonzero_cols(hm), cn = nonzero_cols(hn);
    if (cm != cn) return false;
    for (std::size_t j = 0; j < cm; ++j)
        for (std::size_t i = 0; i < hm.rows(); ++i)
            if (hm.at(i, j) != hn.at(i, j)) return false;
    return true;
}

HomologySummary homology(const OrderedComplex& x, int n, Ring ring) {
    ExactMatrix dn = boundary_matrix(x, n, ring);
    ExactMatrix dn1 = boundary_matrix(x, n + 1, ring);
    std::size_t rank_dn = 0, rank_dn1 = 0;
    HomologySummary out;
    out.n = n;
    if (ring.tag() == RingTag::Z) {
        rank_dn = smith_normal_form(dn).rank();
        SmithDecomposition s1 = smith_normal_form(dn1);
        rank_dn1 = s1.rank();
        for (const Rat& d : s1.diagonal()) {
            Int v = boost::multiprecision::abs(numerator(d));
            if (v > 1) out.torsion.push_back(v);
        }
    } else {
        rank_dn = rank(dn);
        rank_dn1 = rank(dn1);
    }
    std::ptrdiff_t betti = static_cast<std::ptrdiff_t>(dn.cols()) -
                           static_cast<std::ptrdiff_t>(rank_dn) -
                           static_cast<std::ptrdiff_t>(rank_dn1);
    if (betti < 0) throw Error("negative betti number: inconsistent complex");
    out.betti = static_cast<std::size_t>(betti);
    return out;
}

} // namespace cofil
