#include "cofil/matrix.hpp"

#include "cofil/errors.hpp"

namespace cofil {

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t n) {
    ExactMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& other) const {
    if (cols_ != other.rows_ || !(ring_ == other.ring_))
        throw DimensionMismatch("matrix product shape/ring mismatch");
    ExactMatrix out(ring_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(aik, other.at(k, j)));
            }
        }
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ExactMatrix ExactMatrix::augmented(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || !(ring_ == other.ring_))
        throw DimensionMismatch("augmenting matrices with different row counts or rings");
    ExactMatrix out(ring_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
    }
    return out;
}

ExactMatrix ExactMatrix::columns(const std::vector<std::size_t>& which) const {
    ExactMatrix out(ring_, rows_, which.size());
    for (std::size_t j = 0; j < which.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, which[j]);
    return out;
}

void ExactMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void ExactMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void ExactMatrix::add_row_multiple(std::size_t i, std::size_t j, const Rat& lambda) {
    for (std::size_t c = 0; c < cols_; ++c)
        at(i, c) = ring_.add(at(i, c), ring_.mul(lambda, at(j, c)));
}

void ExactMatrix::add_col_multiple(std::size_t i, std::size_t j, const Rat& lambda) {
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, i) = ring_.add(at(r, i), ring_.mul(lambda, at(r, j)));
}

void ExactMatrix::scale_row(std::size_t i, const Rat& lambda) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = ring_.mul(at(i, c), lambda);
}

void ExactMatrix::scale_col(std::size_t j, const Rat& lambda) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = ring_.mul(at(r, j), lambda);
}

bool ExactMatrix::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0) return false;
    return true;
}

std::string ExactMatrix::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out += at(i, j).str();
            out += j + 1 < cols_ ? " " : "";
        }
        out += '\n';
    }
    return out;
}

std::size_t rank(const ExactMatrix& m) {
    // rational Gaussian elimination; Zp stays inside the field
    const bool modular = m.ring().tag() == RingTag::Zp;
    ExactMatrix w = m;
    std::size_t r = 0;
    for (std::size_t col = 0; col < w.cols() && r < w.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < w.rows() && w.at(pivot, col) == 0) ++pivot;
        if (pivot == w.rows()) continue;
        w.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < w.rows(); ++i) {
            if (w.at(i, col) == 0) continue;
            Rat factor = modular
                             ? w.ring().mul(w.at(i, col),
                                            Rat(mod_inverse(numerator(w.at(r, col)),
                                                            Int(w.ring().modulus()))))
                             : Rat(w.at(i, col) / w.at(r, col));
            for (std::size_t j = col; j < w.cols(); ++j) {
                Rat delta = modular ? w.ring().mul(factor, w.at(r, j))
                                    : Rat(factor * w.at(r, j));
                w.at(i, j) = modular ? w.ring().sub(w.at(i, j), delta)
                                     : Rat(w.at(i, j) - delta);
            }
        }
        ++r;
    }
    return r;
}

Rat determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    ExactMatrix w = m;
    const Ring& ring = w.ring();
    Rat det = 1;
    for (std::size_t col = 0; col < w.cols(); ++col) {
        std::size_t pivot = col;
        while (pivot < w.rows() && w.at(pivot, col) == 0) ++pivot;
        if (pivot == w.rows()) return 0;
        if (pivot != col) {
            w.swap_rows(col, pivot);
            det = ring.neg(det);
        }
        det = ring.mul(det, w.at(col, col));
        for (std::size_t i = col + 1; i < w.rows(); ++i) {
            if (w.at(i, col) == 0) continue;
            Rat factor = ring.is_field() && ring.tag() == RingTag::Zp
                             ? ring.mul(w.at(i, col),
                                        Rat(mod_inverse(numerator(w.at(col, col)),
                                                        Int(ring.modulus()))))
                             : Rat(w.at(i, col) / w.at(col, col));
            for (std::size_t j = col; j < w.cols(); ++j)
                w.at(i, j) = ring.sub(w.at(i, j), ring.mul(factor, w.at(col, j)));
        }
    }
    return ring.tag() == RingTag::Zp ? ring.normalize(det) : det;
}

ExactMatrix boundary_matrix(const OrderedComplex& x, int n, Ring ring) {
    std::vector<Simplex> rows_sx = n >= 1 ? x.simplices_of_dim(n - 1) : std::vector<Simplex>{};
    std::vector<Simplex> cols_sx = x.simplices_of_dim(n);
    std::map<Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < rows_sx.size(); ++i) row_of.emplace(rows_sx[i], i);

    ExactMatrix m(ring, rows_sx.size(), cols_sx.size());
    if (n < 1) return m;
    for (std::size_t j = 0; j < cols_sx.size(); ++j) {
        Rat sign = 1;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
            m.set(row_of.at(cols_sx[j].face_dropping(i)), j, sign);
            sign = -sign;
        }
    }
    return m;
}

} // namespace cofil
