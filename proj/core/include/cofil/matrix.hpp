#ifndef COFIL_MATRIX_HPP
#define COFIL_MATRIX_HPP

#include "cofil/complex.hpp"
#include "cofil/ring.hpp"

#include <cstddef>
#include <vector>

namespace cofil {

/// Dense matrix over an exact coefficient ring.
class ExactMatrix {
public:
    ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    static ExactMatrix identity(Ring ring, std::size_t n);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rat& v) { a_[i * cols_ + j] = ring_.normalize(v); }

    ExactMatrix multiply(const ExactMatrix& other) const;
    ExactMatrix transposed() const;
    /// [this | other] side by side; equal row counts and rings required.
    ExactMatrix augmented(const ExactMatrix& other) const;
    ExactMatrix columns(const std::vector<std::size_t>& which) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i += lambda * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Rat& lambda);
    /// col_i += lambda * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Rat& lambda);
    void scale_row(std::size_t i, const Rat& lambda);
    void scale_col(std::size_t j, const Rat& lambda);

    bool is_zero() const;
    bool operator==(const ExactMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }

    std::string to_string() const;

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Exact rank by Gaussian elimination over the fraction field (for Z this
/// is the rank over Q, which equals the rank over Z).
std::size_t rank(const ExactMatrix& m);

/// Determinant of a square matrix (exact, fraction-field elimination).
Rat determinant(const ExactMatrix& m);

/// Matrix of the boundary homomorphism from n-chains to (n-1)-chains of X.
/// Rows are indexed by the (n-1)-simplices and columns by the n-simplices,
/// both in simplicial order. For n = 0 the matrix has zero rows.
ExactMatrix boundary_matrix(const OrderedComplex& x, int n, Ring ring);

} // namespace cofil

#endif
