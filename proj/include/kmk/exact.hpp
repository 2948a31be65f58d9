// Exact linear algebra over Q and Z, backed by GMP.
//
// Dense routines are meant for the small matrices of the Lie engine
// (structure constants, lowering maps). The sparse echelon is used for the
// large, very sparse Koszul matrices.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kmk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws on bad input.
Rational parse_rational(const std::string& text);

/// Canonical GMP form ("3", "-1/2").
std::string to_string(const Rational& q);

Integer binomial(long n, long k);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Rational> values);

    RationalMatrix transposed() const;
    bool is_zero() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    std::vector<Rational> apply(std::span<const Rational> v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form plus the pivot column of each nonzero row.
struct RowEchelon {
    RationalMatrix reduced;            // only the nonzero rows
    std::vector<std::size_t> pivots;   // pivots[r] = pivot column of row r
};

RowEchelon row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Rows spanning {x : m x = 0}, in reduced form (one row per free column).
RationalMatrix null_space(const RationalMatrix& m);

/// Exact determinant (square matrices).
Rational determinant(RationalMatrix m);

/// Integer determinant of an integer matrix given row-major.
Integer integer_determinant(const std::vector<std::vector<int>>& m);

/// Sparse integer vector: strictly increasing indices, nonzero values.
using SparseIntVector = std::vector<std::pair<std::size_t, Integer>>;

/// Incremental fraction-free echelon of integer vectors.
///
/// Each stored pivot row is primitive (content 1). A new row is reduced by
/// cross-multiplication against the pivot sharing its leading index; when the
/// incoming leading coefficient is smaller in magnitude the two rows swap
/// roles, which keeps entry growth in check.
class SparseEchelon {
public:
    /// Returns true if the vector was independent of the rows seen so far.
    bool insert(SparseIntVector v);

    std::size_t rank() const { return rank_; }

private:
    // pivot leading index -> row; kept as a flat vector indexed by column
    std::vector<SparseIntVector> pivots_;
    std::vector<bool> has_pivot_;
    std::size_t rank_ = 0;
};

/// Scales a rational vector to a primitive integer vector (same span).
SparseIntVector primitive_integer_vector(const std::vector<std::pair<std::size_t, Rational>>& v);

}  // namespace kmk
