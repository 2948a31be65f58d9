#include "kmk/exact.hpp"

#include "kmk/error.hpp"

#include <algorithm>
#include <cassert>

namespace kmk {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::AsymmetricZero: return "AsymmetricZero";
    case ErrorCode::OneSidedEdge: return "OneSidedEdge";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::NotWeylInvariant: return "NotWeylInvariant";
    case ErrorCode::UnsupportedLength: return "UnsupportedLength";
    case ErrorCode::CriterionNotSatisfied: return "CriterionNotSatisfied";
    case ErrorCode::OutOfTruncation: return "OutOfTruncation";
    case ErrorCode::SurjectivityFailure: return "SurjectivityFailure";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::NotContained: return "NotContained";
    }
    return "Unknown";
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw Error(ErrorCode::InvalidInput, "not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw Error(ErrorCode::InvalidInput, "zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const
{
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

void RationalMatrix::set_column(std::size_t c, std::span<const Rational> values)
{
    assert(values.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = values[r];
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    assert(a.cols_ == b.rows_);
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0)
                    out(i, j) += x * b(k, j);
        }
    return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] += b.data_[i];
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
{
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i)
        out.data_[i] -= b.data_[i];
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> v) const
{
    assert(v.size() == cols_);
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (v[c] != 0 && (*this)(r, c) != 0)
                out[r] += (*this)(r, c) * v[c];
    return out;
}

RowEchelon row_echelon(RationalMatrix m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j)
                swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RationalMatrix reduced(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return row_echelon(m).pivots.size(); }

RationalMatrix null_space(const RationalMatrix& m)
{
    const RowEchelon e = row_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    RationalMatrix basis(free_cols.size(), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(k, f) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            basis(k, e.pivots[r]) = -e.reduced(r, f);
    }
    return row_echelon(basis).reduced;
}

Rational determinant(RationalMatrix m)
{
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0)
                continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

Integer integer_determinant(const std::vector<std::vector<int>>& m)
{
    RationalMatrix q(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            q(i, j) = m[i][j];
    const Rational d = determinant(std::move(q));
    assert(d.get_den() == 1);
    return d.get_num();
}

namespace {

// a*x - b*y for sparse vectors
SparseIntVector combine(const Integer& a, const SparseIntVector& x, const Integer& b, const SparseIntVector& y)
{
    SparseIntVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Integer v = a * x[i].second - b * y[j].second;
            if (v != 0)
                out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

void make_primitive(SparseIntVector& v)
{
    if (v.empty())
        return;
    Integer g = 0;
    for (const auto& [idx, val] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
        if (g == 1)
            return;
    }
    for (auto& [idx, val] : v)
        mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool SparseEchelon::insert(SparseIntVector v)
{
    make_primitive(v);
    while (!v.empty()) {
        const std::size_t lead = v.front().first;
        if (lead >= has_pivot_.size()) {
            has_pivot_.resize(lead + 1, false);
            pivots_.resize(lead + 1);
        }
        if (!has_pivot_[lead]) {
            pivots_[lead] = std::move(v);
            has_pivot_[lead] = true;
            ++rank_;
            return true;
        }
        SparseIntVector& p = pivots_[lead];
        if (abs(v.front().second) < abs(p.front().second))
            std::swap(v, p);
        const Integer g = gcd(p.front().second, v.front().second);
        const Integer a = p.front().second / g;
        const Integer b = v.front().second / g;
        v = combine(a, v, b, p);
        make_primitive(v);
    }
    return false;
}

SparseIntVector primitive_integer_vector(const std::vector<std::pair<std::size_t, Rational>>& v)
{
    Integer l = 1;
    for (const auto& [idx, q] : v)
        if (q != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    SparseIntVector out;
    out.reserve(v.size());
    for (const auto& [idx, q] : v)
        if (q != 0) {
            Rational s = q * l;
            out.emplace_back(idx, s.get_num());
        }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    make_primitive(out);
    return out;
}

}  // namespace kmk
