#include "kmk/koszul.hpp"

#include "kmk/error.hpp"

#include <map>

namespace kmk {

namespace {

std::size_t choose(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    return binomial(static_cast<long>(n), static_cast<long>(k)).get_ui();
}

void monomials_rec(std::size_t n, std::size_t left, std::vector<int>& cur, std::size_t pos,
                   std::vector<std::vector<int>>& out)
{
    if (pos + 1 == n) {
        cur[pos] = static_cast<int>(left);
        out.push_back(cur);
        return;
    }
    for (std::size_t e = left + 1; e-- > 0;) {
        cur[pos] = static_cast<int>(e);
        monomials_rec(n, left - e, cur, pos + 1, out);
    }
}

template <class Key>
std::map<Key, std::size_t> index_of(const std::vector<Key>& basis)
{
    std::map<Key, std::size_t> m;
    for (std::size_t i = 0; i < basis.size(); ++i)
        m.emplace(basis[i], i);
    return m;
}

}  // namespace

KoszulInput make_koszul_input(std::size_t n, const RationalMatrix& rows)
{
    const std::size_t ambient = choose(n, 2);
    if (rows.rows() > 0 && rows.cols() != ambient)
        throw Error(ErrorCode::InvalidInput, "kernel rows must have length C(n, 2) = " + std::to_string(ambient));
    KoszulInput in;
    in.n = n;
    in.kernel.ambient = ambient;
    in.kernel.rows = rows.rows() > 0 ? row_echelon(rows).reduced : RationalMatrix(0, ambient);
    return in;
}

std::vector<std::vector<int>> monomials(std::size_t n, std::size_t q)
{
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (q == 0)
            out.emplace_back();
        return out;
    }
    std::vector<int> cur(n, 0);
    monomials_rec(n, q, cur, 0, out);
    return out;
}

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t p)
{
    std::vector<std::vector<std::size_t>> out;
    if (p > n)
        return out;
    std::vector<std::size_t> cur(p);
    for (std::size_t i = 0; i < p; ++i)
        cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = p;
        while (i > 0 && cur[i - 1] == n - p + i - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t k = i; k < p; ++k)
            cur[k] = cur[k - 1] + 1;
    }
    return out;
}

RationalMatrix koszul_differential(std::size_t n, std::size_t p, std::size_t q)
{
    if (p > n)
        throw Error(ErrorCode::IndexOutOfRange, "wedge degree " + std::to_string(p) + " exceeds n");
    const auto src_sym = monomials(n, q);
    const auto src_wedge = wedge_basis(n, p);
    if (p == 0)
        return RationalMatrix(0, src_sym.size() * src_wedge.size());
    const auto dst_sym = index_of(monomials(n, q + 1));
    const auto dst_wedge_list = wedge_basis(n, p - 1);
    const auto dst_wedge = index_of(dst_wedge_list);

    RationalMatrix d(dst_sym.size() * dst_wedge_list.size(), src_sym.size() * src_wedge.size());
    for (std::size_t f = 0; f < src_sym.size(); ++f)
        for (std::size_t s = 0; s < src_wedge.size(); ++s) {
            const std::size_t col = f * src_wedge.size() + s;
            const auto& subset = src_wedge[s];
            for (std::size_t i = 0; i < p; ++i) {
                std::vector<int> mono = src_sym[f];
                ++mono[subset[i]];
                std::vector<std::size_t> rest;
                for (std::size_t k = 0; k < p; ++k)
                    if (k != i)
                        rest.push_back(subset[k]);
                const std::size_t row = dst_sym.at(mono) * dst_wedge_list.size() + dst_wedge.at(rest);
                d(row, col) += (i % 2 == 0) ? 1 : -1;
            }
        }
    return d;
}

std::int64_t graded_dim(const KoszulInput& in, std::size_t q, std::size_t budget)
{
    const std::size_t n = in.n;
    const std::size_t pairs = choose(n, 2);
    const RowEchelon k = in.kernel.rows.rows() > 0 ? row_echelon(in.kernel.rows) : RowEchelon{};
    const std::size_t quotient = pairs - k.pivots.size();

    const auto sym_q = monomials(n, q);
    const std::size_t rows = sym_q.size() * quotient;
    if (q == 0 || quotient == 0 || n < 3)
        return static_cast<std::int64_t>(rows);

    const auto sym_prev = monomials(n, q - 1);
    const auto triples = wedge_basis(n, 3);
    const std::size_t cols = sym_prev.size() * triples.size();
    if (rows > 0 && cols > budget / rows)
        throw Error(ErrorCode::DimensionOverflow, "Koszul composite at q = " + std::to_string(q) + " has " +
                                                      std::to_string(rows) + " x " + std::to_string(cols) +
                                                      " entries, budget " + std::to_string(budget));

    // e_t modulo K, in coordinates of the non-pivot pairs
    const auto pair_list = wedge_basis(n, 2);
    const auto pair_index = index_of(pair_list);
    std::vector<std::size_t> complement_pos(pairs, pairs);
    std::vector<std::size_t> pivot_row(pairs, pairs);
    for (std::size_t r = 0; r < k.pivots.size(); ++r)
        pivot_row[k.pivots[r]] = r;
    for (std::size_t t = 0, c = 0; t < pairs; ++t)
        if (pivot_row[t] == pairs)
            complement_pos[t] = c++;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> proj(pairs);
    for (std::size_t t = 0; t < pairs; ++t) {
        if (pivot_row[t] == pairs) {
            proj[t].emplace_back(complement_pos[t], 1);
            continue;
        }
        for (std::size_t c = 0; c < pairs; ++c)
            if (pivot_row[c] == pairs && k.reduced(pivot_row[t], c) != 0)
                proj[t].emplace_back(complement_pos[c], -k.reduced(pivot_row[t], c));
    }

    const auto sym_index = index_of(sym_q);
    SparseEchelon ech;
    for (const auto& f : sym_prev)
        for (const auto& tri : triples) {
            std::map<std::size_t, Rational> col;
            for (std::size_t i = 0; i < 3; ++i) {
                std::vector<int> mono = f;
                ++mono[tri[i]];
                std::vector<std::size_t> rest;
                for (std::size_t j = 0; j < 3; ++j)
                    if (j != i)
                        rest.push_back(tri[j]);
                const std::size_t base = sym_index.at(mono) * quotient;
                const int sign = (i % 2 == 0) ? 1 : -1;
                for (const auto& [pos, v] : proj[pair_index.at(rest)])
                    col[base + pos] += sign * v;
            }
            std::vector<std::pair<std::size_t, Rational>> entries;
            for (auto& [pos, v] : col)
                if (v != 0)
                    entries.emplace_back(pos, std::move(v));
            if (!entries.empty())
                ech.insert(primitive_integer_vector(entries));
        }
    return static_cast<std::int64_t>(rows - ech.rank());
}

GradedDims graded_dims(const KoszulInput& in, std::size_t max_q, std::size_t budget)
{
    GradedDims out;
    for (std::size_t q = 0; q <= max_q; ++q)
        out.dims.push_back(graded_dim(in, q, budget));
    return out;
}

bool is_nilpotent_explicit(const KoszulInput& in, std::size_t budget)
{
    if (in.n <= 2)
        return in.kernel.dim() == choose(in.n, 2);
    return graded_dim(in, in.n - 3, budget) == 0;
}

bool monotonicity_check(const KoszulInput& sub, const KoszulInput& super, std::size_t max_q, std::size_t budget)
{
    if (sub.n != super.n)
        throw Error(ErrorCode::NotContained, "different ambient dimensions");
    if (sub.kernel.ambient != super.kernel.ambient)
        throw Error(ErrorCode::NotContained, "different ambient spaces");
    if (sub.kernel.dim() > 0) {
        RationalMatrix both(sub.kernel.dim() + super.kernel.dim(), super.kernel.ambient);
        for (std::size_t r = 0; r < super.kernel.dim(); ++r)
            for (std::size_t c = 0; c < both.cols(); ++c)
                both(r, c) = super.kernel.rows(r, c);
        for (std::size_t r = 0; r < sub.kernel.dim(); ++r)
            for (std::size_t c = 0; c < both.cols(); ++c)
                both(super.kernel.dim() + r, c) = sub.kernel.rows(r, c);
        if (rank(both) != rank(super.kernel.rows))
            throw Error(ErrorCode::NotContained, "kernel is not contained in the larger kernel");
    }
    for (std::size_t q = 0; q <= max_q; ++q)
        if (graded_dim(sub, q, budget) < graded_dim(super, q, budget))
            return false;
    return true;
}

}  // namespace kmk
