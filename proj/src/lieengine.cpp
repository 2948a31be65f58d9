#include "kmk/lieengine.hpp"

#include "kmk/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace kmk {

namespace {

RootVector shifted(RootVector v, std::size_t i, int by)
{
    v[i] += by;
    return v;
}

std::size_t simple_index(const RootVector& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            return i;
    return v.size();
}

std::string degree_string(const RootVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

TruncatedAlgebra::TruncatedAlgebra(GeneralizedCartanMatrix m, std::optional<std::size_t> node, int max_level,
                                   int max_height)
    : m_(std::move(m)), node_(node), max_level_(max_level), max_height_(max_height)
{
    if (node_ && *node_ >= m_.size())
        throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(*node_));
}

void TruncatedAlgebra::check_degree(const RootVector& delta) const
{
    if (delta.size() != m_.size())
        throw Error(ErrorCode::InvalidInput, "degree " + degree_string(delta) + " has wrong length");
    if (!delta.is_positive())
        throw Error(ErrorCode::InvalidInput, "degree " + degree_string(delta) + " is not a positive multidegree");
    if (delta.height() > max_height_)
        throw Error(ErrorCode::OutOfTruncation, "degree " + degree_string(delta) + " exceeds the height bound");
    if (node_ && delta[*node_] > max_level_)
        throw Error(ErrorCode::OutOfTruncation, "degree " + degree_string(delta) + " exceeds the level bound");
}

const TruncatedAlgebra::Component& TruncatedAlgebra::get(const RootVector& delta)
{
    if (auto it = components_.find(delta.coeffs); it != components_.end())
        return it->second;
    check_degree(delta);
    Component c = build(delta);
    return components_.emplace(delta.coeffs, std::move(c)).first->second;
}

TruncatedAlgebra::Component TruncatedAlgebra::build(const RootVector& delta)
{
    const std::size_t n = m_.size();
    Component c;
    c.lower.resize(n);
    c.raise.resize(n);

    if (delta.height() == 1) {
        const std::size_t i = simple_index(delta);
        c.dim = 1;
        c.labels = {"e" + std::to_string(i)};
        c.defs = {{i, 0}};
        return c;
    }

    // Candidates [e_i, y] for y running over a basis of g_{delta - alpha_i}.
    struct Candidate {
        std::size_t i;
        std::size_t b;
    };
    std::vector<Candidate> candidates;
    std::vector<const Component*> below(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
        if (delta[i] == 0)
            continue;
        below[i] = &get(shifted(delta, i, -1));
        for (std::size_t b = 0; b < below[i]->dim; ++b)
            candidates.push_back({i, b});
    }

    // Image of each candidate under all f_j, one block per j.
    std::vector<std::size_t> offset(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j)
        offset[j + 1] = offset[j] + (below[j] ? below[j]->dim : 0);
    RationalMatrix image(offset[n], candidates.size());

    for (std::size_t col = 0; col < candidates.size(); ++col) {
        const auto [i, b] = candidates[col];
        const RootVector gamma = shifted(delta, i, -1);
        const bool gamma_simple = gamma.height() == 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[j])
                continue;
            const std::size_t base = offset[j];
            // [[f_j, e_i], y] = -delta_ij [h_i, y]
            if (j == i)
                image(base + b, col) -= coroot_pairing(m_, i, gamma);
            // [e_i, [f_j, y]]
            if (gamma_simple) {
                if (simple_index(gamma) == j)
                    image(base, col) += m_(j, i);  // [e_i, -h_j] = a[j][i] e_i
            } else if (gamma[j] > 0) {
                const RationalMatrix& f = get(gamma).lower[j];
                const RationalMatrix& e = get(shifted(delta, j, -1)).raise[i];
                for (std::size_t r = 0; r < e.rows(); ++r) {
                    Rational s = 0;
                    for (std::size_t k = 0; k < e.cols(); ++k)
                        if (f(k, b) != 0)
                            s += e(r, k) * f(k, b);
                    image(base + r, col) += s;
                }
            }
        }
    }

    const RowEchelon ech = row_echelon(image);
    c.dim = ech.pivots.size();
    for (std::size_t p : ech.pivots) {
        const auto [i, b] = candidates[p];
        c.labels.push_back("[e" + std::to_string(i) + "," + below[i]->labels[b] + "]");
        c.defs.emplace_back(i, b);
    }
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!below[i])
            continue;
        c.raise[i] = RationalMatrix(c.dim, below[i]->dim);
        for (std::size_t b = 0; b < below[i]->dim; ++b, ++col)
            for (std::size_t r = 0; r < c.dim; ++r)
                c.raise[i](r, b) = ech.reduced(r, col);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!below[j])
            continue;
        c.lower[j] = RationalMatrix(below[j]->dim, c.dim);
        for (std::size_t r = 0; r < c.dim; ++r)
            for (std::size_t k = 0; k < below[j]->dim; ++k)
                c.lower[j](k, r) = image(offset[j] + k, ech.pivots[r]);
    }
    return c;
}

GradedComponent TruncatedAlgebra::component(const RootVector& delta)
{
    const Component& c = get(delta);
    return {delta, c.dim, c.labels};
}

std::size_t TruncatedAlgebra::dim(const RootVector& delta) { return get(delta).dim; }

const RationalMatrix& TruncatedAlgebra::raising(std::size_t i, const RootVector& delta)
{
    if (i >= m_.size())
        throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(i));
    get(delta);
    return get(shifted(delta, i, 1)).raise[i];
}

const RationalMatrix& TruncatedAlgebra::lowering(std::size_t j, const RootVector& delta)
{
    if (j >= m_.size())
        throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(j));
    const Component& c = get(delta);
    if (delta.height() < 2)
        throw Error(ErrorCode::InvalidInput, "f_j maps a simple root space into the Cartan subalgebra");
    if (delta[j] == 0)
        return empty_;
    return c.lower[j];
}

const RationalMatrix& TruncatedAlgebra::ad(const RootVector& delta, std::size_t b, const RootVector& eps)
{
    auto key = std::make_tuple(delta.coeffs, b, eps.coeffs);
    if (auto it = ad_cache_.find(key); it != ad_cache_.end())
        return it->second;

    const Component& x = get(delta);
    if (b >= x.dim)
        throw Error(ErrorCode::IndexOutOfRange, "basis element " + std::to_string(b) + " of " + degree_string(delta));
    const std::size_t source = dim(eps);
    const RootVector total = delta + eps;
    const std::size_t target = dim(total);

    RationalMatrix out(target, source);
    if (target > 0 && source > 0) {
        const auto [i, bp] = x.defs[b];
        if (delta.height() == 1) {
            out = raising(i, eps);
        } else {
            // ad [e_i, x'] = ad e_i ad x' - ad x' ad e_i
            const RootVector inner = shifted(delta, i, -1);
            const RationalMatrix first = raising(i, inner + eps) * ad(inner, bp, eps);
            const RationalMatrix second = ad(inner, bp, shifted(eps, i, 1)) * raising(i, eps);
            out = first - second;
        }
    }
    return ad_cache_.emplace(std::move(key), std::move(out)).first->second;
}

std::vector<Rational> TruncatedAlgebra::bracket(const RootVector& delta, const std::vector<Rational>& x,
                                                const RootVector& eps, const std::vector<Rational>& y)
{
    if (x.size() != dim(delta) || y.size() != dim(eps))
        throw Error(ErrorCode::InvalidInput, "coordinate vector does not match component dimension");
    std::vector<Rational> out(dim(delta + eps));
    for (std::size_t b = 0; b < x.size(); ++b) {
        if (x[b] == 0)
            continue;
        const std::vector<Rational> col = ad(delta, b, eps).apply(y);
        for (std::size_t r = 0; r < out.size(); ++r)
            out[r] += x[b] * col[r];
    }
    return out;
}

GradedComponent graded_component(const GeneralizedCartanMatrix& m, const RootVector& delta)
{
    TruncatedAlgebra alg(m);
    return alg.component(delta);
}

LevelBasis level_basis(TruncatedAlgebra& alg, int level)
{
    const GeneralizedCartanMatrix& m = alg.matrix();
    const std::size_t n = m.size();
    std::deque<RootVector> todo;
    if (level == 1) {
        todo.push_back(RootVector::simple(n, 0));
    } else if (level == 2) {
        for (const RootVector& beta : level_basis(alg, 1).support)
            todo.push_back(shifted(beta, 0, 1));
    } else {
        throw Error(ErrorCode::OutOfTruncation, "level " + std::to_string(level) + " is not computed");
    }

    LevelBasis out;
    std::set<std::vector<int>> seen;
    for (const auto& d : todo)
        seen.insert(d.coeffs);
    std::vector<LevelBasis::Entry> entries;
    while (!todo.empty()) {
        RootVector delta = std::move(todo.front());
        todo.pop_front();
        const GradedComponent c = alg.component(delta);
        if (c.dim == 0) {
            out.shell.push_back(std::move(delta));
            continue;
        }
        Weight w{std::vector<int>(n - 1)};
        for (std::size_t k = 1; k < n; ++k)
            w[k - 1] = coroot_pairing(m, k, delta);
        for (std::size_t b = 0; b < c.dim; ++b)
            entries.push_back({delta, b, w, c.basis[b]});
        for (std::size_t i = 1; i < n; ++i) {
            RootVector next = shifted(delta, i, 1);
            if (seen.insert(next.coeffs).second)
                todo.push_back(std::move(next));
        }
        out.support.push_back(std::move(delta));
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const LevelBasis::Entry& a, const LevelBasis::Entry& b) { return a.weight < b.weight; });
    out.entries = std::move(entries);
    return out;
}

BracketData bracket_matrix(const AdmissiblePair& p)
{
    TruncatedAlgebra alg(p.matrix, 0, 2);
    BracketData out;
    out.g1 = level_basis(alg, 1);
    out.g2 = level_basis(alg, 2);

    std::map<std::pair<std::vector<int>, std::size_t>, std::size_t> row_of;
    for (std::size_t r = 0; r < out.g2.entries.size(); ++r)
        row_of[{out.g2.entries[r].degree.coeffs, out.g2.entries[r].index}] = r;

    const auto& g1 = out.g1.entries;
    const std::size_t d = g1.size();
    out.matrix = RationalMatrix(out.g2.entries.size(), d * (d - 1) / 2);
    std::size_t col = 0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b, ++col) {
            const RootVector total = g1[a].degree + g1[b].degree;
            const RationalMatrix& adx = alg.ad(g1[a].degree, g1[a].index, g1[b].degree);
            for (std::size_t r = 0; r < adx.rows(); ++r) {
                const Rational& v = adx(r, g1[b].index);
                if (v == 0)
                    continue;
                const auto it = row_of.find({total.coeffs, r});
                if (it == row_of.end())
                    throw Error(ErrorCode::SurjectivityFailure,
                                "bracket lands in " + degree_string(total) + " outside the level-2 support");
                out.matrix(it->second, col) = v;
            }
        }

    const std::size_t rk = rank(out.matrix);
    if (rk != out.g2.entries.size())
        throw Error(ErrorCode::SurjectivityFailure, "bracket has rank " + std::to_string(rk) + " but dim g_2 = " +
                                                        std::to_string(out.g2.entries.size()));
    out.kernel.ambient = out.matrix.cols();
    out.kernel.rows = null_space(out.matrix);
    return out;
}

Rational norm(const Symmetrization& s, const RootVector& delta)
{
    if (delta.size() != s.d.size())
        throw Error(ErrorCode::InvalidInput, "degree has wrong length");
    Rational out = 0;
    for (std::size_t i = 0; i < delta.size(); ++i)
        for (std::size_t j = 0; j < delta.size(); ++j)
            out += s.form(i, j) * delta[i] * delta[j];
    return out;
}

Rational norm(const GeneralizedCartanMatrix& m, const RootVector& delta) { return norm(symmetrize(m), delta); }

Symmetrization rank2_form(int a, int b)
{
    if (a <= 0 || b <= 0)
        throw Error(ErrorCode::InvalidInput, "rank-2 form needs a, b > 0");
    Symmetrization s;
    s.d = {Integer(b), Integer(a)};
    s.form = RationalMatrix(2, 2);
    s.form(0, 0) = 2 * b;
    s.form(0, 1) = -a * b;
    s.form(1, 0) = -a * b;
    s.form(1, 1) = 2 * a;
    return s;
}

std::string to_string(RootClass c)
{
    switch (c) {
    case RootClass::Real:
        return "Real";
    case RootClass::Imaginary:
        return "Imaginary";
    case RootClass::NotRoot:
        return "NotRoot";
    }
    return "?";
}

namespace {

void require_supported_type(const GeneralizedCartanMatrix& m)
{
    for (const auto& c : classify(m).components)
        if (c.kind == Kind::Indefinite && !c.hyperbolic)
            throw Error(ErrorCode::UnsupportedType, "root test needs finite, affine or hyperbolic components");
}

}  // namespace

RootClass classify_root(const GeneralizedCartanMatrix& m, const RootVector& delta)
{
    require_supported_type(m);
    return classify_root(m, symmetrize(m), delta);
}

RootClass classify_root(const GeneralizedCartanMatrix& m, const Symmetrization& s, const RootVector& delta)
{
    require_supported_type(m);
    if (!support_connected(m, delta.coeffs))
        return RootClass::NotRoot;
    const Rational q = norm(s, delta);
    if (q <= 0)
        return RootClass::Imaginary;
    for (std::size_t i = 0; i < delta.size(); ++i) {
        const Rational t = s.form(i, i) * delta[i] / q;
        if (t.get_den() != 1)
            return RootClass::NotRoot;
    }
    return RootClass::Real;
}

std::vector<std::pair<RootVector, RootClass>> enumerate_rank2_roots(const GeneralizedCartanMatrix& m, int h)
{
    if (m.size() != 2)
        throw Error(ErrorCode::InvalidInput, "rank-2 matrix expected");
    require_supported_type(m);
    const Symmetrization s = symmetrize(m);
    std::vector<std::pair<RootVector, RootClass>> out;
    for (int t = 1; t <= h; ++t)
        for (int x = 0; x <= t; ++x) {
            RootVector v{{x, t - x}};
            const RootClass c = classify_root(m, s, v);
            if (c != RootClass::NotRoot)
                out.emplace_back(std::move(v), c);
        }
    return out;
}

}  // namespace kmk
