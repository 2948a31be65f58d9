#include "kmk/gcm.hpp"

#include "kmk/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>

namespace kmk {

namespace {

std::string entry_name(std::size_t i, std::size_t j)
{
    std::ostringstream os;
    os << "a[" << i << "][" << j << "]";
    return os.str();
}

}  // namespace

GeneralizedCartanMatrix GeneralizedCartanMatrix::validate(IntMatrix entries, std::vector<std::string> labels)
{
    const std::size_t n = entries.size();
    if (n == 0)
        throw Error(ErrorCode::InvalidInput, "empty matrix");
    for (const auto& row : entries)
        if (row.size() != n)
            throw Error(ErrorCode::InvalidInput, "matrix is not square");
    if (!labels.empty() && labels.size() != n)
        throw Error(ErrorCode::InvalidInput, "label count does not match matrix size");

    for (std::size_t i = 0; i < n; ++i)
        if (entries[i][i] != 2)
            throw Error(ErrorCode::DiagonalNotTwo, entry_name(i, i) + " = " + std::to_string(entries[i][i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && entries[i][j] > 0)
                throw Error(ErrorCode::PositiveOffDiagonal, entry_name(i, j) + " = " + std::to_string(entries[i][j]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && entries[i][j] == 0 && entries[j][i] != 0)
                throw Error(ErrorCode::AsymmetricZero, entry_name(i, j) + " = 0 but " + entry_name(j, i) + " = " +
                                                           std::to_string(entries[j][i]));

    GeneralizedCartanMatrix m;
    m.entries_ = std::move(entries);
    m.labels_ = std::move(labels);
    return m;
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::principal_submatrix(const std::vector<std::size_t>& nodes) const
{
    GeneralizedCartanMatrix m;
    m.entries_.assign(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b)
            m.entries_[a][b] = entries_[nodes[a]][nodes[b]];
    if (!labels_.empty())
        for (std::size_t v : nodes)
            m.labels_.push_back(labels_[v]);
    return m;
}

std::vector<std::vector<std::size_t>> GeneralizedCartanMatrix::components() const
{
    const std::size_t n = size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<std::size_t> comp;
        std::queue<std::size_t> todo;
        todo.push(s);
        seen[s] = true;
        while (!todo.empty()) {
            const std::size_t v = todo.front();
            todo.pop();
            comp.push_back(v);
            for (std::size_t w = 0; w < n; ++w)
                if (!seen[w] && adjacent(v, w)) {
                    seen[w] = true;
                    todo.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::size_t> GeneralizedCartanMatrix::component_of(std::size_t node) const
{
    for (auto& comp : components())
        if (std::find(comp.begin(), comp.end(), node) != comp.end())
            return comp;
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node));
}

GeneralizedCartanMatrix GeneralizedCartanMatrix::transposed() const
{
    GeneralizedCartanMatrix m = *this;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            m.entries_[i][j] = entries_[j][i];
    return m;
}

std::string to_string(Kind kind)
{
    switch (kind) {
    case Kind::Finite: return "Finite";
    case Kind::Affine: return "Affine";
    case Kind::Indefinite: return "Indefinite";
    }
    return "?";
}

bool TypeClassification::all_finite() const
{
    return std::all_of(components.begin(), components.end(),
                       [](const ComponentType& c) { return c.kind == Kind::Finite; });
}

std::size_t corank(const GeneralizedCartanMatrix& m)
{
    RationalMatrix q(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            q(i, j) = m(i, j);
    return m.size() - rank(q);
}

namespace {

// Principal minors of a small integer matrix, indexed by bitmask.
std::vector<Integer> principal_minors(const GeneralizedCartanMatrix& m)
{
    const std::size_t n = m.size();
    if (n > 20)
        throw Error(ErrorCode::InvalidInput, "component too large to classify");
    std::vector<Integer> det(std::size_t{1} << n);
    det[0] = 1;
    for (std::size_t mask = 1; mask < det.size(); ++mask) {
        std::vector<std::size_t> nodes;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                nodes.push_back(i);
        det[mask] = integer_determinant(m.principal_submatrix(nodes).entries());
    }
    return det;
}

bool mask_connected(const GeneralizedCartanMatrix& m, std::size_t mask)
{
    if (mask == 0)
        return false;
    const std::size_t start = static_cast<std::size_t>(std::countr_zero(mask));
    std::size_t reached = std::size_t{1} << start;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
        const std::size_t v = todo.front();
        todo.pop();
        for (std::size_t w = 0; w < m.size(); ++w)
            if ((mask >> w & 1) && !(reached >> w & 1) && m.adjacent(v, w)) {
                reached |= std::size_t{1} << w;
                todo.push(w);
            }
    }
    return reached == mask;
}

struct MinorTable {
    std::vector<Integer> det;
    std::vector<bool> all_positive;  // every principal minor inside mask is > 0
};

MinorTable minor_table(const GeneralizedCartanMatrix& m)
{
    MinorTable t;
    t.det = principal_minors(m);
    t.all_positive.assign(t.det.size(), false);
    t.all_positive[0] = true;
    for (std::size_t mask = 1; mask < t.det.size(); ++mask) {
        bool ok = t.det[mask] > 0;
        for (std::size_t i = 0; ok && i < m.size(); ++i)
            if (mask >> i & 1)
                ok = t.all_positive[mask & ~(std::size_t{1} << i)];
        t.all_positive[mask] = ok;
    }
    return t;
}

Kind kind_of(const MinorTable& t, std::size_t mask, std::size_t n)
{
    if (t.all_positive[mask])
        return Kind::Finite;
    bool proper_positive = t.det[mask] == 0;
    for (std::size_t i = 0; proper_positive && i < n; ++i)
        if (mask >> i & 1)
            proper_positive = t.all_positive[mask & ~(std::size_t{1} << i)];
    return proper_positive ? Kind::Affine : Kind::Indefinite;
}

// Arm lengths from a branch node in a simply-laced tree.
std::vector<std::size_t> arm_lengths(const GeneralizedCartanMatrix& m, std::size_t branch)
{
    std::vector<std::size_t> arms;
    for (std::size_t w = 0; w < m.size(); ++w) {
        if (!m.adjacent(branch, w))
            continue;
        std::size_t len = 1, prev = branch, cur = w;
        for (;;) {
            std::size_t next = m.size();
            for (std::size_t x = 0; x < m.size(); ++x)
                if (x != prev && m.adjacent(cur, x))
                    next = x;
            if (next == m.size())
                break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

std::optional<std::string> finite_name(const GeneralizedCartanMatrix& m)
{
    const std::size_t k = m.size();
    const std::string rank = std::to_string(k);
    if (k == 1)
        return "A1";
    int max_product = 0;
    std::size_t branch = k;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t degree = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (m.adjacent(i, j)) {
                ++degree;
                max_product = std::max(max_product, m(i, j) * m(j, i));
            }
        if (degree >= 3)
            branch = i;
    }
    if (max_product == 3)
        return k == 2 ? std::optional<std::string>("G2") : std::nullopt;
    if (max_product == 2) {
        if (k == 2)
            return "B2";
        const Symmetrization s = symmetrize(m);
        const Integer shortest = *std::min_element(s.d.begin(), s.d.end());
        const auto short_count =
            static_cast<std::size_t>(std::count_if(s.d.begin(), s.d.end(), [&](const Integer& x) { return x == shortest; }));
        if (k == 4 && short_count == 2)
            return "F4";
        if (short_count == 1)
            return "B" + rank;
        if (short_count == k - 1)
            return "C" + rank;
        return std::nullopt;
    }
    if (branch == k)
        return "A" + rank;
    const auto arms = arm_lengths(m, branch);
    if (arms.size() != 3)
        return std::nullopt;
    if (arms[0] == 1 && arms[1] == 1)
        return "D" + rank;
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return "E" + rank;
    return std::nullopt;
}

}  // namespace

TypeClassification classify(const GeneralizedCartanMatrix& m)
{
    TypeClassification out;
    for (auto& nodes : m.components()) {
        const GeneralizedCartanMatrix sub = m.principal_submatrix(nodes);
        const MinorTable t = minor_table(sub);
        const std::size_t full = t.det.size() - 1;
        ComponentType c;
        c.kind = kind_of(t, full, sub.size());
        c.det = t.det[full];
        c.corank = corank(sub);
        if (c.kind == Kind::Indefinite) {
            bool hyperbolic = true;
            for (std::size_t mask = 1; hyperbolic && mask < full; ++mask)
                if (mask_connected(sub, mask) && kind_of(t, mask, sub.size()) == Kind::Indefinite)
                    hyperbolic = false;
            c.hyperbolic = hyperbolic;
        }
        if (c.kind == Kind::Finite)
            c.name_hint = finite_name(sub);
        c.nodes = std::move(nodes);
        out.corank += c.corank;
        out.components.push_back(std::move(c));
    }
    out.realization_dim = m.size() + out.corank;
    return out;
}

DynkinDiagram to_diagram(const GeneralizedCartanMatrix& m)
{
    DynkinDiagram d;
    d.node_count = m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && m(j, i) != 0)
                d.arrows.push_back({i, j, -m(j, i)});
    return d;
}

GeneralizedCartanMatrix from_diagram(const DynkinDiagram& d)
{
    const std::size_t n = d.node_count;
    IntMatrix a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 2;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const Arrow& arrow : d.arrows) {
        if (arrow.source >= n || arrow.target >= n)
            throw Error(ErrorCode::IndexOutOfRange, "arrow endpoint out of range");
        if (arrow.source == arrow.target)
            throw Error(ErrorCode::InvalidInput, "loop at node " + std::to_string(arrow.source));
        if (arrow.multiplicity <= 0)
            throw Error(ErrorCode::InvalidInput, "arrow multiplicity must be positive");
        if (seen[arrow.source][arrow.target])
            throw Error(ErrorCode::InvalidInput, "duplicate arrow");
        seen[arrow.source][arrow.target] = true;
        a[arrow.target][arrow.source] = -arrow.multiplicity;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (seen[i][j] != seen[j][i])
                throw Error(ErrorCode::OneSidedEdge,
                            "edge between " + std::to_string(i) + " and " + std::to_string(j) + " has one direction only");
    return GeneralizedCartanMatrix::validate(std::move(a));
}

AdmissiblePair admissible(const GeneralizedCartanMatrix& m, std::size_t node)
{
    if (node >= m.size())
        throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(node));

    AdmissiblePair p;
    p.node = node;
    const auto comp = m.component_of(node);
    p.component.push_back(node);
    for (std::size_t v : comp)
        if (v != node)
            p.component.push_back(v);
    for (auto& other : m.components())
        if (std::find(other.begin(), other.end(), node) == other.end())
            p.ignored_components.push_back(std::move(other));

    p.matrix = m.principal_submatrix(p.component);
    if (p.component.size() > 1) {
        std::vector<std::size_t> rest(p.component.size() - 1);
        std::iota(rest.begin(), rest.end(), std::size_t{1});
        p.residual = classify(p.matrix.principal_submatrix(rest));
        // report residual nodes as indices of p.matrix
        for (auto& c : p.residual.components)
            for (auto& v : c.nodes)
                v += 1;
    }

    std::string bad;
    for (const auto& c : p.residual.components)
        if (c.kind != Kind::Finite) {
            bad += " {";
            for (std::size_t v : c.nodes)
                bad += " " + std::to_string(p.component[v]);
            bad += " } " + to_string(c.kind) + ";";
        }
    if (!bad.empty())
        throw Error(ErrorCode::NotAdmissible, "non-finite residual components:" + bad);
    return p;
}

bool thm1_criterion(const AdmissiblePair& p)
{
    for (std::size_t i = 1; i < p.matrix.size(); ++i)
        if (p.matrix(0, i) < -1)
            return false;
    return true;
}

bool support_connected(const GeneralizedCartanMatrix& m, const std::vector<int>& coeffs)
{
    if (coeffs.size() != m.size())
        throw Error(ErrorCode::InvalidInput, "coefficient vector has wrong length");
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] < 0)
            throw Error(ErrorCode::InvalidInput, "negative coefficient");
        if (coeffs[i] > 0)
            support.push_back(i);
    }
    if (support.empty())
        throw Error(ErrorCode::ZeroVector, "support of the zero vector");
    return m.principal_submatrix(support).components().size() == 1;
}

Symmetrization symmetrize(const GeneralizedCartanMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<Rational> d(n);
    std::vector<Integer> out(n);
    for (const auto& comp : m.components()) {
        d[comp.front()] = 1;
        std::vector<bool> seen(n, false);
        seen[comp.front()] = true;
        std::queue<std::size_t> todo;
        todo.push(comp.front());
        while (!todo.empty()) {
            const std::size_t i = todo.front();
            todo.pop();
            for (std::size_t j : comp) {
                if (!m.adjacent(i, j))
                    continue;
                // d_i a[i][j] = d_j a[j][i]
                const Rational dj = d[i] * m(i, j) / m(j, i);
                if (!seen[j]) {
                    seen[j] = true;
                    d[j] = dj;
                    todo.push(j);
                } else if (d[j] != dj) {
                    throw Error(ErrorCode::NotSymmetrizable,
                                "inconsistent cycle through nodes " + std::to_string(i) + " and " + std::to_string(j));
                }
            }
        }
        Integer l = 1, g = 0;
        for (std::size_t v : comp)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[v].get_den_mpz_t());
        for (std::size_t v : comp) {
            Rational s = d[v] * l;
            out[v] = s.get_num();
            g = gcd(g, out[v]);
        }
        for (std::size_t v : comp)
            out[v] /= g;
    }

    Symmetrization s;
    s.d = std::move(out);
    s.form = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.form(i, j) = Rational(s.d[i]) * m(i, j);
    return s;
}

bool is_symmetrizable(const GeneralizedCartanMatrix& m)
{
    try {
        symmetrize(m);
        return true;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotSymmetrizable)
            throw;
        return false;
    }
}

}  // namespace kmk
