#include "kmk/rootsys.hpp"

#include "kmk/error.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace kmk {

bool Weight::is_dominant() const
{
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

Weight operator+(Weight a, const Weight& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

Weight operator-(Weight a, const Weight& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

Weight operator-(Weight a)
{
    for (int& c : a.coords)
        c = -c;
    return a;
}

Weight operator*(int k, Weight a)
{
    for (int& c : a.coords)
        c *= k;
    return a;
}

RootVector RootVector::simple(std::size_t rank, std::size_t i)
{
    RootVector v{std::vector<int>(rank, 0)};
    v[i] = 1;
    return v;
}

bool RootVector::is_positive() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; }) &&
           std::any_of(coeffs.begin(), coeffs.end(), [](int c) { return c > 0; });
}

int RootVector::height() const
{
    int h = 0;
    for (int c : coeffs)
        h += c;
    return h;
}

RootVector operator+(RootVector a, const RootVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

RootVector operator-(RootVector a, const RootVector& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

std::size_t VectorHash::operator()(const std::vector<int>& v) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int c : v) {
        h ^= static_cast<std::size_t>(static_cast<unsigned>(c)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

void check_index(const GeneralizedCartanMatrix& m, std::size_t i)
{
    if (i >= m.size())
        throw Error(ErrorCode::IndexOutOfRange, "simple reflection " + std::to_string(i));
}

}  // namespace

int coroot_pairing(const GeneralizedCartanMatrix& m, std::size_t i, const RootVector& v)
{
    check_index(m, i);
    int s = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
        s += m(i, j) * v[j];
    return s;
}

RootVector reflect(const GeneralizedCartanMatrix& m, std::size_t i, const RootVector& v)
{
    RootVector out = v;
    out[i] -= coroot_pairing(m, i, v);
    return out;
}

Weight reflect(const GeneralizedCartanMatrix& m, std::size_t i, const Weight& mu)
{
    check_index(m, i);
    Weight out = mu;
    const int c = mu[i];
    for (std::size_t k = 0; k < m.size(); ++k)
        out[k] -= c * m(k, i);
    return out;
}

Weight to_weight(const GeneralizedCartanMatrix& m, const RootVector& v)
{
    Weight w{std::vector<int>(m.size(), 0)};
    for (std::size_t k = 0; k < m.size(); ++k)
        w[k] = coroot_pairing(m, k, v);
    return w;
}

RootSystem::RootSystem(GeneralizedCartanMatrix cartan) : cartan_(std::move(cartan))
{
    const std::size_t n = cartan_.size();
    if (n > 0 && !classify(cartan_).all_finite())
        throw Error(ErrorCode::NotFiniteType, "root system requires a finite-type Cartan matrix");

    // closure of the simple roots under simple reflections
    std::unordered_set<std::vector<int>, VectorHash> seen;
    std::deque<RootVector> todo;
    for (std::size_t i = 0; i < n; ++i) {
        todo.push_back(RootVector::simple(n, i));
        seen.insert(todo.back().coeffs);
    }
    while (!todo.empty()) {
        RootVector r = std::move(todo.front());
        todo.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            RootVector s = kmk::reflect(cartan_, i, r);
            if (s.is_positive() && seen.insert(s.coeffs).second)
                todo.push_back(std::move(s));
        }
        positive_.push_back(std::move(r));
    }
    std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
        return a.height() != b.height() ? a.height() < b.height() : a < b;
    });
    for (const auto& r : positive_)
        positive_weights_.push_back(to_weight(r));

    if (n == 0)
        return;

    d_ = symmetrize(cartan_).d;
    RationalMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            c(i, j) = cartan_(i, j);
    // inverse via reduced echelon of [C | I]
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = c(i, j);
        aug(i, n + i) = 1;
    }
    const RowEchelon e = row_echelon(aug);
    inverse_ = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inverse_(i, j) = e.reduced(i, n + j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lattice_index_.get_mpz_t(), lattice_index_.get_mpz_t(), inverse_(i, j).get_den_mpz_t());

    // (omega_i, omega_j) = d_i (C^{-1})_{ij}
    Integer denom = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational g = Rational(d_[i]) * inverse_(i, j);
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), g.get_den_mpz_t());
        }
    gram_scale_ = Rational(denom);
    gram_.assign(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational g = Rational(d_[i]) * inverse_(i, j) * gram_scale_;
            gram_[i][j] = g.get_num().get_si();
        }
}

Weight RootSystem::reflect(std::size_t i, const Weight& mu) const { return kmk::reflect(cartan_, i, mu); }

RootVector RootSystem::reflect(std::size_t i, const RootVector& v) const { return kmk::reflect(cartan_, i, v); }

std::vector<Rational> RootSystem::to_root_coords(const Weight& mu) const
{
    std::vector<Rational> r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            r[i] += inverse_(i, j) * mu[j];
    return r;
}

std::vector<Integer> RootSystem::scaled_root_coords(const Weight& mu) const
{
    std::vector<Integer> out;
    out.reserve(rank());
    for (const Rational& q : to_root_coords(mu)) {
        Rational s = q * lattice_index_;
        out.push_back(s.get_num());
    }
    return out;
}

std::pair<Weight, WeylWord> RootSystem::make_dominant(Weight mu) const
{
    WeylWord word;
    for (;;) {
        std::size_t i = 0;
        while (i < rank() && mu[i] >= 0)
            ++i;
        if (i == rank())
            break;
        mu = reflect(i, mu);
        word.letters.push_back(i);
    }
    return {std::move(mu), std::move(word)};
}

Weight RootSystem::apply(const WeylWord& w, Weight mu) const
{
    for (std::size_t i : w.letters)
        mu = reflect(i, mu);
    return mu;
}

Weight RootSystem::dual(const Weight& lambda) const
{
    if (!lambda.is_dominant())
        throw Error(ErrorCode::NotDominant, "dual of a non-dominant weight");
    return make_dominant(-lambda).first;
}

Weight RootSystem::simple_root(std::size_t i) const { return to_weight(RootVector::simple(rank(), i)); }

std::int64_t RootSystem::scaled_form(const Weight& a, const Weight& b) const
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0)
            continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < rank(); ++j)
            row += gram_[i][j] * b[j];
        s += a[i] * row;
    }
    return s;
}

Rational RootSystem::form(const Weight& a, const Weight& b) const
{
    return Rational(static_cast<long>(scaled_form(a, b))) / gram_scale_;
}

bool RootSystem::dominates(const Weight& a, const Weight& b) const
{
    for (const Rational& q : to_root_coords(a - b))
        if (q < 0 || q.get_den() != 1)
            return false;
    return true;
}

std::vector<Weight> RootSystem::orbit(const Weight& mu) const
{
    std::unordered_set<std::vector<int>, VectorHash> seen{mu.coords};
    std::vector<Weight> out{mu};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (std::size_t i = 0; i < rank(); ++i) {
            if (out[k][i] == 0)
                continue;
            Weight next = reflect(i, out[k]);
            if (seen.insert(next.coords).second)
                out.push_back(std::move(next));
        }
    return out;
}

}  // namespace kmk
