#include "kmk/charring.hpp"

#include "kmk/error.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace kmk {

std::int64_t WeightMultiset::mult(const Weight& mu) const
{
    const auto it = entries.find(mu);
    return it == entries.end() ? 0 : it->second;
}

std::int64_t WeightMultiset::mass() const
{
    std::int64_t s = 0;
    for (const auto& [w, m] : entries)
        s += m;
    return s;
}

std::int64_t Character::mult(const Weight& lambda) const
{
    const auto it = constituents.find(lambda);
    return it == constituents.end() ? 0 : it->second;
}

void Character::add(const Weight& lambda, std::int64_t k)
{
    if (k == 0)
        return;
    const std::int64_t v = (constituents[lambda] += k);
    if (v < 0)
        throw Error(ErrorCode::NegativeMultiplicity, "constituent multiplicity became negative");
    if (v == 0)
        constituents.erase(lambda);
}

Character operator+(Character a, const Character& b)
{
    for (const auto& [w, m] : b.constituents)
        a.add(w, m);
    return a;
}

Character operator-(Character a, const Character& b)
{
    for (const auto& [w, m] : b.constituents)
        a.add(w, -m);
    return a;
}

Character irreducible(const Weight& lambda)
{
    Character c;
    c.add(lambda, 1);
    return c;
}

namespace {

using WeightTable = std::unordered_map<std::vector<int>, std::int64_t, VectorHash>;

void require_dominant(const Weight& lambda, std::size_t rank)
{
    if (lambda.size() != rank)
        throw Error(ErrorCode::InvalidInput, "weight has wrong number of coordinates");
    if (!lambda.is_dominant())
        throw Error(ErrorCode::NotDominant, "highest weight must be dominant");
}

// Dominant weights mu <= lambda, sorted by depth (height of lambda - mu).
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda)
{
    std::unordered_set<std::vector<int>, VectorHash> seen{lambda.coords};
    std::vector<Weight> out{lambda};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (const Weight& a : rs.positive_root_weights()) {
            Weight next = out[k] - a;
            if (next.is_dominant() && seen.insert(next.coords).second)
                out.push_back(std::move(next));
        }
    std::vector<std::pair<Integer, Weight>> keyed;
    keyed.reserve(out.size());
    for (auto& w : out) {
        Integer depth = 0;
        for (const Integer& c : rs.scaled_root_coords(lambda - w))
            depth += c;
        keyed.emplace_back(depth, std::move(w));
    }
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [depth, w] : keyed)
        out.push_back(std::move(w));
    return out;
}

std::map<Weight, std::int64_t> freudenthal(const RootSystem& rs, const Weight& lambda)
{
    const std::vector<Weight> dominant = dominant_weights_below(rs, lambda);
    const Weight rho = rs.rho();
    const Weight top = lambda + rho;
    const std::int64_t top_norm = rs.scaled_form(top, top);

    WeightTable mult;
    std::unordered_set<std::vector<int>, VectorHash> is_weight;
    for (const auto& w : dominant)
        is_weight.insert(w.coords);

    mult[lambda.coords] = 1;
    for (std::size_t k = 1; k < dominant.size(); ++k) {
        const Weight& mu = dominant[k];
        const Weight shifted = mu + rho;
        const std::int64_t denom = top_norm - rs.scaled_form(shifted, shifted);
        std::int64_t sum = 0;
        for (const Weight& alpha : rs.positive_root_weights()) {
            Weight nu = mu + alpha;
            for (;;) {
                const Weight dom = rs.make_dominant(nu).first;
                if (!is_weight.contains(dom.coords))
                    break;
                const auto it = mult.find(dom.coords);
                if (it == mult.end())
                    throw Error(ErrorCode::InvalidInput, "Freudenthal order violated");
                sum += rs.scaled_form(nu, alpha) * it->second;
                nu = nu + alpha;
            }
        }
        if (denom <= 0 || (2 * sum) % denom != 0)
            throw Error(ErrorCode::NegativeMultiplicity, "Freudenthal recursion produced a non-integral multiplicity");
        mult[mu.coords] = 2 * sum / denom;
    }

    std::map<Weight, std::int64_t> out;
    for (const auto& w : dominant) {
        const std::int64_t m = mult[w.coords];
        if (m < 0)
            throw Error(ErrorCode::NegativeMultiplicity, "Freudenthal recursion produced a negative multiplicity");
        if (m > 0)
            out.emplace(w, m);
    }
    return out;
}

struct MultiplicityCache {
    std::mutex mutex;
    std::map<std::pair<IntMatrix, std::vector<int>>, std::map<Weight, std::int64_t>> table;
};

MultiplicityCache& cache()
{
    static MultiplicityCache c;
    return c;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::DimensionOverflow, "multiplicity overflow");
    return r;
}

}  // namespace

const std::map<Weight, std::int64_t>& dominant_multiplicities(const RootSystem& rs, const Weight& lambda)
{
    require_dominant(lambda, rs.rank());
    auto key = std::make_pair(rs.cartan().entries(), lambda.coords);
    auto& c = cache();
    {
        std::lock_guard lock(c.mutex);
        if (auto it = c.table.find(key); it != c.table.end())
            return it->second;
    }
    auto computed = freudenthal(rs, lambda);
    std::lock_guard lock(c.mutex);
    return c.table.emplace(std::move(key), std::move(computed)).first->second;
}

WeightMultiset weight_multiplicities(const RootSystem& rs, const Weight& lambda)
{
    WeightMultiset out;
    for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
        for (auto& w : rs.orbit(mu))
            out.entries.emplace(std::move(w), m);
    return out;
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda)
{
    require_dominant(lambda, rs.rank());
    const Weight rho = rs.rho();
    const Weight shifted = lambda + rho;
    Rational d = 1;
    for (const Weight& alpha : rs.positive_root_weights()) {
        Rational f(static_cast<long>(rs.scaled_form(shifted, alpha)), static_cast<long>(rs.scaled_form(rho, alpha)));
        f.canonicalize();
        d *= f;
    }
    if (d.get_den() != 1 || !d.get_num().fits_slong_p())
        throw Error(ErrorCode::DimensionOverflow, "Weyl dimension is not a machine integer");
    return d.get_num().get_si();
}

std::int64_t dimension(const RootSystem& rs, const Character& c)
{
    std::int64_t d = 0;
    for (const auto& [lambda, m] : c.constituents)
        d += checked_mul(m, weyl_dim(rs, lambda));
    return d;
}

Character exterior_square(const RootSystem& rs, const Weight& lambda)
{
    require_dominant(lambda, rs.rank());
    // wedge^2 V = (V (x) V - psi^2 V) / 2. Both terms are W-invariant sums
    // sum_mu c_mu e^mu, which decompose as sum_mu c_mu sign(w) V(w(mu + rho) - rho).
    const Weight rho = rs.rho();
    std::map<Weight, std::int64_t> twice;
    auto add = [&](const Weight& shifted, std::int64_t c) {
        auto [dom, word] = rs.make_dominant(shifted);
        for (int x : dom.coords)
            if (x == 0)
                return;
        twice[dom - rho] += word.length() % 2 == 0 ? c : -c;
    };
    for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
        for (const Weight& w : rs.orbit(mu)) {
            add(lambda + w + rho, m);
            add(2 * w + rho, -m);
        }
    Character out;
    for (const auto& [nu, k] : twice) {
        if (k < 0 || k % 2 != 0)
            throw Error(ErrorCode::NegativeMultiplicity, "inconsistent exterior square multiplicity");
        if (k > 0)
            out.add(nu, k / 2);
    }
    return out;
}

Character decompose_dominant(const RootSystem& rs, std::map<Weight, std::int64_t> part)
{
    Character out;
    std::unordered_map<std::vector<int>, std::vector<Integer>, VectorHash> coords;
    auto root_coords = [&](const Weight& w) -> const std::vector<Integer>& {
        auto it = coords.find(w.coords);
        if (it == coords.end())
            it = coords.emplace(w.coords, rs.scaled_root_coords(w)).first;
        return it->second;
    };
    // a - b in the root cone, compared through scaled coordinates; lattice
    // membership is irrelevant for ordering the peeling.
    auto dominates = [&](const Weight& a, const Weight& b) {
        const auto& ca = root_coords(a);
        const auto& cb = root_coords(b);
        for (std::size_t i = 0; i < ca.size(); ++i)
            if (ca[i] < cb[i])
                return false;
        return true;
    };

    for (;;) {
        std::vector<const Weight*> live;
        for (auto it = part.begin(); it != part.end();) {
            if (it->second < 0)
                throw Error(ErrorCode::NegativeMultiplicity, "weight multiplicity went negative while peeling");
            if (it->second == 0) {
                it = part.erase(it);
                continue;
            }
            if (!it->first.is_dominant())
                throw Error(ErrorCode::InvalidInput, "non-dominant weight in dominant part");
            live.push_back(&it->first);
            ++it;
        }
        if (live.empty())
            break;
        const Weight* best = nullptr;
        for (const Weight* a : live) {
            bool maximal = true;
            for (const Weight* b : live)
                if (a != b && dominates(*b, *a)) {
                    maximal = false;
                    break;
                }
            if (maximal && (best == nullptr || *best < *a))
                best = a;
        }
        const Weight top = *best;
        const std::int64_t k = part[top];
        out.add(top, k);
        for (const auto& [mu, m] : dominant_multiplicities(rs, top))
            part[mu] -= checked_mul(k, m);
    }
    return out;
}

Character decompose(const RootSystem& rs, const WeightMultiset& w)
{
    std::map<Weight, std::int64_t> dominant_part;
    for (const auto& [mu, m] : w.entries) {
        if (mu.size() != rs.rank())
            throw Error(ErrorCode::InvalidInput, "weight has wrong number of coordinates");
        if (m < 0)
            throw Error(ErrorCode::NegativeMultiplicity, "negative weight multiplicity");
        for (std::size_t i = 0; i < rs.rank(); ++i)
            if (w.mult(rs.reflect(i, mu)) != m)
                throw Error(ErrorCode::NotWeylInvariant, "multiset is not invariant under simple reflection " +
                                                             std::to_string(i));
        if (mu.is_dominant() && m > 0)
            dominant_part.emplace(mu, m);
    }
    return decompose_dominant(rs, std::move(dominant_part));
}

WeightMultiset expand(const RootSystem& rs, const Character& c)
{
    WeightMultiset out;
    for (const auto& [lambda, k] : c.constituents)
        for (const auto& [mu, m] : weight_multiplicities(rs, lambda).entries)
            out.entries[mu] += checked_mul(k, m);
    return out;
}

Character dualize(const RootSystem& rs, const Character& c)
{
    Character out;
    for (const auto& [lambda, k] : c.constituents)
        out.add(rs.dual(lambda), k);
    return out;
}

}  // namespace kmk
