#ifndef FGLKIT_TESTS_PROPERTIES_HPP
#define FGLKIT_TESTS_PROPERTIES_HPP

// Randomized property runners shared by the unit tests and the acceptance
// binary. Each runner returns how many cases ran and the first failure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fglkit/fgl.hpp"
#include "fglkit/fp_linalg.hpp"
#include "fglkit/graded_algebra.hpp"

namespace fglkit::testing {

struct PropertyResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
    void fail(const std::string& what)
    {
        if (failures++ == 0)
            first_failure = what;
    }
};

inline constexpr Residue small_primes[] = {3, 5, 7, 11, 13};

inline Residue random_prime(std::mt19937_64& rng)
{
    return small_primes[std::uniform_int_distribution<std::size_t>(0, std::size(small_primes) - 1)(rng)];
}

/// A ring with odd and even symbols and the four law variables.
inline RingPtr mixed_ring(Residue p, int truncation, int cap = RingDescriptor::no_cap)
{
    return make_ring({{"x1", 2}, {"x2", 2}, {"e1", 1}, {"e2", 1}}, {{"s", 1}, {"t", 2}, {"u", 3}}, truncation, p,
                     cap);
}

/// Random element; `zero_constant` drops the constant term, `parity`
/// keeps only terms of that total-degree parity, `degree` only terms of that
/// total degree, `min_geometric` only terms of at least that geometric degree.
struct PolyShape {
    int max_terms = 6;
    bool zero_constant = false;
    std::optional<int> parity;
    std::optional<int> degree;
    bool geometric_only = false;
    int min_geometric = 0;
};

inline GradedPolynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, const PolyShape& shape = {})
{
    const auto& vars = ring->variables();
    std::uniform_int_distribution<int> nterms(0, shape.max_terms);
    std::uniform_int_distribution<std::int64_t> coeff(1, ring->prime() - 1);
    std::vector<std::pair<Exponents, std::int64_t>> terms;
    const int want = nterms(rng);
    for (int attempt = 0; static_cast<int>(terms.size()) < want && attempt < 40 * (want + 1); ++attempt) {
        Exponents e(vars.size(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (shape.geometric_only && ring->is_symbol(i))
                continue;
            const int hi = vars[i].is_odd() ? 1 : 2;
            e[i] = static_cast<std::uint8_t>(std::uniform_int_distribution<int>(0, hi)(rng));
        }
        const int g = geometric_degree(*ring, e);
        const int s = symbol_degree(*ring, e);
        if (g > ring->truncation() || s > ring->symbol_cap())
            continue;
        if (shape.zero_constant && g + s == 0)
            continue;
        if (g < shape.min_geometric)
            continue;
        if (shape.parity && (g + s) % 2 != *shape.parity)
            continue;
        if (shape.degree && g + s != *shape.degree)
            continue;
        terms.emplace_back(std::move(e), coeff(rng));
    }
    return GradedPolynomial::from_terms(ring, terms);
}

/// Independent product: expand both monomials into words of variable
/// indices, concatenate, bubble-sort and count odd/odd transpositions.
inline GradedPolynomial oracle_mul(const GradedPolynomial& a, const GradedPolynomial& b)
{
    const auto& ring = a.ring();
    const auto& vars = ring->variables();
    const Residue p = ring->prime();
    auto word = [&](const Exponents& e) {
        std::vector<std::size_t> w;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k)
                w.push_back(i);
        return w;
    };
    std::map<Exponents, std::int64_t> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            auto w = word(ta.exponents);
            const auto wb = word(tb.exponents);
            w.insert(w.end(), wb.begin(), wb.end());
            int sign = 1;
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
                    if (w[j] > w[j + 1]) {
                        if (vars[w[j]].is_odd() && vars[w[j + 1]].is_odd())
                            sign = -sign;
                        std::swap(w[j], w[j + 1]);
                    }
            bool vanishes = false;
            Exponents e(vars.size(), 0);
            for (auto v : w) {
                if (vars[v].is_odd() && e[v] == 1)
                    vanishes = true;
                ++e[v];
            }
            if (vanishes)
                continue;
            if (geometric_degree(*ring, e) > ring->truncation() || symbol_degree(*ring, e) > ring->symbol_cap())
                continue;
            const auto c = static_cast<std::int64_t>(mul_mod(ta.coefficient, tb.coefficient, p));
            acc[e] = (acc[e] + sign * c) % static_cast<std::int64_t>(p);
        }
    }
    std::vector<std::pair<Exponents, std::int64_t>> terms(acc.begin(), acc.end());
    return GradedPolynomial::from_terms(ring, terms);
}

inline std::string show(const GradedPolynomial& f) { return format_polynomial(f); }

/// mul(a, b) = (-1)^{|a||b|} mul(b, a) for homogeneous a, b, and mul agrees
/// with the word-sorting oracle.
inline PropertyResult sign_law(std::uint64_t seed, int cases)
{
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (int i = 0; i < cases; ++i, ++r.cases) {
        const auto ring = mixed_ring(random_prime(rng), 8);
        const int da = std::uniform_int_distribution<int>(1, 6)(rng);
        const int db = std::uniform_int_distribution<int>(1, 6)(rng);
        const auto a = random_polynomial(rng, ring, {.max_terms = 5, .degree = da});
        const auto b = random_polynomial(rng, ring, {.max_terms = 5, .degree = db});
        const auto ab = a * b;
        const auto ba = b * a;
        const auto expected = (da * db) % 2 ? -ba : ba;
        if (!(ab == expected))
            r.fail("a = " + show(a) + ", b = " + show(b) + ": ab = " + show(ab) + ", ba = " + show(ba));
        else if (!(ab == oracle_mul(a, b)))
            r.fail("oracle disagrees for a = " + show(a) + ", b = " + show(b));
    }
    return r;
}

/// Truncating inputs before mul equals truncating the full product.
inline PropertyResult truncation_coherence(std::uint64_t seed, int cases)
{
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (int i = 0; i < cases; ++i, ++r.cases) {
        const Residue p = random_prime(rng);
        const int d = std::uniform_int_distribution<int>(2, 7)(rng);
        const auto big = mixed_ring(p, 2 * d + 2);
        const auto small = with_truncation(*big, d);
        const PolyShape shape{.max_terms = 6, .zero_constant = true};
        const auto a = random_polynomial(rng, big, shape);
        const auto b = random_polynomial(rng, big, shape);
        const auto lhs = rebase(a, small) * rebase(b, small);
        const auto rhs = rebase(a * b, small);
        if (!(lhs == rhs))
            r.fail("D = " + std::to_string(d) + ", a = " + show(a) + ", b = " + show(b));
    }
    return r;
}

/// substitute(f g) = substitute(f) substitute(g), substitute(f + g) likewise.
inline PropertyResult substitution_homomorphism(std::uint64_t seed, int cases)
{
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (int i = 0; i < cases; ++i, ++r.cases) {
        const Residue p = random_prime(rng);
        const int d = std::uniform_int_distribution<int>(3, 8)(rng);
        const auto source = mixed_ring(p, d);
        const auto target = make_ring({{"x", 2}, {"y", 2}, {"e", 1}, {"f", 1}}, {{"s", 1}, {"t", 2}, {"u", 3}}, d, p);
        const auto f = random_polynomial(rng, source, {.max_terms = 5});
        const auto g = random_polynomial(rng, source, {.max_terms = 5});
        Substitution images;
        for (const auto& v : source->geometric())
            images.emplace(v.name, random_polynomial(rng, target,
                                                     {.max_terms = 3,
                                                      .zero_constant = true,
                                                      .parity = v.degree % 2,
                                                      .min_geometric = v.degree}));
        const auto prod = substitute(f * g, images, target);
        const auto split = substitute(f, images, target) * substitute(g, images, target);
        const auto sum = substitute(f + g, images, target);
        const auto split_sum = substitute(f, images, target) + substitute(g, images, target);
        if (!(prod == split))
            r.fail("product: f = " + show(f) + ", g = " + show(g));
        else if (!(sum == split_sum))
            r.fail("sum: f = " + show(f) + ", g = " + show(g));
    }
    return r;
}

inline FpMatrix random_matrix(std::mt19937_64& rng, Residue p, std::size_t max_dim = 6)
{
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    const auto rows = dim(rng), cols = dim(rng);
    // bias towards rank deficiency: sometimes copy combinations of earlier rows
    std::uniform_int_distribution<std::int64_t> entry(0, p - 1);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (i > 0 && entry(rng) % 3 == 0) {
            const auto j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
            const auto c = entry(rng);
            for (std::size_t k = 0; k < cols; ++k)
                m[i][k] = (c * m[j][k] + (entry(rng) % 4 == 0 ? entry(rng) : 0)) % p;
        } else {
            for (auto& x : m[i])
                x = entry(rng);
        }
    }
    return FpMatrix::from_integers(m, p);
}

/// Rank as log_p of the size of the row space, by enumerating every
/// combination of rows. Only for tiny matrices.
inline std::size_t brute_force_rank(const FpMatrix& m)
{
    const Residue p = m.modulus();
    std::vector<Residue> coeffs(m.rows(), 0);
    std::map<std::vector<Residue>, bool> space;
    while (true) {
        std::vector<Residue> v(m.cols(), 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                v[j] = add_mod(v[j], mul_mod(coeffs[i], m.at(i, j), p), p);
        space[v] = true;
        std::size_t k = 0;
        while (k < coeffs.size() && ++coeffs[k] == p)
            coeffs[k++] = 0;
        if (k == coeffs.size())
            break;
    }
    std::size_t r = 0;
    for (std::size_t size = space.size(); size > 1; size /= p)
        ++r;
    return r;
}

/// rank(m) = rank(m^T) = rank(rref m); rref idempotent; rank invariant under
/// row permutation and nonzero row scaling; small cases against brute force.
inline PropertyResult rank_invariances(std::uint64_t seed, int cases)
{
    std::mt19937_64 rng(seed);
    PropertyResult r;
    for (int i = 0; i < cases; ++i, ++r.cases) {
        const Residue p = random_prime(rng);
        const auto m = random_matrix(rng, p);
        const auto rk = rank(m);
        const auto rr = rref(m);
        std::ostringstream id;
        id << "case " << i << " (p = " << p << ", " << m.rows() << "x" << m.cols() << ")";

        std::vector<std::size_t> order(m.rows());
        for (std::size_t k = 0; k < order.size(); ++k)
            order[k] = k;
        std::shuffle(order.begin(), order.end(), rng);
        const auto row = std::uniform_int_distribution<std::size_t>(0, m.rows() - 1)(rng);
        const auto scale = std::uniform_int_distribution<Residue>(1, p - 1)(rng);
        FpMatrix permuted(m.rows(), m.cols(), p), scaled(m.rows(), m.cols(), p);
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b) {
                permuted.set(a, b, m.at(order[a], b));
                scaled.set(a, b, a == row ? mul_mod(m.at(a, b), scale, p) : m.at(a, b));
            }

        if (rank(m.transpose()) != rk)
            r.fail(id.str() + ": transpose");
        else if (rank(rr) != rk)
            r.fail(id.str() + ": rank of rref");
        else if (!(rref(rr) == rr))
            r.fail(id.str() + ": rref not idempotent");
        else if (rank(permuted) != rk)
            r.fail(id.str() + ": row permutation");
        else if (rank(scaled) != rk)
            r.fail(id.str() + ": row scaling");
        else if (m.rows() <= 4 && p <= 7 && brute_force_rank(m) != rk)
            r.fail(id.str() + ": brute force rank differs");
    }
    return r;
}

} // namespace fglkit::testing

#endif
