#include "fglkit/poincare.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fglkit/universal_ring.hpp"

namespace fglkit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Poincare series coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Poincare series coefficient overflow");
    return r;
}

std::size_t length_for_cap(int cap)
{
    if (cap < 0)
        throw std::invalid_argument("series cap must be nonnegative");
    return static_cast<std::size_t>(cap) + 1;
}

} // namespace

PoincareSeries::PoincareSeries(int cap) : coeffs_(length_for_cap(cap), 0) {}

PoincareSeries::PoincareSeries(int cap, std::vector<std::int64_t> coefficients) : PoincareSeries(cap)
{
    const auto n = std::min(coefficients.size(), coeffs_.size());
    std::copy_n(coefficients.begin(), n, coeffs_.begin());
}

PoincareSeries PoincareSeries::one(int cap) { return monomial(cap, 0, 1); }

PoincareSeries PoincareSeries::monomial(int cap, int degree, std::int64_t coefficient)
{
    PoincareSeries s(cap);
    if (degree < 0)
        throw std::invalid_argument("negative degree");
    if (degree <= cap)
        s.coeffs_[static_cast<std::size_t>(degree)] = coefficient;
    return s;
}

std::int64_t PoincareSeries::operator[](int degree) const
{
    if (degree < 0 || degree > cap())
        throw std::out_of_range("degree " + std::to_string(degree) + " is outside 0.." + std::to_string(cap()));
    return coeffs_[static_cast<std::size_t>(degree)];
}

PoincareSeries PoincareSeries::truncated(int cap) const
{
    if (cap > this->cap())
        throw std::invalid_argument("cannot extend a series beyond its cap");
    return {cap, coeffs_};
}

PoincareSeries add(const PoincareSeries& a, const PoincareSeries& b)
{
    const int cap = std::min(a.cap(), b.cap());
    std::vector<std::int64_t> c(length_for_cap(cap));
    for (int d = 0; d <= cap; ++d)
        c[static_cast<std::size_t>(d)] = checked_add(a[d], b[d]);
    return {cap, std::move(c)};
}

PoincareSeries sub(const PoincareSeries& a, const PoincareSeries& b)
{
    const int cap = std::min(a.cap(), b.cap());
    std::vector<std::int64_t> c(length_for_cap(cap));
    for (int d = 0; d <= cap; ++d)
        c[static_cast<std::size_t>(d)] = checked_add(a[d], checked_mul(-1, b[d]));
    return {cap, std::move(c)};
}

PoincareSeries mul(const PoincareSeries& a, const PoincareSeries& b)
{
    const int cap = std::min(a.cap(), b.cap());
    std::vector<std::int64_t> c(length_for_cap(cap), 0);
    for (int i = 0; i <= cap; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= cap; ++j)
            c[static_cast<std::size_t>(i + j)] = checked_add(c[static_cast<std::size_t>(i + j)], checked_mul(a[i], b[j]));
    }
    return {cap, std::move(c)};
}

PoincareSeries inverse(const PoincareSeries& a)
{
    const auto a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("series with constant term " + std::to_string(a0) + " is not invertible over Z");
    const int cap = a.cap();
    std::vector<std::int64_t> b(length_for_cap(cap), 0);
    b[0] = a0; // 1/a0 == a0 for a0 = +-1
    for (int n = 1; n <= cap; ++n) {
        std::int64_t s = 0;
        for (int k = 1; k <= n; ++k)
            s = checked_add(s, checked_mul(a[k], b[static_cast<std::size_t>(n - k)]));
        b[static_cast<std::size_t>(n)] = checked_mul(-a0, s);
    }
    return {cap, std::move(b)};
}

PoincareSeries shift(const PoincareSeries& s, int n)
{
    if (n < 0)
        throw std::invalid_argument("shift must be nonnegative");
    const int cap = s.cap();
    std::vector<std::int64_t> c(length_for_cap(cap), 0);
    for (int d = 0; d + n <= cap; ++d)
        c[static_cast<std::size_t>(d + n)] = s[d];
    return {cap, std::move(c)};
}

PoincareSeries sym_algebra(const PoincareSeries& module)
{
    if (module[0] != 0)
        throw std::invalid_argument("generator module must vanish in degree 0");
    const int cap = module.cap();
    std::vector<std::int64_t> c(length_for_cap(cap), 0);
    c[0] = 1;
    for (int d = 1; d <= cap; ++d) {
        const auto mult = module[d];
        if (mult < 0)
            throw std::invalid_argument("generator multiplicities must be nonnegative");
        for (std::int64_t k = 0; k < mult; ++k) {
            if (d % 2 == 0) {
                // times 1/(1 - t^d)
                for (int n = d; n <= cap; ++n)
                    c[static_cast<std::size_t>(n)] =
                        checked_add(c[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n - d)]);
            } else {
                // times (1 + t^d)
                for (int n = cap; n >= d; --n)
                    c[static_cast<std::size_t>(n)] =
                        checked_add(c[static_cast<std::size_t>(n)], c[static_cast<std::size_t>(n - d)]);
            }
        }
    }
    return {cap, std::move(c)};
}

PoincareSeries tensor_algebra(const PoincareSeries& base, const PoincareSeries& module)
{
    if (base[0] != 1)
        throw std::invalid_argument("base series must have constant term 1");
    if (module[0] != 0)
        throw std::invalid_argument("generator module must vanish in degree 0");
    const int cap = std::min(base.cap(), module.cap());
    return mul(base, inverse(sub(PoincareSeries::one(cap), module)));
}

PoincareSeries mu_homology_series(int cap)
{
    std::vector<std::int64_t> c(length_for_cap(cap), 0);
    for (int d = 2; d <= cap; d += 2)
        c[static_cast<std::size_t>(d)] = 1;
    return sym_algebra({cap, std::move(c)});
}

PoincareSeries bcp_series(int cap) { return {cap, std::vector<std::int64_t>(length_for_cap(cap), 1)}; }

PoincareSeries dual_steenrod_series(Residue prime, int cap)
{
    require_odd_prime(prime);
    std::vector<std::int64_t> gens(length_for_cap(cap), 0);
    // tau_i in degree 2p^i - 1 (i >= 0), xi_i in degree 2(p^i - 1) (i >= 1)
    for (long long q = 1; 2 * (q - 1) <= cap; q *= prime) {
        if (2 * q - 1 <= cap)
            ++gens[static_cast<std::size_t>(2 * q - 1)];
        if (q > 1)
            ++gens[static_cast<std::size_t>(2 * (q - 1))];
    }
    return sym_algebra({cap, std::move(gens)});
}

PoincareSeries lp_series(Residue prime, int cap)
{
    const auto counts = theorem_hilbert_function(prime, cap);
    std::vector<std::int64_t> c(counts.begin(), counts.end());
    return {cap, std::move(c)};
}

bool SeriesComparison::all_equal() const noexcept
{
    return std::all_of(rows.begin(), rows.end(), [](const SeriesRow& r) { return r.equal(); });
}

std::optional<int> SeriesComparison::first_mismatch() const noexcept
{
    for (const auto& r : rows)
        if (!r.equal())
            return r.degree;
    return std::nullopt;
}

std::vector<int> SeriesComparison::mismatched_degrees() const
{
    std::vector<int> out;
    for (const auto& r : rows)
        if (!r.equal())
            out.push_back(r.degree);
    return out;
}

SeriesComparison compare(const PoincareSeries& lhs, const PoincareSeries& rhs)
{
    SeriesComparison out;
    const int cap = std::min(lhs.cap(), rhs.cap());
    for (int d = 0; d <= cap; ++d)
        out.rows.push_back({d, lhs[d], rhs[d]});
    return out;
}

SeriesComparison check_v1_homology(Residue prime, int cap)
{
    require_odd_prime(prime);
    if (cap < 1)
        throw std::invalid_argument("series cap must be at least 1");
    const auto mu = mu_homology_series(cap);
    const auto bcp = bcp_series(cap);
    const auto lhs = tensor_algebra(mu, shift(bcp, 1));

    // sum over filtration quotients t^n * MU (x) BC_p^{(x)n}
    PoincareSeries rhs(cap);
    PoincareSeries power = PoincareSeries::one(cap);
    for (int n = 0; n <= cap; ++n) {
        rhs = rhs + shift(mu * power, n);
        power = power * bcp;
    }
    return compare(lhs, rhs);
}

SeriesComparison check_rstar_diagnostic(Residue prime, int cap)
{
    require_odd_prime(prime);
    if (cap < 1)
        throw std::invalid_argument("series cap must be at least 1");
    const auto a = mu_homology_series(cap) * sym_algebra(shift(bcp_series(cap), 1));
    const auto b = lp_series(prime, cap) * dual_steenrod_series(prime, cap);
    return compare(a, b);
}

} // namespace fglkit
