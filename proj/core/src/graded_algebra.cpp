#include "fglkit/graded_algebra.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace fglkit {

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor::RingDescriptor(std::vector<GradedVariable> geometric, std::vector<GradedVariable> symbols,
                               int truncation, Residue prime, int symbol_cap)
    : symbol_count_(symbols.size()), truncation_(truncation), symbol_cap_(symbol_cap), prime_(prime)
{
    require_odd_prime(prime);
    if (truncation < 0)
        throw std::invalid_argument("truncation degree must be nonnegative");
    if (symbol_cap < 0)
        throw std::invalid_argument("symbol cap must be nonnegative");
    vars_ = std::move(symbols);
    vars_.insert(vars_.end(), std::make_move_iterator(geometric.begin()), std::make_move_iterator(geometric.end()));
    if (vars_.size() > 255)
        throw std::invalid_argument("too many variables in one ring (limit 255)");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto& v = vars_[i];
        if (v.name.empty())
            throw std::invalid_argument("variable names must be nonempty");
        if (v.degree < 1)
            throw std::invalid_argument("variable '" + v.name + "' must have positive degree");
        if (!by_name_.emplace(v.name, i).second)
            throw std::invalid_argument("duplicate variable name '" + v.name + "'");
        if (!is_symbol(i) && v.degree > truncation)
            throw std::invalid_argument("truncation " + std::to_string(truncation) +
                                        " is below the degree of variable '" + v.name + "'");
        if (v.is_odd())
            odd_.push_back(i);
    }
}

std::vector<GradedVariable> RingDescriptor::symbols() const
{
    return {vars_.begin(), vars_.begin() + static_cast<std::ptrdiff_t>(symbol_count_)};
}

std::vector<GradedVariable> RingDescriptor::geometric() const
{
    return {vars_.begin() + static_cast<std::ptrdiff_t>(symbol_count_), vars_.end()};
}

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const
{
    const auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b)
{
    return a.symbol_count_ == b.symbol_count_ && a.truncation_ == b.truncation_ &&
           a.symbol_cap_ == b.symbol_cap_ && a.prime_ == b.prime_ && a.vars_ == b.vars_;
}

RingPtr make_ring(std::vector<GradedVariable> geometric, std::vector<GradedVariable> symbols, int truncation,
                  Residue prime, int symbol_cap)
{
    return std::make_shared<const RingDescriptor>(std::move(geometric), std::move(symbols), truncation, prime,
                                                  symbol_cap);
}

RingPtr symbol_ring(const RingDescriptor& ring)
{
    return make_ring({}, ring.symbols(), ring.truncation(), ring.prime(), ring.symbol_cap());
}

RingPtr with_truncation(const RingDescriptor& ring, int truncation, int symbol_cap)
{
    return make_ring(ring.geometric(), ring.symbols(), truncation, ring.prime(), symbol_cap);
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Monomials

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept
{
    // FNV-1a
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

int geometric_degree(const RingDescriptor& ring, const Exponents& e)
{
    int d = 0;
    for (std::size_t i = ring.symbol_count(); i < e.size(); ++i)
        d += e[i] * ring.variable(i).degree;
    return d;
}

int symbol_degree(const RingDescriptor& ring, const Exponents& e)
{
    int d = 0;
    for (std::size_t i = 0; i < ring.symbol_count(); ++i)
        d += e[i] * ring.variable(i).degree;
    return d;
}

std::optional<MonomialProduct> multiply_monomials(const RingDescriptor& ring, const Exponents& a, const Exponents& b)
{
    const auto& odd = ring.odd_indices();
    bool negative = false;
    // Odd factors of b move left past the odd factors of a with larger index.
    unsigned a_odd_to_right = 0;
    for (auto it = odd.rbegin(); it != odd.rend(); ++it) {
        const auto j = *it;
        if (b[j] != 0) {
            if (a[j] != 0)
                return std::nullopt;
            negative ^= (a_odd_to_right & 1u) != 0;
        }
        if (a[j] != 0)
            ++a_odd_to_right;
    }
    MonomialProduct out{a, negative};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const unsigned s = unsigned{a[i]} + b[i];
        if (s > 255)
            throw std::overflow_error("exponent overflow");
        out.exponents[i] = static_cast<std::uint8_t>(s);
    }
    return out;
}

namespace {

bool canonical_less(const Term& a, const Term& b)
{
    if (a.geometric_degree != b.geometric_degree)
        return a.geometric_degree < b.geometric_degree;
    if (a.symbol_degree != b.symbol_degree)
        return a.symbol_degree < b.symbol_degree;
    return a.exponents > b.exponents;
}

void require_same_ring(const GradedPolynomial& a, const GradedPolynomial& b)
{
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("polynomials belong to different rings");
}

} // namespace

// Collects terms with coefficients mod p, then emits a canonical polynomial.
class TermAccumulator {
public:
    explicit TermAccumulator(RingPtr ring) : ring_(std::move(ring)), p_(ring_->prime()) {}

    void add(const Exponents& e, Residue c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = map_.try_emplace(e, c);
        if (!inserted)
            it->second = add_mod(it->second, c, p_);
    }
    void add(Exponents&& e, Residue c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = map_.try_emplace(std::move(e), c);
        if (!inserted)
            it->second = add_mod(it->second, c, p_);
    }
    void add_signed(Exponents&& e, Residue c, bool negative) { add(std::move(e), negative ? neg_mod(c, p_) : c); }

    GradedPolynomial finish() &&
    {
        GradedPolynomial out(ring_);
        const auto& ring = *ring_;
        out.terms_.reserve(map_.size());
        for (auto& [e, c] : map_) {
            if (c == 0)
                continue;
            Term t{e, c, geometric_degree(ring, e), symbol_degree(ring, e)};
            if (t.geometric_degree > ring.truncation() || t.symbol_degree > ring.symbol_cap())
                continue;
            out.terms_.push_back(std::move(t));
        }
        std::sort(out.terms_.begin(), out.terms_.end(), canonical_less);
        return out;
    }

private:
    RingPtr ring_;
    Residue p_;
    std::unordered_map<Exponents, Residue, ExponentsHash> map_;
};

// ---------------------------------------------------------------------------
// GradedPolynomial

GradedPolynomial::GradedPolynomial(RingPtr ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw std::invalid_argument("polynomial needs a ring descriptor");
}

GradedPolynomial GradedPolynomial::constant(RingPtr ring, std::int64_t value)
{
    const auto n = ring->size();
    return monomial(std::move(ring), Exponents(n, 0), value);
}

GradedPolynomial GradedPolynomial::variable(RingPtr ring, std::string_view name)
{
    const auto idx = ring->index_of(name);
    if (!idx)
        throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    Exponents e(ring->size(), 0);
    e[*idx] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

GradedPolynomial GradedPolynomial::monomial(RingPtr ring, Exponents exponents, std::int64_t coefficient)
{
    return from_terms(std::move(ring), {{std::move(exponents), coefficient}});
}

GradedPolynomial GradedPolynomial::from_terms(RingPtr ring,
                                              const std::vector<std::pair<Exponents, std::int64_t>>& terms)
{
    TermAccumulator acc(ring);
    for (const auto& [e, c] : terms) {
        if (e.size() != ring->size())
            throw std::invalid_argument("exponent vector has the wrong length for this ring");
        bool vanishes = false;
        for (auto i : ring->odd_indices())
            vanishes |= e[i] > 1;
        if (!vanishes)
            acc.add(e, reduce_mod(c, ring->prime()));
    }
    return std::move(acc).finish();
}

Residue GradedPolynomial::coefficient(const Exponents& e) const
{
    for (const auto& t : terms_)
        if (t.exponents == e)
            return t.coefficient;
    return 0;
}

Residue GradedPolynomial::constant_term() const
{
    if (!terms_.empty() && terms_.front().total_degree() == 0)
        return terms_.front().coefficient;
    return 0;
}

std::optional<int> GradedPolynomial::parity() const
{
    if (terms_.empty())
        return std::nullopt;
    const int first = terms_.front().total_degree() % 2;
    for (const auto& t : terms_)
        if (t.total_degree() % 2 != first)
            return std::nullopt;
    return first;
}

std::optional<int> GradedPolynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    const int first = terms_.front().total_degree();
    for (const auto& t : terms_)
        if (t.total_degree() != first)
            return std::nullopt;
    return first;
}

GradedPolynomial GradedPolynomial::operator-() const
{
    GradedPolynomial out(*this);
    for (auto& t : out.terms_)
        t.coefficient = neg_mod(t.coefficient, ring_->prime());
    return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& rhs)
{
    *this = add(*this, rhs);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& rhs)
{
    *this = sub(*this, rhs);
    return *this;
}

GradedPolynomial GradedPolynomial::scaled(std::int64_t factor) const
{
    const Residue p = ring_->prime();
    const Residue f = reduce_mod(factor, p);
    GradedPolynomial out(ring_);
    if (f == 0)
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        t.coefficient = mul_mod(t.coefficient, f, p);
    return out;
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b)
{
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coefficient != b.terms_[i].coefficient)
            return false;
    return true;
}

namespace {

GradedPolynomial combine(const GradedPolynomial& a, const GradedPolynomial& b, bool subtract)
{
    require_same_ring(a, b);
    const Residue p = a.prime();
    TermAccumulator acc(a.ring());
    for (const auto& t : a.terms())
        acc.add(t.exponents, t.coefficient);
    for (const auto& t : b.terms())
        acc.add(t.exponents, subtract ? neg_mod(t.coefficient, p) : t.coefficient);
    return std::move(acc).finish();
}

} // namespace

GradedPolynomial add(const GradedPolynomial& a, const GradedPolynomial& b) { return combine(a, b, false); }

GradedPolynomial sub(const GradedPolynomial& a, const GradedPolynomial& b) { return combine(a, b, true); }

GradedPolynomial mul(const GradedPolynomial& a, const GradedPolynomial& b)
{
    require_same_ring(a, b);
    const auto& ring = *a.ring();
    const Residue p = ring.prime();
    const int trunc = ring.truncation();
    const int cap = ring.symbol_cap();
    TermAccumulator acc(a.ring());
    for (const auto& ta : a.terms()) {
        if (ta.geometric_degree > trunc)
            break;
        for (const auto& tb : b.terms()) {
            if (ta.geometric_degree + tb.geometric_degree > trunc)
                break; // terms are sorted by geometric degree first
            if (ta.symbol_degree + tb.symbol_degree > cap)
                continue;
            auto prod = multiply_monomials(ring, ta.exponents, tb.exponents);
            if (!prod)
                continue;
            acc.add_signed(std::move(prod->exponents), mul_mod(ta.coefficient, tb.coefficient, p), prod->negative);
        }
    }
    return std::move(acc).finish();
}

GradedPolynomial pow(const GradedPolynomial& a, unsigned exponent)
{
    auto result = GradedPolynomial::constant(a.ring(), 1);
    for (unsigned i = 0; i < exponent; ++i)
        result = mul(result, a);
    return result;
}

// ---------------------------------------------------------------------------
// Ring maps

namespace {

// Writes the monomial `e` of `src` into `dst` by multiplying its factors in
// source canonical order, which produces the Koszul sign of any reordering.
std::optional<MonomialProduct> transport_monomial(const RingDescriptor& src, const Exponents& e,
                                                  const RingDescriptor& dst, const std::vector<std::size_t>& index_map,
                                                  std::size_t limit)
{
    MonomialProduct out{Exponents(dst.size(), 0), false};
    for (std::size_t i = 0; i < limit; ++i) {
        if (e[i] == 0)
            continue;
        Exponents factor(dst.size(), 0);
        factor[index_map[i]] = e[i];
        if (src.variable(i).is_odd() && e[i] > 1)
            return std::nullopt;
        auto prod = multiply_monomials(dst, out.exponents, factor);
        if (!prod)
            return std::nullopt;
        out.exponents = std::move(prod->exponents);
        out.negative ^= prod->negative;
    }
    return out;
}

std::vector<std::size_t> name_map(const RingDescriptor& src, const RingDescriptor& dst, std::size_t limit,
                                  const std::vector<bool>& used)
{
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> m(limit, none);
    for (std::size_t i = 0; i < limit; ++i) {
        const auto& v = src.variable(i);
        const auto j = dst.index_of(v.name);
        if (!j) {
            if (used[i])
                throw std::invalid_argument("variable '" + v.name + "' is missing from the target ring");
            continue;
        }
        if (dst.variable(*j).degree != v.degree)
            throw std::invalid_argument("variable '" + v.name + "' has a different degree in the target ring");
        m[i] = *j;
    }
    return m;
}

std::vector<bool> used_variables(const GradedPolynomial& f)
{
    std::vector<bool> used(f.ring()->size(), false);
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < t.exponents.size(); ++i)
            if (t.exponents[i] != 0)
                used[i] = true;
    return used;
}

bool exps_geometric_less(const RingDescriptor& ring, const Exponents& a, const Exponents& b)
{
    const int da = geometric_degree(ring, a), db = geometric_degree(ring, b);
    if (da != db)
        return da < db;
    return a > b;
}

} // namespace

GradedPolynomial rebase(const GradedPolynomial& f, const RingPtr& target)
{
    const auto& src = *f.ring();
    const auto& dst = *target;
    if (src.prime() != dst.prime())
        throw std::invalid_argument("cannot move a polynomial between different primes");
    const auto map = name_map(src, dst, src.size(), used_variables(f));
    TermAccumulator acc(target);
    for (const auto& t : f.terms()) {
        auto moved = transport_monomial(src, t.exponents, dst, map, src.size());
        if (moved)
            acc.add_signed(std::move(moved->exponents), t.coefficient, moved->negative);
    }
    return std::move(acc).finish();
}

GradedPolynomial substitute(const GradedPolynomial& f, const Substitution& images, const RingPtr& target)
{
    const auto& src = *f.ring();
    const auto& dst = *target;
    if (src.prime() != dst.prime())
        throw std::invalid_argument("substitution target has a different prime");

    const auto used = used_variables(f);
    const std::size_t nsym = src.symbol_count();
    const auto symbol_map = name_map(src, dst, nsym, used);
    for (std::size_t i = 0; i < nsym; ++i)
        if (used[i] && !dst.is_symbol(symbol_map[i]))
            throw std::invalid_argument("symbol '" + src.variable(i).name + "' is not a symbol of the target ring");

    // Validate and collect images of geometric variables.
    std::vector<const GradedPolynomial*> image(src.size(), nullptr);
    for (std::size_t i = nsym; i < src.size(); ++i) {
        const auto& v = src.variable(i);
        const auto it = images.find(v.name);
        if (it == images.end()) {
            if (used[i])
                throw std::invalid_argument("no image given for variable '" + v.name + "'");
            continue;
        }
        const auto& img = it->second;
        if (!same_ring(img.ring(), target))
            throw std::invalid_argument("image of '" + v.name + "' does not live in the target ring");
        if (img.constant_term() != 0)
            throw std::invalid_argument("image of '" + v.name + "' has a nonzero constant term");
        // Truncation only commutes with substitution if no image lowers the geometric degree.
        for (const auto& t : img.terms())
            if (t.geometric_degree < v.degree)
                throw std::invalid_argument("image of '" + v.name + "' has a term of geometric degree below " +
                                            std::to_string(v.degree));
        if (!img.is_zero()) {
            const auto par = img.parity();
            if (!par || *par != v.degree % 2)
                throw std::invalid_argument("image of '" + v.name + "' does not have the parity of the variable");
        }
        image[i] = &img;
    }
    for (const auto& [name, img] : images)
        if (const auto idx = src.index_of(name); !idx || src.is_symbol(*idx))
            throw std::invalid_argument("'" + name + "' is not a geometric variable of the source ring");

    // Group terms by geometric part: f = sum_g c_g(symbols) * g.
    std::map<Exponents, std::vector<const Term*>> groups;
    for (const auto& t : f.terms()) {
        Exponents g(t.exponents.begin() + static_cast<std::ptrdiff_t>(nsym), t.exponents.end());
        groups[std::move(g)].push_back(&t);
    }

    // powers[i][k] = image_i^k, grown on demand
    std::vector<std::vector<GradedPolynomial>> powers(src.size());
    auto power = [&](std::size_t i, unsigned k) -> const GradedPolynomial& {
        auto& table = powers[i];
        if (table.empty())
            table.push_back(GradedPolynomial::constant(target, 1));
        while (table.size() <= k)
            table.push_back(mul(table.back(), *image[i]));
        return table[k];
    };

    GradedPolynomial result(target);
    for (const auto& [g, group] : groups) {
        TermAccumulator coeff(target);
        for (const Term* t : group) {
            auto moved = transport_monomial(src, t->exponents, dst, symbol_map, nsym);
            if (moved)
                coeff.add_signed(std::move(moved->exponents), t->coefficient, moved->negative);
        }
        auto piece = std::move(coeff).finish();
        for (std::size_t k = 0; k < g.size() && !piece.is_zero(); ++k)
            if (g[k] != 0)
                piece = mul(piece, power(nsym + k, g[k]));
        result += piece;
    }
    return result;
}

GradedPolynomial coefficient_of(const GradedPolynomial& f, const Exponents& geometric)
{
    return coefficient_of(f, geometric, symbol_ring(*f.ring()));
}

GradedPolynomial coefficient_of(const GradedPolynomial& f, const Exponents& geometric, const RingPtr& symbols)
{
    const auto& ring = *f.ring();
    const std::size_t nsym = ring.symbol_count();
    if (geometric.size() != ring.size())
        throw std::invalid_argument("monomial has the wrong length for this ring");
    if (symbols->size() != nsym || symbols->geometric_count() != 0)
        throw std::invalid_argument("coefficient ring must be the symbol ring of the polynomial's ring");
    TermAccumulator acc(symbols);
    for (const auto& t : f.terms()) {
        if (!std::equal(t.exponents.begin() + static_cast<std::ptrdiff_t>(nsym), t.exponents.end(),
                        geometric.begin() + static_cast<std::ptrdiff_t>(nsym)))
            continue;
        acc.add(Exponents(t.exponents.begin(), t.exponents.begin() + static_cast<std::ptrdiff_t>(nsym)),
                t.coefficient);
    }
    return std::move(acc).finish();
}

std::vector<Exponents> geometric_support(const GradedPolynomial& f)
{
    const auto& ring = *f.ring();
    const std::size_t nsym = ring.symbol_count();
    std::vector<Exponents> out;
    for (const auto& t : f.terms()) {
        Exponents g = t.exponents;
        std::fill(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(nsym), 0);
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return exps_geometric_less(ring, a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace fglkit
