#include "fglkit/universal_ring.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace fglkit {

std::vector<GradedVariable> SymbolTable::variables() const
{
    std::vector<GradedVariable> out;
    out.reserve(symbols.size());
    for (const auto& s : symbols)
        out.push_back({s.name, s.degree});
    return out;
}

const SymbolInfo* SymbolTable::find(std::string_view name) const
{
    for (const auto& s : symbols)
        if (s.name == name)
            return &s;
    return nullptr;
}

std::string symbol_name(LawComponent component, const std::array<std::uint8_t, 4>& m)
{
    if (component == LawComponent::even)
        return "f2_" + std::to_string(m[0]) + "_" + std::to_string(m[1]);
    return "f1_" + std::to_string(m[0]) + "_" + std::to_string(m[1]) + "_" + std::to_string(m[2]) + "_" +
           std::to_string(m[3]);
}

std::string_view to_string(RelationSource s) noexcept
{
    switch (s) {
    case RelationSource::commutativity: return "commutativity";
    case RelationSource::associativity: return "associativity";
    case RelationSource::p_series: return "p-series";
    }
    return "?";
}

namespace {

// Builds sum over the table entries of `component` of symbol * monomial,
// plus the given linear part, in `ring` (whose geometric block is x1 x2 e1 e2
// or a prefix of it).
GradedPolynomial component_series(const RingPtr& ring, const SymbolTable& table, LawComponent component,
                                  const std::vector<std::string>& linear, const std::vector<std::string>& geometric)
{
    std::vector<std::pair<Exponents, std::int64_t>> terms;
    for (const auto& name : linear) {
        Exponents e(ring->size(), 0);
        e[*ring->index_of(name)] = 1;
        terms.emplace_back(std::move(e), 1);
    }
    for (const auto& s : table.symbols) {
        if (s.component != component)
            continue;
        const auto idx = ring->index_of(s.name);
        if (!idx)
            continue;
        Exponents e(ring->size(), 0);
        e[*idx] = 1;
        for (std::size_t k = 0; k < geometric.size(); ++k)
            e[*ring->index_of(geometric[k])] = s.monomial[k];
        terms.emplace_back(std::move(e), 1);
    }
    return GradedPolynomial::from_terms(ring, terms);
}

void shuffle_symbols(SymbolTable& table, const GenericLawOptions& options)
{
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(table.symbols.begin(), table.symbols.end(), rng);
    }
}

} // namespace

GenericLaw generic_fgl(Residue prime, int truncation, const GenericLawOptions& options)
{
    require_odd_prime(prime);
    if (truncation < 2)
        throw std::invalid_argument("generic law needs truncation >= 2");
    const int cap = options.symbol_cap.value_or(truncation);
    if (cap < 0)
        throw std::invalid_argument("symbol cap must be nonnegative");

    SymbolTable table;
    for (int n = 2; n <= truncation; ++n) {
        // F1: mixed monomials x1^a x2^b e1^s e2^t of geometric degree n
        for (int a = n / 2; a >= 0; --a)
            for (int b = n / 2 - a; b >= 0; --b)
                for (int s = 1; s >= 0; --s)
                    for (int t = 1; t >= 0; --t) {
                        if (2 * (a + b) + s + t != n)
                            continue;
                        const bool has_first = a > 0 || s > 0;
                        const bool has_second = b > 0 || t > 0;
                        if (!has_first || !has_second || n - 1 > cap)
                            continue;
                        const std::array<std::uint8_t, 4> m{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                                            static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(t)};
                        table.symbols.push_back({symbol_name(LawComponent::odd, m), LawComponent::odd, m, n - 1});
                    }
        // F2: x1^i x2^j, i, j >= 1
        if (n % 2 == 0 && n >= 4 && n - 2 <= cap)
            for (int i = n / 2 - 1; i >= 1; --i) {
                const int j = n / 2 - i;
                const std::array<std::uint8_t, 4> m{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), 0, 0};
                table.symbols.push_back({symbol_name(LawComponent::even, m), LawComponent::even, m, n - 2});
            }
    }
    shuffle_symbols(table, options);

    const auto ring = law_ring(prime, truncation, table.variables(), cap);
    const std::vector<std::string> geo{"x1", "x2", "e1", "e2"};
    auto f1 = component_series(ring, table, LawComponent::odd, {"e1", "e2"}, geo);
    auto f2 = component_series(ring, table, LawComponent::even, {"x1", "x2"}, geo);
    return {FormalGroupLawPair(std::move(f1), std::move(f2)), std::move(table)};
}

namespace {

void collect_relations(const GradedPolynomial& residual, RelationSource source, const char* component,
                       const RingPtr& symbols, RelationIdeal& ideal)
{
    for (const auto& m : geometric_support(residual)) {
        auto g = coefficient_of(residual, m, symbols);
        if (g.is_zero())
            continue;
        const auto degree = g.homogeneous_degree();
        if (!degree)
            throw std::logic_error("inhomogeneous relation at " + format_monomial(*residual.ring(), m));
        ideal.generators.push_back(
            {std::move(g), source, component, format_monomial(*residual.ring(), m), *degree});
    }
}

} // namespace

RelationIdeal extract_relations(const GenericLaw& generic)
{
    const auto& law = generic.law;
    RelationIdeal ideal;
    ideal.ring = symbol_ring(*law.ring());
    ideal.truncation = law.truncation();

    const auto comm = commutativity_residual(law);
    collect_relations(comm.odd, RelationSource::commutativity, "F1", ideal.ring, ideal);
    collect_relations(comm.even, RelationSource::commutativity, "F2", ideal.ring, ideal);
    const auto assoc = associativity_residual(law);
    collect_relations(assoc.odd, RelationSource::associativity, "F1", ideal.ring, ideal);
    collect_relations(assoc.even, RelationSource::associativity, "F2", ideal.ring, ideal);
    const auto ps = p_series(law);
    collect_relations(ps.odd, RelationSource::p_series, "F1", ideal.ring, ideal);
    collect_relations(ps.even, RelationSource::p_series, "F2", ideal.ring, ideal);
    return ideal;
}

namespace {

// All monomials in the given graded variables, bucketed by degree <= d_max.
// Odd variables appear with exponent at most one.
std::vector<std::vector<Exponents>> monomials_by_degree(const std::vector<GradedVariable>& vars, int d_max)
{
    std::vector<std::vector<Exponents>> out(static_cast<std::size_t>(d_max) + 1);
    Exponents e(vars.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, int degree) -> void {
        if (i == vars.size()) {
            out[static_cast<std::size_t>(degree)].push_back(e);
            return;
        }
        const int d = vars[i].degree;
        const int max_exp = vars[i].is_odd() ? 1 : (d_max - degree) / d;
        for (int k = 0; k <= max_exp && degree + k * d <= d_max; ++k) {
            e[i] = static_cast<std::uint8_t>(k);
            self(self, i + 1, degree + k * d);
        }
        e[i] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace

std::vector<HilbertDegree> hilbert_function(const RelationIdeal& ideal, const SymbolTable& table, int d_max)
{
    if (d_max < 0)
        throw std::invalid_argument("maximum degree must be nonnegative");
    if (ideal.truncation < d_max + 2)
        throw TruncationMarginError("relations extracted at truncation " + std::to_string(ideal.truncation) +
                                    " are complete only through degree " + std::to_string(ideal.truncation - 2) +
                                    "; degree " + std::to_string(d_max) + " needs truncation >= " +
                                    std::to_string(d_max + 2) + " (short by " +
                                    std::to_string(d_max + 2 - ideal.truncation) + ")");
    const auto& src = *ideal.ring;
    if (src.geometric_count() != 0)
        throw std::invalid_argument("relation ideal must live in a symbol-only ring");
    for (const auto& v : src.variables()) {
        const auto* info = table.find(v.name);
        if (!info || info->degree != v.degree)
            throw std::invalid_argument("symbol '" + v.name + "' does not match the symbol table");
    }

    const Residue p = src.prime();
    const auto work = make_ring({}, src.variables(), 0, p, d_max);
    const auto& vars = work->variables();

    std::vector<std::vector<GradedPolynomial>> gens(static_cast<std::size_t>(d_max) + 1);
    for (const auto& r : ideal.generators) {
        if (r.degree > d_max)
            continue;
        auto g = rebase(r.generator, work);
        if (!g.is_zero())
            gens[static_cast<std::size_t>(r.degree)].push_back(std::move(g));
    }

    const auto basis_monomials = monomials_by_degree(vars, d_max);
    std::vector<GradedPolynomial> symbol_polys;
    for (const auto& v : vars)
        symbol_polys.push_back(GradedPolynomial::variable(work, v.name));

    std::vector<std::vector<GradedPolynomial>> ideal_basis(static_cast<std::size_t>(d_max) + 1);
    std::vector<HilbertDegree> out;
    for (int d = 0; d <= d_max; ++d) {
        const auto& cols = basis_monomials[static_cast<std::size_t>(d)];
        std::unordered_map<Exponents, std::size_t, ExponentsHash> column;
        for (std::size_t c = 0; c < cols.size(); ++c)
            column.emplace(cols[c], c);

        EchelonBasis basis(cols.size(), p);
        auto insert = [&](const GradedPolynomial& f) {
            if (basis.full() || f.is_zero())
                return;
            std::vector<Residue> row(cols.size(), 0);
            for (const auto& t : f.terms())
                row[column.at(t.exponents)] = t.coefficient;
            basis.insert(std::move(row));
        };
        // I_d is spanned by the degree-d generators and y * I_{d - |y|}.
        for (const auto& g : gens[static_cast<std::size_t>(d)])
            insert(g);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const int dy = vars[i].degree;
            if (dy > d)
                continue;
            for (const auto& b : ideal_basis[static_cast<std::size_t>(d - dy)])
                insert(mul(symbol_polys[i], b));
        }

        auto& mine = ideal_basis[static_cast<std::size_t>(d)];
        for (const auto& row : basis.basis()) {
            std::vector<std::pair<Exponents, std::int64_t>> terms;
            for (std::size_t c = 0; c < row.size(); ++c)
                if (row[c] != 0)
                    terms.emplace_back(cols[c], row[c]);
            mine.push_back(GradedPolynomial::from_terms(work, terms));
        }
        out.push_back({d, cols.size(), basis.rank(), cols.size() - basis.rank()});
    }
    return out;
}

namespace {

bool is_prime_power_minus_one(std::uint64_t r, std::uint64_t p)
{
    std::uint64_t q = p;
    while (q - 1 < r)
        q *= p;
    return q - 1 == r;
}

} // namespace

std::vector<GradedVariable> theorem_generators(Residue prime, int d_max)
{
    require_odd_prime(prime);
    std::vector<GradedVariable> gens;
    if (2 * static_cast<int>(prime) <= d_max)
        gens.push_back({"a" + std::to_string(prime), 2 * static_cast<int>(prime)});
    for (int r = 1; 2 * r <= d_max; ++r) {
        if (is_prime_power_minus_one(static_cast<std::uint64_t>(r), prime))
            continue;
        gens.push_back({"b" + std::to_string(r), 2 * r});
        if (2 * r + 1 <= d_max)
            gens.push_back({"s" + std::to_string(r), 2 * r + 1});
    }
    return gens;
}

std::vector<std::uint64_t> theorem_hilbert_function(Residue prime, int d_max)
{
    if (d_max < 0)
        throw std::invalid_argument("maximum degree must be nonnegative");
    const auto gens = theorem_generators(prime, d_max);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(d_max) + 1, 0);
    // Exhaustive enumeration of monomials a_p^i b^.. s^.. (odd exponents <= 1).
    auto rec = [&](auto&& self, std::size_t i, int degree) -> void {
        if (i == gens.size()) {
            ++counts[static_cast<std::size_t>(degree)];
            return;
        }
        const int d = gens[i].degree;
        const int max_exp = gens[i].is_odd() ? 1 : (d_max - degree) / d;
        for (int k = 0; k <= max_exp && degree + k * d <= d_max; ++k)
            self(self, i + 1, degree + k * d);
    };
    rec(rec, 0, 0);
    return counts;
}

std::vector<HilbertDegree> ordinary_lazard_mode(Residue prime, int d_max, std::optional<int> truncation)
{
    require_odd_prime(prime);
    if (d_max < 0)
        throw std::invalid_argument("maximum degree must be nonnegative");
    const int D = truncation.value_or(std::max(d_max + 2, 2));
    if (D < 2)
        throw std::invalid_argument("truncation must be at least 2");

    SymbolTable table;
    for (int n = 4; n <= D; n += 2)
        for (int i = n / 2 - 1; i >= 1; --i) {
            if (n - 2 > d_max)
                break;
            const std::array<std::uint8_t, 4> m{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(n / 2 - i), 0,
                                                0};
            table.symbols.push_back({symbol_name(LawComponent::even, m), LawComponent::even, m, n - 2});
        }

    const auto ring = make_ring({{"x1", 2}, {"x2", 2}}, table.variables(), D, prime, d_max);
    const auto f = component_series(ring, table, LawComponent::even, {"x1", "x2"}, {"x1", "x2"});

    auto x = [](const RingPtr& r, const char* n) { return GradedPolynomial::variable(r, n); };
    auto eval = [&](const GradedPolynomial& a, const GradedPolynomial& b, const RingPtr& target) {
        Substitution s;
        s.emplace("x1", a);
        s.emplace("x2", b);
        return substitute(f, s, target);
    };

    RelationIdeal ideal;
    ideal.ring = symbol_ring(*ring);
    ideal.truncation = D;
    collect_relations(f - eval(x(ring, "x2"), x(ring, "x1"), ring), RelationSource::commutativity, "F2", ideal.ring,
                      ideal);
    const auto r3 = make_ring({{"x1", 2}, {"x2", 2}, {"x3", 2}}, table.variables(), D, prime, d_max);
    const auto lhs = eval(x(r3, "x1"), eval(x(r3, "x2"), x(r3, "x3"), r3), r3);
    const auto rhs = eval(eval(x(r3, "x1"), x(r3, "x2"), r3), x(r3, "x3"), r3);
    collect_relations(lhs - rhs, RelationSource::associativity, "F2", ideal.ring, ideal);
    return hilbert_function(ideal, table, d_max);
}

std::vector<HilbertDegree> modp_lazard_mode(Residue prime, int d_max, std::optional<int> truncation,
                                            const GenericLawOptions& options)
{
    if (d_max < 0)
        throw std::invalid_argument("maximum degree must be nonnegative");
    const int D = truncation.value_or(d_max + 2);
    if (D < d_max + 2)
        throw TruncationMarginError("truncation " + std::to_string(D) + " is below the required margin " +
                                    std::to_string(d_max + 2) + " for degree " + std::to_string(d_max));
    GenericLawOptions opts = options;
    if (!opts.symbol_cap)
        opts.symbol_cap = d_max;
    const auto generic = generic_fgl(prime, D, opts);
    return hilbert_function(extract_relations(generic), generic.table, d_max);
}

std::vector<std::uint64_t> dimensions(const std::vector<HilbertDegree>& h)
{
    std::vector<std::uint64_t> out;
    out.reserve(h.size());
    for (const auto& d : h)
        out.push_back(d.dimension);
    return out;
}

} // namespace fglkit
