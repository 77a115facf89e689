#include "fglkit/fgl.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fglkit {

namespace {

const std::vector<GradedVariable>& law_variables()
{
    static const std::vector<GradedVariable> vars{{"x1", 2}, {"x2", 2}, {"e1", 1}, {"e2", 1}};
    return vars;
}

GradedPolynomial var(const RingPtr& ring, std::string_view name) { return GradedPolynomial::variable(ring, name); }

} // namespace

RingPtr law_ring(Residue prime, int truncation, std::vector<GradedVariable> symbols, int symbol_cap)
{
    return make_ring(law_variables(), std::move(symbols), truncation, prime, symbol_cap);
}

RingPtr three_point_ring(const RingDescriptor& law)
{
    return make_ring({{"x1", 2}, {"x2", 2}, {"x3", 2}, {"e1", 1}, {"e2", 1}, {"e3", 1}}, law.symbols(),
                     law.truncation(), law.prime(), law.symbol_cap());
}

RingPtr one_point_ring(const RingDescriptor& law)
{
    return make_ring({{"x", 2}, {"e", 1}}, law.symbols(), law.truncation(), law.prime(), law.symbol_cap());
}

FormalGroupLawPair::FormalGroupLawPair(GradedPolynomial odd, GradedPolynomial even)
    : f1_(std::move(odd)), f2_(std::move(even))
{
    if (!same_ring(f1_.ring(), f2_.ring()))
        throw std::invalid_argument("F1 and F2 must live in the same ring");
    if (ring()->geometric() != law_variables())
        throw std::invalid_argument("a law ring has geometric variables x1, x2, e1, e2 (degrees 2, 2, 1, 1)");
    if (f1_.constant_term() != 0 || f2_.constant_term() != 0)
        throw std::invalid_argument("law components must have zero constant term");
    for (const auto& t : f1_.terms())
        if (t.total_degree() % 2 != 1)
            throw std::invalid_argument("F1 contains a term of even total degree: " +
                                        format_monomial(*ring(), t.exponents));
    for (const auto& t : f2_.terms())
        if (t.total_degree() % 2 != 0)
            throw std::invalid_argument("F2 contains a term of odd total degree: " +
                                        format_monomial(*ring(), t.exponents));
}

FormalGroupLawPair additive_law(Residue prime, int truncation)
{
    const auto ring = law_ring(prime, truncation);
    return {var(ring, "e1") + var(ring, "e2"), var(ring, "x1") + var(ring, "x2")};
}

FormalGroupLawPair multiplicative_even_law(Residue prime, int truncation)
{
    const auto ring = law_ring(prime, truncation);
    return {var(ring, "e1") + var(ring, "e2"), var(ring, "x1") + var(ring, "x2") + var(ring, "x1") * var(ring, "x2")};
}

GradedPolynomial swap_points(const GradedPolynomial& f)
{
    const auto& ring = f.ring();
    Substitution s;
    s.emplace("x1", var(ring, "x2"));
    s.emplace("x2", var(ring, "x1"));
    s.emplace("e1", var(ring, "e2"));
    s.emplace("e2", var(ring, "e1"));
    return substitute(f, s, ring);
}

namespace {

// Evaluates F at (a, b) where a = (a_x, a_e), b = (b_x, b_e) live in `target`.
ComponentPair evaluate(const FormalGroupLawPair& law, const GradedPolynomial& ax, const GradedPolynomial& ae,
                       const GradedPolynomial& bx, const GradedPolynomial& be, const RingPtr& target)
{
    Substitution s;
    s.emplace("x1", ax);
    s.emplace("e1", ae);
    s.emplace("x2", bx);
    s.emplace("e2", be);
    return {substitute(law.f1(), s, target), substitute(law.f2(), s, target)};
}

ComponentPair difference(const ComponentPair& a, const ComponentPair& b)
{
    return {a.odd - b.odd, a.even - b.even};
}

} // namespace

ComponentPair unit_residual_right(const FormalGroupLawPair& law)
{
    const auto& r = law.ring();
    const GradedPolynomial zero(r);
    auto value = evaluate(law, var(r, "x1"), var(r, "e1"), zero, zero, r);
    return {value.odd - var(r, "e1"), value.even - var(r, "x1")};
}

ComponentPair unit_residual_left(const FormalGroupLawPair& law)
{
    const auto& r = law.ring();
    const GradedPolynomial zero(r);
    auto value = evaluate(law, zero, zero, var(r, "x2"), var(r, "e2"), r);
    return {value.odd - var(r, "e2"), value.even - var(r, "x2")};
}

ComponentPair commutativity_residual(const FormalGroupLawPair& law)
{
    return {law.f1() - swap_points(law.f1()), law.f2() - swap_points(law.f2())};
}

ComponentPair associativity_residual(const FormalGroupLawPair& law)
{
    const auto r3 = three_point_ring(*law.ring());
    const auto x1 = var(r3, "x1"), x2 = var(r3, "x2"), x3 = var(r3, "x3");
    const auto e1 = var(r3, "e1"), e2 = var(r3, "e2"), e3 = var(r3, "e3");

    const auto inner_right = evaluate(law, x2, e2, x3, e3, r3); // F(xi2, xi3)
    const auto inner_left = evaluate(law, x1, e1, x2, e2, r3);  // F(xi1, xi2)
    const auto lhs = evaluate(law, x1, e1, inner_right.even, inner_right.odd, r3);
    const auto rhs = evaluate(law, inner_left.even, inner_left.odd, x3, e3, r3);
    return difference(lhs, rhs);
}

ComponentPair iterate(const FormalGroupLawPair& law, unsigned k, Nesting nesting)
{
    if (k == 0)
        throw std::invalid_argument("iterate needs k >= 1");
    const auto r1 = one_point_ring(*law.ring());
    const auto x = var(r1, "x"), e = var(r1, "e");
    ComponentPair acc{e, x};
    for (unsigned i = 2; i <= k; ++i) {
        if (nesting == Nesting::right)
            acc = evaluate(law, x, e, acc.even, acc.odd, r1);
        else
            acc = evaluate(law, acc.even, acc.odd, x, e, r1);
    }
    return acc;
}

ComponentPair p_series(const FormalGroupLawPair& law) { return iterate(law, law.prime(), Nesting::right); }

std::string_view to_string(Axiom a) noexcept
{
    switch (a) {
    case Axiom::unit: return "unit";
    case Axiom::associativity: return "associativity";
    case Axiom::commutativity: return "commutativity";
    case Axiom::p_series: return "p-series";
    case Axiom::e_independence: return "e-independence";
    case Axiom::homogeneity: return "homogeneity";
    }
    return "?";
}

std::string_view to_string(AxiomStatus s) noexcept
{
    switch (s) {
    case AxiomStatus::pass: return "pass";
    case AxiomStatus::fail: return "fail";
    case AxiomStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

const std::string_view unit_axiom_notice =
    "unit axiom checked as F(xi,0) = F(0,xi) = xi (identity element 0), not as F(xi,0) = 0";

bool AxiomReport::all_pass() const noexcept
{
    return std::none_of(entries.begin(), entries.end(),
                        [](const AxiomEntry& e) { return e.status == AxiomStatus::fail; });
}

const AxiomEntry* AxiomReport::find(Axiom a) const noexcept
{
    for (const auto& e : entries)
        if (e.axiom == a)
            return &e;
    return nullptr;
}

std::optional<AxiomWitness> first_witness(const ComponentPair& residual)
{
    std::optional<AxiomWitness> best;
    int best_degree = 0;
    auto consider = [&](const GradedPolynomial& f, const char* component) {
        const auto support = geometric_support(f);
        if (support.empty())
            return;
        const auto& m = support.front();
        const int d = geometric_degree(*f.ring(), m);
        // F1 is considered first and wins ties.
        if (best && d >= best_degree)
            return;
        best_degree = d;
        best = AxiomWitness{component, format_monomial(*f.ring(), m), format_polynomial(coefficient_of(f, m)), d};
    };
    consider(residual.odd, "F1");
    consider(residual.even, "F2");
    return best;
}

namespace {

AxiomEntry from_residual(Axiom axiom, const ComponentPair& residual)
{
    auto w = first_witness(residual);
    return {axiom, w ? AxiomStatus::fail : AxiomStatus::pass, std::move(w), {}};
}

} // namespace

AxiomEntry check_unit(const FormalGroupLawPair& law)
{
    auto entry = from_residual(Axiom::unit, unit_residual_right(law));
    if (entry.passed())
        entry = from_residual(Axiom::unit, unit_residual_left(law));
    entry.note = std::string(unit_axiom_notice);
    return entry;
}

AxiomEntry check_associativity(const FormalGroupLawPair& law)
{
    return from_residual(Axiom::associativity, associativity_residual(law));
}

AxiomEntry check_commutativity(const FormalGroupLawPair& law)
{
    return from_residual(Axiom::commutativity, commutativity_residual(law));
}

AxiomEntry check_p_series(const FormalGroupLawPair& law)
{
    const auto ps = p_series(law);
    auto entry = from_residual(Axiom::p_series, ps);
    if (entry.passed())
        entry.note = "[p](xi) vanishes through geometric degree " + std::to_string(law.truncation());
    return entry;
}

AxiomEntry check_e_independence(const FormalGroupLawPair& law)
{
    const auto& ring = *law.ring();
    const auto e1 = *ring.index_of("e1"), e2 = *ring.index_of("e2");
    // Build the part of F2 that involves e1 or e2 and report its lowest term.
    std::vector<std::pair<Exponents, std::int64_t>> offending;
    for (const auto& t : law.f2().terms())
        if (t.exponents[e1] != 0 || t.exponents[e2] != 0)
            offending.emplace_back(t.exponents, t.coefficient);
    const auto part = GradedPolynomial::from_terms(law.ring(), offending);
    return from_residual(Axiom::e_independence, {GradedPolynomial(law.ring()), part});
}

AxiomEntry check_homogeneity(const FormalGroupLawPair& law)
{
    const bool plain = law.ring()->symbol_count() == 0;
    std::vector<std::pair<Exponents, std::int64_t>> bad1, bad2;
    for (const auto& t : law.f1().terms())
        if (t.geometric_degree - t.symbol_degree != 1)
            bad1.emplace_back(t.exponents, t.coefficient);
    for (const auto& t : law.f2().terms())
        if (t.geometric_degree - t.symbol_degree != 2)
            bad2.emplace_back(t.exponents, t.coefficient);
    ComponentPair off{GradedPolynomial::from_terms(law.ring(), bad1), GradedPolynomial::from_terms(law.ring(), bad2)};
    auto entry = from_residual(Axiom::homogeneity, off);
    if (plain && !entry.passed()) {
        entry.status = AxiomStatus::not_applicable;
        entry.note = "coefficients lie in F_p (degree 0); the law is inhomogeneous, which is allowed";
    }
    return entry;
}

AxiomReport check_all(const FormalGroupLawPair& law)
{
    AxiomReport report;
    report.prime = law.prime();
    report.truncation = law.truncation();
    report.notice = std::string(unit_axiom_notice);
    report.entries.push_back(check_unit(law));
    report.entries.push_back(check_associativity(law));
    report.entries.push_back(check_commutativity(law));
    report.entries.push_back(check_p_series(law));
    report.entries.push_back(check_e_independence(law));
    report.entries.push_back(check_homogeneity(law));
    return report;
}

// ---------------------------------------------------------------------------
// .fgl files

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_header_int(std::string_view value, std::size_t line, std::size_t column)
{
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ParseError("expected an integer, found '" + std::string(value) + "'", line, column);
    return out;
}

} // namespace

FormalGroupLawPair parse_law_file(std::string_view text, const LawFileOverrides& overrides)
{
    std::optional<long long> prime, truncation;
    struct Body {
        std::string text;
        std::size_t line;
        std::size_t column;
    };
    std::optional<Body> f1, f2;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        const std::size_t indent = raw.find_first_not_of(" \t") + 1;
        if (const auto colon = line.find(':'); colon != std::string_view::npos) {
            const auto key = trim(line.substr(0, colon));
            const auto value = trim(line.substr(colon + 1));
            const auto col = indent + colon + 1;
            if (key == "prime")
                prime = parse_header_int(value, line_no, col);
            else if (key == "truncation")
                truncation = parse_header_int(value, line_no, col);
            else
                throw ParseError("unknown header '" + std::string(key) + "'", line_no, indent);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key: value' or 'F1 = ...' / 'F2 = ...'", line_no, indent);
        const auto lhs = trim(line.substr(0, eq));
        Body body{std::string(line.substr(eq + 1)), line_no, indent + eq + 1};
        if (lhs == "F1") {
            if (f1)
                throw ParseError("F1 defined twice", line_no, indent);
            f1 = std::move(body);
        } else if (lhs == "F2") {
            if (f2)
                throw ParseError("F2 defined twice", line_no, indent);
            f2 = std::move(body);
        } else {
            throw ParseError("expected F1 or F2, found '" + std::string(lhs) + "'", line_no, indent);
        }
    }

    if (overrides.prime)
        prime = *overrides.prime;
    if (overrides.truncation)
        truncation = *overrides.truncation;
    if (!prime && overrides.fallback_prime)
        prime = *overrides.fallback_prime;
    if (!prime)
        throw ParseError("missing 'prime:' header", 1, 1);
    if (!truncation)
        throw ParseError("missing 'truncation:' header", 1, 1);
    if (!f1 || !f2)
        throw ParseError(std::string("missing ") + (!f1 ? "F1" : "F2") + " definition", line_no, 1);
    if (*prime < 3 || *prime > (1 << 15) || !is_prime(static_cast<std::uint64_t>(*prime)))
        throw ParseError("prime must be an odd prime, got " + std::to_string(*prime), 1, 1);
    if (*truncation < 2 || *truncation > 200)
        throw ParseError("truncation must be in 2..200, got " + std::to_string(*truncation), 1, 1);

    const auto ring = law_ring(static_cast<Residue>(*prime), static_cast<int>(*truncation));
    auto parse_body = [&](const Body& b) {
        try {
            return parse_polynomial(b.text, ring, b.line);
        } catch (const ParseError& e) {
            // shift the column by the offset of the expression within its line
            throw ParseError(e.message(), e.line(), e.line() == b.line ? e.column() + b.column - 1 : e.column());
        }
    };
    auto odd = parse_body(*f1);
    auto even = parse_body(*f2);
    try {
        return FormalGroupLawPair(std::move(odd), std::move(even));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), f1->line, 1);
    }
}

FormalGroupLawPair read_law_file(const std::string& path, const LawFileOverrides& overrides)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_law_file(buf.str(), overrides);
}

std::string format_law_file(const FormalGroupLawPair& law)
{
    std::ostringstream out;
    out << "prime: " << law.prime() << '\n'
        << "truncation: " << law.truncation() << '\n'
        << "F1 = " << format_polynomial(law.f1()) << '\n'
        << "F2 = " << format_polynomial(law.f2()) << '\n';
    return out.str();
}

} // namespace fglkit
