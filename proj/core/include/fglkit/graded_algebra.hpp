#ifndef FGLKIT_GRADED_ALGEBRA_HPP
#define FGLKIT_GRADED_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fglkit/fp_linalg.hpp"

namespace fglkit {

struct GradedVariable {
    std::string name;
    int degree = 1;

    bool is_odd() const noexcept { return degree % 2 != 0; }
    friend bool operator==(const GradedVariable&, const GradedVariable&) = default;
};

/// Describes a truncated graded-commutative ring
///
///     F_p[symbols][[geometric variables]] / (geometric degree > D, symbol degree > cap)
///
/// Variables are indexed with all coefficient symbols first, then the
/// geometric variables, each block in declaration order. That index order is
/// the canonical factor order of every monomial.
///
/// Terms are discarded when their geometric degree exceeds the truncation D
/// or their symbol degree exceeds the (optional) symbol cap. Both conditions
/// cut out ideals, so truncation commutes with the ring operations. Over a
/// plain F_p (no symbols) the geometric degree is the total degree.
class RingDescriptor {
public:
    static constexpr int no_cap = std::numeric_limits<int>::max();

    RingDescriptor(std::vector<GradedVariable> geometric, std::vector<GradedVariable> symbols,
                   int truncation, Residue prime, int symbol_cap = no_cap);

    std::size_t size() const noexcept { return vars_.size(); }
    std::size_t symbol_count() const noexcept { return symbol_count_; }
    std::size_t geometric_count() const noexcept { return vars_.size() - symbol_count_; }
    bool is_symbol(std::size_t index) const noexcept { return index < symbol_count_; }

    const GradedVariable& variable(std::size_t index) const { return vars_.at(index); }
    const std::vector<GradedVariable>& variables() const noexcept { return vars_; }
    std::vector<GradedVariable> symbols() const;
    std::vector<GradedVariable> geometric() const;
    std::optional<std::size_t> index_of(std::string_view name) const;

    int truncation() const noexcept { return truncation_; }
    int symbol_cap() const noexcept { return symbol_cap_; }
    Residue prime() const noexcept { return prime_; }

    /// Indices of odd-degree variables, ascending.
    const std::vector<std::size_t>& odd_indices() const noexcept { return odd_; }

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

private:
    std::vector<GradedVariable> vars_;
    std::size_t symbol_count_;
    int truncation_;
    int symbol_cap_;
    Residue prime_;
    std::vector<std::size_t> odd_;
    std::map<std::string, std::size_t, std::less<>> by_name_;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

RingPtr make_ring(std::vector<GradedVariable> geometric, std::vector<GradedVariable> symbols,
                  int truncation, Residue prime, int symbol_cap = RingDescriptor::no_cap);

/// Same symbols, no geometric variables. Home of extracted coefficients.
RingPtr symbol_ring(const RingDescriptor& ring);

/// Same variables with a different geometric truncation / symbol cap.
RingPtr with_truncation(const RingDescriptor& ring, int truncation,
                        int symbol_cap = RingDescriptor::no_cap);

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector indexed like RingDescriptor::variables().
using Exponents = std::vector<std::uint8_t>;

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept;
};

struct Term {
    Exponents exponents;
    Residue coefficient = 0;
    int geometric_degree = 0;
    int symbol_degree = 0;

    int total_degree() const noexcept { return geometric_degree + symbol_degree; }
};

/// Product of two canonical monomials. Returns nullopt when an odd factor
/// repeats; otherwise the merged exponents and whether the Koszul sign is -1.
struct MonomialProduct {
    Exponents exponents;
    bool negative = false;
};
std::optional<MonomialProduct> multiply_monomials(const RingDescriptor& ring, const Exponents& a,
                                                  const Exponents& b);

int geometric_degree(const RingDescriptor& ring, const Exponents& e);
int symbol_degree(const RingDescriptor& ring, const Exponents& e);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    /// The message without the "line:column: " prefix.
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// Element of a RingDescriptor's ring, kept in canonical form: terms sorted
/// by (geometric degree, symbol degree, exponents descending), no zero
/// coefficients, nothing beyond the truncation.
class GradedPolynomial {
public:
    explicit GradedPolynomial(RingPtr ring);

    static GradedPolynomial constant(RingPtr ring, std::int64_t value);
    static GradedPolynomial variable(RingPtr ring, std::string_view name);
    /// Builds c * (canonical monomial with the given exponents). Odd
    /// exponents above one give zero.
    static GradedPolynomial monomial(RingPtr ring, Exponents exponents, std::int64_t coefficient = 1);
    /// Builds from arbitrary (exponents, coefficient) pairs; collects like terms.
    static GradedPolynomial from_terms(RingPtr ring, const std::vector<std::pair<Exponents, std::int64_t>>& terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Residue prime() const noexcept { return ring_->prime(); }

    Residue coefficient(const Exponents& e) const;
    Residue constant_term() const;

    /// 0 or 1 if every term has that total-degree parity; nullopt for zero
    /// or mixed-parity polynomials.
    std::optional<int> parity() const;
    /// Total degree if homogeneous.
    std::optional<int> homogeneous_degree() const;

    GradedPolynomial operator-() const;
    GradedPolynomial& operator+=(const GradedPolynomial& rhs);
    GradedPolynomial& operator-=(const GradedPolynomial& rhs);
    GradedPolynomial scaled(std::int64_t factor) const;

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);

private:
    friend class TermAccumulator;
    RingPtr ring_;
    std::vector<Term> terms_;
};

GradedPolynomial add(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial sub(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial mul(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial pow(const GradedPolynomial& a, unsigned exponent);

inline GradedPolynomial operator+(const GradedPolynomial& a, const GradedPolynomial& b) { return add(a, b); }
inline GradedPolynomial operator-(const GradedPolynomial& a, const GradedPolynomial& b) { return sub(a, b); }
inline GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) { return mul(a, b); }

/// Image of each geometric variable, by name.
using Substitution = std::map<std::string, GradedPolynomial, std::less<>>;

/// Ring-homomorphic substitution of the geometric variables of f into
/// `target`. Coefficient symbols are carried over by name. Every geometric
/// variable of f that occurs must have an image; images must live in
/// `target`, have the parity of the variable they replace, and contain no
/// term of geometric degree below that variable's degree (zero is always
/// allowed).
GradedPolynomial substitute(const GradedPolynomial& f, const Substitution& images, const RingPtr& target);

/// Moves f into a ring with the same variable names (possibly reordered,
/// possibly differently truncated). Reordering odd variables applies the
/// matching Koszul sign.
GradedPolynomial rebase(const GradedPolynomial& f, const RingPtr& target);

/// The coefficient-symbol polynomial multiplying the geometric monomial
/// `geometric` (an exponent vector over the full ring whose symbol
/// exponents are ignored). Lives in symbol_ring(f.ring()).
GradedPolynomial coefficient_of(const GradedPolynomial& f, const Exponents& geometric);
GradedPolynomial coefficient_of(const GradedPolynomial& f, const Exponents& geometric, const RingPtr& symbols);

/// Distinct geometric monomials occurring in f, in canonical order.
std::vector<Exponents> geometric_support(const GradedPolynomial& f);

/// Parses the ASCII grammar
///     expression := term ('+' term)*
///     term       := coeff ('*' factor)* | factor ('*' factor)*
///     factor     := ident ('^' posint)?
/// A leading '-' on a coefficient is accepted, as is binary '-'.
GradedPolynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t first_line = 1);

/// Canonical text: terms in canonical order joined by " + ", coefficients as
/// residues in [1, p), "0" for the zero polynomial.
std::string format_polynomial(const GradedPolynomial& f);
std::string format_monomial(const RingDescriptor& ring, const Exponents& e);

} // namespace fglkit

#endif
