#ifndef FGLKIT_FGL_HPP
#define FGLKIT_FGL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fglkit/graded_algebra.hpp"

namespace fglkit {

/// Ring F_p[symbols][[x1, x2, e1, e2]] with |x_i| = 2, |e_i| = 1.
RingPtr law_ring(Residue prime, int truncation, std::vector<GradedVariable> symbols = {},
                 int symbol_cap = RingDescriptor::no_cap);
/// Same symbols and truncation, three points: x1, x2, x3, e1, e2, e3.
RingPtr three_point_ring(const RingDescriptor& law);
/// Same symbols and truncation, one point: x, e.
RingPtr one_point_ring(const RingDescriptor& law);

/// A pair (F1, F2) of power series in xi_1 = (x1, e1), xi_2 = (x2, e2):
/// F1 is the odd component (image of e), F2 the even one (image of x).
class FormalGroupLawPair {
public:
    /// Throws std::invalid_argument if the ring is not a law ring, a
    /// component has a constant term, or a component has the wrong parity.
    FormalGroupLawPair(GradedPolynomial odd, GradedPolynomial even);

    const GradedPolynomial& f1() const noexcept { return f1_; }
    const GradedPolynomial& f2() const noexcept { return f2_; }
    const RingPtr& ring() const noexcept { return f1_.ring(); }
    Residue prime() const noexcept { return ring()->prime(); }
    int truncation() const noexcept { return ring()->truncation(); }

private:
    GradedPolynomial f1_;
    GradedPolynomial f2_;
};

/// (odd, even) components of a law-valued expression, in some ring.
struct ComponentPair {
    GradedPolynomial odd;
    GradedPolynomial even;

    bool is_zero() const noexcept { return odd.is_zero() && even.is_zero(); }
};

FormalGroupLawPair additive_law(Residue prime, int truncation);
/// F1 = e1 + e2, F2 = x1 + x2 + x1*x2.
FormalGroupLawPair multiplicative_even_law(Residue prime, int truncation);

/// Applies x1 <-> x2, e1 <-> e2 inside f's own ring.
GradedPolynomial swap_points(const GradedPolynomial& f);

/// F(xi, 0) - xi and F(0, xi) - xi, both in the law ring.
ComponentPair unit_residual_right(const FormalGroupLawPair& law);
ComponentPair unit_residual_left(const FormalGroupLawPair& law);
/// F(xi1, xi2) - F(xi2, xi1).
ComponentPair commutativity_residual(const FormalGroupLawPair& law);
/// F(xi1, F(xi2, xi3)) - F(F(xi1, xi2), xi3) in three_point_ring.
ComponentPair associativity_residual(const FormalGroupLawPair& law);

enum class Nesting { right, left };

/// [k](xi) in one_point_ring. Right nesting is [k] = F(xi, [k-1]), left
/// nesting is [k] = F([k-1], xi); [1](xi) = xi.
ComponentPair iterate(const FormalGroupLawPair& law, unsigned k, Nesting nesting = Nesting::right);
/// [p](xi), nested to the right.
ComponentPair p_series(const FormalGroupLawPair& law);

enum class Axiom { unit, associativity, commutativity, p_series, e_independence, homogeneity };
enum class AxiomStatus { pass, fail, not_applicable };

std::string_view to_string(Axiom a) noexcept;
std::string_view to_string(AxiomStatus s) noexcept;

struct AxiomWitness {
    std::string component; // "F1" or "F2"
    std::string monomial;
    std::string coefficient;
    int degree = 0;
};

struct AxiomEntry {
    Axiom axiom;
    AxiomStatus status;
    std::optional<AxiomWitness> witness;
    std::string note;

    bool passed() const noexcept { return status == AxiomStatus::pass; }
};

struct AxiomReport {
    Residue prime = 0;
    int truncation = 0;
    std::vector<AxiomEntry> entries;
    std::string notice;

    /// No entry failed. Not-applicable entries do not count against this.
    bool all_pass() const noexcept;
    const AxiomEntry* find(Axiom a) const noexcept;
};

/// One-line note on the form in which the unit axiom is checked.
extern const std::string_view unit_axiom_notice;

AxiomEntry check_unit(const FormalGroupLawPair& law);
AxiomEntry check_associativity(const FormalGroupLawPair& law);
AxiomEntry check_commutativity(const FormalGroupLawPair& law);
AxiomEntry check_p_series(const FormalGroupLawPair& law);
AxiomEntry check_e_independence(const FormalGroupLawPair& law);
AxiomEntry check_homogeneity(const FormalGroupLawPair& law);

/// The five axioms followed by the homogeneity check.
AxiomReport check_all(const FormalGroupLawPair& law);

/// Lowest canonical (geometric) monomial where a residual is nonzero,
/// preferring F1 on ties.
std::optional<AxiomWitness> first_witness(const ComponentPair& residual);

struct LawFileOverrides {
    std::optional<Residue> prime;
    std::optional<int> truncation;
    /// Used when the file has no 'prime:' header and `prime` is unset.
    std::optional<Residue> fallback_prime;
};

/// Parses the `.fgl` format:
///
///     prime: 3
///     truncation: 8
///     F1 = e1 + e2
///     F2 = x1 + x2 + x1*x2
///
/// Blank lines and lines starting with '#' are ignored. Throws ParseError.
FormalGroupLawPair parse_law_file(std::string_view text, const LawFileOverrides& overrides = {});
FormalGroupLawPair read_law_file(const std::string& path, const LawFileOverrides& overrides = {});
std::string format_law_file(const FormalGroupLawPair& law);

} // namespace fglkit

#endif
