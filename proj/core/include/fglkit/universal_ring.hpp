#ifndef FGLKIT_UNIVERSAL_RING_HPP
#define FGLKIT_UNIVERSAL_RING_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fglkit/fgl.hpp"

namespace fglkit {

enum class LawComponent { odd, even }; // F1, F2

/// One indeterminate coefficient of the generic law.
struct SymbolInfo {
    std::string name;
    LawComponent component;
    /// Exponents of the geometric monomial it multiplies, over (x1, x2, e1, e2).
    std::array<std::uint8_t, 4> monomial{};
    int degree = 0;

    bool is_odd() const noexcept { return degree % 2 != 0; }
};

struct SymbolTable {
    std::vector<SymbolInfo> symbols;

    std::vector<GradedVariable> variables() const;
    const SymbolInfo* find(std::string_view name) const;
};

struct GenericLawOptions {
    /// Symbols of higher degree are left out (they cannot occur in relations
    /// of degree <= cap). Defaults to keeping all of them.
    std::optional<int> symbol_cap;
    /// Shuffles the declaration order of the symbols.
    std::optional<std::uint64_t> shuffle_seed;
};

struct GenericLaw {
    FormalGroupLawPair law;
    SymbolTable table;
};

/// The formal group law with one indeterminate coefficient per admissible
/// monomial: F1 = e1 + e2 + sum c_m m over mixed monomials m of geometric
/// degree 2..D, F2 = x1 + x2 + sum d_ij x1^i x2^j (i, j >= 1). Unit and
/// e-independence hold by construction.
GenericLaw generic_fgl(Residue prime, int truncation, const GenericLawOptions& options = {});

/// Deterministic symbol name for the coefficient of a geometric monomial.
std::string symbol_name(LawComponent component, const std::array<std::uint8_t, 4>& monomial);

enum class RelationSource { commutativity, associativity, p_series };
std::string_view to_string(RelationSource s) noexcept;

struct Relation {
    GradedPolynomial generator; // in the symbol ring
    RelationSource source;
    std::string component;      // "F1" or "F2"
    std::string monomial;       // source geometric monomial
    int degree = 0;             // symbol degree of the generator
};

struct RelationIdeal {
    RingPtr ring;               // symbols only
    int truncation = 0;         // geometric truncation the relations came from
    std::vector<Relation> generators;
};

/// Coefficients of the commutativity, associativity and p-series residuals
/// of a generic law, one generator per nonzero geometric coefficient.
RelationIdeal extract_relations(const GenericLaw& generic);

/// Thrown when relations were extracted at too small a truncation to be
/// complete through the requested degree.
class TruncationMarginError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HilbertDegree {
    int degree = 0;
    std::size_t monomials = 0; // symbol monomials of this degree
    std::size_t rank = 0;      // dimension of the ideal in this degree
    std::size_t dimension = 0; // monomials - rank
};

/// Graded dimensions of F_p[symbols] / I in degrees 0..d_max. Requires
/// the ideal to come from truncation >= d_max + 2.
std::vector<HilbertDegree> hilbert_function(const RelationIdeal& ideal, const SymbolTable& table, int d_max);

/// Generators of the presentation F_p[a_p, b_r, s_r] through degree d_max:
/// a_p in degree 2p, b_r in degree 2r, s_r in degree 2r + 1, for r >= 1
/// with r != p^k - 1.
std::vector<GradedVariable> theorem_generators(Residue prime, int d_max);

/// Graded dimension of the free graded-commutative algebra on
/// theorem_generators, by exhaustive monomial enumeration.
std::vector<std::uint64_t> theorem_hilbert_function(Residue prime, int d_max);

/// Graded dimensions of the classical Lazard ring tensored with F_p: the same
/// pipeline run on F2 alone in x1, x2 with unit, commutativity and
/// associativity.
std::vector<HilbertDegree> ordinary_lazard_mode(Residue prime, int d_max, std::optional<int> truncation = {});

/// The full mod-p pipeline: generic law, relations, Hilbert function.
std::vector<HilbertDegree> modp_lazard_mode(Residue prime, int d_max, std::optional<int> truncation = {},
                                            const GenericLawOptions& options = {});

std::vector<std::uint64_t> dimensions(const std::vector<HilbertDegree>& h);

} // namespace fglkit

#endif
