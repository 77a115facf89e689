#ifndef FGLKIT_POINCARE_HPP
#define FGLKIT_POINCARE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fglkit/fp_linalg.hpp"

namespace fglkit {

/// Integer power series sum_{d <= cap} c_d t^d: the graded dimensions of a
/// graded vector space through degree `cap`.
class PoincareSeries {
public:
    explicit PoincareSeries(int cap);
    /// Coefficients beyond the cap are dropped; missing ones are zero.
    PoincareSeries(int cap, std::vector<std::int64_t> coefficients);

    static PoincareSeries one(int cap);
    static PoincareSeries monomial(int cap, int degree, std::int64_t coefficient = 1);

    int cap() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Throws std::out_of_range beyond the cap.
    std::int64_t operator[](int degree) const;
    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

    PoincareSeries truncated(int cap) const;

    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

// Binary operations work at the smaller of the two caps.
PoincareSeries add(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries sub(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries mul(const PoincareSeries& a, const PoincareSeries& b);
/// Requires constant term 1 or -1; throws std::domain_error otherwise.
PoincareSeries inverse(const PoincareSeries& a);
/// Multiplies by t^n (n >= 0), keeping the cap.
PoincareSeries shift(const PoincareSeries& s, int n);

inline PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b) { return add(a, b); }
inline PoincareSeries operator-(const PoincareSeries& a, const PoincareSeries& b) { return sub(a, b); }
inline PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) { return mul(a, b); }

/// Free graded-commutative algebra on a module with module[d] generators in
/// degree d: prod_{d even} (1 - t^d)^{-m_d} * prod_{d odd} (1 + t^d)^{m_d}.
/// The module must vanish in degree 0 and have nonnegative coefficients.
PoincareSeries sym_algebra(const PoincareSeries& module);

/// Free associative algebra over `base` on `module`:
/// base * (1 - module)^{-1} = sum_n base * module^n.
PoincareSeries tensor_algebra(const PoincareSeries& base, const PoincareSeries& module);

/// Polynomial algebra on one generator in each degree 2i, i >= 1.
PoincareSeries mu_homology_series(int cap);
/// One class in every degree >= 0 (F_p[x] (x) Lambda(e), |x| = 2, |e| = 1).
PoincareSeries bcp_series(int cap);
/// Polynomial on xi_i (degree 2(p^i - 1)), exterior on tau_i (degree 2p^i - 1).
PoincareSeries dual_steenrod_series(Residue prime, int cap);
/// Generating function of theorem_hilbert_function(prime, cap).
PoincareSeries lp_series(Residue prime, int cap);

struct SeriesRow {
    int degree = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool equal() const noexcept { return lhs == rhs; }
};

struct SeriesComparison {
    std::vector<SeriesRow> rows;

    bool all_equal() const noexcept;
    std::optional<int> first_mismatch() const noexcept;
    std::vector<int> mismatched_degrees() const;
};

SeriesComparison compare(const PoincareSeries& lhs, const PoincareSeries& rhs);

/// tensor_algebra(mu, t * bcp) against the direct sum of the filtration
/// quotients sum_n t^n * mu * bcp^n.
SeriesComparison check_v1_homology(Residue prime, int cap);

/// Report-only comparison of mu * sym_algebra(t * bcp) with
/// lp_series * dual_steenrod_series.
SeriesComparison check_rstar_diagnostic(Residue prime, int cap);

} // namespace fglkit

#endif
