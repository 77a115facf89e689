#include "fglkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace fglkit {

using nlohmann::ordered_json;

std::string_view to_string(LazardMode m) noexcept
{
    return m == LazardMode::modp ? "modp" : "ordinary";
}

std::optional<LazardMode> parse_lazard_mode(std::string_view text) noexcept
{
    if (text == "modp")
        return LazardMode::modp;
    if (text == "ordinary")
        return LazardMode::ordinary;
    return std::nullopt;
}

bool LazardReport::all_match() const noexcept
{
    return std::all_of(match.begin(), match.end(), [](bool b) { return b; });
}

LazardReport run_lazard(Residue prime, int max_degree, LazardMode mode, std::optional<int> truncation)
{
    require_odd_prime(prime);
    if (max_degree < 0)
        throw std::invalid_argument("maximum degree must be nonnegative");
    LazardReport r;
    r.mode = mode;
    r.prime = prime;
    r.max_degree = max_degree;
    r.truncation = truncation.value_or(max_degree + 2);
    if (r.truncation < max_degree + 2)
        throw TruncationMarginError("truncation " + std::to_string(r.truncation) + " is below the required margin " +
                                    std::to_string(max_degree + 2) + " for maximum degree " +
                                    std::to_string(max_degree));
    if (mode == LazardMode::modp) {
        r.degrees = modp_lazard_mode(prime, max_degree, r.truncation);
        r.expected = theorem_hilbert_function(prime, max_degree);
    } else {
        r.degrees = ordinary_lazard_mode(prime, max_degree, r.truncation);
        const auto partitions = mu_homology_series(max_degree);
        for (int d = 0; d <= max_degree; ++d)
            r.expected.push_back(static_cast<std::uint64_t>(partitions[d]));
    }
    for (std::size_t i = 0; i < r.degrees.size(); ++i)
        r.match.push_back(r.degrees[i].dimension == r.expected[i]);
    return r;
}

ordered_json to_json(const AxiomReport& report)
{
    ordered_json j;
    j["prime"] = report.prime;
    j["truncation"] = report.truncation;
    j["notice"] = report.notice;
    auto& axioms = j["axioms"] = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json a;
        a["axiom"] = to_string(e.axiom);
        a["status"] = to_string(e.status);
        if (e.witness) {
            a["component"] = e.witness->component;
            a["monomial"] = e.witness->monomial;
            a["degree"] = e.witness->degree;
            a["residual"] = e.witness->coefficient;
        }
        if (!e.note.empty())
            a["note"] = e.note;
        axioms.push_back(std::move(a));
    }
    j["all_pass"] = report.all_pass();
    return j;
}

ordered_json to_json(const LazardReport& report)
{
    ordered_json j;
    j["mode"] = to_string(report.mode);
    j["prime"] = report.prime;
    j["truncation"] = report.truncation;
    j["max_degree"] = report.max_degree;
    auto& degrees = j["degrees"] = ordered_json::array();
    for (const auto& d : report.degrees)
        degrees.push_back({{"degree", d.degree}, {"monomials", d.monomials}, {"rank", d.rank}, {"dimension", d.dimension}});
    j["expected"] = report.expected;
    j["expected_source"] = report.mode == LazardMode::modp
                               ? "F_p[a_p, b_r, s_r], |a_p| = 2p, |b_r| = 2r, |s_r| = 2r+1, r >= 1, r != p^k - 1"
                               : "partition counts: polynomial algebra on one generator in each even degree";
    if (report.mode == LazardMode::modp)
        j["reading"] = "one generator a_p; an alternative reading with a family a_{p^k}, k >= 1, would add "
                       "polynomial generators in degrees 2p^k for k >= 2 and is not used here";
    j["match"] = report.match;
    j["all_match"] = report.all_match();
    return j;
}

ordered_json to_json(const SeriesComparison& comparison)
{
    ordered_json j;
    auto& rows = j["rows"] = ordered_json::array();
    for (const auto& r : comparison.rows)
        rows.push_back({{"degree", r.degree}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal()}});
    j["all_equal"] = comparison.all_equal();
    j["mismatched_degrees"] = comparison.mismatched_degrees();
    return j;
}

ordered_json p_series_json(const FormalGroupLawPair& law, const ComponentPair& series)
{
    ordered_json j;
    j["prime"] = law.prime();
    j["truncation"] = law.truncation();
    j["p1"] = format_polynomial(series.odd);
    j["p2"] = format_polynomial(series.even);
    j["zero"] = series.is_zero();
    return j;
}

std::string summarize(const AxiomReport& report)
{
    std::ostringstream out;
    out << "law over F_" << report.prime << ", truncated above degree " << report.truncation << '\n';
    for (const auto& e : report.entries) {
        out << "  " << to_string(e.axiom) << ": " << to_string(e.status);
        if (e.status == AxiomStatus::not_applicable)
            out << " (" << e.note << ")";
        else if (e.witness)
            out << " at " << e.witness->component << " monomial " << e.witness->monomial << " (residual "
                << e.witness->coefficient << ")";
        out << '\n';
    }
    out << "note: " << report.notice << '\n';
    return out.str();
}

std::string summarize(const LazardReport& report)
{
    std::ostringstream out;
    out << to_string(report.mode) << " Lazard ring over F_" << report.prime << ", degrees 0.." << report.max_degree
        << " (truncation " << report.truncation << ")\n";
    out << "degree  monomials  rank  computed  expected  match\n";
    for (std::size_t i = 0; i < report.degrees.size(); ++i) {
        const auto& d = report.degrees[i];
        out << d.degree << "  " << d.monomials << "  " << d.rank << "  " << d.dimension << "  " << report.expected[i]
            << "  " << (report.match[i] ? "yes" : "NO") << '\n';
    }
    out << (report.all_match() ? "all degrees match" : "MISMATCH in at least one degree") << '\n';
    return out.str();
}

std::string summarize(const SeriesComparison& comparison, std::string_view title)
{
    std::ostringstream out;
    out << title << '\n' << "degree  lhs  rhs  equal\n";
    for (const auto& r : comparison.rows)
        out << r.degree << "  " << r.lhs << "  " << r.rhs << "  " << (r.equal() ? "yes" : "NO") << '\n';
    return out.str();
}

} // namespace fglkit
