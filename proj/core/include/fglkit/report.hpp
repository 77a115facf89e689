#ifndef FGLKIT_REPORT_HPP
#define FGLKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fglkit/fgl.hpp"
#include "fglkit/poincare.hpp"
#include "fglkit/universal_ring.hpp"

namespace fglkit {

enum class LazardMode { modp, ordinary };
std::string_view to_string(LazardMode m) noexcept;
std::optional<LazardMode> parse_lazard_mode(std::string_view text) noexcept;

struct LazardReport {
    LazardMode mode = LazardMode::modp;
    Residue prime = 3;
    int truncation = 0;
    int max_degree = 0;
    std::vector<HilbertDegree> degrees;
    std::vector<std::uint64_t> expected;
    std::vector<bool> match;

    bool all_match() const noexcept;
};

/// Runs the Lazard pipeline and pairs it with the expected dimensions:
/// theorem_hilbert_function for modp, partition counts (the Poincare series
/// of a polynomial ring on one generator per even degree) for ordinary.
LazardReport run_lazard(Residue prime, int max_degree, LazardMode mode, std::optional<int> truncation = {});

nlohmann::ordered_json to_json(const AxiomReport& report);
nlohmann::ordered_json to_json(const LazardReport& report);
nlohmann::ordered_json to_json(const SeriesComparison& comparison);
nlohmann::ordered_json p_series_json(const FormalGroupLawPair& law, const ComponentPair& series);

/// Human-readable one-line-per-item summaries.
std::string summarize(const AxiomReport& report);
std::string summarize(const LazardReport& report);
std::string summarize(const SeriesComparison& comparison, std::string_view title);

} // namespace fglkit

#endif
