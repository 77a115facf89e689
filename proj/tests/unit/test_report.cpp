#include <doctest.h>

#include "fglkit/report.hpp"

using namespace fglkit;

TEST_CASE("axiom report JSON")
{
    const auto j = to_json(check_all(multiplicative_even_law(3, 8)));
    CHECK(j["prime"] == 3);
    CHECK(j["truncation"] == 8);
    CHECK(j["all_pass"] == false);
    REQUIRE(j["axioms"].size() == 6);
    const auto& ps = j["axioms"][3];
    CHECK(ps["axiom"] == "p-series");
    CHECK(ps["status"] == "fail");
    CHECK(ps["monomial"] == "x^3");
    CHECK(ps["component"] == "F2");
    CHECK(j["axioms"][5]["status"] == "not-applicable");
    CHECK_FALSE(j["notice"].get<std::string>().empty());
}

TEST_CASE("p-series JSON")
{
    const auto l = multiplicative_even_law(3, 8);
    const auto j = p_series_json(l, p_series(l));
    CHECK(j["p1"] == "0");
    CHECK(j["p2"] == "x^3");
    CHECK(j["zero"] == false);
}

TEST_CASE("run_lazard pairs computed and expected values")
{
    const auto ord = run_lazard(3, 8, LazardMode::ordinary);
    CHECK(ord.all_match());
    CHECK(ord.expected == std::vector<std::uint64_t>{1, 0, 1, 0, 2, 0, 3, 0, 5});
    CHECK(ord.truncation == 10);

    const auto zero = run_lazard(3, 0, LazardMode::modp);
    CHECK(zero.all_match());
    CHECK(dimensions(zero.degrees) == std::vector<std::uint64_t>{1});

    const auto modp = run_lazard(3, 4, LazardMode::modp);
    CHECK(modp.expected == std::vector<std::uint64_t>{1, 0, 1, 1, 1});
    CHECK(modp.match.size() == 5);

    CHECK_THROWS_AS(run_lazard(3, 5, LazardMode::modp, 6), TruncationMarginError);
    CHECK_THROWS_AS(run_lazard(9, 2, LazardMode::modp), std::invalid_argument);
}

TEST_CASE("lazard JSON fields")
{
    const auto j = to_json(run_lazard(3, 3, LazardMode::modp));
    CHECK(j["mode"] == "modp");
    CHECK(j["max_degree"] == 3);
    REQUIRE(j["degrees"].size() == 4);
    CHECK(j["degrees"][0]["dimension"] == 1);
    CHECK(j["degrees"][0].contains("monomials"));
    CHECK(j["degrees"][0].contains("rank"));
    CHECK(j["match"].size() == 4);
    CHECK(j.contains("all_match"));
}

TEST_CASE("reports are byte-identical across runs")
{
    const auto a = to_json(run_lazard(3, 6, LazardMode::modp)).dump(2);
    const auto b = to_json(run_lazard(3, 6, LazardMode::modp)).dump(2);
    CHECK(a == b);
    CHECK(to_json(check_all(additive_law(5, 8))).dump() == to_json(check_all(additive_law(5, 8))).dump());
    CHECK(to_json(check_rstar_diagnostic(3, 10)).dump() == to_json(check_rstar_diagnostic(3, 10)).dump());
}

TEST_CASE("series JSON lists mismatches")
{
    const auto j = to_json(check_rstar_diagnostic(3, 6));
    CHECK(j["all_equal"] == false);
    CHECK(j["mismatched_degrees"][0] == 2);
    CHECK(j["rows"][2]["lhs"] == 2);
    CHECK(j["rows"][2]["rhs"] == 1);
    CHECK(j["rows"][2]["equal"] == false);
}

TEST_CASE("mode parsing")
{
    CHECK(parse_lazard_mode("modp") == LazardMode::modp);
    CHECK(parse_lazard_mode("ordinary") == LazardMode::ordinary);
    CHECK_FALSE(parse_lazard_mode("other").has_value());
}
