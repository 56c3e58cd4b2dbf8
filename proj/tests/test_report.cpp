#include <sstream>

#include "doctest.h"
#include "ppsp/parallel.hpp"
#include "ppsp/report.hpp"
#include "ppsp/verify.hpp"

using ppsp::PrimeInput;

namespace {

std::vector<ppsp::CensusReport> reports_up_to(std::uint64_t n, unsigned jobs) {
  auto primes = ppsp::primes_between(2, n);
  return ppsp::parallel_map<ppsp::CensusReport>(primes.size(), jobs,
                                                [&](std::size_t i) { return ppsp::census(PrimeInput::make(primes[i])); });
}

}  // namespace

TEST_CASE("json keys and encodings") {
  auto j = ppsp::report_json(ppsp::census(PrimeInput::make(5)));
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  const std::vector<std::string> expected{"p",     "d_F",        "h",         "h_plus",      "varpi",
                                          "h_A",   "unit",       "zeta_minus1", "h_pp",      "t_pp",
                                          "refined_pp", "lambda1_pp", "lambda16_pp", "pol_mod", "masses",
                                          "elliptic"};
  CHECK(keys == expected);
  CHECK(j["zeta_minus1"] == "1/30");
  CHECK(j["masses"]["ppsp"] == "11/120");
  CHECK(j["refined_pp"]["E120"] == 1);

  auto j7 = ppsp::report_json(ppsp::census(PrimeInput::make(7)));
  CHECK(j7["varpi"].is_null());
  CHECK(j7["lambda16_pp"].is_null());
}

TEST_CASE("prime power metadata") {
  auto j = ppsp::report_json(ppsp::census(PrimeInput::make(5)), ppsp::QueryMeta{125, 3});
  CHECK(j["q"] == 125);
  CHECK(j["exponent"] == 3);
  CHECK(j["note"] == "PPSP(√q) ≅ PPAV(√p)");

  auto e = ppsp::elliptic_record(25);
  CHECK(e.p.p == 5);
  CHECK(e.elliptic.h == 1);
  CHECK(ppsp::elliptic_json(e)["elliptic"]["h"] == 1);
  CHECK_THROWS(ppsp::elliptic_record(125));
}

TEST_CASE("type number diagnostic") {
  auto d = ppsp::type_number_diagnostic(PrimeInput::make(13));
  REQUIRE(d.has_value());
  CHECK(d->alternative == ppsp::ExactRational(5));
  CHECK(d->implemented == 3);
  CHECK_FALSE(ppsp::type_number_diagnostic(PrimeInput::make(7)).has_value());
  CHECK_FALSE(ppsp::type_number_diagnostic(PrimeInput::make(5)).has_value());
  auto j = ppsp::report_json(ppsp::census(PrimeInput::make(13)), std::nullopt, d);
  CHECK(j["diagnostics"]["alternative_type_formula"] == "5/1");
  CHECK(j["diagnostics"]["t_pp"] == 3);
}

TEST_CASE("json round trip") {
  for (const auto& r : reports_up_to(400, 2)) {
    auto text = ppsp::report_json(r).dump();
    REQUIRE_MESSAGE(ppsp::report_from_json(ppsp::Json::parse(text)) == r, "p=" << r.p.p);
  }
}

TEST_CASE("csv round trip") {
  auto reports = reports_up_to(400, 2);
  std::ostringstream out;
  out << ppsp::csv_header();
  for (const auto& r : reports) out << ppsp::csv_row(r);
  std::istringstream in(out.str());
  auto parsed = ppsp::reports_from_csv(in);
  REQUIRE(parsed.size() == reports.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) REQUIRE_MESSAGE(parsed[i] == reports[i], "p=" << reports[i].p.p);
  CHECK(ppsp::csv_header().rfind("# ", 0) == 0);
}

TEST_CASE("output does not depend on the job count") {
  auto serialize = [](const std::vector<ppsp::CensusReport>& rs) {
    std::string s;
    for (const auto& r : rs) s += ppsp::report_json(r).dump() + ppsp::csv_row(r) + ppsp::markdown_row(r);
    return s;
  };
  std::string one = serialize(reports_up_to(600, 1));
  CHECK(serialize(reports_up_to(600, 3)) == one);
  CHECK(serialize(reports_up_to(600, 8)) == one);
}

TEST_CASE("verification summaries do not depend on the job count") {
  auto a = ppsp::verify_range(300, 1);
  auto b = ppsp::verify_range(300, 5);
  CHECK(a.primes_checked == b.primes_checked);
  for (std::size_t i = 0; i < a.tallies.size(); ++i) {
    CHECK(a.tallies[i].checked == b.tallies[i].checked);
    CHECK(a.tallies[i].passed == b.tallies[i].passed);
  }
  auto fa = ppsp::verify_range(300, 1, ppsp::FaultInjection{1});
  auto fb = ppsp::verify_range(300, 5, ppsp::FaultInjection{1});
  CHECK(fa.first_failure->p == fb.first_failure->p);
  CHECK(fa.first_failure->identity == fb.first_failure->identity);
}

TEST_CASE("job count resolution") {
  CHECK(ppsp::resolve_jobs(3u) == 3);
  CHECK(ppsp::resolve_jobs(std::nullopt) >= 1);
}
