#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ppsp/census.hpp"

namespace ppsp {

using Json = nlohmann::ordered_json;

/// Where a record came from when the user asked about a prime power q.
struct QueryMeta {
  std::uint64_t q = 0;
  unsigned exponent = 1;
};

/// The alternative type-number closed form next to the value actually
/// reported; only defined for p = 1 mod 4, p >= 13.
struct TypeNumberDiagnostic {
  ExactRational alternative;
  std::int64_t implemented = 0;
};

std::optional<TypeNumberDiagnostic> type_number_diagnostic(const PrimeInput& p);

/// Record for an even power q = p^(2k).
struct EllipticRecord {
  QueryMeta meta;
  PrimeInput p;
  EllipticBaseline elliptic;

  friend bool operator==(const EllipticRecord&, const EllipticRecord&) = default;
};

EllipticRecord elliptic_record(std::uint64_t q);

/// Fixed key order; rationals as "num/den" strings, big unit coordinates as
/// decimal strings, absent optionals as null.
Json report_json(const CensusReport& report, const std::optional<QueryMeta>& meta = std::nullopt,
                 const std::optional<TypeNumberDiagnostic>& diagnostic = std::nullopt);
CensusReport report_from_json(const Json& j);

Json elliptic_json(const EllipticRecord& record);

const std::vector<std::string>& csv_columns();
/// Comment line describing the columns, then the column header.
std::string csv_header();
std::string csv_row(const CensusReport& report);
/// Skips lines starting with '#'; the first remaining line must be the header.
std::vector<CensusReport> reports_from_csv(std::istream& in);

std::string elliptic_csv_header();
std::string elliptic_csv_row(const EllipticRecord& record);

std::string markdown_header();
std::string markdown_row(const CensusReport& report);
std::string elliptic_markdown(const EllipticRecord& record);

}  // namespace ppsp
