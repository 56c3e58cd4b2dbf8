#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppsp/arith.hpp"
#include "ppsp/exact_rational.hpp"
#include "ppsp/groups.hpp"
#include "ppsp/quadratic.hpp"

namespace ppsp {

enum class BaseRing { Maximal, Suborder };

/// Genus of the polarization module: r in {1, 8, 16}. r = 16 lives over
/// Z[sqrt p], the others over the maximal order.
struct GenusLabel {
  int r = 1;
  BaseRing base_ring = BaseRing::Maximal;

  /// Throws PreconditionError for r outside {1, 8, 16}.
  static GenusLabel make(int r);

  friend auto operator<=>(const GenusLabel&, const GenusLabel&) = default;
};

enum class GaussGenusClass { Principal, NonPrincipal, Unique };

std::string to_string(GaussGenusClass g);
GaussGenusClass parse_gauss_genus(const std::string& text);

/// Every number the closed forms consume, gathered once per prime.
/// Kept as a plain struct so callers can feed perturbed values.
struct CensusInputs {
  PrimeInput p;
  ExactRational zeta;
  int chi2 = 0;      // (2/p)
  int chi3 = 0;      // (p/3)
  int chi_m4 = 0;    // (-4/p)
  int chi_m3 = 0;    // (-3/p)
  std::int64_t h_minus_p = 0;
  std::optional<std::int64_t> h_minus_2p;  // odd p only
  std::optional<std::int64_t> h_minus_3p;  // p != 3
  std::optional<int> varpi;                // p = 1 mod 4
  std::int64_t h = 0;
  std::optional<std::int64_t> h_A;

  static CensusInputs from_profile(const RealQuadraticProfile& profile);
  static CensusInputs for_prime(const PrimeInput& p);
};

struct LambdaStrata {
  std::int64_t lambda1 = 0;
  std::int64_t lambda16 = 0;
};

struct PolModTriple {
  std::int64_t h_pm = 0;
  std::int64_t h_un = 0;
  std::int64_t t = 0;

  friend bool operator==(const PolModTriple&, const PolModTriple&) = default;
};

struct PolModRationals {
  ExactRational h_pm;
  ExactRational h_un;
  ExactRational t;
};

struct RefinedPolMod {
  RefinedTable pm;
  RefinedTable un;
};

struct RefinedPolModRationals {
  RationalTable pm;
  RationalTable un;
};

enum class MassStratum { PmR1, UnR1, PmR8, UnR8, PmR16, UnR16, Ppsp };

std::string to_string(MassStratum s);
MassStratum parse_mass_stratum(const std::string& text);

struct EllipticBaseline {
  std::int64_t h = 0;
  std::int64_t t = 0;
  RefinedTable refined;

  friend bool operator==(const EllipticBaseline&, const EllipticBaseline&) = default;
};

// Unchecked rational values. These are what the verifier inspects; the
// integer-valued functions further down wrap them with integrality checks.
namespace formula {

ExactRational class_number(const CensusInputs& in);
ExactRational type_number(const CensusInputs& in);
/// The alternative closed form for the type number when p = 1 mod 4,
/// p >= 13, evaluated as written (it is not used for any output).
ExactRational alternative_type_number(const CensusInputs& in);
ExactRational lambda1(const CensusInputs& in);
ExactRational lambda16(const CensusInputs& in);
RationalTable refined(const CensusInputs& in);
PolModRationals pol_mod(const CensusInputs& in, GenusLabel r, GaussGenusClass g);
RefinedPolModRationals refined_pol_mod(const CensusInputs& in, GenusLabel r, GaussGenusClass g);
/// Elliptic class number, type number and refined table over the prime field.
ExactRational elliptic_class_number(const CensusInputs& in);
ExactRational elliptic_type_number(const CensusInputs& in);
RationalTable elliptic_refined(const CensusInputs& in);
/// Mass of the full principal genus of the order of index 16 over Z[sqrt p],
/// before dividing by h(A).
ExactRational mass_order16(const CensusInputs& in);

}  // namespace formula

/// Legal (genus, Gauss genus) pairs for p, in report order.
std::vector<std::pair<GenusLabel, GaussGenusClass>> pol_mod_strata(const PrimeInput& p);

/// Whether a refined table exists for the stratum.
bool has_refined_pol_mod(const PrimeInput& p, GenusLabel r);

std::int64_t ppav_class_number(const CensusInputs& in);
std::int64_t ppav_class_number(const PrimeInput& p);
std::int64_t ppav_type_number(const CensusInputs& in);
std::int64_t ppav_type_number(const PrimeInput& p);
LambdaStrata lambda_pp_strata(const CensusInputs& in);
LambdaStrata lambda_pp_strata(const PrimeInput& p);
RefinedTable ppav_refined(const CensusInputs& in);
RefinedTable ppav_refined(const PrimeInput& p);
PolModTriple pol_mod_numbers(const CensusInputs& in, GenusLabel r, GaussGenusClass g);
PolModTriple pol_mod_numbers(const PrimeInput& p, GenusLabel r, GaussGenusClass g);
std::map<MassStratum, ExactRational> mass_values(const CensusInputs& in);
std::map<MassStratum, ExactRational> mass_values(const PrimeInput& p);
RefinedPolMod refined_pol_mod(const CensusInputs& in, GenusLabel r, GaussGenusClass g);
RefinedPolMod refined_pol_mod(const PrimeInput& p, GenusLabel r, GaussGenusClass g);
EllipticBaseline elliptic_baseline(const CensusInputs& in);
EllipticBaseline elliptic_baseline(const PrimeInput& p);

struct PolModEntry {
  GenusLabel genus;
  GaussGenusClass gauss = GaussGenusClass::Unique;
  PolModTriple numbers;

  friend bool operator==(const PolModEntry&, const PolModEntry&) = default;
};

struct CensusReport {
  PrimeInput p;
  RealQuadraticProfile profile;
  std::int64_t h_pp = 0;
  std::int64_t t_pp = 0;
  RefinedTable refined_pp;
  std::int64_t lambda1_pp = 0;
  std::optional<std::int64_t> lambda16_pp;
  std::vector<PolModEntry> pol_mod;
  std::map<MassStratum, ExactRational> masses;
  EllipticBaseline elliptic;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Full report for one prime. Throws InvariantViolation naming the identity
/// if the assembled numbers are inconsistent.
CensusReport census(const PrimeInput& p);
CensusReport census(const CensusInputs& in, const RealQuadraticProfile& profile);

}  // namespace ppsp
