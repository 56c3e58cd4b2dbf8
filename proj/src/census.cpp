#include "ppsp/census.hpp"

#include <string>

#include "ppsp/errors.hpp"

namespace ppsp {

namespace {

using Q = ExactRational;

Q q(long long n, long long d = 1) { return Q(n, d); }

std::string at_p(const PrimeInput& p) { return " at p = " + std::to_string(p.p); }

void require(bool cond, const std::string& what, const PrimeInput& p) {
  if (!cond) throw PreconditionError(what + at_p(p));
}

Q need(const std::optional<std::int64_t>& v, const char* name, const PrimeInput& p) {
  if (!v) throw PreconditionError(std::string(name) + " is not available" + at_p(p));
  return Q(static_cast<long long>(*v));
}

Q need_varpi(const CensusInputs& in) {
  if (!in.varpi) throw PreconditionError("unit index is not available" + at_p(in.p));
  return Q(*in.varpi);
}

std::int64_t as_count(const Q& v, const std::string& what, const PrimeInput& p) {
  if (!v.is_integer() || v.sign() < 0) {
    throw NonIntegralError(what + " = " + v.str() + at_p(p));
  }
  return v.to_int64();
}

const GroupTag kC1{GroupName::C1};
const GroupTag kC2{GroupName::C2};
const GroupTag kC2dag{GroupName::C2, Decoration::Dagger};
const GroupTag kC2ddag{GroupName::C2, Decoration::DoubleDagger};
const GroupTag kC3{GroupName::C3};
const GroupTag kC4{GroupName::C4};
const GroupTag kC6{GroupName::C6};
const GroupTag kQ8{GroupName::Q8};
const GroupTag kQ12{GroupName::Q12};
const GroupTag kQ24{GroupName::Q24};
const GroupTag kE24{GroupName::E24};
const GroupTag kE48{GroupName::E48};
const GroupTag kE120{GroupName::E120};
const GroupTag kD2{GroupName::D2};
const GroupTag kD3{GroupName::D3};
const GroupTag kD3dag{GroupName::D3, Decoration::Dagger};
const GroupTag kD3ddag{GroupName::D3, Decoration::DoubleDagger};
const GroupTag kD4{GroupName::D4};
const GroupTag kA4{GroupName::A4};
const GroupTag kS4{GroupName::S4};

RationalTable zero_table(std::initializer_list<GroupTag> tags) {
  RationalTable t;
  for (const auto& tag : tags) t.set(tag, Q());
  return t;
}

void check_stratum(const PrimeInput& p, GenusLabel r, GaussGenusClass g) {
  for (const auto& [label, gauss] : pol_mod_strata(p)) {
    if (label == r && gauss == g) return;
  }
  throw PreconditionError("no stratum r = " + std::to_string(r.r) + ", " + to_string(g) + at_p(p));
}

}  // namespace

GenusLabel GenusLabel::make(int r) {
  if (r == 1 || r == 8) return GenusLabel{r, BaseRing::Maximal};
  if (r == 16) return GenusLabel{r, BaseRing::Suborder};
  throw PreconditionError("genus r must be 1, 8 or 16, got " + std::to_string(r));
}

std::string to_string(GaussGenusClass g) {
  switch (g) {
    case GaussGenusClass::Principal:
      return "principal";
    case GaussGenusClass::NonPrincipal:
      return "nonprincipal";
    case GaussGenusClass::Unique:
      return "unique";
  }
  return "?";
}

GaussGenusClass parse_gauss_genus(const std::string& text) {
  if (text == "principal") return GaussGenusClass::Principal;
  if (text == "nonprincipal") return GaussGenusClass::NonPrincipal;
  if (text == "unique") return GaussGenusClass::Unique;
  throw PreconditionError("unknown Gauss genus " + text);
}

std::string to_string(MassStratum s) {
  switch (s) {
    case MassStratum::PmR1:
      return "pm_r1";
    case MassStratum::UnR1:
      return "un_r1";
    case MassStratum::PmR8:
      return "pm_r8";
    case MassStratum::UnR8:
      return "un_r8";
    case MassStratum::PmR16:
      return "pm_r16";
    case MassStratum::UnR16:
      return "un_r16";
    case MassStratum::Ppsp:
      return "ppsp";
  }
  return "?";
}

MassStratum parse_mass_stratum(const std::string& text) {
  for (auto s : {MassStratum::PmR1, MassStratum::UnR1, MassStratum::PmR8, MassStratum::UnR8, MassStratum::PmR16,
                 MassStratum::UnR16, MassStratum::Ppsp}) {
    if (to_string(s) == text) return s;
  }
  throw PreconditionError("unknown mass stratum " + text);
}

CensusInputs CensusInputs::from_profile(const RealQuadraticProfile& profile) {
  const PrimeInput& p = profile.p;
  const std::int64_t v = p.value();
  CensusInputs in;
  in.p = p;
  in.zeta = profile.zeta_minus1;
  in.chi2 = kronecker(2, v);
  in.chi3 = kronecker(v, 3);
  in.chi_m4 = kronecker(-4, v);
  in.chi_m3 = kronecker(-3, v);
  in.h_minus_p = class_number_imaginary(-v);
  if (p.p != 2) in.h_minus_2p = class_number_imaginary(-2 * v);
  if (p.p != 3) in.h_minus_3p = class_number_imaginary(-3 * v);
  in.varpi = profile.varpi;
  in.h = profile.h;
  in.h_A = profile.h_A;
  return in;
}

CensusInputs CensusInputs::for_prime(const PrimeInput& p) { return from_profile(real_quadratic_profile(p)); }

namespace formula {

ExactRational class_number(const CensusInputs& in) {
  const auto& p = in.p;
  if (p.p == 2 || p.p == 3) return q(1);
  if (p.p == 5) return q(2);
  Q hp = q(in.h_minus_p);
  Q h3p = need(in.h_minus_3p, "h(-3p)", p);
  if (p.one_mod4()) {
    return q(9 - 2 * in.chi2) * in.zeta / q(2) + q(3) * hp / q(8) + q(3 + in.chi2) * h3p / q(6);
  }
  return in.zeta / q(2) + q(11 - 3 * in.chi2) * hp / q(8) + h3p / q(6);
}

ExactRational type_number(const CensusInputs& in) {
  const auto& p = in.p;
  if (p.p == 2 || p.p == 3) return q(1);
  if (p.p == 5) return q(2);
  if (p.one_mod4()) return lambda1(in) + lambda16(in);
  Q hp = q(in.h_minus_p);
  return in.zeta / q(4) + q(17 - in.chi2) * hp / q(16) + need(in.h_minus_2p, "h(-2p)", p) / q(8) +
         need(in.h_minus_3p, "h(-3p)", p) / q(12);
}

ExactRational alternative_type_number(const CensusInputs& in) {
  require(in.p.one_mod4() && in.p.p >= 13, "alternative type formula needs p = 1 mod 4, p >= 13", in.p);
  return q(8) * in.zeta + q(in.h_minus_p) / q(2) + q(2) * need(in.h_minus_3p, "h(-3p)", in.p) / q(3);
}

ExactRational lambda1(const CensusInputs& in) {
  require(in.p.one_mod4(), "strata need p = 1 mod 4", in.p);
  if (in.p.p == 5) return q(1);
  return in.zeta / q(2) + q(in.h_minus_p) / q(8) + need(in.h_minus_3p, "h(-3p)", in.p) / q(6);
}

ExactRational lambda16(const CensusInputs& in) {
  require(in.p.one_mod4(), "strata need p = 1 mod 4", in.p);
  return q(4 - in.chi2) * in.zeta + q(in.h_minus_p) / q(4) +
         q(2 + in.chi2) * need(in.h_minus_3p, "h(-3p)", in.p) / q(6);
}

RationalTable refined(const CensusInputs& in) {
  const auto& p = in.p;
  RationalTable t = zero_table({kC2, kC4, kC6, kQ8, kQ12, kQ24, kE24, kE48, kE120});
  if (p.p == 2) {
    t.set(kE48, q(1));
    return t;
  }
  if (p.p == 3) {
    t.set(kQ24, q(1));
    return t;
  }
  if (p.p == 5) {
    t.set(kE120, q(1));
    t.set(kQ12, q(1));
    return t;
  }
  const int c2 = in.chi2;
  const int c3 = in.chi3;
  Q hp = q(in.h_minus_p);
  Q h3p = need(in.h_minus_3p, "h(-3p)", p);
  if (p.one_mod4()) {
    t.set(kC2, q(9 - 2 * c2) * in.zeta / q(2) - q(3) * hp / q(8) - q(3 + c2) * h3p / q(12) - q(c2, 4) -
                   q(c3, 2) + q(3, 4));
    t.set(kC4, q(3) * hp / q(4) + q(c2, 4) + q(c3) - q(5, 4));
    t.set(kC6, q(3 + c2) * h3p / q(4) + q(c2, 2) + q(c3, 2) - q(1));
    t.set(kQ12, q(1 - c3));
    t.set(kE24, q(1 - c2, 2));
    return t;
  }
  t.set(kC2, in.zeta / q(2) - q(11 - 3 * c2) * hp / q(8) - h3p / q(12) + q(c2, 4) - q(c3, 2) + q(5, 4));
  t.set(kC4, (q(11, 4) - q(3 * c2, 4)) * (hp - q(1)) - q(c2) + q(c3));
  t.set(kC6, h3p / q(4) - q(c2, 2) + q(c3, 2) - q(1));
  t.set(kQ8, q(1));
  t.set(kQ12, q(1 - c3));
  t.set(kE24, q(1 + c2, 2));
  return t;
}

PolModRationals pol_mod(const CensusInputs& in, GenusLabel r, GaussGenusClass g) {
  const auto& p = in.p;
  check_stratum(p, r, g);
  const int c2 = in.chi2;
  if (r.r == 1 && p.p <= 5) return {q(1), q(1), q(1)};
  Q hp = q(in.h_minus_p);
  if (p.one_mod4()) {
    if (r.r == 1) {
      Q v = lambda1(in);
      return {v, v, v};
    }
    if (r.r == 16) {
      Q v = lambda16(in);
      return {v, v, v};
    }
    Q varpi = need_varpi(in);
    Q h3p = need(in.h_minus_3p, "h(-3p)", p);
    Q delta = (*in.varpi == 3) ? q(1) : q(0);
    Q pm = q(3, 2) * q(4 - c2) * in.zeta + q(2 - c2) * hp / q(8);
    Q un = q(3) / (q(2) * varpi) * q(4 - c2) * in.zeta + q(2 - c2) * hp / (q(8) * varpi) + delta / varpi * h3p;
    Q t = q(7 + 2 * c2, 2) * in.zeta + hp / q(8) + q(1 - c2) * h3p / q(6);
    return {pm, un, t};
  }
  Q h2p = need(in.h_minus_2p, "h(-2p)", p);
  Q h3p = need(in.h_minus_3p, "h(-3p)", p);
  if (g == GaussGenusClass::Principal) {
    Q un = type_number(in);
    return {class_number(in), un, un};
  }
  Q pm = in.zeta / q(2) + q(3 * (1 - c2)) * hp / q(8) + h3p / q(6);
  Q un = in.zeta / q(4) + q(9 * (1 - c2)) * hp / q(16) + h2p / q(8) + h3p / q(12);
  return {pm, un, un};
}

RefinedPolModRationals refined_pol_mod(const CensusInputs& in, GenusLabel r, GaussGenusClass g) {
  const auto& p = in.p;
  check_stratum(p, r, g);
  require(has_refined_pol_mod(p, r), "no refined table for r = " + std::to_string(r.r), p);
  const int c2 = in.chi2;
  const int c3 = in.chi3;
  Q hp = q(in.h_minus_p);
  Q h3p = need(in.h_minus_3p, "h(-3p)", p);
  RefinedPolModRationals out;

  if (r.r == 16) {
    Q c2v = q(4 - c2) * in.zeta - hp / q(4) - q(2 + c2) * h3p / q(12) + q(1 - c3, 4);
    Q c4v = hp / q(2) + q(c3 - 1, 2);
    Q c6v = q(2 + c2) * h3p / q(4) + q(c3 - 1, 4);
    Q q12v = q(1 - c3, 2);
    out.pm = zero_table({kC2, kC4, kC6, kQ12});
    out.pm.set(kC2, c2v);
    out.pm.set(kC4, c4v);
    out.pm.set(kC6, c6v);
    out.pm.set(kQ12, q12v);
    out.un = zero_table({kC1, kC2, kC3, kD3, kA4, kD2});
    out.un.set(kC1, c2v);
    out.un.set(kC2, c4v);
    out.un.set(kC3, c6v);
    out.un.set(kD3, q12v);
    return out;
  }

  if (p.one_mod4()) {
    Q c2v = in.zeta / q(2) - hp / q(8) - h3p / q(12) - q(c3, 4) - q(c2, 4) + q(1, 2);
    Q c4v = hp / q(4) + q(c3, 2) + q(c2, 4) - q(3, 4);
    Q c6v = h3p / q(4) + q(c3, 4) + q(c2, 2) - q(3, 4);
    Q q12v = q(1 - c3, 2);
    Q e24v = q(1 - c2, 2);
    out.pm = zero_table({kC2, kC4, kC6, kQ12, kE24});
    out.pm.set(kC2, c2v);
    out.pm.set(kC4, c4v);
    out.pm.set(kC6, c6v);
    out.pm.set(kQ12, q12v);
    out.pm.set(kE24, e24v);
    out.un = zero_table({kC1, kC2dag, kC3, kD3dag, kA4});
    out.un.set(kC1, c2v);
    out.un.set(kC2dag, c4v);
    out.un.set(kC3, c6v);
    out.un.set(kD3dag, q12v);
    out.un.set(kA4, e24v);
    return out;
  }

  Q h2p = need(in.h_minus_2p, "h(-2p)", p);
  out.pm = zero_table({kC2, kC4, kC6, kQ8, kQ12, kE24});
  out.un = zero_table({kC1, kC2dag, kC2ddag, kC3, kC4, kD3dag, kD3ddag, kD4, kS4});
  if (g == GaussGenusClass::Principal) {
    RationalTable pp = refined(in);
    for (const auto& tag : {kC2, kC4, kC6, kQ8, kQ12, kE24}) out.pm.set(tag, pp.at(tag));
    out.un.set(kC2dag, q(2 - c2) * hp / q(2) + q(c3, 2) - q(1));
    out.un.set(kC2ddag, h2p / q(4) - q(c3 * (1 - c2), 4) - q(1));
    out.un.set(kC3, h3p / q(8) - q((1 + c2) * (1 - c3), 8) - q(1, 2));
    out.un.set(kC4, q(3 + c2) * (hp - q(1)) / q(4));
    out.un.set(kD4, q(1));
    out.un.set(kS4, q(1 + c2, 2));
    out.un.set(kD3dag, q(1 - c3, 2));
    out.un.set(kD3ddag, q((1 + c3) * (1 - c2), 4));
    out.un.set(kC1, in.zeta / q(4) - q(11 - 3 * c2) * hp / q(16) - h2p / q(8) - h3p / q(24) +
                        q((1 + c2) * (1 - c3), 8) + q(1));
    return out;
  }
  out.pm.set(kC2, in.zeta / q(2) - q(3 * (1 - c2)) * hp / q(8) - h3p / q(12) + q(1 - c2, 4));
  out.pm.set(kC4, q(3 * (1 - c2)) * hp / q(4) - q(1 - c2, 4));
  out.pm.set(kC6, h3p / q(4) + q(c2, 2) - q(1, 2));
  out.pm.set(kE24, q(1 - c2, 2));
  out.un.set(kC2ddag, h2p / q(4) - q(c3 * (1 + c2), 4) - q(1, 2));
  out.un.set(kC3, h3p / q(8) + q((1 + c2) * (1 - c3), 8) - q(1, 2));
  out.un.set(kC4, q(1 - c2) * (q(3) * hp - q(1)) / q(4));
  out.un.set(kS4, q(1 - c2, 2));
  out.un.set(kD3ddag, q((1 + c3) * (1 + c2), 4));
  out.un.set(kC1, in.zeta / q(4) - q(3 * (1 - c2)) * hp / q(16) - h2p / q(8) - h3p / q(24) -
                      q((1 + c2) * (1 - c3), 8) + q(1, 2));
  return out;
}

ExactRational elliptic_class_number(const CensusInputs& in) {
  const long long pv = in.p.value();
  return q(pv - 1, 12) + q(1 - in.chi_m4, 4) + q(1 - in.chi_m3, 3);
}

ExactRational elliptic_type_number(const CensusInputs& in) {
  if (in.p.p <= 3) return q(1);
  Q bracket = q(1, 2) + q((1 - in.chi_m4) * (2 - in.chi2), 4);
  return (elliptic_class_number(in) + bracket * q(in.h_minus_p)) / q(2);
}

RationalTable elliptic_refined(const CensusInputs& in) {
  RationalTable t;
  if (in.p.p == 2) {
    t.set(kE24, q(1));
    return t;
  }
  if (in.p.p == 3) {
    t.set(kQ12, q(1));
    return t;
  }
  const long long pv = in.p.value();
  t.set(kC2, q(pv - 1, 12) - q(1 - in.chi_m4, 4) - q(1 - in.chi_m3, 6));
  t.set(kC4, q(1 - in.chi_m4, 2));
  t.set(kC6, q(1 - in.chi_m3, 2));
  return t;
}

ExactRational mass_order16(const CensusInputs& in) {
  require(in.p.one_mod4(), "order of index 16 needs p = 1 mod 4", in.p);
  Q varpi = need_varpi(in);
  return q(3) / varpi * q(3 - 2 * in.chi2) * in.zeta * q(in.h);
}

}  // namespace formula

std::vector<std::pair<GenusLabel, GaussGenusClass>> pol_mod_strata(const PrimeInput& p) {
  if (p.p == 2) return {{GenusLabel::make(1), GaussGenusClass::Unique}};
  if (p.one_mod4()) {
    return {{GenusLabel::make(1), GaussGenusClass::Unique},
            {GenusLabel::make(8), GaussGenusClass::Unique},
            {GenusLabel::make(16), GaussGenusClass::Unique}};
  }
  return {{GenusLabel::make(1), GaussGenusClass::Principal}, {GenusLabel::make(1), GaussGenusClass::NonPrincipal}};
}

bool has_refined_pol_mod(const PrimeInput& p, GenusLabel r) {
  if (r.r == 1) return p.p > 5;
  if (r.r == 16) return p.one_mod4();
  return false;
}

std::int64_t ppav_class_number(const CensusInputs& in) {
  return as_count(formula::class_number(in), "class number", in.p);
}
std::int64_t ppav_class_number(const PrimeInput& p) { return ppav_class_number(CensusInputs::for_prime(p)); }

std::int64_t ppav_type_number(const CensusInputs& in) {
  return as_count(formula::type_number(in), "type number", in.p);
}
std::int64_t ppav_type_number(const PrimeInput& p) { return ppav_type_number(CensusInputs::for_prime(p)); }

LambdaStrata lambda_pp_strata(const CensusInputs& in) {
  LambdaStrata out{as_count(formula::lambda1(in), "lambda1", in.p), as_count(formula::lambda16(in), "lambda16", in.p)};
  if (out.lambda1 + out.lambda16 != ppav_class_number(in)) {
    throw InvariantViolation("lambda-strata", "strata do not add up to the class number" + at_p(in.p));
  }
  return out;
}
LambdaStrata lambda_pp_strata(const PrimeInput& p) { return lambda_pp_strata(CensusInputs::for_prime(p)); }

RefinedTable ppav_refined(const CensusInputs& in) {
  return formula::refined(in).to_counts("refined class number" + at_p(in.p));
}
RefinedTable ppav_refined(const PrimeInput& p) { return ppav_refined(CensusInputs::for_prime(p)); }

PolModTriple pol_mod_numbers(const CensusInputs& in, GenusLabel r, GaussGenusClass g) {
  PolModRationals v = formula::pol_mod(in, r, g);
  const std::string what = "r = " + std::to_string(r.r) + " " + to_string(g);
  return {as_count(v.h_pm, what + " h_pm", in.p), as_count(v.h_un, what + " h_un", in.p),
          as_count(v.t, what + " t", in.p)};
}
PolModTriple pol_mod_numbers(const PrimeInput& p, GenusLabel r, GaussGenusClass g) {
  return pol_mod_numbers(CensusInputs::for_prime(p), r, g);
}

std::map<MassStratum, ExactRational> mass_values(const CensusInputs& in) {
  std::map<MassStratum, ExactRational> m;
  const Q& z = in.zeta;
  const int c2 = in.chi2;
  m[MassStratum::PmR1] = z / q(4);
  m[MassStratum::UnR1] = in.p.three_mod4() ? z / q(4) : z / q(2);
  if (in.p.one_mod4()) {
    Q varpi = need_varpi(in);
    m[MassStratum::PmR8] = q(3, 4) * q(4 - c2) * z;
    m[MassStratum::UnR8] = q(3) / (q(2) * varpi) * q(4 - c2) * z;
    m[MassStratum::PmR16] = q(1, 2) * q(4 - c2) * z;
    m[MassStratum::UnR16] = q(4 - c2) * z;
    m[MassStratum::Ppsp] = q(9 - 2 * c2) * z / q(4);
  } else {
    m[MassStratum::Ppsp] = z / q(4);
  }
  return m;
}
std::map<MassStratum, ExactRational> mass_values(const PrimeInput& p) {
  return mass_values(CensusInputs::for_prime(p));
}

RefinedPolMod refined_pol_mod(const CensusInputs& in, GenusLabel r, GaussGenusClass g) {
  RefinedPolModRationals v = formula::refined_pol_mod(in, r, g);
  const std::string what = "refined r = " + std::to_string(r.r) + " " + to_string(g) + at_p(in.p);
  return {v.pm.to_counts(what + " (pm)"), v.un.to_counts(what + " (un)")};
}
RefinedPolMod refined_pol_mod(const PrimeInput& p, GenusLabel r, GaussGenusClass g) {
  return refined_pol_mod(CensusInputs::for_prime(p), r, g);
}

EllipticBaseline elliptic_baseline(const CensusInputs& in) {
  EllipticBaseline out;
  out.h = as_count(formula::elliptic_class_number(in), "elliptic class number", in.p);
  out.t = as_count(formula::elliptic_type_number(in), "elliptic type number", in.p);
  out.refined = formula::elliptic_refined(in).to_counts("elliptic refined" + at_p(in.p));
  return out;
}
EllipticBaseline elliptic_baseline(const PrimeInput& p) { return elliptic_baseline(CensusInputs::for_prime(p)); }

CensusReport census(const PrimeInput& p) {
  RealQuadraticProfile profile = real_quadratic_profile(p);
  return census(CensusInputs::from_profile(profile), profile);
}

CensusReport census(const CensusInputs& in, const RealQuadraticProfile& profile) {
  const PrimeInput& p = in.p;
  CensusReport r;
  r.p = p;
  r.profile = profile;
  r.h_pp = ppav_class_number(in);
  r.t_pp = ppav_type_number(in);
  r.refined_pp = ppav_refined(in);
  for (const auto& [genus, gauss] : pol_mod_strata(p)) {
    r.pol_mod.push_back(PolModEntry{genus, gauss, pol_mod_numbers(in, genus, gauss)});
  }
  if (p.one_mod4()) {
    LambdaStrata strata = lambda_pp_strata(in);
    r.lambda1_pp = strata.lambda1;
    r.lambda16_pp = strata.lambda16;
  } else {
    r.lambda1_pp = r.pol_mod.front().numbers.h_pm;
  }
  r.masses = mass_values(in);
  r.elliptic = elliptic_baseline(in);

  const std::string where = at_p(p);
  if (r.refined_pp.sum() != r.h_pp) {
    throw InvariantViolation("refined-sum", r.refined_pp.str() + " does not sum to " + std::to_string(r.h_pp) + where);
  }
  if (r.refined_pp.mass() != r.masses.at(MassStratum::Ppsp)) {
    throw InvariantViolation("refined-mass", "refined mass " + r.refined_pp.mass().str() + " vs " +
                                                 r.masses.at(MassStratum::Ppsp).str() + where);
  }
  if (r.t_pp > r.h_pp) {
    throw InvariantViolation("type-bound", "t_pp = " + std::to_string(r.t_pp) + " > h_pp" + where);
  }
  if (r.elliptic.refined.sum() != r.elliptic.h) {
    throw InvariantViolation("elliptic", "refined table does not sum to h" + where);
  }
  return r;
}

}  // namespace ppsp
