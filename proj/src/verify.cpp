#include "ppsp/verify.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "ppsp/census.hpp"
#include "ppsp/errors.hpp"
#include "ppsp/parallel.hpp"
#include "ppsp/quadratic.hpp"

namespace ppsp {

namespace {

using Q = ExactRational;
// nullopt means the identity held.
using Check = std::function<std::optional<std::string>()>;

std::string mismatch(const std::string& what, const Q& lhs, const Q& rhs) {
  return what + ": " + lhs.str() + " != " + rhs.str();
}

std::string mismatch(const std::string& what, std::int64_t lhs, std::int64_t rhs) {
  return what + ": " + std::to_string(lhs) + " != " + std::to_string(rhs);
}

class Recorder {
 public:
  explicit Recorder(std::vector<IdentityOutcome>& out) : out_(out) {}

  void run(const std::string& name, bool applicable, const Check& check) {
    IdentityOutcome o{name, applicable, false, {}};
    if (!applicable) {
      out_.push_back(o);
      return;
    }
    try {
      auto failure = check();
      o.passed = !failure;
      if (failure) o.detail = *failure;
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(o);
  }

 private:
  std::vector<IdentityOutcome>& out_;
};

std::optional<std::string> first_of(std::initializer_list<std::optional<std::string>> results) {
  for (const auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

std::optional<std::string> expect_eq(const std::string& what, const Q& a, const Q& b) {
  if (a == b) return std::nullopt;
  return mismatch(what, a, b);
}

std::optional<std::string> expect_eq(const std::string& what, std::int64_t a, std::int64_t b) {
  if (a == b) return std::nullopt;
  return mismatch(what, a, b);
}

std::string stratum_name(GenusLabel r, GaussGenusClass g) {
  return "r=" + std::to_string(r.r) + " " + to_string(g);
}

MassStratum pm_stratum(int r) {
  return r == 1 ? MassStratum::PmR1 : (r == 8 ? MassStratum::PmR8 : MassStratum::PmR16);
}

MassStratum un_stratum(int r) {
  return r == 1 ? MassStratum::UnR1 : (r == 8 ? MassStratum::UnR8 : MassStratum::UnR16);
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "zeta-routes",      "zeta-integrality",      "imag-class-oracles", "unit-norm",
      "unit-index",       "refined-sum",           "refined-mass",       "type-bound",
      "nonnegative-integers", "lambda-strata",     "stratum-refined-sums", "stratum-masses",
      "mass-index",       "refined-relations",     "pol-mod-order",      "type-partition",
      "elliptic",
  };
  return names;
}

std::vector<IdentityOutcome> verify_prime(const PrimeInput& p, const FaultInjection& fault) {
  std::vector<IdentityOutcome> out;
  Recorder rec(out);
  const std::int64_t pv = p.value();
  const std::int64_t d_F = fundamental_discriminant(pv);
  const bool big = p.p > 5;
  const bool three_big = p.three_mod4() && p.p >= 7;

  // Raw ingredients, each computed once. Failures surface in the identity
  // that owns them; later identities then report the missing input.
  std::optional<Q> zeta;
  std::optional<QuadraticUnit> unit;
  std::optional<RealClassNumbers> real;
  std::optional<CensusInputs> inputs;

  rec.run("zeta-routes", true, [&]() -> std::optional<std::string> {
    Q siegel = zeta_siegel(d_F);
    Q bern = zeta_bernoulli(d_F);
    zeta = siegel;
    return expect_eq("divisor sum vs character sum", siegel, bern);
  });

  rec.run("zeta-integrality", true, [&]() -> std::optional<std::string> {
    if (!zeta) return "zeta unavailable";
    if (zeta->sign() <= 0) return "zeta_F(-1) = " + zeta->str() + " is not positive";
    if (!(Q(60 * d_F) * *zeta).is_integer()) return "60 d_F zeta_F(-1) = " + (Q(60 * d_F) * *zeta).str();
    return std::nullopt;
  });

  std::optional<std::int64_t> h_minus[4];  // index k holds h(-kp)
  rec.run("imag-class-oracles", true, [&]() -> std::optional<std::string> {
    for (std::int64_t k : {1, 2, 3}) {
      if (!is_squarefree(k * pv)) continue;
      std::int64_t disc = fundamental_discriminant(-k * pv);
      std::int64_t a = class_number_by_forms(disc);
      std::int64_t b = class_number_by_dirichlet(disc);
      if (a != b) return mismatch("h(" + std::to_string(-k * pv) + ") forms vs Dirichlet", a, b);
      h_minus[k] = a;
    }
    return std::nullopt;
  });

  rec.run("unit-norm", true, [&]() -> std::optional<std::string> {
    unit = fundamental_unit(p);
    real = class_number_real(p);
    mpz_class lhs = unit->t * unit->t - mpz_class(static_cast<long>(pv)) * unit->u * unit->u;
    mpz_class rhs = unit->half ? 4 * unit->norm : unit->norm;
    if (lhs != rhs) return "unit does not satisfy its Pell relation";
    if ((unit->norm == -1) == p.three_mod4()) return "norm " + std::to_string(unit->norm) + " for p mod 4 = " +
                                                      std::to_string(p.residue_mod4);
    std::int64_t expected = unit->norm == -1 ? real->h : 2 * real->h;
    return expect_eq("h_plus against h and the unit norm", real->h_plus, expected);
  });

  std::optional<int> varpi;
  std::optional<std::int64_t> h_a;
  rec.run("unit-index", p.one_mod4(), [&]() -> std::optional<std::string> {
    if (!unit || !real) return "unit unavailable";
    varpi = unit->half ? 3 : 1;
    if (p.residue_mod8 == 1 && *varpi != 1) return "varpi = 3 although p = 1 mod 8";
    QuadraticUnit powered = unit_power(*unit, static_cast<unsigned>(*varpi), p.p);
    if (!(powered == fundamental_unit_integral(p))) return "eps^varpi is not the fundamental unit of Z[sqrt p]";
    Q value = Q(2 - kronecker(2, pv)) * Q(real->h) / Q(*varpi);
    if (!value.is_integer()) return "h(A) = " + value.str() + " is not an integer";
    h_a = value.to_int64();
    if (*h_a % 2 == 0) return "h(A) = " + std::to_string(*h_a) + " is even";
    return std::nullopt;
  });

  if (zeta && real && h_minus[1] && (!p.one_mod4() || varpi)) {
    CensusInputs in;
    in.p = p;
    in.zeta = *zeta;
    in.chi2 = kronecker(2, pv);
    in.chi3 = kronecker(pv, 3);
    in.chi_m4 = kronecker(-4, pv);
    in.chi_m3 = kronecker(-3, pv);
    in.h_minus_p = *h_minus[1];
    in.h_minus_2p = h_minus[2];
    in.h_minus_3p = h_minus[3];
    in.varpi = varpi;
    in.h = real->h;
    in.h_A = h_a;
    inputs = in;
  }
  auto missing = []() -> std::optional<std::string> { return "census inputs unavailable"; };
  const CensusInputs* in = inputs ? &*inputs : nullptr;

  rec.run("refined-sum", true, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    CensusInputs faulty = *in;
    faulty.h_minus_p += fault.refined_h_minus_p_offset;
    return expect_eq("sum of refined class numbers vs class number", formula::refined(faulty).sum(),
                     formula::class_number(*in));
  });

  rec.run("refined-mass", true, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    Q ppsp = mass_values(*in).at(MassStratum::Ppsp);
    Q b2 = Q(24) * zeta_bernoulli(d_F);
    Q via_b2 = b2 / Q(96);
    if (p.one_mod4()) via_b2 *= Q(9 - 2 * kronecker(d_F, 2));
    return first_of({expect_eq("refined mass vs total mass", formula::refined(*in).mass(), ppsp),
                     expect_eq("total mass vs Bernoulli form", ppsp, via_b2)});
  });

  rec.run("type-bound", true, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    Q t = formula::type_number(*in);
    Q h = formula::class_number(*in);
    if (t > h) return "t_pp = " + t.str() + " exceeds h_pp = " + h.str();
    return std::nullopt;
  });

  rec.run("nonnegative-integers", true, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    // Each call throws NonIntegralError on a fractional or negative value.
    ppav_class_number(*in);
    ppav_type_number(*in);
    ppav_refined(*in);
    for (const auto& [r, g] : pol_mod_strata(p)) {
      pol_mod_numbers(*in, r, g);
      if (has_refined_pol_mod(p, r)) refined_pol_mod(*in, r, g);
    }
    if (p.one_mod4()) lambda_pp_strata(*in);
    elliptic_baseline(*in);
    return std::nullopt;
  });

  rec.run("lambda-strata", p.one_mod4(), [&]() -> std::optional<std::string> {
    if (!in) return missing();
    return first_of({expect_eq("lambda1 + lambda16 vs class number", formula::lambda1(*in) + formula::lambda16(*in),
                               formula::class_number(*in)),
                     expect_eq("lambda1 vs r=1 count", formula::lambda1(*in),
                               formula::pol_mod(*in, GenusLabel::make(1), GaussGenusClass::Unique).h_pm),
                     expect_eq("lambda16 vs r=16 count", formula::lambda16(*in),
                               formula::pol_mod(*in, GenusLabel::make(16), GaussGenusClass::Unique).h_pm)});
  });

  rec.run("stratum-refined-sums", big || p.one_mod4(), [&]() -> std::optional<std::string> {
    if (!in) return missing();
    for (const auto& [r, g] : pol_mod_strata(p)) {
      if (!has_refined_pol_mod(p, r)) continue;
      auto tables = formula::refined_pol_mod(*in, r, g);
      auto numbers = formula::pol_mod(*in, r, g);
      const std::string name = stratum_name(r, g);
      if (auto f = first_of({expect_eq(name + " pm table sum", tables.pm.sum(), numbers.h_pm),
                             expect_eq(name + " un table sum", tables.un.sum(), numbers.h_un)})) {
        return f;
      }
    }
    if (p.one_mod4() && big) {
      // The principally polarized classes split into the r = 1 and r = 16 strata.
      RationalTable pp = formula::refined(*in);
      auto r1 = formula::refined_pol_mod(*in, GenusLabel::make(1), GaussGenusClass::Unique).pm;
      auto r16 = formula::refined_pol_mod(*in, GenusLabel::make(16), GaussGenusClass::Unique).pm;
      for (const auto& [tag, value] : pp.entries()) {
        if (auto f = expect_eq("refined " + tag.label() + " vs r=1 plus r=16", value, r1.at(tag) + r16.at(tag))) {
          return f;
        }
      }
    }
    return std::nullopt;
  });

  rec.run("stratum-masses", big || p.one_mod4(), [&]() -> std::optional<std::string> {
    if (!in) return missing();
    auto masses = mass_values(*in);
    for (const auto& [r, g] : pol_mod_strata(p)) {
      if (!has_refined_pol_mod(p, r)) continue;
      auto tables = formula::refined_pol_mod(*in, r, g);
      const std::string name = stratum_name(r, g);
      if (auto f = first_of({expect_eq(name + " pm mass", tables.pm.mass(), masses.at(pm_stratum(r.r))),
                             expect_eq(name + " un mass", tables.un.mass(), masses.at(un_stratum(r.r)))})) {
        return f;
      }
    }
    return std::nullopt;
  });

  rec.run("mass-index", true, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    auto m = mass_values(*in);
    if (!p.one_mod4()) return expect_eq("total mass vs r=1 mass", m.at(MassStratum::Ppsp), m.at(MassStratum::PmR1));
    if (!in->h_A) return "h(A) unavailable";
    return first_of({
        expect_eq("total mass vs r=1 plus r=16", m.at(MassStratum::Ppsp),
                  m.at(MassStratum::PmR1) + m.at(MassStratum::PmR16)),
        expect_eq("r=16 un mass vs order mass over h(A)", m.at(MassStratum::UnR16),
                  formula::mass_order16(*in) / Q(*in->h_A)),
        expect_eq("r=16 un mass vs twice pm mass", m.at(MassStratum::UnR16), Q(2) * m.at(MassStratum::PmR16)),
        expect_eq("r=8 un mass vs pm mass", m.at(MassStratum::UnR8),
                  Q(2) * m.at(MassStratum::PmR8) / Q(*in->varpi)),
    });
  });

  rec.run("refined-relations", big || p.one_mod4(), [&]() -> std::optional<std::string> {
    if (!in) return missing();
    const GroupTag C1{GroupName::C1}, C2{GroupName::C2}, C3{GroupName::C3}, C4{GroupName::C4}, C6{GroupName::C6};
    const GroupTag Q8{GroupName::Q8}, Q12{GroupName::Q12}, E24{GroupName::E24};
    const GroupTag C2d{GroupName::C2, Decoration::Dagger}, C2dd{GroupName::C2, Decoration::DoubleDagger};
    const GroupTag D3{GroupName::D3}, D3d{GroupName::D3, Decoration::Dagger};
    const GroupTag D3dd{GroupName::D3, Decoration::DoubleDagger}, D4{GroupName::D4}, S4{GroupName::S4};
    const GroupTag A4{GroupName::A4}, D2{GroupName::D2};
    for (const auto& [r, g] : pol_mod_strata(p)) {
      if (!has_refined_pol_mod(p, r)) continue;
      auto t = formula::refined_pol_mod(*in, r, g);
      const std::string name = stratum_name(r, g) + " ";
      std::optional<std::string> f;
      if (p.three_mod4()) {
        f = first_of({
            expect_eq(name + "C2", t.pm.at(C2), Q(2) * t.un.at(C1) + t.un.at(C2dd)),
            expect_eq(name + "C4", t.pm.at(C4), Q(2) * t.un.at(C2d) + t.un.at(C4)),
            expect_eq(name + "C6", t.pm.at(C6), Q(2) * t.un.at(C3) + t.un.at(D3dd)),
            expect_eq(name + "Q8", t.pm.at(Q8), t.un.at(D4)),
            expect_eq(name + "Q12", t.pm.at(Q12), Q(2) * t.un.at(D3d)),
            expect_eq(name + "E24", t.pm.at(E24), t.un.at(S4)),
        });
      } else if (r.r == 1) {
        f = first_of({
            expect_eq(name + "C2", t.pm.at(C2), t.un.at(C1)),
            expect_eq(name + "C4", t.pm.at(C4), t.un.at(C2d)),
            expect_eq(name + "C6", t.pm.at(C6), t.un.at(C3)),
            expect_eq(name + "Q12", t.pm.at(Q12), t.un.at(D3d)),
            expect_eq(name + "E24", t.pm.at(E24), t.un.at(A4)),
        });
      } else {
        f = first_of({
            expect_eq(name + "C2", t.pm.at(C2), t.un.at(C1)),
            expect_eq(name + "C4", t.pm.at(C4), t.un.at(C2)),
            expect_eq(name + "C6", t.pm.at(C6), t.un.at(C3)),
            expect_eq(name + "Q12", t.pm.at(Q12), t.un.at(D3)),
            expect_eq(name + "A4", t.un.at(A4), Q(0)),
            expect_eq(name + "D2", t.un.at(D2), Q(0)),
        });
      }
      if (f) return f;
    }
    return std::nullopt;
  });

  rec.run("pol-mod-order", true, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    for (const auto& [r, g] : pol_mod_strata(p)) {
      auto v = formula::pol_mod(*in, r, g);
      if (v.h_pm < v.h_un || v.h_un < v.t) {
        return stratum_name(r, g) + ": expected h_pm >= h_un >= t, got " + v.h_pm.str() + ", " + v.h_un.str() +
               ", " + v.t.str();
      }
    }
    return std::nullopt;
  });

  rec.run("type-partition", three_big, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    auto principal = formula::refined_pol_mod(*in, GenusLabel::make(1), GaussGenusClass::Principal);
    auto nonprincipal = formula::refined_pol_mod(*in, GenusLabel::make(1), GaussGenusClass::NonPrincipal);
    auto np = formula::pol_mod(*in, GenusLabel::make(1), GaussGenusClass::NonPrincipal);
    auto pr = formula::pol_mod(*in, GenusLabel::make(1), GaussGenusClass::Principal);
    return first_of({
        expect_eq("principal type counts vs type number", principal.un.sum(), formula::type_number(*in)),
        expect_eq("nonprincipal type counts vs h_un", nonprincipal.un.sum(), np.h_un),
        expect_eq("principal h_pm vs class number", pr.h_pm, formula::class_number(*in)),
    });
  });

  rec.run("elliptic", true, [&]() -> std::optional<std::string> {
    if (!in) return missing();
    Q h = formula::elliptic_class_number(*in);
    Q t = formula::elliptic_type_number(*in);
    RationalTable refined = formula::elliptic_refined(*in);
    if (t > h) return "elliptic type number " + t.str() + " exceeds class number " + h.str();
    if (p.p <= 3 && (h != Q(1) || t != Q(1))) return "elliptic h, t must be 1 for p = 2, 3";
    return first_of({expect_eq("elliptic refined sum", refined.sum(), h),
                     expect_eq("elliptic refined mass", refined.mass(), Q(pv - 1, 24))});
  });

  return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == hi) break;
  }
  return out;
}

VerifySummary verify_range(std::uint64_t p_max, unsigned jobs, const FaultInjection& fault) {
  if (p_max < 2) throw PreconditionError("verify needs p_max >= 2");
  std::vector<std::uint64_t> primes = primes_between(2, p_max);
  auto results = parallel_map<std::vector<IdentityOutcome>>(
      primes.size(), jobs, [&](std::size_t i) { return verify_prime(PrimeInput::make(primes[i]), fault); });

  VerifySummary summary;
  summary.p_max = p_max;
  summary.primes_checked = static_cast<std::int64_t>(primes.size());
  for (const auto& name : identity_names()) summary.tallies.push_back(IdentityTally{name, 0, 0});
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t k = 0; k < results[i].size(); ++k) {
      const auto& o = results[i][k];
      if (!o.applicable) continue;
      summary.tallies[k].checked++;
      if (o.passed) {
        summary.tallies[k].passed++;
        continue;
      }
      summary.failures++;
      if (!summary.first_failure) summary.first_failure = VerifyFailure{primes[i], o.identity, o.detail};
    }
  }
  return summary;
}

unsigned resolve_jobs(std::optional<unsigned> requested) {
  if (requested) return *requested == 0 ? 1 : *requested;
  if (const char* env = std::getenv("CENSUS_JOBS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw PreconditionError(std::string("CENSUS_JOBS must be a positive integer, got ") + env);
    return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace ppsp
