#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ppsp/arith.hpp"
#include "ppsp/census.hpp"
#include "ppsp/errors.hpp"
#include "ppsp/parallel.hpp"
#include "ppsp/quadratic.hpp"
#include "ppsp/report.hpp"
#include "ppsp/verify.hpp"

namespace {

enum class Format { Json, Csv, Markdown };

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> kFormats{
    {"json", Format::Json}, {"csv", Format::Csv}, {"markdown", Format::Markdown}};

int run_census(std::uint64_t q, Format format, bool diagnostics) {
  ppsp::PrimePower pp;
  try {
    pp = ppsp::split_prime_power(q);
  } catch (const ppsp::PreconditionError&) {
    throw UsageError(std::to_string(q) + " is not a prime power");
  }

  if (pp.exponent % 2 == 0) {
    ppsp::EllipticRecord rec = ppsp::elliptic_record(q);
    switch (format) {
      case Format::Json: std::cout << ppsp::elliptic_json(rec).dump(2) << '\n'; break;
      case Format::Csv: std::cout << ppsp::elliptic_csv_header() << ppsp::elliptic_csv_row(rec); break;
      case Format::Markdown: std::cout << ppsp::elliptic_markdown(rec); break;
    }
    return kExitOk;
  }

  ppsp::PrimeInput p = ppsp::PrimeInput::make(pp.p);
  ppsp::CensusReport report = ppsp::census(p);
  std::optional<ppsp::TypeNumberDiagnostic> diag;
  if (diagnostics) {
    diag = ppsp::type_number_diagnostic(p);
    if (!diag) std::cerr << "no alternative type-number formula for p = " << p.p << '\n';
  }

  switch (format) {
    case Format::Json:
      std::cout << ppsp::report_json(report, ppsp::QueryMeta{q, pp.exponent}, diag).dump(2) << '\n';
      return kExitOk;
    case Format::Csv:
      std::cout << ppsp::csv_header() << ppsp::csv_row(report);
      break;
    case Format::Markdown:
      std::cout << ppsp::markdown_header() << ppsp::markdown_row(report);
      break;
  }
  if (pp.exponent > 1) std::cerr << "q = " << q << " = " << p.p << "^" << pp.exponent << ": PPSP(√q) ≅ PPAV(√p)\n";
  if (diag) {
    std::cerr << "alternative type formula at p = " << p.p << ": " << diag->alternative.str()
              << ", reported t_pp: " << diag->implemented << '\n';
  }
  return kExitOk;
}

int run_range(std::uint64_t lo, std::uint64_t hi, Format format, std::optional<unsigned> jobs) {
  if (lo < 2) throw UsageError("pmin must be at least 2");
  if (lo > hi) throw UsageError("pmin must not exceed pmax");

  std::vector<std::uint64_t> primes = ppsp::primes_between(lo, hi);
  unsigned workers = ppsp::resolve_jobs(jobs);
  std::vector<ppsp::CensusReport> reports = ppsp::parallel_map<ppsp::CensusReport>(
      primes.size(), workers, [&](std::size_t i) { return ppsp::census(ppsp::PrimeInput::make(primes[i])); });

  switch (format) {
    case Format::Json: {
      ppsp::Json arr = ppsp::Json::array();
      for (const auto& r : reports) arr.push_back(ppsp::report_json(r));
      std::cout << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      std::cout << ppsp::csv_header();
      for (const auto& r : reports) std::cout << ppsp::csv_row(r);
      break;
    case Format::Markdown:
      std::cout << ppsp::markdown_header();
      for (const auto& r : reports) std::cout << ppsp::markdown_row(r);
      break;
  }
  return kExitOk;
}

int run_verify(std::uint64_t p_max, std::optional<unsigned> jobs, std::int64_t fault_offset) {
  if (p_max < 2) throw UsageError("pmax must be at least 2");
  auto start = std::chrono::steady_clock::now();
  ppsp::FaultInjection fault{fault_offset};
  ppsp::VerifySummary s = ppsp::verify_range(p_max, ppsp::resolve_jobs(jobs), fault);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::cout << "primes checked: " << s.primes_checked << " (p <= " << s.p_max << ")\n";
  for (const auto& t : s.tallies) {
    std::cout << "  " << t.identity << ": " << t.passed << "/" << t.checked << '\n';
  }
  std::cout << "elapsed: " << secs << " s\n";
  if (s.ok()) {
    std::cout << "all identities hold\n";
    return kExitOk;
  }
  const auto& f = *s.first_failure;
  std::cout << "FAILED (" << s.failures << " failing checks); first: p = " << f.p << ", identity " << f.identity
            << ": " << f.detail << '\n';
  return kExitVerifyFailed;
}

int run_zeta(std::uint64_t p_raw) {
  ppsp::PrimeInput p;
  try {
    p = ppsp::PrimeInput::make(p_raw);
  } catch (const ppsp::PreconditionError&) {
    throw UsageError(std::to_string(p_raw) + " is not prime");
  }
  std::int64_t d = ppsp::fundamental_discriminant(p.value());
  ppsp::ExactRational siegel = ppsp::zeta_siegel(d);
  ppsp::ExactRational bern = ppsp::zeta_bernoulli(d);
  std::cout << "p\td_F\tsigma_sum\tbernoulli\tagree\n"
            << p.p << '\t' << d << '\t' << siegel.str() << '\t' << bern.str() << '\t'
            << (siegel == bern ? "yes" : "no") << '\n';
  return siegel == bern ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of superspecial abelian surfaces over finite fields, in exact arithmetic"};
  app.require_subcommand(1);

  Format format = Format::Json;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(kFormats));
  };

  std::uint64_t q = 0;
  bool diagnostics = false;
  auto* census = app.add_subcommand("census", "Census for q = p^n (odd n) or the elliptic baseline (even n)");
  census->add_option("q", q, "Prime power")->required();
  add_format(census);
  census->add_flag("--diagnostics", diagnostics, "Show the alternative type-number formula next to t_pp");

  std::uint64_t lo = 0, hi = 0;
  std::optional<unsigned> jobs;
  auto* range = app.add_subcommand("range", "Census for every prime in [pmin, pmax]");
  range->add_option("pmin", lo)->required();
  range->add_option("pmax", hi)->required();
  add_format(range);
  range->add_option("--jobs", jobs, "Worker threads (default: CENSUS_JOBS, then hardware)")
      ->check(CLI::PositiveNumber);

  std::uint64_t p_max = 0;
  std::int64_t fault_offset = 0;
  auto* verify = app.add_subcommand("verify", "Check every identity for all primes up to pmax");
  verify->add_option("pmax", p_max)->required();
  verify->add_option("--jobs", jobs, "Worker threads (default: CENSUS_JOBS, then hardware)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault_offset)->group("");

  std::uint64_t zp = 0;
  auto* zeta = app.add_subcommand("zeta", "Zeta value at -1 of Q(sqrt p), by both routes");
  zeta->add_option("p", zp)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (census->parsed()) return run_census(q, format, diagnostics);
    if (range->parsed()) return run_range(lo, hi, format, jobs);
    if (verify->parsed()) return run_verify(p_max, jobs, fault_offset);
    if (zeta->parsed()) return run_zeta(zp);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ppsp::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
