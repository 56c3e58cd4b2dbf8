#include "ppsp/report.hpp"

#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ppsp/errors.hpp"

namespace ppsp {

namespace {

const std::vector<std::string> kRefinedTags = {"C2", "C4", "C6", "Q8", "Q12", "Q24", "E24", "E48", "E120"};
const std::vector<std::string> kEllipticTags = {"C2", "C4", "C6", "Q12", "E24"};
const std::vector<MassStratum> kStrata = {MassStratum::PmR1, MassStratum::UnR1,  MassStratum::PmR8, MassStratum::UnR8,
                                          MassStratum::PmR16, MassStratum::UnR16, MassStratum::Ppsp};

struct Slot {
  int r;
  GaussGenusClass gauss;
  std::string name;
};

const std::vector<Slot>& pol_slots() {
  static const std::vector<Slot> slots = {
      {1, GaussGenusClass::Unique, "r1_unique"},
      {1, GaussGenusClass::Principal, "r1_principal"},
      {1, GaussGenusClass::NonPrincipal, "r1_nonprincipal"},
      {8, GaussGenusClass::Unique, "r8_unique"},
      {16, GaussGenusClass::Unique, "r16_unique"},
  };
  return slots;
}

std::string base_ring_name(BaseRing b) { return b == BaseRing::Maximal ? "maximal" : "suborder"; }

Json table_json(const RefinedTable& t) {
  Json j = Json::object();
  for (const auto& [tag, count] : t.entries()) j[tag.label()] = count;
  return j;
}

RefinedTable table_from_json(const Json& j) {
  RefinedTable t;
  for (const auto& [key, value] : j.items()) t.set(GroupTag::parse(key), value.get<std::int64_t>());
  return t;
}

Json elliptic_body(const EllipticBaseline& e) {
  Json j;
  j["h"] = e.h;
  j["t"] = e.t;
  j["refined"] = table_json(e.refined);
  return j;
}

std::string join(const std::vector<std::string>& cells, char sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string compact_table(const RefinedTable& t) {
  std::string out;
  for (const auto& [tag, count] : t.entries()) {
    if (count == 0) continue;
    if (!out.empty()) out += ' ';
    out += tag.label() + ":" + std::to_string(count);
  }
  return out.empty() ? "-" : out;
}

std::int64_t to_i64(const std::string& s) {
  std::size_t used = 0;
  long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer cell: " + s);
  return v;
}

}  // namespace

std::optional<TypeNumberDiagnostic> type_number_diagnostic(const PrimeInput& p) {
  if (!p.one_mod4() || p.p < 13) return std::nullopt;
  CensusInputs in = CensusInputs::for_prime(p);
  return TypeNumberDiagnostic{formula::alternative_type_number(in), ppav_type_number(in)};
}

EllipticRecord elliptic_record(std::uint64_t q) {
  PrimePower pp = split_prime_power(q);
  if (pp.exponent % 2 != 0) throw PreconditionError("elliptic record needs an even power");
  PrimeInput p = PrimeInput::make(pp.p);
  return EllipticRecord{QueryMeta{q, pp.exponent}, p, elliptic_baseline(CensusInputs::for_prime(p))};
}

Json report_json(const CensusReport& r, const std::optional<QueryMeta>& meta,
                 const std::optional<TypeNumberDiagnostic>& diagnostic) {
  Json j;
  if (meta) {
    j["q"] = meta->q;
    j["exponent"] = meta->exponent;
  }
  j["p"] = r.p.p;
  if (meta) j["note"] = "PPSP(√q) ≅ PPAV(√p)";
  const auto& prof = r.profile;
  j["d_F"] = prof.d_F;
  j["h"] = prof.h;
  j["h_plus"] = prof.h_plus;
  j["varpi"] = prof.varpi ? Json(*prof.varpi) : Json(nullptr);
  j["h_A"] = prof.h_A ? Json(*prof.h_A) : Json(nullptr);
  j["unit"] = Json{{"t", prof.unit.t.get_str()},
                   {"u", prof.unit.u.get_str()},
                   {"half", prof.unit.half},
                   {"norm", prof.unit.norm}};
  j["zeta_minus1"] = prof.zeta_minus1.str();
  j["h_pp"] = r.h_pp;
  j["t_pp"] = r.t_pp;
  j["refined_pp"] = table_json(r.refined_pp);
  j["lambda1_pp"] = r.lambda1_pp;
  j["lambda16_pp"] = r.lambda16_pp ? Json(*r.lambda16_pp) : Json(nullptr);
  Json pol = Json::array();
  for (const auto& e : r.pol_mod) {
    pol.push_back(Json{{"r", e.genus.r},
                       {"base_ring", base_ring_name(e.genus.base_ring)},
                       {"gauss_genus", to_string(e.gauss)},
                       {"h_pm", e.numbers.h_pm},
                       {"h_un", e.numbers.h_un},
                       {"t", e.numbers.t}});
  }
  j["pol_mod"] = pol;
  Json masses = Json::object();
  for (const auto& [stratum, value] : r.masses) masses[to_string(stratum)] = value.str();
  j["masses"] = masses;
  j["elliptic"] = elliptic_body(r.elliptic);
  if (diagnostic) {
    j["diagnostics"] = Json{{"alternative_type_formula", diagnostic->alternative.str()},
                            {"t_pp", diagnostic->implemented}};
  }
  return j;
}

CensusReport report_from_json(const Json& j) {
  CensusReport r;
  r.p = PrimeInput::make(j.at("p").get<std::uint64_t>());
  auto& prof = r.profile;
  prof.p = r.p;
  prof.d_F = j.at("d_F").get<std::int64_t>();
  prof.h = j.at("h").get<std::int64_t>();
  prof.h_plus = j.at("h_plus").get<std::int64_t>();
  if (!j.at("varpi").is_null()) prof.varpi = j.at("varpi").get<int>();
  if (!j.at("h_A").is_null()) prof.h_A = j.at("h_A").get<std::int64_t>();
  const Json& u = j.at("unit");
  prof.unit.t = mpz_class(u.at("t").get<std::string>(), 10);
  prof.unit.u = mpz_class(u.at("u").get<std::string>(), 10);
  prof.unit.half = u.at("half").get<bool>();
  prof.unit.norm = u.at("norm").get<int>();
  prof.zeta_minus1 = ExactRational::parse(j.at("zeta_minus1").get<std::string>());
  r.h_pp = j.at("h_pp").get<std::int64_t>();
  r.t_pp = j.at("t_pp").get<std::int64_t>();
  r.refined_pp = table_from_json(j.at("refined_pp"));
  r.lambda1_pp = j.at("lambda1_pp").get<std::int64_t>();
  if (!j.at("lambda16_pp").is_null()) r.lambda16_pp = j.at("lambda16_pp").get<std::int64_t>();
  for (const auto& e : j.at("pol_mod")) {
    GenusLabel genus = GenusLabel::make(e.at("r").get<int>());
    if (base_ring_name(genus.base_ring) != e.at("base_ring").get<std::string>()) {
      throw std::invalid_argument("base ring does not match r");
    }
    r.pol_mod.push_back(PolModEntry{genus, parse_gauss_genus(e.at("gauss_genus").get<std::string>()),
                                    PolModTriple{e.at("h_pm").get<std::int64_t>(), e.at("h_un").get<std::int64_t>(),
                                                 e.at("t").get<std::int64_t>()}});
  }
  for (const auto& [key, value] : j.at("masses").items()) {
    r.masses[parse_mass_stratum(key)] = ExactRational::parse(value.get<std::string>());
  }
  const Json& e = j.at("elliptic");
  r.elliptic.h = e.at("h").get<std::int64_t>();
  r.elliptic.t = e.at("t").get<std::int64_t>();
  r.elliptic.refined = table_from_json(e.at("refined"));
  return r;
}

Json elliptic_json(const EllipticRecord& rec) {
  Json j;
  j["q"] = rec.meta.q;
  j["exponent"] = rec.meta.exponent;
  j["p"] = rec.p.p;
  j["elliptic"] = elliptic_body(rec.elliptic);
  return j;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c = {"p",      "d_F",    "h",         "h_plus",    "varpi",       "h_A",
                                  "unit_t", "unit_u", "unit_half", "unit_norm", "zeta_minus1", "h_pp",
                                  "t_pp"};
    for (const auto& tag : kRefinedTags) c.push_back("refined_" + tag);
    c.push_back("lambda1_pp");
    c.push_back("lambda16_pp");
    for (const auto& slot : pol_slots()) {
      for (const char* field : {"h_pm", "h_un", "t"}) c.push_back("pol_" + slot.name + "_" + field);
    }
    for (auto s : kStrata) c.push_back("mass_" + to_string(s));
    c.push_back("elliptic_h");
    c.push_back("elliptic_t");
    for (const auto& tag : kEllipticTags) c.push_back("elliptic_" + tag);
    return c;
  }();
  return cols;
}

std::string csv_header() {
  return "# p prime; d_F discriminant of Q(sqrt p); h h_plus class and narrow class number of Q(sqrt p); "
         "varpi unit index of Z[sqrt p]; h_A class number of Z[sqrt p]; unit_* fundamental unit "
         "(t + u sqrt p)/2 if half else t + u sqrt p; zeta_minus1 zeta_F(-1); h_pp t_pp class and type number "
         "of principally polarized surfaces; refined_G classes with automorphism group G; lambda1_pp "
         "lambda16_pp classes in genus r=1 and r=16; pol_<genus>_<gauss genus>_* polarization-module class "
         "number, unpolarized class number, type number; mass_* masses per stratum; elliptic_* even-power "
         "class number, type number and automorphism counts; rationals as num/den; empty cell means "
         "not defined for this prime\n" +
         join(csv_columns(), ',') + "\n";
}

std::string csv_row(const CensusReport& r) {
  std::map<std::string, std::string> cells;
  const auto& prof = r.profile;
  cells["p"] = std::to_string(r.p.p);
  cells["d_F"] = std::to_string(prof.d_F);
  cells["h"] = std::to_string(prof.h);
  cells["h_plus"] = std::to_string(prof.h_plus);
  if (prof.varpi) cells["varpi"] = std::to_string(*prof.varpi);
  if (prof.h_A) cells["h_A"] = std::to_string(*prof.h_A);
  cells["unit_t"] = prof.unit.t.get_str();
  cells["unit_u"] = prof.unit.u.get_str();
  cells["unit_half"] = prof.unit.half ? "1" : "0";
  cells["unit_norm"] = std::to_string(prof.unit.norm);
  cells["zeta_minus1"] = prof.zeta_minus1.str();
  cells["h_pp"] = std::to_string(r.h_pp);
  cells["t_pp"] = std::to_string(r.t_pp);
  for (const auto& [tag, count] : r.refined_pp.entries()) cells["refined_" + tag.label()] = std::to_string(count);
  cells["lambda1_pp"] = std::to_string(r.lambda1_pp);
  if (r.lambda16_pp) cells["lambda16_pp"] = std::to_string(*r.lambda16_pp);
  for (const auto& e : r.pol_mod) {
    for (const auto& slot : pol_slots()) {
      if (slot.r != e.genus.r || slot.gauss != e.gauss) continue;
      cells["pol_" + slot.name + "_h_pm"] = std::to_string(e.numbers.h_pm);
      cells["pol_" + slot.name + "_h_un"] = std::to_string(e.numbers.h_un);
      cells["pol_" + slot.name + "_t"] = std::to_string(e.numbers.t);
    }
  }
  for (const auto& [stratum, value] : r.masses) cells["mass_" + to_string(stratum)] = value.str();
  cells["elliptic_h"] = std::to_string(r.elliptic.h);
  cells["elliptic_t"] = std::to_string(r.elliptic.t);
  for (const auto& [tag, count] : r.elliptic.refined.entries()) {
    cells["elliptic_" + tag.label()] = std::to_string(count);
  }

  std::vector<std::string> row;
  for (const auto& col : csv_columns()) {
    auto it = cells.find(col);
    row.push_back(it == cells.end() ? "" : it->second);
  }
  return join(row, ',') + "\n";
}

std::vector<CensusReport> reports_from_csv(std::istream& in) {
  std::vector<CensusReport> out;
  std::vector<std::string> header;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (header.empty()) {
      header = split(line, ',');
      continue;
    }
    std::vector<std::string> values = split(line, ',');
    if (values.size() != header.size()) throw std::invalid_argument("CSV row has the wrong number of cells");
    std::map<std::string, std::string> cell;
    for (std::size_t i = 0; i < header.size(); ++i) cell[header[i]] = values[i];
    auto has = [&cell](const std::string& k) { return cell.count(k) != 0 && !cell.at(k).empty(); };
    auto num = [&cell](const std::string& k) { return to_i64(cell.at(k)); };

    CensusReport r;
    r.p = PrimeInput::make(static_cast<std::uint64_t>(num("p")));
    auto& prof = r.profile;
    prof.p = r.p;
    prof.d_F = num("d_F");
    prof.h = num("h");
    prof.h_plus = num("h_plus");
    if (has("varpi")) prof.varpi = static_cast<int>(num("varpi"));
    if (has("h_A")) prof.h_A = num("h_A");
    prof.unit.t = mpz_class(cell.at("unit_t"), 10);
    prof.unit.u = mpz_class(cell.at("unit_u"), 10);
    prof.unit.half = num("unit_half") != 0;
    prof.unit.norm = static_cast<int>(num("unit_norm"));
    prof.zeta_minus1 = ExactRational::parse(cell.at("zeta_minus1"));
    r.h_pp = num("h_pp");
    r.t_pp = num("t_pp");
    for (const auto& tag : kRefinedTags) {
      if (has("refined_" + tag)) r.refined_pp.set(GroupTag::parse(tag), num("refined_" + tag));
    }
    r.lambda1_pp = num("lambda1_pp");
    if (has("lambda16_pp")) r.lambda16_pp = num("lambda16_pp");
    for (const auto& slot : pol_slots()) {
      const std::string base = "pol_" + slot.name + "_";
      if (!has(base + "h_pm")) continue;
      r.pol_mod.push_back(PolModEntry{GenusLabel::make(slot.r), slot.gauss,
                                      PolModTriple{num(base + "h_pm"), num(base + "h_un"), num(base + "t")}});
    }
    for (auto s : kStrata) {
      if (has("mass_" + to_string(s))) r.masses[s] = ExactRational::parse(cell.at("mass_" + to_string(s)));
    }
    r.elliptic.h = num("elliptic_h");
    r.elliptic.t = num("elliptic_t");
    for (const auto& tag : kEllipticTags) {
      if (has("elliptic_" + tag)) r.elliptic.refined.set(GroupTag::parse(tag), num("elliptic_" + tag));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string elliptic_csv_header() {
  std::vector<std::string> cols = {"q", "p", "exponent", "elliptic_h", "elliptic_t"};
  for (const auto& tag : kEllipticTags) cols.push_back("elliptic_" + tag);
  return "# q prime power; p its prime; elliptic_h elliptic_t class and type number of the even-power "
         "baseline; elliptic_G curves with automorphism group G; empty cell means not defined\n" +
         join(cols, ',') + "\n";
}

std::string elliptic_csv_row(const EllipticRecord& rec) {
  std::vector<std::string> row = {std::to_string(rec.meta.q), std::to_string(rec.p.p),
                                  std::to_string(rec.meta.exponent), std::to_string(rec.elliptic.h),
                                  std::to_string(rec.elliptic.t)};
  for (const auto& tag : kEllipticTags) {
    GroupTag g = GroupTag::parse(tag);
    row.push_back(rec.elliptic.refined.contains(g) ? std::to_string(rec.elliptic.refined.at(g)) : "");
  }
  return join(row, ',') + "\n";
}

std::string markdown_header() {
  return "| p | d_F | h | zeta_F(-1) | h_pp | t_pp | refined | lambda1 | lambda16 | mass | elliptic h | "
         "elliptic t |\n"
         "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
}

std::string markdown_row(const CensusReport& r) {
  std::ostringstream os;
  os << "| " << r.p.p << " | " << r.profile.d_F << " | " << r.profile.h << " | " << r.profile.zeta_minus1.str()
     << " | " << r.h_pp << " | " << r.t_pp << " | " << compact_table(r.refined_pp) << " | " << r.lambda1_pp << " | "
     << (r.lambda16_pp ? std::to_string(*r.lambda16_pp) : "-") << " | " << r.masses.at(MassStratum::Ppsp).str()
     << " | " << r.elliptic.h << " | " << r.elliptic.t << " |\n";
  return os.str();
}

std::string elliptic_markdown(const EllipticRecord& rec) {
  std::ostringstream os;
  os << "| q | p | h | t | refined |\n|---|---|---|---|---|\n";
  os << "| " << rec.meta.q << " | " << rec.p.p << " | " << rec.elliptic.h << " | " << rec.elliptic.t << " | "
     << compact_table(rec.elliptic.refined) << " |\n";
  return os.str();
}

}  // namespace ppsp
