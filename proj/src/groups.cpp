#include "ppsp/groups.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "ppsp/errors.hpp"

namespace ppsp {

namespace {

struct NameInfo {
  GroupName name;
  const char* text;
  std::int64_t order;
};

constexpr std::array<NameInfo, 17> kNames = {{
    {GroupName::C1, "C1", 1},   {GroupName::C2, "C2", 2},     {GroupName::C3, "C3", 3},
    {GroupName::C4, "C4", 4},   {GroupName::C6, "C6", 6},     {GroupName::Q8, "Q8", 8},
    {GroupName::Q12, "Q12", 12}, {GroupName::Q24, "Q24", 24}, {GroupName::E24, "E24", 24},
    {GroupName::E48, "E48", 48}, {GroupName::E120, "E120", 120}, {GroupName::D2, "D2", 4},
    {GroupName::D3, "D3", 6},   {GroupName::D4, "D4", 8},     {GroupName::D12, "D12", 24},
    {GroupName::A4, "A4", 12},  {GroupName::S4, "S4", 24},
}};

const NameInfo& info(GroupName name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry;
  }
  throw std::logic_error("unknown group name");
}

}  // namespace

GroupTag::GroupTag(GroupName name, Decoration decoration) : name_(name), decoration_(decoration) {
  if (decoration != Decoration::None && name != GroupName::C2 && name != GroupName::D3) {
    throw PreconditionError(std::string("decoration on ") + info(name).text);
  }
}

GroupTag GroupTag::parse(std::string_view label) {
  Decoration decoration = Decoration::None;
  std::string_view base = label;
  if (auto pos = label.find('_'); pos != std::string_view::npos) {
    std::string_view mark = label.substr(pos + 1);
    base = label.substr(0, pos);
    if (mark == "dag") {
      decoration = Decoration::Dagger;
    } else if (mark == "ddag") {
      decoration = Decoration::DoubleDagger;
    } else {
      throw PreconditionError("unknown group label " + std::string(label));
    }
  }
  for (const auto& entry : kNames) {
    if (base == entry.text) return GroupTag(entry.name, decoration);
  }
  throw PreconditionError("unknown group label " + std::string(label));
}

std::int64_t GroupTag::order() const { return info(name_).order; }

std::string GroupTag::label() const {
  std::string out = info(name_).text;
  if (decoration_ == Decoration::Dagger) out += "_dag";
  if (decoration_ == Decoration::DoubleDagger) out += "_ddag";
  return out;
}

std::int64_t RefinedTable::at(const GroupTag& tag) const {
  auto it = entries_.find(tag);
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t RefinedTable::sum() const {
  std::int64_t s = 0;
  for (const auto& [tag, count] : entries_) s += count;
  return s;
}

ExactRational RefinedTable::mass() const {
  ExactRational m;
  for (const auto& [tag, count] : entries_) m += ExactRational(count, tag.order());
  return m;
}

std::string RefinedTable::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [tag, count] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << tag.label() << ": " << count;
  }
  os << '}';
  return os.str();
}

ExactRational RationalTable::at(const GroupTag& tag) const {
  auto it = entries_.find(tag);
  return it == entries_.end() ? ExactRational() : it->second;
}

ExactRational RationalTable::sum() const {
  ExactRational s;
  for (const auto& [tag, value] : entries_) s += value;
  return s;
}

ExactRational RationalTable::mass() const {
  ExactRational m;
  for (const auto& [tag, value] : entries_) m += value / ExactRational(tag.order());
  return m;
}

RefinedTable RationalTable::to_counts(const std::string& context) const {
  RefinedTable out;
  for (const auto& [tag, value] : entries_) {
    if (!value.is_integer() || value.sign() < 0) {
      throw NonIntegralError(context + ": " + tag.label() + " = " + value.str());
    }
    out.set(tag, value.to_int64());
  }
  return out;
}

}  // namespace ppsp
