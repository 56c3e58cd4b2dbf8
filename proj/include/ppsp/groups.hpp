#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ppsp/exact_rational.hpp"

namespace ppsp {

enum class GroupName { C1, C2, C3, C4, C6, Q8, Q12, Q24, E24, E48, E120, D2, D3, D4, D12, A4, S4 };

/// The dagger/double-dagger marks separate two non-conjugate embeddings of
/// the same abstract group; they only occur on C2 and D3.
enum class Decoration { None, Dagger, DoubleDagger };

class GroupTag {
 public:
  /// Throws PreconditionError for a decoration on anything but C2 or D3.
  GroupTag(GroupName name, Decoration decoration = Decoration::None);  // NOLINT(google-explicit-constructor)

  /// Inverse of label(): "C2", "C2_dag", "D3_ddag", ...
  static GroupTag parse(std::string_view label);

  GroupName name() const { return name_; }
  Decoration decoration() const { return decoration_; }
  std::int64_t order() const;
  std::string label() const;

  friend auto operator<=>(const GroupTag&, const GroupTag&) = default;

 private:
  GroupName name_;
  Decoration decoration_;
};

/// Counts per automorphism group. Tags that a formula does not mention are
/// either absent or stored as zero.
class RefinedTable {
 public:
  void set(const GroupTag& tag, std::int64_t count) { entries_[tag] = count; }
  std::int64_t at(const GroupTag& tag) const;
  bool contains(const GroupTag& tag) const { return entries_.count(tag) != 0; }

  std::int64_t sum() const;
  /// Sum of count / |G|.
  ExactRational mass() const;

  const std::map<GroupTag, std::int64_t>& entries() const { return entries_; }
  std::string str() const;

  friend bool operator==(const RefinedTable&, const RefinedTable&) = default;

 private:
  std::map<GroupTag, std::int64_t> entries_;
};

/// Same shape as RefinedTable before the integrality check.
class RationalTable {
 public:
  void set(const GroupTag& tag, const ExactRational& value) { entries_[tag] = value; }
  ExactRational at(const GroupTag& tag) const;
  ExactRational sum() const;
  ExactRational mass() const;
  const std::map<GroupTag, ExactRational>& entries() const { return entries_; }

  /// Throws NonIntegralError naming the first entry that is not a
  /// nonnegative integer.
  RefinedTable to_counts(const std::string& context) const;

 private:
  std::map<GroupTag, ExactRational> entries_;
};

}  // namespace ppsp
