#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonfree/families.hpp"
#include "nonfree/halfrel.hpp"
#include "nonfree/rational.hpp"

namespace nonfree {

/// Search bounds used when no family matches.
struct SearchEffort {
  int max_len = 6;
  long bound = 4;
  int workers = 0;
};

enum class Status { FreeSchottky, NotFree, Unknown };

/// "FreeSchottky" / "NonFree" / "Unknown" for the group,
/// "FreeSchottky" / "NonSemigroupFree" / "Unknown" for the semigroup.
std::string group_status_name(Status s);
std::string semigroup_status_name(Status s);

struct StructureStatus {
  Status status = Status::Unknown;
  /// Present iff status == NotFree; lhs and rhs evaluate equal at tau.
  std::optional<RelationWitness> witness;
  /// Where the witness came from, e.g. "family D k=3" or "search".
  std::string source;
};

struct TauClassification {
  Rational tau;
  StructureStatus group;
  StructureStatus semigroup;
  SearchEffort effort;
  /// Whether the bounded search ran.
  bool searched = false;
};

/// Every family member (all sigma, all C variants) whose tau equals the
/// input; each is verified. k is recovered by exact inversion, |k| <= 10^6.
std::vector<FamilyInstance> family_lookup(const Rational& tau);

TauClassification classify_tau(const Rational& tau, const SearchEffort& effort = {});

/// Group witness at tau from a family member found at tau or -tau.
std::optional<RelationWitness> group_witness(const FamilyInstance& inst, const Rational& tau);
/// Positive-word witness at tau from a member at tau (all-positive tuple)
/// or at -tau (alternating tuple).
std::optional<RelationWitness> semigroup_witness(const FamilyInstance& inst,
                                                 const Rational& tau);

}  // namespace nonfree
