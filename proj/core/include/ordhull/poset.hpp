#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordhull/errors.hpp"

namespace ordhull {

// Finite partial order over named elements. Elements are dense indices
// 0..size()-1 in declaration order; the relation is stored as per-element
// up/down bitmasks, so size is capped at 32 (far above anything the
// enumeration machinery produces).
class Poset {
 public:
  // Builds the reflexive-transitive closure of `pairs` (each entry a <= b).
  // Throws EmptyPoset, AntisymmetryViolation (when the closure would identify
  // two distinct elements), or ParseError on unknown/duplicate names.
  static Poset from_pairs(std::vector<std::string> names,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

  // Builds from a full relation matrix; validates reflexivity, antisymmetry
  // and transitivity.
  static Poset from_relation(std::vector<std::string> names, const std::vector<bool>& leq);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
  std::uint32_t up_mask(int a) const { return up_[a]; }      // { b : a <= b }
  std::uint32_t down_mask(int a) const { return down_[a]; }  // { b : b <= a }

  std::optional<int> least() const;
  std::optional<int> greatest() const;
  // Least/greatest member of a nonempty index mask, if one exists.
  std::optional<int> least_of(std::uint32_t mask) const;
  std::optional<int> greatest_of(std::uint32_t mask) const;

  // Cover pairs (a,b): a < b with nothing strictly between. Inverse of
  // from_pairs up to closure; used by the serializer.
  std::vector<std::pair<int, int>> covers() const;

  Poset dual() const;
  Poset relabeled(const std::vector<int>& perm) const;  // new index of old i is perm[i]

  struct CompletenessReport {
    bool complete = true;
    std::vector<int> witness;  // subset lacking a required extremum
    std::string detail;
  };
  // Exhaustive subset scan up to kExhaustiveLimit elements, pairwise
  // meet/join criterion above it (equivalent on finite posets: iterated
  // binary meets build the infimum of any bounded subset).
  CompletenessReport order_completeness() const;
  bool is_order_complete() const { return order_completeness().complete; }

  static constexpr int kExhaustiveLimit = 12;
  static constexpr int kMaxSize = 32;

 private:
  Poset() = default;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> up_, down_;
};

// Order completion: adjoins a bottom/top symbol exactly when the base poset
// lacks a least/greatest element. Completed indices 0..base_size()-1 are the
// base elements, followed by the bottom symbol (if adjoined), then the top
// symbol (if adjoined). The symbols print as "BOT"/"TOP".
class CompletedPoset {
 public:
  explicit CompletedPoset(Poset base);

  const Poset& base() const { return base_; }
  int size() const { return m_; }
  int base_size() const { return base_.size(); }
  bool bottom_added() const { return bottom_added_; }
  bool top_added() const { return top_added_; }
  bool is_member(int i) const { return i < base_.size(); }
  bool is_symbol(int i) const { return i >= base_.size(); }
  bool is_bottom_symbol(int i) const { return bottom_added_ && i == bottom_index_; }
  bool is_top_symbol(int i) const { return top_added_ && i == top_index_; }

  // Global least/greatest of the completed order (symbol or base extremum).
  int min_index() const { return bottom_index_; }
  int max_index() const { return top_index_; }

  std::string name(int i) const;
  // Resolves a base element name, or "BOT"/"TOP" when that symbol was
  // adjoined; nullopt otherwise.
  std::optional<int> index_of(std::string_view token) const;

  bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
  std::uint32_t up_mask(int a) const { return up_[a]; }
  std::uint32_t down_mask(int a) const { return down_[a]; }

  bool base_order_complete() const { return base_complete_; }

  // Least upper bound / greatest lower bound in the completed order, with the
  // empty-set convention sup({}) = min, inf({}) = max. Throws
  // NotOrderComplete when the base poset is not order-complete (the completed
  // order is then not guaranteed to be a complete lattice).
  int sup(const std::vector<int>& elems) const;
  int inf(const std::vector<int>& elems) const;
  int sup_mask(std::uint32_t mask) const;
  int inf_mask(std::uint32_t mask) const;
  int join(int a, int b) const;
  int meet(int a, int b) const;

  // The completed order as a plain poset (symbols become ordinary elements).
  Poset underlying_poset() const;

 private:
  void require_complete() const;

  Poset base_;
  bool base_complete_ = false;
  bool bottom_added_ = false, top_added_ = false;
  int m_ = 0;
  int bottom_index_ = 0, top_index_ = 0;  // global extrema, symbol or not
  std::vector<std::uint32_t> up_, down_;
  std::vector<std::uint8_t> join_, meet_;  // m*m lookup, filled when base_complete_
};

}  // namespace ordhull
