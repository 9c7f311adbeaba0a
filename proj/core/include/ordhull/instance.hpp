#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordhull/action.hpp"
#include "ordhull/poset.hpp"
#include "ordhull/semigroup.hpp"

namespace ordhull {

// A function X -> S↑↓, stored as completed-poset indices per carrier point.
struct FunctionTable {
  std::vector<int> values;

  int operator()(int x) const { return values[x]; }
  bool operator==(const FunctionTable&) const = default;
};

// The validated data a single problem needs: a semigroup H acting on a finite
// carrier X, a semigroup T acting monotonically on an order-complete poset S,
// and a weight homomorphism H -> T. Construction runs every axiom check and
// throws on the first violation; afterwards T is replaced by the image of the
// weight map, so weights are always onto.
class Instance {
 public:
  struct Flags {
    bool h_monoid = false;
    bool h_group = false;
    bool t_group = false;
    bool t_commutative = false;
    bool free_action = false;
  };

  Instance(FiniteSemigroup h, std::vector<std::string> carrier_names,
           std::vector<int> carrier_table, FiniteSemigroup t, std::vector<int> weight,
           Poset values, std::vector<int> value_table);

  const FiniteSemigroup& acting() const { return h_; }
  const FiniteSemigroup& weights() const { return t_; }
  int weight_of(int h) const { return weight_[h]; }
  // Index in T of 𝔥(h)⁻¹; requires T to be a group.
  int weight_inverse_of(int h) const;

  int carrier_size() const { return static_cast<int>(carrier_names_.size()); }
  const std::vector<std::string>& carrier_names() const { return carrier_names_; }
  const std::string& carrier_name(int x) const { return carrier_names_[x]; }
  std::optional<int> carrier_index(std::string_view name) const;
  int act_point(int h, int x) const { return carrier_table_[h * carrier_size() + x]; }
  const std::vector<int>& carrier_table() const { return carrier_table_; }

  const Poset& values() const { return values_; }
  const CompletedPoset& completed() const { return completed_; }
  // t acting on a completed index; adjoined symbols are fixed.
  int act_value(int t, int v) const { return value_table_ext_[t * completed_.size() + v]; }
  const std::vector<int>& value_table() const { return value_table_; }

  const Flags& flags() const { return flags_; }
  // Orbit structure of H on X; only built when H is a group.
  const OrbitPartition& carrier_orbits() const;
  std::vector<int> carrier_stabilizer(int x) const;
  std::vector<int> carrier_stationary() const;

  // Orbit structure of T on S↑↓; requires T to be a group.
  const OrbitPartition& value_orbits() const;

  void require_table(const FunctionTable& f) const;  // shape and range check

 private:
  FiniteSemigroup h_;
  std::vector<std::string> carrier_names_;
  std::vector<int> carrier_table_;
  FiniteSemigroup t_;
  std::vector<int> weight_;
  Poset values_;
  CompletedPoset completed_;
  std::vector<int> value_table_;      // base-poset action, for serialization
  std::vector<int> value_table_ext_;  // completed-poset action
  Flags flags_;
  std::optional<OrbitPartition> carrier_orbits_;
  std::optional<OrbitPartition> value_orbits_;
};

struct NamedFunction {
  std::string name;
  FunctionTable table;
};

// Per-point record of how f interacts with one orbit of T on S↑↓.
struct OrbitImageCheck {
  std::vector<int> value_orbit_of_point;  // carrier point -> orbit number in value_orbits()
  std::vector<bool> stationary_value;     // f(x) is a one-point T-orbit
};
// Requires 𝚃 to be a group (throws NotAGroup via value_orbits()).
OrbitImageCheck orbit_image_check(const Instance& inst, const FunctionTable& f);

}  // namespace ordhull
