#include "ordhull/instance.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ordhull/errors.hpp"

namespace ordhull {

namespace {

[[noreturn]] void throw_action_failure(const ActionCheck& check, const std::string& where) {
  const std::string msg = where + ": " + check.detail;
  if (check.axiom == "Ax1") throw Ax1Violation(msg);
  if (check.axiom == "Ax2") throw Ax2Violation(msg);
  throw Ax0Violation(msg);
}

}  // namespace

Instance::Instance(FiniteSemigroup h, std::vector<std::string> carrier_names,
                   std::vector<int> carrier_table, FiniteSemigroup t, std::vector<int> weight,
                   Poset values, std::vector<int> value_table)
    : h_(std::move(h)),
      carrier_names_(std::move(carrier_names)),
      carrier_table_(std::move(carrier_table)),
      t_(std::move(t)),
      weight_(std::move(weight)),
      values_((values.order_completeness().complete
                   ? std::move(values)
                   : throw NotOrderComplete("value poset: " +
                                            values.order_completeness().detail))),
      completed_(values_),
      value_table_(std::move(value_table)) {
  if (carrier_names_.empty()) throw ParseError("carrier must be nonempty");
  {
    std::set<std::string> uniq(carrier_names_.begin(), carrier_names_.end());
    if (uniq.size() != carrier_names_.size())
      throw ParseError("carrier point names must be distinct");
  }
  ActionCheck cx = validate_plain_action(h_, carrier_size(), carrier_table_, carrier_names_);
  if (!cx.ok) throw_action_failure(cx, "carrier action");

  if (static_cast<int>(weight_.size()) != h_.size())
    throw ParseError("weight map must assign every element of the acting semigroup");
  for (int w : weight_)
    if (w < 0 || w >= t_.size()) throw ParseError("weight map value out of range");
  HomCheck hc = check_homomorphism(h_, t_, weight_);
  if (!hc.ok) throw NotAHomomorphism(hc.detail);

  // Only the image of the weight map ever acts on values, so cut T down to it.
  // This keeps "onto" a construction invariant rather than a hypothesis.
  ImageRestriction restr = restrict_to_image(h_, t_, weight_);
  const Poset& base = values_;
  if (static_cast<int>(value_table_.size()) != t_.size() * base.size())
    throw ParseError("value action table has wrong shape");
  if (static_cast<int>(restr.image.size()) != t_.size()) {
    std::vector<int> cut;
    cut.reserve(restr.image.size() * base.size());
    for (int src : restr.embed)
      for (int v = 0; v < base.size(); ++v) cut.push_back(value_table_[src * base.size() + v]);
    t_ = std::move(restr.image);
    weight_ = std::move(restr.map);
    value_table_ = std::move(cut);
  }

  ActionCheck cs = validate_ordered_action(t_, base, value_table_);
  if (!cs.ok) throw_action_failure(cs, "value action");
  value_table_ext_ = extend_to_completion(t_, completed_, value_table_);

  flags_.h_monoid = h_.identity().has_value();
  flags_.h_group = h_.is_group();
  flags_.t_group = t_.is_group();
  flags_.t_commutative = t_.is_commutative();
  flags_.free_action = is_free_action(h_, carrier_table_, carrier_size());
  if (flags_.h_group)
    carrier_orbits_ = orbit_partition(h_, carrier_table_, carrier_size(), carrier_names_);
  if (flags_.t_group) {
    std::vector<std::string> completed_names(completed_.size());
    for (int v = 0; v < completed_.size(); ++v) completed_names[v] = completed_.name(v);
    value_orbits_ = orbit_partition(t_, value_table_ext_, completed_.size(), completed_names);
  }
}

int Instance::weight_inverse_of(int h) const {
  if (!flags_.t_group) throw TargetNotGroup("weight inverses need a group of weights");
  return t_.inverse(weight_[h]);
}

std::optional<int> Instance::carrier_index(std::string_view name) const {
  for (size_t i = 0; i < carrier_names_.size(); ++i)
    if (carrier_names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

const OrbitPartition& Instance::carrier_orbits() const {
  if (!carrier_orbits_) throw NotAGroup("carrier orbit decomposition needs a group action");
  return *carrier_orbits_;
}

std::vector<int> Instance::carrier_stabilizer(int x) const {
  return stabilizer(h_, carrier_table_, carrier_size(), x);
}

std::vector<int> Instance::carrier_stationary() const {
  return stationary_points(h_, carrier_table_, carrier_size());
}

const OrbitPartition& Instance::value_orbits() const {
  if (!value_orbits_) throw NotAGroup("value orbit decomposition needs a group of weights");
  return *value_orbits_;
}

void Instance::require_table(const FunctionTable& f) const {
  if (static_cast<int>(f.values.size()) != carrier_size())
    throw ParseError("function table must assign every carrier point");
  for (int v : f.values)
    if (v < 0 || v >= completed_.size()) throw ParseError("function value out of range");
}

OrbitImageCheck orbit_image_check(const Instance& inst, const FunctionTable& f) {
  inst.require_table(f);
  const OrbitPartition& vo = inst.value_orbits();
  OrbitImageCheck out;
  out.value_orbit_of_point.reserve(f.values.size());
  out.stationary_value.reserve(f.values.size());
  for (int v : f.values) {
    const int o = vo.orbit_of[v];
    out.value_orbit_of_point.push_back(o);
    out.stationary_value.push_back(vo.orbits[o].size() == 1);
  }
  return out;
}

}  // namespace ordhull
