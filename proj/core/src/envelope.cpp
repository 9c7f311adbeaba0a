#include "ordhull/envelope.hpp"

#include <algorithm>
#include <cmath>

#include "ordhull/errors.hpp"

namespace ordhull {

namespace {

int class_slot(FunctionClass c) { return static_cast<int>(c); }

bool space_fits(int m, int n, std::uint32_t cap) {
  double total = 1.0;
  for (int i = 0; i < n; ++i) {
    total *= m;
    if (total > static_cast<double>(cap)) return false;
  }
  return true;
}

// Runs fn on every table over completed indices, in odometer order (last
// point fastest). fn may return false to stop.
template <typename Fn>
void for_each_table(int m, int n, Fn&& fn) {
  std::vector<int> values(n, 0);
  while (true) {
    if (!fn(values)) return;
    int i = n - 1;
    while (i >= 0 && values[i] == m - 1) values[i--] = 0;
    if (i < 0) return;
    ++values[i];
  }
}

FunctionTable constant_table(const Instance& inst, int value) {
  return FunctionTable{std::vector<int>(inst.carrier_size(), value)};
}

bool relation_holds_at(const Instance& inst, const std::vector<int>& values, Relation rel, int h,
                       int x) {
  const CompletedPoset& c = inst.completed();
  const int lhs = values[inst.act_point(h, x)];
  const int rhs = inst.act_value(inst.weight_of(h), values[x]);
  switch (rel) {
    case Relation::Leq:
      return c.leq(lhs, rhs);
    case Relation::Geq:
      return c.leq(rhs, lhs);
    case Relation::Eq:
      return lhs == rhs;
  }
  return false;
}

bool relation_holds(const Instance& inst, const std::vector<int>& values, Relation rel) {
  for (int h = 0; h < inst.acting().size(); ++h)
    for (int x = 0; x < inst.carrier_size(); ++x)
      if (!relation_holds_at(inst, values, rel, h, x)) return false;
  return true;
}

bool values_in_class(const Instance& inst, const std::vector<int>& values, FunctionClass cls) {
  switch (cls) {
    case FunctionClass::SUB:
      return relation_holds(inst, values, Relation::Leq);
    case FunctionClass::SUPER:
      return relation_holds(inst, values, Relation::Geq);
    case FunctionClass::HGC:
      return relation_holds(inst, values, Relation::Eq);
    case FunctionClass::HG: {
      const CompletedPoset& c = inst.completed();
      for (int v : values)
        if (!c.is_member(v)) return false;
      return relation_holds(inst, values, Relation::Eq);
    }
  }
  return false;
}

FunctionTable oracle_envelope(const Instance& inst, const FunctionTable& f, FunctionClass cls,
                              bool lower) {
  const CompletedPoset& c = inst.completed();
  const int n = inst.carrier_size();
  const int m = c.size();
  if (!space_fits(m, n, EnvelopeWorkspace::kMaxTables))
    throw BoundsTooLarge("candidate table space exceeds the brute-force limit");
  FunctionTable acc = constant_table(inst, lower ? c.min_index() : c.max_index());
  for_each_table(m, n, [&](const std::vector<int>& phi) {
    for (int x = 0; x < n; ++x) {
      const bool dominated = lower ? c.leq(phi[x], f.values[x]) : c.leq(f.values[x], phi[x]);
      if (!dominated) return true;
    }
    if (!values_in_class(inst, phi, cls)) return true;
    for (int x = 0; x < n; ++x)
      acc.values[x] = lower ? c.join(acc.values[x], phi[x]) : c.meet(acc.values[x], phi[x]);
    return true;
  });
  return acc;
}

FunctionTable orbitwise_envelope(const Instance& inst, const FunctionTable& f, FunctionClass cls,
                                 bool lower) {
  if (cls != FunctionClass::HG && cls != FunctionClass::HGC)
    throw Error("orbitwise envelopes are defined for the homogeneous classes only");
  if (!inst.flags().h_group || !inst.flags().t_group)
    throw OrbitwiseNeedsGroups("orbitwise envelopes need group actions on both sides");
  const CompletedPoset& c = inst.completed();
  const int nh = inst.acting().size();
  const int fold_unit = lower ? c.min_index() : c.max_index();
  FunctionTable out = constant_table(inst, fold_unit);
  const OrbitPartition& orbits = inst.carrier_orbits();
  for (size_t j = 0; j < orbits.reps.size(); ++j) {
    const int rep = orbits.reps[j];
    const std::vector<int> stab = inst.carrier_stabilizer(rep);
    // A class member phi restricted to this orbit is determined by
    // s = phi(rep): it must be fixed by the stabilizer's weights (otherwise
    // the extension phi(h·rep) = w(h)s is not a function) and its extension
    // must stay on the right side of f.
    std::vector<int> candidates;
    for (int s = 0; s < c.size(); ++s) {
      if (cls == FunctionClass::HG && !c.is_member(s)) continue;
      bool ok = true;
      for (int h : stab)
        if (inst.act_value(inst.weight_of(h), s) != s) {
          ok = false;
          break;
        }
      for (int h = 0; ok && h < nh; ++h) {
        const int ext = inst.act_value(inst.weight_of(h), s);
        const int bound = f.values[inst.act_point(h, rep)];
        ok = lower ? c.leq(ext, bound) : c.leq(bound, ext);
      }
      if (ok) candidates.push_back(s);
    }
    if (candidates.empty()) {
      // No class member dominates f anywhere once one orbit is empty, so the
      // envelope collapses to the empty-fold constant globally.
      return constant_table(inst, fold_unit);
    }
    for (int s : candidates) {
      for (int h = 0; h < nh; ++h) {
        const int y = inst.act_point(h, rep);
        const int ext = inst.act_value(inst.weight_of(h), s);
        out.values[y] = lower ? c.join(out.values[y], ext) : c.meet(out.values[y], ext);
      }
    }
  }
  return out;
}

}  // namespace

bool ClassSet::contains(FunctionClass c) const {
  switch (c) {
    case FunctionClass::HG:
      return hg;
    case FunctionClass::HGC:
      return hgc;
    case FunctionClass::SUB:
      return sub;
    case FunctionClass::SUPER:
      return super;
  }
  return false;
}

bool satisfies_relation(const Instance& inst, const FunctionTable& f, Relation rel) {
  inst.require_table(f);
  return relation_holds(inst, f.values, rel);
}

bool satisfies_relation_on(const Instance& inst, const FunctionTable& f, Relation rel,
                           const std::vector<int>& hs) {
  inst.require_table(f);
  for (int h : hs)
    for (int x = 0; x < inst.carrier_size(); ++x)
      if (!relation_holds_at(inst, f.values, rel, h, x)) return false;
  return true;
}

bool in_class(const Instance& inst, const FunctionTable& f, FunctionClass cls) {
  inst.require_table(f);
  return values_in_class(inst, f.values, cls);
}

ClassSet classify(const Instance& inst, const FunctionTable& f) {
  inst.require_table(f);
  ClassSet out;
  out.sub = relation_holds(inst, f.values, Relation::Leq);
  out.super = relation_holds(inst, f.values, Relation::Geq);
  out.hgc = out.sub && out.super;
  out.hg = out.hgc;
  if (out.hg)
    for (int v : f.values)
      if (!inst.completed().is_member(v)) {
        out.hg = false;
        break;
      }
  return out;
}

FunctionTable lower_envelope(const Instance& inst, const FunctionTable& f, FunctionClass cls,
                             EnvelopeAlgorithm alg) {
  inst.require_table(f);
  return alg == EnvelopeAlgorithm::Oracle ? oracle_envelope(inst, f, cls, true)
                                          : orbitwise_envelope(inst, f, cls, true);
}

FunctionTable upper_envelope(const Instance& inst, const FunctionTable& f, FunctionClass cls,
                             EnvelopeAlgorithm alg) {
  inst.require_table(f);
  return alg == EnvelopeAlgorithm::Oracle ? oracle_envelope(inst, f, cls, false)
                                          : orbitwise_envelope(inst, f, cls, false);
}

FunctionTable regularized_minorant(const Instance& inst, const FunctionTable& f) {
  inst.require_table(f);
  if (!inst.flags().t_group)
    throw TargetNotGroup("the regularized minorant needs weight inverses");
  const CompletedPoset& c = inst.completed();
  FunctionTable out = constant_table(inst, c.max_index());
  for (int x = 0; x < inst.carrier_size(); ++x)
    for (int h = 0; h < inst.acting().size(); ++h) {
      const int term = inst.act_value(inst.weight_inverse_of(h), f.values[inst.act_point(h, x)]);
      out.values[x] = c.meet(out.values[x], term);
    }
  return out;
}

FunctionTable regularized_majorant(const Instance& inst, const FunctionTable& f) {
  inst.require_table(f);
  if (!inst.flags().t_group)
    throw TargetNotGroup("the regularized majorant needs weight inverses");
  const CompletedPoset& c = inst.completed();
  FunctionTable out = constant_table(inst, c.min_index());
  for (int x = 0; x < inst.carrier_size(); ++x)
    for (int h = 0; h < inst.acting().size(); ++h) {
      const int term = inst.act_value(inst.weight_inverse_of(h), f.values[inst.act_point(h, x)]);
      out.values[x] = c.join(out.values[x], term);
    }
  return out;
}

FunctionTable left_multiply(const Instance& inst, int t, const FunctionTable& f) {
  inst.require_table(f);
  if (t < 0 || t >= inst.weights().size()) throw ParseError("weight element out of range");
  FunctionTable out = f;
  for (int& v : out.values) v = inst.act_value(t, v);
  return out;
}

bool check_on_generators(const Instance& inst, const FunctionTable& f,
                         const std::vector<int>& gens, Relation rel, bool group_mode) {
  inst.require_table(f);
  if (group_mode && rel != Relation::Eq)
    throw Error("group-mode generator checks are sound for the equality relation only");
  if (!is_generating(inst.acting(), gens, group_mode))
    throw NotGenerating("the given subset does not generate the acting semigroup");
  return satisfies_relation_on(inst, f, rel, gens);
}

EnvelopeWorkspace::EnvelopeWorkspace(const Instance& inst)
    : inst_(&inst), n_(inst.carrier_size()), m_(inst.completed().size()) {
  if (!space_fits(m_, n_, kMaxTables))
    throw BoundsTooLarge("candidate table space exceeds the workspace limit");
  std::uint32_t count = 1;
  for (int i = 0; i < n_; ++i) count *= static_cast<std::uint32_t>(m_);
  count_ = count;
  std::uint32_t code = 0;
  for_each_table(m_, n_, [&](const std::vector<int>& phi) {
    // The odometer treats the last point as fastest, so code order matches
    // base-m reading of the value list.
    const bool sub = relation_holds(*inst_, phi, Relation::Leq);
    const bool sup = relation_holds(*inst_, phi, Relation::Geq);
    const auto push = [&](FunctionClass c) {
      codes_[class_slot(c)].push_back(code);
      auto& flat = flat_[class_slot(c)];
      for (int v : phi) flat.push_back(static_cast<std::uint8_t>(v));
    };
    if (sub) push(FunctionClass::SUB);
    if (sup) push(FunctionClass::SUPER);
    if (sub && sup) {
      push(FunctionClass::HGC);
      bool members_only = true;
      for (int v : phi) members_only = members_only && inst_->completed().is_member(v);
      if (members_only) push(FunctionClass::HG);
    }
    ++code;
    return true;
  });
}

FunctionTable EnvelopeWorkspace::decode(std::uint32_t code) const {
  FunctionTable out;
  out.values.assign(n_, 0);
  for (int i = n_ - 1; i >= 0; --i) {
    out.values[i] = static_cast<int>(code % m_);
    code /= static_cast<std::uint32_t>(m_);
  }
  return out;
}

std::uint32_t EnvelopeWorkspace::encode(const FunctionTable& f) const {
  std::uint32_t code = 0;
  for (int v : f.values) code = code * static_cast<std::uint32_t>(m_) + static_cast<std::uint32_t>(v);
  return code;
}

const std::vector<std::uint32_t>& EnvelopeWorkspace::members(FunctionClass c) const {
  return codes_[class_slot(c)];
}

FunctionTable EnvelopeWorkspace::lower(const FunctionTable& f, FunctionClass cls) const {
  const CompletedPoset& c = inst_->completed();
  FunctionTable acc = constant_table(*inst_, c.min_index());
  const auto& flat = flat_[class_slot(cls)];
  for (size_t off = 0; off < flat.size(); off += n_) {
    bool dominated = true;
    for (int x = 0; x < n_; ++x)
      if (!c.leq(flat[off + x], f.values[x])) {
        dominated = false;
        break;
      }
    if (!dominated) continue;
    for (int x = 0; x < n_; ++x) acc.values[x] = c.join(acc.values[x], flat[off + x]);
  }
  return acc;
}

FunctionTable EnvelopeWorkspace::upper(const FunctionTable& f, FunctionClass cls) const {
  const CompletedPoset& c = inst_->completed();
  FunctionTable acc = constant_table(*inst_, c.max_index());
  const auto& flat = flat_[class_slot(cls)];
  for (size_t off = 0; off < flat.size(); off += n_) {
    bool dominates = true;
    for (int x = 0; x < n_; ++x)
      if (!c.leq(f.values[x], flat[off + x])) {
        dominates = false;
        break;
      }
    if (!dominates) continue;
    for (int x = 0; x < n_; ++x) acc.values[x] = c.meet(acc.values[x], flat[off + x]);
  }
  return acc;
}

}  // namespace ordhull
