#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ordhull/instance.hpp"

namespace ordhull {

// The four function classes envelopes are taken over. HG is equality with
// values in the base poset only; HGC allows the adjoined symbols; SUB and
// SUPER are the one-sided relaxations f(hx) <= w(h)f(x), resp. >=.
enum class FunctionClass { HG, HGC, SUB, SUPER };
enum class Relation { Leq, Geq, Eq };
enum class EnvelopeAlgorithm { Oracle, Orbitwise };

struct ClassSet {
  bool hg = false, hgc = false, sub = false, super = false;
  bool contains(FunctionClass c) const;
  bool operator==(const ClassSet&) const = default;
};

// f(hx) rel w(h)f(x) over all h and x (or only the listed h).
bool satisfies_relation(const Instance&, const FunctionTable&, Relation);
bool satisfies_relation_on(const Instance&, const FunctionTable&, Relation,
                           const std::vector<int>& hs);
bool in_class(const Instance&, const FunctionTable&, FunctionClass);
ClassSet classify(const Instance&, const FunctionTable&);

// Lower envelope: pointwise sup of class members minorizing f; an empty
// minorant set folds to the constant global-minimum table, matching the
// empty-sup convention. Upper envelope dual. The oracle algorithm enumerates
// every candidate table; the orbitwise one needs both semigroups to be groups
// and supports only HG and HGC.
FunctionTable lower_envelope(const Instance&, const FunctionTable& f, FunctionClass,
                             EnvelopeAlgorithm = EnvelopeAlgorithm::Oracle);
FunctionTable upper_envelope(const Instance&, const FunctionTable& f, FunctionClass,
                             EnvelopeAlgorithm = EnvelopeAlgorithm::Oracle);

// f_min(x) = inf_h w(h)^{-1} f(hx), f_max dual; weights must form a group.
FunctionTable regularized_minorant(const Instance&, const FunctionTable&);
FunctionTable regularized_majorant(const Instance&, const FunctionTable&);

// x -> t·f(x) over the completed poset.
FunctionTable left_multiply(const Instance&, int t, const FunctionTable&);

// Verifies f(hx) rel w(h)f(x) for h in gens only, after confirming gens
// actually generates the acting semigroup (group mode: equality relation
// only). Throws EmptyGenerators / NotGenerating / GroupModeOnNonGroup.
bool check_on_generators(const Instance&, const FunctionTable&, const std::vector<int>& gens,
                         Relation, bool group_mode);

// Precomputed class membership over the full m^n table space of one instance.
// Built once, then envelopes are member scans; used by the statement suite
// and the verifier where the same instance is probed with many tables.
class EnvelopeWorkspace {
 public:
  explicit EnvelopeWorkspace(const Instance&);

  const Instance& instance() const { return *inst_; }
  std::uint32_t table_count() const { return count_; }
  FunctionTable decode(std::uint32_t code) const;
  std::uint32_t encode(const FunctionTable&) const;

  const std::vector<std::uint32_t>& members(FunctionClass) const;
  FunctionTable lower(const FunctionTable& f, FunctionClass) const;
  FunctionTable upper(const FunctionTable& f, FunctionClass) const;

  static constexpr std::uint32_t kMaxTables = 1u << 20;

 private:
  const Instance* inst_;
  int n_ = 0, m_ = 0;
  std::uint32_t count_ = 0;
  std::array<std::vector<std::uint32_t>, 4> codes_;
  std::array<std::vector<std::uint8_t>, 4> flat_;  // decoded members, stride n_
};

}  // namespace ordhull
