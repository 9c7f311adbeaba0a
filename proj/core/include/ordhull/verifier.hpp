#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordhull/envelope.hpp"
#include "ordhull/instance.hpp"
#include "ordhull/statements.hpp"

namespace ordhull {

// Bounds are (max acting size, max carrier size, max value-poset size).
struct FamilyBounds {
  int max_h = 4;
  int max_x = 3;
  int max_s = 4;
};

struct FamilyConstraints {
  std::optional<bool> h_group;
  std::optional<bool> h_monoid;
  std::optional<bool> t_group;
  std::optional<bool> t_commutative;
  std::optional<bool> free_action;

  bool admits(const Instance::Flags& f) const;
};

enum class FamilyMode { Exhaustive, Random };

struct InstanceFamily {
  FamilyBounds bounds;
  FamilyMode mode = FamilyMode::Exhaustive;
  std::uint64_t seed = 0;  // random mode only
  int count = 0;           // random mode only
  FamilyConstraints constraints;
};

// Canonical order-complete posets of all sizes 1..max_n (max_n <= 5),
// ascending by size; cached.
const std::vector<Poset>& poset_catalog(int max_n);

// Deterministic instance stream. Exhaustive mode emits every instance within
// bounds up to component relabeling (acting semigroups by canonical Cayley
// table, sizes 1-3 plus the size-4 groups; weight semigroups as quotients by
// every congruence; carriers up to Sym(X); value posets canonically; value
// actions up to order automorphisms); bounds beyond (4, 3, 4) throw
// BoundsTooLarge. Random mode draws `count` admitted instances from the
// seeded generator. The callback returns false to stop early.
void enumerate_instances(const InstanceFamily& family,
                         const std::function<bool(const Instance&)>& visit);
std::vector<Instance> collect_instances(const InstanceFamily& family);

enum class FunctionMode { All, Sampled };

struct SuiteOptions {
  FunctionMode f_mode = FunctionMode::All;
  int sample_count = 8;                 // Sampled mode
  std::vector<StatementId> statements;  // empty = every statement
  std::optional<std::uint64_t> seed;    // defaults to the instance digest
};

struct SuiteResult {
  std::vector<StatementReport> reports;
  int function_count = 0;
  std::uint64_t digest = 0;
};

// Runs the statement suite over generated function tables ("f#<code>"): every
// table in All mode (throws BoundsTooLarge when the table space is not tiny),
// a seeded draw otherwise. Every requested statement yields a report, skipped
// ones included.
SuiteResult run_suite(const Instance& inst, const SuiteOptions& opts = {});

struct Finding {
  StatementId id{};
  std::string function_name;  // empty for instance-level statements
  std::optional<FunctionTable> function;
  std::string witness;
  bool hypotheses_met = false;
  std::uint64_t instance_index = 0;  // position in the examined stream
  std::uint64_t digest = 0;
  std::string instance_text;  // replayable serialization incl. the function
  bool oracle_confirmed = false;
};

struct HuntOutcome {
  std::vector<Finding> findings;
  std::uint64_t instances_examined = 0;
};

// Evaluates the targets on every instance of the family regardless of
// hypotheses, then reconfirms each violation by reparsing the serialized
// instance and re-running the statement against a fresh brute-force
// workspace; only confirmed findings are returned (at most one per statement
// per instance). Budget counts examined instances; empty targets are an
// error.
HuntOutcome hunt(const InstanceFamily& family, const std::vector<StatementId>& targets,
                 std::uint64_t budget);

}  // namespace ordhull
