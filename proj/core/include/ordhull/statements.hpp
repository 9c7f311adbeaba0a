#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ordhull/envelope.hpp"
#include "ordhull/instance.hpp"

namespace ordhull {

// One checkable claim about an instance (and, for most of them, one function
// table on it).  Identifiers are stable strings used by the CLI and reports.
enum class StatementId {
  Lemma1,     // weights distribute over sup/inf of value subsets
  Prop1,      // class closure under pointwise sup/inf of families
  Cor1,       // envelopes land in the expected classes
  ChainE,     // envelope sandwich around f, with collapse for homogeneous f
  Thm1L,      // lower subhomogeneous envelope fixes exactly SUB members
  Thm1U,      // upper superhomogeneous envelope fixes exactly SUPER members
  Thm1Equiv,  // f in HGC  <=>  lower HGC envelope is f  <=>  upper is f
  Thm2L,      // exactness criterion for the lower member-valued envelope
  Thm2U,      // exactness criterion for the upper member-valued envelope
  Thm2LU,     // two-sided exactness criterion
  Prop3,      // regularized minorant/majorant class memberships
  Thm3I,      // regularizations realize the HGC envelopes and sandwich f
  Thm3II,     // member-valued lower envelope equals the regularized minorant
  Thm3III,    // member-valued upper envelope equals the regularized majorant
  Prop4,      // translates of f stay in the class of f
  Thm4,       // relations checked on a generating set propagate to all of H
  Task1L,     // nontriviality of HGC envelopes matches the regularizations
  Facts212,   // image of a point orbit sits inside the value orbit
};

inline constexpr std::array<StatementId, 18> kAllStatements = {
    StatementId::Lemma1,  StatementId::Prop1,   StatementId::Cor1,
    StatementId::ChainE,  StatementId::Thm1L,   StatementId::Thm1U,
    StatementId::Thm1Equiv, StatementId::Thm2L, StatementId::Thm2U,
    StatementId::Thm2LU,  StatementId::Prop3,   StatementId::Thm3I,
    StatementId::Thm3II,  StatementId::Thm3III, StatementId::Prop4,
    StatementId::Thm4,    StatementId::Task1L,  StatementId::Facts212,
};

std::string to_string(StatementId id);
StatementId parse_statement(const std::string& token);  // throws UnknownStatement

// LEMMA1 and PROP1 quantify over the instance alone; everything else is
// checked per function table.
bool statement_takes_function(StatementId id);

// Outcome of one check.  Hypotheses are recorded but never gate evaluation:
// every clause that is well defined gets computed, so instances outside the
// hypotheses can surface as findings instead of silently passing.
struct StatementReport {
  StatementId id{};
  std::string function_name;  // empty for instance-level statements

  bool evaluated = false;     // false: some clause is not even well defined
  std::string skip_reason;

  bool hypotheses_met = false;
  std::vector<std::string> unmet_hypotheses;

  bool holds = false;
  std::string witness;        // first violation found, empty when holds

  bool counts_as_failure() const { return evaluated && hypotheses_met && !holds; }
  bool is_finding() const { return evaluated && !hypotheses_met && !holds; }
  std::string verdict() const;  // "skipped" | "holds" | "fails" | "finding"
};

struct StatementOptions {
  std::uint64_t seed = 0;
  // Families of class members (PROP1) are scanned exhaustively while the
  // member list has at most this many entries; past it, a fixed number of
  // seeded random subfamilies is drawn instead.
  int family_exhaustive_limit = 10;
  int family_samples = 48;
};

// Runs the requested statements against every named function (instance-level
// statements run once, with an empty function name).  Envelopes and
// regularizations are computed lazily and shared across statements.
std::vector<StatementReport> run_statements(const Instance& inst,
                                            EnvelopeWorkspace& ws,
                                            const std::vector<StatementId>& ids,
                                            const std::vector<NamedFunction>& functions,
                                            const StatementOptions& opts = {});

StatementReport check_statement(const Instance& inst, EnvelopeWorkspace& ws,
                                StatementId id, const NamedFunction* function,
                                const StatementOptions& opts = {});

}  // namespace ordhull
