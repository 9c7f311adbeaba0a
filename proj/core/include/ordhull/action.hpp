#pragma once

#include <string>
#include <vector>

#include "ordhull/poset.hpp"
#include "ordhull/semigroup.hpp"

namespace ordhull {

// Left actions are flat tables: table[h * npoints + x] = h·x. A plain action
// must satisfy Ax0 (h1(h2 x) = (h1 h2)x) and, when the semigroup has a unit,
// Ax1 (1x = x). An ordered action additionally satisfies Ax2 (monotone in the
// point for every h).

struct ActionCheck {
  bool ok = true;
  std::string axiom;  // "Ax0" | "Ax1" | "Ax2" when !ok
  std::string detail;
};

ActionCheck validate_plain_action(const FiniteSemigroup& s, int npoints,
                                  const std::vector<int>& table,
                                  const std::vector<std::string>& point_names);

ActionCheck validate_ordered_action(const FiniteSemigroup& t, const Poset& values,
                                    const std::vector<int>& table);

// Extends a base-poset action to the completion; adjoined symbols are fixed
// by every element. The result indexes completed elements and preserves Ax2
// across symbol comparisons by construction.
std::vector<int> extend_to_completion(const FiniteSemigroup& t, const CompletedPoset& c,
                                      const std::vector<int>& base_table);

// {h·x : h}, sorted. Contains x itself whenever the semigroup has a unit.
std::vector<int> orbit(const FiniteSemigroup& s, const std::vector<int>& table, int npoints,
                       int x);
// {h : h·x = x}, sorted.
std::vector<int> stabilizer(const FiniteSemigroup& s, const std::vector<int>& table, int npoints,
                            int x);
// {x : orbit(x) = {x}}.
std::vector<int> stationary_points(const FiniteSemigroup& s, const std::vector<int>& table,
                                   int npoints);
// Every stabilizer trivial ({1}, or empty when there is no unit).
bool is_free_action(const FiniteSemigroup& s, const std::vector<int>& table, int npoints);

struct OrbitPartition {
  std::vector<int> reps;                 // one per orbit, ordered by point name
  std::vector<std::vector<int>> orbits;  // aligned with reps, sorted indices
  std::vector<int> orbit_of;             // point -> orbit number
};
// Group actions only (orbits of a non-group need not partition the set);
// throws NotAGroup. Representatives are the lexicographically least point
// names, the deterministic stand-in for a choice function.
OrbitPartition orbit_partition(const FiniteSemigroup& s, const std::vector<int>& table,
                               int npoints, const std::vector<std::string>& point_names);

}  // namespace ordhull
