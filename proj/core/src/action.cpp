#include "ordhull/action.hpp"

#include <algorithm>
#include <set>

#include "ordhull/errors.hpp"

namespace ordhull {

namespace {

std::string point_label(const std::vector<std::string>& names, int x) {
  if (x >= 0 && x < static_cast<int>(names.size())) return names[x];
  return "#" + std::to_string(x);
}

ActionCheck check_ax0_ax1(const FiniteSemigroup& s, int npoints, const std::vector<int>& table,
                          const std::vector<std::string>& point_names) {
  const int n = s.size();
  for (int h1 = 0; h1 < n; ++h1) {
    for (int h2 = 0; h2 < n; ++h2) {
      for (int x = 0; x < npoints; ++x) {
        const int lhs = table[h1 * npoints + table[h2 * npoints + x]];
        const int rhs = table[s.op(h1, h2) * npoints + x];
        if (lhs != rhs) {
          return {false, "Ax0",
                  s.name(h1) + "(" + s.name(h2) + "·" + point_label(point_names, x) + ") = " +
                      point_label(point_names, lhs) + " but (" + s.name(h1) + s.name(h2) +
                      ")·" + point_label(point_names, x) + " = " + point_label(point_names, rhs)};
        }
      }
    }
  }
  if (s.identity()) {
    const int e = *s.identity();
    for (int x = 0; x < npoints; ++x) {
      if (table[e * npoints + x] != x) {
        return {false, "Ax1",
                "unit moves " + point_label(point_names, x) + " to " +
                    point_label(point_names, table[e * npoints + x])};
      }
    }
  }
  return {};
}

}  // namespace

ActionCheck validate_plain_action(const FiniteSemigroup& s, int npoints,
                                  const std::vector<int>& table,
                                  const std::vector<std::string>& point_names) {
  if (npoints <= 0) return {false, "Ax0", "empty point set"};
  if (static_cast<int>(table.size()) != s.size() * npoints)
    return {false, "Ax0", "action table has wrong shape"};
  for (int v : table)
    if (v < 0 || v >= npoints) return {false, "Ax0", "action value out of range"};
  return check_ax0_ax1(s, npoints, table, point_names);
}

ActionCheck validate_ordered_action(const FiniteSemigroup& t, const Poset& values,
                                    const std::vector<int>& table) {
  ActionCheck basic = validate_plain_action(t, values.size(), table, values.names());
  if (!basic.ok) return basic;
  const int m = values.size();
  for (int h = 0; h < t.size(); ++h) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        if (values.leq(a, b) && !values.leq(table[h * m + a], table[h * m + b])) {
          return {false, "Ax2",
                  t.name(h) + " is not monotone: " + values.name(a) + " <= " + values.name(b) +
                      " but " + values.name(table[h * m + a]) + " <= " +
                      values.name(table[h * m + b]) + " fails"};
        }
      }
    }
  }
  return {};
}

std::vector<int> extend_to_completion(const FiniteSemigroup& t, const CompletedPoset& c,
                                      const std::vector<int>& base_table) {
  const int base = c.base().size();
  const int m = c.size();
  std::vector<int> out(static_cast<size_t>(t.size()) * m);
  for (int h = 0; h < t.size(); ++h) {
    for (int v = 0; v < m; ++v) {
      out[h * m + v] = c.is_symbol(v) ? v : base_table[h * base + v];
    }
  }
  return out;
}

std::vector<int> orbit(const FiniteSemigroup& s, const std::vector<int>& table, int npoints,
                       int x) {
  std::set<int> seen;
  for (int h = 0; h < s.size(); ++h) seen.insert(table[h * npoints + x]);
  return {seen.begin(), seen.end()};
}

std::vector<int> stabilizer(const FiniteSemigroup& s, const std::vector<int>& table, int npoints,
                            int x) {
  std::vector<int> out;
  for (int h = 0; h < s.size(); ++h)
    if (table[h * npoints + x] == x) out.push_back(h);
  return out;
}

std::vector<int> stationary_points(const FiniteSemigroup& s, const std::vector<int>& table,
                                   int npoints) {
  std::vector<int> out;
  for (int x = 0; x < npoints; ++x) {
    bool fixed = true;
    for (int h = 0; h < s.size() && fixed; ++h) fixed = table[h * npoints + x] == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

bool is_free_action(const FiniteSemigroup& s, const std::vector<int>& table, int npoints) {
  const std::optional<int> e = s.identity();
  for (int x = 0; x < npoints; ++x) {
    for (int h = 0; h < s.size(); ++h) {
      if (table[h * npoints + x] == x && !(e && h == *e)) return false;
    }
  }
  return true;
}

OrbitPartition orbit_partition(const FiniteSemigroup& s, const std::vector<int>& table,
                               int npoints, const std::vector<std::string>& point_names) {
  if (!s.is_group()) throw NotAGroup("orbit decomposition needs a group action");
  OrbitPartition part;
  part.orbit_of.assign(npoints, -1);
  // Group orbits are the classes of an equivalence, so a single sweep that
  // claims every still-unassigned member works.
  struct Rep {
    std::string name;
    std::vector<int> members;
  };
  std::vector<Rep> raw;
  for (int x = 0; x < npoints; ++x) {
    if (part.orbit_of[x] >= 0) continue;
    std::vector<int> members = orbit(s, table, npoints, x);
    Rep rep;
    rep.name = point_names[members.front()];
    for (int y : members) {
      part.orbit_of[y] = static_cast<int>(raw.size());
      if (point_names[y] < rep.name) rep.name = point_names[y];
    }
    rep.members = std::move(members);
    raw.push_back(std::move(rep));
  }
  std::vector<int> order(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return raw[a].name < raw[b].name; });
  std::vector<int> renum(raw.size());
  for (size_t i = 0; i < order.size(); ++i) {
    const Rep& rep = raw[order[i]];
    int rep_point = rep.members.front();
    for (int y : rep.members)
      if (point_names[y] == rep.name) rep_point = y;
    part.reps.push_back(rep_point);
    part.orbits.push_back(rep.members);
    renum[order[i]] = static_cast<int>(i);
  }
  for (int& o : part.orbit_of) o = renum[o];
  return part;
}

}  // namespace ordhull
