#include "ordhull/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "ordhull/errors.hpp"
#include "ordhull/instance_io.hpp"
#include "ordhull/rng.hpp"
#include "ordhull/semigroup.hpp"

namespace ordhull {

namespace {

std::vector<std::string> gen_names(const char* prefix, int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

const std::vector<std::vector<int>>& permutations(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(out)).first->second;
}

std::string int_key(const std::vector<int>& v) {
  std::string s;
  s.reserve(v.size());
  for (int x : v) s.push_back(static_cast<char>(x));
  return s;
}

std::string semigroup_key(const FiniteSemigroup& s) {
  std::vector<int> t;
  t.reserve(static_cast<std::size_t>(s.size()) * s.size());
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) t.push_back(s.op(a, b));
  return std::to_string(s.size()) + ":" + int_key(t);
}

std::string poset_key(const Poset& p) {
  std::string s = std::to_string(p.size()) + ":";
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) s.push_back(p.leq(i, j) ? '1' : '0');
  return s;
}

// Order-complete posets on n labeled points, deduplicated by the
// lexicographically minimal relation matrix over all relabelings. Candidate
// relations only point upward in index (every poset admits such a labeling
// via a linear extension), which also makes the transitivity check a single
// i<j<k sweep.
std::vector<Poset> build_posets(int n) {
  std::vector<Poset> out;
  const auto names = gen_names("s", n);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const auto& perms = permutations(n);
  std::set<std::string> seen;

  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = true;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1u)
        leq[static_cast<std::size_t>(slots[b].first) * n + slots[b].second] = true;

    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = i + 1; j < n && transitive; ++j) {
        if (!leq[static_cast<std::size_t>(i) * n + j]) continue;
        for (int k = j + 1; k < n; ++k)
          if (leq[static_cast<std::size_t>(j) * n + k] &&
              !leq[static_cast<std::size_t>(i) * n + k]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;

    std::string best;
    for (const auto& pm : perms) {
      std::string key(static_cast<std::size_t>(n) * n, '0');
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<std::size_t>(i) * n + j])
            key[static_cast<std::size_t>(pm[i]) * n + pm[j]] = '1';
      if (best.empty() || key < best) best = std::move(key);
    }
    if (!seen.insert(best).second) continue;

    Poset p = Poset::from_relation(names, leq);
    if (p.is_order_complete()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<int>> poset_automorphisms(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> out;
  for (const auto& pm : permutations(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(i, j) != p.leq(pm[i], pm[j])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(pm);
  }
  return out;
}

std::vector<std::vector<int>> monotone_self_maps(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(f);
      return;
    }
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (p.leq(i, j) && !p.leq(v, f[static_cast<std::size_t>(j)])) ok = false;
        if (p.leq(j, i) && !p.leq(f[static_cast<std::size_t>(j)], v)) ok = false;
      }
      if (!ok) continue;
      f[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
    f[static_cast<std::size_t>(i)] = -1;
  };
  dfs(dfs, 0);
  return out;  // lexicographically sorted by construction
}

struct Quotient {
  FiniteSemigroup t;
  std::vector<int> map;  // acting index -> class index
};

// Quotients by every congruence, via restricted-growth partition strings.
// A partition is a congruence exactly when the class of a product depends
// only on the classes of the factors.
const std::vector<Quotient>& quotients(const FiniteSemigroup& h) {
  static std::map<std::string, std::vector<Quotient>> cache;
  const std::string key = semigroup_key(h);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int n = h.size();
  std::vector<Quotient> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    const int k = 1 + *std::max_element(rgs.begin(), rgs.end());
    std::vector<int> q(static_cast<std::size_t>(k) * k, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int& cell = q[static_cast<std::size_t>(rgs[static_cast<std::size_t>(a)]) * k +
                      rgs[static_cast<std::size_t>(b)]];
        const int c = rgs[static_cast<std::size_t>(h.op(a, b))];
        if (cell < 0) cell = c;
        else if (cell != c) return;  // product class is ambiguous: not a congruence
      }
    out.push_back({FiniteSemigroup::from_table(gen_names("t", k), q), rgs});
  };
  auto dfs = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      rgs[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  dfs(dfs, 1, 0);
  return cache.emplace(key, std::move(out)).first->second;
}

// All actions of h on nx points, as row-major h-by-x tables, canonical under
// carrier relabelings.
const std::vector<std::vector<int>>& x_action_pool(const FiniteSemigroup& h, int nx) {
  static std::map<std::string, std::vector<std::vector<int>>> cache;
  const std::string key = std::to_string(nx) + "|" + semigroup_key(h);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  int total = 1;
  for (int i = 0; i < nx; ++i) total *= nx;  // self-map codes in base nx
  auto apply = [nx](int code, int x) {
    for (int i = 0; i < x; ++i) code /= nx;
    return code % nx;
  };
  auto compose = [&](int a, int b) {  // (a o b)(x) = a(b(x))
    int code = 0, mul = 1;
    for (int x = 0; x < nx; ++x) {
      code += apply(a, apply(b, x)) * mul;
      mul *= nx;
    }
    return code;
  };
  int id_code = 0;
  for (int x = 0, mul = 1; x < nx; ++x, mul *= nx) id_code += x * mul;
  std::optional<std::pair<int, int>> pin;
  if (h.is_monoid()) pin = {*h.identity(), id_code};

  std::set<std::vector<int>> canon;
  enumerate_homomorphisms(h, total, compose, pin, [&](const std::vector<int>& hom) {
    std::vector<int> tab(static_cast<std::size_t>(h.size()) * nx);
    for (int a = 0; a < h.size(); ++a)
      for (int x = 0; x < nx; ++x)
        tab[static_cast<std::size_t>(a) * nx + x] = apply(hom[static_cast<std::size_t>(a)], x);
    std::vector<int> best;
    for (const auto& pm : permutations(nx)) {
      std::vector<int> rel(tab.size());
      for (int a = 0; a < h.size(); ++a)
        for (int x = 0; x < nx; ++x)
          rel[static_cast<std::size_t>(a) * nx + pm[x]] =
              pm[tab[static_cast<std::size_t>(a) * nx + x]];
      if (best.empty() || rel < best) best = std::move(rel);
    }
    canon.insert(std::move(best));
    return true;
  });
  std::vector<std::vector<int>> out(canon.begin(), canon.end());
  return cache.emplace(key, std::move(out)).first->second;
}

// All monotone actions of t on the poset, canonical under its order
// automorphisms. Targets are indices into the monotone self-map list, with
// composition resolved by lookup (monotone maps are composition-closed).
const std::vector<std::vector<int>>& s_action_pool(const FiniteSemigroup& t, const Poset& p) {
  static std::map<std::string, std::vector<std::vector<int>>> cache;
  const std::string key = semigroup_key(t) + "|" + poset_key(p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const int ns = p.size();
  const auto maps = monotone_self_maps(p);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index.emplace(maps[i], static_cast<int>(i));
  auto compose = [&](int a, int b) {
    std::vector<int> c(static_cast<std::size_t>(ns));
    for (int x = 0; x < ns; ++x)
      c[static_cast<std::size_t>(x)] =
          maps[static_cast<std::size_t>(a)][static_cast<std::size_t>(
              maps[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)])];
    return index.at(c);
  };
  std::optional<std::pair<int, int>> pin;
  if (t.is_monoid()) {
    std::vector<int> id(static_cast<std::size_t>(ns));
    std::iota(id.begin(), id.end(), 0);
    pin = {*t.identity(), index.at(id)};
  }
  const auto auts = poset_automorphisms(p);

  std::set<std::vector<int>> canon;
  enumerate_homomorphisms(t, static_cast<int>(maps.size()), compose, pin,
                          [&](const std::vector<int>& hom) {
                            std::vector<int> tab(static_cast<std::size_t>(t.size()) * ns);
                            for (int a = 0; a < t.size(); ++a)
                              for (int s = 0; s < ns; ++s)
                                tab[static_cast<std::size_t>(a) * ns + s] =
                                    maps[static_cast<std::size_t>(
                                        hom[static_cast<std::size_t>(a)])]
                                        [static_cast<std::size_t>(s)];
                            std::vector<int> best;
                            for (const auto& g : auts) {
                              std::vector<int> rel(tab.size());
                              for (int a = 0; a < t.size(); ++a)
                                for (int s = 0; s < ns; ++s)
                                  rel[static_cast<std::size_t>(a) * ns + g[s]] =
                                      g[tab[static_cast<std::size_t>(a) * ns + s]];
                              if (best.empty() || rel < best) best = std::move(rel);
                            }
                            canon.insert(std::move(best));
                            return true;
                          });
  std::vector<std::vector<int>> out(canon.begin(), canon.end());
  return cache.emplace(key, std::move(out)).first->second;
}

// Acting-component tables for random draws: exhaustive canonical tables below
// size 4; at size 4 the five groups plus a fixed seeded sample (the full
// catalog is out of exhaustive scope per the enumeration contract).
const std::vector<std::vector<int>>& acting_pool(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  if (n <= 3) {
    out = semigroup_tables(n);
  } else {
    std::set<std::vector<int>> seen;
    for (auto& t : group_tables(4)) seen.insert(t);
    Rng rng(0x53414d504c4534ull);
    for (auto& t : sample_semigroup_tables(4, 64, rng)) seen.insert(t);
    out.assign(seen.begin(), seen.end());
  }
  return cache.emplace(n, std::move(out)).first->second;
}

bool check_semigroup_constraints(const InstanceFamily& fam, const FiniteSemigroup& h) {
  if (fam.constraints.h_group && *fam.constraints.h_group != h.is_group()) return false;
  if (fam.constraints.h_monoid && *fam.constraints.h_monoid != h.is_monoid()) return false;
  return true;
}

bool check_weight_constraints(const InstanceFamily& fam, const FiniteSemigroup& t) {
  if (fam.constraints.t_group && *fam.constraints.t_group != t.is_group()) return false;
  if (fam.constraints.t_commutative && *fam.constraints.t_commutative != t.is_commutative())
    return false;
  return true;
}

void exhaustive_stream(const InstanceFamily& fam,
                       const std::function<bool(const Instance&)>& visit) {
  const FamilyBounds& b = fam.bounds;
  if (b.max_h < 1 || b.max_x < 1 || b.max_s < 1)
    throw BoundsTooLarge("bounds must be at least (1, 1, 1)");
  if (b.max_h > 4 || b.max_x > 3 || b.max_s > 4)
    throw BoundsTooLarge("exhaustive enumeration is capped at bounds (4, 3, 4)");

  const auto& posets = poset_catalog(b.max_s);
  for (int nh = 1; nh <= b.max_h; ++nh) {
    const auto htabs = nh <= 3 ? semigroup_tables(nh) : group_tables(nh);
    for (const auto& ht : htabs) {
      FiniteSemigroup h = FiniteSemigroup::from_table(gen_names("h", nh), ht);
      if (!check_semigroup_constraints(fam, h)) continue;
      const auto& quots = quotients(h);
      for (int nx = 1; nx <= b.max_x; ++nx) {
        for (const auto& xa : x_action_pool(h, nx)) {
          for (const auto& q : quots) {
            if (!check_weight_constraints(fam, q.t)) continue;
            for (const auto& p : posets) {
              for (const auto& sa : s_action_pool(q.t, p)) {
                Instance inst(h, gen_names("x", nx), xa, q.t, q.map, p, sa);
                if (!fam.constraints.admits(inst.flags())) continue;
                if (!visit(inst)) return;
              }
            }
          }
        }
      }
    }
  }
}

void random_stream(const InstanceFamily& fam,
                   const std::function<bool(const Instance&)>& visit) {
  const FamilyBounds& b = fam.bounds;
  if (b.max_h < 1 || b.max_x < 1 || b.max_s < 1)
    throw BoundsTooLarge("bounds must be at least (1, 1, 1)");
  if (b.max_h > 4 || b.max_x > 4 || b.max_s > 5)
    throw BoundsTooLarge("random generation is capped at bounds (4, 4, 5)");

  const auto& posets = poset_catalog(b.max_s);
  Rng rng(fam.seed);
  const long attempts_cap = 1000l + 1000l * fam.count;
  int emitted = 0;
  for (long attempt = 0; attempt < attempts_cap && emitted < fam.count; ++attempt) {
    const int nh = 1 + rng.below(b.max_h);
    const auto& pool = acting_pool(nh);
    FiniteSemigroup h =
        FiniteSemigroup::from_table(gen_names("h", nh), pool[rng.below(static_cast<int>(pool.size()))]);
    if (!check_semigroup_constraints(fam, h)) continue;
    const auto& quots = quotients(h);
    const Quotient& q = quots[static_cast<std::size_t>(rng.below(static_cast<int>(quots.size())))];
    if (!check_weight_constraints(fam, q.t)) continue;
    const int nx = 1 + rng.below(b.max_x);
    const auto& xacts = x_action_pool(h, nx);
    const auto& xa = xacts[static_cast<std::size_t>(rng.below(static_cast<int>(xacts.size())))];
    const Poset& p = posets[static_cast<std::size_t>(rng.below(static_cast<int>(posets.size())))];
    const auto& sacts = s_action_pool(q.t, p);
    const auto& sa = sacts[static_cast<std::size_t>(rng.below(static_cast<int>(sacts.size())))];
    Instance inst(h, gen_names("x", nx), xa, q.t, q.map, p, sa);
    if (!fam.constraints.admits(inst.flags())) continue;
    ++emitted;
    if (!visit(inst)) return;
  }
}

}  // namespace

bool FamilyConstraints::admits(const Instance::Flags& f) const {
  auto ok = [](const std::optional<bool>& want, bool have) { return !want || *want == have; };
  return ok(h_group, f.h_group) && ok(h_monoid, f.h_monoid) && ok(t_group, f.t_group) &&
         ok(t_commutative, f.t_commutative) && ok(free_action, f.free_action);
}

const std::vector<Poset>& poset_catalog(int max_n) {
  if (max_n < 1 || max_n > 5)
    throw BoundsTooLarge("poset catalog supports sizes 1 through 5");
  static std::map<int, std::vector<Poset>> cache;
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;
  std::vector<Poset> all;
  for (int n = 1; n <= max_n; ++n) {
    auto batch = build_posets(n);
    all.insert(all.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return cache.emplace(max_n, std::move(all)).first->second;
}

void enumerate_instances(const InstanceFamily& family,
                         const std::function<bool(const Instance&)>& visit) {
  if (family.mode == FamilyMode::Exhaustive) exhaustive_stream(family, visit);
  else random_stream(family, visit);
}

std::vector<Instance> collect_instances(const InstanceFamily& family) {
  std::vector<Instance> out;
  enumerate_instances(family, [&](const Instance& inst) {
    out.push_back(inst);
    return true;
  });
  return out;
}

SuiteResult run_suite(const Instance& inst, const SuiteOptions& opts) {
  EnvelopeWorkspace ws(inst);
  SuiteResult res;
  res.digest = instance_digest(inst);
  StatementOptions sopts;
  sopts.seed = opts.seed.value_or(res.digest);

  std::vector<StatementId> ids = opts.statements;
  if (ids.empty()) ids.assign(kAllStatements.begin(), kAllStatements.end());

  std::vector<NamedFunction> fns;
  const std::uint32_t total = ws.table_count();
  if (opts.f_mode == FunctionMode::All) {
    if (total > 20000u)
      throw BoundsTooLarge("full function sweep needs a tiny table space, got " +
                           std::to_string(total) + " tables");
    fns.reserve(total);
    for (std::uint32_t code = 0; code < total; ++code)
      fns.push_back({"f#" + std::to_string(code), ws.decode(code)});
  } else {
    const std::uint32_t want =
        std::min<std::uint32_t>(total, static_cast<std::uint32_t>(std::max(opts.sample_count, 0)));
    Rng rng(sopts.seed ^ 0x7461626cull);
    std::set<std::uint32_t> codes;
    while (codes.size() < want)
      codes.insert(static_cast<std::uint32_t>(rng.next() % total));
    for (std::uint32_t code : codes) fns.push_back({"f#" + std::to_string(code), ws.decode(code)});
  }
  res.function_count = static_cast<int>(fns.size());
  res.reports = run_statements(inst, ws, ids, fns, sopts);
  return res;
}

HuntOutcome hunt(const InstanceFamily& family, const std::vector<StatementId>& targets,
                 std::uint64_t budget) {
  if (targets.empty()) throw Error("hunt needs at least one target statement");
  HuntOutcome out;
  if (budget == 0) return out;

  const bool needs_functions =
      std::any_of(targets.begin(), targets.end(), statement_takes_function);

  const auto scan_one = [&](const Instance& inst) {
    ++out.instances_examined;
    const std::uint64_t digest = instance_digest(inst);
    EnvelopeWorkspace ws(inst);
    StatementOptions sopts;
    sopts.seed = digest;

    std::vector<NamedFunction> fns;
    if (needs_functions) {
      const std::uint32_t total = ws.table_count();
      if (total <= 256) {
        for (std::uint32_t code = 0; code < total; ++code)
          fns.push_back({"f#" + std::to_string(code), ws.decode(code)});
      } else {
        Rng rng(digest ^ 0x68756e74ull);
        std::set<std::uint32_t> codes;
        while (codes.size() < 64)
          codes.insert(static_cast<std::uint32_t>(rng.next() % total));
        for (std::uint32_t code : codes)
          fns.push_back({"f#" + std::to_string(code), ws.decode(code)});
      }
    }

    const auto reports = run_statements(inst, ws, targets, fns, sopts);
    std::set<StatementId> already;
    for (const StatementReport& rep : reports) {
      if (!rep.evaluated || rep.holds) continue;
      if (already.count(rep.id)) continue;

      const NamedFunction* nf = nullptr;
      for (const NamedFunction& f : fns)
        if (f.name == rep.function_name) {
          nf = &f;
          break;
        }
      std::vector<NamedFunction> carry;
      if (nf) carry.push_back(*nf);
      std::string text = serialize_instance(inst, carry);

      bool confirmed = false;
      std::string witness = rep.witness;
      try {
        LoadedInstance replay = parse_instance(text);
        EnvelopeWorkspace ws2(replay.instance);
        StatementOptions sopts2;
        sopts2.seed = instance_digest(replay.instance);
        const StatementReport rep2 =
            check_statement(replay.instance, ws2, rep.id,
                            replay.functions.empty() ? nullptr : &replay.functions[0], sopts2);
        confirmed = rep2.evaluated && !rep2.holds;
        if (confirmed && !rep2.witness.empty()) witness = rep2.witness;
      } catch (const Error&) {
        confirmed = false;
      }
      if (!confirmed) continue;

      already.insert(rep.id);
      Finding fd;
      fd.id = rep.id;
      fd.function_name = rep.function_name;
      if (nf) fd.function = nf->table;
      fd.witness = std::move(witness);
      fd.hypotheses_met = rep.hypotheses_met;
      fd.instance_index = out.instances_examined - 1;
      fd.digest = digest;
      fd.instance_text = std::move(text);
      fd.oracle_confirmed = true;
      out.findings.push_back(std::move(fd));
    }
    return out.instances_examined < budget;
  };

  // The statements under hunt only bite when both semigroups are groups, so
  // exhaustive scans spend the budget on those instances first.
  const bool both_possible = family.constraints.h_group.value_or(true) &&
                             family.constraints.t_group.value_or(true);
  if (family.mode == FamilyMode::Exhaustive && both_possible) {
    InstanceFamily groups_first = family;
    groups_first.constraints.h_group = true;
    groups_first.constraints.t_group = true;
    enumerate_instances(groups_first, scan_one);
    const bool only_groups = family.constraints.h_group.value_or(false) &&
                             family.constraints.t_group.value_or(false);
    if (out.instances_examined < budget && !only_groups) {
      enumerate_instances(family, [&](const Instance& inst) {
        if (out.instances_examined >= budget) return false;
        if (inst.flags().h_group && inst.flags().t_group) return true;  // already scanned
        return scan_one(inst);
      });
    }
  } else {
    enumerate_instances(family, scan_one);
  }
  return out;
}

}  // namespace ordhull
