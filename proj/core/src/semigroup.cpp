#include "ordhull/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordhull {

bool is_associative(const std::vector<int>& table, int n) {
  auto op = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) return false;
  return true;
}

FiniteSemigroup FiniteSemigroup::from_table(std::vector<std::string> names,
                                            std::vector<int> table) {
  FiniteSemigroup s;
  s.n_ = static_cast<int>(names.size());
  if (s.n_ == 0) throw ParseError("semigroup needs at least one element");
  if (table.size() != static_cast<std::size_t>(s.n_) * s.n_)
    throw ParseError("Cayley table has wrong size");
  {
    std::set<std::string> seen;
    for (const auto& nm : names)
      if (!seen.insert(nm).second) throw ParseError("duplicate semigroup element '" + nm + "'");
  }
  for (int v : table)
    if (v < 0 || v >= s.n_) throw ParseError("Cayley table entry out of range");
  if (!is_associative(table, s.n_)) {
    for (int a = 0; a < s.n_; ++a)
      for (int b = 0; b < s.n_; ++b)
        for (int c = 0; c < s.n_; ++c) {
          auto op = [&](int x, int y) { return table[static_cast<std::size_t>(x) * s.n_ + y]; };
          if (op(op(a, b), c) != op(a, op(b, c)))
            throw NotAssociative("(" + names[a] + " " + names[b] + ") " + names[c] +
                                 " != " + names[a] + " (" + names[b] + " " + names[c] + ")");
        }
  }
  s.names_ = std::move(names);
  s.table_ = std::move(table);
  for (int e = 0; e < s.n_; ++e) {
    bool unit = true;
    for (int a = 0; a < s.n_ && unit; ++a)
      unit = s.op(e, a) == a && s.op(a, e) == a;
    if (unit) {
      s.identity_ = e;
      break;
    }
  }
  s.is_commutative_ = true;
  for (int a = 0; a < s.n_ && s.is_commutative_; ++a)
    for (int b = a + 1; b < s.n_; ++b)
      if (s.op(a, b) != s.op(b, a)) {
        s.is_commutative_ = false;
        break;
      }
  if (s.identity_) {
    s.inverse_.assign(s.n_, -1);
    s.is_group_ = true;
    for (int a = 0; a < s.n_; ++a) {
      for (int b = 0; b < s.n_; ++b)
        if (s.op(a, b) == *s.identity_ && s.op(b, a) == *s.identity_) {
          s.inverse_[a] = b;
          break;
        }
      if (s.inverse_[a] < 0) {
        s.is_group_ = false;
        s.inverse_.clear();
        break;
      }
    }
  }
  return s;
}

std::optional<int> FiniteSemigroup::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int FiniteSemigroup::inverse(int a) const {
  if (!is_group_) throw NotAGroup("inverse requested in a non-group semigroup");
  return inverse_[a];
}

HomCheck check_homomorphism(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                            const std::vector<int>& map) {
  HomCheck r;
  if (map.size() != static_cast<std::size_t>(src.size())) {
    r.ok = false;
    r.detail = "map size does not match source";
    return r;
  }
  for (int v : map)
    if (v < 0 || v >= dst.size()) {
      r.ok = false;
      r.detail = "map value out of target range";
      return r;
    }
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (map[src.op(a, b)] != dst.op(map[a], map[b])) {
        r.ok = false;
        r.detail = "not multiplicative at (" + src.name(a) + ", " + src.name(b) + ")";
        return r;
      }
  if (src.identity() && dst.identity() && map[*src.identity()] != *dst.identity()) {
    r.ok = false;
    r.detail = "unit " + src.name(*src.identity()) + " does not map to the target unit";
  }
  return r;
}

ImageRestriction restrict_to_image(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                                   const std::vector<int>& map) {
  auto chk = check_homomorphism(src, dst, map);
  if (!chk.ok) throw NotAHomomorphism(chk.detail);
  std::vector<int> embed;
  std::vector<int> to_new(dst.size(), -1);
  for (int a = 0; a < src.size(); ++a)
    if (to_new[map[a]] < 0) {
      to_new[map[a]] = static_cast<int>(embed.size());
      embed.push_back(map[a]);
    }
  const int k = static_cast<int>(embed.size());
  std::vector<std::string> names(k);
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) names[i] = dst.name(embed[i]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int prod = dst.op(embed[i], embed[j]);
      // The image is closed: every element is some 𝔥(a), and 𝔥(a)𝔥(b) = 𝔥(ab).
      table[static_cast<std::size_t>(i) * k + j] = to_new[prod];
    }
  std::vector<int> new_map(src.size());
  for (int a = 0; a < src.size(); ++a) new_map[a] = to_new[map[a]];
  return {FiniteSemigroup::from_table(std::move(names), std::move(table)), std::move(new_map),
          std::move(embed)};
}

namespace {
std::string fresh_unit_name(const std::vector<std::string>& names) {
  std::string cand = "1";
  while (std::find(names.begin(), names.end(), cand) != names.end()) cand += "'";
  return cand;
}
}  // namespace

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  if (s.is_monoid()) return s;
  const int n = s.size();
  std::vector<std::string> names = s.names();
  names.push_back(fresh_unit_name(names));
  std::vector<int> table(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      int v;
      if (a == n)
        v = b;
      else if (b == n)
        v = a;
      else
        v = s.op(a, b);
      table[static_cast<std::size_t>(a) * (n + 1) + b] = v;
    }
  return FiniteSemigroup::from_table(std::move(names), std::move(table));
}

AdjoinedHom adjoin_identity(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                            const std::vector<int>& map) {
  auto chk = check_homomorphism(src, dst, map);
  if (!chk.ok) throw NotAHomomorphism(chk.detail);
  if (!dst.identity()) throw TargetNotMonoid("cannot extend: target has no unit");
  FiniteSemigroup source = adjoin_identity(src);
  std::vector<int> extended = map;
  if (source.size() > src.size()) extended.push_back(*dst.identity());
  return {std::move(source), std::move(extended)};
}

std::vector<int> generate(const FiniteSemigroup& s, const std::vector<int>& generators,
                          bool group_mode) {
  if (generators.empty()) throw EmptyGenerators("generator set is empty");
  if (group_mode && !s.is_group())
    throw GroupModeOnNonGroup("group-mode generation in a non-group semigroup");
  std::vector<bool> in(s.size(), false);
  std::vector<int> work;
  auto add = [&](int e) {
    if (!in[e]) {
      in[e] = true;
      work.push_back(e);
    }
  };
  for (int g : generators) {
    add(g);
    if (group_mode) add(s.inverse(g));
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      add(s.op(work[i], work[j]));
      add(s.op(work[j], work[i]));
    }
  std::vector<int> out;
  for (int e = 0; e < s.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

bool is_generating(const FiniteSemigroup& s, const std::vector<int>& generators, bool group_mode) {
  return static_cast<int>(generate(s, generators, group_mode).size()) == s.size();
}

std::vector<int> canonical_table(const std::vector<int>& table, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<int> best = table, cand(table.size());
  do {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        cand[static_cast<std::size_t>(perm[a]) * n + perm[b]] =
            perm[table[static_cast<std::size_t>(a) * n + b]];
    if (cand < best) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<int>> semigroup_tables(int n) {
  if (n < 1 || n > 3) throw BoundsTooLarge("exhaustive semigroup enumeration only for n <= 3");
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  const std::size_t cells = table.size();
  while (true) {
    if (is_associative(table, n)) {
      auto canon = canonical_table(table, n);
      if (seen.insert(canon).second) out.push_back(canon);
    }
    std::size_t i = 0;
    for (; i < cells; ++i) {
      if (++table[i] < n) break;
      table[i] = 0;
    }
    if (i == cells) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> group_tables(int n) {
  auto cyclic = [](int k) {
    std::vector<int> t(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) t[static_cast<std::size_t>(i) * k + j] = (i + j) % k;
    return t;
  };
  switch (n) {
    case 1:
    case 2:
    case 3:
      return {cyclic(n)};
    case 4: {
      std::vector<int> klein(16);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) klein[static_cast<std::size_t>(i) * 4 + j] = i ^ j;
      return {cyclic(4), canonical_table(klein, 4)};
    }
    default:
      throw BoundsTooLarge("group catalog covers n <= 4");
  }
}

std::vector<std::vector<int>> sample_semigroup_tables(int n, int count, Rng& rng) {
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  const int cells = n * n;
  for (int attempt = 0; attempt < count; ++attempt) {
    std::vector<int> table(cells, -1);
    std::vector<int> order(cells);
    for (int i = 0; i < cells; ++i) order[i] = i;
    for (int i = cells - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);

    // Partial associativity: every triple whose three lookups are filled in
    // must already agree.
    auto consistent = [&]() {
      auto at = [&](int a, int b) { return table[a * n + b]; };
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            int ab = at(a, b), bc = at(b, c);
            if (ab < 0 || bc < 0) continue;
            int l = at(ab, c), r = at(a, bc);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
      return true;
    };
    std::function<bool(int)> fill = [&](int k) {
      if (k == cells) return true;
      int cell = order[k];
      int start = rng.below(n);
      for (int d = 0; d < n; ++d) {
        table[cell] = (start + d) % n;
        if (consistent() && fill(k + 1)) return true;
      }
      table[cell] = -1;
      return false;
    };
    if (fill(0)) {
      auto canon = canonical_table(table, n);
      if (seen.insert(canon).second) out.push_back(canon);
    }
  }
  return out;
}

void enumerate_homomorphisms(const FiniteSemigroup& src, int dst_size,
                             const std::function<int(int, int)>& mul,
                             std::optional<std::pair<int, int>> pin,
                             const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = src.size();
  std::vector<int> map(n, -1);
  std::vector<int> trail;
  bool stop = false;

  // Assign map[a] = v and propagate all products with already-assigned
  // elements; false on conflict. Assignments are recorded for rollback.
  std::function<bool(int, int)> assign = [&](int a, int v) {
    if (map[a] == v) return true;
    if (map[a] != -1) return false;
    map[a] = v;
    trail.push_back(a);
    for (int b = 0; b < n; ++b) {
      if (map[b] == -1) continue;
      if (!assign(src.op(a, b), mul(v, map[b]))) return false;
      if (!assign(src.op(b, a), mul(map[b], v))) return false;
    }
    return true;
  };
  std::function<void()> dfs = [&]() {
    if (stop) return;
    int e = -1;
    for (int i = 0; i < n; ++i)
      if (map[i] == -1) {
        e = i;
        break;
      }
    if (e == -1) {
      if (!visit(map)) stop = true;
      return;
    }
    for (int v = 0; v < dst_size && !stop; ++v) {
      std::size_t mark = trail.size();
      if (assign(e, v)) dfs();
      while (trail.size() > mark) {
        map[trail.back()] = -1;
        trail.pop_back();
      }
    }
  };

  if (pin) {
    if (!assign(pin->first, pin->second)) return;
  }
  dfs();
}

}  // namespace ordhull
