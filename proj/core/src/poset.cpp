#include "ordhull/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace ordhull {

namespace {

std::map<std::string, int, std::less<>> index_names(const std::vector<std::string>& names) {
  if (names.empty()) throw EmptyPoset("poset needs at least one element");
  if (names.size() > static_cast<std::size_t>(Poset::kMaxSize))
    throw ParseError("poset too large (max " + std::to_string(Poset::kMaxSize) + " elements)");
  std::map<std::string, int, std::less<>> idx;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], static_cast<int>(i)).second)
      throw ParseError("duplicate poset element '" + names[i] + "'");
  }
  return idx;
}

}  // namespace

std::optional<int> Poset::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Poset Poset::from_pairs(std::vector<std::string> names,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  auto idx = index_names(names);
  const int n = static_cast<int>(names.size());
  std::vector<std::uint32_t> up(n, 0);
  for (int i = 0; i < n; ++i) up[i] |= 1u << i;
  for (const auto& [a, b] : pairs) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw ParseError("unknown poset element '" + a + "'");
    if (ib == idx.end()) throw ParseError("unknown poset element '" + b + "'");
    up[ia->second] |= 1u << ib->second;
  }
  // Transitive closure over the up-masks.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      std::uint32_t acc = up[i];
      std::uint32_t rest = acc;
      while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        acc |= up[j];
      }
      if (acc != up[i]) {
        up[i] = acc;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((up[i] >> j) & 1u) && ((up[j] >> i) & 1u))
        throw AntisymmetryViolation(names[i], names[j]);

  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = (up[i] >> j) & 1u;
  return from_relation(std::move(names), leq);
}

Poset Poset::from_relation(std::vector<std::string> names, const std::vector<bool>& leq) {
  index_names(names);  // size/duplicate checks
  const int n = static_cast<int>(names.size());
  if (leq.size() != static_cast<std::size_t>(n) * n) throw ParseError("relation matrix has wrong size");
  auto at = [&](int a, int b) { return leq[static_cast<std::size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i)
    if (!at(i, i)) throw ParseError("relation not reflexive at '" + names[i] + "'");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && at(i, j) && at(j, i)) throw AntisymmetryViolation(names[i], names[j]);
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (at(j, k) && !at(i, k))
          throw ParseError("relation not transitive: " + names[i] + " <= " + names[j] + " <= " +
                           names[k]);
    }
  Poset p;
  p.names_ = std::move(names);
  p.up_.assign(n, 0);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j)) {
        p.up_[i] |= 1u << j;
        p.down_[j] |= 1u << i;
      }
  return p;
}

std::optional<int> Poset::least() const {
  return least_of((size() == 32) ? ~0u : ((1u << size()) - 1u));
}

std::optional<int> Poset::greatest() const {
  return greatest_of((size() == 32) ? ~0u : ((1u << size()) - 1u));
}

std::optional<int> Poset::least_of(std::uint32_t mask) const {
  for (std::uint32_t rest = mask; rest;) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if ((mask & ~up_[i]) == 0) return i;  // i below every member of mask
  }
  return std::nullopt;
}

std::optional<int> Poset::greatest_of(std::uint32_t mask) const {
  for (std::uint32_t rest = mask; rest;) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if ((mask & ~down_[i]) == 0) return i;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < size() && direct; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      if (direct) out.emplace_back(a, b);
    }
  return out;
}

Poset Poset::dual() const {
  Poset p;
  p.names_ = names_;
  p.up_ = down_;
  p.down_ = up_;
  return p;
}

Poset Poset::relabeled(const std::vector<int>& perm) const {
  const int n = size();
  std::vector<std::string> names(n);
  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i) names[perm[i]] = names_[i];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (this->leq(i, j)) leq[static_cast<std::size_t>(perm[i]) * n + perm[j]] = true;
  return from_relation(std::move(names), leq);
}

Poset::CompletenessReport Poset::order_completeness() const {
  const int n = size();
  CompletenessReport rep;
  auto fail = [&](std::uint32_t mask, const char* kind) {
    rep.complete = false;
    rep.detail = kind;
    for (std::uint32_t rest = mask; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      rep.witness.push_back(i);
      rep.detail += std::string(rep.witness.size() == 1 ? " {" : ", ") + names_[i];
    }
    rep.detail += "}";
  };
  auto check_mask = [&](std::uint32_t mask) {
    std::uint32_t lb = ~0u, ub = ~0u;
    for (std::uint32_t rest = mask; rest;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      lb &= down_[i];
      ub &= up_[i];
    }
    if (ub && !least_of(ub)) {
      fail(mask, "bounded above but has no supremum:");
      return false;
    }
    if (lb && !greatest_of(lb)) {
      fail(mask, "bounded below but has no infimum:");
      return false;
    }
    return true;
  };
  if (n <= kExhaustiveLimit) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
      if (!check_mask(mask)) return rep;
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!check_mask((1u << a) | (1u << b))) return rep;
  }
  return rep;
}

CompletedPoset::CompletedPoset(Poset base) : base_(std::move(base)) {
  base_complete_ = base_.is_order_complete();
  const int n = base_.size();
  auto least = base_.least();
  auto greatest = base_.greatest();
  bottom_added_ = !least.has_value();
  top_added_ = !greatest.has_value();
  m_ = n + (bottom_added_ ? 1 : 0) + (top_added_ ? 1 : 0);
  const int bot_sym = n;
  const int top_sym = n + (bottom_added_ ? 1 : 0);
  bottom_index_ = bottom_added_ ? bot_sym : *least;
  top_index_ = top_added_ ? top_sym : *greatest;

  up_.assign(m_, 0);
  down_.assign(m_, 0);
  auto set = [&](int a, int b) {
    up_[a] |= 1u << b;
    down_[b] |= 1u << a;
  };
  for (int i = 0; i < m_; ++i) set(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (base_.leq(i, j)) set(i, j);
  for (int i = 0; i < m_; ++i) {
    if (bottom_added_) set(bot_sym, i);
    if (top_added_) set(i, top_sym);
  }

  if (base_complete_) {
    join_.assign(static_cast<std::size_t>(m_) * m_, 0);
    meet_.assign(static_cast<std::size_t>(m_) * m_, 0);
    Poset full = underlying_poset();
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) {
        auto j = full.least_of(up_[a] & up_[b]);
        auto m = full.greatest_of(down_[a] & down_[b]);
        // Order-complete base + adjoined extrema form a complete lattice.
        if (!j || !m) throw Error("internal: completed order is not a lattice");
        join_[static_cast<std::size_t>(a) * m_ + b] = static_cast<std::uint8_t>(*j);
        meet_[static_cast<std::size_t>(a) * m_ + b] = static_cast<std::uint8_t>(*m);
      }
  }
}

std::string CompletedPoset::name(int i) const {
  if (is_bottom_symbol(i)) return "BOT";
  if (is_top_symbol(i)) return "TOP";
  return base_.name(i);
}

std::optional<int> CompletedPoset::index_of(std::string_view token) const {
  if (token == "BOT") {
    if (bottom_added_) return bottom_index_;
    return std::nullopt;
  }
  if (token == "TOP") {
    if (top_added_) return top_index_;
    return std::nullopt;
  }
  return base_.index_of(token);
}

void CompletedPoset::require_complete() const {
  if (!base_complete_)
    throw NotOrderComplete("base poset is not order-complete: " +
                           base_.order_completeness().detail);
}

int CompletedPoset::join(int a, int b) const {
  require_complete();
  return join_[static_cast<std::size_t>(a) * m_ + b];
}

int CompletedPoset::meet(int a, int b) const {
  require_complete();
  return meet_[static_cast<std::size_t>(a) * m_ + b];
}

int CompletedPoset::sup_mask(std::uint32_t mask) const {
  require_complete();
  int acc = bottom_index_;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    acc = join_[static_cast<std::size_t>(acc) * m_ + i];
  }
  return acc;
}

int CompletedPoset::inf_mask(std::uint32_t mask) const {
  require_complete();
  int acc = top_index_;
  while (mask) {
    int i = std::countr_zero(mask);
    mask &= mask - 1;
    acc = meet_[static_cast<std::size_t>(acc) * m_ + i];
  }
  return acc;
}

int CompletedPoset::sup(const std::vector<int>& elems) const {
  std::uint32_t mask = 0;
  for (int e : elems) mask |= 1u << e;
  return sup_mask(mask);
}

int CompletedPoset::inf(const std::vector<int>& elems) const {
  std::uint32_t mask = 0;
  for (int e : elems) mask |= 1u << e;
  return inf_mask(mask);
}

Poset CompletedPoset::underlying_poset() const {
  std::vector<std::string> names(m_);
  std::vector<bool> leq(static_cast<std::size_t>(m_) * m_, false);
  for (int i = 0; i < m_; ++i) names[i] = name(i);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) leq[static_cast<std::size_t>(i) * m_ + j] = this->leq(i, j);
  return Poset::from_relation(std::move(names), leq);
}

}  // namespace ordhull
