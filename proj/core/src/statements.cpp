#include "ordhull/statements.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ordhull/action.hpp"
#include "ordhull/errors.hpp"
#include "ordhull/rng.hpp"

namespace ordhull {

namespace {

struct IdName {
  StatementId id;
  const char* name;
};

constexpr IdName kIdNames[] = {
    {StatementId::Lemma1, "LEMMA1"},   {StatementId::Prop1, "PROP1"},
    {StatementId::Cor1, "COR1"},       {StatementId::ChainE, "CHAIN_E"},
    {StatementId::Thm1L, "THM1_L"},    {StatementId::Thm1U, "THM1_U"},
    {StatementId::Thm1Equiv, "THM1_EQUIV"}, {StatementId::Thm2L, "THM2_L"},
    {StatementId::Thm2U, "THM2_U"},    {StatementId::Thm2LU, "THM2_LU"},
    {StatementId::Prop3, "PROP3"},     {StatementId::Thm3I, "THM3_I"},
    {StatementId::Thm3II, "THM3_II"},  {StatementId::Thm3III, "THM3_III"},
    {StatementId::Prop4, "PROP4"},     {StatementId::Thm4, "THM4"},
    {StatementId::Task1L, "TASK1L"},   {StatementId::Facts212, "FACTS212"},
};

constexpr const char* kHypHGroup = "acting semigroup is a group";
constexpr const char* kHypTGroup = "weight semigroup is a group";
constexpr const char* kHypTComm = "weight semigroup is commutative";
constexpr const char* kHypFHomog = "f is homogeneous into the completion";

const char* class_word(FunctionClass k) {
  switch (k) {
    case FunctionClass::HG: return "member-valued homogeneous";
    case FunctionClass::HGC: return "homogeneous";
    case FunctionClass::SUB: return "subhomogeneous";
    case FunctionClass::SUPER: return "superhomogeneous";
  }
  return "?";
}

std::string table_text(const Instance& inst, const FunctionTable& f) {
  std::ostringstream out;
  out << '{';
  for (int x = 0; x < inst.carrier_size(); ++x) {
    if (x) out << ", ";
    out << inst.carrier_name(x) << '=' << inst.completed().name(f(x));
  }
  out << '}';
  return out.str();
}

std::string subset_text(const CompletedPoset& c, std::uint32_t mask) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < c.size(); ++i)
    if (mask >> i & 1u) {
      if (!first) out << ", ";
      first = false;
      out << c.name(i);
    }
  out << '}';
  return out.str();
}

bool table_leq(const CompletedPoset& c, const FunctionTable& a, const FunctionTable& b) {
  for (std::size_t x = 0; x < a.values.size(); ++x)
    if (!c.leq(a.values[x], b.values[x])) return false;
  return true;
}

FunctionTable const_table(int n, int v) {
  FunctionTable f;
  f.values.assign(static_cast<std::size_t>(n), v);
  return f;
}

// Envelopes and regularizations of one function, computed on demand and
// shared across the statements probing it.
struct FunctionContext {
  const NamedFunction* nf = nullptr;
  ClassSet cls;
  std::array<std::optional<FunctionTable>, 4> lo, hi;
  std::optional<FunctionTable> reg_min, reg_max;
};

class Runner {
 public:
  Runner(const Instance& inst, EnvelopeWorkspace& ws, const StatementOptions& opts)
      : inst_(inst), ws_(ws), opts_(opts) {}

  StatementReport run(StatementId id, const NamedFunction* nf);

 private:
  const Instance& inst_;
  EnvelopeWorkspace& ws_;
  const StatementOptions& opts_;
  std::map<const NamedFunction*, FunctionContext> contexts_;

  FunctionContext& context(const NamedFunction* nf) {
    auto [it, fresh] = contexts_.try_emplace(nf);
    FunctionContext& c = it->second;
    if (fresh) {
      c.nf = nf;
      c.cls = classify(inst_, nf->table);
    }
    return c;
  }

  const FunctionTable& lower(FunctionContext& c, FunctionClass k) {
    auto& slot = c.lo[static_cast<std::size_t>(k)];
    if (!slot) slot = ws_.lower(c.nf->table, k);
    return *slot;
  }
  const FunctionTable& upper(FunctionContext& c, FunctionClass k) {
    auto& slot = c.hi[static_cast<std::size_t>(k)];
    if (!slot) slot = ws_.upper(c.nf->table, k);
    return *slot;
  }
  const FunctionTable& minorant(FunctionContext& c) {
    if (!c.reg_min) c.reg_min = regularized_minorant(inst_, c.nf->table);
    return *c.reg_min;
  }
  const FunctionTable& majorant(FunctionContext& c) {
    if (!c.reg_max) c.reg_max = regularized_majorant(inst_, c.nf->table);
    return *c.reg_max;
  }

  void hyp_t_group(StatementReport& r) {
    r.hypotheses_met = inst_.flags().t_group;
    if (!r.hypotheses_met) r.unmet_hypotheses.push_back(kHypTGroup);
  }
  void hyp_both_groups(StatementReport& r) {
    const auto& fl = inst_.flags();
    r.hypotheses_met = fl.h_group && fl.t_group;
    if (!fl.h_group) r.unmet_hypotheses.push_back(kHypHGroup);
    if (!fl.t_group) r.unmet_hypotheses.push_back(kHypTGroup);
  }
  // PROP3, THM3_*, TASK1L and FACTS212 need invertible weights before their
  // clauses are even well defined; everything else evaluates unconditionally.
  bool skip_without_group_t(StatementReport& r, const char* what) {
    if (inst_.flags().t_group) return false;
    r.evaluated = false;
    r.skip_reason = std::string(what) + " undefined: weight semigroup is not a group";
    return true;
  }

  void lemma1(StatementReport& r);
  void prop1(StatementReport& r);
  void cor1(StatementReport& r, FunctionContext& c);
  void chain_e(StatementReport& r, FunctionContext& c);
  void thm1_l(StatementReport& r, FunctionContext& c);
  void thm1_u(StatementReport& r, FunctionContext& c);
  void thm1_equiv(StatementReport& r, FunctionContext& c);
  void thm2_l(StatementReport& r, FunctionContext& c);
  void thm2_u(StatementReport& r, FunctionContext& c);
  void thm2_lu(StatementReport& r, FunctionContext& c);
  void prop3(StatementReport& r, FunctionContext& c);
  void thm3_i(StatementReport& r, FunctionContext& c);
  void thm3_ii(StatementReport& r, FunctionContext& c);
  void thm3_iii(StatementReport& r, FunctionContext& c);
  void prop4(StatementReport& r, FunctionContext& c);
  void thm4(StatementReport& r, FunctionContext& c);
  void task1_l(StatementReport& r, FunctionContext& c);
  void facts212(StatementReport& r, FunctionContext& c);
};

// Weights distribute over sup and inf of arbitrary value subsets. The
// inequality halves follow from monotonicity alone; the equality halves are
// the group claim. Both are checked on every instance.
void Runner::lemma1(StatementReport& r) {
  r.evaluated = true;
  hyp_t_group(r);
  const auto& c = inst_.completed();
  const auto& t = inst_.weights();
  const int m = c.size();

  std::vector<std::uint32_t> masks;
  if (m <= 12) {
    masks.resize(std::size_t{1} << m);
    std::iota(masks.begin(), masks.end(), 0u);
  } else {
    // Too many subsets to enumerate: keep the structured ones and a seeded
    // random batch. Deterministic for a fixed seed.
    const std::uint32_t all = m >= 32 ? ~0u : (1u << m) - 1;
    std::set<std::uint32_t> keep = {0u, all};
    for (int i = 0; i < m; ++i) keep.insert(1u << i);
    Rng rng(opts_.seed ^ 0x4c454d4131ull);
    while (keep.size() < static_cast<std::size_t>(m) + 2 + 256)
      keep.insert(static_cast<std::uint32_t>(rng.next()) & all);
    masks.assign(keep.begin(), keep.end());
  }

  r.holds = true;
  for (int tt = 0; tt < t.size() && r.holds; ++tt) {
    for (std::uint32_t mask : masks) {
      int sup_im = c.min_index(), inf_im = c.max_index();
      for (std::uint32_t rest = mask; rest;) {
        int s = std::countr_zero(rest);
        rest &= rest - 1;
        int ts = inst_.act_value(tt, s);
        sup_im = c.join(sup_im, ts);
        inf_im = c.meet(inf_im, ts);
      }
      const int t_sup = inst_.act_value(tt, c.sup_mask(mask));
      const int t_inf = inst_.act_value(tt, c.inf_mask(mask));
      const char* breach = nullptr;
      if (!c.leq(sup_im, t_sup)) breach = "sup of image is not below the weighted sup";
      else if (!c.leq(t_inf, inf_im)) breach = "weighted inf is not below the inf of the image";
      else if (sup_im != t_sup) breach = "sup gap";
      else if (inf_im != t_inf) breach = "inf gap";
      if (breach) {
        std::ostringstream w;
        w << "weight " << t.name(tt) << " on " << subset_text(c, mask) << ": " << breach
          << " (sup image=" << c.name(sup_im) << ", weighted sup=" << c.name(t_sup)
          << ", inf image=" << c.name(inf_im) << ", weighted inf=" << c.name(t_inf) << ")";
        r.witness = w.str();
        r.holds = false;
        break;
      }
    }
  }
}

// Pointwise sup of a subhomogeneous family is subhomogeneous, dually for inf
// of a superhomogeneous family; both directions for homogeneous families.
void Runner::prop1(StatementReport& r) {
  r.evaluated = true;
  hyp_t_group(r);
  const auto& c = inst_.completed();
  const int n = inst_.carrier_size();

  struct Part {
    FunctionClass source;
    bool join_fold;
    FunctionClass target;
    const char* label;
  };
  const Part parts[] = {
      {FunctionClass::SUB, true, FunctionClass::SUB, "sup of subhomogeneous family"},
      {FunctionClass::SUPER, false, FunctionClass::SUPER, "inf of superhomogeneous family"},
      {FunctionClass::HGC, true, FunctionClass::HGC, "sup of homogeneous family"},
      {FunctionClass::HGC, false, FunctionClass::HGC, "inf of homogeneous family"},
  };

  r.holds = true;
  for (const Part& part : parts) {
    const auto& codes = ws_.members(part.source);
    std::vector<FunctionTable> mem;
    mem.reserve(codes.size());
    for (std::uint32_t code : codes) mem.push_back(ws_.decode(code));
    const int k = static_cast<int>(mem.size());
    const int unit = part.join_fold ? c.min_index() : c.max_index();

    auto check_family = [&](const std::vector<int>& chosen) {
      FunctionTable g = const_table(n, unit);
      for (int idx : chosen)
        for (int x = 0; x < n; ++x)
          g.values[x] = part.join_fold ? c.join(g.values[x], mem[idx].values[x])
                                       : c.meet(g.values[x], mem[idx].values[x]);
      if (in_class(inst_, g, part.target)) return true;
      std::ostringstream w;
      w << part.label << " with " << chosen.size() << " members is not "
        << class_word(part.target) << ": " << table_text(inst_, g);
      r.witness = w.str();
      return false;
    };

    if (k <= opts_.family_exhaustive_limit) {
      for (std::uint32_t mask = 0; mask < (1u << k) && r.holds; ++mask) {
        std::vector<int> chosen;
        for (int i = 0; i < k; ++i)
          if (mask >> i & 1u) chosen.push_back(i);
        if (!check_family(chosen)) r.holds = false;
      }
    } else {
      Rng rng(opts_.seed ^ fnv1a64(part.label, std::char_traits<char>::length(part.label)));
      std::vector<int> everyone(static_cast<std::size_t>(k));
      std::iota(everyone.begin(), everyone.end(), 0);
      if (!check_family({}) || !check_family(everyone)) {
        r.holds = false;
      } else {
        for (int s = 0; s + 2 < opts_.family_samples && r.holds; ++s) {
          std::vector<int> chosen;
          std::uint64_t word = 0;
          int bits = 0;
          for (int i = 0; i < k; ++i) {
            if (bits == 0) {
              word = rng.next();
              bits = 64;
            }
            if (word & 1u) chosen.push_back(i);
            word >>= 1;
            --bits;
          }
          if (!check_family(chosen)) r.holds = false;
        }
      }
    }
    if (!r.holds) break;
  }
}

// The lower envelopes over HG, HGC and SUB are subhomogeneous; the upper ones
// over HG, HGC and SUPER are superhomogeneous; the HG/HGC envelopes on both
// sides are in fact homogeneous.
void Runner::cor1(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  hyp_t_group(r);
  struct Want {
    bool lower_side;
    FunctionClass over;
    FunctionClass target;
  };
  const Want wants[] = {
      {true, FunctionClass::HG, FunctionClass::SUB},
      {true, FunctionClass::HGC, FunctionClass::SUB},
      {true, FunctionClass::SUB, FunctionClass::SUB},
      {false, FunctionClass::HG, FunctionClass::SUPER},
      {false, FunctionClass::HGC, FunctionClass::SUPER},
      {false, FunctionClass::SUPER, FunctionClass::SUPER},
      {true, FunctionClass::HG, FunctionClass::HGC},
      {true, FunctionClass::HGC, FunctionClass::HGC},
      {false, FunctionClass::HG, FunctionClass::HGC},
      {false, FunctionClass::HGC, FunctionClass::HGC},
  };
  r.holds = true;
  for (const Want& want : wants) {
    const FunctionTable& env =
        want.lower_side ? lower(c, want.over) : upper(c, want.over);
    if (!in_class(inst_, env, want.target)) {
      std::ostringstream w;
      w << (want.lower_side ? "lower" : "upper") << " envelope over the "
        << class_word(want.over) << " class is not " << class_word(want.target) << ": "
        << table_text(inst_, env);
      r.witness = w.str();
      r.holds = false;
      break;
    }
  }
}

// lE_hg <= lE_hgc <= lE_sub <= f <= uE_super <= uE_hgc <= uE_hg, and all six
// collapse onto f when f is member-valued homogeneous.
void Runner::chain_e(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  r.hypotheses_met = true;
  const auto& cp = inst_.completed();
  const FunctionTable& f = c.nf->table;

  struct Link {
    const FunctionTable* table;
    const char* label;
  };
  const Link chain[] = {
      {&lower(c, FunctionClass::HG), "lower member-valued envelope"},
      {&lower(c, FunctionClass::HGC), "lower homogeneous envelope"},
      {&lower(c, FunctionClass::SUB), "lower subhomogeneous envelope"},
      {&f, "f"},
      {&upper(c, FunctionClass::SUPER), "upper superhomogeneous envelope"},
      {&upper(c, FunctionClass::HGC), "upper homogeneous envelope"},
      {&upper(c, FunctionClass::HG), "upper member-valued envelope"},
  };
  r.holds = true;
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i) {
    if (!table_leq(cp, *chain[i].table, *chain[i + 1].table)) {
      r.witness = std::string("chain break: ") + chain[i].label + " is not below " +
                  chain[i + 1].label;
      r.holds = false;
      return;
    }
  }
  if (c.cls.hg) {
    for (const Link& link : chain) {
      if (!(*link.table == f)) {
        r.witness = std::string("member-valued homogeneous f is not fixed by its ") +
                    link.label + ": " + table_text(inst_, *link.table);
        r.holds = false;
        return;
      }
    }
  }
}

// The lower subhomogeneous envelope fixes f exactly when f is subhomogeneous.
void Runner::thm1_l(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  r.hypotheses_met = true;
  const bool fixed = lower(c, FunctionClass::SUB) == c.nf->table;
  r.holds = fixed == c.cls.sub;
  if (!r.holds)
    r.witness = fixed ? "lower subhomogeneous envelope fixes a non-subhomogeneous f"
                      : "subhomogeneous f moved by its lower envelope: " +
                            table_text(inst_, lower(c, FunctionClass::SUB));
}

void Runner::thm1_u(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  r.hypotheses_met = true;
  const bool fixed = upper(c, FunctionClass::SUPER) == c.nf->table;
  r.holds = fixed == c.cls.super;
  if (!r.holds)
    r.witness = fixed ? "upper superhomogeneous envelope fixes a non-superhomogeneous f"
                      : "superhomogeneous f moved by its upper envelope: " +
                            table_text(inst_, upper(c, FunctionClass::SUPER));
}

// f homogeneous <=> lower homogeneous envelope is f <=> upper one is f.
void Runner::thm1_equiv(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  hyp_t_group(r);
  const bool member = c.cls.hgc;
  const bool low = lower(c, FunctionClass::HGC) == c.nf->table;
  const bool up = upper(c, FunctionClass::HGC) == c.nf->table;
  r.holds = member == low && low == up;
  if (!r.holds) {
    std::ostringstream w;
    w << "homogeneous=" << member << ", lower fixes f=" << low << ", upper fixes f=" << up;
    r.witness = w.str();
  }
}

// Exactness of the lower member-valued envelope: it fixes f iff either f is
// homogeneous with no bottom-symbol values, or a bottom symbol was adjoined
// and f is constantly that symbol.
void Runner::thm2_l(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  hyp_both_groups(r);
  const auto& cp = inst_.completed();
  const FunctionTable& f = c.nf->table;
  const bool fixed = lower(c, FunctionClass::HG) == f;
  const bool no_bottom = std::none_of(f.values.begin(), f.values.end(),
                                      [&](int v) { return cp.is_bottom_symbol(v); });
  const bool clause1 = no_bottom && c.cls.hgc;
  const bool clause2 =
      cp.bottom_added() && f == const_table(inst_.carrier_size(), cp.min_index());
  r.holds = fixed == (clause1 || clause2);
  if (!r.holds)
    r.witness = fixed ? "lower member-valued envelope fixes f but no exactness clause applies"
                      : "exactness clause applies yet the lower member-valued envelope is " +
                            table_text(inst_, lower(c, FunctionClass::HG));
}

void Runner::thm2_u(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  hyp_both_groups(r);
  const auto& cp = inst_.completed();
  const FunctionTable& f = c.nf->table;
  const bool fixed = upper(c, FunctionClass::HG) == f;
  const bool no_top = std::none_of(f.values.begin(), f.values.end(),
                                   [&](int v) { return cp.is_top_symbol(v); });
  const bool clause1 = no_top && c.cls.hgc;
  const bool clause2 =
      cp.top_added() && f == const_table(inst_.carrier_size(), cp.max_index());
  r.holds = fixed == (clause1 || clause2);
  if (!r.holds)
    r.witness = fixed ? "upper member-valued envelope fixes f but no exactness clause applies"
                      : "exactness clause applies yet the upper member-valued envelope is " +
                            table_text(inst_, upper(c, FunctionClass::HG));
}

// Two-sided exactness: both member-valued envelopes fix f iff f is
// member-valued homogeneous, or constantly an adjoined symbol.
void Runner::thm2_lu(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  hyp_both_groups(r);
  const auto& cp = inst_.completed();
  const FunctionTable& f = c.nf->table;
  const int n = inst_.carrier_size();
  const bool fixed =
      lower(c, FunctionClass::HG) == f && upper(c, FunctionClass::HG) == f;
  const bool rhs = c.cls.hg ||
                   (cp.bottom_added() && f == const_table(n, cp.min_index())) ||
                   (cp.top_added() && f == const_table(n, cp.max_index()));
  r.holds = fixed == rhs;
  if (!r.holds)
    r.witness = fixed ? "both member-valued envelopes fix f but no clause applies"
                      : "a clause applies yet a member-valued envelope moves f";
}

// The regularized minorant is superhomogeneous, the majorant subhomogeneous,
// and with an acting group both are homogeneous.
void Runner::prop3(StatementReport& r, FunctionContext& c) {
  if (skip_without_group_t(r, "regularizations")) return;
  r.evaluated = true;
  r.hypotheses_met = inst_.flags().h_group;
  if (!r.hypotheses_met) r.unmet_hypotheses.push_back(kHypHGroup);

  struct Want {
    const FunctionTable* table;
    const char* label;
    FunctionClass target;
  };
  const Want wants[] = {
      {&minorant(c), "regularized minorant", FunctionClass::SUPER},
      {&majorant(c), "regularized majorant", FunctionClass::SUB},
      {&minorant(c), "regularized minorant", FunctionClass::HGC},
      {&majorant(c), "regularized majorant", FunctionClass::HGC},
  };
  r.holds = true;
  for (const Want& want : wants) {
    if (!in_class(inst_, *want.table, want.target)) {
      r.witness = std::string(want.label) + " is not " + class_word(want.target) + ": " +
                  table_text(inst_, *want.table);
      r.holds = false;
      break;
    }
  }
}

// The regularizations realize the homogeneous envelopes and sandwich f.
void Runner::thm3_i(StatementReport& r, FunctionContext& c) {
  if (skip_without_group_t(r, "regularizations")) return;
  r.evaluated = true;
  hyp_both_groups(r);
  const auto& cp = inst_.completed();
  const FunctionTable& f = c.nf->table;
  r.holds = true;
  if (lower(c, FunctionClass::HGC) != minorant(c)) {
    r.witness = "lower homogeneous envelope " + table_text(inst_, lower(c, FunctionClass::HGC)) +
                " differs from the regularized minorant " + table_text(inst_, minorant(c));
    r.holds = false;
  } else if (upper(c, FunctionClass::HGC) != majorant(c)) {
    r.witness = "upper homogeneous envelope " + table_text(inst_, upper(c, FunctionClass::HGC)) +
                " differs from the regularized majorant " + table_text(inst_, majorant(c));
    r.holds = false;
  } else if (!table_leq(cp, minorant(c), f)) {
    r.witness = "regularized minorant is not below f";
    r.holds = false;
  } else if (!table_leq(cp, f, majorant(c))) {
    r.witness = "f is not below the regularized majorant";
    r.holds = false;
  }
}

// The lower member-valued envelope fixes the regularized minorant iff the
// minorant avoids the bottom symbol or is constantly an adjoined bottom.
void Runner::thm3_ii(StatementReport& r, FunctionContext& c) {
  if (skip_without_group_t(r, "regularizations")) return;
  r.evaluated = true;
  hyp_both_groups(r);
  const auto& cp = inst_.completed();
  const FunctionTable& fm = minorant(c);
  const FunctionTable env = ws_.lower(fm, FunctionClass::HG);
  const bool fixed = env == fm;
  const bool no_bottom = std::none_of(fm.values.begin(), fm.values.end(),
                                      [&](int v) { return cp.is_bottom_symbol(v); });
  const bool clause2 =
      cp.bottom_added() && fm == const_table(inst_.carrier_size(), cp.min_index());
  r.holds = fixed == (no_bottom || clause2);
  if (!r.holds)
    r.witness = fixed
                    ? "envelope fixes the minorant but no clause applies"
                    : "clause applies yet the lower member-valued envelope of the minorant is " +
                          table_text(inst_, env);
}

void Runner::thm3_iii(StatementReport& r, FunctionContext& c) {
  if (skip_without_group_t(r, "regularizations")) return;
  r.evaluated = true;
  hyp_both_groups(r);
  const auto& cp = inst_.completed();
  const FunctionTable& fj = majorant(c);
  const FunctionTable env = ws_.upper(fj, FunctionClass::HG);
  const bool fixed = env == fj;
  const bool no_top = std::none_of(fj.values.begin(), fj.values.end(),
                                   [&](int v) { return cp.is_top_symbol(v); });
  const bool clause2 =
      cp.top_added() && fj == const_table(inst_.carrier_size(), cp.max_index());
  r.holds = fixed == (no_top || clause2);
  if (!r.holds)
    r.witness = fixed
                    ? "envelope fixes the majorant but no clause applies"
                    : "clause applies yet the upper member-valued envelope of the majorant is " +
                          table_text(inst_, env);
}

// Weight translates of f stay in every class f belongs to.
void Runner::prop4(StatementReport& r, FunctionContext& c) {
  r.evaluated = true;
  r.hypotheses_met = inst_.flags().t_commutative;
  if (!r.hypotheses_met) r.unmet_hypotheses.push_back(kHypTComm);
  const auto& t = inst_.weights();
  const FunctionClass all[] = {FunctionClass::SUB, FunctionClass::SUPER, FunctionClass::HG,
                               FunctionClass::HGC};
  r.holds = true;
  for (int tt = 0; tt < t.size() && r.holds; ++tt) {
    FunctionTable g = left_multiply(inst_, tt, c.nf->table);
    for (FunctionClass k : all) {
      if (c.cls.contains(k) && !in_class(inst_, g, k)) {
        r.witness = "translate by " + t.name(tt) + " left the " + class_word(k) +
                    " class: " + table_text(inst_, g);
        r.holds = false;
        break;
      }
    }
  }
}

// A relation verified on a generating subset extends to the whole acting
// semigroup; for acting groups, equality on a group-generating subset makes
// f homogeneous.
void Runner::thm4(StatementReport& r, FunctionContext& c) {
  const auto& h = inst_.acting();
  if (h.size() > 16) {
    r.skip_reason = "generating-subset scan is infeasible for this acting semigroup";
    return;
  }
  r.evaluated = true;
  r.hypotheses_met = true;
  const FunctionTable& f = c.nf->table;

  const Relation rels[] = {Relation::Leq, Relation::Geq, Relation::Eq};
  const char* rel_names[] = {"<=", ">=", "="};
  bool full[3];
  for (int i = 0; i < 3; ++i) full[i] = satisfies_relation(inst_, f, rels[i]);

  r.holds = true;
  const std::uint32_t total = 1u << h.size();
  for (std::uint32_t mask = 1; mask < total && r.holds; ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < h.size(); ++i)
      if (mask >> i & 1u) gens.push_back(i);

    auto gen_text = [&] {
      std::string s = "{";
      for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? ", " : "") + h.name(gens[i]);
      return s + "}";
    };

    if (is_generating(h, gens, false)) {
      for (int i = 0; i < 3; ++i) {
        if (satisfies_relation_on(inst_, f, rels[i], gens) && !full[i]) {
          r.witness = std::string("relation ") + rel_names[i] + " holds on generating set " +
                      gen_text() + " but not on all of the acting semigroup";
          r.holds = false;
          break;
        }
      }
    }
    if (r.holds && inst_.flags().h_group && is_generating(h, gens, true)) {
      if (satisfies_relation_on(inst_, f, Relation::Eq, gens) && !c.cls.hgc) {
        r.witness = "equality holds on group-generating set " + gen_text() +
                    " but f is not homogeneous";
        r.holds = false;
      }
    }
  }
}

// The homogeneous envelopes are nontrivial exactly when the corresponding
// regularizations are.
void Runner::task1_l(StatementReport& r, FunctionContext& c) {
  if (skip_without_group_t(r, "regularizations")) return;
  r.evaluated = true;
  hyp_both_groups(r);
  const auto& cp = inst_.completed();
  const int n = inst_.carrier_size();
  const FunctionTable bot = const_table(n, cp.min_index());
  const FunctionTable top = const_table(n, cp.max_index());
  const bool env_low = lower(c, FunctionClass::HGC) != bot;
  const bool reg_low = minorant(c) != bot;
  const bool env_up = upper(c, FunctionClass::HGC) != top;
  const bool reg_up = majorant(c) != top;
  r.holds = env_low == reg_low && env_up == reg_up;
  if (!r.holds) {
    std::ostringstream w;
    w << "nontriviality mismatch: lower envelope " << (env_low ? "nontrivial" : "trivial")
      << " vs minorant " << (reg_low ? "nontrivial" : "trivial") << "; upper envelope "
      << (env_up ? "nontrivial" : "trivial") << " vs majorant "
      << (reg_up ? "nontrivial" : "trivial");
    r.witness = w.str();
  }
}

// The image of a point orbit lies in the value orbit of f at the point, with
// equality since the weight map is onto; stationary points map to stationary
// values.
void Runner::facts212(StatementReport& r, FunctionContext& c) {
  if (skip_without_group_t(r, "value orbits")) return;
  r.evaluated = true;
  r.hypotheses_met = c.cls.hgc;
  if (!r.hypotheses_met) r.unmet_hypotheses.push_back(kHypFHomog);

  const auto& h = inst_.acting();
  const auto& vo = inst_.value_orbits();
  const FunctionTable& f = c.nf->table;
  r.holds = true;
  for (int x = 0; x < inst_.carrier_size() && r.holds; ++x) {
    std::set<int> image;
    bool x_stationary = true;
    for (int hh = 0; hh < h.size(); ++hh) {
      int hx = inst_.act_point(hh, x);
      image.insert(f(hx));
      if (hx != x) x_stationary = false;
    }
    const auto& orb = vo.orbits[static_cast<std::size_t>(vo.orbit_of[f(x)])];
    const std::set<int> orbit_set(orb.begin(), orb.end());

    std::ostringstream w;
    w << "at point " << inst_.carrier_name(x) << ": ";
    if (!std::includes(orbit_set.begin(), orbit_set.end(), image.begin(), image.end())) {
      w << "f maps the point orbit outside the value orbit of f(x)";
    } else if (orbit_set.size() == 1 && image != std::set<int>{f(x)}) {
      w << "f(x) is stationary yet the orbit image is not {f(x)}";
    } else if (image != orbit_set) {
      w << "orbit image differs from the value orbit despite the onto weight map";
    } else if (x_stationary && orbit_set.size() != 1) {
      w << "stationary point with non-stationary value";
    } else {
      continue;
    }
    r.witness = w.str();
    r.holds = false;
  }
}

StatementReport Runner::run(StatementId id, const NamedFunction* nf) {
  StatementReport r;
  r.id = id;
  if (nf) r.function_name = nf->name;
  switch (id) {
    case StatementId::Lemma1: lemma1(r); break;
    case StatementId::Prop1: prop1(r); break;
    case StatementId::Cor1: cor1(r, context(nf)); break;
    case StatementId::ChainE: chain_e(r, context(nf)); break;
    case StatementId::Thm1L: thm1_l(r, context(nf)); break;
    case StatementId::Thm1U: thm1_u(r, context(nf)); break;
    case StatementId::Thm1Equiv: thm1_equiv(r, context(nf)); break;
    case StatementId::Thm2L: thm2_l(r, context(nf)); break;
    case StatementId::Thm2U: thm2_u(r, context(nf)); break;
    case StatementId::Thm2LU: thm2_lu(r, context(nf)); break;
    case StatementId::Prop3: prop3(r, context(nf)); break;
    case StatementId::Thm3I: thm3_i(r, context(nf)); break;
    case StatementId::Thm3II: thm3_ii(r, context(nf)); break;
    case StatementId::Thm3III: thm3_iii(r, context(nf)); break;
    case StatementId::Prop4: prop4(r, context(nf)); break;
    case StatementId::Thm4: thm4(r, context(nf)); break;
    case StatementId::Task1L: task1_l(r, context(nf)); break;
    case StatementId::Facts212: facts212(r, context(nf)); break;
  }
  return r;
}

}  // namespace

std::string to_string(StatementId id) {
  for (const IdName& e : kIdNames)
    if (e.id == id) return e.name;
  return "?";
}

StatementId parse_statement(const std::string& token) {
  for (const IdName& e : kIdNames)
    if (token == e.name) return e.id;
  throw UnknownStatement("unknown statement: " + token);
}

bool statement_takes_function(StatementId id) {
  return id != StatementId::Lemma1 && id != StatementId::Prop1;
}

std::string StatementReport::verdict() const {
  if (!evaluated) return "skipped";
  if (holds) return "holds";
  return hypotheses_met ? "fails" : "finding";
}

std::vector<StatementReport> run_statements(const Instance& inst, EnvelopeWorkspace& ws,
                                            const std::vector<StatementId>& ids,
                                            const std::vector<NamedFunction>& functions,
                                            const StatementOptions& opts) {
  Runner runner(inst, ws, opts);
  std::vector<StatementReport> out;
  for (StatementId id : ids) {
    if (!statement_takes_function(id)) {
      out.push_back(runner.run(id, nullptr));
      continue;
    }
    for (const NamedFunction& nf : functions) out.push_back(runner.run(id, &nf));
  }
  return out;
}

StatementReport check_statement(const Instance& inst, EnvelopeWorkspace& ws, StatementId id,
                                const NamedFunction* function, const StatementOptions& opts) {
  Runner runner(inst, ws, opts);
  if (statement_takes_function(id) && function == nullptr)
    throw Error(to_string(id) + " needs a function table");
  return runner.run(id, statement_takes_function(id) ? function : nullptr);
}

}  // namespace ordhull
