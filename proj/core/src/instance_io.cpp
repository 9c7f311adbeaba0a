#include "ordhull/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "ordhull/errors.hpp"
#include "ordhull/rng.hpp"

namespace ordhull {

namespace {

using nlohmann::ordered_json;

const ordered_json& field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing section '") + key + "'");
  return *it;
}

std::string string_value(const ordered_json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

double number_value(const ordered_json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  return j.get<double>();
}

std::vector<std::string> parse_names(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be a list");
  std::vector<std::string> names;
  names.reserve(j.size());
  for (const auto& e : j) names.push_back(string_value(e, what + " entry"));
  return names;
}

int index_in(const std::vector<std::string>& names, const std::string& token,
             const std::string& what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return static_cast<int>(i);
  throw ParseError(what + " references unknown element '" + token + "'");
}

FiniteSemigroup parse_semigroup(const ordered_json& sec, const std::string& what) {
  if (!sec.is_object()) throw ParseError(what + " must be a map");
  auto names = parse_names(field(sec, "elements"), what + " elements");
  const auto& tab = field(sec, "table");
  if (!tab.is_array() || tab.size() != names.size() * names.size())
    throw ParseError(what + " table must be a row-major list of " +
                     std::to_string(names.size() * names.size()) + " element names");
  std::vector<int> table;
  table.reserve(tab.size());
  for (const auto& cell : tab)
    table.push_back(index_in(names, string_value(cell, what + " table cell"), what + " table"));
  return FiniteSemigroup::from_table(std::move(names), std::move(table));
}

// Fills a row-major |outer| x |inner| table from {outer: {inner: inner}}.
std::vector<int> parse_maps(const ordered_json& sec, const std::string& what,
                            const std::vector<std::string>& outer,
                            const std::vector<std::string>& inner) {
  if (!sec.is_object()) throw ParseError(what + " must be a map");
  std::vector<int> table(outer.size() * inner.size(), -1);
  for (const auto& [key, sub] : sec.items()) {
    const int o = index_in(outer, key, what);
    if (!sub.is_object()) throw ParseError(what + " entry for '" + key + "' must be a map");
    for (const auto& [from, to] : sub.items()) {
      const int a = index_in(inner, from, what + " for '" + key + "'");
      const int b =
          index_in(inner, string_value(to, what + " image"), what + " for '" + key + "'");
      table[static_cast<std::size_t>(o) * inner.size() + a] = b;
    }
  }
  for (std::size_t o = 0; o < outer.size(); ++o)
    for (std::size_t i = 0; i < inner.size(); ++i)
      if (table[o * inner.size() + i] < 0)
        throw ParseError(what + " for '" + outer[o] + "' is missing '" + inner[i] + "'");
  return table;
}

RealModel parse_demo(const ordered_json& d) {
  if (!d.is_object()) throw ParseError("demo must be a map");
  RealModel m;
  const std::string kind = string_value(field(d, "kind"), "demo kind");
  if (kind == "pos_homog") m.kind = RealKind::PosHomog;
  else if (kind == "bounded_homog") m.kind = RealKind::BoundedHomog;
  else if (kind == "exp_homog") m.kind = RealKind::ExpHomog;
  else throw ParseError("unknown demo kind '" + kind + "'");
  m.p = number_value(field(d, "p"), "demo p");
  if (m.kind == RealKind::BoundedHomog) m.r0 = number_value(field(d, "r0"), "demo r0");
  for (const auto& e : field(d, "sample_h")) m.sample_h.push_back(number_value(e, "demo sample_h"));
  for (const auto& e : field(d, "sample_x")) m.sample_x.push_back(number_value(e, "demo sample_x"));
  if (auto it = d.find("tolerance"); it != d.end())
    m.tolerance = number_value(*it, "demo tolerance");
  check_real_model(m);
  return m;
}

ordered_json semigroup_json(const FiniteSemigroup& s) {
  ordered_json sec;
  sec["elements"] = s.names();
  ordered_json tab = ordered_json::array();
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b) tab.push_back(s.name(s.op(a, b)));
  sec["table"] = std::move(tab);
  return sec;
}

ordered_json demo_json(const RealModel& m) {
  ordered_json d;
  switch (m.kind) {
    case RealKind::PosHomog: d["kind"] = "pos_homog"; break;
    case RealKind::BoundedHomog: d["kind"] = "bounded_homog"; break;
    case RealKind::ExpHomog: d["kind"] = "exp_homog"; break;
  }
  d["p"] = m.p;
  if (m.kind == RealKind::BoundedHomog) d["r0"] = m.r0;
  d["sample_h"] = m.sample_h;
  d["sample_x"] = m.sample_x;
  d["tolerance"] = m.tolerance;
  return d;
}

}  // namespace

LoadedInstance parse_instance(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance file must be a JSON object");

  FiniteSemigroup h = parse_semigroup(field(j, "semigroup_H"), "semigroup_H");
  FiniteSemigroup t = parse_semigroup(field(j, "semigroup_T"), "semigroup_T");

  const auto& hom = field(j, "hom");
  if (!hom.is_object()) throw ParseError("hom must be a map");
  std::vector<int> weight(static_cast<std::size_t>(h.size()), -1);
  for (const auto& [key, val] : hom.items()) {
    const int a = index_in(h.names(), key, "hom");
    weight[static_cast<std::size_t>(a)] =
        index_in(t.names(), string_value(val, "hom image"), "hom");
  }
  for (int a = 0; a < h.size(); ++a)
    if (weight[static_cast<std::size_t>(a)] < 0)
      throw ParseError("hom is missing element '" + h.name(a) + "'");

  auto carrier = parse_names(field(j, "carrier"), "carrier");
  auto xtab = parse_maps(field(j, "action_X"), "action_X", h.names(), carrier);

  const auto& ps = field(j, "poset_S");
  if (!ps.is_object()) throw ParseError("poset_S must be a map");
  auto snames = parse_names(field(ps, "elements"), "poset_S elements");
  for (const auto& nm : snames)
    if (nm == "BOT" || nm == "TOP")
      throw ParseError("poset element name '" + nm + "' is reserved for adjoined symbols");
  const auto& cov = field(ps, "covers");
  if (!cov.is_array()) throw ParseError("poset_S covers must be a list of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : cov) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("poset_S covers entries must be [lower, upper] pairs");
    pairs.emplace_back(string_value(e[0], "cover"), string_value(e[1], "cover"));
  }
  Poset values = Poset::from_pairs(snames, pairs);

  auto stab = parse_maps(field(j, "action_S"), "action_S", t.names(), snames);

  Instance inst(std::move(h), std::move(carrier), std::move(xtab), std::move(t),
                std::move(weight), std::move(values), std::move(stab));

  std::vector<NamedFunction> fns;
  if (auto it = j.find("functions"); it != j.end()) {
    if (!it->is_object()) throw ParseError("functions must be a map");
    for (const auto& [name, body] : it->items()) {
      if (!body.is_object())
        throw ParseError("function '" + name + "' must be a map of point to value");
      FunctionTable ft;
      ft.values.assign(static_cast<std::size_t>(inst.carrier_size()), -1);
      for (const auto& [pt, val] : body.items()) {
        auto x = inst.carrier_index(pt);
        if (!x) throw ParseError("function '" + name + "' references unknown point '" + pt + "'");
        const std::string token = string_value(val, "function '" + name + "' value");
        auto v = inst.completed().index_of(token);
        if (!v)
          throw ParseError("function '" + name + "' value '" + token +
                           "' is not a poset element or an adjoined symbol");
        ft.values[static_cast<std::size_t>(*x)] = *v;
      }
      for (int x = 0; x < inst.carrier_size(); ++x)
        if (ft.values[static_cast<std::size_t>(x)] < 0)
          throw ParseError("function '" + name + "' is missing point '" +
                           inst.carrier_name(x) + "'");
      fns.push_back({name, std::move(ft)});
    }
  }

  std::optional<RealModel> demo;
  if (auto it = j.find("demo"); it != j.end()) demo = parse_demo(*it);

  return {std::move(inst), std::move(fns), std::move(demo)};
}

LoadedInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

nlohmann::ordered_json instance_to_json(const Instance& inst,
                                        const std::vector<NamedFunction>& functions,
                                        const std::optional<RealModel>& demo) {
  ordered_json j;
  j["semigroup_H"] = semigroup_json(inst.acting());
  j["semigroup_T"] = semigroup_json(inst.weights());

  ordered_json hom;
  for (int a = 0; a < inst.acting().size(); ++a)
    hom[inst.acting().name(a)] = inst.weights().name(inst.weight_of(a));
  j["hom"] = std::move(hom);

  j["carrier"] = inst.carrier_names();

  ordered_json ax;
  for (int a = 0; a < inst.acting().size(); ++a) {
    ordered_json row;
    for (int x = 0; x < inst.carrier_size(); ++x)
      row[inst.carrier_name(x)] = inst.carrier_name(inst.act_point(a, x));
    ax[inst.acting().name(a)] = std::move(row);
  }
  j["action_X"] = std::move(ax);

  const Poset& s = inst.values();
  ordered_json ps;
  ps["elements"] = s.names();
  ordered_json cov = ordered_json::array();
  for (const auto& [lo, hi] : s.covers())
    cov.push_back(ordered_json::array({s.name(lo), s.name(hi)}));
  ps["covers"] = std::move(cov);
  j["poset_S"] = std::move(ps);

  ordered_json as;
  const auto& vt = inst.value_table();
  for (int t = 0; t < inst.weights().size(); ++t) {
    ordered_json row;
    for (int v = 0; v < s.size(); ++v)
      row[s.name(v)] = s.name(vt[static_cast<std::size_t>(t) * s.size() + v]);
    as[inst.weights().name(t)] = std::move(row);
  }
  j["action_S"] = std::move(as);

  if (!functions.empty()) {
    ordered_json fns;
    for (const NamedFunction& nf : functions) {
      ordered_json body;
      for (int x = 0; x < inst.carrier_size(); ++x)
        body[inst.carrier_name(x)] = inst.completed().name(nf.table(x));
      fns[nf.name] = std::move(body);
    }
    j["functions"] = std::move(fns);
  }

  if (demo) j["demo"] = demo_json(*demo);
  return j;
}

std::string serialize_instance(const Instance& inst, const std::vector<NamedFunction>& functions,
                               const std::optional<RealModel>& demo) {
  return instance_to_json(inst, functions, demo).dump(2) + "\n";
}

std::uint64_t instance_digest(const Instance& inst) {
  const std::string text = serialize_instance(inst);
  return fnv1a64(text.data(), text.size());
}

}  // namespace ordhull
