// Command-line front end: loads instance files, dispatches to the library,
// and prints reports either human-readable or as JSON lines. Exit codes:
// 0 success, 1 a checked statement failed or hunt findings were written,
// 2 invalid input (parse errors, axiom violations, bad flags, bad bounds).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordhull/continuum.hpp"
#include "ordhull/envelope.hpp"
#include "ordhull/errors.hpp"
#include "ordhull/instance_io.hpp"
#include "ordhull/report.hpp"
#include "ordhull/statements.hpp"
#include "ordhull/verifier.hpp"

namespace {

using namespace ordhull;

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

Record run_record(const std::string& command, const std::string& path) {
  Record rec;
  rec["kind"] = "run";
  rec["command"] = command;
  if (!path.empty()) rec["input"] = path;
  return rec;
}

Record instance_record(const Instance& inst, int function_count) {
  Record rec;
  rec["kind"] = "instance";
  rec["digest"] = hex64(instance_digest(inst));
  rec["acting_size"] = inst.acting().size();
  rec["weight_size"] = inst.weights().size();
  rec["carrier_size"] = inst.carrier_size();
  rec["value_size"] = inst.values().size();
  rec["completed_size"] = inst.completed().size();
  rec["functions"] = function_count;
  const Instance::Flags& fl = inst.flags();
  rec["acting_monoid"] = fl.h_monoid;
  rec["acting_group"] = fl.h_group;
  rec["weight_group"] = fl.t_group;
  rec["weight_commutative"] = fl.t_commutative;
  rec["free_action"] = fl.free_action;
  return rec;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<StatementId> select_statements(const std::string& spec) {
  if (spec == "all") return {kAllStatements.begin(), kAllStatements.end()};
  std::vector<StatementId> out;
  for (const std::string& tok : split_list(spec)) out.push_back(parse_statement(tok));
  if (out.empty()) throw Error("empty statement list");
  return out;
}

std::vector<NamedFunction> select_functions(const std::vector<NamedFunction>& all,
                                            const std::string& spec) {
  if (spec == "all") return all;
  std::vector<NamedFunction> out;
  for (const std::string& name : split_list(spec)) {
    bool found = false;
    for (const NamedFunction& nf : all)
      if (nf.name == name) {
        out.push_back(nf);
        found = true;
        break;
      }
    if (!found) throw Error("unknown function: " + name);
  }
  return out;
}

const NamedFunction& require_function(const std::vector<NamedFunction>& all,
                                      const std::string& name) {
  for (const NamedFunction& nf : all)
    if (nf.name == name) return nf;
  throw Error("unknown function: " + name);
}

FunctionClass parse_class(const std::string& token) {
  if (token == "hg") return FunctionClass::HG;
  if (token == "hgc") return FunctionClass::HGC;
  if (token == "sub") return FunctionClass::SUB;
  if (token == "super") return FunctionClass::SUPER;
  throw Error("unknown class: " + token);
}

// ------------------------------------------------------------------ commands

int cmd_validate(const std::string& path, std::vector<Record>& records) {
  LoadedInstance li = load_instance(path);
  records.push_back(run_record("validate", path));
  records.push_back(instance_record(li.instance, static_cast<int>(li.functions.size())));
  Record ok;
  ok["kind"] = "validated";
  ok["ok"] = true;
  ok["demo"] = li.demo.has_value();
  records.push_back(std::move(ok));
  return 0;
}

int cmd_envelope(const std::string& path, const std::string& fname, const std::string& cls,
                 const std::string& side, const std::string& algo,
                 std::vector<Record>& records) {
  LoadedInstance li = load_instance(path);
  const NamedFunction& nf = require_function(li.functions, fname);
  const FunctionClass c = parse_class(cls);
  EnvelopeAlgorithm alg;
  if (algo == "oracle")
    alg = EnvelopeAlgorithm::Oracle;
  else if (algo == "orbitwise")
    alg = EnvelopeAlgorithm::Orbitwise;
  else
    throw Error("unknown algorithm: " + algo);
  if (side != "lower" && side != "upper") throw Error("unknown side: " + side);

  records.push_back(run_record("envelope", path));
  records.push_back(instance_record(li.instance, static_cast<int>(li.functions.size())));
  records.push_back(table_record(li.instance, "function " + nf.name, nf.table));
  const FunctionTable env = side == "lower" ? lower_envelope(li.instance, nf.table, c, alg)
                                            : upper_envelope(li.instance, nf.table, c, alg);
  records.push_back(
      table_record(li.instance, side + " " + cls + " envelope of " + nf.name, env));
  return 0;
}

int cmd_regularize(const std::string& path, const std::string& fname, const std::string& side,
                   std::vector<Record>& records) {
  LoadedInstance li = load_instance(path);
  const NamedFunction& nf = require_function(li.functions, fname);
  if (side != "min" && side != "max" && side != "both") throw Error("unknown side: " + side);

  records.push_back(run_record("regularize", path));
  records.push_back(instance_record(li.instance, static_cast<int>(li.functions.size())));
  records.push_back(table_record(li.instance, "function " + nf.name, nf.table));
  if (side != "max")
    records.push_back(table_record(li.instance, "regularized minorant of " + nf.name,
                                   regularized_minorant(li.instance, nf.table)));
  if (side != "min")
    records.push_back(table_record(li.instance, "regularized majorant of " + nf.name,
                                   regularized_majorant(li.instance, nf.table)));
  return 0;
}

Record orbits_record(const std::string& space, const OrbitPartition& part,
                     const std::function<std::string(int)>& name) {
  Record rec;
  rec["kind"] = "orbits";
  rec["space"] = space;
  Record list = Record::array();
  Record stationary = Record::array();
  for (size_t o = 0; o < part.reps.size(); ++o) {
    Record orb;
    orb["representative"] = name(part.reps[o]);
    Record members = Record::array();
    for (int p : part.orbits[o]) members.push_back(name(p));
    orb["members"] = std::move(members);
    list.push_back(std::move(orb));
    if (part.orbits[o].size() == 1) stationary.push_back(name(part.reps[o]));
  }
  rec["orbits"] = std::move(list);
  rec["stationary"] = std::move(stationary);
  return rec;
}

int cmd_orbits(const std::string& path, std::vector<Record>& records) {
  LoadedInstance li = load_instance(path);
  const Instance& inst = li.instance;
  records.push_back(run_record("orbits", path));
  records.push_back(instance_record(inst, static_cast<int>(li.functions.size())));

  const OrbitPartition& co = inst.carrier_orbits();  // throws NotAGroup when H is not one
  records.push_back(orbits_record("carrier", co, [&](int x) { return inst.carrier_name(x); }));
  {
    Record rec;
    rec["kind"] = "stabilizers";
    rec["space"] = "carrier";
    Record by_point;
    for (int x = 0; x < inst.carrier_size(); ++x) {
      Record hs = Record::array();
      for (int h : inst.carrier_stabilizer(x)) hs.push_back(inst.acting().name(h));
      by_point[inst.carrier_name(x)] = std::move(hs);
    }
    rec["by_point"] = std::move(by_point);
    records.push_back(std::move(rec));
  }
  if (inst.flags().t_group) {
    records.push_back(orbits_record("values", inst.value_orbits(),
                                    [&](int v) { return inst.completed().name(v); }));
  } else {
    Record note;
    note["kind"] = "note";
    note["message"] = "value orbits undefined: weight semigroup is not a group";
    records.push_back(std::move(note));
  }
  return 0;
}

int cmd_classify(const std::string& path, const std::string& fspec,
                 std::vector<Record>& records) {
  LoadedInstance li = load_instance(path);
  records.push_back(run_record("classify", path));
  records.push_back(instance_record(li.instance, static_cast<int>(li.functions.size())));
  for (const NamedFunction& nf : select_functions(li.functions, fspec)) {
    const ClassSet cs = classify(li.instance, nf.table);
    Record rec;
    rec["kind"] = "classes";
    rec["function"] = nf.name;
    rec["member_valued_homogeneous"] = cs.hg;
    rec["homogeneous"] = cs.hgc;
    rec["subhomogeneous"] = cs.sub;
    rec["superhomogeneous"] = cs.super;
    records.push_back(std::move(rec));
  }
  return 0;
}

int cmd_check(const std::string& path, const std::string& sspec, const std::string& fspec,
              std::uint64_t seed, std::vector<Record>& records) {
  LoadedInstance li = load_instance(path);
  const std::vector<StatementId> ids = select_statements(sspec);
  const std::vector<NamedFunction> functions = select_functions(li.functions, fspec);

  records.push_back(run_record("check", path));
  records.push_back(instance_record(li.instance, static_cast<int>(functions.size())));

  EnvelopeWorkspace ws(li.instance);
  StatementOptions opts;
  opts.seed = seed ^ instance_digest(li.instance);
  const std::vector<StatementReport> reports =
      run_statements(li.instance, ws, ids, functions, opts);

  int holds = 0, fails = 0, findings = 0, skipped = 0;
  for (const StatementReport& r : reports) {
    records.push_back(statement_record(r));
    if (!r.evaluated)
      ++skipped;
    else if (r.holds)
      ++holds;
    else if (r.hypotheses_met)
      ++fails;
    else
      ++findings;
  }
  Record summary;
  summary["kind"] = "summary";
  summary["checked"] = static_cast<int>(reports.size());
  summary["holds"] = holds;
  summary["fails"] = fails;
  summary["findings"] = findings;
  summary["skipped"] = skipped;
  records.push_back(std::move(summary));
  return fails > 0 ? 1 : 0;
}

int cmd_hunt(const FamilyBounds& bounds, bool semigroup_only, bool non_free,
             const std::string& targets_spec, std::uint64_t budget, std::uint64_t seed,
             const std::string& out_dir, std::vector<Record>& records) {
  const std::vector<StatementId> targets = select_statements(targets_spec);

  InstanceFamily family;
  family.bounds = bounds;
  family.constraints.h_group = semigroup_only ? std::optional<bool>(false) : std::nullopt;
  family.constraints.free_action = non_free ? std::optional<bool>(false) : std::nullopt;
  const bool exhaustive_ok = bounds.max_h <= 4 && bounds.max_x <= 3 && bounds.max_s <= 4;
  if (exhaustive_ok) {
    family.mode = FamilyMode::Exhaustive;
  } else {
    family.mode = FamilyMode::Random;
    family.seed = seed;
    family.count = static_cast<int>(budget);
  }

  records.push_back(run_record("hunt", ""));
  const HuntOutcome outcome = hunt(family, targets, budget);

  Record head;
  head["kind"] = "hunt";
  head["mode"] = exhaustive_ok ? "exhaustive" : "random";
  head["max_acting"] = bounds.max_h;
  head["max_carrier"] = bounds.max_x;
  head["max_values"] = bounds.max_s;
  head["budget"] = budget;
  head["instances_examined"] = outcome.instances_examined;
  head["findings"] = static_cast<int>(outcome.findings.size());
  records.push_back(std::move(head));

  std::ofstream index;
  if (!out_dir.empty() && !outcome.findings.empty()) {
    std::filesystem::create_directories(out_dir);
    index.open(std::filesystem::path(out_dir) / "findings.jsonl");
    if (!index) throw Error("cannot write findings index in " + out_dir);
  }
  int counter = 0;
  for (const Finding& fd : outcome.findings) {
    Record rec = finding_record(fd);
    if (index.is_open()) {
      std::ostringstream name;
      name << "finding_" << ++counter << ".json";
      std::ofstream file(std::filesystem::path(out_dir) / name.str());
      if (!file) throw Error("cannot write finding file in " + out_dir);
      file << fd.instance_text;
      rec["file"] = name.str();
      index << rec.dump() << '\n';
    }
    records.push_back(std::move(rec));
  }
  return outcome.findings.empty() ? 0 : 1;
}

std::string model_word(RealKind kind) {
  switch (kind) {
    case RealKind::PosHomog: return "pos_homog";
    case RealKind::BoundedHomog: return "bounded_homog";
    case RealKind::ExpHomog: return "exp_homog";
  }
  return "?";
}

int cmd_demo(const std::string& path, std::vector<Record>& records) {
  LoadedInstance li = load_instance(path);
  if (!li.demo) throw Error("instance file has no demo block");
  const RealModel& m = *li.demo;

  records.push_back(run_record("demo", path));
  {
    Record rec;
    rec["kind"] = "model";
    rec["model"] = model_word(m.kind);
    rec["p"] = m.p;
    if (m.kind == RealKind::BoundedHomog) rec["r0"] = m.r0;
    rec["sample_h_size"] = static_cast<int>(m.sample_h.size());
    rec["sample_x_size"] = static_cast<int>(m.sample_x.size());
    rec["tolerance"] = m.tolerance;
    records.push_back(std::move(rec));
  }

  struct Probe {
    std::string label;
    std::function<double(double)> f;
  };
  std::vector<Probe> probes;
  const double p = m.p;
  if (m.kind == RealKind::ExpHomog) {
    probes.push_back({"exp(p*x)", [p](double x) { return std::exp(p * x); }});
    probes.push_back({"exp(2*x)", [](double x) { return std::exp(2.0 * x); }});
  } else {
    probes.push_back({"x^p", [p](double x) { return std::pow(x, p); }});
    probes.push_back({"x^2", [](double x) { return x * x; }});
  }
  for (const Probe& probe : probes) {
    const RealTable table = tabulate(m, probe.f);
    Record rec;
    rec["kind"] = "demo_table";
    rec["function"] = probe.label;
    rec["points"] = m.sample_x;
    Record fv = Record::array();
    for (double x : m.sample_x) fv.push_back(probe.f(x));
    rec["f"] = std::move(fv);
    rec["f_min"] = numeric_regularize(m, table, RegularizeSide::Min);
    rec["f_max"] = numeric_regularize(m, table, RegularizeSide::Max);
    records.push_back(std::move(rec));
  }

  // Sign orbits of the extended line under the positive reals.
  const double inf = std::numeric_limits<double>::infinity();
  Record orec;
  orec["kind"] = "real_orbits";
  Record list = Record::array();
  for (double x : {-inf, -1.0, 0.0, 1.0, inf}) {
    const RealOrbit orb = classify_real_orbit(x);
    Record e;
    e["x"] = std::isinf(x) ? (x < 0 ? std::string("-inf") : std::string("+inf"))
                           : Record(x).dump();
    e["label"] = orb.label;
    e["stationary"] = orb.stationary;
    list.push_back(std::move(e));
  }
  orec["orbits"] = std::move(list);
  records.push_back(std::move(orec));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("ORDHULL_SEED")) seed = std::strtoull(env, nullptr, 0);

  CLI::App app{"Exact envelopes, regularizations and statement checks for "
               "homogeneous functions on finite ordered instances"};
  app.require_subcommand(1);
  bool jsonl = false;

  std::string path, fname, fspec = "all", sspec = "all";
  std::string cls, side_lu = "lower", side_mm = "both", algo = "oracle", out_dir;
  FamilyBounds bounds;
  bool semigroup_only = false, non_free = false;
  std::uint64_t budget = 1000;

  CLI::App* validate = app.add_subcommand("validate", "Load and validate an instance file");
  validate->add_option("path", path, "instance file")->required();
  validate->add_flag("--jsonl", jsonl, "machine-readable output");

  CLI::App* envelope = app.add_subcommand("envelope", "Lower or upper class envelope");
  envelope->add_option("path", path, "instance file")->required();
  envelope->add_option("--function", fname, "function name")->required();
  envelope->add_option("--class", cls, "hg | hgc | sub | super")->required();
  envelope->add_option("--side", side_lu, "lower | upper")->required();
  envelope->add_option("--algorithm", algo, "oracle | orbitwise");
  envelope->add_flag("--jsonl", jsonl, "machine-readable output");

  CLI::App* regularize = app.add_subcommand("regularize", "Regularized minorant/majorant");
  regularize->add_option("path", path, "instance file")->required();
  regularize->add_option("--function", fname, "function name")->required();
  regularize->add_option("--side", side_mm, "min | max | both");
  regularize->add_flag("--jsonl", jsonl, "machine-readable output");

  CLI::App* orbits = app.add_subcommand("orbits", "Orbit decompositions and stabilizers");
  orbits->add_option("path", path, "instance file")->required();
  orbits->add_flag("--jsonl", jsonl, "machine-readable output");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Class membership of functions");
  classify_cmd->add_option("path", path, "instance file")->required();
  classify_cmd->add_option("--functions", fspec, "name list or 'all'");
  classify_cmd->add_flag("--jsonl", jsonl, "machine-readable output");

  CLI::App* check = app.add_subcommand("check", "Run statement checks");
  check->add_option("path", path, "instance file")->required();
  check->add_option("--statements", sspec, "statement ids or 'all'");
  check->add_option("--functions", fspec, "name list or 'all'");
  check->add_option("--seed", seed, "sampling seed");
  check->add_flag("--jsonl", jsonl, "machine-readable output");

  CLI::App* hunt_cmd = app.add_subcommand("hunt", "Search instance families for violations");
  hunt_cmd->add_option("--max-h", bounds.max_h, "max acting semigroup size");
  hunt_cmd->add_option("--max-x", bounds.max_x, "max carrier size");
  hunt_cmd->add_option("--max-s", bounds.max_s, "max value poset size");
  hunt_cmd->add_flag("--semigroup-only", semigroup_only, "acting semigroup must not be a group");
  hunt_cmd->add_flag("--non-free", non_free, "carrier action must not be free");
  hunt_cmd->add_option("--targets", sspec, "statement ids or 'all'")->required();
  hunt_cmd->add_option("--budget", budget, "instances to examine");
  hunt_cmd->add_option("--seed", seed, "random family seed");
  hunt_cmd->add_option("--out", out_dir, "findings directory");
  hunt_cmd->add_flag("--jsonl", jsonl, "machine-readable output");

  CLI::App* demo = app.add_subcommand("demo", "Numeric regularizations on the real line");
  demo->add_option("path", path, "instance file")->required();
  demo->add_flag("--jsonl", jsonl, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<Record> records;
  int rc = 0;
  try {
    if (validate->parsed())
      rc = cmd_validate(path, records);
    else if (envelope->parsed())
      rc = cmd_envelope(path, fname, cls, side_lu, algo, records);
    else if (regularize->parsed())
      rc = cmd_regularize(path, fname, side_mm, records);
    else if (orbits->parsed())
      rc = cmd_orbits(path, records);
    else if (classify_cmd->parsed())
      rc = cmd_classify(path, fspec, records);
    else if (check->parsed())
      rc = cmd_check(path, sspec, fspec, seed, records);
    else if (hunt_cmd->parsed())
      rc = cmd_hunt(bounds, semigroup_only, non_free, sspec, budget, seed, out_dir, records);
    else if (demo->parsed())
      rc = cmd_demo(path, records);
  } catch (const Error& e) {
    Record err;
    err["kind"] = "error";
    err["message"] = e.what();
    records.push_back(std::move(err));
    rc = 2;
  }

  std::cout << (jsonl ? to_jsonl(records) : to_human(records));
  if (!jsonl) {
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
  }
  return rc;
}
