#include "ordhull/report.hpp"

#include <sstream>

namespace ordhull {

Record statement_record(const StatementReport& r) {
  Record rec;
  rec["kind"] = "statement";
  rec["statement"] = to_string(r.id);
  if (!r.function_name.empty()) rec["function"] = r.function_name;
  rec["verdict"] = r.verdict();
  rec["evaluated"] = r.evaluated;
  rec["hypotheses_met"] = r.hypotheses_met;
  if (!r.unmet_hypotheses.empty()) rec["unmet_hypotheses"] = r.unmet_hypotheses;
  if (!r.skip_reason.empty()) rec["skip_reason"] = r.skip_reason;
  if (!r.witness.empty()) rec["witness"] = r.witness;
  return rec;
}

Record table_record(const Instance& inst, const std::string& label, const FunctionTable& f) {
  Record rec;
  rec["kind"] = "table";
  rec["label"] = label;
  Record values;
  for (int x = 0; x < inst.carrier_size(); ++x)
    values[inst.carrier_name(x)] = inst.completed().name(f(x));
  rec["values"] = std::move(values);
  return rec;
}

Record finding_record(const Finding& fd) {
  Record rec;
  rec["kind"] = "finding";
  rec["statement"] = to_string(fd.id);
  if (!fd.function_name.empty()) rec["function"] = fd.function_name;
  rec["hypotheses_met"] = fd.hypotheses_met;
  rec["oracle_confirmed"] = fd.oracle_confirmed;
  rec["instance_index"] = fd.instance_index;
  {
    std::ostringstream hex;
    hex << std::hex << fd.digest;
    rec["digest"] = hex.str();
  }
  if (!fd.witness.empty()) rec["witness"] = fd.witness;
  return rec;
}

std::string to_jsonl(const std::vector<Record>& records) {
  std::string out;
  for (const Record& r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

namespace {

void render(std::ostream& out, const Record& r) {
  const std::string kind = r.value("kind", "");
  if (kind == "statement") {
    out << r.value("statement", "?");
    if (r.contains("function")) out << " [" << r["function"].get<std::string>() << "]";
    out << ": " << r.value("verdict", "?");
    if (r.contains("unmet_hypotheses")) {
      out << " (unmet:";
      for (const auto& u : r["unmet_hypotheses"]) out << ' ' << u.get<std::string>();
      out << ')';
    }
    if (r.contains("skip_reason")) out << " (" << r["skip_reason"].get<std::string>() << ')';
    out << '\n';
    if (r.contains("witness"))
      out << "    witness: " << r["witness"].get<std::string>() << '\n';
    return;
  }
  if (kind == "table") {
    out << r.value("label", "table") << ": {";
    bool first = true;
    for (const auto& [k, v] : r["values"].items()) {
      if (!first) out << ", ";
      first = false;
      out << k << '=' << v.get<std::string>();
    }
    out << "}\n";
    return;
  }
  if (kind == "finding") {
    out << "finding: " << r.value("statement", "?");
    if (r.contains("function")) out << " [" << r["function"].get<std::string>() << "]";
    out << (r.value("hypotheses_met", false) ? " (hypotheses met)" : " (hypotheses unmet)");
    if (r.value("oracle_confirmed", false)) out << " confirmed";
    out << " digest=" << r.value("digest", "?") << '\n';
    if (r.contains("witness"))
      out << "    witness: " << r["witness"].get<std::string>() << '\n';
    return;
  }
  if (kind == "error") {
    out << "error: " << r.value("message", "?") << '\n';
    return;
  }
  if (kind == "orbits") {
    out << r.value("space", "?") << " orbits:\n";
    for (const auto& orb : r["orbits"]) {
      out << "  [" << orb["representative"].get<std::string>() << "] {";
      bool first = true;
      for (const auto& m : orb["members"]) {
        if (!first) out << ", ";
        first = false;
        out << m.get<std::string>();
      }
      out << "}\n";
    }
    if (r.contains("stationary")) {
      out << "  stationary: {";
      bool first = true;
      for (const auto& m : r["stationary"]) {
        if (!first) out << ", ";
        first = false;
        out << m.get<std::string>();
      }
      out << "}\n";
    }
    return;
  }
  if (kind == "demo_table") {
    out << "demo " << r.value("function", "?") << ": point  f  f_min  f_max\n";
    const auto& pts = r["points"];
    const auto& fv = r["f"];
    const auto& lo = r["f_min"];
    const auto& hi = r["f_max"];
    for (size_t i = 0; i < pts.size(); ++i)
      out << "  " << pts[i].dump() << "  " << fv[i].dump() << "  " << lo[i].dump() << "  "
          << hi[i].dump() << '\n';
    return;
  }
  // Generic record: key=value pairs on one line, kind first.
  out << kind << ':';
  for (const auto& [k, v] : r.items()) {
    if (k == "kind") continue;
    out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
  }
  out << '\n';
}

}  // namespace

std::string to_human(const std::vector<Record>& records) {
  std::ostringstream out;
  for (const Record& r : records) render(out, r);
  return out.str();
}

}  // namespace ordhull
