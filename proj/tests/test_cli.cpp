#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordhull/instance.hpp"
#include "ordhull/instance_io.hpp"

#include "helpers.hpp"

using namespace ordhull;
using nlohmann::json;

namespace {

std::vector<json> parse_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

const json* find_kind(const std::vector<json>& recs, const std::string& kind,
                      std::size_t skip = 0) {
  for (const json& r : recs)
    if (r.at("kind") == kind) {
      if (skip == 0) return &r;
      --skip;
    }
  return nullptr;
}

// Returning a pointer into a temporary would dangle; force callers to bind the
// parsed vector first.
const json* find_kind(std::vector<json>&&, const std::string&, std::size_t = 0) = delete;

std::filesystem::path scratch_dir() {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("ordhull_cli_" + std::to_string(::getpid()) + "_" + std::to_string(++counter));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string left_zero_file(const std::filesystem::path& dir) {
  const Instance inst = helpers::fix_left_zero();
  const std::vector<NamedFunction> fns = {{"f", FunctionTable{{0, 1}}}};
  const std::string path = (dir / "left_zero.json").string();
  helpers::write_file(path, serialize_instance(inst, fns));
  return path;
}

}  // namespace

TEST_CASE("validate reports the instance and exits 0") {
  const auto res = helpers::run_cli("validate " + helpers::fixture_path("fix_a.json") + " --jsonl");
  REQUIRE(res.exit_code == 0);
  const auto recs = parse_lines(res.output);
  const json* run = find_kind(recs, "run");
  REQUIRE(run);
  CHECK(run->at("command") == "validate");
  const json* inst = find_kind(recs, "instance");
  REQUIRE(inst);
  CHECK(inst->at("acting_group") == true);
  CHECK(inst->at("carrier_size") == 2);
  CHECK(!inst->at("digest").get<std::string>().empty());
  const json* ok = find_kind(recs, "validated");
  REQUIRE(ok);
  CHECK(ok->at("ok") == true);
  CHECK(ok->at("demo") == false);

  const auto demo =
      helpers::run_cli("validate " + helpers::fixture_path("fix_demo.json") + " --jsonl");
  REQUIRE(demo.exit_code == 0);
  const auto demo_recs = parse_lines(demo.output);
  const json* d = find_kind(demo_recs, "validated");
  REQUIRE(d);
  CHECK(d->at("demo") == true);
}

TEST_CASE("invalid input exits 2 with an error record") {
  const auto missing = helpers::run_cli("validate /nonexistent/nowhere.json --jsonl");
  CHECK(missing.exit_code == 2);
  const auto missing_recs = parse_lines(missing.output);
  REQUIRE(find_kind(missing_recs, "error"));

  const auto dir = scratch_dir();
  const std::string bad = (dir / "bad.json").string();
  helpers::write_file(bad, "this is not an instance");
  const auto corrupt = helpers::run_cli("validate " + bad + " --jsonl");
  CHECK(corrupt.exit_code == 2);
  const auto corrupt_recs = parse_lines(corrupt.output);
  const json* err = find_kind(corrupt_recs, "error");
  REQUIRE(err);
  CHECK(!err->at("message").get<std::string>().empty());

  // Structurally fine JSON, semantically broken action.
  std::string text = helpers::read_file(helpers::fixture_path("fix_a.json"));
  const std::string needle = "\"s\": {\"00\": \"00\", \"01\": \"10\", \"10\": \"01\", \"11\": \"11\"}";
  REQUIRE(text.find(needle) != std::string::npos);
  text.replace(text.find(needle), needle.size(),
               "\"s\": {\"00\": \"11\", \"01\": \"10\", \"10\": \"01\", \"11\": \"00\"}");
  const std::string broken = (dir / "broken.json").string();
  helpers::write_file(broken, text);
  CHECK(helpers::run_cli("validate " + broken + " --jsonl").exit_code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bad usage exits 2, help exits 0") {
  CHECK(helpers::run_cli("").exit_code == 2);
  CHECK(helpers::run_cli("frobnicate").exit_code == 2);
  CHECK(helpers::run_cli("hunt --max-h 2").exit_code == 2);  // --targets required
  CHECK(helpers::run_cli("--help").exit_code == 0);
  CHECK(helpers::run_cli("check --help").exit_code == 0);
}

TEST_CASE("envelope command prints the function and its envelope") {
  const auto res = helpers::run_cli("envelope " + helpers::fixture_path("fix_a.json") +
                                    " --function f_hom --class hg --side lower --jsonl");
  REQUIRE(res.exit_code == 0);
  const auto recs = parse_lines(res.output);
  const json* input = find_kind(recs, "table");
  const json* env = find_kind(recs, "table", 1);
  REQUIRE(input);
  REQUIRE(env);
  CHECK(input->at("label") == "function f_hom");
  CHECK(env->at("label").get<std::string>().find("lower hg envelope") == 0);
  // f_hom is itself a member, so the envelope fixes it.
  CHECK(env->at("values") == input->at("values"));

  CHECK(helpers::run_cli("envelope " + helpers::fixture_path("fix_a.json") +
                         " --function no_such --class hg --side lower")
            .exit_code == 2);
  CHECK(helpers::run_cli("envelope " + helpers::fixture_path("fix_a.json") +
                         " --function f --class bogus --side lower")
            .exit_code == 2);
}

TEST_CASE("orbitwise algorithm needs groups") {
  const auto dir = scratch_dir();
  const std::string path = left_zero_file(dir);
  const auto res = helpers::run_cli("envelope " + path +
                                    " --function f --class hg --side lower --algorithm orbitwise");
  CHECK(res.exit_code == 2);
  const auto ok = helpers::run_cli("envelope " + path +
                                   " --function f --class hg --side lower --jsonl");
  CHECK(ok.exit_code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("regularize command") {
  const auto res = helpers::run_cli("regularize " + helpers::fixture_path("fix_a.json") +
                                    " --function f --side both --jsonl");
  REQUIRE(res.exit_code == 0);
  const auto recs = parse_lines(res.output);
  const json* lo = find_kind(recs, "table", 1);
  const json* hi = find_kind(recs, "table", 2);
  REQUIRE(lo);
  REQUIRE(hi);
  CHECK(lo->at("label").get<std::string>().find("minorant") != std::string::npos);
  CHECK(lo->at("values").at("a") == "00");
  CHECK(lo->at("values").at("b") == "00");
  CHECK(hi->at("values").at("a") == "11");
  CHECK(hi->at("values").at("b") == "11");

  // Weight inversion needs a group.
  const auto dir = scratch_dir();
  const std::string path = left_zero_file(dir);
  CHECK(helpers::run_cli("regularize " + path + " --function f").exit_code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("orbits command") {
  const auto res = helpers::run_cli("orbits " + helpers::fixture_path("fix_c.json") + " --jsonl");
  REQUIRE(res.exit_code == 0);
  const auto recs = parse_lines(res.output);
  const json* carrier = find_kind(recs, "orbits");
  REQUIRE(carrier);
  CHECK(carrier->at("space") == "carrier");
  CHECK(carrier->at("orbits").size() == 2);
  CHECK(carrier->at("stationary") == json::array({"c"}));
  const json* stab = find_kind(recs, "stabilizers");
  REQUIRE(stab);
  CHECK(stab->at("by_point").at("c").size() == 2);
  CHECK(stab->at("by_point").at("a").size() == 1);
  const json* values = find_kind(recs, "orbits", 1);
  REQUIRE(values);
  CHECK(values->at("space") == "values");
  CHECK(values->at("orbits").size() == 3);

  const auto dir = scratch_dir();
  CHECK(helpers::run_cli("orbits " + left_zero_file(dir)).exit_code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("classify command") {
  const auto res =
      helpers::run_cli("classify " + helpers::fixture_path("fix_a.json") + " --jsonl");
  REQUIRE(res.exit_code == 0);
  const auto recs = parse_lines(res.output);
  const json* f = nullptr;
  const json* f_hom = nullptr;
  for (const json& r : recs)
    if (r.at("kind") == "classes") {
      if (r.at("function") == "f") f = &r;
      if (r.at("function") == "f_hom") f_hom = &r;
    }
  REQUIRE(f);
  REQUIRE(f_hom);
  CHECK(f_hom->at("member_valued_homogeneous") == true);
  CHECK(f_hom->at("homogeneous") == true);
  CHECK(f->at("member_valued_homogeneous") == false);
  CHECK(f->at("homogeneous") == false);
  CHECK(f->at("subhomogeneous") == false);
  CHECK(f->at("superhomogeneous") == false);

  CHECK(helpers::run_cli("classify " + helpers::fixture_path("fix_a.json") +
                         " --functions nope")
            .exit_code == 2);
}

TEST_CASE("check exits 0 on clean instances and 1 on failures") {
  const auto clean = helpers::run_cli("check " + helpers::fixture_path("fix_a.json") + " --jsonl");
  REQUIRE(clean.exit_code == 0);
  const auto clean_recs = parse_lines(clean.output);
  const json* summary = find_kind(clean_recs, "summary");
  REQUIRE(summary);
  CHECK(summary->at("fails") == 0);
  CHECK(summary->at("checked").get<int>() > 0);

  const auto gap = helpers::run_cli("check " + helpers::fixture_path("fix_c_antichain.json") +
                                    " --statements THM2_L --jsonl");
  REQUIRE(gap.exit_code == 1);
  const auto recs = parse_lines(gap.output);
  const json* s = find_kind(recs, "summary");
  REQUIRE(s);
  CHECK(s->at("fails").get<int>() >= 1);
  const json* stmt = find_kind(recs, "statement");
  REQUIRE(stmt);
  CHECK(stmt->at("statement") == "THM2_L");

  CHECK(helpers::run_cli("check " + helpers::fixture_path("fix_a.json") +
                         " --statements THM9")
            .exit_code == 2);
}

TEST_CASE("check output is deterministic and honors the seed environment") {
  const std::string args =
      "check " + helpers::fixture_path("fix_c.json") + " --statements PROP1 --jsonl";
  const auto a = helpers::run_cli(args);
  const auto b = helpers::run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const auto flagged = helpers::run_cli(args + " --seed 7");
  const auto env = helpers::run_command("ORDHULL_SEED=7 " + helpers::cli_bin() + " " + args +
                                        " 2>/dev/null");
  CHECK(flagged.exit_code == env.exit_code);
  CHECK(flagged.output == env.output);
}

TEST_CASE("hunt writes replayable findings and exits 1") {
  const auto dir = scratch_dir();
  const auto res = helpers::run_cli(
      "hunt --targets THM2_L --non-free --max-h 2 --max-x 3 --max-s 4 --budget 1000 --out " +
      dir.string() + " --jsonl");
  REQUIRE(res.exit_code == 1);
  const auto recs = parse_lines(res.output);
  const json* head = find_kind(recs, "hunt");
  REQUIRE(head);
  CHECK(head->at("mode") == "exhaustive");
  CHECK(head->at("findings").get<int>() >= 1);
  CHECK(head->at("instances_examined").get<int>() >= 1);

  const std::string index_path = (dir / "findings.jsonl").string();
  REQUIRE(std::filesystem::exists(index_path));
  const auto index = parse_lines(helpers::read_file(index_path));
  REQUIRE(static_cast<int>(index.size()) == head->at("findings").get<int>());

  const json* met = nullptr;
  for (const json& fd : index) {
    CHECK(fd.at("statement") == "THM2_L");
    CHECK(fd.at("oracle_confirmed") == true);
    CHECK(std::filesystem::exists(dir / fd.at("file").get<std::string>()));
    if (!met && fd.at("hypotheses_met") == true) met = &fd;
  }
  REQUIRE(met);  // the gap shows up inside the stated hypotheses

  const std::string replay = (dir / met->at("file").get<std::string>()).string();
  CHECK(helpers::run_cli("validate " + replay).exit_code == 0);
  const auto again = helpers::run_cli("check " + replay + " --statements THM2_L --jsonl");
  CHECK(again.exit_code == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("hunt respects a zero budget") {
  const auto dir = scratch_dir();
  const auto res = helpers::run_cli("hunt --targets THM2_L --max-h 2 --max-x 2 --max-s 3 "
                                    "--budget 0 --out " +
                                    dir.string() + " --jsonl");
  CHECK(res.exit_code == 0);
  const auto recs = parse_lines(res.output);
  const json* head = find_kind(recs, "hunt");
  REQUIRE(head);
  CHECK(head->at("findings") == 0);
  CHECK_FALSE(std::filesystem::exists(dir / "findings.jsonl"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("demo command runs the numeric model") {
  const auto res = helpers::run_cli("demo " + helpers::fixture_path("fix_demo.json") + " --jsonl");
  REQUIRE(res.exit_code == 0);
  const auto recs = parse_lines(res.output);
  const json* model = find_kind(recs, "model");
  REQUIRE(model);
  CHECK(model->at("model") == "pos_homog");
  CHECK(model->at("p") == 1.0);

  // The degree-1 probe x^p is itself homogeneous: both regularizations fix it.
  const json* probe = find_kind(recs, "demo_table");
  REQUIRE(probe);
  CHECK(probe->at("function") == "x^p");
  const auto f = probe->at("f").get<std::vector<double>>();
  const auto fmin = probe->at("f_min").get<std::vector<double>>();
  const auto fmax = probe->at("f_max").get<std::vector<double>>();
  REQUIRE(f.size() == fmin.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(fmin[i] == doctest::Approx(f[i]).epsilon(1e-10));
    CHECK(fmax[i] == doctest::Approx(f[i]).epsilon(1e-10));
  }

  const json* orbits = find_kind(recs, "real_orbits");
  REQUIRE(orbits);
  REQUIRE(orbits->at("orbits").size() == 5);
  int stationary = 0;
  for (const json& o : orbits->at("orbits"))
    if (o.at("stationary") == true) ++stationary;
  CHECK(stationary == 3);

  CHECK(helpers::run_cli("demo " + helpers::fixture_path("fix_a.json")).exit_code == 2);
}

TEST_CASE("human output carries the same content plus a timing footer") {
  const auto res = helpers::run_command(helpers::cli_bin() + " validate " +
                                        helpers::fixture_path("fix_a.json") + " 2>&1");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("validated") != std::string::npos);
  CHECK(res.output.find("elapsed:") != std::string::npos);

  // Machine output stays byte-identical across runs; no timing inside it.
  const auto a = helpers::run_cli("validate " + helpers::fixture_path("fix_a.json") + " --jsonl");
  const auto b = helpers::run_cli("validate " + helpers::fixture_path("fix_a.json") + " --jsonl");
  CHECK(a.output == b.output);
  CHECK(a.output.find("elapsed") == std::string::npos);
}
