// Shared fixture builders and process helpers for the test binaries. The
// instances built here mirror fixtures/*.json but are constructed directly,
// so file parsing and in-code construction check each other.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "ordhull/instance.hpp"
#include "ordhull/poset.hpp"
#include "ordhull/semigroup.hpp"

namespace helpers {

using ordhull::FiniteSemigroup;
using ordhull::FunctionTable;
using ordhull::Instance;
using ordhull::Poset;

inline FunctionTable ft(std::vector<int> values) { return FunctionTable{std::move(values)}; }

inline FiniteSemigroup z2(const std::string& e = "e", const std::string& g = "g") {
  return FiniteSemigroup::from_table({e, g}, {0, 1, 1, 0});
}

inline FiniteSemigroup trivial(const std::string& e = "1") {
  return FiniteSemigroup::from_table({e}, {0});
}

// x.y = x for every x, y; associative, no identity, not a group.
inline FiniteSemigroup left_zero2(const std::string& a = "a", const std::string& b = "b") {
  return FiniteSemigroup::from_table({a, b}, {0, 0, 1, 1});
}

inline Poset diamond() {
  return Poset::from_pairs({"00", "01", "10", "11"},
                           {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
}

inline Poset chain3() {
  return Poset::from_pairs({"s0", "s1", "s2"}, {{"s0", "s1"}, {"s1", "s2"}});
}

inline Poset antichain2() { return Poset::from_pairs({"p", "q"}, {}); }

// Two incomparable lower elements under two incomparable upper ones: bounded
// subsets without extrema, the smallest non-order-complete example.
inline Poset crown22() {
  return Poset::from_pairs({"a", "b", "c", "d"},
                           {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// H = T = Z2, X = {a,b} swapped, S = diamond with coordinate swap, w = id.
inline Instance fix_a() {
  return Instance(z2(), {"a", "b"}, {0, 1, 1, 0}, z2("1", "s"), {0, 1}, diamond(),
                  {0, 1, 2, 3, 0, 2, 1, 3});
}

// H = Z2 swapping {a,b}, T trivial, S = chain of three, constant weights.
inline Instance fix_b() {
  return Instance(z2(), {"a", "b"}, {0, 1, 1, 0}, trivial(), {0, 0}, chain3(), {0, 1, 2});
}

// fix_a plus a third carrier point fixed by everything (non-free action).
inline Instance fix_c() {
  return Instance(z2(), {"a", "b", "c"}, {0, 1, 2, 1, 0, 2}, z2("1", "s"), {0, 1}, diamond(),
                  {0, 1, 2, 3, 0, 2, 1, 3});
}

// fix_a over the two-point antichain; the completion adds both symbols.
inline Instance fix_a_antichain() {
  return Instance(z2(), {"a", "b"}, {0, 1, 1, 0}, z2("1", "s"), {0, 1}, antichain2(),
                  {0, 1, 1, 0});
}

// fix_c over the antichain: the fixed point c admits no swap-fixed member
// value, so the member-valued homogeneous class is empty.
inline Instance fix_c_antichain() {
  return Instance(z2(), {"a", "b", "c"}, {0, 1, 2, 1, 0, 2}, z2("1", "s"), {0, 1}, antichain2(),
                  {0, 1, 1, 0});
}

// Both semigroups left-zero, constant actions on points and on a 2-chain;
// no units anywhere, T is not a group.
inline Instance fix_left_zero() {
  return Instance(left_zero2("u", "v"), {"x", "y"}, {0, 0, 1, 1},
                  left_zero2("tu", "tv"), {0, 1},
                  Poset::from_pairs({"s0", "s1"}, {{"s0", "s1"}}), {0, 0, 1, 1});
}

inline std::string fixtures_dir() {
  const char* env = std::getenv("ORDHULL_FIXTURES");
  if (env && *env) return env;
  return "fixtures";
}

inline std::string fixture_path(const std::string& name) { return fixtures_dir() + "/" + name; }

inline std::string cli_bin() {
  const char* env = std::getenv("ORDHULL_BIN");
  if (env && *env) return env;
  throw std::runtime_error("ORDHULL_BIN not set");
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs a shell command, captures stdout, maps the wait status to the exit
// code (-1 when the child did not exit normally).
inline RunResult run_command(const std::string& command) {
  RunResult res;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + command);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

inline RunResult run_cli(const std::string& args) {
  return run_command(cli_bin() + " " + args + " 2>/dev/null");
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

}  // namespace helpers
