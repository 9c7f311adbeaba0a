#pragma once

#include <string>
#include <vector>

#include "ordhull/statements.hpp"
#include "ordhull/verifier.hpp"

#include <json.hpp>

namespace ordhull {

// One machine-readable report line. Every record carries a "kind" tag; the
// human rendering is derived from these records and nothing else, so the two
// forms can never diverge in content.
using Record = nlohmann::ordered_json;

Record statement_record(const StatementReport& r);
Record table_record(const Instance& inst, const std::string& label, const FunctionTable& f);
Record finding_record(const Finding& fd);

std::string to_jsonl(const std::vector<Record>& records);
std::string to_human(const std::vector<Record>& records);

}  // namespace ordhull
