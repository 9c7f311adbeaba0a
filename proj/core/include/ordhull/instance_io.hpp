#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordhull/continuum.hpp"
#include "ordhull/instance.hpp"

#include <json.hpp>

namespace ordhull {

// A parsed instance file: the validated instance, its named function tables
// (values are completed-poset indices) and the optional numeric demo block.
struct LoadedInstance {
  Instance instance;
  std::vector<NamedFunction> functions;
  std::optional<RealModel> demo;
};

// Parses the JSON instance format (sections semigroup_H, semigroup_T, hom,
// carrier, action_X, poset_S, action_S, functions, optional demo). Structural
// problems throw ParseError; semantic ones surface as the module errors
// (axiom violations, NotAHomomorphism, NotOrderComplete, ...).
LoadedInstance parse_instance(const std::string& text);
LoadedInstance load_instance(const std::string& path);

// Serialization of the normalized instance (weights restricted onto their
// image); parse(serialize(i)) reproduces i section by section.
nlohmann::ordered_json instance_to_json(const Instance& inst,
                                        const std::vector<NamedFunction>& functions = {},
                                        const std::optional<RealModel>& demo = {});
std::string serialize_instance(const Instance& inst,
                               const std::vector<NamedFunction>& functions = {},
                               const std::optional<RealModel>& demo = {});

// Stable fingerprint of the instance structure (functions excluded); seeds
// the per-instance deterministic sampling.
std::uint64_t instance_digest(const Instance& inst);

}  // namespace ordhull
