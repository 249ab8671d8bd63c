#pragma once

// JSON and CSV representations of ResourceSpec. Field names mirror the
// struct: name, divisible, additive_influence, temporally_reusable,
// identity_transferable, throughput_bounded, partial_properties, r_min, tau,
// alpha, k.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "format.hpp"
#include "resource_model.hpp"

namespace influence_cost {

using Json = nlohmann::ordered_json;

inline Json to_json(const ResourceSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["divisible"] = spec.divisible;
  j["additive_influence"] = spec.additive_influence;
  if (auto k = spec.reuse_horizon()) j["k"] = *k;
  else j["temporally_reusable"] = spec.temporally_reusable();
  if (auto a = spec.alpha()) j["alpha"] = *a;
  else j["identity_transferable"] = spec.identity_transferable();
  j["throughput_bounded"] = spec.throughput_bounded;
  if (spec.partial_properties) j["partial_properties"] = true;
  j["r_min"] = spec.r_min;
  if (spec.tau) j["tau"] = *spec.tau;
  return j;
}

inline ResourceSpec resource_spec_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("resource spec must be a JSON object");
  static const char* known[] = {"name", "divisible", "additive_influence", "temporally_reusable",
                                "identity_transferable", "throughput_bounded", "partial_properties",
                                "r_min", "tau", "alpha", "k"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw std::invalid_argument("unknown resource spec field '" + key + "'");
  }
  if (j.contains("alpha") && j.contains("identity_transferable"))
    throw std::invalid_argument("resource spec carries both alpha and identity_transferable");
  if (j.contains("k") && j.contains("temporally_reusable"))
    throw std::invalid_argument("resource spec carries both k and temporally_reusable");

  ResourceSpec spec;
  try {
    spec.name = j.value("name", std::string{"unnamed"});
    spec.divisible = j.value("divisible", false);
    spec.additive_influence = j.value("additive_influence", false);
    spec.throughput_bounded = j.value("throughput_bounded", false);
    spec.partial_properties = j.value("partial_properties", false);
    if (!j.contains("r_min")) throw std::invalid_argument("resource spec is missing r_min");
    spec.r_min = j.at("r_min").get<double>();
    if (j.contains("tau") && !j.at("tau").is_null()) spec.tau = j.at("tau").get<double>();
    if (j.contains("k")) {
      const auto k = j.at("k").get<long long>();
      if (k < 1) throw std::invalid_argument("reuse horizon k must be at least 1");
      spec.reuse = BoundedReuse{static_cast<unsigned>(k)};
    } else {
      spec.reuse = j.value("temporally_reusable", false);
    }
    if (j.contains("alpha")) spec.transfer = PartialTransfer{j.at("alpha").get<double>()};
    else spec.transfer = j.value("identity_transferable", false);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed resource spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

/// Accepts a single spec object, an array of specs, or {"resources": [...]}.
inline std::vector<ResourceSpec> resource_specs_from_json(const Json& doc) {
  const Json* list = &doc;
  if (doc.is_object() && doc.contains("resources")) list = &doc.at("resources");
  std::vector<ResourceSpec> out;
  if (list->is_array()) {
    for (const auto& item : *list) out.push_back(resource_spec_from_json(item));
  } else {
    out.push_back(resource_spec_from_json(*list));
  }
  return out;
}

inline std::vector<ResourceSpec> load_resource_specs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open resource file " + path.string());
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("cannot parse " + path.string() + ": " + e.what());
  }
  return resource_specs_from_json(doc);
}

/// A preset name, or a path to a JSON document holding exactly one spec
/// (or several, in which case the first is taken).
inline ResourceSpec resolve_resource(const std::string& preset_or_file) {
  if (auto preset = find_preset(preset_or_file)) return *preset;
  if (!std::filesystem::exists(preset_or_file))
    throw std::invalid_argument("unknown preset or missing file '" + preset_or_file + "'");
  auto specs = load_resource_specs(preset_or_file);
  if (specs.empty()) throw std::invalid_argument("no resource specs in " + preset_or_file);
  return specs.front();
}

inline Json taxonomy_json(const std::vector<ResourceSpec>& specs) {
  Json arr = Json::array();
  for (const auto& spec : specs) {
    Json j = to_json(spec);
    j["class"] = std::string(to_string(classify(spec).resource_class));
    arr.push_back(std::move(j));
  }
  return Json{{"resources", std::move(arr)}};
}

inline CsvTable taxonomy_csv(const std::vector<ResourceSpec>& specs) {
  CsvTable table({"name", "divisible", "additive_influence", "temporally_reusable", "identity_transferable",
                  "throughput_bounded", "partial_properties", "r_min", "tau", "alpha", "k", "class"});
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  for (const auto& s : specs) {
    table.add_row({s.name, b(s.divisible), b(s.additive_influence),
                   s.reuse_horizon() ? std::string{} : b(s.temporally_reusable()),
                   s.alpha() ? std::string{} : b(s.identity_transferable()), b(s.throughput_bounded),
                   b(s.partial_properties), format_number(s.r_min), format_number(s.tau),
                   format_number(s.alpha()),
                   s.reuse_horizon() ? std::to_string(*s.reuse_horizon()) : std::string{},
                   std::string(to_string(classify(s).resource_class))});
  }
  return table;
}

}  // namespace influence_cost
