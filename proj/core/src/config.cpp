#include "prerad/config.hpp"

#include <set>

#include "prerad/construct.hpp"
#include "prerad/error.hpp"

namespace prerad {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SpecError(path + ": " + what); }

void only_keys(const nlohmann::json& obj, const std::string& path, std::set<std::string> allowed) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(path + "." + k, "unknown key");
}

std::size_t positive(const nlohmann::json& obj, const std::string& key, const std::string& path, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj[key];
  if (!v.is_number_integer() || v.get<long long>() <= 0) fail(path + "." + key, "expected a positive integer");
  return v.get<std::size_t>();
}

std::string string_at(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

}  // namespace

std::size_t default_max_order(std::string_view ring) { return ring == "zn:6" ? 36 : 16; }

WorkbenchConfig parse_config(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("config: malformed JSON: ") + e.what());
  }
  return config_from_json(doc);
}

WorkbenchConfig config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("config", "expected an object");
  only_keys(doc, "config", {"ring", "universe", "caps", "suites", "output", "timing"});
  WorkbenchConfig c;
  if (!doc.contains("ring")) fail("config.ring", "required");
  const auto& rj = doc["ring"];
  if (rj.is_object()) {
    c.ring_tables = rj;
    c.ring = rj.value("tag", std::string("explicit"));
  } else {
    c.ring = string_at(rj, "config.ring");
  }
  RingPtr ring;
  try {
    ring = make_config_ring(c);
  } catch (const Error& e) {
    fail("config.ring", e.what());
  }

  c.universe.max_order = default_max_order(c.ring);
  if (doc.contains("universe")) {
    const auto& u = doc["universe"];
    if (!u.is_object()) fail("config.universe", "expected an object");
    only_keys(u, "config.universe", {"seeds", "max_order", "sum_arity", "max_classes"});
    c.universe.max_order = positive(u, "max_order", "config.universe", c.universe.max_order);
    c.universe.sum_arity = positive(u, "sum_arity", "config.universe", c.universe.sum_arity);
    c.universe.max_classes = positive(u, "max_classes", "config.universe", c.universe.max_classes);
    if (u.contains("seeds")) {
      if (!u["seeds"].is_array()) fail("config.universe.seeds", "expected an array of module specs");
      for (std::size_t i = 0; i < u["seeds"].size(); ++i) {
        const auto path = "config.universe.seeds[" + std::to_string(i) + "]";
        auto spec = string_at(u["seeds"][i], path);
        try {
          parse_module(ring, spec);
        } catch (const Error& e) {
          fail(path, e.what());
        }
        c.seeds.push_back(spec);
      }
    }
  }
  if (c.universe.max_order < ring->size())
    fail("config.universe.max_order", "must be at least |R| = " + std::to_string(ring->size()));

  if (doc.contains("caps")) {
    const auto& k = doc["caps"];
    if (!k.is_object()) fail("config.caps", "expected an object");
    only_keys(k, "config.caps", {"enumeration", "classes"});
    c.caps.enumeration_cap = positive(k, "enumeration", "config.caps", c.caps.enumeration_cap);
    c.caps.class_cap = positive(k, "classes", "config.caps", c.caps.class_cap);
  }

  if (doc.contains("suites")) {
    const auto& s = doc["suites"];
    if (!s.is_array()) fail("config.suites", "expected an array");
    c.suites.clear();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto path = "config.suites[" + std::to_string(i) + "]";
      auto name = string_at(s[i], path);
      try {
        select_entries({name});
      } catch (const SpecError&) {
        fail(path, "unknown suite '" + name + "'");
      }
      c.suites.push_back(name);
    }
  }

  if (doc.contains("output")) {
    const auto& o = doc["output"];
    if (!o.is_object()) fail("config.output", "expected an object");
    only_keys(o, "config.output", {"json", "text"});
    if (o.contains("json")) c.json_out = string_at(o["json"], "config.output.json");
    if (o.contains("text")) c.text_out = string_at(o["text"], "config.output.text");
  }
  if (doc.contains("timing")) {
    if (!doc["timing"].is_boolean()) fail("config.timing", "expected a boolean");
    c.timing = doc["timing"].get<bool>();
  }
  return c;
}

RingPtr make_config_ring(const WorkbenchConfig& config) {
  return config.ring_tables ? make_ring_from_json(*config.ring_tables) : make_ring(std::string_view(config.ring));
}

nlohmann::json WorkbenchConfig::to_json() const {
  nlohmann::json j{{"ring", ring_tables ? *ring_tables : nlohmann::json(ring)},
                   {"universe",
                    {{"seeds", seeds},
                     {"max_order", universe.max_order},
                     {"sum_arity", universe.sum_arity},
                     {"max_classes", universe.max_classes}}},
                   {"caps", {{"enumeration", caps.enumeration_cap}, {"classes", caps.class_cap}}},
                   {"suites", suites},
                   {"timing", timing}};
  if (json_out || text_out) {
    j["output"] = nlohmann::json::object();
    if (json_out) j["output"]["json"] = *json_out;
    if (text_out) j["output"]["text"] = *text_out;
  }
  return j;
}

SuiteReport run(const WorkbenchConfig& config) {
  auto ring = make_config_ring(config);
  const auto entries = select_entries(config.suites);
  std::vector<ModulePtr> seeds{regular_module(ring)};
  for (const auto& s : config.seeds) seeds.push_back(parse_module(ring, s));
  SuiteContext ctx(ring, seeds, config.universe, config.caps);
  return run_entries(ctx, entries);
}

}  // namespace prerad
