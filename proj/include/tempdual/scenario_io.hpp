#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tempdual/errors.hpp"
#include "tempdual/orbit_model.hpp"
#include "tempdual/rational.hpp"

namespace tempdual::io {

using nlohmann::json;

namespace detail {

inline const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

inline Rational rational_field(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw InputError(where + ": rationals must be strings \"p/q\" or integers");
}

inline int int_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<int>();
}

inline std::string string_field(const json& v, const std::string& where) {
  if (!v.is_string()) throw InputError(where + ": expected a string");
  return v.get<std::string>();
}

inline RawBlock block_field(const json& v, const std::string& where) {
  return {string_field(require(v, "class", where), where + ".class"), rational_field(require(v, "t", where), where + ".t")};
}

inline TildeStatus parse_tilde(const std::string& s) {
  if (s == "not_applicable") return TildeStatus::NotApplicable;
  if (s == "equivalent") return TildeStatus::Equivalent;
  if (s == "inequivalent") return TildeStatus::Inequivalent;
  throw InputError("tau.tilde must be not_applicable, equivalent or inequivalent");
}

}  // namespace detail

inline Scenario scenario_from_json(const json& doc) {
  using namespace detail;
  if (!doc.is_object()) throw InputError("scenario must be a JSON object");
  Scenario s;
  const json& group = require(doc, "group", "scenario");
  const auto kind = parse_group_kind(string_field(require(group, "kind", "group"), "group.kind"));
  if (!kind) throw InputError("group.kind is not one of the supported group kinds");
  s.kind = *kind;
  s.n = int_field(require(group, "n", "group"), "group.n");

  const json& levi = require(doc, "levi", "scenario");
  const json& sizes = require(levi, "block_sizes", "levi");
  if (!sizes.is_array()) throw InputError("levi.block_sizes must be an array");
  for (const auto& v : sizes) s.levi.block_sizes.push_back(int_field(v, "levi.block_sizes"));
  s.levi.q = int_field(require(levi, "q", "levi"), "levi.q");

  const json& classes = require(doc, "classes", "scenario");
  if (!classes.is_array()) throw InputError("classes must be an array");
  for (const auto& c : classes) {
    InertialClass cls;
    cls.id = string_field(require(c, "id", "class"), "class.id");
    const std::string where = "class '" + cls.id + "'";
    cls.size = int_field(require(c, "size", where), where + ".size");
    cls.torsion = int_field(require(c, "torsion", where), where + ".torsion");
    cls.dual_id = string_field(require(c, "dual", where), where + ".dual");
    cls.dual_offset = c.contains("dual_offset") ? rational_field(c.at("dual_offset"), where + ".dual_offset") : Rational(0);
    if (c.contains("reducibility")) {
      const json& flags = c.at("reducibility");
      if (!flags.is_object()) throw InputError(where + ".reducibility must be an object");
      for (const auto& [key, value] : flags.items()) {
        if (!value.is_boolean()) throw InputError(where + ".reducibility values must be booleans");
        cls.reducibility.emplace_back(parse_rational(key), value.get<bool>());
      }
    }
    s.classes.push_back(std::move(cls));
  }

  const json& sigma = require(doc, "sigma", "scenario");
  const json& blocks = require(sigma, "blocks", "sigma");
  if (!blocks.is_array()) throw InputError("sigma.blocks must be an array");
  for (const auto& b : blocks) s.blocks.push_back(block_field(b, "sigma.blocks[]"));

  if (doc.contains("tau")) {
    const json& tau = doc.at("tau");
    if (tau.contains("label")) s.tau.label = string_field(tau.at("label"), "tau.label");
    if (tau.contains("tilde")) s.tau.tilde = parse_tilde(string_field(tau.at("tilde"), "tau.tilde"));
  }
  if (doc.contains("torus_block")) s.torus_block = block_field(doc.at("torus_block"), "torus_block");
  if (doc.contains("cocycle")) {
    const json& form = doc.at("cocycle");
    if (!form.is_array()) throw InputError("cocycle must be a square 0/1 matrix");
    BilinearCocycle b;
    for (const auto& row : form) {
      if (!row.is_array()) throw InputError("cocycle must be a square 0/1 matrix");
      std::vector<int> r;
      for (const auto& v : row) {
        const int x = int_field(v, "cocycle");
        if (x != 0 && x != 1) throw InputError("cocycle entries must be 0 or 1");
        r.push_back(x);
      }
      b.push_back(std::move(r));
    }
    for (const auto& row : b) {
      if (row.size() != b.size()) throw InputError("cocycle must be a square 0/1 matrix");
    }
    s.cocycle = std::move(b);
  }
  return s;
}

inline json scenario_to_json(const Scenario& s) {
  json doc;
  doc["group"] = {{"kind", to_string(s.kind)}, {"n", s.n}};
  doc["levi"] = {{"block_sizes", s.levi.block_sizes}, {"q", s.levi.q}};
  json classes = json::array();
  for (const auto& c : s.classes) {
    json entry = {{"id", c.id}, {"size", c.size}, {"torsion", c.torsion}, {"dual", c.dual_id},
                  {"dual_offset", to_string(c.dual_offset)}};
    if (!c.reducibility.empty()) {
      json flags = json::object();
      for (const auto& [key, flag] : c.reducibility) flags[to_string(key)] = flag;
      entry["reducibility"] = flags;
    }
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  json blocks = json::array();
  for (const auto& b : s.blocks) blocks.push_back({{"class", b.class_id}, {"t", to_string(b.t)}});
  doc["sigma"] = {{"blocks", std::move(blocks)}};
  doc["tau"] = {{"label", s.tau.label}, {"tilde", to_string(s.tau.tilde)}};
  if (s.torus_block) doc["torus_block"] = {{"class", s.torus_block->class_id}, {"t", to_string(s.torus_block->t)}};
  if (s.cocycle) doc["cocycle"] = *s.cocycle;
  return doc;
}

inline Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read scenario file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

// FNV-1a over the canonical serialization.
inline std::string digest(const Scenario& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : scenario_to_json(s).dump()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tempdual::io
