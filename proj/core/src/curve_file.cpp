#include "treejac/curve_file.hpp"

#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "treejac/error.hpp"

namespace treejac {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail("unknown field '" + key + "' in " + where);
  }
}

const json& required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + " must be a string");
  return v.get<std::string>();
}

std::int64_t as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::string> as_id_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array of ids");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_string(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  only_keys(doc, {"components", "nodes", "ordering", "overrides"}, "curve file");

  CurveFile file;
  const json& comps = required(doc, "components", "curve file");
  if (!comps.is_array()) fail("'components' must be an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "components[" + std::to_string(i) + "]";
    only_keys(comps[i], {"id", "genus", "h"}, where);
    file.curve.components.push_back({as_string(required(comps[i], "id", where), where + ".id"),
                                     as_integer(required(comps[i], "genus", where), where + ".genus"),
                                     as_integer(required(comps[i], "h", where), where + ".h")});
  }

  const json& nodes = required(doc, "nodes", "curve file");
  if (!nodes.is_array()) fail("'nodes' must be an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    only_keys(nodes[i], {"id", "joins"}, where);
    auto joins = as_id_list(required(nodes[i], "joins", where), where + ".joins");
    if (joins.size() != 2) fail(where + ".joins must list exactly two component ids");
    file.curve.nodes.push_back({as_string(required(nodes[i], "id", where), where + ".id"), {joins[0], joins[1]}});
  }

  if (auto it = doc.find("ordering"); it != doc.end()) file.ordering = as_id_list(*it, "ordering");

  if (auto it = doc.find("overrides"); it != doc.end()) {
    if (!it->is_array()) fail("'overrides' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "overrides[" + std::to_string(i) + "]";
      const json& o = (*it)[i];
      only_keys(o, {"subcurve", "ordering"}, where);
      file.overrides.push_back({as_id_list(required(o, "subcurve", where), where + ".subcurve"),
                                as_id_list(required(o, "ordering", where), where + ".ordering")});
    }
  }
  return file;
}

std::string serialize_curve_file(const CurveFile& file) {
  json doc;
  doc["components"] = json::array();
  for (const auto& c : file.curve.components) doc["components"].push_back({{"id", c.id}, {"genus", c.genus}, {"h", c.h}});
  doc["nodes"] = json::array();
  for (const auto& p : file.curve.nodes)
    doc["nodes"].push_back({{"id", p.id}, {"joins", json::array({p.joins.first, p.joins.second})}});
  if (file.ordering) doc["ordering"] = *file.ordering;
  if (!file.overrides.empty()) {
    doc["overrides"] = json::array();
    for (const auto& o : file.overrides) doc["overrides"].push_back({{"subcurve", o.subcurve}, {"ordering", o.ordering}});
  }
  return doc.dump(2) + "\n";
}

OrderingOverrides resolve_overrides(const CurveGraph& x, const std::vector<SplitOverride>& overrides) {
  OrderingOverrides out;
  for (const auto& o : overrides) {
    std::vector<std::size_t> seq;
    for (const auto& id : o.ordering) seq.push_back(x.component_index(id));
    out[x.subcurve(o.subcurve)] = std::move(seq);
  }
  return out;
}

std::string to_dot(const CurveGraph& x) {
  std::ostringstream os;
  os << "graph curve {\n";
  for (const auto& c : x.components())
    os << "  \"" << c.id << "\" [label=\"" << c.id << " (g=" << c.genus << ", h=" << c.h << ")\"];\n";
  for (const auto& p : x.nodes())
    os << "  \"" << p.joins.first << "\" -- \"" << p.joins.second << "\" [label=\"" << p.id << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace treejac
