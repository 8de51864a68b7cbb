#include "ordertop/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ordertop/errors.hpp"
#include "ordertop/iso.hpp"

namespace ordertop {

namespace {

using nlohmann::ordered_json;

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
}

void require_keys(const ordered_json& doc, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!doc.is_object()) throw InvalidInput("top-level JSON value must be an object");
  for (const char* k : required)
    if (!doc.contains(k)) throw InvalidInput(std::string("missing key \"") + k + "\"");
  for (const auto& [key, value] : doc.items()) {
    bool known = std::any_of(required.begin(), required.end(),
                             [&](const char* k) { return key == k; }) ||
                 std::any_of(optional.begin(), optional.end(),
                             [&](const char* k) { return key == k; });
    if (!known) throw InvalidInput("unknown key \"" + key + "\"");
  }
}

std::vector<std::string> label_array(const ordered_json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string())
      throw InvalidInput(std::string(what) + " entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

FinitePoset poset_from_doc(const ordered_json& doc) {
  require_keys(doc, {"elements", "covers"});
  auto labels = label_array(doc["elements"], "\"elements\"");
  if (!doc["covers"].is_array()) throw InvalidInput("\"covers\" must be an array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["covers"]) {
    auto pair = label_array(e, "cover");
    if (pair.size() != 2) throw InvalidInput("covers must be two-element arrays");
    edges.emplace_back(std::move(pair[0]), std::move(pair[1]));
  }
  return FinitePoset::from_covers(labels, edges);
}

FiniteSpace space_from_doc(const ordered_json& doc) {
  require_keys(doc, {"points", "closed"}, {"eta"});
  auto labels = label_array(doc["points"], "\"points\"");
  std::vector<std::string> sorted_labels = labels;
  std::sort(sorted_labels.begin(), sorted_labels.end());
  if (std::adjacent_find(sorted_labels.begin(), sorted_labels.end()) !=
      sorted_labels.end())
    throw InvalidInput("point labels must be unique");
  auto index_of = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw UnknownLabel("unknown point \"" + l + "\"");
  };
  if (!doc["closed"].is_array()) throw InvalidInput("\"closed\" must be an array");
  std::vector<Bits> closed;
  for (const auto& set : doc["closed"]) {
    Bits b(labels.size());
    for (const auto& l : label_array(set, "closed set")) b.set(index_of(l));
    closed.push_back(std::move(b));
  }
  return FiniteSpace::from_closed_family(std::move(labels), std::move(closed));
}

ordered_json set_as_sorted_labels(const Bits& s, const std::vector<std::string>& labels) {
  std::vector<std::string> members;
  s.for_each([&](std::size_t i) { members.push_back(labels[i]); });
  std::sort(members.begin(), members.end());
  return ordered_json(members);
}

ordered_json space_doc(const FiniteSpace& x) {
  ordered_json doc;
  doc["points"] = x.labels();
  ordered_json closed = ordered_json::array();
  for (const auto& c : x.closed_sets()) closed.push_back(set_as_sorted_labels(c, x.labels()));
  doc["closed"] = std::move(closed);
  return doc;
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

FinitePoset poset_from_json_text(const std::string& text) {
  return poset_from_doc(parse(text));
}

FiniteSpace space_from_json_text(const std::string& text) {
  return space_from_doc(parse(text));
}

ParsedInput input_from_json_text(const std::string& text) {
  ordered_json doc = parse(text);
  if (doc.is_object() && doc.contains("elements")) return poset_from_doc(doc);
  if (doc.is_object() && doc.contains("points")) return space_from_doc(doc);
  throw InvalidInput("expected a poset (\"elements\") or space (\"points\") document");
}

std::string poset_to_json_text(const FinitePoset& p) {
  ordered_json doc;
  doc["elements"] = p.labels();
  ordered_json covers = ordered_json::array();
  for (const auto& [i, j] : p.cover_pairs())
    covers.push_back(ordered_json::array({p.label(i), p.label(j)}));
  doc["covers"] = std::move(covers);
  return doc.dump(2) + "\n";
}

std::string space_to_json_text(const FiniteSpace& x) {
  return space_doc(x).dump(2) + "\n";
}

std::string sobrify_to_json_text(const FiniteSpace& base, const FiniteSpace& result) {
  ordered_json doc = space_doc(result);
  ordered_json eta;
  for (std::size_t i = 0; i < base.points(); ++i)
    eta[base.label(i)] = set_as_sorted_labels(base.point_closure(i), base.labels());
  doc["eta"] = std::move(eta);
  return doc.dump(2) + "\n";
}

std::string poset_to_dot(const FinitePoset& p, const std::string& graph_name) {
  auto order = canonical_order(p);  // order[pos] = element index
  std::vector<std::size_t> pos(p.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;

  std::ostringstream out;
  out << "digraph " << quote_dot(graph_name) << " {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < order.size(); ++k)
    out << "  " << quote_dot(p.label(order[k])) << ";\n";

  auto covers = p.cover_pairs();
  std::sort(covers.begin(), covers.end(), [&](const auto& a, const auto& b) {
    return std::pair(pos[a.first], pos[a.second]) < std::pair(pos[b.first], pos[b.second]);
  });
  for (const auto& [i, j] : covers)
    out << "  " << quote_dot(p.label(i)) << " -> " << quote_dot(p.label(j)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << text;
  if (!out.flush()) throw InvalidInput("cannot write file: " + path);
}

}  // namespace ordertop
