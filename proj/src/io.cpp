#include "frontis/io.hpp"

#include <fstream>
#include <set>

#include "frontis/error.hpp"

namespace frontis {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

void reject_unknown_fields(const json& j, const std::set<std::string>& allowed,
                           const char* what) {
  if (!j.is_object()) throw parse_error(std::string(what) + " document must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw parse_error(std::string("unknown field in ") + what + " document: " + it.key());
}

std::pair<int, std::vector<std::string>> parse_elements(const json& j) {
  if (!j.contains("elements")) throw parse_error("missing field: elements");
  const auto& e = j.at("elements");
  if (e.is_number_integer()) {
    int n = e.get<int>();
    if (n < 1) throw parse_error("elements count must be positive");
    return {n, {}};
  }
  if (e.is_array()) {
    std::vector<std::string> labels;
    for (const auto& x : e) {
      if (!x.is_string()) throw parse_error("element labels must be strings");
      labels.push_back(x.get<std::string>());
    }
    if (labels.empty()) throw parse_error("element label list must not be empty");
    std::set<std::string> unique(labels.begin(), labels.end());
    if (unique.size() != labels.size()) throw parse_error("element labels must be distinct");
    return {static_cast<int>(labels.size()), labels};
  }
  throw parse_error("elements must be a count or a label list");
}

std::vector<std::uint8_t> parse_table(const json& j, int n, const char* field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw parse_error(std::string(field) + " must be an array of " + std::to_string(n) + " rows");
  std::vector<std::uint8_t> t(n * n);
  for (int a = 0; a < n; ++a) {
    const auto& row = j.at(a);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw parse_error(std::string(field) + " row " + std::to_string(a) + " must have " +
                        std::to_string(n) + " entries");
    for (int b = 0; b < n; ++b) {
      if (!row.at(b).is_number_integer())
        throw parse_error(std::string(field) + " entries must be integers");
      long v = row.at(b).get<long>();
      if (v < 0 || v >= n)
        throw range_error(std::string(field) + "[" + std::to_string(a) + "][" +
                          std::to_string(b) + "] out of range");
      t[a * n + b] = static_cast<std::uint8_t>(v);
    }
  }
  return t;
}

int parse_index(const json& j, int n, const char* field) {
  if (!j.is_number_integer()) throw parse_error(std::string(field) + " must be an index");
  long v = j.get<long>();
  if (v < 0 || v >= n) throw range_error(std::string(field) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

algebra_document parse_algebra_document(const json& j) {
  reject_unknown_fields(j, {"name", "elements", "imp", "one", "zero", "meet", "tau"}, "algebra");
  algebra_document doc;
  auto [n, labels] = parse_elements(j);
  doc.alg.n = n;
  doc.alg.labels = std::move(labels);
  if (!j.contains("imp")) throw parse_error("missing field: imp");
  doc.alg.imp = parse_table(j.at("imp"), n, "imp");
  if (!j.contains("one")) throw parse_error("missing field: one");
  doc.alg.one = parse_index(j.at("one"), n, "one");
  if (j.contains("zero")) doc.alg.zero = parse_index(j.at("zero"), n, "zero");
  if (j.contains("meet")) doc.alg.meet = parse_table(j.at("meet"), n, "meet");
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw parse_error("name must be a string");
    doc.alg.name = j.at("name").get<std::string>();
  }
  if (j.contains("tau")) {
    const auto& t = j.at("tau");
    if (!t.is_array() || static_cast<int>(t.size()) != n)
      throw parse_error("tau must list one image per element");
    unary_map u{n, {}};
    for (const auto& x : t) u.map.push_back(parse_index(x, n, "tau entry"));
    doc.tau = std::move(u);
  }
  doc.alg.validate_shape();
  return doc;
}

ojson emit_algebra_document(const algebra_document& doc) {
  ojson j;
  if (!doc.alg.name.empty()) j["name"] = doc.alg.name;
  if (doc.alg.labels.empty())
    j["elements"] = doc.alg.n;
  else
    j["elements"] = doc.alg.labels;
  int n = doc.alg.n;
  ojson imp = ojson::array();
  for (int a = 0; a < n; ++a) {
    ojson row = ojson::array();
    for (int b = 0; b < n; ++b) row.push_back(doc.alg.imp_at(a, b));
    imp.push_back(std::move(row));
  }
  j["imp"] = std::move(imp);
  j["one"] = doc.alg.one;
  if (doc.alg.zero) j["zero"] = *doc.alg.zero;
  if (doc.alg.meet) {
    ojson meet = ojson::array();
    for (int a = 0; a < n; ++a) {
      ojson row = ojson::array();
      for (int b = 0; b < n; ++b) row.push_back(doc.alg.meet_at(a, b));
      meet.push_back(std::move(row));
    }
    j["meet"] = std::move(meet);
  }
  if (doc.tau) j["tau"] = doc.tau->map;
  return j;
}

finite_poset parse_poset_document(const json& j) {
  reject_unknown_fields(j, {"name", "elements", "leq", "covers"}, "poset");
  auto [n, labels] = parse_elements(j);
  (void)labels;
  bool has_leq = j.contains("leq"), has_covers = j.contains("covers");
  if (has_leq == has_covers)
    throw parse_error("poset document needs exactly one of leq or covers");
  std::vector<std::pair<int, int>> pairs;
  const auto& arr = j.at(has_leq ? "leq" : "covers");
  if (!arr.is_array()) throw parse_error("leq/covers must be an array of pairs");
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw parse_error("leq/covers entries must be pairs");
    pairs.emplace_back(parse_index(p.at(0), n, "pair"), parse_index(p.at(1), n, "pair"));
  }
  if (has_covers) return finite_poset::from_covers(n, pairs);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) leq[a][a] = true;
  for (auto [a, b] : pairs) leq[a][b] = true;
  return finite_poset::from_leq(n, leq);
}

ojson emit_poset_document(const finite_poset& p, const std::vector<std::string>* labels) {
  ojson j;
  if (labels && !labels->empty())
    j["elements"] = *labels;
  else
    j["elements"] = p.size();
  ojson covers = ojson::array();
  for (auto [a, b] : p.cover_pairs()) covers.push_back(ojson::array({a, b}));
  j["covers"] = std::move(covers);
  return j;
}

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

algebra_document load_algebra_file(const std::string& path) {
  auto doc = parse_algebra_document(load_json_file(path));
  if (doc.alg.name.empty()) doc.alg.name = path;
  return doc;
}

finite_poset load_poset_file(const std::string& path) {
  return parse_poset_document(load_json_file(path));
}

ojson report_to_json(const report& r) {
  ojson out;
  out["subject"] = r.subject;
  out["pass"] = r.pass();
  ojson vs = ojson::array();
  for (const auto& v : r.violations) {
    ojson e;
    e["law"] = v.law;
    e["witness"] = v.witness;
    if (!v.detail.empty()) e["detail"] = v.detail;
    vs.push_back(std::move(e));
  }
  out["violations"] = std::move(vs);
  return out;
}

}  // namespace frontis
