#include "solvlie/json_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "solvlie/error.hpp"

namespace solvlie {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail("parse_error", what);
}

std::size_t get_index(const Json& j, const char* key) {
  require(j.contains(key), std::string("missing key '") + key + "'");
  const Json& v = j.at(key);
  require(v.is_number_integer() && v.get<std::int64_t>() >= 0,
          std::string("key '") + key + "' must be a non-negative integer");
  return static_cast<std::size_t>(v.get<std::int64_t>());
}

}  // namespace

Json field_to_json(const FieldDescriptor& f) {
  Json j;
  if (f.is_prime_field()) {
    j["kind"] = "Fp";
    j["p"] = f.p();
  } else {
    j["kind"] = "Q";
  }
  return j;
}

FieldDescriptor field_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind") && j.at("kind").is_string(),
          "field must be an object with a string 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return FieldDescriptor::rationals();
  if (kind == "Fp") {
    require(j.contains("p") && j.at("p").is_number_integer(),
            "field of kind 'Fp' needs an integer 'p'");
    std::int64_t p = j.at("p").get<std::int64_t>();
    require(p >= 2, "field modulus must be at least 2");
    return FieldDescriptor::gf(p);  // rejects composites with "not_prime"
  }
  fail("parse_error", "unknown field kind '" + kind + "'");
}

FieldDescriptor field_from_text(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "q") return FieldDescriptor::rationals();
  if (s.rfind("gf", 0) == 0) s = s.substr(2);
  if (!s.empty() && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  bool digits = !s.empty();
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
  if (!digits)
    fail("invalid_argument",
         "cannot read field '" + text + "' (use q, gf2, gf(3), ...)");
  return FieldDescriptor::gf(std::stoll(s));
}

Json algebra_to_json(const LieAlgebra& L) {
  Json doc;
  doc["field"] = field_to_json(L.field());
  doc["dim"] = L.dim();
  doc["basis_names"] = L.basis_names();
  Json brackets = Json::array();
  for (const ScEntry& e : L.nonzero_entries()) {
    Json entry;
    entry["i"] = e.i;
    entry["j"] = e.j;
    Json value = Json::array();
    for (const Scalar& c : e.value) value.push_back(c.to_string());
    entry["value"] = std::move(value);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

LieAlgebra algebra_from_json(const Json& doc) {
  require(doc.is_object(), "algebra document must be a JSON object");
  require(doc.contains("field"), "missing key 'field'");
  FieldDescriptor f = field_from_json(doc.at("field"));
  std::size_t n = get_index(doc, "dim");

  std::vector<std::string> names;
  if (doc.contains("basis_names")) {
    const Json& jn = doc.at("basis_names");
    require(jn.is_array() && jn.size() == n,
            "basis_names must list exactly dim names");
    for (const Json& name : jn) {
      require(name.is_string(), "basis names must be strings");
      names.push_back(name.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }

  require(doc.contains("brackets") && doc.at("brackets").is_array(),
          "missing array 'brackets'");
  std::vector<ScEntry> table;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  for (const Json& jb : doc.at("brackets")) {
    require(jb.is_object(), "each bracket must be an object");
    ScEntry e;
    e.i = get_index(jb, "i");
    e.j = get_index(jb, "j");
    require(e.i < n && e.j < n, "bracket index out of range");
    require(e.i < e.j, "brackets must have i < j (lower pairs follow by antisymmetry)");
    auto key = std::make_pair(e.i, e.j);
    require(!seen.count(key), "duplicate bracket for pair (" +
                                  std::to_string(e.i) + "," +
                                  std::to_string(e.j) + ")");
    seen[key] = true;
    require(jb.contains("value") && jb.at("value").is_array() &&
                jb.at("value").size() == n,
            "bracket value must be a vector of dim coordinates");
    for (const Json& c : jb.at("value")) {
      require(c.is_string(), "bracket coordinates must be scalar strings");
      e.value.push_back(Scalar::parse(f, c.get<std::string>()));
    }
    table.push_back(std::move(e));
  }
  return LieAlgebra(f, n, std::move(names), std::move(table));
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io_error", "cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("parse_error", std::string(e.what()));
  }
  return algebra_from_json(doc);
}

std::string algebra_to_text(const LieAlgebra& L) {
  return algebra_to_json(L).dump(2) + "\n";
}

Subspace parse_subspace(const FieldDescriptor& f, std::size_t n,
                        const std::string& text) {
  std::string body;
  for (char c : text)
    if (c != ' ') body.push_back(c);
  if (body.empty() || body == "0") return Subspace::zero(f, n);
  std::vector<Vec> rows;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t cut = body.find(';', start);
    if (cut == std::string::npos) cut = body.size();
    rows.push_back(parse_vector(f, n, body.substr(start, cut - start)));
    start = cut + 1;
  }
  return Subspace::span(f, n, rows);
}

std::string subspace_to_text(const Subspace& u) { return u.to_string(); }

}  // namespace solvlie
