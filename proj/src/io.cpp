#include "curco/io.hpp"

#include <json.hpp>

#include <sstream>

namespace curco {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& context) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error(context + ": not valid structured text");
  if (!j.is_object()) throw input_error(context + ": top level must be an object");
  return j;
}

Rat parse_scalar(const json& v, const std::string& where) {
  if (!v.is_string()) throw input_error(where + ": scalars must be \"p\" or \"p/q\" strings");
  auto r = Rat::parse(v.get<std::string>());
  if (!r) throw input_error(where + ": bad scalar '" + v.get<std::string>() + "'");
  return *r;
}

std::pair<size_t, size_t> parse_pair_key(const std::string& key, size_t dim, const std::string& where) {
  size_t comma = key.find(',');
  if (comma == std::string::npos) throw input_error(where + ": key '" + key + "' must be \"i,j\"");
  try {
    size_t p1 = 0, p2 = 0;
    long i = std::stol(key.substr(0, comma), &p1);
    long j = std::stol(key.substr(comma + 1), &p2);
    if (p1 != comma || p2 != key.size() - comma - 1 || i < 0 || j < 0) throw input_error("");
    if (size_t(i) >= dim || size_t(j) >= dim)
      throw input_error(where + ": key '" + key + "' is out of range for dimension " +
                        std::to_string(dim));
    return {size_t(i), size_t(j)};
  } catch (const input_error&) {
    throw;
  } catch (...) {
    throw input_error(where + ": key '" + key + "' must be \"i,j\" with 0-based indices");
  }
}

size_t parse_index_key(const std::string& key, size_t dim, const std::string& where) {
  try {
    size_t pos = 0;
    long k = std::stol(key, &pos);
    if (pos != key.size() || k < 0 || size_t(k) >= dim) throw input_error("");
    return size_t(k);
  } catch (...) {
    throw input_error(where + ": coefficient index '" + key + "' out of range");
  }
}

struct Header {
  std::string name;
  size_t dim = 0;
  std::vector<std::string> basis;
};

Header parse_header(const json& j, const std::string& context, const std::string& kind) {
  if (!j.contains("kind") || !j["kind"].is_string() || j["kind"].get<std::string>() != kind)
    throw input_error(context + ": expected kind \"" + kind + "\"");
  Header h;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw input_error(context + ": name must be a string");
    h.name = j["name"].get<std::string>();
  }
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw input_error(context + ": dim must be a nonnegative integer");
  h.dim = j["dim"].get<size_t>();
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != h.dim)
      throw input_error(context + ": basis must list exactly dim names");
    for (const auto& b : j["basis"]) {
      if (!b.is_string()) throw input_error(context + ": basis names must be strings");
      h.basis.push_back(b.get<std::string>());
    }
  }
  return h;
}

}  // namespace

std::string detect_kind(const std::string& text, const std::string& context) {
  json j = parse_json(text, context);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw input_error(context + ": missing kind field");
  return j["kind"].get<std::string>();
}

NamedLie parse_lie(const std::string& text, const std::string& context) {
  json j = parse_json(text, context);
  Header h = parse_header(j, context, "lie");
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_object()) throw input_error(context + ": brackets must be an object");
    for (const auto& [key, val] : j["brackets"].items()) {
      std::string where = context + ": brackets['" + key + "']";
      auto [i, jj] = parse_pair_key(key, h.dim, where);
      if (i >= jj) throw input_error(where + ": bracket pairs must satisfy i < j");
      if (!val.is_object()) throw input_error(where + ": value must be an object");
      BracketEntry e;
      e.i = i;
      e.j = jj;
      for (const auto& [ck, cv] : val.items())
        e.coeffs.emplace_back(parse_index_key(ck, h.dim, where), parse_scalar(cv, where));
      entries.push_back(std::move(e));
    }
  }
  try {
    return NamedLie{h.name, LieAlgebra::make(h.dim, h.basis, entries)};
  } catch (const validation_error& e) {
    throw input_error(context + ": " + e.what());
  }
}

NamedComm parse_comm(const std::string& text, const std::string& context) {
  json j = parse_json(text, context);
  Header h = parse_header(j, context, "commutative");
  if (!j.contains("unit") || !j["unit"].is_array() || j["unit"].size() != h.dim)
    throw input_error(context + ": unit must list exactly dim scalars");
  Vec unit;
  for (const auto& u : j["unit"]) unit.push_back(parse_scalar(u, context + ": unit"));
  std::vector<ProductEntry> entries;
  if (j.contains("products")) {
    if (!j["products"].is_object()) throw input_error(context + ": products must be an object");
    for (const auto& [key, val] : j["products"].items()) {
      std::string where = context + ": products['" + key + "']";
      auto [i, jj] = parse_pair_key(key, h.dim, where);
      if (i > jj) throw input_error(where + ": product pairs must satisfy i <= j");
      if (!val.is_object()) throw input_error(where + ": value must be an object");
      ProductEntry e;
      e.i = i;
      e.j = jj;
      for (const auto& [ck, cv] : val.items())
        e.coeffs.emplace_back(parse_index_key(ck, h.dim, where), parse_scalar(cv, where));
      entries.push_back(std::move(e));
    }
  }
  try {
    return NamedComm{h.name, CommAlgebra::make(h.dim, h.basis, unit, entries)};
  } catch (const validation_error& e) {
    throw input_error(context + ": " + e.what());
  }
}

std::string serialize_lie(const LieAlgebra& l, const std::string& name) {
  json j;
  j["kind"] = "lie";
  j["name"] = name;
  j["dim"] = l.dim();
  j["basis"] = l.names();
  json brackets = json::object();
  for (size_t i = 0; i < l.dim(); ++i)
    for (size_t jj = i + 1; jj < l.dim(); ++jj) {
      const Vec& b = l.bracket(i, jj);
      json coeffs = json::object();
      for (size_t k = 0; k < l.dim(); ++k)
        if (!b[k].is_zero()) coeffs[std::to_string(k)] = b[k].str();
      if (!coeffs.empty()) brackets[std::to_string(i) + "," + std::to_string(jj)] = coeffs;
    }
  j["brackets"] = brackets;
  return j.dump(2) + "\n";
}

std::string serialize_comm(const CommAlgebra& a, const std::string& name) {
  json j;
  j["kind"] = "commutative";
  j["name"] = name;
  j["dim"] = a.dim();
  j["basis"] = a.names();
  json unit = json::array();
  for (const auto& u : a.unit()) unit.push_back(u.str());
  j["unit"] = unit;
  json products = json::object();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t jj = i; jj < a.dim(); ++jj) {
      const Vec& p = a.product(i, jj);
      json coeffs = json::object();
      for (size_t k = 0; k < a.dim(); ++k)
        if (!p[k].is_zero()) coeffs[std::to_string(k)] = p[k].str();
      if (!coeffs.empty()) products[std::to_string(i) + "," + std::to_string(jj)] = coeffs;
    }
  j["products"] = products;
  return j.dump(2) + "\n";
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint(const std::string& bytes) {
  uint64_t h = fnv1a64(bytes);
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace curco
