#include "residua/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace residua {

using nlohmann::json;

RawPoset parse_poset_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  RawPoset raw;
  try {
    raw.name = j.value("name", "");
    for (const auto& e : j.at("elements")) raw.elements.push_back(e.get<std::string>());
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw Error(ErrorKind::ParseError, "each cover must be a [lower, upper] pair");
      raw.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    for (const auto& [k, v] : j.at("op").items()) raw.op.emplace_back(k, v.get<std::string>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return raw;
}

RawPoset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_json(buf.str());
}

std::string poset_to_json(const StructuredPoset& sp) {
  const Poset& p = sp.poset;
  const int n = p.size();
  json covers = json::array();
  for (int i = 0; i < n; ++i) {
    // j covers i when i < j and nothing sits strictly between
    for_each_bit(p.up[i] & ~bit(i), [&](int j) {
      Mask between = p.up[i] & p.down[j] & ~bit(i) & ~bit(j);
      if (between == 0) covers.push_back({p.elements[i], p.elements[j]});
    });
  }
  json op = json::object();
  for (int i = 0; i < n; ++i) op[p.elements[i]] = p.elements[sp.op(i)];
  json j{{"name", sp.name}, {"elements", p.elements}, {"covers", covers}, {"op", op}};
  return j.dump(2);
}

}  // namespace residua
