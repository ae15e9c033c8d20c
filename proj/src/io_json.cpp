#include "strongl/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace strongl {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string id_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "id must be a string or an integer");
}

Slope slope_of(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Slope(j.get<long long>());
    if (j.is_string()) return parse_slope(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "expected \"p/q\", \"inf\" or an integer");
}

int int_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AWTree tree_from_json(const json& j) {
  AWTree t;
  const json& vs = field(j, "vertices", "tree");
  if (!vs.is_array()) fail("vertices", "expected an array");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string at = "vertices[" + std::to_string(i) + "]";
    TreeVertex v;
    v.id = id_of(field(vs[i], "id", at), at + ".id");
    const json& s = field(vs[i], "sign", at);
    if (s.is_string() && (s == "+" || s == "-")) v.sign = s == "+" ? 1 : -1;
    else v.sign = int_of(s, at + ".sign");
    v.weight = slope_of(field(vs[i], "weight", at), at + ".weight");
    t.vertices.push_back(std::move(v));
  }
  if (j.contains("edges")) {
    const json& es = j["edges"];
    if (!es.is_array()) fail("edges", "expected an array");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string at = "edges[" + std::to_string(i) + "]";
      if (!es[i].is_array() || es[i].size() != 2) fail(at, "expected a pair of ids");
      t.edges.emplace_back(id_of(es[i][0], at), id_of(es[i][1], at));
    }
  }
  return t;
}

json to_json(const AWTree& t) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : t.vertices) j["vertices"].push_back({{"id", v.id}, {"sign", v.sign}, {"weight", to_string(v.weight)}});
  j["edges"] = json::array();
  for (const auto& [a, b] : t.edges) j["edges"].push_back({a, b});
  return j;
}

FramedLink link_from_json(const json& j) {
  FramedLink l;
  const json& cs = field(j, "components", "link");
  if (!cs.is_array()) fail("components", "expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string at = "components[" + std::to_string(i) + "]";
    try {
      l.add_component(id_of(field(cs[i], "id", at), at + ".id"), slope_of(field(cs[i], "framing", at), at + ".framing"));
    } catch (const std::invalid_argument& e) {
      fail(at, e.what());
    }
  }
  if (j.contains("links")) {
    const json& ls = j["links"];
    if (!ls.is_array()) fail("links", "expected an array");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::string at = "links[" + std::to_string(i) + "]";
      std::string a, b;
      int lk = 1;
      if (ls[i].is_array()) {
        if (ls[i].size() != 2) fail(at, "expected a pair of ids");
        a = id_of(ls[i][0], at);
        b = id_of(ls[i][1], at);
      } else {
        a = id_of(field(ls[i], "a", at), at + ".a");
        b = id_of(field(ls[i], "b", at), at + ".b");
        if (ls[i].contains("lk")) lk = int_of(ls[i]["lk"], at + ".lk");
      }
      try {
        l.link(a, b, lk);
      } catch (const std::invalid_argument& e) {
        fail(at, e.what());
      }
    }
  }
  return l;
}

json to_json(const FramedLink& l) {
  json j;
  j["components"] = json::array();
  for (const auto& c : l.components()) j["components"].push_back({{"id", c.id}, {"framing", to_string(c.framing)}});
  j["links"] = json::array();
  for (const auto& e : l.links()) j["links"].push_back({{"a", e.a}, {"b", e.b}, {"lk", e.lk}});
  return j;
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  const json& xs = field(j, "crossings", "diagram");
  if (!xs.is_array()) fail("crossings", "expected an array");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::string at = "crossings[" + std::to_string(i) + "]";
    const json& arcs = field(xs[i], "arcs", at);
    if (!arcs.is_array() || arcs.size() != 4) fail(at + ".arcs", "expected four arc ids");
    std::array<int, 4> a{};
    for (std::size_t k = 0; k < 4; ++k) a[k] = int_of(arcs[k], at + ".arcs");
    const int over = xs[i].contains("over") ? int_of(xs[i]["over"], at + ".over") : 1;
    if (over != 0 && over != 1) fail(at + ".over", "expected 0 or 1");
    d.crossings.push_back(make_crossing(a, over));
  }
  if (j.contains("alternating")) {
    if (!j["alternating"].is_boolean()) fail("alternating", "expected a boolean");
    d.alternating = j["alternating"].get<bool>();
  }
  if (j.contains("loops")) d.free_loops = int_of(j["loops"], "loops");
  return d;
}

json to_json(const Diagram& d) {
  json j;
  j["crossings"] = json::array();
  for (const auto& x : d.crossings) j["crossings"].push_back({{"arcs", x.arcs}, {"over", 1}});
  j["alternating"] = d.alternating;
  if (d.free_loops) j["loops"] = d.free_loops;
  return j;
}

Diagram parse_pd(const std::string& text) {
  static const std::regex token(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  static const std::regex loops(R"(loops\s+(\d+))");
  Diagram d;
  std::istringstream in(text);
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    std::string rest = line;
    if (const auto hash = rest.find('#'); hash != std::string::npos) rest.resize(hash);
    std::smatch m;
    if (std::regex_search(rest, m, loops)) {
      d.free_loops += std::stoi(m[1]);
      rest = m.prefix().str() + m.suffix().str();
    }
    for (auto it = std::sregex_iterator(rest.begin(), rest.end(), token); it != std::sregex_iterator(); ++it)
      d.crossings.push_back(make_crossing({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])}, 1));
    const std::string left = std::regex_replace(rest, token, "");
    if (left.find_first_not_of(" \t\r,;") != std::string::npos)
      throw InputError("PD line " + std::to_string(n) + ": unexpected text '" + left + "'");
  }
  d.alternating = true;
  const auto v = validate_diagram(d);
  for (const auto& msg : v.violations)
    if (msg.rfind("alternating", 0) == 0) d.alternating = false;
  return d;
}

Diagram parse_diagram(const std::string& text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return diagram_from_json(parse_json(text, source));
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind(source, 0) == 0) throw;
      throw InputError(source + ": " + e.what());
    }
  }
  return parse_pd(text);
}

}  // namespace strongl
