#pragma once

#include "dyck.hpp"
#include "hecke.hpp"
#include "homology.hpp"
#include "laurent.hpp"
#include "path.hpp"
#include "poly.hpp"
#include "zelevinsky.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dyckgrass {

using Json = nlohmann::ordered_json;

inline Json path_to_json(const Path& p) {
  return Json{{"n", p.n}, {"i", p.i}, {"steps", p.steps}};
}

inline Path path_from_json(const Json& j) {
  return Path(j.at("n").get<int>(), j.at("i").get<int>(), j.at("steps").get<std::string>());
}

inline Json box_to_json(const Box& b) { return Json::array({b.x, b.y}); }

inline Box box_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("box must be [x,y]");
  return Box{j[0].get<int>(), j[1].get<int>()};
}

inline Json strip_to_json(const DyckStrip& s) {
  Json a = Json::array();
  for (const Box& b : s) a.push_back(box_to_json(b));
  return a;
}

inline DyckStrip strip_from_json(const Json& j) {
  DyckStrip s;
  for (const auto& e : j) s.push_back(box_from_json(e));
  return s;
}

inline Json partition_to_json(const DyckPartition& p) {
  Json a = Json::array();
  for (const DyckStrip& s : p) a.push_back(strip_to_json(s));
  return a;
}

inline DyckPartition partition_from_json(const Json& j) {
  DyckPartition p;
  for (const auto& e : j) p.push_back(strip_from_json(e));
  return p;
}

// Laurent polynomials travel as [[exponent, "coefficient"], ...] ascending.
inline Json laurent_to_json(const Laurent& f) {
  Json a = Json::array();
  for (const auto& [e, c] : f.terms()) a.push_back(Json::array({e, c.str()}));
  return a;
}

inline Laurent laurent_from_json(const Json& j) {
  Laurent f;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("laurent term shape");
    f.add_term(t[0].get<int>(), Int(t[1].get<std::string>()));
  }
  return f;
}

inline Json label_set_to_json(const std::set<int>& s) {
  Json a = Json::array();
  for (int k : s) a.push_back(k);
  return a;
}

inline std::set<int> label_set_from_json(const Json& j) {
  std::set<int> s;
  for (const auto& e : j) s.insert(e.get<int>());
  return s;
}

inline Json pair_to_json(const TranslationPair& tp) {
  Json I = Json::array(), J = Json::array();
  for (const auto& s : tp.Ivec) I.push_back(label_set_to_json(s));
  for (const auto& s : tp.Jvec) J.push_back(label_set_to_json(s));
  return Json{{"I", I}, {"J", J}, {"shift", tp.shift}};
}

inline TranslationPair pair_from_json(int n, const Json& j) {
  TranslationPair tp;
  tp.n = n;
  for (const auto& e : j.at("I")) tp.Ivec.push_back(label_set_from_json(e));
  for (const auto& e : j.at("J")) tp.Jvec.push_back(label_set_from_json(e));
  tp.shift = j.at("shift").get<int>();
  return tp;
}

inline Json rouquier_to_json(const RouquierTerms& rt) {
  Json terms = Json::object();
  for (const auto& [deg, paths] : rt.terms) {
    Json a = Json::array();
    for (const Path& p : paths) a.push_back(p.steps);
    terms[std::to_string(deg)] = a;
  }
  return Json{{"mu", rt.mu.steps}, {"terms", terms}};
}

// Multivariate polynomials travel as [[exponent-vector, "num", "den"], ...].
inline Json mpoly_to_json(const MPoly& f) {
  Json a = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json ev = Json::array();
    for (int k : e) ev.push_back(k);
    a.push_back(Json::array(
        {ev, boost::multiprecision::numerator(c).str(), boost::multiprecision::denominator(c).str()}));
  }
  return a;
}

inline MPoly mpoly_from_json(int n, const Json& j) {
  MPoly f(n);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("polynomial term shape");
    std::vector<int> e;
    for (const auto& k : t[0]) e.push_back(k.get<int>());
    Rat c(Int(t[1].get<std::string>()), Int(t[2].get<std::string>()));
    f.add_term(e, c);
  }
  return f;
}

inline Json diff_support_to_json(const DiffSupport& ds) {
  Json nodes = Json::array();
  for (const auto& [deg, paths] : ds.nodes.terms)
    for (const Path& p : paths) nodes.push_back(Json{{"degree", deg}, {"path", p.steps}});
  Json edges = Json::array();
  for (const DiffEdge& e : ds.edges)
    edges.push_back(Json{{"from_degree", e.from_deg},
                         {"from", e.from.steps},
                         {"to_degree", e.to_deg},
                         {"to", e.to.steps},
                         {"guaranteed", e.guaranteed}});
  return Json{{"mu", ds.nodes.mu.steps}, {"nodes", nodes}, {"edges", edges}};
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Fixture payloads: one file per (n,i) with every ordered pair's partitions.
inline Json partitions_fixture(int n, int i) {
  Grassmannian ctx(n, i);
  Json entries = Json::array();
  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      if (!ctx.leq(a, b)) continue;
      Json parts = Json::array();
      for (const DyckPartition& p : enumerate_partitions(ctx.paths[a], ctx.paths[b]))
        parts.push_back(partition_to_json(p));
      entries.push_back(Json{
          {"lower", ctx.paths[a].steps}, {"upper", ctx.paths[b].steps}, {"partitions", parts}});
    }
  return Json{{"n", n}, {"i", i}, {"entries", entries}};
}

inline Json kl_fixture(int n, int i) {
  Grassmannian ctx(n, i);
  auto h = parabolic_h_table(ctx);
  auto g = inverse_g_table(ctx, h);
  Json entries = Json::array();
  for (size_t a = 0; a < ctx.size(); ++a)
    for (size_t b = 0; b < ctx.size(); ++b) {
      if (!ctx.leq(a, b)) continue;
      entries.push_back(Json{{"lambda", ctx.paths[a].steps},
                             {"mu", ctx.paths[b].steps},
                             {"h", laurent_to_json(h[a][b])},
                             {"g", laurent_to_json(g[a][b])}});
    }
  return Json{{"n", n}, {"i", i}, {"entries", entries}};
}

}  // namespace dyckgrass
