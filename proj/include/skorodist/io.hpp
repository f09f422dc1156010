#pragma once

// JSON reading and writing for paths, ordered sets, squeeze configs and family
// reports. Needs nlohmann/json on the include path.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "diagnostics.hpp"
#include "errors.hpp"
#include "ordered_set.hpp"
#include "path.hpp"
#include "squeeze.hpp"

namespace skorodist::io {

using nlohmann::json;

inline json parse_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(where + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

inline void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

/// A time: a number, or one of the strings "-inf", "inf", "+inf".
inline double time_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return -kInf;
    if (s == "inf" || s == "+inf") return kInf;
  }
  throw InputError("bad time value: " + j.dump());
}

inline json time_to(double t) {
  if (t == kInf) return "inf";
  if (t == -kInf) return "-inf";
  return t;
}

/// A point of R (a number) or R^d (an array of numbers).
inline Vec point_from(const json& j) {
  if (j.is_number()) return {j.get<double>()};
  if (j.is_array() && !j.empty()) {
    Vec v;
    for (const auto& c : j) {
      if (!c.is_number()) throw InputError("point coordinates must be numbers: " + j.dump());
      v.push_back(c.get<double>());
    }
    return v;
  }
  throw InputError("bad point: " + j.dump());
}

inline json point_to(const Vec& v) {
  if (v.size() == 1) return v[0];
  return v;
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline Path<Vec> path_from_json(const json& j, const std::string& where = "path") {
  try {
    if (!j.is_object()) throw InputError(where + ": a path must be a JSON object");
    const std::string space = j.value("space", "R");
    if (space != "R" && space.rfind("R^", 0) != 0) throw InputError(where + ": unknown space '" + space + "'");
    std::vector<TimeInterval> ivs;
    std::vector<double> pts;
    const json& dom = field(j, "domain", where);
    if (dom.contains("intervals"))
      for (const auto& iv : dom.at("intervals")) {
        if (!iv.is_array() || iv.size() != 2) throw InputError(where + ": intervals are [lo, hi] pairs");
        ivs.push_back({time_from(iv[0]), time_from(iv[1])});
      }
    if (dom.contains("points"))
      for (const auto& p : dom.at("points")) pts.push_back(time_from(p));
    Domain domain(ivs, pts);
    std::vector<Jump<Vec>> jumps;
    if (j.contains("jumps"))
      for (const auto& r : j.at("jumps"))
        jumps.push_back({time_from(field(r, "t", where)), point_from(field(r, "left", where)),
                         point_from(field(r, "right", where))});
    if (domain.empty()) return Path<Vec>::trivial();
    Path<Vec> path(std::move(domain), point_from(field(j, "initial", where)), std::move(jumps));
    if (space.rfind("R^", 0) == 0) {
      const std::size_t d = std::stoul(space.substr(2));
      if (path.initial().size() != d) throw InputError(where + ": values do not match space " + space);
    }
    return path;
  } catch (const InputError& e) {
    const std::string msg = e.what();
    throw InputError(msg.rfind(where, 0) == 0 ? msg : where + ": " + msg);
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline Path<Vec> read_path(const std::string& file) { return path_from_json(read_file(file), file); }

inline json path_to_json(const Path<Vec>& p) {
  json j;
  const std::size_t dim = p.is_trivial() ? 1 : p.initial().size();
  j["space"] = dim == 1 ? "R" : "R^" + std::to_string(dim);
  json ivs = json::array();
  for (const auto& iv : p.domain().intervals()) ivs.push_back({time_to(iv.lo), time_to(iv.hi)});
  j["domain"] = {{"intervals", ivs}, {"points", p.domain().points()}};
  j["initial"] = p.is_trivial() ? json(0.0) : point_to(p.initial());
  json jumps = json::array();
  for (const auto& r : p.jumps()) jumps.push_back({{"t", r.t}, {"left", point_to(r.left)}, {"right", point_to(r.right)}});
  j["jumps"] = jumps;
  return j;
}

inline SqueezeConfig squeeze_from_json(const json& j) {
  SqueezeConfig cfg;
  if (j.contains("phi")) cfg.phi_kind = parse_phi_kind(j.at("phi").get<std::string>());
  if (j.contains("dbar")) cfg.dbar_kind = parse_dbar_kind(j.at("dbar").get<std::string>());
  return cfg;
}

inline json squeeze_to_json(const SqueezeConfig& cfg) {
  return {{"phi", std::string(to_string(cfg.phi_kind))}, {"dbar", std::string(to_string(cfg.dbar_kind))}};
}

inline OrderedPointSet<Vec> ordered_set_from_json(const json& j, const std::string& where = "ordered set") {
  try {
    std::vector<Vec> points;
    for (const auto& p : field(j, "points", where)) points.push_back(point_from(p));
    IndexPairs pairs;
    if (j.contains("order_pairs"))
      for (const auto& pr : j.at("order_pairs")) {
        if (!pr.is_array() || pr.size() != 2) throw InputError("order pairs are [i, j]");
        pairs.emplace_back(pr[0].get<std::size_t>(), pr[1].get<std::size_t>());
      }
    return {std::move(points), pairs, j.value("total", false)};
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

template <class P>
json ordered_set_to_json(const OrderedPointSet<P>& k) {
  json pts = json::array();
  for (const auto& p : k.points()) {
    if constexpr (std::is_same_v<P, double>)
      pts.push_back(p);
    else
      pts.push_back(point_to(p));
  }
  // Only the cover relation is written; readers take the closure.
  json pairs = json::array();
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (!k.less(i, j)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < k.size() && cover; ++m)
        if (k.less(i, m) && k.less(m, j)) cover = false;
      if (cover) pairs.push_back({i, j});
    }
  return {{"points", pts}, {"order_pairs", pairs}, {"total", k.is_total()}};
}

inline json curve_to_json(const Curve& c) {
  json out = json::array();
  for (const auto& p : c) out.push_back({p.delta, p.value});
  return out;
}

inline json report_to_json(const FamilyReport& r) {
  json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["reason"] = r.reason;
  json cc = json::array();
  for (const auto& c : r.containment)
    cc.push_back({{"T", time_to(c.T)}, {"pass", c.pass}, {"box_lo", c.box_lo}, {"box_hi", c.box_hi}});
  j["compact_containment"] = cc;
  json curves = json::array();
  for (const auto& c : r.curves) {
    json e = {{"label", c.label}, {"curve", curve_to_json(c.curve)}, {"verdict", std::string(to_string(c.verdict))}};
    if (c.witness) {
      e["floor"] = c.floor;
      e["witness"] = *c.witness;
    }
    curves.push_back(e);
  }
  j["curves"] = curves;
  return j;
}

}  // namespace skorodist::io
