#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "letterplace/determinantal.hpp"
#include "letterplace/quotient.hpp"

namespace letterplace::io {

using json = nlohmann::ordered_json;

inline const char* kFormatVersion = "1.0";

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Accepts either inline JSON (leading '{' or '[') or a path to a JSON file.
inline json load_json(const std::string& arg) {
  std::string text = arg;
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) text = read_file(arg);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw Error(Errc::InvalidInput, std::string("field '") + what + "' has the wrong type");
  }
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

// --- posets -----------------------------------------------------------------

inline Poset poset_from_json(const json& j) {
  int n = get_as<int>(field(j, "n"), "n");
  auto covers = get_as<std::vector<std::pair<int, int>>>(j.value("covers", json::array()), "covers");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get_as<std::vector<std::string>>(j.at("labels"), "labels");
  return Poset(n, covers, labels);
}

inline json to_json(const Poset& P) {
  json j;
  j["n"] = P.size();
  j["covers"] = P.covers();
  if (!P.labels().empty()) j["labels"] = P.labels();
  return j;
}

inline int resolve_label(const Poset& P, const std::string& tok) {
  for (int p = 0; p < P.size(); ++p)
    if (P.label(p) == tok) return p;
  throw Error(Errc::IdentifierOutOfRange, "no element labelled '" + tok + "'");
}

// --- Hom(P,N) ---------------------------------------------------------------

inline IsotoneMap map_from_json(const json& j) { return {get_as<std::vector<int>>(j, "map")}; }

inline std::vector<IsotoneMap> maps_from_json(const json& j) {
  std::vector<IsotoneMap> out;
  if (!j.is_array()) throw Error(Errc::InvalidInput, "expected a list of maps");
  for (const auto& m : j) out.push_back(map_from_json(m));
  return out;
}

inline HomIdeal homideal_from_json(const json& j) {
  Poset P = poset_from_json(field(j, "poset"));
  const json& r = field(j, "repr");
  if (r.contains("principal")) return HomIdeal::principal(std::move(P), map_from_json(r.at("principal")));
  if (r.contains("finite")) return HomIdeal::finite(std::move(P), maps_from_json(r.at("finite")));
  if (r.contains("cofinite")) return HomIdeal::cofinite(std::move(P), maps_from_json(r.at("cofinite")));
  throw Error(Errc::InvalidInput, "repr must be principal, finite or cofinite");
}

inline json to_json(const HomIdeal& J) {
  json j;
  j["poset"] = to_json(J.poset());
  json r;
  if (auto* p = std::get_if<Principal>(&J.repr())) r["principal"] = p->hull.values;
  else if (auto* f = std::get_if<ExplicitFinite>(&J.repr())) {
    r["finite"] = json::array();
    for (const auto& m : f->maps) r["finite"].push_back(m.values);
  } else {
    r["cofinite"] = json::array();
    for (const auto& m : J.complement_gens()) r["cofinite"].push_back(m.values);
  }
  j["repr"] = r;
  return j;
}

// --- monomial ideals --------------------------------------------------------

inline json to_json(const MonomialIdeal& I, const LabelFn& label = {}) {
  json g = json::array();
  for (const auto& m : I.gens()) g.push_back(m.to_string(label));
  return g;
}

struct IdealFile {
  MonomialIdeal ideal;
  VarFamily family = VarFamily::Nat;
  std::optional<int> m;
};

/// Newline separated monomials. Header lines start with '#':
/// "# family: elem|nat" and "# m: <count>". Blank lines are ignored.
inline IdealFile parse_ideal_text(const std::string& text, const Poset* P = nullptr) {
  IdealFile out;
  std::vector<Monomial> gens;
  std::istringstream in(text);
  std::string line;
  LabelResolver resolve;
  if (P) resolve = [P](const std::string& t) { return resolve_label(*P, t); };
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(1, colon - 1), val = line.substr(colon + 1);
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
      };
      key = trim(key);
      val = trim(val);
      if (key == "family") {
        if (val == "elem") out.family = VarFamily::Elem;
        else if (val == "nat") out.family = VarFamily::Nat;
        else throw Error(Errc::InvalidInput, "family must be elem or nat");
      } else if (key == "m") {
        try {
          out.m = std::stoi(val);
        } catch (const std::exception&) {
          throw Error(Errc::InvalidInput, "bad m header");
        }
      }
      continue;
    }
    body.push_back(line);
  }
  for (const auto& l : body) gens.push_back(parse_monomial(l, out.family, resolve));
  out.ideal = MonomialIdeal(std::move(gens));
  return out;
}

inline IdealFile load_ideal_file(const std::string& path, const Poset* P = nullptr) {
  return parse_ideal_text(read_file(path), P);
}

// --- fiber maps -------------------------------------------------------------

inline FiberMap fibermap_from_json(const json& j) {
  FiberMap f;
  f.source = get_as<PairSet>(field(j, "source"), "source");
  auto assign = get_as<std::vector<int>>(field(j, "assignment"), "assignment");
  if (assign.size() != f.source.size())
    throw Error(Errc::InvalidInput, "source and assignment have different lengths");
  for (int r : assign) f.target.push_back(VarIndex::target(r));
  return f;
}

inline json kpoly_json(const KPoly& k) { return json{{"coefficients", k}, {"text", kpoly_to_string(k)}}; }

}  // namespace letterplace::io
