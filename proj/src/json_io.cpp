#include "ybx/json_io.hpp"

#include <stdexcept>

namespace ybx::io {

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.get_str()}));
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    p.add_term(term[0].get<int>(), BigInt(term[1].get<std::string>()));
  }
  return p;
}

json to_json(const SpectralSum& s) {
  json out = json::array();
  for (const auto& t : s.terms()) out.push_back({{"d", t.d}, {"k", t.k}, {"p", to_json(t.p)}});
  return out;
}

SpectralSum spectral_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("spectral sum must be a JSON array");
  SpectralSum s;
  for (const auto& t : j) s.add(t.at("d").get<int>(), t.at("k").get<int>(), laurent_from_json(t.at("p")));
  return s;
}

json to_json(const smatrix::SBlock& block) {
  json entries = json::array();
  for (const auto& [key, value] : block.entries) {
    entries.push_back({{"a", to_string(block.basis_l[key[0]])},
                       {"b", to_string(block.basis_m[key[1]])},
                       {"i", to_string(block.basis_l[key[2]])},
                       {"j", to_string(block.basis_m[key[3]])},
                       {"value", to_json(value)}});
  }
  json bl = json::array(), bm = json::array();
  for (const auto& v : block.basis_l) bl.push_back(to_string(v));
  for (const auto& v : block.basis_m) bm.push_back(to_string(v));
  return {{"schema", "ybx/1"}, {"eps", block.eps.to_string()}, {"l", block.l},       {"m", block.m},
          {"basis_l", bl},     {"basis_m", bm},                 {"entries", entries}};
}

smatrix::SBlock sblock_from_json(const json& j) {
  smatrix::SBlock block;
  block.eps = Signature::parse(j.at("eps").get<std::string>());
  block.l = j.at("l").get<int>();
  block.m = j.at("m").get<int>();
  for (const auto& v : j.at("basis_l")) block.basis_l.push_back(parse_state(v.get<std::string>()));
  for (const auto& v : j.at("basis_m")) block.basis_m.push_back(parse_state(v.get<std::string>()));
  for (const auto& e : j.at("entries")) {
    const std::array<int, 4> key{block.index_l(parse_state(e.at("a").get<std::string>())),
                                 block.index_m(parse_state(e.at("b").get<std::string>())),
                                 block.index_l(parse_state(e.at("i").get<std::string>())),
                                 block.index_m(parse_state(e.at("j").get<std::string>()))};
    for (int idx : key) {
      if (idx < 0) throw std::invalid_argument("block entry refers to a vector outside the basis");
    }
    block.entries.emplace(key, spectral_from_json(e.at("value")));
  }
  return block;
}

json to_json(const LimitValue& v) {
  if (v.zero) return {{"zero", true}};
  return {{"zero", false}, {"power", v.power}, {"sign", v.sign}};
}

json to_json(const crystal::CombR& r) {
  json pairs = json::array();
  for (const auto& p : r.trace.pairs) {
    pairs.push_back({{"source_row", p.source_row}, {"target_row", p.target_row}, {"winding", p.winding}});
  }
  return {{"b", r.b.to_string()}, {"a", r.a.to_string()}, {"H", r.energy},
          {"pairs", pairs},       {"borders", r.trace.borders}};
}

}  // namespace ybx::io
