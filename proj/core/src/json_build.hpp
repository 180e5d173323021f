#pragma once

// Internal JSON builders shared by the serialization entry points and the
// sweep reporter. Not installed; nlohmann/json stays out of the public API.

#include <string>

#include "braidpoly/braid_word.hpp"
#include "braidpoly/laurent.hpp"
#include "braidpoly/link_analysis.hpp"
#include "braidpoly/normalized.hpp"
#include "json.hpp"

namespace braidpoly::detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json poly_json(const LaurentPoly2& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back(ordered_json::array({e.v, e.z, c.str()}));
  }
  return arr;
}

inline ordered_json half_json(const HalfLaurent& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back(ordered_json::array({e, c.str()}));
  }
  return arr;
}

inline ordered_json profile_json(const LinkProfile& p) {
  ordered_json j;
  j["strands"] = p.strands;
  j["components"] = p.components;
  j["euler"] = p.euler;
  j["split"] = p.split;
  j["prime"] = p.prime;
  j["m"] = p.m;
  j["d"] = p.d;
  if (p.genus) j["genus"] = *p.genus;
  return j;
}

inline ordered_json tree_json(const DecompositionTree& t) {
  ordered_json j;
  switch (t.kind) {
    case DecompositionTree::Kind::SplitUnion:
      j["type"] = "split";
      break;
    case DecompositionTree::Kind::ConnectedSum:
      j["type"] = "sum";
      break;
    case DecompositionTree::Kind::PrimeLeaf:
      j["type"] = "prime";
      j["word"] = to_text(t.word);
      return j;
    case DecompositionTree::Kind::UnknotLeaf:
      j["type"] = "unknot";
      return j;
  }
  ordered_json children = ordered_json::array();
  for (const auto& child : t.children) children.push_back(tree_json(child));
  j["children"] = std::move(children);
  return j;
}

inline ordered_json grid_json(const HGrid& g) {
  ordered_json j;
  j["d"] = g.profile.d;
  j["m"] = g.profile.m;
  j["p"] = g.profile.prime;
  ordered_json h = ordered_json::array();
  for (const auto& [ij, c] : g.entries) {
    h.push_back(ordered_json::array({ij.first, ij.second, c.str()}));
  }
  j["h"] = std::move(h);
  j["nonnegative"] = g.all_nonnegative;
  return j;
}

inline ordered_json theorem_json(const TheoremReport& r) {
  ordered_json j;
  ordered_json items = ordered_json::array();
  for (const auto& item : r.items) {
    ordered_json e;
    e["item"] = item.name;
    e["expected"] = item.expected;
    e["observed"] = item.observed;
    e["pass"] = item.pass;
    e["vacuous"] = item.vacuous;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  j["all_pass"] = r.all_pass;
  j["items_a_to_f_pass"] = r.items_a_to_f_pass;
  return j;
}

}  // namespace braidpoly::detail
