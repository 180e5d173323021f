#include "braidpoly/homfly.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <variant>
#include <vector>

#include "braidpoly/errors.hpp"
#include "braidpoly/link_analysis.hpp"

namespace braidpoly {

EngineLimits EngineLimits::from_env() {
  EngineLimits limits;
  if (const char* raw = std::getenv("BRAIDPOLY_NODE_CAP")) {
    std::string_view text(raw);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw ParseError("BRAIDPOLY_NODE_CAP must be a positive integer");
    }
    limits.node_cap = value;
    limits.memo_cap = value;
  }
  return limits;
}

std::optional<LaurentPoly2> HomflyCache::lookup(const std::string& key) const {
  if (!enabled_) return std::nullopt;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void HomflyCache::store(const std::string& key, const LaurentPoly2& value) {
  if (!enabled_) return;
  std::lock_guard<std::mutex> lock(mu_);
  if (map_.contains(key)) return;
  if (map_.size() >= cap_) {
    throw ResourceLimit("memo cache exceeded " + std::to_string(cap_) + " entries");
  }
  map_.emplace(key, value);
}

std::size_t HomflyCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

namespace {

// (v^{-1} - v)/z: the factor a disjoint unknot contributes.
LaurentPoly2 delta_poly() {
  LaurentPoly2 d;
  d.add_term(-1, -1, 1);
  d.add_term(1, -1, -1);
  return d;
}

LaurentPoly2 compute(BraidWord w, HomflyCache& cache, const EngineLimits& limits) {
  w = cyclic_free_reduce(w);
  if (w.strands > limits.max_strands) {
    throw ResourceLimit("word exceeds the strand limit of " +
                        std::to_string(limits.max_strands));
  }
  if (w.letters.size() > limits.max_letters) {
    throw ResourceLimit("word exceeds the letter limit of " +
                        std::to_string(limits.max_letters));
  }
  // Work on the canonical rotation: the memo key, the crossing chosen in the
  // negative branch, and the square-search seed all read off it.
  w = rotated(w, least_rotation_index(w.letters));
  const std::string key = canonical_key(w);
  if (auto hit = cache.lookup(key)) return *hit;

  const auto counts = index_counts(w);
  bool has_unused = false;
  bool has_single = false;
  for (int i = 1; i < w.strands; ++i) {
    if (counts[static_cast<std::size_t>(i)] == 0) has_unused = true;
    if (counts[static_cast<std::size_t>(i)] == 1) has_single = true;
  }

  LaurentPoly2 result;
  if (has_unused) {
    const auto factors = split_factors(w);
    result = delta_poly().pow(static_cast<int>(factors.size()) - 1);
    for (const auto& factor : factors) result = result * compute(factor, cache, limits);
  } else if (has_single) {
    result = compute(remove_nugatory(w), cache, limits);
  } else if (w.letters.empty()) {
    result = unlink_value(w.strands);
  } else if (!is_positive(w)) {
    // P_- = v^{-2} P_+ - v^{-1} z P_0 at the first negative letter.
    const std::size_t q = static_cast<std::size_t>(
        std::find_if(w.letters.begin(), w.letters.end(), [](int k) { return k < 0; }) -
        w.letters.begin());
    BraidWord plus = w;
    plus.letters[q] = -plus.letters[q];
    BraidWord zero = w;
    zero.letters.erase(zero.letters.begin() + static_cast<std::ptrdiff_t>(q));
    result = compute(plus, cache, limits).shifted(-2, 0) -
             compute(zero, cache, limits).shifted(-1, 1);
  } else {
    // Positive, every index used >= 2 times: resolve a square in the orbit.
    // P_+ = v^2 P(rest) + v z P(sigma_j rest) at the leading sigma_j^2.
    RewriteOutcome outcome = find_positive_square(w, limits.node_cap);
    if (const auto* sq = std::get_if<SquareFound>(&outcome)) {
      const BraidWord& u = sq->word;
      BraidWord rest{u.strands, {u.letters.begin() + 2, u.letters.end()}};
      BraidWord one{u.strands, {u.letters.begin() + 1, u.letters.end()}};
      result = compute(rest, cache, limits).shifted(2, 0) +
               compute(one, cache, limits).shifted(1, 1);
    } else if (const auto* low = std::get_if<LowOccurrence>(&outcome)) {
      result = compute(low->word, cache, limits);
    } else {
      throw SquareSearchExhausted(
          "square search exhausted after " +
          std::to_string(std::get<Exhausted>(outcome).visited) + " words on " + key);
    }
  }
  cache.store(key, result);
  return result;
}

}  // namespace

LaurentPoly2 unlink_value(int n) {
  if (n < 1) throw Error("unlink value requires at least one strand");
  return delta_poly().pow(n - 1);
}

LaurentPoly2 homfly(const BraidWord& w, HomflyCache& cache, const EngineLimits& limits) {
  if (!is_valid(w)) throw Error("invalid braid word");
  return compute(w, cache, limits);
}

LaurentPoly2 homfly(const BraidWord& w) {
  const EngineLimits limits = EngineLimits::from_env();
  HomflyCache cache(limits.memo_cap);
  return homfly(w, cache, limits);
}

SkeinTriple skein_triple(const BraidWord& w, std::size_t position) {
  if (position >= w.letters.size()) {
    throw Error("skein position " + std::to_string(position) + " out of range");
  }
  SkeinTriple t;
  t.position = position;
  t.plus = w;
  t.plus.letters[position] = std::abs(w.letters[position]);
  t.minus = w;
  t.minus.letters[position] = -std::abs(w.letters[position]);
  t.zero = w;
  t.zero.letters.erase(t.zero.letters.begin() + static_cast<std::ptrdiff_t>(position));
  t.delta = (closure_components(t.plus) - closure_components(t.zero) + 1) / 2;
  return t;
}

HalfLaurent conway(const BraidWord& w, HomflyCache& cache, const EngineLimits& limits) {
  const LaurentPoly2 P = homfly(w, cache, limits);
  HalfLaurent out;
  for (const auto& [e, c] : P.terms()) out.add_term(e.z, c);
  return out;
}

HalfLaurent conway(const BraidWord& w) {
  const EngineLimits limits = EngineLimits::from_env();
  HomflyCache cache(limits.memo_cap);
  return conway(w, cache, limits);
}

namespace {

// sum over terms of coeff * s^{2 * v_weight(p)} * (s - s^{-1})^q, with the
// negative q handled by clearing denominators and dividing exactly at the
// end: (s - s^{-1})^{-k} = s^k (s^2 - 1)^{-k}.
HalfLaurent substitute_z_smooth(const std::map<int, std::map<int, Int>>& by_z_then_v,
                                int v_weight) {
  HalfLaurent band;  // s - s^{-1}
  band.add_term(1, 1);
  band.add_term(-1, -1);
  int min_z = 0;
  for (const auto& [q, slice] : by_z_then_v) min_z = std::min(min_z, q);
  const int lift = -min_z;  // extra band powers multiplied in, divided back out
  HalfLaurent acc;
  for (const auto& [q, slice] : by_z_then_v) {
    HalfLaurent coeff;
    for (const auto& [p, c] : slice) coeff.add_term(v_weight * p, c);
    acc += coeff * band.pow(q + lift);
  }
  if (lift == 0) return acc;
  HalfLaurent denom;  // s^2 - 1
  denom.add_term(2, 1);
  denom.add_term(0, -1);
  return divide_exact(acc.shifted(lift), denom.pow(lift));
}

std::map<int, std::map<int, Int>> group_by_z(const LaurentPoly2& p) {
  std::map<int, std::map<int, Int>> out;
  for (const auto& [e, c] : p.terms()) out[e.z].emplace(e.v, c);
  return out;
}

}  // namespace

HalfLaurent jones(const BraidWord& w, HomflyCache& cache, const EngineLimits& limits) {
  // v = s^2, z = s - s^{-1}.
  HalfLaurent out = substitute_z_smooth(group_by_z(homfly(w, cache, limits)), 2);
  if (closure_components(w) == 1 && !out.all_exponents_even()) {
    throw OddExponent("knot Jones polynomial has odd s-exponents");
  }
  return out;
}

HalfLaurent jones(const BraidWord& w) {
  const EngineLimits limits = EngineLimits::from_env();
  HomflyCache cache(limits.memo_cap);
  return jones(w, cache, limits);
}

HalfLaurent alexander(const BraidWord& w, HomflyCache& cache, const EngineLimits& limits) {
  // z = s - s^{-1} applied to the Conway polynomial (v already set to 1).
  const HalfLaurent nabla = conway(w, cache, limits);
  std::map<int, std::map<int, Int>> by_z;
  for (const auto& [q, c] : nabla.terms()) by_z[q].emplace(0, c);
  return substitute_z_smooth(by_z, 0);
}

HalfLaurent alexander(const BraidWord& w) {
  const EngineLimits limits = EngineLimits::from_env();
  HomflyCache cache(limits.memo_cap);
  return alexander(w, cache, limits);
}

}  // namespace braidpoly
