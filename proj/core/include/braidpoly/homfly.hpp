#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "braidpoly/braid_word.hpp"
#include "braidpoly/laurent.hpp"
#include "braidpoly/rewrite.hpp"

namespace braidpoly {

// Resource ceilings for the skein engine. Exceeding any of them raises
// ResourceLimit (or surfaces SquareSearchExhausted) instead of degrading.
struct EngineLimits {
  int max_strands = 16;
  std::size_t max_letters = 64;
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t memo_cap = 10'000'000;

  // Defaults, with BRAIDPOLY_NODE_CAP (when set) applied to both the BFS
  // node cap and the memo cap.
  static EngineLimits from_env();
};

// Thread-safe memo of finished HOMFLY values keyed by canonical_key.
// Concurrent computations of the same key may duplicate work but never
// observe a partial value. A disabled cache misses and drops everything,
// which forces full recomputation (used for memo-equivalence checks).
class HomflyCache {
 public:
  explicit HomflyCache(std::size_t cap = EngineLimits{}.memo_cap,
                       bool enabled = true)
      : cap_(cap), enabled_(enabled) {}

  std::optional<LaurentPoly2> lookup(const std::string& key) const;
  void store(const std::string& key, const LaurentPoly2& value);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, LaurentPoly2> map_;
  std::size_t cap_;
  bool enabled_;
};

// The crossing triple at one letter: plus/minus differ only in the sign of
// the letter at `position`, zero omits it. delta = (#K(plus) - #K(zero)+1)/2
// is 0 when the two strands at the crossing belong to one component of the
// plus closure and 1 when they belong to two.
struct SkeinTriple {
  BraidWord plus;
  BraidWord minus;
  BraidWord zero;
  std::size_t position = 0;
  int delta = 0;
};

// HOMFLY value of the n-component unlink: ((v^{-1} - v)/z)^{n-1}.
LaurentPoly2 unlink_value(int n);

// HOMFLY polynomial of the closure of w, in the convention
// v^{-1} P_+ - v P_- = z P_0 with P(unknot) = 1. Deterministic memoized
// skein recursion: cyclic free reduction, split factors, nugatory removal,
// unlink bases, elimination of negative letters (first negative of the
// canonical rotation), then positive-square resolution via the rewrite-orbit
// search. Throws SquareSearchExhausted if the orbit search cannot conclude
// and ResourceLimit when the word exceeds the engine limits.
LaurentPoly2 homfly(const BraidWord& w, HomflyCache& cache,
                    const EngineLimits& limits = EngineLimits::from_env());
LaurentPoly2 homfly(const BraidWord& w);

// Builds the skein triple at `position` (0-based). Throws Error if the
// position is out of range.
SkeinTriple skein_triple(const BraidWord& w, std::size_t position);

// Conway polynomial: homfly at v = 1. The returned exponents are plain
// z-exponents (print with exponent_denominator = 1).
HalfLaurent conway(const BraidWord& w);
HalfLaurent conway(const BraidWord& w, HomflyCache& cache,
                   const EngineLimits& limits);

// Jones polynomial via v = s^2, z = s - s^{-1} with s = t^{1/2}; exponents
// are s-exponents (t-exponent = s-exponent / 2). Knot closures must come out
// with even s-exponents only; otherwise OddExponent is thrown.
HalfLaurent jones(const BraidWord& w);
HalfLaurent jones(const BraidWord& w, HomflyCache& cache,
                  const EngineLimits& limits);

// Symmetrized Alexander polynomial via z = s - s^{-1} applied to the Conway
// polynomial; exponents are s-exponents.
HalfLaurent alexander(const BraidWord& w);
HalfLaurent alexander(const BraidWord& w, HomflyCache& cache,
                      const EngineLimits& limits);

}  // namespace braidpoly
