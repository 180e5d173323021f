#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidpoly/braid_word.hpp"
#include "braidpoly/rewrite.hpp"

namespace braidpoly {

// Invariant bundle of a braid closure: component count #K, maximal Euler
// characteristic chi, split count s, prime count p, and the derived grading
// data m = -chi + s and d = (-chi + #K)/2.
struct LinkProfile {
  int strands = 1;
  int components = 1;
  int euler = 1;
  int split = 1;
  int prime = 0;
  int m = 0;
  int d = 0;
  std::optional<int> genus;  // knots only: (1 - chi)/2

  bool operator==(const LinkProfile&) const = default;
};

// Split/connected-sum factorization of a closure. A SplitUnion lists its
// split factors; a ConnectedSum lists prime summands; leaves are prime braid
// words or unknots.
struct DecompositionTree {
  enum class Kind { SplitUnion, ConnectedSum, PrimeLeaf, UnknotLeaf };
  Kind kind = Kind::UnknotLeaf;
  BraidWord word;  // populated for PrimeLeaf
  std::vector<DecompositionTree> children;
};

// Partitions the strands into maximal blocks not connected by any letter and
// returns one sub-word per block, indices renumbered to start at 1. Strands
// untouched by any letter come back as empty one-strand words.
std::vector<BraidWord> split_factors(const BraidWord& w);

// While some generator index has exactly one occurrence (either sign):
// deletes that letter, shifts higher indices down, and drops the freed
// strand. Each step is an isotopy of the closure. The result has every used
// index occurring >= 2 times, or no letters at all.
BraidWord remove_nugatory(const BraidWord& w);

// Searches all cyclic rotations of w, and then its whole rewrite orbit, for a
// factorization letters = u . v with a pivot j in [2, n-1] such that u uses
// only indices < j and v only indices >= j. On success returns (u on strands
// 1..j, v on strands j..n with indices shifted down by j-1): the closure is
// the connected sum of the two factor closures. Returns nullopt when the
// orbit is fully searched without a factorization. Requires w positive,
// nonempty, non-split, and irreducible (every index used >= 2 times);
// violations throw PreconditionViolated. Throws SquareSearchExhausted if the
// orbit search hits node_cap without a conclusion.
std::optional<std::pair<BraidWord, BraidWord>> composite_split(
    const BraidWord& w, std::size_t node_cap = kDefaultNodeCap);

// Full factorization: split factors first, then nugatory removal, then
// recursive connected-sum splitting. Empty one-strand words become unknot
// leaves; unfactorable words become prime leaves. Requires w positive.
DecompositionTree decompose(const BraidWord& w,
                            std::size_t node_cap = kDefaultNodeCap);

// Number of prime leaves (p); unknot leaves contribute zero.
int prime_count(const DecompositionTree& tree);

// Number of split factors (children of a root SplitUnion, else 1).
int split_count(const DecompositionTree& tree);

// chi of the closure of a positive word: strands - exponent_sum. Throws
// NonPositiveWord otherwise (the formula is only valid on positive words).
int euler_characteristic(const BraidWord& w);

// Assembles the full profile of a positive word's closure.
LinkProfile link_profile(const BraidWord& w,
                         std::size_t node_cap = kDefaultNodeCap);

// Profile of a knot from externally supplied data (genus, split and prime
// counts), for closures of non-positive words where the chi formula does not
// apply: components = 1, euler = 1 - 2*genus.
LinkProfile knot_profile(int genus, int split, int prime, int strands);

// JSON: {"type":"split"|"sum"|"prime"|"unknot", "word":…, "children":[…]}
// with "word" on prime leaves and "children" on interior nodes.
std::string to_json_text(const DecompositionTree& tree);

// JSON object with the profile's fields (genus present only for knots).
std::string to_json_text(const LinkProfile& profile);

}  // namespace braidpoly
