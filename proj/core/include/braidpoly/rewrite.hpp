#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "braidpoly/braid_word.hpp"

namespace braidpoly {

// Default cap on the number of words visited by the breadth-first orbit
// searches below. Overridable per call; the CLI maps BRAIDPOLY_NODE_CAP here.
inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

// A word in the rewrite orbit rotated so that letters[0] == letters[1] == j:
// the closure is visibly of the form "sigma_j^2 followed by the rest".
struct SquareFound {
  int j = 0;
  BraidWord word;
  // Replay chain from the searched word to `word`, inclusive; consecutive
  // entries differ by exactly one move (rotation, commutation, or braid
  // relation), so the reduction is independently checkable.
  std::vector<BraidWord> path;
};

// An orbit member in which some generator index occurs at most once, so the
// caller can split or destabilize instead of resolving a square.
struct LowOccurrence {
  int index = 0;
  BraidWord word;
};

// The search visited `visited` distinct words without reaching a conclusion.
struct Exhausted {
  std::size_t visited = 0;
};

using RewriteOutcome = std::variant<SquareFound, LowOccurrence, Exhausted>;

// All words one move away from w: rotation by one, then swaps of adjacent
// commuting letters (|i-j| >= 2) left to right, then braid-relation rewrites
// of cyclic length-3 factors sigma_i sigma_j sigma_i -> sigma_j sigma_i
// sigma_j (|i-j| = 1) left to right. Every output has the same length,
// strand count, and closure. Throws NonPositiveWord on words with negative
// letters.
std::vector<BraidWord> rewrite_neighbors(const BraidWord& w);

// Breadth-first search over the rewrite orbit of w, deduplicated by
// canonical_key, visiting at most node_cap words. Returns SquareFound at the
// first visited word containing a cyclically adjacent equal pair (rotated so
// the square leads); otherwise LowOccurrence for the first visited word with
// an index occurring <= 1 times; otherwise Exhausted. Fully deterministic:
// queue order is insertion order and neighbors are generated in the order
// documented at rewrite_neighbors.
RewriteOutcome find_positive_square(const BraidWord& w,
                                    std::size_t node_cap = kDefaultNodeCap);

}  // namespace braidpoly
