#include "braidpoly/rewrite.hpp"

#include <cstdlib>
#include <string>
#include <unordered_set>
#include <utility>

#include "braidpoly/errors.hpp"

namespace braidpoly {

std::vector<BraidWord> rewrite_neighbors(const BraidWord& w) {
  if (!is_positive(w)) throw NonPositiveWord("rewrite moves require a positive word");
  const std::size_t L = w.letters.size();
  std::vector<BraidWord> out;
  auto emit = [&out](BraidWord nb) {
    for (const BraidWord& seen : out) {
      if (seen == nb) return;
    }
    out.push_back(std::move(nb));
  };
  if (L > 0) emit(rotated(w, 1));
  if (L >= 2) {
    // Commutations: swap cyclically adjacent letters with |i - j| >= 2.
    for (std::size_t p = 0; p < L; ++p) {
      const std::size_t q = (p + 1) % L;
      if (std::abs(w.letters[p] - w.letters[q]) >= 2) {
        BraidWord nb = w;
        std::swap(nb.letters[p], nb.letters[q]);
        emit(std::move(nb));
      }
    }
  }
  if (L >= 3) {
    // Braid relations: cyclic factor (a, b, a) with |a - b| = 1 -> (b, a, b).
    for (std::size_t p = 0; p < L; ++p) {
      const std::size_t q = (p + 1) % L;
      const std::size_t r = (p + 2) % L;
      const int a = w.letters[p];
      const int b = w.letters[q];
      if (w.letters[r] == a && std::abs(a - b) == 1) {
        BraidWord nb = w;
        nb.letters[p] = b;
        nb.letters[q] = a;
        nb.letters[r] = b;
        emit(std::move(nb));
      }
    }
  }
  return out;
}

namespace {

// Position of the first cyclically adjacent equal pair, or L if none.
std::size_t first_square_position(const BraidWord& w) {
  const std::size_t L = w.letters.size();
  if (L < 2) return L;
  for (std::size_t p = 0; p < L; ++p) {
    if (w.letters[p] == w.letters[(p + 1) % L]) return p;
  }
  return L;
}

// Smallest generator index occurring at most once, or 0 if all occur >= 2.
int first_low_index(const BraidWord& w) {
  const auto counts = index_counts(w);
  for (int i = 1; i < w.strands; ++i) {
    if (counts[static_cast<std::size_t>(i)] <= 1) return i;
  }
  return 0;
}

}  // namespace

RewriteOutcome find_positive_square(const BraidWord& w, std::size_t node_cap) {
  if (!is_positive(w)) throw NonPositiveWord("square search requires a positive word");
  // BFS nodes in insertion order; parent links reconstruct the replay path.
  std::vector<std::pair<BraidWord, std::size_t>> nodes;
  std::unordered_set<std::string> seen;
  constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);
  nodes.emplace_back(w, kNoParent);
  seen.insert(canonical_key(w));

  std::size_t low_node = kNoParent;
  int low_index = 0;

  for (std::size_t i = 0; i < nodes.size() && i < node_cap; ++i) {
    const BraidWord u = nodes[i].first;
    const std::size_t p = first_square_position(u);
    if (p < u.letters.size()) {
      SquareFound found;
      found.word = rotated(u, p);
      found.j = found.word.letters[0];
      // Chain from the input to u, then one rotate-by-one step at a time.
      std::vector<BraidWord> chain;
      for (std::size_t at = i; at != kNoParent; at = nodes[at].second) {
        chain.push_back(nodes[at].first);
      }
      found.path.assign(chain.rbegin(), chain.rend());
      for (std::size_t r = 1; r <= p; ++r) found.path.push_back(rotated(u, r));
      return found;
    }
    if (low_node == kNoParent) {
      if (int idx = first_low_index(u); idx != 0) {
        low_node = i;
        low_index = idx;
      }
    }
    for (BraidWord& nb : rewrite_neighbors(u)) {
      if (nodes.size() >= node_cap) break;
      std::string key = canonical_key(nb);
      if (seen.insert(std::move(key)).second) {
        nodes.emplace_back(std::move(nb), i);
      }
    }
  }
  if (low_node != kNoParent) {
    return LowOccurrence{low_index, nodes[low_node].first};
  }
  return Exhausted{std::min(nodes.size(), node_cap)};
}

}  // namespace braidpoly
