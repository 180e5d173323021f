#include "braidpoly/link_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>
#include <utility>

#include "braidpoly/errors.hpp"
#include "json_build.hpp"

namespace braidpoly {

std::vector<BraidWord> split_factors(const BraidWord& w) {
  const auto counts = index_counts(w);
  std::vector<BraidWord> out;
  int block_start = 1;  // 1-based strand where the current block begins
  for (int boundary = 1; boundary <= w.strands; ++boundary) {
    // The block ends at strand `boundary` when index `boundary` is unused.
    if (boundary < w.strands && counts[static_cast<std::size_t>(boundary)] != 0) continue;
    BraidWord factor;
    factor.strands = boundary - block_start + 1;
    for (int k : w.letters) {
      const int idx = std::abs(k);
      if (idx >= block_start && idx < boundary) {
        factor.letters.push_back(k > 0 ? idx - block_start + 1 : -(idx - block_start + 1));
      }
    }
    out.push_back(std::move(factor));
    block_start = boundary + 1;
  }
  return out;
}

BraidWord remove_nugatory(const BraidWord& w) {
  BraidWord cur = w;
  for (;;) {
    const auto counts = index_counts(cur);
    int target = 0;
    for (int i = 1; i < cur.strands; ++i) {
      if (counts[static_cast<std::size_t>(i)] == 1) {
        target = i;
        break;
      }
    }
    if (target == 0) return cur;
    // The single crossing joins the sublink on strands 1..target to the
    // sublink on strands target+1..n; untwisting it leaves their connected
    // sum. Rewriting is only valid on the cyclic word anchored at that
    // crossing: rotate it to the front, then sort the rest into the low
    // block followed by the high block (legitimate commutations only: every
    // low/high index pair differs by at least 2), and finally delete the
    // crossing and merge strands target and target+1.
    const std::size_t length = cur.letters.size();
    std::size_t pos = 0;
    while (std::abs(cur.letters[pos]) != target) ++pos;
    BraidWord next;
    next.strands = cur.strands - 1;
    std::vector<int> high;
    for (std::size_t r = 1; r < length; ++r) {
      const int k = cur.letters[(pos + r) % length];
      const int idx = std::abs(k);
      if (idx < target) {
        next.letters.push_back(k);
      } else {
        high.push_back(k > 0 ? idx - 1 : -(idx - 1));
      }
    }
    next.letters.insert(next.letters.end(), high.begin(), high.end());
    cur = std::move(next);
  }
}

namespace {

// First low/high factorization among the rotations of u: a rotation split as
// (nonempty letters all < j) followed by (nonempty letters all >= j), scanned
// by rotation index then pivot j ascending.
std::optional<std::pair<BraidWord, BraidWord>> interval_factorization(const BraidWord& u) {
  const std::size_t L = u.letters.size();
  for (std::size_t r = 0; r < L; ++r) {
    const BraidWord rw = rotated(u, r);
    for (int j = 2; j <= u.strands - 1; ++j) {
      std::size_t k = 0;
      while (k < L && rw.letters[k] < j) ++k;
      if (k == 0 || k == L) continue;
      if (!std::all_of(rw.letters.begin() + static_cast<std::ptrdiff_t>(k), rw.letters.end(),
                       [j](int a) { return a >= j; })) {
        continue;
      }
      BraidWord low{j, {rw.letters.begin(), rw.letters.begin() + static_cast<std::ptrdiff_t>(k)}};
      BraidWord high;
      high.strands = u.strands - j + 1;
      for (std::size_t t = k; t < L; ++t) high.letters.push_back(rw.letters[t] - (j - 1));
      return std::make_pair(std::move(low), std::move(high));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<BraidWord, BraidWord>> composite_split(const BraidWord& w,
                                                               std::size_t node_cap) {
  if (!is_positive(w)) throw NonPositiveWord("connected-sum search requires a positive word");
  if (w.letters.empty()) throw PreconditionViolated("connected-sum search requires a nonempty word");
  const auto counts = index_counts(w);
  for (int i = 1; i < w.strands; ++i) {
    if (counts[static_cast<std::size_t>(i)] == 0) {
      throw PreconditionViolated("connected-sum search requires a non-split word");
    }
    if (counts[static_cast<std::size_t>(i)] == 1) {
      throw PreconditionViolated("connected-sum search requires an irreducible word");
    }
  }
  // Direct rotations of w first (the seed is visited first), then the whole
  // rewrite orbit, so factorizations hidden by interleaving are still found.
  std::vector<BraidWord> nodes{w};
  std::unordered_set<std::string> seen{canonical_key(w)};
  bool truncated = false;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (auto split = interval_factorization(nodes[i])) return split;
    for (BraidWord& nb : rewrite_neighbors(nodes[i])) {
      if (nodes.size() >= node_cap) {
        truncated = true;
        break;
      }
      std::string key = canonical_key(nb);
      if (seen.insert(std::move(key)).second) nodes.push_back(std::move(nb));
    }
  }
  if (truncated) {
    throw SquareSearchExhausted("connected-sum orbit search hit the node cap at " +
                                std::to_string(nodes.size()) + " words");
  }
  return std::nullopt;
}

namespace {

// Factorizes a positive, non-split word into its decomposition subtree.
DecompositionTree decompose_connected(const BraidWord& input, std::size_t node_cap) {
  const BraidWord u = remove_nugatory(input);
  if (u.letters.empty()) {
    return DecompositionTree{DecompositionTree::Kind::UnknotLeaf, {}, {}};
  }
  auto split = composite_split(u, node_cap);
  if (!split) {
    return DecompositionTree{DecompositionTree::Kind::PrimeLeaf, u, {}};
  }
  DecompositionTree sum{DecompositionTree::Kind::ConnectedSum, {}, {}};
  auto absorb = [&sum](DecompositionTree child) {
    if (child.kind == DecompositionTree::Kind::ConnectedSum) {
      for (auto& grand : child.children) sum.children.push_back(std::move(grand));
    } else {
      sum.children.push_back(std::move(child));
    }
  };
  absorb(decompose_connected(split->first, node_cap));
  absorb(decompose_connected(split->second, node_cap));
  return sum;
}

}  // namespace

DecompositionTree decompose(const BraidWord& w, std::size_t node_cap) {
  if (!is_positive(w)) throw NonPositiveWord("decomposition requires a positive word");
  auto factors = split_factors(w);
  if (factors.size() == 1) return decompose_connected(factors.front(), node_cap);
  DecompositionTree root{DecompositionTree::Kind::SplitUnion, {}, {}};
  for (const auto& factor : factors) {
    root.children.push_back(decompose_connected(factor, node_cap));
  }
  return root;
}

int prime_count(const DecompositionTree& tree) {
  if (tree.kind == DecompositionTree::Kind::PrimeLeaf) return 1;
  int total = 0;
  for (const auto& child : tree.children) total += prime_count(child);
  return total;
}

int split_count(const DecompositionTree& tree) {
  return tree.kind == DecompositionTree::Kind::SplitUnion
             ? static_cast<int>(tree.children.size())
             : 1;
}

int euler_characteristic(const BraidWord& w) {
  if (!is_positive(w)) {
    throw NonPositiveWord("the Euler characteristic formula requires a positive word");
  }
  return w.strands - exponent_sum(w);
}

LinkProfile link_profile(const BraidWord& w, std::size_t node_cap) {
  LinkProfile p;
  p.strands = w.strands;
  p.euler = euler_characteristic(w);
  p.components = closure_components(w);
  const DecompositionTree tree = decompose(w, node_cap);
  p.split = split_count(tree);
  p.prime = prime_count(tree);
  p.m = -p.euler + p.split;
  if ((-p.euler + p.components) % 2 != 0) {
    throw Error("parity violation: -euler + components must be even");
  }
  p.d = (-p.euler + p.components) / 2;
  if (p.components == 1) p.genus = (1 - p.euler) / 2;
  return p;
}

LinkProfile knot_profile(int genus, int split, int prime, int strands) {
  LinkProfile p;
  p.strands = strands;
  p.components = 1;
  p.euler = 1 - 2 * genus;
  p.split = split;
  p.prime = prime;
  p.m = -p.euler + split;
  p.d = genus;
  p.genus = genus;
  return p;
}

std::string to_json_text(const DecompositionTree& tree) {
  return detail::tree_json(tree).dump();
}

std::string to_json_text(const LinkProfile& profile) {
  return detail::profile_json(profile).dump();
}

}  // namespace braidpoly
