#include "braidpoly/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "braidpoly/errors.hpp"

namespace braidpoly {

bool is_valid(const BraidWord& w) {
  if (w.strands < 1) return false;
  for (int k : w.letters) {
    if (k == 0 || std::abs(k) > w.strands - 1) return false;
  }
  return true;
}

bool is_positive(const BraidWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [](int k) { return k > 0; });
}

namespace {

int parse_int(std::string_view tok, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("bad ") + what + ": '" + std::string(tok) + "'");
  }
  return value;
}

void append_letter(BraidWord& w, int index, int exponent) {
  if (index < 1 || index > w.strands - 1) {
    throw ParseError("generator index " + std::to_string(index) + " out of range [1, " +
                     std::to_string(w.strands - 1) + "]");
  }
  int sign = exponent < 0 ? -1 : 1;
  for (int i = 0; i < std::abs(exponent); ++i) w.letters.push_back(sign * index);
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':' after strand count");

  std::string head(text.substr(0, colon));
  std::istringstream head_in(head);
  std::string head_tok;
  if (!(head_in >> head_tok)) throw ParseError("missing strand count");
  std::string extra;
  if (head_in >> extra) throw ParseError("unexpected token before ':'");

  BraidWord w;
  w.strands = parse_int(head_tok, "strand count");
  if (w.strands < 1) throw ParseError("strand count must be >= 1");

  std::istringstream in{std::string(text.substr(colon + 1))};
  std::string tok;
  while (in >> tok) {
    if (tok[0] == 's') {
      std::string_view body = std::string_view(tok).substr(1);
      auto caret = body.find('^');
      int exponent = 1;
      if (caret != std::string_view::npos) {
        exponent = parse_int(body.substr(caret + 1), "exponent");
        body = body.substr(0, caret);
      }
      append_letter(w, parse_int(body, "generator index"), exponent);
    } else {
      int k = parse_int(tok, "letter");
      if (k == 0) throw ParseError("letter 0 is not a generator");
      append_letter(w, std::abs(k), k < 0 ? -1 : 1);
    }
  }
  return w;
}

std::string to_text(const BraidWord& w) {
  std::string out = std::to_string(w.strands) + ":";
  for (int k : w.letters) {
    out += ' ';
    out += std::to_string(k);
  }
  return out;
}

std::vector<int> closure_permutation(const BraidWord& w) {
  std::vector<int> perm(static_cast<std::size_t>(w.strands));
  std::iota(perm.begin(), perm.end(), 0);
  // perm[i] tracks where the strand currently at position i entered.
  for (int k : w.letters) {
    int i = std::abs(k) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  // Invert: entry = start position, value = end position.
  std::vector<int> out(perm.size());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) out[static_cast<std::size_t>(perm[pos])] = static_cast<int>(pos);
  return out;
}

int closure_components(const BraidWord& w) {
  auto perm = closure_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(perm[j]);
    }
  }
  return cycles;
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int k : w.letters) e += k > 0 ? 1 : -1;
  return e;
}

BraidWord rotated(const BraidWord& w, std::size_t k) {
  if (w.letters.empty()) return w;
  BraidWord out = w;
  k %= w.letters.size();
  std::rotate(out.letters.begin(), out.letters.begin() + static_cast<std::ptrdiff_t>(k), out.letters.end());
  return out;
}

BraidWord cyclic_free_reduce(const BraidWord& w) {
  std::vector<int> cur = w.letters;
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    std::vector<int> stack;
    for (int k : cur) {
      if (!stack.empty() && stack.back() == -k) {
        stack.pop_back();
        changed = true;
      } else {
        stack.push_back(k);
      }
    }
    // Wrap-around: trailing letter cancels a leading inverse.
    while (stack.size() >= 2 && stack.back() == -stack.front()) {
      stack.pop_back();
      stack.erase(stack.begin());
      changed = true;
    }
    cur = std::move(stack);
  }
  return BraidWord{w.strands, std::move(cur)};
}

std::size_t least_rotation_index(const std::vector<int>& letters) {
  const std::size_t n = letters.size();
  if (n == 0) return 0;
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t off = 0; off < n; ++off) {
      int a = letters[(cand + off) % n];
      int b = letters[(best + off) % n];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  return best;
}

std::string canonical_key(const BraidWord& w) {
  const std::size_t r = least_rotation_index(w.letters);
  std::string key = std::to_string(w.strands);
  key += ':';
  const std::size_t n = w.letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    key += ' ';
    key += std::to_string(w.letters[(r + i) % n]);
  }
  return key;
}

std::vector<int> index_counts(const BraidWord& w) {
  std::vector<int> counts(static_cast<std::size_t>(std::max(w.strands, 1)), 0);
  for (int k : w.letters) ++counts[static_cast<std::size_t>(std::abs(k))];
  return counts;
}

}  // namespace braidpoly
