#include "braidpoly/catalog.hpp"

#include <string>

namespace braidpoly {

std::vector<BraidWord> enumerate_positive_words(int max_strands, int max_length) {
  std::vector<BraidWord> out;
  for (int n = 1; n <= max_strands; ++n) {
    out.push_back(BraidWord{n, {}});
    const int top = n - 1;  // largest generator index
    if (top < 1) continue;
    for (int len = 1; len <= max_length; ++len) {
      std::vector<int> word(static_cast<std::size_t>(len), 1);
      for (;;) {
        if (least_rotation_index(word) == 0) out.push_back(BraidWord{n, word});
        // Advance the last position that is below `top`, reset the tail.
        int pos = len - 1;
        while (pos >= 0 && word[static_cast<std::size_t>(pos)] == top) --pos;
        if (pos < 0) break;
        ++word[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < len; ++i) word[static_cast<std::size_t>(i)] = 1;
      }
    }
  }
  return out;
}

std::vector<std::pair<std::string, BraidWord>> named_examples() {
  std::vector<std::pair<std::string, BraidWord>> out;
  const std::vector<int> cable_base{2, 1, 3, 2, 2, 1, 3, 2, 2, 1, 3, 2};
  BraidWord cable{4, cable_base};
  cable.letters.insert(cable.letters.end(), {-1, -1, -1});
  out.emplace_back("cable_T23", std::move(cable));

  BraidWord baker_kegel{4, cable_base};
  baker_kegel.letters.insert(baker_kegel.letters.end(), {-1, 2, 1, 1, 2});
  out.emplace_back("baker_kegel", std::move(baker_kegel));

  for (int k = 1; k <= 12; ++k) {
    BraidWord torus{2, std::vector<int>(static_cast<std::size_t>(k), 1)};
    out.emplace_back("T_2_" + std::to_string(k), std::move(torus));
  }
  for (int k = 1; k <= 6; ++k) {
    BraidWord hopf_sum{k + 1, {}};
    for (int i = 1; i <= k; ++i) {
      hopf_sum.letters.push_back(i);
      hopf_sum.letters.push_back(i);
    }
    out.emplace_back("H_" + std::to_string(k), std::move(hopf_sum));
  }
  return out;
}

}  // namespace braidpoly
