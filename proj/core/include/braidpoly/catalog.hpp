#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidpoly/braid_word.hpp"

namespace braidpoly {

// Every positive word with 1 <= strands <= max_strands and length <=
// max_length, one representative per canonical-rotation class (the
// representative is the lexicographically least rotation itself). Order:
// strand count ascending, then length ascending, then lexicographic.
std::vector<BraidWord> enumerate_positive_words(int max_strands,
                                                int max_length);

// The named study braids: the cable knot (sigma2 sigma1 sigma3 sigma2)^3
// sigma1^{-3}, the Baker–Kegel knot (sigma2 sigma1 sigma3 sigma2)^3
// sigma1^{-1} sigma2 sigma1^2 sigma2, the torus family T(2,k) for k <= 12,
// and the Hopf connected sums H_k = closure(sigma1^2 … sigma_k^2) for k <= 6.
std::vector<std::pair<std::string, BraidWord>> named_examples();

}  // namespace braidpoly
