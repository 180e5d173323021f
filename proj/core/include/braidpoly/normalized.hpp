#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidpoly/braid_word.hpp"
#include "braidpoly/homfly.hpp"
#include "braidpoly/laurent.hpp"
#include "braidpoly/link_analysis.hpp"

namespace braidpoly {

// Coefficient grid h_{i,j} of the normalized HOMFLY polynomial
// sum h_{i,j} alpha^i z^{2j}. i may go negative for inputs that are not
// positive-braid closures; j is always >= 0.
struct HGrid {
  std::map<std::pair<int, int>, Int> entries;  // (i, j) -> h_{i,j}, no zeros
  LinkProfile profile;
  bool all_nonnegative = true;

  Int h(int i, int j) const;  // 0 when absent
  int min_alpha_exp() const;  // 0 for the empty grid
};

// Normalized HOMFLY polynomial of Definition-style rescaling:
//   (1) multiply P by (v^{-1} z)^{#K-1};
//   (2) check all v-exponents even, substitute v^2 = -alpha;
//   (3) multiply by (-alpha)^t with t = -(-chi + 2 - #K)/2;
//   (4) divide exactly by (1 + alpha)^{s-1};
//   (5) check all z-exponents even and >= 0; collect the grid.
// Parity failures throw OddExponent; a division remainder throws
// InexactDivision. Either signals a profile/polynomial mismatch.
HGrid normalize(const LaurentPoly2& P, const LinkProfile& profile);

// The polynomial sum h_{i,j} alpha^i z^{2j} itself, with alpha stored in the
// first variable slot of LaurentPoly2.
LaurentPoly2 grid_poly(const HGrid& grid);

// Exact inverse of normalize: reconstructs the HOMFLY polynomial in (v, z).
LaurentPoly2 denormalize(const HGrid& grid);

// One checked item of the main coefficient theorem.
struct TheoremItem {
  std::string name;      // "i", "a", …, "f"
  std::string expected;  // value or bound, human-readable
  std::string observed;
  bool pass = false;
  bool vacuous = false;  // the indexed entry does not exist (small d)
};

struct TheoremReport {
  std::vector<TheoremItem> items;
  bool all_pass = false;          // every item, (i) included
  bool items_a_to_f_pass = false;  // support/value items only, (i) excluded
};

// Checks, against m, d, p from the grid's profile:
//   (i) every coefficient >= 0 and every alpha-exponent >= 0;
//   (a) h_{i,j} = 0 whenever i + j > d;
//   (b) h_{i,d-i} = binom(p, i) for 0 <= i <= d;
//   (c) h_{0,d-1} = m;
//   (d) h_{0,d-2} = (m-1)(m-2)/2 + p - 1;
//   (e) (m-2)p <= h_{1,d-2} <= (m-2)p + m;
//   (f) h_{0,d-3} = (m-1)(m-2)(m-6)/6 + h_{1,d-2} - 2(p-1).
// Items whose index would be negative report vacuous = true, pass = true.
TheoremReport check_theorem_main(const HGrid& grid);

// Conway coefficient checks for knots: a_{2g-2} = 2g - p exactly, and
// a_{2g-4} within [2g^2-(5+2p)g+3p, 2g^2-(3+2p)g+p(p+5)/2]. The a_{2g-4}
// check is vacuous for g < 2.
struct ConwayReport {
  int genus = 0;
  int prime = 0;
  Int a_top;      // coefficient of z^{2g-2}
  Int a_next;     // coefficient of z^{2g-4} (g >= 2)
  Int lower;      // bound on a_next
  Int upper;
  bool top_ok = false;
  bool next_vacuous = false;
  bool next_in_bounds = false;
};
ConwayReport conway_report(const BraidWord& w, const LinkProfile& profile,
                           HomflyCache& cache,
                           const EngineLimits& limits = EngineLimits::from_env());

// Jones coefficient checks for non-split positive-braid knots: with
// V/t^{mindeg} = c0 + c1 t + c2 t^2 + c3 t^3 + …, reports mindeg = g, c0 = 1,
// c1 = 0, c2 = p, k = c3 with -p <= k <= -p+2g, and k = h_{1,d-2} + (1-2g)p.
struct JonesReport {
  int genus = 0;
  int prime = 0;
  Int c0, c1, c2, c3;
  Int h_1_dm2;  // h_{1,d-2} from the supplied grid
  bool mindeg_is_genus = false;
  bool c0_ok = false;
  bool c1_ok = false;
  bool c2_ok = false;
  bool bound_ok = false;
  bool identity_ok = false;
};
JonesReport jones_report(const BraidWord& w, const HGrid& grid,
                         HomflyCache& cache,
                         const EngineLimits& limits = EngineLimits::from_env());

// L-space screening of a positive-braid knot through its polynomial
// constraints: jones_ok (third coefficient k in {0,-1} and t^2-coefficient
// 1), h_ok (h_{1,d-2} in {2g-2, 2g-1}), alexander_form_ok (nonzero
// coefficients alternate in sign with absolute value 1, leading block
// t^g - t^{g-1}). A knot failing any of the three cannot be an L-space knot.
struct LspaceScreen {
  bool jones_ok = false;
  bool h_ok = false;
  bool alexander_form_ok = false;
};
LspaceScreen lspace_screen(const BraidWord& w, HomflyCache& cache,
                           const EngineLimits& limits = EngineLimits::from_env());
LspaceScreen lspace_screen(const BraidWord& w);

// Grid JSON:
//   {"d":…, "m":…, "p":…, "h":[[i,j,"coeff"],…], "nonnegative":bool}
std::string to_json_text(const HGrid& grid);

// TheoremReport JSON: one object per item with expected/observed/pass
// (plus vacuous), and the aggregate flags.
std::string to_json_text(const TheoremReport& report);

}  // namespace braidpoly
