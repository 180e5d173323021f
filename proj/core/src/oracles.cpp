#include "braidpoly/oracles.hpp"

#include <cstdlib>
#include <numeric>
#include <vector>

#include "braidpoly/errors.hpp"

namespace braidpoly {

namespace {

// Union-find over wire segments of a resolved diagram.
class WireSet {
 public:
  int fresh() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // Joins two wire ends; returns true when they already belonged to the same
  // wire, i.e. the join closes a loop.
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    parent_[static_cast<std::size_t>(a)] = b;
    return false;
  }
  void reset() { parent_.clear(); }

 private:
  std::vector<int> parent_;
};

}  // namespace

HalfLaurent bracket_jones(const BraidWord& w) {
  const std::size_t c = w.letters.size();
  if (c > 24) {
    throw ResourceLimit("bracket state sum limited to 24 crossings, got " +
                        std::to_string(c));
  }
  const int n = w.strands;
  const int writhe = exponent_sum(w);

  // Loop factor -A^2 - A^{-2} and its powers, exponents in A.
  HalfLaurent loop_factor;
  loop_factor.add_term(2, -1);
  loop_factor.add_term(-2, -1);
  std::vector<HalfLaurent> loop_pow{HalfLaurent::constant(1)};
  auto loop_power = [&](int e) -> const HalfLaurent& {
    while (static_cast<int>(loop_pow.size()) <= e) {
      loop_pow.push_back(loop_pow.back() * loop_factor);
    }
    return loop_pow[static_cast<std::size_t>(e)];
  };

  HalfLaurent bracket;  // exponents in A
  WireSet wires;
  std::vector<int> cur(static_cast<std::size_t>(n));
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    wires.reset();
    for (int i = 0; i < n; ++i) cur[static_cast<std::size_t>(i)] = wires.fresh();
    int loops = 0;
    int a_exp = 0;
    for (std::size_t pos = 0; pos < c; ++pos) {
      const int letter = w.letters[pos];
      const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
      const bool capcup = (state >> pos) & 1;
      // sigma_i = A * identity + A^{-1} * capcup; the inverse swaps weights.
      const int identity_weight = letter > 0 ? 1 : -1;
      a_exp += capcup ? -identity_weight : identity_weight;
      if (capcup) {
        if (wires.join(cur[i], cur[i + 1])) ++loops;
        const int arc = wires.fresh();
        cur[i] = arc;
        cur[i + 1] = arc;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (wires.join(cur[static_cast<std::size_t>(i)], i)) ++loops;
    }
    bracket += loop_power(loops - 1).shifted(a_exp);
  }

  // V = (-A)^{-3 writhe} * bracket, then s = t^{1/2} = A^{-2}.
  bracket = bracket.shifted(-3 * writhe);
  if (writhe % 2 != 0) bracket = -bracket;
  HalfLaurent out;
  for (const auto& [e, coeff] : bracket.terms()) {
    if (e % 2 != 0) throw Error("bracket produced an odd A-exponent");
    out.add_term(-e / 2, coeff);
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<HalfLaurent>>;

Matrix identity_matrix(int k) {
  Matrix m(static_cast<std::size_t>(k),
           std::vector<HalfLaurent>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = HalfLaurent::constant(1);
  }
  return m;
}

// Reduced Burau matrix of sigma_i^{±1} on n strands ((n-1) x (n-1),
// exponents are plain t-exponents).
Matrix burau_generator(int n, int i, bool inverse) {
  const int k = n - 1;
  Matrix m = identity_matrix(k);
  auto at = [&m](int r, int col) -> HalfLaurent& {
    return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
  };
  const HalfLaurent t = HalfLaurent::monomial(1, 1);
  const HalfLaurent minus_t = HalfLaurent::monomial(-1, 1);
  const HalfLaurent t_inv = HalfLaurent::monomial(1, -1);
  const HalfLaurent minus_t_inv = HalfLaurent::monomial(-1, -1);
  const HalfLaurent one = HalfLaurent::constant(1);
  // All non-identity entries sit in column r: t above the pivot, -t on it,
  // 1 below (and reciprocals for the inverse).
  const int r = i - 1;  // 0-based row of the -t pivot
  if (!inverse) {
    at(r, r) = minus_t;
    if (i > 1) at(r - 1, r) = t;
    if (i < n - 1) at(r + 1, r) = one;
  } else {
    at(r, r) = minus_t_inv;
    if (i > 1) at(r - 1, r) = one;
    if (i < n - 1) at(r + 1, r) = t_inv;
  }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t k = a.size();
  Matrix out(k, std::vector<HalfLaurent>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      HalfLaurent sum;
      for (std::size_t l = 0; l < k; ++l) sum += a[i][l] * b[l][j];
      out[i][j] = std::move(sum);
    }
  }
  return out;
}

// Fraction-free determinant (Bareiss); every division is exact.
HalfLaurent determinant(Matrix m) {
  const std::size_t k = m.size();
  if (k == 0) return HalfLaurent::constant(1);
  HalfLaurent prev = HalfLaurent::constant(1);
  int sign = 1;
  for (std::size_t r = 0; r + 1 < k; ++r) {
    if (m[r][r].is_zero()) {
      std::size_t swap_row = r + 1;
      while (swap_row < k && m[swap_row][r].is_zero()) ++swap_row;
      if (swap_row == k) return HalfLaurent();
      std::swap(m[r], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < k; ++i) {
      for (std::size_t j = r + 1; j < k; ++j) {
        m[i][j] = divide_exact(m[i][j] * m[r][r] - m[i][r] * m[r][j], prev);
      }
      m[i][r] = HalfLaurent();
    }
    prev = m[r][r];
  }
  return sign == 1 ? m[k - 1][k - 1] : -m[k - 1][k - 1];
}

}  // namespace

HalfLaurent burau_alexander(const BraidWord& w) {
  if (closure_components(w) != 1) {
    throw NotAKnot("the Burau determinant oracle handles knot closures only");
  }
  const int n = w.strands;
  if (n == 1) return HalfLaurent::constant(1);

  Matrix m = identity_matrix(n - 1);
  for (int letter : w.letters) {
    m = multiply(m, burau_generator(n, std::abs(letter), letter < 0));
  }
  // I - m.
  for (int i = 0; i < n - 1; ++i) {
    auto& row = m[static_cast<std::size_t>(i)];
    for (int j = 0; j < n - 1; ++j) {
      row[static_cast<std::size_t>(j)] = -row[static_cast<std::size_t>(j)];
    }
    row[static_cast<std::size_t>(i)] += HalfLaurent::constant(1);
  }
  HalfLaurent det = determinant(std::move(m));

  // Delta ≐ det(I - Burau) * (1 - t)/(1 - t^n).
  HalfLaurent one_minus_t;
  one_minus_t.add_term(0, 1);
  one_minus_t.add_term(1, -1);
  HalfLaurent one_minus_tn;
  one_minus_tn.add_term(0, 1);
  one_minus_tn.add_term(n, -1);
  HalfLaurent delta = divide_exact(det * one_minus_t, one_minus_tn);
  if (delta.is_zero()) throw Error("Burau determinant vanished on a knot closure");

  // Symmetrize to s-exponents, positive leading coefficient, |Delta(1)| = 1.
  const int lo = delta.min_exp();
  const int hi = delta.max_exp();
  HalfLaurent out;
  for (const auto& [e, coeff] : delta.terms()) out.add_term(2 * e - lo - hi, coeff);
  if (out.coeff(out.max_exp()) < 0) out = -out;
  const Int at_one = out.eval_at_one();
  if (at_one != 1 && at_one != -1) {
    throw Error("Burau normalization failed: |Delta(1)| != 1");
  }
  return out;
}

}  // namespace braidpoly
