#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace braidpoly {

using Int = boost::multiprecision::cpp_int;

// Exponent pair of a two-variable Laurent term. Ordered z-major so that map
// iteration matches the text format (z ascending, then v ascending).
struct Exp2 {
  int z = 0;
  int v = 0;
  auto operator<=>(const Exp2&) const = default;
};

// Sparse exact Laurent polynomial in two variables over arbitrary-precision
// integers. The variable pair is (v, z) for HOMFLY values and (alpha, z)
// after normalization; the arithmetic is identical. Zero coefficients are
// never stored.
class LaurentPoly2 {
 public:
  LaurentPoly2() = default;

  static LaurentPoly2 constant(Int c);
  static LaurentPoly2 monomial(Int coeff, int v_exp, int z_exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp2, Int>& terms() const { return terms_; }
  Int coeff(int v_exp, int z_exp) const;

  // Accumulates c into the (v_exp, z_exp) term, erasing it if it becomes 0.
  void add_term(int v_exp, int z_exp, const Int& c);

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) {
    a += b;
    return a;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  bool operator==(const LaurentPoly2&) const = default;

  // Multiplies by the monomial v^v_exp * z^z_exp.
  LaurentPoly2 shifted(int v_exp, int z_exp) const;
  LaurentPoly2 scaled(const Int& c) const;
  LaurentPoly2 pow(int e) const;  // e >= 0

  int min_v_exp() const;  // pre: nonzero
  int min_z_exp() const;  // pre: nonzero
  int max_v_exp() const;  // pre: nonzero
  int max_z_exp() const;  // pre: nonzero

 private:
  std::map<Exp2, Int> terms_;
};

// Value of the first variable's inversion composed with negating the second:
// v -> v^{-1}, z -> -z. Sends a link's HOMFLY polynomial to its mirror's.
LaurentPoly2 mirror(const LaurentPoly2& p);

// Exact quotient num / den. den must be nonzero and supported on z-exponent 0
// (univariate in the first variable); the division runs per z-slice from the
// lowest exponent up. Throws InexactDivision if any remainder survives.
LaurentPoly2 divide_exact(const LaurentPoly2& num, const LaurentPoly2& den);

// Text form: terms sorted by (z ascending, v ascending), each printed as
// <coeff>*v^<p>*z^<q>, joined by " + "; the zero polynomial prints "0".
// var1/var2 rename the variables (e.g. "a" and "z" after normalization).
std::string to_text(const LaurentPoly2& p, std::string_view var1 = "v",
                    std::string_view var2 = "z");

// JSON form: list of [p, q, "coeff"] triples (p = v-exponent, q = z-exponent,
// coefficient as a decimal string), in the same order as the text form.
std::string to_json_text(const LaurentPoly2& p);

// Sparse exact Laurent polynomial in one variable over arbitrary-precision
// integers. Used both for s = t^{1/2} specializations (Jones, Alexander,
// Kauffman bracket, Burau) and for plain z-polynomials (Conway).
class HalfLaurent {
 public:
  HalfLaurent() = default;

  static HalfLaurent constant(Int c);
  static HalfLaurent monomial(Int coeff, int exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int exp) const;

  void add_term(int exp, const Int& c);

  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) {
    a += b;
    return a;
  }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) {
    a -= b;
    return a;
  }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  bool operator==(const HalfLaurent&) const = default;

  HalfLaurent shifted(int exp) const;  // multiply by x^exp
  HalfLaurent scaled(const Int& c) const;
  HalfLaurent pow(int e) const;      // e >= 0
  HalfLaurent reversed() const;      // x -> x^{-1}

  int min_exp() const;  // pre: nonzero
  int max_exp() const;  // pre: nonzero
  Int eval_at_one() const;
  bool all_exponents_even() const;

 private:
  std::map<int, Int> terms_;
};

// Exact quotient num / den, lowest exponent up; throws InexactDivision if the
// division does not terminate with zero remainder.
HalfLaurent divide_exact(const HalfLaurent& num, const HalfLaurent& den);

// Text form: terms sorted by exponent ascending as <coeff>*<var>^<e>.
// exponent_denominator = 2 treats the stored exponent as twice the printed
// one (s = t^{1/2} representation); odd exponents print as <var>^(k/2).
std::string to_text(const HalfLaurent& p, std::string_view var = "t",
                    int exponent_denominator = 2);

// JSON form: list of [e, "coeff"] pairs over the stored (integer) exponent.
std::string to_json_text(const HalfLaurent& p);

}  // namespace braidpoly
