#include "braidpoly/laurent.hpp"

#include <algorithm>
#include <utility>

#include "braidpoly/errors.hpp"
#include "json.hpp"

namespace braidpoly {

LaurentPoly2 LaurentPoly2::constant(Int c) {
  LaurentPoly2 p;
  p.add_term(0, 0, c);
  return p;
}

LaurentPoly2 LaurentPoly2::monomial(Int coeff, int v_exp, int z_exp) {
  LaurentPoly2 p;
  p.add_term(v_exp, z_exp, coeff);
  return p;
}

Int LaurentPoly2::coeff(int v_exp, int z_exp) const {
  auto it = terms_.find(Exp2{z_exp, v_exp});
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly2::add_term(int v_exp, int z_exp, const Int& c) {
  if (c == 0) return;
  Exp2 key{z_exp, v_exp};
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.v, e.z, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.v, e.z, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      out.add_term(ea.v + eb.v, ea.z + eb.z, ca * cb);
    }
  }
  return out;
}

LaurentPoly2 LaurentPoly2::shifted(int v_exp, int z_exp) const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exp2{e.z + z_exp, e.v + v_exp}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::scaled(const Int& c) const {
  LaurentPoly2 out;
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

LaurentPoly2 LaurentPoly2::pow(int e) const {
  LaurentPoly2 out = constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

int LaurentPoly2::min_v_exp() const {
  int best = terms_.begin()->first.v;
  for (const auto& [e, c] : terms_) best = std::min(best, e.v);
  return best;
}

int LaurentPoly2::max_v_exp() const {
  int best = terms_.begin()->first.v;
  for (const auto& [e, c] : terms_) best = std::max(best, e.v);
  return best;
}

int LaurentPoly2::min_z_exp() const { return terms_.begin()->first.z; }

int LaurentPoly2::max_z_exp() const { return terms_.rbegin()->first.z; }

LaurentPoly2 mirror(const LaurentPoly2& p) {
  LaurentPoly2 out;
  for (const auto& [e, c] : p.terms()) {
    out.add_term(-e.v, e.z, e.z % 2 == 0 ? c : -c);
  }
  return out;
}

namespace {

// Exact quotient of univariate sparse polynomials (exponent -> coefficient),
// cancelling from the lowest exponent up. The max exponent of an exact
// quotient is bounded by deg(num) - deg(den); crossing that bound proves the
// remainder can never clear, so the division is inexact.
std::map<int, Int> divide_slice(std::map<int, Int> f, const std::map<int, Int>& d) {
  std::map<int, Int> q;
  if (f.empty()) return q;
  const int d_min = d.begin()->first;
  const Int& d_min_coeff = d.begin()->second;
  const int q_max = f.rbegin()->first - d.rbegin()->first;
  while (!f.empty()) {
    const int e = f.begin()->first;
    const Int c = f.begin()->second;
    const int qe = e - d_min;
    if (qe > q_max || c % d_min_coeff != 0) {
      throw InexactDivision("polynomial division leaves a remainder");
    }
    const Int qc = c / d_min_coeff;
    q.emplace(qe, qc);
    for (const auto& [de, dc] : d) {
      auto [it, inserted] = f.emplace(qe + de, -qc * dc);
      if (!inserted) {
        it->second -= qc * dc;
        if (it->second == 0) f.erase(it);
      } else if (it->second == 0) {
        f.erase(it);
      }
    }
  }
  return q;
}

void append_term_text(std::string& out, const Int& c, bool first) {
  if (!first) out += " + ";
  out += c.str();
}

}  // namespace

LaurentPoly2 divide_exact(const LaurentPoly2& num, const LaurentPoly2& den) {
  if (den.is_zero()) throw Error("division by the zero polynomial");
  std::map<int, Int> d;
  for (const auto& [e, c] : den.terms()) {
    if (e.z != 0) throw Error("divisor must not involve the second variable");
    d.emplace(e.v, c);
  }
  // Group the numerator by z-exponent; each slice divides independently.
  std::map<int, std::map<int, Int>> slices;
  for (const auto& [e, c] : num.terms()) slices[e.z].emplace(e.v, c);
  LaurentPoly2 out;
  for (const auto& [z, slice] : slices) {
    for (const auto& [v, c] : divide_slice(slice, d)) out.add_term(v, z, c);
  }
  return out;
}

std::string to_text(const LaurentPoly2& p, std::string_view var1, std::string_view var2) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term_text(out, c, first);
    first = false;
    out += '*';
    out += var1;
    out += '^';
    out += std::to_string(e.v);
    out += '*';
    out += var2;
    out += '^';
    out += std::to_string(e.z);
  }
  return out;
}

std::string to_json_text(const LaurentPoly2& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back(nlohmann::json::array({e.v, e.z, c.str()}));
  }
  return arr.dump();
}

HalfLaurent HalfLaurent::constant(Int c) {
  HalfLaurent p;
  p.add_term(0, c);
  return p;
}

HalfLaurent HalfLaurent::monomial(Int coeff, int exp) {
  HalfLaurent p;
  p.add_term(exp, coeff);
  return p;
}

Int HalfLaurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void HalfLaurent::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

HalfLaurent HalfLaurent::shifted(int exp) const {
  HalfLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exp, c);
  return out;
}

HalfLaurent HalfLaurent::scaled(const Int& c) const {
  HalfLaurent out;
  if (c == 0) return out;
  for (const auto& [e, coef] : terms_) out.terms_.emplace(e, coef * c);
  return out;
}

HalfLaurent HalfLaurent::pow(int e) const {
  HalfLaurent out = constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

HalfLaurent HalfLaurent::reversed() const {
  HalfLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

int HalfLaurent::min_exp() const { return terms_.begin()->first; }

int HalfLaurent::max_exp() const { return terms_.rbegin()->first; }

Int HalfLaurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool HalfLaurent::all_exponents_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first % 2 == 0; });
}

HalfLaurent divide_exact(const HalfLaurent& num, const HalfLaurent& den) {
  if (den.is_zero()) throw Error("division by the zero polynomial");
  HalfLaurent out;
  for (const auto& [e, c] : divide_slice(num.terms(), den.terms())) out.add_term(e, c);
  return out;
}

std::string to_text(const HalfLaurent& p, std::string_view var, int exponent_denominator) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term_text(out, c, first);
    first = false;
    out += '*';
    out += var;
    out += '^';
    if (exponent_denominator == 1) {
      out += std::to_string(e);
    } else if (e % 2 == 0) {
      out += std::to_string(e / 2);
    } else {
      out += '(';
      out += std::to_string(e);
      out += "/2)";
    }
  }
  return out;
}

std::string to_json_text(const HalfLaurent& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back(nlohmann::json::array({e, c.str()}));
  }
  return arr.dump();
}

}  // namespace braidpoly
