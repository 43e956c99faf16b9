#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "driverset/rational.hpp"

namespace driverset {

// Univariate polynomial over the rationals.  Coefficients are stored lowest
// degree first with no trailing zeros; the zero polynomial is the empty
// vector and has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly variable() { return UniPoly({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
  }

  const Rational& leading() const {
    if (coeffs_.empty())
      throw std::invalid_argument("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(out));
  }

  UniPoly monic() const {
    if (coeffs_.empty()) return UniPoly();
    return *this * (Rational(1) / leading());
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UniPoly(std::move(out));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
    return UniPoly(std::move(out));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
  }

  UniPoly operator*(const Rational& c) const {
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * c;
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem = num.coeffs_;
    std::vector<Rational> quot;
    if (num.degree() >= den.degree())
      quot.assign(static_cast<std::size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const Rational& lead = den.leading();
    for (int k = num.degree(); k >= den.degree(); --k) {
      Rational q = rem[static_cast<std::size_t>(k)] / lead;
      if (q == 0) continue;
      quot[static_cast<std::size_t>(k - den.degree())] = q;
      for (int j = 0; j <= den.degree(); ++j)
        rem[static_cast<std::size_t>(k - den.degree() + j)] -= q * den.coeffs_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
  }

  static UniPoly divide_exact(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::invalid_argument("polynomial division leaves a remainder");
    return q;
  }

  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      Rational mag = abs(c);
      if (k == 0 || mag != 1) os << mag.get_str();
      if (k > 0) {
        if (mag != 1) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

namespace detail {

// Integer polynomials (low-first, trimmed) back the gcd: primitive
// pseudo-remainder sequences keep coefficient growth bounded.
using ZPoly = std::vector<BigInt>;

inline void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline ZPoly primitive_part(ZPoly p) {
  ztrim(p);
  if (p.empty()) return p;
  BigInt content = 0;
  for (const BigInt& c : p) content = gcd(content, c);
  if (sgn(p.back()) < 0) content = -content;
  for (BigInt& c : p) c = exact_div(c, content);
  return p;
}

inline ZPoly to_primitive_integer(const UniPoly& p) {
  ZPoly out;
  out.reserve(p.coefficients().size());
  BigInt den_lcm = 1;
  for (const Rational& c : p.coefficients()) den_lcm = lcm(den_lcm, c.get_den());
  for (const Rational& c : p.coefficients())
    out.push_back(c.get_num() * exact_div(den_lcm, c.get_den()));
  return primitive_part(std::move(out));
}

// lc(b)^k * a mod b over the integers, scaled once per degree reduction.
inline ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const BigInt& lb = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    BigInt la = a.back();
    std::size_t shift = a.size() - b.size();
    for (BigInt& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    ztrim(a);
  }
  return a;
}

}  // namespace detail

// Monic gcd over the rationals; gcd with the zero polynomial is the monic
// form of the other argument.
inline UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  detail::ZPoly a = detail::to_primitive_integer(p);
  detail::ZPoly b = detail::to_primitive_integer(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    detail::ZPoly r = detail::primitive_part(detail::pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(a.size());
  for (const BigInt& c : a) coeffs.emplace_back(c);
  return UniPoly(std::move(coeffs)).monic();
}

struct SquarefreeFactor {
  UniPoly factor;  // monic, squarefree, non-constant
  int multiplicity = 0;
};

// Yun's squarefree decomposition: p = lc(p) * prod factor_i^multiplicity_i
// with the factors pairwise coprime.  Multiplicities come out ascending.
inline std::vector<SquarefreeFactor> multiplicity_profile(const UniPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("multiplicity profile of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  UniPoly f = p.monic();
  if (f.degree() == 0) return out;
  UniPoly g = poly_gcd(f, f.derivative());
  UniPoly b = UniPoly::divide_exact(f, g);
  UniPoly c = UniPoly::divide_exact(f.derivative(), g);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = UniPoly::divide_exact(b, a);
    c = UniPoly::divide_exact(d, a);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

// Newton interpolation through distinct nodes, exact.
inline UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: length mismatch");
  if (xs.empty()) return UniPoly();
  const int n = static_cast<int>(xs.size());
  std::vector<Rational> dd = ys;
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i)
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
          (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - level)]);
  UniPoly poly = UniPoly::constant(dd[static_cast<std::size_t>(n - 1)]);
  for (int i = n - 2; i >= 0; --i)
    poly = poly * UniPoly({-xs[static_cast<std::size_t>(i)], Rational(1)}) +
           UniPoly::constant(dd[static_cast<std::size_t>(i)]);
  return poly;
}

}  // namespace driverset
