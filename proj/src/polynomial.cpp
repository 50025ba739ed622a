// SPDX-License-Identifier: Apache-2.0
#include "graphopt/polynomial.hpp"

#include <utility>

#include "graphopt/error.hpp"

namespace graphopt {

namespace {

int sign_of(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::primitive() const {
  if (coeffs_.empty()) return {};
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return *this;
  }
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPolynomial(std::move(out));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  const mpz_class p = static_cast<long>(x.num());
  const mpz_class q = static_cast<long>(x.den());
  mpz_class acc = coeffs_.back();
  mpz_class qpow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    qpow *= q;
    acc = acc * p + coeffs_[i] * qpow;
  }
  return sign_of(acc);
}

int IntPolynomial::sign_at_infinity(bool positive) const {
  if (coeffs_.empty()) return 0;
  int s = sign_of(coeffs_.back());
  return (positive || degree() % 2 == 0) ? s : -s;
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) out += "-";
    mpz_class a = abs(coeffs_[i]);
    if (a != 1 || i == 0) out += a.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const mpz_class& lb = b.leading();
  const int db = b.degree();
  int exponent = a.degree() - db + 1;
  int rdeg = a.degree();
  while (rdeg >= db && rdeg >= 0) {
    mpz_class lr = r[rdeg];
    for (auto& c : r) c *= lb;
    const int shift = rdeg - db;
    for (int i = 0; i <= db; ++i) r[i + shift] -= lr * bc[i];
    --exponent;
    while (rdeg >= 0 && r[rdeg] == 0) --rdeg;
  }
  if (exponent > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(exponent));
    for (auto& c : r) c *= scale;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(Errc::InvalidArgument, "inexact polynomial division");
  std::vector<mpz_class> r = a.coefficients();
  std::vector<mpz_class> q(a.degree() - b.degree() + 1);
  const auto& bc = b.coefficients();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    mpz_class top = r[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) {
      throw Error(Errc::InvalidArgument, "inexact polynomial division");
    }
    q[k] = top / b.leading();
    for (int i = 0; i <= b.degree(); ++i) r[i + k] -= q[k] * bc[i];
  }
  for (const auto& c : r) {
    if (c != 0) throw Error(Errc::InvalidArgument, "inexact polynomial division");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial primitive_gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  a = a.primitive();
  if (!a.is_zero() && a.leading() < 0) {
    std::vector<mpz_class> neg = a.coefficients();
    for (auto& c : neg) c = -c;
    a = IntPolynomial(std::move(neg));
  }
  return a;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial& p) {
  std::vector<IntPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p.primitive());
  IntPolynomial d = p.derivative().primitive();
  if (d.is_zero()) return seq;
  seq.push_back(std::move(d));
  while (true) {
    const IntPolynomial& a = seq[seq.size() - 2];
    const IntPolynomial& b = seq.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^k * rem; negate with the sign that makes the result a positive multiple of -rem.
    const int k = a.degree() - b.degree() + 1;
    const bool flip = !(b.leading() < 0 && k % 2 == 1);
    std::vector<mpz_class> c = r.primitive().coefficients();
    if (flip)
      for (auto& x : c) x = -x;
    seq.emplace_back(std::move(c));
  }
  return seq;
}

namespace {

template <class SignOf>
int variations(const std::vector<IntPolynomial>& seq, SignOf sign_of) {
  int changes = 0, last = 0;
  for (const auto& poly : seq) {
    int s = sign_of(poly);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Square-free parts s_k = r_k / r_{k+1} of the chain r_0 = p, r_{k+1} = gcd(r_k, r_k').
// A root of multiplicity m is a root of s_0, ..., s_{m-1}.
std::vector<IntPolynomial> multiplicity_layers(const IntPolynomial& p) {
  std::vector<IntPolynomial> layers;
  IntPolynomial r = p.primitive();
  while (r.degree() >= 1) {
    IntPolynomial next = primitive_gcd(r, r.derivative());
    layers.push_back(exact_quotient(r, next));
    r = std::move(next);
  }
  return layers;
}

}  // namespace

int count_roots_above(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "root counting on the zero polynomial");
  int total = 0;
  for (const auto& layer : multiplicity_layers(p)) {
    auto seq = sturm_sequence(layer);
    int at_x = variations(seq, [&](const IntPolynomial& q) { return q.sign_at(x); });
    int at_inf = variations(seq, [](const IntPolynomial& q) { return q.sign_at_infinity(true); });
    total += at_x - at_inf;
  }
  return total;
}

int count_roots_below(const IntPolynomial& p, const Rational& x) {
  if (p.is_zero()) throw Error(Errc::InvalidArgument, "root counting on the zero polynomial");
  int total = 0;
  for (const auto& layer : multiplicity_layers(p)) {
    auto seq = sturm_sequence(layer);
    int at_neg_inf = variations(seq, [](const IntPolynomial& q) { return q.sign_at_infinity(false); });
    int at_x = variations(seq, [&](const IntPolynomial& q) { return q.sign_at(x); });
    total += at_neg_inf - at_x - (layer.sign_at(x) == 0 ? 1 : 0);
  }
  return total;
}

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPolynomial interpolate_at_naturals(const std::vector<mpz_class>& values) {
  const std::size_t count = values.size();
  std::vector<mpz_class> diff = values;
  std::vector<mpz_class> newton(count);
  mpz_class factorial = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k);
    if (!mpz_divisible_p(diff[0].get_mpz_t(), factorial.get_mpz_t())) {
      throw Error(Errc::InvalidArgument, "samples are not values of an integer polynomial");
    }
    newton[k] = diff[0] / factorial;
    for (std::size_t i = 0; i + 1 < count - k; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // Expand sum_k newton[k] * x(x-1)...(x-k+1).
  std::vector<mpz_class> result(count, 0);
  std::vector<mpz_class> falling{1};
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < falling.size(); ++i) result[i] += newton[k] * falling[i];
    std::vector<mpz_class> next(falling.size() + 1, 0);
    for (std::size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * static_cast<unsigned long>(k);
    }
    falling = std::move(next);
  }
  return IntPolynomial(std::move(result));
}

}  // namespace graphopt
