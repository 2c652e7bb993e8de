#include "sdalab/rigorous/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdalab::rigorous {

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::from_integers(std::span<const mpz_class> coeffs) {
  std::vector<mpq_class> q;
  q.reserve(coeffs.size());
  for (const auto& c : coeffs) q.emplace_back(c);
  return Polynomial(std::move(q));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class Polynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at(const mpq_class& x) const { return sgn((*this)(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpq_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<mpq_class> m(coeffs_);
  const mpq_class lead = coeffs_.back();
  for (auto& c : m) c /= lead;
  return Polynomial(std::move(m));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<mpq_class> c(p.coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem(a.coefficients());
  const int db = b.degree();
  const auto& bc = b.coefficients();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int d = a.degree(); d >= db; --d) {
    const mpq_class f = rem[static_cast<std::size_t>(d)] / b.leading();
    quot[static_cast<std::size_t>(d - db)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(d - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  const Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).quotient;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Polynomial d = p.derivative();
  while (!d.is_zero()) {
    seq.push_back(d);
    const std::size_t k = seq.size();
    d = -divmod(seq[k - 2], seq[k - 1]).remainder;
  }
  return seq;
}

namespace {

int sign_variations(const std::vector<Polynomial>& seq, const mpq_class& x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : seq) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int count_roots(const Polynomial& p, const mpq_class& lo, const mpq_class& hi) {
  if (p.degree() <= 0 || hi <= lo) return 0;
  const auto seq = sturm_sequence(squarefree_part(p));
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

}  // namespace sdalab::rigorous
