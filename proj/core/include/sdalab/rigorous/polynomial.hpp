#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace sdalab::rigorous {

// Univariate polynomial with rational coefficients, stored in ascending
// order of degree and kept trimmed (no trailing zero coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coeffs);
  static Polynomial from_integers(std::span<const mpz_class> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

// p / gcd(p, p'), i.e. the product of the distinct irreducible factors.
Polynomial squarefree_part(const Polynomial& p);

// Sturm sequence p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);

// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_roots(const Polynomial& p, const mpq_class& lo, const mpq_class& hi);

}  // namespace sdalab::rigorous
