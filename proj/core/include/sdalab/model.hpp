#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sdalab/intmat.hpp"
#include "sdalab/rigorous/real.hpp"

namespace sdalab::model {

using rigorous::RigorousReal;

// Integer point with canonical sign: the first nonzero coordinate is positive.
class IntegerPoint {
 public:
  IntegerPoint() = default;
  explicit IntegerPoint(std::vector<mpz_class> coords);
  IntegerPoint(std::initializer_list<long> coords);

  std::size_t size() const noexcept { return x_.size(); }
  const mpz_class& operator[](std::size_t k) const { return x_[k]; }
  const std::vector<mpz_class>& coords() const noexcept { return x_; }
  const mpz_class& norm_sq() const noexcept { return norm_sq_; }
  bool is_zero() const noexcept { return sgn(norm_sq_) == 0; }

  std::string to_string() const;

  friend bool operator==(const IntegerPoint& a, const IntegerPoint& b) { return a.x_ == b.x_; }
  // Lexicographic on coordinates.
  friend bool operator<(const IntegerPoint& a, const IntegerPoint& b);

 private:
  std::vector<mpz_class> x_;
  mpz_class norm_sq_ = 0;
};

enum class Independence { Asserted, Unverified };

// xi = (xi_0, ..., xi_n) with xi_0 certified nonzero.
class TargetPoint {
 public:
  TargetPoint() = default;
  explicit TargetPoint(std::vector<RigorousReal> coords,
                       Independence status = Independence::Asserted);

  int n() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  std::size_t size() const noexcept { return coords_.size(); }
  const RigorousReal& coord(std::size_t k) const { return coords_[k]; }
  const std::vector<RigorousReal>& coords() const noexcept { return coords_; }
  // xi_k / xi_0, with ratio(0) == 1.
  const RigorousReal& ratio(std::size_t k) const { return ratios_[k]; }
  const RigorousReal& abs_xi0() const noexcept { return abs_xi0_; }
  Independence independence() const noexcept { return status_; }

 private:
  std::vector<RigorousReal> coords_;
  std::vector<RigorousReal> ratios_;
  RigorousReal abs_xi0_;
  Independence status_ = Independence::Asserted;
};

// The set S of integer points allowed to compete.
class ApproxSet {
 public:
  enum class Kind { Full, Congruence, Sublattice };

  ApproxSet() = default;
  static ApproxSet full();
  // residues[k] lists the allowed classes of x_k mod m; unlisted coordinates
  // are unconstrained.
  static ApproxSet congruence(const mpz_class& modulus,
                              const std::map<std::size_t, std::vector<mpz_class>>& residues);
  // Rows of `basis` generate the sublattice; they must be independent.
  static ApproxSet sublattice(const linalg::IntMatrix& basis);

  Kind kind() const noexcept { return kind_; }
  const mpz_class& modulus() const noexcept { return modulus_; }
  // Sorted residues in [0, m) for coordinate k; empty when unconstrained.
  const std::vector<mpz_class>& residues(std::size_t k) const;
  const std::map<std::size_t, std::vector<mpz_class>>& residue_map() const noexcept {
    return residues_;
  }
  const linalg::IntMatrix& basis() const noexcept { return basis_; }
  const linalg::IntMatrix& hnf() const noexcept { return hnf_; }

  // Exact membership of the signed vector (no sign folding).
  bool contains(const std::vector<mpz_class>& x) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::Full;
  mpz_class modulus_ = 1;
  std::map<std::size_t, std::vector<mpz_class>> residues_;
  linalg::IntMatrix basis_;
  linalg::IntMatrix hnf_;
};

// A canonical point stands for the pair {x, -x}: it belongs to S when either
// sign does.
bool member(const ApproxSet& s, const IntegerPoint& x);

// max_k |xi_0 x_k - xi_k x_0| with the maximizing branch certified up to
// `cap`. When two branches cannot be separated the enclosure of their common
// value is returned and `argmax` is -1.
struct LValue {
  RigorousReal value;
  int argmax = -1;
};
LValue evaluate_L(const TargetPoint& xi, const IntegerPoint& x,
                  long cap = rigorous::default_precision_cap());
RigorousReal L_value(const TargetPoint& xi, const IntegerPoint& x,
                     long cap = rigorous::default_precision_cap());

struct LoadedTarget {
  TargetPoint target;
  ApproxSet set;
};

// Parses the JSON experiment configuration. Unknown top-level keys are
// ignored. Throws SchemaError on malformed input.
LoadedTarget load_target(std::string_view json_text);
// Parses one coordinate descriptor given as JSON text.
RigorousReal parse_real(std::string_view json_text);

}  // namespace sdalab::model
