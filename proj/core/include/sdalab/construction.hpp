#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "sdalab/minpoints.hpp"
#include "sdalab/rigorous/interval.hpp"
#include "sdalab/subspace.hpp"

namespace sdalab::construction {

using model::IntegerPoint;
using subspaces::RationalSubspace;

// [i_0, i_1, ..., i_{n-1}] where i_0 is given and i_t is the largest index
// with dim <x_{i_0}, ..., x_{i_t}> = t + 1. Requires n >= 2 and ambient
// dimension n + 1. Throws InsufficientData when the points run out before
// the last index is certified.
std::vector<std::size_t> select_indices(const std::vector<IntegerPoint>& points, std::size_t i0, int n);

// Span of x_i, ..., x_j.
RationalSubspace span(const std::vector<IntegerPoint>& points, std::size_t i, std::size_t j);

// U_t^k = <x_{s(t,k)}, ..., x_{i_t}> and V_t^{k+1} = <x_{s(t,k)}, ..., x_{i_t + 1}>
// where s(t,k) <= i_t is the largest index with dim V_t^{k+1} = k + 1, for
// 1 <= k <= t + 1 <= n.
struct SubspaceFamily {
  int n = 0;
  std::vector<IntegerPoint> points;
  std::vector<std::size_t> indices;
  std::vector<std::vector<std::size_t>> s_table;  // s_table[t][k-1]
  std::vector<std::vector<RationalSubspace>> U;   // U[t][k-1] = U_t^k
  std::vector<std::vector<RationalSubspace>> V;   // V[t][k-1] = V_t^{k+1}

  std::size_t s(int t, int k) const { return s_table[t][k - 1]; }
  const RationalSubspace& u(int t, int k) const { return U[t][k - 1]; }
  // V_t^d for 2 <= d <= t + 2.
  const RationalSubspace& v(int t, int d) const { return V[t][d - 2]; }
};

SubspaceFamily build_subspace_family(const std::vector<IntegerPoint>& points,
                                     const std::vector<std::size_t>& indices);

struct IdentityCheck {
  std::string name;
  int t = 0;
  int k = 0;
  bool pass = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool s_table_decreasing = false;
  bool dimensions_ok = false;
  bool all_pass() const;
};

// Checks, as exact subspace equalities:
//   whole:        R^{n+1} = V[i_0, i_{n-1}+1]
//   chain:        V[i_0, i_{t-1}+1] = V[i_0, i_t]            (1 <= t <= n-1)
//   sum:          V_t^{k+1} = U_t^k + V_t^k                  (2 <= k <= t+1)
//   intersection: U_t^{k-1} = U_t^k ∩ V_t^k                  (2 <= k <= t+1)
//   bridge:       U_t^{t+1} = V[i_0, i_{t-1}+1] = V_{t-1}^{t+1} (1 <= t <= n-1)
// plus the strict decrease of s(t, .) down to at least i_0 and the
// dimensions of every U and V.
IdentityReport verify_family_identities(const SubspaceFamily& fam);

struct HeightProductRatio {
  mpz_class lhs_sq;
  mpz_class rhs_sq;
  mpq_class ratio_sq;
  double ratio = 0;  // sqrt(ratio_sq)
};

// prod_{t=k}^{n-1} H(U_t^k) against prod_{t=k-1}^{n-1} H(V_t^{k+1}), 1 <= k <= n-1.
HeightProductRatio lemma32_check(const SubspaceFamily& fam, int k);

struct Theorem31Report {
  std::vector<std::size_t> indices;
  rigorous::Interval lhs;    // X_{i_1} ... X_{i_{n-1}}
  rigorous::Interval rhs;    // L_{i_0} X_{i_0+1} ... L_{i_{n-1}} X_{i_{n-1}+1}
  rigorous::Interval ratio;  // lhs / rhs
};

Theorem31Report theorem31_ratio(const minpoints::MinimalPointSequence& seq, std::size_t i0);

}  // namespace sdalab::construction
