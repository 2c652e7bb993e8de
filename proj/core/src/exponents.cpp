#include "sdalab/exponents.hpp"

#include <cmath>

#include "sdalab/error.hpp"

namespace sdalab::transference {

using rigorous::Interval;

ExponentEstimate estimate_exponents(const std::vector<Interval>& log_X, const std::vector<Interval>& log_L,
                                    const mpq_class& tail_fraction, std::size_t min_entries) {
  if (log_X.size() != log_L.size()) fail(Errc::DomainError, "log_X and log_L differ in length");
  if (sgn(tail_fraction) <= 0 || tail_fraction > 1) fail(Errc::DomainError, "tail fraction must lie in (0, 1]");

  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < log_X.size(); ++i)
    if (!log_X[i].contains_zero() && log_X[i].lower() > 0) usable.push_back(i);

  mpq_class want = tail_fraction * mpq_class(usable.size());
  mpz_class count = want.get_num() / want.get_den();
  if (count * want.get_den() != want.get_num()) ++count;
  const std::size_t take = count.get_ui();
  if (take < min_entries)
    fail(Errc::TooFewPoints, "tail window holds " + std::to_string(take) + " entries, need " +
                                 std::to_string(min_entries));

  ExponentEstimate est;
  est.tail_begin = usable[usable.size() - take];
  est.tail_end = log_X.size();
  bool have_hat = false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t u = usable.size() - take; u < usable.size(); ++u) {
    const std::size_t i = usable[u];
    SlopeRow row;
    row.i = i;
    row.ordinary = -log_L[i] / log_X[i];
    if (i + 1 < log_X.size()) row.uniform = -log_L[i] / log_X[i + 1];

    if (u == usable.size() - take || row.ordinary.mid() > est.lambda.mid()) {
      est.lambda = row.ordinary;
      est.lambda_index = i;
    }
    if (row.uniform && (!have_hat || row.uniform->mid() < est.lambda_hat.mid())) {
      est.lambda_hat = *row.uniform;
      est.lambda_hat_index = i;
      have_hat = true;
    }
    const double x = log_X[i].mid(), y = -log_L[i].mid();
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    est.series.push_back(std::move(row));
  }
  if (!have_hat) fail(Errc::TooFewPoints, "no uniform slope in the tail window");
  const double m = static_cast<double>(take);
  const double den = m * sxx - sx * sx;
  est.regression_slope = den != 0 ? (m * sxy - sx * sy) / den : std::nan("");
  return est;
}

ExponentEstimate estimate_exponents(const minpoints::MinimalPointSequence& seq, const mpq_class& tail_fraction,
                                    std::size_t min_entries) {
  std::vector<Interval> lx, ll;
  lx.reserve(seq.size());
  ll.reserve(seq.size());
  for (const auto& e : seq.entries) {
    if (e.point.norm_sq() == 1)
      lx.push_back(Interval(0.0));
    else
      lx.push_back(log(Interval::from_real(e.X)));
    ll.push_back(log(Interval::from_real(e.L)));
  }
  return estimate_exponents(lx, ll, tail_fraction, min_entries);
}

}  // namespace sdalab::transference
