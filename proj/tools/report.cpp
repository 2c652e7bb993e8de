#include "report.hpp"

#include <cstdio>

namespace sdalab::tools {

namespace {

std::string str(const mpq_class& q) { return q.get_str(); }
std::string str(const mpz_class& z) { return z.get_str(); }

json subspace_json(const subspaces::RationalSubspace& w) {
  json rows = json::array();
  for (const auto& r : w.basis().row_vectors()) {
    json row = json::array();
    for (const auto& c : r) row.push_back(str(c));
    rows.push_back(row);
  }
  return {{"dim", w.dim()}, {"basis", rows}, {"height_sq", str(w.squared_height())}};
}

}  // namespace

std::string decimal(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

json to_json(const rigorous::Interval& x) {
  return {{"value", x.to_decimal(15)}, {"lower", decimal(x.lower(), 17)}, {"upper", decimal(x.upper(), 17)}};
}

json to_json(const transference::ExponentEstimate& e) {
  json series = json::array();
  for (const auto& r : e.series) {
    json row = {{"i", r.i}, {"ordinary", r.ordinary.to_decimal(15)}};
    row["uniform"] = r.uniform ? json(r.uniform->to_decimal(15)) : json(nullptr);
    series.push_back(row);
  }
  return {{"lambda", to_json(e.lambda)},
          {"lambda_hat", to_json(e.lambda_hat)},
          {"lambda_index", e.lambda_index},
          {"lambda_hat_index", e.lambda_hat_index},
          {"tail", {{"begin", e.tail_begin}, {"end", e.tail_end}}},
          {"regression_slope", decimal(e.regression_slope)},
          {"series", series}};
}

json to_json(const transference::EpsilonDelta& e) {
  json out = {{"eps", to_json(e.eps)}, {"delta", to_json(e.delta)}};
  json ks = json::array();
  for (std::size_t k = 0; k < e.eps_k.size(); ++k) {
    json row = {{"k", k}, {"eps_k", to_json(e.eps_k[k])}, {"delta_k", to_json(e.delta_k[k])},
                {"c_k", to_json(e.c_k[k])}};
    if (k < e.eps_k_exact.size()) {
      row["eps_k_exact"] = str(e.eps_k_exact[k]);
      row["delta_k_exact"] = str(e.delta_k_exact[k]);
    }
    ks.push_back(row);
  }
  out["per_k"] = ks;
  if (e.eps_exact) out["eps_exact"] = str(*e.eps_exact);
  if (e.delta_exact) out["delta_exact"] = str(*e.delta_exact);
  return out;
}

json to_json(const transference::SandwichReport& r) {
  json grid = json::array();
  for (const auto& g : r.grid) {
    json phis = json::array();
    for (const auto& v : g.Phi) phis.push_back(v.to_decimal(15));
    grid.push_back({{"X", decimal(g.X)},
                    {"envelope", g.envelope ? json(g.envelope->to_decimal(15)) : json("inf")},
                    {"psi", g.psi.to_decimal(15)},
                    {"phi", g.phi.to_decimal(15)},
                    {"Phi", phis}});
  }
  json mono = json::array();
  for (const auto& m : r.monotonicity)
    mono.push_back({{"k", m.k},
                    {"direction", m.direction == 2 ? json("none") : json(m.direction)},
                    {"method", m.analytic ? "analytic" : "grid (heuristic)"},
                    {"increasing_required", m.increasing_required},
                    {"ok", m.ok}});
  json minphi = json::array();
  for (const auto& v : r.min_Phi) minphi.push_back(to_json(v));
  json out = {{"family", r.family},
              {"A", str(r.A)},
              {"x_max", str(r.x_max)},
              {"holds", r.holds},
              {"steps_checked", r.steps_checked},
              {"steps_tight", r.tight},
              {"monotonicity", mono},
              {"min_Phi", minphi},
              {"empirical_c", minphi.empty() ? json(nullptr) : minphi.back()},
              {"consequences",
               {{"checked", r.consequence_checked},
                {"failures", r.consequence_failures},
                {"tight", r.consequence_tight}}},
              {"grid", grid}};
  if (r.constants) out["constants"] = to_json(*r.constants);
  if (r.eps_nonnegative) out["eps_nonnegative"] = transference::to_string(*r.eps_nonnegative);
  return out;
}

json to_json(const transference::ChainReport& r) {
  return {{"indices", r.indices},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"result", transference::to_string(r.result)}};
}

json to_json(const transference::ExtremalReport& r) {
  using transference::Condition;
  using transference::ExtremalRow;
  json rows = json::array();
  for (const auto& x : r.rows) {
    json row = {{"i", x.i},
                {"growth", to_string(x.growth)},
                {"decay", to_string(x.decay)},
                {"decay_lhs", x.decay_lhs.to_decimal(15)},
                {"decay_rhs", x.decay_rhs.to_decimal(15)},
                {"independence", to_string(x.independence)},
                {"record", to_string(x.record)}};
    if (x.growth_lhs) row["growth_lhs"] = x.growth_lhs->to_decimal(15);
    if (x.growth_rhs) row["growth_rhs"] = x.growth_rhs->to_decimal(15);
    if (x.det) row["det"] = str(*x.det);
    rows.push_back(row);
  }
  json summary = json::object();
  const std::pair<const char*, Condition ExtremalRow::*> fields[] = {{"growth", &ExtremalRow::growth},
                                                                     {"decay", &ExtremalRow::decay},
                                                                     {"independence", &ExtremalRow::independence},
                                                                     {"record", &ExtremalRow::record}};
  for (const auto& [name, f] : fields) {
    json c = json::object();
    for (Condition v : {Condition::Pass, Condition::Tight, Condition::Fail, Condition::NotApplicable})
      c[to_string(v)] = r.count(f, v);
    summary[name] = c;
  }
  return {{"threshold", to_json(r.threshold)},
          {"eps_within_threshold", to_string(r.eps_within_threshold)},
          {"summary", summary},
          {"rows", rows}};
}

json to_json(const subspaces::FuzzReport& r) {
  return {{"max_dim", r.max_dim},
          {"count", r.count},
          {"seed", r.seed},
          {"max_ratio_sq", str(r.max_ratio_sq)},
          {"max_ratio_sq_decimal", decimal(r.max_ratio_sq.get_d())},
          {"ratio_sq_equal_one", r.ratio_one},
          {"duality_checked", r.duality_checked},
          {"duality_failures", r.duality_failures},
          {"gram_failures", r.gram_failures},
          {"worst",
           {{"a", subspace_json(r.worst.a)},
            {"b", subspace_json(r.worst.b)},
            {"lhs_sq", str(r.worst.ratio.lhs_sq)},
            {"rhs_sq", str(r.worst.ratio.rhs_sq)}}}};
}

json to_json(const spectra::LiouvilleReport& r) {
  json out = {{"n", r.n},
              {"entries", r.seq.size()},
              {"x_max", str(r.seq.exhausted_up_to)},
              {"c2_estimate", to_json(r.c2_estimate)},
              {"c2_index", r.c2_index},
              {"lambda_n", to_json(r.lambda_n)}};
  out["exponents"] = r.exponents ? to_json(*r.exponents) : json(nullptr);
  out["margin"] = r.margin ? to_json(*r.margin) : json(nullptr);
  return out;
}

json family_json(const construction::SubspaceFamily& fam, const construction::IdentityReport& ids) {
  json s = json::array();
  for (const auto& row : fam.s_table) s.push_back(row);
  json levels = json::array();
  for (std::size_t t = 0; t < fam.U.size(); ++t) {
    json U = json::array(), V = json::array();
    for (const auto& w : fam.U[t]) U.push_back({{"dim", w.dim()}, {"height_sq", str(w.squared_height())}});
    for (const auto& w : fam.V[t]) V.push_back({{"dim", w.dim()}, {"height_sq", str(w.squared_height())}});
    levels.push_back({{"t", t}, {"U", U}, {"V", V}});
  }
  json checks = json::array();
  for (const auto& c : ids.checks) checks.push_back({{"name", c.name}, {"t", c.t}, {"k", c.k}, {"pass", c.pass}});
  return {{"n", fam.n},
          {"indices", fam.indices},
          {"s_table", s},
          {"levels", levels},
          {"identities", checks},
          {"s_table_decreasing", ids.s_table_decreasing},
          {"dimensions_ok", ids.dimensions_ok},
          {"all_pass", ids.all_pass()}};
}

}  // namespace sdalab::tools
