#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "run_store.hpp"
#include "sdalab/construction.hpp"
#include "sdalab/error.hpp"
#include "sdalab/exponents.hpp"
#include "sdalab/extremal.hpp"
#include "sdalab/minpoints.hpp"
#include "sdalab/presets.hpp"
#include "sdalab/spectra.hpp"
#include "sdalab/subspace.hpp"
#include "sdalab/transference.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;
using namespace sdalab;
using namespace sdalab::tools;
using rigorous::Interval;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) fail(Errc::IoError, "cannot write " + out);
  f << text;
}

std::vector<mpz_class> parse_integers(const std::string& list) {
  std::vector<mpz_class> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
    } catch (const std::invalid_argument&) {
      fail(Errc::SchemaError, "not an integer: '" + item + "'");
    }
  }
  if (out.empty()) fail(Errc::SchemaError, "empty integer list");
  return out;
}

rigorous::RigorousReal parse_extra(const std::string& text) {
  const bool plain = !text.empty() && text.find_first_not_of("+-0123456789.eE") == std::string::npos;
  return plain ? rigorous::RigorousReal::decimal(text) : model::parse_real(text);
}

struct Enumerate {
  std::string config, preset, xmax, out;
  unsigned threads = 1;
  int run() const {
    std::string text = preset.empty() ? read_text(config) : presets::config(preset);
    json parsed;
    try {
      parsed = json::parse(text);
    } catch (const json::exception& e) {
      fail(Errc::SchemaError, e.what());
    }
    const auto target = model::load_target(text);
    const mpq_class x = parse_rational(xmax);
    minpoints::EnumerationOptions opts;
    opts.threads = threads;
    const auto seq = minpoints::enumerate_minimal_points(target.target, target.set, x, opts);

    RunStore store(out);
    store.init({{"tool", "sdalab"},
                {"version", kVersion},
                {"command", "enumerate"},
                {"source", preset.empty() ? "config file" : "preset " + preset},
                {"xmax", x.get_str()},
                {"exhausted_up_to", seq.exhausted_up_to.get_str()},
                {"entries", seq.size()}});
    store.put("config.json", dump(parsed));
    std::ostringstream csv;
    minpoints::write_csv(csv, seq);
    store.put("minimal_points.csv", csv.str());
    std::cout << seq.size() << " minimal points up to " << x.get_str() << " in " << out << "\n";
    return 0;
  }
};

struct Exponents {
  std::string run_dir, tail = "1/2";
  std::size_t min_entries = 10;
  int run() const {
    const auto run = load_run(run_dir);
    const auto est = transference::estimate_exponents(run.seq, parse_rational(tail), min_entries);
    json j = to_json(est);
    j["tail_fraction"] = parse_rational(tail).get_str();
    j["mm_lhs"] = decimal(transference::mm_lhs(est.lambda_hat.mid(), est.lambda.mid(),
                                               static_cast<int>(run.seq.target.n())));
    RunStore(run_dir).put("exponents.json", dump(j));
    std::cout << "lambda " << est.lambda.to_decimal(15) << "\nlambda_hat " << est.lambda_hat.to_decimal(15) << "\n";
    return 0;
  }
};

struct Construct {
  std::string run_dir;
  std::size_t i0 = 0;
  int run() const {
    const auto run = load_run(run_dir);
    const int n = static_cast<int>(run.seq.target.n());
    const auto points = run.seq.points();
    const auto indices = construction::select_indices(points, i0, n);
    const auto fam = construction::build_subspace_family(points, indices);
    const auto ids = construction::verify_family_identities(fam);
    json j = family_json(fam, ids);
    json ratios = json::array();
    for (int k = 1; k <= n - 1; ++k) {
      const auto r = construction::lemma32_check(fam, k);
      ratios.push_back({{"k", k}, {"lhs_sq", r.lhs_sq.get_str()}, {"rhs_sq", r.rhs_sq.get_str()},
                        {"ratio_sq", r.ratio_sq.get_str()}, {"ratio", decimal(r.ratio)}});
    }
    j["height_products"] = ratios;
    try {
      const auto t = construction::theorem31_ratio(run.seq, i0);
      j["product_ratio"] = {{"lhs", to_json(t.lhs)}, {"rhs", to_json(t.rhs)}, {"ratio", to_json(t.ratio)}};
    } catch (const Error& e) {
      if (e.code() != Errc::InsufficientData) throw;
      j["product_ratio"] = nullptr;
    }
    RunStore(run_dir).put("construct_i0_" + std::to_string(i0) + ".json", dump(j));
    std::cout << "identities " << (ids.all_pass() ? "pass" : "FAIL") << " (" << ids.checks.size() << " checks)\n";
    return ids.all_pass() ? 0 : 1;
  }
};

struct Transfer {
  std::string run_dir, alpha, beta, a, b, A = "1", family = "power";
  double sigma = 0, rho = 0;
  std::size_t grid = 64;
  int run() const {
    const auto run = load_run(run_dir);
    const int n = static_cast<int>(run.seq.target.n());
    const mpq_class al = parse_rational(alpha), be = parse_rational(beta), Aq = parse_rational(A);
    json j;
    std::unique_ptr<transference::FunctionTriple> triple;
    if (family == "power") {
      transference::PowerProfile p;
      if (a.empty() != b.empty()) fail(Errc::DomainError, "give both --a and --b or neither");
      if (a.empty()) {
        p = transference::fit_power_profile(run.seq, al, be, Aq);
        j["fitted"] = true;
      } else {
        p = transference::PowerProfile::rational(n, parse_rational(a), parse_rational(b), al, be);
        j["fitted"] = false;
      }
      const auto& [qa, qb, qal, qbe] = *p.exact;
      j["profile"] = {{"n", n}, {"a", qa.get_str()}, {"b", qb.get_str()}, {"alpha", qal.get_str()},
                      {"beta", qbe.get_str()}, {"a_decimal", decimal(qa.get_d())}, {"b_decimal", decimal(qb.get_d())}};
      j["mm_lhs_alpha_beta"] = to_json(transference::mm_lhs(Interval::point(al), Interval::point(be), n));
      triple = std::make_unique<transference::PowerTriple>(p);
    } else if (family == "power-log") {
      if (a.empty() || b.empty()) fail(Errc::DomainError, "the power-log family needs --a and --b");
      triple = std::make_unique<transference::PowerLogTriple>(n, parse_rational(a).get_d(), parse_rational(b).get_d(),
                                                              al.get_d(), be.get_d(), sigma, rho);
      j["profile"] = {{"n", n}, {"a", a}, {"b", b}, {"alpha", alpha}, {"beta", beta},
                      {"sigma", decimal(sigma)}, {"rho", decimal(rho)}};
      j["theta"] = "numeric inversion, relative tolerance 1e-12";
    } else {
      fail(Errc::DomainError, "unknown family '" + family + "'");
    }
    transference::SandwichOptions opts;
    opts.A = Aq;
    opts.grid_points = grid;
    const auto rep = transference::check_sandwich(run.seq, *triple, opts);
    j["sandwich"] = to_json(rep);

    json chains = json::array();
    for (std::size_t i0 = 0; i0 < run.seq.size(); ++i0) {
      if (!Interval::point(Aq).certainly_le(Interval::from_real(run.seq[i0].X))) continue;
      try {
        json c = to_json(transference::lemma41_chain(run.seq, *triple, i0));
        c["i0"] = i0;
        chains.push_back(c);
      } catch (const Error& e) {
        if (e.code() != Errc::InsufficientData && e.code() != Errc::DomainError) throw;
        break;
      }
    }
    j["chain"] = chains;
    RunStore(run_dir).put("transfer.json", dump(j));
    std::cout << "sandwich holds on " << rep.steps_checked << " steps (" << rep.tight << " undecided)\n";
    if (!rep.min_Phi.empty()) std::cout << "min Phi_{n-1} " << rep.min_Phi.back().to_decimal(15) << "\n";
    return 0;
  }
};

struct Extremal {
  std::string run_dir, alpha, beta, eps = "0", C = "0", points_csv;
  int run() const {
    const auto run = load_run(run_dir);
    std::vector<model::IntegerPoint> pts;
    if (points_csv.empty()) {
      pts = run.seq.points();
    } else {
      std::istringstream in(read_text(points_csv));
      pts = minpoints::read_csv_points(in);
    }
    transference::ExtremalParams p;
    p.n = static_cast<int>(run.seq.target.n());
    p.alpha = Interval::point(parse_rational(alpha));
    p.beta = Interval::point(parse_rational(beta));
    p.eps = Interval::point(parse_rational(eps));
    p.C = Interval::point(parse_rational(C));
    const auto rep = transference::verify_extremal_sequence(pts, run.seq, p);
    json j = to_json(rep);
    j["parameters"] = {{"alpha", alpha}, {"beta", beta}, {"eps", eps}, {"C", C}};
    RunStore(run_dir).put("extremal.json", dump(j));
    using transference::Condition;
    using transference::ExtremalRow;
    std::cout << "eps within threshold: " << to_string(rep.eps_within_threshold) << "\n";
    for (auto [name, f] : {std::pair{"(i)", &ExtremalRow::growth}, std::pair{"(ii)", &ExtremalRow::decay},
                           std::pair{"(iii)", &ExtremalRow::independence}, std::pair{"(iv)", &ExtremalRow::record}})
      std::cout << name << " pass " << rep.count(f, Condition::Pass) << " tight " << rep.count(f, Condition::Tight)
                << " fail " << rep.count(f, Condition::Fail) << "\n";
    return 0;
  }
};

std::string frontier_csv(int n, int grid) {
  std::ostringstream os;
  os << "lambda_hat,lambda\n";
  for (const auto& [x, y] : spectra::frontier_table(n, grid))
    os << decimal(static_cast<double>(x)) << ',' << (y ? decimal(static_cast<double>(*y)) : "inf") << "\n";
  return os.str();
}

struct Plot {
  std::string run_dir, what = "envelope", out;
  int n = 2, grid = 101;
  int run() const {
    if (what == "envelope") {
      if (run_dir.empty()) fail(Errc::DomainError, "--what envelope needs --run");
      const auto run = load_run(run_dir);
      Series s{"-log10 L(X)", {}, true};
      for (const auto& e : run.seq.entries) {
        const double x = std::log10(e.X.to_double()), y = -std::log10(e.L.to_double());
        s.points.emplace_back(x, y);
      }
      if (!s.points.empty()) s.points.emplace_back(std::log10(run.seq.exhausted_up_to.get_d()), s.points.back().second);
      const auto text = svg_chart("minimal-point envelope", "log10 X", "-log10 L", {s});
      if (out.empty())
        RunStore(run_dir).put("envelope.svg", text);
      else
        emit(text, out);
      return 0;
    }
    if (what == "frontier") {
      Series s{"n = " + std::to_string(n), {}, false};
      for (const auto& [x, y] : spectra::frontier_table(n, grid))
        if (y && *y <= 10) s.points.emplace_back(static_cast<double>(x), static_cast<double>(*y));
      const auto text = svg_chart("exponent spectrum boundary", "uniform exponent", "ordinary exponent", {s});
      if (out.empty() && !run_dir.empty())
        RunStore(run_dir).put("frontier.svg", text);
      else
        emit(text, out);
      return 0;
    }
    fail(Errc::DomainError, "--what must be envelope or frontier");
  }
};

int report_error(const std::string& code, const std::string& message, int status) {
  std::cerr << json{{"error", code}, {"message", message}}.dump() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal points, subspace heights and transference checks for simultaneous approximation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Enumerate en;
  auto* c_en = app.add_subcommand("enumerate", "enumerate minimal points into a run directory");
  auto* cfg = c_en->add_option("--config", en.config, "target JSON file")->check(CLI::ExistingFile);
  auto* pre = c_en->add_option("--preset", en.preset, "named target")->check(CLI::IsMember(presets::names()));
  cfg->excludes(pre);
  c_en->add_option("--xmax", en.xmax, "norm bound")->required();
  c_en->add_option("--out", en.out, "run directory")->required();
  c_en->add_option("--threads", en.threads, "worker threads")->check(CLI::PositiveNumber);

  Exponents ex;
  auto* c_ex = app.add_subcommand("exponents", "estimate the ordinary and uniform exponents");
  c_ex->add_option("--run", ex.run_dir)->required()->check(CLI::ExistingDirectory);
  c_ex->add_option("--tail", ex.tail, "tail fraction");
  c_ex->add_option("--min-entries", ex.min_entries);

  Construct co;
  auto* c_co = app.add_subcommand("construct", "build the subspace family at one starting index");
  c_co->add_option("--run", co.run_dir)->required()->check(CLI::ExistingDirectory);
  c_co->add_option("--i0", co.i0)->required();

  Transfer tr;
  auto* c_tr = app.add_subcommand("transfer", "sandwich check and Phi_k report for a function triple");
  c_tr->add_option("--run", tr.run_dir)->required()->check(CLI::ExistingDirectory);
  c_tr->add_option("--alpha", tr.alpha)->required();
  c_tr->add_option("--beta", tr.beta)->required();
  c_tr->add_option("--a", tr.a, "upper constant (fitted when absent)");
  c_tr->add_option("--b", tr.b, "lower constant (fitted when absent)");
  c_tr->add_option("--A", tr.A, "domain threshold");
  c_tr->add_option("--grid", tr.grid, "grid points");
  c_tr->add_option("--family", tr.family)->check(CLI::IsMember({"power", "power-log"}));
  c_tr->add_option("--sigma", tr.sigma, "log exponent of phi");
  c_tr->add_option("--rho", tr.rho, "log exponent of psi");

  Extremal xt;
  auto* c_xt = app.add_subcommand("extremal", "check the four conditions on a point sequence");
  c_xt->add_option("--run", xt.run_dir)->required()->check(CLI::ExistingDirectory);
  c_xt->add_option("--alpha", xt.alpha)->required();
  c_xt->add_option("--beta", xt.beta)->required();
  c_xt->add_option("--eps", xt.eps);
  c_xt->add_option("--C", xt.C);
  c_xt->add_option("--points", xt.points_csv, "CSV of points (default: the run's minimal points)")
      ->check(CLI::ExistingFile);

  int fr_n = 2, fr_grid = 101;
  std::string fr_out;
  auto* c_fr = app.add_subcommand("frontier", "CSV of the spectrum boundary");
  c_fr->add_option("--n", fr_n)->required()->check(CLI::Range(1, 1000));
  c_fr->add_option("--grid", fr_grid)->check(CLI::Range(2, 1000000));
  c_fr->add_option("--out", fr_out);

  int ln_n = 2;
  bool ln_table = false;
  std::string ln_tol = "1e-30";
  auto* c_ln = app.add_subcommand("lambda-n", "positive root of x + (n-1)x^2 + ... + (n-1)^{n-1}x^n = 1");
  c_ln->add_option("--n", ln_n)->required()->check(CLI::Range(2, 1000));
  c_ln->add_flag("--table", ln_table, "CSV for 2..n");
  c_ln->add_option("--tol", ln_tol);

  std::size_t fz_dim = 4, fz_count = 1000;
  std::uint64_t fz_seed = 1;
  std::string fz_out;
  auto* c_fz = app.add_subcommand("schmidt-fuzz", "random subspace pairs against the height inequality");
  c_fz->add_option("--dim", fz_dim)->check(CLI::Range(2, 12));
  c_fz->add_option("--count", fz_count);
  c_fz->add_option("--seed", fz_seed);
  c_fz->add_option("--out", fz_out);

  std::string lv_minpoly, lv_interval = "0,2", lv_extra, lv_xmax, lv_out, lv_tail = "1/2";
  std::size_t lv_min_entries = 10;
  unsigned lv_threads = 1;
  auto* c_lv = app.add_subcommand("liouville", "(1, theta, ..., theta^{n-1}, extra) report");
  c_lv->add_option("--minpoly", lv_minpoly, "ascending integer coefficients, comma separated")->required();
  c_lv->add_option("--interval", lv_interval, "isolating interval lo,hi");
  c_lv->add_option("--extra", lv_extra, "decimal literal or JSON real")->required();
  c_lv->add_option("--xmax", lv_xmax)->required();
  c_lv->add_option("--threads", lv_threads)->check(CLI::PositiveNumber);
  c_lv->add_option("--tail", lv_tail, "tail fraction for the exponent estimate");
  c_lv->add_option("--min-entries", lv_min_entries);
  c_lv->add_option("--out", lv_out);

  Plot pl;
  auto* c_pl = app.add_subcommand("plot", "SVG of the envelope staircase or the spectrum boundary");
  c_pl->add_option("--run", pl.run_dir)->check(CLI::ExistingDirectory);
  c_pl->add_option("--what", pl.what)->check(CLI::IsMember({"envelope", "frontier"}));
  c_pl->add_option("--n", pl.n)->check(CLI::Range(1, 1000));
  c_pl->add_option("--grid", pl.grid)->check(CLI::Range(2, 1000000));
  c_pl->add_option("--out", pl.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (c_en->parsed()) {
      if (en.config.empty() && en.preset.empty()) fail(Errc::SchemaError, "give --config or --preset");
      return en.run();
    }
    if (c_ex->parsed()) return ex.run();
    if (c_co->parsed()) return co.run();
    if (c_tr->parsed()) return tr.run();
    if (c_xt->parsed()) return xt.run();
    if (c_fr->parsed()) {
      emit(frontier_csv(fr_n, fr_grid), fr_out);
      return 0;
    }
    if (c_ln->parsed()) {
      const mpq_class tol = parse_rational(ln_tol);
      if (ln_table) {
        std::cout << "n,lambda_n\n";
        for (int k = 2; k <= ln_n; ++k) std::cout << k << ',' << spectra::lambda_n(k, tol).enclosure.to_decimal(15) << "\n";
      } else {
        std::cout << spectra::lambda_n(ln_n, tol).enclosure.to_decimal(15) << "\n";
      }
      return 0;
    }
    if (c_fz->parsed()) {
      emit(dump(to_json(subspaces::schmidt_fuzz(fz_dim, fz_count, fz_seed))), fz_out);
      return 0;
    }
    if (c_lv->parsed()) {
      const auto coeffs = parse_integers(lv_minpoly);
      const auto ends = parse_integers(lv_interval);
      if (ends.size() != 2) fail(Errc::SchemaError, "--interval needs two integers lo,hi");
      minpoints::EnumerationOptions opts;
      opts.threads = lv_threads;
      const auto rep = spectra::liouville_preset(coeffs, mpq_class(ends[0]), mpq_class(ends[1]), parse_extra(lv_extra),
                                                 parse_rational(lv_xmax), opts, parse_rational(lv_tail), lv_min_entries);
      emit(dump(to_json(rep)), lv_out);
      return 0;
    }
    if (c_pl->parsed()) return pl.run();
  } catch (const Error& e) {
    return report_error(std::string(to_string(e.code())), e.what(), 2);
  } catch (const std::exception& e) {
    return report_error("Internal", e.what(), 3);
  }
  return 0;
}
