#include <clocale>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrhc/channels.hpp"
#include "qrhc/config.hpp"
#include "qrhc/functionals.hpp"
#include "qrhc/json_writer.hpp"
#include "qrhc/mixing.hpp"
#include "qrhc/nicd.hpp"
#include "qrhc/pnorms.hpp"
#include "qrhc/report.hpp"
#include "qrhc/search.hpp"
#include "qrhc/serialize.hpp"
#include "qrhc/verifiers.hpp"

namespace {

using namespace qrhc;

constexpr const char* kSpecVersion = "0.1.0";

std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct CliResult {
  JsonValue::Object params;
  std::vector<VerificationReport> reports;
  JsonValue::Object sections;  // extra named blocks appended after the summary
  std::string plain_text;      // when nonempty (CSV), emitted instead of JSON
};

void write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << content;
}

int emit(const std::string& command, const CliResult& res, const std::string& out_path,
         bool no_timestamp) {
  if (!res.plain_text.empty()) {
    write_output(res.plain_text, out_path);
    return 0;
  }
  int pass = 0;
  int fail = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  JsonValue reports = JsonValue::array();
  for (const auto& r : res.reports) {
    (r.pass ? pass : fail) += 1;
    min_slack = std::min(min_slack, r.slack);
    reports.append(report_to_json(r));
  }
  JsonValue top = JsonValue::object();
  top.set("spec_version", kSpecVersion);
  top.set("command", command);
  if (!no_timestamp) top.set("timestamp", iso_utc_now());
  top.set("params", JsonValue(res.params));
  top.set("reports", std::move(reports));
  JsonValue summary = JsonValue::object();
  summary.set("pass_count", pass);
  summary.set("fail_count", fail);
  summary.set("min_slack", res.reports.empty() ? JsonValue(nullptr) : JsonValue(min_slack));
  top.set("summary", std::move(summary));
  for (const auto& [key, value] : res.sections) top.set(key, value);
  write_output(top.dump(2) + "\n", out_path);
  return fail == 0 ? 0 : 1;
}

// reinterpret a report under a caller-chosen relative tolerance
void apply_tol(VerificationReport& r, double tol_rel) {
  r.tol = tol_rel * std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
  r.pass = r.slack >= -r.tol;
}

double effective_gamma(const std::string& ineq, bool gamma_given, double gamma, const PExponent& p,
                       const PExponent& q) {
  if (gamma_given) return gamma;
  double bound = 1.0;
  if (ineq == "reverse-hc") bound = reverse_hc_gamma_bound(p, q);
  if (ineq == "forward-hc") bound = forward_hc_gamma_bound(p, q);
  if (ineq == "strong-reverse-holder") bound = strong_reverse_holder_gamma_bound(p, q);
  if (!std::isfinite(bound)) return gamma;  // invalid exponents: let the verifier object
  return std::min(1.0, bound);
}

struct VerifyArgs {
  std::string ineq;
  int qubits = 1;
  std::size_t dim = 2;
  int trials = 100;
  double p = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
  double gamma = 0.0;
  bool gamma_given = false;
  double alpha = 2.0;
  double tol_rel = default_tol_rel;
  bool tol_given = false;
  std::uint64_t seed = 0;
};

CliResult run_verify(const VerifyArgs& a) {
  // per-inequality default exponents keep the bare command in-region
  double p_def = 0.5;
  double q_def = 0.25;
  if (a.ineq == "sv") {
    p_def = 1.5;
    q_def = 0.5;
  } else if (a.ineq == "gross" || a.ineq == "plsi") {
    p_def = 1.5;
  } else if (a.ineq == "forward-hc") {
    p_def = 1.5;
    q_def = 3.0;
  } else if (a.ineq == "strong-reverse-holder") {
    p_def = 0.5;
    q_def = 0.5;
  }
  const double p_raw = std::isnan(a.p) ? p_def : a.p;
  const double q_raw = std::isnan(a.q) ? q_def : a.q;
  const PExponent p(p_raw);
  const PExponent q(q_raw);
  const double gamma = effective_gamma(a.ineq, a.gamma_given, a.gamma, p, q);
  const bool channel_based = a.ineq != "reverse-holder" && a.ineq != "reverse-minkowski" &&
                             a.ineq != "variational";
  const std::size_t d = channel_based ? (std::size_t{1} << a.qubits) : a.dim;

  CliResult res;
  res.params = {{"ineq", JsonValue(a.ineq)},
                {"trials", JsonValue(a.trials)},
                {"p", JsonValue(p.as_real())},
                {"q", JsonValue(q.as_real())},
                {"gamma", JsonValue(gamma)},
                {"alpha", JsonValue(a.alpha)},
                {"tol_rel", JsonValue(a.tol_given ? a.tol_rel : default_tol_rel)},
                {"seed", JsonValue(a.seed)}};
  if (channel_based)
    res.params.emplace_back("qubits", JsonValue(a.qubits));
  else
    res.params.emplace_back("dim", JsonValue(d));

  for (int t = 0; t < a.trials; ++t) {
    const std::uint64_t s0 = a.seed + 7919ULL * static_cast<std::uint64_t>(t);
    VerificationReport r;
    if (a.ineq == "reverse-holder") {
      const auto f = random_psd(d, s0 + 1, PositivityClass::PositiveSemiDefinite);
      const auto g = random_psd(d, s0 + 2, PositivityClass::PositiveDefinite);
      r = verify_reverse_holder(f, g, p);
    } else if (a.ineq == "reverse-minkowski") {
      const auto cls = p.as_real() < 0.0 || p.is_zero_limit()
                           ? PositivityClass::PositiveDefinite
                           : PositivityClass::PositiveSemiDefinite;
      r = verify_reverse_minkowski(random_psd(d, s0 + 1, cls), random_psd(d, s0 + 2, cls), p);
    } else if (a.ineq == "variational") {
      const auto f = random_psd(d, s0 + 1, PositivityClass::PositiveDefinite);
      r = verify_variational(f, p, 200, s0 + 2);
    } else if (a.ineq == "expansivity") {
      const auto t_chan = random_pauli_mixture(a.qubits, s0 + 1);
      const auto f = random_psd(d, s0 + 2, PositivityClass::PositiveDefinite);
      r = verify_expansivity(t_chan, f, p);
    } else if (a.ineq == "sv") {
      const auto l = LindbladGenerator::depolarizing_site_sum(a.qubits);
      const auto g = random_psd(d, s0 + 1, PositivityClass::PositiveDefinite);
      r = verify_stroock_varopoulos(l, g, p_raw, q_raw);
    } else if (a.ineq == "gross") {
      const auto l = LindbladGenerator::depolarizing_site_sum(a.qubits);
      const auto f = random_psd(d, s0 + 1, PositivityClass::PositiveDefinite);
      r = verify_gross(l, f, p_raw);
    } else if (a.ineq == "plsi") {
      const auto l = LindbladGenerator::depolarizing_site_sum(a.qubits);
      const auto f = random_psd(d, s0 + 1, PositivityClass::PositiveDefinite);
      r = verify_plsi(l, f, p_raw, a.alpha);
    } else if (a.ineq == "reverse-hc") {
      const DepolarizingFamily fam(a.qubits, gamma);
      const auto f = random_psd(d, s0 + 1, PositivityClass::PositiveDefinite);
      r = verify_reverse_hc(fam, f, p, q);
    } else if (a.ineq == "forward-hc") {
      const DepolarizingFamily fam(a.qubits, gamma);
      Rng rng(s0 + 1);
      r = verify_forward_hc(fam, random_hermitian(d, rng), p, q);
    } else if (a.ineq == "strong-reverse-holder") {
      const DepolarizingFamily fam(a.qubits, gamma);
      const auto f = random_psd(d, s0 + 1, PositivityClass::PositiveDefinite);
      const auto g = random_psd(d, s0 + 2, PositivityClass::PositiveDefinite);
      r = verify_strong_reverse_holder(fam, f, g, p, q);
    } else {
      throw std::invalid_argument("unknown inequality id '" + a.ineq + "'");
    }
    if (a.tol_given) apply_tol(r, a.tol_rel);
    r.params.emplace_back("trial", JsonValue(t));
    res.reports.push_back(std::move(r));
  }
  return res;
}

struct LsiArgs {
  int qubits = 1;
  int restarts = 20;
  int evals = 600;
  std::uint64_t seed = 0;
};

CliResult run_lsi(const LsiArgs& a) {
  const auto l = LindbladGenerator::depolarizing_site_sum(a.qubits);
  const Lsi2Estimate est = estimate_lsi2_constant(l, a.restarts, a.seed, a.evals);
  CliResult res;
  res.params = {{"qubits", JsonValue(a.qubits)},
                {"restarts", JsonValue(a.restarts)},
                {"evals_per_restart", JsonValue(a.evals)},
                {"seed", JsonValue(a.seed)}};
  // the ascent gives a lower bound; the site-sum family has constant 2, so
  // any estimate above it signals a numerics bug
  JsonValue::Object params{{"qubits", JsonValue(a.qubits)},
                           {"alpha_lower", JsonValue(est.alpha_lower)},
                           {"ent_at_witness", JsonValue(est.ent)},
                           {"dirichlet_at_witness", JsonValue(est.dirichlet)}};
  res.reports.push_back(
      make_report("lsi2-lower-bound", std::move(params), est.alpha_lower, 2.0,
                  2.0 - est.alpha_lower));
  JsonValue witness = JsonValue::array();
  for (double v : est.witness_eigenvalues) witness.append(JsonValue(v));
  res.sections.emplace_back("witness_eigenvalues", std::move(witness));
  return res;
}

struct DerivativeArgs {
  int qubits = 1;
  int trials = 20;
  double h = 1e-4;
  double rel_tol = 1e-5;
  std::uint64_t seed = 0;
};

CliResult run_derivative(const DerivativeArgs& a) {
  const auto l = LindbladGenerator::depolarizing_site_sum(a.qubits);
  const std::size_t d = std::size_t{1} << a.qubits;
  // time profile of the first proof leg: t(p) = (alpha/4) ln(1/(1-p)), alpha 2
  const auto t_of_p = [](double p) { return 0.5 * std::log(1.0 / (1.0 - p)); };
  const auto dt_dp = [](double p) { return 0.5 / (1.0 - p); };
  CliResult res;
  res.params = {{"qubits", JsonValue(a.qubits)},
                {"trials", JsonValue(a.trials)},
                {"h", JsonValue(a.h)},
                {"rel_tol", JsonValue(a.rel_tol)},
                {"seed", JsonValue(a.seed)}};
  for (int t = 0; t < a.trials; ++t) {
    const std::uint64_t s0 = a.seed + 7919ULL * static_cast<std::uint64_t>(t);
    Rng rng(s0);
    const auto f = random_psd(d, s0 + 1, PositivityClass::PositiveDefinite);
    const double p = rng.uniform(0.2, 0.8);
    const double closed = norm_derivative(l, f, p, t_of_p, dt_dp);
    const auto log_norm = [&](double pp) {
      return std::log(pnorm(l.semigroup(t_of_p(pp), f), PExponent(pp)));
    };
    const double fd = (log_norm(p + a.h) - log_norm(p - a.h)) / (2.0 * a.h);
    const double scale = std::max({1.0, std::abs(closed), std::abs(fd)});
    JsonValue::Object params{{"trial", JsonValue(t)}, {"p", JsonValue(p)}, {"h", JsonValue(a.h)}};
    res.reports.push_back(make_report("norm-derivative-vs-fd", std::move(params), closed, fd,
                                      a.rel_tol * scale - std::abs(closed - fd)));
  }
  return res;
}

struct MixArgs {
  int qubits = 2;
  double sigma = 0.5;
  double alpha = 1.0;
  double gamma = 0.5;
  int trials = 50;
  std::uint64_t seed = 0;
};

CliResult run_mix(const MixArgs& a) {
  const std::size_t d = std::size_t{1} << a.qubits;
  if (!(a.sigma > 0.0 && a.sigma <= 1.0))
    throw std::invalid_argument("sigma must lie in (0, 1]");
  const std::size_t rank = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(a.sigma * static_cast<double>(d))), 1, d);
  CliResult res;
  res.params = {{"qubits", JsonValue(a.qubits)},   {"sigma", JsonValue(a.sigma)},
                {"rank", JsonValue(rank)},         {"alpha", JsonValue(a.alpha)},
                {"gamma", JsonValue(a.gamma)},     {"trials", JsonValue(a.trials)},
                {"seed", JsonValue(a.seed)}};
  for (int t = 0; t < a.trials; ++t) {
    const std::uint64_t s0 = a.seed + 7919ULL * static_cast<std::uint64_t>(t);
    Rng rng(s0);
    const auto projector = random_projector(a.qubits, rank, s0 + 1);
    const double tau_target = rng.uniform(0.05, 0.95);
    const auto m = random_measurement(a.qubits, tau_target, s0 + 2);
    const SubspaceInstance inst(a.qubits, projector, m, a.gamma);
    const double lhs = mixing_lhs(inst);
    const MixingBound bound = mixing_bound_theorem(inst.s, inst.t, a.gamma);
    JsonValue::Object params{{"trial", JsonValue(t)},
                             {"s", JsonValue(inst.s)},
                             {"t", JsonValue(inst.t)},
                             {"gamma", JsonValue(a.gamma)}};
    if (bound.has_exponents) {
      params.emplace_back("p", JsonValue(bound.p));
      params.emplace_back("q", JsonValue(bound.q));
    }
    res.reports.push_back(
        make_report("subspace-mixing", std::move(params), lhs, bound.value, lhs - bound.value));
  }
  // closed-form consistency at the flag parameters: the corollary is the
  // theorem evaluated at s = sqrt(-2 ln sigma), t = s sqrt(alpha)
  const double s = std::sqrt(-2.0 * std::log(a.sigma));
  const double t = s * std::sqrt(a.alpha);
  const double coro = mixing_bound_corollary(a.sigma, a.alpha, a.gamma);
  const double theo = mixing_bound_theorem(s, t, a.gamma).value;
  JsonValue::Object cparams{{"sigma", JsonValue(a.sigma)},
                            {"alpha", JsonValue(a.alpha)},
                            {"gamma", JsonValue(a.gamma)},
                            {"s", JsonValue(s)},
                            {"t", JsonValue(t)}};
  res.reports.push_back(make_report("mixing-corollary-consistency", std::move(cparams), coro, theo,
                                    1e-12 * std::max(1.0, theo) - std::abs(coro - theo)));
  return res;
}

struct NicdArgs {
  std::string basis = "product";
  std::string measurement = "majority";
  int qubits = 2;
  std::uint64_t k = 16;
  double gamma = 0.5;
  double c = 1.0;
  bool csv = false;
  std::uint64_t seed = 0;
};

CliResult run_nicd(const NicdArgs& a, const std::string& out_path) {
  BasisFamily bf = BasisFamily::Product;
  if (a.basis == "ghz")
    bf = BasisFamily::Ghz;
  else if (a.basis == "haar")
    bf = BasisFamily::Haar;
  else if (a.basis != "product")
    throw std::invalid_argument("unknown basis '" + a.basis + "'");
  EffectFamily ef = EffectFamily::MajorityDiagonal;
  if (a.measurement == "half-projector")
    ef = EffectFamily::HalfProjector;
  else if (a.measurement == "random-balanced")
    ef = EffectFamily::RandomBalanced;
  else if (a.measurement != "majority")
    throw std::invalid_argument("unknown measurement '" + a.measurement + "'");

  const SweepTable table = entangled_basis_sweep(a.qubits, a.k, a.gamma, bf, ef, a.seed, a.c);
  CliResult res;
  const bool want_csv = a.csv || (out_path.size() > 4 && out_path.ends_with(".csv"));
  if (want_csv) {
    res.plain_text = sweep_table_to_csv(table);
    return res;
  }
  res.params = {{"basis", JsonValue(a.basis)},
                {"measurement", JsonValue(a.measurement)},
                {"qubits", JsonValue(a.qubits)},
                {"k", JsonValue(a.k)},
                {"gamma", JsonValue(a.gamma)},
                {"c", JsonValue(a.c)},
                {"seed", JsonValue(a.seed)}};
  res.sections.emplace_back("table", sweep_table_to_json(table));
  return res;
}

struct SearchArgs {
  std::string ineq = "reverse-hc";
  int qubits = 1;
  double p = 0.5;
  double q = 0.25;
  std::string gamma_grid = "0:1:11";
  std::size_t budget = 2000;
  std::uint64_t seed = 0;
};

std::vector<double> parse_gamma_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("gamma grid must be a:b:steps");
  std::size_t pos = 0;
  const double a = std::stod(text.substr(0, first), &pos);
  const double b = std::stod(text.substr(first + 1, second - first - 1), &pos);
  const long steps = std::stol(text.substr(second + 1), &pos);
  if (steps < 1) throw std::invalid_argument("gamma grid needs at least one point");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.push_back(a);
    return grid;
  }
  for (long i = 0; i < steps; ++i)
    grid.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(steps - 1));
  return grid;
}

CliResult run_search(const SearchArgs& a) {
  SearchSpec base;
  base.inequality_id = a.ineq;
  base.n_qubits = a.qubits;
  base.p = PExponent(a.p);
  base.q = PExponent(a.q);
  const std::vector<double> grid = parse_gamma_grid(a.gamma_grid);
  CliResult res;
  res.params = {{"ineq", JsonValue(a.ineq)},   {"qubits", JsonValue(a.qubits)},
                {"p", JsonValue(a.p)},         {"q", JsonValue(a.q)},
                {"gamma_grid", JsonValue(a.gamma_grid)},
                {"budget", JsonValue(a.budget)}, {"seed", JsonValue(a.seed)}};
  JsonValue profile = JsonValue::array();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SearchSpec point = base;
    point.gamma = grid[i];
    const SearchOutcome out = minimize_slack(point, a.budget, a.seed + 101 * i);
    JsonValue row = JsonValue::object();
    row.set("gamma", point.gamma);
    row.set("slack", out.slack);
    row.set("inside_region", out.inside_region);
    profile.append(std::move(row));
    JsonValue::Object params{{"gamma", JsonValue(point.gamma)},
                             {"inside_region", JsonValue(out.inside_region)},
                             {"evaluations", JsonValue(out.evaluations)},
                             {"min_slack_found", JsonValue(out.slack)}};
    // inside the region the minimum must be nonnegative; outside, finding a
    // violation is the expected outcome, so the point always passes
    JsonValue witness =
        out.inside_region ? JsonValue(nullptr) : operator_to_json(out.witness);
    res.reports.push_back(make_report("search-min-slack", std::move(params), out.slack, 0.0,
                                      out.inside_region ? out.slack : 0.0, default_tol_rel,
                                      std::move(witness)));
  }
  res.sections.emplace_back("profile", std::move(profile));
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  if (const char* cap = std::getenv("QRHC_MAX_DIM")) {
    try {
      const unsigned long v = std::stoul(cap);
      if (v >= 2) set_max_dim(v);
    } catch (const std::exception&) {
      std::cerr << "ignoring unparsable QRHC_MAX_DIM='" << cap << "'\n";
    }
  }

  CLI::App app{"noise-operator inequality verification and counterexample search"};
  app.require_subcommand(1);
  // long-form help only: the derivative subcommand owns --h for its step size
  app.set_help_flag("--help", "print help");
  std::string out_path;
  bool no_timestamp = false;
  app.add_option("--out", out_path, "write output to this path instead of stdout");
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp for byte-stable output");
  // the same two flags are accepted after the subcommand name as well
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write output to this path instead of stdout");
    sub->add_flag("--no-timestamp", no_timestamp, "omit the timestamp for byte-stable output");
  };

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "randomized verification campaign");
  verify->add_option("--ineq", va.ineq, "inequality id")
      ->required()
      ->check(CLI::IsMember({"reverse-holder", "reverse-minkowski", "variational", "expansivity",
                             "sv", "gross", "plsi", "reverse-hc", "forward-hc",
                             "strong-reverse-holder"}));
  verify->add_option("--qubits", va.qubits, "qubit count for channel-based inequalities")
      ->check(CLI::Range(1, 10));
  verify->add_option("--dim", va.dim, "dimension for channel-free inequalities")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  verify->add_option("--trials", va.trials, "instances to verify")->check(CLI::Range(1, 1000000));
  verify->add_option("--p", va.p, "first exponent (0 means the p->0 limit)");
  verify->add_option("--q", va.q, "second exponent");
  verify->add_option("--gamma", va.gamma, "noise parameter; defaults to the threshold")
      ->each([&va](const std::string&) { va.gamma_given = true; });
  verify->add_option("--alpha", va.alpha, "log-Sobolev constant for plsi");
  verify->add_option("--tol", va.tol_rel, "relative pass tolerance")
      ->each([&va](const std::string&) { va.tol_given = true; });
  verify->add_option("--seed", va.seed, "RNG seed");
  add_common(verify);

  LsiArgs la;
  CLI::App* lsi = app.add_subcommand("lsi", "2-log-Sobolev constant lower bound");
  lsi->add_option("--qubits", la.qubits)->check(CLI::Range(1, 6));
  lsi->add_option("--restarts", la.restarts)->check(CLI::Range(1, 10000));
  lsi->add_option("--evals", la.evals, "objective evaluations per restart")
      ->check(CLI::Range(10, 1000000));
  lsi->add_option("--seed", la.seed, "RNG seed");
  add_common(lsi);

  DerivativeArgs da;
  CLI::App* derivative =
      app.add_subcommand("derivative", "norm derivative closed form vs finite differences");
  derivative->set_help_flag("--help", "print help");
  derivative->add_option("--qubits", da.qubits)->check(CLI::Range(1, 6));
  derivative->add_option("--trials", da.trials)->check(CLI::Range(1, 100000));
  derivative->add_option("--h", da.h, "finite-difference step")
      ->check(CLI::Range(1e-8, 1e-2));
  derivative->add_option("--rel-tol", da.rel_tol, "relative agreement tolerance");
  derivative->add_option("--seed", da.seed, "RNG seed");
  add_common(derivative);

  MixArgs ma;
  CLI::App* mix = app.add_subcommand("mix", "subspace mixing bounds on random instances");
  mix->add_option("--qubits", ma.qubits)->check(CLI::Range(1, 8));
  mix->add_option("--sigma", ma.sigma, "subspace fraction target");
  mix->add_option("--alpha", ma.alpha, "measurement decay exponent for the corollary");
  mix->add_option("--gamma", ma.gamma)->check(CLI::Range(0.0, 1.0));
  mix->add_option("--trials", ma.trials)->check(CLI::Range(1, 100000));
  mix->add_option("--seed", ma.seed, "RNG seed");
  add_common(mix);

  NicdArgs na;
  CLI::App* nicd = app.add_subcommand("nicd", "correlation game sweep over player counts");
  nicd->add_option("--basis", na.basis, "shared basis family")
      ->check(CLI::IsMember({"product", "ghz", "haar"}));
  nicd->add_option("--measurement", na.measurement, "shared balanced measurement")
      ->check(CLI::IsMember({"majority", "half-projector", "random-balanced"}));
  nicd->add_option("--qubits", na.qubits)->check(CLI::Range(1, 10));
  nicd->add_option("--k", na.k, "largest player count")->check(CLI::Range(1, 1000000000));
  nicd->add_option("--gamma", na.gamma)->check(CLI::Range(0.0, 1.0));
  nicd->add_option("--c", na.c, "envelope constant");
  nicd->add_flag("--csv", na.csv, "emit CSV to stdout");
  nicd->add_option("--seed", na.seed, "RNG seed");
  add_common(nicd);

  SearchArgs sa;
  CLI::App* search = app.add_subcommand("search", "sharpness profile over a gamma grid");
  search->add_option("--ineq", sa.ineq, "inequality id")
      ->check(CLI::IsMember({"reverse-hc", "forward-hc"}));
  search->add_option("--qubits", sa.qubits)->check(CLI::Range(1, 6));
  search->add_option("--p", sa.p, "first exponent");
  search->add_option("--q", sa.q, "second exponent");
  search->add_option("--gamma-grid", sa.gamma_grid, "grid as a:b:steps");
  search->add_option("--budget", sa.budget, "evaluations per grid point")
      ->check(CLI::Range(std::size_t{16}, std::size_t{100000000}));
  search->add_option("--seed", sa.seed, "RNG seed");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) return emit("verify", run_verify(va), out_path, no_timestamp);
    if (app.got_subcommand(lsi)) return emit("lsi", run_lsi(la), out_path, no_timestamp);
    if (app.got_subcommand(derivative))
      return emit("derivative", run_derivative(da), out_path, no_timestamp);
    if (app.got_subcommand(mix)) return emit("mix", run_mix(ma), out_path, no_timestamp);
    if (app.got_subcommand(nicd))
      return emit("nicd", run_nicd(na, out_path), out_path, no_timestamp);
    if (app.got_subcommand(search)) return emit("search", run_search(sa), out_path, no_timestamp);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
