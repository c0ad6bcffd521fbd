#include "cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"

#include "altdes/divisibility.hpp"
#include "altdes/errors.hpp"
#include "altdes/gamma.hpp"
#include "altdes/oracle.hpp"
#include "altdes/recurrences.hpp"
#include "altdes/shape.hpp"
#include "cli/report.hpp"

namespace altdes::cli {

namespace {

struct Options {
  int brute_max = 11;
  unsigned jobs = 1;
  std::string format = "text";
  std::string out_path;

  int n = 0;
  bool q = false;
  std::string stat;
  std::string target;
  int max_n = 0;
  int max_j = 4;

  OracleConfig oracle() const { return {brute_max, jobs}; }
};

std::string label(std::string_view base, int n) { return std::string(base) + " n=" + std::to_string(n); }

void add_check(Report& r, std::string name, bool ok, const std::string& witness) {
  Result res{std::move(name), ok ? Status::Pass : Status::Fail, std::nullopt, std::nullopt, {}};
  if (!ok) res.witness = witness;
  r.results.push_back(std::move(res));
}

void add_finding(Report& r, std::string name, const Finding& f) {
  add_check(r, std::move(name), f.ok, f.witness);
}

void add_conjecture(Report& r, std::string name, bool ok, const std::string& witness) {
  Result res{std::move(name), ok ? Status::Pass : Status::Finding, std::nullopt, std::nullopt, {}};
  if (!ok) res.witness = witness;
  r.results.push_back(std::move(res));
}

void add_value(Report& r, std::string name, Value v, std::string vars) {
  r.results.push_back({std::move(name), Status::Pass, std::nullopt, std::move(v), std::move(vars)});
}

/// Runs one check; library failures other than LimitExceeded become a fail
/// result carrying the message.
void guarded(Report& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const LimitExceeded&) {
    throw;
  } catch (const Error& e) {
    add_check(r, name, false, e.what());
  }
}

// compute ----------------------------------------------------------------------

void compute_alt(const Options& o, Report& r) {
  if (o.q) {
    add_value(r, "A_" + std::to_string(o.n), quadratic_tq(o.n), "t,q");
  } else {
    add_value(r, "A_" + std::to_string(o.n), five_term(o.n), "t");
  }
}

void compute_simsun(const Options& o, Report& r) {
  add_value(r, "R_" + std::to_string(o.n), simsun_rec(o.n, SimsunMethod::Derivative), "x");
}

void compute_gamma(const Options& o, Report& r) {
  if (!o.q) {
    add_value(r, "a_" + std::to_string(o.n), gamma_rec(o.n), "x");
    return;
  }
  const QGammaVector g = q_gamma_extract(quadratic_tq(o.n), o.n);
  for (std::size_t k = 0; k < g.gammas.size(); ++k) {
    Result res{"gamma_" + std::to_string(o.n) + "," + std::to_string(k), Status::Pass, std::nullopt, g.gammas[k], "q"};
    const bool divisible = g.one_plus_q_orders[k] < 0 || g.one_plus_q_orders[k] >= static_cast<int>(k);
    if (!g.nonnegative[k] || !divisible) {
      res.status = Status::Finding;
      res.witness = g.nonnegative[k] ? "(1+q)-order " + std::to_string(g.one_plus_q_orders[k]) : "negative coefficient";
    }
    r.results.push_back(std::move(res));
  }
}

void compute_two_sided(const Options& o, Report& r) {
  const BiPolyTQ a = brute_two_sided(o.n, o.oracle());
  add_value(r, "A~_" + std::to_string(o.n), a, "s,t");
  const TwoSidedGamma g = two_sided_extract(a, o.n);
  for (const auto& [key, c] : g.entries) {
    Result res{"gamma_" + std::to_string(o.n) + "," + std::to_string(key.first) + "," + std::to_string(key.second),
               c >= 0 ? Status::Pass : Status::Finding, std::nullopt, c, {}};
    if (c < 0) res.witness = "negative coefficient";
    r.results.push_back(std::move(res));
  }
}

// factor -------------------------------------------------------------------------

void factor(const Options& o, Report& r) {
  try {
    const Factorization f = extract_Ehat(o.n);
    add_value(r, "g_n", f.g_n, "q");
    add_value(r, "e_hat", f.e_hat, "q");
    add_check(r, "e_hat_palindromic", f.verdicts.e_hat_palindromic, "E^_n is not palindromic");
    add_check(r, "constant_term_is_euler", f.verdicts.constant_term_is_euler, "constant term differs from E_n");
  } catch (const NotDivisible& e) {
    add_check(r, "g_n divides A_n(1,q)", false, e.what());
  }
}

// verify ---------------------------------------------------------------------------

using VerifyFn = std::function<void(const Options&, int, Report&)>;

struct Target {
  int default_max_n;
  VerifyFn fn;
};

std::string poly_witness(const IntPoly& got, const IntPoly& want) {
  return got.to_string("t") + " != " + want.to_string("t");
}

void verify_thm21(const Options& o, int max_n, Report& r) {
  const auto five = five_term_table(max_n);
  const auto quad = quadratic_tq_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const auto nu = static_cast<std::size_t>(n);
    const IntPoly want = n <= o.brute_max ? brute_alt_eulerian(n, o.oracle()) : quad[nu].at_q_one();
    add_check(r, label("five-term", n), five[nu] == want, poly_witness(five[nu], want));
    if (n <= o.brute_max) {
      const BiPolyTQ bq = brute_qalt(n, o.oracle());
      add_check(r, label("quadratic", n), quad[nu] == bq, quad[nu].to_string() + " != " + bq.to_string());
    }
  }
}

void verify_eq1(const Options&, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    const auto rep = chebikin_check(n);
    add_check(r, label("eq1", n), rep.ok,
              rep.failure ? "k=" + std::to_string(rep.failure->second) : std::string("identity fails"));
  }
}

void verify_thm31(const Options&, int max_n, Report& r) {
  const auto five = five_term_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const ShapeReport s = shape_predicates(five[static_cast<std::size_t>(n)]);
    add_check(r, label("thm3.1", n), s.palindromic_center.has_value() && s.unimodal,
              s.palindromic_center ? "not unimodal" : "not palindromic");
  }
}

void verify_thm32(const Options&, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    guarded(r, label("thm3.2", n), [&] {
      const IntPoly expanded = gamma_expand(five_term(n), n).as_polynomial();
      const IntPoly rec = gamma_rec(n);
      const bool rel = simsun_relation_check(n);
      add_check(r, label("thm3.2", n), expanded == rec && rel,
                expanded != rec ? "gamma vector " + expanded.to_string() + " != " + rec.to_string()
                                : std::string("a_n(x) != R_{n-1}(x+1)"));
    });
  }
}

void verify_cor33(const Options& o, int max_n, Report& r) {
  const auto euler = euler_numbers(max_n);
  for (int n = 1; n <= max_n; n += 2) {
    const Integer v = five_term(n).evaluate(-1);
    add_check(r, label("A_n(-1)", n), v == euler[static_cast<std::size_t>(n)],
              v.get_str() + " != " + euler[static_cast<std::size_t>(n)].get_str());
  }
  for (int len = 2; len + 1 <= max_n && len <= o.brute_max; len += 2) {
    const Integer got = down_up_simsun_count(len, o.oracle());
    Integer want = euler[static_cast<std::size_t>(len + 1)];
    want >>= static_cast<unsigned>(len / 2);
    add_check(r, "down-up simsun length=" + std::to_string(len), got == want, got.get_str() + " != " + want.get_str());
  }
}

void verify_prop34(const Options& o, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    const CdIndexOracle cd = brute_cd_index(n, o.oracle());
    const CdTransform tr = cd_transform(cd.phi);
    add_check(r, label("psi", n), cd_to_ab(cd.phi) == cd.psi, "Phi(a+b, ab+ba) != Psi");
    add_check(r, label("psi-hat", n), cd_to_ab(tr.phi_hat) == cd.psi_hat, "Phi^(a+b, ab+ba) != Psi^");
    const IntPoly five = five_term(n);
    add_check(r, label("alt", n), tr.alt_poly == five, poly_witness(tr.alt_poly, five));
    const IntPoly a = cd_gamma_polynomial(cd.phi);
    const IntPoly rec = gamma_rec(n);
    add_check(r, label("gamma", n), a == rec, a.to_string() + " != " + rec.to_string());
  }
}

void verify_cor35(const Options& o, int max_n, Report& r) {
  const auto deriv = simsun_table(max_n, SimsunMethod::Derivative);
  const auto quad = simsun_table(max_n, SimsunMethod::Quadratic);
  for (int n = 1; n <= max_n; ++n) {
    const auto nu = static_cast<std::size_t>(n);
    add_check(r, label("eq13", n), quad[nu] == deriv[nu], quad[nu].to_string() + " != " + deriv[nu].to_string());
    if (n <= o.brute_max) {
      const IntPoly b = brute_simsun(n, o.oracle());
      add_check(r, label("simsun oracle", n), quad[nu] == b, quad[nu].to_string() + " != " + b.to_string());
    }
  }
}

void verify_thm42(const Options&, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) add_finding(r, label("thm4.2", n), check_thm42(n).finding);
}

void add_parity(const ParityTable& t, std::string_view base, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    std::string witness;
    for (const auto& c : t.cells) {
      if (c.n == n && c.order < c.required && witness.empty()) {
        witness = "j=" + std::to_string(c.j) + ": order " + std::to_string(c.order) + " < " + std::to_string(c.required);
      }
    }
    add_check(r, label(base, n), witness.empty(), witness);
  }
}

void verify_thm45(const Options& o, int max_n, Report& r) {
  add_parity(parity_table_substituted(max_n, o.max_j), "thm4.5", max_n, r);
}

void verify_thm46(const Options& o, int max_n, Report& r) {
  const ParityTable t = parity_table_specialized(max_n, o.max_j);
  add_parity(t, "thm4.6", max_n, r);
  add_check(r, "thm4.6 agrees with substitution", t.sources_agree, "specialized recursion differs from A^_n(q^j,q)");
}

void verify_thm411(const Options& o, int max_n, Report& r) {
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; 2 * m <= n; ++m) {
      add_finding(r, label("thm4.11", n) + " m=" + std::to_string(m), thm411_bijection_check(n, m, o.oracle()));
    }
  }
}

void verify_eq2(const Options&, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) add_check(r, "eq2 order=" + std::to_string(n), egf_check(n), "series differ");
}

void verify_eq_fn0(const Options& o, int max_n, Report& r) {
  const auto quad = quadratic_tq_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    guarded(r, label("eq-fn0", n), [&] {
      const IntPoly fdb = faa_di_bruno_altmaj(n);
      const IntPoly want = n <= o.brute_max ? stat_multiset(n, Statistic::AltMaj, o.oracle()).generating_polynomial()
                                            : quad[static_cast<std::size_t>(n)].at_t_one();
      add_check(r, label("eq-fn0", n), fdb == want, fdb.to_string("q") + " != " + want.to_string("q"));
    });
  }
}

void verify_conj410(const Options& o, int max_n, Report& r) {
  for (int n = 2; n <= max_n; ++n) {
    const Conj410Report rep = altdes::verify_conj410(n, o.oracle());
    add_conjecture(r, label("conj4.10", n), rep.finding.ok, rep.finding.witness);
  }
}

void verify_conj51(const Options&, int max_n, Report& r) {
  const auto five = five_term_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    add_conjecture(r, label("conj5.1", n), shape_predicates(five[static_cast<std::size_t>(n)]).log_concave,
                   "not log-concave");
  }
}

void verify_conj52(const Options&, int max_n, Report& r) {
  const auto quad = quadratic_tq_table(max_n);
  for (int n = 1; n <= max_n; ++n) {
    guarded(r, label("conj5.2", n), [&] {
      const auto& p = quad[static_cast<std::size_t>(n)];
      const QGammaVector g = q_gamma_extract(p, n);
      if (g.reconstruct() != p) {
        add_check(r, label("conj5.2", n), false, "reconstruction differs");
        return;
      }
      add_conjecture(r, label("conj5.2", n), g.verdicts_pass(), "a gamma_k is negative or lacks (1+q)^k");
    });
  }
}

void verify_conj53(const Options& o, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    guarded(r, label("conj5.3", n), [&] {
      const BiPolyTQ a = brute_two_sided(n, o.oracle());
      const TwoSidedGamma g = two_sided_extract(a, n);
      if (g.reconstruct() != a) {
        add_check(r, label("conj5.3", n), false, "reconstruction differs");
        return;
      }
      add_conjecture(r, label("conj5.3", n), g.all_nonnegative(), "negative gamma entry");
    });
  }
}

void verify_equidist(const Options& o, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) add_finding(r, label("equidist", n), equidistribution_check(n, o.oracle()));
}

void verify_double_count(const Options& o, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) add_finding(r, label("double-count", n), double_count_check(n, o.oracle()));
}

void verify_theta(const Options& o, int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) add_finding(r, label("theta", n), theta_identity_check(n, o.oracle()));
}

const std::map<std::string, Target>& targets() {
  static const std::map<std::string, Target> t = {
      {"thm2.1", {10, verify_thm21}},      {"eq1", {10, verify_eq1}},
      {"thm3.1", {30, verify_thm31}},      {"thm3.2", {12, verify_thm32}},
      {"cor3.3", {13, verify_cor33}},      {"prop3.4", {7, verify_prop34}},
      {"cor3.5", {10, verify_cor35}},      {"thm4.2", {16, verify_thm42}},
      {"thm4.5", {14, verify_thm45}},      {"thm4.6", {14, verify_thm46}},
      {"thm4.11", {9, verify_thm411}},     {"eq2", {10, verify_eq2}},
      {"eq-fn0", {20, verify_eq_fn0}},     {"conj4.10", {11, verify_conj410}},
      {"conj5.1", {200, verify_conj51}},   {"conj5.2", {10, verify_conj52}},
      {"conj5.3", {10, verify_conj53}},    {"equidist", {7, verify_equidist}},
      {"double-count", {7, verify_double_count}}, {"theta", {8, verify_theta}},
  };
  return t;
}

// oracle -----------------------------------------------------------------------------

void oracle(const Options& o, Report& r) {
  const Statistic s = parse_statistic(o.stat);
  const StatMultiset ms = stat_multiset(o.n, s, o.oracle());
  add_value(r, std::string(statistic_name(s)), ms.generating_polynomial(), "q");
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "csv") return Format::Csv;
  return Format::Text;
}

}  // namespace

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : targets()) v.push_back(k);
    return v;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Alternating descent polynomials: tables, factorizations and verification reports", "altdes"};
  app.option_defaults()->always_capture_default();
  app.fallthrough();
  app.add_option("--brute-max", o.brute_max, "Largest n for brute-force enumeration")
      ->envname("ALTDES_BRUTE_MAX")
      ->check(CLI::Range(0, 16));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", o.out_path, "Write the report to this file");
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::Range(1U, 256U));
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Compute a polynomial table entry");
  compute->require_subcommand(1);
  auto* c_alt = compute->add_subcommand("alt", "A^_n(t), or A^_n(t,q) with --q");
  auto* c_simsun = compute->add_subcommand("simsun", "R_n(x)");
  auto* c_gamma = compute->add_subcommand("gamma", "a_n(x), or the q-gamma vector with --q");
  auto* c_two = compute->add_subcommand("two-sided", "A~_n(s,t) and its gamma entries");
  for (auto* sub : {c_alt, c_simsun, c_gamma, c_two}) sub->add_option("--n", o.n)->required()->check(CLI::Range(1, 100000));
  c_alt->add_flag("--q", o.q, "Refine by altmaj");
  c_gamma->add_flag("--q", o.q, "q-gamma expansion");

  auto* fac = app.add_subcommand("factor", "A^_n(1,q) = G_n E^_n");
  fac->add_option("--n", o.n)->required()->check(CLI::Range(2, 100000));

  auto* ver = app.add_subcommand("verify", "Check a theorem or conjecture over a range of n");
  ver->add_option("target", o.target)->required()->check(CLI::IsMember(verify_targets()));
  ver->add_option("--max-n", o.max_n, "Largest n checked (default depends on the target)")->check(CLI::Range(1, 100000));
  ver->add_option("--max-j", o.max_j, "Largest j for thm4.5/thm4.6")->check(CLI::Range(0, 64));

  auto* orc = app.add_subcommand("oracle", "Brute-force distribution of a statistic over S_n");
  orc->add_option("--n", o.n)->required()->check(CLI::Range(0, 16));
  orc->add_option("--stat", o.stat)->required()->check(CLI::IsMember({"altmaj", "altdes", "maj", "des3"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report report;
  std::vector<std::string> path;
  for (const auto* sub = app.get_subcommands().front(); sub != nullptr;) {
    path.push_back(sub->get_name());
    const auto subs = sub->get_subcommands();
    sub = subs.empty() ? nullptr : subs.front();
  }
  report.command = path.front();
  for (std::size_t i = 1; i < path.size(); ++i) report.command += " " + path[i];
  if (report.command == "verify") report.command += " " + o.target;

  report.parameters["brute_max"] = std::to_string(o.brute_max);
  report.parameters["jobs"] = std::to_string(o.jobs);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (path.front() == "compute") {
      report.parameters["n"] = std::to_string(o.n);
      if (c_alt->parsed() || c_gamma->parsed()) report.parameters["q"] = o.q ? "true" : "false";
      if (c_alt->parsed()) compute_alt(o, report);
      if (c_simsun->parsed()) compute_simsun(o, report);
      if (c_gamma->parsed()) compute_gamma(o, report);
      if (c_two->parsed()) compute_two_sided(o, report);
    } else if (path.front() == "factor") {
      report.parameters["n"] = std::to_string(o.n);
      factor(o, report);
    } else if (path.front() == "verify") {
      const Target& t = targets().at(o.target);
      const int max_n = o.max_n > 0 ? o.max_n : t.default_max_n;
      report.parameters["max_n"] = std::to_string(max_n);
      if (o.target == "thm4.5" || o.target == "thm4.6") report.parameters["max_j"] = std::to_string(o.max_j);
      t.fn(o, max_n, report);
    } else {
      report.parameters["n"] = std::to_string(o.n);
      report.parameters["stat"] = o.stat;
      oracle(o, report);
    }
  } catch (const LimitExceeded& e) {
    err << "altdes: " << e.what() << " (raise --brute-max or ALTDES_BRUTE_MAX)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "altdes: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "altdes: " << e.what() << "\n";
    return 1;
  }
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  const std::string text = render(report, parse_format(o.format));
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "altdes: cannot write " << o.out_path << "\n";
      return 2;
    }
    file << text;
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace altdes::cli
