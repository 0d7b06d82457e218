#include "binharm/cli.hpp"

#include <exception>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "binharm/combinatorics.hpp"
#include "binharm/errors.hpp"
#include "binharm/identities.hpp"
#include "binharm/padic.hpp"
#include "binharm/report.hpp"
#include "binharm/sweep.hpp"

namespace binharm::cli {

namespace {

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

std::pair<Rational, Rational> parse_pair(const std::string& text) {
  const auto values = parse_rational_list(text);
  if (values.size() != 2) throw ParseFailure("expected 'c1,c2', got '" + text + "'");
  return {values[0], values[1]};
}

struct Globals {
  std::string format = "json";
  std::uint32_t prec = 3;
  std::uint64_t max_table = kDefaultGammaTableCap;
  int threads = 0;
  bool serial = false;

  Execution exec() const { return serial ? Execution::serial : Execution::parallel; }
};

struct ThmArgs {
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string c1 = "0";
  std::string c2 = "0";
};

struct SweepArgs {
  std::string kind;
  std::int64_t min_l = 1, max_l = 0;
  std::int64_t min_m = 1, max_m = 0;
  std::int64_t min_n = 1, max_n = 0;
  std::vector<std::string> coefficients;
  bool oracle = false;
  std::size_t points = 25;
  std::uint64_t seed = 20240601;
  std::int64_t d = 0, r = 0;
  std::uint32_t pmin = 3, pmax = 0;
  std::vector<std::uint32_t> primes;
  bool override_hypothesis = false;
};

Json error_row(const std::string& label, const std::string& message) {
  return Json{{"case", label}, {"error", message}, {"pass", false}};
}

Range resolve(std::int64_t lo, std::int64_t hi, std::int64_t fallback_hi, const char* name) {
  const Range range{lo, hi > 0 ? hi : fallback_hi};
  if (range.empty()) throw InvalidShape(std::string("empty range for ") + name + " (set --max-" + name + ")");
  return range;
}

std::vector<std::pair<Rational, Rational>> sweep_coefficients(const SweepArgs& a) {
  std::vector<std::pair<Rational, Rational>> out;
  if (a.coefficients.empty()) {
    out = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(2), Rational(-3) / Rational(2)}};
  }
  for (const auto& text : a.coefficients) out.push_back(parse_pair(text));
  return out;
}

CaseList sweep_cases(const SweepArgs& a, bool thm2_family) {
  if (a.kind == "chu") return chu_cases(resolve(a.min_n, a.max_n, 0, "n"));
  if (!thm2_family) {
    const Range m = resolve(a.min_m, a.max_m, 0, "m");
    return thm1_cases(m, resolve(a.min_n, a.max_n, m.hi, "n"));
  }
  const Range l = resolve(a.min_l, a.max_l, 0, "l");
  const auto coefficients = sweep_coefficients(a);
  return thm2_cases(l, resolve(a.min_m, a.max_m, l.hi, "m"), resolve(a.min_n, a.max_n, l.hi, "n"), coefficients);
}

ReportSet run_sweep(const SweepArgs& a, const Globals& g) {
  ReportSet set;
  set.kind = a.kind;
  if (a.kind == "supercongruence") {
    std::vector<std::uint32_t> primes = a.primes;
    if (primes.empty()) {
      if (a.pmax == 0) throw InvalidShape("supercongruence sweep needs --pmax or --primes");
      primes = odd_primes_in(a.pmin, a.pmax);
    }
    supercongruence_parameters(a.d, a.r);  // validates (d, r)
    const SuperCongruenceSweep sweep = run_supercongruence_sweep(
        a.d, a.r, primes, {.override_hypothesis = a.override_hypothesis, .exec = g.exec(), .table_cap = g.max_table});
    for (const auto& c : sweep.cases) {
      set.rows.push_back(c.outcome.ok() ? to_json(*c.outcome.value)
                                        : error_row("p=" + std::to_string(c.p), c.outcome.error));
    }
    set.skipped = sweep.skipped;
    return set;
  }

  const bool pfd = a.kind == "pfd1" || a.kind == "pfd2";
  const bool thm2_family = a.kind == "thm2" || a.kind == "pfd2";
  if (!pfd && a.kind != "chu" && a.kind != "thm1" && a.kind != "thm2") {
    throw InvalidShape("unknown sweep kind '" + a.kind + "'");
  }
  const CaseList list = sweep_cases(a, thm2_family);
  set.skipped = list.skipped;
  if (pfd) {
    const auto outcomes = run_pfd_sweep(list.cases, g.exec(), a.points, a.seed);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      set.rows.push_back(outcomes[i].ok() ? to_json(*outcomes[i].value)
                                          : error_row(describe(list.cases[i]), outcomes[i].error));
    }
  } else {
    const auto outcomes = run_identity_sweep(list.cases, g.exec(), a.oracle);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      set.rows.push_back(outcomes[i].ok() ? to_json(*outcomes[i].value)
                                          : error_row(describe(list.cases[i]), outcomes[i].error));
    }
  }
  return set;
}

ReportSet single(std::string kind, Json row) {
  ReportSet set;
  set.kind = std::move(kind);
  set.single = true;
  set.rows.push_back(std::move(row));
  return set;
}

void add_thm_options(CLI::App* cmd, ThmArgs& a, bool with_l, bool with_c) {
  if (with_l) cmd->add_option("--l", a.l, "l (thm2)")->required();
  cmd->add_option("--m", a.m, "m")->required();
  cmd->add_option("--n", a.n, "n")->required();
  if (with_c) {
    cmd->add_option("--c1", a.c1, "rational c1")->required();
    cmd->add_option("--c2", a.c2, "rational c2")->required();
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of binomial coefficient / harmonic sum identities and p-adic supercongruences",
               "binharm"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--prec", g.prec, "p-adic precision k (residues mod p^k)")->check(CLI::PositiveNumber);
  app.add_option("--max-table", g.max_table, "largest gamma table p^k allowed");
  app.add_option("--threads", g.threads, "OpenMP thread count");
  app.add_flag("--serial", g.serial, "use the single-threaded reference path");

  unsigned h_order = 1;
  std::uint64_t h_n = 0;
  auto* harm = app.add_subcommand("harmonic", "generalized harmonic sum H_n^(i)");
  harm->add_option("--i", h_order, "order i")->required();
  harm->add_option("--n", h_n, "upper index n")->required();

  ThmArgs id_args;
  bool id_oracle = false;
  auto* ident = app.add_subcommand("identity", "evaluate one identity exactly");
  ident->require_subcommand(1);
  ident->add_flag("--oracle", id_oracle, "also check the Laurent-oracle limit");
  auto* id_chu = ident->add_subcommand("chu", "Chu's identity (sum equals 0)");
  id_chu->add_option("--n", id_args.n, "n")->required();
  auto* id_thm1 = ident->add_subcommand("thm1", "sum equals (-1)^(m+n)");
  add_thm_options(id_thm1, id_args, false, false);
  auto* id_thm2 = ident->add_subcommand("thm2", "weighted sum equals 0");
  add_thm_options(id_thm2, id_args, true, true);

  ThmArgs pfd_args;
  std::size_t pfd_points = 25;
  std::uint64_t pfd_seed = 20240601;
  auto* pfd = app.add_subcommand("pfd", "closed-form partial fractions vs. Laurent oracle");
  pfd->require_subcommand(1);
  pfd->add_option("--points", pfd_points, "random recombination points");
  pfd->add_option("--seed", pfd_seed, "seed for the recombination points");
  auto* pfd_thm1 = pfd->add_subcommand("thm1");
  add_thm_options(pfd_thm1, pfd_args, false, false);
  auto* pfd_thm2 = pfd->add_subcommand("thm2");
  add_thm_options(pfd_thm2, pfd_args, true, true);

  std::string gamma_x;
  std::uint32_t gamma_p = 0;
  auto* padic = app.add_subcommand("padic", "p-adic functions");
  padic->require_subcommand(1);
  auto* padic_gamma = padic->add_subcommand("gamma", "Morita's Gamma_p(x) mod p^k");
  padic_gamma->add_option("--x", gamma_x, "p-integral rational")->required();
  padic_gamma->add_option("--p", gamma_p, "odd prime")->required();

  std::string g_params;
  std::uint32_t g_p = 0;
  bool g_check = false;
  auto* gfun = app.add_subcommand("gfunction", "the p-adic G function mod p^k");
  gfun->add_option("--params", g_params, "comma separated m_i/d_i in (0,1)")->required();
  gfun->add_option("--p", g_p, "odd prime")->required();
  gfun->add_flag("--check", g_check, "compare with the table-free reference evaluation");

  std::string hyp_upper, hyp_lower, hyp_z = "1";
  std::uint64_t hyp_trunc = 0;
  std::optional<std::uint32_t> hyp_p;
  auto* hyp = app.add_subcommand("hyp", "truncated generalized hypergeometric series");
  hyp->add_option("--upper", hyp_upper, "comma separated a_i")->required();
  hyp->add_option("--lower", hyp_lower, "comma separated b_j");
  hyp->add_option("--z", hyp_z, "argument");
  hyp->add_option("--trunc", hyp_trunc, "truncation index")->required();
  hyp->add_option("--p", hyp_p, "also reduce mod p^k, two ways");

  std::int64_t sc_d = 0, sc_r = 0;
  std::uint32_t sc_p = 0;
  bool sc_override = false;
  auto* sc = app.add_subcommand("supercongruence", "4G vs. truncated 4F3 + s(p) p mod p^3");
  sc->add_option("--d", sc_d, "d")->required();
  sc->add_option("--r", sc_r, "r")->required();
  sc->add_option("--p", sc_p, "odd prime")->required();
  sc->add_flag("--override", sc_override, "skip the congruence hypotheses on p");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "run a family of checks");
  sweep->add_option("--kind", sw.kind, "chu | thm1 | thm2 | pfd1 | pfd2 | supercongruence")
      ->required()
      ->check(CLI::IsMember({"chu", "thm1", "thm2", "pfd1", "pfd2", "supercongruence"}));
  sweep->add_option("--min-l", sw.min_l);
  sweep->add_option("--max-l", sw.max_l);
  sweep->add_option("--min-m", sw.min_m);
  sweep->add_option("--max-m", sw.max_m);
  sweep->add_option("--min-n", sw.min_n);
  sweep->add_option("--max-n", sw.max_n);
  sweep->add_option("--c", sw.coefficients, "coefficient pair 'c1,c2' (repeatable)");
  sweep->add_flag("--oracle", sw.oracle, "add the Laurent-oracle limit to identity sweeps");
  sweep->add_option("--points", sw.points, "recombination points per pfd case");
  sweep->add_option("--seed", sw.seed);
  sweep->add_option("--d", sw.d);
  sweep->add_option("--r", sw.r);
  sweep->add_option("--pmin", sw.pmin);
  sweep->add_option("--pmax", sw.pmax);
  sweep->add_option("--primes", sw.primes, "explicit prime list");
  sweep->add_flag("--override", sw.override_hypothesis, "include primes failing the hypotheses");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (g.threads > 0) set_threads(g.threads);
    const Format format = parse_format(g.format);
    ReportSet result;

    if (harm->parsed()) {
      result = single("harmonic", Json{{"order", h_order},
                                       {"n", h_n},
                                       {"value", to_json(harmonic(h_order, h_n))},
                                       {"pass", true}});
    } else if (ident->parsed()) {
      IdentityParams params;
      if (id_chu->parsed()) params = IdentityParams::chu(id_args.n);
      if (id_thm1->parsed()) params = IdentityParams::thm1(id_args.m, id_args.n);
      if (id_thm2->parsed()) {
        params = IdentityParams::thm2(id_args.l, id_args.m, id_args.n, Rational::parse(id_args.c1),
                                      Rational::parse(id_args.c2));
      }
      result = single(to_string(params.kind), to_json(limit_identity_check(params, id_oracle)));
    } else if (pfd->parsed()) {
      const IdentityParams params =
          pfd_thm1->parsed() ? IdentityParams::thm1(pfd_args.m, pfd_args.n)
                             : IdentityParams::thm2(pfd_args.l, pfd_args.m, pfd_args.n,
                                                    Rational::parse(pfd_args.c1), Rational::parse(pfd_args.c2));
      result = single("pfd", to_json(check_pfd(params, pfd_points, pfd_seed)));
    } else if (padic->parsed()) {
      const Rational x = Rational::parse(gamma_x);
      result = single("gamma", Json{{"x", to_json(x)},
                                    {"p", gamma_p},
                                    {"k", g.prec},
                                    {"value", to_json(gamma_rational(x, gamma_p, g.prec, g.max_table))},
                                    {"pass", true}});
    } else if (gfun->parsed()) {
      const GParams params{parse_rational_list(g_params), g_p, g.prec};
      const Residue value = g_function(params, g.exec(), g.max_table);
      Json row{{"p", g_p}, {"k", g.prec}};
      Json entries = Json::array();
      for (const auto& a : params.entries) entries.push_back(to_json(a));
      row["params"] = std::move(entries);
      row["value"] = to_json(value);
      bool pass = true;
      if (g_check) {
        const Residue reference = g_function_reference(params);
        row["reference"] = to_json(reference);
        pass = reference == value;
      }
      row["pass"] = pass;
      result = single("gfunction", std::move(row));
    } else if (hyp->parsed()) {
      const HypSeriesSpec spec{parse_rational_list(hyp_upper), parse_rational_list(hyp_lower),
                               Rational::parse(hyp_z), hyp_trunc};
      const Rational value = trunc_hypergeometric(spec);
      Json row{{"truncation", hyp_trunc}, {"value", to_json(value)}};
      bool pass = true;
      if (hyp_p) {
        const Residue exact = reduce_mod_pk(value, *hyp_p, g.prec);
        const Residue termwise = trunc_hypergeometric_mod(spec, *hyp_p, g.prec);
        row["residue"] = to_json(exact);
        row["residue_termwise"] = to_json(termwise);
        pass = exact == termwise;
      }
      row["pass"] = pass;
      result = single("hyp", std::move(row));
    } else if (sc->parsed()) {
      const SuperCongruenceOptions options{
          .override_hypothesis = sc_override, .exec = g.exec(), .table_cap = g.max_table};
      result = single("supercongruence", to_json(verify_supercongruence(sc_d, sc_r, sc_p, options)));
    } else if (sweep->parsed()) {
      result = run_sweep(sw, g);
    }

    result.write(out, format);
    return result.all_pass() ? kExitPass : kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace binharm::cli
