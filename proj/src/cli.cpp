#include "strata/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "strata/io.hpp"
#include "strata/parse.hpp"
#include "strata/reconstruct.hpp"
#include "strata/spectrum.hpp"

namespace strata::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_strata(const StratumPoset& p, const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += " ";
    out += to_string(p.stratum(indices[i]));
  }
  return out;
}

int cmd_info(const std::string& expr, bool as_json, std::ostream& out) {
  const auto d = parse_domain(expr);
  const auto total = invariants(d);
  const auto sym = sym_group(d);
  if (as_json) {
    json factors = json::array();
    for (const auto& f : d.factors()) {
      factors.push_back({{"factor", f}, {"invariants", invariant_triple(f)}, {"tube", is_tube(f)}});
    }
    out << json{{"domain", d}, {"invariants", total}, {"factors", factors}, {"sym_order", sym.order}}.dump(2)
        << "\n";
    return kOk;
  }
  out << "domain: " << to_string(d) << "\n";
  out << std::left << std::setw(10) << "factor" << std::right << std::setw(6) << "rank" << std::setw(8)
      << "dim_R" << std::setw(8) << "shilov" << "  tube\n";
  for (const auto& f : d.factors()) {
    const auto t = invariant_triple(f);
    out << std::left << std::setw(10) << to_string(f) << std::right << std::setw(6) << t.rank << std::setw(8)
        << t.real_dim << std::setw(8) << t.shilov_dim << "  " << yes_no(is_tube(f)) << "\n";
  }
  out << std::left << std::setw(10) << "total" << std::right << std::setw(6) << total.rank << std::setw(8)
      << total.real_dim << std::setw(8) << total.shilov_dim << "\n";
  out << "invariants: " << to_string(total) << "\n";
  out << "sym_D order: " << sym.order << "\n";
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b, std::ostream& out) {
  const bool iso = is_isomorphic(parse_domain(a), parse_domain(b));
  out << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? kOk : kNegative;
}

int cmd_spectrum(const std::string& expr, bool dot, bool as_json, std::optional<std::int64_t> ideals,
                 std::ostream& out) {
  const auto p = build_spectrum(parse_domain(expr));
  if (ideals) {
    const std::int64_t k = *ideals;
    const auto summands = decompose_weight_ideal(p, k);
    const auto tops = p.strata_of_weight(k);
    out << "I_" << k << " =";
    for (std::size_t t = 0; t < tops.size(); ++t) {
      out << (t ? " + " : " ") << "I" << to_string(p.stratum(tops[t]));
    }
    out << "\n";
    for (std::size_t t = 0; t < tops.size(); ++t) {
      out << "  I" << to_string(p.stratum(tops[t])) << " = {" << join_strata(p, summands[t].indices()) << "}\n";
    }
    out << "union = {" << join_strata(p, ideal_of_weight(p, k).indices()) << "}\n";
    return kOk;
  }
  if (dot) {
    out << spectrum_to_dot(p);
    return kOk;
  }
  if (as_json) {
    out << spectrum_to_json(p).dump() << "\n";
    return kOk;
  }
  out << "domain: " << to_string(p.domain()) << "\n";
  out << "ranks: " << to_string(p.ranks()) << "\n";
  out << "strata: " << p.size() << "\n";
  out << "covers: " << p.covers().size() << "\n";
  out << "solvable length: " << solvable_length(p) << "\n";
  for (std::int64_t k = 0; k <= p.max_weight(); ++k) {
    out << "weight " << k << ": " << join_strata(p, p.strata_of_weight(k)) << "\n";
  }
  return kOk;
}

int cmd_length(const std::string& expr, std::ostream& out) {
  out << solvable_length(build_spectrum(parse_domain(expr))) << "\n";
  return kOk;
}

int cmd_automorphisms(const std::string& expr, bool unlabeled, bool as_json, std::ostream& out) {
  const auto d = parse_domain(expr);
  const auto p = build_spectrum(d);
  const auto autos = poset_automorphisms(p, {.respect_labels = !unlabeled});
  std::vector<std::string> perms;
  bool all_induced = true;
  for (const auto& a : autos) {
    try {
      perms.push_back(cycle_notation(factor_permutation_of(p, a)));
    } catch (const Error&) {
      perms.push_back("not coordinate-induced");
      all_induced = false;
    }
  }
  if (as_json) {
    json list = json::array();
    for (std::size_t t = 0; t < autos.size(); ++t) {
      list.push_back({{"image", autos[t].image}, {"factor_permutation", perms[t]}});
    }
    out << json{{"domain", to_string(d)},
                {"respect_labels", !unlabeled},
                {"count", autos.size()},
                {"sym_order", sym_group(d).order},
                {"automorphisms", list}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "domain: " << to_string(d) << "\n";
  out << (unlabeled ? "poset" : "label-respecting") << " automorphisms: " << autos.size()
      << " (|sym_D| = " << sym_group(d).order << ")\n";
  for (std::size_t t = 0; t < autos.size(); ++t) {
    out << "  " << perms[t];
    std::size_t moved = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (autos[t].image[x] == x) continue;
      out << (moved++ ? " " : ": ") << to_string(p.stratum(x)) << "->" << to_string(p.stratum(autos[t].image[x]));
    }
    out << "\n";
  }
  if (!all_induced) out << "warning: some automorphisms are not coordinate-induced\n";
  return kOk;
}

int cmd_reconstruct(std::int64_t r, std::int64_t dim, std::int64_t shilov, bool as_json, std::ostream& out) {
  const InvariantTriple t{r, dim, shilov};
  try {
    const auto f = from_invariants(t);
    if (as_json) {
      out << json{{"invariants", t}, {"factor", f}, {"expression", to_string(f)}}.dump(2) << "\n";
    } else {
      out << to_string(f) << "\n";
    }
    return kOk;
  } catch (const AmbiguousInvariant& e) {
    out << "ambiguous: " << e.what() << "\n";
    return kNegative;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    out << "not found: " << e.what() << "\n";
    return kNegative;
  }
}

int cmd_verify_complete(std::int64_t max_param, bool as_json, bool serial, std::ostream& out) {
  const auto report = serial ? verify_complete_invariant_serial(max_param) : verify_complete_invariant(max_param);
  if (as_json) {
    out << json(report).dump(2) << "\n";
    return report.ok() ? kOk : kNegative;
  }
  out << (report.ok() ? "OK: " : "FAIL: ") << report.collisions.size() << " collisions / "
      << report.scanned_count << " factors scanned\n";
  out << "round-trip failures: " << report.round_trip_failures.size()
      << ", tube-criterion violations: " << report.tube_violations.size()
      << ", tube (rank, dim) collisions: " << report.tube_collisions.size() << "\n";
  for (const auto& c : report.collisions) {
    out << "  collision " << to_string(c.triple) << ":";
    for (const auto& f : c.factors) out << " " << to_string(f);
    out << "\n";
  }
  for (const auto& f : report.round_trip_failures) out << "  round-trip failure: " << to_string(f) << "\n";
  for (const auto& f : report.tube_violations) out << "  tube-criterion violation: " << to_string(f) << "\n";
  return report.ok() ? kOk : kNegative;
}

int cmd_verify_spectrum(std::int64_t max_rank, std::size_t max_factors, std::int64_t max_dim, bool as_json,
                        std::ostream& out) {
  const auto pool = spectrum_pool(max_rank, max_dim);
  const auto report = verify_spectrum(pool, max_factors);
  if (as_json) {
    out << json(report).dump(2) << "\n";
    return report.ok() ? kOk : kNegative;
  }
  out << (report.ok() ? "OK: " : "FAIL: ") << report.violations.size() << " violations / "
      << report.domains_checked << " domains checked (" << pool.size() << " factors in pool, "
      << report.automorphisms_checked << " automorphisms)\n";
  for (const auto& v : report.violations) out << "  " << v << "\n";
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, stratified spectra and reconstruction for bounded symmetric domains", "strata"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads for sweeps (default: runtime choice)")
      ->check(CLI::NonNegativeNumber);

  bool as_json = false;
  std::string expr, expr2;

  auto* info = app.add_subcommand("info", "Invariants, per-factor table, tube flags and sym_D order");
  info->add_option("expr", expr, "domain expression, e.g. \"I(3,2) x V\"")->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* iso = app.add_subcommand("iso", "Decide (stable) isomorphism of two domains; exit 0 or 1");
  iso->add_option("expr1", expr, "first domain")->required();
  iso->add_option("expr2", expr2, "second domain")->required();

  bool dot = false;
  std::optional<std::int64_t> ideals;
  auto* spectrum = app.add_subcommand("spectrum", "Stratum poset of the Toeplitz algebra spectrum");
  spectrum->add_option("expr", expr, "domain expression")->required();
  auto* dot_flag = spectrum->add_flag("--dot", dot, "Hasse diagram in Graphviz syntax");
  auto* json_flag = spectrum->add_flag("--json", as_json, "JSON export");
  spectrum->add_option("--ideals", ideals, "decompose the weight-k ideal into principal summands");
  dot_flag->excludes(json_flag);

  auto* length = app.add_subcommand("length", "Solvable length of the Toeplitz algebra");
  length->add_option("expr", expr, "domain expression")->required();

  bool unlabeled = false;
  auto* autos = app.add_subcommand("automorphisms", "Spectrum automorphisms and their factor permutations");
  autos->add_option("expr", expr, "domain expression")->required();
  autos->add_flag("--unlabeled", unlabeled, "ignore stratum labels");
  autos->add_flag("--json", as_json, "machine-readable output");

  std::int64_t r = 0, dim = 0, shilov = 0;
  auto* recon = app.add_subcommand("reconstruct", "Recover an irreducible factor from its invariants");
  recon->add_option("--rank", r, "rank")->required();
  recon->add_option("--dim", dim, "real dimension")->required();
  recon->add_option("--shilov", shilov, "Shilov boundary dimension")->required();
  recon->add_flag("--json", as_json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->require_subcommand(1);
  std::int64_t max_param = 50;
  bool serial = false;
  auto* complete = verify->add_subcommand("complete-invariant", "Injectivity of (rank, dim, shilov) on factors");
  complete->add_option("--max", max_param, "largest parameter scanned")->required()->check(CLI::PositiveNumber);
  complete->add_flag("--json", as_json, "machine-readable output");
  complete->add_flag("--serial", serial, "use the serial reference sweep");
  std::int64_t max_rank = 3, max_dim = 12;
  std::size_t max_factors = 3;
  auto* vspec = verify->add_subcommand("spectrum", "Stratum-level checks over small product domains");
  vspec->add_option("--max-rank", max_rank, "largest factor rank")->required()->check(CLI::PositiveNumber);
  vspec->add_option("--max-factors", max_factors, "largest number of factors")->required()->check(CLI::PositiveNumber);
  vspec->add_option("--max-dim", max_dim, "largest factor real dimension")->capture_default_str()->check(CLI::PositiveNumber);
  vspec->add_flag("--json", as_json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (info->parsed()) return cmd_info(expr, as_json, out);
    if (iso->parsed()) return cmd_iso(expr, expr2, out);
    if (spectrum->parsed()) return cmd_spectrum(expr, dot, as_json, ideals, out);
    if (length->parsed()) return cmd_length(expr, out);
    if (autos->parsed()) return cmd_automorphisms(expr, unlabeled, as_json, out);
    if (recon->parsed()) return cmd_reconstruct(r, dim, shilov, as_json, out);
    if (complete->parsed()) return cmd_verify_complete(max_param, as_json, serial, out);
    if (vspec->parsed()) return cmd_verify_spectrum(max_rank, max_factors, max_dim, as_json, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace strata::cli
