// brdyn: command line front end. Exit status 0 on success, 1 when a
// verification fails, 2 on a usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "brdyn/braid.hpp"
#include "brdyn/families.hpp"
#include "brdyn/foliation.hpp"
#include "brdyn/format.hpp"
#include "brdyn/graphdyn.hpp"
#include "brdyn/horseshoe.hpp"
#include "brdyn/run_config.hpp"
#include "brdyn/suites.hpp"

using namespace brdyn;
using nlohmann::json;

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json coeff_json(const IntPolynomial& p) { return p.to_decimal_strings(); }

// "-2,0,-1,1", "-2 0 -1 1" or a JSON array; constant term first.
IntPolynomial parse_coeffs(const std::string& text) {
  std::vector<Integer> c;
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::exception& e) {
      throw ParseError(std::string("coefficient list: ") + e.what());
    }
    for (const auto& x : j) {
      const std::string tok = x.is_string() ? x.get<std::string>() : x.dump();
      try {
        c.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError("bad coefficient '" + tok + "'");
      }
    }
    return IntPolynomial(std::move(c));
  }
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      c.emplace_back(tok);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + tok + "'");
    }
  }
  if (c.empty()) throw ParseError("empty coefficient list");
  return IntPolynomial(std::move(c));
}

Family parse_family(const std::string& s) {
  if (s == "beta") return Family::Beta;
  if (s == "sigma") return Family::Sigma;
  throw Usage("family must be beta or sigma");
}

std::string csv_join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

// --- dilatation, charpoly, classify ---

int cmd_dilatation(const RunConfig& cfg, const std::string& fam, int m, int n, int digits) {
  const Family f = parse_family(fam);
  const TNClass cls = f == Family::Beta ? classify_beta(m, n, cfg.tolerance) : classify_sigma(m, n, cfg.tolerance);
  FamilyRow row = family_row(f, m, n);
  row.cls = cls;
  std::optional<RootEnclosure> enc;
  if (cls.charpoly) enc = largest_real_root_enclosure(*cls.charpoly, to_rational(cfg.tolerance));
  switch (cfg.output_format) {
    case OutputFormat::Json: {
      json j = row;
      j["digits"] = digits;
      j["interval"] = enc ? json(interval_string(*enc, digits + 2)) : json(nullptr);
      emit(j);
      break;
    }
    case OutputFormat::Csv:
      std::cout << csv_header() << '\n' << to_csv(row, digits) << '\n';
      break;
    case OutputFormat::Text:
      std::cout << to_string(f) << ' ' << m << ' ' << n << ' ' << to_string(cls.kind) << '\n';
      if (enc) {
        std::cout << "dilatation " << round_half_even(*cls.dilatation, digits) << "  certified "
                  << interval_string(*enc, digits + 2) << '\n';
        std::cout << "log_dilatation " << round_half_even(*row.log_dilatation, digits) << '\n';
        std::cout << "mahler " << round_half_even(*row.mahler, digits) << '\n';
        std::cout << "charpoly " << cls.charpoly->to_string() << '\n';
      }
      break;
  }
  return 0;
}

int cmd_charpoly(const RunConfig& cfg, const std::string& fam, int m, std::optional<int> n) {
  IntPolynomial p;
  if (fam == "rm") {
    if (n) throw Usage("charpoly rm takes a single index");
    p = rm_charpoly(m);
  } else {
    if (!n) throw Usage("charpoly " + fam + " needs m and n");
    p = parse_family(fam) == Family::Beta ? beta_charpoly(m, *n) : sigma_charpoly(m, *n);
  }
  if (cfg.output_format == OutputFormat::Csv)
    std::cout << csv_join(p.to_decimal_strings()) << '\n';
  else
    std::cout << coeff_json(p).dump() << '\n';
  return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& fam, int m, int n) {
  const Family f = parse_family(fam);
  const TNClass c = f == Family::Beta ? classify_beta(m, n, cfg.tolerance) : classify_sigma(m, n, cfg.tolerance);
  if (cfg.output_format == OutputFormat::Json)
    emit({{"family", to_string(f)}, {"m", m}, {"n", n}, {"kind", to_string(c.kind)}});
  else
    std::cout << to_string(c.kind) << '\n';
  return 0;
}

// --- graph maps ---

GraphMap build_map(const std::string& kind, int m, std::optional<int> n) {
  if (kind == "rm") {
    if (n) throw Usage("graphmap rm takes a single index");
    return rm_graph_map(m);
  }
  if (!n) throw Usage("graphmap " + kind + " needs m and n");
  if (kind == "g") return gmn_graph_map(m, *n);
  if (kind == "gprime") return gprime_graph_map(m, *n);
  if (kind == "h") return hmn_graph_map(m, *n);
  throw Usage("graph map kind must be rm, g, gprime or h");
}

GraphMap load_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return graph_map_from_json(j);
}

json bh_json(const BHReport& r) {
  return {{"efficient", r.efficient},
          {"irreducible", r.irreducible},
          {"perron_root", r.perron_root},
          {"verdict", to_string(r.verdict)}};
}

struct GraphmapFlags {
  bool check_bh = false, char_poly = false, singularities = false, emit_json = false;
};

int cmd_graphmap(const RunConfig& cfg, const GraphMap& gm, const std::string& name, const GraphmapFlags& fl) {
  int status = 0;
  const EmbeddedGraph& g = gm.graph();
  if (fl.emit_json && !fl.check_bh && !fl.char_poly && !fl.singularities) {
    emit(json(gm));
    return 0;
  }
  json out{{"name", name}};
  std::ostringstream text;
  text << name << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges (P "
       << g.edges_of_class(EdgeClass::P).size() << ", preP " << g.edges_of_class(EdgeClass::PreP).size() << ", real "
       << g.edges_of_class(EdgeClass::Real).size() << ")\n";
  if (fl.emit_json) out["graph_map"] = gm;
  if (fl.check_bh) {
    const BHReport r = check_bh(gm, cfg.tolerance);
    out["bh"] = bh_json(r);
    text << "efficient " << (r.efficient ? "yes" : "no") << "\nirreducible " << (r.irreducible ? "yes" : "no")
         << "\nperron_root " << round_half_even(r.perron_root, 12) << "\nverdict " << to_string(r.verdict) << '\n';
    if (r.verdict != BHVerdict::PseudoAnosovCertified) status = kVerifyFailed;
  }
  if (fl.char_poly) {
    const TransitionMatrix t = transition_matrix(gm);
    const IntPolynomial p = char_poly(t.entries);
    out["transition_matrix"] = {{"labels", t.labels}, {"rows", t.entries.to_rows()}};
    out["char_poly"] = coeff_json(p);
    text << "transition matrix on " << csv_join(t.labels) << '\n' << t.entries.to_string() << "char_poly "
         << p.to_string() << '\n';
  }
  if (fl.singularities) {
    const SingularityData sd = singularity_data_from_traintrack(gm);
    out["singularities"] = sd;
    out["euler_poincare_residual"] = euler_poincare_residual(sd);
    for (const auto& s : sd.sorted()) text << s.at << ' ' << s.prongs << "-prong\n";
    text << "euler_poincare_residual " << euler_poincare_residual(sd) << '\n';
  }
  if (cfg.output_format == OutputFormat::Json || fl.emit_json)
    emit(out);
  else
    std::cout << text.str();
  return status;
}

// --- polynomials ---

int cmd_mahler(const RunConfig& cfg, const std::string& coeffs, int digits) {
  const IntPolynomial p = parse_coeffs(coeffs);
  const double mm = mahler_measure(p, std::max(cfg.tolerance, 1e-9));
  if (cfg.output_format == OutputFormat::Json)
    emit({{"polynomial", coeff_json(p)}, {"mahler", mm}});
  else
    std::cout << round_half_even(mm, digits) << '\n';
  return 0;
}

int cmd_roots(const RunConfig& cfg, const std::string& coeffs, int digits) {
  const IntPolynomial p = parse_coeffs(coeffs);
  const RootSet rs = all_roots(p, cfg.tolerance);
  if (cfg.output_format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rs.roots)
      arr.push_back({{"re", r.value.real()}, {"im", r.value.imag()}, {"multiplicity", r.multiplicity}});
    emit({{"polynomial", coeff_json(p)}, {"roots", arr}, {"residual_bound", rs.residual_bound}});
    return 0;
  }
  if (cfg.output_format == OutputFormat::Csv) std::cout << "re,im,abs,multiplicity\n";
  for (const auto& r : rs.roots) {
    const std::string re = round_half_even(r.value.real(), digits), im = round_half_even(r.value.imag(), digits),
                      ab = round_half_even(std::abs(r.value), digits);
    if (cfg.output_format == OutputFormat::Csv)
      std::cout << re << ',' << im << ',' << ab << ',' << r.multiplicity << '\n';
    else
      std::cout << re << (r.value.imag() < 0 ? " - " : " + ") << round_half_even(std::abs(r.value.imag()), digits)
                << "i  |z| " << ab << "  x" << r.multiplicity << '\n';
  }
  return 0;
}

int cmd_salem_boyd(const RunConfig& cfg, const std::string& coeffs, int n, const std::string& sign) {
  if (sign != "+" && sign != "-") throw Usage("sign must be + or -");
  if (n < 0) throw Usage("n must be nonnegative");
  const IntPolynomial q = salem_boyd(parse_coeffs(coeffs), static_cast<unsigned>(n), sign == "+" ? 1 : -1);
  if (cfg.output_format == OutputFormat::Csv)
    std::cout << csv_join(q.to_decimal_strings()) << '\n';
  else
    std::cout << coeff_json(q).dump() << '\n';
  return 0;
}

// --- table ---

int cmd_table(const RunConfig& cfg, int g_min, int g_max, int digits) {
  const auto rows = family_table(g_min, g_max);
  switch (cfg.output_format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j = r;
        j["genus"] = r.genus();
        arr.push_back(j);
      }
      emit(arr);
      break;
    }
    case OutputFormat::Csv:
      std::cout << "genus," << csv_header() << '\n';
      for (const auto& r : rows) std::cout << r.genus() << ',' << to_csv(r, digits) << '\n';
      break;
    case OutputFormat::Text: {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-5s %-6s %3s %3s  %-13s %*s %*s\n", "genus", "family", "m", "n", "kind",
                    digits + 3, "dilatation", digits + 3, "log");
      std::cout << buf;
      for (const auto& r : rows) {
        const auto num = [&](const std::optional<double>& x) { return x ? round_half_even(*x, digits) : "-"; };
        std::snprintf(buf, sizeof buf, "%-5d %-6s %3d %3d  %-13s %*s %*s\n", r.genus(), to_string(r.family).c_str(),
                      r.m, r.n, to_string(r.cls.kind).c_str(), digits + 3, num(r.cls.dilatation).c_str(), digits + 3,
                      num(r.log_dilatation).c_str());
        std::cout << buf;
      }
      break;
    }
  }
  return 0;
}

// --- verify ---

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const Rational cap = cfg.cap();
  const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites{
      {"constants", constants_suite},
      {"identities", identities_suite},
      {"matrix", [] {
         SuiteResult r = matrix_suite();
         r.merge(bh_suite());
         return r;
       }},
      {"mahler", mahler_suite},
      {"monotonic", [&] { return monotonic_suite(cap); }},
      {"minimality", [&] { return minimality_suite(cap); }},
      {"bounds", [&] { return bounds_suite(cap); }},
      {"foliation", foliation_suite},
      {"salemboyd", [] { return salem_boyd_suite(); }},
      {"horseshoe", horseshoe_suite}};
  bool known = suite == "all";
  for (const auto& s : suites) known |= s.first == suite;
  if (!known) throw Usage("unknown suite '" + suite + "'");
  bool ok = true;
  json report = json::array();
  for (const auto& [name, run] : suites) {
    if (suite != "all" && suite != name) continue;
    SuiteResult r;
    try {
      r = run();
    } catch (const Error& e) {
      r.require(false, e.what());
    }
    ok &= r.pass;
    if (cfg.output_format == OutputFormat::Json) {
      report.push_back({{"suite", name}, {"pass", r.pass}, {"failures", r.failures}, {"notes", r.notes}});
    } else {
      std::cout << name << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
      for (const auto& f : r.failures) std::cout << "  failed: " << f << '\n';
      for (const auto& n : r.notes) std::cout << "  " << n << '\n';
    }
  }
  if (cfg.output_format == OutputFormat::Json) emit(report);
  return ok ? 0 : kVerifyFailed;
}

// --- horseshoe and lifts ---

int cmd_horseshoe(const RunConfig& cfg, const std::string& word) {
  const HorseshoeCode c(word);
  const auto rec = recognize_sigma_code(c);
  const BraidWord b = code_to_braid(c);
  const BurauResult bu = burau_minus_one(b);
  const Permutation perm = permutation(b);
  if (cfg.output_format == OutputFormat::Json) {
    json j{{"code", word}, {"period", c.period()}, {"braid", b}, {"fingerprint", fingerprint(b)},
           {"burau_spectral_radius", bu.spectral_radius}, {"permutation", perm.cycle_string()}};
    j["sigma"] = rec ? json{{"m", rec->first}, {"n", rec->second}} : json(nullptr);
    emit(j);
    return 0;
  }
  std::cout << "code " << word << " (period " << c.period() << ")\n";
  if (rec)
    std::cout << "recognized sigma_{" << rec->first << "," << rec->second << "}\n";
  else
    std::cout << "not a sigma code\n";
  std::cout << "braid " << b.to_string() << " on " << b.strands() << " strands\n"
            << "exponent_sum " << exponent_sum(b) << "\npermutation " << perm.cycle_string() << "\nburau_charpoly "
            << bu.charpoly.to_string() << "\nburau_spectral_radius " << round_half_even(bu.spectral_radius, 6) << '\n';
  return 0;
}

int cmd_lift(const RunConfig& cfg, const std::string& fam, int m, int n) {
  const Family f = parse_family(fam);
  if ((m + n) % 2) throw Usage("lifts need m + n even");
  const SingularityData base = singularity_data_from_traintrack(f == Family::Beta ? gmn_graph_map(m, n)
                                                                                : hmn_graph_map(m, n));
  const SingularityData up = lift_double_cover(base, f == Family::Beta ? beta_branch_set(m, n) : sigma_branch_set(m, n));
  const bool parity = orientability_parity(up);
  if (cfg.output_format == OutputFormat::Json) {
    emit({{"base", base},
          {"lift", up},
          {"genus", up.surface.genus},
          {"euler_poincare_residual", euler_poincare_residual(up)},
          {"even_prongs", parity}});
    return 0;
  }
  std::cout << "lift of " << to_string(f) << "_{" << m << "," << n << "} to genus " << up.surface.genus << '\n';
  for (const auto& s : up.sorted()) std::cout << s.at << ' ' << s.prongs << "-prong\n";
  std::cout << "euler_poincare_residual " << euler_poincare_residual(up) << "\neven_prongs "
            << (parity ? "yes" : "no") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid dilatations, graph maps and train tracks for the beta and sigma families"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format;
  app.add_option("--config", config_path, "RunConfig JSON file");
  app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  std::function<int(const RunConfig&)> action;
  std::string fam, kind, coeffs, sign, suite, code, input;
  int m = 0, digits = 12, n_raw = 0, g_min = 0, g_max = 0;
  std::optional<int> n;
  GraphmapFlags flags;

  auto* dil = app.add_subcommand("dilatation", "Thurston-Nielsen type and dilatation");
  dil->add_option("family", fam)->required()->check(CLI::IsMember({"beta", "sigma"}));
  dil->add_option("m", m)->required();
  dil->add_option("n", n_raw)->required();
  dil->add_option("--digits", digits)->check(CLI::Range(0, 40));
  dil->callback([&] { action = [&](const RunConfig& c) { return cmd_dilatation(c, fam, m, n_raw, digits); }; });

  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial, constant term first");
  cp->add_option("family", fam)->required()->check(CLI::IsMember({"beta", "sigma", "rm"}));
  cp->add_option("m", m)->required();
  cp->add_option("n", n);
  cp->callback([&] { action = [&](const RunConfig& c) { return cmd_charpoly(c, fam, m, n); }; });

  auto* cl = app.add_subcommand("classify", "Periodic, Reducible or PseudoAnosov");
  cl->add_option("family", fam)->required()->check(CLI::IsMember({"beta", "sigma"}));
  cl->add_option("m", m)->required();
  cl->add_option("n", n_raw)->required();
  cl->callback([&] { action = [&](const RunConfig& c) { return cmd_classify(c, fam, m, n_raw); }; });

  auto* gmap = app.add_subcommand("graphmap", "built-in graph maps, or one read from --input");
  gmap->add_option("kind", kind)->check(CLI::IsMember({"rm", "g", "gprime", "h"}));
  gmap->add_option("m", m);
  gmap->add_option("n", n);
  gmap->add_option("--input", input, "graph map JSON file")->check(CLI::ExistingFile);
  gmap->add_flag("--check-bh", flags.check_bh);
  gmap->add_flag("--char-poly", flags.char_poly);
  gmap->add_flag("--singularities", flags.singularities);
  gmap->add_flag("--emit-json", flags.emit_json);
  gmap->callback([&] {
    action = [&](const RunConfig& c) {
      if (!input.empty()) {
        if (!kind.empty()) throw Usage("give either a built-in kind or --input");
        return cmd_graphmap(c, load_map(input), input, flags);
      }
      if (kind.empty()) throw Usage("graphmap needs a kind or --input");
      std::string name = kind + "_{" + std::to_string(m) + (n ? "," + std::to_string(*n) : "") + "}";
      return cmd_graphmap(c, build_map(kind, m, n), name, flags);
    };
  });

  auto* mah = app.add_subcommand("mahler", "Mahler measure");
  mah->add_option("coeffs", coeffs, "constant term first, e.g. -2,0,-1,1")->required();
  mah->add_option("--digits", digits)->check(CLI::Range(0, 40));
  mah->callback([&] { action = [&](const RunConfig& c) { return cmd_mahler(c, coeffs, digits); }; });

  auto* rts = app.add_subcommand("roots", "complex roots with multiplicities");
  rts->add_option("coeffs", coeffs)->required();
  rts->add_option("--digits", digits)->check(CLI::Range(0, 40));
  rts->callback([&] { action = [&](const RunConfig& c) { return cmd_roots(c, coeffs, digits); }; });

  auto* sb = app.add_subcommand("salem-boyd", "t^n P + sign P_*");
  sb->add_option("coeffs", coeffs)->required();
  sb->add_option("n", n_raw)->required();
  sb->add_option("sign", sign)->required();
  sb->callback([&] { action = [&](const RunConfig& c) { return cmd_salem_boyd(c, coeffs, n_raw, sign); }; });

  auto* tab = app.add_subcommand("table", "beta and sigma rows by genus");
  tab->add_option("--g-min", g_min)->required();
  tab->add_option("--g-max", g_max)->required();
  tab->add_option("--digits", digits)->check(CLI::Range(0, 40));
  tab->callback([&] { action = [&](const RunConfig& c) { return cmd_table(c, g_min, g_max, digits); }; });

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"bounds", "monotonic", "minimality", "matrix", "foliation", "salemboyd", "horseshoe",
                             "constants", "identities", "mahler", "all"}));
  ver->callback([&] { action = [&](const RunConfig& c) { return cmd_verify(c, suite); }; });

  auto* hs = app.add_subcommand("horseshoe", "recognize a horseshoe code and build its braid");
  hs->add_option("code", code)->required();
  hs->callback([&] { action = [&](const RunConfig& c) { return cmd_horseshoe(c, code); }; });

  auto* lf = app.add_subcommand("lift", "singularity data on the branched double cover");
  lf->add_option("family", fam)->required()->check(CLI::IsMember({"beta", "sigma"}));
  lf->add_option("m", m)->required();
  lf->add_option("n", n_raw)->required();
  lf->callback([&] { action = [&](const RunConfig& c) { return cmd_lift(c, fam, m, n_raw); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : load_run_config(config_path);
    if (!format.empty()) cfg.output_format = output_format_from_string(format);
    return action(cfg);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const BadParameters& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const OddBranchSet& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const NonPrimitive& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const InvalidGraph& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kVerifyFailed;
  }
}
