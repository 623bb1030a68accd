// Command-line front end: linear-resolution checks, chordality reports,
// homology and cycle inspection, and the graph/ideal cross-check harnesses.
//
// Exit codes: 0 success (or: linear, chorded, full agreement); 1 negative
// verdict (not linear / claim failed / disagreement found); 2 inconclusive or
// infeasible within the configured caps; 64 usage or parse errors; 65 valid
// but unsupported input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "chorded/chordality.hpp"
#include "chorded/homology.hpp"
#include "chorded/instances.hpp"
#include "chorded/resolution.hpp"
#include "chorded/serialize.hpp"
#include "chorded/util.hpp"

using namespace chorded;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitUnsupported = 65;

struct Options {
  std::string mode = "boundary";
  SearchCaps caps;
  std::uint64_t seed = 0;
  bool json_output = false;
  int threads = 1;

  ChordMode chord_mode() const {
    return mode == "exact" ? ChordMode::exact : ChordMode::boundary;
  }
  json config_json(const std::string& command) const {
    return json{{"command", command},
                {"mode", mode},
                {"kernel_cap", caps.kernel_cap},
                {"chord_cap", caps.chord_cap},
                {"family_cap", caps.family_cap},
                {"widen_chords", caps.widen},
                {"seed", seed},
                {"threads", threads}};
  }
};

void emit(const Options& opt, const std::string& command, json body, const std::string& text) {
  if (opt.json_output) {
    body["config"] = opt.config_json(command);
    std::cout << body.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::yes: return kExitYes;
    case Verdict::no: return kExitNegative;
    default: return kExitInconclusive;
  }
}

int run_check(const Options& opt, const std::string& path) {
  MonomialIdeal ideal = parse_ideal_file(path);
  if (!ideal.is_zero() && !ideal.generation_degree()) {
    std::cerr << "error: " << path << ": generators of mixed degrees are unsupported\n";
    return kExitUnsupported;
  }
  ResolutionReport report = criterion_report(ideal, opt.chord_mode(), opt.caps, opt.threads);
  emit(opt, "check", to_json(report), report.to_text());
  return verdict_exit(report.overall());
}

int run_betti(const Options& opt, const std::string& path, int max_vars) {
  MonomialIdeal ideal = parse_ideal_file(path);
  BettiTable table = betti_table(ideal, max_vars, opt.threads);
  std::ostringstream text;
  text << "graded Betti numbers over GF(2)\n" << table.to_text();
  if (auto degree = ideal.generation_degree())
    text << "linear for degree " << *degree << ": " << (table.is_linear(*degree) ? "yes" : "no")
         << '\n';
  emit(opt, "betti", to_json(table), text.str());
  return 0;
}

int run_homology(const Options& opt, const std::string& path) {
  SimplicialComplex cx = parse_complex_file(path);
  std::ostringstream text;
  json dims = json::array();
  int top = cx.is_void() ? -1 : cx.dim();
  for (int i = -1; i <= top; ++i) {
    int dim = reduced_homology_dim(cx, i);
    text << "dim H~_" << i << " = " << dim << '\n';
    dims.push_back(json{{"i", i}, {"dim", dim}});
  }
  emit(opt, "homology", json{{"complex", to_json(cx)}, {"reduced_homology", dims}}, text.str());
  return 0;
}

int run_cycles(const Options& opt, const std::string& path, int d) {
  SimplicialComplex cx = parse_complex_file(path);
  if (d < 0) d = cx.dim();
  CycleEnumeration enumeration = enumerate_face_minimal_cycles(cx, d, opt.caps.kernel_cap);
  std::ostringstream text;
  text << enumeration.cycles.size() << " face-minimal " << d << "-dimensional cycle"
       << (enumeration.cycles.size() == 1 ? "" : "s") << " (kernel dimension "
       << enumeration.kernel_dim << ")\n";
  json list = json::array();
  for (const CycleCertificate& c : enumeration.cycles) {
    text << "  " << c.cycle.facet_string() << (c.complete ? "  [d-complete]" : "")
         << (c.one_complete ? "  [1-complete]" : "") << '\n';
    list.push_back(to_json(c));
  }
  emit(opt, "cycles", json{{"dim", d}, {"kernel_dim", enumeration.kernel_dim}, {"cycles", list}},
       text.str());
  return 0;
}

int run_closure(const Options& opt, const std::string& path, int d) {
  SimplicialComplex cx = parse_complex_file(path);
  SimplicialComplex closed = d_closure(cx, d);
  emit(opt, "closure", to_json(closed), serialize_complex(closed));
  return 0;
}

int run_chorded(const Options& opt, const std::string& path) {
  SimplicialComplex cx = parse_complex_file(path);
  ChordedVerdict verdict = is_chorded(cx, opt.chord_mode(), opt.caps);
  std::ostringstream text;
  text << "chorded: " << to_string(verdict.verdict) << '\n';
  for (const DChordedVerdict& v : verdict.per_dim) {
    text << "  " << v.dim << "-chorded: " << to_string(v.verdict);
    if (v.complete_skeleton) text << " (complete skeleton)";
    if (v.witness) text << "  witness " << v.witness->cycle.facet_string();
    text << '\n';
  }
  emit(opt, "chorded", to_json(verdict), text.str());
  return verdict_exit(verdict.verdict);
}

// --- repro ------------------------------------------------------------------

struct Claims {
  int passed = 0;
  int failed = 0;
  std::ostringstream text;
  json list = json::array();

  void claim(const std::string& name, bool ok) {
    text << (ok ? "  [ok]   " : "  [FAIL] ") << name << '\n';
    list.push_back(json{{"claim", name}, {"ok", ok}});
    ++(ok ? passed : failed);
  }
};

int run_repro(const Options& opt, const std::string& name) {
  Claims claims;
  if (name == "ex216") {
    SimplicialComplex gamma = instances::ex216();
    claims.claim("the complex is 2-chorded (boundary mode)",
                 is_d_chorded(gamma, ChordMode::boundary, opt.caps).verdict == Verdict::yes);
    claims.claim("the complex is 2-chorded (exact mode)",
                 is_d_chorded(gamma, ChordMode::exact, opt.caps).verdict == Verdict::yes);
    SimplicialComplex closure = d_closure(gamma);
    SimplicialComplex skel3 = pure_skeleton(closure, 3);
    CycleEnumeration cycles = enumerate_face_minimal_cycles(skel3, 3, opt.caps.kernel_cap);
    claims.claim("its 2-closure has exactly one face-minimal 3-cycle",
                 cycles.cycles.size() == 1);
    const CycleCertificate& nine = cycles.cycles.front();
    claims.claim("that cycle has nine tetrahedra", nine.cycle.facets().size() == 9);
    claims.claim("it is 1-complete", nine.one_complete);
    claims.claim("it is not 3-complete", !nine.complete);
    ChordSearch search = find_chord_set_exact(skel3, nine, opt.caps);
    claims.claim("the exhaustive chord-set search returns none",
                 search.outcome == SearchOutcome::none);
    claims.claim("the 2-closure is not chorded",
                 is_chorded(closure, opt.chord_mode(), opt.caps).verdict == Verdict::no);
    claims.claim("dim H~_3 of the 2-closure is 1", reduced_homology_dim(closure, 3) == 1);
    claims.claim("the ideal (x0*x1*x2, x3*x4*x5) has no linear resolution over GF(2)",
                 !has_linear_resolution(instances::ex216_ideal(), opt.threads).linear);
  } else if (name == "rp2") {
    SimplicialComplex rp2 = instances::rp2six();
    claims.claim("dim H~_1 = 1 over GF(2)", reduced_homology_dim(rp2, 1) == 1);
    claims.claim("dim H~_2 = 1 over GF(2)", reduced_homology_dim(rp2, 2) == 1);
    MonomialIdeal ideal = stanley_reisner_ideal(rp2);
    claims.claim("its Stanley-Reisner ideal has no linear resolution over GF(2)",
                 !has_linear_resolution(ideal, opt.threads).linear);
    claims.claim("its Stanley-Reisner complex is not chorded",
                 is_chorded(rp2, opt.chord_mode(), opt.caps).verdict == Verdict::no);
  } else if (name == "fig5") {
    claims.claim("the 2-closure of <abc,abd,acd,bcd,bce,cde> is <abcd,bce,cde,ae>",
                 d_closure(instances::fig5()) == instances::fig5_closure());
  } else if (name == "octa") {
    CycleCertificate octa = certify_cycle(instances::octa(), true);
    ChordSearch search = find_chord_set_exact(instances::octa_chorded(), octa, opt.caps);
    claims.claim("a chord set for the octahedron is found", search.outcome == SearchOutcome::found);
    if (search.certificate) {
      ChordVerification check =
          verify_chord_set(instances::octa_chorded(), search.certificate->cycle,
                           search.certificate->chords, search.certificate->parts);
      claims.claim("the certificate re-verifies clause by clause", check.ok);
      claims.claim("it decomposes the octahedron into two pyramid shells",
                   search.certificate->parts.size() == 2);
    }
  } else {
    std::cerr << "error: unknown repro instance '" << name
              << "' (known: ex216, rp2, fig5, octa)\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << "repro " << name << ":\n"
       << claims.text.str() << (claims.failed ? "FAILED" : "all claims hold") << " ("
       << claims.passed << "/" << (claims.passed + claims.failed) << ")\n";
  emit(opt, "repro",
       json{{"instance", name}, {"claims", claims.list}, {"failed", claims.failed}}, text.str());
  return claims.failed ? kExitNegative : kExitYes;
}

// --- crosscheck ---------------------------------------------------------------

void write_counterexample(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
  std::cerr << "counterexample written to " << path << '\n';
}

int run_crosscheck_graphs(const Options& opt, int n, long long sample) {
  long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 2 || (sample == 0 && pairs > 15) || pairs > 62) {
    std::cerr << "error: infeasible vertex count " << n
              << (sample == 0 ? " for exhaustive enumeration (use --sample)" : "") << '\n';
    return kExitInconclusive;
  }
  long long total = sample > 0 ? sample : (1LL << pairs);
  Rng rng(opt.seed);
  long long agree = 0;
  std::vector<FroebergRecord> mismatches;
  for (long long idx = 0; idx < total; ++idx) {
    Graph g = sample > 0 ? graph_from_bits(n, rng.next() & ((1ULL << pairs) - 1))
                         : graph_from_bits(n, static_cast<std::uint64_t>(idx));
    FroebergRecord rec = froeberg_crosscheck(g);
    if (rec.agree)
      ++agree;
    else if (mismatches.size() < 8)
      mismatches.push_back(rec);
  }
  std::ostringstream text;
  text << "graphs on " << n << " vertices, " << (sample > 0 ? "sampled " : "exhaustive ") << total
       << " instances\n";
  text << "linear resolution of the complement edge ideal == chordality: " << agree << "/" << total
       << " agree\n";
  json body{{"vertices", n}, {"instances", total}, {"agree", agree}};
  int k = 0;
  for (const FroebergRecord& rec : mismatches) {
    std::string file = "crosscheck-graph-" + std::to_string(k++) + ".ideal";
    write_counterexample(file, serialize_ideal(edge_ideal(graph_complement(rec.graph))));
    text << "  DISAGREEMENT: chordal=" << rec.chordal
         << " linear=" << rec.complement_edge_ideal_linear << " -> " << file << '\n';
  }
  body["disagreements"] = total - agree;
  emit(opt, "crosscheck", body, text.str());
  return agree == total ? kExitYes : kExitNegative;
}

int run_crosscheck_ideals(const Options& opt, int n, int degree, long long sample) {
  if (n < 2 || n > 16) {
    std::cerr << "error: infeasible variable count " << n << '\n';
    return kExitInconclusive;
  }
  Rng rng(opt.seed);
  long long agree = 0, inconclusive = 0;
  std::ostringstream text;
  json cases = json::array();
  int k = 0;
  for (long long idx = 0; idx < sample; ++idx) {
    int deg = degree > 0 ? degree : 2 + rng.below(3);
    if (deg + 1 > n) deg = n - 1;
    MonomialIdeal ideal = random_single_degree_ideal(rng, n, deg, 8);
    LinearResolutionResult lin = has_linear_resolution(ideal, opt.threads);
    ChordedVerdict chorded = is_chorded(stanley_reisner_complex(ideal), opt.chord_mode(), opt.caps);
    if (chorded.verdict == Verdict::inconclusive) {
      ++inconclusive;
      continue;
    }
    bool match = lin.linear == (chorded.verdict == Verdict::yes);
    if (match) {
      ++agree;
    } else {
      std::string file = "crosscheck-ideal-" + std::to_string(k++) + ".ideal";
      write_counterexample(file, serialize_ideal(ideal));
      text << "  DISAGREEMENT: linear=" << lin.linear << " chorded=" << to_string(chorded.verdict)
           << " -> " << file << '\n';
      cases.push_back(json{{"ideal", to_json(ideal)},
                           {"linear", lin.linear},
                           {"chorded", to_string(chorded.verdict)}});
    }
  }
  long long conclusive = sample - inconclusive;
  std::ostringstream head;
  head << "random single-degree ideals in " << n << " variables, " << sample << " instances ("
       << conclusive << " conclusive)\n"
       << "homology linearity == Stanley-Reisner complex chorded: " << agree << "/" << conclusive
       << " agree\n";
  emit(opt, "crosscheck",
       json{{"variables", n},
            {"instances", sample},
            {"conclusive", conclusive},
            {"agree", agree},
            {"disagreements", cases}},
       head.str() + text.str());
  return agree == conclusive ? kExitYes : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear resolutions of square-free monomial ideals over GF(2):\n"
               "simplicial homology of the Stanley-Reisner complex on one route,\n"
               "chord sets for d-dimensional cycles on the other."};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--mode", opt.mode, "chord-set certification mode")
      ->check(CLI::IsMember({"boundary", "exact"}))
      ->capture_default_str();
  app.add_option("--kernel-cap", opt.caps.kernel_cap,
                 "max kernel dimension for cycle enumeration")
      ->capture_default_str();
  app.add_option("--chord-cap", opt.caps.chord_cap, "max chord-set size accepted")
      ->capture_default_str();
  app.add_option("--family-cap", opt.caps.family_cap,
                 "max independent candidate cycles in the decomposition search")
      ->capture_default_str();
  app.add_flag("--widen-chords", opt.caps.widen,
               "search chord faces outside V(Omega) as well");
  app.add_option("--seed", opt.seed, "seed for generated instances")->capture_default_str();
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--threads", opt.threads, "worker threads for sweeps")->capture_default_str();

  std::string ideal_path, complex_path, repro_name;
  int dim_flag = -1, n_flag = 6, degree_flag = 0, max_vars = 20;
  long long sample_flag = 0;

  CLI::App* check = app.add_subcommand("check", "decide linear resolution of an ideal file");
  check->add_option("ideal", ideal_path, "ideal file (one monomial per line)")->required();

  CLI::App* repro = app.add_subcommand("repro", "re-run a built-in worked instance");
  repro->add_option("name", repro_name, "ex216 | rp2 | fig5 | octa")->required();

  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "cross-validate the two decision routes");
  CLI::App* xgraphs = crosscheck->add_subcommand("graphs", "chordality vs linear resolution");
  xgraphs->add_option("--n", n_flag, "vertex count")->capture_default_str();
  xgraphs->add_option("--sample", sample_flag, "random sample size (0 = exhaustive)")
      ->capture_default_str();
  CLI::App* xideals = crosscheck->add_subcommand("ideals", "homology vs chordedness");
  xideals->add_option("--n", n_flag, "variable count")->capture_default_str();
  xideals->add_option("--degree", degree_flag, "generator degree (0 = mix of 2..4)")
      ->capture_default_str();
  xideals->add_option("--sample", sample_flag, "number of random ideals")->capture_default_str();
  crosscheck->require_subcommand(1);

  CLI::App* homology = app.add_subcommand("homology", "reduced GF(2) homology of a complex file");
  homology->add_option("complex", complex_path, "complex file (one facet per line)")->required();

  CLI::App* cycles = app.add_subcommand("cycles", "face-minimal cycles of a complex file");
  cycles->add_option("complex", complex_path, "complex file")->required();
  cycles->add_option("--dim", dim_flag, "cycle dimension (default: top)");

  CLI::App* closure = app.add_subcommand("closure", "d-closure of a pure complex file");
  closure->add_option("complex", complex_path, "complex file")->required();
  closure->add_option("--dim", dim_flag, "closure dimension (default: top)");

  CLI::App* chorded_cmd = app.add_subcommand("chorded", "is the complex chorded?");
  chorded_cmd->add_option("complex", complex_path, "complex file")->required();

  CLI::App* betti = app.add_subcommand("betti", "graded Betti numbers of an ideal file");
  betti->add_option("ideal", ideal_path, "ideal file")->required();
  betti->add_option("--max-vars", max_vars, "feasibility threshold for the 2^n sweep")
      ->capture_default_str();

  app.fallthrough();
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  crosscheck->get_subcommand("graphs")->fallthrough();
  crosscheck->get_subcommand("ideals")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(opt, ideal_path);
    if (*repro) return run_repro(opt, repro_name);
    if (*crosscheck) {
      if (*xgraphs) return run_crosscheck_graphs(opt, n_flag, sample_flag);
      return run_crosscheck_ideals(opt, n_flag, degree_flag, sample_flag ? sample_flag : 100);
    }
    if (*homology) return run_homology(opt, complex_path);
    if (*cycles) return run_cycles(opt, complex_path, dim_flag);
    if (*closure) return run_closure(opt, complex_path, dim_flag);
    if (*chorded_cmd) return run_chorded(opt, complex_path);
    if (*betti) return run_betti(opt, ideal_path, max_vars);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const precondition_error& e) {
    std::cerr << "unsupported input: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
