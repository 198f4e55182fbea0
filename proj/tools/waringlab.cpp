#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "waringlab/json_io.hpp"
#include "waringlab/suites.hpp"
#include "waringlab/terracini.hpp"

namespace wl = waringlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WARINGLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("WARINGLAB_SEED is not a valid integer");
    }
  }
  return 0;
}

wl::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  try {
    return wl::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("parse error in " + path + ": " + e.what());
  }
}

void emit(const wl::Json& report, const std::string& human, bool as_json, const std::string& out_path) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write file: " + out_path);
    out << report.dump(2) << "\n";
  }
}

std::string trichotomy_name(wl::Trichotomy t) {
  switch (t) {
    case wl::Trichotomy::I: return "I";
    case wl::Trichotomy::II: return "II";
    default: return "III";
  }
}

// Per-set analysis against a form: coefficients, redundancy, Kruskal rank,
// h-vector, CB(3), predicted cases when the set qualifies.
wl::Json analyze_set(const wl::Form& f, const wl::PointSet& pts, std::ostream& text) {
  wl::Json j;
  j["points"] = wl::pointset_to_json(pts);
  text << "  points: " << pts.size() << " in P^" << pts.n() << "\n";

  const auto coeffs = wl::coefficients_for(f, pts);
  if (coeffs) {
    wl::Json arr = wl::Json::array();
    std::ostringstream line;
    for (const auto& c : *coeffs) {
      arr.push_back(c.str());
      line << c.str() << " ";
    }
    j["coefficients"] = arr;
    const bool nonred = wl::is_nonredundant(f, pts);
    j["nonredundant"] = nonred;
    text << "  coefficients: " << line.str() << "\n";
    text << "  non-redundant: " << (nonred ? "yes" : "no") << "\n";
  } else {
    j["coefficients"] = nullptr;
    j["nonredundant"] = false;
    text << "  coefficients: none (form outside the span of the powers)\n";
  }

  const int kr = wl::kruskal_rank(pts);
  j["kruskal_rank"] = kr;
  text << "  kruskal rank: " << kr << "\n";

  const wl::HVector hv = wl::h_vector(pts);
  j["h_vector"] = wl::hvector_to_json(hv);
  text << "  h-vector: (";
  for (std::size_t i = 0; i < hv.values.size(); ++i) text << (i ? "," : "") << hv.values[i];
  text << ")\n";

  if (pts.size() >= 2) {
    const bool cb = wl::cb_check(pts, 3);
    j["cb3"] = cb;
    text << "  CB(3): " << (cb ? "yes" : "no") << "\n";
  }

  if (pts.size() == pts.n() + 2 && wl::span_dim(pts) == pts.n()) {
    wl::Json cases = wl::Json::array();
    std::ostringstream line;
    for (const auto t : wl::predict_cases(pts)) {
      cases.push_back(trichotomy_name(t));
      line << trichotomy_name(t) << " ";
    }
    j["predicted_cases"] = cases;
    text << "  predicted cases: " << line.str() << "\n";
  }
  return j;
}

int cmd_analyze(const std::string& form_path, const std::string& points_path, bool as_json,
                const std::string& out_path) {
  const wl::Json input = load_json(form_path);
  wl::Form form = input.contains("form") ? wl::form_from_json(input.at("form")) : wl::form_from_json(input);

  std::ostringstream text;
  wl::Json report;
  report["n"] = form.n();
  report["d"] = form.d();
  const bool concise = wl::is_concise(form);
  const int cat_rank = static_cast<int>(wl::rank(wl::first_catalecticant(form)));
  const auto support = wl::concise_support(form);
  report["concise"] = concise;
  report["catalecticant_rank"] = cat_rank;
  report["support_dim"] = static_cast<int>(support.basis.size());
  text << "form: n=" << form.n() << " d=" << form.d() << "\n";
  text << "concise: " << (concise ? "yes" : "no") << "\n";
  text << "catalecticant rank: " << cat_rank << "\n";
  text << "concise support dimension: " << support.basis.size() << "\n";

  std::vector<wl::PointSet> sets;
  if (!points_path.empty()) sets.push_back(wl::pointset_from_json(load_json(points_path)));
  if (input.contains("decomps"))
    for (const auto& dj : input.at("decomps")) sets.push_back(wl::decomposition_from_json(dj).pts);

  wl::Json set_reports = wl::Json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    text << "set " << i << ":\n";
    set_reports.push_back(analyze_set(form, sets[i], text));
  }
  if (!sets.empty()) report["sets"] = set_reports;

  if (sets.size() >= 2) {
    const wl::PairReport rep = wl::pair_report(sets[0], sets[1]);
    report["pair"] = wl::pair_report_to_json(rep);
    const wl::PointSet z = wl::set_union(sets[0], sets[1]);
    const wl::HVector hv = wl::h_vector(z);
    report["union_h_vector"] = wl::hvector_to_json(hv);
    report["union_cb3"] = wl::cb_check(z, 3);
    text << "pair: intersection=" << rep.intersection << " diff_collinear=" << (rep.diff_collinear ? "yes" : "no")
         << " diff_two_lines=" << (rep.diff_two_lines ? "yes" : "no")
         << " diff_two_planes=" << (rep.diff_two_planes ? "yes" : "no") << "\n";
    text << "union h-vector: (";
    for (std::size_t i = 0; i < hv.values.size(); ++i) text << (i ? "," : "") << hv.values[i];
    text << ")\n";
  }

  emit(report, text.str(), as_json, out_path);
  return kExitOk;
}

int cmd_generate(const std::string& family, std::optional<int> n_opt, std::optional<int> rank_opt,
                 std::uint64_t seed, bool as_json, const std::string& out_path) {
  const auto require_n = [&](int expected) {
    if (n_opt && *n_opt != expected)
      throw std::invalid_argument(family + " requires n = " + std::to_string(expected));
    return expected;
  };

  if (family == "kruskal-set") {
    if (!n_opt) throw std::invalid_argument("kruskal-set requires --n");
    if (!rank_opt) throw std::invalid_argument("kruskal-set requires --rank");
    const wl::PointSet pts = wl::random_kruskal_set(*n_opt, *rank_opt, seed);
    wl::Json report{{"family", "kruskal-set"},
                    {"seed", seed},
                    {"n", *n_opt},
                    {"r", *rank_opt},
                    {"points", wl::pointset_to_json(pts)}};
    std::ostringstream text;
    text << "kruskal-set: n=" << *n_opt << " r=" << *rank_opt << " seed=" << seed << "\n";
    text << "kruskal rank: " << wl::kruskal_rank(pts) << "\n";
    emit(report, text.str(), as_json, out_path);
    return kExitOk;
  }

  wl::Witness w = [&] {
    if (family == "binary") return wl::gen_binary_pair((require_n(1), seed));
    if (family == "conic8") return wl::gen_conic8((require_n(2), seed));
    if (family == "two-lines") return wl::gen_two_lines((require_n(3), seed));
    if (family == "penta") return wl::gen_pentahedral_nonunique((require_n(3), seed));
    if (family == "case-ii") return wl::gen_case_ii(n_opt.value_or(3), seed);
    if (family == "case-iii") return wl::gen_case_iii(n_opt.value_or(2), seed);
    if (family == "fermat-plus") return wl::gen_fermat_plus(n_opt.value_or(2), seed);
    throw std::invalid_argument("unknown family: " + family);
  }();

  const wl::Json report = wl::witness_to_json(w);
  std::ostringstream text;
  text << "family: " << w.family << " n=" << w.n << " d=" << w.d << " seed=" << w.seed << "\n";
  text << "decomposition lengths:";
  for (const auto& dec : w.decomps) text << " " << dec.size();
  text << "\n";
  if (w.decomps.size() >= 2) {
    const wl::PairReport rep = wl::pair_report(w.decomps[0].pts, w.decomps[1].pts);
    const wl::HVector hv = wl::h_vector(wl::set_union(w.decomps[0].pts, w.decomps[1].pts));
    text << "intersection: " << rep.intersection << "\n";
    text << "union h-vector: (";
    for (std::size_t i = 0; i < hv.values.size(); ++i) text << (i ? "," : "") << hv.values[i];
    text << ")\n";
  }
  emit(report, text.str(), as_json, out_path);
  return kExitOk;
}

int cmd_suite(const std::string& theorem, const std::string& n_range, int trials, std::uint64_t seed,
              bool as_json, const std::string& out_path) {
  wl::SuiteConfig cfg;
  cfg.theorem = theorem;
  cfg.trials = trials;
  cfg.seed = seed;
  const auto dots = n_range.find("..");
  try {
    if (dots == std::string::npos) {
      cfg.n_lo = cfg.n_hi = std::stoi(n_range);
    } else {
      cfg.n_lo = std::stoi(n_range.substr(0, dots));
      cfg.n_hi = std::stoi(n_range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid n range: " + n_range);
  }

  const wl::SuiteResult result = wl::run_suite(cfg);
  std::ostringstream text;
  text << "suite " << cfg.theorem << " n=" << cfg.n_lo << ".." << cfg.n_hi << " trials=" << cfg.trials
       << " seed=" << cfg.seed << "\n";
  for (const auto& row : result.per_n)
    text << "  n=" << row.n << ": pass=" << row.pass << " fail=" << row.fail << "\n";
  if (result.first_failure) {
    text << "first counterexample (n=" << result.first_failure->n << ", trial=" << result.first_failure->trial
         << "): " << result.first_failure->check << "\n";
  }
  text << (result.all_pass() ? "ALL PASS" : "FAILURES FOUND") << "\n";
  emit(result.to_json(), text.str(), as_json, out_path);
  return result.all_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_search(const std::string& form_path, int r, int restarts, double tol, std::uint64_t seed,
               bool as_json, const std::string& out_path) {
  if (r < 1) throw std::invalid_argument("rank must be at least 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");
  const wl::Json input = load_json(form_path);
  const wl::Form form =
      input.contains("form") ? wl::form_from_json(input.at("form")) : wl::form_from_json(input);
  if (form.d() != 3) throw std::invalid_argument("search requires a cubic form");

  const wl::SearchReport report = wl::decompose_numeric(form, r, restarts, tol, seed);
  std::ostringstream text;
  text << "search: r=" << r << " restarts=" << restarts << " tol=" << tol << " seed=" << seed << "\n";
  text << "converged: " << report.converged << "/" << report.restarts << "\n";
  text << "distinct classes: " << report.classes.size() << "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i)
    text << "  class " << i << ": hits=" << report.class_counts[i]
         << " residual=" << report.classes[i].residual << "\n";
  emit(wl::search_report_to_json(report), text.str(), as_json, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure theory of length-(n+2) Waring decompositions of concise cubics"};
  app.require_subcommand(1);

  std::string form_path, points_path, out_path, family, theorem, n_range = "1";
  std::optional<int> n_opt, rank_opt;
  std::uint64_t seed = 0;
  bool seed_given = false, as_json = false;
  int trials = 100, restarts = 50, rank = 0;
  double tol = 1e-18;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "machine-readable report on stdout");
    cmd->add_option("--out", out_path, "write the JSON report to this path");
    cmd->add_option("--seed", seed, "PRNG seed (default: WARINGLAB_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });
  };

  CLI::App* analyze = app.add_subcommand("analyze", "analyze a form or witness file");
  analyze->add_option("form", form_path, "form or witness JSON file")->required();
  analyze->add_option("--points", points_path, "point set JSON file");
  add_common(analyze);

  CLI::App* generate = app.add_subcommand("generate", "generate a certified family witness");
  generate->add_option("--family", family,
                       "binary | conic8 | two-lines | case-ii | case-iii | fermat-plus | penta | kruskal-set")
      ->required();
  generate->add_option("--n", n_opt, "ambient projective dimension");
  generate->add_option("--rank", rank_opt, "Kruskal rank (kruskal-set)");
  add_common(generate);

  CLI::App* suite = app.add_subcommand("suite", "run a randomized verification suite");
  suite->add_option("theorem", theorem, "main | sylvester-bound | terracini | cb | fermat-plus | penta")
      ->required();
  suite->add_option("--n", n_range, "n or lo..hi range (default 1)");
  suite->add_option("--trials", trials, "trials per n (default 100)");
  add_common(suite);

  CLI::App* search = app.add_subcommand("search", "numerical decomposition search");
  search->add_option("form", form_path, "form or witness JSON file")->required();
  search->add_option("--rank", rank, "number of cubes to fit")->required();
  search->add_option("--trials", restarts, "independent restarts (default 50)");
  search->add_option("--tol", tol, "residual tolerance (default 1e-18)");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!seed_given) seed = default_seed();
    if (analyze->parsed()) return cmd_analyze(form_path, points_path, as_json, out_path);
    if (generate->parsed()) return cmd_generate(family, n_opt, rank_opt, seed, as_json, out_path);
    if (suite->parsed()) return cmd_suite(theorem, n_range, trials, seed, as_json, out_path);
    if (search->parsed()) return cmd_search(form_path, rank, restarts, tol, seed, as_json, out_path);
  } catch (const wl::ResampleBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
