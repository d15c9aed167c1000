#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uhitlab/catalog.hpp"
#include "uhitlab/core.hpp"
#include "uhitlab/dimacs.hpp"
#include "uhitlab/factor.hpp"
#include "uhitlab/iso.hpp"
#include "uhitlab/report.hpp"
#include "uhitlab/search.hpp"
#include "uhitlab/singular.hpp"
#include "uhitlab/verify.hpp"

namespace {

using namespace uhitlab;

constexpr int kExitTrue = 0;
constexpr int kExitError = 1;
constexpr int kExitFalse = 2;

ClauseSet load(const std::string& path, bool strict) {
  DimacsResult parsed = read_dimacs_file(path, DimacsOptions{strict});
  for (const std::string& warning : parsed.warnings)
    std::cerr << "warning: " << warning << '\n';
  return parsed.clause_set;
}

void emit(const ClauseSet& f, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    write_dimacs(std::cout, f);
  else
    write_dimacs_file(out_path, f);
}

int run_check(const std::string& path, bool flip_search, bool json,
              bool strict) {
  ClauseSet f = load(path, strict);
  AnalysisOptions options;
  options.run_flip_search = flip_search;
  AnalysisReport report = analyze(f, path, options);
  std::cout << (json ? report_json(report) : report_text(report));
  if (json) std::cout << '\n';
  return report.uhit ? kExitTrue : kExitFalse;
}

int run_verify(const std::string& suite_name, bool json) {
  VerifySuite suite;
  if (suite_name == "paper-core")
    suite = VerifySuite::PaperCore;
  else if (suite_name == "paper-extended")
    suite = VerifySuite::PaperExtended;
  else {
    std::cerr << "unknown suite '" << suite_name
              << "' (expected paper-core or paper-extended)\n";
    return kExitError;
  }
  std::vector<CriterionResult> results =
      run_verification(suite, json ? nullptr : &std::cout);
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const CriterionResult& r : results)
      j.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
    std::cout << j.dump(2) << '\n';
  }
  return all_passed(results) ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis toolkit for unsatisfiable hitting clause-sets"};
  app.require_subcommand(1);

  bool strict = true;
  app.add_flag("!--lenient", strict,
               "deduplicate repeated clauses instead of rejecting them");

  // check
  auto* check = app.add_subcommand("check", "analyze a DIMACS file");
  std::string check_path;
  bool check_flips = false, check_json = false;
  check->add_option("file", check_path)->required();
  check->add_flag("--flipsearch", check_flips, "also run the flip search");
  check->add_flag("--json", check_json);

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string suite_name;
  bool verify_json = false;
  verify->add_option("suite", suite_name, "paper-core or paper-extended")
      ->required();
  verify->add_flag("--json", verify_json);

  // generate
  auto* generate = app.add_subcommand("generate", "construct named instances");
  std::string kind, generate_out;
  int generate_n = 1, generate_m = 1, target_n = 6;
  std::uint64_t seed = 1;
  generate->add_option("kind", kind, "dt2 | dt3 | an | km | random")
      ->required();
  generate->add_option("--n", generate_n, "variables for an");
  generate->add_option("--m", generate_m, "steps for km");
  generate->add_option("--seed", seed, "seed for random");
  generate->add_option("--target-n", target_n, "variable target for random");
  generate->add_option("-o,--out", generate_out, "output path (default stdout)");

  // enumerate
  auto* enumerate = app.add_subcommand(
      "enumerate", "exhaustively enumerate UHIT classes by deficiency");
  int enum_delta = 2, enum_nmax = 3;
  bool enum_nonsingular = false;
  std::string enum_out;
  enumerate->add_option("--delta", enum_delta)->required();
  enumerate->add_option("--nmax", enum_nmax)->required();
  enumerate->add_flag("--nonsingular", enum_nonsingular);
  enumerate->add_option("-o,--out", enum_out, "catalogue path (default stdout)");

  // snf
  auto* snf_cmd = app.add_subcommand("snf", "singular DP normal form");
  std::string snf_path, snf_out;
  snf_cmd->add_option("file", snf_path)->required();
  snf_cmd->add_option("-o,--out", snf_out);

  // factors
  auto* factors_cmd = app.add_subcommand("factors", "list clause-factors");
  std::string factors_path;
  bool factors_all = false;
  factors_cmd->add_option("file", factors_path)->required();
  factors_cmd->add_flag("--all", factors_all, "include trivial factors");

  // flipsearch
  auto* flips = app.add_subcommand("flipsearch",
                                   "search the flip graph for reducibility");
  std::string flips_path, checkpoint_path;
  bool resume = false;
  SearchBounds bounds;
  flips->add_option("file", flips_path)->required();
  flips->add_option("--depth", bounds.depth);
  flips->add_option("--breadth", bounds.breadth);
  flips->add_option("--checkpoint", checkpoint_path,
                    "write the frontier here when the bounds interrupt");
  flips->add_flag("--resume", resume, "continue from the checkpoint file");

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "isomorphism of two files");
  std::string iso_a, iso_b;
  iso_cmd->add_option("fileA", iso_a)->required();
  iso_cmd->add_option("fileB", iso_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;  // help/version exit cleanly
  }

  try {
    if (*check) return run_check(check_path, check_flips, check_json, strict);
    if (*verify) return run_verify(suite_name, verify_json);
    if (*generate) {
      ClauseSet f;
      if (kind == "dt2")
        f = dt2();
      else if (kind == "dt3")
        f = dt3();
      else if (kind == "an")
        f = full_clause_set(generate_n);
      else if (kind == "km")
        f = construct_km(generate_m);
      else if (kind == "random")
        f = random_uhit(seed, target_n);
      else {
        std::cerr << "unknown kind '" << kind << "'\n";
        return kExitError;
      }
      emit(f, generate_out);
      return kExitTrue;
    }
    if (*enumerate) {
      EnumerationTask task{enum_nmax, enum_delta, enum_nonsingular, true};
      std::ostream* out = &std::cout;
      std::ofstream file;
      if (!enum_out.empty() && enum_out != "-") {
        file.open(enum_out);
        if (!file) {
          std::cerr << "cannot open " << enum_out << '\n';
          return kExitError;
        }
        out = &file;
      }
      write_catalog_header(*out);
      std::string provenance = "enumerate(delta=" + std::to_string(enum_delta) +
                               ",nmax=" + std::to_string(enum_nmax) +
                               (enum_nonsingular ? ",nonsingular" : "") + ")";
      enumerate_uhit(task, [&](const ClauseSet& f) {
        write_catalog_entry(*out, make_catalog_entry(f, provenance));
      });
      return kExitTrue;
    }
    if (*snf_cmd) {
      ClauseSet f = load(snf_path, strict);
      NormalFormResult result = uhitlab::snf(f);
      std::cerr << "eliminated " << result.singularity_index
                << " singular variable(s)\n";
      emit(result.normal_form, snf_out);
      return kExitTrue;
    }
    if (*factors_cmd) {
      ClauseSet f = load(factors_path, strict);
      std::vector<ClauseFactor> list = enumerate_factors(f, !factors_all);
      for (const ClauseFactor& factor : list)
        std::cout << (factor.trivial ? "trivial    " : "nontrivial ")
                  << encode_clause_set(factor.subset) << "  intersection "
                  << factor.intersection.to_string() << '\n';
      std::cout << list.size() << " factor(s)\n";
      return kExitTrue;
    }
    if (*flips) {
      ClauseSet f = load(flips_path, strict);
      FlipPath path;
      if (resume && !checkpoint_path.empty())
        path = nfs_resume(checkpoint_path, bounds);
      else if (!checkpoint_path.empty())
        path = nfs_search_with_checkpoint(f, bounds, checkpoint_path);
      else
        path = nfs_search(f, bounds);
      if (path.outcome == FlipOutcome::FoundReducible) {
        std::cout << "reducible after " << path.steps.size() << " flip(s)\n";
        for (const FlipStep& step : path.steps)
          std::cout << "  flip -> " << step.result.to_string() << '\n';
        return kExitTrue;
      }
      std::cout << "inconclusive: explored to depth " << path.depth_explored
                << '\n';
      return kExitFalse;
    }
    if (*iso_cmd) {
      ClauseSet a = load(iso_a, strict);
      ClauseSet b = load(iso_b, strict);
      bool same = is_isomorphic(a, b);
      std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
      return same ? kExitTrue : kExitFalse;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
