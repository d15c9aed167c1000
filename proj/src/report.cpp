#include "uhitlab/report.hpp"

#include <sstream>

#include <json.hpp>

#include "uhitlab/catalog.hpp"
#include "uhitlab/core.hpp"
#include "uhitlab/iso.hpp"

namespace uhitlab {

AnalysisReport analyze(const ClauseSet& f, const std::string& input_id,
                       const AnalysisOptions& options) {
  AnalysisReport report;
  report.input_id = input_id;
  Measures m = measures(f);
  report.n = m.n;
  report.c = m.c;
  report.delta = m.delta;
  report.hitting = is_hitting(f);
  report.uhit = report.hitting && dyadic_sum(f).is_one();
  report.dyadic = dyadic_sum(f).to_string();
  report.profile = singularity_profile(f);
  report.fs_pair_count = static_cast<int>(find_fs_pairs(f).size());
  report.nfs_pair_count = static_cast<int>(find_nfs_pairs(f).size());
  if (report.uhit) {
    NormalFormResult nf = snf(f);
    report.snf_canonical =
        encode_clause_set(canonical_form(nf.normal_form).canonical);
    report.singularity_index = nf.singularity_index;
    try {
      std::vector<ClauseFactor> factors = enumerate_factors(f, true);
      report.factors_computed = true;
      report.nontrivial_factor_count = static_cast<int>(factors.size());
      for (const ClauseFactor& factor : factors) {
        if (static_cast<int>(report.factor_witnesses.size()) >=
            options.factor_witness_cap)
          break;
        report.factor_witnesses.push_back(encode_clause_set(factor.subset));
      }
      report.irreducible = factors.empty();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
      // Past the enumeration bound the factor fields stay unavailable.
    }
    if (options.run_flip_search) {
      FlipPath path = nfs_search(f, options.bounds);
      report.flip_outcome = path.outcome == FlipOutcome::FoundReducible
                                ? "reducible"
                                : "exhausted";
      report.flip_depth = static_cast<int>(path.steps.size());
    }
  }
  return report;
}

std::string report_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << "input:       " << report.input_id << '\n'
     << "measures:    n=" << report.n << " c=" << report.c
     << " delta=" << report.delta << '\n'
     << "hitting:     " << (report.hitting ? "yes" : "no") << '\n'
     << "uhit:        " << (report.uhit ? "yes" : "no") << '\n'
     << "dyadic sum:  " << report.dyadic << '\n'
     << "singular:    nsv=" << report.profile.nsv
     << " nosv=" << report.profile.nosv << " nnosv=" << report.profile.nnosv
     << '\n';
  if (report.uhit) {
    os << "snf:         " << report.snf_canonical
       << " (index " << report.singularity_index << ")\n";
    if (report.factors_computed) {
      os << "factors:     " << report.nontrivial_factor_count
         << " nontrivial";
      if (!report.factor_witnesses.empty()) {
        os << " [";
        for (std::size_t i = 0; i < report.factor_witnesses.size(); ++i)
          os << (i ? " " : "") << report.factor_witnesses[i];
        os << "]";
      }
      os << '\n'
         << "irreducible: " << (report.irreducible ? "yes" : "no") << '\n';
    } else {
      os << "factors:     skipped (above the enumeration bound)\n";
    }
  }
  os << "fs-pairs:    " << report.fs_pair_count << '\n'
     << "nfs-pairs:   " << report.nfs_pair_count << '\n';
  if (report.flip_outcome)
    os << "flip search: " << *report.flip_outcome << " (depth "
       << report.flip_depth << ")\n";
  return os.str();
}

std::string report_json(const AnalysisReport& report) {
  nlohmann::json j;
  j["input"] = report.input_id;
  j["n"] = report.n;
  j["c"] = report.c;
  j["delta"] = report.delta;
  j["hitting"] = report.hitting;
  j["uhit"] = report.uhit;
  j["dyadic_sum"] = report.dyadic;
  j["nsv"] = report.profile.nsv;
  j["nosv"] = report.profile.nosv;
  j["nnosv"] = report.profile.nnosv;
  if (report.uhit) {
    j["snf"] = report.snf_canonical;
    j["singularity_index"] = report.singularity_index;
    if (report.factors_computed) {
      j["nontrivial_factors"] = report.nontrivial_factor_count;
      j["factor_witnesses"] = report.factor_witnesses;
      j["irreducible"] = report.irreducible;
    }
  }
  j["fs_pairs"] = report.fs_pair_count;
  j["nfs_pairs"] = report.nfs_pair_count;
  if (report.flip_outcome) {
    j["flip_outcome"] = *report.flip_outcome;
    j["flip_depth"] = report.flip_depth;
  }
  return j.dump(2);
}

}  // namespace uhitlab
