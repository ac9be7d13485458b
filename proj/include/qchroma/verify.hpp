#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "qchroma/coloring.hpp"
#include "qchroma/composition.hpp"
#include "qchroma/graph.hpp"

namespace qchroma {

// Outcome of one checker invocation. A failing verdict always carries a
// witness precise enough to re-run the single offending case.
struct Verdict {
  std::string claim;
  std::string graph;   // graph key, or "n=..." for graph-free claims
  std::string params;  // offending or checked beta/alpha/forest, if any
  bool pass = true;
  std::string witness;  // failure description with both sides
  long long millis = 0;
};

// Theorem checkers (fatal when they fail).
Verdict check_main_formula(const IntervalGraph& g, const Composition& beta);
Verdict check_mahonian(const IntervalGraph& g);
Verdict check_main_identity(const IntervalGraph& g);
Verdict check_phi_section(const IntervalGraph& g);
Verdict check_wt_coinv(const IntervalGraph& g);
Verdict check_chrom_forests(const IntervalGraph& g);
Verdict check_llt_fundamental(const IntervalGraph& g);
Verdict check_foata(const IntervalGraph& g);
Verdict check_symmetry(int n);
Verdict check_kn_factorial(int n);
Verdict check_psi_gate(int n);
Verdict check_athanasiadis(const IntervalGraph& dyck);
Verdict check_non_interval_counterexample();

// Conjecture checkers (reported, never fatal).
Verdict check_interval_conjecture(const IntervalGraph& g);
Verdict check_forest_conjecture(const IntervalGraph& g, const Word& tau);
Verdict check_dyck_alpha_conjecture(const IntervalGraph& dyck, const Composition& alpha);

struct SweepOptions {
  int n_lo = 0;  // 0 = claim default
  int n_hi = 0;
  int jobs = 1;
  int sample = 0;  // per-n unit sample; 0 = exhaustive
  std::uint64_t seed = 12345;
};

struct SweepSummary {
  std::string claim;
  bool fatal = true;
  int checks = 0;
  int failures = 0;
  long long millis = 0;
  std::vector<Verdict> failed;  // deterministic enumeration order
};

struct ClaimInfo {
  std::string id;
  std::string description;
  bool fatal;  // conjectures are non-fatal
  int default_lo;
  int default_hi;
};

const std::vector<ClaimInfo>& claim_registry();
SweepSummary sweep(const std::string& claim, const SweepOptions& opt = {});

}  // namespace qchroma
