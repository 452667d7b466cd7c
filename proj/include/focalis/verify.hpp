#pragma once

#include <string>
#include <vector>

#include "focalis/gallery.hpp"
#include "focalis/report.hpp"

namespace focalis {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  Json evidence;
  bool passed() const;
};

inline const std::vector<std::string> kSuites = {"segre", "taxonomy", "invariants"};

/// Throws UsageError for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = 0, int samples = 25);
std::string suite_table(const SuiteResult& r);

/// The fields compared by the invariance checks.
struct Fingerprint {
  std::string cls, sub, segre, dev_tag;
  int conic_rank = -1;
  std::vector<std::string> component_kinds;  // sorted
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string str() const;
};

Fingerprint fingerprint(const AnalysisReport& r);

Matrix<Rat> fixed_pgl5();
Matrix<Rat> fixed_gl3();
std::array<Rat, 6> fixed_affine();

/// x^T Q x against the 5x5 determinant for `per_sample` random x at each sample.
Check focal_identity_check(const std::string& name, const PlaneFrame& f, int samples, std::uint64_t seed,
                           int per_sample = 10);

struct OracleStats {
  int agree = 0;
  int total = 0;
  int members = 0;  // points found second-order focal
};

/// second_order_criterion against membership in the second-order locus, on
/// `per_line` random points plus the exact roots of each focal line.
OracleStats oracle_equivalence(const GalleryItem& it, int per_line, std::uint64_t seed, int samples = 5);

}  // namespace focalis
