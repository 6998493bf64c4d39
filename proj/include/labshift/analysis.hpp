#pragma once

#include "labshift/bigint.hpp"
#include "labshift/expanding.hpp"
#include "labshift/label.hpp"
#include "labshift/partition.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace labshift {

// Membership oracle for a set of integers, decidable on any bounded interval.
struct IntSetOracle {
  std::string name;
  std::function<bool(const Int&)> member;
};

IntSetOracle evens_set();
IntSetOracle odds_set();
// nonnegative evens together with negative odds
IntSetOracle ruppert_set();
IntSetOracle explicit_set(const std::vector<Int>& values);
// the time set of a label under the numeration
IntSetOracle time_set(const ExpandingSystem& sys, const PartitionScheme& part,
                      const Label& m, bool plus = false);

// One translation-finiteness candidate.  Oracle mode scans shifts across the
// whole radius; certified mode carries explicit b-values and shifts that are
// verified sum by sum, for sets too sparse to scan.
struct TFCandidate {
  std::string name;
  IntSetOracle b;
  std::vector<Int> b_values;  // certified mode
  std::vector<Int> shifts;    // certified mode
};

struct TFRow {
  long long n = 0;
  long long survivors = 0;
};

struct TFReport {
  std::string verdict;  // tf-on-window | not-tf-with-witness | inconclusive
  std::string witness_name;
  std::vector<Int> witness_b;  // clipped to the largest tested block
  Int radius;
  long long threshold = 0;
  long long n_used = 0;
  std::vector<std::pair<std::string, std::vector<TFRow>>> table;
  std::string detail;
  bool refuted() const { return verdict == "not-tf-with-witness"; }
};

// A set is refuted when some candidate block keeps at least threshold-many
// admissible shifts at every tested block size.  Block sizes double up to
// radius/8 so the shift pool always dwarfs the block.
TFReport tf_check(const IntSetOracle& a, const Int& radius,
                  const std::vector<TFCandidate>& candidates,
                  long long threshold = 25);

// A's nonnegative and nonpositive parts plus its self-differences at the
// three smallest positive members.
std::vector<TFCandidate> auto_candidates(const IntSetOracle& a, long long radius);

// Certified refutation data for a label with a member of two or more digits:
// block times for one coordinate shift into the time set along every block
// time of the other.
TFCandidate label_pair_candidate(const ExpandingSystem& sys, const PartitionScheme& part,
                                 const NVector& pair_member, long long count);

struct SubsetWitness {
  std::vector<NVector> a;  // the subset cut out
  NVector r;
};

struct IndependenceCertificate {
  bool ok = false;
  std::vector<NVector> f;
  std::vector<SubsetWitness> witnesses;  // subsets in bitmask order
  std::vector<NVector> failing_a;        // first subset with no witness
  std::string detail;
};

// For every subset A of f, searches r (norm-then-lex over the label window up
// to search_bound, skipping norms above max_norm when that is >= 0) with
// (label - r) meeting f exactly in A; every stored witness is re-validated
// membership by membership.
IndependenceCertificate independence_certificate(const Label& m,
                                                 const std::vector<NVector>& f,
                                                 int search_bound,
                                                 int max_norm = -1);

// Flat route to independence: when every restriction of the window roof to a
// subset of coords stays a member, the roof restrictions to complements are
// witnesses for the unit vectors on coords.
IndependenceCertificate flat_independence(const Label& m, const std::vector<int>& coords,
                                          int n);

struct DensityReport {
  std::vector<DensityRow> rows;
  std::string note;
};
DensityReport density_report(const ExpandingSystem& sys, const std::vector<Int>& ns);

}  // namespace labshift
