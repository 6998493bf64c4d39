#pragma once

#include "labshift/bigint.hpp"
#include "labshift/expanding.hpp"
#include "labshift/label.hpp"
#include "labshift/nvector.hpp"
#include "labshift/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace labshift {

// Digit count of the expansion per partition block, with multiplicity.
NVector length_vector(const PartitionScheme& part, const Expansion& e);
// Empty when t is not an expanding time.
std::optional<NVector> length_vector(const ExpandingSystem& sys,
                                     const PartitionScheme& part, const Int& t);

// Bits of the point at positions shift-n .. shift+n.  bits[p+n] is the bit at
// shift+p.  In plus mode only times whose expansion uses positive digits
// count.
struct SubshiftWindow {
  long long n = 0;
  Int shift;
  bool plus = false;
  std::vector<bool> bits;
  std::string source;

  bool bit(long long p) const;                  // p in [-n, n]
  std::vector<long long> one_positions() const; // relative to shift
  // '#'/'.' row; a second row marks the absolute origin when visible
  std::string ascii() const;
};

SubshiftWindow point_window(const ExpandingSystem& sys, const PartitionScheme& part,
                            const Label& m, long long n, const Int& shift = Int(0),
                            bool plus = false);

// Smallest |p| where the two windows differ, or min(n)+1 when they agree.
long long first_disagreement(const SubshiftWindow& a, const SubshiftWindow& b);

// What the point sees at one time: recognition, the length vector, membership.
struct SymZerReport {
  Int t;
  bool recognized = false;
  NVector r;
  bool positive_digits = false;
  bool in_a = false;      // t lies in the time set of the label
  bool in_a_plus = false; // and its digits are all positive
  std::string detail;
};
SymZerReport sym_zer_classify(const ExpandingSystem& sys, const PartitionScheme& part,
                              const Label& m, const Int& t);

// Smallest nonnegative expanding time whose length vector is m, every digit
// position strictly above floor_pos.  Digits come out largest first; the top
// one is positive, the rest negative, which the recognizer reproduces.
struct TimePoint {
  Int t;
  std::vector<long long> digits;
  long long last_pos() const;  // smallest position magnitude; 0 when empty
};
TimePoint time_for(const ExpandingSystem& sys, const PartitionScheme& part,
                   const NVector& m, long long floor_pos = 0);

// Translation identity at t: the time set inside [t-n, t+n] equals t plus the
// time set of (label - r(t)) inside [-n, n].  Applicable once 2n is at most
// the k-value of t's smallest digit; t = 0 is vacuously safe.
struct LocalityReport {
  bool applicable = false;
  bool ok = false;
  Int t;
  NVector r_of_t;
  Int threshold;  // k at the smallest digit magnitude; 0 when t = 0
  long long n = 0;
  std::vector<Int> lhs;  // absolute times in [t-n, t+n]
  std::vector<Int> rhs;  // t + relative times from the subtracted label
  std::string detail;
};
LocalityReport locality_check(const ExpandingSystem& sys, const PartitionScheme& part,
                              const Label& m, const Int& t, long long n);

// Shifted windows of the point converge to the point of (label - r) along
// times with length vector r, once the smallest digit value clears 2n.
struct AsymptoticRow {
  Int t;
  long long last_pos = 0;
  Int last_value;
  bool guaranteed = false;  // last_value > 2n
  long long agreement = 0;  // largest radius of bitwise agreement, -1 at center
  bool ok = false;
};
struct AsymptoticReport {
  bool ok = false;
  NVector r;
  std::vector<AsymptoticRow> rows;
  std::string detail;
};
AsymptoticReport asymptotic_check(const ExpandingSystem& sys, const PartitionScheme& part,
                                  const Label& m, const NVector& r, long long n,
                                  int steps);

// Times where the two points provably disagree forever: the separating vector
// is a member of one label only, so the first point shows 1 while the other
// is blank on a guaranteed radius.
struct EscapeWitness {
  bool found = false;
  bool swapped = false;  // separator belongs to the second label only
  NVector r;
  std::vector<Int> times;
  long long check_radius = 0;
  bool verified = false;
  std::string detail;
};
EscapeWitness nonasymptotic_witness(const ExpandingSystem& sys, const PartitionScheme& part,
                                    const Label& m1, const Label& m2, long long n,
                                    int count);

// Window distinguishability made pointwise: labels differing inside B_n give
// points differing inside [-radius, radius], exhibited at one position.
struct InjectivityReport {
  Int radius;        // max time over the window universe, attained at n*x(l)
  NVector separator; // least window member held by exactly one label
  Int position;      // its time; |position| <= radius
  bool bit1 = false;
  bool bit2 = false;
  bool differ = false;
  std::string detail;
};
InjectivityReport injectivity_radius(const ExpandingSystem& sys, const PartitionScheme& part,
                                     const Label& m1, const Label& m2, long long n);

}  // namespace labshift
