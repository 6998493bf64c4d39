#pragma once

#include "labshift/bigint.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace labshift {

// Numeration base: an odd function k on Z with k(n+1) > b * sum_{i=0}^{n} k(i)
// and k(1) >= b+1.  The growth condition makes the value brackets
//   (b-1)*k(n) <= b*|t| <= (b+1)*k(n)
// pairwise disjoint across n, which is what the greedy recognizer relies on.
// Instances are immutable; the power-value cache extends on demand and is safe
// for concurrent readers.
class ExpandingSystem {
 public:
  // "strict": b=5, digit base 7 (the default elsewhere).
  // "paper":  b=3, digit base 4 (density work only).
  static ExpandingSystem preset(const std::string& name);
  static ExpandingSystem power(int b, int base, int n_max = 64);
  // k_values[i] = k(i+1).  Rejected with a growth-violation error naming the
  // first failing index, or a k(1) error, before any use.
  static ExpandingSystem table(int b, const std::vector<Int>& k_values);

  int b() const { return b_; }
  int base() const { return base_; }  // 0 for table systems
  const std::string& name() const { return name_; }

  Int k(long long n) const;      // odd: k(-n) = -k(n)
  Int k_abs(long long n) const;  // k(|n|), n != 0
  Int sum_k(long long n) const;  // sum_{i=1..n} k(i), n >= 0
  long long table_limit() const; // table systems: largest defined index; 0 = unbounded

  // Largest n >= 1 with (b-1)*k(n) <= b*h, or 0 when h is below the first
  // bracket.  Exponential probe then binary search on the cached values.
  long long top_digit(const Int& h) const;

 private:
  ExpandingSystem() = default;
  void validate(long long depth) const;

  int b_ = 0;
  int base_ = 0;
  std::string name_;
  std::vector<Int> table_;  // table systems only
  struct Cache {
    std::mutex mu;
    std::vector<Int> pow;   // pow[i] = base^(i+1)
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// digits j_1 ... j_r with |j_1| > ... > |j_r| > 0 and value = sum k(j_i).
struct Expansion {
  std::vector<long long> digits;
  Int value;
  int length() const { return static_cast<int>(digits.size()); }
};

// Greedy recognizer.  Each step locates the unique bracket digit for the
// residual; no backtracking is needed because the brackets are disjoint.
std::optional<Expansion> expand(const ExpandingSystem& sys, const Int& t);
bool ip_contains(const ExpandingSystem& sys, const Int& t);
bool ip_contains_positive(const ExpandingSystem& sys, const Int& t);

struct Truncation {
  Expansion prefix;  // digits j_1 ... j_rt
  Int residual;      // t minus the prefix value
};
Truncation truncate(const ExpandingSystem& sys, const Expansion& e, int r_tilde);

// Removing digit i* lands back in IP(k); adding the same value again leaves it.
struct NeighborReport {
  int digit_index = 0;  // 1-based
  Int removed;
  bool removed_in_ip = false;
  Int added;
  bool added_in_ip = false;
  bool verified() const { return removed_in_ip && !added_in_ip; }
};
NeighborReport neighbor_exclusion(const ExpandingSystem& sys, const Expansion& e, int i_star);

enum class IpMode { full, positive, restricted };

// Finite prefix of an absolute increasing sequence of nonzero digits.
struct RestrictedSpec {
  std::vector<long long> s;
  long long depth = 0;
};

struct IpInterval {
  std::vector<Int> values;  // ascending
  bool complete = true;     // restricted mode: false when the interval outruns the depth
  Int guaranteed_radius;    // restricted mode: reach implied by the bracket bounds
};
IpInterval ip_in_interval(const ExpandingSystem& sys, const Int& lo, const Int& hi,
                          IpMode mode, const RestrictedSpec* spec = nullptr);

Int ip_count_positive(const ExpandingSystem& sys, const Int& n);  // |IP(k) ∩ [1,n]|

struct DensityRow {
  Int n;
  Int count;
  double ratio = 0.0;  // display only
  double bound = 0.0;  // display only
  bool within_bound = false;  // exact rational-exponent test
};
std::vector<DensityRow> density_profile(const ExpandingSystem& sys, const std::vector<Int>& ns);

// p/q strictly below log_base(3); used for the exact density bound test
// count^q <= (3n)^p which implies count <= (3n)^{log_base 3}.
std::pair<long long, long long> density_exponent(int base);

}  // namespace labshift
