#pragma once

#include "labshift/nvector.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace labshift {

// Pairwise incomparable vectors; insert drops dominated entries on both sides.
class Antichain {
 public:
  Antichain() = default;
  explicit Antichain(const std::vector<NVector>& gens);

  bool insert(const NVector& m);          // false if dominated
  bool covers(const NVector& m) const;    // some element >= m
  bool empty() const { return elems_.empty(); }
  size_t size() const { return elems_.size(); }
  const std::set<NVector>& elems() const { return elems_; }
  bool operator==(const Antichain& o) const { return elems_ == o.elems_; }
  bool operator<(const Antichain& o) const;  // canonical order for sets of labels

  std::vector<NVector> closure() const;  // every member of the generated ideal
  NVector roof() const;                  // join of the elements

 private:
  std::set<NVector> elems_;
};

// Bijection between two coordinate sets, with an inverse; finite maps extend
// by the identity.
struct Relabeling {
  std::function<int(int)> fwd, inv;
  std::function<bool(int)> in_l1, in_l2;
  std::string text;

  static Relabeling identity();
  static Relabeling finite_map(const std::vector<std::pair<int, int>>& pairs);
  // increasing linear bijection [1..len] -> [lo2..lo2+len-1]
  static Relabeling block(int len, int lo2);
};

class Label;

// Constructive data carried by named example labels so that the semi-decidable
// property checks can verify rather than guess.
struct EscapeSequence {
  std::string name;
  std::function<NVector(int)> r;            // i >= 1, supports escaping upward
  std::shared_ptr<Label> expected_limit;    // may be null
  std::optional<NVector> matching_r;        // expected limit equals M - matching_r
  bool limit_infinite = false;
};

struct ZooInfo {
  std::string name;
  std::optional<bool> finite_type, finitary, simple, recurrent, strongly_recurrent;
  std::optional<bool> flat, sublattice;
  std::optional<int> norm_bound;
  std::string notes;
  std::function<NVector(int)> recurrence_witness;  // scale -> candidate r
  std::function<NVector(int)> chain;               // strictly increasing members
  std::vector<EscapeSequence> sequences;
};

class LabelImpl;

// Hereditary set of N-vectors.  Immutable value; all operations are pure and
// window enumerations are memoized per underlying node.
class Label {
 public:
  Label();  // the empty label

  static Label empty_label();
  static Label zero_label();
  static Label finite(Antichain a);
  static Label generated(const std::vector<NVector>& gens);
  static Label maximum();  // every N-vector; the fixed point of the action

  struct OracleSpec {
    std::string name;
    std::function<bool(const NVector&)> member;  // must be hereditary
    std::function<int(int)> roof;                // multiplicity bound per coordinate
    std::function<bool(int)> supports;           // coordinate may carry support
  };
  // declared roof and support universe are mandatory: they keep every window
  // enumeration total
  static Label oracle(OracleSpec spec);

  bool contains(const NVector& m) const;
  int roof_bound(int l) const;
  bool may_support(int l) const;
  bool is_finite() const;
  const Antichain* antichain() const;  // null unless finite
  bool is_maximum() const;
  std::string describe() const;

  std::shared_ptr<const ZooInfo> zoo() const { return zoo_; }
  Label with_zoo(std::shared_ptr<const ZooInfo> z) const;

  // members inside B_N (supports in [1,N], multiplicities <= N), canonical
  // order.  Breadth-first unit growth from 0; cost tracks the window size.
  const std::vector<NVector>& window(int n) const;
  NVector window_roof(int n) const;

  Label minus(const NVector& r) const;
  Label meet_interval(int l_star) const;
  Label oplus(const Label& o) const;
  Label union_with(const Label& o) const;
  Label intersect(const Label& o) const;
  Label gamow(const Relabeling& tau) const;

 private:
  explicit Label(std::shared_ptr<const LabelImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const LabelImpl> impl_;
  std::shared_ptr<const ZooInfo> zoo_;
};

bool window_equal(const Label& a, const Label& b, int n);

// d(M1,M2) as a dyadic exponent: d = 2^{-exponent}; when agreement persists to
// n_max only the bound "<= 2^{-n_max}" is known.
struct MetricResult {
  bool bounded_only = false;
  int exponent = 0;
  std::string str() const;
};
MetricResult metric(const Label& a, const Label& b, int n_max);

struct LimitResult {
  std::vector<NVector> limsup_window, liminf_window;
  bool converged = false;  // no membership flip inside the final margin
  int margin = 0;
  int last_flip = 0;                // 0 when constant over the whole horizon
  std::vector<NVector> flipping;    // members still unstable inside the margin
};
// Windows of seq(1..horizon) at B_N.  Margin = max(2, horizon/5): anything
// still flipping there makes the verdict inconclusive rather than guessed.
LimitResult limit_window(const std::function<Label(int)>& seq, int horizon, int n);

// {M - r : r in M} plus the empty label; exact orbit closure for finite
// labels.  The maximum label is its own fixed point.
std::vector<Label> theta(const Label& m);

enum class PropertyKind {
  finite_type,
  finitary,
  simple_kind,
  recurrent,
  strongly_recurrent,
  flat,
  sublattice,
};
PropertyKind property_kind_from(const std::string& s);
std::string property_kind_name(PropertyKind k);

enum class Verdict { holds, fails, inconclusive };
std::string verdict_name(Verdict v);

struct PropertyReport {
  PropertyKind kind{};
  Verdict verdict = Verdict::inconclusive;
  bool exact = false;  // verdict independent of the window
  int window = 0;
  std::string detail;
  std::optional<NVector> witness;
  std::optional<std::pair<NVector, NVector>> witness_pair;
};

struct CheckParams {
  int n = 8;              // window
  int horizon = 40;       // limit evaluations
  int search_margin = 12; // extra coordinates for witness searches
  std::vector<int> flat_set;  // optional restriction for the flat check
};

// Window-honest property verdicts; never stronger than the window supports.
PropertyReport property_check(const Label& m, PropertyKind kind, const CheckParams& p);

}  // namespace labshift
