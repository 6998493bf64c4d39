#pragma once

#include "labshift/label.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace labshift {

// Ordinals below w^w in Cantor normal form: strictly decreasing exponents,
// positive coefficients.  Enough for every height the constructions reach;
// anything larger stays a declared symbolic leaf.
struct OrdinalCNF {
  std::vector<std::pair<int, long long>> terms;

  static OrdinalCNF finite(long long n);
  static OrdinalCNF omega();
  static OrdinalCNF single(int exp, long long coeff);

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const;
  long long finite_value() const;  // throws unless finite

  OrdinalCNF plus(const OrdinalCNF& o) const;         // ordinal addition
  OrdinalCNF natural_plus(const OrdinalCNF& o) const; // coefficientwise
  OrdinalCNF plus_finite(long long n) const;

  // CNF order coincides with lexicographic order on the term lists
  auto operator<=>(const OrdinalCNF&) const = default;

  std::string str() const;  // "0", "5", "w", "w*2+3", "w^2*3+w+4"
};

// Drops the maximal members: everything that still has room to grow inside
// the label.  Empty exactly for the empty and the zero label.
Label z_lab(const Label& m);

// Iterated descent of a finite label down to the zero label; the height is
// one past the number of steps.
struct HeightReport {
  long long value = 0;
  std::vector<Label> chain;  // starts at the label, ends at the zero label
  std::string detail;
};
HeightReport height(const Label& m);

// The same stage computed on the orbit-closure side: ranks every member of
// theta by well-founded recursion over the punctured closures.
struct HeightStarReport {
  long long value = 0;
  long long theta_size = 0;
  std::string detail;
};
HeightStarReport height_star(const Label& m);

// Height composition over disjoint unions and direct sums without building
// the combined label.  Stages add naturally across a direct sum because the
// descent runs its factors in parallel; a disjoint union descends at the
// speed of its slowest part.
struct HeightExpr {
  enum class Kind { leaf, symbolic, disjoint_union, direct_sum };
  Kind kind = Kind::leaf;
  Label label;         // leaf
  OrdinalCNF declared; // symbolic stage
  std::string symbol;
  std::vector<HeightExpr> kids;

  static HeightExpr of(const Label& l);
  static HeightExpr symbolic(const OrdinalCNF& stage, const std::string& name);
  static HeightExpr disjoint(std::vector<HeightExpr> kids);
  static HeightExpr sum(std::vector<HeightExpr> kids);
};

struct CompositeHeight {
  OrdinalCNF stage;   // first descent step landing on the zero label
  OrdinalCNF height;  // stage + 1
  std::string derivation;
};
CompositeHeight composite_height(const HeightExpr& e);

}  // namespace labshift
