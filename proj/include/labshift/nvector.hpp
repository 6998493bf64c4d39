#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace labshift {

// Finitely supported function N -> Z_+, stored as sorted (index, multiplicity)
// pairs with every multiplicity >= 1.
class NVector {
 public:
  NVector() = default;
  explicit NVector(std::vector<std::pair<int, int>> entries);  // normalizes

  static NVector zero() { return {}; }
  static NVector unit(int l) { return NVector({{l, 1}}); }
  static NVector scaled_unit(int l, int c) { return NVector({{l, c}}); }
  static NVector indicator(const std::vector<int>& ls);

  const std::vector<std::pair<int, int>>& entries() const { return e_; }
  bool is_zero() const { return e_.empty(); }
  int at(int l) const;
  int norm() const;      // total multiplicity
  int size() const;      // support size
  int max_supp() const;  // 0 for the zero vector
  int min_supp() const;
  std::vector<int> support() const;

  bool leq(const NVector& o) const;  // pointwise
  NVector plus(const NVector& o) const;
  std::optional<NVector> minus(const NVector& o) const;  // pointwise, partial
  NVector join(const NVector& o) const;
  NVector meet(const NVector& o) const;
  NVector restrict_to(const std::vector<int>& keep) const;
  NVector restrict_le(int l_max) const;  // drop coordinates above l_max
  NVector add_unit(int l) const;
  std::optional<NVector> drop_unit(int l) const;

  // index-lexicographic: compare multiplicities coordinate by coordinate
  std::strong_ordering operator<=>(const NVector& o) const;
  bool operator==(const NVector& o) const { return e_ == o.e_; }

  std::string str() const;  // e.g. "x(1)+2x(3)", "0"

 private:
  std::vector<std::pair<int, int>> e_;
};

// canonical enumeration order: norm first; equal norms favor weight on low
// coordinates, so x(1) precedes x(2)
bool norm_lex_less(const NVector& a, const NVector& b);

}  // namespace labshift
