#include "labshift/nvector.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace labshift {

NVector::NVector(std::vector<std::pair<int, int>> entries) {
  std::map<int, int> acc;
  for (auto [l, c] : entries) {
    if (l < 1) throw std::invalid_argument("coordinate indices start at 1");
    if (c < 0) throw std::invalid_argument("negative multiplicity");
    if (c > 0) acc[l] += c;
  }
  e_.assign(acc.begin(), acc.end());
}

NVector NVector::indicator(const std::vector<int>& ls) {
  std::vector<std::pair<int, int>> v;
  v.reserve(ls.size());
  for (int l : ls) v.push_back({l, 1});
  return NVector(std::move(v));
}

int NVector::at(int l) const {
  for (auto [i, c] : e_)
    if (i == l) return c;
  return 0;
}

int NVector::norm() const {
  int n = 0;
  for (auto [i, c] : e_) n += c;
  return n;
}

int NVector::size() const { return static_cast<int>(e_.size()); }

int NVector::max_supp() const { return e_.empty() ? 0 : e_.back().first; }

int NVector::min_supp() const { return e_.empty() ? 0 : e_.front().first; }

std::vector<int> NVector::support() const {
  std::vector<int> s;
  s.reserve(e_.size());
  for (auto [i, c] : e_) s.push_back(i);
  return s;
}

bool NVector::leq(const NVector& o) const {
  for (auto [i, c] : e_)
    if (c > o.at(i)) return false;
  return true;
}

NVector NVector::plus(const NVector& o) const {
  auto v = e_;
  v.insert(v.end(), o.e_.begin(), o.e_.end());
  return NVector(std::move(v));
}

std::optional<NVector> NVector::minus(const NVector& o) const {
  std::vector<std::pair<int, int>> v;
  for (auto [i, c] : e_) {
    int d = c - o.at(i);
    if (d < 0) return std::nullopt;
    if (d > 0) v.push_back({i, d});
  }
  for (auto [i, c] : o.e_)
    if (at(i) < c) return std::nullopt;
  return NVector(std::move(v));
}

NVector NVector::join(const NVector& o) const {
  std::vector<std::pair<int, int>> v;
  for (auto [i, c] : e_) v.push_back({i, std::max(c, o.at(i))});
  for (auto [i, c] : o.e_)
    if (at(i) == 0) v.push_back({i, c});
  return NVector(std::move(v));
}

NVector NVector::meet(const NVector& o) const {
  std::vector<std::pair<int, int>> v;
  for (auto [i, c] : e_) {
    int m = std::min(c, o.at(i));
    if (m > 0) v.push_back({i, m});
  }
  return NVector(std::move(v));
}

NVector NVector::restrict_to(const std::vector<int>& keep) const {
  std::vector<std::pair<int, int>> v;
  for (auto [i, c] : e_)
    if (std::find(keep.begin(), keep.end(), i) != keep.end()) v.push_back({i, c});
  return NVector(std::move(v));
}

NVector NVector::restrict_le(int l_max) const {
  std::vector<std::pair<int, int>> v;
  for (auto [i, c] : e_)
    if (i <= l_max) v.push_back({i, c});
  return NVector(std::move(v));
}

NVector NVector::add_unit(int l) const {
  auto v = e_;
  v.push_back({l, 1});
  return NVector(std::move(v));
}

std::optional<NVector> NVector::drop_unit(int l) const {
  return minus(unit(l));
}

std::strong_ordering NVector::operator<=>(const NVector& o) const {
  size_t a = 0, b = 0;
  while (a < e_.size() || b < o.e_.size()) {
    int ia = a < e_.size() ? e_[a].first : INT32_MAX;
    int ib = b < o.e_.size() ? o.e_[b].first : INT32_MAX;
    int i = std::min(ia, ib);
    int ca = ia == i ? e_[a].second : 0;
    int cb = ib == i ? o.e_[b].second : 0;
    if (ca != cb) return ca <=> cb;
    if (ia == i) ++a;
    if (ib == i) ++b;
  }
  return std::strong_ordering::equal;
}

std::string NVector::str() const {
  if (e_.empty()) return "0";
  std::string s;
  for (auto [i, c] : e_) {
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c);
    s += "x(" + std::to_string(i) + ")";
  }
  return s;
}

bool norm_lex_less(const NVector& a, const NVector& b) {
  if (a.norm() != b.norm()) return a.norm() < b.norm();
  return b < a;
}

}  // namespace labshift
