#include "labshift/subshift.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace labshift {

namespace {

std::vector<NVector> window_sym_diff(const Label& m1, const Label& m2, long long n) {
  const auto& w1 = m1.window(static_cast<int>(n));
  const auto& w2 = m2.window(static_cast<int>(n));
  std::set<NVector> s1(w1.begin(), w1.end()), s2(w2.begin(), w2.end());
  std::vector<NVector> diff;
  for (const auto& m : s1)
    if (!s2.count(m)) diff.push_back(m);
  for (const auto& m : s2)
    if (!s1.count(m)) diff.push_back(m);
  std::sort(diff.begin(), diff.end(), norm_lex_less);
  return diff;
}

}  // namespace

NVector length_vector(const PartitionScheme& part, const Expansion& e) {
  NVector r;
  for (long long j : e.digits) {
    long long a = j < 0 ? -j : j;
    r = r.add_unit(part.support_map(a));
  }
  return r;
}

std::optional<NVector> length_vector(const ExpandingSystem& sys,
                                     const PartitionScheme& part, const Int& t) {
  auto e = expand(sys, t);
  if (!e) return std::nullopt;
  return length_vector(part, *e);
}

bool SubshiftWindow::bit(long long p) const {
  if (p < -n || p > n) throw std::out_of_range("window position out of range");
  return bits[static_cast<size_t>(p + n)];
}

std::vector<long long> SubshiftWindow::one_positions() const {
  std::vector<long long> out;
  for (long long p = -n; p <= n; ++p)
    if (bit(p)) out.push_back(p);
  return out;
}

std::string SubshiftWindow::ascii() const {
  std::string row;
  for (bool b : bits) row += b ? '#' : '.';
  // origin marker only when the absolute zero is inside the window
  if (shift < -Int(n) || shift > Int(n)) return row;
  long long p = -static_cast<long long>(shift);
  std::string marks(static_cast<size_t>(p + n), ' ');
  return row + "\n" + marks + "^";
}

SubshiftWindow point_window(const ExpandingSystem& sys, const PartitionScheme& part,
                            const Label& m, long long n, const Int& shift, bool plus) {
  if (n < 0) throw std::invalid_argument("window radius must be nonnegative");
  SubshiftWindow w;
  w.n = n;
  w.shift = shift;
  w.plus = plus;
  w.bits.assign(static_cast<size_t>(2 * n + 1), false);
  w.source = m.describe();
  auto iv = ip_in_interval(sys, shift - n, shift + n,
                           plus ? IpMode::positive : IpMode::full);
  for (const Int& t : iv.values) {
    auto r = length_vector(sys, part, t);
    if (r && m.contains(*r)) {
      Int p = t - shift;
      w.bits[static_cast<size_t>(static_cast<long long>(p) + n)] = true;
    }
  }
  return w;
}

long long first_disagreement(const SubshiftWindow& a, const SubshiftWindow& b) {
  long long n = std::min(a.n, b.n);
  for (long long p = 0; p <= n; ++p) {
    if (a.bit(p) != b.bit(p)) return p;
    if (a.bit(-p) != b.bit(-p)) return p;
  }
  return n + 1;
}

SymZerReport sym_zer_classify(const ExpandingSystem& sys, const PartitionScheme& part,
                              const Label& m, const Int& t) {
  SymZerReport rep;
  rep.t = t;
  std::ostringstream oss;
  auto e = expand(sys, t);
  if (!e) {
    oss << "t = " << to_dec(t) << " is not an expanding time";
    rep.detail = oss.str();
    return rep;
  }
  rep.recognized = true;
  rep.r = length_vector(part, *e);
  rep.positive_digits = true;
  for (long long j : e->digits)
    if (j < 0) rep.positive_digits = false;
  rep.in_a = m.contains(rep.r);
  rep.in_a_plus = rep.in_a && rep.positive_digits;
  oss << "r(t) = " << rep.r.str() << (rep.in_a ? ", member" : ", not a member");
  rep.detail = oss.str();
  return rep;
}

long long TimePoint::last_pos() const {
  if (digits.empty()) return 0;
  long long j = digits.back();
  return j < 0 ? -j : j;
}

TimePoint time_for(const ExpandingSystem& sys, const PartitionScheme& part,
                   const NVector& m, long long floor_pos) {
  // per coordinate, the first mult-many block members above the floor
  std::vector<long long> pos;
  for (const auto& [l, c] : m.entries()) {
    long long i = 1;
    while (part.block(l, i) <= floor_pos) ++i;
    for (int got = 0; got < c; ++got) pos.push_back(part.block(l, i + got));
  }
  std::sort(pos.begin(), pos.end(), std::greater<>());
  TimePoint tp;
  Int t = 0;
  for (size_t i = 0; i < pos.size(); ++i) {
    if (i == 0) {
      tp.digits.push_back(pos[i]);
      t += sys.k(pos[i]);
    } else {
      tp.digits.push_back(-pos[i]);
      t -= sys.k(pos[i]);
    }
  }
  tp.t = t;
  // the construction must be what the recognizer sees
  auto e = expand(sys, t);
  if (!e || e->digits != tp.digits)
    throw std::logic_error("time construction disagrees with the recognizer");
  return tp;
}

LocalityReport locality_check(const ExpandingSystem& sys, const PartitionScheme& part,
                              const Label& m, const Int& t, long long n) {
  LocalityReport rep;
  rep.t = t;
  rep.n = n;
  std::ostringstream oss;
  auto e = expand(sys, t);
  if (!e) throw std::invalid_argument("locality check needs an expanding time");
  rep.r_of_t = length_vector(part, *e);
  if (e->digits.empty()) {
    rep.threshold = 0;
    rep.applicable = true;
    oss << "t = 0: identity is trivial; ";
  } else {
    long long j = e->digits.back();
    rep.threshold = sys.k_abs(j);
    rep.applicable = Int(2 * n) <= rep.threshold;
    oss << "smallest digit " << j << " carries k = " << to_dec(rep.threshold)
        << (rep.applicable ? " >= 2n; " : " < 2n, identity not guaranteed; ");
  }
  auto left = ip_in_interval(sys, t - n, t + n, IpMode::full);
  for (const Int& u : left.values) {
    auto r = length_vector(sys, part, u);
    if (r && m.contains(*r)) rep.lhs.push_back(u);
  }
  Label shifted = m.minus(rep.r_of_t);
  auto right = ip_in_interval(sys, Int(-n), Int(n), IpMode::full);
  for (const Int& s : right.values) {
    auto r = length_vector(sys, part, s);
    if (r && shifted.contains(*r)) rep.rhs.push_back(t + s);
  }
  rep.ok = rep.lhs == rep.rhs;
  oss << rep.lhs.size() << " times on the left, " << rep.rhs.size()
      << " on the right, " << (rep.ok ? "equal" : "different");
  rep.detail = oss.str();
  return rep;
}

AsymptoticReport asymptotic_check(const ExpandingSystem& sys, const PartitionScheme& part,
                                  const Label& m, const NVector& r, long long n,
                                  int steps) {
  AsymptoticReport rep;
  rep.r = r;
  if (r.is_zero())
    throw std::invalid_argument("asymptotics needs a nonzero length vector");
  SubshiftWindow target = point_window(sys, part, m.minus(r), n, Int(0), false);
  long long floor_pos = 0;
  bool any_guaranteed = false;
  bool all_ok = true;
  for (int i = 0; i < steps; ++i) {
    TimePoint tp = time_for(sys, part, r, floor_pos);
    AsymptoticRow row;
    row.t = tp.t;
    row.last_pos = tp.last_pos();
    row.last_value = sys.k_abs(row.last_pos);
    row.guaranteed = row.last_value > Int(2 * n);
    SubshiftWindow shifted = point_window(sys, part, m, n, tp.t, false);
    row.agreement = first_disagreement(shifted, target) - 1;
    row.ok = !row.guaranteed || row.agreement >= n;
    any_guaranteed = any_guaranteed || row.guaranteed;
    all_ok = all_ok && row.ok;
    rep.rows.push_back(row);
    // push every digit of this step out of reach for the next one
    floor_pos = std::max(floor_pos, tp.digits.empty() ? 0 : std::abs(tp.digits.front()));
  }
  rep.ok = all_ok && any_guaranteed;
  std::ostringstream oss;
  oss << rep.rows.size() << " escape times toward the shifted label, "
      << (rep.ok ? "windows agree at every guaranteed step"
                 : "agreement failed or never guaranteed");
  rep.detail = oss.str();
  return rep;
}

EscapeWitness nonasymptotic_witness(const ExpandingSystem& sys, const PartitionScheme& part,
                                    const Label& m1, const Label& m2, long long n,
                                    int count) {
  if (window_equal(m1, m2, static_cast<int>(n)))
    throw std::invalid_argument("labels agree on the window; nothing separates them");
  EscapeWitness w;
  auto diff = window_sym_diff(m1, m2, n);
  const NVector* pick = nullptr;
  for (const auto& d : diff)
    if (!d.is_zero()) {
      pick = &d;
      break;
    }
  if (!pick) {
    w.detail = "only the zero vector separates the windows; its single time 0 "
               "cannot escape";
    return w;
  }
  w.found = true;
  w.r = *pick;
  w.swapped = !m1.contains(w.r);
  const Label& holder = w.swapped ? m2 : m1;
  const Label& blank = w.swapped ? m1 : m2;
  w.verified = true;
  long long floor_pos = 0;
  long long radius_min = n;
  for (int i = 0; i < count; ++i) {
    TimePoint tp = time_for(sys, part, w.r, floor_pos);
    w.times.push_back(tp.t);
    Int half = sys.k_abs(tp.last_pos()) / 2;
    long long radius = half > Int(n) ? n : static_cast<long long>(half);
    radius_min = std::min(radius_min, radius);
    auto center = sym_zer_classify(sys, part, holder, tp.t);
    if (!center.in_a) w.verified = false;
    SubshiftWindow bw = point_window(sys, part, blank, radius, tp.t, false);
    for (bool b : bw.bits)
      if (b) w.verified = false;
    floor_pos = std::max(floor_pos, tp.digits.empty() ? 0 : std::abs(tp.digits.front()));
  }
  w.check_radius = radius_min;
  std::ostringstream oss;
  oss << "separator " << w.r.str() << " lies in the "
      << (w.swapped ? "second" : "first") << " label only; " << w.times.size()
      << " times verified at radius " << w.check_radius;
  w.detail = oss.str();
  return w;
}

InjectivityReport injectivity_radius(const ExpandingSystem& sys, const PartitionScheme& part,
                                     const Label& m1, const Label& m2, long long n) {
  if (window_equal(m1, m2, static_cast<int>(n)))
    throw std::invalid_argument("labels agree on the window; no separator exists");
  InjectivityReport rep;
  // every member of B_n times at most k of the largest reachable position, and
  // the n-fold stack on the coordinate owning that position subtracts the least,
  // so the stack times dominate the whole window universe
  rep.radius = 0;
  for (int l = 1; l <= n; ++l) {
    NVector stack;
    for (int c = 0; c < n; ++c) stack = stack.add_unit(l);
    Int t = time_for(sys, part, stack).t;
    if (t > rep.radius) rep.radius = t;
  }
  auto diff = window_sym_diff(m1, m2, n);
  rep.separator = diff.front();
  rep.position = time_for(sys, part, rep.separator).t;
  rep.bit1 = m1.contains(rep.separator);
  rep.bit2 = m2.contains(rep.separator);
  rep.differ = rep.bit1 != rep.bit2;
  std::ostringstream oss;
  oss << "points differ at time " << to_dec(rep.position)
      << " carrying length vector " << rep.separator.str();
  rep.detail = oss.str();
  return rep;
}

}  // namespace labshift
