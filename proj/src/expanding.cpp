#include "labshift/expanding.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace labshift {

ExpandingSystem ExpandingSystem::preset(const std::string& name) {
  if (name == "strict") {
    auto s = power(5, 7);
    s.name_ = "strict";
    return s;
  }
  if (name == "paper") {
    auto s = power(3, 4);
    s.name_ = "paper";
    return s;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

ExpandingSystem ExpandingSystem::power(int b, int base, int n_max) {
  if (b < 3) throw std::invalid_argument("b must be at least 3");
  if (base < 2) throw std::invalid_argument("digit base must be at least 2");
  ExpandingSystem s;
  s.b_ = b;
  s.base_ = base;
  s.name_ = "power(b=" + std::to_string(b) + ",base=" + std::to_string(base) + ")";
  s.validate(n_max);
  return s;
}

ExpandingSystem ExpandingSystem::table(int b, const std::vector<Int>& k_values) {
  if (b < 3) throw std::invalid_argument("b must be at least 3");
  if (k_values.empty()) throw std::invalid_argument("empty value table");
  ExpandingSystem s;
  s.b_ = b;
  s.base_ = 0;
  s.name_ = "table(b=" + std::to_string(b) + ")";
  s.table_ = k_values;
  s.validate(static_cast<long long>(k_values.size()));
  return s;
}

void ExpandingSystem::validate(long long depth) const {
  // growth first: k(n+1) > b * sum_{i=0}^{n} k(i), scanned from n = 0
  Int run = 0;  // sum_{i=1..n} k(i)
  for (long long n = 0; n < depth; ++n) {
    Int next = k(n + 1);
    if (next <= Int(b_) * run)
      throw std::invalid_argument("growth violation at n=" + std::to_string(n) +
                                  ": k(" + std::to_string(n + 1) + ")=" + to_dec(next) +
                                  " must exceed b*sum=" + to_dec(Int(b_) * run));
    run += next;
  }
  if (k(1) < b_ + 1)
    throw std::invalid_argument("k(1)=" + to_dec(k(1)) + " is below b+1=" +
                                std::to_string(b_ + 1));
}

Int ExpandingSystem::k(long long n) const {
  if (n == 0) return 0;
  long long m = n < 0 ? -n : n;
  Int v;
  if (base_ != 0) {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& pw = cache_->pow;
    if (pw.empty()) pw.push_back(base_);
    while (static_cast<long long>(pw.size()) < m) pw.push_back(pw.back() * base_);
    v = pw[m - 1];
  } else {
    if (m > static_cast<long long>(table_.size()))
      throw std::out_of_range("k(" + std::to_string(m) + ") beyond the value table");
    v = table_[m - 1];
  }
  return n < 0 ? Int(-v) : v;
}

Int ExpandingSystem::k_abs(long long n) const { return k(n < 0 ? -n : n); }

Int ExpandingSystem::sum_k(long long n) const {
  if (n <= 0) return 0;
  if (base_ != 0) return (k(n) * base_ - base_) / (base_ - 1);
  if (n > static_cast<long long>(table_.size()))
    throw std::out_of_range("sum_k beyond the value table");
  Int s = 0;
  for (long long i = 1; i <= n; ++i) s += table_[i - 1];
  return s;
}

long long ExpandingSystem::table_limit() const {
  return base_ != 0 ? 0 : static_cast<long long>(table_.size());
}

long long ExpandingSystem::top_digit(const Int& h) const {
  if (h <= 0) return 0;
  Int target = Int(b_) * h;  // want largest n with (b-1)*k(n) <= target
  auto fits = [&](long long n) { return Int(b_ - 1) * k(n) <= target; };
  if (!fits(1)) return 0;
  long long limit = table_limit();
  if (limit != 0 && fits(limit)) return limit;
  long long lo = 1, hi = 2;
  while ((limit == 0 || hi <= limit) && fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  if (limit != 0 && hi > limit) hi = limit + 1;
  // fits(lo) true, fits(hi) false
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (fits(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

std::optional<Expansion> expand(const ExpandingSystem& sys, const Int& t) {
  Expansion e;
  e.value = t;
  Int cur = t;
  long long prev = 0;  // 0 = no digit yet
  while (cur != 0) {
    Int a = abs_of(cur);
    long long limit = sys.table_limit();
    if (limit != 0 && Int(sys.b()) * a > Int(sys.b() + 1) * sys.k(limit))
      throw std::out_of_range("value " + to_dec(t) + " beyond the table reach");
    long long n = sys.top_digit(a);
    if (n == 0) return std::nullopt;
    if (Int(sys.b()) * a > Int(sys.b() + 1) * sys.k(n)) return std::nullopt;
    if (prev != 0 && n >= prev) return std::nullopt;
    long long j = cur > 0 ? n : -n;
    e.digits.push_back(j);
    cur -= sys.k(j);
    prev = n;
  }
  return e;
}

bool ip_contains(const ExpandingSystem& sys, const Int& t) {
  return expand(sys, t).has_value();
}

bool ip_contains_positive(const ExpandingSystem& sys, const Int& t) {
  auto e = expand(sys, t);
  if (!e) return false;
  for (long long j : e->digits)
    if (j < 0) return false;
  return true;
}

Truncation truncate(const ExpandingSystem& sys, const Expansion& e, int r_tilde) {
  if (r_tilde < 0 || r_tilde > e.length())
    throw std::invalid_argument("truncation length out of range");
  Truncation t;
  Int head = 0;
  for (int i = 0; i < r_tilde; ++i) {
    t.prefix.digits.push_back(e.digits[i]);
    head += sys.k(e.digits[i]);
  }
  t.prefix.value = head;
  t.residual = e.value - head;
  return t;
}

NeighborReport neighbor_exclusion(const ExpandingSystem& sys, const Expansion& e, int i_star) {
  if (i_star < 1 || i_star > e.length())
    throw std::invalid_argument("digit index out of range");
  NeighborReport r;
  r.digit_index = i_star;
  Int step = sys.k(e.digits[i_star - 1]);
  r.removed = e.value - step;
  r.added = e.value + step;
  r.removed_in_ip = ip_contains(sys, r.removed);
  r.added_in_ip = ip_contains(sys, r.added);
  return r;
}

namespace {

// Signed subset-sum walk over digit magnitudes n, n-1, ..., 1 with interval
// pruning: from (n, partial) every reachable value lies in partial +- sum_k(n)
// (partial .. partial + sum_k(n) when only positive digits are allowed).
struct IpWalk {
  const ExpandingSystem& sys;
  Int lo, hi;
  bool positive_only = false;
  long long banned_limit = 0;               // magnitudes <= this consult `banned`
  const std::set<long long>* banned = nullptr;  // signed digits unavailable
  std::vector<Int>* out = nullptr;
  Int count = 0;

  bool usable(long long n, int sgn) const {
    if (!banned || n > banned_limit) return true;
    return banned->find(sgn > 0 ? n : -n) == banned->end();
  }

  void run(long long n, const Int& partial) {
    Int reach = sys.sum_k(n);
    if (positive_only) {
      if (partial > hi || partial + reach < lo) return;
    } else {
      if (partial - reach > hi || partial + reach < lo) return;
    }
    if (n == 0) {
      if (lo <= partial && partial <= hi) {
        if (out) out->push_back(partial);
        else ++count;
      }
      return;
    }
    run(n - 1, partial);
    if (usable(n, +1)) run(n - 1, partial + sys.k(n));
    if (!positive_only && usable(n, -1)) run(n - 1, partial - sys.k(n));
  }
};

void check_restricted(const RestrictedSpec& spec) {
  long long prev = 0;
  for (long long a : spec.s) {
    long long m = a < 0 ? -a : a;
    if (m == 0) throw std::invalid_argument("restricted sequence contains 0");
    if (m <= prev) throw std::invalid_argument("restricted sequence must increase in absolute value");
    prev = m;
  }
  if (spec.depth < 1) throw std::invalid_argument("restricted depth must be positive");
}

}  // namespace

IpInterval ip_in_interval(const ExpandingSystem& sys, const Int& lo, const Int& hi,
                          IpMode mode, const RestrictedSpec* spec) {
  IpInterval out;
  if (lo > hi) return out;
  Int h = std::max(abs_of(lo), abs_of(hi));

  if (mode != IpMode::restricted) {
    IpWalk w{sys, lo, hi, mode == IpMode::positive};
    std::vector<Int> vals;
    w.out = &vals;
    w.run(sys.top_digit(h), 0);
    std::sort(vals.begin(), vals.end());
    out.values = std::move(vals);
    return out;
  }

  if (!spec) throw std::invalid_argument("restricted mode needs a sequence prefix");
  check_restricted(*spec);
  std::set<long long> banned;
  std::vector<long long> in_depth;
  for (long long a : spec->s) {
    long long m = a < 0 ? -a : a;
    if (m <= spec->depth) {
      banned.insert(a);
      in_depth.push_back(a);
    }
  }
  if (in_depth.size() > 16)
    throw std::invalid_argument("restricted prefix too long (max 16 within depth)");

  // members are x - y with x avoiding the sequence digits and y drawn from them
  Int y_reach = 0;
  for (long long a : in_depth) y_reach += sys.k_abs(a);
  out.guaranteed_radius = (Int(sys.b() - 1) * sys.k(spec->depth + 1)) / sys.b() - y_reach - 1;
  if (out.guaranteed_radius < 0) out.guaranteed_radius = 0;
  out.complete = h <= out.guaranteed_radius;

  std::set<Int> acc;
  size_t subsets = size_t(1) << in_depth.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    Int y = 0;
    for (size_t i = 0; i < in_depth.size(); ++i)
      if (mask & (size_t(1) << i)) y += sys.k(in_depth[i]);
    std::vector<Int> xs;
    IpWalk w{sys, lo + y, hi + y, false, spec->depth, &banned, &xs};
    long long start = std::min(sys.top_digit(std::max(abs_of(lo + y), abs_of(hi + y))), spec->depth);
    w.run(start, 0);
    for (const Int& x : xs) acc.insert(x - y);
  }
  out.values.assign(acc.begin(), acc.end());
  return out;
}

Int ip_count_positive(const ExpandingSystem& sys, const Int& n) {
  if (n < 1) return 0;
  IpWalk w{sys, 1, n, false};
  w.run(sys.top_digit(n), 0);
  return w.count;
}

std::pair<long long, long long> density_exponent(int base) {
  if (base < 2) throw std::invalid_argument("digit base must be at least 2");
  long double x = std::log(3.0L) / std::log(static_cast<long double>(base));
  long long p = static_cast<long long>(std::floor(x * 10000.0L)) - 1;
  if (p < 1) p = 1;
  return {p, 10000};
}

std::vector<DensityRow> density_profile(const ExpandingSystem& sys, const std::vector<Int>& ns) {
  if (sys.base() == 0)
    throw std::invalid_argument("density profile needs a power system");
  auto [p, q] = density_exponent(sys.base());
  std::vector<DensityRow> rows;
  for (const Int& n : ns) {
    if (n < 1) throw std::invalid_argument("density points must be positive");
    DensityRow r;
    r.n = n;
    r.count = ip_count_positive(sys, n);
    double nd = static_cast<double>(n);
    r.ratio = static_cast<double>(r.count) / nd;
    r.bound = std::pow(3.0 * nd, std::log(3.0) / std::log(static_cast<double>(sys.base())));
    r.within_bound = ipow(r.count, q) <= ipow(3 * n, p);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace labshift
