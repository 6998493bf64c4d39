#include "labshift/zoo.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace labshift {

namespace {

bool zero_one(const NVector& m) {
  for (const auto& [l, c] : m.entries())
    if (c > 1) return false;
  return true;
}

int int_param(const std::map<std::string, std::string>& params,
              const std::string& key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  return std::stoi(it->second);
}

std::string str_param(const std::map<std::string, std::string>& params,
                      const std::string& key, const std::string& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

NVector flat_run(int count, int step) {  // x(step) + x(2*step) + ... count terms
  NVector m;
  for (int i = 1; i <= count; ++i) m = m.add_unit(i * step);
  return m;
}

std::shared_ptr<Label> boxed(const Label& l) { return std::make_shared<Label>(l); }

// ---- single-chain family ----------------------------------------------

ZooEntry make_nn(int n) {
  if (n < 0) throw std::invalid_argument("N_n needs n >= 0");
  NVector g;
  for (int i = 0; i < n; ++i) g = g.add_unit(1);
  ZooEntry e;
  e.name = "N_n";
  e.label = Label::generated({g});
  e.summary = "single-coordinate multiplicity chain";
  e.params["n"] = std::to_string(n);
  auto z = std::make_shared<ZooInfo>();
  z->name = "N_n";
  z->finite_type = true;
  z->notes = "finite label; height is one past the multiplicity";
  e.label = e.label.with_zoo(z);
  return e;
}

ZooEntry make_exfin() {
  ZooEntry e;
  e.name = "exFIN";
  e.label = Label::maximum();
  e.summary = "every vector; the fixed point of subtraction";
  auto z = std::make_shared<ZooInfo>();
  z->name = "exFIN";
  z->finite_type = false;
  z->recurrent = true;
  z->strongly_recurrent = true;
  z->chain = [](int i) {
    NVector m;
    for (int j = 0; j < i; ++j) m = m.add_unit(1);
    return m;
  };
  z->notes = "subtraction fixes it, so its orbit closure is a single point";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- chain-breaking examples ------------------------------------------

ZooEntry make_ex6a() {
  Label::OracleSpec spec;
  spec.name = "ex6a";
  spec.member = [](const NVector& m) {
    int doubled = 0;
    for (const auto& [l, c] : m.entries()) {
      if (c > 2) return false;
      if (c == 2) ++doubled;
    }
    if (doubled == 0) return true;
    if (doubled > 1) return false;
    int top = m.max_supp();
    return m.at(top) == 2 && top >= 2;
  };
  spec.roof = [](int l) { return l >= 2 ? 2 : 1; };
  spec.supports = [](int) { return true; };
  ZooEntry e;
  e.name = "ex6a";
  e.label = Label::oracle(spec);
  e.summary = "flat vectors with a doubled top coordinate; unbounded chains";
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex6a";
  z->finite_type = false;
  z->chain = [](int i) { return flat_run(i, 1); };
  z->notes = "the flat runs grow forever, so no chain bound exists";
  e.label = e.label.with_zoo(z);
  return e;
}

ZooEntry make_ex6b() {
  Label::OracleSpec spec;
  spec.name = "ex6b";
  spec.member = [](const NVector& m) {
    if (!zero_one(m)) return false;
    int odd = 0;
    for (const auto& [l, c] : m.entries()) {
      (void)c;
      if (l % 2 == 1) {
        if (l == 1) return false;
        if (odd) return false;
        odd = l;
      }
    }
    if (!odd) return true;
    for (const auto& [l, c] : m.entries()) {
      (void)c;
      if (l % 2 == 0 && l > odd) return false;
    }
    return true;
  };
  spec.roof = [](int l) { return l == 1 ? 0 : 1; };
  spec.supports = [](int l) { return l != 1; };
  ZooEntry e;
  e.name = "ex6b";
  e.label = Label::oracle(spec);
  e.summary = "even-coordinate runs capped by one higher odd coordinate";
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex6b";
  z->finite_type = false;
  z->chain = [](int i) { return flat_run(i, 2); };
  z->notes = "even runs grow forever below their odd cap";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- orbit-closure gap pair -------------------------------------------

ZooEntry make_proper(bool sublabel) {
  NVector g1 = NVector::unit(1).add_unit(2);
  NVector g2 = sublabel ? NVector::unit(2).add_unit(3)
                        : NVector::unit(2).add_unit(2).add_unit(3);
  ZooEntry e;
  e.name = sublabel ? "proper_n" : "proper";
  e.label = Label::generated({g1, g2});
  e.summary = sublabel ? "sublabel of proper that its orbit closure misses"
                       : "ambient label for a sublabel the orbit closure misses";
  auto z = std::make_shared<ZooInfo>();
  z->name = e.name;
  z->finite_type = true;
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- two-digit pair labels --------------------------------------------

ZooEntry make_ex8a() {
  Label::OracleSpec spec;
  spec.name = "ex8a";
  spec.member = [](const NVector& m) {
    if (!zero_one(m) || m.norm() > 2) return false;
    if (m.norm() < 2) return true;
    int a = m.min_supp(), b = m.max_supp();
    return a == 1 || b == a + 1;
  };
  spec.roof = [](int) { return 1; };
  spec.supports = [](int) { return true; };
  ZooEntry e;
  e.name = "ex8a";
  e.label = Label::oracle(spec);
  e.summary = "pairs touching coordinate one or adjacent pairs; unit limits "
              "stay finite but leave the orbit";
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex8a";
  z->finite_type = true;
  z->norm_bound = 2;
  z->finitary = true;
  z->simple = false;
  {
    EscapeSequence s;
    s.name = "unit";
    s.r = [](int i) { return NVector::unit(i + 1); };
    s.expected_limit = boxed(Label::generated({NVector::unit(1)}));
    e.label = e.label;  // no matching subtraction: this is the escape
    z->sequences.push_back(s);
  }
  {
    EscapeSequence s;
    s.name = "adjacent";
    s.r = [](int i) { return NVector::unit(i + 1).add_unit(i + 2); };
    s.expected_limit = boxed(Label::zero_label());
    s.matching_r = NVector::unit(2).add_unit(3);
    z->sequences.push_back(s);
  }
  z->notes = "unit subtractions converge to a finite label outside the orbit";
  e.label = e.label.with_zoo(z);
  return e;
}

ZooEntry make_ex8b() {
  Label::OracleSpec spec;
  spec.name = "ex8b";
  spec.member = [](const NVector& m) {
    if (!zero_one(m) || m.norm() > 2) return false;
    if (m.norm() < 2) return true;
    int a = m.min_supp(), b = m.max_supp();
    return (a % 2) != (b % 2);
  };
  spec.roof = [](int) { return 1; };
  spec.supports = [](int) { return true; };

  Label::OracleSpec odd_units;
  odd_units.name = "units-odd";
  odd_units.member = [](const NVector& m) {
    return m.norm() <= 1 && (m.is_zero() || m.max_supp() % 2 == 1);
  };
  odd_units.roof = [](int l) { return l % 2; };
  odd_units.supports = [](int l) { return l % 2 == 1; };

  Label::OracleSpec even_units;
  even_units.name = "units-even";
  even_units.member = [](const NVector& m) {
    return m.norm() <= 1 && (m.is_zero() || m.max_supp() % 2 == 0);
  };
  even_units.roof = [](int l) { return 1 - l % 2; };
  even_units.supports = [](int l) { return l % 2 == 0; };

  ZooEntry e;
  e.name = "ex8b";
  e.label = Label::oracle(spec);
  e.summary = "odd-even pairs; one-parity subtractions stabilize inside the "
              "orbit on an infinite label";
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex8b";
  z->finite_type = true;
  z->norm_bound = 2;
  z->finitary = false;
  z->simple = true;
  {
    EscapeSequence s;
    s.name = "even";
    s.r = [](int i) { return NVector::unit(2 * i); };
    s.expected_limit = boxed(Label::oracle(odd_units));
    s.matching_r = NVector::unit(2);
    s.limit_infinite = true;
    z->sequences.push_back(s);
  }
  {
    EscapeSequence s;
    s.name = "odd";
    s.r = [](int i) { return NVector::unit(2 * i - 1); };
    s.expected_limit = boxed(Label::oracle(even_units));
    s.matching_r = NVector::unit(1);
    s.limit_infinite = true;
    z->sequences.push_back(s);
  }
  z->notes = "subtracting one even coordinate frees every odd unit at once";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- the double-limit example -----------------------------------------

ZooEntry make_ex10a() {
  Label::OracleSpec spec;
  spec.name = "ex10a";
  spec.member = [](const NVector& m) {
    int ones = 0, threes = 0, odd5 = 0, even = 0;
    for (const auto& [l, c] : m.entries()) {
      if (l == 1) {
        if (c > 1) return false;
        ones = 1;
      } else if (l == 3) {
        if (c > 2) return false;
        threes = c;
      } else if (l % 2 == 1) {
        if (c > 1 || odd5) return false;
        odd5 = l;
      } else {
        if (c > 1 || even) return false;
        even = l;
      }
    }
    if (ones) return !odd5 && threes <= 1;
    if (threes == 2) return !odd5 && (even == 0 || even == 2);
    if (odd5 && even) return even <= odd5 - 1;
    return true;
  };
  spec.roof = [](int l) { return l == 3 ? 2 : 1; };
  spec.supports = [](int) { return true; };

  Label::OracleSpec limit_odd;  // what the odd escape leaves visible
  limit_odd.name = "ex10a-odd-limit";
  limit_odd.member = [](const NVector& m) {
    int even = 0;
    for (const auto& [l, c] : m.entries()) {
      if (c > 1) return false;
      if (l == 1 || (l % 2 == 1 && l != 3)) return false;
      if (l % 2 == 0) {
        if (even) return false;
        even = l;
      }
    }
    return true;
  };
  limit_odd.roof = [](int l) { return (l == 1 || (l % 2 == 1 && l != 3)) ? 0 : 1; };
  limit_odd.supports = [](int l) { return l == 3 || l % 2 == 0; };

  ZooEntry e;
  e.name = "ex10a";
  e.label = Label::oracle(spec);
  e.summary = "three-part generators whose two escape directions give "
              "different double limits";
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex10a";
  z->finite_type = true;
  z->norm_bound = 3;
  z->finitary = false;
  z->simple = false;
  {
    EscapeSequence s;
    s.name = "odd";
    s.r = [](int i) { return NVector::unit(2 * i + 3); };
    s.expected_limit = boxed(Label::oracle(limit_odd));
    s.matching_r = NVector::unit(1);
    s.limit_infinite = true;
    z->sequences.push_back(s);
  }
  {
    EscapeSequence s;
    s.name = "even";
    s.r = [](int i) { return NVector::unit(2 * i); };
    s.expected_limit = boxed(Label::generated({NVector::unit(1).add_unit(3)}));
    z->sequences.push_back(s);
  }
  z->notes = "the even escape lands on a finite label no subtraction reaches";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- prime-power bookkeeping ------------------------------------------

bool pow57(long long c, int* a_out = nullptr, int* b_out = nullptr) {
  if (c < 1) return false;
  int a = 0, b = 0;
  while (c % 5 == 0) c /= 5, ++a;
  while (c % 7 == 0) c /= 7, ++b;
  if (a_out) *a_out = a;
  if (b_out) *b_out = b;
  return c == 1 && a >= 1 && b >= 1;
}

ZooEntry make_ex10b() {
  Label::OracleSpec spec;
  spec.name = "ex10b";
  spec.member = [](const NVector& m) {
    int c0 = 0, c1 = 0, c2 = 0;
    for (const auto& [l, c] : m.entries()) {
      if (c > 1) return false;
      switch (l % 3) {
        case 0:
          if (c0) return false;
          c0 = l;
          break;
        case 1:
          if (c1 || l == 1) return false;
          c1 = l;
          break;
        default:
          if (c2) return false;
          c2 = l;
      }
    }
    if (!c2) return true;
    int a = 0, b = 0;
    if (!pow57((c2 - 2) / 3, &a, &b)) return false;
    if (c0 && c0 != 3 * a) return false;
    if (c1 && c1 != 3 * b + 1) return false;
    return true;
  };
  spec.roof = [](int l) {
    if (l % 3 == 0) return 1;
    if (l % 3 == 1) return l == 1 ? 0 : 1;
    return pow57((l - 2) / 3) ? 1 : 0;
  };
  spec.supports = [](int l) {
    if (l % 3 == 0) return true;
    if (l % 3 == 1) return l != 1;
    return pow57((l - 2) / 3);
  };

  Label::OracleSpec class1_units;
  class1_units.name = "units-3b+1";
  class1_units.member = [](const NVector& m) {
    return m.norm() <= 1 &&
           (m.is_zero() || (m.max_supp() % 3 == 1 && m.max_supp() != 1));
  };
  class1_units.roof = [](int l) { return (l % 3 == 1 && l != 1) ? 1 : 0; };
  class1_units.supports = [](int l) { return l % 3 == 1 && l != 1; };

  Label::OracleSpec class0_units;
  class0_units.name = "units-3a";
  class0_units.member = [](const NVector& m) {
    return m.norm() <= 1 && (m.is_zero() || m.max_supp() % 3 == 0);
  };
  class0_units.roof = [](int l) { return l % 3 == 0 ? 1 : 0; };
  class0_units.supports = [](int l) { return l % 3 == 0; };

  ZooEntry e;
  e.name = "ex10b";
  e.label = Label::oracle(spec);
  e.summary = "three-class generators tied by prime-power bookkeeping; escape "
              "limits are infinite unit labels";
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex10b";
  z->finite_type = true;
  z->norm_bound = 3;
  z->finitary = false;
  z->simple = false;
  {
    EscapeSequence s;
    s.name = "zero-class";
    s.r = [](int i) { return NVector::unit(3 * i); };
    s.expected_limit = boxed(Label::oracle(class1_units));
    s.limit_infinite = true;
    z->sequences.push_back(s);
  }
  {
    EscapeSequence s;
    s.name = "one-class";
    s.r = [](int i) { return NVector::unit(3 * i + 1); };
    s.expected_limit = boxed(Label::oracle(class0_units));
    s.limit_infinite = true;
    z->sequences.push_back(s);
  }
  z->notes = "expected almost periodic in the weak sense per the source "
             "construction, unproved there; window evidence only. The simple "
             "tag needs windows past the first bookkeeping coordinate to "
             "refute, so small windows stay inconclusive";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- binary-tree branch labels ----------------------------------------

bool heap_comparable(long long a, long long b) {
  if (a < 2 || b < 2) return false;
  long long hi = std::max(a, b), lo = std::min(a, b);
  while (hi > lo) hi /= 2;
  return hi == lo;
}

// k-th coordinate along the infinite branch w^infinity (k >= 1)
long long branch_coord(const std::string& x, int k) {
  long long l = 1;
  for (int i = 0; i < k; ++i) {
    char ch = x[static_cast<size_t>(i) % x.size()];
    l = 2 * l + (ch - '0');
    if (l > (1LL << 40)) throw std::invalid_argument("branch coordinate overflow");
  }
  return l;
}

ZooEntry make_ex10cmoved(const std::string& x) {
  if (x.empty()) throw std::invalid_argument("ex10cmoved needs a binary word");
  for (char ch : x)
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("ex10cmoved needs a binary word");
  Label::OracleSpec spec;
  spec.name = "ex10cmoved";
  spec.member = [](const NVector& m) {
    if (m.at(1) > 0 || m.norm() > 2) return false;
    for (const auto& [l, c] : m.entries())
      if (c > 2) return false;
    if (m.size() == 2) {
      int a = m.min_supp(), b = m.max_supp();
      return heap_comparable(a, b);
    }
    return true;
  };
  spec.roof = [](int l) { return l >= 2 ? 2 : 0; };
  spec.supports = [](int l) { return l >= 2; };

  Label::OracleSpec branch_units;
  branch_units.name = "units-branch-" + x;
  auto on_branch = [x](long long l) {
    if (l < 2) return false;
    // walk down from the root and compare against the periodic branch
    std::string w;
    while (l > 1) {
      w.push_back(static_cast<char>('0' + (l & 1)));
      l /= 2;
    }
    std::reverse(w.begin(), w.end());
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] != x[i % x.size()]) return false;
    return true;
  };
  branch_units.member = [on_branch](const NVector& m) {
    return m.norm() <= 1 && (m.is_zero() || on_branch(m.max_supp()));
  };
  branch_units.roof = [on_branch](int l) { return on_branch(l) ? 1 : 0; };
  branch_units.supports = [on_branch](int l) { return on_branch(l); };

  ZooEntry e;
  e.name = "ex10cmoved";
  e.label = Label::oracle(spec);
  e.summary = "binary-tree supports; one label per infinite branch, "
              "uncountably many limits";
  e.params["x"] = x;
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex10cmoved";
  z->finite_type = true;
  z->norm_bound = 2;
  z->finitary = false;
  z->simple = false;
  {
    EscapeSequence s;
    s.name = "branch";
    // saturates at depth 25: the window limit is already constant long before,
    // and deeper coordinates would overflow the coordinate type
    s.r = [x](int i) {
      return NVector::unit(static_cast<int>(branch_coord(x, std::min(i, 25))));
    };
    s.expected_limit = boxed(Label::oracle(branch_units));
    s.limit_infinite = true;
    z->sequences.push_back(s);
  }
  z->notes = "each infinite branch is reached by escaping along it; distinct "
             "branches give distinct limit labels";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- independence ladders ---------------------------------------------

// stage layout: pointer coordinates follow the base coordinates
void ladder_stage(int n, int* a_lo, int* b_lo) {
  int s = 1;
  for (int i = 1; i < n; ++i) s += i + (1 << i);
  *a_lo = s;
  *b_lo = s + n;
}

ZooEntry make_ex11a(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("ex11a needs 1 <= n <= 16");
  int a_lo = 0, b_lo = 0;
  ladder_stage(n, &a_lo, &b_lo);
  std::vector<NVector> gens;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int pointer = b_lo + static_cast<int>(mask);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1)
        gens.push_back(NVector::unit(pointer).add_unit(a_lo + i));
  }
  ZooEntry e;
  e.name = "ex11a";
  e.label = Label::generated(gens);
  e.summary = "finite independence ladder: one pointer coordinate per subset";
  e.params["n"] = std::to_string(n);
  e.params["a_lo"] = std::to_string(a_lo);
  e.params["b_lo"] = std::to_string(b_lo);
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex11a";
  z->finite_type = true;
  z->notes = "subtracting the pointer of a subset exposes exactly that subset";
  e.label = e.label.with_zoo(z);
  return e;
}

ZooEntry make_ex11b() {
  Label::OracleSpec spec;
  spec.name = "ex11b";
  spec.member = [](const NVector& m) {
    if (!zero_one(m) || m.norm() > 2) return false;
    int even = 0, odd = 0;
    for (const auto& [l, c] : m.entries()) {
      (void)c;
      if (l % 2 == 0) {
        if (even) return false;
        even = l;
      } else {
        if (odd) return false;
        odd = l;
      }
    }
    if (even == 2) return false;  // the empty-set pointer points at nothing
    if (!even || !odd) return true;
    long long rank = even / 2 - 1;
    int bit = (odd - 1) / 2;
    if (bit > 40) return false;
    return rank >= 0 && ((rank >> bit) & 1) != 0;
  };
  spec.roof = [](int l) { return l == 2 ? 0 : 1; };
  spec.supports = [](int l) { return l != 2; };
  ZooEntry e;
  e.name = "ex11b";
  e.label = Label::oracle(spec);
  e.summary = "infinite independence ladder on odd coordinates with even "
              "pointers";
  auto z = std::make_shared<ZooInfo>();
  z->name = "ex11b";
  z->finite_type = true;
  z->norm_bound = 2;
  z->notes = "every finite odd set has a pointer, so unit sets of any size "
             "are independent";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- the transitive patchwork -----------------------------------------

struct PermexState {
  std::mutex mu;
  std::vector<PermexBlock> blocks;
  std::vector<NVector> roofs;  // per block, join of its generators
  long long covered = 0;
  int next_w = 0;
};

void permex_vectors(int l, int max_l, long long norm_budget, NVector cur,
                    std::vector<NVector>& out) {
  if (l > max_l) {
    out.push_back(cur);
    return;
  }
  permex_vectors(l + 1, max_l, norm_budget, cur, out);
  NVector grown = cur;
  for (long long c = 1; c <= norm_budget; ++c) {
    grown = grown.add_unit(l);
    permex_vectors(l + 1, max_l, norm_budget - c, grown, out);
  }
}

void permex_antichains(const std::vector<NVector>& uni, size_t from, long long budget,
                       std::vector<NVector>& cur,
                       std::vector<std::vector<NVector>>& out) {
  if (budget == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < uni.size(); ++i) {
    long long cost = uni[i].norm() + 1;
    if (cost > budget) continue;
    bool incomparable = true;
    for (const auto& c : cur)
      if (c.leq(uni[i]) || uni[i].leq(c)) {
        incomparable = false;
        break;
      }
    if (!incomparable) continue;
    cur.push_back(uni[i]);
    permex_antichains(uni, i + 1, budget - cost, cur, out);
    cur.pop_back();
  }
}

// caller holds the lock
void permex_extend(PermexState& st, long long cover) {
  while (st.covered < cover) {
    int w = ++st.next_w;
    for (int len = 1; len <= w; ++len) {
      long long budget = w - len;
      std::vector<NVector> uni;
      if (budget > 0) {
        permex_vectors(1, len, budget - 1, NVector(), uni);
        std::sort(uni.begin(), uni.end(), norm_lex_less);
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
      }
      std::vector<std::vector<NVector>> chains;
      std::vector<NVector> cur;
      permex_antichains(uni, 0, budget, cur, chains);
      for (const auto& g : chains) {
        PermexBlock b;
        b.start = st.covered + 1;
        b.len = len;
        b.block_label = Label::generated(g);
        st.blocks.push_back(b);
        NVector roof;
        for (const auto& v : g) roof = roof.join(v);
        st.roofs.push_back(roof);
        st.covered += len;
      }
    }
  }
}

// block index holding coordinate l; extends the enumeration as needed
size_t permex_locate(PermexState& st, long long l) {
  permex_extend(st, l);
  size_t lo = 0, hi = st.blocks.size();
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (st.blocks[mid].start <= l)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

NVector permex_push(const NVector& m, long long start) {
  NVector out;
  for (const auto& [l, c] : m.entries())
    for (int i = 0; i < c; ++i)
      out = out.add_unit(static_cast<int>(l + start - 1));
  return out;
}

// i-th block whose label has a maximal member above zero, its top generator
// pushed into place
NVector permex_escape(const std::shared_ptr<PermexState>& st, int i) {
  std::lock_guard<std::mutex> lock(st->mu);
  int seen = 0;
  for (size_t b = 0;; ++b) {
    if (b == st->blocks.size()) permex_extend(*st, st->covered + 1);
    const Antichain* a = st->blocks[b].block_label.antichain();
    if (a->empty() || a->elems().rbegin()->is_zero()) continue;
    if (++seen == i) return permex_push(*a->elems().rbegin(), st->blocks[b].start);
  }
}

ZooEntry make_permex() {
  auto st = std::make_shared<PermexState>();
  Label::OracleSpec spec;
  spec.name = "permex";
  spec.member = [st](const NVector& m) {
    if (m.is_zero()) return true;
    std::lock_guard<std::mutex> lock(st->mu);
    size_t b = permex_locate(*st, m.min_supp());
    const PermexBlock& blk = st->blocks[b];
    if (m.max_supp() >= blk.start + blk.len) return false;
    NVector local;
    for (const auto& [l, c] : m.entries())
      for (int i = 0; i < c; ++i)
        local = local.add_unit(static_cast<int>(l - blk.start + 1));
    return blk.block_label.contains(local);
  };
  spec.roof = [st](int l) {
    std::lock_guard<std::mutex> lock(st->mu);
    size_t b = permex_locate(*st, l);
    return st->roofs[b].at(static_cast<int>(l - st->blocks[b].start + 1));
  };
  spec.supports = [](int) { return true; };

  ZooEntry e;
  e.name = "permex";
  e.label = Label::oracle(spec);
  e.summary = "every finite label pasted onto its own coordinate block";
  auto z = std::make_shared<ZooInfo>();
  z->name = "permex";
  z->finite_type = true;
  z->finitary = true;
  z->simple = true;
  {
    EscapeSequence s;
    s.name = "block-escape";
    s.r = [st](int i) { return permex_escape(st, i); };
    s.expected_limit = boxed(Label::zero_label());
    s.matching_r = permex_escape(st, 1);
    z->sequences.push_back(s);
  }
  z->notes = "members live inside single blocks and every block is finite, so "
             "chains terminate; subtracting a maximal member leaves the zero "
             "label. Not recurrent: far subtractions strip whole blocks";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- recurrent but not strongly ---------------------------------------

ZooEntry make_exx() {
  Label::OracleSpec spec;
  spec.name = "exx";
  spec.member = [](const NVector& m) {
    int odd_total = 0;
    for (const auto& [l, c] : m.entries()) {
      if (l % 2 == 1)
        odd_total += c;
      else if (c > 1)
        return false;
    }
    return odd_total <= 1;
  };
  spec.roof = [](int) { return 1; };
  spec.supports = [](int) { return true; };
  ZooEntry e;
  e.name = "exx";
  e.label = Label::oracle(spec);
  e.summary = "one unit among odds plus flat evens; recurrent but a far even "
              "witness breaks strong recurrence";
  auto z = std::make_shared<ZooInfo>();
  z->name = "exx";
  z->finite_type = false;
  z->recurrent = true;
  z->strongly_recurrent = false;
  z->recurrence_witness = [](int i) { return NVector::unit(2 * i); };
  z->chain = [](int i) { return flat_run(i, 2); };
  z->notes = "subtracting a far even unit changes nothing inside the window, "
             "but no single far vector works against every member";
  e.label = e.label.with_zoo(z);
  return e;
}

// ---- unit and indicator helpers ---------------------------------------

ZooEntry make_units(const std::string& l_param) {
  ZooEntry e;
  e.name = "units";
  e.params["L"] = l_param;
  auto z = std::make_shared<ZooInfo>();
  z->name = "units";
  if (l_param == "all") {
    e.label = unit_label_all();
    z->finite_type = true;
    z->norm_bound = 1;
    z->sublattice = false;
  } else {
    std::vector<int> ls;
    std::stringstream ss(l_param);
    std::string tok;
    while (std::getline(ss, tok, ',')) ls.push_back(std::stoi(tok));
    e.label = unit_label(ls);
    z->finite_type = true;
  }
  e.summary = "at most one unit";
  e.label = e.label.with_zoo(z);
  return e;
}

ZooEntry make_indicator(const std::string& l_param) {
  ZooEntry e;
  e.name = "indicator";
  e.params["L"] = l_param;
  auto z = std::make_shared<ZooInfo>();
  z->name = "indicator";
  if (l_param == "all") {
    e.label = indicator_label_all();
    z->finite_type = false;
    z->chain = [](int i) { return flat_run(i, 1); };
  } else {
    std::vector<int> ls;
    std::stringstream ss(l_param);
    std::string tok;
    while (std::getline(ss, tok, ',')) ls.push_back(std::stoi(tok));
    e.label = indicator_label(ls);
    z->finite_type = true;
  }
  z->flat = true;
  z->sublattice = true;
  e.summary = "all flat vectors";
  e.label = e.label.with_zoo(z);
  return e;
}

}  // namespace

Label unit_label(const std::vector<int>& l_set) {
  std::vector<NVector> gens;
  for (int l : l_set) gens.push_back(NVector::unit(l));
  return Label::generated(gens);
}

Label unit_label_all() {
  Label::OracleSpec spec;
  spec.name = "units-all";
  spec.member = [](const NVector& m) { return m.norm() <= 1; };
  spec.roof = [](int) { return 1; };
  spec.supports = [](int) { return true; };
  return Label::oracle(spec);
}

Label indicator_label(const std::vector<int>& l_set) {
  NVector g;
  for (int l : l_set) g = g.add_unit(l);
  return Label::generated({g});
}

Label indicator_label_all() {
  Label::OracleSpec spec;
  spec.name = "indicator-all";
  spec.member = [](const NVector& m) {
    for (const auto& [l, c] : m.entries()) {
      (void)l;
      if (c > 1) return false;
    }
    return true;
  };
  spec.roof = [](int) { return 1; };
  spec.supports = [](int) { return true; };
  return Label::oracle(spec);
}

std::vector<PermexBlock> permex_blocks(long long cover) {
  PermexState st;
  std::lock_guard<std::mutex> lock(st.mu);
  permex_extend(st, cover);
  return st.blocks;
}

std::vector<std::string> zoo_names() {
  return {"N_n",   "exFIN", "ex6a",  "ex6b",       "proper", "proper_n",
          "ex8a",  "ex8b",  "ex10a", "ex10b",      "ex10cmoved",
          "ex11a", "ex11b", "permex", "exx",       "units",  "indicator"};
}

ZooEntry zoo_get(const std::string& name,
                 const std::map<std::string, std::string>& params) {
  if (name == "N_n") return make_nn(int_param(params, "n", 3));
  if (name == "exFIN") return make_exfin();
  if (name == "ex6a") return make_ex6a();
  if (name == "ex6b") return make_ex6b();
  if (name == "proper") return make_proper(false);
  if (name == "proper_n") return make_proper(true);
  if (name == "ex8a") return make_ex8a();
  if (name == "ex8b") return make_ex8b();
  if (name == "ex10a") return make_ex10a();
  if (name == "ex10b") return make_ex10b();
  if (name == "ex10cmoved") return make_ex10cmoved(str_param(params, "x", "0"));
  if (name == "ex11a") return make_ex11a(int_param(params, "n", 3));
  if (name == "ex11b") return make_ex11b();
  if (name == "permex") return make_permex();
  if (name == "exx") return make_exx();
  if (name == "units") return make_units(str_param(params, "L", "all"));
  if (name == "indicator") return make_indicator(str_param(params, "L", "all"));
  throw std::invalid_argument("unknown zoo entry: " + name);
}

ZooVerifyReport zoo_verify(int n, int horizon) {
  ZooVerifyReport rep;
  CheckParams cp;
  cp.n = n;
  cp.horizon = horizon;
  for (const auto& name : zoo_names()) {
    ZooEntry e = zoo_get(name);
    auto z = e.label.zoo();
    if (!z) continue;
    std::vector<std::pair<PropertyKind, std::optional<bool>>> tags = {
        {PropertyKind::finite_type, z->finite_type},
        {PropertyKind::finitary, z->finitary},
        {PropertyKind::simple_kind, z->simple},
        {PropertyKind::recurrent, z->recurrent},
        {PropertyKind::strongly_recurrent, z->strongly_recurrent},
        {PropertyKind::flat, z->flat},
        {PropertyKind::sublattice, z->sublattice},
    };
    for (const auto& [kind, tag] : tags) {
      if (!tag.has_value()) continue;
      ZooCheckRow row;
      row.entry = name;
      row.tag = property_kind_name(kind);
      row.expected = *tag ? Verdict::holds : Verdict::fails;
      row.got = property_check(e.label, kind, cp);
      row.ok = row.got.verdict == row.expected ||
               row.got.verdict == Verdict::inconclusive;
      rep.all_ok = rep.all_ok && row.ok;
      ++rep.checked;
      if (row.got.verdict == Verdict::inconclusive) ++rep.inconclusive;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

}  // namespace labshift
