#include "labshift/label.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace labshift {

namespace {
constexpr size_t kWindowCap = 2'000'000;
constexpr int kMaximumWindowMax = 6;   // (N+1)^N members; N=7 already ~2M
constexpr int kOverlapScan = 512;      // direct-sum coordinate clash probe
constexpr int kGamowProbe = 6;         // support-escape probe window
}  // namespace

// ---------------------------------------------------------------------------
// Antichain

Antichain::Antichain(const std::vector<NVector>& gens) {
  for (const auto& g : gens) insert(g);
}

bool Antichain::insert(const NVector& m) {
  for (const auto& e : elems_)
    if (m.leq(e)) return false;
  for (auto it = elems_.begin(); it != elems_.end();)
    it = it->leq(m) ? elems_.erase(it) : std::next(it);
  elems_.insert(m);
  return true;
}

bool Antichain::covers(const NVector& m) const {
  for (const auto& e : elems_)
    if (m.leq(e)) return true;
  return false;
}

bool Antichain::operator<(const Antichain& o) const {
  return std::lexicographical_compare(elems_.begin(), elems_.end(),
                                      o.elems_.begin(), o.elems_.end());
}

std::vector<NVector> Antichain::closure() const {
  std::set<NVector> seen;
  std::deque<NVector> q;
  for (const auto& e : elems_)
    if (seen.insert(e).second) q.push_back(e);
  while (!q.empty()) {
    NVector m = q.front();
    q.pop_front();
    for (int l : m.support()) {
      auto d = m.drop_unit(l);
      if (d && seen.insert(*d).second) q.push_back(*d);
    }
    if (seen.size() > kWindowCap) throw std::runtime_error("antichain closure too large");
  }
  return {seen.begin(), seen.end()};
}

NVector Antichain::roof() const {
  NVector r;
  for (const auto& e : elems_) r = r.join(e);
  return r;
}

// ---------------------------------------------------------------------------
// Relabeling

Relabeling Relabeling::identity() {
  Relabeling t;
  t.fwd = t.inv = [](int l) { return l; };
  t.in_l1 = t.in_l2 = [](int) { return true; };
  t.text = "id";
  return t;
}

Relabeling Relabeling::finite_map(const std::vector<std::pair<int, int>>& pairs) {
  auto f = std::make_shared<std::map<int, int>>();
  auto g = std::make_shared<std::map<int, int>>();
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1) throw std::invalid_argument("relabeling coordinates start at 1");
    if (!f->emplace(a, b).second || !g->emplace(b, a).second)
      throw std::invalid_argument("relabeling is not a bijection");
  }
  // the finite map must be a permutation once extended by the identity
  for (auto [a, b] : *f)
    if (a != b && ((f->count(b) == 0) != (g->count(a) == 0)))
      throw std::invalid_argument("finite relabeling does not close to a permutation");
  Relabeling t;
  t.fwd = [f](int l) {
    auto it = f->find(l);
    return it == f->end() ? l : it->second;
  };
  t.inv = [g](int l) {
    auto it = g->find(l);
    return it == g->end() ? l : it->second;
  };
  t.in_l1 = t.in_l2 = [](int) { return true; };
  std::string s = "map{";
  for (auto [a, b] : *f) s += std::to_string(a) + "->" + std::to_string(b) + ",";
  if (s.back() == ',') s.pop_back();
  t.text = s + "}";
  return t;
}

Relabeling Relabeling::block(int len, int lo2) {
  if (len < 1 || lo2 < 1) throw std::invalid_argument("block relabeling needs len,lo2 >= 1");
  Relabeling t;
  t.fwd = [lo2](int l) { return lo2 + l - 1; };
  t.inv = [lo2](int j) { return j - lo2 + 1; };
  t.in_l1 = [len](int l) { return 1 <= l && l <= len; };
  t.in_l2 = [len, lo2](int j) { return lo2 <= j && j < lo2 + len; };
  t.text = "block[1.." + std::to_string(len) + "]->[" + std::to_string(lo2) + "..]";
  return t;
}

// ---------------------------------------------------------------------------
// Label implementations

class LabelImpl {
 public:
  virtual ~LabelImpl() = default;
  virtual bool contains(const NVector& m) const = 0;
  virtual int roof_bound(int l) const = 0;
  virtual bool may_support(int l) const = 0;
  virtual const Antichain* antichain() const { return nullptr; }
  virtual bool is_maximum() const { return false; }
  virtual std::string describe() const = 0;

  mutable std::mutex mu;
  mutable std::map<int, std::shared_ptr<const std::vector<NVector>>> windows;
};

namespace {

class FiniteImpl final : public LabelImpl {
 public:
  explicit FiniteImpl(Antichain a) : ac_(std::move(a)), roof_(ac_.roof()) {}
  bool contains(const NVector& m) const override { return ac_.covers(m); }
  int roof_bound(int l) const override { return roof_.at(l); }
  bool may_support(int l) const override { return roof_.at(l) > 0; }
  const Antichain* antichain() const override { return &ac_; }
  std::string describe() const override {
    if (ac_.empty()) return "empty";
    std::string s = "gen{";
    size_t i = 0;
    for (const auto& e : ac_.elems()) {
      if (i++) s += ", ";
      if (i > 6) return s + "... " + std::to_string(ac_.size()) + " generators}";
      s += e.str();
    }
    return s + "}";
  }

 private:
  Antichain ac_;
  NVector roof_;
};

class MaximumImpl final : public LabelImpl {
 public:
  bool contains(const NVector&) const override { return true; }
  int roof_bound(int) const override { return std::numeric_limits<int>::max() / 4; }
  bool may_support(int) const override { return true; }
  bool is_maximum() const override { return true; }
  std::string describe() const override { return "FIN"; }
};

class OracleImpl final : public LabelImpl {
 public:
  explicit OracleImpl(Label::OracleSpec s) : s_(std::move(s)) {}
  bool contains(const NVector& m) const override {
    for (auto [l, c] : m.entries())
      if (!s_.supports(l) || c > s_.roof(l)) return false;
    return s_.member(m);
  }
  int roof_bound(int l) const override { return s_.roof(l); }
  bool may_support(int l) const override { return s_.supports(l); }
  std::string describe() const override { return s_.name; }

 private:
  Label::OracleSpec s_;
};

using ImplPtr = std::shared_ptr<const LabelImpl>;

class MinusImpl final : public LabelImpl {
 public:
  MinusImpl(ImplPtr base, NVector r) : base_(std::move(base)), r_(std::move(r)) {}
  bool contains(const NVector& m) const override { return base_->contains(m.plus(r_)); }
  int roof_bound(int l) const override {
    return std::max(0, base_->roof_bound(l) - r_.at(l));
  }
  bool may_support(int l) const override {
    return base_->may_support(l) && roof_bound(l) > 0;
  }
  std::string describe() const override {
    return "(" + base_->describe() + ")-" + r_.str();
  }

 private:
  ImplPtr base_;
  NVector r_;
};

class MeetImpl final : public LabelImpl {
 public:
  MeetImpl(ImplPtr base, int l_star) : base_(std::move(base)), l_(l_star) {}
  bool contains(const NVector& m) const override {
    return m.max_supp() <= l_ && base_->contains(m);
  }
  int roof_bound(int l) const override { return l <= l_ ? base_->roof_bound(l) : 0; }
  bool may_support(int l) const override { return l <= l_ && base_->may_support(l); }
  std::string describe() const override {
    return "(" + base_->describe() + ")^[1.." + std::to_string(l_) + "]";
  }

 private:
  ImplPtr base_;
  int l_;
};

class OplusImpl final : public LabelImpl {
 public:
  OplusImpl(ImplPtr a, ImplPtr b) : a_(std::move(a)), b_(std::move(b)) {
    for (int l = 1; l <= kOverlapScan; ++l)
      if (a_->may_support(l) && b_->may_support(l))
        throw std::invalid_argument("direct sum parts share coordinate " + std::to_string(l));
  }
  bool contains(const NVector& m) const override {
    std::vector<std::pair<int, int>> ea, eb;
    for (auto [l, c] : m.entries()) {
      bool ia = a_->may_support(l), ib = b_->may_support(l);
      if (ia && ib)
        throw std::invalid_argument("direct sum parts share coordinate " + std::to_string(l));
      if (ia)
        ea.push_back({l, c});
      else if (ib)
        eb.push_back({l, c});
      else
        return false;
    }
    return a_->contains(NVector(std::move(ea))) && b_->contains(NVector(std::move(eb)));
  }
  int roof_bound(int l) const override {
    return a_->may_support(l) ? a_->roof_bound(l) : b_->roof_bound(l);
  }
  bool may_support(int l) const override {
    return a_->may_support(l) || b_->may_support(l);
  }
  std::string describe() const override {
    return "(" + a_->describe() + ")(+)(" + b_->describe() + ")";
  }

 private:
  ImplPtr a_, b_;
};

class UnionImpl final : public LabelImpl {
 public:
  explicit UnionImpl(std::vector<ImplPtr> parts) : parts_(std::move(parts)) {}
  bool contains(const NVector& m) const override {
    for (const auto& p : parts_)
      if (p->contains(m)) return true;
    return false;
  }
  int roof_bound(int l) const override {
    int r = 0;
    for (const auto& p : parts_) r = std::max(r, p->roof_bound(l));
    return r;
  }
  bool may_support(int l) const override {
    for (const auto& p : parts_)
      if (p->may_support(l)) return true;
    return false;
  }
  std::string describe() const override {
    std::string s = "union(";
    for (size_t i = 0; i < parts_.size(); ++i) s += (i ? ", " : "") + parts_[i]->describe();
    return s + ")";
  }

 private:
  std::vector<ImplPtr> parts_;
};

class IntersectImpl final : public LabelImpl {
 public:
  IntersectImpl(ImplPtr a, ImplPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  bool contains(const NVector& m) const override {
    return a_->contains(m) && b_->contains(m);
  }
  int roof_bound(int l) const override {
    return std::min(a_->roof_bound(l), b_->roof_bound(l));
  }
  bool may_support(int l) const override {
    return a_->may_support(l) && b_->may_support(l);
  }
  std::string describe() const override {
    return "(" + a_->describe() + ")&(" + b_->describe() + ")";
  }

 private:
  ImplPtr a_, b_;
};

class GamowImpl final : public LabelImpl {
 public:
  GamowImpl(ImplPtr base, Relabeling tau) : base_(std::move(base)), tau_(std::move(tau)) {}
  bool contains(const NVector& m) const override {
    std::vector<std::pair<int, int>> pushed;
    for (auto [l, c] : m.entries()) {
      if (!tau_.in_l1(l)) return false;
      pushed.push_back({tau_.fwd(l), c});
    }
    return base_->contains(NVector(std::move(pushed)));
  }
  int roof_bound(int l) const override {
    return tau_.in_l1(l) ? base_->roof_bound(tau_.fwd(l)) : 0;
  }
  bool may_support(int l) const override {
    return tau_.in_l1(l) && base_->may_support(tau_.fwd(l));
  }
  std::string describe() const override {
    return tau_.text + "*(" + base_->describe() + ")";
  }

 private:
  ImplPtr base_;
  Relabeling tau_;
};

Antichain minus_antichain(const Antichain& a, const NVector& r) {
  Antichain out;
  for (const auto& e : a.elems()) {
    auto d = e.minus(r);
    if (d) out.insert(*d);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Label

Label::Label() : impl_(std::make_shared<FiniteImpl>(Antichain{})) {}

Label Label::empty_label() { return Label(); }

Label Label::zero_label() { return finite(Antichain({NVector::zero()})); }

Label Label::finite(Antichain a) {
  return Label(std::make_shared<FiniteImpl>(std::move(a)));
}

Label Label::generated(const std::vector<NVector>& gens) {
  return finite(Antichain(gens));
}

Label Label::maximum() { return Label(std::make_shared<MaximumImpl>()); }

Label Label::oracle(OracleSpec spec) {
  if (!spec.member || !spec.roof || !spec.supports)
    throw std::invalid_argument(
        "oracle labels need a membership test, a roof, and a support universe");
  return Label(std::make_shared<OracleImpl>(std::move(spec)));
}

bool Label::contains(const NVector& m) const { return impl_->contains(m); }
int Label::roof_bound(int l) const { return impl_->roof_bound(l); }
bool Label::may_support(int l) const { return impl_->may_support(l); }
bool Label::is_finite() const { return impl_->antichain() != nullptr; }
const Antichain* Label::antichain() const { return impl_->antichain(); }
bool Label::is_maximum() const { return impl_->is_maximum(); }
std::string Label::describe() const { return impl_->describe(); }

Label Label::with_zoo(std::shared_ptr<const ZooInfo> z) const {
  Label out = *this;
  out.zoo_ = std::move(z);
  return out;
}

const std::vector<NVector>& Label::window(int n) const {
  const LabelImpl& node = *impl_;
  std::lock_guard<std::mutex> lock(node.mu);
  auto it = node.windows.find(n);
  if (it != node.windows.end()) return *it->second;

  auto out = std::make_shared<std::vector<NVector>>();
  if (n > 0 && node.contains(NVector::zero())) {
    if (node.is_maximum() && n > kMaximumWindowMax)
      throw std::runtime_error("the maximum label only supports windows up to N=" +
                               std::to_string(kMaximumWindowMax));
    std::set<NVector> seen;
    std::deque<NVector> q;
    seen.insert(NVector::zero());
    q.push_back(NVector::zero());
    while (!q.empty()) {
      NVector m = q.front();
      q.pop_front();
      for (int l = 1; l <= n; ++l) {
        if (!node.may_support(l)) continue;
        if (m.at(l) >= std::min(n, node.roof_bound(l))) continue;
        NVector m2 = m.add_unit(l);
        if (seen.count(m2) || !node.contains(m2)) continue;
        if (seen.size() >= kWindowCap)
          throw std::runtime_error("window at N=" + std::to_string(n) +
                                   " exceeds " + std::to_string(kWindowCap) +
                                   " members; tighten the roof or shrink the window");
        seen.insert(m2);
        q.push_back(m2);
      }
    }
    out->assign(seen.begin(), seen.end());
  }
  auto [pos, ignore] = node.windows.emplace(n, std::move(out));
  (void)ignore;
  return *pos->second;
}

NVector Label::window_roof(int n) const {
  NVector r;
  for (const auto& m : window(n)) r = r.join(m);
  return r;
}

Label Label::minus(const NVector& r) const {
  if (r.is_zero()) return *this;
  if (const Antichain* ac = impl_->antichain())
    return finite(minus_antichain(*ac, r));
  if (is_maximum()) return *this;
  return Label(std::make_shared<MinusImpl>(impl_, r));
}

Label Label::meet_interval(int l_star) const {
  if (l_star < 0) throw std::invalid_argument("interval bound must be >= 0");
  if (l_star == 0) return empty_label();
  if (const Antichain* ac = impl_->antichain()) {
    Antichain out;
    for (const auto& e : ac->elems()) out.insert(e.restrict_le(l_star));
    return finite(std::move(out));
  }
  return Label(std::make_shared<MeetImpl>(impl_, l_star));
}

Label Label::oplus(const Label& o) const {
  const Antichain* a = impl_->antichain();
  const Antichain* b = o.impl_->antichain();
  if (a && b) {
    if (a->empty() || b->empty()) return empty_label();
    NVector ra = a->roof(), rb = b->roof();
    for (int l : ra.support())
      if (rb.at(l) > 0)
        throw std::invalid_argument("direct sum parts share coordinate " + std::to_string(l));
    Antichain out;
    for (const auto& ea : a->elems())
      for (const auto& eb : b->elems()) out.insert(ea.plus(eb));
    return finite(std::move(out));
  }
  return Label(std::make_shared<OplusImpl>(impl_, o.impl_));
}

Label Label::union_with(const Label& o) const {
  const Antichain* a = impl_->antichain();
  const Antichain* b = o.impl_->antichain();
  if (a && b) {
    Antichain out;
    for (const auto& e : a->elems()) out.insert(e);
    for (const auto& e : b->elems()) out.insert(e);
    return finite(std::move(out));
  }
  return Label(std::make_shared<UnionImpl>(
      std::vector<ImplPtr>{impl_, o.impl_}));
}

Label Label::intersect(const Label& o) const {
  const Antichain* a = impl_->antichain();
  const Antichain* b = o.impl_->antichain();
  if (a && b) {
    Antichain out;
    for (const auto& ea : a->elems())
      for (const auto& eb : b->elems()) out.insert(ea.meet(eb));
    return finite(std::move(out));
  }
  return Label(std::make_shared<IntersectImpl>(impl_, o.impl_));
}

Label Label::gamow(const Relabeling& tau) const {
  if (!tau.fwd || !tau.inv || !tau.in_l1 || !tau.in_l2)
    throw std::invalid_argument("relabeling needs fwd, inv, and both coordinate sets");
  if (const Antichain* ac = impl_->antichain()) {
    Antichain out;
    for (const auto& e : ac->elems()) {
      std::vector<std::pair<int, int>> pulled;
      for (auto [l, c] : e.entries()) {
        if (!tau.in_l2(l))
          throw std::invalid_argument("support escape: member " + e.str() +
                                      " uses coordinate " + std::to_string(l) +
                                      " outside the relabeled range");
        pulled.push_back({tau.inv(l), c});
      }
      out.insert(NVector(std::move(pulled)));
    }
    return finite(std::move(out));
  }
  // probe a small window of the base for members escaping the covered range
  for (const auto& m : window(kGamowProbe))
    for (int l : m.support())
      if (!tau.in_l2(l))
        throw std::invalid_argument("support escape: member " + m.str() +
                                    " uses coordinate " + std::to_string(l) +
                                    " outside the relabeled range");
  return Label(std::make_shared<GamowImpl>(impl_, tau));
}

// ---------------------------------------------------------------------------
// Free functions

bool window_equal(const Label& a, const Label& b, int n) {
  return a.window(n) == b.window(n);
}

std::string MetricResult::str() const {
  if (bounded_only) return "<=2^-" + std::to_string(exponent);
  if (exponent == 0) return "1";
  return "2^-" + std::to_string(exponent);
}

MetricResult metric(const Label& a, const Label& b, int n_max) {
  if (n_max < 1) throw std::invalid_argument("metric scan needs n_max >= 1");
  for (int n = 1; n <= n_max; ++n)
    if (!window_equal(a, b, n)) return {false, n - 1};
  return {true, n_max};
}

LimitResult limit_window(const std::function<Label(int)>& seq, int horizon, int n) {
  if (horizon < 2) throw std::invalid_argument("limit evaluation needs horizon >= 2");
  LimitResult res;
  res.margin = std::max(2, horizon / 5);
  std::vector<std::set<NVector>> w(horizon + 1);
  std::set<NVector> all;
  for (int i = 1; i <= horizon; ++i) {
    Label li = seq(i);  // keep the label alive while its window is read
    const auto& v = li.window(n);
    w[i] = std::set<NVector>(v.begin(), v.end());
    all.insert(v.begin(), v.end());
  }
  const int tail = horizon - res.margin;
  for (const auto& m : all) {
    int last = 0;
    for (int i = 2; i <= horizon; ++i)
      if (w[i].count(m) != w[i - 1].count(m)) last = i;
    res.last_flip = std::max(res.last_flip, last);
    if (last > tail) res.flipping.push_back(m);
    bool some = false, every = true;
    for (int i = tail + 1; i <= horizon; ++i) {
      bool in = w[i].count(m) > 0;
      some = some || in;
      every = every && in;
    }
    if (some) res.limsup_window.push_back(m);
    if (every) res.liminf_window.push_back(m);
  }
  res.converged = res.flipping.empty();
  return res;
}

std::vector<Label> theta(const Label& m) {
  if (m.is_maximum()) return {m};
  const Antichain* ac = m.antichain();
  if (!ac)
    throw std::invalid_argument(
        "the orbit closure is computed exactly only for finite labels "
        "(or the maximum label)");
  std::set<Antichain> acc;
  acc.insert(Antichain{});  // the empty label is always a limit
  for (const auto& r : ac->closure()) acc.insert(minus_antichain(*ac, r));
  std::vector<Label> out;
  out.reserve(acc.size());
  for (const auto& a : acc) out.push_back(Label::finite(a));
  return out;
}

PropertyKind property_kind_from(const std::string& s) {
  if (s == "finite-type") return PropertyKind::finite_type;
  if (s == "finitary") return PropertyKind::finitary;
  if (s == "simple") return PropertyKind::simple_kind;
  if (s == "recurrent") return PropertyKind::recurrent;
  if (s == "strongly-recurrent") return PropertyKind::strongly_recurrent;
  if (s == "flat") return PropertyKind::flat;
  if (s == "sublattice") return PropertyKind::sublattice;
  throw std::invalid_argument("unknown property: " + s);
}

std::string property_kind_name(PropertyKind k) {
  switch (k) {
    case PropertyKind::finite_type: return "finite-type";
    case PropertyKind::finitary: return "finitary";
    case PropertyKind::simple_kind: return "simple";
    case PropertyKind::recurrent: return "recurrent";
    case PropertyKind::strongly_recurrent: return "strongly-recurrent";
    case PropertyKind::flat: return "flat";
    case PropertyKind::sublattice: return "sublattice";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

std::vector<NVector> positive_members_norm_lex(const Label& m, int n) {
  std::vector<NVector> out;
  for (const auto& v : m.window(n))
    if (!v.is_zero()) out.push_back(v);
  std::sort(out.begin(), out.end(), norm_lex_less);
  return out;
}

PropertyReport check_finite_type(const Label& m, const CheckParams& p) {
  PropertyReport rep;
  rep.kind = PropertyKind::finite_type;
  rep.window = p.n;
  const int probe = p.n + p.search_margin;
  if (m.antichain()) {
    rep.verdict = Verdict::holds;
    rep.exact = true;
    rep.detail = "represented by a finite antichain of " +
                 std::to_string(m.antichain()->size()) + " generators";
    return rep;
  }
  auto zoo = m.zoo();
  if (m.is_maximum() || (zoo && zoo->chain)) {
    // verify a strictly increasing member chain; its length is unbounded, so
    // no finite generator set can dominate it
    auto link = [&](int i) {
      if (m.is_maximum()) return NVector::indicator([&] {
        std::vector<int> ls;
        for (int l = 1; l <= i; ++l) ls.push_back(l);
        return ls;
      }());
      return zoo->chain(i);
    };
    NVector prev = link(1);
    bool ok = m.contains(prev);
    for (int i = 2; ok && i <= probe; ++i) {
      NVector cur = link(i);
      ok = m.contains(cur) && prev.leq(cur) && !(prev == cur);
      prev = cur;
    }
    if (ok) {
      rep.verdict = Verdict::fails;
      rep.exact = true;
      rep.detail = "a strictly increasing member chain was verified to length " +
                   std::to_string(probe) + "; it extends by construction";
      rep.witness = prev;
      return rep;
    }
    rep.verdict = Verdict::inconclusive;
    rep.detail = "the declared member chain failed verification";
    return rep;
  }
  if (zoo && zoo->finite_type.has_value()) {
    if (*zoo->finite_type && zoo->norm_bound) {
      int worst = 0;
      for (const auto& v : m.window(probe)) worst = std::max(worst, v.norm());
      if (worst <= *zoo->norm_bound) {
        rep.verdict = Verdict::holds;
        rep.detail = "member norms stay <= " + std::to_string(*zoo->norm_bound) +
                     " on the probe window, matching the declared bound";
        return rep;
      }
      rep.verdict = Verdict::inconclusive;
      rep.detail = "window members exceed the declared norm bound";
      return rep;
    }
    rep.verdict = *zoo->finite_type ? Verdict::holds : Verdict::fails;
    rep.detail = std::string("certified by construction: ") + zoo->notes;
    return rep;
  }
  int top = 0;
  for (const auto& v : m.window(probe)) top = std::max(top, v.max_supp());
  rep.verdict = Verdict::inconclusive;
  rep.detail = "support reaches coordinate " + std::to_string(top) + " within " +
               std::to_string(probe) + "; no finite generating set was identified";
  return rep;
}

PropertyReport check_recurrent(const Label& m, const CheckParams& p) {
  PropertyReport rep;
  rep.kind = PropertyKind::recurrent;
  rep.window = p.n;
  const int ns = p.n + p.search_margin;
  if (m.is_maximum()) {
    rep.verdict = Verdict::holds;
    rep.exact = true;
    rep.witness = NVector::unit(1);
    rep.detail = "the maximum label is fixed by every shift";
    return rep;
  }
  std::vector<NVector> cands;
  if (auto zoo = m.zoo(); zoo && zoo->recurrence_witness)
    for (int i = 1; i <= p.n + 4; ++i) cands.push_back(zoo->recurrence_witness(i));
  for (const auto& r : positive_members_norm_lex(m, ns)) cands.push_back(r);
  for (const auto& r : cands) {
    if (r.is_zero() || !m.contains(r)) continue;
    if (window_equal(m.minus(r), m, p.n)) {
      rep.verdict = Verdict::holds;
      rep.witness = r;
      rep.detail = "shifting by the witness preserves the window";
      return rep;
    }
  }
  if (m.antichain()) {
    rep.verdict = Verdict::fails;
    rep.exact = true;
    rep.detail = "finite labels never recur: shifting by a positive member "
                 "strictly shrinks the set";
    return rep;
  }
  rep.verdict = Verdict::inconclusive;
  rep.detail = "no recurrence witness found with support <= " + std::to_string(ns);
  return rep;
}

PropertyReport check_strongly_recurrent(const Label& m, const CheckParams& p) {
  PropertyReport rep;
  rep.kind = PropertyKind::strongly_recurrent;
  rep.window = p.n;
  if (m.is_maximum()) {
    rep.verdict = Verdict::holds;
    rep.exact = true;
    rep.detail = "every shift of the maximum label is the maximum label";
    return rep;
  }
  if (m.antichain()) {
    rep.verdict = Verdict::fails;
    rep.exact = true;
    rep.detail = "finite labels are not strongly recurrent; the notion asks "
                 "for tail members past every finite exclusion set";
    return rep;
  }
  const int wide = 2 * p.n + 2;
  const auto& tail_pool = m.window(wide);
  int worst_f = 0;
  for (const auto& mm : m.window(p.n)) {
    if (mm.is_zero()) continue;
    bool served = false;
    for (int f = 0; f <= p.n && !served; ++f) {
      bool all = true;
      NVector bad;
      for (const auto& w : tail_pool) {
        if (w.is_zero() || w.min_supp() <= f) continue;
        if (!m.contains(mm.plus(w))) {
          all = false;
          bad = w;
          break;
        }
      }
      if (all) {
        served = true;
        worst_f = std::max(worst_f, f);
      } else if (f == p.n) {
        rep.verdict = Verdict::fails;
        rep.witness_pair = {mm, bad};
        rep.detail = "no exclusion interval [1..f], f <= " + std::to_string(p.n) +
                     ", makes every far member survive the shift; checked "
                     "against members of B_" + std::to_string(wide);
        return rep;
      }
    }
  }
  rep.verdict = Verdict::holds;
  rep.detail = "every window member admits an exclusion interval [1..f] with f <= " +
               std::to_string(worst_f) + "; far members checked in B_" +
               std::to_string(wide);
  return rep;
}

PropertyReport check_flat(const Label& m, const CheckParams& p) {
  PropertyReport rep;
  rep.kind = PropertyKind::flat;
  rep.window = p.n;
  const int ns = p.n + p.search_margin;
  NVector roof = m.window_roof(ns);
  std::vector<int> keep;
  for (int l : roof.support()) {
    if (l > p.n) continue;
    if (!p.flat_set.empty() &&
        std::find(p.flat_set.begin(), p.flat_set.end(), l) == p.flat_set.end())
      continue;
    keep.push_back(l);
  }
  NVector target = roof.restrict_to(keep);
  if (m.contains(target)) {
    rep.verdict = Verdict::holds;
    rep.detail = "the window roof restricted to the tested coordinates is a member; "
                 "every smaller restriction follows by heredity";
    rep.witness = target;
    return rep;
  }
  rep.verdict = Verdict::fails;
  rep.witness = target;
  rep.detail = "the window roof restricted to the tested coordinates is missing";
  return rep;
}

PropertyReport check_sublattice(const Label& m, const CheckParams& p) {
  PropertyReport rep;
  rep.kind = PropertyKind::sublattice;
  rep.window = p.n;
  const auto& w = m.window(p.n);
  if (w.size() * w.size() > 4'000'000) {
    rep.verdict = Verdict::inconclusive;
    rep.detail = "window too large for the exact pairwise check";
    return rep;
  }
  std::set<NVector> members(w.begin(), w.end());
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) {
      NVector jn = w[i].join(w[j]);
      // the join of two window members stays inside the window box
      if (!members.count(jn)) {
        rep.verdict = Verdict::fails;
        rep.witness_pair = {w[i], w[j]};
        rep.detail = "the join " + jn.str() + " of two members is missing";
        return rep;
      }
    }
  rep.verdict = Verdict::holds;
  rep.detail = "joins of members stay members across the whole window";
  return rep;
}

PropertyReport check_finitary(const Label& m, const CheckParams& p) {
  PropertyReport rep;
  rep.kind = PropertyKind::finitary;
  rep.window = p.n;
  if (m.antichain() || m.is_maximum()) {
    rep.verdict = Verdict::holds;
    rep.exact = true;
    rep.detail = m.is_maximum()
                     ? "the maximum label has no escaping directions"
                     : "finite labels only reach finite shifts";
    return rep;
  }
  auto zoo = m.zoo();
  if (!zoo || !zoo->finitary.has_value() || zoo->sequences.empty()) {
    rep.verdict = Verdict::inconclusive;
    rep.detail = "needs declared escaping directions to sample external limits";
    return rep;
  }
  if (!*zoo->finitary) {
    for (const auto& sq : zoo->sequences) {
      if (!sq.limit_infinite || !sq.expected_limit) continue;
      auto lim = limit_window([&](int i) { return m.minus(sq.r(i)); }, p.horizon, p.n);
      const auto& expect = sq.expected_limit->window(p.n);
      if (lim.converged && lim.limsup_window == expect) {
        rep.verdict = Verdict::fails;
        rep.witness = sq.r(1);
        rep.detail = "direction '" + sq.name + "' converges on the window to '" +
                     sq.expected_limit->describe() + "', an infinite label";
        return rep;
      }
    }
    rep.verdict = Verdict::inconclusive;
    rep.detail = "the declared escaping direction did not settle on this window";
    return rep;
  }
  int verified = 0;
  for (const auto& sq : zoo->sequences) {
    if (!sq.expected_limit || sq.limit_infinite) continue;
    auto lim = limit_window([&](int i) { return m.minus(sq.r(i)); }, p.horizon, p.n);
    const auto& expect = sq.expected_limit->window(p.n);
    if (!lim.converged || lim.limsup_window != expect) {
      rep.verdict = Verdict::inconclusive;
      rep.detail = "direction '" + sq.name + "' did not settle to its declared limit";
      return rep;
    }
    ++verified;
  }
  rep.verdict = Verdict::holds;
  rep.detail = std::to_string(verified) +
               " declared escaping directions converge to finite labels on the "
               "window; certified by construction: " + zoo->notes;
  return rep;
}

PropertyReport check_simple(const Label& m, const CheckParams& p) {
  PropertyReport rep;
  rep.kind = PropertyKind::simple_kind;
  rep.window = p.n;
  if (m.antichain() || m.is_maximum()) {
    rep.verdict = Verdict::holds;
    rep.exact = true;
    rep.detail = m.is_maximum() ? "the orbit closure of the maximum label is itself"
                                : "finite labels have exactly the shifts as limits";
    return rep;
  }
  auto zoo = m.zoo();
  if (!zoo || !zoo->simple.has_value() || zoo->sequences.empty()) {
    rep.verdict = Verdict::inconclusive;
    rep.detail = "needs declared escaping directions to sample external limits";
    return rep;
  }
  if (*zoo->simple) {
    int verified = 0;
    for (const auto& sq : zoo->sequences) {
      if (!sq.matching_r) continue;
      auto lim = limit_window([&](int i) { return m.minus(sq.r(i)); }, p.horizon, p.n);
      Label target = m.minus(*sq.matching_r);
      const auto& expect = target.window(p.n);
      if (!lim.converged || lim.limsup_window != expect) {
        rep.verdict = Verdict::inconclusive;
        rep.detail = "direction '" + sq.name + "' did not settle to the declared shift";
        return rep;
      }
      ++verified;
    }
    rep.verdict = Verdict::holds;
    rep.detail = std::to_string(verified) +
                 " declared escaping directions land on shifts of the label; "
                 "certified by construction: " + zoo->notes;
    return rep;
  }
  const int wide = 2 * p.n + 2;
  for (const auto& sq : zoo->sequences) {
    if (!sq.expected_limit) continue;
    auto lim = limit_window([&](int i) { return m.minus(sq.r(i)); }, p.horizon, wide);
    const auto& expect = sq.expected_limit->window(wide);
    if (!lim.converged || lim.limsup_window != expect) continue;
    bool matched = false;
    std::vector<NVector> rs = m.window(p.n);
    for (const auto& r : rs) {
      if (window_equal(m.minus(r), *sq.expected_limit, wide)) {
        matched = true;
        break;
      }
    }
    if (!matched) {
      rep.verdict = Verdict::fails;
      rep.witness = sq.r(1);
      rep.detail = "direction '" + sq.name + "' converges to '" +
                   sq.expected_limit->describe() + "' on B_" + std::to_string(wide) +
                   ", which no shift by a member of B_" + std::to_string(p.n) +
                   " reproduces";
      return rep;
    }
  }
  rep.verdict = Verdict::inconclusive;
  rep.detail = "no declared direction produced a limit outside the sampled shifts";
  return rep;
}

}  // namespace

PropertyReport property_check(const Label& m, PropertyKind kind, const CheckParams& p) {
  if (p.n < 1) throw std::invalid_argument("property checks need a window N >= 1");
  switch (kind) {
    case PropertyKind::finite_type: return check_finite_type(m, p);
    case PropertyKind::finitary: return check_finitary(m, p);
    case PropertyKind::simple_kind: return check_simple(m, p);
    case PropertyKind::recurrent: return check_recurrent(m, p);
    case PropertyKind::strongly_recurrent: return check_strongly_recurrent(m, p);
    case PropertyKind::flat: return check_flat(m, p);
    case PropertyKind::sublattice: return check_sublattice(m, p);
  }
  throw std::logic_error("unreachable");
}

}  // namespace labshift
