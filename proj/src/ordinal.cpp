#include "labshift/ordinal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace labshift {

OrdinalCNF OrdinalCNF::finite(long long n) {
  if (n < 0) throw std::invalid_argument("ordinal coefficients are nonnegative");
  OrdinalCNF o;
  if (n > 0) o.terms.push_back({0, n});
  return o;
}

OrdinalCNF OrdinalCNF::omega() { return single(1, 1); }

OrdinalCNF OrdinalCNF::single(int exp, long long coeff) {
  if (exp < 0 || coeff < 0) throw std::invalid_argument("bad CNF term");
  OrdinalCNF o;
  if (coeff > 0) o.terms.push_back({exp, coeff});
  return o;
}

bool OrdinalCNF::is_finite() const {
  return terms.empty() || (terms.size() == 1 && terms[0].first == 0);
}

long long OrdinalCNF::finite_value() const {
  if (!is_finite()) throw std::invalid_argument("ordinal is infinite");
  return terms.empty() ? 0 : terms[0].second;
}

OrdinalCNF OrdinalCNF::plus(const OrdinalCNF& o) const {
  if (o.is_zero()) return *this;
  int e = o.terms[0].first;
  OrdinalCNF out;
  for (const auto& t : terms)
    if (t.first > e) out.terms.push_back(t);
  // the leading term of o absorbs or merges with anything at its exponent
  auto merged = o.terms;
  for (const auto& t : terms)
    if (t.first == e) merged[0].second += t.second;
  out.terms.insert(out.terms.end(), merged.begin(), merged.end());
  return out;
}

OrdinalCNF OrdinalCNF::natural_plus(const OrdinalCNF& o) const {
  std::map<int, long long, std::greater<>> acc;
  for (const auto& t : terms) acc[t.first] += t.second;
  for (const auto& t : o.terms) acc[t.first] += t.second;
  OrdinalCNF out;
  for (const auto& [e, c] : acc)
    if (c > 0) out.terms.push_back({e, c});
  return out;
}

OrdinalCNF OrdinalCNF::plus_finite(long long n) const {
  return plus(finite(n));
}

std::string OrdinalCNF::str() const {
  if (terms.empty()) return "0";
  std::ostringstream oss;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) oss << "+";
    first = false;
    if (e == 0) {
      oss << c;
    } else {
      oss << "w";
      if (e > 1) oss << "^" << e;
      if (c > 1) oss << "*" << c;
    }
  }
  return oss.str();
}

Label z_lab(const Label& m) {
  const Antichain* a = m.antichain();
  if (!a) throw std::invalid_argument("descent needs a finite label");
  if (a->empty()) throw std::invalid_argument("the empty label has no descent");
  Antichain next;
  for (const auto& v : a->closure())
    if (!a->elems().count(v)) next.insert(v);
  return Label::finite(next);
}

HeightReport height(const Label& m) {
  const Antichain* a = m.antichain();
  if (!a) throw std::invalid_argument("height needs a finite label");
  if (a->empty()) throw std::invalid_argument("the empty label has no height");
  HeightReport rep;
  Label cur = m;
  rep.chain.push_back(cur);
  while (!(cur.antichain()->size() == 1 && cur.antichain()->elems().begin()->is_zero())) {
    cur = z_lab(cur);
    if (cur.antichain()->empty())
      throw std::logic_error("descent of a nonempty label skipped the zero label");
    rep.chain.push_back(cur);
  }
  rep.value = static_cast<long long>(rep.chain.size());
  std::ostringstream oss;
  oss << "descends to the zero label in " << rep.chain.size() - 1 << " steps";
  rep.detail = oss.str();
  return rep;
}

HeightStarReport height_star(const Label& m) {
  const Antichain* a = m.antichain();
  if (!a) throw std::invalid_argument("height* needs a finite label");
  if (a->empty()) throw std::invalid_argument("the empty label has no height*");
  auto to_chain = [](const Label& l) { return *l.antichain(); };

  std::vector<Label> orbit = theta(m);
  std::map<Antichain, std::vector<Antichain>> punctured;  // theta'(N)
  for (const auto& n : orbit) {
    Antichain key = to_chain(n);
    std::vector<Antichain> th;
    for (const auto& p : theta(n)) {
      Antichain pc = to_chain(p);
      if (!(pc == key)) th.push_back(pc);
    }
    punctured[key] = th;
  }

  std::set<Antichain> phi;
  phi.insert(Antichain{});  // the empty label seeds the recursion
  Antichain target = to_chain(m);
  auto settled = [&](const Antichain& key) {
    for (const auto& p : punctured.at(key))
      if (!phi.count(p)) return false;
    return true;
  };
  for (long long stage = 0;; ++stage) {
    if (settled(target)) {
      HeightStarReport rep;
      rep.value = stage + 1;
      rep.theta_size = static_cast<long long>(orbit.size());
      std::ostringstream oss;
      oss << "all punctured orbit closures settle by stage " << stage;
      rep.detail = oss.str();
      return rep;
    }
    // settle against the previous stage only; inserting mid-sweep would let one
    // pass swallow several levels and undercount the stage
    std::vector<Antichain> fresh;
    for (const auto& [key, th] : punctured)
      if (!phi.count(key) && settled(key)) fresh.push_back(key);
    if (fresh.empty())
      throw std::logic_error("height* recursion stalled below the top label");
    phi.insert(fresh.begin(), fresh.end());
  }
}

HeightExpr HeightExpr::of(const Label& l) {
  HeightExpr e;
  e.kind = Kind::leaf;
  e.label = l;
  return e;
}

HeightExpr HeightExpr::symbolic(const OrdinalCNF& stage, const std::string& name) {
  HeightExpr e;
  e.kind = Kind::symbolic;
  e.declared = stage;
  e.symbol = name;
  return e;
}

HeightExpr HeightExpr::disjoint(std::vector<HeightExpr> kids) {
  HeightExpr e;
  e.kind = Kind::disjoint_union;
  e.kids = std::move(kids);
  return e;
}

HeightExpr HeightExpr::sum(std::vector<HeightExpr> kids) {
  HeightExpr e;
  e.kind = Kind::direct_sum;
  e.kids = std::move(kids);
  return e;
}

namespace {

void collect_supports(const HeightExpr& e, std::set<int>& supp) {
  if (e.kind == HeightExpr::Kind::leaf) {
    NVector roof = e.label.window_roof(12);  // keep the roof alive while iterating
    for (const auto& [l, c] : roof.entries()) supp.insert(l);
  }
  for (const auto& k : e.kids) collect_supports(k, supp);
}

OrdinalCNF stage_of(const HeightExpr& e, std::ostringstream& deriv) {
  switch (e.kind) {
    case HeightExpr::Kind::leaf: {
      long long h = height(e.label).value;
      OrdinalCNF s = OrdinalCNF::finite(h - 1);
      deriv << s.str();
      return s;
    }
    case HeightExpr::Kind::symbolic:
      deriv << e.symbol;
      return e.declared;
    case HeightExpr::Kind::disjoint_union: {
      if (e.kids.empty()) throw std::invalid_argument("union of nothing");
      OrdinalCNF best;
      deriv << "max(";
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) deriv << ", ";
        OrdinalCNF s = stage_of(e.kids[i], deriv);
        if (best < s) best = s;
      }
      deriv << ")";
      // parts on shared coordinates could shadow each other's maxima
      std::set<int> seen;
      for (const auto& k : e.kids) {
        std::set<int> mine;
        collect_supports(k, mine);
        for (int l : mine)
          if (!seen.insert(l).second)
            throw std::invalid_argument("union parts share coordinate " +
                                        std::to_string(l));
      }
      return best;
    }
    case HeightExpr::Kind::direct_sum: {
      if (e.kids.empty()) throw std::invalid_argument("sum of nothing");
      OrdinalCNF acc;
      int infinite_parts = 0;
      deriv << "(";
      for (size_t i = 0; i < e.kids.size(); ++i) {
        if (i) deriv << " (+) ";
        OrdinalCNF s = stage_of(e.kids[i], deriv);
        if (!s.is_finite()) ++infinite_parts;
        acc = acc.natural_plus(s);
      }
      deriv << ")";
      if (infinite_parts > 1)
        throw std::invalid_argument(
            "direct sums with two infinite factors are outside the verified compositions");
      std::set<int> seen;
      for (const auto& k : e.kids) {
        std::set<int> mine;
        collect_supports(k, mine);
        for (int l : mine)
          if (!seen.insert(l).second)
            throw std::invalid_argument("sum parts share coordinate " +
                                        std::to_string(l));
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

CompositeHeight composite_height(const HeightExpr& e) {
  CompositeHeight out;
  std::ostringstream deriv;
  out.stage = stage_of(e, deriv);
  out.height = out.stage.plus_finite(1);
  deriv << " -> stage " << out.stage.str() << ", height " << out.height.str();
  out.derivation = deriv.str();
  return out;
}

}  // namespace labshift
