#include "labshift/json_io.hpp"

#include <stdexcept>

namespace labshift {

namespace {

constexpr long long kSafe = (1LL << 53);

json shift_json(const Int& v) {
  // fits-in-double shifts stay numeric for readability
  if (v > -kSafe && v < kSafe) return json(static_cast<long long>(v));
  return json(to_dec(v));
}

std::string verdict_str(const PropertyReport& r) {
  switch (r.verdict) {
    case Verdict::holds: return r.exact ? "holds" : "holds-on-window";
    case Verdict::fails: return r.exact ? "fails" : "fails-on-window";
    default: return "inconclusive";
  }
}

json nvector_list_json(const std::vector<NVector>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(nvector_json(m));
  return out;
}

}  // namespace

json int_json(const Int& v) { return json(to_dec(v)); }

Int int_from_json(const json& j) {
  if (j.is_string()) return from_dec(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw std::invalid_argument("integer expected (number or decimal string)");
}

json nvector_json(const NVector& m) {
  json out = json::array();
  for (const auto& [l, c] : m.entries()) out.push_back(json::array({l, c}));
  return out;
}

NVector nvector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("nvector: array of pairs expected");
  NVector m;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("nvector: each entry is [coordinate, multiplicity]");
    int l = p[0].get<int>();
    long long c = p[1].get<long long>();
    for (long long i = 0; i < c; ++i) m = m.add_unit(l);
  }
  return m;
}

Label label_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("label: object with a kind expected");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "generated") {
    std::vector<NVector> gens;
    for (const auto& g : j.at("generators")) gens.push_back(nvector_from_json(g));
    return Label::generated(gens);
  }
  if (kind == "builtin") {
    std::map<std::string, std::string> params;
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items())
        params[k] = v.is_string() ? v.get<std::string>() : v.dump();
    return zoo_get(j.at("name").get<std::string>(), params).label;
  }
  if (kind == "minus")
    return label_from_json(j.at("base")).minus(nvector_from_json(j.at("r")));
  if (kind == "oplus")
    return label_from_json(j.at("left")).oplus(label_from_json(j.at("right")));
  if (kind == "union" || kind == "intersect") {
    const auto& parts = j.at("parts");
    if (parts.empty()) throw std::invalid_argument("label: parts must be nonempty");
    Label acc = label_from_json(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) {
      Label next = label_from_json(parts[i]);
      acc = kind == "union" ? acc.union_with(next) : acc.intersect(next);
    }
    return acc;
  }
  if (kind == "meet")
    return label_from_json(j.at("base")).meet_interval(j.at("ell").get<int>());
  if (kind == "gamow") {
    std::vector<std::pair<int, int>> fwd;
    for (const auto& p : j.at("map"))
      fwd.emplace_back(p[0].get<int>(), p[1].get<int>());
    return label_from_json(j.at("base")).gamow(Relabeling::finite_map(fwd));
  }
  throw std::invalid_argument("label: unknown kind " + kind);
}

json label_json(const Label& l) {
  const Antichain* a = l.antichain();
  if (!a) throw std::invalid_argument("label_json: finite labels only");
  // an antichain holding the zero vector is exactly {0}, so emitting every
  // element keeps the zero label distinct from the empty one
  json gens = json::array();
  for (const auto& m : a->elems()) gens.push_back(nvector_json(m));
  return json{{"kind", "generated"}, {"generators", gens}};
}

json expansion_json(const Expansion& e) {
  return json{{"t", to_dec(e.value)}, {"digits", e.digits}};
}

json interval_json(const IpInterval& iv, const Int& lo, const Int& hi,
                   const std::string& mode) {
  json members = json::array();
  for (const auto& v : iv.values) members.push_back(to_dec(v));
  json out{{"lo", to_dec(lo)},
           {"hi", to_dec(hi)},
           {"mode", mode},
           {"members", members},
           {"complete", iv.complete}};
  if (!iv.complete || mode == "restricted")
    out["guaranteed_radius"] = to_dec(iv.guaranteed_radius);
  return out;
}

json density_json(const DensityReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back(json{{"n", to_dec(r.n)},
                        {"count", to_dec(r.count)},
                        {"ratio", r.ratio},
                        {"bound", r.bound},
                        {"within_bound", r.within_bound}});
  return json{{"rows", rows}, {"note", rep.note}};
}

json window_json(const SubshiftWindow& w) {
  json ones = json::array();
  for (long long p : w.one_positions()) ones.push_back(to_dec(w.shift + p));
  return json{{"N", w.n},
              {"shift", shift_json(w.shift)},
              {"mode", w.plus ? "plus" : "full"},
              {"ones", ones}};
}

json metric_json(const MetricResult& m) {
  return json{{"exponent", m.exponent},
              {"bounded_only", m.bounded_only},
              {"text", m.str()}};
}

json limit_json(const LimitResult& r) {
  return json{{"converged", r.converged},
              {"margin", r.margin},
              {"last_flip", r.last_flip},
              {"limsup", nvector_list_json(r.limsup_window)},
              {"liminf", nvector_list_json(r.liminf_window)},
              {"flipping", nvector_list_json(r.flipping)}};
}

json ordinal_json(const OrdinalCNF& o) {
  json cnf = json::array();
  for (const auto& [e, c] : o.terms) cnf.push_back(json::array({e, c}));
  return json{{"cnf", cnf}, {"text", o.str()}};
}

json height_json(const HeightReport& r) {
  json chain = json::array();
  for (const auto& l : r.chain) chain.push_back(label_json(l));
  return json{{"value", r.value}, {"chain", chain}, {"detail", r.detail}};
}

json height_star_json(const HeightStarReport& r) {
  return json{{"value", r.value},
              {"theta_size", r.theta_size},
              {"detail", r.detail}};
}

json report_json(const PropertyReport& r) {
  json out{{"kind", property_kind_name(r.kind)},
           {"verdict", verdict_str(r)},
           {"window", r.window},
           {"witness", r.witness ? nvector_json(*r.witness) : json(nullptr)},
           {"detail", r.detail}};
  if (r.witness_pair)
    out["witness_pair"] = json::array(
        {nvector_json(r.witness_pair->first), nvector_json(r.witness_pair->second)});
  return out;
}

json certificate_json(const IndependenceCertificate& c) {
  json wits = json::array();
  for (const auto& w : c.witnesses)
    wits.push_back(json{{"A", nvector_list_json(w.a)}, {"r", nvector_json(w.r)}});
  json out{{"ok", c.ok}, {"F", nvector_list_json(c.f)}, {"witnesses", wits}};
  if (!c.ok) out["failing_A"] = nvector_list_json(c.failing_a);
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

json tf_json(const TFReport& r) {
  json table = json::object();
  for (const auto& [name, rows] : r.table) {
    json jr = json::array();
    for (const auto& row : rows)
      jr.push_back(json{{"N", row.n}, {"survivors", row.survivors}});
    table[name] = jr;
  }
  json wb = json::array();
  for (const auto& b : r.witness_b) wb.push_back(to_dec(b));
  return json{{"verdict", r.verdict},
              {"witness", r.witness_name},
              {"witness_B", wb},
              {"radius", to_dec(r.radius)},
              {"threshold", r.threshold},
              {"N_used", r.n_used},
              {"table", table},
              {"detail", r.detail}};
}

json zoo_verify_json(const ZooVerifyReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"entry", row.entry},
                        {"tag", row.tag},
                        {"expected", row.expected == Verdict::holds ? "holds" : "fails"},
                        {"report", report_json(row.got)},
                        {"ok", row.ok}});
  return json{{"rows", rows},
              {"all_ok", r.all_ok},
              {"checked", r.checked},
              {"inconclusive", r.inconclusive}};
}

}  // namespace labshift
