#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "labshift/json_io.hpp"

using namespace labshift;

namespace {

NVector vec(std::initializer_list<int> coords) {
  NVector m;
  for (int l : coords) m = m.add_unit(l);
  return m;
}

}  // namespace

TEST_CASE("integers travel as decimal strings") {
  Int big = from_dec("123456789012345678901234567890");
  CHECK(int_from_json(int_json(big)) == big);
  CHECK(int_from_json(json(-42)) == Int(-42));
  CHECK_THROWS(int_from_json(json(1.5)));
}

TEST_CASE("sparse vectors round-trip with multiplicities") {
  NVector m = vec({1, 1, 3});
  json j = nvector_json(m);
  CHECK(j.dump() == "[[1,2],[3,1]]");
  CHECK(nvector_from_json(j) == m);
  CHECK(nvector_from_json(json::array()) == NVector());
}

TEST_CASE("label expressions evaluate kind by kind") {
  Label gen = label_from_json(json::parse(R"({"kind":"generated","generators":[[[1,1],[2,1]]]})"));
  CHECK(gen.contains(vec({1, 2})));

  Label b = label_from_json(json::parse(R"({"kind":"builtin","name":"ex8b"})"));
  CHECK(b.contains(vec({1, 2})));

  Label nn = label_from_json(
      json::parse(R"({"kind":"builtin","name":"N_n","params":{"n":"2"}})"));
  CHECK(nn.contains(vec({1, 1})));
  CHECK(!nn.contains(vec({1, 1, 1})));

  Label minus = label_from_json(json::parse(
      R"({"kind":"minus","base":{"kind":"generated","generators":[[[1,1],[2,1]]]},"r":[[1,1]]})"));
  CHECK(window_equal(minus, Label::generated({vec({2})}), 3));

  Label oplus = label_from_json(json::parse(
      R"({"kind":"oplus","left":{"kind":"generated","generators":[[[1,1]]]},"right":{"kind":"generated","generators":[[[2,1]]]}})"));
  CHECK(oplus.contains(vec({1, 2})));

  Label uni = label_from_json(json::parse(
      R"({"kind":"union","parts":[{"kind":"generated","generators":[[[1,1]]]},{"kind":"generated","generators":[[[2,1]]]}]})"));
  CHECK(uni.contains(vec({1})));
  CHECK(!uni.contains(vec({1, 2})));

  Label meet = label_from_json(json::parse(
      R"({"kind":"meet","base":{"kind":"generated","generators":[[[1,1],[3,1]]]},"ell":2})"));
  CHECK(meet.contains(vec({1})));
  CHECK(!meet.contains(vec({1, 3})));

  Label pulled = label_from_json(json::parse(
      R"({"kind":"gamow","base":{"kind":"generated","generators":[[[5,1],[6,1]]]},"map":[[1,5],[2,6]]})"));
  CHECK(pulled.contains(vec({1, 2})));

  CHECK_THROWS(label_from_json(json::parse(R"({"kind":"mystery"})")));
}

TEST_CASE("finite labels serialize back to their generators") {
  for (const char* name : {"N_n", "ex11a", "proper", "proper_n"}) {
    Label l = zoo_get(name).label;
    Label back = label_from_json(label_json(l));
    CHECK(window_equal(l, back, 8));
  }
  CHECK_THROWS(label_json(Label::maximum()));
}

TEST_CASE("verdicts spell out their window scope") {
  PropertyReport r;
  r.kind = PropertyKind::finitary;
  r.verdict = Verdict::holds;
  r.exact = true;
  json j = report_json(r);
  CHECK(j["verdict"] == "holds");
  CHECK(j["witness"].is_null());
  r.exact = false;
  r.window = 12;
  CHECK(report_json(r)["verdict"] == "holds-on-window");
  CHECK(report_json(r)["window"] == 12);
  r.verdict = Verdict::fails;
  r.witness = vec({2});
  json f = report_json(r);
  CHECK(f["verdict"] == "fails-on-window");
  CHECK(f["witness"] == json::parse("[[2,1]]"));
}

TEST_CASE("expansions, windows, and ordinals keep their shapes") {
  auto sys = ExpandingSystem::preset("strict");
  auto e = expand(sys, Int(56));
  REQUIRE(e);
  CHECK(expansion_json(*e).dump() == R"({"digits":[2,1],"t":"56"})");

  PartitionScheme p = default_partition();
  SubshiftWindow w = point_window(sys, p, Label::generated({vec({1})}), 50);
  json jw = window_json(w);
  CHECK(jw["N"] == 50);
  CHECK(jw["shift"] == 0);
  CHECK(jw["mode"] == "full");
  CHECK(jw["ones"] == json::parse(R"(["-7","0","7"])"));

  OrdinalCNF o = OrdinalCNF::single(1, 2).plus_finite(3);
  json jo = ordinal_json(o);
  CHECK(jo["cnf"] == json::parse("[[1,2],[0,3]]"));
  CHECK(jo["text"] == "w*2+3");
}

TEST_CASE("certificates list every subset with its witness") {
  Label m = zoo_get("ex11a", {{"n", "2"}}).label;
  IndependenceCertificate cert =
      independence_certificate(m, {vec({4}), vec({5})}, 12);
  json j = certificate_json(cert);
  CHECK(j["ok"] == true);
  CHECK(j["F"].size() == 2);
  CHECK(j["witnesses"].size() == 4);
  for (const auto& w : j["witnesses"]) {
    CHECK(w.contains("A"));
    CHECK(w.contains("r"));
  }
}

TEST_CASE("interval and tf reports serialize without loss") {
  auto sys = ExpandingSystem::preset("strict");
  IpInterval iv = ip_in_interval(sys, Int(-50), Int(50), IpMode::full);
  json j = interval_json(iv, Int(-50), Int(50), "full");
  CHECK(j["members"].size() == 7);
  CHECK(j["complete"] == true);

  TFReport rep = tf_check(ruppert_set(), Int(200),
                          {TFCandidate{"evens", evens_set(), {}, {}}});
  json tj = tf_json(rep);
  CHECK(tj["verdict"] == "not-tf-with-witness");
  CHECK(tj["witness"] == "evens");
  CHECK(tj["table"].contains("evens"));
}
