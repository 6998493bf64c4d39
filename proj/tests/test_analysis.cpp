#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "labshift/analysis.hpp"
#include "labshift/zoo.hpp"

#include <algorithm>

using namespace labshift;

namespace {

NVector vec(std::initializer_list<int> coords) {
  NVector m;
  for (int l : coords) m = m.add_unit(l);
  return m;
}

}  // namespace

TEST_CASE("integer set oracles answer pointwise") {
  CHECK(evens_set().member(Int(-4)));
  CHECK(!evens_set().member(Int(3)));
  CHECK(odds_set().member(Int(-3)));
  CHECK(ruppert_set().member(Int(4)));
  CHECK(ruppert_set().member(Int(-3)));
  CHECK(!ruppert_set().member(Int(-4)));
  CHECK(!ruppert_set().member(Int(3)));
  auto ex = explicit_set({Int(1), Int(5)});
  CHECK(ex.member(Int(5)));
  CHECK(!ex.member(Int(2)));
}

TEST_CASE("label time sets recognize exactly the admissible times") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  auto a = time_set(sys, p, unit_label_all());
  CHECK(a.member(Int(0)));
  CHECK(a.member(Int(7)));
  CHECK(a.member(Int(-49)));
  CHECK(!a.member(Int(42)));  // two digits
  CHECK(!a.member(Int(50)));  // not recognized
  auto ap = time_set(sys, p, unit_label_all(), true);
  CHECK(ap.member(Int(7)));
  CHECK(!ap.member(Int(-7)));
  CHECK(ap.member(Int(0)));
}

TEST_CASE("the half-even half-odd set is refuted by its even block") {
  TFReport rep = tf_check(ruppert_set(), Int(200),
                          {TFCandidate{"evens", evens_set(), {}, {}}});
  CHECK(rep.refuted());
  CHECK(rep.witness_name == "evens");
  CHECK(rep.n_used >= 1);
  REQUIRE(!rep.table.empty());
  for (const auto& row : rep.table.front().second)
    CHECK(row.survivors >= rep.threshold);
}

TEST_CASE("automatic candidates refute the obvious non-finite sets") {
  TFReport evens = tf_check(evens_set(), Int(200), auto_candidates(evens_set(), 200));
  CHECK(evens.refuted());
  TFReport rup = tf_check(ruppert_set(), Int(200), auto_candidates(ruppert_set(), 200));
  CHECK(rup.refuted());
}

TEST_CASE("sparse unit-time sets survive the same probe") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  auto a = time_set(sys, p, unit_label_all());
  TFReport rep = tf_check(a, Int(200), auto_candidates(a, 200));
  CHECK(rep.verdict == "tf-on-window");
}

TEST_CASE("a two-coordinate member yields a certified refutation") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  Label m = zoo_get("ex8b").label;
  TFCandidate cand = label_pair_candidate(sys, p, vec({1, 2}), 30);
  CHECK(cand.b_values.size() == 30);
  CHECK(cand.shifts.size() == 30);
  Int radius = cand.b_values.back() + cand.shifts.back() + 1;
  TFReport rep = tf_check(time_set(sys, p, m), radius, {cand});
  CHECK(rep.refuted());
  CHECK(rep.n_used == -1);  // certified, not scanned
}

TEST_CASE("independence certificates cover every subset with a live witness") {
  Label m = zoo_get("ex11a", {{"n", "2"}}).label;
  std::vector<NVector> f = {vec({4}), vec({5})};
  IndependenceCertificate cert = independence_certificate(m, f, 12);
  REQUIRE(cert.ok);
  REQUIRE(cert.witnesses.size() == 4);
  for (size_t mask = 0; mask < 4; ++mask) {
    const auto& w = cert.witnesses[mask];
    Label cut = m.minus(w.r);
    for (size_t i = 0; i < f.size(); ++i) {
      bool wanted = (mask >> i) & 1;
      CHECK(cut.contains(f[i]) == wanted);
    }
  }
}

TEST_CASE("the three-stage ladder certifies all eight subsets") {
  Label m = zoo_get("ex11a", {{"n", "3"}}).label;
  IndependenceCertificate cert =
      independence_certificate(m, {vec({10}), vec({11}), vec({12})}, 24);
  CHECK(cert.ok);
  CHECK(cert.witnesses.size() == 8);
}

TEST_CASE("flat labels certify through roof restrictions") {
  IndependenceCertificate ok = flat_independence(indicator_label_all(), {1, 2, 3}, 5);
  CHECK(ok.ok);
  CHECK(ok.witnesses.size() == 8);

  IndependenceCertificate bad = flat_independence(zoo_get("ex8a").label, {1, 2, 3}, 5);
  CHECK(!bad.ok);
  CHECK(!bad.failing_a.empty());
}

TEST_CASE("the counting report carries its exactness note") {
  auto sys = ExpandingSystem::preset("paper");
  DensityReport rep = density_report(sys, {ipow(Int(4), 3), ipow(Int(4), 4)});
  CHECK(rep.rows.size() == 2);
  CHECK(!rep.note.empty());
  for (const auto& r : rep.rows) CHECK(r.within_bound);
}
