#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "labshift/subshift.hpp"
#include "labshift/zoo.hpp"

#include <set>
#include <string>

using namespace labshift;

namespace {

NVector vec(std::initializer_list<int> coords) {
  NVector m;
  for (int l : coords) m = m.add_unit(l);
  return m;
}

}  // namespace

TEST_CASE("the dyadic partition splits the positions as declared") {
  PartitionScheme p = default_partition();
  CHECK(p.support_map(1) == 1);
  CHECK(p.support_map(2) == 2);
  CHECK(p.support_map(3) == 1);
  CHECK(p.support_map(4) == 3);
  CHECK(p.support_map(12) == 3);
  CHECK(p.block(1, 3) == 5);
  CHECK(p.block(2, 2) == 6);
  CHECK(p.block(3, 2) == 12);
  PartitionCheck chk = verify_prefix(p, 4096);
  CHECK(chk.ok);
}

TEST_CASE("length vectors map digit positions to partition coordinates") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  auto r56 = length_vector(sys, p, Int(56));  // digits at positions 2, 1
  REQUIRE(r56);
  CHECK(*r56 == vec({1, 2}));
  auto r336 = length_vector(sys, p, Int(336));  // positions 3, 1: same coordinate
  REQUIRE(r336);
  CHECK(*r336 == vec({1, 1}));
  CHECK(!length_vector(sys, p, Int(50)));
}

TEST_CASE("point windows put ones exactly on the recognized times") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  SubshiftWindow w = point_window(sys, p, Label::generated({vec({1})}), 50);
  CHECK(w.one_positions() == std::vector<long long>{-7, 0, 7});
  CHECK(w.bit(7));
  CHECK(!w.bit(8));

  std::string art = w.ascii();
  auto nl = art.find('\n');
  REQUIRE(nl == 101);  // 2*50+1 cells
  CHECK(art[50] == '#');
  CHECK(art[49] == '.');
  CHECK(art.substr(nl + 1).size() >= 51);

  SubshiftWindow plus = point_window(sys, p, unit_label_all(), 60, Int(0), true);
  CHECK(plus.one_positions() == std::vector<long long>{0, 7, 49});
}

TEST_CASE("shifted windows keep absolute positions") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  SubshiftWindow w = point_window(sys, p, Label::generated({vec({1})}), 10, Int(7));
  CHECK(w.bit(0));   // absolute 7
  CHECK(w.bit(-7));  // absolute 0
  CHECK(!w.bit(7));  // absolute 14
  CHECK(w.one_positions() == std::vector<long long>{-7, 0});
}

TEST_CASE("classification of a single time") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  Label m = Label::generated({vec({1, 2})});
  SymZerReport rep = sym_zer_classify(sys, p, m, Int(42));
  CHECK(rep.recognized);
  CHECK(rep.r == vec({1, 2}));
  CHECK(!rep.positive_digits);  // 42 = k(2) - k(1)
  CHECK(rep.in_a);
  CHECK(!rep.in_a_plus);
  SymZerReport rej = sym_zer_classify(sys, p, m, Int(50));
  CHECK(!rej.recognized);
}

TEST_CASE("constructed times re-expand to their defining digits") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  CHECK(time_for(sys, p, vec({1})).t == 7);
  CHECK(time_for(sys, p, vec({1, 2})).t == 42);
  CHECK(time_for(sys, p, vec({1, 1})).t == 336);
  CHECK(time_for(sys, p, vec({1}), 2).t == 343);
  TimePoint tp = time_for(sys, p, vec({1, 2, 3}));
  auto e = expand(sys, tp.t);
  REQUIRE(e);
  auto r = length_vector(sys, p, tp.t);
  REQUIRE(r);
  CHECK(*r == vec({1, 2, 3}));
}

TEST_CASE("locality of the window action at value-dominated scales") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  for (const Label& m : {Label::generated({vec({1})}), zoo_get("ex8b").label,
                         unit_label_all()}) {
    LocalityReport rep = locality_check(sys, p, m, Int(343), 50);
    CHECK(rep.applicable);
    CHECK(rep.ok);
  }
  LocalityReport zero = locality_check(sys, p, unit_label_all(), Int(0), 20);
  CHECK(zero.applicable);
  CHECK(zero.ok);
}

TEST_CASE("asymptotic agreement grows along in-label directions") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  Label m = Label::generated({vec({1, 2})});
  AsymptoticReport rep = asymptotic_check(sys, p, m, vec({1}), 10, 4);
  CHECK(rep.ok);
  for (const auto& row : rep.rows)
    if (row.guaranteed) CHECK(row.agreement >= 10);
  CHECK_THROWS(asymptotic_check(sys, p, m, NVector(), 10, 4));
}

TEST_CASE("escaping witnesses separate labels that differ in the window") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  Label a = Label::generated({vec({1})});
  Label b = Label::generated({vec({2})});
  EscapeWitness w = nonasymptotic_witness(sys, p, a, b, 6, 3);
  CHECK(w.found);
  CHECK(!w.swapped);
  CHECK(w.r == vec({1}));
  CHECK(w.times == std::vector<Int>{Int(7), Int(343), Int(16807)});
  CHECK(w.verified);
  CHECK_THROWS(nonasymptotic_witness(sys, p, a, a, 6, 3));
}

TEST_CASE("injectivity radius separates distinct points quickly") {
  auto sys = ExpandingSystem::preset("strict");
  PartitionScheme p = default_partition();
  Label a = Label::generated({vec({1})});
  Label b = Label::generated({vec({2})});
  InjectivityReport rep = injectivity_radius(sys, p, a, b, 1);
  CHECK(rep.radius == 7);
  CHECK(rep.differ);
  CHECK(rep.position <= rep.radius);

  SubshiftWindow wa = point_window(sys, p, a, 50);
  SubshiftWindow wb = point_window(sys, p, b, 50);
  CHECK(first_disagreement(wa, wb) == 7);
}
