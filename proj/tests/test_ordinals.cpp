#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "labshift/ordinal.hpp"
#include "labshift/zoo.hpp"

using namespace labshift;

namespace {

NVector vec(std::initializer_list<int> coords) {
  NVector m;
  for (int l : coords) m = m.add_unit(l);
  return m;
}

Label chain_label(int mult, int coord) {
  NVector g;
  for (int i = 0; i < mult; ++i) g = g.add_unit(coord);
  return Label::generated({g});
}

}  // namespace

TEST_CASE("normal-form printing") {
  CHECK(OrdinalCNF().str() == "0");
  CHECK(OrdinalCNF::finite(5).str() == "5");
  CHECK(OrdinalCNF::omega().str() == "w");
  CHECK(OrdinalCNF::single(1, 2).plus_finite(3).str() == "w*2+3");
  CHECK(OrdinalCNF::single(2, 3).plus(OrdinalCNF::omega()).plus_finite(4).str() ==
        "w^2*3+w+4");
}

TEST_CASE("ordinal addition absorbs on the left, never on the right") {
  OrdinalCNF one = OrdinalCNF::finite(1);
  OrdinalCNF w = OrdinalCNF::omega();
  CHECK(one.plus(w) == w);
  CHECK(w.plus(one) != w);
  CHECK(w.plus(one).str() == "w+1");
  CHECK((OrdinalCNF::single(2, 1).plus(OrdinalCNF::single(1, 3))).str() == "w^2+w*3");
  CHECK((OrdinalCNF::single(1, 3).plus(OrdinalCNF::single(2, 1))).str() == "w^2");
}

TEST_CASE("natural addition is coefficientwise") {
  OrdinalCNF a = OrdinalCNF::omega().plus_finite(3);
  OrdinalCNF b = OrdinalCNF::single(1, 2).plus_finite(1);
  CHECK(a.natural_plus(b).str() == "w*3+4");
  CHECK(a.natural_plus(b) == b.natural_plus(a));
}

TEST_CASE("normal-form order is lexicographic on the terms") {
  CHECK(OrdinalCNF::finite(3) < OrdinalCNF::omega());
  CHECK(OrdinalCNF::omega() < OrdinalCNF::omega().plus_finite(1));
  CHECK(OrdinalCNF::omega().plus_finite(9) < OrdinalCNF::single(1, 2));
  CHECK(OrdinalCNF::single(1, 2) < OrdinalCNF::single(2, 1));
}

TEST_CASE("descent strips the maximal members layer by layer") {
  Label m = Label::generated({vec({1, 2})});
  Label z1 = z_lab(m);
  CHECK(window_equal(z1, Label::generated({vec({1}), vec({2})}), 3));
  Label z2 = z_lab(z1);
  CHECK(window_equal(z2, Label::zero_label(), 3));
  CHECK(window_equal(z_lab(Label::zero_label()), Label::empty_label(), 3));
  CHECK_THROWS(z_lab(Label::empty_label()));
  CHECK_THROWS(z_lab(Label::maximum()));
}

TEST_CASE("heights of the multiplicity chains") {
  for (int n = 0; n <= 10; ++n) {
    Label l = zoo_get("N_n", {{"n", std::to_string(n)}}).label;
    HeightReport h = height(l);
    CHECK(h.value == n + 1);
    CHECK(h.chain.size() == static_cast<size_t>(n + 1));
  }
  CHECK(height(Label::generated({vec({1, 2})})).value == 3);
  CHECK_THROWS(height(Label::empty_label()));
  CHECK_THROWS(height(Label::maximum()));
}

TEST_CASE("the orbit-closure stage agrees with the descent stage") {
  Label m = Label::generated({vec({1, 2})});
  HeightStarReport s = height_star(m);
  CHECK(s.value == 3);
  CHECK(s.theta_size == 5);
  CHECK(height_star(Label::zero_label()).value == 1);
  for (int n = 1; n <= 6; ++n) {
    Label l = zoo_get("N_n", {{"n", std::to_string(n)}}).label;
    CHECK(height_star(l).value == height(l).value);
  }
}

TEST_CASE("composite heights: unions take the max, sums add naturally") {
  HeightExpr a = HeightExpr::of(chain_label(2, 1));  // stage 2
  HeightExpr b = HeightExpr::of(chain_label(3, 2));  // stage 3
  CompositeHeight u = composite_height(HeightExpr::disjoint({a, b}));
  CHECK(u.stage == OrdinalCNF::finite(3));
  CHECK(u.height == OrdinalCNF::finite(4));

  CompositeHeight s = composite_height(HeightExpr::sum({a, b}));
  CHECK(s.stage == OrdinalCNF::finite(5));
  CHECK(s.height == OrdinalCNF::finite(6));

  // the composed answer matches the label actually built
  Label glued = chain_label(2, 1).oplus(chain_label(3, 2));
  CHECK(height(glued).value == 6);
  Label united = chain_label(2, 1).union_with(chain_label(3, 2));
  CHECK(height(united).value == 4);
}

TEST_CASE("symbolic stages ride along the natural sum") {
  HeightExpr w = HeightExpr::symbolic(OrdinalCNF::omega(), "w-part");
  HeightExpr n3 = HeightExpr::of(chain_label(3, 1));
  CompositeHeight c = composite_height(HeightExpr::sum({w, n3}));
  CHECK(c.stage.str() == "w+3");
  CHECK(c.height.str() == "w+4");

  CHECK_THROWS(composite_height(HeightExpr::sum({w, w})));
}

TEST_CASE("composite parts must keep their coordinates apart") {
  HeightExpr a = HeightExpr::of(chain_label(2, 1));
  CHECK_THROWS(composite_height(HeightExpr::disjoint({a, a})));
  CHECK_THROWS(composite_height(HeightExpr::sum({a, a})));

  HeightExpr zero = HeightExpr::of(Label::zero_label());
  CompositeHeight u = composite_height(
      HeightExpr::disjoint({zero, HeightExpr::of(chain_label(1, 2))}));
  CHECK(u.stage == OrdinalCNF::finite(1));
  CHECK(u.height == OrdinalCNF::finite(2));
}
