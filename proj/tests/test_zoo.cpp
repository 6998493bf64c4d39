#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "labshift/zoo.hpp"

#include <set>

using namespace labshift;

namespace {

NVector vec(std::initializer_list<int> coords) {
  NVector m;
  for (int l : coords) m = m.add_unit(l);
  return m;
}

}  // namespace

TEST_CASE("every named entry constructs and respects its own roof") {
  for (const auto& name : zoo_names()) {
    ZooEntry e = zoo_get(name);
    CHECK(e.name == name);
    CHECK(!e.summary.empty());
    for (const auto& m : e.label.window(5)) {
      for (const auto& [l, c] : m.entries()) {
        CHECK(c <= e.label.roof_bound(l));
        CHECK(e.label.may_support(l));
      }
    }
  }
}

TEST_CASE("adjacency-or-one pairs") {
  Label m = zoo_get("ex8a").label;
  CHECK(m.contains(vec({1, 5})));
  CHECK(m.contains(vec({5, 6})));
  CHECK(m.contains(vec({3})));
  CHECK(!m.contains(vec({5, 7})));
  CHECK(!m.contains(vec({1, 1})));
  CHECK(!m.contains(vec({1, 2, 3})));
}

TEST_CASE("odd-even pairs and their stable subtractions") {
  Label m = zoo_get("ex8b").label;
  CHECK(m.contains(vec({1, 2})));
  CHECK(m.contains(vec({3, 4})));
  CHECK(m.contains(vec({4, 7})));
  CHECK(!m.contains(vec({1, 3})));
  CHECK(!m.contains(vec({2, 4})));
  CHECK(!m.contains(vec({2, 2})));
  // subtracting one even coordinate frees every odd unit, independently of b
  CHECK(window_equal(m.minus(vec({2})), m.minus(vec({8})), 10));
}

TEST_CASE("three-part generators of the double-limit example") {
  Label m = zoo_get("ex10a").label;
  CHECK(m.contains(vec({1})));
  CHECK(m.contains(vec({1, 3})));
  CHECK(m.contains(vec({1, 3, 4})));
  CHECK(m.contains(vec({3, 3, 2})));
  CHECK(m.contains(vec({3, 3})));
  CHECK(m.contains(vec({3, 5, 4})));
  CHECK(m.contains(vec({5, 4})));
  CHECK(!m.contains(vec({1, 3, 3})));
  CHECK(!m.contains(vec({1, 5})));
  CHECK(!m.contains(vec({3, 3, 4})));
  CHECK(!m.contains(vec({5, 6})));
  CHECK(!m.contains(vec({3, 5, 6})));
}

TEST_CASE("subtraction identities of the double-limit example on a window") {
  Label m = zoo_get("ex10a").label;
  // the four one-unit subtractions, each given by its own oracle window
  auto gen = [](std::initializer_list<NVector> gens) {
    return Label::generated(std::vector<NVector>(gens));
  };
  CHECK(window_equal(m.minus(vec({1})),
                     gen({vec({3, 2}), vec({3, 4}), vec({3, 6}), vec({3, 8})}), 8));
  CHECK(window_equal(m.minus(vec({3})),
                     gen({vec({3, 2}), vec({5, 2}), vec({5, 4}), vec({7, 2}),
                          vec({7, 4}), vec({7, 6}), vec({1, 2}), vec({1, 4}),
                          vec({1, 6}), vec({1, 8})}),
                     8));
  CHECK(window_equal(m.minus(vec({5})), gen({vec({3, 2}), vec({3, 4})}), 8));
  CHECK(window_equal(m.minus(vec({4})),
                     gen({vec({3, 5}), vec({3, 7}), vec({1, 3})}), 8));
}

TEST_CASE("iterated limits of the double-limit example disagree") {
  Label m = zoo_get("ex10a").label;
  // inner limit over a at fixed b: constant {0, x(3)} once a > max(b, 1)
  for (int b = 1; b <= 3; ++b) {
    auto inner = [&](int a) { return m.minus(vec({2 * a + 1, 2 * b})); };
    LimitResult r = limit_window(inner, 30, 8);
    CHECK(r.converged);
    CHECK(std::set<NVector>(r.limsup_window.begin(), r.limsup_window.end()) ==
          std::set<NVector>{NVector(), vec({3})});
  }
  // outer direction: at fixed a, large b makes the pair leave the label
  for (int a = 2; a <= 4; ++a) {
    auto outer = [&](int b) { return m.minus(vec({2 * a + 1, 2 * b})); };
    LimitResult r = limit_window(outer, 30, 8);
    CHECK(r.converged);
    CHECK(r.limsup_window.empty());
  }
}

TEST_CASE("prime-power bookkeeping of the three-class example") {
  Label m = zoo_get("ex10b").label;
  CHECK(m.contains(vec({107})));
  CHECK(m.contains(vec({3, 107})));
  CHECK(m.contains(vec({3, 4, 107})));
  CHECK(m.contains(vec({527})));  // 3*5^2*7 + 2
  CHECK(m.contains(vec({6, 7})));
  CHECK(!m.contains(vec({6, 107})));
  CHECK(!m.contains(vec({7, 107})));
  CHECK(!m.contains(vec({1})));
  CHECK(!m.contains(vec({2})));
  CHECK(!m.contains(vec({3, 6})));
  CHECK(!m.contains(vec({4, 4})));
}

TEST_CASE("tree supports pair only along comparable words") {
  Label m = zoo_get("ex10cmoved").label;
  CHECK(m.contains(vec({5, 5})));
  CHECK(m.contains(vec({2, 4})));
  CHECK(m.contains(vec({2, 5})));
  CHECK(m.contains(vec({3, 7})));
  CHECK(!m.contains(vec({2, 6})));
  CHECK(!m.contains(vec({4, 5})));
  CHECK(!m.contains(vec({1})));
  CHECK(!m.contains(vec({2, 2, 4})));
}

TEST_CASE("ladder pointers expose exactly their subset") {
  Label m = zoo_get("ex11a").label;  // stage 3: bases 10..12, pointers 14..20
  CHECK(m.contains(vec({14, 10})));
  CHECK(m.contains(vec({18, 10})));
  CHECK(m.contains(vec({18, 12})));
  CHECK(!m.contains(vec({14, 11})));
  CHECK(!m.contains(vec({18, 11})));
  CHECK(!m.contains(vec({13})));
  CHECK(window_equal(m.minus(vec({14})), Label::generated({vec({10})}), 24));
  CHECK(window_equal(m.minus(vec({20})),
                     Label::generated({vec({10}), vec({11}), vec({12})}), 24));
}

TEST_CASE("the infinite ladder points through even codes") {
  Label m = zoo_get("ex11b").label;
  CHECK(m.contains(vec({4, 1})));
  CHECK(m.contains(vec({6, 3})));
  CHECK(m.contains(vec({8, 1})));
  CHECK(m.contains(vec({8, 3})));
  CHECK(m.contains(vec({5})));
  CHECK(!m.contains(vec({4, 3})));
  CHECK(!m.contains(vec({6, 1})));
  CHECK(!m.contains(vec({2})));
  CHECK(!m.contains(vec({3, 5})));
  CHECK(!m.contains(vec({4, 6})));
}

TEST_CASE("patchwork blocks enumerate every finite label once per length") {
  auto blocks = permex_blocks(10);
  REQUIRE(blocks.size() >= 6);
  CHECK(blocks[0].start == 1);
  CHECK(blocks[0].len == 1);
  CHECK(window_equal(blocks[0].block_label, Label::empty_label(), 2));
  CHECK(window_equal(blocks[1].block_label, Label::zero_label(), 2));
  CHECK(blocks[3].start == 5);
  CHECK(window_equal(blocks[3].block_label, Label::generated({vec({1})}), 2));

  Label m = zoo_get("permex").label;
  CHECK(m.contains(NVector()));
  CHECK(!m.contains(vec({1})));
  CHECK(!m.contains(vec({2})));
  CHECK(m.contains(vec({5})));
  CHECK(m.contains(vec({11, 11})));
  CHECK(m.contains(vec({12})));
  CHECK(!m.contains(vec({13})));
  CHECK(m.contains(vec({15})));
  CHECK(!m.contains(vec({5, 12})));  // members never span two blocks
}

TEST_CASE("the patchwork reaches any finite label inside its own block") {
  Label m = zoo_get("permex").label;
  Label target = Label::generated({vec({1, 2})});
  auto blocks = permex_blocks(60);
  bool found = false;
  for (const auto& b : blocks) {
    if (b.len != 2 || !window_equal(b.block_label, target, 3)) continue;
    found = true;
    int s = static_cast<int>(b.start);
    CHECK(m.contains(vec({s, s + 1})));
    CHECK(m.contains(vec({s})));
    CHECK(m.contains(vec({s + 1})));
    CHECK(!m.contains(vec({s, s, s + 1})));
    break;
  }
  CHECK(found);
}

TEST_CASE("the patchwork escape subtracts to the zero label") {
  ZooEntry e = zoo_get("permex");
  auto z = e.label.zoo();
  REQUIRE(z);
  REQUIRE(!z->sequences.empty());
  const EscapeSequence& s = z->sequences.front();
  REQUIRE(s.matching_r);
  CHECK(*s.matching_r == vec({5}));
  CHECK(s.r(1) == vec({5}));
  CHECK(s.r(2) == vec({11, 11}));
  CHECK(s.r(3) == vec({12}));
  for (int i = 1; i <= 6; ++i) {
    NVector r = s.r(i);
    CHECK(e.label.contains(r));
    CHECK(window_equal(e.label.minus(r), Label::zero_label(), 6));
  }
}

TEST_CASE("one odd unit over flat evens") {
  Label m = zoo_get("exx").label;
  CHECK(m.contains(vec({1, 2, 4})));
  CHECK(m.contains(vec({2, 4, 6})));
  CHECK(!m.contains(vec({1, 3})));
  CHECK(!m.contains(vec({2, 2})));
}

TEST_CASE("doubled-top and odd-cap chain breakers") {
  Label a = zoo_get("ex6a").label;
  CHECK(a.contains(vec({1, 2, 3, 3})));
  CHECK(a.contains(vec({2, 2})));
  CHECK(a.contains(vec({1, 2, 3})));
  CHECK(!a.contains(vec({1, 2, 2, 3})));
  CHECK(!a.contains(vec({1, 1})));
  CHECK(!a.contains(vec({2, 2, 2})));

  Label b = zoo_get("ex6b").label;
  CHECK(b.contains(vec({2, 4, 5})));
  CHECK(b.contains(vec({2, 4})));
  CHECK(b.contains(vec({7})));
  CHECK(!b.contains(vec({2, 3, 4})));
  CHECK(!b.contains(vec({1})));
  CHECK(!b.contains(vec({3, 5})));
}

TEST_CASE("the sublabel pair really nests") {
  Label m = zoo_get("proper").label;
  Label n = zoo_get("proper_n").label;
  for (const auto& member : n.window(6)) CHECK(m.contains(member));
  CHECK(m.contains(vec({2, 2, 3})));
  CHECK(!n.contains(vec({2, 2, 3})));
}

TEST_CASE("parameterized entries honor their parameters") {
  Label n5 = zoo_get("N_n", {{"n", "5"}}).label;
  CHECK(n5.contains(vec({1, 1, 1, 1, 1})));
  CHECK(!n5.contains(vec({1, 1, 1, 1, 1, 1})));

  Label u = zoo_get("units", {{"L", "2,4"}}).label;
  CHECK(u.contains(vec({2})));
  CHECK(u.contains(vec({4})));
  CHECK(!u.contains(vec({3})));
  CHECK(!u.contains(vec({2, 4})));

  Label ind = zoo_get("indicator", {{"L", "1,3"}}).label;
  CHECK(ind.contains(vec({1, 3})));
  CHECK(!ind.contains(vec({1, 1})));
  CHECK(!ind.contains(vec({2})));

  Label tree1 = zoo_get("ex10cmoved", {{"x", "1"}}).label;
  auto z = tree1.zoo();
  REQUIRE(z);
  CHECK(z->sequences.front().r(1) == vec({3}));
  CHECK(z->sequences.front().r(2) == vec({7}));
}

TEST_CASE("every declared tag survives its checker at the default window") {
  ZooVerifyReport rep = zoo_verify(8, 40);
  for (const auto& row : rep.rows) {
    INFO(row.entry << " / " << row.tag << ": " << row.got.detail);
    CHECK(row.ok);
  }
  CHECK(rep.all_ok);
  CHECK(rep.checked > 30);
  CHECK(rep.inconclusive <= 2);
}
