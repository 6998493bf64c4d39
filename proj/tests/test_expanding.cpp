#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "labshift/expanding.hpp"

#include <map>
#include <random>
#include <vector>

using namespace labshift;

namespace {

// Every signed digit subset over positions 1..j_max, value -> digit list in
// recognizer order (descending positions).  The REQUIRE inside doubles as the
// uniqueness oracle: no two signed subsets may share a sum.
std::map<Int, std::vector<long long>> signed_sums(const ExpandingSystem& sys, int j_max) {
  std::map<Int, std::vector<long long>> out;
  std::vector<int> sign(static_cast<size_t>(j_max) + 1, 0);
  while (true) {
    Int t = 0;
    std::vector<long long> digits;
    for (int i = j_max; i >= 1; --i)
      if (sign[static_cast<size_t>(i)]) {
        t += Int(sign[static_cast<size_t>(i)]) * sys.k_abs(i);
        digits.push_back(sign[static_cast<size_t>(i)] > 0 ? i : -i);
      }
    auto [it, fresh] = out.emplace(t, digits);
    (void)it;
    REQUIRE(fresh);
    int p = 1;
    while (p <= j_max) {
      auto& s = sign[static_cast<size_t>(p)];
      if (s == 0) { s = 1; break; }
      if (s == 1) { s = -1; break; }
      s = 0;
      ++p;
    }
    if (p > j_max) break;
  }
  return out;
}

std::vector<Int> ip_values(const ExpandingSystem& sys, long long lo, long long hi) {
  return ip_in_interval(sys, Int(lo), Int(hi), IpMode::full).values;
}

}  // namespace

TEST_CASE("greedy recognizer matches the signed subset-sum oracle at J=8") {
  auto sys = ExpandingSystem::preset("strict");
  auto table = signed_sums(sys, 8);
  CHECK(table.size() == 6561);  // 3^8 distinct sums
  for (const auto& [t, digits] : table) {
    auto e = expand(sys, t);
    REQUIRE(e);
    CHECK(e->value == t);
    CHECK(e->digits == digits);
  }
}

TEST_CASE("everything that is not a signed subset sum is rejected") {
  auto sys = ExpandingSystem::preset("strict");
  auto table = signed_sums(sys, 8);
  for (long long t = -1000; t <= 1000; ++t)
    if (!table.count(Int(t))) CHECK(!expand(sys, Int(t)));
  std::mt19937_64 rng(1);
  Int reach = sys.sum_k(8);
  std::uniform_int_distribution<long long> d(-reach.convert_to<long long>(),
                                             reach.convert_to<long long>());
  for (int i = 0; i < 2000; ++i) {
    Int t(d(rng));
    auto e = expand(sys, t);
    CHECK(static_cast<bool>(e) == (table.count(t) > 0));
  }
}

TEST_CASE("one-digit neighbors of a recognized time fall out of the set") {
  auto sys = ExpandingSystem::preset("strict");
  auto table = signed_sums(sys, 6);
  for (const auto& [t, digits] : table) {
    auto e = expand(sys, t);
    REQUIRE(e);
    for (int i = 1; i <= e->length(); ++i) {
      auto rep = neighbor_exclusion(sys, *e, i);
      CHECK(rep.removed_in_ip);
      CHECK(!rep.added_in_ip);
      CHECK(rep.verified());
    }
  }
}

TEST_CASE("frozen windows of the strict preset") {
  auto sys = ExpandingSystem::preset("strict");
  CHECK(ip_values(sys, -50, 50) ==
        std::vector<Int>{-49, -42, -7, 0, 7, 42, 49});
  auto plus = ip_in_interval(sys, Int(-200), Int(200), IpMode::positive).values;
  CHECK(plus == std::vector<Int>{0, 7, 49, 56});

  auto e = expand(sys, Int(56));
  REQUIRE(e);
  CHECK(e->digits == std::vector<long long>{2, 1});
  CHECK(!expand(sys, Int(50)));
}

TEST_CASE("truncation keeps the top digits and re-expands") {
  auto sys = ExpandingSystem::preset("strict");
  auto e = expand(sys, Int(7 + 343 - 2401));  // digits -4, 3, 1
  REQUIRE(e);
  auto tr = truncate(sys, *e, 1);
  CHECK(tr.prefix.digits == std::vector<long long>{-4});
  CHECK(tr.prefix.value + tr.residual == e->value);
  auto back = expand(sys, tr.prefix.value);
  REQUIRE(back);
  CHECK(back->digits == tr.prefix.digits);
}

TEST_CASE("restricted interval around a fixed digit tail") {
  auto sys = ExpandingSystem::preset("strict");
  RestrictedSpec spec{{1}, 3};
  auto iv = ip_in_interval(sys, Int(-60), Int(60), IpMode::restricted, &spec);
  CHECK(iv.values ==
        std::vector<Int>{-56, -49, -14, -7, 0, 35, 42, 49});
  CHECK(iv.complete);
  CHECK(iv.guaranteed_radius == 1912);
  // oracle: s is adjusted-expandable iff s plus the sequence head lands in
  // IP(k); the interval lies far inside the guaranteed radius
  std::vector<Int> direct;
  for (Int s = -60; s <= 60; ++s)
    if (expand(sys, s + sys.k(1))) direct.push_back(s);
  CHECK(iv.values == direct);
}

TEST_CASE("table systems reject growth violations") {
  CHECK_THROWS(ExpandingSystem::table(5, {Int(7), Int(49), Int(100)}));
  CHECK_THROWS(ExpandingSystem::table(5, {Int(5)}));  // k(1) too small
  auto sys = ExpandingSystem::table(5, {Int(7), Int(49), Int(343)});
  CHECK(sys.table_limit() == 3);
  CHECK(ip_values(sys, -50, 50) == std::vector<Int>{-49, -42, -7, 0, 7, 42, 49});
}

TEST_CASE("paper-system counting profile is exactly 3^(m-1) at 4^m") {
  auto sys = ExpandingSystem::preset("paper");
  for (int m = 1; m <= 7; ++m)
    CHECK(ip_count_positive(sys, ipow(Int(4), m)) == ipow(Int(3), m - 1));
}

TEST_CASE("counting exponent and profile rows") {
  auto [p, q] = density_exponent(4);
  CHECK(p == 7923);
  CHECK(q == 10000);

  auto sys = ExpandingSystem::preset("paper");
  std::vector<Int> ns;
  for (int m = 3; m <= 9; ++m) ns.push_back(ipow(Int(4), m));
  auto rows = density_profile(sys, ns);
  REQUIRE(rows.size() == 7);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].within_bound);
    if (i) CHECK(rows[i].ratio < rows[i - 1].ratio);
  }
}
