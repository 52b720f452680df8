#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>

#include "fpb/cantor.hpp"
#include "util.hpp"

using namespace fpb;
using testutil::Rng;

static const FactorSpec F2 = FactorSpec::free_group(2);
static const FactorSpec F3 = FactorSpec::free_group(3);
static const FactorSpec F5 = FactorSpec::free_group(5);
static const FactorSpec Z = FactorSpec::infinite_cyclic();

static std::size_t lcp(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return i;
}

TEST_CASE("root frontier F2 to F3, hand-computed") {
  CantorCoder c(F2, F3);
  auto mf = c.matched_frontier(0, 0);
  // left side starts a,b,A,B (4 cylinders), right a,b,c,A,B,C (6); the
  // shallowest-leftmost left node "a" splits into aa,ab,aB and counts agree
  REQUIRE(mf.size() == 6);
  const char* want[6][2] = {{"aa", "a"}, {"ab", "b"}, {"aB", "c"},
                            {"b", "A"},  {"A", "B"},  {"B", "C"}};
  for (int i = 0; i < 6; ++i) {
    CHECK(mf[(std::size_t)i].left == want[i][0]);
    CHECK(mf[(std::size_t)i].right == want[i][1]);
  }
}

TEST_CASE("cylinder tables partition both boundaries, depths 1..6") {
  CantorCoder c(F2, F3);
  for (int depth = 1; depth <= 6; ++depth) {
    auto table = c.cylinder_table(depth);
    // prefix-free on both sides => each side is a disjoint family
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = i + 1; j < table.size(); ++j) {
        CHECK(lcp(table[i].left, table[j].left) <
              std::min(table[i].left.size(), table[j].left.size()));
        CHECK(lcp(table[i].right, table[j].right) <
              std::min(table[i].right.size(), table[j].right.size()));
      }
    // completeness: counted via extensions to a common length L, the cells
    // must cover every reduced word exactly once on each side
    auto check_cover = [&](bool left_side, int m) {
      std::size_t L = 0;
      for (const auto& p : table) L = std::max(L, (left_side ? p.left : p.right).size());
      std::int64_t total = 0;
      for (const auto& p : table) {
        std::int64_t ext = 1;
        for (std::size_t i = (left_side ? p.left : p.right).size(); i < L; ++i)
          ext *= 2 * m - 1;
        total += ext;
      }
      std::int64_t all = 2 * m;
      for (std::size_t i = 1; i < L; ++i) all *= 2 * m - 1;
      CHECK(total == all);
    };
    check_cover(true, 2);
    check_cover(false, 3);
  }
}

TEST_CASE("deeper tables refine shallower ones") {
  CantorCoder c(F2, F3);
  auto prev = c.cylinder_table(1);
  for (int depth = 2; depth <= 6; ++depth) {
    auto cur = c.cylinder_table(depth);
    CHECK(cur.size() >= prev.size());
    for (const auto& e : cur) {
      int hits = 0;
      for (const auto& f : prev)
        if (e.left.compare(0, f.left.size(), f.left) == 0) {
          ++hits;
          CHECK(e.right.compare(0, f.right.size(), f.right) == 0);
        }
      CHECK(hits == 1);
    }
    prev = cur;
  }
}

TEST_CASE("leftmost branch maps to leftmost branch") {
  CantorCoder c(F2, F3);
  auto table = c.cylinder_table(6);
  REQUIRE(!table.empty());
  CHECK(table[0].left == std::string(table[0].left.size(), 'a'));
  CHECK(table[0].right == std::string(table[0].right.size(), 'a'));
  auto img = c.apply(make_free_boundary_point(F2, "", "a"));
  CHECK(img == make_free_boundary_point(F3, "", "a"));
}

TEST_CASE("apply agrees with the cylinder table") {
  CantorCoder c(F2, F3);
  auto table = c.cylinder_table(6);
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    auto xi = testutil::random_boundary_point(rng, F2);
    auto img = c.apply(xi);
    int hits = 0;
    for (const auto& e : table) {
      bool in = true;
      for (std::size_t i = 0; i < e.left.size() && in; ++i) in = e.left[i] == xi.letter_at(i);
      if (!in) continue;
      ++hits;
      for (std::size_t i = 0; i < e.right.size(); ++i) CHECK(e.right[i] == img.letter_at(i));
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("metric modulus from the depth-6 table") {
  CantorCoder c(F2, F3);
  auto table = c.cylinder_table(6);
  // mu[k] = guaranteed image agreement when the sources agree to depth k
  std::size_t within = std::string::npos;
  for (const auto& e : table) within = std::min(within, e.right.size());
  std::vector<std::size_t> mu(6, within);
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j) {
      std::size_t l = lcp(table[i].left, table[j].left);
      std::size_t r = lcp(table[i].right, table[j].right);
      for (std::size_t k = 1; k <= l && k <= 5; ++k) mu[k] = std::min(mu[k], r);
    }
  for (std::size_t k = 2; k <= 5; ++k) CHECK(mu[k] >= mu[k - 1]);
  CHECK(mu[5] > mu[1]);
  CHECK(mu[5] >= 2);

  // sampled pairs: d(xi,xi') <= 2^-k forces d(images) <= 2^-mu[k]
  Rng rng(57);
  for (int t = 0; t < 200; ++t) {
    std::size_t k = 1 + rng.below(5);
    auto a = testutil::random_boundary_point(rng, F2);
    // a second point through the same depth-k cylinder
    std::string pre;
    for (std::size_t i = 0; i < k; ++i) pre.push_back(a.letter_at(i));
    char nxt = 'a';
    for (char cand : {'a', 'b', 'A', 'B'})
      if (cand != inverse_letter(pre.back())) {
        nxt = cand;
        break;
      }
    auto b = make_free_boundary_point(F2, pre, std::string(1, nxt));
    if (a == b) continue;
    REQUIRE(metric(a, b) <= Rational::pow2(-(int)k));
    CHECK(metric(c.apply(a), c.apply(b)) <= Rational::pow2(-(int)mu[k]));
  }
}

TEST_CASE("inverse round trips on 100 sampled points") {
  CantorCoder c(F2, F3);
  Rng rng(91);
  for (int t = 0; t < 100; ++t) {
    auto xi = testutil::random_boundary_point(rng, F2);
    CHECK(c.apply_inverse(c.apply(xi)) == xi);
    auto eta = testutil::random_boundary_point(rng, F3);
    CHECK(c.apply(c.apply_inverse(eta)) == eta);
  }
}

TEST_CASE("other rank pairs") {
  CantorCoder c35(F3, F5);
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    auto xi = testutil::random_boundary_point(rng, F3);
    CHECK(c35.apply_inverse(c35.apply(xi)) == xi);
  }
  // equal ranks give the identity matching
  CantorCoder c22(F2, F2);
  for (int t = 0; t < 20; ++t) {
    auto xi = testutil::random_boundary_point(rng, F2);
    CHECK(c22.apply(xi) == xi);
  }
}

TEST_CASE("transfer_cylinder") {
  CantorCoder c(F2, F3);
  Rng rng(71);
  for (int t = 0; t < 40; ++t) {
    auto xi = testutil::random_boundary_point(rng, F2);
    auto pair = c.transfer_cylinder(xi, 4);
    CHECK(pair.right.size() >= 4);
    for (std::size_t i = 0; i < pair.left.size(); ++i) CHECK(pair.left[i] == xi.letter_at(i));
    auto img = c.apply(xi);
    for (std::size_t i = 0; i < pair.right.size(); ++i) CHECK(pair.right[i] == img.letter_at(i));
    // the whole left cylinder lands in the right cylinder
    for (char cand : {'a', 'b', 'A', 'B'}) {
      if (cand == inverse_letter(pair.left.back())) continue;
      auto other = make_free_boundary_point(F2, pair.left, std::string(1, cand));
      auto oimg = c.apply(other);
      for (std::size_t i = 0; i < pair.right.size(); ++i) CHECK(pair.right[i] == oimg.letter_at(i));
    }
  }
}

TEST_CASE("homeo wrapper kinds") {
  auto idh = make_factor_homeo(F2, F2, HomeoKind::IdentityLike);
  auto xi = make_free_boundary_point(F2, "a", "b");
  CHECK(apply_homeo(idh, xi) == xi);
  CHECK(apply_homeo_inverse(idh, xi) == xi);

  auto same = make_factor_homeo(Z, Z, HomeoKind::IdentitySigns);
  auto swap = make_factor_homeo(Z, Z, HomeoKind::SwapSigns);
  CHECK(apply_homeo(same, make_sign_point(Z, +1)) == make_sign_point(Z, +1));
  CHECK(apply_homeo(swap, make_sign_point(Z, +1)) == make_sign_point(Z, -1));
  CHECK(apply_homeo_inverse(swap, make_sign_point(Z, -1)) == make_sign_point(Z, +1));

  auto coder = make_factor_homeo(F2, F3, HomeoKind::CantorCoder);
  auto img = apply_homeo(coder, xi);
  CHECK(img.spec == F3);
  CHECK(apply_homeo_inverse(coder, img) == xi);

  CHECK_THROWS_AS(make_factor_homeo(F2, F3, HomeoKind::IdentityLike), Error);
  CHECK_THROWS_AS(make_factor_homeo(F2, Z, HomeoKind::CantorCoder), Error);
  CHECK_THROWS_AS(make_factor_homeo(F2, F2, HomeoKind::SwapSigns), Error);
  CHECK_THROWS_AS(apply_homeo(coder, make_free_boundary_point(F3, "", "a")), Error);
}
