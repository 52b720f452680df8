#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpb/factor.hpp"
#include "util.hpp"

using namespace fpb;
using testutil::Rng;

static const FactorSpec F2 = FactorSpec::free_group(2);
static const FactorSpec Z = FactorSpec::infinite_cyclic();
static const FactorSpec Z4 = FactorSpec::finite_cyclic(4);

TEST_CASE("multiply basics") {
  auto x1 = make_free_element(F2, "a");
  auto X1 = make_free_element(F2, "A");
  CHECK(multiply(x1, X1).is_identity());
  CHECK(multiply(make_finite_cyclic_element(Z4, 3), make_finite_cyclic_element(Z4, 2)).z == 1);
  // x1 x2 * X2 x1 = x1 x1, cross-checked against the naive rewriter
  auto u = make_free_element(F2, "ab");
  auto v = make_free_element(F2, "Ba");
  CHECK(multiply(u, v).w == "aa");
  CHECK(multiply(u, v).w == testutil::naive_free_reduce(u.w + v.w));
}

TEST_CASE("multiply errors") {
  CHECK_THROWS_AS(multiply(make_free_element(F2, "a"), make_infinite_cyclic_element(Z, 1)), Error);
  auto op = FactorSpec::opaque("1-ended:circle");
  CHECK_THROWS_AS(multiply(identity_element(op), identity_element(op)), Error);
}

TEST_CASE("free reduction vs naive oracle on random words") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    std::string raw;
    for (int j = 0; j < 12; ++j) {
      const char letters[] = "abAB";
      raw.push_back(letters[rng.below(4)]);
    }
    CHECK(free_reduce(raw) == testutil::naive_free_reduce(raw));
  }
}

TEST_CASE("boundary point canonicalization") {
  // ab(b) and a(b) are the same point
  auto p = make_free_boundary_point(F2, "ab", "b");
  CHECK(p.prefix == "a");
  CHECK(p.period == "b");
  // primitive period
  auto q = make_free_boundary_point(F2, "", "abab");
  CHECK(q.period == "ab");
  CHECK_THROWS_AS(make_free_boundary_point(F2, "", ""), Error);
  CHECK_THROWS_AS(make_free_boundary_point(F2, "", "aA"), Error);
}

TEST_CASE("act_on_boundary examples") {
  auto xi = make_free_boundary_point(F2, "", "b");  // (x2)^w
  auto x1 = make_free_element(F2, "a");
  auto r = act_on_boundary(x1, xi);
  CHECK(r == make_free_boundary_point(F2, "a", "b"));
  // X2 * (x2)^w cancels back to (x2)^w
  auto X2 = make_free_element(F2, "B");
  CHECK(act_on_boundary(X2, xi) == xi);
  CHECK(act_on_boundary(identity_element(F2), xi) == xi);
}

TEST_CASE("action axioms over small window x sampled points") {
  Rng rng(7);
  auto window = element_window(F2, 3);
  std::vector<FactorBoundaryPoint> pts;
  for (int i = 0; i < 50; ++i) pts.push_back(testutil::random_boundary_point(rng, F2));
  // exhaustive would be |window|^2 * 50 which is too fat; take all g of size<=2
  auto small = element_window(F2, 2);
  for (const auto& g : small)
    for (const auto& h : small)
      for (const auto& xi : pts) {
        CHECK(act_on_boundary(multiply(g, h), xi) == act_on_boundary(g, act_on_boundary(h, xi)));
      }
  for (const auto& xi : pts) CHECK(act_on_boundary(identity_element(F2), xi) == xi);
}

TEST_CASE("metric examples") {
  auto xw = make_free_boundary_point(F2, "", "a");
  CHECK(metric(xw, xw) == Rational(0));
  // common prefix length 1
  auto p1 = make_free_boundary_point(F2, "a", "b");
  auto p2 = make_free_boundary_point(F2, "a", "B");
  CHECK(metric(p1, p2) == Rational(1, 2));
  CHECK(metric(make_infinite_cyclic_element(Z, 3), make_sign_point(Z, +1)) == Rational(1, 4));
}

TEST_CASE("metric axioms exactly on sampled pairs") {
  Rng rng(23);
  std::vector<CompactPoint> pts;
  for (int i = 0; i < 40; ++i) {
    pts.push_back(CompactPoint::of(testutil::random_element(rng, F2, 4)));
    pts.push_back(CompactPoint::of(testutil::random_boundary_point(rng, F2)));
  }
  int pairs = 0;
  for (std::size_t i = 0; i < pts.size() && pairs < 100; ++i)
    for (std::size_t j = i + 1; j < pts.size() && pairs < 100; ++j, ++pairs) {
      auto d = metric(pts[i], pts[j]);
      CHECK(d == metric(pts[j], pts[i]));
      CHECK(d >= Rational(0));
      // ultrametric in the free case
      for (std::size_t l = 0; l < pts.size(); l += 17) {
        auto dl = metric(pts[i], pts[l]);
        auto dr = metric(pts[l], pts[j]);
        CHECK(d <= (dl < dr ? dr : dl));
      }
    }
  // zero iff equal
  for (const auto& a : pts)
    for (const auto& b : pts) {
      bool eq;
      if (a.boundary != b.boundary)
        eq = false;
      else if (a.boundary)
        eq = a.pt == b.pt;
      else
        eq = a.elem == b.elem;
      CHECK((metric(a, b) == Rational(0)) == eq);
    }
}

TEST_CASE("project_pi") {
  auto g = make_free_element(F2, "ab");
  auto p = project_pi(g);
  CHECK(p == make_free_boundary_point(F2, "a", "b"));
  CHECK(metric(g, p) == Rational(1, 4));
  CHECK(project_pi(make_infinite_cyclic_element(Z, -5)) == make_sign_point(Z, -1));
  CHECK(project_pi(make_infinite_cyclic_element(Z, 0)) == make_sign_point(Z, +1));
  CHECK(project_pi(identity_element(F2)) == make_free_boundary_point(F2, "", "a"));
  CHECK_THROWS_AS(project_pi(make_finite_cyclic_element(Z4, 1)), Error);
}

TEST_CASE("pi limit bound for all free elements of length <= 8") {
  // d(g, pi(g)) <= 2^-|g| exactly; length <= 8 checked on the x1^n family plus
  // a full sweep of the <=4 window (the full length-8 window is ~17k words,
  // sweep a sampled slice of it)
  for (const auto& g : element_window(F2, 4))
    CHECK(metric(g, project_pi(g)) <= Rational::pow2(-(int)g.w.size()));
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    auto g = make_free_element(F2, testutil::random_reduced_word(rng, 2, rng.range(5, 8)));
    CHECK(metric(g, project_pi(g)) <= Rational::pow2(-(int)g.w.size()));
  }
  for (int n = 1; n <= 8; ++n) {
    auto g = make_free_element(F2, std::string((std::size_t)n, 'a'));
    CHECK(metric(g, project_pi(g)) == Rational::pow2(-n));
  }
}

TEST_CASE("canonical element enumeration order") {
  auto w = element_window(F2, 2);
  REQUIRE(w.size() >= 6);
  CHECK(w[0].w == "a");
  CHECK(w[1].w == "A");
  CHECK(w[2].w == "b");
  CHECK(w[3].w == "B");
  CHECK(w[4].w == "aa");
  // count: 4 + 4*3 = 16
  CHECK(w.size() == 16);

  auto z = element_window(Z, 2);
  REQUIRE(z.size() == 4);
  CHECK(z[0].z == 1);
  CHECK(z[1].z == -1);
  CHECK(z[2].z == 2);
  CHECK(z[3].z == -2);

  auto f = element_window(Z4, 1);
  REQUIRE(f.size() == 3);
  CHECK(f[0].z == 1);
  CHECK(f[2].z == 3);
}

TEST_CASE("element literals round trip") {
  for (const char* s : {"a", "abA", "BaB"})
    CHECK(element_to_string(parse_element(F2, s)) == s);
  CHECK(parse_element(Z, "t").z == 1);
  CHECK(parse_element(Z, "T^3").z == -3);
  CHECK(parse_element(Z, "-2").z == -2);
  CHECK(parse_boundary_point(F2, "ab(ab)") == make_free_boundary_point(F2, "ab", "ab"));
  CHECK(parse_boundary_point(Z, "-inf") == make_sign_point(Z, -1));
  CHECK_THROWS_AS(parse_element(F2, "ax"), Error);
  CHECK_THROWS_AS(parse_boundary_point(F2, "ab"), Error);
}
