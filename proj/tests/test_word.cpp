#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fpb/word.hpp"
#include "util.hpp"

using namespace fpb;
using testutil::Rng;

static const ProductSpec F2Z =
    ProductSpec::of({FactorSpec::free_group(2), FactorSpec::infinite_cyclic()});
static const ProductSpec F2F3 =
    ProductSpec::of({FactorSpec::free_group(2), FactorSpec::free_group(3)});

static Letter L0(const ProductSpec& s, const std::string& w) {
  return Letter{0, make_free_element(s.factor(0), w)};
}
static Letter LZ(const ProductSpec& s, std::int64_t n) {
  return Letter{1, make_infinite_cyclic_element(s.factor(1), n)};
}

TEST_CASE("product spec validation") {
  CHECK_THROWS_AS(ProductSpec::of({FactorSpec::free_group(2)}), Error);
  CHECK_THROWS_AS(ProductSpec::of({FactorSpec::free_group(2), FactorSpec::opaque("x")}), Error);
}

TEST_CASE("reduce examples") {
  CHECK(reduce(F2Z, {L0(F2Z, "a"), L0(F2Z, "A")}).is_identity());
  auto w = reduce(F2Z, {L0(F2Z, "a"), LZ(F2Z, 1), LZ(F2Z, -1), L0(F2Z, "b")});
  REQUIRE(w.syllables() == 1);
  CHECK(w.letters[0].elem.w == "ab");
}

TEST_CASE("reduce vs naive fixpoint oracle, idempotence") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto raw = testutil::random_letter_seq(rng, F2Z, 10);
    auto r = reduce(F2Z, raw);
    CHECK(r.letters == testutil::naive_product_reduce(raw));
    CHECK(reduce(F2Z, r.letters) == r);
  }
}

TEST_CASE("normal form constant on insert/remove orbits, length <= 4") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    auto w = testutil::random_letter_seq(rng, F2Z, rng.range(0, 4), 1);
    auto base = reduce(F2Z, w);
    // splice in c c^-1 at a random position
    for (int v = 0; v < 8; ++v) {
      int j = (int)rng.below(2);
      auto c = testutil::random_element(rng, F2Z.factor(j), 2);
      auto pos = w.begin() + (std::ptrdiff_t)rng.below(w.size() + 1);
      std::vector<Letter> spliced(w.begin(), pos);
      spliced.push_back(Letter{j, c});
      spliced.push_back(Letter{j, inverse(c)});
      spliced.insert(spliced.end(), pos, w.end());
      CHECK(reduce(F2Z, spliced) == base);
    }
  }
}

TEST_CASE("multiply") {
  Rng rng(29);
  auto id = identity_word(F2Z);
  auto u = testutil::random_reduced_product_word(rng, F2Z, 3);
  CHECK(multiply(u, id) == u);
  CHECK(multiply(id, u) == u);
  CHECK(multiply(u, inverse(u)).is_identity());

  auto x1 = make_word(F2Z, {L0(F2Z, "a")});
  auto v = make_word(F2Z, {L0(F2Z, "A"), LZ(F2Z, 1)});
  auto p = multiply(x1, v);
  REQUIRE(p.syllables() == 1);
  CHECK(p.letters[0] == LZ(F2Z, 1));

  for (int t = 0; t < 200; ++t) {
    auto a = testutil::random_reduced_product_word(rng, F2Z, rng.range(0, 3));
    auto b = testutil::random_reduced_product_word(rng, F2Z, rng.range(0, 3));
    auto c = testutil::random_reduced_product_word(rng, F2Z, rng.range(0, 3));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("enumeration order and window laws") {
  auto w0 = enumerate_words(F2Z, 0, 3);
  REQUIRE(w0.size() == 1);
  CHECK(w0[0].is_identity());

  auto w1 = enumerate_words(F2Z, 1, 1);
  REQUIRE(w1.size() == 7);
  CHECK(w1[0].is_identity());
  CHECK(w1[1].str() == "0:a");
  CHECK(w1[2].str() == "0:A");
  CHECK(w1[3].str() == "0:b");
  CHECK(w1[4].str() == "0:B");
  CHECK(w1[5].str() == "1:t");
  CHECK(w1[6].str() == "1:T");

  auto big = enumerate_words(F2Z, 2, 2);
  CHECK(big.size() > w1.size());
  CHECK(enumerate_words(F2Z, 2, 2) == big);  // deterministic
  CHECK(std::is_sorted(big.begin(), big.end(), word_less));
  for (std::size_t i = 0; i + 1 < big.size(); ++i) CHECK(big[i] != big[i + 1]);
  // prefix closed
  for (const auto& w : big) {
    if (w.letters.empty()) continue;
    ReducedWord pre{F2Z, {w.letters.begin(), w.letters.end() - 1}};
    CHECK(std::find(big.begin(), big.end(), pre) != big.end());
  }
}

TEST_CASE("reduced_representative") {
  auto F2 = F2Z.factor(0);
  auto xi = make_free_boundary_point(F2, "", "b");
  auto g = make_word(F2Z, {L0(F2Z, "a")});

  auto r = reduced_representative(g, 0, xi);
  CHECK(r.g.is_identity());
  CHECK(r.xi == make_free_boundary_point(F2, "a", "b"));

  auto gt = make_word(F2Z, {L0(F2Z, "a"), LZ(F2Z, 1)});
  auto r2 = reduced_representative(gt, 0, xi);
  CHECK(r2.g == gt);
  CHECK(r2.xi == xi);

  CHECK_THROWS_AS(
      reduced_representative(g, 1, make_free_boundary_point(F2, "", "a")), Error);

  Rng rng(41);
  auto small = element_window(F2, 2);
  for (int t = 0; t < 500; ++t) {
    auto h = testutil::random_reduced_product_word(rng, F2Z, rng.range(0, 3));
    auto p = testutil::random_boundary_point(rng, F2);
    auto rep = reduced_representative(h, 0, p);
    if (!rep.g.letters.empty()) CHECK(rep.g.last().factor != 0);
    // idempotent
    CHECK(reduced_representative(rep.g, 0, rep.xi) == rep);
    // class invariance: [h, p] = [h c, c^-1 p]
    if (t < 100) {
      const auto& c = small[rng.below(small.size())];
      auto shifted =
          reduced_representative(multiply(h, Letter{0, c}), 0, act_on_boundary(inverse(c), p));
      CHECK(shifted == rep);
    }
  }
}

TEST_CASE("word literals round trip") {
  auto w = parse_word(F2Z, "0:ab 1:t 0:B");
  REQUIRE(w.syllables() == 3);
  CHECK(w.str() == "0:ab 1:t 0:B");
  CHECK(parse_word(F2Z, "1").is_identity());
  CHECK(parse_word(F2Z, "0:a 0:A").is_identity());  // literals reduce
  CHECK(parse_word(F2Z, "1:t^3").letters[0].elem.z == 3);
  CHECK_THROWS_AS(parse_word(F2Z, "2:a"), Error);
  CHECK_THROWS_AS(parse_word(F2Z, "0:ax"), Error);
  CHECK_THROWS_AS(parse_word(F2Z, "nope"), Error);

  Rng rng(53);
  for (int t = 0; t < 50; ++t) {
    auto u = testutil::random_reduced_product_word(rng, F2F3, rng.range(0, 4));
    CHECK(parse_word(F2F3, u.str()) == u);
  }
}
