#pragma once

// Shared test helpers: deterministic rng, random factor/boundary samplers,
// and naive oracles kept independent of the library's main code paths.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fpb/boundary.hpp"
#include "fpb/factor.hpp"
#include "fpb/tree.hpp"
#include "fpb/word.hpp"

namespace testutil {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // bounded draw; modulo bias is irrelevant at test sample sizes
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  int range(int lo, int hi) { return lo + (int)below((std::uint64_t)(hi - lo + 1)); }

 private:
  std::mt19937_64 eng_;
};

// Freely reduced random word of exactly len letters over rank-m alphabet.
inline std::string random_reduced_word(Rng& rng, int m, int len) {
  std::string all;
  for (int i = 0; i < m; ++i) all.push_back(char('a' + i));
  for (int i = 0; i < m; ++i) all.push_back(char('A' + i));
  std::string w;
  while ((int)w.size() < len) {
    char c = all[rng.below(all.size())];
    if (!w.empty() && c == fpb::inverse_letter(w.back())) continue;
    w.push_back(c);
  }
  return w;
}

inline fpb::FactorBoundaryPoint random_boundary_point(Rng& rng, const fpb::FactorSpec& spec,
                                                      int max_prefix = 3, int max_period = 3) {
  using namespace fpb;
  if (spec.cls == FactorClass::InfiniteCyclic)
    return make_sign_point(spec, rng.below(2) ? +1 : -1);
  for (;;) {
    int pl = rng.range(0, max_prefix);
    int ql = rng.range(1, max_period);
    std::string w = random_reduced_word(rng, spec.param, pl + ql);
    std::string prefix = w.substr(0, pl);
    std::string period = w.substr(pl);
    if (period.back() == inverse_letter(period.front())) continue;
    if (!prefix.empty() && prefix.back() == inverse_letter(period.front())) continue;
    return make_free_boundary_point(spec, prefix, period);
  }
}

inline fpb::FactorElement random_element(Rng& rng, const fpb::FactorSpec& spec, int max_size) {
  using namespace fpb;
  switch (spec.cls) {
    case FactorClass::FiniteCyclic:
      return make_finite_cyclic_element(spec, (std::int64_t)rng.below((std::uint64_t)spec.param));
    case FactorClass::InfiniteCyclic:
      return make_infinite_cyclic_element(spec, rng.range(-max_size, max_size));
    case FactorClass::Free:
      return make_free_element(spec, random_reduced_word(rng, spec.param, rng.range(0, max_size)));
    default:
      return identity_element(spec);
  }
}

// Naive concatenate-then-cancel oracle for free words: repeatedly scan for an
// adjacent cancelling pair until none remains (fixpoint, no stack tricks).
inline std::string naive_free_reduce(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == fpb::inverse_letter(w[i + 1])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Unconstrained letter sequence (identities and repeats allowed) for testing
// the product reducer.
inline std::vector<fpb::Letter> random_letter_seq(Rng& rng, const fpb::ProductSpec& spec, int n,
                                                  int max_size = 2) {
  std::vector<fpb::Letter> out;
  for (int i = 0; i < n; ++i) {
    int j = (int)rng.below((std::uint64_t)spec.k());
    out.push_back(fpb::Letter{j, random_element(rng, spec.factor(j), max_size)});
  }
  return out;
}

// Random word already in normal form.
inline fpb::ReducedWord random_reduced_product_word(Rng& rng, const fpb::ProductSpec& spec,
                                                    int syllables, int max_size = 2) {
  std::vector<fpb::Letter> out;
  while ((int)out.size() < syllables) {
    int j = (int)rng.below((std::uint64_t)spec.k());
    if (!out.empty() && out.back().factor == j) continue;
    auto e = random_element(rng, spec.factor(j), max_size);
    if (e.is_identity()) continue;
    out.push_back(fpb::Letter{j, e});
  }
  return fpb::ReducedWord{spec, out};
}

// Random eventually periodic alternating word.
inline fpb::TreeEnd random_tree_end(Rng& rng, const fpb::ProductSpec& spec, int max_prefix = 2,
                                    int max_period = 3) {
  for (;;) {
    auto prefix = random_reduced_product_word(rng, spec, rng.range(0, max_prefix), 1);
    auto period = random_reduced_product_word(rng, spec, rng.range(2, max_period < 2 ? 2 : max_period), 1);
    try {
      return fpb::make_tree_end(spec, prefix.letters, period.letters);
    } catch (const fpb::Error&) {
      continue;  // junction clash, resample
    }
  }
}

inline fpb::BoundaryPoint random_boundary_point(Rng& rng, const fpb::ProductSpec& spec,
                                                int max_syllables = 3) {
  if (rng.below(2)) return fpb::BoundaryPoint::of(random_tree_end(rng, spec));
  for (;;) {
    int j = (int)rng.below((std::uint64_t)spec.k());
    if (!spec.factor_infinite(j)) continue;
    auto g = random_reduced_product_word(rng, spec, rng.range(0, max_syllables), 1);
    auto xi = random_boundary_point(rng, spec.factor(j));
    return fpb::BoundaryPoint::of(fpb::StabClass{g, j, xi});
  }
}

// Fixpoint oracle for product normal forms: repeatedly drop one identity
// letter or merge one adjacent same-factor pair, scanning from the left.
inline std::vector<fpb::Letter> naive_product_reduce(std::vector<fpb::Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].elem.is_identity()) {
        w.erase(w.begin() + (std::ptrdiff_t)i);
        changed = true;
        break;
      }
      if (i + 1 < w.size() && w[i].factor == w[i + 1].factor) {
        w[i].elem = fpb::multiply(w[i].elem, w[i + 1].elem);
        w.erase(w.begin() + (std::ptrdiff_t)i + 1);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace testutil
