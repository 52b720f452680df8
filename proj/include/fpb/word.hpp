#pragma once

#include <string>
#include <vector>

#include "fpb/factor.hpp"

namespace fpb {

// The free product A_1 * ... * A_k. Factors are addressed by index since the
// same FactorSpec may occur more than once.
struct ProductSpec {
  std::vector<FactorSpec> factors;

  static ProductSpec of(std::vector<FactorSpec> factors);

  int k() const { return (int)factors.size(); }
  const FactorSpec& factor(int j) const;
  bool factor_infinite(int j) const { return factor(j).is_infinite(); }

  bool operator==(const ProductSpec& o) const { return factors == o.factors; }
  bool operator!=(const ProductSpec& o) const { return !(*this == o); }
};

struct Letter {
  int factor = 0;
  FactorElement elem;

  bool operator==(const Letter& o) const { return factor == o.factor && elem == o.elem; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
};

// Alternating normal form: no identity letters, adjacent letters from
// distinct factors. Empty letter list = group identity.
struct ReducedWord {
  ProductSpec spec;
  std::vector<Letter> letters;

  bool is_identity() const { return letters.empty(); }
  int syllables() const { return (int)letters.size(); }
  int size() const;  // total generator length
  const Letter& last() const { return letters.back(); }

  bool operator==(const ReducedWord& o) const;
  bool operator!=(const ReducedWord& o) const { return !(*this == o); }

  std::string str() const;  // "0:ab 1:t 0:B"; identity is "1"
};

ReducedWord identity_word(const ProductSpec& spec);
ReducedWord make_word(const ProductSpec& spec, const std::vector<Letter>& letters);

ReducedWord reduce(const ProductSpec& spec, const std::vector<Letter>& letters);
ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord multiply(const ReducedWord& u, const Letter& a);
ReducedWord inverse(const ReducedWord& u);

// Enumeration order: syllable count, then lexicographic on (factor index,
// canonical element order).
bool word_less(const ReducedWord& a, const ReducedWord& b);

// Identity first, then every reduced word with at most `syllables` syllables
// whose letters each have size at most `letter_size`, in enumeration order.
std::vector<ReducedWord> enumerate_words(const ProductSpec& spec, int syllables, int letter_size);

// Boundary class [g, xi] with xi in the boundary of factor `factor`.
struct StabClass {
  ReducedWord g;
  int factor = 0;
  FactorBoundaryPoint xi;

  bool operator==(const StabClass& o) const {
    return g == o.g && factor == o.factor && xi == o.xi;
  }
  bool operator!=(const StabClass& o) const { return !(*this == o); }

  std::string str() const;
};

// Canonical representative of [g, xi]: if g ends with a letter c of xi's
// factor, strip it and replace xi by c.xi. The result's trailing letter is
// never in xi's factor.
StabClass reduced_representative(const ReducedWord& g, int factor, const FactorBoundaryPoint& xi);

std::string word_to_string(const ReducedWord& w);
ReducedWord parse_word(const ProductSpec& spec, const std::string& s);

}  // namespace fpb
