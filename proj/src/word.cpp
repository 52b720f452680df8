#include "fpb/word.hpp"

#include <sstream>

namespace fpb {

ProductSpec ProductSpec::of(std::vector<FactorSpec> factors) {
  if (factors.size() < 2) throw Error(ErrorCode::InvalidInput, "free product needs k >= 2 factors");
  for (const auto& f : factors)
    if (f.cls == FactorClass::Opaque)
      throw Error(ErrorCode::OpaqueFactor, "opaque factors carry no elements");
  return ProductSpec{std::move(factors)};
}

const FactorSpec& ProductSpec::factor(int j) const {
  if (j < 0 || j >= k()) throw Error(ErrorCode::InvalidInput, "factor index out of range");
  return factors[(std::size_t)j];
}

int ReducedWord::size() const {
  int n = 0;
  for (const auto& l : letters) n += l.elem.size();
  return n;
}

bool ReducedWord::operator==(const ReducedWord& o) const {
  return spec == o.spec && letters == o.letters;
}

std::string ReducedWord::str() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << letters[i].factor << ':' << element_to_string(letters[i].elem);
  }
  return os.str();
}

ReducedWord identity_word(const ProductSpec& spec) { return ReducedWord{spec, {}}; }

static void check_letter(const ProductSpec& spec, const Letter& l) {
  if (l.elem.spec != spec.factor(l.factor))
    throw Error(ErrorCode::MixedFactors, "letter does not match its factor");
}

ReducedWord make_word(const ProductSpec& spec, const std::vector<Letter>& letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    check_letter(spec, letters[i]);
    if (letters[i].elem.is_identity())
      throw Error(ErrorCode::InvalidInput, "identity letter in normal form");
    if (i && letters[i].factor == letters[i - 1].factor)
      throw Error(ErrorCode::InvalidInput, "adjacent letters share a factor");
  }
  return ReducedWord{spec, letters};
}

ReducedWord reduce(const ProductSpec& spec, const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  for (const auto& l : letters) {
    check_letter(spec, l);
    if (l.elem.is_identity()) continue;
    if (!out.empty() && out.back().factor == l.factor) {
      FactorElement merged = fpb::multiply(out.back().elem, l.elem);
      out.pop_back();
      if (!merged.is_identity()) out.push_back(Letter{l.factor, merged});
    } else {
      out.push_back(l);
    }
  }
  return ReducedWord{spec, out};
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  if (u.spec != v.spec) throw Error(ErrorCode::MixedFactors, "words over different products");
  std::vector<Letter> cat = u.letters;
  cat.insert(cat.end(), v.letters.begin(), v.letters.end());
  return reduce(u.spec, cat);
}

ReducedWord multiply(const ReducedWord& u, const Letter& a) {
  std::vector<Letter> cat = u.letters;
  cat.push_back(a);
  return reduce(u.spec, cat);
}

ReducedWord inverse(const ReducedWord& u) {
  std::vector<Letter> out;
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    out.push_back(Letter{it->factor, fpb::inverse(it->elem)});
  return ReducedWord{u.spec, out};
}

bool word_less(const ReducedWord& a, const ReducedWord& b) {
  if (a.syllables() != b.syllables()) return a.syllables() < b.syllables();
  for (std::size_t i = 0; i < a.letters.size(); ++i) {
    const Letter& x = a.letters[i];
    const Letter& y = b.letters[i];
    if (x.factor != y.factor) return x.factor < y.factor;
    if (x.elem != y.elem) return element_less(x.elem, y.elem);
  }
  return false;
}

std::vector<ReducedWord> enumerate_words(const ProductSpec& spec, int syllables, int letter_size) {
  std::vector<std::vector<FactorElement>> windows;
  for (const auto& f : spec.factors) windows.push_back(element_window(f, letter_size));

  std::vector<ReducedWord> out;
  out.push_back(identity_word(spec));
  std::vector<Letter> cur;
  // depth-first in (factor index, element order) emits each syllable count
  // in lexicographic order
  auto grow = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(ReducedWord{spec, cur});
      return;
    }
    for (int j = 0; j < spec.k(); ++j) {
      if (!cur.empty() && cur.back().factor == j) continue;
      for (const auto& e : windows[(std::size_t)j]) {
        cur.push_back(Letter{j, e});
        self(self, remaining - 1);
        cur.pop_back();
      }
    }
  };
  for (int s = 1; s <= syllables; ++s) grow(grow, s);
  return out;
}

std::string StabClass::str() const {
  return "[" + g.str() + ", " + std::to_string(factor) + ":" + xi.str() + "]";
}

StabClass reduced_representative(const ReducedWord& g, int factor, const FactorBoundaryPoint& xi) {
  const FactorSpec& f = g.spec.factor(factor);
  if (!f.has_boundary())
    throw Error(ErrorCode::FiniteFactorBoundary, "factor has empty boundary");
  if (xi.spec != f) throw Error(ErrorCode::MixedFactors, "point not in the named factor");
  if (!g.letters.empty() && g.last().factor == factor) {
    ReducedWord head = g;
    Letter c = head.letters.back();
    head.letters.pop_back();
    return StabClass{head, factor, act_on_boundary(c.elem, xi)};
  }
  return StabClass{g, factor, xi};
}

std::string word_to_string(const ReducedWord& w) { return w.str(); }

ReducedWord parse_word(const ProductSpec& spec, const std::string& s) {
  std::istringstream is(s);
  std::vector<Letter> letters;
  std::string tok;
  while (is >> tok) {
    if (tok == "1" && letters.empty()) continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::ParseError, "expected factor:element, got '" + tok + "'");
    int j;
    try {
      std::size_t used = 0;
      j = std::stoi(tok.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad factor index in '" + tok + "'");
    }
    if (j < 0 || j >= spec.k()) throw Error(ErrorCode::ParseError, "factor index out of range");
    letters.push_back(Letter{j, parse_element(spec.factor(j), tok.substr(colon + 1))});
  }
  return reduce(spec, letters);
}

}  // namespace fpb
