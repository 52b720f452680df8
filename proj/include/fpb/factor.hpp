#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpb/errors.hpp"
#include "fpb/rational.hpp"

namespace fpb {

// Factor classes with computable boundary oracles. Opaque factors are
// classification-only tags: no element arithmetic, no boundary points.
enum class FactorClass { FiniteCyclic, InfiniteCyclic, Free, Opaque };

struct FactorSpec {
  FactorClass cls = FactorClass::Opaque;
  int param = 0;     // n for FiniteCyclic (>= 1), rank for Free (>= 2)
  std::string tag;   // Opaque only
  std::string label;

  static FactorSpec finite_cyclic(int n, std::string label = "");
  static FactorSpec infinite_cyclic(std::string label = "");
  static FactorSpec free_group(int rank, std::string label = "");
  static FactorSpec opaque(std::string tag, std::string label = "");

  bool is_infinite() const { return cls == FactorClass::InfiniteCyclic || cls == FactorClass::Free; }
  bool has_boundary() const { return is_infinite(); }

  // label is display-only
  bool operator==(const FactorSpec& o) const {
    return cls == o.cls && param == o.param && (cls != FactorClass::Opaque || tag == o.tag);
  }
  bool operator!=(const FactorSpec& o) const { return !(*this == o); }

  std::string describe() const;
};

// --- free-word letter utilities ---------------------------------------------
// Generators are 'a'..'a'+m-1, inverses 'A'..'A'+m-1 (so "aB" is x1*x2^-1).

inline bool is_gen_letter(char c) { return c >= 'a' && c <= 'z'; }
inline char inverse_letter(char c) { return is_gen_letter(c) ? char(c - 'a' + 'A') : char(c - 'A' + 'a'); }
inline int gen_index(char c) { return is_gen_letter(c) ? c - 'a' : c - 'A'; }

// Cylinder order: x1 < ... < xm < X1 < ... < Xm (subdivision trees).
inline int cyl_rank(char c, int m) { return is_gen_letter(c) ? gen_index(c) : m + gen_index(c); }
// Enumeration order: x1 < X1 < x2 < X2 < ... (canonical element sequences).
inline int enum_rank(char c) { return 2 * gen_index(c) + (is_gen_letter(c) ? 0 : 1); }

std::string free_reduce(const std::string& w);
bool is_freely_reduced(const std::string& w);
std::string free_inverse(const std::string& w);

struct FactorElement {
  FactorSpec spec;
  std::int64_t z = 0;  // FiniteCyclic residue in [0, n); InfiniteCyclic exponent
  std::string w;       // Free: freely reduced word

  bool is_identity() const;
  int size() const;  // generator length of the shortest spelling

  bool operator==(const FactorElement& o) const;
  bool operator!=(const FactorElement& o) const { return !(*this == o); }

  std::string payload_str() const;
};

FactorElement identity_element(const FactorSpec& spec);
FactorElement make_finite_cyclic_element(const FactorSpec& spec, std::int64_t v);
FactorElement make_infinite_cyclic_element(const FactorSpec& spec, std::int64_t v);
FactorElement make_free_element(const FactorSpec& spec, const std::string& word);

FactorElement multiply(const FactorElement& x, const FactorElement& y);
FactorElement inverse(const FactorElement& x);

// Canonical total order used by the product enumeration: identity first,
// then by size, then class-specific tie break (Free: enum-lex; Z: positive
// before negative; FiniteCyclic: residue).
bool element_less(const FactorElement& a, const FactorElement& b);

// Eventually periodic boundary point of an infinite factor.
// Free: prefix + primitive period, concatenation freely reduced, minimal prefix.
// InfiniteCyclic: sign only.
struct FactorBoundaryPoint {
  FactorSpec spec;
  int sign = +1;        // InfiniteCyclic
  std::string prefix;   // Free
  std::string period;   // Free, nonempty

  char letter_at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }

  bool operator==(const FactorBoundaryPoint& o) const;
  bool operator!=(const FactorBoundaryPoint& o) const { return !(*this == o); }

  std::string str() const;  // "prefix(period)" or "+inf"/"-inf"
};

FactorBoundaryPoint make_sign_point(const FactorSpec& spec, int sign);
// Canonicalizes (minimal prefix, primitive period); validates reducedness.
FactorBoundaryPoint make_free_boundary_point(const FactorSpec& spec, std::string prefix,
                                             std::string period);

FactorBoundaryPoint act_on_boundary(const FactorElement& g, const FactorBoundaryPoint& xi);
FactorBoundaryPoint project_pi(const FactorElement& g);

// --- exact metric on the compactification -----------------------------------

struct CompactPoint {
  bool boundary = false;
  FactorElement elem;
  FactorBoundaryPoint pt;

  static CompactPoint of(const FactorElement& e) { return CompactPoint{false, e, {}}; }
  static CompactPoint of(const FactorBoundaryPoint& p) {
    return CompactPoint{true, identity_element(p.spec), p};
  }
  const FactorSpec& spec() const { return boundary ? pt.spec : elem.spec; }
};

Rational metric(const CompactPoint& a, const CompactPoint& b);
Rational metric(const FactorElement& a, const FactorElement& b);
Rational metric(const FactorElement& a, const FactorBoundaryPoint& b);
Rational metric(const FactorBoundaryPoint& a, const FactorBoundaryPoint& b);

// Exact distance from an element to the whole boundary of its factor.
Rational distance_to_boundary(const FactorElement& g);

// --- enumeration of nonidentity elements in canonical order -----------------

class FactorElementEnumerator {
 public:
  explicit FactorElementEnumerator(FactorSpec spec);
  bool has_next() const;
  FactorElement next();

 private:
  FactorSpec spec_;
  std::int64_t k_ = 0;    // FiniteCyclic / InfiniteCyclic progress
  std::string word_;      // Free progress (last emitted word)
};

// All nonidentity elements of size <= limit, canonical order.
std::vector<FactorElement> element_window(const FactorSpec& spec, int limit);

// --- textual encodings -------------------------------------------------------

std::string element_to_string(const FactorElement& e);
FactorElement parse_element(const FactorSpec& spec, const std::string& s);
FactorBoundaryPoint parse_boundary_point(const FactorSpec& spec, const std::string& s);

}  // namespace fpb
