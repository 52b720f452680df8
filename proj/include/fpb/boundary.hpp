#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fpb/rational.hpp"
#include "fpb/tree.hpp"
#include "fpb/word.hpp"

namespace fpb {

// Point of the boundary: either a factor-boundary class [g, xi] attached to a
// tree vertex, or an end of the tree.
struct BoundaryPoint {
  bool is_end = false;
  StabClass stab;  // reduced-representative form
  TreeEnd end;

  static BoundaryPoint of(const StabClass& s);
  static BoundaryPoint of(const TreeEnd& e);

  const ProductSpec& spec() const { return is_end ? end.spec : stab.g.spec; }

  bool operator==(const BoundaryPoint& o) const;
  bool operator!=(const BoundaryPoint& o) const { return !(*this == o); }

  std::string str() const;
};

BoundaryPoint act(const ReducedWord& g, const BoundaryPoint& x);

struct TreeProjection {
  bool is_end = false;
  TreeVertex v;
  TreeEnd end;
};

TreeProjection project_p(const BoundaryPoint& x);

// [g, xi] through the inclusion of the factor boundary.
BoundaryPoint stab_inclusion(const ReducedWord& g, int j, const FactorBoundaryPoint& xi);

// Clopen neighborhood descriptor in one factor's compactification: a cylinder
// (Free) or a one-sided tail (InfiniteCyclic), minus finitely many elements.
struct UDesc {
  FactorSpec spec;
  std::string prefix;        // Free: words extending this prefix
  int sign = +1;             // InfiniteCyclic
  std::int64_t min_abs = 1;  // InfiniteCyclic: sign*n with n >= min_abs, plus sign*inf
  std::vector<FactorElement> removed;

  static UDesc cylinder(const FactorSpec& spec, std::string prefix,
                        std::vector<FactorElement> removed = {});
  static UDesc ztail(const FactorSpec& spec, int sign, std::int64_t min_abs = 1,
                     std::vector<FactorElement> removed = {});

  bool contains(const FactorElement& a) const;
  bool contains(const FactorBoundaryPoint& xi) const;

  std::string str() const;
};

// Basis neighborhood of a boundary point. The end form V_n(eta) is anchored
// at a base vertex so translates stay in the family.
struct Nbhd {
  bool is_end = false;
  StabClass xi;  // stab form: base class, U in the factor coordinates of its copy
  UDesc u;
  TreeVertex base;  // end form
  TreeEnd eta;
  int n = 1;

  static Nbhd stab_nbhd(const StabClass& xi, UDesc u);
  static Nbhd end_nbhd(const TreeEnd& eta, int n);
  static Nbhd end_nbhd(const TreeVertex& base, const TreeEnd& eta, int n);

  std::string str() const;
};

bool member(const Nbhd& v, const BoundaryPoint& x);
Nbhd act_on_nbhd(const ReducedWord& g, const Nbhd& v);

std::pair<Nbhd, Nbhd> separate(const BoundaryPoint& x, const BoundaryPoint& y);

// Halfspaces of an edge: '+' is the side of the endpoint in factor e.b.
char halfspace_side(const TreeEdge& e, const BoundaryPoint& x);

struct Halfspace {
  TreeEdge e;
  char side = '+';
};

// A halfspace containing eta but not x.
Halfspace separating_halfspace(const TreeEnd& eta, const BoundaryPoint& x);

enum class ComponentKind { Singleton, FactorBoundary, Unknown };

struct ComponentClass {
  ComponentKind kind = ComponentKind::Unknown;
  bool derived_not_paper = false;
  TreeVertex vertex;  // FactorBoundary only
};

ComponentClass classify_component(const BoundaryPoint& x);
// Tag-level verdict for factor classes that cannot carry representable
// points (notably 1-ended opaque factors).
ComponentClass classify_factor_component(const FactorSpec& f);

// Gromov products ((z . z_n) at the basepoint) of depth-truncated rays,
// computed exactly inside GammaBall(R). depth < 0 means depth = R.
std::vector<Rational> gromov_product_test(const BoundaryPoint& z,
                                          const std::vector<BoundaryPoint>& zs, int R,
                                          int depth = -1);

}  // namespace fpb
