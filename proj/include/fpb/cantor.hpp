#pragma once

#include <string>
#include <vector>

#include "fpb/factor.hpp"

namespace fpb {

// Homeomorphism between factor boundaries. IdentityLike requires equal
// class+params; the sign kinds act on InfiniteCyclic boundaries; CantorCoder
// couples two free-group boundaries through matched cylinder subdivisions.
enum class HomeoKind { IdentityLike, CantorCoder, IdentitySigns, SwapSigns };

struct FactorHomeo {
  FactorSpec source;
  FactorSpec target;
  HomeoKind kind = HomeoKind::IdentityLike;
};

FactorHomeo make_factor_homeo(const FactorSpec& source, const FactorSpec& target, HomeoKind kind);
FactorHomeo inverse_homeo(const FactorHomeo& h);

// A matched pair of cylinders, as letter paths (relative or absolute
// depending on which call produced them).
struct MatchedPair {
  std::string left;
  std::string right;
};

// Explicit homeomorphism dF_{m1} -> dF_{m2} built on the rooted subdivision
// trees: the root has 2m children (letters in the order x1..xm,X1..Xm), every
// other node 2m-1 (non-cancelling next letters, same order). Frontiers are
// refined one node at a time (shallowest first, then leftmost) on the side
// with fewer cylinders until counts agree, then matched in order.
class CantorCoder {
 public:
  CantorCoder(FactorSpec source, FactorSpec target);

  const FactorSpec& source() const { return src_; }
  const FactorSpec& target() const { return tgt_; }

  FactorBoundaryPoint apply(const FactorBoundaryPoint& xi) const;
  FactorBoundaryPoint apply_inverse(const FactorBoundaryPoint& xi) const;

  // One refinement step of the matching below the node pair identified by the
  // last letters consumed/emitted so far (0 = root). Relative paths.
  std::vector<MatchedPair> matched_frontier(char src_last, char tgt_last) const;

  // Recursive cylinder matching, refined until every source path reaches
  // `depth` letters. Absolute paths; both sides partition their boundary.
  std::vector<MatchedPair> cylinder_table(int depth) const;

  // Walks the matching along xi until the matched target path has at least
  // `want_target_len` letters. Absolute paths; xi lies in the left cylinder
  // and the left cylinder maps onto the right cylinder.
  MatchedPair transfer_cylinder(const FactorBoundaryPoint& xi, int want_target_len) const;

 private:
  FactorBoundaryPoint apply_dir(const FactorBoundaryPoint& xi, bool forward) const;
  std::vector<MatchedPair> frontier_dir(char a_last, char b_last, bool forward) const;

  FactorSpec src_;
  FactorSpec tgt_;
};

FactorBoundaryPoint apply_homeo(const FactorHomeo& h, const FactorBoundaryPoint& xi);
FactorBoundaryPoint apply_homeo_inverse(const FactorHomeo& h, const FactorBoundaryPoint& xi);

}  // namespace fpb
