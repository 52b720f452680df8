#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpb/boundary.hpp"
#include "fpb/cantor.hpp"
#include "fpb/tree.hpp"
#include "fpb/word.hpp"

namespace fpb {

struct AssignmentRecord {
  int step = 0;  // 0 = direct rule, 1/2 = back-and-forth steps
  int k = 0;     // round
  FactorElement source;
  FactorElement target;
  Rational bound;  // strict bound the assignment had to satisfy
  Rational dist;   // achieved distance
};

// Back-and-forth bijection between two factors, built in alternating rounds
// over the canonical enumerations. Identity is always fixed. For the sign
// kinds and IdentityLike the map is the evident direct rule; a CantorCoder
// homeo drives the two-step construction: step 1 sends the smallest
// unassigned source g_k to an unused target within 1/k of the coder image of
// pi(g_k); step 2 covers the smallest unused target h_k from a source within
// d(h_k, boundary) + 1/k.
class PartialBijection {
 public:
  explicit PartialBijection(FactorHomeo f);

  const FactorHomeo& homeo() const { return f_; }
  int rounds_done() const { return rounds_; }
  void run_rounds(int k);

  FactorElement apply(const FactorElement& a);
  FactorElement apply_inverse(const FactorElement& b);

  const std::vector<AssignmentRecord>& log() const { return log_; }
  // elements known to be matched so far (excluding the identity)
  std::vector<std::pair<FactorElement, FactorElement>> assignments() const;

 private:
  bool direct() const { return f_.kind != HomeoKind::CantorCoder; }
  FactorElement direct_image(const FactorElement& a, bool forward) const;
  void ensure_source(std::size_t i);
  void ensure_target(std::size_t i);
  const FactorBoundaryPoint& source_image(std::size_t i);
  void round();
  std::size_t locate(const FactorElement& a, bool source_side);

  FactorHomeo f_;
  FactorElementEnumerator se_, te_;
  std::vector<FactorElement> src_, tgt_;
  std::vector<std::optional<std::size_t>> fwd_, inv_;
  std::vector<std::optional<FactorBoundaryPoint>> img_;
  std::vector<AssignmentRecord> log_;
  int rounds_ = 0;
};

PartialBijection build_bijection(const FactorHomeo& f, int rounds);

std::string export_step_log(const PartialBijection& b);  // JSON audit record

// Isomorphism of the two splitting trees induced by a factor matching: factor
// j of the first product corresponds to factor sigma[j] of the second, and
// letters are translated by the per-factor bijections.
struct TreeIso {
  ProductSpec s1, s2;
  std::vector<int> sigma;
  std::vector<FactorHomeo> homeos;  // indexed by source factor
  std::shared_ptr<std::vector<PartialBijection>> maps;
};

TreeIso alpha_beta(const ProductSpec& s1, const ProductSpec& s2,
                   const std::vector<FactorHomeo>& h, int rounds);

Letter letter_image(const TreeIso& iso, const Letter& a);
ReducedWord word_image(const TreeIso& iso, const ReducedWord& g);
TreeVertex tree_iso_apply(const TreeIso& iso, const TreeVertex& v);
TreeEdge tree_iso_apply(const TreeIso& iso, const TreeEdge& e);

BoundaryPoint map_F(const TreeIso& iso, const BoundaryPoint& x);

// Neighborhood of x whose image is (sampled to be) inside v2, a neighborhood
// of map_F(x). End case: exactly V_n. Stab case: the transfer cylinder minus
// the logged exceptions.
Nbhd continuity_probe(const TreeIso& iso, const BoundaryPoint& x, const Nbhd& v2,
                      int search_depth);

}  // namespace fpb
