#include "fpb/homeo.hpp"

#include <algorithm>

#include "json.hpp"

namespace fpb {

namespace {

constexpr std::size_t kWindowCap = 500000;

bool infinite_factor(const FactorSpec& f) { return f.has_boundary(); }

}  // namespace

PartialBijection::PartialBijection(FactorHomeo f)
    : f_(make_factor_homeo(f.source, f.target, f.kind)), se_(f.source), te_(f.target) {}

void PartialBijection::ensure_source(std::size_t i) {
  while (src_.size() <= i) {
    if (!se_.has_next() || src_.size() >= kWindowCap)
      throw Error(ErrorCode::ExhaustedWindow, "source enumeration exhausted");
    src_.push_back(se_.next());
    fwd_.push_back(std::nullopt);
    img_.emplace_back();
  }
}

void PartialBijection::ensure_target(std::size_t i) {
  while (tgt_.size() <= i) {
    if (!te_.has_next() || tgt_.size() >= kWindowCap)
      throw Error(ErrorCode::ExhaustedWindow, "target enumeration exhausted");
    tgt_.push_back(te_.next());
    inv_.push_back(std::nullopt);
  }
}

const FactorBoundaryPoint& PartialBijection::source_image(std::size_t i) {
  ensure_source(i);
  if (!img_[i]) img_[i] = apply_homeo(f_, project_pi(src_[i]));
  return *img_[i];
}

FactorElement PartialBijection::direct_image(const FactorElement& a, bool forward) const {
  const FactorSpec& out = forward ? f_.target : f_.source;
  FactorElement r = a;
  r.spec = out;
  if (f_.kind == HomeoKind::SwapSigns) r.z = -r.z;
  return r;
}

std::size_t PartialBijection::locate(const FactorElement& a, bool source_side) {
  auto& v = source_side ? src_ : tgt_;
  for (std::size_t i = 0;; ++i) {
    if (source_side)
      ensure_source(i);
    else
      ensure_target(i);
    if (v[i] == a) return i;
    // canonical order: once past a, it cannot appear later
    if (element_less(a, v[i]))
      throw Error(ErrorCode::InvalidInput, "element missing from enumeration");
  }
}

void PartialBijection::round() {
  ++rounds_;
  const int k = rounds_;

  // smallest unassigned source; a finite factor may already be fully matched
  std::size_t gi = 0;
  while (gi < src_.size() && fwd_[gi]) ++gi;
  if (gi == src_.size()) {
    if (!se_.has_next()) return;
    ensure_source(gi);
  }

  if (direct()) {
    FactorElement image = direct_image(src_[gi], true);
    std::size_t l = locate(image, false);
    fwd_[gi] = l;
    inv_[l] = gi;
    Rational dist(0);
    if (infinite_factor(f_.source)) dist = metric(image, apply_homeo(f_, project_pi(src_[gi])));
    log_.push_back(AssignmentRecord{0, k, src_[gi], image, Rational(1), dist});
    return;
  }

  // step 1: match g_k against an unused target within 1/k of its image point
  const Rational step1_bound(1, k);
  const FactorBoundaryPoint& img = source_image(gi);
  for (std::size_t l = 0;; ++l) {
    ensure_target(l);
    if (inv_[l]) continue;
    Rational d = metric(tgt_[l], img);
    if (d < step1_bound) {
      fwd_[gi] = l;
      inv_[l] = gi;
      log_.push_back(AssignmentRecord{1, k, src_[gi], tgt_[l], step1_bound, d});
      break;
    }
  }

  // step 2: cover the smallest unused target
  std::size_t hl = 0;
  for (;; ++hl) {
    ensure_target(hl);
    if (!inv_[hl]) break;
  }
  const Rational step2_bound = distance_to_boundary(tgt_[hl]) + Rational(1, k);
  for (std::size_t i = 0;; ++i) {
    ensure_source(i);
    if (fwd_[i]) continue;
    Rational d = metric(tgt_[hl], source_image(i));
    if (d < step2_bound) {
      fwd_[i] = hl;
      inv_[hl] = i;
      log_.push_back(AssignmentRecord{2, k, src_[i], tgt_[hl], step2_bound, d});
      break;
    }
  }
}

void PartialBijection::run_rounds(int k) {
  for (int i = 0; i < k; ++i) round();
}

FactorElement PartialBijection::apply(const FactorElement& a) {
  if (a.spec != f_.source) throw Error(ErrorCode::MixedFactors, "element not in the source factor");
  if (a.is_identity()) return identity_element(f_.target);
  if (direct()) return direct_image(a, true);
  std::size_t i = locate(a, true);
  int cap = rounds_ + (int)i + 8;
  while (!fwd_[i]) {
    if (rounds_ >= cap) throw Error(ErrorCode::OutsideWindow, "element not reached by the rounds");
    round();
  }
  return tgt_[*fwd_[i]];
}

FactorElement PartialBijection::apply_inverse(const FactorElement& b) {
  if (b.spec != f_.target) throw Error(ErrorCode::MixedFactors, "element not in the target factor");
  if (b.is_identity()) return identity_element(f_.source);
  if (direct()) return direct_image(b, false);
  std::size_t l = locate(b, false);
  int cap = rounds_ + (int)l + 8;
  while (!inv_[l]) {
    if (rounds_ >= cap) throw Error(ErrorCode::OutsideWindow, "element not reached by the rounds");
    round();
  }
  return src_[*inv_[l]];
}

std::vector<std::pair<FactorElement, FactorElement>> PartialBijection::assignments() const {
  std::vector<std::pair<FactorElement, FactorElement>> out;
  for (std::size_t i = 0; i < src_.size(); ++i)
    if (fwd_[i]) out.emplace_back(src_[i], tgt_[*fwd_[i]]);
  return out;
}

PartialBijection build_bijection(const FactorHomeo& f, int rounds) {
  PartialBijection b(f);
  b.run_rounds(rounds);
  return b;
}

std::string export_step_log(const PartialBijection& b) {
  nlohmann::json j;
  j["source"] = b.homeo().source.describe();
  j["target"] = b.homeo().target.describe();
  j["rounds"] = b.rounds_done();
  j["log"] = nlohmann::json::array();
  for (const auto& r : b.log()) {
    j["log"].push_back({{"step", r.step},
                        {"k", r.k},
                        {"source", element_to_string(r.source)},
                        {"target", element_to_string(r.target)},
                        {"bound", r.bound.str()},
                        {"dist", r.dist.str()}});
  }
  return j.dump(2);
}

TreeIso alpha_beta(const ProductSpec& s1, const ProductSpec& s2,
                   const std::vector<FactorHomeo>& h, int rounds) {
  const int k = s1.k();
  if (s2.k() != k) throw Error(ErrorCode::InvalidInput, "factor counts differ");
  if ((int)h.size() != k) throw Error(ErrorCode::InvalidInput, "need one factor homeo per factor");
  for (int j = 0; j < k; ++j)
    if (h[j].source != s1.factor(j))
      throw Error(ErrorCode::InvalidInput, "homeo source does not match its factor");

  // the model graph is a path, so the only candidates are identity and reversal
  std::vector<int> sigma;
  for (auto flip : {false, true}) {
    std::vector<int> cand(k);
    bool ok = true;
    for (int j = 0; j < k; ++j) {
      cand[j] = flip ? k - 1 - j : j;
      if (h[j].target != s2.factor(cand[j])) ok = false;
    }
    if (ok) {
      sigma = cand;
      break;
    }
  }
  if (sigma.empty())
    throw Error(ErrorCode::InvalidInput, "homeo targets match no adjacency-preserving matching");

  TreeIso iso{s1, s2, sigma, h, std::make_shared<std::vector<PartialBijection>>()};
  for (int j = 0; j < k; ++j) {
    iso.maps->emplace_back(h[j]);
    iso.maps->back().run_rounds(rounds);
  }
  return iso;
}

Letter letter_image(const TreeIso& iso, const Letter& a) {
  return Letter{iso.sigma[a.factor], (*iso.maps)[(std::size_t)a.factor].apply(a.elem)};
}

ReducedWord word_image(const TreeIso& iso, const ReducedWord& g) {
  if (g.spec != iso.s1) throw Error(ErrorCode::MixedFactors, "word not over the source product");
  std::vector<Letter> out;
  out.reserve(g.letters.size());
  for (const auto& a : g.letters) out.push_back(letter_image(iso, a));
  return make_word(iso.s2, out);
}

static Letter letter_preimage(const TreeIso& iso, const Letter& b) {
  for (int j = 0; j < iso.s1.k(); ++j)
    if (iso.sigma[j] == b.factor)
      return Letter{j, (*iso.maps)[(std::size_t)j].apply_inverse(b.elem)};
  throw Error(ErrorCode::InvalidInput, "factor outside the matching");
}

static ReducedWord word_preimage(const TreeIso& iso, const ReducedWord& g) {
  if (g.spec != iso.s2) throw Error(ErrorCode::MixedFactors, "word not over the target product");
  std::vector<Letter> out;
  out.reserve(g.letters.size());
  for (const auto& b : g.letters) out.push_back(letter_preimage(iso, b));
  return make_word(iso.s1, out);
}

TreeVertex tree_iso_apply(const TreeIso& iso, const TreeVertex& v) {
  return vertex_of(word_image(iso, v.coset_rep), iso.sigma[v.factor]);
}

TreeEdge tree_iso_apply(const TreeIso& iso, const TreeEdge& e) {
  int a2 = iso.sigma[e.a], b2 = iso.sigma[e.b];
  if (a2 > b2) std::swap(a2, b2);
  if (b2 != a2 + 1) throw Error(ErrorCode::InvalidInput, "matching does not preserve the edge");
  return TreeEdge{word_image(iso, e.g), a2, b2};
}

BoundaryPoint map_F(const TreeIso& iso, const BoundaryPoint& x) {
  if (x.spec() != iso.s1) throw Error(ErrorCode::MixedFactors, "point not over the source product");
  if (x.is_end) {
    std::vector<Letter> prefix, period;
    for (const auto& a : x.end.prefix) prefix.push_back(letter_image(iso, a));
    for (const auto& a : x.end.period) period.push_back(letter_image(iso, a));
    return BoundaryPoint::of(make_tree_end(iso.s2, prefix, period));
  }
  const StabClass& s = x.stab;
  return BoundaryPoint::of(StabClass{word_image(iso, s.g), iso.sigma[s.factor],
                                     apply_homeo(iso.homeos[(std::size_t)s.factor], s.xi)});
}

Nbhd continuity_probe(const TreeIso& iso, const BoundaryPoint& x, const Nbhd& v2,
                      int search_depth) {
  BoundaryPoint fx = map_F(iso, x);
  if (!member(v2, fx))
    throw Error(ErrorCode::InvalidInput, "neighborhood does not contain the image point");

  if (x.is_end) {
    if (!v2.is_end) throw Error(ErrorCode::InvalidInput, "kind mismatch between point and target");
    // pull the anchor back through the tree isomorphism; the image of the
    // resulting V_n is V_n of the image end at the original anchor
    TreeVertex base1 = TreeVertex{word_preimage(iso, v2.base.coset_rep), 0};
    for (int j = 0; j < iso.s1.k(); ++j)
      if (iso.sigma[j] == v2.base.factor) base1.factor = j;
    base1 = vertex_of(base1.coset_rep, base1.factor);
    return Nbhd::end_nbhd(base1, x.end, v2.n);
  }

  if (v2.is_end) throw Error(ErrorCode::InvalidInput, "kind mismatch between point and target");
  const StabClass& s = x.stab;
  const FactorHomeo& h = iso.homeos[(std::size_t)s.factor];
  PartialBijection& bij = (*iso.maps)[(std::size_t)s.factor];

  UDesc u1 = v2.u;
  switch (h.kind) {
    case HomeoKind::IdentityLike:
    case HomeoKind::IdentitySigns:
      u1.spec = h.source;
      for (auto& r : u1.removed) r.spec = h.source;
      break;
    case HomeoKind::SwapSigns:
      u1.spec = h.source;
      u1.sign = -u1.sign;
      for (auto& r : u1.removed) {
        r.spec = h.source;
        r.z = -r.z;
      }
      break;
    case HomeoKind::CantorCoder: {
      if (v2.u.spec.cls != FactorClass::Free)
        throw Error(ErrorCode::InvalidInput, "coder target neighborhood must be a cylinder");
      CantorCoder coder(h.source, h.target);
      MatchedPair mp;
      try {
        mp = coder.transfer_cylinder(s.xi, (int)v2.u.prefix.size());
      } catch (const Error&) {
        throw Error(ErrorCode::SearchExhausted, "cylinder transfer did not stabilize");
      }
      if ((int)mp.left.size() > search_depth)
        throw Error(ErrorCode::SearchExhausted, "transfer cylinder deeper than the search depth");
      std::vector<FactorElement> removed;
      // already matched elements are not controlled by the cylinder matching;
      // drop the ones whose assigned image escapes
      for (const auto& [a, b] : bij.assignments()) {
        if (a.w.compare(0, mp.left.size(), mp.left) == 0 && !v2.u.contains(b))
          removed.push_back(a);
      }
      for (const auto& r : v2.u.removed) {
        try {
          FactorElement pre = bij.apply_inverse(r);
          if (pre.w.compare(0, mp.left.size(), mp.left) == 0) removed.push_back(pre);
        } catch (const Error&) {
          // preimage outside the window: it cannot collide with sampled probes
        }
      }
      u1 = UDesc::cylinder(h.source, mp.left, removed);
      break;
    }
  }
  return Nbhd::stab_nbhd(s, u1);
}

}  // namespace fpb
