#include "fpb/cantor.hpp"

#include <deque>
#include <map>
#include <tuple>

namespace fpb {
namespace {

// Next letters below a subdivision-tree node, cylinder order. last == 0 is
// the root (all 2m letters); otherwise the inverse of `last` is excluded.
std::string node_children(char last, int m) {
  std::string out;
  for (int i = 0; i < m; ++i) out.push_back(char('a' + i));
  for (int i = 0; i < m; ++i) out.push_back(char('A' + i));
  if (last != 0) out.erase(out.find(inverse_letter(last)), 1);
  return out;
}

// Matched frontiers below a node pair: start from the children on both sides
// and refine the side with fewer cylinders, one node at a time (shallowest
// first, leftmost among those), until the counts agree.
std::vector<MatchedPair> chase(int ma, char a_last, int mb, char b_last) {
  std::vector<std::string> fa, fb;
  for (char c : node_children(a_last, ma)) fa.push_back(std::string(1, c));
  for (char c : node_children(b_last, mb)) fb.push_back(std::string(1, c));

  auto expand_one = [](std::vector<std::string>& f, int m) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i].size() < f[pick].size()) pick = i;
    std::vector<std::string> kids;
    for (char c : node_children(f[pick].back(), m)) kids.push_back(f[pick] + c);
    f.erase(f.begin() + (std::ptrdiff_t)pick);
    f.insert(f.begin() + (std::ptrdiff_t)pick, kids.begin(), kids.end());
  };

  for (int guard = 0; fa.size() != fb.size(); ++guard) {
    if (guard > 4096)
      throw Error(ErrorCode::NotRepresentable, "cylinder counts never align");
    if (fa.size() < fb.size())
      expand_one(fa, ma);
    else
      expand_one(fb, mb);
  }

  std::vector<MatchedPair> out;
  out.reserve(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) out.push_back({fa[i], fb[i]});
  return out;
}

void require_free(const FactorSpec& s, const char* what) {
  if (s.cls != FactorClass::Free)
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be a free factor");
}

}  // namespace

CantorCoder::CantorCoder(FactorSpec source, FactorSpec target)
    : src_(std::move(source)), tgt_(std::move(target)) {
  require_free(src_, "coder source");
  require_free(tgt_, "coder target");
}

std::vector<MatchedPair> CantorCoder::frontier_dir(char a_last, char b_last, bool forward) const {
  int ma = forward ? src_.param : tgt_.param;
  int mb = forward ? tgt_.param : src_.param;
  return chase(ma, a_last, mb, b_last);
}

std::vector<MatchedPair> CantorCoder::matched_frontier(char src_last, char tgt_last) const {
  return frontier_dir(src_last, tgt_last, true);
}

FactorBoundaryPoint CantorCoder::apply_dir(const FactorBoundaryPoint& xi, bool forward) const {
  const FactorSpec& from = forward ? src_ : tgt_;
  const FactorSpec& to = forward ? tgt_ : src_;
  if (xi.spec != from) throw Error(ErrorCode::MixedFactors, "point not in the coder's source");

  std::string out;
  char a_last = 0, b_last = 0;
  std::size_t pos = 0;
  // transducer state once past the prefix: phase within the period plus the
  // last letters on both sides; a repeat pins down the image period
  std::map<std::tuple<std::size_t, char, char>, std::size_t> seen;

  for (int guard = 0; guard < 100000; ++guard) {
    if (pos >= xi.prefix.size()) {
      auto key = std::make_tuple((pos - xi.prefix.size()) % xi.period.size(), a_last, b_last);
      auto it = seen.find(key);
      if (it != seen.end()) {
        std::string head = out.substr(0, it->second);
        std::string cycle = out.substr(it->second);
        return make_free_boundary_point(to, head, cycle);
      }
      seen.emplace(key, out.size());
    }
    const MatchedPair* hit = nullptr;
    auto mf = frontier_dir(a_last, b_last, forward);
    for (const auto& p : mf) {
      bool ok = true;
      for (std::size_t i = 0; i < p.left.size() && ok; ++i)
        ok = p.left[i] == xi.letter_at(pos + i);
      if (ok) {
        hit = &p;
        break;
      }
    }
    if (!hit) throw Error(ErrorCode::NotRepresentable, "frontier does not cover the point");
    pos += hit->left.size();
    out += hit->right;
    a_last = hit->left.back();
    b_last = hit->right.back();
  }
  throw Error(ErrorCode::NotRepresentable, "image period not found");
}

FactorBoundaryPoint CantorCoder::apply(const FactorBoundaryPoint& xi) const {
  return apply_dir(xi, true);
}

FactorBoundaryPoint CantorCoder::apply_inverse(const FactorBoundaryPoint& xi) const {
  return apply_dir(xi, false);
}

std::vector<MatchedPair> CantorCoder::cylinder_table(int depth) const {
  std::vector<MatchedPair> done;
  std::deque<MatchedPair> work;
  work.push_back({"", ""});
  while (!work.empty()) {
    MatchedPair cur = work.front();
    work.pop_front();
    if (!cur.left.empty() && (int)cur.left.size() >= depth) {
      done.push_back(cur);
      continue;
    }
    char a_last = cur.left.empty() ? 0 : cur.left.back();
    char b_last = cur.right.empty() ? 0 : cur.right.back();
    auto mf = frontier_dir(a_last, b_last, true);
    // keep left-to-right order
    for (auto it = mf.rbegin(); it != mf.rend(); ++it)
      work.push_front({cur.left + it->left, cur.right + it->right});
  }
  return done;
}

MatchedPair CantorCoder::transfer_cylinder(const FactorBoundaryPoint& xi,
                                           int want_target_len) const {
  if (xi.spec != src_) throw Error(ErrorCode::MixedFactors, "point not in the coder's source");
  MatchedPair acc{"", ""};
  while ((int)acc.right.size() < want_target_len) {
    char a_last = acc.left.empty() ? 0 : acc.left.back();
    char b_last = acc.right.empty() ? 0 : acc.right.back();
    auto mf = frontier_dir(a_last, b_last, true);
    const MatchedPair* hit = nullptr;
    for (const auto& p : mf) {
      bool ok = true;
      for (std::size_t i = 0; i < p.left.size() && ok; ++i)
        ok = p.left[i] == xi.letter_at(acc.left.size() + i);
      if (ok) {
        hit = &p;
        break;
      }
    }
    if (!hit) throw Error(ErrorCode::NotRepresentable, "frontier does not cover the point");
    acc.left += hit->left;
    acc.right += hit->right;
  }
  return acc;
}

FactorHomeo make_factor_homeo(const FactorSpec& source, const FactorSpec& target, HomeoKind kind) {
  switch (kind) {
    case HomeoKind::IdentityLike:
      if (source != target)
        throw Error(ErrorCode::InvalidInput, "identity homeo needs equal factor specs");
      break;
    case HomeoKind::CantorCoder:
      require_free(source, "coder source");
      require_free(target, "coder target");
      break;
    case HomeoKind::IdentitySigns:
    case HomeoKind::SwapSigns:
      if (source.cls != FactorClass::InfiniteCyclic || target.cls != FactorClass::InfiniteCyclic)
        throw Error(ErrorCode::InvalidInput, "sign homeos act on infinite cyclic factors");
      break;
  }
  return FactorHomeo{source, target, kind};
}

FactorHomeo inverse_homeo(const FactorHomeo& h) { return FactorHomeo{h.target, h.source, h.kind}; }

FactorBoundaryPoint apply_homeo(const FactorHomeo& h, const FactorBoundaryPoint& xi) {
  if (xi.spec != h.source) throw Error(ErrorCode::MixedFactors, "point not in the homeo's source");
  switch (h.kind) {
    case HomeoKind::IdentityLike: {
      FactorBoundaryPoint r = xi;
      r.spec = h.target;
      return r;
    }
    case HomeoKind::IdentitySigns:
      return make_sign_point(h.target, xi.sign);
    case HomeoKind::SwapSigns:
      return make_sign_point(h.target, -xi.sign);
    case HomeoKind::CantorCoder:
      return CantorCoder(h.source, h.target).apply(xi);
  }
  throw Error(ErrorCode::InvalidInput, "unknown homeo kind");
}

FactorBoundaryPoint apply_homeo_inverse(const FactorHomeo& h, const FactorBoundaryPoint& xi) {
  if (xi.spec != h.target) throw Error(ErrorCode::MixedFactors, "point not in the homeo's target");
  if (h.kind == HomeoKind::CantorCoder) return CantorCoder(h.source, h.target).apply_inverse(xi);
  return apply_homeo(inverse_homeo(h), xi);
}

}  // namespace fpb
