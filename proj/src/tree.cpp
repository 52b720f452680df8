#include "fpb/tree.hpp"

#include <deque>

namespace fpb {

std::string TreeVertex::str() const {
  return "(" + coset_rep.str() + ")A" + std::to_string(factor);
}

TreeVertex base_vertex(const ProductSpec& spec) { return TreeVertex{identity_word(spec), 0}; }

TreeVertex vertex_of(const ReducedWord& g, int j) {
  g.spec.factor(j);  // range check
  ReducedWord rep = g;
  if (!rep.letters.empty() && rep.letters.back().factor == j) rep.letters.pop_back();
  return TreeVertex{rep, j};
}

TreeVertex act(const ReducedWord& g, const TreeVertex& v) {
  return vertex_of(multiply(g, v.coset_rep), v.factor);
}

std::string TreeEdge::str() const {
  return "(" + g.str() + ")[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

TreeVertex edge_endpoint(const TreeEdge& e, bool second) {
  return vertex_of(e.g, second ? e.b : e.a);
}

TreeEdge act(const ReducedWord& g, const TreeEdge& e) {
  return TreeEdge{multiply(g, e.g), e.a, e.b};
}

TreePath tree_geodesic(const TreeVertex& u, const TreeVertex& w) {
  if (u.coset_rep.spec != w.coset_rep.spec)
    throw Error(ErrorCode::MixedFactors, "vertices of different trees");
  TreePath path;
  path.vertices.push_back(u);
  if (u == w) return path;

  // walk cluster by cluster: the i-th syllable prefix of u^-1 w names the
  // subtree copy in which the path moves between consecutive syllable factors
  ReducedWord c = multiply(inverse(u.coset_rep), w.coset_rep);
  int cur = u.factor;
  ReducedWord p = u.coset_rep;
  for (std::size_t i = 0; i <= c.letters.size(); ++i) {
    int target = i < c.letters.size() ? c.letters[i].factor : w.factor;
    int step = target > cur ? 1 : -1;
    while (cur != target) {
      path.edges.push_back(TreeEdge{p, std::min(cur, cur + step), std::max(cur, cur + step)});
      cur += step;
      path.vertices.push_back(vertex_of(p, cur));
    }
    if (i < c.letters.size()) p = multiply(p, c.letters[i]);
  }
  return path;
}

int tree_distance(const TreeVertex& u, const TreeVertex& w) {
  return (int)tree_geodesic(u, w).edges.size();
}

std::string TreeEnd::str() const {
  std::string s = "[";
  s += ReducedWord{spec, prefix}.str();
  s += "](";
  s += ReducedWord{spec, period}.str();
  s += ")";
  return s;
}

static void check_alternation(const ProductSpec& spec, const std::vector<Letter>& prefix,
                              const std::vector<Letter>& period) {
  if (period.empty()) throw Error(ErrorCode::InvalidInput, "tree end needs a nonempty period");
  auto check_seq = [&](const std::vector<Letter>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (ls[i].elem.spec != spec.factor(ls[i].factor))
        throw Error(ErrorCode::MixedFactors, "letter does not match its factor");
      if (ls[i].elem.is_identity())
        throw Error(ErrorCode::InvalidInput, "identity letter in tree end");
      if (i && ls[i].factor == ls[i - 1].factor)
        throw Error(ErrorCode::InvalidInput, "adjacent letters share a factor");
    }
  };
  check_seq(prefix);
  check_seq(period);
  if (!prefix.empty() && prefix.back().factor == period.front().factor)
    throw Error(ErrorCode::InvalidInput, "prefix/period junction shares a factor");
  if (period.back().factor == period.front().factor)
    throw Error(ErrorCode::InvalidInput, "period is not cyclically alternating");
}

TreeEnd make_tree_end(const ProductSpec& spec, std::vector<Letter> prefix,
                      std::vector<Letter> period) {
  check_alternation(spec, prefix, period);
  // primitive period
  for (std::size_t d = 1; d <= period.size() / 2; ++d) {
    if (period.size() % d) continue;
    bool rep = true;
    for (std::size_t i = d; i < period.size() && rep; ++i) rep = period[i] == period[i % d];
    if (rep) {
      period.resize(d);
      break;
    }
  }
  // minimal prefix: absorb trailing prefix letters into a rotated period
  while (!prefix.empty() && prefix.back() == period.back()) {
    period.insert(period.begin(), period.back());
    period.pop_back();
    prefix.pop_back();
  }
  return TreeEnd{spec, std::move(prefix), std::move(period)};
}

TreeEnd act(const ReducedWord& g, const TreeEnd& eta) {
  if (g.spec != eta.spec) throw Error(ErrorCode::MixedFactors, "acting across products");
  std::size_t copies = (g.letters.size() + eta.prefix.size()) / eta.period.size() + 2;
  std::vector<Letter> unrolled = eta.prefix;
  for (std::size_t i = 0; i < copies; ++i)
    unrolled.insert(unrolled.end(), eta.period.begin(), eta.period.end());
  ReducedWord head = multiply(g, reduce(eta.spec, unrolled));
  return make_tree_end(eta.spec, head.letters, eta.period);
}

TreePath ray_path(const TreeEnd& eta, int edges) {
  TreePath path;
  ReducedWord p = identity_word(eta.spec);
  path.vertices.push_back(vertex_of(p, 0));
  int cur = 0;
  for (std::size_t i = 0; (int)path.edges.size() < edges; ++i) {
    int target = eta.syllable_at(i).factor;
    int step = target > cur ? 1 : -1;
    while (cur != target && (int)path.edges.size() < edges) {
      path.edges.push_back(TreeEdge{p, std::min(cur, cur + step), std::max(cur, cur + step)});
      cur += step;
      path.vertices.push_back(vertex_of(p, cur));
    }
    if (cur == target) p = multiply(p, eta.syllable_at(i));
  }
  return path;
}

TreeEdge first_ray_edge(const TreeVertex& v, const TreeEnd& eta) {
  int span = (int)(v.coset_rep.letters.size() + eta.prefix.size() + 2 * eta.period.size() + 2);
  int depth = span * std::max(2, eta.spec.k());
  TreePath ray = ray_path(eta, depth);
  TreePath geo = tree_geodesic(v, ray.vertices.back());
  if (geo.edges.empty()) throw Error(ErrorCode::InvalidInput, "vertex too deep along the ray");
  return geo.edges.front();
}

// --- GammaBall ---------------------------------------------------------------

std::string GammaVertex::str() const { return copy.str() + "#" + g.str(); }

std::pair<GammaVertex, GammaVertex> lift_attaching_points(const TreeEdge& e) {
  return {GammaVertex{vertex_of(e.g, e.a), e.g}, GammaVertex{vertex_of(e.g, e.b), e.g}};
}

FactorElement coset_position(const TreeVertex& copy, const ReducedWord& g) {
  ReducedWord c = multiply(inverse(copy.coset_rep), g);
  if (c.letters.empty()) return identity_element(copy.coset_rep.spec.factor(copy.factor));
  if (c.letters.size() == 1 && c.letters[0].factor == copy.factor) return c.letters[0].elem;
  throw Error(ErrorCode::InvalidInput, "element not in the vertex space");
}

std::vector<FactorElement> cayley_path(const FactorElement& a, const FactorElement& b) {
  if (a.spec != b.spec) throw Error(ErrorCode::MixedFactors, "path across factors");
  std::vector<FactorElement> out{a};
  switch (a.spec.cls) {
    case FactorClass::Free: {
      std::string wa = a.w, wb = b.w;
      std::size_t l = 0;
      while (l < wa.size() && l < wb.size() && wa[l] == wb[l]) ++l;
      std::string cur = wa;
      while (cur.size() > l) {
        cur.pop_back();
        out.push_back(make_free_element(a.spec, cur));
      }
      while (cur.size() < wb.size()) {
        cur.push_back(wb[cur.size()]);
        out.push_back(make_free_element(a.spec, cur));
      }
      return out;
    }
    case FactorClass::InfiniteCyclic: {
      std::int64_t step = b.z > a.z ? 1 : -1;
      for (std::int64_t v = a.z; v != b.z;) {
        v += step;
        out.push_back(make_infinite_cyclic_element(a.spec, v));
      }
      return out;
    }
    case FactorClass::FiniteCyclic: {
      std::int64_t n = a.spec.param;
      std::int64_t fwd = ((b.z - a.z) % n + n) % n;
      std::int64_t step = fwd <= n - fwd ? 1 : -1;
      for (std::int64_t v = a.z; v != b.z;) {
        v = ((v + step) % n + n) % n;
        out.push_back(make_finite_cyclic_element(a.spec, v));
      }
      return out;
    }
    default:
      throw Error(ErrorCode::OpaqueFactor, "no Cayley graph for an opaque factor");
  }
}

static std::vector<FactorElement> cayley_neighbors(const FactorElement& a) {
  std::vector<FactorElement> out;
  switch (a.spec.cls) {
    case FactorClass::Free:
      for (int i = 0; i < a.spec.param; ++i) {
        out.push_back(multiply(a, make_free_element(a.spec, std::string(1, char('a' + i)))));
        out.push_back(multiply(a, make_free_element(a.spec, std::string(1, char('A' + i)))));
      }
      break;
    case FactorClass::InfiniteCyclic:
      out.push_back(make_infinite_cyclic_element(a.spec, a.z + 1));
      out.push_back(make_infinite_cyclic_element(a.spec, a.z - 1));
      break;
    case FactorClass::FiniteCyclic:
      if (a.spec.param > 1) {
        out.push_back(make_finite_cyclic_element(a.spec, (a.z + 1) % a.spec.param));
        if (a.spec.param > 2)
          out.push_back(make_finite_cyclic_element(a.spec, (a.z - 1 + a.spec.param) % a.spec.param));
      }
      break;
    default:
      throw Error(ErrorCode::OpaqueFactor, "no Cayley graph for an opaque factor");
  }
  return out;
}

GammaBall::GammaBall(ProductSpec spec, int radius) : spec_(std::move(spec)), radius_(radius) {
  GammaVertex base{base_vertex(spec_), identity_word(spec_)};
  verts_.push_back(base);
  adj_.emplace_back();
  index_.emplace(base.str(), 0);
  std::vector<int> dist{0};

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t vi = queue.front();
    queue.pop_front();
    GammaVertex v = verts_[vi];

    std::vector<std::pair<GammaVertex, bool>> nbrs;
    FactorElement pos = coset_position(v.copy, v.g);
    for (const auto& a : cayley_neighbors(pos)) {
      std::vector<Letter> ls;
      if (!a.is_identity()) ls.push_back(Letter{v.copy.factor, a});
      ReducedWord gw = multiply(v.copy.coset_rep, ReducedWord{spec_, ls});
      nbrs.push_back({GammaVertex{v.copy, gw}, false});
    }
    for (int jp : {v.copy.factor - 1, v.copy.factor + 1}) {
      if (jp < 0 || jp >= spec_.k()) continue;
      nbrs.push_back({GammaVertex{vertex_of(v.g, jp), v.g}, true});
    }

    for (const auto& [nb, lift] : nbrs) {
      std::string key = nb.str();
      auto it = index_.find(key);
      std::size_t ni;
      if (it != index_.end()) {
        ni = it->second;
      } else {
        if (dist[vi] >= radius_) continue;
        ni = verts_.size();
        verts_.push_back(nb);
        adj_.emplace_back();
        dist.push_back(dist[vi] + 1);
        index_.emplace(key, ni);
        queue.push_back(ni);
      }
      bool dup = false;
      for (const auto& [other, ol] : adj_[vi]) dup = dup || (other == ni && ol == lift);
      if (!dup && ni != vi) adj_[vi].push_back({ni, lift});
    }
  }
}

std::optional<std::size_t> GammaBall::index_of(const GammaVertex& v) const {
  auto it = index_.find(v.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> GammaBall::bfs_from(std::size_t i) const {
  std::vector<int> dist(verts_.size(), -1);
  dist[i] = 0;
  std::deque<std::size_t> queue{i};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [n, lift] : adj_[v]) {
      (void)lift;
      if (dist[n] < 0) {
        dist[n] = dist[v] + 1;
        queue.push_back(n);
      }
    }
  }
  return dist;
}

int GammaBall::distance(std::size_t a, std::size_t b) const {
  int d = bfs_from(a)[b];
  if (d < 0) throw Error(ErrorCode::RadiusTooSmall, "vertices disconnected inside the ball");
  return d;
}

// --- ray normal forms --------------------------------------------------------

// extends `form` through the given tree edges, walking inside each vertex
// space between consecutive attaching points
static void walk_blocks(RayForm& form, TreeVertex& cv, ReducedWord& prev,
                        const std::vector<TreeEdge>& edges) {
  for (const auto& e : edges) {
    FactorElement from = coset_position(cv, prev);
    FactorElement to = coset_position(cv, e.g);
    auto block = cayley_path(from, to);
    for (std::size_t i = 1; i < block.size(); ++i) {
      std::vector<Letter> ls;
      if (!block[i].is_identity()) ls.push_back(Letter{cv.factor, block[i]});
      form.path.push_back(GammaVertex{cv, multiply(cv.coset_rep, ReducedWord{prev.spec, ls})});
      form.lift_step.push_back(false);
    }
    TreeVertex first = edge_endpoint(e, false);
    TreeVertex other = first == cv ? edge_endpoint(e, true) : first;
    form.path.push_back(GammaVertex{other, e.g});
    form.lift_step.push_back(true);
    cv = other;
    prev = e.g;
  }
}

RayForm ray_normal_form(const TreeEnd& eta, int depth) {
  RayForm form;
  TreeVertex cv = base_vertex(eta.spec);
  ReducedWord prev = identity_word(eta.spec);
  form.path.push_back(GammaVertex{cv, prev});
  walk_blocks(form, cv, prev, ray_path(eta, depth).edges);
  return form;
}

RayForm ray_normal_form(const StabClass& x, int depth) {
  StabClass r = reduced_representative(x.g, x.factor, x.xi);
  const ProductSpec& spec = r.g.spec;
  RayForm form;
  form.terminal_factor = true;
  TreeVertex cv = base_vertex(spec);
  ReducedWord prev = identity_word(spec);
  form.path.push_back(GammaVertex{cv, prev});
  TreeVertex target{r.g, r.factor};
  walk_blocks(form, cv, prev, tree_geodesic(base_vertex(spec), target).edges);
  form.terminal_copy = cv;

  // settle at the copy's distinguished point, then march toward xi
  FactorElement from = coset_position(cv, prev);
  auto settle = cayley_path(from, identity_element(spec.factor(r.factor)));
  for (std::size_t i = 1; i < settle.size(); ++i) {
    std::vector<Letter> ls;
    if (!settle[i].is_identity()) ls.push_back(Letter{r.factor, settle[i]});
    form.path.push_back(GammaVertex{cv, multiply(cv.coset_rep, ReducedWord{spec, ls})});
    form.lift_step.push_back(false);
  }
  const FactorSpec& f = spec.factor(r.factor);
  for (int i = 1; i <= depth; ++i) {
    FactorElement a = f.cls == FactorClass::Free
                          ? make_free_element(f, [&] {
                              std::string w;
                              for (int l = 0; l < i; ++l) w.push_back(r.xi.letter_at((std::size_t)l));
                              return w;
                            }())
                          : make_infinite_cyclic_element(f, r.xi.sign * i);
    form.path.push_back(GammaVertex{cv, multiply(cv.coset_rep, ReducedWord{spec, {Letter{r.factor, a}}})});
    form.lift_step.push_back(false);
  }
  return form;
}

}  // namespace fpb
