#include "fpb/boundary.hpp"

#include <algorithm>
#include <cstdlib>

namespace fpb {

BoundaryPoint BoundaryPoint::of(const StabClass& s) {
  BoundaryPoint p;
  p.is_end = false;
  p.stab = reduced_representative(s.g, s.factor, s.xi);
  return p;
}

BoundaryPoint BoundaryPoint::of(const TreeEnd& e) {
  BoundaryPoint p;
  p.is_end = true;
  p.end = e;
  p.stab.g = identity_word(e.spec);
  return p;
}

bool BoundaryPoint::operator==(const BoundaryPoint& o) const {
  if (is_end != o.is_end) return false;
  return is_end ? end == o.end : stab == o.stab;
}

std::string BoundaryPoint::str() const { return is_end ? "end" + end.str() : stab.str(); }

BoundaryPoint act(const ReducedWord& g, const BoundaryPoint& x) {
  if (x.is_end) return BoundaryPoint::of(act(g, x.end));
  return BoundaryPoint::of(StabClass{multiply(g, x.stab.g), x.stab.factor, x.stab.xi});
}

TreeProjection project_p(const BoundaryPoint& x) {
  TreeProjection pr;
  if (x.is_end) {
    pr.is_end = true;
    pr.end = x.end;
  } else {
    pr.v = TreeVertex{x.stab.g, x.stab.factor};  // reduced representative is canonical
  }
  return pr;
}

BoundaryPoint stab_inclusion(const ReducedWord& g, int j, const FactorBoundaryPoint& xi) {
  return BoundaryPoint::of(StabClass{g, j, xi});
}

// --- neighborhood descriptors ------------------------------------------------

UDesc UDesc::cylinder(const FactorSpec& spec, std::string prefix,
                      std::vector<FactorElement> removed) {
  if (spec.cls != FactorClass::Free)
    throw Error(ErrorCode::InvalidInput, "cylinder descriptors need a free factor");
  if (!is_freely_reduced(prefix)) throw Error(ErrorCode::InvalidInput, "prefix not reduced");
  UDesc u;
  u.spec = spec;
  u.prefix = std::move(prefix);
  u.removed = std::move(removed);
  return u;
}

UDesc UDesc::ztail(const FactorSpec& spec, int sign, std::int64_t min_abs,
                   std::vector<FactorElement> removed) {
  if (spec.cls != FactorClass::InfiniteCyclic)
    throw Error(ErrorCode::InvalidInput, "tail descriptors need an infinite cyclic factor");
  if (min_abs < 1) throw Error(ErrorCode::InvalidInput, "tail threshold must be >= 1");
  UDesc u;
  u.spec = spec;
  u.sign = sign >= 0 ? +1 : -1;
  u.min_abs = min_abs;
  u.removed = std::move(removed);
  return u;
}

bool UDesc::contains(const FactorElement& a) const {
  if (a.spec != spec) return false;
  for (const auto& r : removed)
    if (r == a) return false;
  if (spec.cls == FactorClass::Free)
    return a.w.size() >= prefix.size() && a.w.compare(0, prefix.size(), prefix) == 0;
  if (a.z == 0) return false;
  return (a.z > 0 ? +1 : -1) == sign && std::llabs(a.z) >= min_abs;
}

bool UDesc::contains(const FactorBoundaryPoint& xi) const {
  if (xi.spec != spec) return false;
  if (spec.cls == FactorClass::Free) {
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (xi.letter_at(i) != prefix[i]) return false;
    return true;
  }
  return xi.sign == sign;
}

std::string UDesc::str() const {
  std::string s = spec.cls == FactorClass::Free
                      ? "cyl\"" + prefix + "\""
                      : std::string("tail") + (sign > 0 ? "+" : "-") + std::to_string(min_abs);
  if (!removed.empty()) {
    s += "\\{";
    for (std::size_t i = 0; i < removed.size(); ++i)
      s += (i ? "," : "") + removed[i].payload_str();
    s += "}";
  }
  return s;
}

Nbhd Nbhd::stab_nbhd(const StabClass& xi, UDesc u) {
  Nbhd v;
  v.is_end = false;
  v.xi = reduced_representative(xi.g, xi.factor, xi.xi);
  v.u = std::move(u);
  if (!v.u.contains(v.xi.xi))
    throw Error(ErrorCode::InvalidInput, "descriptor does not contain its point");
  v.base = base_vertex(xi.g.spec);
  return v;
}

Nbhd Nbhd::end_nbhd(const TreeEnd& eta, int n) { return end_nbhd(base_vertex(eta.spec), eta, n); }

Nbhd Nbhd::end_nbhd(const TreeVertex& base, const TreeEnd& eta, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "end neighborhoods need n >= 1");
  Nbhd v;
  v.is_end = true;
  v.base = base;
  v.eta = eta;
  v.n = n;
  v.xi.g = identity_word(eta.spec);
  return v;
}

std::string Nbhd::str() const {
  if (is_end) return "V_" + std::to_string(n) + "(" + eta.str() + ")@" + base.str();
  return "V_" + u.str() + "(" + xi.str() + ")";
}

// first `n` tree edges from `base` toward the end
static TreePath path_toward_end(const TreeVertex& base, const TreeEnd& eta, int n) {
  // the ray from the basepoint is already geodesic
  if (base.factor == 0 && base.coset_rep.is_identity()) return ray_path(eta, n);
  int span = (int)(base.coset_rep.letters.size() + eta.prefix.size() + 2 * eta.period.size()) +
             n + 4;
  int depth = span * std::max(2, eta.spec.k());
  TreePath ray = ray_path(eta, depth);
  TreePath geo = tree_geodesic(base, ray.vertices.back());
  if ((int)geo.edges.size() > n) {
    geo.edges.resize((std::size_t)n);
    geo.vertices.resize((std::size_t)n + 1);
  }
  return geo;
}

bool member(const Nbhd& v, const BoundaryPoint& x) {
  if (v.is_end) {
    TreePath ref = path_toward_end(v.base, v.eta, v.n);
    if ((int)ref.edges.size() < v.n) return false;
    if (x.is_end) {
      TreePath px = path_toward_end(v.base, x.end, v.n);
      return std::equal(ref.edges.begin(), ref.edges.end(), px.edges.begin(), px.edges.end());
    }
    TreeVertex w = project_p(x).v;
    TreePath geo = tree_geodesic(v.base, w);
    if ((int)geo.edges.size() < v.n) return false;
    for (int i = 0; i < v.n; ++i)
      if (geo.edges[(std::size_t)i] != ref.edges[(std::size_t)i]) return false;
    return w != ref.vertices.back();
  }

  TreeVertex home{v.xi.g, v.xi.factor};
  if (!x.is_end) {
    TreeVertex w = project_p(x).v;
    if (w == home) return v.u.contains(x.stab.xi);
  }
  TreeEdge e = x.is_end ? first_ray_edge(home, x.end)
                        : tree_geodesic(home, project_p(x).v).edges.front();
  return v.u.contains(coset_position(home, e.g));
}

Nbhd act_on_nbhd(const ReducedWord& g, const Nbhd& v) {
  if (v.is_end) return Nbhd::end_nbhd(act(g, v.base), act(g, v.eta), v.n);

  StabClass moved = reduced_representative(multiply(g, v.xi.g), v.xi.factor, v.xi.xi);
  // coordinate change inside the copy: positions shift by c, the letter the
  // representative absorbed
  ReducedWord shift = multiply(inverse(moved.g), multiply(g, v.xi.g));
  FactorElement c = shift.letters.empty() ? identity_element(v.u.spec) : shift.letters[0].elem;

  UDesc u = v.u;
  for (auto& r : u.removed) r = multiply(c, r);
  if (u.spec.cls == FactorClass::Free) {
    if (!u.prefix.empty()) {
      std::string m = free_reduce(c.w + u.prefix);
      std::size_t cancelled = (c.w.size() + u.prefix.size() - m.size()) / 2;
      if (cancelled >= u.prefix.size())
        throw Error(ErrorCode::NotRepresentable, "translated cylinder is not a cylinder");
      u.prefix = m;
    }
  } else {
    std::int64_t shifted = u.sign * u.min_abs + c.z;
    if (shifted == 0 || (shifted > 0 ? +1 : -1) != u.sign)
      throw Error(ErrorCode::NotRepresentable, "translated tail crosses zero");
    u.min_abs = std::llabs(shifted);
  }
  Nbhd out;
  out.is_end = false;
  out.xi = moved;
  out.u = std::move(u);
  out.base = base_vertex(moved.g.spec);
  return out;
}

// --- separation --------------------------------------------------------------

static int shared_ray_edges(const TreeEnd& a, const TreeEnd& b) {
  int span = (int)(a.prefix.size() + b.prefix.size() + a.period.size() * b.period.size()) + 4;
  int depth = span * std::max(2, a.spec.k());
  TreePath ra = ray_path(a, depth);
  TreePath rb = ray_path(b, depth);
  int n = 0;
  while (n < depth && ra.edges[(std::size_t)n] == rb.edges[(std::size_t)n]) ++n;
  if (n == depth) throw Error(ErrorCode::InvalidInput, "rays do not diverge in range");
  return n;
}

// neighborhood of xi in its factor compactification avoiding one element
static UDesc around_avoiding(const FactorBoundaryPoint& xi, const FactorElement& avoid) {
  if (xi.spec.cls == FactorClass::Free) {
    std::string pre;
    for (std::size_t i = 0; i <= avoid.w.size(); ++i) pre.push_back(xi.letter_at(i));
    return UDesc::cylinder(xi.spec, pre);
  }
  return UDesc::ztail(xi.spec, xi.sign, std::llabs(avoid.z) + 1);
}

std::pair<Nbhd, Nbhd> separate(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x == y) throw Error(ErrorCode::EqualPoints, "cannot separate a point from itself");

  if (x.is_end && y.is_end) {
    int n = shared_ray_edges(x.end, y.end);
    return {Nbhd::end_nbhd(x.end, n + 1), Nbhd::end_nbhd(y.end, n + 1)};
  }
  if (x.is_end != y.is_end) {
    const BoundaryPoint& e = x.is_end ? x : y;
    const BoundaryPoint& s = x.is_end ? y : x;
    TreeVertex v{s.stab.g, s.stab.factor};
    TreeEdge fe = first_ray_edge(v, e.end);
    UDesc u = around_avoiding(s.stab.xi, coset_position(v, fe.g));
    Nbhd vs = Nbhd::stab_nbhd(s.stab, u);
    Nbhd ve = Nbhd::end_nbhd(e.end, tree_distance(base_vertex(e.spec()), v) + 1);
    return x.is_end ? std::make_pair(ve, vs) : std::make_pair(vs, ve);
  }

  TreeVertex vx{x.stab.g, x.stab.factor};
  TreeVertex vy{y.stab.g, y.stab.factor};
  if (vx == vy) {
    const FactorBoundaryPoint& a = x.stab.xi;
    const FactorBoundaryPoint& b = y.stab.xi;
    if (a.spec.cls == FactorClass::Free) {
      std::size_t d = 0;
      while (a.letter_at(d) == b.letter_at(d)) ++d;
      std::string pa, pb;
      for (std::size_t i = 0; i <= d; ++i) {
        pa.push_back(a.letter_at(i));
        pb.push_back(b.letter_at(i));
      }
      return {Nbhd::stab_nbhd(x.stab, UDesc::cylinder(a.spec, pa)),
              Nbhd::stab_nbhd(y.stab, UDesc::cylinder(b.spec, pb))};
    }
    return {Nbhd::stab_nbhd(x.stab, UDesc::ztail(a.spec, a.sign)),
            Nbhd::stab_nbhd(y.stab, UDesc::ztail(b.spec, b.sign))};
  }

  TreeEdge ex = tree_geodesic(vx, vy).edges.front();
  TreeEdge ey = tree_geodesic(vy, vx).edges.front();
  return {Nbhd::stab_nbhd(x.stab, around_avoiding(x.stab.xi, coset_position(vx, ex.g))),
          Nbhd::stab_nbhd(y.stab, around_avoiding(y.stab.xi, coset_position(vy, ey.g)))};
}

// --- halfspaces --------------------------------------------------------------

char halfspace_side(const TreeEdge& e, const BoundaryPoint& x) {
  TreeVertex na = edge_endpoint(e, false);
  TreeVertex nb = edge_endpoint(e, true);
  TreeVertex w;
  if (x.is_end) {
    int span = (int)(e.g.letters.size() + x.end.prefix.size() + 2 * x.end.period.size()) + 4;
    w = ray_path(x.end, span * std::max(2, x.spec().k())).vertices.back();
  } else {
    w = project_p(x).v;
  }
  return tree_distance(nb, w) < tree_distance(na, w) ? '+' : '-';
}

Halfspace separating_halfspace(const TreeEnd& eta, const BoundaryPoint& x) {
  if (x.is_end && x.end == eta) throw Error(ErrorCode::EqualPoints, "point equals the end");
  int n;
  if (x.is_end) {
    n = shared_ray_edges(eta, x.end);
  } else {
    TreeVertex w = project_p(x).v;
    TreePath geo = tree_geodesic(base_vertex(eta.spec), w);
    TreePath ray = path_toward_end(base_vertex(eta.spec), eta, (int)geo.edges.size() + 1);
    n = 0;
    while (n < (int)geo.edges.size() && ray.edges[(std::size_t)n] == geo.edges[(std::size_t)n])
      ++n;
  }
  TreeEdge e = path_toward_end(base_vertex(eta.spec), eta, n + 1).edges.back();
  return Halfspace{e, halfspace_side(e, BoundaryPoint::of(eta))};
}

// --- components --------------------------------------------------------------

ComponentClass classify_component(const BoundaryPoint& x) {
  ComponentClass c;
  if (x.is_end) {
    c.kind = ComponentKind::Singleton;
    return c;
  }
  return classify_factor_component(x.spec().factor(x.stab.factor));
}

ComponentClass classify_factor_component(const FactorSpec& f) {
  ComponentClass c;
  switch (f.cls) {
    case FactorClass::Free:
    case FactorClass::InfiniteCyclic:
      c.kind = ComponentKind::Singleton;
      c.derived_not_paper = true;
      return c;
    case FactorClass::Opaque:
      if (f.tag.rfind("1-ended", 0) == 0) {
        c.kind = ComponentKind::FactorBoundary;
        return c;
      }
      return c;
    default:
      return c;  // finite factors carry no boundary points
  }
}

// --- convergence -------------------------------------------------------------

std::vector<Rational> gromov_product_test(const BoundaryPoint& z,
                                          const std::vector<BoundaryPoint>& zs, int R,
                                          int depth) {
  if (depth < 0) depth = R;
  GammaBall ball(z.spec(), R);
  auto truncate = [&](const BoundaryPoint& p) {
    RayForm form = p.is_end ? ray_normal_form(p.end, depth) : ray_normal_form(p.stab, depth);
    auto idx = ball.index_of(form.tip());
    if (!idx) throw Error(ErrorCode::RadiusTooSmall, "truncation leaves the ball");
    return *idx;
  };
  std::size_t zi = truncate(z);
  std::vector<int> d0 = ball.bfs_from(ball.base_index());
  std::vector<int> dz = ball.bfs_from(zi);
  std::vector<Rational> out;
  for (const auto& p : zs) {
    std::size_t pi = truncate(p);
    out.push_back(Rational(d0[zi] + d0[pi] - dz[pi], 2));
  }
  return out;
}

}  // namespace fpb
