#include "fpb/gog.hpp"

#include <algorithm>
#include <map>

#include "fpb/errors.hpp"

namespace fpb {

VertexGroupTag VertexGroupTag::finite(std::int64_t order) {
  if (order < 1) throw Error(ErrorCode::InvalidInput, "finite group order must be positive");
  return VertexGroupTag{VertexKind::Finite, order, "", std::nullopt};
}

VertexGroupTag VertexGroupTag::virtually_cyclic() {
  return VertexGroupTag{VertexKind::VirtuallyCyclic, 0, "",
                        FactorSpec::infinite_cyclic()};
}

VertexGroupTag VertexGroupTag::free_of_rank(int rank) {
  if (rank < 2) throw Error(ErrorCode::InvalidInput, "free tag needs rank >= 2");
  return VertexGroupTag{VertexKind::FreeOfRank, rank, "", FactorSpec::free_group(rank)};
}

VertexGroupTag VertexGroupTag::one_ended(std::string boundary_tag) {
  if (boundary_tag.empty()) throw Error(ErrorCode::InvalidInput, "one-ended tag needs a name");
  VertexGroupTag t{VertexKind::OneEnded, 0, boundary_tag, std::nullopt};
  t.oracle = FactorSpec::opaque("1-ended:" + boundary_tag);
  return t;
}

std::string VertexGroupTag::h_tag() const {
  if (kind == VertexKind::FreeOfRank) return "cantor";
  if (kind == VertexKind::OneEnded) return boundary_tag;
  return "";
}

bool VertexGroupTag::operator==(const VertexGroupTag& o) const {
  return kind == o.kind && param == o.param && boundary_tag == o.boundary_tag;
}

std::string VertexGroupTag::str() const {
  switch (kind) {
    case VertexKind::Finite: return "finite(" + std::to_string(param) + ")";
    case VertexKind::VirtuallyCyclic: return "vcyc";
    case VertexKind::FreeOfRank: return "free(" + std::to_string(param) + ")";
    case VertexKind::OneEnded: return "1-ended(" + boundary_tag + ")";
  }
  return "?";
}

GraphOfGroups GraphOfGroups::of(std::vector<GogVertex> vertices, std::vector<GogEdge> edges) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "graph needs a vertex");
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!pos.emplace(vertices[i].id, i).second)
      throw Error(ErrorCode::InvalidInput, "duplicate vertex id " + vertices[i].id);
  for (const auto& e : edges) {
    if (!pos.count(e.a) || !pos.count(e.b))
      throw Error(ErrorCode::InvalidInput, "edge endpoint missing");
    if (e.edge_order < 1) throw Error(ErrorCode::InvalidInput, "edge group order must be positive");
  }
  // connectivity (loops contribute nothing)
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      std::size_t x = pos[e.a], y = pos[e.b];
      if (x == v && !seen[y]) { seen[y] = true; stack.push_back(y); }
      if (y == v && !seen[x]) { seen[x] = true; stack.push_back(x); }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw Error(ErrorCode::InvalidInput, "graph not connected");
  return GraphOfGroups{std::move(vertices), std::move(edges)};
}

const VertexGroupTag& GraphOfGroups::tag_of(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v.tag;
  throw Error(ErrorCode::InvalidInput, "unknown vertex id " + id);
}

std::set<std::string> h_set(const GraphOfGroups& g) {
  std::set<std::string> out;
  for (const auto& v : g.vertices)
    if (v.tag.nonelementary()) out.insert(v.tag.h_tag());
  return out;
}

namespace {

void check_inclusion(const VertexGroupTag& t, std::int64_t s) {
  if (t.kind != VertexKind::Finite) return;  // finite-in-infinite always proper
  if (s > t.param || t.param % s != 0)
    throw Error(ErrorCode::Indeterminate,
                "edge group of order " + std::to_string(s) + " has no derivable inclusion in " +
                    t.str());
}

}  // namespace

bool has_infinitely_many_ends(const GraphOfGroups& g) {
  std::map<std::string, VertexGroupTag> tags;
  for (const auto& v : g.vertices) tags.emplace(v.id, v.tag);
  std::vector<GogEdge> edges = g.edges;
  for (const auto& e : edges) {
    check_inclusion(tags.at(e.a), e.edge_order);
    check_inclusion(tags.at(e.b), e.edge_order);
  }

  // collapse non-loop edges whose group is the whole group of a finite endpoint
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const GogEdge e = edges[i];
      if (e.a == e.b) continue;
      std::string gone;
      if (tags.at(e.a).kind == VertexKind::Finite && tags.at(e.a).param == e.edge_order)
        gone = e.a;
      else if (tags.at(e.b).kind == VertexKind::Finite && tags.at(e.b).param == e.edge_order)
        gone = e.b;
      else
        continue;
      std::string keep = gone == e.a ? e.b : e.a;
      edges.erase(edges.begin() + (std::ptrdiff_t)i);
      for (auto& f : edges) {
        if (f.a == gone) f.a = keep;
        if (f.b == gone) f.b = keep;
      }
      tags.erase(gone);
      changed = true;
      break;
    }
  }

  if (edges.empty()) {
    // collapsed to one vertex group
    switch (tags.begin()->second.kind) {
      case VertexKind::FreeOfRank: return true;
      case VertexKind::Finite:
      case VertexKind::VirtuallyCyclic:
      case VertexKind::OneEnded: return false;
    }
  }
  if (edges.size() == 1) {
    const GogEdge& e = edges[0];
    if (e.a == e.b) {
      // mapping torus of a finite group is two-ended
      const VertexGroupTag& t = tags.at(e.a);
      if (t.kind == VertexKind::Finite && t.param == e.edge_order) return false;
      return true;
    }
    const VertexGroupTag& ta = tags.at(e.a);
    const VertexGroupTag& tb = tags.at(e.b);
    // index-(2,2) amalgam of finite groups is two-ended
    if (ta.kind == VertexKind::Finite && tb.kind == VertexKind::Finite &&
        ta.param == 2 * e.edge_order && tb.param == 2 * e.edge_order)
      return false;
    return true;
  }
  return true;
}

namespace {

// representative of a QI class: smallest free rank, or the tagged group itself
bool tag_before(const VertexGroupTag& a, const VertexGroupTag& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.param != b.param) return a.param < b.param;
  return a.boundary_tag < b.boundary_tag;
}

}  // namespace

NormalizedProduct normalize(const GraphOfGroups& g) {
  if (!has_infinitely_many_ends(g))
    throw Error(ErrorCode::NotInfinitelyManyEnds, "normal form needs infinitely many ends");

  std::map<std::string, VertexGroupTag> reps;  // QI type -> representative tag
  for (const auto& v : g.vertices) {
    if (!v.tag.nonelementary()) continue;
    auto [it, fresh] = reps.emplace(v.tag.h_tag(), v.tag);
    if (!fresh && tag_before(v.tag, it->second)) it->second = v.tag;
  }

  NormalizedProduct out;
  for (const auto& [t, rep] : reps) out.qi_types.push_back(t);

  if (reps.empty()) {
    out.ncase = NormalCase::m0;
    // quasi-isometric to F2, written as the product of two cyclic lines
    out.factors = {VertexGroupTag::virtually_cyclic(), VertexGroupTag::virtually_cyclic()};
  } else if (reps.size() == 1) {
    out.ncase = NormalCase::m1;
    out.factors = {reps.begin()->second, reps.begin()->second};
  } else {
    out.ncase = NormalCase::mGeneral;
    for (const auto& [t, rep] : reps) out.factors.push_back(rep);
  }

  bool backed = std::all_of(out.factors.begin(), out.factors.end(),
                            [](const VertexGroupTag& t) {
                              return t.oracle && t.oracle->cls != FactorClass::Opaque;
                            });
  if (backed) {
    std::vector<FactorSpec> fs;
    for (const auto& t : out.factors) fs.push_back(*t.oracle);
    out.spec = ProductSpec::of(fs);
  }
  return out;
}

GraphOfGroups product_graph(const NormalizedProduct& p) {
  std::vector<GogVertex> vs;
  std::vector<GogEdge> es;
  for (std::size_t i = 0; i < p.factors.size(); ++i) {
    vs.push_back(GogVertex{"f" + std::to_string(i), p.factors[i]});
    if (i) es.push_back(GogEdge{"f" + std::to_string(i - 1), "f" + std::to_string(i), 1});
  }
  return GraphOfGroups::of(vs, es);
}

std::string NormalizedProduct::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " * " : "") + factors[i].str();
  return s;
}

Thm1Verdict decide_thm1(const GraphOfGroups& a, const GraphOfGroups& b) {
  if (!has_infinitely_many_ends(a) || !has_infinitely_many_ends(b))
    throw Error(ErrorCode::NotInfinitelyManyEnds, "criterion needs infinitely many ends");
  return h_set(a) == h_set(b) ? Thm1Verdict::Homeomorphic : Thm1Verdict::NoConclusion;
}

Cor13Verdict decide_cor13(const GraphOfGroups& a, const GraphOfGroups& b) {
  for (const auto* g : {&a, &b})
    for (const auto& v : g->vertices)
      if (v.tag.kind == VertexKind::FreeOfRank || v.tag.kind == VertexKind::VirtuallyCyclic)
        return Cor13Verdict::HypothesisViolation;
  if (!has_infinitely_many_ends(a) || !has_infinitely_many_ends(b))
    return Cor13Verdict::HypothesisViolation;
  return h_set(a) == h_set(b) ? Cor13Verdict::Homeomorphic : Cor13Verdict::NotHomeomorphic;
}

const char* verdict_name(Thm1Verdict v) {
  return v == Thm1Verdict::Homeomorphic ? "Homeomorphic" : "NoConclusion";
}

const char* verdict_name(Cor13Verdict v) {
  switch (v) {
    case Cor13Verdict::Homeomorphic: return "Homeomorphic";
    case Cor13Verdict::NotHomeomorphic: return "NotHomeomorphic";
    case Cor13Verdict::HypothesisViolation: return "HypothesisViolation";
  }
  return "?";
}

}  // namespace fpb
