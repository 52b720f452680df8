#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpb/word.hpp"

namespace fpb {

// The splitting's tree: vertices are cosets g·A_j, edges g·(j,j+1) with the
// model graph on the factors taken to be the path 0 - 1 - ... - k-1.

struct TreeVertex {
  ReducedWord coset_rep;  // canonical: last letter not in `factor`
  int factor = 0;

  bool operator==(const TreeVertex& o) const {
    return factor == o.factor && coset_rep == o.coset_rep;
  }
  bool operator!=(const TreeVertex& o) const { return !(*this == o); }

  std::string str() const;
};

TreeVertex base_vertex(const ProductSpec& spec);
TreeVertex vertex_of(const ReducedWord& g, int j);
TreeVertex act(const ReducedWord& g, const TreeVertex& v);

// Edge g·(a,b) with b = a+1; edge stabilizers are trivial, so g is an exact
// group element, not a coset representative.
struct TreeEdge {
  ReducedWord g;
  int a = 0;
  int b = 1;

  bool operator==(const TreeEdge& o) const { return a == o.a && b == o.b && g == o.g; }
  bool operator!=(const TreeEdge& o) const { return !(*this == o); }

  std::string str() const;
};

TreeVertex edge_endpoint(const TreeEdge& e, bool second);
TreeEdge act(const ReducedWord& g, const TreeEdge& e);

struct TreePath {
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
};

TreePath tree_geodesic(const TreeVertex& u, const TreeVertex& w);
int tree_distance(const TreeVertex& u, const TreeVertex& w);

// End of the tree: eventually periodic infinite alternating word read from
// the base vertex. Canonical form: primitive period, minimal prefix.
struct TreeEnd {
  ProductSpec spec;
  std::vector<Letter> prefix;
  std::vector<Letter> period;

  Letter syllable_at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : period[(i - prefix.size()) % period.size()];
  }

  bool operator==(const TreeEnd& o) const {
    return spec == o.spec && prefix == o.prefix && period == o.period;
  }
  bool operator!=(const TreeEnd& o) const { return !(*this == o); }

  std::string str() const;
};

TreeEnd make_tree_end(const ProductSpec& spec, std::vector<Letter> prefix,
                      std::vector<Letter> period);
TreeEnd act(const ReducedWord& g, const TreeEnd& eta);

// Initial segment of the ray [v0, eta) with `edges` tree edges.
TreePath ray_path(const TreeEnd& eta, int edges);
// First edge of the geodesic from v toward eta.
TreeEdge first_ray_edge(const TreeVertex& v, const TreeEnd& eta);

// --- finite ball of the tree of Cayley graphs -------------------------------

// Vertex of the tree of spaces: position g inside the Cayley copy attached to
// tree vertex `copy` (so g lies in the coset of `copy`).
struct GammaVertex {
  TreeVertex copy;
  ReducedWord g;

  bool operator==(const GammaVertex& o) const { return copy == o.copy && g == o.g; }
  bool operator!=(const GammaVertex& o) const { return !(*this == o); }

  std::string str() const;
};

std::pair<GammaVertex, GammaVertex> lift_attaching_points(const TreeEdge& e);

// Ball of radius R around the basepoint (identity position in the factor-0
// copy). Cayley edges use the standard generators; lifted edges connect the
// two copies through each tree edge at its attaching points.
class GammaBall {
 public:
  GammaBall(ProductSpec spec, int radius);

  const ProductSpec& spec() const { return spec_; }
  int radius() const { return radius_; }
  std::size_t size() const { return verts_.size(); }
  const GammaVertex& vertex(std::size_t i) const { return verts_[i]; }
  std::optional<std::size_t> index_of(const GammaVertex& v) const;
  std::size_t base_index() const { return 0; }

  // (neighbor index, reached through a lifted edge)
  const std::vector<std::pair<std::size_t, bool>>& neighbors(std::size_t i) const {
    return adj_[i];
  }

  std::vector<int> bfs_from(std::size_t i) const;  // -1 = unreachable
  int distance(std::size_t a, std::size_t b) const;

 private:
  ProductSpec spec_;
  int radius_;
  std::vector<GammaVertex> verts_;
  std::vector<std::vector<std::pair<std::size_t, bool>>> adj_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Geodesic path in the Cayley graph of one factor, endpoints included.
std::vector<FactorElement> cayley_path(const FactorElement& a, const FactorElement& b);

// Position of the group element g inside the Cayley copy attached to `copy`;
// errors if g does not lie in the copy's coset.
FactorElement coset_position(const TreeVertex& copy, const ReducedWord& g);

// Normal form of a ray from the basepoint: blocks through vertex spaces
// joined by lifted edges, and for a StabClass a terminal ray inside the last
// copy. `path` lists the vertices in order; lift_step[i] marks whether the
// step path[i] -> path[i+1] crosses a lifted edge.
struct RayForm {
  bool terminal_factor = false;  // ends inside a vertex space
  std::vector<GammaVertex> path;
  std::vector<bool> lift_step;
  TreeVertex terminal_copy;

  const GammaVertex& tip() const { return path.back(); }
};

RayForm ray_normal_form(const TreeEnd& eta, int depth);   // depth = tree edges
RayForm ray_normal_form(const StabClass& x, int depth);   // depth = ray steps in the last copy

}  // namespace fpb
