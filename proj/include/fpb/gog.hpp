#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpb/word.hpp"

namespace fpb {

// Vertex group described by classification data only; an optional FactorSpec
// makes the tag oracle-backed (usable by the constructive machinery).
enum class VertexKind { Finite, VirtuallyCyclic, FreeOfRank, OneEnded };

struct VertexGroupTag {
  VertexKind kind = VertexKind::Finite;
  std::int64_t param = 1;    // Finite: order; FreeOfRank: rank
  std::string boundary_tag;  // OneEnded
  std::optional<FactorSpec> oracle;

  static VertexGroupTag finite(std::int64_t order);
  static VertexGroupTag virtually_cyclic();
  static VertexGroupTag free_of_rank(int rank);
  static VertexGroupTag one_ended(std::string boundary_tag);

  bool nonelementary() const {
    return kind == VertexKind::FreeOfRank || kind == VertexKind::OneEnded;
  }
  // homeomorphism type of the Gromov boundary, "" for elementary tags
  std::string h_tag() const;

  bool operator==(const VertexGroupTag& o) const;
  std::string str() const;
};

struct GogVertex {
  std::string id;
  VertexGroupTag tag;
};

struct GogEdge {
  std::string a, b;
  std::int64_t edge_order = 1;  // order of the (finite) edge group
};

struct GraphOfGroups {
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;

  static GraphOfGroups of(std::vector<GogVertex> vertices, std::vector<GogEdge> edges);
  const VertexGroupTag& tag_of(const std::string& id) const;
};

// Homeomorphism types of the boundaries of the nonelementary vertex groups.
std::set<std::string> h_set(const GraphOfGroups& g);

// End census of the fundamental group. Collapses edges whose group fills a
// finite endpoint, then reads the count off the reduced shape; the two-ended
// shapes are the index-(2,2) finite amalgam and the finite mapping torus.
bool has_infinitely_many_ends(const GraphOfGroups& g);

enum class NormalCase { m0, m1, mGeneral };

// Free product normal form up to quasi-isometry: m counts the QI types among
// the nonelementary vertex groups (all free ranks share one type, one-ended
// tags compare as strings).
struct NormalizedProduct {
  NormalCase ncase = NormalCase::m0;
  std::vector<VertexGroupTag> factors;       // the symbolic product, in order
  std::optional<ProductSpec> spec;           // set when every factor is oracle-backed
  std::vector<std::string> qi_types;         // the type set used, sorted

  std::string str() const;
};

NormalizedProduct normalize(const GraphOfGroups& g);

// The normalized product re-read as a graph of groups (path, trivial edges).
GraphOfGroups product_graph(const NormalizedProduct& p);

enum class Thm1Verdict { Homeomorphic, NoConclusion };
enum class Cor13Verdict { Homeomorphic, NotHomeomorphic, HypothesisViolation };

// One-directional criterion: equal h-sets certify homeomorphic boundaries.
Thm1Verdict decide_thm1(const GraphOfGroups& a, const GraphOfGroups& b);
// Iff-criterion for splittings whose vertex groups are all finite or 1-ended.
Cor13Verdict decide_cor13(const GraphOfGroups& a, const GraphOfGroups& b);

const char* verdict_name(Thm1Verdict v);
const char* verdict_name(Cor13Verdict v);

}  // namespace fpb
