#include "fpb/json_io.hpp"

#include "json.hpp"

#include "fpb/errors.hpp"

namespace fpb {

using nlohmann::json;

namespace {

json parse(const std::string& s) {
  json j = json::parse(s, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON");
  return j;
}

json factor_obj(const FactorSpec& f) {
  switch (f.cls) {
    case FactorClass::Free: return json{{"kind", "free"}, {"rank", f.param}};
    case FactorClass::InfiniteCyclic: return json{{"kind", "z"}};
    case FactorClass::FiniteCyclic: return json{{"kind", "finite"}, {"n", f.param}};
    case FactorClass::Opaque: return json{{"kind", "opaque"}, {"tag", f.tag}};
  }
  throw Error(ErrorCode::InvalidInput, "unknown factor class");
}

FactorSpec factor_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::ParseError, "factor needs a kind");
  std::string kind = j["kind"];
  if (kind == "free") {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
      throw Error(ErrorCode::ParseError, "free factor needs a rank");
    return FactorSpec::free_group(j["rank"]);
  }
  if (kind == "z") return FactorSpec::infinite_cyclic();
  if (kind == "finite") {
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw Error(ErrorCode::ParseError, "finite factor needs n");
    return FactorSpec::finite_cyclic(j["n"]);
  }
  if (kind == "opaque") {
    if (!j.contains("tag") || !j["tag"].is_string())
      throw Error(ErrorCode::ParseError, "opaque factor needs a tag");
    return FactorSpec::opaque(j["tag"]);
  }
  throw Error(ErrorCode::ParseError, "unknown factor kind: " + kind);
}

json tag_obj(const VertexGroupTag& t) {
  switch (t.kind) {
    case VertexKind::Finite: return json{{"kind", "finite"}, {"order", t.param}};
    case VertexKind::VirtuallyCyclic: return json{{"kind", "vcyc"}};
    case VertexKind::FreeOfRank: return json{{"kind", "free"}, {"rank", t.param}};
    case VertexKind::OneEnded: return json{{"kind", "one-ended"}, {"tag", t.boundary_tag}};
  }
  throw Error(ErrorCode::InvalidInput, "unknown vertex kind");
}

VertexGroupTag tag_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(ErrorCode::ParseError, "vertex tag needs a kind");
  std::string kind = j["kind"];
  if (kind == "finite") {
    if (!j.contains("order") || !j["order"].is_number_integer())
      throw Error(ErrorCode::ParseError, "finite tag needs an order");
    return VertexGroupTag::finite(j["order"]);
  }
  if (kind == "vcyc") return VertexGroupTag::virtually_cyclic();
  if (kind == "free") {
    if (!j.contains("rank") || !j["rank"].is_number_integer())
      throw Error(ErrorCode::ParseError, "free tag needs a rank");
    return VertexGroupTag::free_of_rank(j["rank"]);
  }
  if (kind == "one-ended") {
    if (!j.contains("tag") || !j["tag"].is_string())
      throw Error(ErrorCode::ParseError, "one-ended tag needs a name");
    return VertexGroupTag::one_ended(j["tag"]);
  }
  throw Error(ErrorCode::ParseError, "unknown vertex tag kind: " + kind);
}

std::string need_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw Error(ErrorCode::ParseError, std::string("missing string field: ") + key);
  return j[key];
}

}  // namespace

std::string factor_to_json(const FactorSpec& f) { return factor_obj(f).dump(); }

FactorSpec factor_from_json(const std::string& s) { return factor_of(parse(s)); }

std::string spec_to_json(const ProductSpec& spec) {
  json j;
  j["factors"] = json::array();
  for (const auto& f : spec.factors) j["factors"].push_back(factor_obj(f));
  return j.dump();
}

ProductSpec spec_from_json(const std::string& s) {
  json j = parse(s);
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw Error(ErrorCode::ParseError, "spec needs a factors array");
  std::vector<FactorSpec> fs;
  for (const auto& f : j["factors"]) fs.push_back(factor_of(f));
  try {
    return ProductSpec::of(fs);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string point_to_json(const BoundaryPoint& x) {
  json j;
  if (x.is_end) {
    j["kind"] = "end";
    j["prefix"] = word_to_string(ReducedWord{x.end.spec, x.end.prefix});
    j["period"] = word_to_string(ReducedWord{x.end.spec, x.end.period});
  } else {
    j["kind"] = "stab";
    j["g"] = word_to_string(x.stab.g);
    j["factor"] = x.stab.factor;
    j["xi"] = x.stab.xi.str();
  }
  return j.dump();
}

BoundaryPoint point_from_json(const ProductSpec& spec, const std::string& s) {
  json j = parse(s);
  std::string kind = need_string(j, "kind");
  if (kind == "end") {
    auto prefix = parse_word(spec, need_string(j, "prefix"));
    auto period = parse_word(spec, need_string(j, "period"));
    return BoundaryPoint::of(make_tree_end(spec, prefix.letters, period.letters));
  }
  if (kind == "stab") {
    auto g = parse_word(spec, need_string(j, "g"));
    if (!j.contains("factor") || !j["factor"].is_number_integer())
      throw Error(ErrorCode::ParseError, "stab point needs a factor index");
    int factor = j["factor"];
    if (factor < 0 || factor >= spec.k())
      throw Error(ErrorCode::ParseError, "factor index out of range");
    auto xi = parse_boundary_point(spec.factor(factor), need_string(j, "xi"));
    return BoundaryPoint::of(StabClass{g, factor, xi});
  }
  throw Error(ErrorCode::ParseError, "unknown point kind: " + kind);
}

std::string nbhd_to_json(const Nbhd& v) {
  json j;
  if (v.is_end) {
    j["form"] = "end";
    j["base"] = json{{"coset_rep", word_to_string(v.base.coset_rep)}, {"factor", v.base.factor}};
    j["eta"] = json{{"prefix", word_to_string(ReducedWord{v.eta.spec, v.eta.prefix})},
                    {"period", word_to_string(ReducedWord{v.eta.spec, v.eta.period})}};
    j["n"] = v.n;
  } else {
    j["form"] = "stab";
    j["xi"] = json{{"g", word_to_string(v.xi.g)}, {"factor", v.xi.factor}, {"xi", v.xi.xi.str()}};
    json u;
    if (v.u.spec.cls == FactorClass::Free) {
      u["type"] = "cylinder";
      u["prefix"] = v.u.prefix;
    } else {
      u["type"] = "tail";
      u["sign"] = v.u.sign;
      u["min_abs"] = v.u.min_abs;
    }
    u["removed"] = json::array();
    for (const auto& r : v.u.removed) u["removed"].push_back(element_to_string(r));
    j["u"] = u;
  }
  return j.dump();
}

std::string gog_to_json(const GraphOfGroups& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back(json{{"id", v.id}, {"tag", tag_obj(v.tag)}});
  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back(json{{"a", e.a}, {"b", e.b}, {"edge_order", e.edge_order}});
  return j.dump();
}

GraphOfGroups gog_from_json(const std::string& s) {
  json j = parse(s);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw Error(ErrorCode::ParseError, "graph needs a vertices array");
  std::vector<GogVertex> vs;
  for (const auto& v : j["vertices"])
    vs.push_back(GogVertex{need_string(v, "id"), tag_of(v.contains("tag") ? v["tag"] : json())});
  std::vector<GogEdge> es;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw Error(ErrorCode::ParseError, "edges must be an array");
    for (const auto& e : j["edges"]) {
      GogEdge edge{need_string(e, "a"), need_string(e, "b"), 1};
      if (e.contains("edge_order")) {
        if (!e["edge_order"].is_number_integer())
          throw Error(ErrorCode::ParseError, "edge_order must be an integer");
        edge.edge_order = e["edge_order"];
      }
      es.push_back(edge);
    }
  }
  try {
    return GraphOfGroups::of(std::move(vs), std::move(es));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace fpb
