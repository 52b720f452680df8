// Command line front end: normal forms, separation certificates, boundary
// homeomorphism reports, splitting decisions, and convergence tables.
// Exit codes: 0 ok, 2 parse/validation, 3 window exhaustion, 4 hypothesis
// violation.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpb/boundary.hpp"
#include "fpb/gog.hpp"
#include "fpb/homeo.hpp"
#include "fpb/json_io.hpp"

using nlohmann::json;
using namespace fpb;

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ExhaustedWindow:
    case ErrorCode::OutsideWindow:
      return 3;
    case ErrorCode::NotInfinitelyManyEnds:
      return 4;
    default:
      return 2;
  }
}

// inline JSON if it looks like JSON, otherwise a file path
std::string slurp(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j, const std::string& out) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + out);
  f << text;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

BoundaryPoint random_point(std::mt19937_64& rng, const ProductSpec& spec, int syllables) {
  auto rand_elem = [&](const FactorSpec& f) {
    switch (f.cls) {
      case FactorClass::Free: {
        std::string w;
        int len = 1 + (int)draw(rng, 2);
        while ((int)w.size() < len) {
          char c = (draw(rng, 2) ? 'a' : 'A') + (char)draw(rng, (std::uint64_t)f.param);
          if (!w.empty() && c == inverse_letter(w.back())) continue;
          w.push_back(c);
        }
        return make_free_element(f, w);
      }
      case FactorClass::InfiniteCyclic:
        return make_infinite_cyclic_element(f, draw(rng, 2) ? 1 : -1);
      case FactorClass::FiniteCyclic:
        return make_finite_cyclic_element(f, 1 % f.param);
      default:
        return identity_element(f);
    }
  };
  auto rand_word = [&](int max_syll) {
    std::vector<Letter> letters;
    int n = (int)draw(rng, (std::uint64_t)max_syll + 1);
    while ((int)letters.size() < n) {
      int j = (int)draw(rng, (std::uint64_t)spec.k());
      if (!letters.empty() && letters.back().factor == j) continue;
      auto e = rand_elem(spec.factor(j));
      if (e.is_identity()) continue;
      letters.push_back(Letter{j, e});
    }
    return ReducedWord{spec, letters};
  };
  bool any_boundary = false;
  for (int j = 0; j < spec.k(); ++j) any_boundary |= spec.factor(j).has_boundary();
  if (!any_boundary || draw(rng, 2)) {
    for (;;) {
      auto prefix = rand_word(1);
      auto period = rand_word(2);
      if (period.syllables() < 2) continue;
      try {
        return BoundaryPoint::of(make_tree_end(spec, prefix.letters, period.letters));
      } catch (const Error&) {
        continue;
      }
    }
  }
  for (;;) {
    int j = (int)draw(rng, (std::uint64_t)spec.k());
    const FactorSpec& f = spec.factor(j);
    if (!f.has_boundary()) continue;
    FactorBoundaryPoint xi;
    if (f.cls == FactorClass::InfiniteCyclic) {
      xi = make_sign_point(f, draw(rng, 2) ? +1 : -1);
    } else {
      char c = (draw(rng, 2) ? 'a' : 'A') + (char)draw(rng, (std::uint64_t)f.param);
      xi = make_free_boundary_point(f, "", std::string(1, c));
    }
    return BoundaryPoint::of(StabClass{rand_word(syllables), j, xi});
  }
}

int cmd_reduce(const std::string& spec_arg, const std::string& word, const std::string& out) {
  auto spec = spec_from_json(slurp(spec_arg));
  auto w = parse_word(spec, word);
  json j;
  j["input"] = word;
  j["normal_form"] = word_to_string(w);
  j["syllables"] = w.syllables();
  j["size"] = w.size();
  emit(j, out);
  return 0;
}

int cmd_separate(const std::string& spec_arg, const std::string& p1, const std::string& p2,
                 std::uint64_t seed, int samples, int syllables, const std::string& out) {
  auto spec = spec_from_json(slurp(spec_arg));
  auto x = point_from_json(spec, slurp(p1));
  auto y = point_from_json(spec, slurp(p2));
  auto [vx, vy] = separate(x, y);

  std::mt19937_64 rng(seed);
  int both = 0, in_x = 0, in_y = 0, neither = 0;
  for (int i = 0; i < samples; ++i) {
    auto z = random_point(rng, spec, syllables);
    bool mx = member(vx, z), my = member(vy, z);
    if (mx && my) ++both;
    else if (mx) ++in_x;
    else if (my) ++in_y;
    else ++neither;
  }
  if (!member(vx, x) || !member(vy, y) || both != 0)
    throw Error(ErrorCode::InvalidInput, "separation certificate failed its own audit");

  json j;
  j["seed"] = seed;
  j["x"] = json::parse(point_to_json(x));
  j["y"] = json::parse(point_to_json(y));
  j["nbhd_x"] = json::parse(nbhd_to_json(vx));
  j["nbhd_y"] = json::parse(nbhd_to_json(vy));
  j["sampling"] = json{{"samples", samples}, {"both_member", both}, {"only_x", in_x},
                       {"only_y", in_y}, {"neither", neither}};
  emit(j, out);
  return 0;
}

std::vector<FactorHomeo> homeo_config(const ProductSpec& s1, const ProductSpec& s2,
                                      const std::string& config_arg) {
  std::vector<FactorHomeo> hs;
  if (config_arg.empty()) {
    // default: identity homeos under the first factor matching that fits
    for (auto flip : {false, true}) {
      hs.clear();
      bool ok = true;
      for (int j = 0; j < s1.k() && ok; ++j) {
        int tj = flip ? s1.k() - 1 - j : j;
        if (s1.factor(j) != s2.factor(tj)) ok = false;
        else hs.push_back(make_factor_homeo(s1.factor(j), s2.factor(tj), HomeoKind::IdentityLike));
      }
      if (ok && (int)hs.size() == s1.k()) return hs;
    }
    throw Error(ErrorCode::InvalidInput, "no identity factor matching; give a homeo config");
  }
  json j = json::parse(slurp(config_arg), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("homeos") || !j["homeos"].is_array())
    throw Error(ErrorCode::ParseError, "homeo config needs a homeos array");
  hs.resize((std::size_t)s1.k(), FactorHomeo{});
  std::vector<bool> got((std::size_t)s1.k(), false);
  for (const auto& e : j["homeos"]) {
    if (!e.contains("factor") || !e["factor"].is_number_integer())
      throw Error(ErrorCode::ParseError, "homeo entry needs a factor index");
    int f = e["factor"];
    int tf = e.contains("target_factor") ? (int)e["target_factor"] : f;
    if (f < 0 || f >= s1.k() || tf < 0 || tf >= s2.k())
      throw Error(ErrorCode::ParseError, "homeo factor index out of range");
    std::string kind = e.contains("kind") ? (std::string)e["kind"] : "identity";
    HomeoKind hk;
    if (kind == "identity") hk = HomeoKind::IdentityLike;
    else if (kind == "coder") hk = HomeoKind::CantorCoder;
    else if (kind == "identity-signs") hk = HomeoKind::IdentitySigns;
    else if (kind == "swap-signs") hk = HomeoKind::SwapSigns;
    else throw Error(ErrorCode::ParseError, "unknown homeo kind: " + kind);
    hs[(std::size_t)f] = make_factor_homeo(s1.factor(f), s2.factor(tf), hk);
    got[(std::size_t)f] = true;
  }
  for (bool b : got)
    if (!b) throw Error(ErrorCode::ParseError, "homeo config misses a factor");
  return hs;
}

void grow_window(const ProductSpec& spec, const ReducedWord& base, int budget,
                 std::vector<ReducedWord>& out) {
  out.push_back(base);
  for (int j = 0; j < spec.k(); ++j) {
    if (!base.letters.empty() && base.last().factor == j) continue;
    for (int s = 1; s <= budget; ++s)
      for (const auto& e : element_window(spec.factor(j), s)) {
        if (e.size() != s) continue;
        auto w = base;
        w.letters.push_back(Letter{j, e});
        grow_window(spec, w, budget - s, out);
      }
  }
}

int cmd_homeo(const std::string& spec1_arg, const std::string& spec2_arg,
              const std::string& config_arg, std::uint64_t seed, int rounds, int depth,
              int samples, int letter_size, const std::string& out) {
  auto s1 = spec_from_json(slurp(spec1_arg));
  auto s2 = spec_from_json(slurp(spec2_arg));
  auto hs = homeo_config(s1, s2, config_arg);
  auto iso = alpha_beta(s1, s2, hs, rounds);

  json j;
  j["seed"] = seed;
  j["rounds"] = rounds;
  j["sigma"] = iso.sigma;

  // window audit: injectivity and inverse round trips for the boundary map
  std::vector<ReducedWord> window;
  grow_window(s1, identity_word(s1), letter_size, window);
  std::set<std::string> images;
  int window_points = 0;
  bool injective = true, round_trips = true;
  for (const auto& g : window)
    for (int f = 0; f < s1.k(); ++f) {
      if (!s1.factor_infinite(f)) continue;
      if (!g.letters.empty() && g.last().factor == f) continue;
      FactorBoundaryPoint xi = s1.factor(f).cls == FactorClass::InfiniteCyclic
                                   ? make_sign_point(s1.factor(f), +1)
                                   : make_free_boundary_point(s1.factor(f), "", "a");
      auto x = BoundaryPoint::of(StabClass{g, f, xi});
      auto fx = map_F(iso, x);
      ++window_points;
      if (!images.insert(fx.str()).second) injective = false;
      // letterwise inverse of the image word must restore the original
      auto gi = word_image(iso, x.stab.g);
      std::vector<Letter> back;
      for (const auto& b : gi.letters)
        for (int sj = 0; sj < s1.k(); ++sj)
          if (iso.sigma[sj] == b.factor)
            back.push_back(Letter{sj, (*iso.maps)[(std::size_t)sj].apply_inverse(b.elem)});
      if (make_word(s1, back) != x.stab.g) round_trips = false;
    }
  j["window"] = json{{"points", window_points}, {"injective", injective},
                     {"inverse_round_trips", round_trips}};

  // continuity probes
  std::mt19937_64 rng(seed);
  int pass = 0, exhausted = 0, retried = 0;
  for (int i = 0; i < samples; ++i) {
    auto x = random_point(rng, s1, 2);
    auto fx = map_F(iso, x);
    Nbhd v2 = fx.is_end ? Nbhd::end_nbhd(tree_iso_apply(iso, base_vertex(s1)), fx.end,
                                         1 + (int)draw(rng, (std::uint64_t)depth))
                        : Nbhd::stab_nbhd(
                              fx.stab,
                              fx.stab.xi.spec.cls == FactorClass::Free
                                  ? UDesc::cylinder(fx.stab.xi.spec,
                                                    std::string(1, fx.stab.xi.letter_at(0)))
                                  : UDesc::ztail(fx.stab.xi.spec, fx.stab.xi.sign,
                                                 1 + (std::int64_t)draw(rng, 3)));
    try {
      auto v1 = continuity_probe(iso, x, v2, depth);
      if (member(v1, x)) ++pass;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchExhausted) throw;
      ++exhausted;
      try {
        auto v1 = continuity_probe(iso, x, v2, 4 * depth);
        if (member(v1, x)) ++retried;
      } catch (const Error&) {
      }
    }
  }
  j["continuity"] = json{{"samples", samples}, {"pass", pass}, {"exhausted", exhausted},
                         {"retry_pass", retried}};

  // per-factor step logs for audit
  std::string stem = out.empty() ? "fpb-homeo" : out;
  std::vector<std::string> log_paths;
  for (int f = 0; f < s1.k(); ++f) {
    std::string path = stem + ".steps." + std::to_string(f) + ".json";
    std::ofstream lf(path);
    if (!lf) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
    lf << export_step_log((*iso.maps)[(std::size_t)f]) << "\n";
    log_paths.push_back(path);
  }
  j["step_logs"] = log_paths;

  emit(j, out);
  return 0;
}

int cmd_decide(const std::string& g1_arg, const std::string& g2_arg, const std::string& mode,
               const std::string& out) {
  auto g1 = gog_from_json(slurp(g1_arg));
  auto g2 = gog_from_json(slurp(g2_arg));
  json j;
  j["mode"] = mode;
  j["h1"] = h_set(g1);
  j["h2"] = h_set(g2);
  int code = 0;
  if (mode == "thm1") {
    j["verdict"] = verdict_name(decide_thm1(g1, g2));
  } else if (mode == "cor13") {
    auto v = decide_cor13(g1, g2);
    j["verdict"] = verdict_name(v);
    if (v == Cor13Verdict::HypothesisViolation) code = 4;
  } else {
    throw Error(ErrorCode::InvalidInput, "mode must be thm1 or cor13");
  }
  emit(j, out);
  return code;
}

int cmd_converge(const std::string& spec_arg, const std::string& point_arg,
                 const std::string& seq_arg, int radius, int depth, const std::string& out) {
  auto spec = spec_from_json(slurp(spec_arg));
  auto z = point_from_json(spec, slurp(point_arg));
  json seq = json::parse(slurp(seq_arg), nullptr, false);
  if (seq.is_discarded() || !seq.is_array())
    throw Error(ErrorCode::ParseError, "sequence file must be a JSON array of points");
  std::vector<BoundaryPoint> zs;
  for (const auto& p : seq) zs.push_back(point_from_json(spec, p.dump()));

  auto products = gromov_product_test(z, zs, radius, depth);
  json j;
  j["radius"] = radius;
  j["depth"] = depth;
  j["products"] = json::array();
  for (std::size_t i = 0; i < products.size(); ++i)
    j["products"].push_back(json{{"n", i}, {"product", products[i].str()}});
  emit(j, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free product boundary toolkit"};
  app.require_subcommand(1);

  std::string spec1, spec2, word, p1, p2, config, mode = "thm1", seq, out;
  std::uint64_t seed = 0;
  int samples = 1000, syllables = 3, letter_size = 2, depth = 4, rounds = 8, radius = 6;

  auto* reduce = app.add_subcommand("reduce", "normal form of a word literal");
  reduce->add_option("--spec", spec1, "product spec (JSON or path)")->required();
  reduce->add_option("word", word, "word literal, e.g. \"0:a 1:t 0:B\"")->required();
  reduce->add_option("--out", out);

  auto* sep = app.add_subcommand("separate", "disjoint neighborhood certificate");
  sep->add_option("--spec", spec1)->required();
  sep->add_option("x", p1, "boundary point (JSON or path)")->required();
  sep->add_option("y", p2, "boundary point (JSON or path)")->required();
  sep->add_option("--seed", seed)->required();
  sep->add_option("--samples", samples)->check(CLI::PositiveNumber);
  sep->add_option("--syllables", syllables)->check(CLI::PositiveNumber);
  sep->add_option("--out", out);

  auto* hom = app.add_subcommand("homeo", "boundary homeomorphism report");
  hom->add_option("--spec", spec1, "first product spec")->required();
  hom->add_option("--spec2", spec2, "second product spec")->required();
  hom->add_option("--config", config, "factor homeo config (JSON or path)");
  hom->add_option("--seed", seed)->required();
  hom->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
  hom->add_option("--depth", depth)->check(CLI::PositiveNumber);
  hom->add_option("--samples", samples)->check(CLI::PositiveNumber);
  hom->add_option("--letter-size", letter_size)->check(CLI::PositiveNumber);
  hom->add_option("--out", out);

  auto* dec = app.add_subcommand("decide", "splitting comparison verdict");
  dec->add_option("g1", p1, "graph of groups (JSON or path)")->required();
  dec->add_option("g2", p2, "graph of groups (JSON or path)")->required();
  dec->add_option("--mode", mode, "thm1 or cor13");
  dec->add_option("--out", out);

  auto* conv = app.add_subcommand("converge", "Gromov product table");
  conv->add_option("--spec", spec1)->required();
  conv->add_option("point", p1, "limit point (JSON or path)")->required();
  conv->add_option("sequence", seq, "JSON array of points (inline or path)")->required();
  conv->add_option("--radius", radius)->check(CLI::PositiveNumber);
  conv->add_option("--depth", depth)->check(CLI::PositiveNumber);
  conv->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(spec1, word, out);
    if (sep->parsed()) return cmd_separate(spec1, p1, p2, seed, samples, syllables, out);
    if (hom->parsed())
      return cmd_homeo(spec1, spec2, config, seed, rounds, depth, samples, letter_size, out);
    if (dec->parsed()) return cmd_decide(p1, p2, mode, out);
    if (conv->parsed()) return cmd_converge(spec1, p1, seq, radius, depth, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
