#include "fpb/factor.hpp"

#include <algorithm>
#include <cstdlib>

namespace fpb {

FactorSpec FactorSpec::finite_cyclic(int n, std::string label) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "FiniteCyclic order must be >= 1");
  FactorSpec s;
  s.cls = FactorClass::FiniteCyclic;
  s.param = n;
  s.label = label.empty() ? "Z" + std::to_string(n) : std::move(label);
  return s;
}

FactorSpec FactorSpec::infinite_cyclic(std::string label) {
  FactorSpec s;
  s.cls = FactorClass::InfiniteCyclic;
  s.label = label.empty() ? "Z" : std::move(label);
  return s;
}

FactorSpec FactorSpec::free_group(int rank, std::string label) {
  if (rank < 2 || rank > 26) throw Error(ErrorCode::InvalidInput, "Free rank must be in [2,26]");
  FactorSpec s;
  s.cls = FactorClass::Free;
  s.param = rank;
  s.label = label.empty() ? "F" + std::to_string(rank) : std::move(label);
  return s;
}

FactorSpec FactorSpec::opaque(std::string tag, std::string label) {
  FactorSpec s;
  s.cls = FactorClass::Opaque;
  s.tag = std::move(tag);
  s.label = label.empty() ? s.tag : std::move(label);
  return s;
}

std::string FactorSpec::describe() const {
  switch (cls) {
    case FactorClass::FiniteCyclic: return "Z/" + std::to_string(param);
    case FactorClass::InfiniteCyclic: return "Z";
    case FactorClass::Free: return "F" + std::to_string(param);
    case FactorClass::Opaque: return "opaque:" + tag;
  }
  return "?";
}

std::string free_reduce(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == inverse_letter(c))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

bool is_freely_reduced(const std::string& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse_letter(w[i - 1])) return false;
  return true;
}

std::string free_inverse(const std::string& w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

namespace {

void require_arith(const FactorSpec& s, const char* op) {
  if (s.cls == FactorClass::Opaque)
    throw Error(ErrorCode::OpaqueFactor, std::string(op) + " on opaque factor");
}

void check_free_word(const FactorSpec& spec, const std::string& w) {
  for (char c : w) {
    if (!((c >= 'a' && c < 'a' + spec.param) || (c >= 'A' && c < 'A' + spec.param)))
      throw Error(ErrorCode::ParseError, "letter out of range for " + spec.describe());
  }
  if (!is_freely_reduced(w))
    throw Error(ErrorCode::InvalidInput, "word not freely reduced: " + w);
}

}  // namespace

bool FactorElement::is_identity() const {
  switch (spec.cls) {
    case FactorClass::Free: return w.empty();
    case FactorClass::Opaque: return true;
    default: return z == 0;
  }
}

int FactorElement::size() const {
  switch (spec.cls) {
    case FactorClass::Free: return (int)w.size();
    case FactorClass::InfiniteCyclic: return (int)(z < 0 ? -z : z);
    case FactorClass::FiniteCyclic: return z == 0 ? 0 : 1;
    case FactorClass::Opaque: return 0;
  }
  return 0;
}

bool FactorElement::operator==(const FactorElement& o) const {
  return spec == o.spec && z == o.z && w == o.w;
}

std::string FactorElement::payload_str() const { return element_to_string(*this); }

FactorElement identity_element(const FactorSpec& spec) {
  FactorElement e;
  e.spec = spec;
  return e;
}

FactorElement make_finite_cyclic_element(const FactorSpec& spec, std::int64_t v) {
  if (spec.cls != FactorClass::FiniteCyclic) throw Error(ErrorCode::InvalidInput, "not FiniteCyclic");
  FactorElement e;
  e.spec = spec;
  e.z = ((v % spec.param) + spec.param) % spec.param;
  return e;
}

FactorElement make_infinite_cyclic_element(const FactorSpec& spec, std::int64_t v) {
  if (spec.cls != FactorClass::InfiniteCyclic) throw Error(ErrorCode::InvalidInput, "not InfiniteCyclic");
  FactorElement e;
  e.spec = spec;
  e.z = v;
  return e;
}

FactorElement make_free_element(const FactorSpec& spec, const std::string& word) {
  if (spec.cls != FactorClass::Free) throw Error(ErrorCode::InvalidInput, "not Free");
  std::string r = free_reduce(word);
  check_free_word(spec, r);
  FactorElement e;
  e.spec = spec;
  e.w = std::move(r);
  return e;
}

FactorElement multiply(const FactorElement& x, const FactorElement& y) {
  require_arith(x.spec, "multiply");
  if (x.spec != y.spec) throw Error(ErrorCode::MixedFactors, "multiply across factors");
  FactorElement e;
  e.spec = x.spec;
  switch (x.spec.cls) {
    case FactorClass::FiniteCyclic:
      e.z = (x.z + y.z) % x.spec.param;
      break;
    case FactorClass::InfiniteCyclic:
      e.z = x.z + y.z;
      break;
    case FactorClass::Free:
      e.w = free_reduce(x.w + y.w);
      break;
    case FactorClass::Opaque:
      break;
  }
  return e;
}

FactorElement inverse(const FactorElement& x) {
  require_arith(x.spec, "inverse");
  FactorElement e;
  e.spec = x.spec;
  switch (x.spec.cls) {
    case FactorClass::FiniteCyclic:
      e.z = x.z == 0 ? 0 : x.spec.param - x.z;
      break;
    case FactorClass::InfiniteCyclic:
      e.z = -x.z;
      break;
    case FactorClass::Free:
      e.w = free_inverse(x.w);
      break;
    case FactorClass::Opaque:
      break;
  }
  return e;
}

bool element_less(const FactorElement& a, const FactorElement& b) {
  if (a.spec != b.spec) throw Error(ErrorCode::MixedFactors, "element_less across factors");
  if (a.is_identity() != b.is_identity()) return a.is_identity();
  switch (a.spec.cls) {
    case FactorClass::FiniteCyclic:
      return a.z < b.z;
    case FactorClass::InfiniteCyclic: {
      std::int64_t aa = std::llabs(a.z), ab = std::llabs(b.z);
      if (aa != ab) return aa < ab;
      return a.z > b.z;  // positive before negative
    }
    case FactorClass::Free: {
      if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
      for (std::size_t i = 0; i < a.w.size(); ++i)
        if (a.w[i] != b.w[i]) return enum_rank(a.w[i]) < enum_rank(b.w[i]);
      return false;
    }
    case FactorClass::Opaque:
      return false;
  }
  return false;
}

// --- boundary points ---------------------------------------------------------

namespace {

// Smallest d dividing |q| with q = (q[0..d))^{|q|/d}.
std::string primitive_period(const std::string& q) {
  for (std::size_t d = 1; d <= q.size(); ++d) {
    if (q.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < q.size() && ok; ++i)
      if (q[i] != q[i - d]) ok = false;
    if (ok) return q.substr(0, d);
  }
  return q;
}

}  // namespace

bool FactorBoundaryPoint::operator==(const FactorBoundaryPoint& o) const {
  if (spec != o.spec) return false;
  if (spec.cls == FactorClass::InfiniteCyclic) return sign == o.sign;
  return prefix == o.prefix && period == o.period;
}

std::string FactorBoundaryPoint::str() const {
  if (spec.cls == FactorClass::InfiniteCyclic) return sign > 0 ? "+inf" : "-inf";
  return prefix + "(" + period + ")";
}

FactorBoundaryPoint make_sign_point(const FactorSpec& spec, int sign) {
  if (spec.cls != FactorClass::InfiniteCyclic)
    throw Error(ErrorCode::InvalidInput, "sign point needs InfiniteCyclic factor");
  FactorBoundaryPoint p;
  p.spec = spec;
  p.sign = sign >= 0 ? +1 : -1;
  return p;
}

FactorBoundaryPoint make_free_boundary_point(const FactorSpec& spec, std::string prefix,
                                             std::string period) {
  if (spec.cls != FactorClass::Free)
    throw Error(ErrorCode::InvalidInput, "word point needs Free factor");
  if (period.empty()) throw Error(ErrorCode::InvalidInput, "empty period");
  check_free_word(spec, prefix);
  check_free_word(spec, period);
  // p * q^w must be reduced at both junctions
  if (period.back() == inverse_letter(period.front()))
    throw Error(ErrorCode::InvalidInput, "period not cyclically reduced: " + period);
  if (!prefix.empty() && prefix.back() == inverse_letter(period.front()))
    throw Error(ErrorCode::InvalidInput, "prefix/period junction cancels");
  period = primitive_period(period);
  while (!prefix.empty() && prefix.back() == period.back()) {
    prefix.pop_back();
    period = std::string(1, period.back()) + period.substr(0, period.size() - 1);
  }
  FactorBoundaryPoint p;
  p.spec = spec;
  p.prefix = std::move(prefix);
  p.period = std::move(period);
  return p;
}

FactorBoundaryPoint act_on_boundary(const FactorElement& g, const FactorBoundaryPoint& xi) {
  require_arith(g.spec, "act_on_boundary");
  if (g.spec != xi.spec) throw Error(ErrorCode::MixedFactors, "act across factors");
  if (g.spec.cls == FactorClass::InfiniteCyclic) return xi;  // translation fixes both ends
  // Cancellation consumes at most |g| letters, so a long enough unrolled
  // prefix leaves a full period copy intact at the tail.
  std::size_t copies = g.w.size() / xi.period.size() + 2;
  std::string unrolled = xi.prefix;
  for (std::size_t i = 0; i < copies; ++i) unrolled += xi.period;
  return make_free_boundary_point(g.spec, free_reduce(g.w + unrolled), xi.period);
}

FactorBoundaryPoint project_pi(const FactorElement& g) {
  require_arith(g.spec, "project_pi");
  if (!g.spec.is_infinite())
    throw Error(ErrorCode::FiniteFactor, "project_pi on factor with empty boundary");
  if (g.spec.cls == FactorClass::InfiniteCyclic) return make_sign_point(g.spec, g.z >= 0 ? +1 : -1);
  if (g.w.empty()) return make_free_boundary_point(g.spec, "", "a");
  return make_free_boundary_point(g.spec, g.w, std::string(1, g.w.back()));
}

// --- metric ------------------------------------------------------------------

namespace {

Rational z_embed(std::int64_t n) {
  std::int64_t a = n < 0 ? -n : n;
  return Rational(n, 1 + a);
}

// A word stream: finite word or eventually periodic infinite word.
struct Stream {
  const std::string* fin = nullptr;
  const FactorBoundaryPoint* inf = nullptr;
  bool finite() const { return fin != nullptr; }
  std::size_t flen() const { return fin->size(); }
  char at(std::size_t i) const { return finite() ? (*fin)[i] : inf->letter_at(i); }
};

Rational free_stream_distance(const Stream& a, const Stream& b) {
  std::size_t bound;
  if (a.finite() && b.finite()) {
    if (*a.fin == *b.fin) return Rational(0);
    bound = std::min(a.flen(), b.flen());
  } else if (a.finite() || b.finite()) {
    bound = a.finite() ? a.flen() : b.flen();
  } else {
    if (*a.inf == *b.inf) return Rational(0);
    bound = a.inf->prefix.size() + b.inf->prefix.size() +
            a.inf->period.size() * b.inf->period.size() + 2;
  }
  std::size_t lcp = 0;
  while (lcp < bound && a.at(lcp) == b.at(lcp)) ++lcp;
  // Distinct points always differ within the bound; if we ran out on a finite
  // side the divergence is exactly there.
  return Rational::pow2(-(int)lcp);
}

}  // namespace

Rational metric(const FactorElement& a, const FactorElement& b) {
  if (a.spec != b.spec) throw Error(ErrorCode::MixedFactors, "metric across factors");
  require_arith(a.spec, "metric");
  switch (a.spec.cls) {
    case FactorClass::FiniteCyclic:
      return a.z == b.z ? Rational(0) : Rational(1);
    case FactorClass::InfiniteCyclic:
      return (z_embed(a.z) - z_embed(b.z)).abs();
    default: {
      Stream sa{&a.w, nullptr}, sb{&b.w, nullptr};
      return free_stream_distance(sa, sb);
    }
  }
}

Rational metric(const FactorElement& a, const FactorBoundaryPoint& b) {
  if (a.spec != b.spec) throw Error(ErrorCode::MixedFactors, "metric across factors");
  if (a.spec.cls == FactorClass::InfiniteCyclic)
    return (z_embed(a.z) - Rational(b.sign)).abs();
  Stream sa{&a.w, nullptr}, sb{nullptr, &b};
  return free_stream_distance(sa, sb);
}

Rational metric(const FactorBoundaryPoint& a, const FactorBoundaryPoint& b) {
  if (a.spec != b.spec) throw Error(ErrorCode::MixedFactors, "metric across factors");
  if (a.spec.cls == FactorClass::InfiniteCyclic)
    return a.sign == b.sign ? Rational(0) : Rational(2);
  Stream sa{nullptr, &a}, sb{nullptr, &b};
  return free_stream_distance(sa, sb);
}

Rational metric(const CompactPoint& a, const CompactPoint& b) {
  if (!a.boundary && !b.boundary) return metric(a.elem, b.elem);
  if (!a.boundary) return metric(a.elem, b.pt);
  if (!b.boundary) return metric(b.elem, a.pt);
  return metric(a.pt, b.pt);
}

Rational distance_to_boundary(const FactorElement& g) {
  require_arith(g.spec, "distance_to_boundary");
  if (!g.spec.is_infinite())
    throw Error(ErrorCode::FiniteFactor, "factor boundary is empty");
  if (g.spec.cls == FactorClass::InfiniteCyclic)
    return Rational(1, 1 + std::llabs(g.z));
  return Rational::pow2(-(int)g.w.size());
}

// --- enumeration -------------------------------------------------------------

FactorElementEnumerator::FactorElementEnumerator(FactorSpec spec) : spec_(std::move(spec)) {
  require_arith(spec_, "enumerate");
}

bool FactorElementEnumerator::has_next() const {
  if (spec_.cls == FactorClass::FiniteCyclic) return k_ + 1 < spec_.param;
  return true;
}

FactorElement FactorElementEnumerator::next() {
  switch (spec_.cls) {
    case FactorClass::FiniteCyclic:
      if (!has_next()) throw Error(ErrorCode::ExhaustedWindow, "finite factor exhausted");
      return make_finite_cyclic_element(spec_, ++k_);
    case FactorClass::InfiniteCyclic: {
      ++k_;
      std::int64_t v = (k_ % 2 == 1) ? (k_ + 1) / 2 : -(k_ / 2);
      return make_infinite_cyclic_element(spec_, v);
    }
    case FactorClass::Free: {
      int m = spec_.param;
      auto letters_by_enum_rank = [m]() {
        std::string all;
        for (int i = 0; i < m; ++i) {
          all.push_back(char('a' + i));
          all.push_back(char('A' + i));
        }
        return all;
      };
      static thread_local std::string all;  // per-rank regenerated below
      all = letters_by_enum_rank();
      auto next_letter = [&](char c, char forbidden) -> std::optional<char> {
        std::size_t i = all.find(c);
        for (++i; i < all.size(); ++i)
          if (all[i] != forbidden) return all[i];
        return std::nullopt;
      };
      std::string w = word_;
      // odometer increment in enum-lex order within fixed length, else grow
      while (!w.empty()) {
        char forbidden = w.size() >= 2 ? inverse_letter(w[w.size() - 2]) : 0;
        auto nl = next_letter(w.back(), forbidden);
        if (nl) {
          w.back() = *nl;
          // refill popped positions with smallest allowed letters
          while (w.size() < word_.size()) {
            char f = inverse_letter(w.back());
            for (char c : all)
              if (c != f) { w.push_back(c); break; }
          }
          word_ = w;
          return make_free_element(spec_, word_);
        }
        w.pop_back();
      }
      // grow length by one, start at smallest word of that length
      std::string start;
      start.push_back(all[0]);
      while (start.size() < word_.size() + 1) {
        char f = inverse_letter(start.back());
        for (char c : all)
          if (c != f) { start.push_back(c); break; }
      }
      word_ = start;
      return make_free_element(spec_, word_);
    }
    case FactorClass::Opaque:
      throw Error(ErrorCode::OpaqueFactor, "enumerate opaque factor");
  }
  throw Error(ErrorCode::InvalidInput, "bad factor class");
}

std::vector<FactorElement> element_window(const FactorSpec& spec, int limit) {
  std::vector<FactorElement> out;
  FactorElementEnumerator en(spec);
  while (en.has_next()) {
    FactorElement e = en.next();
    if (e.size() > limit) break;  // enumeration is size-monotone
    out.push_back(std::move(e));
  }
  return out;
}

// --- text --------------------------------------------------------------------

std::string element_to_string(const FactorElement& e) {
  switch (e.spec.cls) {
    case FactorClass::Free:
      return e.w;
    case FactorClass::InfiniteCyclic: {
      if (e.z == 0) return "0";
      std::int64_t a = std::llabs(e.z);
      std::string base = e.z > 0 ? "t" : "T";
      return a == 1 ? base : base + "^" + std::to_string(a);
    }
    case FactorClass::FiniteCyclic:
      return std::to_string(e.z);
    case FactorClass::Opaque:
      return "1";
  }
  return "";
}

FactorElement parse_element(const FactorSpec& spec, const std::string& s) {
  try {
    switch (spec.cls) {
      case FactorClass::Free:
        return make_free_element(spec, s);
      case FactorClass::InfiniteCyclic: {
        if (!s.empty() && (s[0] == 't' || s[0] == 'T')) {
          std::int64_t a = 1;
          if (s.size() > 1) {
            if (s[1] != '^') throw Error(ErrorCode::ParseError, "bad Z literal: " + s);
            a = std::stoll(s.substr(2));
          }
          return make_infinite_cyclic_element(spec, s[0] == 't' ? a : -a);
        }
        return make_infinite_cyclic_element(spec, std::stoll(s));
      }
      case FactorClass::FiniteCyclic:
        return make_finite_cyclic_element(spec, std::stoll(s));
      case FactorClass::Opaque:
        throw Error(ErrorCode::OpaqueFactor, "opaque factors carry no elements");
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad element literal: " + s);
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::ParseError, "bad element literal: " + s);
  }
  throw Error(ErrorCode::ParseError, "bad element literal: " + s);
}

FactorBoundaryPoint parse_boundary_point(const FactorSpec& spec, const std::string& s) {
  if (spec.cls == FactorClass::InfiniteCyclic) {
    if (s == "+inf" || s == "+") return make_sign_point(spec, +1);
    if (s == "-inf" || s == "-") return make_sign_point(spec, -1);
    throw Error(ErrorCode::ParseError, "bad Z boundary literal: " + s);
  }
  if (spec.cls != FactorClass::Free)
    throw Error(ErrorCode::InvalidInput, "factor has no representable boundary points");
  auto open = s.find('(');
  auto close = s.find(')');
  if (open == std::string::npos || close != s.size() - 1 || close < open)
    throw Error(ErrorCode::ParseError, "expected prefix(period): " + s);
  return make_free_boundary_point(spec, s.substr(0, open), s.substr(open + 1, close - open - 1));
}

}  // namespace fpb
