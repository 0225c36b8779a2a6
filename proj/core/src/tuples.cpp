#include "nctorus/constructions/tuples.hpp"

#include "nctorus/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nct {

Int det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

VectorTuple VectorTuple::make(std::vector<Vec2> vectors) {
  if (vectors.empty()) throw DomainError(Errc::InvalidArgument, "a tuple needs at least one vector");
  for (const auto& v : vectors)
    if (gcd(v.x, v.y) != 1) throw DomainError(Errc::NotPrimitive, "(" + v.to_string() + ") is not primitive");
  return VectorTuple(std::move(vectors));
}

Vec2 VectorTuple::sum() const {
  Vec2 s(0, 0);
  for (const auto& v : vectors_) s = s + v;
  return s;
}

bool VectorTuple::all_equal() const {
  return std::all_of(vectors_.begin(), vectors_.end(), [&](const Vec2& v) { return v == vectors_.front(); });
}

std::string VectorTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vectors_.size(); ++i) out += (i ? ";" : "") + vectors_[i].to_string();
  return out;
}

VectorTuple parse_tuple(const std::string& text) {
  std::vector<Vec2> vs;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("vector '" + item + "' is not of the form x,y");
    Int x, y;
    if (x.set_str(item.substr(0, comma), 10) != 0 || y.set_str(item.substr(comma + 1), 10) != 0)
      throw std::invalid_argument("vector '" + item + "' has a non-integer coordinate");
    vs.emplace_back(x, y);
  }
  if (vs.empty()) throw std::invalid_argument("empty tuple");
  return VectorTuple::make(std::move(vs));
}

HalfplaneResult halfplane_check(const VectorTuple& t) {
  const auto& vs = t.vectors();
  auto separates = [&](const Vec2& u) {
    return std::all_of(vs.begin(), vs.end(), [&](const Vec2& v) { return dot(u, v) > 0; });
  };
  Vec2 s = t.sum();
  if (separates(s)) return {true, s};
  // The clockwise-most vector e has every other vector counterclockwise of
  // it by less than a half turn; e + M * rot90(e) then separates.
  for (const auto& e : vs) {
    bool extremal = std::all_of(vs.begin(), vs.end(), [&](const Vec2& v) {
      Int dt = det(e, v);
      return dt > 0 || (dt == 0 && dot(e, v) > 0);
    });
    if (!extremal) continue;
    Int m = 1;
    for (const auto& v : vs) m = std::max(m, Int(abs(dot(e, v)) + 1));
    Vec2 u(e.x - m * e.y, e.y + m * e.x);
    if (!separates(u)) throw std::logic_error("half-plane witness failed");
    return {true, u};
  }
  return {false, std::nullopt};
}

Int potential_D(const VectorTuple& t) {
  Int total = 0;
  const auto& vs = t.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) {
      Int d = det(vs[i], vs[j]);
      if (d > 0) total += d;
    }
  return total;
}

VectorTuple reduce_step(const VectorTuple& t, std::size_t i, std::size_t j, ReduceStep* record) {
  const auto& vs = t.vectors();
  if (i >= vs.size() || j >= vs.size() || i == j) throw DomainError(Errc::InvalidArgument, "bad index pair");
  if (vs[i] == vs[j]) throw DomainError(Errc::EqualVectors, "v_i and v_j are equal");
  if (!halfplane_check(t).ok) throw DomainError(Errc::ConeViolation, "tuple is not contained in a half-plane");
  Vec2 s = vs[i] + vs[j];
  Int m = gcd(s.x, s.y);
  Vec2 w(s.x / m, s.y / m);
  std::vector<Vec2> next;
  std::size_t at = std::min(i, j);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k == at)
      for (Int c = 0; c < m; ++c) next.push_back(w);
    else if (k != i && k != j)
      next.push_back(vs[k]);
  }
  VectorTuple out = VectorTuple::make(std::move(next));
  if (record) *record = ReduceStep{i, j, vs[i], vs[j], w, m, potential_D(t), potential_D(out)};
  return out;
}

Reduction reduce_full(const VectorTuple& t) {
  if (!halfplane_check(t).ok) throw DomainError(Errc::ConeViolation, "tuple is not contained in a half-plane");
  Reduction red{t, {}};
  for (;;) {
    const auto& vs = red.canonical.vectors();
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i = 0; i < vs.size() && !pair; ++i)
      for (std::size_t j = i + 1; j < vs.size() && !pair; ++j)
        if (!(vs[i] == vs[j])) pair = {i, j};
    if (!pair) return red;
    ReduceStep step;
    VectorTuple next = reduce_step(red.canonical, pair->first, pair->second, &step);
    if (step.d_after >= step.d_before) throw std::logic_error("potential did not decrease");
    red.trace.push_back(step);
    red.canonical = std::move(next);
  }
}

Equivalence tuples_equivalent(const VectorTuple& t1, const VectorTuple& t2) {
  Equivalence e;
  e.sum1 = t1.sum();
  e.sum2 = t2.sum();
  e.equivalent = e.sum1 == e.sum2;
  Reduction r1 = reduce_full(t1), r2 = reduce_full(t2);
  e.canonical_agree = r1.canonical == r2.canonical;
  if (e.equivalent != e.canonical_agree) throw std::logic_error("canonical forms disagree with the sum test");
  return e;
}

}  // namespace nct
