#include "nctorus/division.hpp"

#include "nctorus/error.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nct {

namespace {

void require_positive_primitive(const ThetaContext& ctx, const LatticeElem& v) {
  if (!v.is_primitive()) throw DomainError(Errc::NotPrimitive, v.to_string() + " is not primitive");
  if (sign(ctx, v) <= 0) throw DomainError(Errc::NonPositive, v.to_string() + " does not have positive value");
}

void require_unit_interval(const ThetaContext& ctx, const LatticeElem& v) {
  if (sign(ctx, v) <= 0 || compare(ctx, v, LatticeElem(0, 1)) >= 0)
    throw DomainError(Errc::OutOfRange, v.to_string() + " is not in (0, 1)");
}

}  // namespace

Segment unit_segment() { return Segment{LatticeElem(0, 0), LatticeElem(0, 1)}; }

void validate_segment(const ThetaContext& ctx, const Segment& s) { require_positive_primitive(ctx, s.length()); }

bool in_phi_window(const ThetaContext& ctx, const LatticeElem& v, const Int& m1) {
  if (v.m == 0) return false;
  QuadNumber shifted = QuadNumber(m1) + value(ctx, v).reciprocal();
  if (v.m < 0) shifted = -shifted;
  return shifted.sign() > 0 && shifted < QuadNumber(abs(v.m));
}

LatticeElem phi(const ThetaContext& ctx, const LatticeElem& v) {
  require_positive_primitive(ctx, v);
  if (v.m == 0) {
    // v = 1: the first division point a - theta.
    return LatticeElem(Int(-1), ctx.next_integer());
  }
  const Int width = abs(v.m);
  const QuadNumber inv = value(ctx, v).reciprocal();
  // m1 ranges over an open interval of length |m| with irrational ends.
  QuadNumber lower = v.m > 0 ? -inv : QuadNumber(Int(-width)) - inv;
  Int first = lower.floor() + 1;
  Int residue = mod_floor(-mod_inverse(v.n, v.m), width);
  Int m1 = first + mod_floor(residue - first, width);
  Int numer = m1 * v.n + 1;
  if (numer % v.m != 0) throw std::logic_error("phi: residue class does not solve m*n1 - m1*n = 1");
  return LatticeElem(m1, numer / v.m);
}

LatticeElem phi_oracle(const ThetaContext& ctx, const LatticeElem& v, const Int& bound) {
  require_positive_primitive(ctx, v);
  const QuadNumber upper = value(ctx, v);
  std::optional<LatticeElem> hit;
  for (Int m1 = -bound; m1 <= bound; ++m1) {
    QuadNumber mt = ctx.linear(m1, 0);
    Int first = (-mt).floor() + 1;
    Int last = (upper - mt).ceil() - 1;
    if (first < -bound) first = -bound;
    if (last > bound) last = bound;
    for (Int n1 = first; n1 <= last; ++n1) {
      LatticeElem w(m1, n1);
      if (chi(w, v) != 1) continue;
      if (hit) throw DomainError(Errc::OracleAmbiguous, "two solutions " + hit->to_string() + " and " + w.to_string());
      hit = w;
    }
  }
  if (!hit) throw DomainError(Errc::OracleBoundTooSmall, "no solution with coefficients bounded by " + bound.get_str());
  if (v.m != 0 && !in_phi_window(ctx, v, hit->m))
    throw DomainError(Errc::OracleAmbiguous, "solution " + hit->to_string() + " lies outside the residue window");
  return *hit;
}

LatticeElem division_point(const ThetaContext& ctx, const Segment& s) { return s.a + phi(ctx, s.length()); }

std::pair<Segment, Segment> divide(const ThetaContext& ctx, const Segment& s) {
  LatticeElem c = division_point(ctx, s);
  return {Segment{s.a, c}, Segment{c, s.b}};
}

std::vector<LatticeElem> DivisionTree::points() const {
  std::vector<LatticeElem> out;
  std::function<void(int)> walk = [&](int idx) {
    if (idx < 0) return;
    const DivisionNode& node = nodes_[static_cast<std::size_t>(idx)];
    walk(node.left);
    if (node.point) out.push_back(*node.point);
    walk(node.right);
  };
  if (!nodes_.empty()) walk(0);
  return out;
}

DivisionTree build_tree(const ThetaContext& ctx, unsigned depth) {
  std::vector<DivisionNode> nodes;
  nodes.reserve((std::size_t{1} << (depth + 1)) - 1);
  std::function<int(const Segment&, unsigned)> grow = [&](const Segment& seg, unsigned level) -> int {
    int idx = static_cast<int>(nodes.size());
    nodes.push_back(DivisionNode{seg, std::nullopt, -1, -1, level});
    if (level == depth) return idx;
    auto [left, right] = divide(ctx, seg);
    nodes[static_cast<std::size_t>(idx)].point = left.b;
    int l = grow(left, level + 1);
    int r = grow(right, level + 1);
    nodes[static_cast<std::size_t>(idx)].left = l;
    nodes[static_cast<std::size_t>(idx)].right = r;
    return idx;
  };
  grow(unit_segment(), 0);
  return DivisionTree(ctx, std::move(nodes), depth);
}

std::vector<std::string> validate_tree(const DivisionTree& tree) {
  std::vector<std::string> failures;
  const auto& nodes = tree.nodes();
  if (nodes.empty()) return {"tree has no nodes"};
  if (!(nodes[0].segment == unit_segment())) failures.push_back("root segment is not [0, 1]");
  std::vector<int> seen(nodes.size(), 0);
  std::function<void(int, unsigned)> check = [&](int idx, unsigned level) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= nodes.size() || seen[static_cast<std::size_t>(idx)]++) {
      failures.push_back("node index " + std::to_string(idx) + " is invalid or shared");
      return;
    }
    const DivisionNode& node = nodes[static_cast<std::size_t>(idx)];
    std::string where = "node " + std::to_string(idx);
    if (node.depth != level) failures.push_back(where + ": depth " + std::to_string(node.depth) + " expected " + std::to_string(level));
    if (level == tree.depth()) {
      if (node.point || node.left >= 0 || node.right >= 0) failures.push_back(where + ": leaf carries children or a point");
      return;
    }
    if (!node.point || node.left < 0 || node.right < 0) {
      failures.push_back(where + ": internal node without point or children");
      return;
    }
    LatticeElem c;
    try {
      c = division_point(tree.theta(), node.segment);
    } catch (const DomainError& e) {
      failures.push_back(where + ": " + e.what());
      return;
    }
    if (!(*node.point == c)) failures.push_back(where + ": point " + node.point->to_string() + " is not " + c.to_string());
    if (node.point->m >= 0) failures.push_back(where + ": point has m >= 0");
    for (int child : {node.left, node.right})
      if (child < 0 || static_cast<std::size_t>(child) >= nodes.size()) {
        failures.push_back(where + ": child index out of range");
        return;
      }
    if (!(nodes[static_cast<std::size_t>(node.left)].segment == Segment{node.segment.a, *node.point}))
      failures.push_back(where + ": left child does not end at the point");
    if (!(nodes[static_cast<std::size_t>(node.right)].segment == Segment{*node.point, node.segment.b}))
      failures.push_back(where + ": right child does not start at the point");
    check(node.left, level + 1);
    check(node.right, level + 1);
  };
  check(0, 0);
  if (std::count(seen.begin(), seen.end(), 0) > 0) failures.push_back("tree has unreachable nodes");
  return failures;
}

std::size_t MembershipTrace::shrink_count() const {
  std::size_t count = 0;
  for (const auto& step : steps)
    if (step.kind == MoveKind::Shrink) ++count;
  return count;
}

MembershipTrace member_b_theta(const ThetaContext& ctx, const LatticeElem& v) {
  require_unit_interval(ctx, v);
  MembershipTrace trace;
  ThetaContext theta = ctx;
  LatticeElem cur = v;
  for (;;) {
    Int a = theta.next_integer();
    LatticeElem first_point(Int(-1), a);
    auto order = compare(theta, cur, first_point);
    if (order == 0) {
      trace.verdict = true;
      trace.reason = "reached the first division point a - theta";
      return trace;
    }
    if (order > 0) {
      // B_{-theta} = 1 - B_theta moves v below the first division point.
      ThetaContext flipped = theta.negated();
      LatticeElem next(cur.m, 1 - cur.n);
      trace.steps.push_back(MembershipStep{MoveKind::Flip, theta, cur, a, flipped, next});
      theta = flipped;
      cur = next;
      a = theta.next_integer();
    }
    // v / (a - theta) = (m*a + n)*theta' - m with theta' = 1/(a - theta).
    ThetaContext shrunk = ThetaContext::from_value((QuadNumber(a) - theta.value()).reciprocal());
    LatticeElem next(cur.m * a + cur.n, -cur.m);
    trace.steps.push_back(MembershipStep{MoveKind::Shrink, theta, cur, a, shrunk, next});
    if (abs(next.m) >= abs(cur.m)) {
      trace.verdict = false;
      trace.reason = "shrink step did not decrease |m| (" + abs(cur.m).get_str() + " -> " + abs(next.m).get_str() + ")";
      return trace;
    }
    theta = shrunk;
    cur = next;
  }
}

TreeLocation locate_point(const ThetaContext& ctx, const LatticeElem& v, std::size_t max_depth) {
  require_unit_interval(ctx, v);
  TreeLocation loc;
  Segment seg = unit_segment();
  for (std::size_t level = 0; level < max_depth; ++level) {
    LatticeElem c = division_point(ctx, seg);
    loc.path.push_back(seg);
    auto order = compare(ctx, v, c);
    if (order == 0) {
      loc.found = true;
      return loc;
    }
    if (order < 0)
      seg.b = c;
    else
      seg.a = c;
  }
  return loc;
}

ApproachResult approach_target(const ThetaContext& ctx, const QuadNumber& target, std::size_t steps,
                               const QuadNumber& tol, std::size_t max_descents) {
  if (target.sign() <= 0 || target >= QuadNumber(1))
    throw DomainError(Errc::OutOfRange, "target " + target.to_decimal() + " is not in (0, 1)");
  if (tol.sign() <= 0) throw DomainError(Errc::NonPositive, "tolerance must be positive");
  ApproachResult result;
  Segment seg = unit_segment();
  while (result.points.size() < steps && result.descents < max_descents) {
    LatticeElem c = division_point(ctx, seg);
    ++result.descents;
    auto order = target <=> value(ctx, c);
    if (order == 0)
      throw DomainError(Errc::TargetOnBoundary, "target equals the division point " + c.to_string());
    if (order < 0) {
      seg.b = c;
      continue;
    }
    seg.a = c;
    result.points.push_back(c);
    if (target - value(ctx, c) < tol) {
      result.reached_tolerance = true;
      break;
    }
  }
  return result;
}

}  // namespace nct
