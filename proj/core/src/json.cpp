#include "nctorus/json.hpp"

#include "nctorus/error.hpp"

#include <functional>

namespace nct {

namespace {

DomainError bad(const std::string& why) { return DomainError(Errc::InvalidArgument, "JSON: " + why); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json int_json(const Int& v) {
  if (fits_long(v)) return Json(v.get_si());
  return Json(v.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw bad("'" + j.get<std::string>() + "' is not an integer");
    return v;
  }
  throw bad("expected an integer");
}

Json to_json(const LatticeElem& v) { return Json::array({int_json(v.m), int_json(v.n)}); }

LatticeElem lattice_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw bad("expected [m, n]");
  return {int_from_json(j[0]), int_from_json(j[1])};
}

Json decimal_json(const QuadNumber& x, int precision) { return x.to_decimal(precision); }

Json to_json(const Segment& s) { return Json{{"a", to_json(s.a)}, {"b", to_json(s.b)}}; }

Segment segment_from_json(const Json& j) {
  return Segment{lattice_from_json(field(j, "a")), lattice_from_json(field(j, "b"))};
}

Json to_json(const DivisionTree& tree, int precision) {
  const auto& nodes = tree.nodes();
  std::function<Json(int)> node_json = [&](int idx) {
    const DivisionNode& n = nodes[static_cast<std::size_t>(idx)];
    Json out{{"a", to_json(n.segment.a)}, {"b", to_json(n.segment.b)}};
    out["point"] = n.point ? to_json(*n.point) : Json(nullptr);
    out["decimal"] = n.point ? decimal_json(value(tree.theta(), *n.point), precision) : Json(nullptr);
    Json children = Json::array();
    if (n.left >= 0) children.push_back(node_json(n.left));
    if (n.right >= 0) children.push_back(node_json(n.right));
    out["children"] = children;
    return out;
  };
  return Json{{"theta", tree.theta().spec()}, {"depth", tree.depth()}, {"root", node_json(0)}};
}

DivisionTree tree_from_json(const Json& j) {
  ThetaContext ctx = parse_theta(field(j, "theta").get<std::string>());
  const Json& d = field(j, "depth");
  if (!d.is_number_unsigned()) throw bad("depth must be a nonnegative integer");
  std::vector<DivisionNode> nodes;
  std::function<int(const Json&, unsigned)> read = [&](const Json& n, unsigned level) -> int {
    int idx = static_cast<int>(nodes.size());
    DivisionNode node{Segment{lattice_from_json(field(n, "a")), lattice_from_json(field(n, "b"))}, std::nullopt, -1, -1,
                      level};
    if (!field(n, "point").is_null()) node.point = lattice_from_json(n.at("point"));
    nodes.push_back(node);
    const Json& children = field(n, "children");
    if (!children.is_array() || (children.size() != 0 && children.size() != 2))
      throw bad("a node needs zero or two children");
    if (children.size() == 2) {
      int l = read(children[0], level + 1);
      int r = read(children[1], level + 1);
      nodes[static_cast<std::size_t>(idx)].left = l;
      nodes[static_cast<std::size_t>(idx)].right = r;
    }
    return idx;
  };
  read(field(j, "root"), 0);
  return DivisionTree(ctx, std::move(nodes), d.get<unsigned>());
}

Json to_json(const MembershipTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back(Json{{"move", s.kind == MoveKind::Flip ? "flip" : "shrink"},
                         {"theta_before", s.theta_before.spec()},
                         {"v_before", to_json(s.v_before)},
                         {"a", int_json(s.a)},
                         {"theta_after", s.theta_after.spec()},
                         {"v_after", to_json(s.v_after)}});
  return Json{{"verdict", t.verdict}, {"reason", t.reason}, {"shrinks", t.shrink_count()}, {"steps", steps}};
}

Json to_json(const ThetaContext& ctx, const ApproachResult& r, int precision) {
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(Json{{"point", to_json(p)}, {"decimal", decimal_json(value(ctx, p), precision)}});
  return Json{{"points", pts}, {"reached_tolerance", r.reached_tolerance}, {"descents", r.descents}};
}

Json to_json(const CfExpansion& cf) {
  Json q = Json::array();
  for (const auto& a : cf.quotients) q.push_back(int_json(a));
  Json out{{"quotients", q}};
  out["period_start"] = cf.period_start ? Json(*cf.period_start) : Json(nullptr);
  out["period_length"] = cf.period_length ? Json(*cf.period_length) : Json(nullptr);
  return out;
}

Json to_json(const ThetaContext& ctx, const std::vector<Convergent>& cs, int precision) {
  Json out = Json::array();
  for (const auto& c : cs)
    out.push_back(Json{{"p", int_json(c.p)},
                       {"q", int_json(c.q)},
                       {"index", c.index},
                       {"decimal", decimal_json(ctx.linear(c.q, c.p), precision)}});
  return out;
}

Json to_json(const ThetaContext& ctx, const MSet& s, int precision) {
  Json vals = Json::array();
  for (const auto& v : s.values)
    vals.push_back(Json{{"witness", to_json(v.den)}, {"decimal", decimal_json(v.value(ctx), precision)}});
  Json out{{"m_bound", int_json(s.m_bound)}, {"count", s.values.size()}, {"values", vals}};
  out["max"] = s.max ? Json{{"witness", to_json(s.max->den)}, {"decimal", decimal_json(s.max->value(ctx), precision)}}
                     : Json(nullptr);
  return out;
}

Json to_json(const MoritaMap& g) {
  return Json{{"source", g.source().spec()},
              {"target", g.target().spec()},
              {"matrix", Json::array({int_json(g.a()), int_json(g.b()), int_json(g.c()), int_json(g.d())})}};
}

Json to_json(const SubbundleCertificate& cert) {
  Json path = Json::array();
  for (const auto& s : cert.path) path.push_back(to_json(s));
  Json triples = Json::array();
  for (const auto& t : cert.triples)
    triples.push_back(Json{{"sub", to_json(t.sub)}, {"mid", to_json(t.mid)}, {"quot", to_json(t.quot)}, {"chi", int_json(t.chi)}});
  const MoritaMap& g = cert.morita;
  return Json{{"theta", cert.theta.spec()},
              {"P", to_json(cert.p_rank)},
              {"target", to_json(cert.target)},
              {"morita", Json::array({int_json(g.a()), int_json(g.b()), int_json(g.c()), int_json(g.d())})},
              {"path", path},
              {"triples", triples},
              {"valid", cert.valid}};
}

SubbundleCertificate certificate_from_json(const Json& j) {
  ThetaContext ctx = parse_theta(field(j, "theta").get<std::string>());
  const Json& m = field(j, "morita");
  if (!m.is_array() || m.size() != 4) throw bad("morita must be [a, b, c, d]");
  MoritaMap g = MoritaMap::make(ctx, int_from_json(m[0]), int_from_json(m[1]), int_from_json(m[2]), int_from_json(m[3]));
  SubbundleCertificate cert{ctx, lattice_from_json(field(j, "P")), lattice_from_json(field(j, "target")), g, {}, {}, false};
  for (const auto& s : field(j, "path")) cert.path.push_back(segment_from_json(s));
  for (const auto& t : field(j, "triples"))
    cert.triples.push_back(ExactTriple{lattice_from_json(field(t, "sub")), lattice_from_json(field(t, "mid")),
                                       lattice_from_json(field(t, "quot")), int_from_json(field(t, "chi"))});
  if (j.contains("valid")) cert.valid = j.at("valid").get<bool>();
  return cert;
}

Json to_json(const FormalSum& s) {
  Json pieces = Json::array();
  for (const auto& p : s.pieces) pieces.push_back(to_json(p.inv));
  return Json{{"pieces", pieces}};
}

FormalSum formal_sum_from_json(const Json& j) {
  std::vector<LatticeElem> invs;
  for (const auto& p : field(j, "pieces")) invs.push_back(lattice_from_json(p));
  return FormalSum::from_invariants(invs);
}

Json to_json(const ThetaContext& ctx, const EpsPlan& plan, int precision) {
  Json ledger = Json::array();
  for (const auto& s : plan.ledger) {
    Json e{{"input", to_json(s.input)},
           {"action", std::string(eps_action_name(s.action))},
           {"share", decimal_json(s.share, precision)},
           {"bound", decimal_json(s.bound, precision)}};
    e["convergent"] = s.convergent ? Json{{"p", int_json(s.convergent->p)}, {"q", int_json(s.convergent->q)}} : Json(nullptr);
    e["output"] = s.output ? to_json(*s.output) : Json(nullptr);
    e["scanned"] = s.scanned;
    ledger.push_back(e);
  }
  EpsCheck check = validate_eps_plan(ctx, plan);
  return Json{{"input", to_json(plan.input)},
              {"eps", plan.eps.get_str()},
              {"C", plan.c.get_str()},
              {"output", to_json(plan.output)},
              {"input_rank", decimal_json(plan.input.total_rank(ctx), precision)},
              {"output_rank", decimal_json(plan.output.total_rank(ctx), precision)},
              {"ledger", ledger},
              {"notes", plan.notes},
              {"checks", Json{{"rank", check.rank_ok}, {"slopes", check.slopes_ok}, {"degrees", check.degrees_ok}}}};
}

Json to_json(const ChainPresentation& cp, int precision) {
  Json chain = Json::array();
  for (const auto& s : cp.chain)
    chain.push_back(Json{{"rank", to_json(s)}, {"decimal", decimal_json(value(cp.theta, s), precision)}});
  Json out{{"theta", cp.theta.spec()}, {"P", to_json(cp.ambient)}, {"chain", chain}};
  out["limit"] = cp.declared_limit ? decimal_json(*cp.declared_limit, precision) : Json(nullptr);
  out["terminates"] = cp.terminates;
  return out;
}

Json to_json(const QuotientRank& q, int precision) {
  Json out;
  out["exact"] = q.exact ? decimal_json(*q.exact, precision) : Json(nullptr);
  out["lower"] = decimal_json(q.lower, precision);
  out["upper"] = decimal_json(q.upper, precision);
  return out;
}

Json to_json(const ThetaContext& ctx, const HnProfile& p, int precision) {
  Json entries = Json::array();
  for (const auto& e : p.entries)
    entries.push_back(Json{{"quotient", to_json(e.quotient)},
                           {"slope", decimal_json(e.slope.value(ctx), precision)},
                           {"rank", decimal_json(e.rank, precision)}});
  return Json{{"entries", entries},
              {"merged_steps", p.merged_steps},
              {"slopes_strictly_decreasing", p.slopes_strictly_decreasing},
              {"ranks_strictly_decreasing", p.ranks_strictly_decreasing},
              {"zero_degree_count", p.zero_degree_count},
              {"valid", p.valid}};
}

Json to_json(const Reduction& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace)
    trace.push_back(Json{{"i", s.i},
                         {"j", s.j},
                         {"vi", s.vi.to_string()},
                         {"vj", s.vj.to_string()},
                         {"w", s.w.to_string()},
                         {"copies", int_json(s.multiplicity)},
                         {"D_before", int_json(s.d_before)},
                         {"D_after", int_json(s.d_after)}});
  return Json{{"canonical", r.canonical.to_string()}, {"trace", trace}};
}

Json to_json(const ThetaContext& ctx, const InterleaveSchedule& s, int precision) {
  Json stages = Json::array();
  for (const auto& st : s.stages)
    stages.push_back(Json{{"k", st.k},
                          {"eps", decimal_json(st.eps, precision)},
                          {"residual", decimal_json(st.residual, precision)},
                          {"bundle", to_json(st.bundle)},
                          {"bundle_prime", to_json(st.bundle_prime)},
                          {"quotient", to_json(st.quotient)},
                          {"rank", to_json(st.cumulative)},
                          {"decimal", decimal_json(value(ctx, st.cumulative), precision)}});
  return Json{{"target", decimal_json(s.target, precision)}, {"stages", stages}};
}

}  // namespace nct
