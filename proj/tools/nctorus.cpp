#include "nctorus/acceptance.hpp"
#include "nctorus/constructions/chains.hpp"
#include "nctorus/constructions/eps_plan.hpp"
#include "nctorus/constructions/subbundle.hpp"
#include "nctorus/constructions/tuples.hpp"
#include "nctorus/division.hpp"
#include "nctorus/error.hpp"
#include "nctorus/json.hpp"
#include "nctorus/kinv.hpp"
#include "nctorus/lattice.hpp"
#include "nctorus/theta.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace nct;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Config {
  std::string theta = "golden";
  std::string format = "text";
  int precision = 12;
  unsigned max_depth = 20;
  std::size_t max_steps = 100000;
};

Config cfg;

ThetaContext theta() { return parse_theta(cfg.theta); }
bool json_out() { return cfg.format == "json"; }
std::string dec(const QuadNumber& x) { return x.to_decimal(cfg.precision); }

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    Int v;
    if (v.set_str(item, 10) != 0) throw std::invalid_argument("'" + text + "' has a non-integer entry");
    out.push_back(v);
  }
  return out;
}

LatticeElem parse_pair(const std::string& text) {
  std::vector<Int> e = parse_ints(text);
  if (e.size() != 2) throw std::invalid_argument("'" + text + "' is not of the form m,n");
  return {e[0], e[1]};
}

std::vector<LatticeElem> parse_pairs(const std::string& text) {
  std::vector<LatticeElem> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) out.push_back(parse_pair(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

void emit(const Json& j, const std::string& text) {
  if (json_out())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string point_line(const ThetaContext& ctx, const LatticeElem& v) {
  return v.to_string() + " " + dec(value(ctx, v)) + "\n";
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string trace_text(const MembershipTrace& t) {
  std::string s;
  for (const auto& step : t.steps)
    s += std::string(step.kind == MoveKind::Flip ? "  flip   " : "  shrink ") + step.v_before.to_string() + " -> " +
         step.v_after.to_string() + " (a=" + step.a.get_str() + ")\n";
  return s;
}

std::string chain_text(const ChainPresentation& cp) {
  std::string s;
  for (const auto& e : cp.chain) s += point_line(cp.theta, e);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on lattices Z*theta + Z for real quadratic theta."};
  app.require_subcommand(1);
  app.fallthrough();
  if (const char* env = std::getenv("NCT_THETA")) cfg.theta = env;
  app.add_option("--theta", cfg.theta, "golden, sqrt:d or qi:p,q,r,d (default from NCT_THETA)")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--precision", cfg.precision, "Fractional digits in decimal renderings")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  app.add_option("--max-depth", cfg.max_depth, "Cap on tree depth")->check(CLI::Range(1u, 24u))->capture_default_str();
  app.add_option("--max-steps", cfg.max_steps, "Cap on step counts")->check(CLI::PositiveNumber)->capture_default_str();

  std::function<int()> action;
  auto command = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  std::string v_text, u_text;
  auto* phi_cmd = command("phi", "Division map: the w with 0 < w < v and chi(w, v) = 1");
  phi_cmd->add_option("--v", v_text, "m,n")->required();
  long oracle_bound = 0;
  phi_cmd->add_option("--oracle-bound", oracle_bound, "Cross-check by exhaustive search up to this bound");
  phi_cmd->callback([&] {
    action = [&] {
      ThetaContext ctx = theta();
      LatticeElem v = parse_pair(v_text), w = phi(ctx, v);
      Json j{{"v", to_json(v)}, {"phi", to_json(w)}, {"decimal", dec(value(ctx, w))}};
      std::string text = point_line(ctx, w);
      if (oracle_bound > 0) {
        bool agree = phi_oracle(ctx, v, oracle_bound) == w;
        j["oracle_agrees"] = agree;
        text += std::string("oracle ") + (agree ? "agrees" : "disagrees") + "\n";
      }
      emit(j, text);
      return 0;
    };
  });

  unsigned depth = 3;
  std::string out_file;
  auto* tree_cmd = command("tree", "Division tree of [0, 1]");
  tree_cmd->add_option("--depth", depth, "Levels")->capture_default_str();
  tree_cmd->add_option("--out", out_file, "Also write the JSON tree to this file");
  tree_cmd->callback([&] {
    action = [&] {
      if (depth > cfg.max_depth) throw std::invalid_argument("depth exceeds --max-depth");
      DivisionTree tree = build_tree(theta(), depth);
      Json j = to_json(tree, cfg.precision);
      if (!out_file.empty()) write_file(out_file, j);
      std::string text;
      for (const auto& n : tree.nodes())
        if (n.point)
          text += std::string(2 * n.depth, ' ') + "[" + n.segment.a.to_string() + ", " + n.segment.b.to_string() +
                  "] at " + point_line(tree.theta(), *n.point);
      emit(j, text);
      return 0;
    };
  });

  unsigned points_depth = 3;
  auto* points_cmd = command("points", "Division points up to a depth, in increasing order");
  points_cmd->add_option("--depth", points_depth, "Levels")->capture_default_str();
  points_cmd->callback([&] {
    action = [&] {
      if (points_depth > cfg.max_depth) throw std::invalid_argument("depth exceeds --max-depth");
      ThetaContext ctx = theta();
      Json arr = Json::array();
      std::string text;
      for (const auto& p : build_tree(ctx, points_depth).points()) {
        arr.push_back(Json{{"point", to_json(p)}, {"decimal", dec(value(ctx, p))}});
        text += point_line(ctx, p);
      }
      emit(Json{{"theta", ctx.spec()}, {"points", arr}}, text);
      return 0;
    };
  });

  bool show_trace = false;
  auto* member_cmd = command("member", "Decide whether v in (0, 1) is a division point");
  member_cmd->add_option("--v", v_text, "m,n")->required();
  member_cmd->add_flag("--trace", show_trace, "Print the reduction steps");
  member_cmd->callback([&] {
    action = [&] {
      MembershipTrace t = member_b_theta(theta(), parse_pair(v_text));
      std::string text = std::string(t.verdict ? "true" : "false") + "\n";
      if (show_trace) text += trace_text(t) + "  " + t.reason + "\n";
      emit(to_json(t), text);
      return 0;
    };
  });

  std::string target_text = "1/2", tol_text = "1/1000000";
  std::size_t steps = 10;
  auto* approach_cmd = command("approach", "Division points increasing to a target in (0, 1)");
  approach_cmd->add_option("--target", target_text, "Exact rational or decimal")->capture_default_str();
  approach_cmd->add_option("--steps", steps, "Points to emit")->capture_default_str();
  approach_cmd->add_option("--tol", tol_text, "Stop once the gap is below this")->capture_default_str();
  approach_cmd->callback([&] {
    action = [&] {
      if (steps > cfg.max_steps) throw std::invalid_argument("steps exceed --max-steps");
      ThetaContext ctx = theta();
      ApproachResult r = approach_target(ctx, QuadNumber(parse_rational(target_text)), steps,
                                         QuadNumber(parse_rational(tol_text)), cfg.max_steps * 64);
      std::string text;
      for (const auto& p : r.points) text += point_line(ctx, p);
      emit(to_json(ctx, r, cfg.precision), text);
      return 0;
    };
  });

  auto* chi_cmd = command("chi", "chi(u, v) = m_v*n_u - m_u*n_v");
  chi_cmd->add_option("--u", u_text, "m,n")->required();
  chi_cmd->add_option("--v", v_text, "m,n")->required();
  chi_cmd->callback([&] {
    action = [&] {
      Int c = chi(parse_pair(u_text), parse_pair(v_text));
      emit(Json{{"chi", int_json(c)}}, c.get_str() + "\n");
      return 0;
    };
  });

  std::string n_bound_text = "0,1", c_text = "3";
  auto* mset_cmd = command("mset", "Slopes m/(m*theta + n) >= -c with m <= 0 and 0 < m*theta + n < N");
  mset_cmd->add_option("--N", n_bound_text, "N as the lattice element m,n")->capture_default_str();
  mset_cmd->add_option("--c", c_text, "Positive rational")->capture_default_str();
  mset_cmd->callback([&] {
    action = [&] {
      ThetaContext ctx = theta();
      MSet s = m_set(ctx, value(ctx, parse_pair(n_bound_text)), parse_rational(c_text));
      std::string text;
      for (const auto& v : s.values) text += dec(v.value(ctx)) + " " + v.den.to_string() + "\n";
      text += "count " + std::to_string(s.values.size()) + ", m bound " + s.m_bound.get_str() + "\n";
      emit(to_json(ctx, s, cfg.precision), text);
      return 0;
    };
  });

  std::size_t count = 6;
  auto* conv_cmd = command("convergents", "Convergents p/q of -theta with p + q*theta > 0");
  conv_cmd->add_option("--count", count, "How many")->capture_default_str();
  conv_cmd->callback([&] {
    action = [&] {
      if (count > cfg.max_steps) throw std::invalid_argument("count exceeds --max-steps");
      ThetaContext ctx = theta();
      auto cs = positive_convergents(ctx, count);
      CfExpansion cf = cf_expansion(ctx, count);
      std::string text;
      for (const auto& c : cs) text += "(" + c.p.get_str() + "," + c.q.get_str() + ") " + dec(ctx.linear(c.q, c.p)) + "\n";
      emit(Json{{"theta", ctx.spec()}, {"continued_fraction", to_json(cf)}, {"convergents", to_json(ctx, cs, cfg.precision)}},
           text);
      return 0;
    };
  });

  std::string matrix_text, apply_text;
  auto* morita_cmd = command("morita", "Morita normalization of v, or a given det-1 map");
  auto* morita_v = morita_cmd->add_option("--v", v_text, "Normalize this primitive positive m,n to rank 1");
  morita_cmd->add_option("--matrix", matrix_text, "a,b,c,d")->excludes(morita_v);
  morita_cmd->add_option("--apply", apply_text, "Also map this m,n");
  morita_cmd->callback([&] {
    action = [&] {
      ThetaContext ctx = theta();
      std::optional<MoritaMap> g;
      if (!matrix_text.empty()) {
        std::vector<Int> e = parse_ints(matrix_text);
        if (e.size() != 4) throw std::invalid_argument("--matrix needs a,b,c,d");
        g = MoritaMap::make(ctx, e[0], e[1], e[2], e[3]);
      } else if (!v_text.empty()) {
        g = morita_normalize(ctx, parse_pair(v_text));
      } else {
        throw std::invalid_argument("morita needs --v or --matrix");
      }
      Json j = to_json(*g);
      j["scale"] = dec(g->scale());
      j["preserves_order"] = g->preserves_order();
      std::string text = "(" + g->a().get_str() + "," + g->b().get_str() + "," + g->c().get_str() + "," +
                         g->d().get_str() + ") theta' = " + dec(g->target().value()) + " scale " + dec(g->scale()) + "\n";
      if (!apply_text.empty()) {
        LatticeElem w = parse_pair(apply_text), gw = g->apply(w);
        j["image"] = to_json(gw);
        j["scaling_holds"] = g->scaling_holds(w);
        text += w.to_string() + " -> " + gw.to_string() + "\n";
      }
      emit(j, text);
      return 0;
    };
  });

  std::string p_text = "0,1", r_text;
  auto* cert_cmd = command("certificate", "Certificate for a rank-r subbundle of a stable P");
  cert_cmd->add_option("--P", p_text, "rk P as m,n")->capture_default_str();
  cert_cmd->add_option("--r", r_text, "Target rank m,n")->required();
  cert_cmd->add_option("--out", out_file, "Also write the JSON certificate to this file");
  cert_cmd->callback([&] {
    action = [&] {
      SubbundleCertificate cert = subbundle_certificate(theta(), parse_pair(p_text), parse_pair(r_text));
      Json j = to_json(cert);
      if (!out_file.empty()) write_file(out_file, j);
      const ThetaContext& norm = cert.morita.target();
      std::string text = "theta' = " + norm.spec() + ", path depth " + std::to_string(cert.path.size()) + "\n";
      for (const auto& t : cert.triples)
        text += "  " + t.sub.to_string() + " + " + t.quot.to_string() + " = " + t.mid.to_string() + ", chi " +
                t.chi.get_str() + "\n";
      text += std::string("valid ") + (cert.valid ? "true" : "false") + "\n";
      emit(j, text);
      return 0;
    };
  });

  std::string pieces_text, eps_text = "1/10", bound_text = "0";
  auto* eps_cmd = command("eps-plan", "Subobject of rank > rk - eps with all slopes below C");
  eps_cmd->add_option("--pieces", pieces_text, "m,n;m,n;...")->required();
  eps_cmd->add_option("--eps", eps_text, "Positive rational")->capture_default_str();
  eps_cmd->add_option("--C", bound_text, "Slope bound")->capture_default_str();
  eps_cmd->callback([&] {
    action = [&] {
      ThetaContext ctx = theta();
      EpsPlan plan = eps_plan(ctx, FormalSum::from_invariants(parse_pairs(pieces_text)), parse_rational(eps_text),
                              parse_rational(bound_text));
      std::string text;
      for (const auto& s : plan.ledger)
        text += s.input.to_string() + " " + std::string(eps_action_name(s.action)) +
                (s.output ? " -> " + s.output->to_string() : std::string()) + "\n";
      text += "rank " + dec(plan.input.total_rank(ctx)) + " -> " + dec(plan.output.total_rank(ctx)) + "\n";
      emit(to_json(ctx, plan, cfg.precision), text);
      return 0;
    };
  });

  std::string tuple_text, tuple2_text;
  auto* reduce_cmd = command("reduce", "Reduce a half-plane tuple of primitive vectors");
  reduce_cmd->add_option("--tuple", tuple_text, "x,y;x,y;...")->required();
  reduce_cmd->callback([&] {
    action = [&] {
      VectorTuple t = parse_tuple(tuple_text);
      Reduction r = reduce_full(t);
      std::string d = potential_D(t).get_str();
      for (const auto& s : r.trace) d += " -> " + s.d_after.get_str();
      emit(to_json(r), "canonical " + r.canonical.to_string() + "\nD " + d + "\n");
      return 0;
    };
  });

  auto* equiv_cmd = command("equiv", "Whether two half-plane tuples are equivalent");
  equiv_cmd->add_option("--t1", tuple_text, "x,y;...")->required();
  equiv_cmd->add_option("--t2", tuple2_text, "x,y;...")->required();
  equiv_cmd->callback([&] {
    action = [&] {
      Equivalence e = tuples_equivalent(parse_tuple(tuple_text), parse_tuple(tuple2_text));
      emit(Json{{"equivalent", e.equivalent}, {"sum1", e.sum1.to_string()}, {"sum2", e.sum2.to_string()}},
           std::string(e.equivalent ? "true" : "false") + "\n");
      return 0;
    };
  });

  std::string chain_text_in, limit_text;
  bool terminates = false, merge = false;
  auto chain_options = [&](CLI::App* cmd) {
    cmd->add_option("--P", p_text, "rk P as m,n")->capture_default_str();
    cmd->add_option("--r", target_text, "Rank of the subobject, as a rational");
    cmd->add_option("--steps", steps, "Chain length when built from --r")->capture_default_str();
    cmd->add_option("--chain", chain_text_in, "Explicit chain m,n;m,n;...");
    cmd->add_option("--limit", limit_text, "Declared limit for an explicit chain");
    cmd->add_flag("--terminates", terminates, "The explicit chain ends at its last element");
  };
  auto make_chain = [&]() {
    ThetaContext ctx = theta();
    if (chain_text_in.empty())
      return quasi_subsheaf_chain(ctx, parse_pair(p_text), QuadNumber(parse_rational(target_text)), steps);
    ChainPresentation cp{ctx, parse_pair(p_text), parse_pairs(chain_text_in), std::nullopt, terminates};
    if (!limit_text.empty()) cp.declared_limit = QuadNumber(parse_rational(limit_text));
    validate_chain(cp);
    return cp;
  };

  auto* rank_cmd = command("rank", "Rank of P/S for a chain presentation of S");
  chain_options(rank_cmd);
  rank_cmd->callback([&] {
    action = [&] {
      if (steps > cfg.max_steps) throw std::invalid_argument("steps exceed --max-steps");
      ChainPresentation cp = make_chain();
      QuotientRank q = rank_of_quotient(cp);
      emit(Json{{"presentation", to_json(cp, cfg.precision)}, {"quotient_rank", to_json(q, cfg.precision)}},
           chain_text(cp) + "rank " + q.to_string() + "\n");
      return 0;
    };
  });

  auto* hn_cmd = command("hn-profile", "Successive quotients of a chain with their slopes");
  chain_options(hn_cmd);
  hn_cmd->add_flag("--merge", merge, "Merge adjacent quotients of equal slope");
  hn_cmd->callback([&] {
    action = [&] {
      if (steps > cfg.max_steps) throw std::invalid_argument("steps exceed --max-steps");
      ChainPresentation cp = make_chain();
      HnProfile p = hn_profile(cp, merge);
      std::string text;
      for (const auto& e : p.entries)
        text += e.quotient.to_string() + " slope " + dec(e.slope.value(cp.theta)) + " rank " + dec(e.rank) + "\n";
      text += std::string("valid ") + (p.valid ? "true" : "false") + "\n";
      emit(to_json(cp.theta, p, cfg.precision), text);
      return 0;
    };
  });

  std::string from_file;
  acceptance::Options acc;
  bool sequential = false;
  auto* verify_cmd = command("verify", "Run the acceptance suite, or re-validate a saved tree or certificate");
  verify_cmd->add_option("--from-file", from_file, "JSON written by tree --out or certificate --out");
  verify_cmd->add_option("--seed", acc.seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--only", acc.only, "Criterion numbers")->delimiter(',');
  verify_cmd->add_flag("--sequential", sequential, "Do not run criteria in parallel");
  verify_cmd->callback([&] {
    action = [&] {
      if (!from_file.empty()) {
        Json j = read_json_file(from_file);
        std::vector<std::string> failures;
        std::string kind;
        if (j.contains("triples")) {
          kind = "certificate";
          SubbundleCertificate cert = certificate_from_json(j);
          failures = validate_certificate(cert).failures;
          if (!cert.valid) failures.push_back("file does not claim validity");
        } else if (j.contains("root")) {
          kind = "tree";
          failures = validate_tree(tree_from_json(j));
        } else {
          throw std::invalid_argument(from_file + " is neither a tree nor a certificate");
        }
        std::string text = kind + (failures.empty() ? " valid\n" : " invalid\n");
        for (const auto& f : failures) text += "  " + f + "\n";
        emit(Json{{"kind", kind}, {"valid", failures.empty()}, {"failures", failures}}, text);
        return failures.empty() ? 0 : kDomainError;
      }
      acc.parallel = !sequential;
      auto results = acceptance::run(acc);
      Json arr = Json::array();
      std::string text;
      bool ok = true;
      for (const auto& r : results) {
        arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text += acceptance::format(r) + "\n";
        ok = ok && r.pass;
      }
      emit(Json{{"criteria", arr}, {"all_passed", ok}}, text);
      return ok ? 0 : kDomainError;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  try {
    return action();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
}
