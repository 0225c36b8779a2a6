#pragma once

#include "nctorus/constructions/chains.hpp"
#include "nctorus/constructions/eps_plan.hpp"
#include "nctorus/constructions/rank_search.hpp"
#include "nctorus/constructions/subbundle.hpp"
#include "nctorus/constructions/tuples.hpp"
#include "nctorus/division.hpp"
#include "nctorus/kinv.hpp"
#include "nctorus/lattice.hpp"
#include "nctorus/theta.hpp"

#include <nlohmann/json.hpp>

namespace nct {

/// Key order follows insertion so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// Integers are numbers when they fit a signed 64-bit value, decimal strings
/// otherwise; both forms are accepted when reading.
Json int_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const LatticeElem& v);
LatticeElem lattice_from_json(const Json& j);

/// Truncated decimal string with `precision` fractional digits.
Json decimal_json(const QuadNumber& x, int precision);

Json to_json(const Segment& s);
Segment segment_from_json(const Json& j);

/// {"theta", "depth", "root"}; nodes are {"a", "b", "point" | null,
/// "decimal" | null, "children": [...]}.
Json to_json(const DivisionTree& tree, int precision);
DivisionTree tree_from_json(const Json& j);

Json to_json(const MembershipTrace& t);
Json to_json(const ThetaContext& ctx, const ApproachResult& r, int precision);
Json to_json(const CfExpansion& cf);
Json to_json(const ThetaContext& ctx, const std::vector<Convergent>& cs, int precision);
Json to_json(const ThetaContext& ctx, const MSet& s, int precision);
Json to_json(const MoritaMap& g);

Json to_json(const SubbundleCertificate& cert);
SubbundleCertificate certificate_from_json(const Json& j);

/// {"pieces": [[m, n], ...]}
Json to_json(const FormalSum& s);
FormalSum formal_sum_from_json(const Json& j);

Json to_json(const ThetaContext& ctx, const EpsPlan& plan, int precision);
Json to_json(const ChainPresentation& cp, int precision);
Json to_json(const QuotientRank& q, int precision);
Json to_json(const ThetaContext& ctx, const HnProfile& p, int precision);
Json to_json(const Reduction& r);
Json to_json(const ThetaContext& ctx, const InterleaveSchedule& s, int precision);

}  // namespace nct
