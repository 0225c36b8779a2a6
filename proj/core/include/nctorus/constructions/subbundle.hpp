#pragma once

#include "nctorus/division.hpp"
#include "nctorus/kinv.hpp"
#include "nctorus/lattice.hpp"
#include "nctorus/theta.hpp"

#include <string>
#include <vector>

namespace nct {

/// 0 -> V_{a,c} -> V_{a,b} -> V_{c,b} -> 0 recorded by ranks, with
/// chi(c - a, b - a) (which must be 1 for Hom to be one-dimensional).
struct ExactTriple {
  LatticeElem sub;
  LatticeElem mid;
  LatticeElem quot;
  Int chi;
};

/// Rank-level witness that a stable P contains a subbundle of rank r.
/// `path` and `triples` live in normalized coordinates, where the Morita
/// map sends rk P to 1 and theta to morita.target().
struct SubbundleCertificate {
  ThetaContext theta;
  LatticeElem p_rank;
  LatticeElem target;
  MoritaMap morita;
  std::vector<Segment> path;
  std::vector<ExactTriple> triples;
  bool valid = false;
};

/// Builds the certificate: Morita-normalize to rk P = 1, run the membership
/// recursion on the normalized target, turn its moves into a descent path and
/// record one exact triple per subdivided segment. Throws PreconditionFailed
/// unless 0 < r < rk P and chi(r, rk P) > 0, NotPrimitive for P.
SubbundleCertificate subbundle_certificate(const ThetaContext& ctx, const LatticeElem& p_rank, const LatticeElem& r);

struct CertificateCheck {
  bool valid = true;
  std::vector<std::string> failures;
};

/// Re-derives every claim of the certificate from its fields.
CertificateCheck validate_certificate(const SubbundleCertificate& cert);

}  // namespace nct
