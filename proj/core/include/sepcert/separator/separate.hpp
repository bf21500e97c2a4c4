#pragma once

#include <vector>

#include "sepcert/separator/certificate.hpp"
#include "sepcert/separator/induction.hpp"

namespace sepcert::separator {

struct SeparationResult {
  SeparationCertificate certificate;
  InductionTrace trace;  // empty unless the induction ran
};

/// Certificate that h is not in H, for H abelian and unipotent-free inside
/// Gamma. Throws InSubgroup, NotUnipotentFree, NotCommuting,
/// NeedsFieldExtension, or a resource error.
SeparationResult separate_abelian(const GroupDescription& gamma, const GroupDescription& H, const Matrix& h,
                                  const Options& opts = {});

/// Same, with the induction trace written to `trace` as it is built, so it
/// survives a resource failure.
SeparationResult separate_abelian(const GroupDescription& gamma, const GroupDescription& H, const Matrix& h,
                                  const Options& opts, InductionTrace& trace);
/// True if h lies in the abelian group H (exact test on triangular form).
bool in_abelian_subgroup(const GroupDescription& H, const Matrix& h, long bound = units::kDefaultRelationBound);

/// Combines certificates separating r^-1 h from H' (one per coset
/// representative r of H' in H) into one for h against H. Throws
/// CosetMembership when some r^-1 h lies in H'.
SeparationCertificate finite_index_lift(const GroupDescription& gamma, const GroupDescription& H,
                                        const GroupDescription& H_prime, const std::vector<Matrix>& reps,
                                        const Matrix& h, const std::vector<SeparationCertificate>& certs,
                                        const Options& opts = {});

}  // namespace sepcert::separator
