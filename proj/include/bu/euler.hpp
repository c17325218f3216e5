#pragma once

#include "bu/cyclic_ring.hpp"
#include "bu/group_rep.hpp"

#include <optional>
#include <vector>

namespace bu {

/// prod_i (1 - z^{t_i}) in Z[z]/(z^N - 1).
CyclicPoly euler_class(const RepSpec& rep);

struct EulerQuery {
  RepSpec rep;
  std::int64_t n;  // truncation exponent: complex dimension of the source sphere module
  std::int64_t j;  // power of the line class 1 - z
  Locality locality = Locality::integral;
};

/// Is euler_class(rep) * (1 - z)^j non-zero in Z[z]/(z^N - 1, (1 - z)^n)?
/// Decided by lattice membership. Requires m_k != 0.
bool lemma41_nonvanishing(const EulerQuery& query);

/// Same, against a prebuilt context (ctx.n() must equal query.n).
bool lemma41_nonvanishing(const EulerQuery& query, const QuotientCtx& ctx);

struct SharpnessScan {
  /// Largest j whose class is non-zero; empty if already zero at j = 0.
  std::optional<std::int64_t> j_max;
  /// Verdict for each 0 <= j <= n.
  std::vector<bool> table;
};

SharpnessScan sharpness_scan(const RepSpec& rep, std::int64_t n, Locality locality);
SharpnessScan sharpness_scan(const RepSpec& rep, const QuotientCtx& ctx, Locality locality);

/// 1 + z^{p^k} + ... + z^{(p-1)p^k}.
CyclicPoly phi_poly(const GroupSpec& group);

/// Solves (1 - z^{p^l})^{(p-1)p^{k-l}} = -p(1 + (1 - z) a_l(z)) + phi(z) for
/// a_l in Z[z] and returns its coefficients (lowest degree first; trailing
/// zeros dropped, so a_l = 0 gives an empty list). Throws IdentityFailure if
/// a required exact division fails.
std::vector<Integer> verify_identity_a(const GroupSpec& group, std::int64_t l);

/// Re-multiplies the right-hand side of the a_l identity for a candidate a_l and
/// compares it with the left-hand side in Z[z].
bool check_identity_a(const GroupSpec& group, std::int64_t l, const std::vector<Integer>& a_l);

}  // namespace bu
