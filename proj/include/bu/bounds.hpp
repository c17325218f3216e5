#pragma once

// Dimension bounds. Module sizes n, m are complex dimensions; every
// zero-set bound returned here is a real (covering) dimension.

#include "bu/group_rep.hpp"
#include "bu/integer.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace bu {

/// 2(n - 1 - delta(V)) when n > delta(V). Requires m_k != 0.
std::optional<std::int64_t> zero_set_lower_bound(const RepSpec& rep, std::int64_t n);

/// n <= delta(V): necessary for a Z/p^{k+1}-map S(nL) -> S(V).
bool sphere_map_necessary(const RepSpec& rep, std::int64_t n);

struct Corollary37Report {
  std::int64_t bound;    // closed form, real dimension
  std::int64_t generic;  // 2(n - 1 - delta) on the wreath profile
  std::vector<std::int64_t> profile;
  std::int64_t delta;
  /// Set for p = 2: the bound needs a complex structure on the tangent bundle.
  std::optional<std::string> hypothesis;
};

/// 2(n + (p^k - 1) - 1) - r(k+1)(p-1)p^k, cross-checked against the generic
/// bound on m_l = r(p-1)p^{k-l}/2. p = 2 needs r even.
Corollary37Report corollary37_report(std::int64_t p, std::int64_t k, std::int64_t r, std::int64_t n);

struct Remark310Table {
  std::optional<std::int64_t> ours;       // 2(n - 1 - delta) if n > delta
  std::int64_t bms_level;                 // k': top valuation present
  std::int64_t bms;                       // 2 ceil((n - 1 - p^{k'} m) / p^{k'})
  std::optional<std::int64_t> crabb2019;  // p = 2 and m_k = m only: 2(n - 2^k m - 1)
};

/// Requires m_k != 0.
Remark310Table compare_remark310(const RepSpec& rep, std::int64_t n);

struct Corollary39Result {
  std::optional<std::int64_t> bound;  // 2(dim U - delta(V) - 1) if dim U > delta(V)
  /// Order r_1 ... r_n of the group of roots of unity from U's exponents.
  Integer gamma_order;
};

Corollary39Result corollary39_bound(const RepSpec& u, const RepSpec& v);

struct ConstructionSummary {
  std::int64_t source_dim;                 // n_0
  std::int64_t c_achieved;
  std::optional<std::int64_t> zero_set_dim;  // 2(n - n_0) - 1 when n > n_0
};

struct BoundsReport {
  RepSpec rep;
  std::int64_t n;
  std::int64_t delta;
  std::optional<std::int64_t> lower_bound_dim;
  bool necessary_ok;
  std::optional<ConstructionSummary> construction;
  Remark310Table comparisons;
};

/// Requires m_k != 0. The construction is empty when no map is built.
BoundsReport bounds_report(const RepSpec& rep, std::int64_t n);

nlohmann::json to_json(const Remark310Table& table);
nlohmann::json to_json(const BoundsReport& report);
nlohmann::json to_json(const Corollary37Report& report);

}  // namespace bu
