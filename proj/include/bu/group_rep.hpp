#pragma once

#include <cstdint>
#include <vector>

namespace bu {

/// The cyclic group Z/p^{k+1}.
class GroupSpec {
 public:
  std::int64_t p() const noexcept { return p_; }
  std::int64_t k() const noexcept { return k_; }
  /// Group order N = p^{k+1}.
  std::int64_t order() const noexcept { return order_; }
  /// p^l for 0 <= l <= k+1.
  std::int64_t power(std::int64_t l) const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  friend GroupSpec make_group(std::int64_t p, std::int64_t k);
  GroupSpec(std::int64_t p, std::int64_t k, std::int64_t order)
      : p_(p), k_(k), order_(order) {}

  std::int64_t p_;
  std::int64_t k_;
  std::int64_t order_;
};

/// Validates p prime and k >= 0; N must fit a signed 32-bit index.
GroupSpec make_group(std::int64_t p, std::int64_t k);

/// A representation V = sum of L^{t_i} with trivial fixed submodule.
/// Exponents are kept folded into [1, N-1] and sorted.
class RepSpec {
 public:
  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
  /// (m_0, ..., m_k): number of exponents of p-adic valuation l.
  const std::vector<std::int64_t>& profile() const noexcept { return profile_; }
  std::int64_t dim() const noexcept { return static_cast<std::int64_t>(exponents_.size()); }
  /// Largest valuation that occurs.
  std::int64_t top_level() const noexcept;
  bool has_top_level() const noexcept { return profile_.back() != 0; }
  /// Sum of p^l m_l.
  std::int64_t weighted_dim() const noexcept;

  friend bool operator==(const RepSpec&, const RepSpec&) = default;

 private:
  friend RepSpec make_rep(const GroupSpec&, const std::vector<std::int64_t>&);
  RepSpec(GroupSpec group, std::vector<std::int64_t> exponents,
          std::vector<std::int64_t> profile)
      : group_(group), exponents_(std::move(exponents)), profile_(std::move(profile)) {}

  GroupSpec group_;
  std::vector<std::int64_t> exponents_;
  std::vector<std::int64_t> profile_;
};

RepSpec make_rep(const GroupSpec& group, const std::vector<std::int64_t>& exponents);

/// Canonical representative of a profile: m_l copies of L^{p^l}.
RepSpec rep_from_profile(const GroupSpec& group, const std::vector<std::int64_t>& profile);

/// delta(V) = sum p^l m_l - (p^k - 1). Throws ReductionRequired if m_k = 0.
std::int64_t delta(const RepSpec& rep);

struct Reduction {
  std::int64_t k;
  RepSpec rep;
  std::int64_t delta;
};

/// Restricts to the subgroup of order p^{k'+1}, k' the top valuation present.
Reduction effective_reduction(const RepSpec& rep);

}  // namespace bu
