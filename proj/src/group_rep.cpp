#include "bu/group_rep.hpp"

#include "bu/errors.hpp"
#include "bu/integer.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace bu {

std::int64_t GroupSpec::power(std::int64_t l) const {
  if (l < 0 || l > k_ + 1) {
    throw InvalidInput("level " + std::to_string(l) + " outside [0, k+1]");
  }
  return checked_pow(p_, l);
}

GroupSpec make_group(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (k < 0) throw InvalidInput("k must be non-negative, got " + std::to_string(k));
  const std::int64_t order = checked_pow(p, k + 1);
  if (order > std::numeric_limits<std::int32_t>::max()) {
    throw InvalidInput("group order p^(k+1) exceeds the index range");
  }
  return GroupSpec(p, k, order);
}

std::int64_t RepSpec::top_level() const noexcept {
  for (auto l = static_cast<std::int64_t>(profile_.size()) - 1; l > 0; --l) {
    if (profile_[static_cast<std::size_t>(l)] != 0) return l;
  }
  return 0;
}

std::int64_t RepSpec::weighted_dim() const noexcept {
  std::int64_t total = 0;
  std::int64_t weight = 1;
  for (const auto m : profile_) {
    total += weight * m;
    weight *= group_.p();
  }
  return total;
}

RepSpec make_rep(const GroupSpec& group, const std::vector<std::int64_t>& exponents) {
  if (exponents.empty()) throw InvalidInput("representation needs at least one summand");
  std::vector<std::int64_t> folded;
  folded.reserve(exponents.size());
  std::vector<std::int64_t> profile(static_cast<std::size_t>(group.k() + 1), 0);
  for (const auto t : exponents) {
    const std::int64_t r = floor_mod(t, group.order());
    if (r == 0) {
      throw InvalidInput("exponent " + std::to_string(t) + " is 0 mod " +
                         std::to_string(group.order()) + " (trivial summand)");
    }
    folded.push_back(r);
    ++profile[static_cast<std::size_t>(valuation(r, group.p()))];
  }
  std::sort(folded.begin(), folded.end());
  return RepSpec(group, std::move(folded), std::move(profile));
}

RepSpec rep_from_profile(const GroupSpec& group, const std::vector<std::int64_t>& profile) {
  if (profile.size() != static_cast<std::size_t>(group.k() + 1)) {
    throw InvalidInput("profile needs k+1 = " + std::to_string(group.k() + 1) + " entries");
  }
  std::vector<std::int64_t> exponents;
  for (std::size_t l = 0; l < profile.size(); ++l) {
    if (profile[l] < 0) throw InvalidInput("negative multiplicity in profile");
    exponents.insert(exponents.end(), static_cast<std::size_t>(profile[l]),
                     group.power(static_cast<std::int64_t>(l)));
  }
  return make_rep(group, exponents);
}

std::int64_t delta(const RepSpec& rep) {
  if (!rep.has_top_level()) {
    throw ReductionRequired("m_k = 0: restrict to the subgroup of order p^(k'+1) first");
  }
  return rep.weighted_dim() - (rep.group().power(rep.group().k()) - 1);
}

Reduction effective_reduction(const RepSpec& rep) {
  if (rep.has_top_level()) return {rep.group().k(), rep, delta(rep)};
  const std::int64_t k = rep.top_level();
  const GroupSpec sub = make_group(rep.group().p(), k);
  // Every exponent has valuation <= k, so none folds to zero mod p^{k+1}.
  RepSpec reduced = make_rep(sub, rep.exponents());
  const std::int64_t d = delta(reduced);
  return {k, std::move(reduced), d};
}

}  // namespace bu
