#pragma once

#include "bu/group_rep.hpp"

#include "json.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bu {

struct Summand {
  std::int64_t multiplicity;
  std::int64_t exponent;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Unit sphere S(sum a_j L^{u_j}) in a representation of Z/p^kappa,
/// kappa = group.k() + 1. Summands sorted by exponent, exponents distinct,
/// multiplicities positive.
class SphereType {
 public:
  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<Summand>& summands() const noexcept { return summands_; }
  /// Complex dimension.
  std::int64_t dim() const noexcept;

  friend bool operator==(const SphereType&, const SphereType&) = default;

 private:
  friend SphereType make_sphere(const GroupSpec&, const std::vector<Summand>&);
  SphereType(GroupSpec group, std::vector<Summand> summands)
      : group_(group), summands_(std::move(summands)) {}

  GroupSpec group_;
  std::vector<Summand> summands_;
};

/// Canonicalizes: folds exponents mod N, merges equal exponents, drops zero
/// multiplicities. Rejects negative multiplicities and exponents = 0 mod N.
SphereType make_sphere(const GroupSpec& group, const std::vector<Summand>& summands);

/// S(a L^u).
SphereType single_sphere(const GroupSpec& group, std::int64_t multiplicity, std::int64_t exponent);

SphereType direct_sum(const SphereType& a, const SphereType& b);

/// The sphere of a representation.
SphereType sphere_of(const RepSpec& rep);

enum class CertKind { identity, inclusion, power, stolz_meyer, join, compose, wreath_power, inflate };

std::string_view to_string(CertKind kind);
CertKind parse_cert_kind(std::string_view text);

struct NoParams {
  friend bool operator==(const NoParams&, const NoParams&) = default;
};
struct IdentityParams {
  SphereType sphere;
  friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};
struct InclusionParams {
  SphereType base;
  SphereType extra;
  friend bool operator==(const InclusionParams&, const InclusionParams&) = default;
};
struct PowerParams {
  std::int64_t s;
  std::int64_t t;
  friend bool operator==(const PowerParams&, const PowerParams&) = default;
};
struct StolzMeyerParams {
  std::int64_t d;
  friend bool operator==(const StolzMeyerParams&, const StolzMeyerParams&) = default;
};

using CertParams =
    std::variant<NoParams, IdentityParams, InclusionParams, PowerParams, StolzMeyerParams>;

/// Typed expression tree describing an equivariant map between spheres.
/// `source` and `target` are claims; validate_certificate re-derives them.
/// compose children are ordered [g, f] for g after f.
struct Certificate {
  CertKind kind;
  GroupSpec group;
  CertParams params;
  std::vector<Certificate> children;
  SphereType source;
  SphereType target;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Endpoints {
  SphereType source;
  SphereType target;
};

/// Bottom-up type reconstruction. Throws CertificateError naming the node
/// path ("$", "$.children[1]", ...) at the first rule violation or claim
/// mismatch.
Endpoints validate_certificate(const Certificate& cert);

// Builders. Each fills in the claimed endpoints from the typing rules.
Certificate identity_map(const SphereType& sphere);
Certificate inclusion_map(const SphereType& base, const SphereType& extra);
Certificate power_map(const GroupSpec& group, std::int64_t s, std::int64_t t);
/// The Z/p^2-map S(p(d-2)L) -> S(d L^p); d > 2. Taken as an axiom.
Certificate stolz_meyer_map(std::int64_t p, std::int64_t d);
/// Returns the single map unchanged when given one.
Certificate join_maps(std::vector<Certificate> maps);
/// g after f.
Certificate compose_maps(Certificate g, Certificate f);
Certificate wreath_power_map(Certificate f);
Certificate inflate_map(Certificate f);

/// Z/p^{k+1}-map S(p^k (d - 2l) L) -> S(p^{k-l} d L^{p^l}); k >= 1, 0 <= l <= k, d > 2l.
Certificate build_prop63(std::int64_t p, std::int64_t k, std::int64_t l, std::int64_t d);

/// p^k (k+2)(k+1) - (p^{k+1} - 1)/(p - 1); zero for k = 0.
std::int64_t worst_case_c(std::int64_t p, std::int64_t k);

struct LevelSplit {
  std::int64_t n;  // n_l
  std::int64_t q;  // q_l, with m_l = n_l p^{k-l} + q_l
};

struct Theorem13Plan {
  RepSpec rep;
  std::vector<LevelSplit> levels;
  /// n_0 = sum_l p^k n_l: the map is S(n_0 L) -> S(V).
  std::int64_t source_dim;
  /// sum_l p^l m_l - n_0.
  std::int64_t c_achieved;
  /// Some exponent t_i differs from p^{v(t_i)}, so power maps were appended.
  bool unit_adjusted;
  Certificate certificate;
};

/// Requires m_k != 0. Throws NoConstruction when n_0 would be 0.
Theorem13Plan plan_theorem13(const RepSpec& rep);

struct ZeroSet {
  std::int64_t dim;         // real dimension 2(n - n_0) - 1
  std::int64_t source_dim;  // n_0
};

/// Zero set of f([u, t, v]) = t f_0(v) on S(nL); requires n > n_0.
ZeroSet theorem13_zero_set(const RepSpec& rep, std::int64_t n);

// JSON (schema: group/kind/params/children/source/target).
nlohmann::json sphere_to_json(const SphereType& sphere);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Theorem13Plan& plan);
/// Throws CertificateError with the offending path on malformed input. Claimed
/// spheres must already be in canonical form.
Certificate certificate_from_json(const nlohmann::json& json);

}  // namespace bu
