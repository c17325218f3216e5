#include "bu/bounds.hpp"

#include "bu/constructions.hpp"
#include "bu/errors.hpp"
#include "bu/json_io.hpp"

namespace bu {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

}  // namespace

std::optional<std::int64_t> zero_set_lower_bound(const RepSpec& rep, std::int64_t n) {
  const std::int64_t d = delta(rep);
  if (n <= d) return std::nullopt;
  return 2 * (n - 1 - d);
}

bool sphere_map_necessary(const RepSpec& rep, std::int64_t n) { return n <= delta(rep); }

Corollary37Report corollary37_report(std::int64_t p, std::int64_t k, std::int64_t r,
                                     std::int64_t n) {
  const GroupSpec group = make_group(p, k);
  if (r < 1) throw InvalidInput("manifold dimension r must be positive");
  Corollary37Report out{};
  if (p == 2) {
    if (r % 2 != 0) throw InvalidInput("p = 2 needs r even (tangent bundle complex)");
    out.hypothesis = "p = 2: assumes the tangent bundle of the manifold admits a complex structure";
  }
  // m_l = r(p-1)p^{k-l}/2, realized by exponents p^l.
  for (std::int64_t l = 0; l <= k; ++l) {
    out.profile.push_back(r * (p - 1) * group.power(k - l) / 2);
  }
  out.delta = delta(rep_from_profile(group, out.profile));
  out.generic = 2 * (n - 1 - out.delta);
  const std::int64_t pk = group.power(k);
  out.bound = 2 * (n + (pk - 1) - 1) - r * (k + 1) * (p - 1) * pk;
  if (out.bound != out.generic) {
    throw IdentityFailure("wreath-profile closed form disagrees with the generic bound");
  }
  return out;
}

Remark310Table compare_remark310(const RepSpec& rep, std::int64_t n) {
  const GroupSpec& g = rep.group();
  Remark310Table out{};
  out.ours = zero_set_lower_bound(rep, n);
  out.bms_level = rep.top_level();
  const std::int64_t scale = g.power(out.bms_level);
  out.bms = 2 * ceil_div(n - 1 - scale * rep.dim(), scale);
  if (g.p() == 2 && rep.profile().back() == rep.dim()) {
    out.crabb2019 = 2 * (n - g.power(g.k()) * rep.dim() - 1);
  }
  return out;
}

Corollary39Result corollary39_bound(const RepSpec& u, const RepSpec& v) {
  if (!(u.group() == v.group())) throw InvalidInput("corollary39_bound: group mismatch");
  Corollary39Result out{zero_set_lower_bound(v, u.dim()), 1};
  for (const auto r : u.exponents()) out.gamma_order *= r;
  return out;
}

BoundsReport bounds_report(const RepSpec& rep, std::int64_t n) {
  BoundsReport out{rep, n, delta(rep), zero_set_lower_bound(rep, n), sphere_map_necessary(rep, n),
                   std::nullopt, compare_remark310(rep, n)};
  try {
    const Theorem13Plan plan = plan_theorem13(rep);
    ConstructionSummary summary{plan.source_dim, plan.c_achieved, std::nullopt};
    if (n > plan.source_dim) summary.zero_set_dim = 2 * (n - plan.source_dim) - 1;
    out.construction = summary;
  } catch (const NoConstruction&) {
  }
  return out;
}

nlohmann::json to_json(const Remark310Table& table) {
  return {{"ours", optional_json(table.ours)},
          {"bms", table.bms},
          {"bms_level", table.bms_level},
          {"crabb2019", optional_json(table.crabb2019)}};
}

nlohmann::json to_json(const BoundsReport& report) {
  nlohmann::json construction = nullptr;
  if (report.construction) {
    construction = {{"n0", report.construction->source_dim},
                    {"c_achieved", report.construction->c_achieved},
                    {"zero_set_dim", optional_json(report.construction->zero_set_dim)}};
  }
  return {{"delta", report.delta},
          {"n", report.n},
          {"lower_bound_dim", optional_json(report.lower_bound_dim)},
          {"necessary", report.necessary_ok},
          {"construction", std::move(construction)},
          {"comparisons", to_json(report.comparisons)},
          {"units", {{"n", "complex"}, {"delta", "complex"}, {"bounds", "real"}}}};
}

nlohmann::json to_json(const Corollary37Report& report) {
  return {{"bound", report.bound},
          {"generic", report.generic},
          {"profile", report.profile},
          {"delta", report.delta},
          {"hypothesis", optional_json(report.hypothesis)},
          {"units", {{"n", "complex"}, {"bound", "real"}}}};
}

}  // namespace bu
