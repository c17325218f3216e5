#include "bu/euler.hpp"

#include "bu/errors.hpp"
#include "bu/parallel.hpp"
#include "bu/polynomial.hpp"

#include <string>

namespace bu {

namespace {

void require_top_level(const RepSpec& rep) {
  if (!rep.has_top_level()) {
    throw ReductionRequired("Euler class test needs m_k != 0; apply effective_reduction first");
  }
}

IntVector phi_coeffs(const GroupSpec& group) {
  const std::int64_t step = group.power(group.k());
  IntVector out = IntVector::Zero((group.p() - 1) * step + 1);
  for (std::int64_t i = 0; i < group.p(); ++i) out(i * step) = 1;
  return out;
}

IntVector identity_lhs(const GroupSpec& group, std::int64_t l) {
  return poly::one_minus_monomial_power<Integer>(group.power(l),
                                                 (group.p() - 1) * group.power(group.k() - l));
}

void require_level(const GroupSpec& group, std::int64_t l) {
  if (l < 0 || l > group.k()) {
    throw InvalidInput("a_l identity needs 0 <= l <= k, got l = " + std::to_string(l));
  }
}

}  // namespace

CyclicPoly euler_class(const RepSpec& rep) {
  CyclicPoly out = CyclicPoly::one(rep.group());
  for (const auto t : rep.exponents()) out.mul_one_minus_z_power(t);
  return out;
}

bool lemma41_nonvanishing(const EulerQuery& query, const QuotientCtx& ctx) {
  require_top_level(query.rep);
  if (query.j < 0) throw InvalidInput("j must be non-negative");
  if (!(ctx.group() == query.rep.group()) || ctx.n() != query.n) {
    throw InvalidInput("quotient context does not match the query");
  }
  CyclicPoly x = euler_class(query.rep);
  for (std::int64_t i = 0; i < query.j; ++i) x.mul_one_minus_z_power(1);
  return !is_zero_in_quotient(x, ctx, query.locality);
}

bool lemma41_nonvanishing(const EulerQuery& query) {
  require_top_level(query.rep);
  return lemma41_nonvanishing(query, make_quotient_ctx(query.rep.group(), query.n));
}

SharpnessScan sharpness_scan(const RepSpec& rep, const QuotientCtx& ctx, Locality locality) {
  require_top_level(rep);
  if (!(ctx.group() == rep.group())) throw InvalidInput("sharpness_scan: group mismatch");
  std::vector<CyclicPoly> classes;
  classes.push_back(euler_class(rep));
  for (std::int64_t j = 1; j <= ctx.n(); ++j) {
    classes.push_back(classes.back());
    classes.back().mul_one_minus_z_power(1);
  }
  std::vector<char> verdicts(classes.size());
  parallel_for(classes.size(), [&](std::size_t j) {
    verdicts[j] = !is_zero_in_quotient(classes[j], ctx, locality);
  });
  SharpnessScan scan;
  for (std::size_t j = 0; j < verdicts.size(); ++j) {
    scan.table.push_back(verdicts[j] != 0);
    if (verdicts[j]) scan.j_max = static_cast<std::int64_t>(j);
  }
  return scan;
}

SharpnessScan sharpness_scan(const RepSpec& rep, std::int64_t n, Locality locality) {
  require_top_level(rep);
  return sharpness_scan(rep, make_quotient_ctx(rep.group(), n), locality);
}

CyclicPoly phi_poly(const GroupSpec& group) {
  IntVector coeffs = IntVector::Zero(group.order());
  const IntVector phi = phi_coeffs(group);
  coeffs.head(phi.size()) = phi;
  return CyclicPoly(group, std::move(coeffs));
}

std::vector<Integer> verify_identity_a(const GroupSpec& group, std::int64_t l) {
  require_level(group, l);
  const Integer p = group.p();
  const IntVector rest = poly::sub(identity_lhs(group, l), phi_coeffs(group));
  const auto quotient = poly::divide_exact<Integer>(rest, Integer(-p));
  if (!quotient) throw IdentityFailure("a_l identity: LHS - phi is not divisible by p");
  IntVector shifted = *quotient;
  if (shifted.size() == 0) shifted = IntVector::Zero(1);
  shifted(0) -= 1;
  const auto a = poly::divide_one_minus_z<Integer>(shifted);
  if (!a) throw IdentityFailure("a_l identity: quotient minus 1 is not divisible by 1 - z");
  std::vector<Integer> out(a->data(), a->data() + a->size());
  if (!check_identity_a(group, l, out)) {
    throw IdentityFailure("a_l identity: recomputed right-hand side disagrees");
  }
  return out;
}

bool check_identity_a(const GroupSpec& group, std::int64_t l, const std::vector<Integer>& a_l) {
  require_level(group, l);
  IntVector a(static_cast<Index>(a_l.size()));
  for (std::size_t i = 0; i < a_l.size(); ++i) a(static_cast<Index>(i)) = a_l[i];
  IntVector one_minus_z(2);
  one_minus_z << 1, -1;
  IntVector unit = poly::mul<Integer>(one_minus_z, a);
  unit = poly::add<Integer>(unit, IntVector::Ones(1));
  const IntVector rhs = poly::add<Integer>(Integer(-group.p()) * unit, phi_coeffs(group));
  return poly::equal<Integer>(identity_lhs(group, l), rhs);
}

}  // namespace bu
