#include "bu/cyclic_ring.hpp"

#include "bu/errors.hpp"

#include <string>

namespace bu {

CyclicPoly::CyclicPoly(const GroupSpec& group)
    : group_(group), coeffs_(IntVector::Zero(group.order())) {}

CyclicPoly::CyclicPoly(const GroupSpec& group, IntVector coeffs)
    : group_(group), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.order()) {
    throw InvalidInput("cyclic polynomial needs exactly N = " + std::to_string(group_.order()) +
                       " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

CyclicPoly CyclicPoly::one(const GroupSpec& group) { return monomial(group, 0); }

CyclicPoly CyclicPoly::monomial(const GroupSpec& group, std::int64_t e, const Integer& c) {
  CyclicPoly out(group);
  out.coeffs_(floor_mod(e, group.order())) = c;
  return out;
}

void CyclicPoly::require_same_group(const CyclicPoly& other) const {
  if (!(group_ == other.group_)) throw InvalidInput("cyclic polynomials over different groups");
}

CyclicPoly& CyclicPoly::operator+=(const CyclicPoly& other) {
  require_same_group(other);
  coeffs_ += other.coeffs_;
  return *this;
}

CyclicPoly& CyclicPoly::operator-=(const CyclicPoly& other) {
  require_same_group(other);
  coeffs_ -= other.coeffs_;
  return *this;
}

CyclicPoly& CyclicPoly::operator*=(const Integer& scalar) {
  coeffs_ *= scalar;
  return *this;
}

CyclicPoly& CyclicPoly::mul_one_minus_z_power(std::int64_t t) {
  const Index n = coeffs_.size();
  const Index shift = floor_mod(t, n);
  if (shift == 0) {
    coeffs_.setZero();
    return *this;
  }
  // coefficient i of z^t * a is a_{i - t}
  IntVector shifted(n);
  shifted.tail(n - shift) = coeffs_.head(n - shift);
  shifted.head(shift) = coeffs_.tail(shift);
  coeffs_ -= shifted;
  return *this;
}

CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b) { return a += b; }
CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b) { return a -= b; }
CyclicPoly operator-(CyclicPoly a) { return a *= Integer(-1); }
CyclicPoly operator*(const Integer& scalar, CyclicPoly a) { return a *= scalar; }

CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b) {
  if (!(a.group() == b.group())) throw InvalidInput("cyclic_mul: group mismatch");
  const Index n = a.size();
  IntVector out = IntVector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    // z^i * b rotates b by i places.
    out.tail(n - i) += a[i] * b.coeffs().head(n - i);
    out.head(i) += a[i] * b.coeffs().tail(i);
  }
  return CyclicPoly(a.group(), std::move(out));
}

CyclicPoly binomial_one_minus_z(const GroupSpec& group, std::int64_t n) {
  if (n < 0) throw InvalidInput("binomial_one_minus_z: negative exponent");
  IntVector coeffs = IntVector::Zero(group.order());
  Integer c = 1;  // C(n, i)
  for (std::int64_t i = 0; i <= n; ++i) {
    const Index slot = i % group.order();
    if (i % 2 == 0) {
      coeffs(slot) += c;
    } else {
      coeffs(slot) -= c;
    }
    c = c * (n - i) / (i + 1);
  }
  return CyclicPoly(group, std::move(coeffs));
}

std::string_view to_string(Locality locality) {
  return locality == Locality::integral ? "integral" : "p_local";
}

Locality parse_locality(std::string_view text) {
  if (text == "integral" || text == "none") return Locality::integral;
  if (text == "p_local" || text == "p-local" || text == "p") return Locality::p_local;
  throw InvalidInput("unknown locality '" + std::string(text) + "'");
}

QuotientCtx::QuotientCtx(GroupSpec group, std::int64_t n, IntMatrix generators,
                         SmithForm<Integer> form)
    : group_(group), n_(n), generators_(std::move(generators)), normal_form_(std::move(form)) {
  p_parts_.reserve(normal_form_.factors.size());
  for (const auto& d : normal_form_.factors) {
    Integer part = 1;
    Integer rest = d;
    while (rest % group_.p() == 0) {
      rest /= group_.p();
      part *= group_.p();
    }
    p_parts_.push_back(std::move(part));
  }
}

bool QuotientCtx::contains(const IntVector& x, Locality locality) const {
  if (x.size() != group_.order()) throw InvalidInput("membership: vector length mismatch");
  const IntMatrix& u = normal_form_.left;
  const Index r = rank();
  // Coordinates beyond the rank must vanish exactly; check those first since
  // they fail fastest for classes outside the rational span.
  for (Index i = r; i < u.rows(); ++i) {
    if (u.row(i).dot(x) != 0) return false;
  }
  const auto& divisors = locality == Locality::integral ? normal_form_.factors : p_parts_;
  for (Index i = 0; i < r; ++i) {
    const auto& d = divisors[static_cast<std::size_t>(i)];
    if (d == 1) continue;
    if (u.row(i).dot(x) % d != 0) return false;
  }
  return true;
}

QuotientCtx make_quotient_ctx(const GroupSpec& group, std::int64_t n) {
  if (n < 1) throw InvalidInput("quotient context needs n >= 1, got " + std::to_string(n));
  if (group.order() > kMaxDenseOrder) {
    throw InvalidInput("group order " + std::to_string(group.order()) +
                       " too large for a dense relation lattice");
  }
  const CyclicPoly g = binomial_one_minus_z(group, n);
  const Index size = group.order();
  IntMatrix generators(size, size);
  for (Index i = 0; i < size; ++i) {
    generators.col(i) = cyclic_mul(CyclicPoly::monomial(group, i), g).coeffs();
  }
  SmithForm<Integer> form = smith_form<Integer>(generators);
  return QuotientCtx(group, n, std::move(generators), std::move(form));
}

bool is_zero_in_quotient(const CyclicPoly& x, const QuotientCtx& ctx, Locality locality) {
  if (!(x.group() == ctx.group())) throw InvalidInput("is_zero_in_quotient: group mismatch");
  return ctx.contains(x.coeffs(), locality);
}

QuotientStructure quotient_invariants(const QuotientCtx& ctx) {
  QuotientStructure out{ctx.group().order() - ctx.rank(), {}};
  for (const auto& d : ctx.invariant_factors()) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::shared_ptr<const QuotientCtx> QuotientCache::get(std::int64_t n) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = contexts_.find(n); it != contexts_.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is discarded.
  auto ctx = std::make_shared<const QuotientCtx>(make_quotient_ctx(group_, n));
  std::lock_guard lock(mutex_);
  return contexts_.emplace(n, std::move(ctx)).first->second;
}

}  // namespace bu
