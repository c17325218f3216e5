#pragma once

#include "bu/group_rep.hpp"
#include "bu/integer.hpp"
#include "bu/smith.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

namespace bu {

/// Element of Z[z]/(z^N - 1): exactly N coefficients, index i <-> z^i.
class CyclicPoly {
 public:
  /// The zero element.
  explicit CyclicPoly(const GroupSpec& group);
  CyclicPoly(const GroupSpec& group, IntVector coeffs);

  static CyclicPoly one(const GroupSpec& group);
  /// c * z^(e mod N).
  static CyclicPoly monomial(const GroupSpec& group, std::int64_t e, const Integer& c = 1);

  const GroupSpec& group() const noexcept { return group_; }
  const IntVector& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](Index i) const { return coeffs_(i); }
  Index size() const noexcept { return coeffs_.size(); }

  bool is_zero() const { return coeffs_.isZero(); }
  /// Value at z = 1.
  Integer augmentation() const { return coeffs_.sum(); }

  CyclicPoly& operator+=(const CyclicPoly& other);
  CyclicPoly& operator-=(const CyclicPoly& other);
  CyclicPoly& operator*=(const Integer& scalar);

  /// In-place multiplication by (1 - z^t); O(N).
  CyclicPoly& mul_one_minus_z_power(std::int64_t t);

  friend bool operator==(const CyclicPoly& a, const CyclicPoly& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_group(const CyclicPoly& other) const;

  GroupSpec group_;
  IntVector coeffs_;
};

CyclicPoly operator+(CyclicPoly a, const CyclicPoly& b);
CyclicPoly operator-(CyclicPoly a, const CyclicPoly& b);
CyclicPoly operator-(CyclicPoly a);
CyclicPoly operator*(const Integer& scalar, CyclicPoly a);

/// Product with exponents folded mod N. Throws InvalidInput on group mismatch.
CyclicPoly cyclic_mul(const CyclicPoly& a, const CyclicPoly& b);
inline CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) { return cyclic_mul(a, b); }

/// (1 - z)^n folded mod z^N - 1.
CyclicPoly binomial_one_minus_z(const GroupSpec& group, std::int64_t n);

enum class Locality { integral, p_local };

std::string_view to_string(Locality locality);
/// Accepts "integral"/"none" and "p_local"/"p-local"/"p".
Locality parse_locality(std::string_view text);

/// The relation lattice of the ideal ((1 - z)^n) in Z[z]/(z^N - 1), with
/// its Smith normal form. Immutable once built.
class QuotientCtx {
 public:
  const GroupSpec& group() const noexcept { return group_; }
  std::int64_t n() const noexcept { return n_; }
  /// Column i is z^i (1 - z)^n.
  const IntMatrix& generators() const noexcept { return generators_; }
  const SmithForm<Integer>& normal_form() const noexcept { return normal_form_; }
  Index rank() const { return normal_form_.rank(); }
  const std::vector<Integer>& invariant_factors() const noexcept { return normal_form_.factors; }

  /// Lattice membership of a coefficient vector.
  bool contains(const IntVector& x, Locality locality) const;

 private:
  friend QuotientCtx make_quotient_ctx(const GroupSpec&, std::int64_t);
  QuotientCtx(GroupSpec group, std::int64_t n, IntMatrix generators, SmithForm<Integer> form);

  GroupSpec group_;
  std::int64_t n_;
  IntMatrix generators_;
  SmithForm<Integer> normal_form_;
  // p-part of each invariant factor.
  std::vector<Integer> p_parts_;
};

/// Largest group order for which dense lattices are assembled.
inline constexpr std::int64_t kMaxDenseOrder = 4096;

QuotientCtx make_quotient_ctx(const GroupSpec& group, std::int64_t n);

bool is_zero_in_quotient(const CyclicPoly& x, const QuotientCtx& ctx, Locality locality);

struct QuotientStructure {
  Index free_rank;
  /// Invariant factors greater than one.
  std::vector<Integer> torsion;
};

QuotientStructure quotient_invariants(const QuotientCtx& ctx);

/// Lazily built contexts for one group, shareable across threads.
class QuotientCache {
 public:
  explicit QuotientCache(const GroupSpec& group) : group_(group) {}

  const GroupSpec& group() const noexcept { return group_; }
  std::shared_ptr<const QuotientCtx> get(std::int64_t n);

 private:
  GroupSpec group_;
  std::mutex mutex_;
  std::map<std::int64_t, std::shared_ptr<const QuotientCtx>> contexts_;
};

}  // namespace bu
