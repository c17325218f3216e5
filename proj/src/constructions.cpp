#include "bu/constructions.hpp"

#include "bu/errors.hpp"
#include "bu/integer.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace bu {

namespace {

std::string child_path(const std::string& path, std::size_t i) {
  return path + ".children[" + std::to_string(i) + "]";
}

std::string describe(const SphereType& sphere) {
  std::string out = "S(";
  for (std::size_t i = 0; i < sphere.summands().size(); ++i) {
    const auto& s = sphere.summands()[i];
    if (i > 0) out += " + ";
    out += std::to_string(s.multiplicity) + "L^" + std::to_string(s.exponent);
  }
  return out + ") over Z/" + std::to_string(sphere.group().order());
}

GroupSpec raise_level(const GroupSpec& group) { return make_group(group.p(), group.k() + 1); }

// Typing rules shared by the builders and the validator. `path` is used only
// for diagnostics.
Endpoints apply_rule(CertKind kind, const GroupSpec& group, const CertParams& params,
                     const std::vector<Endpoints>& kids, const std::vector<GroupSpec>& kid_groups,
                     const std::string& path) {
  auto fail = [&](const std::string& message) -> CertificateError {
    return CertificateError(path, std::string(to_string(kind)) + ": " + message);
  };
  auto expect_children = [&](std::size_t lo, std::size_t hi) {
    if (kids.size() < lo || kids.size() > hi) {
      throw fail("unexpected number of children (" + std::to_string(kids.size()) + ")");
    }
  };
  auto expect_params = [&]<typename P>(const P*) -> const P& {
    const P* p = std::get_if<P>(&params);
    if (p == nullptr) throw fail("parameters do not match the node kind");
    return *p;
  };
  auto same_group_children = [&]() {
    for (std::size_t i = 0; i < kid_groups.size(); ++i) {
      if (!(kid_groups[i] == group)) {
        throw fail("child " + std::to_string(i) + " lives over a different group");
      }
    }
  };
  auto lowered_child = [&]() {
    if (group.k() < 1 || !(kid_groups[0] == make_group(group.p(), group.k() - 1))) {
      throw fail("child must live over Z/p^(kappa-1)");
    }
  };

  switch (kind) {
    case CertKind::identity: {
      expect_children(0, 0);
      const auto& prm = expect_params(static_cast<const IdentityParams*>(nullptr));
      if (!(prm.sphere.group() == group)) throw fail("sphere over a different group");
      if (prm.sphere.dim() < 1) throw fail("empty sphere");
      return {prm.sphere, prm.sphere};
    }
    case CertKind::inclusion: {
      expect_children(0, 0);
      const auto& prm = expect_params(static_cast<const InclusionParams*>(nullptr));
      if (!(prm.base.group() == group) || !(prm.extra.group() == group)) {
        throw fail("sphere over a different group");
      }
      if (prm.base.dim() < 1) throw fail("empty sphere");
      return {prm.base, direct_sum(prm.base, prm.extra)};
    }
    case CertKind::power: {
      expect_children(0, 0);
      const auto& prm = expect_params(static_cast<const PowerParams*>(nullptr));
      const std::int64_t order = group.order();
      if (prm.s < 1 || prm.s >= order) throw fail("source exponent outside [1, N-1]");
      if (prm.t < 1) throw fail("power must be positive");
      const std::int64_t image =
          static_cast<std::int64_t>((static_cast<__int128>(prm.s) * prm.t) % order);
      if (image == 0) throw fail("t*s = 0 mod N");
      return {single_sphere(group, 1, prm.s), single_sphere(group, 1, image)};
    }
    case CertKind::stolz_meyer: {
      expect_children(0, 0);
      const auto& prm = expect_params(static_cast<const StolzMeyerParams*>(nullptr));
      if (group.k() != 1) throw fail("defined only over Z/p^2 (kappa = 2)");
      if (prm.d <= 2) throw fail("requires d > 2");
      return {single_sphere(group, group.p() * (prm.d - 2), 1),
              single_sphere(group, prm.d, group.p())};
    }
    case CertKind::join: {
      expect_children(2, SIZE_MAX);
      expect_params(static_cast<const NoParams*>(nullptr));
      same_group_children();
      Endpoints out = kids.front();
      for (std::size_t i = 1; i < kids.size(); ++i) {
        out.source = direct_sum(out.source, kids[i].source);
        out.target = direct_sum(out.target, kids[i].target);
      }
      return out;
    }
    case CertKind::compose: {
      expect_children(2, 2);
      expect_params(static_cast<const NoParams*>(nullptr));
      same_group_children();
      const Endpoints& g = kids[0];
      const Endpoints& f = kids[1];
      if (!(f.target == g.source)) {
        throw fail("inner target " + describe(f.target) + " != outer source " +
                   describe(g.source));
      }
      return {f.source, g.target};
    }
    case CertKind::wreath_power: {
      expect_children(1, 1);
      expect_params(static_cast<const NoParams*>(nullptr));
      lowered_child();
      const GroupSpec& inner = kid_groups[0];
      if (inner.k() < 1) throw fail("child must live over Z/p^kappa with kappa >= 2");
      const auto& src = kids[0].source.summands();
      const auto& tgt = kids[0].target.summands();
      if (src.size() != 1 || src[0].exponent != 1) throw fail("child source must be r L");
      if (tgt.size() != 1 || tgt[0].exponent != inner.p()) {
        throw fail("child target must be s L^p");
      }
      return {single_sphere(group, group.p() * src[0].multiplicity, 1),
              single_sphere(group, group.p() * tgt[0].multiplicity, group.p())};
    }
    case CertKind::inflate: {
      expect_children(1, 1);
      expect_params(static_cast<const NoParams*>(nullptr));
      lowered_child();
      auto lift = [&](const SphereType& sphere) {
        std::vector<Summand> out;
        for (const auto& s : sphere.summands()) {
          out.push_back({s.multiplicity, s.exponent * group.p()});
        }
        return make_sphere(group, out);
      };
      return {lift(kids[0].source), lift(kids[0].target)};
    }
  }
  throw fail("unknown node kind");
}

Endpoints infer(const Certificate& cert, const std::string& path) {
  std::vector<Endpoints> kids;
  std::vector<GroupSpec> kid_groups;
  kids.reserve(cert.children.size());
  for (std::size_t i = 0; i < cert.children.size(); ++i) {
    kids.push_back(infer(cert.children[i], child_path(path, i)));
    kid_groups.push_back(cert.children[i].group);
  }
  Endpoints derived = [&] {
    try {
      return apply_rule(cert.kind, cert.group, cert.params, kids, kid_groups, path);
    } catch (const InvalidInput& e) {
      throw CertificateError(path, e.what());
    }
  }();
  if (!(derived.source == cert.source)) {
    throw CertificateError(path, "claimed source " + describe(cert.source) +
                                     " but typing rules give " + describe(derived.source));
  }
  if (!(derived.target == cert.target)) {
    throw CertificateError(path, "claimed target " + describe(cert.target) +
                                     " but typing rules give " + describe(derived.target));
  }
  return derived;
}

Certificate assemble(CertKind kind, const GroupSpec& group, CertParams params,
                     std::vector<Certificate> children) {
  std::vector<Endpoints> kids;
  std::vector<GroupSpec> kid_groups;
  for (const auto& c : children) {
    kids.push_back({c.source, c.target});
    kid_groups.push_back(c.group);
  }
  Endpoints e = apply_rule(kind, group, params, kids, kid_groups, "$");
  return Certificate{kind, group, std::move(params), std::move(children), std::move(e.source),
                     std::move(e.target)};
}

}  // namespace

std::int64_t SphereType::dim() const noexcept {
  std::int64_t total = 0;
  for (const auto& s : summands_) total += s.multiplicity;
  return total;
}

SphereType make_sphere(const GroupSpec& group, const std::vector<Summand>& summands) {
  std::map<std::int64_t, std::int64_t> merged;
  for (const auto& s : summands) {
    if (s.multiplicity < 0) throw InvalidInput("negative multiplicity in sphere type");
    const std::int64_t e = floor_mod(s.exponent, group.order());
    if (e == 0) throw InvalidInput("sphere summand with trivial exponent");
    merged[e] += s.multiplicity;
  }
  std::vector<Summand> out;
  for (const auto& [e, a] : merged) {
    if (a > 0) out.push_back({a, e});
  }
  return SphereType(group, std::move(out));
}

SphereType single_sphere(const GroupSpec& group, std::int64_t multiplicity, std::int64_t exponent) {
  return make_sphere(group, {{multiplicity, exponent}});
}

SphereType direct_sum(const SphereType& a, const SphereType& b) {
  if (!(a.group() == b.group())) throw InvalidInput("direct sum over different groups");
  std::vector<Summand> all = a.summands();
  all.insert(all.end(), b.summands().begin(), b.summands().end());
  return make_sphere(a.group(), all);
}

SphereType sphere_of(const RepSpec& rep) {
  std::vector<Summand> summands;
  for (const auto t : rep.exponents()) summands.push_back({1, t});
  return make_sphere(rep.group(), summands);
}

std::string_view to_string(CertKind kind) {
  switch (kind) {
    case CertKind::identity: return "identity";
    case CertKind::inclusion: return "inclusion";
    case CertKind::power: return "power";
    case CertKind::stolz_meyer: return "stolz_meyer";
    case CertKind::join: return "join";
    case CertKind::compose: return "compose";
    case CertKind::wreath_power: return "wreath_power";
    case CertKind::inflate: return "inflate";
  }
  return "unknown";
}

CertKind parse_cert_kind(std::string_view text) {
  for (auto kind : {CertKind::identity, CertKind::inclusion, CertKind::power,
                    CertKind::stolz_meyer, CertKind::join, CertKind::compose,
                    CertKind::wreath_power, CertKind::inflate}) {
    if (to_string(kind) == text) return kind;
  }
  throw InvalidInput("unknown certificate node kind '" + std::string(text) + "'");
}

Endpoints validate_certificate(const Certificate& cert) { return infer(cert, "$"); }

Certificate identity_map(const SphereType& sphere) {
  return assemble(CertKind::identity, sphere.group(), IdentityParams{sphere}, {});
}

Certificate inclusion_map(const SphereType& base, const SphereType& extra) {
  return assemble(CertKind::inclusion, base.group(), InclusionParams{base, extra}, {});
}

Certificate power_map(const GroupSpec& group, std::int64_t s, std::int64_t t) {
  return assemble(CertKind::power, group, PowerParams{s, t}, {});
}

Certificate stolz_meyer_map(std::int64_t p, std::int64_t d) {
  return assemble(CertKind::stolz_meyer, make_group(p, 1), StolzMeyerParams{d}, {});
}

Certificate join_maps(std::vector<Certificate> maps) {
  if (maps.empty()) throw InvalidInput("join of no maps");
  if (maps.size() == 1) return std::move(maps.front());
  const GroupSpec group = maps.front().group;
  return assemble(CertKind::join, group, NoParams{}, std::move(maps));
}

Certificate compose_maps(Certificate g, Certificate f) {
  const GroupSpec group = g.group;
  std::vector<Certificate> children;
  children.push_back(std::move(g));
  children.push_back(std::move(f));
  return assemble(CertKind::compose, group, NoParams{}, std::move(children));
}

Certificate wreath_power_map(Certificate f) {
  const GroupSpec group = raise_level(f.group);
  std::vector<Certificate> children;
  children.push_back(std::move(f));
  return assemble(CertKind::wreath_power, group, NoParams{}, std::move(children));
}

Certificate inflate_map(Certificate f) {
  const GroupSpec group = raise_level(f.group);
  std::vector<Certificate> children;
  children.push_back(std::move(f));
  return assemble(CertKind::inflate, group, NoParams{}, std::move(children));
}

Certificate build_prop63(std::int64_t p, std::int64_t k, std::int64_t l, std::int64_t d) {
  if (k < 1) throw InvalidInput("build_prop63 needs k >= 1");
  if (l < 0 || l > k) throw InvalidInput("build_prop63 needs 0 <= l <= k");
  if (d <= 2 * l) throw InvalidInput("build_prop63 needs d > 2l");
  const GroupSpec group = make_group(p, k);
  if (l == 0) return identity_map(single_sphere(group, group.power(k) * d, 1));
  if (l == 1) {
    Certificate cert = stolz_meyer_map(p, d);
    for (std::int64_t level = 1; level < k; ++level) cert = wreath_power_map(std::move(cert));
    return cert;
  }
  return compose_maps(inflate_map(build_prop63(p, k - 1, l - 1, d)),
                      build_prop63(p, k, 1, d - 2 * (l - 1)));
}

std::int64_t worst_case_c(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (k < 0) throw InvalidInput("k must be non-negative");
  if (k == 0) return 0;
  return checked_pow(p, k) * (k + 2) * (k + 1) - (checked_pow(p, k + 1) - 1) / (p - 1);
}

Theorem13Plan plan_theorem13(const RepSpec& rep) {
  if (!rep.has_top_level()) {
    throw ReductionRequired("plan_theorem13 needs m_k != 0; apply effective_reduction first");
  }
  const GroupSpec& group = rep.group();
  const std::int64_t p = group.p();
  const std::int64_t k = group.k();
  const std::int64_t total = rep.weighted_dim();

  if (k == 0) {
    std::vector<Certificate> powers;
    bool adjusted = false;
    for (const auto t : rep.exponents()) {
      powers.push_back(power_map(group, 1, t));
      adjusted = adjusted || t != 1;
    }
    return Theorem13Plan{rep, {{rep.dim(), 0}}, rep.dim(), 0, adjusted,
                         join_maps(std::move(powers))};
  }

  std::vector<LevelSplit> levels;
  std::vector<Certificate> parts;
  std::vector<Summand> leftover;
  std::int64_t source_dim = 0;
  bool adjusted = false;
  for (std::int64_t l = 0; l <= k; ++l) {
    const std::int64_t m = rep.profile()[static_cast<std::size_t>(l)];
    const std::int64_t block = group.power(k - l);
    const std::int64_t lifted = group.power(l);
    std::vector<std::int64_t> exps;
    for (const auto t : rep.exponents()) {
      if (valuation(t, p) == l) exps.push_back(t);
    }
    if (m < block * (2 * l + 1)) {
      levels.push_back({0, m});
      for (const auto t : exps) leftover.push_back({1, t});
      continue;
    }
    // Smallest q >= 2l p^{k-l} with q = m mod p^{k-l}.
    const std::int64_t q = 2 * l * block + floor_mod(m - 2 * l * block, block);
    const std::int64_t n = (m - q) / block;
    levels.push_back({n, q});
    source_dim += group.power(k) * n;

    Certificate level = build_prop63(p, k, l, n + 2 * l);
    const std::int64_t used = block * (n + 2 * l);
    if (m > used) {
      Certificate widen = inclusion_map(level.target, single_sphere(group, m - used, lifted));
      level = compose_maps(std::move(widen), std::move(level));
    }
    if (std::any_of(exps.begin(), exps.end(), [&](std::int64_t t) { return t != lifted; })) {
      adjusted = true;
      std::vector<Certificate> powers;
      for (const auto t : exps) powers.push_back(power_map(group, lifted, t / lifted));
      level = compose_maps(join_maps(std::move(powers)), std::move(level));
    }
    parts.push_back(std::move(level));
  }
  if (source_dim == 0) {
    throw NoConstruction("no level satisfies m_l >= p^(k-l)(2l+1): no map constructed");
  }
  Certificate cert = join_maps(std::move(parts));
  if (!leftover.empty()) {
    Certificate widen = inclusion_map(cert.target, make_sphere(group, leftover));
    cert = compose_maps(std::move(widen), std::move(cert));
  }
  return Theorem13Plan{rep, std::move(levels), source_dim, total - source_dim, adjusted,
                       std::move(cert)};
}

ZeroSet theorem13_zero_set(const RepSpec& rep, std::int64_t n) {
  const Theorem13Plan plan = plan_theorem13(rep);
  if (n <= plan.source_dim) {
    throw InvalidInput("theorem13_zero_set needs n > n_0 = " + std::to_string(plan.source_dim));
  }
  return {2 * (n - plan.source_dim) - 1, plan.source_dim};
}

}  // namespace bu
