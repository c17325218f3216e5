#include "bu/constructions.hpp"
#include "bu/errors.hpp"
#include "bu/integer.hpp"

#include <set>
#include <string>

namespace bu {

using nlohmann::json;

namespace {

std::int64_t read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw CertificateError(path, "expected an integer");
  return j.get<std::int64_t>();
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw CertificateError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw CertificateError(path, std::string("missing field '") + key + "'");
  return *it;
}

void only_fields(const json& obj, std::initializer_list<const char*> keys, const std::string& path) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw CertificateError(path, "unexpected field '" + key + "'");
  }
}

GroupSpec read_group(const json& j, const std::string& path) {
  only_fields(j, {"p", "kappa"}, path);
  const std::int64_t p = read_int(field(j, "p", path), path + ".p");
  const std::int64_t kappa = read_int(field(j, "kappa", path), path + ".kappa");
  if (kappa < 1) throw CertificateError(path + ".kappa", "kappa must be >= 1");
  try {
    return make_group(p, kappa - 1);
  } catch (const InvalidInput& e) {
    throw CertificateError(path, e.what());
  }
}

// Claimed spheres must be written canonically: strictly increasing exponents
// in [1, N-1] with positive multiplicities.
SphereType read_sphere(const json& j, const GroupSpec& group, const std::string& path,
                       bool allow_empty = false) {
  if (!j.is_array()) throw CertificateError(path, "expected an array of [multiplicity, exponent]");
  std::vector<Summand> summands;
  std::int64_t previous = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2) throw CertificateError(at, "expected [multiplicity, exponent]");
    const std::int64_t a = read_int(pair[0], at + "[0]");
    const std::int64_t u = read_int(pair[1], at + "[1]");
    if (a < 1) throw CertificateError(at, "multiplicity must be positive");
    if (u < 1 || u >= group.order()) throw CertificateError(at, "exponent outside [1, N-1]");
    if (u <= previous) throw CertificateError(at, "summands not in canonical order");
    previous = u;
    summands.push_back({a, u});
  }
  if (summands.empty() && !allow_empty) throw CertificateError(path, "empty sphere");
  return make_sphere(group, summands);
}

Certificate read_node(const json& j, const std::string& path) {
  if (!j.is_object()) throw CertificateError(path, "expected an object");
  only_fields(j, {"group", "kind", "params", "children", "source", "target"}, path);
  const GroupSpec group = read_group(field(j, "group", path), path + ".group");
  const json& kind_json = field(j, "kind", path);
  if (!kind_json.is_string()) throw CertificateError(path + ".kind", "expected a string");
  CertKind kind;
  try {
    kind = parse_cert_kind(kind_json.get<std::string>());
  } catch (const InvalidInput& e) {
    throw CertificateError(path + ".kind", e.what());
  }

  const json& prm = field(j, "params", path);
  const std::string ppath = path + ".params";
  if (!prm.is_object()) throw CertificateError(ppath, "expected an object");
  CertParams params = NoParams{};
  switch (kind) {
    case CertKind::identity:
      only_fields(prm, {"sphere"}, ppath);
      params = IdentityParams{read_sphere(field(prm, "sphere", ppath), group, ppath + ".sphere")};
      break;
    case CertKind::inclusion:
      only_fields(prm, {"base", "extra"}, ppath);
      params = InclusionParams{
          read_sphere(field(prm, "base", ppath), group, ppath + ".base"),
          read_sphere(field(prm, "extra", ppath), group, ppath + ".extra", true)};
      break;
    case CertKind::power:
      only_fields(prm, {"s", "t"}, ppath);
      params = PowerParams{read_int(field(prm, "s", ppath), ppath + ".s"),
                           read_int(field(prm, "t", ppath), ppath + ".t")};
      break;
    case CertKind::stolz_meyer:
      only_fields(prm, {"d"}, ppath);
      params = StolzMeyerParams{read_int(field(prm, "d", ppath), ppath + ".d")};
      break;
    default:
      only_fields(prm, {}, ppath);
      break;
  }

  const json& kids = field(j, "children", path);
  if (!kids.is_array()) throw CertificateError(path + ".children", "expected an array");
  std::vector<Certificate> children;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    children.push_back(read_node(kids[i], path + ".children[" + std::to_string(i) + "]"));
  }
  SphereType source = read_sphere(field(j, "source", path), group, path + ".source");
  SphereType target = read_sphere(field(j, "target", path), group, path + ".target");
  return Certificate{kind, group, std::move(params), std::move(children), std::move(source),
                     std::move(target)};
}

}  // namespace

json sphere_to_json(const SphereType& sphere) {
  json out = json::array();
  for (const auto& s : sphere.summands()) out.push_back({s.multiplicity, s.exponent});
  return out;
}

json to_json(const Certificate& cert) {
  json params = json::object();
  if (const auto* id = std::get_if<IdentityParams>(&cert.params)) {
    params["sphere"] = sphere_to_json(id->sphere);
  } else if (const auto* inc = std::get_if<InclusionParams>(&cert.params)) {
    params["base"] = sphere_to_json(inc->base);
    params["extra"] = sphere_to_json(inc->extra);
  } else if (const auto* pw = std::get_if<PowerParams>(&cert.params)) {
    params["s"] = pw->s;
    params["t"] = pw->t;
  } else if (const auto* sm = std::get_if<StolzMeyerParams>(&cert.params)) {
    params["d"] = sm->d;
  }
  json children = json::array();
  for (const auto& c : cert.children) children.push_back(to_json(c));
  return json{{"group", {{"p", cert.group.p()}, {"kappa", cert.group.k() + 1}}},
              {"kind", std::string(to_string(cert.kind))},
              {"params", std::move(params)},
              {"children", std::move(children)},
              {"source", sphere_to_json(cert.source)},
              {"target", sphere_to_json(cert.target)}};
}

json to_json(const Theorem13Plan& plan) {
  json levels = json::array();
  for (std::size_t l = 0; l < plan.levels.size(); ++l) {
    levels.push_back({{"l", l}, {"n_l", plan.levels[l].n}, {"q_l", plan.levels[l].q}});
  }
  const GroupSpec& g = plan.rep.group();
  return json{{"p", g.p()},
              {"k", g.k()},
              {"profile", plan.rep.profile()},
              {"levels", std::move(levels)},
              {"n0", plan.source_dim},
              {"c_achieved", plan.c_achieved},
              {"c_worst", worst_case_c(g.p(), g.k())},
              {"c_lower", g.power(g.k()) - 1},
              {"unit_adjusted", plan.unit_adjusted},
              {"source", sphere_to_json(plan.certificate.source)},
              {"target", sphere_to_json(plan.certificate.target)}};
}

Certificate certificate_from_json(const json& j) { return read_node(j, "$"); }

}  // namespace bu
