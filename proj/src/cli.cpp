#include "bu/cli.hpp"

#include "bu/bounds.hpp"
#include "bu/constructions.hpp"
#include "bu/cyclic_ring.hpp"
#include "bu/errors.hpp"
#include "bu/euler.hpp"
#include "bu/json_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bu {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct RepOptions {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> exps;
  std::vector<std::int64_t> profile;
  std::string rep_file;
};

struct Options {
  RepOptions rep;
  std::int64_t n = 0;
  std::int64_t j = 0;
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::vector<std::int64_t> u_exps;
  std::string locality = "integral";
  std::string output;
  std::string format = "json";
  std::string cert_file;
  bool meta = false;
};

void add_group_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.rep.p, "prime p")->required();
  cmd->add_option("--k", o.rep.k, "level k (group Z/p^(k+1))")->required();
}

void add_rep_options(CLI::App* cmd, Options& o, bool required = true) {
  cmd->add_option("--p", o.rep.p, "prime p");
  cmd->add_option("--k", o.rep.k, "level k (group Z/p^(k+1))");
  auto* exps = cmd->add_option("--exps", o.rep.exps, "tensor exponents t_i")->delimiter(',');
  auto* profile =
      cmd->add_option("--profile", o.rep.profile, "valuation profile m_0,...,m_k")->delimiter(',');
  auto* file = cmd->add_option("--rep", o.rep.rep_file, "representation JSON file");
  exps->excludes(profile)->excludes(file);
  profile->excludes(file);
  if (required) {
    cmd->callback([exps, profile, file, cmd] {
      if (exps->count() + profile->count() + file->count() == 0) {
        throw CLI::RequiredError("one of --exps, --profile, --rep");
      }
      if (file->count() == 0 &&
          (cmd->get_option("--p")->count() == 0 || cmd->get_option("--k")->count() == 0)) {
        throw CLI::RequiredError("--p and --k");
      }
    });
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return json::parse(buffer.str());
}

RepSpec load_rep(const RepOptions& o) {
  if (!o.rep_file.empty()) {
    try {
      return rep_from_json(read_json_file(o.rep_file));
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("malformed representation file: ") + e.what());
    }
  }
  const GroupSpec group = make_group(o.p, o.k);
  if (!o.profile.empty()) return rep_from_profile(group, o.profile);
  return make_rep(group, o.exps);
}

// Applies the subgroup restriction when m_k = 0 and records it in `out`.
RepSpec effective(const RepSpec& rep, json& out) {
  if (rep.has_top_level()) return rep;
  Reduction red = effective_reduction(rep);
  out["effective_k"] = red.k;
  return red.rep;
}

void require_positive(std::int64_t value, const char* name) {
  if (value < 1) throw InvalidInput(std::string(name) + " must be >= 1");
}

json cmd_delta(const Options& o) {
  const RepSpec rep = load_rep(o.rep);
  json out{{"profile", rep.profile()}};
  const RepSpec eff = effective(rep, out);
  out["delta"] = delta(eff);
  return out;
}

json cmd_bound(const Options& o) {
  if (o.r != 0) {
    require_positive(o.n, "--n");
    return to_json(corollary37_report(o.rep.p, o.rep.k, o.r, o.n));
  }
  require_positive(o.n, "--n");
  const RepSpec rep = load_rep(o.rep);
  json extra = json::object();
  const RepSpec eff = effective(rep, extra);
  json out = to_json(bounds_report(eff, o.n));
  out.update(extra);
  if (!o.u_exps.empty()) {
    const RepSpec u = make_rep(eff.group(), o.u_exps);
    const Corollary39Result c = corollary39_bound(u, eff);
    out["corollary39"] = {{"dim_u", u.dim()},
                          {"bound", c.bound ? json(*c.bound) : json(nullptr)},
                          {"gamma_order", integer_to_json(c.gamma_order)}};
  }
  return out;
}

json cmd_oracle(const Options& o) {
  require_positive(o.n, "--n");
  if (o.j < 0) throw InvalidInput("--j must be >= 0");
  const Locality locality = parse_locality(o.locality);
  const RepSpec rep = load_rep(o.rep);
  json out;
  const RepSpec eff = effective(rep, out);
  out["nonzero"] = lemma41_nonvanishing(EulerQuery{eff, o.n, o.j, locality});
  return out;
}

json cmd_scan(const Options& o) {
  require_positive(o.n, "--n");
  const Locality locality = parse_locality(o.locality);
  const Locality other = locality == Locality::integral ? Locality::p_local : Locality::integral;
  const RepSpec rep = load_rep(o.rep);
  json out;
  const RepSpec eff = effective(rep, out);
  const QuotientCtx ctx = make_quotient_ctx(eff.group(), o.n);
  const SharpnessScan main = sharpness_scan(eff, ctx, locality);
  const SharpnessScan alt = sharpness_scan(eff, ctx, other);
  const std::int64_t d = delta(eff);
  json rows = json::array();
  for (std::size_t j = 0; j < main.table.size(); ++j) {
    json row{{"j", j}, {"nonzero", static_cast<bool>(main.table[j])}};
    if (main.table[j] != alt.table[j]) row[std::string(to_string(other))] = static_cast<bool>(alt.table[j]);
    rows.push_back(std::move(row));
  }
  out["n"] = o.n;
  out["delta"] = d;
  out["locality"] = std::string(to_string(locality));
  out["j_max"] = main.j_max ? json(*main.j_max) : json(nullptr);
  out["j_max_predicted"] = o.n > d ? json(o.n - 1 - d) : json(nullptr);
  out["table"] = std::move(rows);
  return out;
}

json cmd_identity_a(const Options& o) {
  const GroupSpec group = make_group(o.rep.p, o.rep.k);
  return {{"a_l", integers_to_json(verify_identity_a(group, o.l))}};
}

json cmd_construct(const Options& o) {
  const RepSpec rep = load_rep(o.rep);
  json extra = json::object();
  const RepSpec eff = effective(rep, extra);
  const Theorem13Plan plan = plan_theorem13(eff);
  validate_certificate(plan.certificate);
  json out = to_json(plan);
  out.update(extra);
  if (o.output.empty()) {
    out["certificate"] = to_json(plan.certificate);
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw InvalidInput("cannot write '" + o.output + "'");
    file << to_json(plan.certificate).dump() << '\n';
    if (!file) throw InvalidInput("failed writing '" + o.output + "'");
    out["certificate_file"] = o.output;
  }
  return out;
}

json cmd_compare(const Options& o) {
  require_positive(o.n, "--n");
  const RepSpec rep = load_rep(o.rep);
  json extra = json::object();
  const RepSpec eff = effective(rep, extra);
  json out = to_json(compare_remark310(eff, o.n));
  out.update(extra);
  out["units"] = "real";
  return out;
}

json cmd_structure(const Options& o) {
  require_positive(o.n, "--n");
  const QuotientCtx ctx = make_quotient_ctx(make_group(o.rep.p, o.rep.k), o.n);
  const QuotientStructure s = quotient_invariants(ctx);
  return {{"N", ctx.group().order()},
          {"n", o.n},
          {"rank", ctx.rank()},
          {"invariant_factors", integers_to_json(ctx.invariant_factors())},
          {"free_rank", s.free_rank},
          {"torsion", integers_to_json(s.torsion)}};
}

std::string scalar_text(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

// Aligned text: scalars as "key  value" lines, arrays of objects as columns.
void render_table(const json& doc, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> lines;
  std::vector<std::pair<std::string, const json*>> tables;
  auto flatten = [&](auto&& self, const json& node, const std::string& prefix) -> void {
    for (const auto& [key, value] : node.items()) {
      const std::string name = prefix.empty() ? key : prefix + "." + key;
      if (value.is_object()) {
        self(self, value, name);
      } else if (value.is_array() && !value.empty() && value.front().is_object()) {
        tables.emplace_back(name, &value);
      } else {
        lines.emplace_back(name, scalar_text(value));
      }
    }
  };
  flatten(flatten, doc, "");
  std::size_t width = 0;
  for (const auto& [key, value] : lines) width = std::max(width, key.size());
  for (const auto& [key, value] : lines) {
    out << std::left << std::setw(static_cast<int>(width)) << key << "  " << value << '\n';
  }
  for (const auto& [name, rows] : tables) {
    std::vector<std::string> columns;
    for (const auto& row : *rows) {
      for (const auto& [key, value] : row.items()) {
        if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
      }
    }
    std::vector<std::size_t> widths;
    for (const auto& c : columns) {
      std::size_t w = c.size();
      for (const auto& row : *rows) {
        if (row.contains(c)) w = std::max(w, scalar_text(row[c]).size());
      }
      widths.push_back(w);
    }
    out << '\n' << name << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << std::left << std::setw(static_cast<int>(widths[i])) << columns[i]
          << (i + 1 < columns.size() ? "  " : "\n");
    }
    for (const auto& row : *rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        const std::string cell = row.contains(columns[i]) ? scalar_text(row[columns[i]]) : "-";
        out << std::left << std::setw(static_cast<int>(widths[i])) << cell
            << (i + 1 < columns.size() ? "  " : "\n");
      }
    }
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::ifstream in(o.cert_file, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + o.cert_file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  json report;
  int code = kExitOk;
  try {
    const json doc = json::parse(buffer.str());
    const Certificate cert = certificate_from_json(doc);
    const Endpoints e = validate_certificate(cert);
    report = {{"valid", true},
              {"group", {{"p", cert.group.p()}, {"kappa", cert.group.k() + 1}}},
              {"source", sphere_to_json(e.source)},
              {"target", sphere_to_json(e.target)}};
  } catch (const json::exception& e) {
    report = {{"valid", false}, {"path", "$"}, {"error", std::string("malformed JSON: ") + e.what()}};
    code = kExitFailed;
  } catch (const CertificateError& e) {
    report = {{"valid", false}, {"path", e.path()}, {"error", e.message()}};
    code = kExitFailed;
  }
  if (o.meta) report["meta"] = {{"tool", "bu"}, {"version", kVersion}};
  if (o.format == "table") {
    render_table(report, out);
  } else {
    out << report.dump() << '\n';
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Borsuk-Ulam bounds, Euler-class oracle and map certificates for Z/p^(k+1)",
               "bu"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--meta", o.meta, "include tool metadata in the output");

  auto* delta_cmd = app.add_subcommand("delta", "valuation profile and delta(V)");
  add_rep_options(delta_cmd, o);

  auto* bound_cmd = app.add_subcommand("bound", "zero-set bounds report");
  add_rep_options(bound_cmd, o, false);
  bound_cmd->add_option("--n", o.n, "complex dimension of the source sphere module")->required();
  bound_cmd->add_option("--r", o.r, "wreath-profile parameter r: closed-form fixed-point bound instead");
  bound_cmd->add_option("--u-exps", o.u_exps, "exponents of U: bound for maps S(U) -> S(V)")->delimiter(',');

  auto* oracle_cmd = app.add_subcommand("oracle", "Euler-class non-vanishing test");
  add_rep_options(oracle_cmd, o);
  oracle_cmd->add_option("--n", o.n, "truncation exponent")->required();
  oracle_cmd->add_option("--j", o.j, "power of 1 - z");
  oracle_cmd->add_option("--local", o.locality, "integral or p");

  auto* scan_cmd = app.add_subcommand("scan", "threshold table over j");
  add_rep_options(scan_cmd, o);
  scan_cmd->add_option("--n", o.n, "truncation exponent")->required();
  scan_cmd->add_option("--local", o.locality, "integral or p");

  auto* ident_cmd = app.add_subcommand("identity-a", "solve the a_l identity");
  add_group_options(ident_cmd, o);
  ident_cmd->add_option("--l", o.l, "level 0 <= l <= k")->required();

  auto* construct_cmd = app.add_subcommand("construct", "plan and certificate for S(n_0 L) -> S(V)");
  add_rep_options(construct_cmd, o);
  construct_cmd->add_option("-o,--output", o.output, "certificate output file");

  auto* verify_cmd = app.add_subcommand("verify", "validate a certificate file");
  verify_cmd->add_option("certificate", o.cert_file, "certificate JSON")->required();

  auto* compare_cmd = app.add_subcommand("compare", "comparison with earlier bounds");
  add_rep_options(compare_cmd, o);
  compare_cmd->add_option("--n", o.n, "complex dimension of the source sphere module")->required();

  auto* structure_cmd = app.add_subcommand("structure", "quotient group structure");
  add_group_options(structure_cmd, o);
  structure_cmd->add_option("--n", o.n, "truncation exponent")->required();

  for (auto* cmd : {delta_cmd, bound_cmd, oracle_cmd, scan_cmd, ident_cmd, construct_cmd,
                    verify_cmd, compare_cmd, structure_cmd}) {
    cmd->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_flag("--meta", o.meta, "include tool metadata in the output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalid;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (bound_cmd->parsed() && o.r == 0 && o.rep.exps.empty() && o.rep.profile.empty() &&
        o.rep.rep_file.empty()) {
      throw InvalidInput("bound needs a representation or --r");
    }
    json result;
    if (delta_cmd->parsed()) result = cmd_delta(o);
    else if (bound_cmd->parsed()) result = cmd_bound(o);
    else if (oracle_cmd->parsed()) result = cmd_oracle(o);
    else if (scan_cmd->parsed()) result = cmd_scan(o);
    else if (ident_cmd->parsed()) result = cmd_identity_a(o);
    else if (construct_cmd->parsed()) result = cmd_construct(o);
    else if (compare_cmd->parsed()) result = cmd_compare(o);
    else if (structure_cmd->parsed()) result = cmd_structure(o);
    if (o.meta) result["meta"] = {{"tool", "bu"}, {"version", kVersion}};
    if (o.format == "table") {
      render_table(result, out);
    } else {
      out << result.dump() << '\n';
    }
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ReductionRequired& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NoConstruction& e) {
    out << json{{"error", "no map constructed"}, {"detail", e.what()}}.dump() << '\n';
    return kExitFailed;
  } catch (const IdentityFailure& e) {
    err << "property failure: " << e.what() << '\n';
    return kExitFailed;
  } catch (const CertificateError& e) {
    err << "certificate rejected at " << e.path() << ": " << e.message() << '\n';
    return kExitFailed;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace bu
