#include "ppfq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "ppfq/bounds.hpp"
#include "ppfq/curvecheck.hpp"
#include "ppfq/exceptional.hpp"
#include "ppfq/intmath.hpp"
#include "ppfq/polyexpr.hpp"
#include "ppfq/search.hpp"

namespace ppfq {

namespace {

using Json = nlohmann::ordered_json;

struct FieldOptions {
  std::optional<std::uint64_t> p;
  std::optional<unsigned> r;
  std::optional<std::uint64_t> q;
  std::optional<std::string> modulus;
};

void add_field_options(CLI::App* cmd, FieldOptions& fo) {
  cmd->add_option("--p", fo.p, "characteristic");
  cmd->add_option("--r", fo.r, "extension degree over F_p");
  cmd->add_option("--q", fo.q, "field order p^r");
  cmd->add_option("--modulus", fo.modulus, "defining polynomial over F_p, e.g. \"x^2+6*x+3\"");
}

Field resolve_field(const FieldOptions& fo) {
  std::uint64_t p = 0;
  unsigned r = 1;
  if (fo.q) {
    auto root = prime_power_root(*fo.q);
    if (!root) fail(ErrorKind::NotPrimePower, std::to_string(*fo.q) + " is not a prime power");
    p = root->first;
    r = root->second;
    if (fo.p && *fo.p != p) fail(ErrorKind::InvalidArgument, "--p disagrees with --q");
    if (fo.r && *fo.r != r) fail(ErrorKind::InvalidArgument, "--r disagrees with --q");
  } else if (fo.p) {
    p = *fo.p;
    r = fo.r.value_or(1);
  } else {
    fail(ErrorKind::InvalidArgument, "a field needs --q or --p");
  }
  if (!fo.modulus) return Field::make(p, r);
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return Field::make(p, r, parse_modulus(*fo.modulus, p));
}

Json field_header(const Field& F) {
  Json h;
  h["p"] = F.p();
  h["r"] = F.r();
  h["q"] = F.q();
  h["modulus"] = print_int_poly(F.modulus());
  h["default_modulus"] = F.has_default_modulus();
  if (F.has_default_modulus() && !F.is_prime_field())
    h["note"] = "no --modulus given: using the default modulus " + print_int_poly(F.modulus()) +
                " (lexicographically smallest monic irreducible); g denotes its root class";
  return h;
}

Json inequality_json(const InequalityEval& e) {
  return Json{{"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds()}, {"holds_strictly", e.holds_strictly()}};
}

Json audit_json(const AdmissibleResult& a) {
  Json j;
  j["n"] = a.n;
  j["closed_form_bound"] = a.closed_form;
  j["q_max"] = a.q_max ? Json(*a.q_max) : Json(nullptr);
  j["q_max_strict"] = a.q_max_strict ? Json(*a.q_max_strict) : Json(nullptr);
  Json entries = Json::array();
  for (const auto& e : a.audit) {
    Json row{{"q", e.q}, {"reason", audit_reason_name(e.reason)}};
    if (e.inequality) row["inequality"] = inequality_json(*e.inequality);
    entries.push_back(row);
  }
  j["audit"] = entries;
  if (!a.note.empty()) j["discrepancy"] = a.note;
  return j;
}

Json collision_json(const Field& F, const std::optional<std::pair<Elem, Elem>>& c) {
  if (!c) return nullptr;
  return Json::array({F.format(c->first), F.format(c->second)});
}

Json verdict_json(const ExceptionalityVerdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  j["method"] = method_name(v.method);
  j["f_core"] = print(v.f_core);
  j["t"] = v.t;
  if (v.method == Method::Fact) {
    j["witness"] = v.witness_factor ? Json(print(*v.witness_factor)) : Json(nullptr);
    Json fs = Json::array();
    for (const auto& f : v.factors)
      fs.push_back({{"factor", print(f.factor)},
                    {"multiplicity", f.multiplicity},
                    {"absolutely_irreducible", f.absolutely_irreducible},
                    {"splitting_degree", f.splitting_degree}});
    j["factors"] = fs;
  } else {
    j["m"] = v.plan->m;
    j["bound"] = v.plan->bound ? Json(*v.plan->bound) : Json(nullptr);
    j["extension_q"] = v.extension->q();
    j["witness"] = v.collision ? collision_json(*v.extension, v.collision) : Json{{"permutes_extension_of_degree", v.plan->m}};
  }
  return j;
}

std::string tsv_bounds(const std::vector<BoundRow>& rows, const std::vector<AdmissibleResult>& audits) {
  std::ostringstream s;
  s << "n\tvzg\tcg\tthis_paper\n";
  for (const auto& r : rows) s << r.n << '\t' << r.vzg << '\t' << r.cg << '\t' << r.this_paper << '\n';
  for (const auto& a : audits) {
    s << "\nn\tq\treason\tlhs\trhs\n";
    for (const auto& e : a.audit) {
      s << a.n << '\t' << e.q << '\t' << audit_reason_name(e.reason);
      if (e.inequality) s << '\t' << e.inequality->lhs << '\t' << e.inequality->rhs;
      s << '\n';
    }
    s << "# n=" << a.n << " q_max=" << (a.q_max ? std::to_string(*a.q_max) : "none")
      << " q_max_strict=" << (a.q_max_strict ? std::to_string(*a.q_max_strict) : "none") << '\n';
    if (!a.note.empty()) s << "# " << a.note << '\n';
  }
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation polynomials over finite fields: bounds, tests and searches"};
  app.require_subcommand(1);
  std::string format = "json";
  unsigned shards = 1;
  FieldOptions fo;

  auto* bounds = app.add_subcommand("bounds", "bound comparison table and admissible-q audit");
  std::int64_t n_min = 4, n_max = 12;
  std::optional<std::int64_t> audit_n;
  bounds->add_option("--n-min", n_min);
  bounds->add_option("--n-max", n_max);
  bounds->add_option("--n", audit_n, "audit only this degree (default: every degree in the table)");
  bounds->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  auto* search = app.add_subcommand("search", "classify degree-n PPs up to linear equivalence");
  std::size_t n = 0;
  search->add_option("--n", n)->required();
  add_field_options(search, fo);
  search->add_option("--shards", shards);
  search->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* test_pp = app.add_subcommand("test-pp", "decide whether a polynomial permutes F_q or F_{q^m}");
  std::string poly;
  unsigned m = 1;
  test_pp->add_option("--poly", poly)->required();
  test_pp->add_option("--m", m, "extension degree to test over");
  add_field_options(test_pp, fo);
  test_pp->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* exc = app.add_subcommand("exceptional", "decide exceptionality");
  std::string method = "auto";
  exc->add_option("--poly", poly)->required();
  exc->add_option("--method", method)->check(CLI::IsMember({"fact", "ext", "auto"}));
  add_field_options(exc, fo);
  exc->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* count = app.add_subcommand("count-points", "count affine F_q-points of a plane curve");
  std::string curve;
  count->add_option("--curve", curve)->required();
  count->add_option("--shards", shards);
  add_field_options(count, fo);
  count->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* weil = app.add_subcommand("verify-weil", "compare a point count against the Weil interval");
  weil->add_option("--curve", curve)->required();
  weil->add_option("--shards", shards);
  add_field_options(weil, fo);
  weil->add_option("--format", format)->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Json report;
    if (*bounds) {
      auto rows = comparison_table(n_min, n_max);
      std::vector<AdmissibleResult> audits;
      if (audit_n) {
        audits.push_back(max_admissible_prime_power(*audit_n));
      } else {
        for (std::int64_t k = n_min; k <= n_max; ++k) audits.push_back(max_admissible_prime_power(k));
      }
      if (format == "tsv") {
        out << tsv_bounds(rows, audits);
        return kExitOk;
      }
      Json table = Json::array();
      for (const auto& r : rows) table.push_back({{"n", r.n}, {"vzg", r.vzg}, {"cg", r.cg}, {"this_paper", r.this_paper}});
      report["table"] = table;
      Json aj = Json::array();
      for (const auto& a : audits) aj.push_back(audit_json(a));
      report["admissible"] = aj;
    } else if (*search) {
      Field F = resolve_field(fo);
      auto rep = classify(n, F, shards);
      report["field"] = field_header(F);
      report["n"] = rep.n;
      report["q"] = rep.q;
      report["scanned"] = rep.candidates_scanned;
      report["pps_found"] = rep.pps_found.size();
      Json orbits = Json::array();
      for (const auto& o : rep.orbits) {
        Json oj{{"rep", print(o.rep)}, {"is_pp", o.is_pp}, {"status", status_name(o.verdict.status)}};
        oj["witness"] = o.verdict.witness_factor ? Json(print(*o.verdict.witness_factor)) : Json(nullptr);
        oj["members_found"] = o.members_found;
        orbits.push_back(oj);
      }
      report["orbits"] = orbits;
      report["non_exceptional_exists"] = rep.non_exceptional_exists;
    } else if (*test_pp) {
      Field F = resolve_field(fo);
      UniPoly f = parse_unipoly(poly, F);
      auto v = m == 1 ? is_pp(f) : is_pp_over_extension(f, m);
      report["field"] = field_header(F);
      report["poly"] = print(f);
      report["m"] = m;
      report["scanned_q"] = v.scanned_q;
      report["is_pp"] = v.is_pp;
      report["collision"] = m == 1 ? collision_json(F, v.collision) : collision_json(F.extension(m), v.collision);
      report["evaluations_used"] = v.evaluations_used;
    } else if (*exc) {
      Field F = resolve_field(fo);
      UniPoly f = parse_unipoly(poly, F);
      report["field"] = field_header(F);
      report["poly"] = print(f);
      if (F.q() <= kEnumerationLimit) report["is_pp"] = is_pp(f).is_pp;
      report["verdict"] = verdict_json(is_exceptional(f, parse_method(method)));
    } else if (*count) {
      Field F = resolve_field(fo);
      BiPoly c = parse_bipoly(curve, F);
      report["field"] = field_header(F);
      report["curve"] = print(c);
      report["count"] = count_points(c, shards);
    } else if (*weil) {
      Field F = resolve_field(fo);
      BiPoly c = parse_bipoly(curve, F);
      auto r = verify_weil(c, shards);
      report["field"] = field_header(F);
      report["curve"] = print(c);
      report["count"] = r.count;
      report["interval"] = {{"lo", r.interval.lo}, {"hi", r.interval.hi}, {"d", r.interval.d}, {"q", r.interval.q}};
      report["irreducible"] = r.irreducible;
      if (r.abs_irred) {
        report["absolutely_irreducible"] = r.abs_irred->absolutely_irreducible;
        report["splitting_degree"] = r.abs_irred->splitting_degree;
      } else {
        report["absolutely_irreducible"] = false;
      }
      report["within"] = r.within ? Json(*r.within) : Json("not-applicable");
    }
    out << report.dump(2) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    Json j{{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
    out << j.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return is_guard_error(e.kind()) ? kExitGuardError : kExitInputError;
  }
}

}  // namespace ppfq
