#include "ppfq/exceptional.hpp"

#include "ppfq/bounds.hpp"
#include "ppfq/intmath.hpp"

namespace ppfq {

std::string method_name(Method m) {
  switch (m) {
    case Method::Fact: return "FACT";
    case Method::Ext: return "EXT";
    case Method::Auto: return "AUTO";
  }
  return "?";
}

std::string status_name(Status s) { return s == Status::Exceptional ? "exceptional" : "non_exceptional"; }

Method parse_method(const std::string& text) {
  if (text == "fact" || text == "FACT") return Method::Fact;
  if (text == "ext" || text == "EXT") return Method::Ext;
  if (text == "auto" || text == "AUTO") return Method::Auto;
  fail(ErrorKind::InvalidArgument, "unknown method '" + text + "'");
}

ExtensionTestPlan plan_extension_test(std::size_t n, const Field& field) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "extension test needs degree at least 2");
  ExtensionTestPlan plan;
  plan.n = n;
  plan.q = field.q();
  if (n >= 4) plan.bound = closed_form_bound(static_cast<std::int64_t>(n));
  for (unsigned m = static_cast<unsigned>(n);; ++m) {
    if (!is_prime(m)) continue;
    if (plan.bound) {
      auto qm = checked_pow(field.q(), m);
      if (qm && *qm <= static_cast<std::uint64_t>(*plan.bound)) continue;
    }
    plan.m = m;
    return plan;
  }
}

ExceptionalityVerdict is_exceptional(const UniPoly& f, Method method) {
  if (f.is_constant()) fail(ErrorKind::ConstantInput, "exceptionality needs a non-constant polynomial");
  ExceptionalityVerdict out;
  auto dec = pth_decompose(f);
  out.f_core = dec.f_core;
  out.t = dec.t;

  if (method == Method::Ext) {
    out.method = Method::Ext;
    auto plan = plan_extension_test(*f.degree(), f.field());
    out.plan = plan;
    auto verdict = is_pp_over_extension(f, plan.m);
    out.extension = f.field().extension(plan.m);
    out.collision = verdict.collision;
    out.status = verdict.is_pp ? Status::Exceptional : Status::NonExceptional;
    return out;
  }

  out.method = Method::Fact;
  BiPoly fs = difference_quotient(dec.f_core);
  out.status = Status::Exceptional;
  if (fs.is_constant()) return out;
  for (const auto& [g, mult] : factor_bi(fs).factors) {
    auto v = is_absolutely_irreducible(g);
    out.factors.push_back({g, mult, v.absolutely_irreducible, v.splitting_degree});
    if (v.absolutely_irreducible && !out.witness_factor) {
      out.witness_factor = g;
      out.status = Status::NonExceptional;
    }
  }
  return out;
}

}  // namespace ppfq
