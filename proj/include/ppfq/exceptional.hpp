#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppfq/factor.hpp"
#include "ppfq/pptest.hpp"

namespace ppfq {

enum class Method { Fact, Ext, Auto };
enum class Status { Exceptional, NonExceptional };

std::string method_name(Method m);
std::string status_name(Status s);
Method parse_method(const std::string& text);

struct ExtensionTestPlan {
  unsigned m = 0;
  std::size_t n = 0;
  std::uint64_t q = 0;
  /// Closed-form bound the extension order must exceed; absent for n < 4.
  std::optional<std::int64_t> bound;
};

struct FactorSummary {
  BiPoly factor;
  unsigned multiplicity = 1;
  bool absolutely_irreducible = true;
  unsigned splitting_degree = 1;
};

struct ExceptionalityVerdict {
  Status status = Status::Exceptional;
  Method method = Method::Fact;
  UniPoly f_core;
  unsigned t = 0;
  // FACT
  std::vector<FactorSummary> factors;
  std::optional<BiPoly> witness_factor;
  // EXT
  std::optional<ExtensionTestPlan> plan;
  std::optional<Field> extension;
  std::optional<std::pair<Elem, Elem>> collision;
};

ExtensionTestPlan plan_extension_test(std::size_t n, const Field& field);
ExceptionalityVerdict is_exceptional(const UniPoly& f, Method method = Method::Auto);

}  // namespace ppfq
