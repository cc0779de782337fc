#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "curvegen/decision.hpp"
#include "curvegen/dsl.hpp"
#include "curvegen/error.hpp"
#include "curvegen/gentime.hpp"

namespace curvegen {

struct Invariants {
  std::int64_t total_rank = 0;
  /// Sum of the degrees of all pieces, torsion lengths included.
  std::int64_t total_degree = 0;
  std::int64_t torsion_length = 0;
  ExtendedSlope mu_max = Rational(0);
  ExtendedSlope mu_min = Rational(0);
  Classification classification{Support::LocallyFree, std::nullopt};
};

Invariants invariants(const FormalObject& object);

struct AnalyzeResult {
  Invariants invariants;
  bool is_generator = false;
  Verdict classical;
  GenTimeBound gentime;
};

struct PairingResult {
  std::int64_t euler_characteristic = 0;
};

struct FaltingsResult {
  OrthogonalClass orthogonal;
};

using QueryOutcome = std::variant<std::monostate, AnalyzeResult, PairingResult, SemiorthogonalityResult, FaltingsResult>;

struct QueryResult {
  dsl::Query query;
  QueryOutcome outcome;
  /// Set instead of an outcome when the engine rejected the query.
  std::optional<std::string> error;
  std::optional<ErrorCode> error_code;
};

struct Report {
  Curve curve{0};
  std::vector<QueryResult> queries;

  bool has_errors() const;
};

/// Evaluates every query in order. Engine errors are recorded on the query
/// that raised them; the other queries still run.
Report run(const dsl::AnalysisRequest& request);

/// One JSON document, keys in a fixed order; see docs/report-format.md.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace curvegen
