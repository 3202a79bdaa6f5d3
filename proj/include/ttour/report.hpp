#pragma once

#include "ttour/algorithms.hpp"
#include "ttour/analysis.hpp"
#include "ttour/instance_io.hpp"
#include "ttour/oracle.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace ttour {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitSizeLimit = 4;

json lp_report(const Instance& inst, const LpSolution& lp);
json decompose_report(const Instance& inst, const LpSolution& lp, const TreeCombination& combination);
json cuts_report(const Instance& inst, const PipelineResult& pipeline);
json tjoin_report(const Instance& inst, VertexSet targets, const EdgeVector& costs, const JoinResult& join);

/// `algorithm` empty means the combined choice.
json solve_report(const Instance& inst, const PipelineResult& pipeline, std::optional<Algorithm> algorithm);
json verify_report(const Instance& inst, const PipelineResult& pipeline, const CertificateReport& report);
json oracle_report(const Instance& inst, const OracleResult& oracle, const PipelineResult& pipeline);

/// cost / lp_value, or null when the LP value is zero.
json ratio_json(const Rational& cost, const Rational& lp_value);

struct BatchOptions {
  /// Instance directory; when empty, instances come from the generator.
  std::optional<std::filesystem::path> directory;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t n_min = 3;
  std::size_t n_max = 6;
  double density = 0.4;
  long max_cost = 10;
  std::size_t jobs = 1;
  /// Where a failing instance is written for replay.
  std::filesystem::path replay_dir = ".";
};

struct BatchOutcome {
  json report;
  int exit_code = kExitOk;
};

/// Runs the combined algorithm and every certificate on each instance, plus
/// the oracle when the instance is small enough. Stops at the first failing
/// instance in input order and serializes it to replay_dir.
BatchOutcome run_batch(const BatchOptions& options);

/// Options for instance `index` of a generated batch: n uniform in
/// [n_min, n_max], |T| uniform among the even sizes up to n.
GeneratorOptions batch_instance_options(const BatchOptions& options, std::size_t index);

} // namespace ttour
