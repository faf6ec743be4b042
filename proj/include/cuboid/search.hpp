#pragma once

/*
 * Bounded sweep over seed points, same-parity multiples (k, m) and
 * parametrizations.
 *
 * The job is expanded into an ordered task list, one task per
 * (seed, k, m, parametrization), sorted by (N, seed position, k, m,
 * parametrization). Tasks share nothing; workers pull task indices from an
 * atomic counter and results are released to the sink strictly in task
 * order, so output is identical for any worker count.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/cuboid.hpp"
#include "cuboid/curve.hpp"

namespace cuboid {

enum class Parity { odd, even, both };

std::string_view to_string(Parity p);
std::optional<Parity> parse_parity(std::string_view name);

struct SearchJob {
  std::vector<CurvePoint> seeds;
  std::int64_t max_multiple = 2;
  Parity parity = Parity::both;
  std::vector<Parametrization> parametrizations{kAllParametrizations.begin(), kAllParametrizations.end()};
  std::size_t height_limit = 200;

  /// Throws Error(invalid_seed) for an off-curve or trivial seed and
  /// Error(trivial_input) for k_max < 2 or height_limit < 1.
  void validate() const;
};

enum class RecordStatus { ok, truncated, skipped };

std::string_view to_string(RecordStatus s);

struct SearchRecord {
  Integer N;
  std::int64_t k = 0;
  std::int64_t m = 0;
  /// Unset only for the per-seed "no same-parity pairs" skip record.
  std::optional<Parametrization> parametrization;
  RecordStatus status = RecordStatus::ok;
  /// Present for ok records; omitted once digits exceeds the height limit.
  std::optional<Cuboid> cuboid;
  /// The pair the cuboid was built from (ok and truncated records).
  std::optional<Rational> X, Z;
  bool pc = false;
  std::size_t digits = 0;
  std::string skip_reason;
};

struct SearchOptions {
  unsigned workers = 1;
  /// Number of leading tasks already recorded by an earlier run.
  std::size_t resume_from = 0;
};

/// Number of tasks the job expands to (the record count of a full run).
std::size_t task_count(const SearchJob& job);

/// Identity of one task; record i of a full run carries key i.
struct TaskKey {
  Integer N;
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::optional<Parametrization> parametrization;

  friend bool operator==(const TaskKey&, const TaskKey&) = default;
};

std::vector<TaskKey> task_keys(const SearchJob& job);
TaskKey key_of(const SearchRecord& record);

/// Runs the job, handing every record to `sink` in deterministic order from
/// a single thread. Returns the number of records emitted.
std::size_t run_search(const SearchJob& job, const SearchOptions& options,
                       const std::function<void(const SearchRecord&)>& sink);

/// Convenience: collect every record.
std::vector<SearchRecord> run_search(const SearchJob& job, unsigned workers = 1);

/// Maximum decimal length among the six integer entries.
std::size_t cuboid_digits(const Cuboid& cuboid);

/// (k, m_prev, m) triples where the invariant cuboid's digit count drops as
/// m grows for fixed k on one seed. Telemetry only.
struct HeightDrop {
  Integer N;
  std::int64_t k, m_prev, m;
  std::size_t digits_prev, digits;
};
std::vector<HeightDrop> height_drops(const std::vector<SearchRecord>& records);

}  // namespace cuboid
