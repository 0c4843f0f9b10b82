#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sslab/bigint.hpp"
#include "sslab/supersat.hpp"

namespace sslab {

enum class SweepFamily { kGnmBalanced, kSplitT, kSplitTMinus1Perturbed };

const char* sweep_family_name(SweepFamily f);
std::optional<SweepFamily> parse_sweep_family(std::string_view name);

struct SweepConfig {
  int t = 2;
  Pattern pattern = Pattern::kKtt;
  std::int64_t m_start = 0;
  std::int64_t m_stop = 0;  // inclusive
  std::int64_t m_step = 1;
  std::int64_t samples = 1;
  std::uint64_t seed = 0;
  std::vector<SweepFamily> families;
  double budget = 1e9;  // refuse above this many estimated counting steps
  unsigned threads = 0;
};

struct SweepRow {
  SweepFamily family = SweepFamily::kGnmBalanced;
  std::int64_t m = 0;
  std::int64_t sample = 0;
  std::uint64_t n = 0;
  double lambda = 0.0;
  std::optional<double> split_lambda;
  bool above_threshold = false;
  BigInt count = 0;
  double count_over_mt = 0.0;
  double sharp_constant = 0.0;
  std::optional<double> expected;
};

/// One planned row: the host graph is built lazily by the runner.
struct SweepJob {
  SweepFamily family;
  std::int64_t m;
  std::int64_t sample;
  std::uint64_t n;  // vertex count of the host
};

/// Validates the config and lists the rows in output order. Deterministic
/// families contribute only sample 0.
std::vector<SweepJob> plan_sweep(const SweepConfig& cfg);

/// Sum over planned rows of C(n, t), the counting work estimate.
double sweep_work(const SweepConfig& cfg, const std::vector<SweepJob>& jobs);

Graph sweep_host(const SweepConfig& cfg, const SweepJob& job);

/// Runs every planned row on the worker pool. Rows come back in plan order.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const std::vector<SweepJob>& jobs);

inline constexpr const char* kSweepHeader = "# sslab-sweep v1";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Parses "start:stop:step" (step defaults to 1; a single value is a
/// one-point range).
bool parse_range(std::string_view text, std::int64_t& start, std::int64_t& stop, std::int64_t& step);

}  // namespace sslab
