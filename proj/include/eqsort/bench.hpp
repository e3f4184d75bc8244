#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsort/datagen.hpp"
#include "eqsort/method.hpp"

namespace eqsort {

enum class BenchKind { timing, counting };

struct BenchRow {
  BenchKind kind = BenchKind::timing;
  MethodId method = MethodId::reference;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::optional<int> repeats;
  std::optional<double> mean_time_s;
  std::optional<double> mean_comparisons;
  std::optional<double> mean_swaps;

  bool operator==(const BenchRow&) const = default;
};

struct RatioRow {
  MethodId method = MethodId::reference;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<double> time_ratio;
  std::optional<double> comparison_ratio;
  std::optional<double> swap_ratio;
};

struct RatioResult {
  std::vector<RatioRow> rows;
  std::vector<std::string> errors;
};

struct BenchConfig {
  std::size_t n = 100000;
  std::vector<std::size_t> k_list = {2};
  std::size_t d = 50;
  int repeats = 3;
  std::vector<MethodId> methods;
  MethodId baseline = MethodId::dualpivot;
  std::uint64_t seed = 1;
  Domain domain = Domain::int64;
};

struct BenchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One timing cell: d arrays from derived seeds, one untimed warm-up sort,
// then `repeats` passes timing the loop over all d sorts (copies excluded),
// averaged per array and over repeats. Every output is order-checked.
BenchRow run_timing_cell(MethodId method, std::size_t n, std::size_t k, std::size_t d,
                         int repeats, std::uint64_t seed, Domain domain);

// One counting cell: same derived-seed arrays sorted once each under a
// counting context; means over d.
BenchRow run_counting_cell(MethodId method, std::size_t n, std::size_t k, std::size_t d,
                           std::uint64_t seed, Domain domain);

// Full methods x k grid, serial, deterministic order. `progress` (optional)
// receives one line per finished cell.
std::vector<BenchRow> run_grid(const BenchConfig& config, BenchKind kind,
                               std::ostream* progress = nullptr);

// Per-(n, k) element-wise division against the baseline method's row of the
// same kind; absent quantities stay absent. A missing baseline row yields an
// error entry instead of a RatioRow.
RatioResult compute_ratios(std::span<const BenchRow> rows, MethodId baseline);

// CSV schema:
//   kind,method,n,k,d,repeats,mean_time_s,mean_comparisons,mean_swaps
// Absent fields are empty; floats carry 6 significant digits; rows are
// sorted by (method, n, k).
void write_csv(std::span<const BenchRow> rows, std::ostream& out);
std::vector<BenchRow> read_csv(std::istream& in);

std::string format_g6(double v);

}  // namespace eqsort
