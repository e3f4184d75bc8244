#include "eqsort/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "eqsort/context.hpp"
#include "eqsort/sorts.hpp"

namespace eqsort {

namespace {

using Clock = std::chrono::steady_clock;

// Cap on keys copied per timed batch, so buffers stay cache-unfriendly large
// but bounded (~64 MiB of int64).
constexpr std::size_t kBatchKeyBudget = 8000000;

template <class Key>
void check_sorted(const std::vector<Key>& keys, MethodId method, std::size_t n, std::size_t k,
                  std::size_t array_index) {
  if (!std::is_sorted(keys.begin(), keys.end())) {
    std::ostringstream msg;
    msg << "unsorted output from " << method_name(method) << " (n=" << n << ", k=" << k
        << ", array " << array_index << ")";
    throw BenchError(msg.str());
  }
}

template <class Key>
BenchRow timing_cell(MethodId method, std::size_t n, std::size_t k, std::size_t d, int repeats,
                     std::uint64_t seed) {
  std::vector<std::vector<Key>> pristine;
  pristine.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    pristine.push_back(uniform_multiset<Key>(n, k, derive_seed(seed, i)));
  }

  PlainContext<Key> ctx;
  {
    std::vector<Key> warm = pristine[0];
    sort_with(method, std::span<Key>(warm), ctx);
    check_sorted(warm, method, n, k, 0);
  }

  const std::size_t batch = std::max<std::size_t>(1, kBatchKeyBudget / std::max<std::size_t>(n, 1));
  std::vector<std::vector<Key>> buffers;
  double sum_of_means = 0.0;
  for (int r = 0; r < repeats; ++r) {
    double elapsed = 0.0;
    for (std::size_t b0 = 0; b0 < d; b0 += batch) {
      const std::size_t b1 = std::min(d, b0 + batch);
      buffers.assign(pristine.begin() + b0, pristine.begin() + b1);
      const auto t0 = Clock::now();
      for (auto& buf : buffers) sort_with(method, std::span<Key>(buf), ctx);
      const auto t1 = Clock::now();
      elapsed += std::chrono::duration<double>(t1 - t0).count();
      for (std::size_t i = 0; i < buffers.size(); ++i) {
        check_sorted(buffers[i], method, n, k, b0 + i);
      }
    }
    sum_of_means += elapsed / static_cast<double>(d);
  }

  BenchRow row;
  row.kind = BenchKind::timing;
  row.method = method;
  row.n = n;
  row.k = k;
  row.d = d;
  row.repeats = repeats;
  row.mean_time_s = sum_of_means / repeats;
  return row;
}

template <class Key>
BenchRow counting_cell(MethodId method, std::size_t n, std::size_t k, std::size_t d,
                       std::uint64_t seed) {
  OpCounters counters;
  auto ctx = counting_context<Key>(counters);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Key> buf = uniform_multiset<Key>(n, k, derive_seed(seed, i));
    sort_with(method, std::span<Key>(buf), ctx);
    check_sorted(buf, method, n, k, i);
  }
  BenchRow row;
  row.kind = BenchKind::counting;
  row.method = method;
  row.n = n;
  row.k = k;
  row.d = d;
  row.mean_comparisons = static_cast<double>(counters.comparisons) / static_cast<double>(d);
  row.mean_swaps = static_cast<double>(counters.swaps) / static_cast<double>(d);
  return row;
}

void validate(std::size_t d, int repeats) {
  if (d == 0) throw BenchError("d must be at least 1");
  if (repeats < 1) throw BenchError("repeats must be at least 1");
}

bool row_order(const BenchRow& a, const BenchRow& b) {
  if (a.method != b.method) return a.method < b.method;
  if (a.n != b.n) return a.n < b.n;
  return a.k < b.k;
}

std::string field_or_empty(const std::optional<double>& v) {
  return v ? format_g6(*v) : std::string();
}

}  // namespace

BenchRow run_timing_cell(MethodId method, std::size_t n, std::size_t k, std::size_t d,
                         int repeats, std::uint64_t seed, Domain domain) {
  validate(d, repeats);
  switch (domain) {
    case Domain::int64: return timing_cell<std::int64_t>(method, n, k, d, repeats, seed);
    case Domain::float64: return timing_cell<double>(method, n, k, d, repeats, seed);
    case Domain::string: return timing_cell<std::string>(method, n, k, d, repeats, seed);
  }
  throw BenchError("bad domain");
}

BenchRow run_counting_cell(MethodId method, std::size_t n, std::size_t k, std::size_t d,
                           std::uint64_t seed, Domain domain) {
  validate(d, 1);
  switch (domain) {
    case Domain::int64: return counting_cell<std::int64_t>(method, n, k, d, seed);
    case Domain::float64: return counting_cell<double>(method, n, k, d, seed);
    case Domain::string: return counting_cell<std::string>(method, n, k, d, seed);
  }
  throw BenchError("bad domain");
}

std::vector<BenchRow> run_grid(const BenchConfig& config, BenchKind kind, std::ostream* progress) {
  std::vector<BenchRow> rows;
  for (MethodId m : config.methods) {
    for (std::size_t k : config.k_list) {
      BenchRow row = kind == BenchKind::timing
                         ? run_timing_cell(m, config.n, k, config.d, config.repeats, config.seed,
                                           config.domain)
                         : run_counting_cell(m, config.n, k, config.d, config.seed, config.domain);
      if (progress) {
        *progress << method_name(m) << " n=" << config.n << " k=" << k;
        if (row.mean_time_s) *progress << " time=" << format_g6(*row.mean_time_s) << "s";
        if (row.mean_comparisons) *progress << " cmp=" << format_g6(*row.mean_comparisons);
        if (row.mean_swaps) *progress << " swap=" << format_g6(*row.mean_swaps);
        *progress << "\n";
      }
      rows.push_back(row);
    }
  }
  std::sort(rows.begin(), rows.end(), row_order);
  return rows;
}

RatioResult compute_ratios(std::span<const BenchRow> rows, MethodId baseline) {
  RatioResult result;
  auto ratio = [](const std::optional<double>& v,
                  const std::optional<double>& base) -> std::optional<double> {
    if (!v || !base || *base == 0.0) return std::nullopt;
    return *v / *base;
  };
  for (const BenchRow& row : rows) {
    const BenchRow* base = nullptr;
    for (const BenchRow& cand : rows) {
      if (cand.method == baseline && cand.kind == row.kind && cand.n == row.n &&
          cand.k == row.k) {
        base = &cand;
        break;
      }
    }
    if (!base) {
      std::ostringstream msg;
      msg << "no " << method_name(baseline) << " baseline row for kind="
          << (row.kind == BenchKind::timing ? "timing" : "counting") << " n=" << row.n
          << " k=" << row.k;
      result.errors.push_back(msg.str());
      continue;
    }
    RatioRow out;
    out.method = row.method;
    out.n = row.n;
    out.k = row.k;
    out.time_ratio = ratio(row.mean_time_s, base->mean_time_s);
    out.comparison_ratio = ratio(row.mean_comparisons, base->mean_comparisons);
    out.swap_ratio = ratio(row.mean_swaps, base->mean_swaps);
    result.rows.push_back(out);
  }
  return result;
}

std::string format_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_csv(std::span<const BenchRow> rows, std::ostream& out) {
  std::vector<BenchRow> sorted(rows.begin(), rows.end());
  std::sort(sorted.begin(), sorted.end(), row_order);
  out << "kind,method,n,k,d,repeats,mean_time_s,mean_comparisons,mean_swaps\n";
  for (const BenchRow& r : sorted) {
    out << (r.kind == BenchKind::timing ? "timing" : "counting") << ',' << method_name(r.method)
        << ',' << r.n << ',' << r.k << ',' << r.d << ',';
    if (r.repeats) out << *r.repeats;
    out << ',' << field_or_empty(r.mean_time_s) << ',' << field_or_empty(r.mean_comparisons)
        << ',' << field_or_empty(r.mean_swaps) << '\n';
  }
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

[[noreturn]] void csv_fail(std::size_t line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "csv line " << line_no << ": " << what;
  throw BenchError(msg.str());
}

std::size_t parse_size(const std::string& s, std::size_t line_no, const char* field) {
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (const std::exception&) {
    csv_fail(line_no, std::string("bad ") + field + " value '" + s + "'");
  }
}

std::optional<double> parse_opt_double(const std::string& s, std::size_t line_no,
                                       const char* field) {
  if (s.empty()) return std::nullopt;
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    csv_fail(line_no, std::string("bad ") + field + " value '" + s + "'");
  }
}

}  // namespace

std::vector<BenchRow> read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw BenchError("csv is empty");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "kind,method,n,k,d,repeats,mean_time_s,mean_comparisons,mean_swaps") {
    csv_fail(line_no, "unexpected header");
  }
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 9) csv_fail(line_no, "expected 9 fields");
    BenchRow row;
    if (f[0] == "timing") {
      row.kind = BenchKind::timing;
    } else if (f[0] == "counting") {
      row.kind = BenchKind::counting;
    } else {
      csv_fail(line_no, "bad kind '" + f[0] + "'");
    }
    const auto m = parse_method(f[1]);
    if (!m) csv_fail(line_no, "unknown method '" + f[1] + "'");
    row.method = *m;
    row.n = parse_size(f[2], line_no, "n");
    row.k = parse_size(f[3], line_no, "k");
    row.d = parse_size(f[4], line_no, "d");
    if (!f[5].empty()) row.repeats = static_cast<int>(parse_size(f[5], line_no, "repeats"));
    row.mean_time_s = parse_opt_double(f[6], line_no, "mean_time_s");
    row.mean_comparisons = parse_opt_double(f[7], line_no, "mean_comparisons");
    row.mean_swaps = parse_opt_double(f[8], line_no, "mean_swaps");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace eqsort
