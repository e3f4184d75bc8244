#include "eqsort/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <span>

#include "eqsort/context.hpp"
#include "eqsort/sorts.hpp"

namespace eqsort {

namespace {

using Key = std::int64_t;

std::string render_keys(const std::vector<Key>& keys) {
  constexpr std::size_t kShown = 32;
  std::ostringstream out;
  out << '[';
  const std::size_t shown = std::min(keys.size(), kShown);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out << ',';
    out << keys[i];
  }
  if (keys.size() > kShown) out << ",... (" << keys.size() << " keys)";
  out << ']';
  return out.str();
}

struct Checker {
  const std::vector<MethodId>& methods;
  VerifyReport& report;
  // A method that failed once in a phase is skipped for the rest of that
  // phase, so the recorded counterexample stays the first (minimal) one.
  std::vector<bool> failed_this_phase;
  std::string phase;

  Checker(const std::vector<MethodId>& m, VerifyReport& r) : methods(m), report(r) {}

  void begin_phase(std::string name) {
    phase = std::move(name);
    failed_this_phase.assign(methods.size(), false);
  }

  void check(const std::vector<Key>& input, const std::string& origin) {
    std::vector<Key> expected = input;
    std::sort(expected.begin(), expected.end());
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      if (failed_this_phase[mi]) continue;
      std::vector<Key> got = input;
      PlainContext<Key> ctx;
      sort_with(methods[mi], std::span<Key>(got), ctx);
      if (got != expected) {
        failed_this_phase[mi] = true;
        std::size_t at = 0;
        while (at < got.size() && got[at] == expected[at]) ++at;
        std::ostringstream detail;
        detail << origin << " input=" << render_keys(input) << " got=" << render_keys(got)
               << " first mismatch at index " << at;
        report.failures.push_back({methods[mi], phase, detail.str()});
      }
    }
  }
};

}  // namespace

VerifyReport run_verify(const VerifyOptions& options, std::ostream* progress) {
  VerifyReport report;
  const std::vector<MethodId> methods =
      options.methods.empty() ? std::vector<MethodId>(all_methods().begin(), all_methods().end())
                              : options.methods;
  Checker checker(methods, report);

  // Phase 1: every sequence over {0..alphabet-1} of length 0..max_len.
  checker.begin_phase("exhaustive");
  const std::size_t radix = std::max<std::size_t>(options.alphabet, 1);
  for (std::size_t len = 0; len <= options.max_len; ++len) {
    std::vector<Key> digits(len, 0);
    auto advance = [&]() -> bool {
      std::size_t pos = len;
      while (pos > 0) {
        --pos;
        if (static_cast<std::size_t>(digits[pos]) + 1 < radix) {
          ++digits[pos];
          return true;
        }
        digits[pos] = 0;
      }
      return false;
    };
    do {
      checker.check(digits, "length " + std::to_string(len));
      ++report.exhaustive_inputs;
    } while (advance());
    if (progress) {
      *progress << "exhaustive: lengths <= " << len << " done (" << report.exhaustive_inputs
                << " inputs)\n";
    }
  }

  // Phase 2: random multisets, shared across methods.
  checker.begin_phase("random");
  for (std::size_t t = 0; t < options.random_trials; ++t) {
    SplitMix64 rng(derive_seed(options.seed, 0x72616e64 + t));
    const std::size_t n = rng.next() % (options.random_max_n + 1);
    const std::size_t pick = rng.next() % 4;
    const std::size_t k = pick == 0   ? 1
                          : pick == 1 ? 2
                          : pick == 2 ? 5
                                      : std::max<std::size_t>(n, 1);
    const std::uint64_t data_seed = rng.next();
    const std::vector<Key> input = uniform_multiset<Key>(n, k, data_seed);
    std::ostringstream origin;
    origin << "trial " << t << " (n=" << n << ", k=" << k << ", seed=" << data_seed << ")";
    checker.check(input, origin.str());
    ++report.random_inputs;
  }
  if (progress && options.random_trials > 0) {
    *progress << "random: " << report.random_inputs << " multisets done\n";
  }

  // Phase 3: structured patterns that stress the partition scans.
  checker.begin_phase("pattern");
  constexpr Pattern kPatterns[] = {Pattern::sorted, Pattern::reverse, Pattern::organ_pipe,
                                   Pattern::all_equal};
  for (std::size_t n : options.pattern_sizes) {
    for (Pattern p : kPatterns) {
      const std::vector<Key> input = pattern_sequence<Key>(p, n);
      checker.check(input, std::string(pattern_name(p)) + " n=" + std::to_string(n));
      ++report.pattern_inputs;
    }
    if (progress) *progress << "pattern: n=" << n << " done\n";
  }

  return report;
}

}  // namespace eqsort
