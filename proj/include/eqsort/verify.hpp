#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eqsort/datagen.hpp"
#include "eqsort/method.hpp"

namespace eqsort {

struct VerifyOptions {
  std::size_t max_len = 8;           // exhaustive phase: every sequence of length 0..max_len
  std::size_t alphabet = 3;          // ...over this many distinct keys
  std::size_t random_trials = 2000;  // random phase: multisets shared across methods
  std::size_t random_max_n = 512;
  std::vector<std::size_t> pattern_sizes = {1000, 10000};
  std::uint64_t seed = 1;
  std::vector<MethodId> methods;  // empty means all methods
};

struct VerifyFailure {
  MethodId method;
  std::string phase;  // "exhaustive", "random", or "pattern"
  std::string detail;
};

struct VerifyReport {
  std::size_t exhaustive_inputs = 0;
  std::size_t random_inputs = 0;
  std::size_t pattern_inputs = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Checks every requested method against an independently sorted copy of each
// input.  Exhaustive inputs are enumerated by ascending length, so the first
// recorded failure per method is a minimal counterexample.
VerifyReport run_verify(const VerifyOptions& options, std::ostream* progress = nullptr);

}  // namespace eqsort
