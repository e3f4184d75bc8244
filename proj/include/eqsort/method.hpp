#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace eqsort {

enum class MethodId {
  sedgewick,
  dijkstra3,
  bentley_mcilroy,
  dualpivot,
  pdq_baseline,
  eqsort1,
  eqsort2,
  eqsort3,
  reference,
};

std::string_view method_name(MethodId m);
std::optional<MethodId> parse_method(std::string_view name);

// All nine methods, in canonical (CSV row) order.
const std::array<MethodId, 9>& all_methods();
// The eight benchmarked methods; what "--methods all" expands to.
const std::array<MethodId, 8>& bench_methods();

}  // namespace eqsort
