#include "eqsort/method.hpp"

namespace eqsort {

namespace {
constexpr std::array<std::string_view, 9> kNames = {
    "sedgewick",    "dijkstra3", "bentley_mcilroy", "dualpivot", "pdq_baseline",
    "eqsort1",      "eqsort2",   "eqsort3",         "reference",
};
}

std::string_view method_name(MethodId m) { return kNames[static_cast<int>(m)]; }

std::optional<MethodId> parse_method(std::string_view name) {
  for (int i = 0; i < static_cast<int>(kNames.size()); ++i) {
    if (kNames[i] == name) return static_cast<MethodId>(i);
  }
  return std::nullopt;
}

const std::array<MethodId, 9>& all_methods() {
  static const std::array<MethodId, 9> ids = {
      MethodId::sedgewick, MethodId::dijkstra3, MethodId::bentley_mcilroy,
      MethodId::dualpivot, MethodId::pdq_baseline, MethodId::eqsort1,
      MethodId::eqsort2,   MethodId::eqsort3,      MethodId::reference,
  };
  return ids;
}

const std::array<MethodId, 8>& bench_methods() {
  static const std::array<MethodId, 8> ids = {
      MethodId::sedgewick, MethodId::dijkstra3, MethodId::bentley_mcilroy,
      MethodId::dualpivot, MethodId::pdq_baseline, MethodId::eqsort1,
      MethodId::eqsort2,   MethodId::eqsort3,
  };
  return ids;
}

}  // namespace eqsort
