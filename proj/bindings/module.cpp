#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqsort/bench.hpp"
#include "eqsort/context.hpp"
#include "eqsort/datagen.hpp"
#include "eqsort/method.hpp"
#include "eqsort/sorts.hpp"

namespace py = pybind11;
using Key = std::int64_t;

namespace {

eqsort::MethodId to_method(const std::string& name) {
  const auto m = eqsort::parse_method(name);
  if (!m) throw std::invalid_argument("unknown method: " + name);
  return *m;
}

eqsort::Pattern to_pattern(const std::string& name) {
  const auto p = eqsort::parse_pattern(name);
  if (!p) throw std::invalid_argument("unknown pattern: " + name);
  return *p;
}

py::dict row_to_dict(const eqsort::BenchRow& row) {
  py::dict d;
  d["kind"] = row.kind == eqsort::BenchKind::timing ? "timing" : "counting";
  d["method"] = eqsort::method_name(row.method);
  d["n"] = row.n;
  d["k"] = row.k;
  d["d"] = row.d;
  d["repeats"] = row.repeats;
  d["mean_time_s"] = row.mean_time_s;
  d["mean_comparisons"] = row.mean_comparisons;
  d["mean_swaps"] = row.mean_swaps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Duplicate-aware quicksort workbench";

  m.def("methods", [] {
    std::vector<std::string> names;
    for (const auto id : eqsort::all_methods()) names.emplace_back(eqsort::method_name(id));
    return names;
  });

  m.def(
      "sort",
      [](std::vector<Key> values, const std::string& method) {
        eqsort::sort_with(to_method(method), std::span<Key>(values));
        return values;
      },
      py::arg("values"), py::arg("method") = "eqsort1");

  m.def(
      "sort_with_counts",
      [](std::vector<Key> values, const std::string& method) {
        eqsort::OpCounters counters;
        auto ctx = eqsort::counting_context<Key>(counters);
        eqsort::sort_with(to_method(method), std::span<Key>(values), ctx);
        return py::make_tuple(values, counters.comparisons, counters.swaps);
      },
      py::arg("values"), py::arg("method") = "eqsort1");

  m.def(
      "eq_partition",
      [](std::vector<Key> values) {
        if (values.empty()) throw std::invalid_argument("eq_partition needs a nonempty input");
        eqsort::PlainContext<Key> ctx;
        const auto index =
            eqsort::eq_partition(std::span<Key>(values), 0, values.size() - 1, ctx);
        return py::make_tuple(values, index);
      },
      py::arg("values"));

  m.def(
      "uniform_multiset",
      [](std::size_t n, std::size_t k, std::uint64_t seed) {
        return eqsort::uniform_multiset<Key>(n, k, seed);
      },
      py::arg("n"), py::arg("k"), py::arg("seed") = 1);

  m.def(
      "pattern_sequence",
      [](const std::string& pattern, std::size_t n) {
        return eqsort::pattern_sequence<Key>(to_pattern(pattern), n);
      },
      py::arg("pattern"), py::arg("n"));

  m.def(
      "distinct_count",
      [](std::vector<Key> values) { return eqsort::distinct_count<Key>(values); },
      py::arg("values"));

  m.def(
      "counting_cell",
      [](const std::string& method, std::size_t n, std::size_t k, std::size_t d,
         std::uint64_t seed) {
        return row_to_dict(eqsort::run_counting_cell(to_method(method), n, k, d, seed,
                                                     eqsort::Domain::int64));
      },
      py::arg("method"), py::arg("n"), py::arg("k"), py::arg("d") = 10, py::arg("seed") = 1);

  m.def(
      "timing_cell",
      [](const std::string& method, std::size_t n, std::size_t k, std::size_t d,
         std::size_t repeats, std::uint64_t seed) {
        return row_to_dict(eqsort::run_timing_cell(to_method(method), n, k, d, repeats, seed,
                                                   eqsort::Domain::int64));
      },
      py::arg("method"), py::arg("n"), py::arg("k"), py::arg("d") = 10, py::arg("repeats") = 3,
      py::arg("seed") = 1);
}
