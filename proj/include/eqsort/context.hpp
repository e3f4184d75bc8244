#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <utility>

namespace eqsort {

enum class Ordering { less, equal, greater };

// Three-way comparison for key types with operator<. Floating keys must not
// contain NaN; callers needing a total order over NaN supply their own functor.
template <class Key>
struct DefaultOrder {
  Ordering operator()(const Key& a, const Key& b) const {
    if (a < b) return Ordering::less;
    if (b < a) return Ordering::greater;
    return Ordering::equal;
  }
};

struct OpCounters {
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;

  void reset() { comparisons = 0; swaps = 0; }
  OpCounters snapshot() const { return *this; }
  bool operator==(const OpCounters&) const = default;
};

// A sort context supplies the comparison oracle and the exchange primitive.
// Every call to order() is one comparison; every call to exchange() is one
// swap, self-exchanges included.
template <class C, class Key>
concept SortContextFor = requires(C c, std::span<Key> s, const Key& a, std::size_t i) {
  { c.order(a, a) } -> std::same_as<Ordering>;
  c.exchange(s, i, i);
};

template <class Key, class Order = DefaultOrder<Key>>
class PlainContext {
 public:
  PlainContext() = default;
  explicit PlainContext(Order order) : order_(std::move(order)) {}

  Ordering order(const Key& a, const Key& b) { return order_(a, b); }
  void exchange(std::span<Key> keys, std::size_t i, std::size_t j) {
    std::swap(keys[i], keys[j]);
  }

 private:
  Order order_;
};

template <class Key, class Order = DefaultOrder<Key>>
class CountingContext {
 public:
  explicit CountingContext(OpCounters& counters, Order order = Order())
      : counters_(&counters), order_(std::move(order)) {}

  Ordering order(const Key& a, const Key& b) {
    ++counters_->comparisons;
    return order_(a, b);
  }
  void exchange(std::span<Key> keys, std::size_t i, std::size_t j) {
    ++counters_->swaps;
    std::swap(keys[i], keys[j]);
  }

  const OpCounters& counters() const { return *counters_; }

 private:
  OpCounters* counters_;
  Order order_;
};

template <class Key>
CountingContext<Key> counting_context(OpCounters& counters) {
  return CountingContext<Key>(counters);
}

}  // namespace eqsort
