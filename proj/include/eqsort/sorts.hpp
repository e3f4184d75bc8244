#pragma once

#include <cassert>
#include <cstddef>
#include <span>

#include "eqsort/context.hpp"
#include "eqsort/method.hpp"

namespace eqsort {
namespace detail {

// Optional debug hooks. A context may define on_range / on_partition /
// on_partition_aux / on_skip to observe recursion structure; the stock
// contexts define none and these calls compile away.
template <class Ctx>
void note_range(Ctx& ctx, std::ptrdiff_t lo, std::ptrdiff_t hi) {
  if constexpr (requires { ctx.on_range(lo, hi); }) ctx.on_range(lo, hi);
}
template <class Ctx>
void note_partition(Ctx& ctx, std::ptrdiff_t lo, std::ptrdiff_t hi, std::ptrdiff_t p) {
  if constexpr (requires { ctx.on_partition(lo, hi, p); }) ctx.on_partition(lo, hi, p);
}
template <class Ctx>
void note_aux(Ctx& ctx, std::ptrdiff_t lo, std::ptrdiff_t hi, std::ptrdiff_t p) {
  if constexpr (requires { ctx.on_partition_aux(lo, hi, p); }) ctx.on_partition_aux(lo, hi, p);
}
// Keys at [from, to) were skipped as already placed; the remaining range is
// [to, end].
template <class Ctx>
void note_skip(Ctx& ctx, std::ptrdiff_t from, std::ptrdiff_t to, std::ptrdiff_t end) {
  if constexpr (requires { ctx.on_skip(from, to, end); }) ctx.on_skip(from, to, end);
}

// Hoare-style partition whose left scan stops on keys >= pivot and whose
// right scan retreats over keys >= pivot, so equal keys collect on the right.
// The published form brackets the array with +/-infinity sentinels; here the
// scans are index-guarded instead, and the guards can only fire at the
// physical array edges: inside a recursion the neighbor cells hold placed
// pivots that stop the scans with an ordinary (counted) comparison.
template <class Key, class Ctx>
std::ptrdiff_t eq_partition_impl(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi,
                                 Ctx& ctx) {
  const std::ptrdiff_t n = std::ssize(a);
  const Key pivot = a[lo];
  std::ptrdiff_t i = lo;
  std::ptrdiff_t j = hi + 1;
  for (;;) {
    do { ++i; } while (i < n && ctx.order(a[i], pivot) == Ordering::less);
    do { --j; } while (j >= 0 && ctx.order(a[j], pivot) != Ordering::less);
    if (i >= j) {
      if (j < 0 || ctx.order(a[j], pivot) == Ordering::less) ++j;
      if (j > lo) {
        ctx.exchange(a, static_cast<std::size_t>(j - 1), static_cast<std::size_t>(lo));
        --j;
      }
      return j;
    }
    ctx.exchange(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
}

// Companion pass for eqsort3: gathers the keys equal to a[lo] into a prefix
// of [lo, hi] and returns the first index of the strictly-greater suffix
// (hi + 1 when the whole range equals the pivot). Every key in [lo, hi] must
// be >= a[lo].
template <class Key, class Ctx>
std::ptrdiff_t eq_partition_aux_impl(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi,
                                     Ctx& ctx) {
  const std::ptrdiff_t n = std::ssize(a);
  const Key pivot = a[lo];
  std::ptrdiff_t i = lo - 1;
  std::ptrdiff_t j = hi + 1;
  for (;;) {
    do { ++i; } while (i < n && ctx.order(a[i], pivot) == Ordering::equal);
    do { --j; } while (ctx.order(a[j], pivot) == Ordering::greater);
    if (i >= j) {
      if (ctx.order(a[j], pivot) == Ordering::equal) ++j;
      return j;
    }
    ctx.exchange(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
}

template <class Key, class Ctx>
void eqsort1_impl(std::span<Key> a, std::ptrdiff_t start, std::ptrdiff_t end, Ctx& ctx) {
  const std::ptrdiff_t n = std::ssize(a);
  note_range(ctx, start, end);
  // The missing loop: leading keys equal to the placed left neighbor are
  // already minimal in this range, skip them.
  const std::ptrdiff_t entered = start;
  while (start > 0 && start < n && ctx.order(a[start], a[start - 1]) == Ordering::equal) {
    ++start;
  }
  note_skip(ctx, entered, start, end);
  if (start >= end) return;
  const std::ptrdiff_t p = eq_partition_impl(a, start, end, ctx);
  note_partition(ctx, start, end, p);
  eqsort1_impl(a, start, p - 1, ctx);
  eqsort1_impl(a, p + 1, end, ctx);
}

template <class Key, class Ctx>
void eqsort2_impl(std::span<Key> a, std::ptrdiff_t start, std::ptrdiff_t end, Ctx& ctx) {
  const std::ptrdiff_t n = std::ssize(a);
  note_range(ctx, start, end);
  if (start >= end) return;
  std::ptrdiff_t p = eq_partition_impl(a, start, end, ctx);
  note_partition(ctx, start, end, p);
  eqsort2_impl(a, start, p - 1, ctx);
  // The missing loop, after the left half: step over the run of keys equal
  // to the placed pivot before descending right.
  const std::ptrdiff_t placed = p;
  while (p + 1 < n && ctx.order(a[p], a[p + 1]) == Ordering::equal) ++p;
  note_skip(ctx, placed + 1, p + 1, end);
  eqsort2_impl(a, p + 1, end, ctx);
}

template <class Key, class Ctx>
void eqsort3_impl(std::span<Key> a, std::ptrdiff_t start, std::ptrdiff_t end, Ctx& ctx) {
  note_range(ctx, start, end);
  if (start >= end) return;
  const std::ptrdiff_t p = eq_partition_impl(a, start, end, ctx);
  note_partition(ctx, start, end, p);
  eqsort3_impl(a, start, p - 1, ctx);
  const std::ptrdiff_t q = eq_partition_aux_impl(a, p, end, ctx);
  note_aux(ctx, p, end, q);
  eqsort3_impl(a, q, end, ctx);
}

// Classical two-way Hoare quicksort, first element as pivot, both scans
// stopping on keys equal to the pivot.
template <class Key, class Ctx>
void sedgewick_impl(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi, Ctx& ctx) {
  note_range(ctx, lo, hi);
  if (lo >= hi) return;
  const Key pivot = a[lo];
  std::ptrdiff_t i = lo;
  std::ptrdiff_t j = hi + 1;
  for (;;) {
    for (;;) {
      ++i;
      if (ctx.order(a[i], pivot) != Ordering::less) break;
      if (i == hi) break;
    }
    // a[lo] stops the right scan; no guard needed.
    do { --j; } while (ctx.order(a[j], pivot) == Ordering::greater);
    if (i >= j) break;
    ctx.exchange(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  ctx.exchange(a, static_cast<std::size_t>(lo), static_cast<std::size_t>(j));
  sedgewick_impl(a, lo, j - 1, ctx);
  sedgewick_impl(a, j + 1, hi, ctx);
}

// Dutch national flag three-way partition; one oracle call per visited key.
template <class Key, class Ctx>
void dijkstra3_impl(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi, Ctx& ctx) {
  note_range(ctx, lo, hi);
  if (lo >= hi) return;
  const Key pivot = a[lo];
  std::ptrdiff_t lt = lo, i = lo + 1, gt = hi;
  while (i <= gt) {
    const Ordering c = ctx.order(a[i], pivot);
    if (c == Ordering::less) {
      ctx.exchange(a, static_cast<std::size_t>(lt), static_cast<std::size_t>(i));
      ++lt;
      ++i;
    } else if (c == Ordering::greater) {
      ctx.exchange(a, static_cast<std::size_t>(i), static_cast<std::size_t>(gt));
      --gt;
    } else {
      ++i;
    }
  }
  dijkstra3_impl(a, lo, lt - 1, ctx);
  dijkstra3_impl(a, gt + 1, hi, ctx);
}

// Three-way partition that parks pivot-equal keys at both extreme ends while
// scanning, then vacuums them into the middle; recursion on the two strict
// regions only.
template <class Key, class Ctx>
void bentley_mcilroy_impl(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi, Ctx& ctx) {
  note_range(ctx, lo, hi);
  if (lo >= hi) return;
  const Key pivot = a[lo];
  std::ptrdiff_t i = lo, j = hi + 1;
  std::ptrdiff_t p = lo, q = hi + 1;
  for (;;) {
    for (;;) {
      ++i;
      if (ctx.order(a[i], pivot) != Ordering::less) break;
      if (i == hi) break;
    }
    for (;;) {
      --j;
      if (ctx.order(a[j], pivot) != Ordering::greater) break;
      if (j == lo) break;
    }
    if (i == j && ctx.order(a[i], pivot) == Ordering::equal) {
      ++p;
      ctx.exchange(a, static_cast<std::size_t>(p), static_cast<std::size_t>(i));
    }
    if (i >= j) break;
    ctx.exchange(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (ctx.order(a[i], pivot) == Ordering::equal) {
      ++p;
      ctx.exchange(a, static_cast<std::size_t>(p), static_cast<std::size_t>(i));
    }
    if (ctx.order(a[j], pivot) == Ordering::equal) {
      --q;
      ctx.exchange(a, static_cast<std::size_t>(q), static_cast<std::size_t>(j));
    }
  }
  i = j + 1;
  for (std::ptrdiff_t k = lo; k <= p; ++k) {
    ctx.exchange(a, static_cast<std::size_t>(k), static_cast<std::size_t>(j));
    --j;
  }
  for (std::ptrdiff_t k = hi; k >= q; --k) {
    ctx.exchange(a, static_cast<std::size_t>(k), static_cast<std::size_t>(i));
    ++i;
  }
  bentley_mcilroy_impl(a, lo, j, ctx);
  bentley_mcilroy_impl(a, i, hi, ctx);
}

// Dual-pivot scheme: first and last keys as pivots (swapped into order),
// three regions, middle recursion skipped when the pivots compare equal.
template <class Key, class Ctx>
void dualpivot_impl(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi, Ctx& ctx) {
  note_range(ctx, lo, hi);
  if (lo >= hi) return;
  if (ctx.order(a[lo], a[hi]) == Ordering::greater) {
    ctx.exchange(a, static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
  }
  const Key p1 = a[lo];
  const Key p2 = a[hi];
  std::ptrdiff_t lt = lo + 1, gt = hi - 1;
  for (std::ptrdiff_t k = lt; k <= gt;) {
    if (ctx.order(a[k], p1) == Ordering::less) {
      ctx.exchange(a, static_cast<std::size_t>(k), static_cast<std::size_t>(lt));
      ++lt;
      ++k;
    } else if (ctx.order(a[k], p2) == Ordering::greater) {
      ctx.exchange(a, static_cast<std::size_t>(k), static_cast<std::size_t>(gt));
      --gt;
    } else {
      ++k;
    }
  }
  --lt;
  ++gt;
  ctx.exchange(a, static_cast<std::size_t>(lo), static_cast<std::size_t>(lt));
  ctx.exchange(a, static_cast<std::size_t>(hi), static_cast<std::size_t>(gt));
  dualpivot_impl(a, lo, lt - 1, ctx);
  if (ctx.order(p1, p2) == Ordering::less) dualpivot_impl(a, lt + 1, gt - 1, ctx);
  dualpivot_impl(a, gt + 1, hi, ctx);
}

// partition_right: keys < pivot left, keys >= pivot right, pivot placed.
// First-element pivot, so the opening left scan needs an edge guard.
template <class Key, class Ctx>
std::ptrdiff_t pdq_partition_right(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi,
                                   Ctx& ctx) {
  const Key pivot = a[lo];
  std::ptrdiff_t i = lo;
  std::ptrdiff_t j = hi + 1;
  do { ++i; } while (i <= hi && ctx.order(a[i], pivot) == Ordering::less);
  if (i - 1 == lo) {
    while (i < j) {
      --j;
      if (ctx.order(a[j], pivot) == Ordering::less) break;
    }
  } else {
    do { --j; } while (ctx.order(a[j], pivot) != Ordering::less);
  }
  while (i < j) {
    ctx.exchange(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    do { ++i; } while (ctx.order(a[i], pivot) == Ordering::less);
    do { --j; } while (ctx.order(a[j], pivot) != Ordering::less);
  }
  const std::ptrdiff_t p = i - 1;
  ctx.exchange(a, static_cast<std::size_t>(lo), static_cast<std::size_t>(p));
  return p;
}

// partition_left: keys <= pivot left of the returned position, keys > pivot
// right of it. Used on a range whose left neighbor equals the pivot, where
// "<= pivot" collapses to "== pivot".
template <class Key, class Ctx>
std::ptrdiff_t pdq_partition_left(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi,
                                  Ctx& ctx) {
  const Key pivot = a[lo];
  std::ptrdiff_t i = lo;
  std::ptrdiff_t j = hi + 1;
  do { --j; } while (ctx.order(pivot, a[j]) == Ordering::less);
  if (j == hi) {
    while (i < j) {
      ++i;
      if (ctx.order(pivot, a[i]) == Ordering::less) break;
    }
  } else {
    do { ++i; } while (ctx.order(pivot, a[i]) != Ordering::less);
  }
  while (i < j) {
    ctx.exchange(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    do { --j; } while (ctx.order(pivot, a[j]) == Ordering::less);
    do { ++i; } while (ctx.order(pivot, a[i]) != Ordering::less);
  }
  ctx.exchange(a, static_cast<std::size_t>(lo), static_cast<std::size_t>(j));
  return j;
}

template <class Key, class Ctx>
void pdq_baseline_impl(std::span<Key> a, std::ptrdiff_t lo, std::ptrdiff_t hi, bool leftmost,
                       Ctx& ctx) {
  for (;;) {
    note_range(ctx, lo, hi);
    if (hi - lo < 1) return;
    // If this range sits right of a placed pivot equal to our pivot, the
    // whole equal run belongs here: partition it to the left and skip it.
    if (!leftmost && ctx.order(a[lo - 1], a[lo]) != Ordering::less) {
      const std::ptrdiff_t q = pdq_partition_left(a, lo, hi, ctx);
      note_skip(ctx, lo, q + 1, hi);
      lo = q + 1;
      continue;
    }
    const std::ptrdiff_t p = pdq_partition_right(a, lo, hi, ctx);
    pdq_baseline_impl(a, lo, p - 1, leftmost, ctx);
    lo = p + 1;
    leftmost = false;
  }
}

template <class Key, class Ctx>
void sift_down(std::span<Key> a, std::ptrdiff_t root, std::ptrdiff_t count, Ctx& ctx) {
  for (;;) {
    std::ptrdiff_t child = 2 * root + 1;
    if (child >= count) return;
    if (child + 1 < count && ctx.order(a[child], a[child + 1]) == Ordering::less) ++child;
    if (ctx.order(a[root], a[child]) != Ordering::less) return;
    ctx.exchange(a, static_cast<std::size_t>(root), static_cast<std::size_t>(child));
    root = child;
  }
}

template <class Key, class Ctx>
void reference_impl(std::span<Key> a, Ctx& ctx) {
  const std::ptrdiff_t n = std::ssize(a);
  for (std::ptrdiff_t i = n / 2 - 1; i >= 0; --i) sift_down(a, i, n, ctx);
  for (std::ptrdiff_t end = n - 1; end > 0; --end) {
    ctx.exchange(a, 0, static_cast<std::size_t>(end));
    sift_down(a, 0, end, ctx);
  }
}

}  // namespace detail

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
std::size_t eq_partition(std::span<Key> keys, std::size_t lo, std::size_t hi, Ctx& ctx) {
  assert(lo <= hi && hi < keys.size());
  return static_cast<std::size_t>(detail::eq_partition_impl(
      keys, static_cast<std::ptrdiff_t>(lo), static_cast<std::ptrdiff_t>(hi), ctx));
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
std::size_t eq_partition_aux(std::span<Key> keys, std::size_t lo, std::size_t hi, Ctx& ctx) {
  assert(lo <= hi && hi < keys.size());
  return static_cast<std::size_t>(detail::eq_partition_aux_impl(
      keys, static_cast<std::ptrdiff_t>(lo), static_cast<std::ptrdiff_t>(hi), ctx));
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void eqsort1(std::span<Key> keys, Ctx& ctx) {
  detail::eqsort1_impl(keys, 0, std::ssize(keys) - 1, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void eqsort2(std::span<Key> keys, Ctx& ctx) {
  detail::eqsort2_impl(keys, 0, std::ssize(keys) - 1, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void eqsort3(std::span<Key> keys, Ctx& ctx) {
  detail::eqsort3_impl(keys, 0, std::ssize(keys) - 1, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void sedgewick(std::span<Key> keys, Ctx& ctx) {
  detail::sedgewick_impl(keys, 0, std::ssize(keys) - 1, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void dijkstra3(std::span<Key> keys, Ctx& ctx) {
  detail::dijkstra3_impl(keys, 0, std::ssize(keys) - 1, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void bentley_mcilroy(std::span<Key> keys, Ctx& ctx) {
  detail::bentley_mcilroy_impl(keys, 0, std::ssize(keys) - 1, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void dualpivot(std::span<Key> keys, Ctx& ctx) {
  detail::dualpivot_impl(keys, 0, std::ssize(keys) - 1, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void pdq_baseline(std::span<Key> keys, Ctx& ctx) {
  detail::pdq_baseline_impl(keys, 0, std::ssize(keys) - 1, true, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void reference_sort(std::span<Key> keys, Ctx& ctx) {
  detail::reference_impl(keys, ctx);
}

template <class Key, class Ctx>
  requires SortContextFor<Ctx, Key>
void sort_with(MethodId m, std::span<Key> keys, Ctx& ctx) {
  switch (m) {
    case MethodId::sedgewick: sedgewick(keys, ctx); break;
    case MethodId::dijkstra3: dijkstra3(keys, ctx); break;
    case MethodId::bentley_mcilroy: bentley_mcilroy(keys, ctx); break;
    case MethodId::dualpivot: dualpivot(keys, ctx); break;
    case MethodId::pdq_baseline: pdq_baseline(keys, ctx); break;
    case MethodId::eqsort1: eqsort1(keys, ctx); break;
    case MethodId::eqsort2: eqsort2(keys, ctx); break;
    case MethodId::eqsort3: eqsort3(keys, ctx); break;
    case MethodId::reference: reference_sort(keys, ctx); break;
  }
}

template <class Key>
void sort_with(MethodId m, std::span<Key> keys) {
  PlainContext<Key> ctx;
  sort_with(m, keys, ctx);
}

}  // namespace eqsort
