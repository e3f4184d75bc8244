#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace eqsort {

enum class Domain { int64, float64, string };

inline std::string_view domain_name(Domain d) {
  switch (d) {
    case Domain::int64: return "int";
    case Domain::float64: return "float";
    case Domain::string: return "string";
  }
  return "";
}

inline std::optional<Domain> parse_domain(std::string_view s) {
  if (s == "int") return Domain::int64;
  if (s == "float") return Domain::float64;
  if (s == "string") return Domain::string;
  return std::nullopt;
}

// Fixed generator so datasets are bit-identical across platforms and runs
// (no C library rand, no standard-library distributions). splitmix64:
// Vigna's public-domain mixer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// One derived seed per array index, so a cell's d arrays are independent
// streams and every method sees the same inputs.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return g.next();
}

struct DatasetSpec {
  std::size_t n = 0;
  std::size_t k = 1;
  std::uint64_t seed = 1;
  Domain domain = Domain::int64;
};

// Largest string palette: 8 decimal digits.
inline constexpr std::size_t kMaxStringPalette = 100000000;

namespace detail {

inline void check_palette(std::size_t k) {
  if (k == 0) throw std::invalid_argument("palette size k must be at least 1");
}

template <class Key>
Key palette_value(std::uint64_t v);

template <>
inline std::int64_t palette_value<std::int64_t>(std::uint64_t v) {
  return static_cast<std::int64_t>(v);
}

template <>
inline double palette_value<double>(std::uint64_t v) {
  return static_cast<double>(v);
}

template <>
inline std::string palette_value<std::string>(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%08llu", static_cast<unsigned long long>(v));
  return buf;
}

template <class Key>
void check_domain_capacity(std::size_t k) {
  if constexpr (std::is_same_v<Key, std::string>) {
    if (k > kMaxStringPalette) {
      throw std::invalid_argument("string palette capacity is 10^8 values");
    }
  }
}

}  // namespace detail

// n independent draws from the k-value palette {0..k-1}, uniform via
// next() % k.
template <class Key>
std::vector<Key> uniform_multiset(std::size_t n, std::size_t k, std::uint64_t seed) {
  detail::check_palette(k);
  detail::check_domain_capacity<Key>(k);
  SplitMix64 g(seed);
  std::vector<Key> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(detail::palette_value<Key>(g.next() % k));
  }
  return out;
}

enum class Pattern { sorted, reverse, organ_pipe, all_equal };

inline std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::sorted: return "sorted";
    case Pattern::reverse: return "reverse";
    case Pattern::organ_pipe: return "organ_pipe";
    case Pattern::all_equal: return "all_equal";
  }
  return "";
}

inline std::optional<Pattern> parse_pattern(std::string_view s) {
  if (s == "sorted") return Pattern::sorted;
  if (s == "reverse") return Pattern::reverse;
  if (s == "organ_pipe") return Pattern::organ_pipe;
  if (s == "all_equal") return Pattern::all_equal;
  return std::nullopt;
}

template <class Key>
std::vector<Key> pattern_sequence(Pattern p, std::size_t n) {
  detail::check_domain_capacity<Key>(n);
  std::vector<Key> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = 0;
    switch (p) {
      case Pattern::sorted: v = i; break;
      case Pattern::reverse: v = n - 1 - i; break;
      case Pattern::organ_pipe: v = i < (n + 1) / 2 ? i : n - 1 - i; break;
      case Pattern::all_equal: v = 0; break;
    }
    out.push_back(detail::palette_value<Key>(v));
  }
  return out;
}

template <class Key>
std::size_t distinct_count(std::span<const Key> keys) {
  std::vector<Key> copy(keys.begin(), keys.end());
  std::sort(copy.begin(), copy.end());
  return static_cast<std::size_t>(std::unique(copy.begin(), copy.end()) - copy.begin());
}

}  // namespace eqsort
