#ifndef CSSEMI_TYPES_HPP_
#define CSSEMI_TYPES_HPP_

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cssemi/error.hpp"

namespace cssemi {

  // Elements of every finite structure are dense indices in declaration
  // order.  Labels only appear at the I/O boundary.
  using Index = std::uint32_t;

  // A set of elements, always sorted ascending and duplicate free.
  using ElementSet = std::vector<Index>;

  // A total map between two finite structures: image of element k is at
  // position k.
  using ElementMap = std::vector<Index>;

  // Bit masks are used by the exhaustive searches, which are restricted to
  // structures with at most 64 elements.
  using Mask = std::uint64_t;

  inline constexpr std::size_t max_mask_size = 64;

  namespace mask {
    inline Mask bit(Index x) {
      return Mask(1) << x;
    }
    inline bool contains(Mask m, Index x) {
      return (m >> x) & 1U;
    }
    inline std::size_t count(Mask m) {
      return static_cast<std::size_t>(std::popcount(m));
    }
    inline Mask from_set(ElementSet const& s) {
      Mask m = 0;
      for (Index x : s) {
        m |= bit(x);
      }
      return m;
    }
    inline ElementSet to_set(Mask m) {
      ElementSet out;
      out.reserve(count(m));
      while (m != 0) {
        out.push_back(static_cast<Index>(std::countr_zero(m)));
        m &= m - 1;
      }
      return out;
    }
    inline Mask full(std::size_t n) {
      return n >= 64 ? ~Mask(0) : (Mask(1) << n) - 1;
    }
  }  // namespace mask

  // Knobs shared by the exhaustive searches.
  struct SearchOptions {
    // Upper bound on the number of subsemigroups enumerated.
    std::size_t subsemigroup_cap = 2'000'000;
    // Best-effort cancellation, checked between search branches.
    std::optional<std::chrono::steady_clock::time_point> deadline;

    void check_deadline() const {
      if (deadline && std::chrono::steady_clock::now() > *deadline) {
        throw DeadlineExceeded("search deadline exceeded");
      }
    }
  };

  inline ElementSet normalized_set(std::vector<Index> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

}  // namespace cssemi

#endif  // CSSEMI_TYPES_HPP_
