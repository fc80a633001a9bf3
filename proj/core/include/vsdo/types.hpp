#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>

namespace vsdo {

using VertexId = std::uint32_t;
using Weight = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr std::uint32_t kNoPos = std::numeric_limits<std::uint32_t>::max();

// Length of a directed path, or Unreachable. Finite values are sums of edge
// weights; addition saturates at Unreachable (also on 64-bit overflow).
class Distance {
public:
    constexpr Distance() = default;

    static constexpr Distance finite(std::uint64_t v) {
        Distance d;
        d.raw_ = v;
        return d;
    }
    static constexpr Distance unreachable() { return Distance{}; }

    constexpr bool is_finite() const { return raw_ != kInf; }
    // Valid only when finite.
    constexpr std::uint64_t value() const { return raw_; }
    // Raw encoding: Unreachable maps to 2^64-1, so the natural integer order
    // sorts Unreachable last.
    constexpr std::uint64_t raw() const { return raw_; }
    static constexpr Distance from_raw(std::uint64_t r) {
        Distance d;
        d.raw_ = r;
        return d;
    }

    friend constexpr Distance operator+(Distance a, Distance b) {
        if (!a.is_finite() || !b.is_finite()) return unreachable();
        std::uint64_t s = a.raw_ + b.raw_;
        if (s < a.raw_) return unreachable();  // overflow saturates
        return finite(s);
    }
    friend constexpr Distance operator+(Distance a, Weight w) {
        return a + Distance::finite(w);
    }

    friend constexpr auto operator<=>(Distance a, Distance b) = default;

private:
    static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t raw_ = kInf;
};

constexpr Distance min(Distance a, Distance b) { return a < b ? a : b; }

// Smallest k with 2^k >= x; 0 for x <= 1.
constexpr std::uint32_t ceil_log2(std::uint64_t x) {
    if (x <= 1) return 0;
    return static_cast<std::uint32_t>(std::bit_width(x - 1));
}

}  // namespace vsdo
