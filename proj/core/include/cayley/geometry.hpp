#pragma once

#include <array>
#include <cstdint>

#include "cayley/wideint.hpp"

namespace cayley::geometry {

using Vec4 = std::array<std::int64_t, 4>;

// F(x) = x2*x3*x4 + x1*x3*x4 + x1*x2*x4 + x1*x2*x3, computed exactly.
Int256 cubic_form(const Vec4& x);

inline bool on_surface(const Vec4& x) { return cubic_form(x) == 0; }

// True iff x lies on one of the nine lines contained in the surface:
// {x_i = x_j = 0} for the six coordinate pairs, and
// {x_i + x_j = 0, x_k + x_l = 0} for the three pairings of indices.
bool on_line(const Vec4& x);

// gcd(x1,x2,x3,x4) == 1.  The zero vector is rejected with invalid_argument.
bool is_primitive(const Vec4& x);

// On the surface and off all nine lines.
bool in_U0(const Vec4& x);

inline std::int64_t height(const Vec4& x) {
    std::int64_t h = 0;
    for (auto c : x) {
        std::int64_t a = c < 0 ? -c : c;
        if (a > h) h = a;
    }
    return h;
}

// A primitive integral point of U0, validated on construction
// (throws std::domain_error naming the violated condition).
class SurfacePoint {
public:
    explicit SurfacePoint(const Vec4& x);
    const Vec4& coords() const { return x_; }
    std::int64_t operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }

private:
    Vec4 x_;
};

// N(B): primitive points of U0 with height <= B, counting x and -x separately.
// Exhaustive scan; B > 2000 is refused with scale_error.
std::uint64_t count_N_direct(std::int64_t B, unsigned threads = 1);

} // namespace cayley::geometry
