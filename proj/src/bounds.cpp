#include "subdiv/bounds.hpp"

#include <cmath>
#include <numeric>

#include "subdiv/error.hpp"

namespace subdiv {

Rational make_rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0)
        fail(ErrorCode::InvalidParams, "zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

namespace {

// min(6^t, cap) without overflow; cap far exceeds every 4t-6 we compare.
std::uint64_t pow6_saturating(std::uint32_t t, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < t; ++i) {
        if (v > cap / 6)
            return cap;
        v *= 6;
    }
    return v;
}

} // namespace

std::vector<BoundRow> bound_table(std::uint32_t t_lo, std::uint32_t t_hi) {
    if (t_lo < 3 || t_hi > 64 || t_lo > t_hi)
        fail(ErrorCode::InvalidParams, "t range must lie within [3, 64]");

    std::vector<BoundRow> rows;
    rows.reserve(t_hi - t_lo + 1);
    for (std::uint32_t t = t_lo; t <= t_hi; ++t) {
        const std::uint64_t T = t;
        BoundRow r;
        r.t = t;
        r.upper = make_rational(3 * T - 5, 2 * T - 3);
        r.lower = make_rational(T * (3 * T - 5), 2 * (T * T - T - 1));
        r.prior = 1.5 - std::pow(6.0, -static_cast<double>(t));

        // lower <= upper cross-multiplies to (3t-5)(t-2) >= 0, trivially
        // true here, but computed rather than assumed so a future edit to
        // either formula gets caught.
        const bool lower_le_upper =
            r.lower.num * r.upper.den <= r.upper.num * r.lower.den;
        const bool upper_le_prior = 4 * T - 6 <= pow6_saturating(t, 1u << 20);
        r.ordered = lower_le_upper && upper_le_prior;
        rows.push_back(r);
    }
    return rows;
}

} // namespace subdiv
