#ifndef SUBDIV_BOUNDS_HPP
#define SUBDIV_BOUNDS_HPP

#include <cstdint>
#include <vector>

namespace subdiv {

// A reduced fraction. All exponents in the table fit comfortably in 64 bits
// once reduced (t <= 64 keeps every numerator below 2^20).
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / den; }
    bool operator==(const Rational &) const = default;
};

Rational make_rational(std::uint64_t num, std::uint64_t den);

// One row of the exponent comparison table for H_t, the 1-subdivision of
// K_t. "upper" is 3/2 - 1/(4t-6) = (3t-5)/(2t-3); "lower" is the deletion
// bound 3/2 - (t-3/2)/(t^2-t-1) = t(3t-5)/(2(t^2-t-1)); "prior" is the
// older 3/2 - 1/6^t, which has no small rational form and is carried as a
// double only.
struct BoundRow {
    std::uint32_t t = 0;
    Rational upper;
    Rational lower;
    double prior = 0.0;
    bool ordered = false; // lower <= upper <= prior, decided in integers
};

// Rows for t in [t_lo, t_hi], 3 <= t_lo <= t_hi <= 64 (InvalidParams
// otherwise). The "ordered" flag is computed exactly: lower <= upper reduces
// to (3t-5)(t-2) >= 0 by cross-multiplication, and upper <= prior to
// 4t-6 <= 6^t with a saturating power.
std::vector<BoundRow> bound_table(std::uint32_t t_lo, std::uint32_t t_hi);

} // namespace subdiv

#endif
