#ifndef SPECRED_ALGEBRAIC_HPP
#define SPECRED_ALGEBRAIC_HPP

#include <string>
#include <vector>

#include "specred/intpoly.hpp"
#include "specred/types.hpp"

namespace specred {

struct RationalInterval {
    Rat lo;
    Rat hi;
    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
};

// Signed remainder sequence p, p', -prem(...), ..., normalized to primitive
// parts with the sign preserved. For square-free p the variation-count
// difference V(a) - V(b) equals the number of distinct real roots in (a, b].
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);

    const std::vector<IntPoly>& elements() const { return seq_; }

    int variations_at(const Rat& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // Distinct real roots in the half-open interval (lo, hi].
    int count_roots(const Rat& lo, const Rat& hi) const;
    int count_all_roots() const;

private:
    std::vector<IntPoly> seq_;
};

enum class Order { LT, EQ, GT };

// A real algebraic number: square-free primitive defining polynomial with
// positive leading coefficient plus a closed isolating interval with
// rational (dyadic, in practice) endpoints. The interval contains exactly
// one root of the polynomial; lo == hi encodes an exact rational value.
// For non-degenerate intervals the polynomial changes sign across them,
// which keeps refinement down to cheap sign bisection.
class AlgebraicNumber {
public:
    static AlgebraicNumber from_rational(const Rat& value);

    // One entry per distinct real root of p, ascending, with pairwise
    // disjoint isolating intervals. The defining polynomial of every entry
    // is the square-free part of p. Rejects the zero polynomial.
    static std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p);

    // Maximal element of isolate_real_roots(p); throws if p has no real root.
    static AlgebraicNumber largest_real_root(const IntPoly& p);

    const IntPoly& minpoly() const { return minpoly_; }
    RationalInterval interval() const { return {lo_, hi_}; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat midpoint() const { return (lo_ + hi_) / 2; }

    bool is_rational() const { return lo_ == hi_; }
    const Rat& rational_value() const;

    // Shrink the isolating interval to at most the given width. Exact sign
    // evaluation only; the identified root never changes.
    void refine_to(const Rat& width);
    AlgebraicNumber refined(const Rat& width) const;

    static Order compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
    Order compare_to_rational(const Rat& value) const;
    bool equals(const AlgebraicNumber& other) const { return compare(*this, other) == Order::EQ; }
    bool equals_rational(const Rat& value) const { return compare_to_rational(value) == Order::EQ; }

    // Exact sign of q evaluated at this number.
    int sign_of(const IntPoly& q) const;

    // Decimal rendering at the given precision; presentation only, computed
    // by refining a copy of the interval and rounding the midpoint.
    std::string decimal(int digits = 6) const;

private:
    AlgebraicNumber() = default;
    void bisect_step();

    IntPoly minpoly_;
    Rat lo_;
    Rat hi_;
    int sign_lo_ = 0;  // sign of minpoly_ at lo_; 0 iff exact rational
};

// Distinct real roots of p inside the closed interval [lo, hi].
int count_roots_closed(const IntPoly& p, const Rat& lo, const Rat& hi);

// Fixed-point decimal string of q rounded to `digits` fractional digits
// (ties away from zero).
std::string decimal_string(const Rat& q, int digits);

// Exact decimal expansion when the denominator is of the form 2^a * 5^b
// (always true for the dyadic interval endpoints produced here); falls back
// to rounding at a high fixed precision otherwise.
std::string exact_decimal_string(const Rat& q);

std::string rational_string(const Rat& q);

}  // namespace specred

#endif
