#ifndef SPECRED_INTPOLY_HPP
#define SPECRED_INTPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "specred/types.hpp"

namespace specred {

// Dense univariate polynomial with exact integer coefficients.
// coeff(i) is the coefficient of x^i; the coefficient vector never has
// trailing zeros, so degree() == -1 exactly for the zero polynomial.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> low_to_high);
    explicit IntPoly(std::vector<Int> low_to_high);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(Int c);
    static IntPoly identity() { return IntPoly{0, 1}; }
    // c * x^e
    static IntPoly monomial(Int c, std::size_t e);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Int& coeff(std::size_t i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const IntPoly& other) const { return !(*this == other); }

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator-() const;
    IntPoly scaled(const Int& factor) const;
    IntPoly shifted_up(std::size_t e) const;  // multiply by x^e

    IntPoly derivative() const;

    // gcd of |coefficients|; nonnegative, 0 only for the zero polynomial.
    Int content() const;
    // divided by content, sign of the leading coefficient preserved.
    IntPoly primitive_part() const;
    // primitive with positive leading coefficient.
    IntPoly normalized() const;

    // Pseudo-remainder r with lc(divisor)^(deg a - deg b + 1) * a = q*b + r.
    static IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

    // Primitive gcd with positive leading coefficient, computed by the
    // fraction-free subresultant remainder sequence (Knuth 4.6.1C).
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    // Quotient when the division is exact over the integers, nullopt
    // otherwise (nonzero remainder or fractional quotient coefficient).
    std::optional<IntPoly> divided_exactly_by(const IntPoly& divisor) const;

    // p / gcd(p, p'), normalized. Same distinct roots as p, all simple.
    IntPoly square_free_part() const;
    bool is_square_free() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    // Sign of p(x) without building the rational value (homogeneous form).
    int sign_at(const Rat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    // Coefficient of y^j in p(y + t) as a polynomial in t, i.e. the exact
    // Taylor coefficient p^(j)(t) / j!.
    IntPoly taylor_coefficient(std::size_t j) const;

    // Integer B with every real root of p in (-B, B); Cauchy bound
    // 1 + max|coeff| / |lead| rounded up.
    Int root_bound() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

}  // namespace specred

#endif
