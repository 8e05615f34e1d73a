#include "specred/algebraic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace specred {

SturmChain::SturmChain(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    seq_.push_back(p.primitive_part());
    if (p.degree() == 0) return;
    seq_.push_back(p.derivative().primitive_part());
    while (seq_.back().degree() > 0) {
        const IntPoly& a = seq_[seq_.size() - 2];
        const IntPoly& b = seq_.back();
        IntPoly r = IntPoly::pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem multiplies a by lc(b)^(delta+1); when that multiplier is
        // negative, r already carries the sign of -rem.
        int delta = a.degree() - b.degree();
        bool mult_negative = (b.leading() < 0) && (delta % 2 == 0);
        IntPoly next = r.primitive_part();
        if (!mult_negative) next = -next;
        seq_.push_back(std::move(next));
    }
}

namespace {

int count_variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int SturmChain::variations_at(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const IntPoly& p : seq_) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const IntPoly& p : seq_) signs.push_back(p.sign_at_neg_inf());
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(seq_.size());
    for (const IntPoly& p : seq_) signs.push_back(p.sign_at_pos_inf());
    return count_variations(signs);
}

int SturmChain::count_roots(const Rat& lo, const Rat& hi) const {
    if (lo > hi) throw std::invalid_argument("count_roots: inverted interval");
    if (lo == hi) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int count_roots_closed(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("count_roots_closed on zero polynomial");
    if (lo > hi) return 0;
    IntPoly sf = p.square_free_part();
    if (sf.degree() <= 0) return 0;
    int at_lo = sf.sign_at(lo) == 0 ? 1 : 0;
    if (lo == hi) return at_lo;
    return SturmChain(sf).count_roots(lo, hi) + at_lo;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& value) {
    AlgebraicNumber a;
    // den*x - num, primitive with positive leading coefficient.
    Int num = value.get_num();
    Int den = value.get_den();
    a.minpoly_ = IntPoly(std::vector<Int>{-num, den}).normalized();
    a.lo_ = value;
    a.hi_ = value;
    a.sign_lo_ = 0;
    return a;
}

const Rat& AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value on non-degenerate interval");
    return lo_;
}

namespace {

std::vector<Int> positive_divisors(const Int& value) {
    std::vector<Int> small, large;
    Int n = abs(value);
    for (Int d(1); d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(Int(n / d));
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Rational roots of a square-free polynomial (num | constant term,
// den | leading coefficient), divided out of `rest` as they are found.
// Skipped for huge constant terms; exact-point detection is an
// enhancement, never a correctness requirement.
std::vector<Rat> extract_rational_roots(IntPoly& rest) {
    std::vector<Rat> roots;
    if (rest.coeff(0) == 0) {
        roots.emplace_back(0);
        auto quotient = rest.divided_exactly_by(IntPoly{0, 1});
        rest = quotient.value();
    }
    if (rest.degree() < 1) return roots;
    Int constant = abs(rest.coeff(0));
    if (constant > Int("1000000000000")) return roots;
    for (const Int& num : positive_divisors(rest.coeff(0))) {
        if (rest.degree() < 1) break;
        for (const Int& den : positive_divisors(rest.leading())) {
            Int g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                Rat candidate = make_rat(sign * num, den);
                if (rest.sign_at(candidate) != 0) continue;
                roots.push_back(candidate);
                auto quotient = rest.divided_exactly_by(IntPoly(std::vector<Int>{-sign * num, den}));
                rest = quotient.value();
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::vector<AlgebraicNumber> AlgebraicNumber::isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    IntPoly q = p.square_free_part();
    if (q.degree() <= 0) return {};

    // Rational roots become exact point intervals; the remaining factor is
    // isolated by Sturm bisection. Interval bookkeeping runs against the
    // rational-free factor and is rebased onto q at the end, so that every
    // returned number carries the square-free part of p as its defining
    // polynomial.
    std::vector<AlgebraicNumber> out;
    IntPoly rest = q;
    for (const Rat& value : extract_rational_roots(rest)) {
        AlgebraicNumber a;
        a.minpoly_ = q;
        a.lo_ = value;
        a.hi_ = value;
        a.sign_lo_ = 0;
        out.push_back(std::move(a));
    }

    if (rest.degree() >= 1) {
        rest = rest.normalized();
        SturmChain chain(rest);
        Rat lo(-rest.root_bound());
        Rat hi(rest.root_bound());
        int total = chain.count_roots(lo, hi);

        // Depth-first, left half first, so roots come out ascending.
        struct Segment {
            Rat lo, hi;
            int count;
        };
        std::vector<Segment> stack{{lo, hi, total}};
        while (!stack.empty()) {
            Segment seg = stack.back();
            stack.pop_back();
            if (seg.count == 0) continue;
            if (seg.count == 1) {
                AlgebraicNumber a;
                a.minpoly_ = rest;
                a.lo_ = seg.lo;
                a.hi_ = seg.hi;
                // Normalize so both endpoint signs are nonzero.
                for (;;) {
                    if (rest.sign_at(a.hi_) == 0) {
                        a.lo_ = a.hi_;
                        a.sign_lo_ = 0;
                        break;
                    }
                    if (rest.sign_at(a.lo_) != 0) {
                        a.sign_lo_ = rest.sign_at(a.lo_);
                        break;
                    }
                    Rat mid = (a.lo_ + a.hi_) / 2;
                    if (chain.count_roots(a.lo_, mid) == 1)
                        a.hi_ = mid;
                    else
                        a.lo_ = mid;
                }
                out.push_back(std::move(a));
                continue;
            }
            Rat mid = (seg.lo + seg.hi) / 2;
            int left = chain.count_roots(seg.lo, mid);
            // Right segment pushed first so the left one is processed first.
            stack.push_back({mid, seg.hi, seg.count - left});
            stack.push_back({seg.lo, mid, left});
        }
    }

    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return compare(a, b) == Order::LT;
    });
    // Shrink until the intervals are pairwise disjoint and no exact root
    // sits inside a neighbor's interval.
    for (std::size_t i = 1; i < out.size(); ++i)
        while (out[i - 1].hi() >= out[i].lo()) {
            out[i - 1].bisect_step();
            out[i].bisect_step();
        }
    // Rebase onto q; after separation each interval holds exactly one root
    // of q and no root of q at its endpoints.
    for (AlgebraicNumber& a : out) {
        a.minpoly_ = q;
        a.sign_lo_ = a.is_rational() ? 0 : q.sign_at(a.lo_);
    }
    return out;
}

AlgebraicNumber AlgebraicNumber::largest_real_root(const IntPoly& p) {
    auto roots = isolate_real_roots(p);
    if (roots.empty()) throw std::invalid_argument("largest_real_root: no real roots");
    return roots.back();
}

void AlgebraicNumber::bisect_step() {
    if (is_rational()) return;
    Rat mid = (lo_ + hi_) / 2;
    int s = minpoly_.sign_at(mid);
    if (s == 0) {
        lo_ = mid;
        hi_ = mid;
        sign_lo_ = 0;
    } else if (s == sign_lo_) {
        lo_ = mid;
    } else {
        hi_ = mid;
    }
}

void AlgebraicNumber::refine_to(const Rat& width) {
    while (!is_rational() && hi_ - lo_ > width) bisect_step();
}

AlgebraicNumber AlgebraicNumber::refined(const Rat& width) const {
    AlgebraicNumber copy = *this;
    copy.refine_to(width);
    return copy;
}

Order AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) {
        if (a.lo_ < b.lo_) return Order::LT;
        if (a.lo_ > b.lo_) return Order::GT;
        return Order::EQ;
    }
    if (b.is_rational()) {
        Order o = a.compare_to_rational(b.lo_);
        return o;
    }
    if (a.is_rational()) {
        Order o = b.compare_to_rational(a.lo_);
        if (o == Order::LT) return Order::GT;
        if (o == Order::GT) return Order::LT;
        return Order::EQ;
    }

    // Equality test: a common root of both defining polynomials inside the
    // intersection of the isolating intervals is necessarily both numbers.
    IntPoly g = IntPoly::gcd(a.minpoly_, b.minpoly_);
    if (g.degree() >= 1) {
        Rat lo = std::max(a.lo_, b.lo_);
        Rat hi = std::min(a.hi_, b.hi_);
        if (lo <= hi && count_roots_closed(g, lo, hi) >= 1) return Order::EQ;
    }
    AlgebraicNumber x = a;
    AlgebraicNumber y = b;
    for (;;) {
        if (x.hi_ < y.lo_) return Order::LT;
        if (y.hi_ < x.lo_) return Order::GT;
        if (x.is_rational() && y.is_rational()) {
            // Distinct rationals (EQ was ruled out above).
            return x.lo_ < y.lo_ ? Order::LT : Order::GT;
        }
        x.bisect_step();
        y.bisect_step();
    }
}

Order AlgebraicNumber::compare_to_rational(const Rat& value) const {
    if (is_rational()) {
        if (lo_ < value) return Order::LT;
        if (lo_ > value) return Order::GT;
        return Order::EQ;
    }
    if (minpoly_.sign_at(value) == 0 && lo_ <= value && value <= hi_) return Order::EQ;
    AlgebraicNumber x = *this;
    for (;;) {
        if (x.hi_ < value) return Order::LT;
        if (x.lo_ > value) return Order::GT;
        if (x.is_rational()) return x.lo_ < value ? Order::LT : Order::GT;
        x.bisect_step();
    }
}

int AlgebraicNumber::sign_of(const IntPoly& q) const {
    if (q.is_zero()) return 0;
    if (is_rational()) return q.sign_at(lo_);
    IntPoly g = IntPoly::gcd(q, minpoly_);
    if (g.degree() >= 1 && count_roots_closed(g, lo_, hi_) >= 1) return 0;
    // q has no root at this number; shrink until q is root-free on the
    // whole interval, where its sign is constant.
    AlgebraicNumber x = *this;
    while (count_roots_closed(q, x.lo_, x.hi_) > 0) x.bisect_step();
    int s = q.sign_at(x.lo_);
    if (s == 0) s = q.sign_at(x.hi_);
    return s;
}

std::string AlgebraicNumber::decimal(int digits) const {
    if (digits < 0) digits = 0;
    Int den(10);
    mpz_pow_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(digits + 2));
    AlgebraicNumber copy = refined(make_rat(1, den));
    return decimal_string(copy.midpoint(), digits);
}

std::string decimal_string(const Rat& q, int digits) {
    if (digits < 0) digits = 0;
    Int pow10(10);
    mpz_pow_ui(pow10.get_mpz_t(), pow10.get_mpz_t(), static_cast<unsigned long>(digits));
    // round(q * 10^digits), ties away from zero
    Int num = q.get_num() * pow10;
    const Int& d = q.get_den();
    Int twice = 2 * abs(num) + d;
    Int scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), twice.get_mpz_t(), Int(2 * d).get_mpz_t());
    bool neg = sgn(num) < 0;

    Int ipart = scaled / pow10;
    Int fpart = scaled % pow10;
    std::ostringstream os;
    if (neg && (ipart != 0 || fpart != 0)) os << "-";
    os << ipart.get_str();
    if (digits > 0) {
        std::string frac = fpart.get_str();
        os << "." << std::string(static_cast<std::size_t>(digits) - frac.size(), '0') << frac;
    }
    return os.str();
}

std::string exact_decimal_string(const Rat& q) {
    Int den = q.get_den();
    int shift = 0;
    Int d = den;
    while (d % 2 == 0) {
        d /= 2;
        ++shift;
    }
    int fives = 0;
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return decimal_string(q, 24);
    int digits = std::max(shift, fives);
    return decimal_string(q, digits);
}

std::string rational_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace specred
