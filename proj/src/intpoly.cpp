#include "specred/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace specred {

namespace {

int sign_of(const Int& v) { return sgn(v); }

}  // namespace

IntPoly::IntPoly(std::initializer_list<long> low_to_high) {
    coeffs_.reserve(low_to_high.size());
    for (long c : low_to_high) coeffs_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<Int> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, std::size_t e) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(e + 1, Int(0));
        p.coeffs_[e] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    static const Int zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly{};
    std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(-c);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Int& factor) const {
    if (factor == 0) return IntPoly{};
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(c * factor);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted_up(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<Int> out(coeffs_.size() + e, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + e] = coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return IntPoly{};
    std::vector<Int> out;
    out.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Int(static_cast<long>(i)));
    return IntPoly(std::move(out));
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly{};
    Int g = content();
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(c / g);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::normalized() const {
    if (is_zero()) return IntPoly{};
    IntPoly p = primitive_part();
    if (p.leading() < 0) return -p;
    return p;
}

IntPoly IntPoly::pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero polynomial");
    if (a.degree() < b.degree()) return a;
    const Int& lb = b.leading();
    int steps = a.degree() - b.degree() + 1;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        IntPoly t = b.scaled(r.leading()).shifted_up(static_cast<std::size_t>(shift));
        r = r.scaled(lb) - t;
        --steps;
    }
    // Keep the multiplier at exactly lc(b)^(deg a - deg b + 1) even when the
    // degree drops by more than one in a step; the subresultant divisions
    // rely on it.
    for (; steps > 0; --steps) r = r.scaled(lb);
    return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();

    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);

    Int g(1), h(1);
    for (;;) {
        int delta = u.degree() - v.degree();
        IntPoly r = pseudo_remainder(u, v);
        if (r.is_zero()) return v.normalized();
        if (r.degree() == 0) return IntPoly{1};
        Int divisor = g;
        for (int i = 0; i < delta; ++i) divisor *= h;
        u = v;
        auto q = r.divided_exactly_by(IntPoly::constant(divisor));
        if (!q) throw std::logic_error("subresultant division not exact");
        v = *q;
        g = u.leading();
        // h = h^(1-delta) * g^delta, exact by Brown-Traub.
        Int gd(1);
        for (int i = 0; i < delta; ++i) gd *= g;
        if (delta <= 1) {
            Int hd(1);
            for (int i = 0; i < 1 - delta; ++i) hd *= h;
            h = hd * gd;
        } else {
            Int hd(1);
            for (int i = 0; i < delta - 1; ++i) hd *= h;
            if (gd % hd != 0) throw std::logic_error("subresultant h-update not exact");
            h = gd / hd;
        }
    }
}

std::optional<IntPoly> IntPoly::divided_exactly_by(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return IntPoly{};
    if (degree() < divisor.degree()) return std::nullopt;

    // Long division over Q, then require every quotient coefficient to be
    // an integer and the remainder to vanish.
    std::vector<Rat> rem(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) rem[i] = Rat(coeffs_[i]);
    int dd = divisor.degree();
    Rat lead(divisor.leading());
    std::vector<Rat> quot(static_cast<std::size_t>(degree() - dd) + 1, Rat(0));
    for (int i = degree(); i >= dd; --i) {
        Rat c = rem[static_cast<std::size_t>(i)] / lead;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= c * Rat(divisor.coeff(static_cast<std::size_t>(j)));
    }
    for (const Rat& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<Int> out;
    out.reserve(quot.size());
    for (const Rat& q : quot) {
        if (q.get_den() != 1) return std::nullopt;
        out.push_back(q.get_num());
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::square_free_part() const {
    if (is_zero()) throw std::invalid_argument("square-free part of zero polynomial");
    if (degree() == 0) return IntPoly{1};
    IntPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return normalized();
    auto q = divided_exactly_by(g);
    if (!q) throw std::logic_error("square-free division not exact");
    return q->normalized();
}

bool IntPoly::is_square_free() const {
    if (is_zero()) return false;
    if (degree() <= 1) return true;
    return gcd(*this, derivative()).degree() == 0;
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

int IntPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // p(a/b) * b^deg = sum c_i a^i b^(deg-i); b > 0 so the sign carries over.
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc(0);
    Int bpow(1);
    for (int i = degree(); i >= 0; --i) {
        acc = acc * a + coeffs_[static_cast<std::size_t>(i)] * bpow;
        bpow *= b;
    }
    return sign_of(acc);
}

int IntPoly::sign_at_pos_inf() const {
    if (is_zero()) return 0;
    return sign_of(leading());
}

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    int s = sign_of(leading());
    return (degree() % 2 == 0) ? s : -s;
}

IntPoly IntPoly::taylor_coefficient(std::size_t j) const {
    if (static_cast<int>(j) > degree()) return IntPoly{};
    std::vector<Int> out(coeffs_.size() - j, Int(0));
    for (std::size_t i = j; i < coeffs_.size(); ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
        out[i - j] = coeffs_[i] * binom;
    }
    return IntPoly(std::move(out));
}

Int IntPoly::root_bound() const {
    if (is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    Int lead = abs(leading());
    Int mx(0);
    for (const Int& c : coeffs_) {
        Int a = abs(c);
        if (a > mx) mx = a;
    }
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mx.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) q += 1;
    return q + 1;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace specred
