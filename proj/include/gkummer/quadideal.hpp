#pragma once

#include <cstdint>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "gkummer/kronecker.hpp"
#include "gkummer/primes.hpp"
#include "gkummer/rational.hpp"

namespace gkummer {

/// Imaginary quadratic order of fundamental discriminant d < 0.
class QuadOrder {
public:
    explicit QuadOrder(long long d) : d_(d) {
        if (d >= 0) throw std::invalid_argument("QuadOrder: discriminant must be negative");
        long long r = ((d % 4) + 4) % 4;
        if (r != 0 && r != 1) throw std::invalid_argument("QuadOrder: d must be 0 or 1 mod 4");
        if (r == 1) {
            if (!squarefree(-d)) throw std::invalid_argument("QuadOrder: d not fundamental");
        } else {
            long long m = d / 4;
            long long mr = ((m % 4) + 4) % 4;
            if ((mr != 2 && mr != 3) || !squarefree(-m))
                throw std::invalid_argument("QuadOrder: d not fundamental");
        }
    }

    long long disc() const { return d_; }
    bool operator==(const QuadOrder& o) const { return d_ == o.d_; }

private:
    static bool squarefree(long long n) {
        for (long long q = 2; q * q <= n; ++q)
            if (n % (q * q) == 0) return false;
        return true;
    }
    long long d_;
};

/// Element (x + y*sqrt(d)) of the quadratic field, with half-integer support
/// through rational coordinates. Algebraic integers have denominators at most
/// 2 with matching parity when d = 1 mod 4.
class KElem {
public:
    KElem(long long d, Rat x, Rat y) : d_(d), x_(std::move(x)), y_(std::move(y)) {}

    long long disc() const { return d_; }
    const Rat& re() const { return x_; }
    const Rat& im_coeff() const { return y_; }
    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

    Rat norm() const { return x_ * x_ - Rat(d_) * y_ * y_; }
    Rat trace() const { return 2 * x_; }
    KElem conj() const { return KElem(d_, x_, -y_); }
    KElem operator-() const { return KElem(d_, -x_, -y_); }

    KElem operator+(const KElem& o) const {
        check(o);
        return KElem(d_, x_ + o.x_, y_ + o.y_);
    }
    KElem operator*(const KElem& o) const {
        check(o);
        return KElem(d_, x_ * o.x_ + Rat(d_) * y_ * o.y_, x_ * o.y_ + y_ * o.x_);
    }
    KElem operator*(const Rat& c) const { return KElem(d_, x_ * c, y_ * c); }
    KElem operator/(const Rat& c) const {
        if (c.is_zero()) throw std::domain_error("KElem: division by zero");
        return KElem(d_, x_ / c, y_ / c);
    }

    bool operator==(const KElem& o) const { return d_ == o.d_ && x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const KElem& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const KElem& e) {
        return os << format_rat(e.x_) << " + " << format_rat(e.y_) << "*sqrt(" << e.d_ << ")";
    }

private:
    void check(const KElem& o) const {
        if (d_ != o.d_) throw std::invalid_argument("KElem: mismatched fields");
    }
    long long d_;
    Rat x_, y_;
};

/// Primitive binary quadratic form (a, b, c) of discriminant b^2 - 4ac = d.
struct QuadForm {
    Int a, b, c;
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    friend std::ostream& operator<<(std::ostream& os, const QuadForm& f) {
        return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
    }
};

/// Standard reduction: |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
inline QuadForm reduce_form(QuadForm f) {
    while (true) {
        if (!(-f.a < f.b && f.b <= f.a)) {
            // Normalize b into (-a, a]; c tracks the fixed discriminant.
            Int d = f.b * f.b - 4 * f.a * f.c;
            Int twoa = 2 * f.a;
            Int b2 = f.b % twoa;
            if (b2 <= -f.a) b2 += twoa;
            if (b2 > f.a) b2 -= twoa;
            f.c = (b2 * b2 - d) / (4 * f.a);
            f.b = b2;
        }
        if (f.a > f.c) {
            f = QuadForm{f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

/// All reduced forms of discriminant d, enumerated by scanning a and b within
/// the reduction bounds; the count is the class number h(d).
inline std::vector<QuadForm> class_group(const QuadOrder& order) {
    const long long d = order.disc();
    std::vector<QuadForm> forms;
    for (long long a = 1; 3 * a * a <= -d; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            Int num = Int(b) * b - d;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (Int(a) == c)) continue;  // (a,-b,a) duplicates (a,b,a)
            forms.push_back(QuadForm{Int(a), Int(b), c});
        }
    }
    return forms;
}

inline QuadForm principal_form(const QuadOrder& order) {
    long long d = order.disc();
    Int b = ((d % 2) + 2) % 2;  // 0 or 1 matching d's parity
    return QuadForm{Int(1), b, (b * b - d) / 4};
}

/// Integral or fractional ideal scale * (a*Z + ((b+sqrt(d))/2)*Z) of an
/// imaginary quadratic order, in two-generator standard form. The primitive
/// part (a, b) satisfies b^2 = d mod 4a with b normalized into [0, 2a).
class QuadIdeal {
public:
    QuadIdeal(const QuadOrder& order, Int a, Int b, Rat scale = Rat(1))
        : d_(order.disc()), a_(std::move(a)), b_(std::move(b)), scale_(std::move(scale)) {
        if (a_ <= 0) throw std::invalid_argument("QuadIdeal: a must be positive");
        if (scale_ <= 0) throw std::invalid_argument("QuadIdeal: scale must be positive");
        b_ %= 2 * a_;
        if (b_ < 0) b_ += 2 * a_;
        if ((b_ * b_ - d_) % (4 * a_) != 0)
            throw std::invalid_argument("QuadIdeal: b^2 != d mod 4a");
    }

    long long disc() const { return d_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Rat& scale() const { return scale_; }

    Rat norm() const { return scale_ * scale_ * Rat(a_); }

    QuadForm form() const { return QuadForm{a_, b_, (b_ * b_ - d_) / (4 * a_)}; }

    QuadIdeal conj() const { return QuadIdeal(QuadOrder(d_), a_, -b_, scale_); }

    bool operator==(const QuadIdeal& o) const {
        return d_ == o.d_ && a_ == o.a_ && b_ == o.b_ && scale_ == o.scale_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadIdeal& I) {
        if (I.scale_ != 1) os << format_rat(I.scale_) << "*";
        return os << "[" << I.a_ << ", (" << I.b_ << "+sqrt(" << I.d_ << "))/2]";
    }

private:
    long long d_;
    Int a_, b_;
    Rat scale_;
};

namespace detail {

// Hermite-style reduction of lattice generators (x_i, y_i), each encoding the
// element (x_i + y_i*sqrt(d))/2. Returns the ideal standard form.
inline QuadIdeal lattice_to_ideal(const QuadOrder& order, std::vector<std::pair<Int, Int>> rows,
                                  const Rat& scale) {
    // Reduce the y-column to a single pivot by repeated division.
    while (true) {
        int pivot = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].second == 0) continue;
            if (pivot < 0 || boost::multiprecision::abs(rows[i].second) <
                                 boost::multiprecision::abs(rows[static_cast<std::size_t>(pivot)].second))
                pivot = static_cast<int>(i);
        }
        if (pivot < 0) throw std::logic_error("lattice_to_ideal: rank-deficient lattice");
        bool done = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == pivot || rows[i].second == 0) continue;
            Int q = rows[i].second / rows[static_cast<std::size_t>(pivot)].second;
            rows[i].first -= q * rows[static_cast<std::size_t>(pivot)].first;
            rows[i].second -= q * rows[static_cast<std::size_t>(pivot)].second;
            if (rows[i].second != 0) done = false;
        }
        if (done) {
            Int x0 = rows[static_cast<std::size_t>(pivot)].first;
            Int h = rows[static_cast<std::size_t>(pivot)].second;
            if (h < 0) {
                x0 = -x0;
                h = -h;
            }
            Int e = 0;
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (static_cast<int>(i) != pivot)
                    e = boost::multiprecision::gcd(e, boost::multiprecision::abs(rows[i].first));
            if (e == 0 || e % (2 * h) != 0 || x0 % h != 0)
                throw std::logic_error("lattice_to_ideal: lattice is not an ideal");
            Int a = e / (2 * h);
            Int b = x0 / h;
            return QuadIdeal(order, std::move(a), std::move(b), scale * Rat(h));
        }
    }
}

}  // namespace detail

/// Ideal product via the generator lattice: multiply the four generator pairs
/// and bring the resulting lattice back to standard form. The integer content
/// of the product folds into the scale.
inline QuadIdeal ideal_mul(const QuadIdeal& I, const QuadIdeal& J) {
    if (I.disc() != J.disc()) throw std::invalid_argument("ideal_mul: mismatched orders");
    const QuadOrder order(I.disc());
    const long long d = I.disc();

    // Generators of the primitive parts as (x, y) with value (x + y*sqrt d)/2.
    std::pair<Int, Int> gi[2] = {{2 * I.a(), Int(0)}, {I.b(), Int(1)}};
    std::pair<Int, Int> gj[2] = {{2 * J.a(), Int(0)}, {J.b(), Int(1)}};
    std::vector<std::pair<Int, Int>> rows;
    for (const auto& u : gi)
        for (const auto& v : gj) {
            // ((x1+y1 s)/2)((x2+y2 s)/2) = ((x1x2 + d y1y2) + (x1y2+x2y1) s)/4
            Int xx = u.first * v.first + Int(d) * u.second * v.second;
            Int yy = u.first * v.second + u.second * v.first;
            if (xx % 2 != 0 || yy % 2 != 0)
                throw std::logic_error("ideal_mul: product generator not half-integral");
            rows.emplace_back(xx / 2, yy / 2);
        }
    return detail::lattice_to_ideal(order, std::move(rows), I.scale() * J.scale());
}

/// Reduced representative of the ideal class (scale and content dropped).
inline QuadIdeal ideal_reduce(const QuadIdeal& I) {
    QuadForm f = reduce_form(I.form());
    return QuadIdeal(QuadOrder(I.disc()), f.a, f.b);
}

inline bool is_principal_class(const QuadIdeal& I) {
    return reduce_form(I.form()) == principal_form(QuadOrder(I.disc()));
}

/// The ideal generated by a nonzero algebraic integer beta: the lattice
/// spanned by beta and beta*omega, with omega generating the maximal order.
inline QuadIdeal principal_ideal(const QuadOrder& order, const KElem& beta) {
    if (beta.disc() != order.disc()) throw std::invalid_argument("principal_ideal: wrong field");
    if (beta.is_zero()) throw std::invalid_argument("principal_ideal: zero generator");
    const long long d = order.disc();

    // Integral coordinates (x, y) with beta = (x + y*sqrt d)/2.
    Rat x2 = beta.re() * 2, y2 = beta.im_coeff() * 2;
    if (rat_den(x2) != 1 || rat_den(y2) != 1)
        throw std::invalid_argument("principal_ideal: generator is not an algebraic integer");
    Int x = rat_num(x2), y = rat_num(y2);
    if ((x - y * d) % 2 != 0)
        throw std::invalid_argument("principal_ideal: generator violates the parity rule");

    // omega = (w + sqrt d)/2 with w = d mod 2; beta*omega stays integral.
    Int w = ((d % 2) + 2) % 2 != 0 ? Int(1) : Int(0);
    std::vector<std::pair<Int, Int>> rows;
    rows.emplace_back(x, y);
    Int px = x * w + Int(d) * y;
    Int py = x + y * w;
    if (px % 2 != 0 || py % 2 != 0)
        throw std::logic_error("principal_ideal: product with omega not half-integral");
    rows.emplace_back(px / 2, py / 2);
    return detail::lattice_to_ideal(order, std::move(rows), Rat(1));
}

enum class PrimeKind { Split, Inert, Ramified };

struct PrimeSplitting {
    PrimeKind kind;
    std::optional<QuadIdeal> prime;       // one prime above p (split or ramified)
    std::optional<QuadIdeal> conjugate;   // the conjugate prime when split
};

/// Splitting of an odd rational prime decided by the Kronecker symbol (d|p);
/// the ideal generator b comes from a direct scan for b^2 = d mod 4p.
inline PrimeSplitting prime_above(const QuadOrder& order, std::uint64_t p) {
    const long long d = order.disc();
    int sym = kronecker(Int(d), Int(p));
    if (sym == -1) return {PrimeKind::Inert, std::nullopt, std::nullopt};
    for (Int b = 0; b < Int(2) * p; ++b) {
        if ((b * b - d) % (Int(4) * p) == 0) {
            QuadIdeal prime(order, Int(p), b);
            if (sym == 0) return {PrimeKind::Ramified, prime, std::nullopt};
            return {PrimeKind::Split, prime, prime.conj()};
        }
    }
    throw std::logic_error("prime_above: no square root of d mod 4p for a non-inert prime");
}

/// Generator of a principal ideal, or nullopt. Searches elements
/// alpha = (x + y*sqrt d)/2 with x^2 = 4*N(I) + d*y^2, checks lattice
/// membership, and canonicalizes the sign (x > 0, or x = 0 and y > 0).
inline std::optional<KElem> principal_generator(const QuadIdeal& I) {
    const long long d = I.disc();
    const Rat N = I.norm();

    // alpha = scale * (x + y sqrt d)/2 with (x, y) integral against the
    // primitive part: norm condition becomes x^2 - d y^2 = 4a.
    const Int target = 4 * I.a();

    auto try_candidates = [&](const Int& x, const Int& y) -> std::optional<KElem> {
        // Integrality: x and y*d must have equal parity.
        if ((x - y * Int(d)) % 2 != 0) return std::nullopt;
        for (int sx : {1, -1}) {
            for (int sy : {1, -1}) {
                Int X = x * sx, Y = y * sy;
                // Membership in a*Z + ((b+sqrt d)/2)*Z: the sqrt-coefficient
                // fixes the second coordinate, the rest must divide by 2a.
                if ((X - Y * I.b()) % (2 * I.a()) != 0) continue;
                if (X < 0 || (X == 0 && Y < 0)) continue;
                Rat half_scale = I.scale() / 2;
                KElem alpha(d, Rat(X) * half_scale, Rat(Y) * half_scale);
                if (alpha.norm() != N)
                    throw std::logic_error("principal_generator: norm mismatch");
                return alpha;
            }
            if (y == 0) break;  // sy redundant when y = 0
        }
        return std::nullopt;
    };

    if (target <= Int(std::numeric_limits<std::int64_t>::max())) {
        // 64-bit scan; x <= sqrt(target) < 2^32, so x*x never overflows.
        const std::uint64_t t = static_cast<std::uint64_t>(target);
        const unsigned __int128 ad = static_cast<std::uint64_t>(-d);
        for (std::uint64_t y = 0;; ++y) {
            unsigned __int128 sub = ad * y * y;
            if (sub > t) break;
            std::uint64_t x2 = t - static_cast<std::uint64_t>(sub);
            auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x2)));
            while (x > 0 && x * x > x2) --x;
            while ((x + 1) * (x + 1) <= x2) ++x;
            if (x * x != x2) continue;
            if (auto found = try_candidates(Int(x), Int(y))) return found;
        }
        return std::nullopt;
    }

    Int ymax = isqrt(target / Int(-d));
    for (Int y = 0; y <= ymax; ++y) {
        Int x2 = target + Int(d) * y * y;
        Int x;
        if (!is_perfect_square(x2, x)) continue;
        if (auto found = try_candidates(x, y)) return found;
    }
    return std::nullopt;
}

}  // namespace gkummer
