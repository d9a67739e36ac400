#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkummer/rational.hpp"

namespace gkummer {

/// Monic integral minimal polynomial of degree 2 or 3, stored by ascending
/// coefficients [c0, ..., c_{n-1}, 1]. Construction rejects reducible input:
/// in degree <= 3 irreducibility over Q is equivalent to having no rational
/// root, and for a monic integral polynomial any rational root is an integer
/// divisor of the constant term.
class MinPoly {
public:
    explicit MinPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < 3 || coeffs_.size() > 4)
            throw std::invalid_argument("MinPoly: degree must be 2 or 3");
        if (coeffs_.back() != 1) throw std::invalid_argument("MinPoly: must be monic");
        if (has_integer_root()) throw std::invalid_argument("MinPoly: reducible over Q");
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Discriminant of the defining polynomial (degree 2: b^2-4c; degree 3:
    /// the standard cubic discriminant).
    Int discriminant() const {
        if (degree() == 2) {
            const Int &c = coeffs_[0], &b = coeffs_[1];
            return b * b - 4 * c;
        }
        const Int &d = coeffs_[0], &c = coeffs_[1], &b = coeffs_[2];
        return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
    }

    bool operator==(const MinPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const MinPoly& o) const { return !(*this == o); }

private:
    bool has_integer_root() const {
        const Int& c0 = coeffs_[0];
        if (c0 == 0) return true;
        Int bound = c0 < 0 ? -c0 : c0;
        for (Int r = 1; r <= bound; ++r) {
            if (c0 % r != 0) continue;
            if (eval(r) == 0 || eval(-r) == 0) return true;
        }
        return false;
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::vector<Int> coeffs_;
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A fixed number field Q(theta) of degree 2 or 3. Elements reference their
/// field; arithmetic between elements of distinct fields is a structural
/// error.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr create(std::vector<Int> minpoly_coeffs) {
        return FieldPtr(new NumberField(MinPoly(std::move(minpoly_coeffs))));
    }

    const MinPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }

    bool same_field(const NumberField& o) const {
        return this == &o || minpoly_ == o.minpoly_;
    }

private:
    explicit NumberField(MinPoly mp) : minpoly_(std::move(mp)) {}
    MinPoly minpoly_;
};

/// Element of a number field in power-basis coordinates
/// c0 + c1*theta + ... + c_{n-1}*theta^{n-1}, reduced modulo the minimal
/// polynomial after every operation.
class NFElem {
public:
    NFElem(FieldPtr field, std::vector<Rat> coords)
        : field_(std::move(field)), coords_(std::move(coords)) {
        if (!field_) throw std::invalid_argument("NFElem: null field");
        if (static_cast<int>(coords_.size()) != field_->degree())
            throw std::invalid_argument("NFElem: coordinate count must equal field degree");
    }

    static NFElem from_rational(const FieldPtr& field, const Rat& c) {
        std::vector<Rat> v(static_cast<std::size_t>(field->degree()), Rat(0));
        v[0] = c;
        return NFElem(field, std::move(v));
    }

    /// theta^k reduced into the power basis (k >= 0).
    static NFElem generator_power(const FieldPtr& field, int k) {
        NFElem g = from_rational(field, 0);
        if (k < static_cast<int>(g.coords_.size())) {
            g.coords_[static_cast<std::size_t>(k)] = 1;
            return g;
        }
        NFElem theta = generator_power(field, 1);
        NFElem acc = generator_power(field, field->degree() - 1);
        for (int i = field->degree() - 1; i < k; ++i) acc = acc * theta;
        return acc;
    }

    const FieldPtr& field() const { return field_; }
    int degree() const { return field_->degree(); }
    const Rat& coord(int i) const { return coords_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }

    bool operator==(const NFElem& o) const {
        return field_->same_field(*o.field_) && coords_ == o.coords_;
    }
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    NFElem operator+(const NFElem& o) const {
        check_same_field(o);
        std::vector<Rat> v(coords_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coords_[i];
        return NFElem(field_, std::move(v));
    }

    NFElem operator-(const NFElem& o) const {
        check_same_field(o);
        std::vector<Rat> v(coords_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.coords_[i];
        return NFElem(field_, std::move(v));
    }

    NFElem operator-() const {
        std::vector<Rat> v(coords_);
        for (auto& c : v) c = -c;
        return NFElem(field_, std::move(v));
    }

    NFElem operator*(const NFElem& o) const {
        check_same_field(o);
        const std::size_t n = coords_.size();
        // Raw product polynomial of degree <= 2n-2, then reduce.
        std::vector<Rat> raw(2 * n - 1, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (coords_[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) raw[i + j] += coords_[i] * o.coords_[j];
        }
        reduce(raw);
        raw.resize(n);
        return NFElem(field_, std::move(raw));
    }

    NFElem operator*(const Rat& c) const {
        std::vector<Rat> v(coords_);
        for (auto& x : v) x *= c;
        return NFElem(field_, std::move(v));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coordinate polynomial and the minimal polynomial over Q.
    NFElem inverse() const {
        if (is_zero()) throw std::domain_error("NFElem: division by zero");
        const int n = degree();
        // Work with univariate polynomials as coefficient vectors over Q.
        std::vector<Rat> a(coords_);
        trim(a);
        std::vector<Rat> m(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) m[static_cast<std::size_t>(i)] = Rat(field_->minpoly().coeff(i));

        // Extended gcd: s*a + t*m = g with g a nonzero constant (m irreducible).
        std::vector<Rat> r0 = m, r1 = a;
        std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};
        while (poly_deg(r1) > 0) {
            auto [q, r] = poly_divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            auto s2 = poly_sub(s0, poly_mul(q, s1));
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (poly_deg(r1) != 0)
            throw std::logic_error("NFElem: gcd with irreducible minpoly must be constant");
        const Rat& unit = r1[0];
        std::vector<Rat> inv(static_cast<std::size_t>(n), Rat(0));
        for (std::size_t i = 0; i < s1.size() && i < inv.size(); ++i) inv[i] = s1[i] / unit;
        return NFElem(field_, std::move(inv));
    }

    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }

    /// Matrix of the Q-linear map x -> a*x in the power basis, row-major;
    /// entry(i, j) = coordinate i of a*theta^j.
    std::vector<std::vector<Rat>> mult_matrix() const {
        const int n = degree();
        std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(n)));
        for (int j = 0; j < n; ++j) {
            NFElem col = *this * generator_power(field_, j);
            for (int i = 0; i < n; ++i)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coord(i);
        }
        return m;
    }

    /// Field norm N(a) = det(mult_matrix(a)).
    Rat norm() const {
        auto m = mult_matrix();
        if (degree() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    friend std::ostream& operator<<(std::ostream& os, const NFElem& e) {
        os << "[";
        for (std::size_t i = 0; i < e.coords_.size(); ++i) {
            if (i) os << ", ";
            os << format_rat(e.coords_[i]);
        }
        return os << "]";
    }

private:
    void check_same_field(const NFElem& o) const {
        if (!field_->same_field(*o.field_))
            throw std::invalid_argument("NFElem: operands belong to different fields");
    }

    // Reduce a raw coefficient vector modulo the (monic) minimal polynomial.
    void reduce(std::vector<Rat>& raw) const {
        const int n = degree();
        for (int k = static_cast<int>(raw.size()) - 1; k >= n; --k) {
            Rat lead = raw[static_cast<std::size_t>(k)];
            if (lead.is_zero()) continue;
            raw[static_cast<std::size_t>(k)] = 0;
            // theta^k = -sum_i c_i theta^{k-n+i}
            for (int i = 0; i < n; ++i)
                raw[static_cast<std::size_t>(k - n + i)] -= lead * Rat(field_->minpoly().coeff(i));
        }
    }

    static void trim(std::vector<Rat>& p) {
        while (p.size() > 1 && p.back().is_zero()) p.pop_back();
    }
    static int poly_deg(const std::vector<Rat>& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
        return -1;
    }
    static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> out(std::max(a.size(), b.size()), Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
        for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        trim(out);
        return out;
    }
    static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        trim(out);
        return out;
    }
    static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                     const std::vector<Rat>& den) {
        int dd = poly_deg(den);
        if (dd < 0) throw std::domain_error("poly_divmod: division by zero polynomial");
        std::vector<Rat> q(num.size(), Rat(0));
        for (int k = poly_deg(num); k >= dd; k = poly_deg(num)) {
            Rat f = num[static_cast<std::size_t>(k)] / den[static_cast<std::size_t>(dd)];
            q[static_cast<std::size_t>(k - dd)] = f;
            for (int i = 0; i <= dd; ++i)
                num[static_cast<std::size_t>(k - dd + i)] -= f * den[static_cast<std::size_t>(i)];
        }
        trim(num);
        trim(q);
        return {q, num};
    }

    FieldPtr field_;
    std::vector<Rat> coords_;
};

inline bool is_zero(const NFElem& e) { return e.is_zero(); }

}  // namespace gkummer
