#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "gkummer/numberfield.hpp"
#include "gkummer/rational.hpp"

namespace gkummer {

inline constexpr int kMaxVars = 4;

/// Exponent vector; entries beyond the polynomial's nvars stay zero.
using ExpVec = std::array<int, kMaxVars>;

inline int total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded-lexicographic order: by total degree, ties broken lexicographically.
/// This is also the canonical serialization order.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

namespace detail {
// Dispatch to the ring's free is_zero without the member function of MPoly
// shadowing it.
template <typename R>
bool coeff_is_zero(const R& c) {
    return is_zero(c);
}
}  // namespace detail

/// Sparse multivariate polynomial over an exact coefficient ring R.
/// R must provide +, unary -, *, ==, and a free function is_zero(R).
/// Zero coefficients are never stored; the term map keeps graded-lex order.
template <typename R>
class MPoly {
public:
    using TermMap = std::map<ExpVec, R, GradedLex>;

    explicit MPoly(int nvars) : nvars_(nvars) {
        if (nvars < 1 || nvars > kMaxVars)
            throw std::invalid_argument("MPoly: nvars out of range");
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    static MPoly zero(int nvars) { return MPoly(nvars); }

    static MPoly constant(int nvars, R c) {
        MPoly p(nvars);
        p.add_term(ExpVec{}, std::move(c));
        return p;
    }

    /// The monomial c * x_var^deg.
    static MPoly monomial(int nvars, int var, int deg, R c) {
        if (var < 0 || var >= nvars) throw std::invalid_argument("MPoly: variable index");
        MPoly p(nvars);
        ExpVec e{};
        e[static_cast<std::size_t>(var)] = deg;
        p.add_term(e, std::move(c));
        return p;
    }

    void add_term(const ExpVec& e, R c) {
        for (int i = nvars_; i < kMaxVars; ++i)
            if (e[static_cast<std::size_t>(i)] != 0)
                throw std::invalid_argument("MPoly: exponent beyond nvars");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!detail::coeff_is_zero(c)) terms_.emplace(e, std::move(c));
        } else {
            it->second = it->second + c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    const R* coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? nullptr : &it->second;
    }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly operator+(const MPoly& o) const {
        check_compatible(o);
        MPoly out(*this);
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    MPoly operator-() const {
        MPoly out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const {
        check_compatible(o);
        MPoly out(nvars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                ExpVec e{};
                for (std::size_t i = 0; i < kMaxVars; ++i) e[i] = e1[i] + e2[i];
                out.add_term(e, c1 * c2);
            }
        }
        return out;
    }

    /// Scale by a ring scalar.
    MPoly scaled(const R& c) const {
        MPoly out(nvars_);
        if (detail::coeff_is_zero(c)) return out;
        for (const auto& [e, v] : terms_) out.add_term(e, v * c);
        return out;
    }

    /// Substitute each variable by the given polynomial (one image per
    /// variable, all images over a common variable set). Used with linear
    /// forms to express a change of coordinates.
    MPoly substitute(const std::vector<MPoly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("MPoly::substitute: one image per variable required");
        int out_vars = nvars_;
        if (!images.empty()) {
            out_vars = images[0].nvars();
            for (const auto& img : images)
                if (img.nvars() != out_vars)
                    throw std::invalid_argument("MPoly::substitute: images must share one variable set");
        }

        // Power cache per variable, filled on demand; powers[v][k] = images[v]^(k+1).
        std::vector<std::vector<MPoly>> powers(images.size());
        auto power = [&](std::size_t var, int e) -> const MPoly& {
            auto& cache = powers[var];
            if (cache.empty()) cache.push_back(images[var]);
            while (static_cast<int>(cache.size()) < e) cache.push_back(cache.back() * images[var]);
            return cache[static_cast<std::size_t>(e - 1)];
        };

        MPoly out(out_vars);
        for (const auto& [e, c] : terms_) {
            MPoly term = MPoly::constant(out_vars, c);
            for (std::size_t v = 0; v < images.size(); ++v)
                if (e[v] > 0) term = term * power(v, e[v]);
            out = out + term;
        }
        return out;
    }

    /// Exact evaluation at a point. Evaluating the zero polynomial is only
    /// possible for rings whose zero needs no context (e.g. Rat).
    R evaluate(const std::vector<R>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("MPoly::evaluate: point length must equal nvars");
        std::optional<R> acc;
        for (const auto& [e, c] : terms_) {
            R term = c;
            for (int v = 0; v < nvars_; ++v)
                for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k)
                    term = term * point[static_cast<std::size_t>(v)];
            acc = acc ? *acc + term : term;
        }
        if (acc) return *acc;
        if constexpr (std::is_constructible_v<R, int>) {
            return R(0);
        } else {
            throw std::logic_error("MPoly::evaluate: zero polynomial over a context-carrying ring");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) {
        if (p.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            for (int v = 0; v < p.nvars_; ++v)
                if (e[static_cast<std::size_t>(v)] > 0) {
                    os << "*x" << v;
                    if (e[static_cast<std::size_t>(v)] > 1)
                        os << "^" << e[static_cast<std::size_t>(v)];
                }
        }
        return os;
    }

private:
    void check_compatible(const MPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("MPoly: operands have different variable counts");
        if (!terms_.empty() && !o.terms_.empty() &&
            !coeff_compatible(terms_.begin()->second, o.terms_.begin()->second))
            throw std::invalid_argument("MPoly: operands have incompatible coefficient rings");
    }

    // Coefficient-ring compatibility hook; specialized for rings that carry
    // structure (NFElem fields, prime moduli).
    static bool coeff_compatible(const R&, const R&) { return true; }

    int nvars_;
    TermMap terms_;
};

template <>
inline bool MPoly<NFElem>::coeff_compatible(const NFElem& a, const NFElem& b) {
    return a.field()->same_field(*b.field());
}

using RatPoly = MPoly<Rat>;
using NFPoly = MPoly<NFElem>;

}  // namespace gkummer
