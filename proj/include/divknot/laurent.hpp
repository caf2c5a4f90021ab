// Integer Laurent polynomials in one variable t.
#ifndef DIVKNOT_LAURENT_HPP
#define DIVKNOT_LAURENT_HPP

#include "divknot/scalar.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace divknot {

/// Sparse Laurent polynomial sum c_k t^k with exact coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
template <typename Coeff>
class LaurentPoly {
public:
    using coeff_type = Coeff;
    using Exponent = long;
    using Terms = std::map<Exponent, Coeff>;

    LaurentPoly() = default;
    LaurentPoly(const Coeff& c) { add_term(0, c); }  // NOLINT: implicit scalar embedding
    LaurentPoly(int c) : LaurentPoly(Coeff(c)) {}     // NOLINT

    static LaurentPoly monomial(const Coeff& c, Exponent e) {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }
    static LaurentPoly t() { return monomial(Coeff(1), 1); }

    /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
    static LaurentPoly from_terms(std::initializer_list<std::pair<Exponent, long>> terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms) p.add_term(e, Coeff(c));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Exponent min_exponent() const {
        require_nonzero("min_exponent");
        return terms_.begin()->first;
    }
    Exponent max_exponent() const {
        require_nonzero("max_exponent");
        return terms_.rbegin()->first;
    }
    const Coeff& leading_coefficient() const {
        require_nonzero("leading_coefficient");
        return terms_.rbegin()->second;
    }

    Coeff coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(Exponent e, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Multiplication by t^k.
    LaurentPoly shifted(Exponent k) const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
        return p;
    }

    /// p(1/t).
    LaurentPoly reflected() const {
        LaurentPoly p;
        for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
        return p;
    }

    /// Value at t = x; negative exponents are only allowed for x = ±1.
    Coeff evaluate(const Coeff& x) const {
        Coeff sum = 0;
        for (const auto& [e, c] : terms_) {
            if (e < 0 && x != 1 && x != -1)
                throw std::domain_error("LaurentPoly::evaluate: negative exponent at non-unit point");
            Coeff power = 1;
            const Exponent n = e < 0 ? -e : e;
            for (Exponent i = 0; i < n; ++i) power *= x;
            sum += c * power;
        }
        return sum;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, Coeff(ca * cb));
        return p;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Coeff mag = c < 0 ? Coeff(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw std::domain_error(std::string("LaurentPoly::") + what + " of zero");
    }

    Terms terms_;
};

/// Exact quotient a / b in Z[t, 1/t]; throws if b does not divide a.
template <typename Coeff>
LaurentPoly<Coeff> exact_quotient(const LaurentPoly<Coeff>& a, const LaurentPoly<Coeff>& b) {
    using Poly = LaurentPoly<Coeff>;
    if (b.is_zero()) throw std::domain_error("exact_quotient: division by zero polynomial");
    if (a.is_zero()) return Poly{};
    const auto shift = a.min_exponent() - b.min_exponent();
    Poly rem = a.shifted(-a.min_exponent());
    const Poly div = b.shifted(-b.min_exponent());
    const auto div_deg = div.max_exponent();
    const Coeff& div_lead = div.leading_coefficient();
    Poly quot;
    while (!rem.is_zero()) {
        const auto deg = rem.max_exponent();
        if (deg < div_deg) throw std::domain_error("exact_quotient: inexact polynomial division");
        const Coeff c = exact_quotient(rem.leading_coefficient(), div_lead);
        const Poly step = Poly::monomial(c, deg - div_deg);
        quot += step;
        rem -= step * div;
    }
    return quot.shifted(shift);
}

using Laurent = LaurentPoly<BigInt>;
using LaurentMatrix = Matrix<Laurent>;

}  // namespace divknot

namespace Eigen {

template <typename Coeff>
struct NumTraits<divknot::LaurentPoly<Coeff>> : GenericNumTraits<divknot::LaurentPoly<Coeff>> {
    using Real = divknot::LaurentPoly<Coeff>;
    using NonInteger = divknot::LaurentPoly<Coeff>;
    using Literal = divknot::LaurentPoly<Coeff>;
    using Nested = divknot::LaurentPoly<Coeff>;
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 500,
        MulCost = 2000
    };
};

}  // namespace Eigen

#endif  // DIVKNOT_LAURENT_HPP
