#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwistor/rational.hpp"

namespace gwistor {

// Fixed, closed symbol set for the scalar ring:
//   id 0      : k       (sectional curvature of the base)
//   id 1      : lambda  (Einstein constant)
//   id 2..21  : canonical curvature components R_{ijkl}, indexed by an
//               ordered pair (p <= q) of index pairs from
//               {01,02,03,12,13,23}, with the pair (03|12) eliminated by the
//               first Bianchi identity.  That leaves 21 - 1 = 20 symbols.
inline constexpr int kSymK = 0;
inline constexpr int kSymLambda = 1;
inline constexpr int kNumSymbols = 22;

namespace detail {

// Index of an ordered index pair i<j in {0..3} within {01,02,03,12,13,23}.
inline int pair_index(int i, int j) {
    static constexpr int tbl[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return tbl[i][j];
}

inline const std::array<const char*, 6>& pair_names() {
    static const std::array<const char*, 6> n = {"01", "02", "03", "12", "13", "23"};
    return n;
}

// Symbol ids for R(p,q), p <= q, skipping the Bianchi-eliminated slot (2,3).
inline int riemann_symbol_id(int p, int q) {
    if (p > q) throw std::invalid_argument("riemann_symbol_id: need p <= q");
    if (p == 2 && q == 3) throw std::invalid_argument("riemann_symbol_id: (03|12) is eliminated");
    int id = 2;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) {
            if (a == 2 && b == 3) continue;
            if (a == p && b == q) return id;
            ++id;
        }
    throw std::logic_error("riemann_symbol_id: unreachable");
}

inline std::string symbol_name(int id) {
    if (id == kSymK) return "k";
    if (id == kSymLambda) return "lambda";
    int n = 2;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) {
            if (a == 2 && b == 3) continue;
            if (n == id) {
                const auto& pn = pair_names();
                return std::string("R") + pn[a] + pn[b];
            }
            ++n;
        }
    throw std::invalid_argument("symbol_name: unknown symbol id");
}

inline std::optional<int> symbol_id(const std::string& name) {
    for (int id = 0; id < kNumSymbols; ++id)
        if (symbol_name(id) == name) return id;
    return std::nullopt;
}

}  // namespace detail

/// Exponent vector over the fixed symbol set.
struct Monomial {
    std::array<uint8_t, kNumSymbols> exp{};

    bool is_constant() const {
        for (auto e : exp)
            if (e) return false;
        return true;
    }
    int degree() const {
        int d = 0;
        for (auto e : exp) d += e;
        return d;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exp < b.exp; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < kNumSymbols; ++i) {
            int e = a.exp[i] + b.exp[i];
            if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
            m.exp[i] = (uint8_t)e;
        }
        return m;
    }
};

/// Element of the exact scalar ring: a multivariate polynomial over the
/// rationals in the fixed symbol set.  The representation is canonical
/// (sorted monomials, no zero coefficients), so operator== is semantic
/// equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long long n) { if (n != 0) terms_[Monomial{}] = Rational(n); }
    Scalar(const Rational& r) { if (!r.is_zero()) terms_[Monomial{}] = r; }

    static Scalar symbol(int id) {
        if (id < 0 || id >= kNumSymbols) throw std::invalid_argument("Scalar::symbol: bad id");
        Scalar s;
        Monomial m;
        m.exp[id] = 1;
        s.terms_[m] = Rational(1);
        return s;
    }
    static Scalar k() { return symbol(kSymK); }
    static Scalar lambda() { return symbol(kSymLambda); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    /// The value as a rational, if no symbol occurs.
    std::optional<Rational> as_rational() const {
        if (terms_.empty()) return Rational(0);
        if (is_constant()) return terms_.begin()->second;
        return std::nullopt;
    }

    Scalar operator-() const {
        Scalar r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (auto& [m, c] : b.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_[m] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Monomial m = ma * mb;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    Rational c = ca * cb;
                    if (!c.is_zero()) r.terms_[m] = c;
                } else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        return r;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar pow(int n) const {
        if (n < 0) throw std::invalid_argument("Scalar::pow: negative exponent");
        Scalar r(1);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

    /// Substitute a scalar for one symbol.
    Scalar substitute(int sym, const Scalar& value) const {
        Scalar r;
        for (auto& [m, c] : terms_) {
            Monomial rest = m;
            int e = rest.exp[sym];
            rest.exp[sym] = 0;
            Scalar term;
            term.terms_[rest] = c;
            r += term * value.pow(e);
        }
        return r;
    }

    /// Substitute rationals for every symbol that occurs.
    Rational evaluate(const std::map<int, Rational>& point) const {
        Rational r(0);
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < kNumSymbols; ++i)
                for (int e = 0; e < m.exp[i]; ++e) {
                    auto it = point.find(i);
                    if (it == point.end())
                        throw std::invalid_argument("Scalar::evaluate: unbound symbol " +
                                                    detail::symbol_name(i));
                    t *= it->second;
                }
            r += t;
        }
        return r;
    }

    int degree_in(int sym) const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, (int)m.exp[sym]);
        return d;
    }

    bool uses_symbol(int sym) const {
        for (auto& [m, c] : terms_)
            if (m.exp[sym]) return true;
        return false;
    }

    /// Coefficients in one symbol, lowest degree first; every coefficient
    /// must be free of that symbol's companions only in the univariate case.
    std::vector<Scalar> coefficients_in(int sym) const {
        std::vector<Scalar> cs(degree_in(sym) + 1);
        for (auto& [m, c] : terms_) {
            Monomial rest = m;
            int e = rest.exp[sym];
            rest.exp[sym] = 0;
            Scalar t;
            t.terms_[rest] = c;
            cs[e] += t;
        }
        return cs;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rational a = c.abs();
            bool neg = c < Rational(0);
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (int i = 0; i < kNumSymbols; ++i)
                for (int e = 0; e < m.exp[i]; ++e) {
                    if (!mono.empty()) mono += "*";
                    mono += detail::symbol_name(i);
                }
            if (mono.empty()) {
                out += a.str();
            } else if (a.is_one()) {
                out += mono;
            } else {
                out += a.str() + "*" + mono;
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    std::map<Monomial, Rational> terms_;
};

inline Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }
inline Scalar operator*(long long n, const Scalar& s) { return Scalar(n) * s; }

/// Rational roots of a univariate polynomial in `sym` with rational
/// coefficients (throws if other symbols occur).  Exact: every candidate
/// from the rational root theorem is tested by substitution.
inline std::vector<Rational> rational_roots(const Scalar& p, int sym) {
    std::vector<Rational> coeffs;
    for (const Scalar& c : p.coefficients_in(sym)) {
        auto r = c.as_rational();
        if (!r) throw std::invalid_argument("rational_roots: polynomial is not univariate");
        coeffs.push_back(*r);
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    std::vector<Rational> roots;
    if (coeffs.size() <= 1) return roots;  // constant (a nonzero one has no roots)

    size_t low = 0;
    while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));

    // Clear denominators to integer coefficients a_low .. a_n.
    long long L = 1;
    for (size_t i = low; i < coeffs.size(); ++i) L = std::lcm(L, coeffs[i].den());
    std::vector<long long> a;
    for (size_t i = low; i < coeffs.size(); ++i) a.push_back((coeffs[i] * Rational(L)).num());

    auto divisors = [](long long v) {
        std::vector<long long> ds;
        v = v < 0 ? -v : v;
        for (long long d = 1; d * d <= v; ++d)
            if (v % d == 0) {
                ds.push_back(d);
                ds.push_back(v / d);
            }
        return ds;
    };
    auto eval = [&](const Rational& x) {
        Rational acc(0);
        for (size_t i = a.size(); i-- > 0;) acc = acc * x + Rational(a[i]);
        return acc;
    };
    for (long long pnum : divisors(a.front()))
        for (long long qden : divisors(a.back()))
            for (int s : {1, -1}) {
                Rational cand(s * pnum, qden);
                if (eval(cand).is_zero()) {
                    bool seen = false;
                    for (auto& r : roots) seen = seen || r == cand;
                    if (!seen) roots.push_back(cand);
                }
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace gwistor
