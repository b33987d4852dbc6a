#pragma once

// Exact polynomials over Q in one and two variables.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resdouble/error.hpp"

namespace resdouble {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// ---------------------------------------------------------------- univariate

/// Dense univariate polynomial, coefficient k multiplies t^k; no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static UniPoly constant(Rational a) { return UniPoly({std::move(a)}); }
    static UniPoly monomial(Rational a, int k) {
        std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
        c.back() = std::move(a);
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Rational(0); }
    const Rational& lead() const { return c_.back(); }

    Rational operator()(const Rational& t) const {
        Rational s = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * t + *it;
        return s;
    }

    /// Exponent of the largest power of t dividing the polynomial.
    int order() const {
        for (int k = 0; k <= degree(); ++k)
            if (c_[k] != 0) return k;
        return -1;
    }

    UniPoly derivative() const {
        std::vector<Rational> d;
        for (int k = 1; k <= degree(); ++k) d.push_back(c_[k] * k);
        return UniPoly(std::move(d));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        std::vector<Rational> c = c_;
        for (auto& x : c) x /= c_.back();
        return UniPoly(std::move(c));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Euclidean division, returns (quotient, remainder).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw Error("polynomial division by zero");
        std::vector<Rational> r = a.c_, q;
        if (a.degree() >= b.degree()) q.resize(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        for (int k = a.degree(); k >= b.degree(); --k) {
            Rational f = r[k] / b.lead();
            if (f == 0) continue;
            q[k - b.degree()] = f;
            for (int i = 0; i <= b.degree(); ++i) r[k - b.degree() + i] -= f * b.c_[i];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(r))};
    }

    std::string str(char var = 't') const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k] == 0) continue;
            Rational a = c_[k];
            if (!out.empty()) out += a < 0 ? " - " : " + ";
            else if (a < 0) out += "-";
            a = abs(a);
            bool unit = a == 1 && k > 0;
            if (!unit) out += to_string(a);
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Square-free decomposition: pairs (h_k, k) with the input equal to c * prod h_k^k, h_k monic, square-free
/// and pairwise coprime.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() < 1) return out;
    UniPoly a = gcd(f, f.derivative());
    UniPoly b = divmod(f, a).first;
    UniPoly c = divmod(f.derivative(), a).first;
    UniPoly d = c - b.derivative();
    for (int k = 1; b.degree() > 0; ++k) {
        UniPoly h = gcd(b, d);
        b = divmod(b, h).first;
        c = divmod(d, h).first;
        d = c - b.derivative();
        if (h.degree() > 0) out.push_back({h.monic(), k});
    }
    return out;
}

namespace detail {

inline std::vector<Integer> prime_factors(Integer m) {
    std::vector<Integer> out;
    if (m < 0) m = -m;
    for (Integer p = 2; p * p <= m && p < 1000000; ++p) {
        if (m % p != 0) continue;
        out.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) {
        if (m < Integer(1000000) * Integer(1000000) || boost::multiprecision::miller_rabin_test(m, 25))
            out.push_back(m);
        else
            throw Error("coefficient " + m.str() + " is too large to factor for rational root search");
    }
    return out;
}

inline std::vector<Integer> divisors(const Integer& m) {
    std::vector<Integer> out{1};
    Integer rest = m < 0 ? Integer(-m) : m;
    for (const auto& p : prime_factors(rest)) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        std::vector<Integer> next;
        for (const auto& d : out) {
            Integer pk = 1;
            for (int k = 0; k <= e; ++k, pk *= p) next.push_back(d * pk);
        }
        out = std::move(next);
    }
    return out;
}

/// Integer coefficients with the same roots.
inline std::vector<Integer> integer_coeffs(const UniPoly& f) {
    Integer l = 1;
    for (const auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
    std::vector<Integer> out;
    for (const auto& c : f.coeffs()) out.push_back(numerator(c) * (l / denominator(c)));
    return out;
}

}  // namespace detail

/// Distinct rational roots of f, ascending.
inline std::vector<Rational> rational_roots(const UniPoly& f) {
    std::vector<Rational> out;
    if (f.degree() < 1) return out;
    int z = f.order();
    if (z > 0) out.push_back(0);
    auto c = detail::integer_coeffs(f);
    c.erase(c.begin(), c.begin() + z);
    if (c.size() >= 2) {
        auto ps = detail::divisors(c.front());
        auto qs = detail::divisors(c.back());
        std::vector<Rational> seen;
        for (const auto& p : ps)
            for (const auto& q : qs)
                for (int sign : {1, -1}) {
                    Rational r(p * sign, q);
                    if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
                    seen.push_back(r);
                    if (f(r) == 0) out.push_back(r);
                }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ----------------------------------------------------------------- bivariate

/// Sparse polynomial in (x, y); key (a, b) is the exponent pair of x^a y^b.
class BiPoly {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rational>;

    BiPoly() = default;
    explicit BiPoly(Terms t) : t_(std::move(t)) { trim(); }
    static BiPoly constant(const Rational& a) { return BiPoly(Terms{{{0, 0}, a}}); }
    static BiPoly x() { return BiPoly(Terms{{{1, 0}, 1}}); }
    static BiPoly y() { return BiPoly(Terms{{{0, 1}, 1}}); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(int a, int b) const {
        auto it = t_.find({a, b});
        return it == t_.end() ? Rational(0) : it->second;
    }
    std::optional<Rational> as_constant() const {
        if (is_zero()) return Rational(0);
        if (t_.size() == 1 && t_.begin()->first == Exponent{0, 0}) return t_.begin()->second;
        return std::nullopt;
    }

    /// Lowest total degree of a term: the multiplicity at the origin, -1 for zero.
    int order() const {
        int m = -1;
        for (const auto& [e, c] : t_)
            if (m < 0 || e.first + e.second < m) m = e.first + e.second;
        return m;
    }
    int total_degree() const {
        int m = -1;
        for (const auto& [e, c] : t_) m = std::max(m, e.first + e.second);
        return m;
    }
    int degree_x() const {
        int m = -1;
        for (const auto& [e, c] : t_) m = std::max(m, e.first);
        return m;
    }
    int degree_y() const {
        int m = -1;
        for (const auto& [e, c] : t_) m = std::max(m, e.second);
        return m;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) {
        for (const auto& [e, c] : b.t_) a.t_[e] += c;
        a.trim();
        return a;
    }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) {
        for (const auto& [e, c] : b.t_) a.t_[e] -= c;
        a.trim();
        return a;
    }
    friend BiPoly operator-(BiPoly a) {
        for (auto& [e, c] : a.t_) c = -c;
        return a;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        Terms t;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) t[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
        return BiPoly(std::move(t));
    }
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly pow(int k) const {
        BiPoly r = constant(1), base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    /// Substitution x -> x, y -> y + c.
    BiPoly shift_y(const Rational& c) const {
        if (c == 0) return *this;
        Terms t;
        for (const auto& [e, a] : t_) {
            // (y + c)^b = sum binom(b, k) y^k c^(b - k)
            Rational binom = 1, cp = 1;
            std::vector<Rational> cpow(static_cast<std::size_t>(e.second) + 1);
            for (int k = 0; k <= e.second; ++k, cp *= c) cpow[k] = cp;
            for (int k = 0; k <= e.second; ++k) {
                t[{e.first, k}] += a * binom * cpow[e.second - k];
                binom = binom * (e.second - k) / (k + 1);
            }
        }
        return BiPoly(std::move(t));
    }

    BiPoly swap_xy() const {
        Terms t;
        for (const auto& [e, a] : t_) t[{e.second, e.first}] = a;
        return BiPoly(std::move(t));
    }

    BiPoly derivative_x() const {
        Terms t;
        for (const auto& [e, a] : t_)
            if (e.first > 0) t[{e.first - 1, e.second}] = a * e.first;
        return BiPoly(std::move(t));
    }
    BiPoly derivative_y() const {
        Terms t;
        for (const auto& [e, a] : t_)
            if (e.second > 0) t[{e.first, e.second - 1}] = a * e.second;
        return BiPoly(std::move(t));
    }

    /// f(0, y) and f(x, 0).
    UniPoly restrict_x0() const {
        std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_y() + 1)));
        for (const auto& [e, a] : t_)
            if (e.first == 0) c[e.second] = a;
        return UniPoly(std::move(c));
    }
    UniPoly restrict_y0() const { return swap_xy().restrict_x0(); }

    /// f(x0, y) as a polynomial in y.
    UniPoly at_x(const Rational& x0) const {
        std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_y() + 1)));
        for (const auto& [e, a] : t_) {
            Rational p = 1;
            for (int k = 0; k < e.first; ++k) p *= x0;
            c[e.second] += a * p;
        }
        return UniPoly(std::move(c));
    }

    /// Coefficients of f as a polynomial in y over Q[x].
    std::vector<UniPoly> coeffs_in_y() const {
        std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(std::max(0, degree_y() + 1)));
        for (const auto& [e, a] : t_) {
            auto& v = raw[e.second];
            if (v.size() <= static_cast<std::size_t>(e.first)) v.resize(e.first + 1);
            v[e.first] = a;
        }
        std::vector<UniPoly> out;
        for (auto& v : raw) out.emplace_back(std::move(v));
        return out;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            auto [e, a] = *it;
            if (!out.empty()) out += a < 0 ? " - " : " + ";
            else if (a < 0) out += "-";
            a = abs(a);
            bool unit = a == 1 && (e.first + e.second) > 0;
            std::string mono;
            auto var = [&](char v, int k) {
                if (k == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (k > 1) mono += "^" + std::to_string(k);
            };
            var('x', e.first);
            var('y', e.second);
            if (unit)
                out += mono;
            else
                out += to_string(a) + (mono.empty() ? "" : "*" + mono);
        }
        return out;
    }

private:
    void trim() {
        for (auto it = t_.begin(); it != t_.end();)
            it = it->second == 0 ? t_.erase(it) : std::next(it);
    }
    Terms t_;
};

// -------------------------------------------------------------------- parser

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    BiPoly parse() {
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
        BiPoly f = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return f;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        BiPoly f = term();
        for (;;) {
            if (eat('+'))
                f = f + term();
            else if (eat('-'))
                f = f - term();
            else
                return f;
        }
    }
    BiPoly term() {
        BiPoly f = unary();
        for (;;) {
            if (eat('*')) {
                f = f * unary();
            } else if (eat('/')) {
                skip();
                std::size_t at = pos_;
                auto c = unary().as_constant();
                if (!c) throw ParseError(at, "division by a non-constant");
                if (*c == 0) throw ParseError(at, "division by zero");
                f = f * BiPoly::constant(1 / *c);
            } else {
                return f;
            }
        }
    }
    BiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    BiPoly power() {
        BiPoly base = atom();
        if (eat('^')) {
            skip();
            std::size_t at = pos_;
            Integer e = number_literal();
            if (e > 10000) throw ParseError(at, "exponent too large");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }
    BiPoly atom() {
        skip();
        if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly f = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return f;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return BiPoly::x();
        }
        if (c == 'y' || c == 'Y') {
            ++pos_;
            return BiPoly::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(Rational(number_literal()));
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }
    Integer number_literal() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(pos_, "expected a non-negative integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression in x, y with integer literals, + - * / ^ and parentheses.
inline BiPoly parse_poly(const std::string& s) { return detail::PolyParser(s).parse(); }

}  // namespace resdouble
