#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>

#include "qheis/error.hpp"

namespace qheis {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i): re + im*i. cpp_rational keeps both parts in
/// lowest terms with positive denominator.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long n) : re(n) {}

    static GaussianRational imaginary_unit() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    // i*i = -1
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianRational&) const = default;
};

/// Laurent monomial over named parameters. The reserved names are "q" and
/// "hbar"; any other declared name (e.g. "Q[1,2]" for a deformation
/// coefficient) is a free invertible parameter. The "hbar" exponent may
/// never be negative: nothing in the relation systems divides by hbar.
class Monomial {
public:
    Monomial() = default;

    static Monomial param(const std::string& name, int exp = 1) {
        Monomial m;
        if (exp != 0) m.exps_[name] = exp;
        m.check();
        return m;
    }

    /// Canonical name of the pairwise deformation parameter q_{jk}; the
    /// index pair is unordered, so it is stored sorted.
    static std::string qjk_name(int j, int k) {
        if (j > k) std::swap(j, k);
        return "Q[" + std::to_string(j) + "," + std::to_string(k) + "]";
    }

    bool is_unit() const { return exps_.empty(); }
    const std::map<std::string, int>& exponents() const { return exps_; }
    int exponent(const std::string& name) const {
        auto it = exps_.find(name);
        return it == exps_.end() ? 0 : it->second;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (const auto& [name, e] : o.exps_) {
            int ne = r.exponent(name) + e;
            if (ne == 0)
                r.exps_.erase(name);
            else
                r.exps_[name] = ne;
        }
        r.check();
        return r;
    }

    Monomial inverse() const {
        Monomial r;
        for (const auto& [name, e] : exps_) r.exps_[name] = -e;
        r.check();
        return r;
    }

    /// Substitute q := 1 (drop the "q" exponent).
    Monomial without(const std::string& name) const {
        Monomial r = *this;
        r.exps_.erase(name);
        return r;
    }

    auto operator<=>(const Monomial&) const = default;

private:
    void check() const {
        auto it = exps_.find("hbar");
        if (it != exps_.end() && it->second < 0)
            throw DomainError("hbar is not invertible");
    }

    std::map<std::string, int> exps_;
};

/// Exact scalar: finite Q(i)-linear combination of Laurent monomials.
/// Canonical form stores no zero coefficients, so equality is map equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) { add_term(Monomial(), GaussianRational(n)); }
    Scalar(const GaussianRational& g) { add_term(Monomial(), g); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(GaussianRational::imaginary_unit()); }
    static Scalar rational(Rational r) { return Scalar(GaussianRational(std::move(r))); }
    static Scalar param(const std::string& name, int exp = 1) {
        Scalar s;
        s.add_term(Monomial::param(name, exp), GaussianRational(1));
        return s;
    }
    static Scalar q(int exp = 1) { return param("q", exp); }
    static Scalar hbar(int exp = 1) { return param("hbar", exp); }
    static Scalar qjk(int j, int k, int exp = 1) { return param(Monomial::qjk_name(j, k), exp); }
    static Scalar monomial(const Monomial& m, const GaussianRational& g) {
        Scalar s;
        s.add_term(m, g);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one();
    }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    void add_term(const Monomial& m, const GaussianRational& g) {
        if (g.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, g);
        if (!inserted) {
            it->second = it->second + g;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar operator-() const {
        Scalar r;
        for (const auto& [m, g] : terms_) r.terms_.emplace(m, -g);
        return r;
    }
    Scalar operator+(const Scalar& o) const {
        Scalar r = *this;
        for (const auto& [m, g] : o.terms_) r.add_term(m, g);
        return r;
    }
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    Scalar operator*(const Scalar& o) const {
        Scalar r;
        for (const auto& [ma, ga] : terms_)
            for (const auto& [mb, gb] : o.terms_) r.add_term(ma * mb, ga * gb);
        return r;
    }

    /// Substitute q := 1; every other parameter is untouched.
    Scalar limit_q1() const {
        Scalar r;
        for (const auto& [m, g] : terms_) r.add_term(m.without("q"), g);
        return r;
    }

    bool operator==(const Scalar&) const = default;

private:
    std::map<Monomial, GaussianRational> terms_;
};

}  // namespace qheis
