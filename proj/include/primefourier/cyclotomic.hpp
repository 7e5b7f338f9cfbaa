/*
   Copyright 2026 The primefourier Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(w), w = exp(2*pi*i/p) for a prime p.
 *
 * Elements are stored in the power basis 1, w, ..., w^(p-2). The minimal
 * polynomial of w is 1 + z + ... + z^(p-1), so this basis has no redundancy
 * and two elements are equal iff their coefficient vectors are equal.
 *
 * Internally many operations go through a "wide" vector of length p indexed
 * by exponents mod p (the ring Q[z]/(z^p - 1)). A wide vector maps to the
 * canonical form by subtracting its last entry from every other entry, since
 * w^(p-1) = -(1 + w + ... + w^(p-2)). The kernel of that map is the span of
 * (1, ..., 1).
 */

#ifndef PRIMEFOURIER_CYCLOTOMIC_HPP
#define PRIMEFOURIER_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace primefourier {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::int64_t default_max_prime = 10007;

/// Deterministic trial division.
inline bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// A validated prime p; the ambient group is Z/pZ.
class PrimeModulus {
   public:
    explicit PrimeModulus(std::int64_t p, std::int64_t max_p = default_max_prime) {
        if (p > max_p)
            throw precondition_error("modulus " + std::to_string(p) + " exceeds the configured bound " +
                                     std::to_string(max_p));
        if (!is_prime(p)) throw precondition_error("modulus " + std::to_string(p) + " is not prime");
        p_ = static_cast<unsigned>(p);
    }

    unsigned value() const noexcept { return p_; }
    /// Degree of Q(w) over Q, i.e. the length of a coefficient vector.
    unsigned degree() const noexcept { return p_ - 1; }

    /// Representative of k in [0, p).
    unsigned reduce(std::int64_t k) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        return static_cast<unsigned>(((k % p) + p) % p);
    }

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

   private:
    unsigned p_ = 2;
};

inline void require_same_modulus(const PrimeModulus& a, const PrimeModulus& b) {
    if (a != b)
        throw precondition_error("modulus mismatch: " + std::to_string(a.value()) + " vs " +
                                 std::to_string(b.value()));
}

namespace detail {

/// Dense polynomial over Q, lowest degree first, no trailing zeros.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

/// Replaces a by a mod b; returns the quotient. b must be nonzero and trimmed.
inline QPoly divmod(QPoly& a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1);
    const Rational lead_inv = 1 / b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (sgn(a[i]) == 0) continue;
        const std::size_t shift = i - (b.size() - 1);
        Rational f = a[i] * lead_inv;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        q[shift] = std::move(f);
    }
    trim(a);
    trim(q);
    return q;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline QPoly sub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline std::string rational_text(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw precondition_error("bad rational '" + s + "'");
    if (r.get_den() == 0) throw precondition_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace detail

/// An exact element of Q(w), coefficient c_i attached to w^i for 0 <= i <= p-2.
class CycloNum {
   public:
    explicit CycloNum(PrimeModulus p) : p_(p), c_(p.degree()) {}

    CycloNum(PrimeModulus p, Rational scalar) : CycloNum(p) {
        scalar.canonicalize();
        c_[0] = std::move(scalar);
    }

    /// Requires exactly p-1 coefficients.
    CycloNum(PrimeModulus p, std::vector<Rational> coeffs) : p_(p), c_(std::move(coeffs)) {
        if (c_.size() != p.degree())
            throw precondition_error("expected " + std::to_string(p.degree()) + " coefficients, got " +
                                     std::to_string(c_.size()));
        for (auto& c : c_) c.canonicalize();
    }

    /// Reduces a vector indexed by exponents mod p (length exactly p).
    static CycloNum from_wide(PrimeModulus p, std::span<const Rational> wide) {
        if (wide.size() != p.value()) throw precondition_error("wide vector must have length p");
        CycloNum r(p);
        const Rational& top = wide[p.value() - 1];
        for (unsigned i = 0; i + 1 < p.value(); ++i) r.c_[i] = wide[i] - top;
        return r;
    }

    /// Adds this value times w^shift into a wide accumulator of length p.
    void accumulate_into(std::span<Rational> wide, std::int64_t shift) const {
        const unsigned p = p_.value();
        const unsigned s = p_.reduce(shift);
        for (unsigned i = 0; i + 1 < p; ++i) {
            if (sgn(c_[i]) == 0) continue;
            unsigned k = i + s;
            if (k >= p) k -= p;
            wide[k] += c_[i];
        }
    }

    const PrimeModulus& modulus() const noexcept { return p_; }
    std::span<const Rational> coeffs() const noexcept { return c_; }
    const Rational& coeff(std::size_t i) const { return c_.at(i); }

    bool is_zero() const noexcept {
        for (const auto& c : c_)
            if (sgn(c) != 0) return false;
        return true;
    }

    bool is_rational() const noexcept {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (sgn(c_[i]) != 0) return false;
        return true;
    }

    CycloNum operator-() const {
        CycloNum r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    CycloNum& operator+=(const CycloNum& o) {
        require_same_modulus(p_, o.p_);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    CycloNum& operator-=(const CycloNum& o) {
        require_same_modulus(p_, o.p_);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    CycloNum& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    /// Schoolbook product folded mod z^p - 1, then reduced.
    CycloNum& operator*=(const CycloNum& o) {
        require_same_modulus(p_, o.p_);
        const unsigned p = p_.value();
        std::vector<Rational> wide(p);
        for (unsigned i = 0; i + 1 < p; ++i) {
            if (sgn(c_[i]) == 0) continue;
            for (unsigned j = 0; j + 1 < p; ++j) {
                if (sgn(o.c_[j]) == 0) continue;
                unsigned k = i + j;
                if (k >= p) k -= p;
                wide[k] += c_[i] * o.c_[j];
            }
        }
        *this = from_wide(p_, wide);
        return *this;
    }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const Rational& s) { return a *= s; }
    friend CycloNum operator*(const Rational& s, CycloNum a) { return a *= s; }

    /// Multiplication by w^k, a cyclic shift in the wide representation.
    CycloNum times_root(std::int64_t k) const {
        std::vector<Rational> wide(p_.value());
        accumulate_into(wide, k);
        return from_wide(p_, wide);
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

   private:
    PrimeModulus p_;
    std::vector<Rational> c_;
};

/// w^(k mod p) in canonical form.
inline CycloNum root_power(PrimeModulus p, std::int64_t k) {
    const unsigned e = p.reduce(k);
    std::vector<Rational> c(p.degree());
    if (e + 1 == p.value()) {
        for (auto& x : c) x = -1;
    } else {
        c[e] = 1;
    }
    return CycloNum(p, std::move(c));
}

inline bool is_zero(const CycloNum& a) noexcept { return a.is_zero(); }

/// Inverse by extended Euclid against 1 + z + ... + z^(p-1) over Q.
inline CycloNum inverse(const CycloNum& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero in Q(w)");
    const PrimeModulus& p = a.modulus();
    detail::QPoly r0(p.value(), Rational(1));
    detail::QPoly r1(a.coeffs().begin(), a.coeffs().end());
    detail::trim(r1);
    detail::QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        detail::QPoly rem = r0;
        detail::QPoly q = detail::divmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        detail::QPoly next = detail::sub(s0, detail::mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    // r0 is a nonzero constant because the minimal polynomial is irreducible.
    if (r0.size() != 1) throw theorem_violation("gcd with the minimal polynomial is not constant");
    const Rational scale = 1 / r0[0];
    std::vector<Rational> wide(p.value());
    for (std::size_t i = 0; i < s0.size(); ++i) wide[i % p.value()] += s0[i] * scale;
    return CycloNum::from_wide(p, wide);
}

/// Image under w -> w^(p-1), complex conjugation in the standard embedding.
inline CycloNum conj(const CycloNum& a) {
    const PrimeModulus& p = a.modulus();
    std::vector<Rational> wide(p.value());
    wide[0] = a.coeff(0);
    for (unsigned i = 1; i + 1 < p.value(); ++i) wide[p.value() - i] = a.coeff(i);
    return CycloNum::from_wide(p, wide);
}

/// Double-precision value of a under w = exp(2*pi*i/p). Test oracle only.
inline std::complex<double> embed(const CycloNum& a) {
    const unsigned p = a.modulus().value();
    std::complex<double> z{0.0, 0.0};
    for (unsigned i = 0; i + 1 < p; ++i) {
        const double c = a.coeff(i).get_d();
        if (!std::isfinite(c)) throw std::overflow_error("coefficient outside double range");
        const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(p);
        z += c * std::complex<double>(std::cos(t), std::sin(t));
    }
    return z;
}

/// Canonical text: "c0 + c1*w + c2*w^2 + ..." with every coefficient listed.
inline std::string to_string(const CycloNum& a) {
    std::string out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i > 0) out += " + ";
        out += detail::rational_text(a.coeff(i));
        if (i == 1) out += "*w";
        if (i >= 2) out += "*w^" + std::to_string(i);
    }
    return out;
}

/// Parses the canonical text form. Terms may appear in any order and repeat;
/// "w^k" with k up to p-1 is accepted and reduced.
inline CycloNum parse_cyclonum(PrimeModulus p, std::string_view text) {
    std::vector<Rational> wide(p.value());
    std::size_t pos = 0;
    auto strip = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    while (pos <= text.size()) {
        std::size_t next = text.find(" + ", pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view term = strip(text.substr(pos, next - pos));
        if (term.empty()) throw precondition_error("empty term in '" + std::string(text) + "'");
        std::size_t exponent = 0;
        std::string_view coeff = term;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            coeff = term.substr(0, star);
            std::string_view power = term.substr(star + 1);
            if (power == "w") {
                exponent = 1;
            } else if (power.starts_with("w^")) {
                try {
                    exponent = std::stoul(std::string(power.substr(2)));
                } catch (const std::exception&) {
                    throw precondition_error("bad exponent in '" + std::string(term) + "'");
                }
            } else {
                throw precondition_error("bad term '" + std::string(term) + "'");
            }
        }
        wide[exponent % p.value()] += detail::parse_rational(strip(coeff));
        pos = next + 3;
    }
    return CycloNum::from_wide(p, wide);
}

inline std::ostream& operator<<(std::ostream& os, const CycloNum& a) { return os << to_string(a); }

/// Multivariate polynomial with integer coefficients, sparse in exponent tuples.
class IntPolynomial {
   public:
    using Exponents = std::vector<unsigned>;

    explicit IntPolynomial(std::size_t variables) : n_(variables) {}

    IntPolynomial& add_term(const Exponents& exps, const Integer& coeff) {
        if (exps.size() != n_) throw precondition_error("exponent tuple has wrong length");
        if (coeff == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    std::size_t variables() const noexcept { return n_; }
    const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }

    Integer value_at_ones() const {
        Integer s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

   private:
    std::size_t n_;
    std::map<Exponents, Integer> terms_;
};

/// Q(z) = P(z^k1, ..., z^kn) mod z^p - 1, returned as a univariate IntPolynomial.
inline IntPolynomial galois_reduce(const IntPolynomial& poly, std::span<const unsigned> powers, PrimeModulus p) {
    if (powers.size() != poly.variables()) throw precondition_error("one power per variable required");
    for (unsigned k : powers)
        if (k >= p.value()) throw precondition_error("powers must lie in [0, p)");
    IntPolynomial q(1);
    for (const auto& [exps, c] : poly.terms()) {
        std::uint64_t e = 0;
        for (std::size_t j = 0; j < exps.size(); ++j)
            e = (e + static_cast<std::uint64_t>(exps[j] % p.value()) * powers[j]) % p.value();
        q.add_term({static_cast<unsigned>(e)}, c);
    }
    return q;
}

struct GaloisReport {
    bool vanishes_at_roots = false;
    Integer value_at_one;
    bool divisible_by_p = false;
};

/// Evaluates P at (w^k1, ..., w^kn) exactly. A zero value forces P(1, ..., 1)
/// to be a multiple of p; a counterexample raises theorem_violation.
inline GaloisReport galois_divisibility_check(const IntPolynomial& poly, std::span<const unsigned> powers,
                                              PrimeModulus p) {
    const IntPolynomial q = galois_reduce(poly, powers, p);
    std::vector<Rational> wide(p.value());
    for (const auto& [e, c] : q.terms()) wide[e[0]] += Rational(c);
    GaloisReport r;
    r.vanishes_at_roots = CycloNum::from_wide(p, wide).is_zero();
    r.value_at_one = poly.value_at_ones();
    r.divisible_by_p = mpz_divisible_ui_p(r.value_at_one.get_mpz_t(), p.value()) != 0;
    if (r.vanishes_at_roots && !r.divisible_by_p)
        throw theorem_violation("P vanishes at roots of unity but P(1,...,1) = " + r.value_at_one.get_str() +
                                " is not a multiple of " + std::to_string(p.value()));
    return r;
}

}  // namespace primefourier

#endif  // PRIMEFOURIER_CYCLOTOMIC_HPP
