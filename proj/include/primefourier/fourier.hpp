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
 * @file fourier.hpp
 * @brief Exact Fourier analysis on Z/pZ with values in Q(w).
 *
 * Conventions:
 *   forward  F(xi) = (1/p) sum_x f(x) w^(-x xi)
 *   inverse  f(x)  = sum_xi F(xi) w^(x xi)
 *   (f*g)(x) = sum_y f(y) g(x - y), so dft(f*g) = p dft(f) dft(g).
 *
 * Frequencies are identified with {0, ..., p-1}.
 */

#ifndef PRIMEFOURIER_FOURIER_HPP
#define PRIMEFOURIER_FOURIER_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"

namespace primefourier {

/// Sorted, duplicate-free subset of Z/pZ.
class SupportSet {
   public:
    explicit SupportSet(PrimeModulus p) : p_(p) {}

    SupportSet(PrimeModulus p, std::vector<unsigned> members) : p_(p), m_(std::move(members)) {
        std::sort(m_.begin(), m_.end());
        if (std::adjacent_find(m_.begin(), m_.end()) != m_.end())
            throw precondition_error("support set contains a duplicate residue");
        if (!m_.empty() && m_.back() >= p.value())
            throw precondition_error("residue " + std::to_string(m_.back()) + " is not below p = " +
                                     std::to_string(p.value()));
    }

    SupportSet(PrimeModulus p, std::initializer_list<unsigned> members)
        : SupportSet(p, std::vector<unsigned>(members)) {}

    static SupportSet full(PrimeModulus p) {
        std::vector<unsigned> all(p.value());
        for (unsigned x = 0; x < p.value(); ++x) all[x] = x;
        return SupportSet(p, std::move(all));
    }

    /// Bit x of mask selects residue x. Requires p <= 64.
    static SupportSet from_mask(PrimeModulus p, std::uint64_t mask) {
        if (p.value() > 64) throw precondition_error("bitmask subsets need p <= 64");
        std::vector<unsigned> m;
        for (unsigned x = 0; x < p.value(); ++x)
            if ((mask >> x) & 1U) m.push_back(x);
        if (p.value() < 64 && (mask >> p.value()) != 0) throw precondition_error("mask has bits at or above p");
        return SupportSet(p, std::move(m));
    }

    const PrimeModulus& modulus() const noexcept { return p_; }
    std::span<const unsigned> members() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_.size(); }
    bool empty() const noexcept { return m_.empty(); }
    unsigned operator[](std::size_t i) const { return m_.at(i); }
    auto begin() const noexcept { return m_.begin(); }
    auto end() const noexcept { return m_.end(); }

    bool contains(unsigned x) const { return std::binary_search(m_.begin(), m_.end(), x); }

    unsigned min() const {
        if (m_.empty()) throw precondition_error("min of an empty set");
        return m_.front();
    }

    /// Position of x in sorted order.
    std::optional<std::size_t> index_of(unsigned x) const {
        auto it = std::lower_bound(m_.begin(), m_.end(), x);
        if (it == m_.end() || *it != x) return std::nullopt;
        return static_cast<std::size_t>(it - m_.begin());
    }

    SupportSet complement() const {
        std::vector<unsigned> r;
        for (unsigned x = 0; x < p_.value(); ++x)
            if (!contains(x)) r.push_back(x);
        return SupportSet(p_, std::move(r));
    }

    SupportSet intersect(const SupportSet& o) const {
        require_same_modulus(p_, o.p_);
        std::vector<unsigned> r;
        std::set_intersection(m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), std::back_inserter(r));
        return SupportSet(p_, std::move(r));
    }

    SupportSet unite(const SupportSet& o) const {
        require_same_modulus(p_, o.p_);
        std::vector<unsigned> r;
        std::set_union(m_.begin(), m_.end(), o.m_.begin(), o.m_.end(), std::back_inserter(r));
        return SupportSet(p_, std::move(r));
    }

    bool is_subset_of(const SupportSet& o) const {
        require_same_modulus(p_, o.p_);
        return std::includes(o.m_.begin(), o.m_.end(), m_.begin(), m_.end());
    }

    /// {x + a}
    SupportSet translate(std::int64_t a) const {
        std::vector<unsigned> r;
        r.reserve(m_.size());
        for (unsigned x : m_) r.push_back(p_.reduce(static_cast<std::int64_t>(x) + a));
        return SupportSet(p_, std::move(r));
    }

    /// {-x}
    SupportSet negate() const {
        std::vector<unsigned> r;
        r.reserve(m_.size());
        for (unsigned x : m_) r.push_back(p_.reduce(-static_cast<std::int64_t>(x)));
        return SupportSet(p_, std::move(r));
    }

    std::uint64_t mask() const {
        if (p_.value() > 64) throw precondition_error("bitmask subsets need p <= 64");
        std::uint64_t b = 0;
        for (unsigned x : m_) b |= std::uint64_t{1} << x;
        return b;
    }

    friend bool operator==(const SupportSet&, const SupportSet&) = default;

   private:
    PrimeModulus p_;
    std::vector<unsigned> m_;
};

inline std::string to_string(const SupportSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

/// Function Z/pZ -> Q(w).
class SignalFn {
   public:
    explicit SignalFn(PrimeModulus p) : p_(p), v_(p.value(), CycloNum(p)) {}

    SignalFn(PrimeModulus p, std::vector<CycloNum> values) : p_(p), v_(std::move(values)) {
        if (v_.size() != p.value()) throw precondition_error("signal must have exactly p values");
        for (const auto& v : v_) require_same_modulus(p_, v.modulus());
    }

    /// Rational-valued signal.
    static SignalFn from_rationals(PrimeModulus p, std::span<const Rational> values) {
        if (values.size() != p.value()) throw precondition_error("signal must have exactly p values");
        std::vector<CycloNum> v;
        v.reserve(values.size());
        for (const auto& r : values) v.emplace_back(p, r);
        return SignalFn(p, std::move(v));
    }

    static SignalFn from_integers(PrimeModulus p, std::span<const std::int64_t> values) {
        std::vector<Rational> r;
        r.reserve(values.size());
        for (auto x : values) r.emplace_back(static_cast<long>(x));
        return from_rationals(p, r);
    }

    static SignalFn dirac(PrimeModulus p, std::int64_t at, Rational value = 1) {
        SignalFn f(p);
        f.v_[p.reduce(at)] = CycloNum(p, std::move(value));
        return f;
    }

    static SignalFn constant(PrimeModulus p, Rational value = 1) {
        return SignalFn(p, std::vector<CycloNum>(p.value(), CycloNum(p, std::move(value))));
    }

    /// x -> w^(b x)
    static SignalFn character(PrimeModulus p, std::int64_t b) {
        std::vector<CycloNum> v;
        for (unsigned x = 0; x < p.value(); ++x) v.push_back(root_power(p, b * static_cast<std::int64_t>(x)));
        return SignalFn(p, std::move(v));
    }

    const PrimeModulus& modulus() const noexcept { return p_; }
    std::span<const CycloNum> values() const noexcept { return v_; }
    const CycloNum& operator[](std::size_t x) const { return v_.at(x); }

    bool is_zero() const noexcept {
        return std::all_of(v_.begin(), v_.end(), [](const CycloNum& c) { return c.is_zero(); });
    }

    SignalFn& operator+=(const SignalFn& o) {
        require_same_modulus(p_, o.p_);
        for (std::size_t x = 0; x < v_.size(); ++x) v_[x] += o.v_[x];
        return *this;
    }

    SignalFn& operator-=(const SignalFn& o) {
        require_same_modulus(p_, o.p_);
        for (std::size_t x = 0; x < v_.size(); ++x) v_[x] -= o.v_[x];
        return *this;
    }

    SignalFn& operator*=(const Rational& s) {
        for (auto& v : v_) v *= s;
        return *this;
    }

    friend SignalFn operator+(SignalFn a, const SignalFn& b) { return a += b; }
    friend SignalFn operator-(SignalFn a, const SignalFn& b) { return a -= b; }
    friend SignalFn operator*(const Rational& s, SignalFn a) { return a *= s; }

    /// Pointwise product.
    friend SignalFn pointwise(const SignalFn& a, const SignalFn& b) {
        require_same_modulus(a.p_, b.p_);
        std::vector<CycloNum> v;
        v.reserve(a.v_.size());
        for (std::size_t x = 0; x < a.v_.size(); ++x) v.push_back(a.v_[x] * b.v_[x]);
        return SignalFn(a.p_, std::move(v));
    }

    /// x -> f(x - a)
    SignalFn translate(std::int64_t a) const {
        std::vector<CycloNum> v(v_.size(), CycloNum(p_));
        for (unsigned x = 0; x < p_.value(); ++x) v[p_.reduce(static_cast<std::int64_t>(x) + a)] = v_[x];
        return SignalFn(p_, std::move(v));
    }

    /// x -> f(x) w^(b x)
    SignalFn modulate(std::int64_t b) const {
        std::vector<CycloNum> v;
        v.reserve(v_.size());
        for (unsigned x = 0; x < p_.value(); ++x) v.push_back(v_[x].times_root(b * static_cast<std::int64_t>(x)));
        return SignalFn(p_, std::move(v));
    }

    friend bool operator==(const SignalFn&, const SignalFn&) = default;

   private:
    PrimeModulus p_;
    std::vector<CycloNum> v_;
};

namespace detail {

/// sum_x f(x) w^(sign x xi) for every xi, accumulated with cyclic shifts.
inline std::vector<CycloNum> character_sums(const SignalFn& f, int sign, const Rational& scale) {
    const PrimeModulus& p = f.modulus();
    std::vector<CycloNum> out;
    out.reserve(p.value());
    std::vector<Rational> wide(p.value());
    for (unsigned xi = 0; xi < p.value(); ++xi) {
        for (auto& w : wide) w = 0;
        for (unsigned x = 0; x < p.value(); ++x)
            f[x].accumulate_into(wide, sign * static_cast<std::int64_t>(x) * static_cast<std::int64_t>(xi));
        CycloNum v = CycloNum::from_wide(p, wide);
        if (scale != 1) v *= scale;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

inline SignalFn dft(const SignalFn& f) {
    const PrimeModulus& p = f.modulus();
    return SignalFn(p, detail::character_sums(f, -1, Rational(1, p.value())));
}

inline SignalFn idft(const SignalFn& spectrum) {
    return SignalFn(spectrum.modulus(), detail::character_sums(spectrum, 1, Rational(1)));
}

inline SupportSet support(const SignalFn& f) {
    std::vector<unsigned> m;
    for (unsigned x = 0; x < f.modulus().value(); ++x)
        if (!f[x].is_zero()) m.push_back(x);
    return SupportSet(f.modulus(), std::move(m));
}

inline SignalFn convolve(const SignalFn& f, const SignalFn& g) {
    require_same_modulus(f.modulus(), g.modulus());
    const PrimeModulus& p = f.modulus();
    std::vector<CycloNum> out(p.value(), CycloNum(p));
    for (unsigned y = 0; y < p.value(); ++y) {
        if (f[y].is_zero()) continue;
        for (unsigned z = 0; z < p.value(); ++z) {
            if (g[z].is_zero()) continue;
            out[p.reduce(static_cast<std::int64_t>(y) + z)] += f[y] * g[z];
        }
    }
    return SignalFn(p, std::move(out));
}

/// Square matrix over Q(w), row-major.
class CycloMatrix {
   public:
    CycloMatrix(PrimeModulus p, std::size_t n) : p_(p), n_(n), a_(n * n, CycloNum(p)) {}

    std::size_t size() const noexcept { return n_; }
    const PrimeModulus& modulus() const noexcept { return p_; }
    CycloNum& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const CycloNum& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    std::vector<CycloNum> apply(std::span<const CycloNum> x) const {
        if (x.size() != n_) throw precondition_error("vector length does not match matrix size");
        std::vector<CycloNum> y(n_, CycloNum(p_));
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c)
                if (!x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
        return y;
    }

    friend bool operator==(const CycloMatrix&, const CycloMatrix&) = default;

   private:
    PrimeModulus p_;
    std::size_t n_;
    std::vector<CycloNum> a_;
};

/// Submatrix (w^(x_j xi_k)) of the character table.
struct FourierMinor {
    SupportSet rows;
    SupportSet cols;
    CycloMatrix entries;

    std::size_t size() const noexcept { return entries.size(); }
};

inline FourierMinor minor_matrix(PrimeModulus p, SupportSet rows, SupportSet cols) {
    require_same_modulus(p, rows.modulus());
    require_same_modulus(p, cols.modulus());
    if (rows.empty() || cols.empty()) throw precondition_error("minor needs nonempty row and column sets");
    if (rows.size() != cols.size())
        throw precondition_error("minor needs |rows| = |cols|, got " + std::to_string(rows.size()) + " and " +
                                 std::to_string(cols.size()));
    CycloMatrix m(p, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t k = 0; k < cols.size(); ++k)
            m(j, k) = root_power(p, static_cast<std::int64_t>(rows[j]) * cols[k]);
    return FourierMinor{std::move(rows), std::move(cols), std::move(m)};
}

/// Gaussian elimination over Q(w); pivot is the first nonzero entry by row.
/// Returns the determinant, zero for a singular matrix.
inline CycloNum determinant(CycloMatrix m) {
    const std::size_t n = m.size();
    const PrimeModulus p = m.modulus();
    CycloNum det(p, Rational(1));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return CycloNum(p);
        if (piv != c) {
            for (std::size_t k = c; k < n; ++k) std::swap(m(piv, k), m(c, k));
            det = -det;
        }
        const CycloNum inv = inverse(m(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const CycloNum factor = m(r, c) * inv;
            for (std::size_t k = c + 1; k < n; ++k) m(r, k) -= factor * m(c, k);
        }
        det *= m(c, c);
    }
    return det;
}

/// Exact determinant of a Fourier minor; a zero value is a theorem violation.
inline CycloNum minor_det(const FourierMinor& minor) {
    CycloNum d = determinant(minor.entries);
    if (d.is_zero())
        throw theorem_violation("singular Fourier minor rows " + to_string(minor.rows) + " cols " +
                                to_string(minor.cols));
    return d;
}

/// Unique x with m x = rhs, or nullopt when elimination runs out of pivots.
inline std::optional<std::vector<CycloNum>> solve(CycloMatrix m, std::vector<CycloNum> rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw precondition_error("right-hand side length does not match matrix size");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) {
            for (std::size_t k = c; k < n; ++k) std::swap(m(piv, k), m(c, k));
            std::swap(rhs[piv], rhs[c]);
        }
        const CycloNum inv = inverse(m(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const CycloNum factor = m(r, c) * inv;
            for (std::size_t k = c + 1; k < n; ++k) m(r, k) -= factor * m(c, k);
            rhs[r] -= factor * rhs[c];
        }
    }
    std::vector<CycloNum> x(n, CycloNum(m.modulus()));
    for (std::size_t r = n; r-- > 0;) {
        CycloNum acc = rhs[r];
        for (std::size_t k = r + 1; k < n; ++k)
            if (!x[k].is_zero()) acc -= m(r, k) * x[k];
        x[r] = acc.is_zero() ? std::move(acc) : acc * inverse(m(r, r));
    }
    return x;
}

inline std::vector<CycloNum> minor_solve(const FourierMinor& minor, std::vector<CycloNum> rhs) {
    for (const auto& v : rhs) require_same_modulus(minor.entries.modulus(), v.modulus());
    auto x = solve(minor.entries, std::move(rhs));
    if (!x)
        throw theorem_violation("no pivot while solving against minor rows " + to_string(minor.rows) + " cols " +
                                to_string(minor.cols));
    return std::move(*x);
}

/// prod_{k<k'} (xi_k - xi_k') mod p, in [0, p). Nonzero for distinct residues.
inline unsigned vandermonde_det_mod_p(const SupportSet& cols) {
    if (cols.empty()) throw precondition_error("Vandermonde product needs at least one column");
    const PrimeModulus& p = cols.modulus();
    std::uint64_t acc = 1;
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t l = k + 1; l < cols.size(); ++l)
            acc = acc * p.reduce(static_cast<std::int64_t>(cols[k]) - cols[l]) % p.value();
    if (acc == 0) throw theorem_violation("Vandermonde product vanishes mod p for distinct residues");
    return static_cast<unsigned>(acc);
}

}  // namespace primefourier

#endif  // PRIMEFOURIER_FOURIER_HPP
