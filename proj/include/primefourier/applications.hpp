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
 * @file applications.hpp
 * @brief Consequences of the additive uncertainty bound: zeros of sparse
 *        polynomials at p-th roots of unity, Cauchy-Davenport with a replay
 *        of its convolution proof, and the support bound on (Z/pZ)^n.
 */

#ifndef PRIMEFOURIER_APPLICATIONS_HPP
#define PRIMEFOURIER_APPLICATIONS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fourier.hpp"
#include "uncertainty.hpp"

namespace primefourier {

/// sum_j c_j z^(n_j) with 0 <= n_0 < ... < n_k < p and every c_j nonzero.
class SparsePoly {
   public:
    using Term = std::pair<unsigned, CycloNum>;

    SparsePoly(PrimeModulus p, std::vector<Term> terms) : p_(p), terms_(std::move(terms)) {
        if (terms_.empty() || terms_.size() > p.value())
            throw precondition_error("sparse polynomial needs between 1 and p terms");
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        for (std::size_t j = 0; j < terms_.size(); ++j) {
            require_same_modulus(p, terms_[j].second.modulus());
            if (terms_[j].first >= p.value()) throw precondition_error("exponents must lie in [0, p)");
            if (terms_[j].second.is_zero()) throw precondition_error("coefficients must be nonzero");
            if (j > 0 && terms_[j].first == terms_[j - 1].first) throw precondition_error("exponents must be distinct");
        }
    }

    /// Rational coefficients.
    static SparsePoly from_rationals(PrimeModulus p, std::span<const unsigned> exponents,
                                     std::span<const Rational> coeffs) {
        if (exponents.size() != coeffs.size()) throw precondition_error("one coefficient per exponent required");
        std::vector<Term> t;
        for (std::size_t j = 0; j < exponents.size(); ++j) t.emplace_back(exponents[j], CycloNum(p, coeffs[j]));
        return SparsePoly(p, std::move(t));
    }

    const PrimeModulus& modulus() const noexcept { return p_; }
    std::span<const Term> terms() const noexcept { return terms_; }

    /// Value at w^t.
    CycloNum evaluate_at_root(std::int64_t t) const {
        std::vector<Rational> wide(p_.value());
        for (const auto& [e, c] : terms_) c.accumulate_into(wide, t * static_cast<std::int64_t>(e));
        return CycloNum::from_wide(p_, wide);
    }

   private:
    PrimeModulus p_;
    std::vector<Term> terms_;
};

struct SparseZeroReport {
    SupportSet zeros;
    std::size_t k = 0;  // term count minus one
    bool bound_holds = false;
};

/// Exponents t with P(w^t) = 0; there are at most k of them.
inline SparseZeroReport sparse_zero_count(const SparsePoly& poly) {
    const PrimeModulus& p = poly.modulus();
    std::vector<unsigned> zeros;
    for (unsigned t = 0; t < p.value(); ++t)
        if (poly.evaluate_at_root(t).is_zero()) zeros.push_back(t);
    SparseZeroReport r{SupportSet(p, std::move(zeros)), poly.terms().size() - 1};
    r.bound_holds = r.zeros.size() <= r.k;
    if (!r.bound_holds)
        throw theorem_violation("sparse polynomial with " + std::to_string(r.k + 1) + " terms vanishes at " +
                                std::to_string(r.zeros.size()) + " roots of unity");
    return r;
}

inline SupportSet sumset(const SupportSet& A, const SupportSet& B) {
    require_same_modulus(A.modulus(), B.modulus());
    const PrimeModulus& p = A.modulus();
    std::vector<bool> hit(p.value());
    for (unsigned a : A)
        for (unsigned b : B) hit[(a + b) % p.value()] = true;
    std::vector<unsigned> m;
    for (unsigned x = 0; x < p.value(); ++x)
        if (hit[x]) m.push_back(x);
    return SupportSet(p, std::move(m));
}

struct CauchyDavenportReport {
    std::size_t lhs = 0;  // |A + B|
    std::size_t rhs = 0;  // min(|A| + |B| - 1, p)
    bool holds = false;
};

inline CauchyDavenportReport cauchy_davenport_check(const SupportSet& A, const SupportSet& B) {
    require_same_modulus(A.modulus(), B.modulus());
    if (A.empty() || B.empty()) throw precondition_error("Cauchy-Davenport needs nonempty sets");
    CauchyDavenportReport r;
    r.lhs = sumset(A, B).size();
    r.rhs = std::min<std::size_t>(A.size() + B.size() - 1, A.modulus().value());
    r.holds = r.lhs >= r.rhs;
    if (!r.holds)
        throw theorem_violation("|A+B| = " + std::to_string(r.lhs) + " < " + std::to_string(r.rhs) + " for " +
                                to_string(A) + ", " + to_string(B));
    return r;
}

struct CDWitness {
    SupportSet A, B, X, Y;
    SignalFn f, g, conv;
    SupportSet sum;           // A + B
    SupportSet intersection;  // X n Y
    SupportSet conv_support;
    SupportSet conv_fourier_support;
    /// |A+B| + |X n Y| against p + 1.
    std::size_t chain_lhs = 0;
    std::size_t chain_rhs = 0;
    bool chain_holds = false;
};

/// Replays the convolution proof of Cauchy-Davenport.
///
/// X = {0, ..., p - |A|}; Y is the cyclic interval of length p + 1 - |B|
/// starting at |X| - t where t = max(|X| + |Y| - p, 1), which makes
/// |X n Y| = t. f and g realise the support pairs (A, X) and (B, Y); f*g is
/// supported in A + B with Fourier support X n Y.
inline CDWitness cd_proof_witness(const SupportSet& A, const SupportSet& B, const CombinationOptions& options = {}) {
    require_same_modulus(A.modulus(), B.modulus());
    if (A.empty() || B.empty()) throw precondition_error("Cauchy-Davenport needs nonempty sets");
    const PrimeModulus p = A.modulus();
    const std::size_t n = p.value();
    const std::size_t x_size = n + 1 - A.size();
    const std::size_t y_size = n + 1 - B.size();
    const std::size_t overlap = std::max<std::size_t>(x_size + y_size > n ? x_size + y_size - n : 0, 1);

    std::vector<unsigned> xs(x_size), ys(y_size);
    for (std::size_t i = 0; i < x_size; ++i) xs[i] = static_cast<unsigned>(i);
    for (std::size_t i = 0; i < y_size; ++i) ys[i] = static_cast<unsigned>((x_size - overlap + i) % n);
    SupportSet X(p, std::move(xs)), Y(p, std::move(ys));
    SupportSet both = X.intersect(Y);
    if (both.size() != overlap) throw theorem_violation("X n Y has the wrong size " + std::to_string(both.size()));

    SignalFn f = construct_support_pair(A, X, options).f;
    SignalFn g = construct_support_pair(B, Y, options).f;
    SignalFn conv = convolve(f, g);
    SupportSet sum = sumset(A, B);
    SupportSet conv_support = support(conv);
    SupportSet conv_fourier = support(dft(conv));

    if (!conv_support.is_subset_of(sum)) throw theorem_violation("supp(f*g) escapes A+B");
    if (conv_fourier != both) throw theorem_violation("Fourier support of f*g differs from X n Y");

    CDWitness w{A,
                B,
                std::move(X),
                std::move(Y),
                std::move(f),
                std::move(g),
                std::move(conv),
                std::move(sum),
                std::move(both),
                std::move(conv_support),
                std::move(conv_fourier)};
    w.chain_lhs = w.sum.size() + w.intersection.size();
    w.chain_rhs = n + 1;
    w.chain_holds = w.chain_lhs >= w.chain_rhs;
    if (!w.chain_holds || w.sum.size() < std::min(A.size() + B.size() - 1, n))
        throw theorem_violation("inequality chain fails for " + to_string(A) + ", " + to_string(B));
    return w;
}

/// Function (Z/pZ)^n -> Q(w). Points are stored in lexicographic order with
/// the first coordinate most significant.
class MultiSignal {
   public:
    static constexpr std::size_t max_points = std::size_t{1} << 20;

    MultiSignal(PrimeModulus p, unsigned dims) : p_(p), n_(dims) {
        if (dims == 0) throw precondition_error("dimension must be at least 1");
        std::size_t total = 1;
        for (unsigned d = 0; d < dims; ++d) {
            total *= p.value();
            if (total > max_points) throw precondition_error("p^n exceeds the supported table size");
        }
        v_.assign(total, CycloNum(p));
    }

    MultiSignal(PrimeModulus p, unsigned dims, std::vector<CycloNum> values) : MultiSignal(p, dims) {
        if (values.size() != v_.size()) throw precondition_error("table must have p^n values");
        for (const auto& v : values) require_same_modulus(p, v.modulus());
        v_ = std::move(values);
    }

    static MultiSignal from_integers(PrimeModulus p, unsigned dims, std::span<const std::int64_t> values) {
        std::vector<CycloNum> v;
        v.reserve(values.size());
        for (auto x : values) v.emplace_back(p, Rational(static_cast<long>(x)));
        return MultiSignal(p, dims, std::move(v));
    }

    const PrimeModulus& modulus() const noexcept { return p_; }
    unsigned dims() const noexcept { return n_; }
    std::size_t size() const noexcept { return v_.size(); }
    std::span<const CycloNum> values() const noexcept { return v_; }

    const CycloNum& operator[](std::size_t i) const { return v_.at(i); }
    const CycloNum& at(std::span<const unsigned> point) const { return v_.at(index_of(point)); }
    void set(std::span<const unsigned> point, CycloNum value) {
        require_same_modulus(p_, value.modulus());
        v_.at(index_of(point)) = std::move(value);
    }

    std::size_t index_of(std::span<const unsigned> point) const {
        if (point.size() != n_) throw precondition_error("point has the wrong number of coordinates");
        std::size_t i = 0;
        for (unsigned x : point) {
            if (x >= p_.value()) throw precondition_error("coordinate is not below p");
            i = i * p_.value() + x;
        }
        return i;
    }

    std::vector<unsigned> point_of(std::size_t index) const {
        std::vector<unsigned> pt(n_);
        for (unsigned d = n_; d-- > 0;) {
            pt[d] = static_cast<unsigned>(index % p_.value());
            index /= p_.value();
        }
        return pt;
    }

    bool is_zero() const noexcept {
        return std::all_of(v_.begin(), v_.end(), [](const CycloNum& c) { return c.is_zero(); });
    }

    std::size_t support_size() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(v_.begin(), v_.end(), [](const CycloNum& c) { return !c.is_zero(); }));
    }

    friend bool operator==(const MultiSignal&, const MultiSignal&) = default;

    /// Applies a 1-D transform along every axis in turn.
    template <class LineTransform>
    MultiSignal along_axes(LineTransform&& line) const {
        MultiSignal out = *this;
        const std::size_t p = p_.value();
        std::size_t stride = 1;
        for (unsigned d = 0; d < n_; ++d, stride *= p) {
            for (std::size_t base = 0; base < v_.size(); ++base) {
                if ((base / stride) % p != 0) continue;
                std::vector<CycloNum> vals;
                vals.reserve(p);
                for (std::size_t k = 0; k < p; ++k) vals.push_back(out.v_[base + k * stride]);
                SignalFn t = line(SignalFn(p_, std::move(vals)));
                for (std::size_t k = 0; k < p; ++k) out.v_[base + k * stride] = t[k];
            }
        }
        return out;
    }

   private:
    PrimeModulus p_;
    unsigned n_;
    std::vector<CycloNum> v_;
};

/// F^(xi) = p^-n sum_x F(x) w^(-x.xi), computed one axis at a time.
inline MultiSignal multi_dft(const MultiSignal& f) {
    return f.along_axes([](const SignalFn& s) { return dft(s); });
}

inline MultiSignal multi_idft(const MultiSignal& spectrum) {
    return spectrum.along_axes([](const SignalFn& s) { return idft(s); });
}

struct MeshulamReport {
    std::size_t support_size = 0;
    std::size_t fourier_support_size = 0;
    std::vector<bool> per_j;
    bool hull_ok = false;
};

namespace detail {

inline std::int64_t ipow(std::int64_t b, unsigned e) {
    std::int64_t r = 1;
    while (e--) r *= b;
    return r;
}

/// (s, t) on or above the piecewise-linear curve through (p^j, p^(n-j)).
inline bool above_subgroup_hull(std::int64_t s, std::int64_t t, std::int64_t p, unsigned n) {
    for (unsigned k = 0; k < n; ++k) {
        const std::int64_t x0 = ipow(p, k), x1 = ipow(p, k + 1);
        if (s < x0 || s > x1) continue;
        const std::int64_t y0 = ipow(p, n - k), y1 = ipow(p, n - k - 1);
        // t >= y0 + (s - x0) (y1 - y0) / (x1 - x0)
        return (t - y0) * (x1 - x0) >= (s - x0) * (y1 - y0);
    }
    return false;
}

}  // namespace detail

/// Checks p^j |supp F| + p^(n-j-1) |supp F^| >= p^n + p^(n-1) for every
/// 0 <= j < n, and separately that the support sizes lie on or above the
/// lower hull of the subgroup points (p^j, p^(n-j)).
inline MeshulamReport meshulam_check(const MultiSignal& f) {
    if (f.is_zero()) throw precondition_error("support bound needs a nonzero function");
    const auto p = static_cast<std::int64_t>(f.modulus().value());
    const unsigned n = f.dims();
    MeshulamReport r;
    r.support_size = f.support_size();
    r.fourier_support_size = multi_dft(f).support_size();
    const auto s = static_cast<std::int64_t>(r.support_size);
    const auto t = static_cast<std::int64_t>(r.fourier_support_size);
    const std::int64_t bound = detail::ipow(p, n) + detail::ipow(p, n - 1);
    bool all = true;
    for (unsigned j = 0; j < n; ++j) {
        const bool ok = detail::ipow(p, j) * s + detail::ipow(p, n - j - 1) * t >= bound;
        r.per_j.push_back(ok);
        all = all && ok;
    }
    r.hull_ok = detail::above_subgroup_hull(s, t, p, n);
    if (!all || !r.hull_ok)
        throw theorem_violation("support sizes (" + std::to_string(s) + ", " + std::to_string(t) +
                                ") fall below the subgroup bound");
    return r;
}

}  // namespace primefourier

#endif  // PRIMEFOURIER_APPLICATIONS_HPP
