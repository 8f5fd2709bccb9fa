// Reference computations used only by the tests. They share no code paths with the
// library routines they check beyond the basic matrix and polynomial containers.
#pragma once

#include "kacgen/charpoly.hpp"
#include "kacgen/kac.hpp"
#include "kacgen/lifts.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using kacgen::GaussInt;
using kacgen::GaussMatrix;
using kacgen::IntPoly;

// Element of Q(i).
struct GQ {
    mpq_class re = 0;
    mpq_class im = 0;
    GQ() = default;
    GQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit GQ(const GaussInt& z) : re(z.re), im(z.im) {}
    GQ operator+(const GQ& o) const { return {re + o.re, im + o.im}; }
    GQ operator-(const GQ& o) const { return {re - o.re, im - o.im}; }
    GQ operator*(const GQ& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GQ scaled(const mpq_class& s) const { return {re * s, im * s}; }
};

using Dense = std::vector<std::vector<GQ>>;

inline Dense to_dense(const GaussMatrix& g) {
    Dense a(static_cast<std::size_t>(g.size()), std::vector<GQ>(static_cast<std::size_t>(g.size())));
    for (int i = 1; i <= g.size(); ++i) {
        for (int j = 1; j <= g.size(); ++j) a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = GQ(g(i, j));
    }
    return a;
}

// Faddeev-LeVerrier: det(tI - A) with ascending coefficients.
inline std::vector<GQ> faddeev_leverrier(const Dense& a) {
    const std::size_t n = a.size();
    std::vector<GQ> c(n + 1);
    c[n] = GQ(1, 0);
    Dense m(n, std::vector<GQ>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        Dense am(n, std::vector<GQ>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l].re == 0 && a[i][l].im == 0) continue;
                for (std::size_t j = 0; j < n; ++j) am[i][j] = am[i][j] + a[i][l] * m[l][j];
            }
        }
        for (std::size_t i = 0; i < n; ++i) am[i][i] = am[i][i] + c[n - k + 1];
        m = am;
        GQ tr;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) tr = tr + a[i][l] * m[l][i];
        }
        c[n - k] = tr.scaled(mpq_class(-1, static_cast<long>(k)));
    }
    return c;
}

// Real integer polynomial from Q(i) coefficients; returns false if any coefficient is not in Z.
inline bool to_int_poly(const std::vector<GQ>& c, IntPoly& out) {
    std::vector<mpz_class> z;
    for (const auto& x : c) {
        if (x.im != 0 || x.re.get_den() != 1) return false;
        z.push_back(x.re.get_num());
    }
    out = IntPoly(z);
    return true;
}

inline IntPoly charpoly(const GaussMatrix& g) {
    IntPoly q;
    if (!to_int_poly(faddeev_leverrier(to_dense(g)), q)) throw std::runtime_error("non-integral characteristic polynomial");
    return q;
}

// X -> n theta(X) n^{-1} on sl_l in the basis E(i,j) (i != j) and E(k,k) - E(l,l).
inline IntPoly twoA_adjoint_charpoly(const kacgen::TwistedElement& e) {
    const int l = e.lift.tag.rank();
    const GaussMatrix& n = e.lift.matrix;
    const GaussMatrix ninv = n.monomial_inverse();
    std::vector<GaussMatrix> basis;
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            if (i == j) continue;
            GaussMatrix x(l);
            x(i, j) = 1;
            basis.push_back(x);
        }
    }
    for (int k = 1; k < l; ++k) {
        GaussMatrix x(l);
        x(k, k) = 1;
        x(l, l) = -1;
        basis.push_back(x);
    }
    const std::size_t dim = basis.size();
    Dense op(dim, std::vector<GQ>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        const GaussMatrix y = n * kacgen::apply_theta_algebra(e.lift.tag, basis[c]) * ninv;
        std::size_t r = 0;
        for (int i = 1; i <= l; ++i) {
            for (int j = 1; j <= l; ++j) {
                if (i != j) op[r++][c] = GQ(y(i, j));
            }
        }
        // Diagonal part: coefficient of E(k,k) - E(l,l) is the (k,k) entry.
        for (int k = 1; k < l; ++k) op[r++][c] = GQ(y(k, k));
    }
    IntPoly q;
    if (!to_int_poly(faddeev_leverrier(op), q)) throw std::runtime_error("non-integral adjoint polynomial");
    return q;
}

// Sigma list read off the roots of q modulo m: drop the central eigenvalues, pair each
// exponent e with m - e, and keep min(e, m - e). 0 and m/2 contribute half their count.
inline std::vector<std::int64_t> sigma_from_roots(const kacgen::TypeTag& tag, const kacgen::Partition& p) {
    const auto q = kacgen::formula_charpoly(tag, p);
    auto roots = kacgen::roots_mod(q.expanded, q.m);
    if (tag.family() == kacgen::Family::B) roots.remove(0);
    if (tag.family() == kacgen::Family::TwoD) {
        roots.remove(0);
        roots.remove(q.m / 2);
    }
    std::vector<std::int64_t> out;
    for (const auto& [e, c] : roots.counts()) {
        if (e == 0 || 2 * e == q.m) {
            for (std::int64_t k = 0; k < c / 2; ++k) out.push_back(e);
        } else if (2 * e < q.m) {
            for (std::int64_t k = 0; k < c; ++k) out.push_back(e);
        }
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace oracle
