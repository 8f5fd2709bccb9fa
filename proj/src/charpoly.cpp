#include "kacgen/charpoly.hpp"

#include "kacgen/kac.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace kacgen {

std::string representation_name(Representation rep) {
    switch (rep) {
        case Representation::Standard: return "standard";
        case Representation::StandardTimesJ: return "standard_times_J";
        case Representation::Adjoint: return "adjoint";
    }
    return "?";
}

IntPoly cyclic_block_charpoly(std::int64_t m, bool odd_parity) {
    if (m < 1) throw KacError(ErrorKind::IndexOutOfRange, "cyclic block needs m >= 1");
    return IntPoly::binomial(static_cast<int>(m), odd_parity ? -1 : 1);
}

std::int64_t canonical_m(const TypeTag& tag, const Partition& p) {
    tag.require_admissible(p);
    switch (tag.family()) {
        case Family::A: return tag.rank() % 2 == 0 ? 2 * static_cast<std::int64_t>(tag.rank()) : tag.rank();
        case Family::C: return checked_mul(4, p.lcm());
        default: return checked_mul(2, p.lcm());
    }
}

Representation representation_for(const TypeTag& tag) {
    switch (tag.family()) {
        case Family::TwoA: return Representation::Adjoint;
        case Family::TwoD: return Representation::StandardTimesJ;
        default: return Representation::Standard;
    }
}

CharPolyResult formula_charpoly(const TypeTag& tag, const Partition& p) {
    tag.require_admissible(p);
    FactoredPoly f;
    const auto& parts = p.parts();
    switch (tag.family()) {
        case Family::A:
            // t^l + (-1)^l
            f.times(tag.rank(), tag.rank() % 2 == 0 ? -1 : 1);
            break;
        case Family::B:
            f.times(1, p.mu() % 2 == 0 ? 1 : -1);
            for (int part : parts) f.times(2 * part, 1);
            break;
        case Family::C:
            for (int part : parts) f.times(2 * part, -1);
            break;
        case Family::D:
        case Family::TwoD:
            for (int part : parts) f.times(2 * part, 1);
            break;
        case Family::TwoA:
            f.times(1, -1, -1);
            for (int part : parts) f.times(part, -1);
            for (int part : parts) f.times(2 * part, 1, (part - 1) / 2);
            for (std::size_t r = 0; r < parts.size(); ++r) {
                for (std::size_t s = r + 1; s < parts.size(); ++s) {
                    const auto g = gcd64(parts[r], parts[s]);
                    f.times(static_cast<int>(2 * lcm64(parts[r], parts[s])), 1, static_cast<int>(g));
                }
            }
            break;
    }
    return CharPolyResult{f, expand(f), canonical_m(tag, p), representation_for(tag)};
}

// ---------------------------------------------------------------------------
// Samuelson-Berkowitz
// ---------------------------------------------------------------------------

namespace {

// Returns c_0 = 1, c_1, ..., c_n with det(tI - A) = sum c_k t^{n-k}.
template <class R>
std::vector<R> berkowitz(const std::vector<std::vector<R>>& a, const R& zero, const R& one) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::size_t>> nz(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (!(a[r][c] == zero)) nz[r].push_back(c);
        }
    }
    std::vector<R> vec{one};
    for (std::size_t ii = n; ii-- > 0;) {
        const std::size_t s = n - ii - 1;
        std::vector<R> col(s + 2, zero);
        col[0] = one;
        col[1] = zero - a[ii][ii];
        std::vector<R> v(s, zero);
        for (std::size_t r = 0; r < s; ++r) v[r] = a[ii + 1 + r][ii];
        for (std::size_t k = 2; k < s + 2; ++k) {
            R term = zero;
            for (std::size_t c : nz[ii]) {
                if (c <= ii) continue;
                const R& x = v[c - ii - 1];
                if (x == zero) continue;
                term = term + a[ii][c] * x;
            }
            col[k] = zero - term;
            if (k + 1 < s + 2) {
                std::vector<R> w(s, zero);
                for (std::size_t r = 0; r < s; ++r) {
                    R acc = zero;
                    for (std::size_t c : nz[ii + 1 + r]) {
                        if (c <= ii) continue;
                        const R& x = v[c - ii - 1];
                        if (x == zero) continue;
                        acc = acc + a[ii + 1 + r][c] * x;
                    }
                    w[r] = acc;
                }
                v = std::move(w);
            }
        }
        std::vector<R> next(s + 2, zero);
        for (std::size_t k = 0; k < s + 2; ++k) {
            for (std::size_t j = 0; j <= std::min(k, s); ++j) {
                if (col[k - j] == zero || vec[j] == zero) continue;
                next[k] = next[k] + col[k - j] * vec[j];
            }
        }
        vec = std::move(next);
    }
    return vec;
}

IntPoly real_poly(const std::vector<GaussInt>& ascending) {
    std::vector<mpz_class> coeffs;
    for (std::size_t k = 0; k < ascending.size(); ++k) {
        if (!ascending[k].is_real()) {
            throw KacError(ErrorKind::NonRealCoefficient,
                           "coefficient of t^" + std::to_string(k) + " is " + ascending[k].to_string());
        }
        coeffs.push_back(ascending[k].re);
    }
    return IntPoly(coeffs);
}

using GaussDense = std::vector<std::vector<GaussInt>>;

GaussDense to_dense(const GaussMatrix& g) {
    GaussDense out(static_cast<std::size_t>(g.size()), std::vector<GaussInt>(static_cast<std::size_t>(g.size())));
    for (int i = 1; i <= g.size(); ++i) {
        for (int j = 1; j <= g.size(); ++j) out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = g(i, j);
    }
    return out;
}

GaussMatrix unit_matrix(int n, int i, int j) {
    GaussMatrix e(n);
    e(i, j) = 1;
    return e;
}

// X -> Ad(n) theta(X) on gl_l.
GaussMatrix twoA_apply(const TwistedElement& e, const GaussMatrix& x) {
    const GaussMatrix& n = e.lift.matrix;
    return n * apply_theta_algebra(e.lift.tag, x) * n.monomial_inverse();
}

// Operator matrix on sl_l with basis E(i,j) (i != j, row-major) then E(k,k) - E(k+1,k+1).
GaussDense twoA_sl_operator(const TwistedElement& e) {
    const int l = e.lift.tag.rank();
    std::vector<std::pair<int, int>> off;
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            if (i != j) off.emplace_back(i, j);
        }
    }
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t k = 0; k < off.size(); ++k) index[off[k]] = k;
    const std::size_t dim = off.size() + static_cast<std::size_t>(l - 1);
    GaussDense op(dim, std::vector<GaussInt>(dim));
    auto coordinates = [&](const GaussMatrix& y, std::size_t column) {
        GaussInt trace;
        for (int i = 1; i <= l; ++i) {
            for (int j = 1; j <= l; ++j) {
                if (i != j && !y(i, j).is_zero()) op[index.at({i, j})][column] = y(i, j);
            }
            trace += y(i, i);
        }
        if (!trace.is_zero()) throw KacError(ErrorKind::Internal, "operator left sl_l");
        GaussInt acc;
        for (int q = 1; q < l; ++q) {
            acc += y(q, q);
            op[off.size() + static_cast<std::size_t>(q - 1)][column] = acc;
        }
    };
    for (std::size_t k = 0; k < off.size(); ++k) {
        coordinates(twoA_apply(e, unit_matrix(l, off[k].first, off[k].second)), k);
    }
    for (int q = 1; q < l; ++q) {
        GaussMatrix h(l);
        h(q, q) = 1;
        h(q + 1, q + 1) = -1;
        coordinates(twoA_apply(e, h), off.size() + static_cast<std::size_t>(q - 1));
    }
    return op;
}

GaussDense twoA_gl_operator(const TwistedElement& e) {
    const int l = e.lift.tag.rank();
    const auto dim = static_cast<std::size_t>(l * l);
    GaussDense op(dim, std::vector<GaussInt>(dim));
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            const GaussMatrix y = twoA_apply(e, unit_matrix(l, i, j));
            const auto column = static_cast<std::size_t>((i - 1) * l + (j - 1));
            for (int a = 1; a <= l; ++a) {
                for (int b = 1; b <= l; ++b) op[static_cast<std::size_t>((a - 1) * l + (b - 1))][column] = y(a, b);
            }
        }
    }
    return op;
}

IntPoly charpoly_of(const GaussDense& a) {
    std::vector<GaussInt> c = berkowitz<GaussInt>(a, GaussInt(0), GaussInt(1));
    std::reverse(c.begin(), c.end());
    return real_poly(c);
}

}  // namespace

std::vector<GaussInt> berkowitz_charpoly(const std::vector<std::vector<GaussInt>>& a) {
    std::vector<GaussInt> c = berkowitz<GaussInt>(a, GaussInt(0), GaussInt(1));
    std::reverse(c.begin(), c.end());
    return c;
}

CharPolyResult matrix_oracle_charpoly(const TwistedElement& e) {
    const TypeTag& tag = e.lift.tag;
    IntPoly q;
    switch (tag.family()) {
        case Family::TwoA:
            q = charpoly_of(twoA_sl_operator(e));
            break;
        case Family::TwoD:
            q = charpoly_of(to_dense(e.lift.matrix * generator(tag, GeneratorKind::J).matrix));
            break;
        default:
            q = charpoly_of(to_dense(e.lift.matrix));
            break;
    }
    const std::int64_t m = e.lift.partition ? canonical_m(tag, *e.lift.partition) : element_order(e);
    return CharPolyResult{reconstruct(roots_mod(q, m)), q, m, representation_for(tag)};
}

IntPoly twoA_gl_charpoly(const TwistedElement& e) {
    if (e.lift.tag.family() != Family::TwoA) throw KacError(ErrorKind::UnsupportedType, "gl_l operator is for 2A only");
    return charpoly_of(twoA_gl_operator(e));
}

// ---------------------------------------------------------------------------
// Recovery of the partition for 2A
// ---------------------------------------------------------------------------

Recovery recover_p(const CharPolyResult& q) {
    const std::int64_t big = q.m;
    RootMultiset roots = roots_mod(q.expanded, big);
    const int deg = q.expanded.degree();
    int l = 1;
    while ((l + 1) * (l + 1) - 1 <= deg) ++l;
    if (l * l - 1 != deg) throw KacError(ErrorKind::RecoveryStuck, "degree " + std::to_string(deg) + " is not l^2 - 1");

    auto all_present = [&](const std::vector<std::int64_t>& exps) {
        std::map<std::int64_t, std::int64_t> need;
        for (auto x : exps) ++need[x];
        for (const auto& [x, c] : need) {
            if (roots.count(x) < c) return false;
        }
        return true;
    };
    auto remove_all = [&](const std::vector<std::int64_t>& exps) {
        for (auto x : exps) roots.remove(x);
    };
    std::vector<std::int64_t> odd_divisors;
    for (auto d : divisors(big)) {
        if (d % 2 == 1) odd_divisors.push_back(d);
    }
    std::sort(odd_divisors.rbegin(), odd_divisors.rend());

    // Strip full sets of 2h-th roots of unity, largest odd h first.
    for (;;) {
        bool removed = false;
        for (auto h : odd_divisors) {
            if (big % (2 * h) != 0) continue;
            std::vector<std::int64_t> exps;
            for (std::int64_t j = 0; j < 2 * h; ++j) exps.push_back(j * (big / (2 * h)));
            if (all_present(exps)) {
                remove_all(exps);
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }
    if (roots.total() != l - 1) {
        throw KacError(ErrorKind::RecoveryStuck,
                       std::to_string(roots.total()) + " roots remain, expected " + std::to_string(l - 1));
    }

    // Read off the factors t^k + 1 of (t + 1) p.
    roots.add(big / 2);
    std::vector<int> parts;
    while (roots.total() > 0) {
        bool found = false;
        for (auto k : odd_divisors) {
            if ((big / 2) % k != 0) continue;
            std::vector<std::int64_t> exps;
            for (std::int64_t j = 0; j < k; ++j) exps.push_back((big / 2 + j * big) / k);
            for (auto& x : exps) x = mod_floor(x, big);
            if (all_present(exps)) {
                remove_all(exps);
                parts.push_back(static_cast<int>(k));
                found = true;
                break;
            }
        }
        if (!found) throw KacError(ErrorKind::RecoveryStuck, "remaining roots " + roots.to_string() + " are not a product of t^k + 1");
    }
    FactoredPoly p;
    p.times(1, -1, -1);
    for (int k : parts) p.times(k, -1);
    return Recovery{p, Partition::from_unsorted(parts)};
}

// ---------------------------------------------------------------------------
// 2A torus-element check
// ---------------------------------------------------------------------------

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw KacError(ErrorKind::Internal, "cyclotomic arithmetic overflow");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw KacError(ErrorKind::Internal, "cyclotomic arithmetic overflow");
    return r;
}

// Z[x]/Phi_L with powers of x reduced once.
struct CycContext {
    std::int64_t order;
    std::size_t phi;
    std::vector<std::vector<std::int64_t>> power;  // x^k mod Phi_L

    explicit CycContext(std::int64_t l) : order(l) {
        const IntPoly cyc = cyclotomic(l);
        phi = static_cast<std::size_t>(cyc.degree());
        std::vector<std::int64_t> low(phi);
        for (std::size_t i = 0; i < phi; ++i) low[i] = cyc.coeff(static_cast<int>(i)).get_si();
        const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(l), 2 * phi);
        std::vector<std::int64_t> cur(phi, 0);
        cur[0] = 1;
        power.push_back(cur);
        for (std::size_t k = 1; k < count; ++k) {
            std::vector<std::int64_t> next(phi, 0);
            const std::int64_t top = cur[phi - 1];
            for (std::size_t i = phi - 1; i > 0; --i) next[i] = cur[i - 1];
            next[0] = 0;
            for (std::size_t i = 0; i < phi; ++i) next[i] = add_checked(next[i], -mul_checked(top, low[i]));
            power.push_back(next);
            cur = next;
        }
    }
};

struct Cyc {
    const CycContext* ctx = nullptr;
    std::vector<std::int64_t> c;

    static Cyc constant(const CycContext* ctx, std::int64_t v) {
        Cyc r{ctx, std::vector<std::int64_t>(ctx->phi, 0)};
        r.c[0] = v;
        return r;
    }
    static Cyc root_power(const CycContext* ctx, std::int64_t e) {
        return Cyc{ctx, ctx->power[static_cast<std::size_t>(mod_floor(e, ctx->order))]};
    }
    Cyc operator+(const Cyc& o) const {
        Cyc r{ctx, c};
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = add_checked(c[i], o.c[i]);
        return r;
    }
    Cyc operator-(const Cyc& o) const {
        Cyc r{ctx, c};
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = add_checked(c[i], -o.c[i]);
        return r;
    }
    Cyc operator*(const Cyc& o) const {
        const std::size_t phi = ctx->phi;
        std::vector<std::int64_t> conv(2 * phi - 1, 0);
        for (std::size_t i = 0; i < phi; ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < phi; ++j) {
                if (o.c[j] == 0) continue;
                conv[i + j] = add_checked(conv[i + j], mul_checked(c[i], o.c[j]));
            }
        }
        Cyc r{ctx, std::vector<std::int64_t>(phi, 0)};
        for (std::size_t k = 0; k < conv.size(); ++k) {
            if (conv[k] == 0) continue;
            const auto& pw = ctx->power[k];
            for (std::size_t i = 0; i < phi; ++i) {
                if (pw[i] != 0) r.c[i] = add_checked(r.c[i], mul_checked(conv[k], pw[i]));
            }
        }
        return r;
    }
    bool operator==(const Cyc& o) const { return c == o.c; }
};

// One basis vector of gl_l maps to coefficient u^exponent times another basis vector.
struct MonomialImage {
    int row;
    int col;
    std::int64_t exponent;  // modulo the root order L
};

std::int64_t unit_exponent(const GaussInt& z, std::int64_t order) {
    if (z == GaussInt(1)) return 0;
    if (z == GaussInt(-1)) {
        if (order % 2 != 0) throw KacError(ErrorKind::Internal, "-1 is not a power of u");
        return order / 2;
    }
    if (order % 4 != 0) throw KacError(ErrorKind::Internal, "i is not a power of u");
    if (z == GaussInt::i_unit()) return order / 4;
    if (z == -GaussInt::i_unit()) return 3 * order / 4;
    throw KacError(ErrorKind::Internal, "coefficient " + z.to_string() + " is not a unit");
}

// Action of Ad(diag(u^{e_i})) o theta on E(i,j).
MonomialImage act(const TypeTag& tag, const std::vector<std::int64_t>& e, std::int64_t order, int i, int j) {
    const int l = tag.rank();
    const GaussMatrix y = apply_theta_algebra(tag, unit_matrix(l, i, j));
    for (int a = 1; a <= l; ++a) {
        for (int b = 1; b <= l; ++b) {
            if (y(a, b).is_zero()) continue;
            const std::int64_t shift = e[static_cast<std::size_t>(a - 1)] - e[static_cast<std::size_t>(b - 1)];
            return MonomialImage{a, b, mod_floor(unit_exponent(y(a, b), order) + shift, order)};
        }
    }
    throw KacError(ErrorKind::Internal, "theta killed a basis vector");
}

IntPoly dense_sl_charpoly(const TypeTag& tag, const std::vector<std::int64_t>& e, std::int64_t order,
                          const CycContext& ctx, bool gl) {
    const int l = tag.rank();
    std::vector<std::pair<int, int>> basis;
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) {
            if (gl || i != j) basis.emplace_back(i, j);
        }
    }
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    const std::size_t diag_start = basis.size();
    const std::size_t dim = gl ? basis.size() : basis.size() + static_cast<std::size_t>(l - 1);
    const Cyc zero = Cyc::constant(&ctx, 0);
    std::vector<std::vector<Cyc>> op(dim, std::vector<Cyc>(dim, zero));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const MonomialImage im = act(tag, e, order, basis[k].first, basis[k].second);
        op[index.at({im.row, im.col})][k] = Cyc::root_power(&ctx, im.exponent);
    }
    if (!gl) {
        for (int q = 1; q < l; ++q) {
            // Image of E(q,q) - E(q+1,q+1) as a diagonal matrix, then in the h basis.
            std::vector<Cyc> diag(static_cast<std::size_t>(l), zero);
            const MonomialImage a = act(tag, e, order, q, q);
            const MonomialImage b = act(tag, e, order, q + 1, q + 1);
            diag[static_cast<std::size_t>(a.row - 1)] = diag[static_cast<std::size_t>(a.row - 1)] + Cyc::root_power(&ctx, a.exponent);
            diag[static_cast<std::size_t>(b.row - 1)] = diag[static_cast<std::size_t>(b.row - 1)] - Cyc::root_power(&ctx, b.exponent);
            Cyc acc = zero;
            for (int p = 1; p < l; ++p) {
                acc = acc + diag[static_cast<std::size_t>(p - 1)];
                op[diag_start + static_cast<std::size_t>(p - 1)][diag_start + static_cast<std::size_t>(q - 1)] = acc;
            }
        }
    }
    std::vector<Cyc> c = berkowitz<Cyc>(op, zero, Cyc::constant(&ctx, 1));
    std::reverse(c.begin(), c.end());
    std::vector<mpz_class> coeffs;
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (std::size_t i = 1; i < ctx.phi; ++i) {
            if (c[k].c[i] != 0) {
                throw KacError(ErrorKind::MismatchDetected,
                               "coefficient of t^" + std::to_string(k) + " is not an integer");
            }
        }
        coeffs.emplace_back(static_cast<long>(c[k].c[0]));
    }
    return IntPoly(coeffs);
}

struct Block {
    std::string name;
    std::vector<std::pair<int, int>> entries;
    FactoredPoly expected;
};

// The rearranged torus exponents and the invariant decomposition of gl_l.
struct BlockLayout {
    std::vector<std::int64_t> dprime;
    std::vector<Block> blocks;
};

BlockLayout block_layout(const Partition& p, std::int64_t m, bool even) {
    const int l = p.total();
    const int mu = p.mu();
    const int n = even ? l / 2 : (l - 1) / 2;
    std::vector<int> parts = p.ascending();  // l_1 <= ... <= l_mu
    auto part = [&](int nu) { return parts[static_cast<std::size_t>(nu - 1)]; };
    auto tilde = [&](int nu) { return (part(nu) - 1) / 2; };
    auto dprime2 = [&](int nu) {
        int acc = 0;
        for (int j = nu + 1; j <= mu; ++j) acc += tilde(j);
        return acc;
    };

    BlockLayout out;
    std::vector<std::int64_t>& d = out.dprime;
    for (int nu = mu; nu >= 1; --nu) {
        const std::int64_t step = m / (2 * part(nu));
        for (int k = 1; k <= tilde(nu); ++k) {
            d.push_back(even ? (part(nu) - 2 * k) * step : (tilde(nu) - k + 1) * step);
        }
    }
    if (even) {
        for (int k = 0; k < mu / 2; ++k) d.push_back(m / 2);
        for (int k = 0; k < mu / 2; ++k) d.push_back(-m / 2);
    } else {
        for (int k = 0; k < mu; ++k) d.push_back(0);
    }
    while (d.size() < static_cast<std::size_t>(l)) d.push_back(-d[static_cast<std::size_t>(l) - 1 - d.size()]);

    auto mid_row = [&](int nu) { return even ? n + mu / 2 - nu + 1 : n + (mu - 1) / 2 - nu + 2; };
    auto mid_col = [&](int nu) { return even ? n - mu / 2 + nu : n - (mu - 1) / 2 + nu; };
    auto run = [&](int nu, int middle) {
        std::vector<int> s;
        for (int k = 1; k <= tilde(nu); ++k) s.push_back(dprime2(nu) + k);
        s.push_back(middle);
        for (int k = l - (tilde(nu) + dprime2(nu)) + 1; k <= l - dprime2(nu); ++k) s.push_back(k);
        return s;
    };
    const int udiag = dprime2(0);

    Block ua{"U_a", {}, {}};
    for (int i = 1; i <= l; ++i) ua.entries.emplace_back(i, l + 1 - i);
    for (int nu = 1; nu <= mu; ++nu) ua.expected.times(part(nu), -1);
    Block ud{"U_d", {}, {}};
    for (int i = 1; i <= udiag; ++i) {
        ud.entries.emplace_back(i, i);
        ud.entries.emplace_back(l + 1 - i, l + 1 - i);
    }
    ud.expected.times(2, 1, udiag);

    auto in_fixed = [&](int i, int j) { return j == l + 1 - i || (i == j && (i <= udiag || i > l - udiag)); };
    out.blocks.push_back(ua);
    out.blocks.push_back(ud);
    for (int tau = 1; tau <= mu; ++tau) {
        Block b{"U_" + std::to_string(tau), {}, {}};
        for (int i : run(tau, mid_row(tau))) {
            for (int j : run(tau, mid_col(tau))) {
                if (!in_fixed(i, j)) b.entries.emplace_back(i, j);
            }
        }
        b.expected.times(2 * part(tau), 1, tilde(tau));
        b.expected.times(2, 1, -tilde(tau));
        out.blocks.push_back(b);
    }
    for (int rho = 1; rho <= mu; ++rho) {
        for (int phi = rho + 1; phi <= mu; ++phi) {
            Block b{"U_" + std::to_string(rho) + "," + std::to_string(phi), {}, {}};
            for (auto [x, y] : {std::pair{rho, phi}, std::pair{phi, rho}}) {
                for (int i : run(x, mid_row(x))) {
                    for (int j : run(y, mid_col(y))) b.entries.emplace_back(i, j);
                }
            }
            b.expected.times(static_cast<int>(2 * lcm64(part(rho), part(phi))), 1,
                             static_cast<int>(gcd64(part(rho), part(phi))));
            out.blocks.push_back(b);
        }
    }
    return out;
}

// Block path: returns an empty string on success, else the first problem found.
std::string check_blocks(const TypeTag& tag, const BlockLayout& layout, std::int64_t order, const IntPoly& target) {
    const int l = tag.rank();
    std::map<std::pair<int, int>, MonomialImage> image;
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= l; ++j) image.emplace(std::pair{i, j}, act(tag, layout.dprime, order, i, j));
    }
    // Common modulus for all cycle roots.
    std::int64_t cycles_lcm = 1;
    std::map<std::pair<int, int>, int> owner;
    for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
        for (const auto& x : layout.blocks[b].entries) {
            if (!owner.emplace(x, static_cast<int>(b)).second) {
                return "entry (" + std::to_string(x.first) + "," + std::to_string(x.second) + ") lies in two blocks";
            }
        }
    }
    if (owner.size() != static_cast<std::size_t>(l * l)) return "blocks do not cover gl_l";
    std::map<std::pair<int, int>, bool> seen;
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> block_cycles(layout.blocks.size());
    for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
        for (const auto& start : layout.blocks[b].entries) {
            if (seen[start]) continue;
            std::int64_t len = 0;
            std::int64_t total = 0;
            std::pair<int, int> x = start;
            do {
                seen[x] = true;
                const MonomialImage& im = image.at(x);
                total = mod_floor(total + im.exponent, order);
                x = {im.row, im.col};
                if (owner.at(x) != static_cast<int>(b)) return layout.blocks[b].name + " is not stable";
                ++len;
            } while (x != start);
            block_cycles[b].emplace_back(len, total);
            cycles_lcm = lcm64(cycles_lcm, len);
        }
    }
    const std::int64_t big = checked_mul(order, cycles_lcm);
    FactoredPoly product;
    for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
        RootMultiset got(big);
        for (auto [len, total] : block_cycles[b]) {
            for (std::int64_t j = 0; j < len; ++j) got.add((total * cycles_lcm + j * order * cycles_lcm) / len);
        }
        const RootMultiset want = roots_mod(layout.blocks[b].expected, big);
        if (!(got == want)) {
            return layout.blocks[b].name + ": roots " + got.to_string() + " but expected " +
                   layout.blocks[b].expected.to_string();
        }
        product = product * layout.blocks[b].expected;
    }
    if (expand(product) != target) return "product of block polynomials differs from (t+1) q";
    return {};
}

}  // namespace

TwoACheckDetail twoA_sigma_charpoly_detail(const Partition& p, TwoAVariant variant) {
    const int l = p.total();
    const bool even = variant == TwoAVariant::EvenEll;
    if ((l % 2 == 0) != even) {
        throw KacError(ErrorKind::InadmissiblePartition, "variant does not match the parity of l = " + std::to_string(l));
    }
    const TypeTag tag(Family::TwoA, l);
    const CharPolyResult q = formula_charpoly(tag, p);
    const SigmaList s = sigma_list(tag, p);
    const TorusExponents te = torus_exponents(tag, s);
    const std::int64_t order = te.modulus;

    TwoACheckDetail r;
    const BlockLayout layout = block_layout(p, s.m, even);
    std::vector<std::int64_t> a = layout.dprime;
    std::vector<std::int64_t> b = te.exponents;
    for (auto& x : a) x = mod_floor(x, order);
    for (auto& x : b) x = mod_floor(x, order);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    r.permutation_ok = a == b;
    if (!r.permutation_ok) r.message = "rearranged exponents are not a permutation of the torus exponents";

    const IntPoly target = IntPoly::binomial(1, -1) * q.expanded;
    const std::string block_problem = check_blocks(tag, layout, order, target);
    r.block_ok = block_problem.empty();
    if (!r.block_ok && r.message.empty()) r.message = "block path: " + block_problem;

    const CycContext ctx(order);
    const IntPoly sl = dense_sl_charpoly(tag, te.exponents, order, ctx, false);
    const IntPoly gl = dense_sl_charpoly(tag, te.exponents, order, ctx, true);
    r.dense_ok = sl == q.expanded && gl == target;
    if (!r.dense_ok && r.message.empty()) {
        int k = 0;
        while (k <= std::max(sl.degree(), q.expanded.degree()) && sl.coeff(k) == q.expanded.coeff(k)) ++k;
        r.message = "dense path: coefficient of t^" + std::to_string(k) + " is " + sl.coeff(k).get_str() +
                    ", expected " + q.expanded.coeff(k).get_str();
    }
    return r;
}

bool twoA_sigma_charpoly_check(const Partition& p, TwoAVariant variant) {
    const TwoACheckDetail r = twoA_sigma_charpoly_detail(p, variant);
    if (!(r.block_ok && r.dense_ok && r.permutation_ok)) throw KacError(ErrorKind::MismatchDetected, r.message);
    return true;
}

}  // namespace kacgen
