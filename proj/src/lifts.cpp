#include "kacgen/lifts.hpp"

#include <algorithm>

namespace kacgen {

// ---------------------------------------------------------------------------
// GaussMatrix
// ---------------------------------------------------------------------------

GaussMatrix::GaussMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

std::size_t GaussMatrix::index(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) {
        throw KacError(ErrorKind::IndexOutOfRange, "matrix index (" + std::to_string(i) + "," +
                                                       std::to_string(j) + ") outside size " + std::to_string(n_));
    }
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
}

GaussMatrix GaussMatrix::identity(int n) {
    GaussMatrix m(n);
    for (int i = 1; i <= n; ++i) m(i, i) = 1;
    return m;
}

GaussMatrix GaussMatrix::antidiagonal(int n) {
    GaussMatrix m(n);
    for (int i = 1; i <= n; ++i) m(i, n + 1 - i) = 1;
    return m;
}

GaussMatrix GaussMatrix::diagonal(const std::vector<GaussInt>& entries) {
    GaussMatrix m(static_cast<int>(entries.size()));
    for (int i = 1; i <= m.size(); ++i) m(i, i) = entries[static_cast<std::size_t>(i - 1)];
    return m;
}

GaussMatrix GaussMatrix::operator*(const GaussMatrix& o) const {
    if (n_ != o.n_) throw KacError(ErrorKind::Internal, "matrix size mismatch");
    GaussMatrix r(n_);
    for (int i = 1; i <= n_; ++i) {
        for (int k = 1; k <= n_; ++k) {
            const GaussInt& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                const GaussInt& y = o(k, j);
                if (y.is_zero()) continue;
                r(i, j) += x * y;
            }
        }
    }
    return r;
}

GaussMatrix GaussMatrix::operator-() const {
    GaussMatrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
}

GaussMatrix GaussMatrix::transpose() const {
    GaussMatrix r(n_);
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
}

bool GaussMatrix::is_identity() const { return *this == identity(n_); }

bool GaussMatrix::is_scalar() const {
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (i != j && !(*this)(i, j).is_zero()) return false;
        }
        if ((*this)(i, i) != (*this)(1, 1)) return false;
    }
    return n_ > 0;
}

bool GaussMatrix::is_monomial() const {
    std::vector<int> row_count(static_cast<std::size_t>(n_), 0);
    for (int j = 1; j <= n_; ++j) {
        int col_count = 0;
        for (int i = 1; i <= n_; ++i) {
            const GaussInt& x = (*this)(i, j);
            if (x.is_zero()) continue;
            if (!x.is_unit()) return false;
            ++col_count;
            ++row_count[static_cast<std::size_t>(i - 1)];
        }
        if (col_count != 1) return false;
    }
    return std::all_of(row_count.begin(), row_count.end(), [](int c) { return c == 1; });
}

int GaussMatrix::column_support(int j) const {
    for (int i = 1; i <= n_; ++i) {
        if (!(*this)(i, j).is_zero()) return i;
    }
    throw KacError(ErrorKind::Internal, "zero column in monomial matrix");
}

GaussMatrix GaussMatrix::monomial_inverse() const {
    if (!is_monomial()) throw KacError(ErrorKind::Internal, "inverse requested for a non-monomial matrix");
    GaussMatrix r(n_);
    for (int j = 1; j <= n_; ++j) {
        int i = column_support(j);
        r(j, i) = (*this)(i, j).unit_inverse();
    }
    return r;
}

GaussInt GaussMatrix::monomial_det() const {
    if (!is_monomial()) throw KacError(ErrorKind::Internal, "determinant requested for a non-monomial matrix");
    std::vector<int> perm(static_cast<std::size_t>(n_));
    GaussInt prod(1);
    for (int j = 1; j <= n_; ++j) {
        int i = column_support(j);
        perm[static_cast<std::size_t>(j - 1)] = i - 1;
        prod = prod * (*this)(i, j);
    }
    // Sign of the permutation from its cycle decomposition.
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        std::size_t len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign == 1 ? prod : -prod;
}

std::string GaussMatrix::to_string() const {
    std::string out;
    for (int i = 1; i <= n_; ++i) {
        out += "[";
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) out += " ";
            out += (*this)(i, j).to_string();
        }
        out += "]\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

int matrix_dimension(const TypeTag& tag) {
    const int l = tag.rank();
    switch (tag.family()) {
        case Family::A:
        case Family::TwoA: return l;
        case Family::B: return 2 * l + 1;
        case Family::C:
        case Family::D: return 2 * l;
        case Family::TwoD: return 2 * l + 2;
    }
    return 0;
}

namespace {

void put_swap(GaussMatrix& m, int a, int b) {
    m(a, a) = 0;
    m(b, b) = 0;
    m(a, b) = 1;
    m(b, a) = 1;
}

void require_index(bool ok, const TypeTag& tag, const char* kind, int k) {
    if (!ok) {
        throw KacError(ErrorKind::IndexOutOfRange,
                       std::string(kind) + "_" + std::to_string(k) + " does not exist for " + tag.to_string());
    }
}

GaussMatrix s_matrix(const TypeTag& tag, int k) {
    const int l = tag.rank();
    const int n = matrix_dimension(tag);
    GaussMatrix m = GaussMatrix::identity(n);
    switch (tag.family()) {
        case Family::A:
        case Family::TwoA:
            require_index(k >= 1 && k < l, tag, "s", k);
            m(k, k) = 0;
            m(k + 1, k + 1) = 0;
            m(k, k + 1) = 1;
            m(k + 1, k) = -1;
            break;
        case Family::B:
            require_index(k >= 1 && k < l, tag, "s", k);
            put_swap(m, k, k + 1);
            put_swap(m, 2 * l - k + 1, 2 * l - k + 2);
            break;
        case Family::C:
        case Family::D:
            require_index(k >= 1 && k < l, tag, "s", k);
            put_swap(m, k, k + 1);
            put_swap(m, 2 * l - k, 2 * l - k + 1);
            break;
        case Family::TwoD:
            require_index(k >= 1 && k <= l, tag, "s", k);
            put_swap(m, k, k + 1);
            put_swap(m, 2 * l - k + 2, 2 * l - k + 3);
            break;
    }
    return m;
}

GaussMatrix j_matrix(const TypeTag& tag) {
    const int l = tag.rank();
    if (tag.family() == Family::TwoA) {
        GaussMatrix k = GaussMatrix::antidiagonal(l);
        if (l % 2 == 1) return k;
        std::vector<GaussInt> d;
        for (int i = 1; i <= l; ++i) d.push_back(i <= l / 2 ? GaussInt::i_unit() : -GaussInt::i_unit());
        return k * GaussMatrix::diagonal(d);
    }
    if (tag.family() == Family::TwoD) {
        GaussMatrix m = GaussMatrix::identity(2 * l + 2);
        put_swap(m, l + 1, l + 2);
        return m;
    }
    throw KacError(ErrorKind::UnsupportedType, "J is defined only for twisted types, not " + tag.to_string());
}

GaussMatrix t_ell_matrix(const TypeTag& tag) {
    const int l = tag.rank();
    const int n = matrix_dimension(tag);
    GaussMatrix m = GaussMatrix::identity(n);
    switch (tag.family()) {
        case Family::B:
            put_swap(m, l, l + 2);
            m(l + 1, l + 1) = -1;
            return m;
        case Family::C:
            m(l, l) = 0;
            m(l + 1, l + 1) = 0;
            m(l, l + 1) = 1;
            m(l + 1, l) = -1;
            return m;
        case Family::D:
            put_swap(m, l, l + 1);
            return m;
        case Family::TwoD:
            return j_matrix(tag);
        default:
            throw KacError(ErrorKind::UnsupportedType, "t_l is not defined for " + tag.to_string());
    }
}

// s_k s_{k+1} ... s_last * middle * s_last ... s_k
GaussMatrix conjugated_chain(const TypeTag& tag, int k, int last, const GaussMatrix& middle) {
    GaussMatrix left = GaussMatrix::identity(middle.size());
    for (int j = k; j <= last; ++j) left = left * s_matrix(tag, j);
    GaussMatrix right = GaussMatrix::identity(middle.size());
    for (int j = last; j >= k; --j) right = right * s_matrix(tag, j);
    return left * middle * right;
}

GaussMatrix t_matrix(const TypeTag& tag, int k) {
    const int l = tag.rank();
    const int n = matrix_dimension(tag);
    switch (tag.family()) {
        case Family::B:
        case Family::C:
            require_index(k >= 1 && k <= l, tag, "t", k);
            return conjugated_chain(tag, k, l - 1, t_ell_matrix(tag));
        case Family::D: {
            require_index(k >= 1 && k <= l, tag, "t", k);
            GaussMatrix m = GaussMatrix::identity(n);
            put_swap(m, k, 2 * l - k + 1);
            return m;
        }
        case Family::TwoD:
            require_index(k >= 1 && k <= l + 1, tag, "t", k);
            return conjugated_chain(tag, k, l, j_matrix(tag));
        default:
            throw KacError(ErrorKind::UnsupportedType, "t_k is not defined for " + tag.to_string());
    }
}

GaussMatrix s_tilde_matrix(const TypeTag& tag, int k) {
    if (tag.family() != Family::TwoA) {
        throw KacError(ErrorKind::UnsupportedType, "s~_k is defined only for 2A");
    }
    require_index(k >= 1 && k < tag.rank(), tag, "s~", k);
    GaussMatrix m = GaussMatrix::identity(tag.rank());
    put_swap(m, k, k + 1);
    return m;
}

}  // namespace

LiftMatrix generator(const TypeTag& tag, GeneratorKind kind, int k) {
    GaussMatrix m;
    switch (kind) {
        case GeneratorKind::S: m = s_matrix(tag, k); break;
        case GeneratorKind::T: m = t_matrix(tag, k); break;
        case GeneratorKind::TEll: m = t_ell_matrix(tag); break;
        case GeneratorKind::STilde: m = s_tilde_matrix(tag, k); break;
        case GeneratorKind::J: m = j_matrix(tag); break;
    }
    return LiftMatrix{std::move(m), tag, std::nullopt};
}

GaussMatrix lift_block(const TypeTag& tag, const Partition& p, int nu) {
    tag.require_admissible(p);
    const int n = matrix_dimension(tag);
    const int l = tag.rank();
    const int lnu = p.asc(nu);
    const int lprime = prefix_sums(p)[static_cast<std::size_t>(nu - 1)];
    GaussMatrix c = GaussMatrix::identity(n);
    switch (tag.family()) {
        case Family::A:
            for (int j = 1; j <= l - 1; ++j) c = c * s_matrix(tag, j);
            return c;
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::TwoD:
            for (int j = lprime + 1; j <= lprime + lnu - 1; ++j) c = c * s_matrix(tag, j);
            return c * t_matrix(tag, lprime + lnu);
        case Family::TwoA: {
            const bool twisted_first = (l % 4 == 2 || l % 4 == 3) && nu == 1;
            if (twisted_first && lnu == 1) {
                c(1, 1) = -1;
                return c;
            }
            const int last = lprime + lnu - 1;
            for (int j = lprime + 1; j <= last; ++j) {
                c = c * ((twisted_first && j == last) ? s_tilde_matrix(tag, j) : s_matrix(tag, j));
            }
            return c;
        }
    }
    return c;
}

TwistedElement lift(const TypeTag& tag, const Partition& p) {
    tag.require_admissible(p);
    GaussMatrix n = GaussMatrix::identity(matrix_dimension(tag));
    for (int nu = 1; nu <= p.mu(); ++nu) n = n * lift_block(tag, p, nu);
    if (tag.twisted()) n = n * j_matrix(tag);
    return TwistedElement{LiftMatrix{std::move(n), tag, p}, tag.twisted()};
}

// ---------------------------------------------------------------------------
// Twist, membership
// ---------------------------------------------------------------------------

GaussMatrix apply_theta(const TypeTag& tag, const GaussMatrix& g) {
    const GaussMatrix j = j_matrix(tag);
    if (tag.family() == Family::TwoA) {
        return j * g.monomial_inverse().transpose() * j.monomial_inverse();
    }
    return j * g * j;
}

GaussMatrix apply_theta_algebra(const TypeTag& tag, const GaussMatrix& x) {
    const GaussMatrix j = j_matrix(tag);
    if (tag.family() == Family::TwoA) return -(j * x.transpose() * j.monomial_inverse());
    return j * x * j;
}

GaussMatrix defining_form(const TypeTag& tag) {
    const int n = matrix_dimension(tag);
    switch (tag.family()) {
        case Family::C: {
            std::vector<GaussInt> d;
            for (int i = 1; i <= n; ++i) d.push_back(i <= n / 2 ? 1 : -1);
            return GaussMatrix::antidiagonal(n) * GaussMatrix::diagonal(d);
        }
        case Family::B:
        case Family::D:
        case Family::TwoD:
            return GaussMatrix::antidiagonal(n);
        default:
            return GaussMatrix::identity(n);
    }
}

std::optional<std::string> membership_failure(const TypeTag& tag, const GaussMatrix& g) {
    if (g.size() != matrix_dimension(tag)) return "wrong matrix size";
    if (!g.is_monomial()) return "not monomial";
    const GaussInt det = g.monomial_det();
    switch (tag.family()) {
        case Family::A:
        case Family::TwoA:
            if (det != GaussInt(1)) return "det = " + det.to_string();
            return std::nullopt;
        case Family::B:
        case Family::D:
        case Family::TwoD: {
            const GaussMatrix k = GaussMatrix::antidiagonal(g.size());
            if ((k * g.monomial_inverse() * k).transpose() != g) return "g != (K g^-1 K)^T";
            if (det != GaussInt(1)) return "det = " + det.to_string();
            return std::nullopt;
        }
        case Family::C: {
            const GaussMatrix j = defining_form(tag);
            if (g.transpose() * j * g != j) return "g^T J g != J";
            return std::nullopt;
        }
    }
    return std::nullopt;
}

bool is_member(const TypeTag& tag, const GaussMatrix& g) { return !membership_failure(tag, g); }

std::vector<GaussMatrix> group_generators(const TypeTag& tag) {
    const int l = tag.rank();
    const int n = matrix_dimension(tag);
    std::vector<GaussMatrix> gens;
    const int s_count = tag.family() == Family::TwoD ? l : l - 1;
    for (int k = 1; k <= s_count; ++k) gens.push_back(s_matrix(tag, k));
    switch (tag.family()) {
        case Family::B:
        case Family::C:
            gens.push_back(t_ell_matrix(tag));
            break;
        case Family::D: {
            const GaussMatrix t = t_matrix(tag, l);
            gens.push_back(t * s_matrix(tag, l - 1) * t);
            break;
        }
        case Family::TwoD: {
            const GaussMatrix j = j_matrix(tag);
            gens.push_back(j * s_matrix(tag, l) * j);
            break;
        }
        default:
            break;
    }
    // A torus element with unit entries.
    std::vector<GaussInt> diag(static_cast<std::size_t>(n), GaussInt(1));
    diag.front() = GaussInt::i_unit();
    diag.back() = -GaussInt::i_unit();
    gens.push_back(GaussMatrix::diagonal(diag));
    return gens;
}

// ---------------------------------------------------------------------------
// Orders
// ---------------------------------------------------------------------------

GaussMatrix twisted_power(const TypeTag& tag, const GaussMatrix& g, int k) {
    if (k < 1) throw KacError(ErrorKind::IndexOutOfRange, "twisted power needs k >= 1");
    const GaussMatrix tg = apply_theta(tag, g);
    GaussMatrix p = g;
    for (int i = 1; i < k; ++i) p = p * (i % 2 == 1 ? tg : g);
    return p;
}

std::int64_t order_cap(const TypeTag& tag) {
    std::int64_t max_lcm = 1;
    for (const auto& p : partitions_of(tag.partition_size())) max_lcm = std::max(max_lcm, p.lcm());
    return checked_mul(checked_mul(4, matrix_dimension(tag)), checked_mul(4, max_lcm));
}

namespace {

std::int64_t order_impl(const TwistedElement& e, bool modulo_centre) {
    const TypeTag& tag = e.lift.tag;
    const GaussMatrix& g = e.lift.matrix;
    if (!g.is_monomial()) throw KacError(ErrorKind::Internal, "order requested for a non-monomial matrix");
    const std::int64_t cap = order_cap(tag);
    auto done = [&](const GaussMatrix& p) { return modulo_centre ? p.is_scalar() : p.is_identity(); };
    if (!e.twisted) {
        GaussMatrix p = g;
        for (std::int64_t k = 1; k <= cap; ++k) {
            if (done(p)) return k;
            p = p * g;
        }
    } else {
        // Only even powers can be trivial since theta is outer.
        const GaussMatrix square = g * apply_theta(tag, g);
        GaussMatrix p = square;
        for (std::int64_t k = 2; k <= cap; k += 2) {
            if (done(p)) return k;
            p = p * square;
        }
    }
    throw KacError(ErrorKind::OrderCapExceeded, "no identity power up to " + std::to_string(cap));
}

}  // namespace

std::int64_t group_order(const TwistedElement& e) { return order_impl(e, false); }

std::int64_t element_order(const TwistedElement& e) {
    return order_impl(e, e.twisted && e.lift.tag.family() == Family::TwoA);
}

}  // namespace kacgen
