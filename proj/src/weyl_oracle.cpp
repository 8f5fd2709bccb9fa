#include "kacgen/weyl_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace kacgen {

namespace {

bool type_a_like(const TypeTag& tag) { return tag.family() == Family::A || tag.family() == Family::TwoA; }
bool even_signs(const TypeTag& tag) { return tag.family() == Family::D || tag.family() == Family::TwoD; }

void require_cap(const TypeTag& tag) {
    if (tag.rank() > kWeylRankCap) {
        throw KacError(ErrorKind::RankCapExceeded, "Weyl group enumeration is capped at rank " +
                                                       std::to_string(kWeylRankCap) + ", got " + tag.to_string());
    }
}

SignedPermutation make(const TypeTag& tag, std::vector<int> perm, std::vector<int> signs) {
    return SignedPermutation{std::move(perm), std::move(signs), tag};
}

}  // namespace

// ---------------------------------------------------------------------------
// SignedPermutation
// ---------------------------------------------------------------------------

int weyl_coordinates(const TypeTag& tag) { return tag.family() == Family::TwoD ? tag.rank() + 1 : tag.rank(); }

SignedPermutation SignedPermutation::identity(const TypeTag& tag) {
    const int r = weyl_coordinates(tag);
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    return make(tag, perm, std::vector<int>(static_cast<std::size_t>(r), 1));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
    SignedPermutation r = o;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        const auto mid = static_cast<std::size_t>(o.perm[j]);
        r.perm[j] = perm[mid];
        r.signs[j] = o.signs[j] * signs[mid];
    }
    return r;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation r = *this;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        r.perm[static_cast<std::size_t>(perm[j])] = static_cast<int>(j);
        r.signs[static_cast<std::size_t>(perm[j])] = signs[j];
    }
    return r;
}

SignedPermutation SignedPermutation::power(std::int64_t k) const {
    if (k < 0) return inverse().power(-k);
    SignedPermutation result = identity(tag);
    SignedPermutation base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::int64_t SignedPermutation::order() const {
    std::vector<bool> seen(perm.size(), false);
    std::int64_t ord = 1;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (seen[j]) continue;
        std::int64_t len = 0;
        int sign = 1;
        std::size_t x = j;
        while (!seen[x]) {
            seen[x] = true;
            sign *= signs[x];
            x = static_cast<std::size_t>(perm[x]);
            ++len;
        }
        ord = lcm64(ord, sign < 0 ? 2 * len : len);
    }
    return ord;
}

std::uint64_t SignedPermutation::key() const {
    std::uint64_t k = 0;
    for (std::size_t j = 0; j < perm.size(); ++j) {
        k |= static_cast<std::uint64_t>(perm[j]) << (4 * j);
        if (signs[j] < 0) k |= std::uint64_t{8} << (4 * j);
    }
    return k;
}

std::string SignedPermutation::to_string() const {
    std::string out = "[";
    for (std::size_t j = 0; j < perm.size(); ++j) {
        if (j) out += ",";
        out += (signs[j] < 0 ? "-" : "") + std::to_string(perm[j] + 1);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Realization
// ---------------------------------------------------------------------------

std::vector<SignedPermutation> enumerate_group(const TypeTag& tag) {
    require_cap(tag);
    const int r = weyl_coordinates(tag);
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        const unsigned masks = type_a_like(tag) ? 1U : (1U << r);
        for (unsigned mask = 0; mask < masks; ++mask) {
            if (even_signs(tag) && __builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> signs(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j) signs[static_cast<std::size_t>(j)] = (mask >> j) & 1U ? -1 : 1;
            out.push_back(make(tag, perm, signs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::int64_t group_size(const TypeTag& tag) {
    const int r = weyl_coordinates(tag);
    std::int64_t n = 1;
    for (int k = 2; k <= r; ++k) n *= k;
    if (type_a_like(tag)) return n;
    n <<= r;
    return even_signs(tag) ? n / 2 : n;
}

std::vector<SignedPermutation> simple_reflections(const TypeTag& tag) {
    const int r = weyl_coordinates(tag);
    std::vector<SignedPermutation> out;
    for (int i = 0; i + 1 < r; ++i) {
        SignedPermutation s = SignedPermutation::identity(tag);
        std::swap(s.perm[static_cast<std::size_t>(i)], s.perm[static_cast<std::size_t>(i + 1)]);
        out.push_back(s);
    }
    if (type_a_like(tag)) return out;
    SignedPermutation last = SignedPermutation::identity(tag);
    if (even_signs(tag)) {
        if (r < 2) return out;
        const auto a = static_cast<std::size_t>(r - 2);
        const auto b = static_cast<std::size_t>(r - 1);
        std::swap(last.perm[a], last.perm[b]);
        last.signs[a] = -1;
        last.signs[b] = -1;
    } else {
        last.signs[static_cast<std::size_t>(r - 1)] = -1;
    }
    out.push_back(last);
    return out;
}

GaussMatrix weyl_matrix(const SignedPermutation& w) {
    const TypeTag& tag = w.tag;
    const int n = matrix_dimension(tag);
    const int r = weyl_coordinates(tag);
    GaussMatrix m(n);
    if (type_a_like(tag)) {
        for (int j = 0; j < r; ++j) m(w.perm[static_cast<std::size_t>(j)] + 1, j + 1) = 1;
        return m;
    }
    for (int j = 0; j < r; ++j) {
        const int k = w.perm[static_cast<std::size_t>(j)] + 1;
        const bool plus = w.signs[static_cast<std::size_t>(j)] > 0;
        m(plus ? k : n + 1 - k, j + 1) = 1;
        m(plus ? n + 1 - k : k, n - j) = 1;
    }
    if (n % 2 == 1) m(r + 1, r + 1) = 1;
    return m;
}

SignedPermutation weyl_image(const TypeTag& tag, const GaussMatrix& g) {
    if (g.size() != matrix_dimension(tag) || !g.is_monomial()) {
        throw KacError(ErrorKind::Internal, "Weyl image needs a monomial matrix of the realization");
    }
    const int n = g.size();
    const int r = weyl_coordinates(tag);
    SignedPermutation w = SignedPermutation::identity(tag);
    for (int j = 1; j <= r; ++j) {
        const int i = g.column_support(j);
        auto& p = w.perm[static_cast<std::size_t>(j - 1)];
        auto& s = w.signs[static_cast<std::size_t>(j - 1)];
        if (type_a_like(tag) || i <= r) {
            p = i - 1;
            s = 1;
        } else if (n % 2 == 1 && i == r + 1) {
            throw KacError(ErrorKind::Internal, "matrix does not normalize the torus");
        } else {
            p = n - i;
            s = -1;
        }
    }
    return w;
}

SignedPermutation theta(const SignedPermutation& w) {
    if (!w.tag.twisted()) return w;
    return weyl_image(w.tag, apply_theta(w.tag, weyl_matrix(w)));
}

SignedPermutation theta_on_vectors(const TypeTag& tag) {
    SignedPermutation t = SignedPermutation::identity(tag);
    const int r = weyl_coordinates(tag);
    if (tag.family() == Family::TwoA) {
        for (int j = 0; j < r; ++j) {
            t.perm[static_cast<std::size_t>(j)] = r - 1 - j;
            t.signs[static_cast<std::size_t>(j)] = -1;
        }
    } else if (tag.family() == Family::TwoD) {
        t.signs[static_cast<std::size_t>(r - 1)] = -1;
    }
    return t;
}

int fixed_space_dimension(const SignedPermutation& w, bool twisted) {
    const bool use_theta = twisted && w.tag.twisted();
    const SignedPermutation g = use_theta ? w * theta_on_vectors(w.tag) : w;
    std::vector<bool> seen(g.perm.size(), false);
    int dim = 0;
    for (std::size_t j = 0; j < g.perm.size(); ++j) {
        if (seen[j]) continue;
        int sign = 1;
        std::size_t x = j;
        while (!seen[x]) {
            seen[x] = true;
            sign *= g.signs[x];
            x = static_cast<std::size_t>(g.perm[x]);
        }
        if (sign > 0) ++dim;
    }
    // The all-ones vector is fixed by S_l and lies outside the reflection representation.
    if (type_a_like(w.tag) && !use_theta) --dim;
    return dim;
}

// ---------------------------------------------------------------------------
// Class data, cached per (tag, twisted)
// ---------------------------------------------------------------------------

namespace {

struct GroupData {
    std::vector<SignedPermutation> elements;
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::vector<std::size_t> class_of;
    std::vector<ConjClass> classes;
};

std::unique_ptr<GroupData> build_group(const TypeTag& tag, bool use_theta) {
    auto g = std::make_unique<GroupData>();
    g->elements = enumerate_group(tag);
    for (std::size_t k = 0; k < g->elements.size(); ++k) g->index.emplace(g->elements[k].key(), k);
    auto idx = [&](const SignedPermutation& w) { return g->index.at(w.key()); };

    const std::vector<SignedPermutation> simple = simple_reflections(tag);
    std::vector<SignedPermutation> twisted_simple;
    for (const auto& s : simple) twisted_simple.push_back(use_theta ? theta(s) : s);

    // x -> s x theta(s) for simple s generates theta-conjugacy.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    g->class_of.assign(g->elements.size(), unset);
    for (std::size_t start = 0; start < g->elements.size(); ++start) {
        if (g->class_of[start] != unset) continue;
        const std::size_t c = g->classes.size();
        std::deque<std::size_t> queue{start};
        g->class_of[start] = c;
        std::int64_t size = 0;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            ++size;
            for (std::size_t k = 0; k < simple.size(); ++k) {
                const std::size_t y = idx(simple[k] * g->elements[x] * twisted_simple[k]);
                if (g->class_of[y] == unset) {
                    g->class_of[y] = c;
                    queue.push_back(y);
                }
            }
        }
        const SignedPermutation& rep = g->elements[start];
        g->classes.push_back(ConjClass{rep, size, true, fixed_space_dimension(rep, use_theta) == 0, use_theta, c});
    }

    // Orbits of theta on the simple reflections; the maximal theta-stable proper
    // subsets are the complements of single orbits.
    std::vector<std::size_t> partner(simple.size());
    for (std::size_t k = 0; k < simple.size(); ++k) {
        const SignedPermutation t = use_theta ? theta(simple[k]) : simple[k];
        auto it = std::find(simple.begin(), simple.end(), t);
        if (it == simple.end()) throw KacError(ErrorKind::Internal, "theta does not permute the simple reflections");
        partner[k] = static_cast<std::size_t>(it - simple.begin());
    }
    std::vector<bool> done(simple.size(), false);
    for (std::size_t k = 0; k < simple.size(); ++k) {
        if (done[k]) continue;
        done[k] = done[partner[k]] = true;
        std::vector<SignedPermutation> gens;
        for (std::size_t j = 0; j < simple.size(); ++j) {
            if (j != k && j != partner[k]) gens.push_back(simple[j]);
        }
        std::vector<bool> in_sub(g->elements.size(), false);
        const std::size_t e = idx(SignedPermutation::identity(tag));
        std::deque<std::size_t> queue{e};
        in_sub[e] = true;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            g->classes[g->class_of[x]].elliptic = false;
            for (const auto& s : gens) {
                const std::size_t y = idx(g->elements[x] * s);
                if (!in_sub[y]) {
                    in_sub[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    return g;
}

const GroupData& group_data(const TypeTag& tag, bool twisted) {
    require_cap(tag);
    const bool use_theta = twisted && tag.twisted();
    static std::mutex mutex;
    static std::map<std::tuple<int, int, bool>, std::unique_ptr<GroupData>> cache;
    const auto key = std::make_tuple(static_cast<int>(tag.family()), tag.rank(), use_theta);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto built = build_group(tag, use_theta);
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(key, std::move(built));
    return *it->second;
}

std::vector<std::vector<int>> roots(const TypeTag& tag) {
    const int r = weyl_coordinates(tag);
    std::vector<std::vector<int>> out;
    auto unit = [&](int i, int a, int j, int b) {
        std::vector<int> v(static_cast<std::size_t>(r), 0);
        v[static_cast<std::size_t>(i)] += a;
        if (j >= 0) v[static_cast<std::size_t>(j)] += b;
        return v;
    };
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            out.push_back(unit(i, 1, j, -1));
            if (!type_a_like(tag) && i < j) {
                out.push_back(unit(i, 1, j, 1));
                out.push_back(unit(i, -1, j, -1));
            }
        }
        if (tag.family() == Family::B || tag.family() == Family::C) {
            const int len = tag.family() == Family::C ? 2 : 1;
            out.push_back(unit(i, len, -1, 0));
            out.push_back(unit(i, -len, -1, 0));
        }
    }
    return out;
}

std::vector<int> act(const SignedPermutation& g, const std::vector<int>& v) {
    std::vector<int> out(v.size(), 0);
    for (std::size_t j = 0; j < v.size(); ++j) out[static_cast<std::size_t>(g.perm[j])] += g.signs[j] * v[j];
    return out;
}

}  // namespace

EllipticReport is_elliptic(const SignedPermutation& w, bool twisted) {
    const GroupData& g = group_data(w.tag, twisted);
    const ConjClass& c = g.classes[g.class_of[g.index.at(w.key())]];
    return EllipticReport{c.elliptic, fixed_space_dimension(w, twisted) == 0};
}

std::vector<ConjClass> twisted_conjugacy_classes(const TypeTag& tag) { return group_data(tag, true).classes; }

std::vector<ConjClass> conjugacy_classes(const TypeTag& tag) { return group_data(tag, false).classes; }

std::size_t class_index(const SignedPermutation& w, bool twisted) {
    const GroupData& g = group_data(w.tag, twisted);
    return g.class_of[g.index.at(w.key())];
}

ConjClass class_of_lift(const TypeTag& tag, const Partition& p) {
    const TwistedElement e = lift(tag, p);
    const SignedPermutation w = weyl_image(tag, e.lift.matrix);
    const GroupData& g = group_data(tag, true);
    const ConjClass& c = g.classes[g.class_of[g.index.at(w.key())]];
    if (!c.elliptic) {
        throw KacError(ErrorKind::NotElliptic,
                       "Weyl image " + w.to_string() + " of the lift for " + p.to_string() + " is not elliptic");
    }
    return c;
}

// ---------------------------------------------------------------------------
// Regular ellipticity
// ---------------------------------------------------------------------------

bool is_regular_elliptic_partition(const TypeTag& tag, const Partition& p) {
    tag.require_admissible(p);
    const auto& parts = p.parts();
    const int l = tag.rank();
    const bool all_equal = std::all_of(parts.begin(), parts.end(), [&](int x) { return x == parts.front(); });
    const int d = parts.front();
    // (e, ..., e, 1) with at least one e.
    const bool tail_one = parts.size() >= 2 && parts.back() == 1 &&
                          std::all_of(parts.begin(), parts.end() - 1, [&](int x) { return x == d; });
    switch (tag.family()) {
        case Family::A:
            return true;
        case Family::B:
        case Family::C:
            return all_equal;
        case Family::D:
            return (all_equal && (l / d) % 2 == 0) || (tail_one && ((l - 1) / d) % 2 == 1);
        case Family::TwoA:
            return (tail_one && d % 2 == 1 && (l - 1) % d == 0) || (all_equal && d % 2 == 1 && l % d == 0);
        case Family::TwoD:
            return (all_equal && (l + 1) % d == 0 && ((l + 1) / d) % 2 == 1) ||
                   (tail_one && l % d == 0 && (l / d) % 2 == 0);
    }
    return false;
}

bool is_regular_elliptic_bruteforce(const TypeTag& tag, const Partition& p) {
    const TwistedElement e = lift(tag, p);
    const SignedPermutation w = weyl_image(tag, e.lift.matrix);
    if (fixed_space_dimension(w, true) != 0) return false;
    const SignedPermutation g = tag.twisted() ? w * theta_on_vectors(tag) : w;
    const auto all = roots(tag);
    SignedPermutation h = g;
    // Powers up to the order of g on the span of the roots.
    for (std::int64_t k = 1; k <= 2 * g.order(); ++k, h = h * g) {
        std::size_t fixed = 0;
        for (const auto& a : all) fixed += act(h, a) == a ? 1 : 0;
        if (fixed == all.size()) return true;
        if (fixed > 0) return false;
    }
    throw KacError(ErrorKind::Internal, "power loop did not reach the identity");
}

// ---------------------------------------------------------------------------
// Rationality
// ---------------------------------------------------------------------------

RationalityResult check_rationality(const TypeTag& tag) {
    const GroupData& g = group_data(tag, false);
    RationalityResult r;
    for (std::size_t x = 0; x < g.elements.size(); ++x) {
        const SignedPermutation& w = g.elements[x];
        const std::int64_t ord = w.order();
        SignedPermutation pw = w;
        for (std::int64_t j = 2; j < ord; ++j) {
            pw = pw * w;
            if (std::gcd(j, ord) != 1) continue;
            if (g.class_of[g.index.at(pw.key())] != g.class_of[x]) {
                r.rational = false;
                r.counterexample = w.to_string() + " and its power " + std::to_string(j) + " are not conjugate";
                return r;
            }
        }
        ++r.elements;
    }
    return r;
}

}  // namespace kacgen
