#include "kacgen/core_types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kacgen {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InadmissiblePartition: return "InadmissiblePartition";
        case ErrorKind::UnsupportedType: return "UnsupportedType";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NonPolynomialQuotient: return "NonPolynomialQuotient";
        case ErrorKind::RootNotUnity: return "RootNotUnity";
        case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
        case ErrorKind::NonRealCoefficient: return "NonRealCoefficient";
        case ErrorKind::RecoveryStuck: return "RecoveryStuck";
        case ErrorKind::MismatchDetected: return "MismatchDetected";
        case ErrorKind::NonIntegerEntry: return "NonIntegerEntry";
        case ErrorKind::NegativeLabel: return "NegativeLabel";
        case ErrorKind::AllZeroLabels: return "AllZeroLabels";
        case ErrorKind::RankCapExceeded: return "RankCapExceeded";
        case ErrorKind::NotElliptic: return "NotElliptic";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

KacError::KacError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw KacError(ErrorKind::Internal, "64-bit overflow in multiplication");
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw KacError(ErrorKind::Internal, "64-bit overflow in addition");
    }
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int mobius(std::int64_t n) {
    int result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> descending_parts) : parts_(std::move(descending_parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw KacError(ErrorKind::InadmissiblePartition, "parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw KacError(ErrorKind::InadmissiblePartition, "parts must be weakly decreasing");
        }
        total_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text, bool* resorted) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw KacError(ErrorKind::ParseError, "empty part in partition '" + text + "'");
        }
        item = item.substr(first, last - first + 1);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw KacError(ErrorKind::ParseError, "non-integer part '" + item + "'");
        }
        if (used != item.size()) {
            throw KacError(ErrorKind::ParseError, "non-integer part '" + item + "'");
        }
        parts.push_back(value);
    }
    if (parts.empty()) throw KacError(ErrorKind::ParseError, "empty partition");
    bool sorted = std::is_sorted(parts.begin(), parts.end(), std::greater<>());
    if (resorted) *resorted = !sorted;
    for (int v : parts) {
        if (v < 1) throw KacError(ErrorKind::InadmissiblePartition, "parts must be positive");
    }
    return from_unsorted(std::move(parts));
}

std::vector<int> Partition::ascending() const { return {parts_.rbegin(), parts_.rend()}; }

int Partition::asc(int nu) const {
    if (nu < 1 || nu > mu()) throw KacError(ErrorKind::IndexOutOfRange, "part index");
    return parts_[parts_.size() - static_cast<std::size_t>(nu)];
}

std::int64_t Partition::lcm() const {
    std::int64_t l = 1;
    for (int p : parts_) l = lcm64(l, p);
    return l;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<int> prefix_sums(const Partition& p) {
    std::vector<int> out;
    int acc = 0;
    for (int part : p.ascending()) {
        out.push_back(acc);
        acc += part;
    }
    return out;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 1) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

// ---------------------------------------------------------------------------
// TypeTag
// ---------------------------------------------------------------------------

std::string family_name(Family family) {
    switch (family) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::TwoA: return "2A";
        case Family::TwoD: return "2D";
    }
    return "?";
}

int TypeTag::min_rank(Family family) {
    switch (family) {
        case Family::A: return 2;
        case Family::B: return 2;
        case Family::C: return 2;
        case Family::D: return 3;
        case Family::TwoA: return 3;
        case Family::TwoD: return 2;
    }
    return 0;
}

int TypeTag::min_diagram_rank(Family family) {
    switch (family) {
        case Family::B: return 3;
        case Family::D: return 4;
        default: return min_rank(family);
    }
}

TypeTag::TypeTag(Family family, int rank) : family_(family), rank_(rank) {
    if (rank < min_rank(family)) {
        throw KacError(ErrorKind::UnsupportedType,
                       "type " + family_name(family) + " needs rank >= " +
                           std::to_string(min_rank(family)) + ", got " + std::to_string(rank));
    }
}

Family TypeTag::parse_family(const std::string& name) {
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    if (name == "C") return Family::C;
    if (name == "D") return Family::D;
    if (name == "2A" || name == "TwoA") return Family::TwoA;
    if (name == "2D" || name == "TwoD") return Family::TwoD;
    throw KacError(ErrorKind::UnsupportedType, "unsupported type '" + name + "'");
}

TypeTag TypeTag::parse(const std::string& name, int rank) { return TypeTag(parse_family(name), rank); }

int TypeTag::twist_order() const noexcept {
    return (family_ == Family::TwoA || family_ == Family::TwoD) ? 2 : 1;
}

std::string TypeTag::name() const { return family_name(family_); }

std::string TypeTag::to_string() const { return name() + std::to_string(rank_); }

int TypeTag::partition_size() const noexcept { return family_ == Family::TwoD ? rank_ + 1 : rank_; }

std::optional<std::string> TypeTag::inadmissibility_reason(const Partition& p) const {
    if (p.total() != partition_size()) {
        return "parts must sum to " + std::to_string(partition_size()) + " for " + to_string() +
               ", got " + std::to_string(p.total());
    }
    switch (family_) {
        case Family::A:
            if (p.mu() != 1) return "type A admits only the one-part partition (" + std::to_string(rank_) + ")";
            break;
        case Family::B:
        case Family::C:
            break;
        case Family::D:
            if (p.mu() % 2 != 0) return "type D needs an even number of parts";
            break;
        case Family::TwoA:
            for (int v : p.parts()) {
                if (v % 2 == 0) return "type 2A needs all parts odd";
            }
            break;
        case Family::TwoD:
            if (p.mu() % 2 == 0) return "type 2D needs an odd number of parts";
            break;
    }
    return std::nullopt;
}

void TypeTag::require_admissible(const Partition& p) const {
    if (auto reason = inadmissibility_reason(p)) {
        throw KacError(ErrorKind::InadmissiblePartition, "(" + p.to_string() + "): " + *reason);
    }
}

std::vector<Partition> admissible_partitions(const TypeTag& tag) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(tag.partition_size())) {
        if (tag.admissible(p)) out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const mpz_class& coeff) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, mpz_class(0));
    c.back() = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::binomial(int k, int sign) {
    std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1, mpz_class(0));
    c[0] = -sign;
    c[static_cast<std::size_t>(k)] += 1;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPoly::eval(const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    }
    return false;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw KacError(ErrorKind::Internal, "divisor must be monic");
    std::vector<mpz_class> rem = coeffs_;
    int dd = divisor.degree();
    int nd = degree();
    if (nd < dd) return {IntPoly(), *this};
    std::vector<mpz_class> quot(static_cast<std::size_t>(nd - dd) + 1, mpz_class(0));
    for (int i = nd; i >= dd; --i) {
        const mpz_class c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || a != 1) out += a.get_str();
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FactoredPoly
// ---------------------------------------------------------------------------

FactoredPoly::FactoredPoly(std::vector<BinomialFactor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        if (f.k < 1 || (f.sign != 1 && f.sign != -1)) {
            throw KacError(ErrorKind::Internal, "binomial factor needs k >= 1 and sign +-1");
        }
    }
    normalize();
}

void FactoredPoly::normalize() {
    std::map<std::pair<int, int>, int> merged;
    for (const auto& f : factors_) merged[{f.k, f.sign}] += f.mult;
    factors_.clear();
    for (const auto& [key, mult] : merged) {
        if (mult != 0) factors_.push_back({key.first, key.second, mult});
    }
}

FactoredPoly& FactoredPoly::times(int k, int sign, int mult) {
    factors_.push_back({k, sign, mult});
    if (k < 1 || (sign != 1 && sign != -1)) {
        throw KacError(ErrorKind::Internal, "binomial factor needs k >= 1 and sign +-1");
    }
    normalize();
    return *this;
}

FactoredPoly FactoredPoly::operator*(const FactoredPoly& o) const {
    std::vector<BinomialFactor> all = factors_;
    all.insert(all.end(), o.factors_.begin(), o.factors_.end());
    return FactoredPoly(std::move(all));
}

int FactoredPoly::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.k * f.mult;
    return d;
}

std::string FactoredPoly::to_string(const std::string& var) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += " ";
        out += "(" + var;
        if (f.k != 1) out += "^" + std::to_string(f.k);
        out += f.sign == 1 ? " - 1)" : " + 1)";
        if (f.mult != 1) out += "^" + std::to_string(f.mult);
    }
    return out;
}

IntPoly expand(const FactoredPoly& f) {
    IntPoly acc(std::vector<mpz_class>{1});
    for (const auto& fac : f.factors()) {
        if (fac.mult <= 0) continue;
        IntPoly b = IntPoly::binomial(fac.k, fac.sign);
        for (int i = 0; i < fac.mult; ++i) acc = acc * b;
    }
    for (const auto& fac : f.factors()) {
        if (fac.mult >= 0) continue;
        IntPoly b = IntPoly::binomial(fac.k, fac.sign);
        for (int i = 0; i < -fac.mult; ++i) {
            auto [q, r] = acc.divmod_monic(b);
            if (!r.is_zero()) {
                throw KacError(ErrorKind::NonPolynomialQuotient,
                               "factor " + b.to_string() + " does not divide " + acc.to_string());
            }
            acc = std::move(q);
        }
    }
    return acc;
}

FactoredPoly cyclotomic_factored(std::int64_t n) {
    FactoredPoly f;
    for (std::int64_t d : divisors(n)) {
        int mu = mobius(n / d);
        if (mu != 0) f.times(static_cast<int>(d), 1, mu);
    }
    return f;
}

IntPoly cyclotomic(std::int64_t n) { return expand(cyclotomic_factored(n)); }

// ---------------------------------------------------------------------------
// RootMultiset
// ---------------------------------------------------------------------------

RootMultiset::RootMultiset(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 1) throw KacError(ErrorKind::Internal, "root modulus must be positive");
}

std::int64_t RootMultiset::count(std::int64_t e) const {
    auto it = counts_.find(mod_floor(e, modulus_));
    return it == counts_.end() ? 0 : it->second;
}

std::int64_t RootMultiset::total() const {
    std::int64_t t = 0;
    for (const auto& [e, c] : counts_) t += c;
    return t;
}

void RootMultiset::add(std::int64_t e, std::int64_t times) {
    if (times < 0) {
        remove(e, -times);
        return;
    }
    if (times == 0) return;
    counts_[mod_floor(e, modulus_)] += times;
}

void RootMultiset::remove(std::int64_t e, std::int64_t times) {
    std::int64_t key = mod_floor(e, modulus_);
    auto it = counts_.find(key);
    std::int64_t have = it == counts_.end() ? 0 : it->second;
    if (have < times) {
        throw KacError(ErrorKind::Internal, "root multiplicity would become negative at exponent " +
                                                std::to_string(key));
    }
    if (have == times) {
        counts_.erase(it);
    } else {
        it->second -= times;
    }
}

RootMultiset RootMultiset::lifted(std::int64_t new_modulus) const {
    if (new_modulus % modulus_ != 0) throw KacError(ErrorKind::Internal, "lift modulus must be a multiple");
    RootMultiset out(new_modulus);
    std::int64_t scale = new_modulus / modulus_;
    for (const auto& [e, c] : counts_) out.add(checked_mul(e, scale), c);
    return out;
}

std::string RootMultiset::to_string() const {
    std::string out = "{mod " + std::to_string(modulus_) + ":";
    for (const auto& [e, c] : counts_) out += " " + std::to_string(e) + "x" + std::to_string(c);
    return out + "}";
}

RootMultiset roots_mod(const FactoredPoly& f, std::int64_t m) {
    RootMultiset out(m);
    // Positive multiplicities first so negative ones can cancel.
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& fac : f.factors()) {
            if ((pass == 0) != (fac.mult > 0)) continue;
            const std::int64_t k = fac.k;
            if (fac.sign == 1) {
                if (m % k != 0) {
                    throw KacError(ErrorKind::RootNotUnity, "roots of t^" + std::to_string(k) +
                                                                " - 1 are not " + std::to_string(m) + "-th roots");
                }
                for (std::int64_t j = 0; j < k; ++j) out.add(j * (m / k), fac.mult);
            } else {
                if (m % (2 * k) != 0) {
                    throw KacError(ErrorKind::RootNotUnity, "roots of t^" + std::to_string(k) +
                                                                " + 1 are not " + std::to_string(m) + "-th roots");
                }
                for (std::int64_t j = 0; j < k; ++j) out.add((2 * j + 1) * (m / (2 * k)), fac.mult);
            }
        }
    }
    return out;
}

namespace {
void add_primitive_roots(RootMultiset& out, std::int64_t m, std::int64_t d, std::int64_t times) {
    for (std::int64_t j = 0; j < d; ++j) {
        if (std::gcd(j, d) == 1) out.add(j * (m / d), times);
    }
}
}  // namespace

RootMultiset roots_mod(const IntPoly& f, std::int64_t m) {
    if (!f.is_monic()) throw KacError(ErrorKind::RootNotUnity, "polynomial is not monic");
    RootMultiset out(m);
    IntPoly rest = f;
    for (std::int64_t d : divisors(m)) {
        IntPoly phi = cyclotomic(d);
        while (rest.degree() >= phi.degree()) {
            auto [q, r] = rest.divmod_monic(phi);
            if (!r.is_zero()) break;
            rest = std::move(q);
            add_primitive_roots(out, m, d, 1);
        }
    }
    if (rest.degree() != 0) {
        throw KacError(ErrorKind::RootNotUnity,
                       "leftover factor " + rest.to_string() + " has roots that are not " +
                           std::to_string(m) + "-th roots of unity");
    }
    return out;
}

FactoredPoly reconstruct(const RootMultiset& roots) {
    const std::int64_t m = roots.modulus();
    FactoredPoly out;
    for (std::int64_t d : divisors(m)) {
        std::optional<std::int64_t> mult;
        for (std::int64_t j = 0; j < d; ++j) {
            if (std::gcd(j, d) != 1) continue;
            std::int64_t c = roots.count(j * (m / d));
            if (mult && *mult != c) {
                throw KacError(ErrorKind::RootNotUnity,
                               "root multiset is not closed under Galois conjugation at order " +
                                   std::to_string(d));
            }
            mult = c;
        }
        if (mult && *mult != 0) {
            const FactoredPoly cyc = cyclotomic_factored(d);
            for (const auto& fac : cyc.factors()) {
                out.times(fac.k, fac.sign, static_cast<int>(fac.mult * *mult));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// GaussInt
// ---------------------------------------------------------------------------

bool GaussInt::is_unit() const { return norm() == 1; }

GaussInt GaussInt::unit_inverse() const {
    if (!is_unit()) throw KacError(ErrorKind::Internal, "inverse of non-unit " + to_string());
    return conj();
}

std::string GaussInt::to_string() const {
    if (im == 0) return re.get_str();
    std::string imag = (abs(im) == 1 ? std::string() : mpz_class(abs(im)).get_str()) + "i";
    if (re == 0) return (im < 0 ? "-" : "") + imag;
    return re.get_str() + (im < 0 ? "-" : "+") + imag;
}

}  // namespace kacgen
