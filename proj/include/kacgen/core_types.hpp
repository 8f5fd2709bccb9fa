// Exact-arithmetic and combinatorial building blocks shared by every module.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kacgen {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind {
    InadmissiblePartition,
    UnsupportedType,
    IndexOutOfRange,
    NonPolynomialQuotient,
    RootNotUnity,
    OrderCapExceeded,
    NonRealCoefficient,
    RecoveryStuck,
    MismatchDetected,
    NonIntegerEntry,
    NegativeLabel,
    AllZeroLabels,
    RankCapExceeded,
    NotElliptic,
    ParseError,
    Internal,
};

const char* error_kind_name(ErrorKind kind);

class KacError : public std::runtime_error {
public:
    KacError(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Small integer helpers (overflow-checked)
// ---------------------------------------------------------------------------

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
// Euclidean remainder in [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
int mobius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

// ---------------------------------------------------------------------------
// Partition
// ---------------------------------------------------------------------------

// Weakly decreasing positive parts. The ascending view indexes l_1 <= ... <= l_mu.
class Partition {
public:
    Partition() = default;
    // Throws InadmissiblePartition unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> descending_parts);
    // Sorts into descending order first.
    static Partition from_unsorted(std::vector<int> parts);
    // Parses "5,4,4,1". Sets *resorted when the input was not descending.
    static Partition parse(const std::string& text, bool* resorted = nullptr);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::vector<int> ascending() const;
    int total() const noexcept { return total_; }
    int mu() const noexcept { return static_cast<int>(parts_.size()); }
    // Part l_nu of the ascending view, 1-based nu.
    int asc(int nu) const;
    std::int64_t lcm() const;
    std::string to_string() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// (l'_1, ..., l'_mu) over the ascending view; l'_1 = 0.
std::vector<int> prefix_sums(const Partition& p);

// All partitions of n in lexicographically descending order.
std::vector<Partition> partitions_of(int n);

// ---------------------------------------------------------------------------
// TypeTag
// ---------------------------------------------------------------------------

enum class Family { A, B, C, D, TwoA, TwoD };

class TypeTag {
public:
    // Throws UnsupportedType when the rank is below the family's minimum.
    TypeTag(Family family, int rank);
    // Accepts "A", "B", "C", "D", "2A", "2D" (and "TwoA", "TwoD").
    static TypeTag parse(const std::string& family, int rank);
    static Family parse_family(const std::string& family);
    static int min_rank(Family family);
    static int min_diagram_rank(Family family);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    int twist_order() const noexcept;
    bool twisted() const noexcept { return twist_order() == 2; }
    bool supports_diagram() const noexcept { return rank_ >= min_diagram_rank(family_); }
    std::string name() const;
    std::string to_string() const;
    // The integer the admissible partitions sum to (l, or l+1 for 2D).
    int partition_size() const noexcept;
    // Empty when admissible, else the violated constraint.
    std::optional<std::string> inadmissibility_reason(const Partition& p) const;
    bool admissible(const Partition& p) const { return !inadmissibility_reason(p); }
    void require_admissible(const Partition& p) const;

    bool operator==(const TypeTag& o) const { return family_ == o.family_ && rank_ == o.rank_; }

private:
    Family family_;
    int rank_;
};

std::string family_name(Family family);
std::vector<Partition> admissible_partitions(const TypeTag& tag);

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

// Dense integer polynomial, ascending coefficients, no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);
    static IntPoly monomial(int degree, const mpz_class& coeff = 1);
    // t^k - sign
    static IntPoly binomial(int k, int sign);

    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const;
    mpz_class coeff(int i) const;
    mpz_class eval(const mpz_class& t) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }
    bool operator<(const IntPoly& o) const;

    // Division by a monic divisor; returns {quotient, remainder}.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// ---------------------------------------------------------------------------
// FactoredPoly
// ---------------------------------------------------------------------------

// (t^k - sign)^mult with sign in {+1,-1}; mult may be negative.
struct BinomialFactor {
    int k;
    int sign;
    int mult;
    bool operator==(const BinomialFactor& o) const {
        return k == o.k && sign == o.sign && mult == o.mult;
    }
};

class FactoredPoly {
public:
    FactoredPoly() = default;
    explicit FactoredPoly(std::vector<BinomialFactor> factors);

    // Merges equal (k, sign) pairs and drops zero multiplicities; sorted by (k, sign).
    const std::vector<BinomialFactor>& factors() const noexcept { return factors_; }
    FactoredPoly& times(int k, int sign, int mult = 1);
    FactoredPoly operator*(const FactoredPoly& o) const;
    int degree() const;
    std::string to_string(const std::string& var = "t") const;
    bool operator==(const FactoredPoly& o) const { return factors_ == o.factors_; }

private:
    void normalize();
    std::vector<BinomialFactor> factors_;
};

// Throws NonPolynomialQuotient when a negative multiplicity does not divide.
IntPoly expand(const FactoredPoly& f);
// Phi_n as a product of (t^d - 1)^{mobius(n/d)}.
FactoredPoly cyclotomic_factored(std::int64_t n);
IntPoly cyclotomic(std::int64_t n);

// ---------------------------------------------------------------------------
// RootMultiset
// ---------------------------------------------------------------------------

// Multiset of exponents e mod modulus, standing for xi^e with xi a primitive root.
class RootMultiset {
public:
    explicit RootMultiset(std::int64_t modulus);
    std::int64_t modulus() const noexcept { return modulus_; }
    const std::map<std::int64_t, std::int64_t>& counts() const noexcept { return counts_; }
    std::int64_t count(std::int64_t e) const;
    std::int64_t total() const;
    void add(std::int64_t e, std::int64_t times = 1);
    // Throws Internal when the multiplicity would go negative.
    void remove(std::int64_t e, std::int64_t times = 1);
    // Re-expresses every root over a modulus that is a multiple of this one.
    RootMultiset lifted(std::int64_t new_modulus) const;
    bool operator==(const RootMultiset& o) const {
        return modulus_ == o.modulus_ && counts_ == o.counts_;
    }
    std::string to_string() const;

private:
    std::int64_t modulus_;
    std::map<std::int64_t, std::int64_t> counts_;
};

// Roots of f as m-th roots of unity; throws RootNotUnity otherwise.
RootMultiset roots_mod(const FactoredPoly& f, std::int64_t m);
// Roots of a product of cyclotomic polynomials Phi_d with d | m.
RootMultiset roots_mod(const IntPoly& f, std::int64_t m);
// Inverse of roots_mod: Galois-closed multiset back to binomial factors.
FactoredPoly reconstruct(const RootMultiset& roots);

// ---------------------------------------------------------------------------
// GaussInt
// ---------------------------------------------------------------------------

struct GaussInt {
    mpz_class re;
    mpz_class im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt i_unit() { return GaussInt(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_unit() const;
    GaussInt conj() const { return GaussInt(re, -im); }
    mpz_class norm() const { return re * re + im * im; }
    // Inverse of a unit; throws Internal for non-units.
    GaussInt unit_inverse() const;

    GaussInt operator+(const GaussInt& o) const { return GaussInt(re + o.re, im + o.im); }
    GaussInt operator-(const GaussInt& o) const { return GaussInt(re - o.re, im - o.im); }
    GaussInt operator-() const { return GaussInt(-re, -im); }
    GaussInt operator*(const GaussInt& o) const {
        return GaussInt(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussInt& operator+=(const GaussInt& o) { re += o.re; im += o.im; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re -= o.re; im -= o.im; return *this; }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
    std::string to_string() const;
};

using Rational = mpq_class;

}  // namespace kacgen
