// Brute-force Weyl groups as signed permutations: (twisted) conjugacy classes,
// ellipticity, the class of a lift, regular ellipticity and rationality.
#pragma once

#include "kacgen/core_types.hpp"
#include "kacgen/lifts.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kacgen {

inline constexpr int kWeylRankCap = 6;

// w(e_j) = signs[j] * e_{perm[j]}, 0-based. Type A and 2A elements have all signs +1;
// D and 2D elements have an even number of -1.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;
    TypeTag tag;

    static SignedPermutation identity(const TypeTag& tag);
    // (a * b)(v) = a(b(v)).
    SignedPermutation operator*(const SignedPermutation& o) const;
    SignedPermutation inverse() const;
    SignedPermutation power(std::int64_t k) const;
    std::int64_t order() const;
    bool operator==(const SignedPermutation& o) const { return perm == o.perm && signs == o.signs; }
    std::uint64_t key() const;
    // Images of e_1..e_r, e.g. "[2,-1,3]".
    std::string to_string() const;
};

struct ConjClass {
    SignedPermutation representative;
    std::int64_t size;
    bool elliptic;             // meets no proper (theta-stable) parabolic subgroup
    bool fixed_space_elliptic; // w theta fixes no nonzero vector of the reflection representation
    bool twisted;
    std::size_t index;         // position in the class list of the group
};

struct EllipticReport {
    bool parabolic;
    bool fixed_space;
    bool agree() const { return parabolic == fixed_space; }
};

// Number of coordinates the signed permutations act on: l, except l + 1 for 2D.
int weyl_coordinates(const TypeTag& tag);

// Deterministic order, each element once. Throws RankCapExceeded.
std::vector<SignedPermutation> enumerate_group(const TypeTag& tag);
std::int64_t group_size(const TypeTag& tag);

// Simple reflections in Bourbaki order for the untwisted root system.
std::vector<SignedPermutation> simple_reflections(const TypeTag& tag);

// The pinned involution on W, computed through the matrix realization. Identity for untwisted tags.
SignedPermutation theta(const SignedPermutation& w);
// The involution on the reflection representation (-w0 for 2A, last sign flip for 2D).
SignedPermutation theta_on_vectors(const TypeTag& tag);

// Weyl image of a monomial matrix in the realization of the tag.
SignedPermutation weyl_image(const TypeTag& tag, const GaussMatrix& g);
GaussMatrix weyl_matrix(const SignedPermutation& w);

// twisted selects theta-conjugacy and theta-stable parabolics; ignored for untwisted tags.
// Throws RankCapExceeded.
EllipticReport is_elliptic(const SignedPermutation& w, bool twisted);
// Dimension of the fixed space of w theta on the reflection representation.
int fixed_space_dimension(const SignedPermutation& w, bool twisted);

// theta-conjugacy classes for twisted tags, ordinary classes otherwise.
std::vector<ConjClass> twisted_conjugacy_classes(const TypeTag& tag);
std::vector<ConjClass> conjugacy_classes(const TypeTag& tag);
// Index into twisted_conjugacy_classes (twisted) or conjugacy_classes.
std::size_t class_index(const SignedPermutation& w, bool twisted);

// Class of the Weyl image of lift(tag, p). Throws NotElliptic.
ConjClass class_of_lift(const TypeTag& tag, const Partition& p);

// Closed-form partition conditions for free action on the roots. Throws InadmissiblePartition.
bool is_regular_elliptic_partition(const TypeTag& tag, const Partition& p);
// <w theta> acts freely on the roots and w theta has trivial fixed space, for the lift image.
bool is_regular_elliptic_bruteforce(const TypeTag& tag, const Partition& p);

struct RationalityResult {
    bool rational = true;
    std::int64_t elements = 0;
    std::optional<std::string> counterexample;
};

// Every w^j with gcd(j, ord w) = 1 is conjugate to w. Throws RankCapExceeded.
RationalityResult check_rationality(const TypeTag& tag);

}  // namespace kacgen
