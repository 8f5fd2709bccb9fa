#include "kacgen/weyl_oracle.hpp"

#include <doctest.h>

#include <set>

using namespace kacgen;

TEST_CASE("group sizes") {
    CHECK(group_size(TypeTag(Family::A, 4)) == 24);
    CHECK(group_size(TypeTag(Family::B, 3)) == 48);
    CHECK(group_size(TypeTag(Family::C, 3)) == 48);
    CHECK(group_size(TypeTag(Family::D, 4)) == 192);
    CHECK(group_size(TypeTag(Family::TwoA, 4)) == 24);
    CHECK(group_size(TypeTag(Family::TwoD, 3)) == 192);
    CHECK(enumerate_group(TypeTag(Family::B, 3)).size() == 48);
    CHECK_THROWS_AS(enumerate_group(TypeTag(Family::B, 7)), KacError);
}

TEST_CASE("signed permutation arithmetic") {
    const TypeTag tag(Family::B, 3);
    for (const auto& w : enumerate_group(tag)) {
        CHECK((w * w.inverse()) == SignedPermutation::identity(tag));
        CHECK(w.power(w.order()) == SignedPermutation::identity(tag));
    }
    const auto s = simple_reflections(tag);
    REQUIRE(s.size() == 3);
    CHECK((s[0] * s[1]).order() == 3);
    CHECK((s[1] * s[2]).order() == 4);
    CHECK(s[2].to_string() == "[1,2,-3]");
}

TEST_CASE("theta on the group matches conjugation by the vector involution") {
    for (const auto& tag : {TypeTag(Family::TwoA, 3), TypeTag(Family::TwoA, 4), TypeTag(Family::TwoA, 5),
                            TypeTag(Family::TwoD, 2), TypeTag(Family::TwoD, 3), TypeTag(Family::TwoD, 4)}) {
        const SignedPermutation tv = theta_on_vectors(tag);
        for (const auto& w : enumerate_group(tag)) {
            CHECK(theta(w) == tv * w * tv.inverse());
            CHECK(theta(theta(w)) == w);
        }
    }
}

TEST_CASE("weyl images of matrices round trip") {
    for (const auto& tag : {TypeTag(Family::B, 3), TypeTag(Family::C, 3), TypeTag(Family::D, 4), TypeTag(Family::TwoD, 3)}) {
        for (const auto& w : enumerate_group(tag)) CHECK(weyl_image(tag, weyl_matrix(w)) == w);
    }
}

TEST_CASE("elliptic class counts equal admissible partition counts") {
    for (Family fam : {Family::A, Family::B, Family::C, Family::D, Family::TwoA, Family::TwoD}) {
        for (int l = TypeTag::min_rank(fam); l <= 5; ++l) {
            const TypeTag tag(fam, l);
            const auto classes = twisted_conjugacy_classes(tag);
            std::size_t elliptic = 0;
            std::int64_t total = 0;
            for (const auto& c : classes) {
                elliptic += c.elliptic ? 1 : 0;
                total += c.size;
                CHECK(c.elliptic == c.fixed_space_elliptic);
            }
            CHECK(total == group_size(tag));
            CHECK_MESSAGE(elliptic == admissible_partitions(tag).size(), tag.to_string());
            std::set<std::size_t> hit;
            for (const auto& p : admissible_partitions(tag)) {
                const ConjClass c = class_of_lift(tag, p);
                CHECK(c.elliptic);
                hit.insert(c.index);
            }
            CHECK(hit.size() == elliptic);
        }
    }
}

TEST_CASE("parabolic and fixed-space ellipticity agree") {
    for (const auto& tag : {TypeTag(Family::B, 3), TypeTag(Family::D, 4), TypeTag(Family::A, 4)}) {
        for (const auto& w : enumerate_group(tag)) CHECK(is_elliptic(w, false).agree());
    }
    const TypeTag b2(Family::B, 2);
    const auto minus_one = SignedPermutation{{0, 1}, {-1, -1}, b2};
    CHECK(is_elliptic(minus_one, false).parabolic);
    CHECK(fixed_space_dimension(minus_one, false) == 0);
    CHECK(fixed_space_dimension(SignedPermutation::identity(b2), false) == 2);
    // The A realization acts on the sum-zero hyperplane.
    CHECK(fixed_space_dimension(SignedPermutation::identity(TypeTag(Family::A, 3)), false) == 2);
}

TEST_CASE("regular ellipticity") {
    for (Family fam : {Family::A, Family::B, Family::C, Family::D, Family::TwoA, Family::TwoD}) {
        for (int l = TypeTag::min_rank(fam); l <= 5; ++l) {
            const TypeTag tag(fam, l);
            for (const auto& p : admissible_partitions(tag)) {
                CHECK_MESSAGE(is_regular_elliptic_partition(tag, p) == is_regular_elliptic_bruteforce(tag, p),
                              tag.to_string() << " " << p.to_string());
            }
        }
    }
    CHECK(is_regular_elliptic_partition(TypeTag(Family::B, 4), Partition({4})));
    CHECK(is_regular_elliptic_partition(TypeTag(Family::B, 4), Partition({2, 2})));
    CHECK_FALSE(is_regular_elliptic_partition(TypeTag(Family::B, 3), Partition({2, 1})));
}

TEST_CASE("rationality") {
    CHECK(check_rationality(TypeTag(Family::A, 3)).rational);
    const auto b3 = check_rationality(TypeTag(Family::B, 3));
    CHECK(b3.rational);
    CHECK(b3.elements == 48);
    const auto d4 = check_rationality(TypeTag(Family::D, 4));
    CHECK(d4.rational);
    CHECK(d4.elements == 192);
    CHECK_THROWS_AS(check_rationality(TypeTag(Family::C, 7)), KacError);
}
