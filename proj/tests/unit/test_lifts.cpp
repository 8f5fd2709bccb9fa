#include "kacgen/charpoly.hpp"
#include "kacgen/lifts.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace kacgen;

namespace {
std::vector<TypeTag> tags_up_to(int max_rank) {
    std::vector<TypeTag> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::TwoA, Family::TwoD}) {
        for (int l = TypeTag::min_rank(f); l <= max_rank; ++l) out.emplace_back(f, l);
    }
    return out;
}

GaussMatrix power(const GaussMatrix& g, int k) {
    GaussMatrix p = GaussMatrix::identity(g.size());
    for (int i = 0; i < k; ++i) p = p * g;
    return p;
}

int matrix_order(const GaussMatrix& g) {
    GaussMatrix p = g;
    for (int k = 1; k <= 64; ++k) {
        if (p.is_identity()) return k;
        p = p * g;
    }
    return -1;
}

GaussMatrix random_element(const TypeTag& tag, std::mt19937& rng) {
    const auto gens = group_generators(tag);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    GaussMatrix g = GaussMatrix::identity(matrix_dimension(tag));
    for (int k = 0; k < 12; ++k) g = g * gens[pick(rng)];
    return g;
}
}  // namespace

TEST_CASE("matrix dimensions") {
    CHECK(matrix_dimension(TypeTag(Family::A, 4)) == 4);
    CHECK(matrix_dimension(TypeTag(Family::TwoA, 5)) == 5);
    CHECK(matrix_dimension(TypeTag(Family::B, 3)) == 7);
    CHECK(matrix_dimension(TypeTag(Family::C, 3)) == 6);
    CHECK(matrix_dimension(TypeTag(Family::D, 4)) == 8);
    CHECK(matrix_dimension(TypeTag(Family::TwoD, 3)) == 8);
}

TEST_CASE("simple reflections have order 2 or 4") {
    for (const auto& tag : tags_up_to(6)) {
        const bool sl = tag.family() == Family::A || tag.family() == Family::TwoA;
        const int expected = sl ? 4 : 2;
        for (int k = 1; k < tag.rank(); ++k) {
            const GaussMatrix s = generator(tag, GeneratorKind::S, k).matrix;
            CHECK(s.is_monomial());
            CHECK_MESSAGE(matrix_order(s) == expected, tag.to_string() << " s" << k);
            CHECK(is_member(tag, s));
        }
        if (tag.family() == Family::B || tag.family() == Family::C) {
            const GaussMatrix t = generator(tag, GeneratorKind::TEll).matrix;
            CHECK(matrix_order(t) == (tag.family() == Family::C ? 4 : 2));
            CHECK(is_member(tag, t));
        }
    }
    CHECK_THROWS_AS(generator(TypeTag(Family::B, 3), GeneratorKind::S, 0), KacError);
    CHECK_THROWS_AS(generator(TypeTag(Family::B, 3), GeneratorKind::S, 9), KacError);
    CHECK_THROWS_AS(generator(TypeTag(Family::B, 3), GeneratorKind::J), KacError);
}

TEST_CASE("lifts are monomial members of the group") {
    for (const auto& tag : tags_up_to(10)) {
        for (const auto& p : admissible_partitions(tag)) {
            const TwistedElement e = lift(tag, p);
            CHECK(e.twisted == tag.twisted());
            CHECK(e.lift.matrix.is_monomial());
            const auto why = membership_failure(tag, e.lift.matrix);
            CHECK_MESSAGE(!why, tag.to_string() << " " << p.to_string() << ": " << why.value_or(""));
        }
    }
    CHECK_THROWS_AS(lift(TypeTag(Family::D, 4), Partition({3})), KacError);
}

TEST_CASE("the twist is an involution") {
    std::mt19937 rng(7);
    for (const auto& tag : {TypeTag(Family::TwoA, 4), TypeTag(Family::TwoA, 5), TypeTag(Family::TwoD, 3)}) {
        for (int trial = 0; trial < 10; ++trial) {
            const GaussMatrix g = random_element(tag, rng);
            CHECK(apply_theta(tag, apply_theta(tag, g)) == g);
            CHECK(is_member(tag, apply_theta(tag, g)));
        }
    }
    CHECK_THROWS_AS(apply_theta(TypeTag(Family::B, 3), GaussMatrix::identity(7)), KacError);
}

TEST_CASE("2A twist fixes J up to the centre and inverts and reverses the torus") {
    for (int l : {3, 4, 5, 6}) {
        const TypeTag tag(Family::TwoA, l);
        const GaussMatrix j = generator(tag, GeneratorKind::J).matrix;
        // J is symmetric for odd l and skew for even l, where -1 is central.
        CHECK(apply_theta(tag, j) == (l % 2 == 1 ? j : -j));
        CHECK((apply_theta(tag, j) * j.monomial_inverse()).is_scalar());
        const std::vector<GaussInt> units{GaussInt::i_unit(), GaussInt(-1), -GaussInt::i_unit(), GaussInt(1)};
        std::vector<GaussInt> d;
        std::vector<GaussInt> expected;
        for (int k = 0; k < l; ++k) d.push_back(units[static_cast<std::size_t>((k * 3 + 1) % 4)]);
        for (int k = l - 1; k >= 0; --k) expected.push_back(d[static_cast<std::size_t>(k)].unit_inverse());
        CHECK(apply_theta(tag, GaussMatrix::diagonal(d)) == GaussMatrix::diagonal(expected));
    }
}

TEST_CASE("2D twist swaps the middle coordinates") {
    const TypeTag tag(Family::TwoD, 3);
    const GaussMatrix j = generator(tag, GeneratorKind::J).matrix;
    CHECK(power(j, 2).is_identity());
    CHECK(j(4, 5) == GaussInt(1));
    CHECK(j(5, 4) == GaussInt(1));
}

TEST_CASE("element orders equal the canonical order") {
    for (const auto& tag : tags_up_to(8)) {
        for (const auto& p : admissible_partitions(tag)) {
            const std::int64_t order = element_order(lift(tag, p));
            CHECK_MESSAGE(order == canonical_m(tag, p), tag.to_string() << " " << p.to_string());
            if (tag.family() != Family::TwoA) CHECK(group_order(lift(tag, p)) == order);
        }
    }
    CHECK(element_order(lift(TypeTag(Family::A, 4), Partition({4}))) == 8);
    CHECK(element_order(lift(TypeTag(Family::A, 5), Partition({5}))) == 5);
    CHECK(element_order(lift(TypeTag(Family::C, 2), Partition({1, 1}))) == 4);
}

TEST_CASE("characteristic polynomial is invariant under (twisted) conjugation") {
    std::mt19937 rng(2024);
    const std::vector<std::pair<TypeTag, Partition>> cases{
        {TypeTag(Family::B, 3), Partition({2, 1})},    {TypeTag(Family::C, 3), Partition({3})},
        {TypeTag(Family::D, 4), Partition({3, 1})},    {TypeTag(Family::TwoD, 3), Partition({2, 1, 1})},
        {TypeTag(Family::TwoA, 4), Partition({3, 1})}, {TypeTag(Family::TwoA, 5), Partition({3, 1, 1})},
    };
    for (const auto& [tag, p] : cases) {
        const TwistedElement e = lift(tag, p);
        const IntPoly base = matrix_oracle_charpoly(e).expanded;
        const int trials = tag.twisted() ? 50 : 20;
        for (int trial = 0; trial < trials; ++trial) {
            const GaussMatrix g = random_element(tag, rng);
            const GaussMatrix h = tag.twisted() ? apply_theta(tag, g) : g;
            TwistedElement c = e;
            c.lift.matrix = g * e.lift.matrix * h.monomial_inverse();
            c.lift.partition.reset();
            CHECK_MESSAGE(matrix_oracle_charpoly(c).expanded == base, tag.to_string() << " trial " << trial);
        }
    }
}

TEST_CASE("twisted powers") {
    const TypeTag tag(Family::TwoD, 3);
    const TwistedElement e = lift(tag, Partition({2, 1, 1}));
    const std::int64_t m = element_order(e);
    CHECK(twisted_power(tag, e.lift.matrix, static_cast<int>(m)).is_identity());
    CHECK(m % 2 == 0);
}
