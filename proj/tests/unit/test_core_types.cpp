#include "kacgen/core_types.hpp"

#include <doctest.h>

#include <random>

using namespace kacgen;

namespace {
IntPoly poly(std::vector<long> c) {
    std::vector<mpz_class> z(c.begin(), c.end());
    return IntPoly(z);
}
}  // namespace

TEST_CASE("partition parsing sorts and reports resorting") {
    bool resorted = true;
    CHECK(Partition::parse("5,4,4,1", &resorted).parts() == std::vector<int>{5, 4, 4, 1});
    CHECK_FALSE(resorted);
    CHECK(Partition::parse("1,4,5,4", &resorted).parts() == std::vector<int>{5, 4, 4, 1});
    CHECK(resorted);
    CHECK_THROWS_AS(Partition::parse("3,0"), KacError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), KacError);
    CHECK_THROWS_AS(Partition::parse("x"), KacError);
    CHECK(Partition({5, 4, 4, 1}).lcm() == 20);
}

TEST_CASE("prefix sums over ascending parts") {
    CHECK(prefix_sums(Partition({1})) == std::vector<int>{0});
    CHECK(prefix_sums(Partition({5, 4, 4, 1})) == std::vector<int>{0, 1, 5, 9});
    CHECK(prefix_sums(Partition({3, 3})) == std::vector<int>{0, 3});
}

TEST_CASE("admissible partitions per type") {
    auto as_parts = [](const std::vector<Partition>& ps) {
        std::vector<std::vector<int>> out;
        for (const auto& p : ps) out.push_back(p.parts());
        return out;
    };
    CHECK(as_parts(admissible_partitions(TypeTag(Family::B, 3))) ==
          std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
    CHECK(as_parts(admissible_partitions(TypeTag(Family::D, 4))) ==
          std::vector<std::vector<int>>{{3, 1}, {2, 2}, {1, 1, 1, 1}});
    CHECK(as_parts(admissible_partitions(TypeTag(Family::TwoA, 6))) ==
          std::vector<std::vector<int>>{{5, 1}, {3, 3}, {3, 1, 1, 1}, {1, 1, 1, 1, 1, 1}});
    CHECK(as_parts(admissible_partitions(TypeTag(Family::TwoD, 2))) == std::vector<std::vector<int>>{{3}, {1, 1, 1}});
    CHECK(as_parts(admissible_partitions(TypeTag(Family::A, 5))) == std::vector<std::vector<int>>{{5}});
    CHECK(as_parts(admissible_partitions(TypeTag(Family::D, 3))) == std::vector<std::vector<int>>{{2, 1}});
    // Partition counts p(n) for n = 1..12.
    const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 1; n <= 12; ++n) CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("type tags enforce rank bounds") {
    CHECK_THROWS_AS(TypeTag(Family::A, 1), KacError);
    CHECK_THROWS_AS(TypeTag(Family::D, 2), KacError);
    CHECK_THROWS_AS(TypeTag(Family::TwoA, 2), KacError);
    CHECK_THROWS_AS(TypeTag::parse("E", 6), KacError);
    CHECK(TypeTag::parse("2D", 4).partition_size() == 5);
    try {
        TypeTag(Family::D, 4).require_admissible(Partition({2, 1, 1}));
        FAIL("expected InadmissiblePartition");
    } catch (const KacError& e) {
        CHECK(e.kind() == ErrorKind::InadmissiblePartition);
    }
}

TEST_CASE("factored polynomials expand exactly") {
    CHECK(expand(FactoredPoly({{2, 1, 1}})) == poly({-1, 0, 1}));
    CHECK(expand(FactoredPoly({{3, -1, 1}, {1, -1, 1}, {1, -1, -1}})) == poly({1, 0, 0, 1}));
    CHECK(expand(FactoredPoly({{4, -1, 1}, {2, -1, 1}})) == poly({1, 0, 1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(expand(FactoredPoly({{1, 1, -1}})), KacError);
    // Phi_12 = t^4 - t^2 + 1, Phi_9 = t^6 + t^3 + 1.
    CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic(9) == poly({1, 0, 0, 1, 0, 0, 1}));
    const auto [q, r] = poly({-1, 0, 0, 0, 0, 0, 1}).divmod_monic(poly({-1, 0, 1}));
    CHECK(q == poly({1, 0, 1, 0, 1}));
    CHECK(r.is_zero());
}

TEST_CASE("root multisets of roots of unity") {
    const RootMultiset a = roots_mod(poly({-1, 0, 1}), 2);
    CHECK(a.counts() == std::map<std::int64_t, std::int64_t>{{0, 1}, {1, 1}});
    const RootMultiset b = roots_mod(poly({1, 0, 1}), 4);
    CHECK(b.counts() == std::map<std::int64_t, std::int64_t>{{1, 1}, {3, 1}});
    const FactoredPoly c21({{4, -1, 1}, {2, -1, 1}});
    const RootMultiset c = roots_mod(c21, 8);
    CHECK(c.counts() == std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 1}, {3, 1}, {5, 1}, {6, 1}, {7, 1}});
    CHECK(c.total() == 6);
    CHECK(expand(reconstruct(c)) == expand(c21));
    CHECK(roots_mod(expand(c21), 8) == c);
    CHECK_THROWS_AS(roots_mod(poly({-2, 1}), 4), KacError);
}

TEST_CASE("gaussian integers") {
    const GaussInt i = GaussInt::i_unit();
    CHECK(i * i == GaussInt(-1));
    CHECK((GaussInt(2, 3) * GaussInt(2, -3)) == GaussInt(13));
    CHECK(i.unit_inverse() == -i);
    CHECK(GaussInt(1, -1).to_string() == "1-i");
    CHECK_THROWS_AS(GaussInt(2).unit_inverse(), KacError);
}

TEST_CASE("checked integer helpers") {
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 62, 4), KacError);
    CHECK(mod_floor(-3, 8) == 5);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(mobius(30) == -1);
    CHECK(mobius(12) == 0);
}

namespace {
FactoredPoly random_factored(std::mt19937& rng) {
    std::uniform_int_distribution<int> k(1, 9);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> mult(1, 2);
    std::bernoulli_distribution plus(0.5);
    std::vector<BinomialFactor> f;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) f.push_back({k(rng), plus(rng) ? 1 : -1, mult(rng)});
    return FactoredPoly(f);
}

mpz_class factor_product(const FactoredPoly& f, long t) {
    mpz_class acc = 1;
    for (const auto& b : f.factors()) {
        mpz_class tk;
        mpz_pow_ui(tk.get_mpz_t(), mpz_class(t).get_mpz_t(), static_cast<unsigned long>(b.k));
        mpz_class v = tk - b.sign;
        mpz_class vm;
        mpz_pow_ui(vm.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(b.mult));
        acc *= vm;
    }
    return acc;
}
}  // namespace

TEST_CASE("expansion agrees with factorwise evaluation at 1 and -1") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const FactoredPoly f = random_factored(rng);
        CHECK(expand(f).eval(1) == factor_product(f, 1));
        CHECK(expand(f).eval(-1) == factor_product(f, -1));
        CHECK(expand(f).eval(2) == factor_product(f, 2));
    }
}

TEST_CASE("roots then reconstruct recovers the expansion") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const FactoredPoly f = random_factored(rng);
        std::int64_t m = 1;
        for (const auto& b : f.factors()) m = lcm64(m, b.sign == 1 ? b.k : 2 * b.k);
        const RootMultiset r = roots_mod(f, m);
        CHECK(r.total() == f.degree());
        CHECK_MESSAGE(expand(reconstruct(r)) == expand(f), f.to_string());
        CHECK(roots_mod(expand(f), m) == r);
    }
}
