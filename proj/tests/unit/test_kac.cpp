#include "kacgen/campaigns.hpp"
#include "kacgen/charpoly.hpp"
#include "kacgen/kac.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace kacgen;

namespace {
using Ints = std::vector<std::int64_t>;

std::int64_t weighted_sum(const KacDiagram& d, const Ints& labels) {
    const AffineDiagram ad = diagram_for(d.tag);
    std::int64_t s = 0;
    for (std::size_t g = 0; g < labels.size(); ++g) s += labels[g] * ad.marks_b[g];
    return s * d.tag.twist_order();
}
}  // namespace

TEST_CASE("sigma lists") {
    CHECK(sigma_list(TypeTag(Family::B, 14), Partition({5, 4, 4, 1})).values ==
          Ints{20, 20, 16, 15, 15, 12, 10, 10, 8, 5, 5, 4, 0, 0});
    CHECK(sigma_list(TypeTag(Family::C, 3), Partition({2, 1})).values == Ints{3, 2, 1});
    CHECK(sigma_list(TypeTag(Family::TwoD, 11), Partition({5, 4, 3})).values ==
          Ints{60, 48, 45, 40, 36, 30, 24, 20, 15, 12, 0});
    CHECK(sigma_list(TypeTag(Family::C, 3), Partition({2, 1})).m == 8);
}

TEST_CASE("sigma lists agree with roots of the characteristic polynomial") {
    for (Family fam : {Family::B, Family::C, Family::D, Family::TwoD}) {
        for (int l = TypeTag::min_diagram_rank(fam); l <= 10; ++l) {
            const TypeTag tag(fam, l);
            for (const auto& p : admissible_partitions(tag)) {
                CHECK_MESSAGE(sigma_list(tag, p).values == oracle::sigma_from_roots(tag, p),
                              tag.to_string() << " " << p.to_string());
            }
        }
    }
    CHECK(oracle::sigma_from_roots(TypeTag(Family::D, 4), Partition({2, 2})) == Ints{2, 1, 1, 0});
    CHECK(oracle::sigma_from_roots(TypeTag(Family::B, 3), Partition({3})) == Ints{3, 2, 1});
}

TEST_CASE("torus exponents") {
    const TypeTag c3(Family::C, 3);
    CHECK(torus_exponents(c3, sigma_list(c3, Partition({2, 1}))).exponents == Ints{3, 2, 1, -1, -2, -3});
    const TypeTag d2(Family::TwoD, 2);
    const SigmaList s = sigma_list(d2, Partition({1, 1, 1}));
    CHECK(s.values == Ints{1, 0});
    CHECK(torus_exponents(d2, s).exponents == Ints{1, 0, 0, 0, 0, -1});
    const TypeTag b3(Family::B, 3);
    const auto tb = torus_exponents(b3, sigma_list(b3, Partition({2, 1})));
    CHECK(tb.exponents.size() == 7);
    CHECK(tb.exponents[3] == 0);
    for (std::size_t i = 0; i < tb.exponents.size(); ++i) CHECK(tb.exponents[i] == -tb.exponents[6 - i]);
}

TEST_CASE("worked example diagrams") {
    for (const auto& g : golden_diagrams()) {
        const TypeTag tag(g.family, g.rank);
        const KacDiagram d = kac_diagram(tag, Partition(g.partition));
        CHECK_MESSAGE(chain_labels(d) == g.chain, tag.to_string());
        CHECK(branch_labels(d) == g.branches);
        CHECK(verify_diagram(d).ok());
    }
    const KacDiagram b = kac_diagram(TypeTag(Family::B, 14), Partition({5, 4, 4, 1}));
    CHECK(chain_labels(b) == Ints{0, 4, 1, 0, 3, 2, 0, 2, 3, 0, 1, 4, 0, 0});
    CHECK(branch_labels(b) == Ints{0});
    const KacDiagram a = kac_diagram(TypeTag(Family::TwoA, 25), Partition({9, 5, 5, 3, 3}));
    CHECK(chain_labels(a) == Ints{5, 2, 0, 3, 0, 0, 5, 1, 0, 4, 5, 0, 0});
}

TEST_CASE("labels satisfy the order identity before normalization") {
    for (Family fam : all_families()) {
        for (int l = TypeTag::min_diagram_rank(fam); l <= 12; ++l) {
            const TypeTag tag(fam, l);
            for (const auto& p : admissible_partitions(tag)) {
                const KacDiagram d = kac_diagram(tag, p);
                const Ints raw = d.raw_labels();
                CHECK(weighted_sum(d, raw) == d.m);
                std::int64_t g = 0;
                for (auto x : d.labels) {
                    CHECK(x >= 0);
                    g = std::gcd(g, x);
                }
                CHECK(g == 1);
                CHECK(unnormalized_labels(tag, sigma_list(tag, p)) == raw);
            }
        }
    }
}

TEST_CASE("type A diagrams are all ones") {
    for (int l = 2; l <= 12; ++l) {
        const KacDiagram d = kac_diagram(TypeTag(Family::A, l), Partition({l}));
        CHECK(d.labels == Ints(static_cast<std::size_t>(l), 1));
    }
}

TEST_CASE("zeta is injective at small rank") {
    for (Family fam : nontrivial_families()) {
        for (int l = TypeTag::min_diagram_rank(fam); l <= 9; ++l) {
            const TypeTag tag(fam, l);
            std::vector<Ints> seen;
            for (const auto& p : admissible_partitions(tag)) {
                const Ints labels = kac_diagram(tag, p).labels;
                CHECK(std::find(seen.begin(), seen.end(), labels) == seen.end());
                seen.push_back(labels);
            }
        }
    }
}

TEST_CASE("ascii rendering") {
    const std::string c3 = render(kac_diagram(TypeTag(Family::C, 3), Partition({2, 1})), Format::Ascii);
    CHECK(c3.substr(c3.find('\n') + 1) == "2 => 1 - 1 <= 2\n");
    const KacDiagram a3 = kac_diagram(TypeTag(Family::A, 3), Partition({3}));
    CHECK(parse(render(a3, Format::Ascii), Format::Ascii).labels == Ints{1, 1, 1});
}

TEST_CASE("render and parse round trip") {
    std::mt19937 rng(99);
    const auto families = all_families();
    std::uniform_int_distribution<std::size_t> pick_family(0, families.size() - 1);
    std::uniform_int_distribution<int> pick_label(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const Family fam = families[pick_family(rng)];
        std::uniform_int_distribution<int> pick_rank(TypeTag::min_diagram_rank(fam), 12);
        const TypeTag tag(fam, pick_rank(rng));
        const AffineDiagram ad = diagram_for(tag);
        Ints labels;
        for (int g = 0; g < ad.node_count(); ++g) labels.push_back(pick_label(rng));
        if (std::all_of(labels.begin(), labels.end(), [](auto x) { return x == 0; })) labels[0] = 1;
        std::int64_t g = 0;
        for (auto x : labels) g = std::gcd(g, x);
        for (auto& x : labels) x /= g;
        KacDiagram d{tag, std::nullopt, kac_point(labels, tag).m, labels, 1, true};
        for (Format fmt : {Format::Ascii, Format::Json}) {
            const KacDiagram back = parse(render(d, fmt), fmt);
            CHECK_MESSAGE(back.labels == d.labels, tag.to_string() << " " << render(d, fmt));
            CHECK(back.tag == d.tag);
        }
        CHECK(parse(render(d, Format::Json), Format::Json) == d);
    }
    for (const auto& gd : golden_diagrams()) {
        const KacDiagram d = kac_diagram(TypeTag(gd.family, gd.rank), Partition(gd.partition));
        CHECK(parse(render(d, Format::Json), Format::Json) == d);
    }
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse("", Format::Ascii), KacError);
    CHECK_THROWS_AS(parse("2 => x - 1 <= 2", Format::Ascii), KacError);
    CHECK_THROWS_AS(parse("2 => 1 -", Format::Ascii), KacError);
    CHECK_THROWS_AS(parse("{", Format::Json), KacError);
    CHECK_THROWS_AS(parse(R"({"family": "E", "rank": 6})", Format::Json), KacError);
    try {
        parse("[1, 2]", Format::Json);
        FAIL("expected ParseError");
    } catch (const KacError& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("verification flags corrupted labels") {
    KacDiagram d = kac_diagram(TypeTag(Family::B, 14), Partition({5, 4, 4, 1}));
    REQUIRE(verify_diagram(d).ok());
    d.labels[3] += 1;
    CHECK_FALSE(verify_diagram(d).ok());

    KacDiagram e = kac_diagram(TypeTag(Family::TwoA, 4), Partition({3, 1}));
    CHECK(verify_diagram(e).ok());
    e.m += 2;
    CHECK_FALSE(verify_diagram(e).ok());
}

TEST_CASE("lambda equals the weighted sum of coweights") {
    for (Family fam : all_families()) {
        for (int l = TypeTag::min_diagram_rank(fam); l <= 10; ++l) {
            const TypeTag tag(fam, l);
            const AffineDiagram ad = diagram_for(tag);
            const CoweightTable t = coweight_table(tag);
            for (const auto& p : admissible_partitions(tag)) {
                const SigmaList s = sigma_list(tag, p);
                const Ints raw = unnormalized_labels(tag, s);
                RationalVector sum(static_cast<std::size_t>(t.dim), Rational(0));
                for (int g = 1; g <= ad.n; ++g) {
                    const auto gi = static_cast<std::size_t>(g);
                    for (int i = 0; i < t.dim; ++i) {
                        sum[static_cast<std::size_t>(i)] += Rational(mpz_class(static_cast<long>(raw[gi] * ad.orbit_size[gi]))) *
                                                            t.coweights[gi][static_cast<std::size_t>(i)];
                    }
                }
                CHECK_MESSAGE(lambda_coordinates(tag, s) == sum, tag.to_string() << " " << p.to_string());
            }
        }
    }
}
