#include "kacgen/rootdata.hpp"

#include <doctest.h>

using namespace kacgen;

namespace {
std::vector<TypeTag> tags_up_to(int max_rank) {
    std::vector<TypeTag> out;
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::TwoA, Family::TwoD}) {
        for (int l = TypeTag::min_diagram_rank(f); l <= max_rank; ++l) out.emplace_back(f, l);
    }
    return out;
}

// Expected b-marks in node order 0..n.
std::vector<int> expected_b_marks(const TypeTag& tag) {
    const int l = tag.rank();
    switch (tag.family()) {
        case Family::A: return std::vector<int>(static_cast<std::size_t>(l), 1);
        case Family::B: {
            std::vector<int> b(static_cast<std::size_t>(l + 1), 2);
            b[0] = b[1] = 1;
            return b;
        }
        case Family::C: {
            std::vector<int> b(static_cast<std::size_t>(l + 1), 2);
            b[0] = b[static_cast<std::size_t>(l)] = 1;
            return b;
        }
        case Family::D: {
            std::vector<int> b(static_cast<std::size_t>(l + 1), 2);
            b[0] = b[1] = b[static_cast<std::size_t>(l - 1)] = b[static_cast<std::size_t>(l)] = 1;
            return b;
        }
        case Family::TwoA: {
            const int n = l / 2;
            std::vector<int> b(static_cast<std::size_t>(n + 1), 2);
            b[0] = 1;
            if (l % 2 == 0) {
                b[1] = 1;
                b[static_cast<std::size_t>(n)] = 1;
            }
            return b;
        }
        case Family::TwoD: return std::vector<int>(static_cast<std::size_t>(l + 1), 1);
    }
    return {};
}
}  // namespace

TEST_CASE("node counts") {
    for (const auto& tag : tags_up_to(12)) {
        const AffineDiagram d = diagram_for(tag);
        const int l = tag.rank();
        int expected = l + 1;
        if (tag.family() == Family::A) expected = l;
        if (tag.family() == Family::TwoA) expected = l / 2 + 1;
        CHECK_MESSAGE(d.node_count() == expected, tag.to_string());
        CHECK(d.marks_b.size() == static_cast<std::size_t>(expected));
        CHECK(d.marks_b[0] == 1);
        CHECK(d.marks_c[0] == 1);
        if (!tag.twisted()) CHECK(d.marks_b == d.marks_c);
    }
}

TEST_CASE("b-mark vectors") {
    for (const auto& tag : tags_up_to(12)) {
        CHECK_MESSAGE(diagram_for(tag).marks_b == expected_b_marks(tag), tag.to_string());
    }
    const AffineDiagram c3 = diagram_for(TypeTag(Family::C, 3));
    CHECK(c3.marks_b == std::vector<int>{1, 2, 2, 1});
    CHECK(c3.layout.bonds.front() == "=>");
    CHECK(c3.layout.bonds.back() == "<=");

    const AffineDiagram a3 = diagram_for(TypeTag(Family::TwoA, 3));
    CHECK(a3.node_count() == 2);
    CHECK(a3.marks_b == std::vector<int>{1, 2});
    CHECK(a3.edges.front().multiplicity == 4);

    const AffineDiagram a2 = diagram_for(TypeTag(Family::A, 2));
    CHECK(a2.node_count() == 2);
    CHECK(a2.marks_b == std::vector<int>{1, 1});
    CHECK(a2.layout.bonds == std::vector<std::string>{"<=>"});
}

TEST_CASE("diagrams below the diagram rank are rejected") {
    CHECK_THROWS_AS(diagram_for(TypeTag(Family::B, 2)), KacError);
    CHECK_THROWS_AS(diagram_for(TypeTag(Family::D, 3)), KacError);
}

TEST_CASE("coweights pair with simple roots as b f / (c |g|) delta") {
    for (const auto& tag : tags_up_to(12)) {
        const AffineDiagram d = diagram_for(tag);
        const CoweightTable t = coweight_table(tag);
        const int f = tag.twist_order();
        for (int g = 1; g <= d.n; ++g) {
            for (int r = 1; r <= d.n; ++r) {
                const auto gi = static_cast<std::size_t>(g);
                Rational expected =
                    g == r ? Rational(d.marks_b[gi] * f, d.marks_c[gi] * d.orbit_size[gi]) : Rational(0);
                expected.canonicalize();
                CHECK_MESSAGE(pairing(t.coweights[gi], t.simple_roots[static_cast<std::size_t>(r)]) == expected,
                              tag.to_string() << " g" << g << " r" << r);
            }
        }
    }
}

TEST_CASE("highest root is the c-mark combination of simple roots") {
    for (const auto& tag : tags_up_to(12)) {
        const AffineDiagram d = diagram_for(tag);
        const CoweightTable t = coweight_table(tag);
        RationalVector sum(static_cast<std::size_t>(t.dim), Rational(0));
        for (int g = 1; g <= d.n; ++g) {
            for (int i = 0; i < t.dim; ++i) {
                sum[static_cast<std::size_t>(i)] +=
                    Rational(d.marks_c[static_cast<std::size_t>(g)]) * t.simple_roots[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
            }
        }
        CHECK_MESSAGE(sum == t.highest_root, tag.to_string());
    }
}

TEST_CASE("kac points") {
    const auto a2 = kac_point({1, 1}, TypeTag(Family::A, 2));
    CHECK(a2.m == 2);
    CHECK(a2.point.barycentric == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    const auto c2 = kac_point({1, 0, 1}, TypeTag(Family::C, 2));
    CHECK(c2.m == 2);
    CHECK(c2.point.barycentric == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(1, 2)});

    const auto a4 = kac_point({0, 1, 0}, TypeTag(Family::TwoA, 4));
    CHECK(a4.m == 2);
    CHECK(a4.point.barycentric == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});

    CHECK_THROWS_AS(kac_point({0, 0, 0}, TypeTag(Family::C, 2)), KacError);

    for (const auto& tag : tags_up_to(8)) {
        const AffineDiagram d = diagram_for(tag);
        std::vector<std::int64_t> labels;
        for (int g = 0; g <= d.n; ++g) labels.push_back((g * 7 + 3) % 4);
        const auto r = kac_point(labels, tag);
        Rational total = 0;
        for (const auto& x : r.point.barycentric) {
            CHECK(x >= 0);
            total += x;
        }
        CHECK_MESSAGE(total == 1, tag.to_string());
    }
}

TEST_CASE("alcove vertices") {
    const TypeTag tag(Family::C, 2);
    const AffineDiagram d = diagram_for(tag);
    const CoweightTable t = coweight_table(tag);
    CHECK(alcove_vertex(d, t, 0) == RationalVector{0, 0});
    // Pairing of each vertex with the highest root is f/|g| = 1 for untwisted types.
    for (int g = 1; g <= d.n; ++g) CHECK(pairing(alcove_vertex(d, t, g), t.highest_root) == 1);
}
