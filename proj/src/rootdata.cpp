#include "kacgen/rootdata.hpp"

namespace kacgen {

namespace {

Layout chain_layout(std::vector<int> chain, std::vector<std::string> bonds, std::vector<Branch> branches = {}) {
    return Layout{std::move(chain), std::move(bonds), std::move(branches)};
}

std::vector<int> range_nodes(int first, int last) {
    std::vector<int> out;
    for (int k = first; k <= last; ++k) out.push_back(k);
    return out;
}

std::vector<std::string> single_bonds(std::size_t chain_len) {
    return std::vector<std::string>(chain_len > 0 ? chain_len - 1 : 0, "-");
}

std::vector<Edge> edges_from_layout(const Layout& layout) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < layout.chain.size(); ++k) {
        const std::string& b = layout.bonds[k];
        Edge e{layout.chain[k], layout.chain[k + 1], 1, Arrow::None};
        if (b == "=>") {
            e.multiplicity = 2;
            e.arrow = Arrow::ToJ;
        } else if (b == "<=") {
            e.multiplicity = 2;
            e.arrow = Arrow::ToI;
        } else if (b == "<=>") {
            e.multiplicity = 2;
            e.arrow = Arrow::Both;
        } else if (b == "≡>") {
            e.multiplicity = 4;
            e.arrow = Arrow::ToJ;
        }
        edges.push_back(e);
    }
    for (const auto& br : layout.branches) {
        for (int a : br.attached_to) edges.push_back({br.node, a, 1, Arrow::None});
    }
    return edges;
}

RationalVector unit(int dim, int i, const Rational& scale = 1) {
    RationalVector v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i)] = scale;
    return v;
}

RationalVector prefix_vector(int dim, int k, const Rational& scale) {
    RationalVector v(static_cast<std::size_t>(dim), Rational(0));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = scale;
    return v;
}

RationalVector diff_root(int dim, int k, const Rational& scale) {
    RationalVector v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(k)] = scale;
    v[static_cast<std::size_t>(k + 1)] = -scale;
    return v;
}

}  // namespace

AffineDiagram diagram_for(const TypeTag& tag) {
    if (!tag.supports_diagram()) {
        throw KacError(ErrorKind::UnsupportedType,
                       "affine diagram for " + tag.name() + " needs rank >= " +
                           std::to_string(TypeTag::min_diagram_rank(tag.family())));
    }
    const int l = tag.rank();
    AffineDiagram d{tag, 0, {}, {}, {}, {}, {}};
    switch (tag.family()) {
        case Family::A: {
            d.n = l - 1;
            d.marks_b.assign(static_cast<std::size_t>(l), 1);
            d.marks_c = d.marks_b;
            d.orbit_size.assign(static_cast<std::size_t>(l), 1);
            if (l == 2) {
                d.layout = chain_layout({0, 1}, {"<=>"});
            } else {
                auto chain = range_nodes(1, l - 1);
                d.layout = chain_layout(chain, single_bonds(chain.size()), {{0, {1, l - 1}}});
            }
            break;
        }
        case Family::B: {
            d.n = l;
            d.marks_b.assign(static_cast<std::size_t>(l + 1), 2);
            d.marks_b[0] = d.marks_b[1] = 1;
            d.marks_c = d.marks_b;
            d.orbit_size.assign(static_cast<std::size_t>(l + 1), 1);
            auto chain = range_nodes(1, l);
            auto bonds = single_bonds(chain.size());
            bonds.back() = "=>";
            d.layout = chain_layout(chain, bonds, {{0, {2}}});
            break;
        }
        case Family::C: {
            d.n = l;
            d.marks_b.assign(static_cast<std::size_t>(l + 1), 2);
            d.marks_b[0] = d.marks_b[static_cast<std::size_t>(l)] = 1;
            d.marks_c = d.marks_b;
            d.orbit_size.assign(static_cast<std::size_t>(l + 1), 1);
            auto chain = range_nodes(0, l);
            auto bonds = single_bonds(chain.size());
            bonds.front() = "=>";
            bonds.back() = "<=";
            d.layout = chain_layout(chain, bonds);
            break;
        }
        case Family::D: {
            d.n = l;
            d.marks_b.assign(static_cast<std::size_t>(l + 1), 2);
            d.marks_b[0] = d.marks_b[1] = 1;
            d.marks_b[static_cast<std::size_t>(l - 1)] = d.marks_b[static_cast<std::size_t>(l)] = 1;
            d.marks_c = d.marks_b;
            d.orbit_size.assign(static_cast<std::size_t>(l + 1), 1);
            auto chain = range_nodes(1, l - 1);
            d.layout = chain_layout(chain, single_bonds(chain.size()), {{0, {2}}, {l, {l - 2}}});
            break;
        }
        case Family::TwoA: {
            const int n = l / 2;
            d.n = n;
            const auto sz = static_cast<std::size_t>(n + 1);
            if (l % 2 == 0) {
                d.marks_b.assign(sz, 2);
                d.marks_b[0] = d.marks_b[1] = 1;
                d.marks_b[static_cast<std::size_t>(n)] = 1;
                d.marks_c.assign(sz, 2);
                d.marks_c[0] = d.marks_c[1] = 1;
                d.orbit_size.assign(sz, 2);
                d.orbit_size[0] = 1;
                d.orbit_size[static_cast<std::size_t>(n)] = 1;
                if (n == 2) {
                    d.layout = chain_layout({0, 2, 1}, {"<=", "=>"});
                } else {
                    auto chain = range_nodes(1, n);
                    auto bonds = single_bonds(chain.size());
                    bonds.back() = "<=";
                    d.layout = chain_layout(chain, bonds, {{0, {2}}});
                }
            } else {
                d.marks_b.assign(sz, 2);
                d.marks_b[0] = 1;
                d.marks_c.assign(sz, 2);
                d.marks_c[0] = 1;
                d.marks_c[static_cast<std::size_t>(n)] = 1;
                d.orbit_size.assign(sz, 2);
                d.orbit_size[0] = 1;
                if (n == 1) {
                    d.layout = chain_layout({0, 1}, {"≡>"});
                } else {
                    auto chain = range_nodes(0, n);
                    auto bonds = single_bonds(chain.size());
                    bonds.front() = "=>";
                    bonds.back() = "=>";
                    d.layout = chain_layout(chain, bonds);
                }
            }
            break;
        }
        case Family::TwoD: {
            d.n = l;
            const auto sz = static_cast<std::size_t>(l + 1);
            d.marks_b.assign(sz, 1);
            d.marks_c.assign(sz, 2);
            d.marks_c[0] = 1;
            d.marks_c[static_cast<std::size_t>(l)] = 1;
            d.orbit_size.assign(sz, 1);
            d.orbit_size[static_cast<std::size_t>(l)] = 2;
            auto chain = range_nodes(0, l);
            auto bonds = single_bonds(chain.size());
            bonds.front() = "<=";
            bonds.back() = "=>";
            d.layout = chain_layout(chain, bonds);
            break;
        }
    }
    d.edges = edges_from_layout(d.layout);
    return d;
}

CoweightTable coweight_table(const TypeTag& tag) {
    const int l = tag.rank();
    CoweightTable t{};
    const Rational half(1, 2);
    switch (tag.family()) {
        case Family::A: {
            t.dim = l;
            t.simple_roots.resize(static_cast<std::size_t>(l));
            t.coweights.resize(static_cast<std::size_t>(l));
            for (int k = 1; k <= l - 1; ++k) {
                t.simple_roots[static_cast<std::size_t>(k)] = diff_root(l, k - 1, 1);
                RationalVector mu = prefix_vector(l, k, 1);
                for (auto& x : mu) x -= Rational(k, l);
                t.coweights[static_cast<std::size_t>(k)] = mu;
            }
            t.highest_root = unit(l, 0);
            t.highest_root[static_cast<std::size_t>(l - 1)] = -1;
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::TwoD: {
            const Family fam = tag.family();
            t.dim = l;
            t.simple_roots.resize(static_cast<std::size_t>(l + 1));
            t.coweights.resize(static_cast<std::size_t>(l + 1));
            for (int k = 1; k <= l - 1; ++k) {
                t.simple_roots[static_cast<std::size_t>(k)] = diff_root(l, k - 1, 1);
                t.coweights[static_cast<std::size_t>(k)] = prefix_vector(l, k, 1);
            }
            auto& last_root = t.simple_roots[static_cast<std::size_t>(l)];
            auto& last_cow = t.coweights[static_cast<std::size_t>(l)];
            if (fam == Family::B) {
                last_root = unit(l, l - 1);
                last_cow = prefix_vector(l, l, 1);
                t.highest_root = prefix_vector(l, 2, 1);
            } else if (fam == Family::C || fam == Family::TwoD) {
                last_root = unit(l, l - 1, 2);
                last_cow = prefix_vector(l, l, half);
                t.highest_root = unit(l, 0, 2);
            } else {
                last_root = unit(l, l - 2);
                last_root[static_cast<std::size_t>(l - 1)] = 1;
                last_cow = prefix_vector(l, l, half);
                RationalVector penult = prefix_vector(l, l, half);
                penult[static_cast<std::size_t>(l - 1)] = -half;
                t.coweights[static_cast<std::size_t>(l - 1)] = penult;
                t.highest_root = prefix_vector(l, 2, 1);
            }
            break;
        }
        case Family::TwoA: {
            const int n = l / 2;
            t.dim = n;
            t.simple_roots.resize(static_cast<std::size_t>(n + 1));
            t.coweights.resize(static_cast<std::size_t>(n + 1));
            for (int k = 1; k <= n; ++k) {
                t.coweights[static_cast<std::size_t>(k)] = prefix_vector(n, k, half);
                if (k < n) t.simple_roots[static_cast<std::size_t>(k)] = diff_root(n, k - 1, 2);
            }
            if (l % 2 == 0) {
                t.simple_roots[static_cast<std::size_t>(n)] = unit(n, n - 1, 2);
                t.highest_root = prefix_vector(n, std::min(n, 2), 2);
            } else {
                t.simple_roots[static_cast<std::size_t>(n)] = unit(n, n - 1, 4);
                t.highest_root = unit(n, 0, 4);
            }
            break;
        }
    }
    return t;
}

Rational pairing(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw KacError(ErrorKind::Internal, "pairing dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

KacPointResult kac_point(const std::vector<std::int64_t>& labels, const TypeTag& tag) {
    const AffineDiagram d = diagram_for(tag);
    if (static_cast<int>(labels.size()) != d.node_count()) {
        throw KacError(ErrorKind::IndexOutOfRange, "expected " + std::to_string(d.node_count()) + " labels");
    }
    std::int64_t sum = 0;
    for (std::size_t g = 0; g < labels.size(); ++g) {
        if (labels[g] < 0) throw KacError(ErrorKind::NegativeLabel, "label at node " + std::to_string(g));
        sum = checked_add(sum, checked_mul(labels[g], d.marks_b[g]));
    }
    if (sum == 0) throw KacError(ErrorKind::AllZeroLabels, "all labels are zero");
    const std::int64_t f = tag.twist_order();
    const std::int64_t m = checked_mul(f, sum);
    KacPoint p;
    for (std::size_t g = 0; g < labels.size(); ++g) {
        p.barycentric.emplace_back(Rational(mpz_class(f * labels[g] * d.marks_b[g]), mpz_class(m)));
        p.barycentric.back().canonicalize();
    }
    return {p, m};
}

RationalVector alcove_vertex(const AffineDiagram& diagram, const CoweightTable& table, int node) {
    if (node == 0) return RationalVector(static_cast<std::size_t>(table.dim), Rational(0));
    const auto g = static_cast<std::size_t>(node);
    Rational scale(diagram.orbit_size[g], diagram.marks_b[g] * diagram.tag.twist_order());
    scale.canonicalize();
    RationalVector v = table.coweights[g];
    for (auto& x : v) x *= scale;
    return v;
}

RationalVector point_coordinates(const KacPoint& point, const AffineDiagram& diagram,
                                 const CoweightTable& table) {
    RationalVector acc(static_cast<std::size_t>(table.dim), Rational(0));
    for (int g = 0; g < diagram.node_count(); ++g) {
        RationalVector v = alcove_vertex(diagram, table, g);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += point.barycentric[static_cast<std::size_t>(g)] * v[i];
    }
    return acc;
}

}  // namespace kacgen
