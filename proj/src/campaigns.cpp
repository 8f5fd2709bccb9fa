#include "kacgen/campaigns.hpp"

#include "kacgen/charpoly.hpp"
#include "kacgen/lifts.hpp"
#include "kacgen/rootdata.hpp"
#include "kacgen/weyl_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace kacgen {

bool CampaignReport::ok() const { return failures() == 0; }

std::size_t CampaignReport::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs job(k) for k < n on a bounded pool; results keep index order.
// name_of labels cases whose job throws; without it they are numbered.
std::vector<CaseResult> run_pool(std::size_t n, const std::function<CaseResult(std::size_t)>& job,
                                 const std::function<std::string(std::size_t)>& name_of = nullptr) {
    std::vector<CaseResult> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++) {
            try {
                out[k] = job(k);
            } catch (const std::exception& e) {
                out[k].name = name_of ? name_of(k) : "case " + std::to_string(k);
                out[k].pass = false;
                out[k].detail = e.what();
            }
        }
    };
    const std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
    const std::size_t count = std::min<std::size_t>({hw, 8, n});
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

CampaignReport timed(const std::string& name, const std::function<std::vector<CaseResult>()>& body) {
    const auto start = Clock::now();
    CampaignReport r{name, body(), 0};
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<TypeTag> tags_up_to(const std::vector<Family>& families, int max_rank, bool need_diagram = false) {
    std::vector<TypeTag> out;
    for (Family f : families) {
        const int lo = need_diagram ? TypeTag::min_diagram_rank(f) : TypeTag::min_rank(f);
        for (int r = lo; r <= max_rank; ++r) out.emplace_back(f, r);
    }
    return out;
}

struct TagCase {
    TypeTag tag;
    Partition partition;
};

std::vector<TagCase> cases_up_to(const std::vector<TypeTag>& tags) {
    std::vector<TagCase> out;
    for (const auto& t : tags) {
        for (const auto& p : admissible_partitions(t)) out.push_back({t, p});
    }
    return out;
}

std::string case_name(const TypeTag& tag, const Partition& p) { return tag.to_string() + " (" + p.to_string() + ")"; }

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream s;
    for (std::size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
    return s.str();
}

std::vector<Partition> odd_part_partitions(int l) {
    std::vector<Partition> out;
    for (const auto& p : partitions_of(l)) {
        if (std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 1; })) out.push_back(p);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Goldens
// ---------------------------------------------------------------------------

const std::vector<Golden>& golden_diagrams() {
    static const std::vector<Golden> goldens = {
        {Family::A, 2, {2}, {1, 1}, {}},
        {Family::A, 3, {3}, {1, 1}, {1}},
        {Family::A, 4, {4}, {1, 1, 1}, {1}},
        {Family::A, 5, {5}, {1, 1, 1, 1}, {1}},
        {Family::B, 14, {5, 4, 4, 1}, {0, 4, 1, 0, 3, 2, 0, 2, 3, 0, 1, 4, 0, 0}, {0}},
        {Family::C, 13, {6, 5, 2}, {10, 1, 9, 0, 3, 7, 5, 5, 7, 3, 0, 9, 1, 10}, {}},
        {Family::C, 3, {2, 1}, {2, 1, 1, 2}, {}},
        {Family::C, 3, {3}, {1, 1, 1, 1}, {}},
        {Family::C, 2, {2}, {1, 1, 1}, {}},
        {Family::C, 2, {1, 1}, {1, 0, 1}, {}},
        {Family::D, 14, {5, 4, 4, 1}, {0, 4, 1, 0, 3, 2, 0, 2, 3, 0, 1, 4, 0}, {0, 0}},
        {Family::TwoA, 20, {7, 5, 5, 3}, {0, 15, 6, 0, 9, 5, 7, 0, 3, 15}, {0}},
        {Family::TwoA, 25, {9, 5, 5, 3, 3}, {5, 2, 0, 3, 0, 0, 5, 1, 0, 4, 5, 0, 0}, {}},
        {Family::TwoA, 4, {3, 1}, {1, 1, 1}, {}},
        {Family::TwoA, 4, {1, 1, 1, 1}, {0, 1, 0}, {}},
        {Family::TwoA, 3, {3}, {1, 1}, {}},
        {Family::TwoA, 3, {1, 1, 1}, {1, 0}, {}},
        {Family::TwoD, 11, {5, 4, 3}, {0, 12, 3, 5, 4, 6, 6, 4, 5, 3, 12, 0}, {}},
        {Family::TwoD, 2, {3}, {1, 1, 1}, {}},
        {Family::TwoD, 2, {1, 1, 1}, {0, 1, 0}, {}},
    };
    return goldens;
}

std::vector<std::int64_t> chain_labels(const KacDiagram& d) {
    std::vector<std::int64_t> out;
    for (int node : diagram_for(d.tag).layout.chain) out.push_back(d.labels[static_cast<std::size_t>(node)]);
    return out;
}

std::vector<std::int64_t> branch_labels(const KacDiagram& d) {
    std::vector<std::int64_t> out;
    for (const auto& b : diagram_for(d.tag).layout.branches) out.push_back(d.labels[static_cast<std::size_t>(b.node)]);
    return out;
}

std::vector<Family> all_families() {
    return {Family::A, Family::B, Family::C, Family::D, Family::TwoA, Family::TwoD};
}
std::vector<Family> nontrivial_families() { return {Family::B, Family::C, Family::D, Family::TwoA, Family::TwoD}; }
std::vector<Family> untwisted_families() { return {Family::A, Family::B, Family::C, Family::D}; }

int env_max_rank(int fallback) {
    const char* v = std::getenv("KACGEN_MAX_RANK");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    return (*end == '\0' && x > 0 && x < 1000) ? static_cast<int>(x) : fallback;
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

CampaignReport examples_campaign() {
    return timed("examples", [] {
        const auto& goldens = golden_diagrams();
        return run_pool(goldens.size(), [&](std::size_t k) {
            const Golden& g = goldens[k];
            const TypeTag tag(g.family, g.rank);
            const Partition p(g.partition);
            const KacDiagram d = kac_diagram(tag, p);
            CaseResult c{case_name(tag, p), true, ""};
            const auto chain = chain_labels(d);
            const auto branches = branch_labels(d);
            if (chain != g.chain || branches != g.branches) {
                c.pass = false;
                c.detail = "got " + join(chain) + " | " + join(branches) + ", expected " + join(g.chain) + " | " +
                           join(g.branches);
            }
            const VerifyReport v = verify_diagram(d);
            if (!v.ok()) {
                c.pass = false;
                c.detail += v.failures.front();
            }
            return c;
        });
    });
}

CampaignReport psi_injectivity_campaign(const std::vector<Family>& families, int max_rank) {
    return timed("psi-injectivity", [&] {
        const auto tags = tags_up_to(families, max_rank);
        return run_pool(tags.size(), [&](std::size_t k) {
            const TypeTag& tag = tags[k];
            const auto parts = admissible_partitions(tag);
            std::map<IntPoly, Partition> seen;
            for (const auto& p : parts) {
                const IntPoly q = formula_charpoly(tag, p).expanded;
                auto [it, inserted] = seen.emplace(q, p);
                if (!inserted) {
                    return CaseResult{tag.to_string(), false,
                                      "(" + p.to_string() + ") and (" + it->second.to_string() + ") share " + q.to_string()};
                }
            }
            return CaseResult{tag.to_string(), true, std::to_string(parts.size()) + " distinct polynomials"};
        });
    });
}

CampaignReport zeta_injectivity_campaign(const std::vector<Family>& families, int max_rank) {
    return timed("zeta-injectivity", [&] {
        const auto tags = tags_up_to(families, max_rank, true);
        return run_pool(tags.size(), [&](std::size_t k) {
            const TypeTag& tag = tags[k];
            const auto parts = admissible_partitions(tag);
            std::map<std::vector<std::int64_t>, Partition> seen;
            for (const auto& p : parts) {
                const KacDiagram d = kac_diagram(tag, p);
                auto [it, inserted] = seen.emplace(d.labels, p);
                if (!inserted) {
                    return CaseResult{tag.to_string(), false,
                                      "(" + p.to_string() + ") and (" + it->second.to_string() + ") share labels " + join(d.labels)};
                }
            }
            return CaseResult{tag.to_string(), true, std::to_string(parts.size()) + " distinct diagrams"};
        });
    });
}

CampaignReport oracle_campaign(const std::vector<Family>& families, int max_rank, int max_twoA_rank) {
    return timed("oracle", [&] {
        std::vector<TypeTag> tags;
        for (const auto& t : tags_up_to(families, max_rank)) {
            if (t.family() != Family::TwoA || t.rank() <= max_twoA_rank) tags.push_back(t);
        }
        const auto cases = cases_up_to(tags);
        return run_pool(cases.size(), [&](std::size_t k) {
            const auto& [tag, p] = cases[k];
            const CharPolyResult f = formula_charpoly(tag, p);
            const CharPolyResult o = matrix_oracle_charpoly(lift(tag, p));
            // Binomial factorizations are not unique; compare the canonical one read off the roots.
            const FactoredPoly canonical = reconstruct(roots_mod(f.factored, f.m));
            CaseResult c{case_name(tag, p), f.expanded == o.expanded && canonical == o.factored, ""};
            if (!c.pass) c.detail = "formula " + f.factored.to_string() + ", oracle " + o.factored.to_string();
            return c;
        });
    });
}

CampaignReport recovery_campaign(int max_l) {
    return timed("recovery", [&] {
        std::vector<std::pair<int, Partition>> cases;
        for (int l = TypeTag::min_rank(Family::TwoA); l <= max_l; ++l) {
            for (const auto& p : odd_part_partitions(l)) cases.emplace_back(l, p);
        }
        return run_pool(cases.size(), [&](std::size_t k) {
            const TypeTag tag(Family::TwoA, cases[k].first);
            const Partition& p = cases[k].second;
            const CharPolyResult q = formula_charpoly(tag, p);
            const Recovery r = recover_p(q);
            FactoredPoly expected;
            expected.times(1, -1, -1);
            for (int part : p.parts()) expected.times(part, -1);
            CaseResult c{case_name(tag, p), r.partition == p && r.p == expected, ""};
            if (!c.pass) c.detail = "recovered (" + r.partition.to_string() + ") with p = " + r.p.to_string();
            return c;
        });
    });
}

CampaignReport twoA_check_campaign(int max_l) {
    return timed("2A-torus-check", [&] {
        std::vector<Partition> cases;
        for (int l = TypeTag::min_rank(Family::TwoA); l <= max_l; ++l) {
            for (const auto& p : odd_part_partitions(l)) cases.push_back(p);
        }
        return run_pool(cases.size(), [&](std::size_t k) {
            const Partition& p = cases[k];
            const TwoAVariant v = p.total() % 2 == 0 ? TwoAVariant::EvenEll : TwoAVariant::OddEll;
            const TwoACheckDetail d = twoA_sigma_charpoly_detail(p, v);
            CaseResult c{case_name(TypeTag(Family::TwoA, p.total()), p), d.block_ok && d.dense_ok && d.permutation_ok,
                         d.message};
            return c;
        });
    });
}

CampaignReport weyl_campaign(const std::vector<Family>& families, int max_rank) {
    return timed("weyl-oracle", [&] {
        const auto tags = tags_up_to(families, std::min(max_rank, kWeylRankCap));
        return run_pool(tags.size(), [&](std::size_t k) {
            const TypeTag& tag = tags[k];
            CaseResult c{tag.to_string(), true, ""};
            auto fail = [&](const std::string& s) {
                c.pass = false;
                if (c.detail.empty()) c.detail = s;
            };
            const auto classes = twisted_conjugacy_classes(tag);
            const auto parts = admissible_partitions(tag);
            const auto elliptic = static_cast<std::size_t>(
                std::count_if(classes.begin(), classes.end(), [](const ConjClass& x) { return x.elliptic; }));
            if (elliptic != parts.size()) {
                fail(std::to_string(elliptic) + " elliptic classes but " + std::to_string(parts.size()) + " partitions");
            }
            std::set<std::size_t> hit;
            for (const auto& p : parts) {
                hit.insert(class_of_lift(tag, p).index);
                if (is_regular_elliptic_partition(tag, p) != is_regular_elliptic_bruteforce(tag, p)) {
                    fail("regular-elliptic closed form disagrees with brute force at (" + p.to_string() + ")");
                }
            }
            if (hit.size() != parts.size()) fail("lifts of distinct partitions share a class");
            std::size_t divergent = 0;
            for (const auto& w : enumerate_group(tag)) {
                divergent += is_elliptic(w, true).agree() ? 0 : 1;
            }
            if (divergent > 0) fail(std::to_string(divergent) + " elements where the two ellipticity predicates differ");
            if (c.pass) {
                c.detail = std::to_string(classes.size()) + " classes, " + std::to_string(elliptic) +
                           " elliptic, lifts biject, predicates agree on " + std::to_string(group_size(tag)) + " elements";
            }
            return c;
        });
    });
}

CampaignReport orders_campaign(const std::vector<Family>& families, int max_rank) {
    return timed("orders", [&] {
        const auto cases = cases_up_to(tags_up_to(families, max_rank));
        return run_pool(cases.size(), [&](std::size_t k) {
            const auto& [tag, p] = cases[k];
            std::int64_t expected = 0;
            switch (tag.family()) {
                case Family::A: expected = tag.rank() % 2 == 0 ? 2 * tag.rank() : tag.rank(); break;
                case Family::C: expected = 4 * p.lcm(); break;
                default: expected = 2 * p.lcm(); break;
            }
            const std::int64_t got = element_order(lift(tag, p));
            CaseResult c{case_name(tag, p), got == expected && canonical_m(tag, p) == expected, ""};
            if (!c.pass) c.detail = "order " + std::to_string(got) + ", expected " + std::to_string(expected);
            return c;
        });
    });
}

CampaignReport rationality_campaign(const std::vector<std::pair<Family, int>>& caps) {
    return timed("rationality", [&] {
        std::vector<TypeTag> tags;
        for (const auto& [f, r] : caps) {
            for (const auto& t : tags_up_to({f}, r)) tags.push_back(t);
        }
        return run_pool(tags.size(), [&](std::size_t k) {
            const RationalityResult r = check_rationality(tags[k]);
            return CaseResult{tags[k].to_string(), r.rational,
                              r.counterexample.value_or(std::to_string(r.elements) + " elements checked")};
        }, [&](std::size_t k) { return tags[k].to_string(); });
    });
}

CampaignReport structural_campaign(const std::vector<Family>& families, int max_rank) {
    return timed("structural", [&] {
        const auto cases = cases_up_to(tags_up_to(families, max_rank, true));
        return run_pool(cases.size(), [&](std::size_t k) {
            const auto& [tag, p] = cases[k];
            const AffineDiagram ad = diagram_for(tag);
            const CoweightTable table = coweight_table(tag);
            const SigmaList s = sigma_list(tag, p);
            const std::vector<std::int64_t> raw = unnormalized_labels(tag, s);
            CaseResult c{case_name(tag, p), true, ""};
            std::int64_t weighted = 0;
            for (std::size_t g = 0; g < raw.size(); ++g) weighted += raw[g] * ad.marks_b[g];
            if (tag.twist_order() * weighted != s.m) {
                c.pass = false;
                c.detail = "f sum s b = " + std::to_string(tag.twist_order() * weighted) + " != m = " + std::to_string(s.m);
            }
            RationalVector sum(static_cast<std::size_t>(table.dim), Rational(0));
            for (std::size_t g = 1; g < raw.size(); ++g) {
                for (std::size_t i = 0; i < sum.size(); ++i) {
                    sum[i] += Rational(mpz_class(static_cast<long>(raw[g] * ad.orbit_size[g]))) * table.coweights[g][i];
                }
            }
            if (sum != lambda_coordinates(tag, s)) {
                c.pass = false;
                c.detail += "lambda differs from sum s |g| mu_g";
            }
            const KacDiagram d = kac_labels(tag, s);
            if (d.raw_labels() != raw) {
                c.pass = false;
                c.detail += "normalization lost the raw labels";
            }
            return c;
        });
    });
}

}  // namespace kacgen
