// kacgen: elliptic classes, characteristic polynomials and Kac diagrams of classical groups.
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 unsupported type,
// 4 inadmissible partition.
#include "kacgen/campaigns.hpp"
#include "kacgen/charpoly.hpp"
#include "kacgen/kac.hpp"
#include "kacgen/lifts.hpp"
#include "kacgen/weyl_oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <optional>
#include <string>

using namespace kacgen;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kUnsupported = 3, kInadmissible = 4 };

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UnsupportedType:
        case ErrorKind::RankCapExceeded: return kUnsupported;
        case ErrorKind::InadmissiblePartition: return kInadmissible;
        case ErrorKind::ParseError:
        case ErrorKind::IndexOutOfRange: return kUsage;
        default: return kVerifyFailed;
    }
}

Partition read_partition(const std::string& text) {
    bool resorted = false;
    Partition p = Partition::parse(text, &resorted);
    if (resorted) std::cerr << "warning: partition re-sorted to " << p.to_string() << "\n";
    return p;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_classes(const std::string& type, int rank, const std::string& format) {
    const TypeTag tag = TypeTag::parse(type, rank);
    Json rows = Json::array();
    for (const auto& p : admissible_partitions(tag)) {
        const std::int64_t m = canonical_m(tag, p);
        const std::int64_t order = element_order(lift(tag, p));
        const bool regular = is_regular_elliptic_partition(tag, p);
        if (format == "json") {
            rows.push_back(Json{{"partition", p.to_string()}, {"m", m}, {"order", order}, {"regular_elliptic", regular}});
        } else {
            std::cout << "partition=" << p.to_string() << " m=" << m << " order=" << order
                      << " regular_elliptic=" << yes_no(regular) << "\n";
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return kOk;
}

int cmd_diagram(const std::string& type, int rank, const std::string& partition, const std::string& format) {
    const TypeTag tag = TypeTag::parse(type, rank);
    const Partition p = read_partition(partition);
    const KacDiagram d = kac_diagram(tag, p);
    std::cout << render(d, format == "json" ? Format::Json : Format::Ascii);
    if (format != "json") std::cout << "\n";
    return kOk;
}

int cmd_charpoly(const std::string& type, int rank, const std::string& partition, const std::string& format,
                 bool oracle) {
    const TypeTag tag = TypeTag::parse(type, rank);
    const Partition p = read_partition(partition);
    const CharPolyResult q = formula_charpoly(tag, p);
    std::optional<CharPolyResult> o;
    if (oracle) o = matrix_oracle_charpoly(lift(tag, p));
    const bool agree = !o || o->expanded == q.expanded;
    if (format == "json") {
        Json j{{"family", tag.name()},
               {"rank", tag.rank()},
               {"partition", p.to_string()},
               {"representation", representation_name(q.rep)},
               {"m", q.m},
               {"factored", q.factored.to_string()},
               {"expanded", q.expanded.to_string()}};
        if (o) {
            j["oracle_expanded"] = o->expanded.to_string();
            j["oracle_agrees"] = agree;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "representation: " << representation_name(q.rep) << "\n"
                  << "m: " << q.m << "\n"
                  << "factored: " << q.factored.to_string() << "\n"
                  << "expanded: " << q.expanded.to_string() << "\n";
        if (o) std::cout << "oracle: " << (agree ? "agrees" : "DIFFERS: " + o->expanded.to_string()) << "\n";
    }
    return agree ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& suite, const std::string& type, std::optional<int> max_rank_flag) {
    std::vector<Family> families;
    if (!type.empty()) families.push_back(TypeTag::parse_family(type));
    auto cap = [&](int fallback) { return max_rank_flag ? *max_rank_flag : env_max_rank(fallback); };
    auto or_default = [&](std::vector<Family> d) { return families.empty() ? d : families; };
    auto has = [&](Family f) { return families.empty() || families.front() == f; };

    std::vector<CampaignReport> reports;
    if (suite == "injectivity") {
        const int r = cap(12);
        reports.push_back(psi_injectivity_campaign(or_default(nontrivial_families()), r));
        reports.push_back(zeta_injectivity_campaign(or_default(nontrivial_families()), r));
        reports.push_back(structural_campaign(or_default(nontrivial_families()), r));
    } else if (suite == "oracle") {
        const int r = cap(8);
        reports.push_back(oracle_campaign(or_default(all_families()), r, std::min(r, 7)));
        reports.push_back(orders_campaign(or_default(all_families()), r));
        if (has(Family::TwoA)) {
            reports.push_back(recovery_campaign(max_rank_flag ? *max_rank_flag : env_max_rank(11)));
            reports.push_back(twoA_check_campaign(std::min(r, 7)));
        }
        reports.push_back(weyl_campaign(or_default(all_families()), std::min(r, 5)));
    } else if (suite == "examples") {
        CampaignReport all = examples_campaign();
        if (!families.empty()) {
            std::erase_if(all.cases, [&](const CaseResult& c) {
                return c.name.rfind(family_name(families.front()), 0) != 0 ||
                       std::isdigit(static_cast<unsigned char>(c.name[family_name(families.front()).size()])) == 0;
            });
        }
        reports.push_back(all);
    } else if (suite == "rationality") {
        std::vector<std::pair<Family, int>> caps;
        if (families.empty()) {
            caps = {{Family::A, cap(5)}, {Family::B, cap(4)}, {Family::C, cap(4)}, {Family::D, cap(4)}};
        } else {
            caps = {{families.front(), cap(families.front() == Family::A ? 5 : 4)}};
        }
        for (const auto& [f, r] : caps) {
            if (r > kWeylRankCap) {
                throw KacError(ErrorKind::RankCapExceeded, "rationality is capped at rank " +
                                                               std::to_string(kWeylRankCap) + ", got " +
                                                               family_name(f) + std::to_string(r));
            }
        }
        reports.push_back(rationality_campaign(caps));
    }

    Json summary{{"suite", suite}, {"campaigns", Json::array()}};
    bool ok = true;
    for (const auto& r : reports) {
        for (const auto& c : r.cases) {
            std::cerr << (c.pass ? "PASS " : "FAIL ") << r.name << " " << c.name;
            if (!c.detail.empty()) std::cerr << ": " << c.detail;
            std::cerr << "\n";
        }
        summary["campaigns"].push_back(
            Json{{"name", r.name}, {"cases", r.cases.size()}, {"failures", r.failures()}, {"ok", r.ok()}});
        ok = ok && r.ok();
    }
    summary["ok"] = ok;
    std::cout << summary.dump(2) << "\n";
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Elliptic classes, characteristic polynomials and Kac diagrams of classical groups"};
    app.require_subcommand(1);

    std::string type;
    int rank = 0;
    std::string partition;
    std::string format;
    bool oracle = false;
    std::string suite;
    std::optional<int> max_rank;

    auto* classes = app.add_subcommand("classes", "List admissible partitions with m, lift order and regularity");
    classes->add_option("--type", type, "Type: A, B, C, D, 2A, 2D")->required();
    classes->add_option("--rank", rank, "Rank l")->required()->check(CLI::PositiveNumber);
    classes->add_option("--format", format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));

    auto* diagram = app.add_subcommand("diagram", "Render the Kac diagram of a class");
    diagram->add_option("--type", type, "Type: A, B, C, D, 2A, 2D")->required();
    diagram->add_option("--rank", rank, "Rank l")->required()->check(CLI::PositiveNumber);
    diagram->add_option("--partition", partition, "Comma-separated parts, e.g. 5,4,4,1")->required();
    diagram->add_option("--format", format, "ascii or json")->default_val("ascii")->check(CLI::IsMember({"ascii", "json"}));

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of the lift");
    charpoly->add_option("--type", type, "Type: A, B, C, D, 2A, 2D")->required();
    charpoly->add_option("--rank", rank, "Rank l")->required()->check(CLI::PositiveNumber);
    charpoly->add_option("--partition", partition, "Comma-separated parts")->required();
    charpoly->add_option("--format", format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));
    charpoly->add_flag("--oracle", oracle, "Also compute it from the lift matrix and compare");

    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->add_option("--suite", suite, "injectivity, oracle, examples or rationality")
        ->required()
        ->check(CLI::IsMember({"injectivity", "oracle", "examples", "rationality"}));
    verify->add_option("--type", type, "Restrict to one type");
    verify->add_option("--max-rank", max_rank, "Rank cap (overrides KACGEN_MAX_RANK)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classes) return cmd_classes(type, rank, format);
        if (*diagram) return cmd_diagram(type, rank, partition, format);
        if (*charpoly) return cmd_charpoly(type, rank, partition, format, oracle);
        if (*verify) return cmd_verify(suite, type, max_rank);
    } catch (const KacError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    return kUsage;
}
