#include "kacgen/kac.hpp"

#include "kacgen/charpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace kacgen {

using ordered_json = nlohmann::ordered_json;

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw KacError(ErrorKind::NonIntegerEntry, std::string(what) + ": " + std::to_string(num) + "/" +
                                                       std::to_string(den) + " is not an integer");
    }
    return num / den;
}

void append_copies(std::vector<std::int64_t>& v, std::int64_t count, std::int64_t value) {
    for (std::int64_t i = 0; i < count; ++i) v.push_back(value);
}

std::int64_t gcd_of(const std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (auto x : v) g = gcd64(g, x);
    return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// KacDiagram
// ---------------------------------------------------------------------------

std::vector<std::int64_t> KacDiagram::raw_labels() const {
    std::vector<std::int64_t> out;
    for (auto s : labels) out.push_back(checked_mul(s, label_gcd));
    return out;
}

bool KacDiagram::operator==(const KacDiagram& o) const {
    return tag == o.tag && partition == o.partition && m == o.m && labels == o.labels &&
           label_gcd == o.label_gcd && normalized == o.normalized;
}

// ---------------------------------------------------------------------------
// Sigma lists and labels
// ---------------------------------------------------------------------------

SigmaList sigma_list(const TypeTag& tag, const Partition& p) {
    tag.require_admissible(p);
    const std::int64_t m = canonical_m(tag, p);
    const std::int64_t mu = p.mu();
    std::vector<std::int64_t> v;
    switch (tag.family()) {
        case Family::A: {
            const std::int64_t l = tag.rank();
            if (l % 2 == 0) {
                for (std::int64_t x = l - 1; x >= -(l - 1); x -= 2) v.push_back(x);
            } else {
                for (std::int64_t x = (l - 1) / 2; x >= -(l - 1) / 2; --x) v.push_back(x);
            }
            break;
        }
        case Family::B:
        case Family::D:
        case Family::TwoD: {
            for (int part : p.parts()) {
                for (std::int64_t a = 1; a <= part - 1; ++a) v.push_back(exact_div(m * a, 2 * part, "sigma entry"));
            }
            const std::int64_t half = exact_div(m, 2, "m/2");
            if (tag.family() == Family::B) {
                append_copies(v, (mu + 1) / 2, half);
                append_copies(v, mu / 2, 0);
            } else if (tag.family() == Family::D) {
                append_copies(v, mu / 2, half);
                append_copies(v, mu / 2, 0);
            } else {
                append_copies(v, (mu - 1) / 2, half);
                append_copies(v, (mu - 1) / 2, 0);
            }
            break;
        }
        case Family::C:
            for (int part : p.parts()) {
                for (std::int64_t a = 1; a <= part; ++a) v.push_back(exact_div((2 * a - 1) * m, 4 * part, "sigma entry"));
            }
            break;
        case Family::TwoA:
            if (tag.rank() % 2 == 0) {
                // Entries count powers of a fixed square root of xi.
                for (int part : p.parts()) {
                    for (std::int64_t a = 1; 2 * a < part; ++a) v.push_back(exact_div((2 * a - 1) * m, 2 * part, "sigma entry"));
                }
                append_copies(v, mu / 2, exact_div(m, 2, "m/2"));
            } else {
                for (int part : p.parts()) {
                    for (std::int64_t a = 1; 2 * a < part; ++a) v.push_back(exact_div(m * a, 2 * part, "sigma entry"));
                }
                append_copies(v, (mu - 1) / 2, 0);
            }
            break;
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return SigmaList{tag, p, m, std::move(v)};
}

std::vector<std::int64_t> unnormalized_labels(const TypeTag& tag, const SigmaList& s) {
    const AffineDiagram d = diagram_for(tag);
    const auto& sg = s.values;
    const std::int64_t m = s.m;
    auto sig = [&](int i) { return sg.at(static_cast<std::size_t>(i - 1)); };
    const int len = static_cast<int>(sg.size());
    std::vector<std::int64_t> lab(static_cast<std::size_t>(d.node_count()), 0);
    auto set = [&](int node, std::int64_t value) { lab.at(static_cast<std::size_t>(node)) = value; };
    switch (tag.family()) {
        case Family::A:
            for (int k = 1; k < len; ++k) set(k, sig(k) - sig(k + 1));
            set(0, m - (sig(1) - sig(len)));
            break;
        case Family::B:
            for (int k = 1; k < len; ++k) set(k, sig(k) - sig(k + 1));
            set(len, sig(len));
            set(0, m - (sig(1) + sig(2)));
            break;
        case Family::C:
            for (int k = 1; k < len; ++k) set(k, sig(k) - sig(k + 1));
            set(len, 2 * sig(len));
            set(0, m - 2 * sig(1));
            break;
        case Family::D:
            for (int k = 1; k < len; ++k) set(k, sig(k) - sig(k + 1));
            set(len, sig(len - 1) + sig(len));
            set(0, m - (sig(1) + sig(2)));
            break;
        case Family::TwoA:
            if (tag.rank() % 2 == 0) {
                for (int k = 1; k < len; ++k) set(k, exact_div(sig(k) - sig(k + 1), 2, "halved label"));
                set(len, sig(len));
                set(0, exact_div(m - (sig(1) + sig(2)), 2, "halved label"));
            } else {
                for (int k = 1; k < len; ++k) set(k, sig(k) - sig(k + 1));
                set(len, sig(len));
                set(0, m / 2 - 2 * sig(1));
            }
            break;
        case Family::TwoD:
            for (int k = 1; k < len; ++k) set(k, sig(k) - sig(k + 1));
            set(len, sig(len));
            set(0, m / 2 - sig(1));
            break;
    }
    for (std::size_t g = 0; g < lab.size(); ++g) {
        if (lab[g] < 0) {
            throw KacError(ErrorKind::NegativeLabel, "label of node " + std::to_string(g) + " is " + std::to_string(lab[g]));
        }
    }
    return lab;
}

KacDiagram kac_labels(const TypeTag& tag, const SigmaList& s) {
    std::vector<std::int64_t> raw = unnormalized_labels(tag, s);
    const std::int64_t g = gcd_of(raw);
    if (g == 0) throw KacError(ErrorKind::Internal, "all labels vanish");
    for (auto& x : raw) x /= g;
    return KacDiagram{tag, s.partition, s.m, std::move(raw), g, true};
}

KacDiagram kac_diagram(const TypeTag& tag, const Partition& p) { return kac_labels(tag, sigma_list(tag, p)); }

TorusExponents torus_exponents(const TypeTag& tag, const SigmaList& s) {
    std::vector<std::int64_t> e = s.values;
    auto mirror = [&](int central_zeros) {
        append_copies(e, central_zeros, 0);
        for (auto it = s.values.rbegin(); it != s.values.rend(); ++it) e.push_back(-*it);
    };
    std::int64_t modulus = s.m;
    switch (tag.family()) {
        case Family::A: break;
        case Family::B: mirror(1); break;
        case Family::C:
        case Family::D: mirror(0); break;
        case Family::TwoA:
            if (tag.rank() % 2 == 0) {
                mirror(0);
                modulus = 2 * s.m;
            } else {
                mirror(1);
            }
            break;
        case Family::TwoD: mirror(2); break;
    }
    return TorusExponents{std::move(e), modulus};
}

RationalVector lambda_coordinates(const TypeTag& tag, const SigmaList& s) {
    RationalVector v;
    const bool halve = tag.family() == Family::TwoA && tag.rank() % 2 == 0;
    for (auto x : s.values) v.emplace_back(halve ? Rational(mpz_class(x), mpz_class(2)) : Rational(mpz_class(x)));
    for (auto& x : v) x.canonicalize();
    return v;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string node_key(int g) { return "g" + std::to_string(g); }

std::string ascii_of(const KacDiagram& d) {
    const AffineDiagram ad = diagram_for(d.tag);
    std::ostringstream out;
    out << "# " << d.tag.name() << " rank=" << d.tag.rank()
        << " partition=" << (d.partition ? d.partition->to_string() : std::string("-")) << " m=" << d.m << "\n";
    const auto& lay = ad.layout;
    for (std::size_t k = 0; k < lay.chain.size(); ++k) {
        if (k) out << " " << lay.bonds[k - 1] << " ";
        out << d.labels[static_cast<std::size_t>(lay.chain[k])];
    }
    out << "\n";
    for (const auto& br : lay.branches) {
        out << "branch: " << node_key(br.node) << "=" << d.labels[static_cast<std::size_t>(br.node)] << " --";
        for (std::size_t i = 0; i < br.attached_to.size(); ++i) out << (i ? "," : " ") << node_key(br.attached_to[i]);
        out << "\n";
    }
    return out.str();
}

std::vector<std::int64_t> sigma_for_output(const KacDiagram& d) {
    if (!d.partition) return {};
    return sigma_list(d.tag, *d.partition).values;
}

std::string json_of(const KacDiagram& d) {
    const AffineDiagram ad = diagram_for(d.tag);
    ordered_json j;
    j["family"] = d.tag.name();
    j["rank"] = d.tag.rank();
    j["twist"] = d.tag.twist_order();
    j["partition"] = d.partition ? ordered_json(d.partition->parts()) : ordered_json(nullptr);
    j["m"] = d.m;
    j["sigma"] = sigma_for_output(d);
    ordered_json labels = ordered_json::object();
    for (std::size_t g = 0; g < d.labels.size(); ++g) labels[node_key(static_cast<int>(g))] = d.labels[g];
    j["labels"] = labels;
    j["b_marks"] = ad.marks_b;
    j["c_marks"] = ad.marks_c;
    j["orbit_sizes"] = ad.orbit_size;
    j["label_gcd"] = d.label_gcd;
    return j.dump(2) + "\n";
}

[[noreturn]] void parse_fail(const std::string& why) { throw KacError(ErrorKind::ParseError, why); }

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) parse_fail("bad " + what + " '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail("bad " + what + " '" + s + "'");
    }
}

int parse_node_key(const std::string& s) {
    if (s.size() < 2 || s[0] != 'g') parse_fail("bad node key '" + s + "'");
    return static_cast<int>(parse_int(s.substr(1), "node key"));
}

// Fills label_gcd and normalized from m and the labels.
KacDiagram finish(TypeTag tag, std::optional<Partition> partition, std::int64_t m, std::vector<std::int64_t> labels) {
    const AffineDiagram ad = diagram_for(tag);
    if (static_cast<int>(labels.size()) != ad.node_count()) parse_fail("wrong number of labels");
    std::int64_t weighted = 0;
    for (std::size_t g = 0; g < labels.size(); ++g) {
        if (labels[g] < 0) parse_fail("negative label at node " + std::to_string(g));
        weighted = checked_add(weighted, checked_mul(labels[g], ad.marks_b[g]));
    }
    weighted = checked_mul(weighted, tag.twist_order());
    if (weighted == 0) parse_fail("all labels are zero");
    if (m <= 0 || m % weighted != 0) parse_fail("m = " + std::to_string(m) + " is not a multiple of f * sum s b");
    const bool normalized = gcd_of(labels) == 1;
    return KacDiagram{tag, std::move(partition), m, std::move(labels), m / weighted, normalized};
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

KacDiagram parse_ascii(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (split_ws(line).empty()) continue;
        lines.push_back(line);
    }
    if (lines.size() < 2) parse_fail("expected a header line and a chain line");
    const auto head = split_ws(lines[0]);
    if (head.size() != 5 || head[0] != "#") parse_fail("malformed header '" + lines[0] + "'");
    auto field = [&](const std::string& tok, const std::string& key) {
        if (tok.rfind(key + "=", 0) != 0) parse_fail("expected " + key + "= in header");
        return tok.substr(key.size() + 1);
    };
    const TypeTag tag = TypeTag::parse(head[1], static_cast<int>(parse_int(field(head[2], "rank"), "rank")));
    const std::string ptext = field(head[3], "partition");
    std::optional<Partition> partition;
    if (ptext != "-") partition = Partition::parse(ptext);
    const std::int64_t m = parse_int(field(head[4], "m"), "m");

    const AffineDiagram ad = diagram_for(tag);
    std::vector<std::int64_t> labels(static_cast<std::size_t>(ad.node_count()), -1);
    const auto chain = split_ws(lines[1]);
    const auto& lay = ad.layout;
    if (chain.size() != 2 * lay.chain.size() - 1) parse_fail("chain line has the wrong number of tokens");
    for (std::size_t k = 0; k < lay.chain.size(); ++k) {
        labels[static_cast<std::size_t>(lay.chain[k])] = parse_int(chain[2 * k], "label");
        if (k + 1 < lay.chain.size() && chain[2 * k + 1] != lay.bonds[k]) {
            parse_fail("expected bond '" + lay.bonds[k] + "', got '" + chain[2 * k + 1] + "'");
        }
    }
    if (lines.size() - 2 != lay.branches.size()) parse_fail("wrong number of branch lines");
    for (std::size_t b = 0; b < lay.branches.size(); ++b) {
        const auto toks = split_ws(lines[2 + b]);
        if (toks.size() != 4 || toks[0] != "branch:" || toks[2] != "--") parse_fail("malformed branch line");
        const auto eq = toks[1].find('=');
        if (eq == std::string::npos) parse_fail("malformed branch label");
        const int node = parse_node_key(toks[1].substr(0, eq));
        if (node != lay.branches[b].node) parse_fail("unexpected branch node " + toks[1]);
        std::vector<int> attached;
        std::istringstream att(toks[3]);
        std::string item;
        while (std::getline(att, item, ',')) attached.push_back(parse_node_key(item));
        if (attached != lay.branches[b].attached_to) parse_fail("branch attachment mismatch");
        labels[static_cast<std::size_t>(node)] = parse_int(toks[1].substr(eq + 1), "label");
    }
    return finish(tag, std::move(partition), m, std::move(labels));
}

KacDiagram parse_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
        const TypeTag tag = TypeTag::parse(j.at("family").get<std::string>(), j.at("rank").get<int>());
        if (j.contains("twist") && j.at("twist").get<int>() != tag.twist_order()) parse_fail("twist mismatch");
        std::optional<Partition> partition;
        if (!j.at("partition").is_null()) partition = Partition(j.at("partition").get<std::vector<int>>());
        const auto m = j.at("m").get<std::int64_t>();
        const AffineDiagram ad = diagram_for(tag);
        const auto& lab = j.at("labels");
        if (!lab.is_object() || static_cast<int>(lab.size()) != ad.node_count()) parse_fail("labels must have one key per node");
        std::vector<std::int64_t> labels;
        for (int g = 0; g < ad.node_count(); ++g) labels.push_back(lab.at(node_key(g)).get<std::int64_t>());
        if (j.contains("b_marks") && j.at("b_marks").get<std::vector<int>>() != ad.marks_b) parse_fail("b_marks mismatch");
        if (j.contains("c_marks") && j.at("c_marks").get<std::vector<int>>() != ad.marks_c) parse_fail("c_marks mismatch");
        if (j.contains("orbit_sizes") && j.at("orbit_sizes").get<std::vector<int>>() != ad.orbit_size) {
            parse_fail("orbit_sizes mismatch");
        }
        KacDiagram d = finish(tag, std::move(partition), m, std::move(labels));
        if (j.contains("label_gcd") && j.at("label_gcd").get<std::int64_t>() != d.label_gcd) parse_fail("label_gcd mismatch");
        if (d.partition && j.contains("sigma") &&
            j.at("sigma").get<std::vector<std::int64_t>>() != sigma_list(d.tag, *d.partition).values) {
            parse_fail("sigma mismatch");
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        parse_fail(std::string("invalid diagram JSON: ") + e.what());
    }
}

}  // namespace

std::string render(const KacDiagram& d, Format format) {
    return format == Format::Ascii ? ascii_of(d) : json_of(d);
}

KacDiagram parse(const std::string& text, Format format) {
    return format == Format::Ascii ? parse_ascii(text) : parse_json(text);
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

VerifyReport verify_diagram(const KacDiagram& d) {
    VerifyReport r;
    auto fail = [&](const std::string& s) { r.failures.push_back(s); };
    if (!d.tag.supports_diagram()) {
        fail("no affine diagram for " + d.tag.to_string());
        return r;
    }
    const AffineDiagram ad = diagram_for(d.tag);
    if (static_cast<int>(d.labels.size()) != ad.node_count()) {
        fail("label count " + std::to_string(d.labels.size()) + " != node count " + std::to_string(ad.node_count()));
        return r;
    }
    for (std::size_t g = 0; g < d.labels.size(); ++g) {
        if (d.labels[g] < 0) fail("negative label at node " + std::to_string(g));
    }
    if (!r.ok()) return r;
    if (d.normalized && gcd_of(d.labels) != 1) fail("labels are not normalized (gcd " + std::to_string(gcd_of(d.labels)) + ")");

    const std::vector<std::int64_t> raw = d.raw_labels();
    std::optional<KacPointResult> kpr;
    try {
        kpr = kac_point(raw, d.tag);
    } catch (const KacError& e) {
        fail(e.what());
        return r;
    }
    const KacPointResult& kp = *kpr;
    if (kp.m != d.m) fail("m mismatch: f * sum s b = " + std::to_string(kp.m) + " but m = " + std::to_string(d.m));
    Rational total = 0;
    for (const auto& x : kp.point.barycentric) {
        if (x < 0) fail("negative barycentric coordinate");
        total += x;
    }
    if (total != 1) fail("barycentric coordinates sum to " + total.get_str());

    if (d.partition) {
        try {
            const SigmaList s = sigma_list(d.tag, *d.partition);
            if (s.m != d.m) fail("m differs from the canonical order " + std::to_string(s.m));
            const KacDiagram expected = kac_labels(d.tag, s);
            if (expected.labels != d.labels) fail("labels differ from the sigma-list recipe");
            const CoweightTable table = coweight_table(d.tag);
            const RationalVector lambda = lambda_coordinates(d.tag, s);
            RationalVector sum(static_cast<std::size_t>(table.dim), Rational(0));
            for (int g = 1; g < ad.node_count(); ++g) {
                const auto gi = static_cast<std::size_t>(g);
                for (std::size_t i = 0; i < sum.size(); ++i) {
                    sum[i] += Rational(mpz_class(raw[gi] * ad.orbit_size[gi])) * table.coweights[gi][i];
                }
            }
            if (sum != lambda) fail("lambda != sum s |g| mu_g");
            const RationalVector point = point_coordinates(kp.point, ad, table);
            RationalVector scaled = lambda;
            for (auto& x : scaled) x /= Rational(mpz_class(d.m));
            if (point != scaled) fail("sum x_g v_g != lambda / m");
        } catch (const KacError& e) {
            fail(e.what());
        }
    }
    return r;
}

}  // namespace kacgen
