// Python bindings. Tags are (family, rank) pairs with family in A, B, C, D, 2A, 2D;
// partitions are lists of positive integers in any order.
#include "kacgen/campaigns.hpp"
#include "kacgen/charpoly.hpp"
#include "kacgen/kac.hpp"
#include "kacgen/lifts.hpp"
#include "kacgen/weyl_oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kacgen;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition::from_unsorted(parts); }

py::int_ to_py(const mpz_class& z) { return py::int_(py::str(z.get_str())); }

py::list coeff_list(const IntPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py(c));
    return out;
}

IntPoly from_coeffs(const std::vector<py::int_>& coeffs) {
    std::vector<mpz_class> z;
    for (const auto& c : coeffs) z.emplace_back(py::str(c).cast<std::string>());
    return IntPoly(z);
}

py::dict charpoly_dict(const CharPolyResult& q) {
    py::dict d;
    d["representation"] = representation_name(q.rep);
    d["m"] = q.m;
    d["factored"] = q.factored.to_string();
    d["expanded"] = q.expanded.to_string();
    d["coefficients"] = coeff_list(q.expanded);
    return d;
}

py::dict diagram_dict(const KacDiagram& d) {
    py::dict out;
    out["family"] = d.tag.name();
    out["rank"] = d.tag.rank();
    out["partition"] = d.partition ? py::cast(d.partition->parts()) : py::none();
    out["m"] = d.m;
    out["labels"] = d.labels;
    out["label_gcd"] = d.label_gcd;
    return out;
}

py::dict report_dict(const CampaignReport& r) {
    py::list failures;
    for (const auto& c : r.cases) {
        if (!c.pass) failures.append(py::make_tuple(c.name, c.detail));
    }
    py::dict d;
    d["name"] = r.name;
    d["cases"] = r.cases.size();
    d["ok"] = r.ok();
    d["failures"] = failures;
    return d;
}

}  // namespace

PYBIND11_MODULE(pykacgen, m) {
    m.doc() = "Elliptic classes, characteristic polynomials and Kac diagrams of classical groups";

    static py::exception<KacError> error(m, "KacError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const KacError& e) {
            py::set_error(error, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def("admissible_partitions", [](const std::string& family, int rank) {
        std::vector<std::vector<int>> out;
        for (const auto& p : admissible_partitions(TypeTag::parse(family, rank))) out.push_back(p.parts());
        return out;
    }, py::arg("family"), py::arg("rank"));

    m.def("canonical_m", [](const std::string& family, int rank, const std::vector<int>& partition) {
        return canonical_m(TypeTag::parse(family, rank), to_partition(partition));
    }, py::arg("family"), py::arg("rank"), py::arg("partition"));

    m.def("element_order", [](const std::string& family, int rank, const std::vector<int>& partition) {
        return element_order(lift(TypeTag::parse(family, rank), to_partition(partition)));
    }, py::arg("family"), py::arg("rank"), py::arg("partition"));

    m.def("charpoly", [](const std::string& family, int rank, const std::vector<int>& partition) {
        return charpoly_dict(formula_charpoly(TypeTag::parse(family, rank), to_partition(partition)));
    }, py::arg("family"), py::arg("rank"), py::arg("partition"), "Closed-form characteristic polynomial");

    m.def("oracle_charpoly", [](const std::string& family, int rank, const std::vector<int>& partition) {
        return charpoly_dict(matrix_oracle_charpoly(lift(TypeTag::parse(family, rank), to_partition(partition))));
    }, py::arg("family"), py::arg("rank"), py::arg("partition"), "Characteristic polynomial computed from the lift matrix");

    m.def("recover_partition", [](const std::vector<py::int_>& coefficients, std::int64_t m_order) {
        const CharPolyResult q{FactoredPoly(), from_coeffs(coefficients), m_order, Representation::Adjoint};
        return recover_p(q).partition.parts();
    }, py::arg("coefficients"), py::arg("m"), "Partition of a 2A class from its adjoint polynomial");

    m.def("sigma_list", [](const std::string& family, int rank, const std::vector<int>& partition) {
        return sigma_list(TypeTag::parse(family, rank), to_partition(partition)).values;
    }, py::arg("family"), py::arg("rank"), py::arg("partition"));

    m.def("kac_diagram", [](const std::string& family, int rank, const std::vector<int>& partition) {
        return diagram_dict(kac_diagram(TypeTag::parse(family, rank), to_partition(partition)));
    }, py::arg("family"), py::arg("rank"), py::arg("partition"));

    m.def("render", [](const std::string& family, int rank, const std::vector<int>& partition, const std::string& format) {
        if (format != "ascii" && format != "json") throw KacError(ErrorKind::ParseError, "format must be ascii or json");
        return render(kac_diagram(TypeTag::parse(family, rank), to_partition(partition)),
                      format == "json" ? Format::Json : Format::Ascii);
    }, py::arg("family"), py::arg("rank"), py::arg("partition"), py::arg("format") = "ascii");

    m.def("parse_diagram", [](const std::string& text, const std::string& format) {
        return diagram_dict(parse(text, format == "json" ? Format::Json : Format::Ascii));
    }, py::arg("text"), py::arg("format") = "ascii");

    m.def("verify_diagram", [](const std::string& text, const std::string& format) {
        return verify_diagram(parse(text, format == "json" ? Format::Json : Format::Ascii)).failures;
    }, py::arg("text"), py::arg("format") = "json", "List of failed identities; empty when the diagram is consistent");

    m.def("is_regular_elliptic", [](const std::string& family, int rank, const std::vector<int>& partition) {
        return is_regular_elliptic_partition(TypeTag::parse(family, rank), to_partition(partition));
    }, py::arg("family"), py::arg("rank"), py::arg("partition"));

    m.def("elliptic_class_count", [](const std::string& family, int rank) {
        std::size_t n = 0;
        for (const auto& c : twisted_conjugacy_classes(TypeTag::parse(family, rank))) n += c.elliptic ? 1 : 0;
        return n;
    }, py::arg("family"), py::arg("rank"));

    m.def("is_rational", [](const std::string& family, int rank) {
        return check_rationality(TypeTag::parse(family, rank)).rational;
    }, py::arg("family"), py::arg("rank"));

    m.def("run_campaign", [](const std::string& name, int max_rank) {
        CampaignReport r;
        {
        py::gil_scoped_release release;
        if (name == "examples") r = examples_campaign();
        else if (name == "psi_injectivity") r = psi_injectivity_campaign(nontrivial_families(), max_rank);
        else if (name == "zeta_injectivity") r = zeta_injectivity_campaign(nontrivial_families(), max_rank);
        else if (name == "oracle") r = oracle_campaign(all_families(), max_rank, std::min(max_rank, 7));
        else if (name == "recovery") r = recovery_campaign(max_rank);
        else if (name == "orders") r = orders_campaign(all_families(), max_rank);
        else if (name == "structural") r = structural_campaign(nontrivial_families(), max_rank);
        else if (name == "weyl") r = weyl_campaign(all_families(), max_rank);
        else throw KacError(ErrorKind::ParseError, "unknown campaign " + name);
        }
        return report_dict(r);
    }, py::arg("name"), py::arg("max_rank") = 6);
}
