#include "pdakit/analysis.hpp"
#include "pdakit/caching.hpp"
#include "pdakit/constructions.hpp"
#include "pdakit/error.hpp"
#include "pdakit/pda.hpp"
#include "pdakit/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace pdakit;

namespace {

py::object to_py(const BigInt& v) {
    const std::string s = to_string(v);
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(numerator(r)), to_py(denominator(r)));
}

BigInt big_from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

// Accepts int, Fraction or anything with numerator/denominator.
Rational rational_from_py(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(big_from_py(h));
    return Rational(big_from_py(h.attr("numerator")), big_from_py(h.attr("denominator")));
}

py::list rows_to_py(const PdaArray& p) {
    py::list out;
    for (std::size_t j = 0; j < p.rows(); ++j) {
        py::list row;
        for (const Entry e : p.row(j)) {
            if (e.is_star()) {
                row.append(py::none());
            } else {
                row.append(e.value());
            }
        }
        out.append(row);
    }
    return out;
}

PdaArray pda_from_py(const py::sequence& rows, std::size_t z, std::size_t s) {
    std::vector<std::vector<Entry>> grid;
    for (const auto& r : rows) {
        std::vector<Entry> row;
        for (const auto& x : r.cast<py::sequence>()) {
            row.push_back(x.is_none() ? Entry::star() : Entry::symbol(x.cast<std::uint64_t>()));
        }
        grid.push_back(std::move(row));
    }
    return PdaArray::from_rows(grid, z, s);
}

py::list grid_to_py(const IndexGrid& g) {
    py::list out;
    for (const auto& r : g.to_rows()) out.append(py::cast(r));
    return out;
}

py::tuple params_tuple(const PdaParams& p) { return py::make_tuple(p.k, p.f, p.z, p.s); }

py::dict point_to_py(const SchemePoint& p) {
    py::dict d;
    d["memory_ratio"] = to_py(p.memory_ratio);
    d["rate"] = to_py(p.rate);
    d["packets"] = to_py(p.packets);
    d["provenance"] = std::string(to_string(p.provenance));
    return d;
}

SchemePoint point_from_py(const py::handle& h) {
    const auto d = h.cast<py::dict>();
    SchemePoint p;
    p.memory_ratio = rational_from_py(d["memory_ratio"]);
    p.rate = rational_from_py(d["rate"]);
    p.packets = big_from_py(d["packets"]);
    p.provenance = Provenance::shared;
    return p;
}

py::dict params_to_py(const ParameterSet& s) {
    py::dict d;
    d["K"] = to_py(s.k);
    d["F"] = to_py(s.f);
    d["Z"] = to_py(s.z);
    d["S"] = to_py(s.s);
    d["point"] = point_to_py(s.point);
    return d;
}

py::dict report_to_py(const ValidationReport& r) {
    py::dict d;
    d["valid"] = r.valid();
    d["c1_ok"] = r.c1_ok;
    d["c2_ok"] = r.c2_ok;
    d["c3_ok"] = r.c3_ok;
    d["c2_missing"] = r.c2_missing;
    if (r.c1_witness) {
        d["c1_witness"] = py::make_tuple(r.c1_witness->column, r.c1_witness->stars);
    } else {
        d["c1_witness"] = py::none();
    }
    if (r.c3_witness) {
        const auto& w = *r.c3_witness;
        d["c3_witness"] = py::make_tuple(py::make_tuple(w.first.row, w.first.col),
                                         py::make_tuple(w.second.row, w.second.col));
    } else {
        d["c3_witness"] = py::none();
    }
    d["params"] = params_tuple(r.params);
    d["lines"] = r.condition_lines();
    return d;
}

}  // namespace

PYBIND11_MODULE(_pdakit, m) {
    m.doc() = "Placement delivery arrays: constructions, validation, simulation and tables.";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());
    auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<OverflowError>(m, "OverflowError", pre.ptr());
    py::register_exception<DecodeError>(m, "DecodeError", base.ptr());
    py::register_exception<InvalidPdaError>(m, "InvalidPdaError", base.ptr());

    py::class_<PdaArray>(m, "PdaArray")
        .def(py::init(&pda_from_py), py::arg("rows"), py::arg("z"), py::arg("s"),
             "Rows of ints, with None for a star.")
        .def_property_readonly("params", [](const PdaArray& p) { return params_tuple(p.params()); })
        .def_property_readonly("rows", &rows_to_py)
        .def("__eq__", [](const PdaArray& a, const PdaArray& b) { return a == b; })
        .def("__repr__", [](const PdaArray& p) { return "PdaArray" + p.params().to_string(); });

    m.def("parse", [](const std::string& text) { return parse(text); });
    m.def("serialize", &serialize);
    m.def("read_pda_file", &read_pda_file);
    m.def("write_pda_file", &write_pda_file);
    m.def("validate", [](const PdaArray& p) { return report_to_py(validate(p)); });

    m.def("mn_pda", &mn_pda, py::arg("k"), py::arg("t"));
    m.def("label_matrices", [](std::size_t u, std::size_t v) {
        const auto l = label_matrices(u, v);
        return py::make_tuple(grid_to_py(l.a), grid_to_py(l.b));
    });
    m.def("expand_labels", [](std::size_t u, std::size_t v, std::size_t d) {
        const auto e = expand_labels(label_matrices(u, v), d);
        return py::make_tuple(grid_to_py(e.a), grid_to_py(e.b));
    });
    m.def("recursive_extend", &recursive_extend, py::arg("base"), py::arg("k2"));
    m.def("dual", &dual);

    m.def("params_mn", [](std::uint64_t k, std::uint64_t t) { return params_to_py(params_mn(k, t)); });
    m.def("params_lemma2", [](std::uint64_t q, std::uint64_t z, std::uint64_t mm) {
        return params_to_py(params_lemma2(q, z, mm));
    });
    m.def("params_lemma3", [](std::uint64_t q, std::uint64_t z, std::uint64_t mm, std::uint64_t t) {
        return params_to_py(params_lemma3(q, z, mm, t));
    });
    m.def("params_theorem3", [](std::uint64_t k1, std::uint64_t k2, std::uint64_t t) {
        return params_to_py(params_theorem3(k1, k2, t));
    });
    m.def("params_theorem4",
          [](std::uint64_t q, std::uint64_t z, std::uint64_t mm, std::uint64_t k2) {
              return params_to_py(params_theorem4(q, z, mm, k2));
          });
    m.def("params_theorem5", [](std::uint64_t q, std::uint64_t z, std::uint64_t mm,
                                std::uint64_t t, std::uint64_t k2) {
        return params_to_py(params_theorem5(q, z, mm, t, k2));
    });

    m.def(
        "run_scheme",
        [](const PdaArray& p, std::size_t files, std::optional<std::vector<std::size_t>> demands,
           std::size_t length, std::uint64_t seed) {
            const DemandVector d = demands ? DemandVector{*demands}
                                           : DemandVector::identity(p.cols(), files);
            const auto r = run_scheme(p, files, d, length, seed);
            py::dict out;
            py::list ok;
            for (const auto& u : r.users) ok.append(u.ok);
            out["ok"] = ok;
            out["rate"] = to_py(r.rate);
            out["rate_num"] = r.rate_numerator;
            out["rate_den"] = r.rate_denominator;
            out["bytes_sent"] = r.bytes_sent;
            out["text"] = r.to_text();
            return out;
        },
        py::arg("pda"), py::arg("files"), py::arg("demands") = py::none(), py::arg("length") = 64,
        py::arg("seed") = 0);

    m.def("entropy", [](const py::handle& x) { return entropy(rational_from_py(x)); });
    m.def("mn_ratio", [](std::uint64_t k1, std::uint64_t k2, std::uint64_t t) {
        const auto c = mn_ratio(k1, k2, t);
        py::dict d;
        d["h1"] = c.h1;
        d["h2"] = c.h2;
        d["rate"] = to_py(c.rate);
        d["mn_rate"] = to_py(c.mn_rate);
        d["packets"] = to_py(c.packets);
        d["mn_packets"] = to_py(c.mn_packets);
        d["rate_ratio"] = to_py(c.rate_ratio);
        d["packet_ratio"] = to_py(c.packet_ratio);
        d["rate_ratio_closed_form"] = to_py(c.rate_ratio_closed_form);
        d["packet_ratio_approx"] = c.packet_ratio_approx;
        return d;
    });
    m.def("base_points_mn", [](std::uint64_t k) {
        py::list out;
        for (const auto& p : base_points_mn(k)) out.append(point_to_py(p));
        return out;
    });
    m.def("lemma2_family", [](std::uint64_t q, std::uint64_t mm) {
        py::list out;
        for (const auto& p : lemma2_family(q, mm)) out.append(point_to_py(p));
        return out;
    });
    m.def("best_share", [](const py::sequence& points, const py::handle& memory_ratio,
                           const py::handle& rate) {
        std::vector<SchemePoint> pts;
        for (const auto& p : points) pts.push_back(point_from_py(p));
        const auto c = best_share(pts, rational_from_py(memory_ratio), rational_from_py(rate));
        py::list lambdas;
        for (const auto& l : c.lambdas) lambdas.append(to_py(l));
        py::dict d;
        d["point"] = point_to_py(c.point);
        d["indices"] = c.indices;
        d["lambdas"] = lambdas;
        return d;
    });
    m.def("tang_equivalence", [](std::uint64_t n, std::uint64_t q, std::uint64_t mm) {
        const auto r = tang_equivalence(n, q, mm);
        py::dict d;
        d["x"] = r.x;
        d["h1"] = r.h1;
        d["h2"] = r.h2;
        d["r1"] = to_py(r.r1);
        d["f1"] = to_py(r.f1);
        d["r2"] = to_py(r.r2);
        d["f2"] = to_py(r.f2);
        d["passed"] = r.passed();
        return d;
    });
    m.def(
        "table",
        [](const std::string& id, const std::string& format, const std::string& rows,
           bool reference) {
            const TableId tid = parse_table_id(id);
            const auto params = rows.empty() ? default_rows(tid) : parse_rows(tid, rows);
            const auto rendered = render(tid, make_table(tid, params), reference);
            if (format == "md") return to_markdown(rendered);
            if (format == "csv") return to_csv(rendered);
            throw PreconditionError("unknown table format '" + format + "'");
        },
        py::arg("id"), py::arg("format") = "csv", py::arg("rows") = "",
        py::arg("reference") = false);
}
