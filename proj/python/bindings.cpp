// Python bindings for the exact lattice toolkit.  Big integers cross the
// boundary as Python ints (via decimal strings), so every value stays exact.

#include "hlat/config.hpp"
#include "hlat/detline.hpp"
#include "hlat/enumerate.hpp"
#include "hlat/errors.hpp"
#include "hlat/hbounds.hpp"
#include "hlat/invariants.hpp"
#include "hlat/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using hlat::Int;
using hlat::Vec;

namespace {

py::object to_py_int(const Int& x) {
    return py::module_::import("builtins").attr("int")(x.str());
}

Int from_py_int(py::handle h) { return Int(py::str(h).cast<std::string>()); }

Vec from_py_vec(py::handle seq) {
    Vec out;
    for (py::handle item : py::reinterpret_borrow<py::iterable>(seq)) {
        out.push_back(from_py_int(item));
    }
    return out;
}

py::list to_py_vec(const Vec& v) {
    py::list out;
    for (const Int& x : v) out.append(to_py_int(x));
    return out;
}

hlat::Sign sign_from_str(const std::string& s) {
    if (s == "positive") return hlat::Sign::positive;
    if (s == "negative") return hlat::Sign::negative;
    throw hlat::invalid_input("sign must be 'positive' or 'negative'");
}

py::dict coset_min_dict(const hlat::CosetMinResult& res) {
    py::list zs;
    for (const auto& z : res.minimizers) zs.append(to_py_vec(z));
    py::dict out;
    out["min_norm"] = to_py_int(res.min_norm);
    out["minimizers"] = zs;
    out["nodes"] = res.nodes_visited;
    return out;
}

py::dict polynomial_dict(const hlat::EtaPolynomial& poly) {
    py::dict terms;
    for (const auto& [alpha, coeff] : poly.coeffs) {
        terms[py::tuple(py::cast(alpha))] = to_py_int(coeff);
    }
    py::dict out;
    out["m"] = poly.m;
    out["rank"] = poly.rank;
    out["terms"] = terms;
    return out;
}

}  // namespace

PYBIND11_MODULE(_hlat, mod) {
    mod.doc() = "exact lattice invariants: coset minima, eta sums, e, h bounds";
    mod.attr("__version__") = hlat::kVersion;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const hlat::Error& e) {
            if (e.kind() == hlat::ErrorKind::invalid_input) {
                PyErr_SetString(PyExc_ValueError, e.what());
            } else {
                PyErr_SetString(PyExc_RuntimeError, e.what());
            }
        }
    });

    py::class_<hlat::Lattice>(mod, "Lattice")
        .def_static(
            "from_gram",
            [](py::handle rows, const std::string& sign, const std::string& name) {
                std::vector<Vec> g;
                for (py::handle row : py::reinterpret_borrow<py::iterable>(rows)) {
                    g.push_back(from_py_vec(row));
                }
                hlat::IMat gram(g.size(), g.size());
                for (std::size_t i = 0; i < g.size(); ++i) {
                    if (g[i].size() != g.size())
                        throw hlat::invalid_input("from_gram: matrix must be square");
                    for (std::size_t j = 0; j < g.size(); ++j) gram(i, j) = g[i][j];
                }
                return hlat::Lattice::from_gram(std::move(gram), sign_from_str(sign), name);
            },
            py::arg("gram"), py::arg("sign") = "negative", py::arg("name") = "")
        .def_static(
            "diagonal",
            [](std::size_t rank, const std::string& sign) {
                return hlat::Lattice::diagonal(rank, sign_from_str(sign));
            },
            py::arg("rank"), py::arg("sign") = "negative")
        .def_static(
            "gamma",
            [](std::size_t n, const std::string& sign) {
                return hlat::Lattice::gamma(n, sign_from_str(sign));
            },
            py::arg("n"), py::arg("sign") = "negative")
        .def_static(
            "e8", [](const std::string& sign) { return hlat::Lattice::e8(sign_from_str(sign)); },
            py::arg("sign") = "negative")
        .def_static("direct_sum", &hlat::Lattice::direct_sum)
        .def("__add__", &hlat::Lattice::direct_sum)
        .def_property_readonly("rank", &hlat::Lattice::rank)
        .def_property_readonly("name", &hlat::Lattice::name)
        .def_property_readonly("sign",
                               [](const hlat::Lattice& l) { return to_string(l.sign()); })
        .def_property_readonly("det", [](const hlat::Lattice& l) { return to_py_int(l.det()); })
        .def_property_readonly("unimodular", &hlat::Lattice::is_unimodular)
        .def_property_readonly("even", &hlat::Lattice::is_even)
        .def_property_readonly("gram",
                               [](const hlat::Lattice& l) {
                                   py::list rows;
                                   for (std::size_t i = 0; i < l.rank(); ++i) {
                                       py::list row;
                                       for (std::size_t j = 0; j < l.rank(); ++j)
                                           row.append(to_py_int(l.gram()(i, j)));
                                       rows.append(row);
                                   }
                                   return rows;
                               })
        .def_property_readonly("has_ambient", &hlat::Lattice::has_ambient)
        .def("norm", [](const hlat::Lattice& l, py::handle x) { return to_py_int(l.norm(from_py_vec(x))); })
        .def("inner",
             [](const hlat::Lattice& l, py::handle x, py::handle y) {
                 return to_py_int(l.inner(from_py_vec(x), from_py_vec(y)));
             })
        .def("to_ambient_doubled",
             [](const hlat::Lattice& l, py::handle x) {
                 return to_py_vec(l.to_ambient_doubled(from_py_vec(x)));
             })
        .def("ambient_to_basis",
             [](const hlat::Lattice& l, py::handle doubled) -> py::object {
                 auto w = l.ambient_to_basis(from_py_vec(doubled));
                 if (!w) return py::none();
                 return to_py_vec(*w);
             })
        .def("__repr__", [](const hlat::Lattice& l) {
            return "<Lattice " + (l.name().empty() ? "rank " + std::to_string(l.rank()) : l.name()) +
                   ">";
        });

    mod.def("parse_lattice_spec", &hlat::parse_lattice_spec, py::arg("spec"));

    mod.def(
        "coset_min",
        [](const hlat::Lattice& l, py::handle w, std::uint64_t max_nodes) {
            return coset_min_dict(hlat::coset_min(l, from_py_vec(w), {max_nodes}));
        },
        py::arg("lattice"), py::arg("w"), py::arg("max_nodes") = hlat::kDefaultMaxNodes);

    mod.def(
        "is_extremal",
        [](const hlat::Lattice& l, py::handle w, std::uint64_t max_nodes) {
            return hlat::is_extremal(l, from_py_vec(w), {max_nodes});
        },
        py::arg("lattice"), py::arg("w"), py::arg("max_nodes") = hlat::kDefaultMaxNodes);

    mod.def(
        "eta",
        [](const hlat::Lattice& l, py::handle w, py::handle a, int m, std::uint64_t max_nodes) {
            return to_py_int(hlat::eta(l, from_py_vec(w), from_py_vec(a), m, {max_nodes}));
        },
        py::arg("lattice"), py::arg("w"), py::arg("a"), py::arg("m"),
        py::arg("max_nodes") = hlat::kDefaultMaxNodes);

    mod.def(
        "eta_polynomial",
        [](const hlat::Lattice& l, py::handle w, int m, std::uint64_t max_nodes, int m_max) {
            return polynomial_dict(hlat::eta_polynomial(l, from_py_vec(w), m, {max_nodes}, m_max));
        },
        py::arg("lattice"), py::arg("w"), py::arg("m"),
        py::arg("max_nodes") = hlat::kDefaultMaxNodes, py::arg("m_max") = hlat::kDefaultMMax);

    mod.def(
        "minimal_m",
        [](const hlat::Lattice& l, py::handle w, std::uint64_t max_nodes, int m_max) -> py::object {
            auto m = hlat::minimal_m(l, from_py_vec(w), {max_nodes}, m_max);
            if (!m) return py::none();
            return py::int_(*m);
        },
        py::arg("lattice"), py::arg("w"), py::arg("max_nodes") = hlat::kDefaultMaxNodes,
        py::arg("m_max") = hlat::kDefaultMMax);

    mod.def(
        "e_invariant",
        [](const hlat::Lattice& l, std::uint64_t max_nodes, int m_max, std::size_t rank_guard,
           unsigned threads, bool keep_table) {
            hlat::EInvariantOptions options;
            options.m_max = m_max;
            options.rank_guard = rank_guard;
            options.threads = threads;
            options.keep_table = keep_table;
            auto cert = hlat::e_invariant(l, {max_nodes}, options);
            py::dict out;
            out["value"] = to_py_int(cert.value);
            out["witness_mask"] = cert.witness_mask;
            out["witness_class"] = to_py_vec(cert.witness_class);
            out["witness_w"] = to_py_vec(cert.witness_w);
            out["witness_m"] = cert.witness_m;
            out["witness_min_norm"] = to_py_int(cert.witness_min_norm);
            out["witness_eta"] = polynomial_dict(cert.witness_eta);
            out["num_classes"] = cert.num_classes;
            out["nodes"] = cert.nodes_visited;
            if (keep_table) {
                py::list table;
                for (const auto& row : cert.table) {
                    py::dict r;
                    r["class_mask"] = row.rep_mask;
                    r["min_norm"] = to_py_int(row.min_norm);
                    r["min_m"] = row.min_m ? py::object(py::int_(*row.min_m)) : py::none();
                    r["contribution"] =
                        row.contribution ? to_py_int(*row.contribution) : py::none();
                    r["minimizer_count"] = row.minimizer_count;
                    table.append(r);
                }
                out["table"] = table;
            }
            return out;
        },
        py::arg("lattice"), py::arg("max_nodes") = hlat::kDefaultMaxNodes,
        py::arg("m_max") = hlat::kDefaultMMax, py::arg("rank_guard") = hlat::kDefaultRankGuard,
        py::arg("threads") = 0, py::arg("keep_table") = false);

    mod.def(
        "h_lower_from_certificate",
        [](const hlat::Lattice& l, py::handle w, py::handle a, int m, py::handle g,
           py::handle b_plus, std::uint64_t max_nodes) {
            hlat::HBoundInput input;
            input.lattice = l;
            input.w = from_py_vec(w);
            if (!a.is_none()) input.a = from_py_vec(a);
            input.m = m;
            input.g = from_py_int(g);
            input.b_plus = from_py_int(b_plus);
            hlat::HCertificate cert;
            Int bound = hlat::h_lower_from_certificate(input, {max_nodes}, &cert);
            py::dict out;
            out["lower"] = to_py_int(bound);
            out["w_norm"] = to_py_int(cert.w_norm);
            out["m"] = cert.m;
            out["eta"] = to_py_int(cert.eta_value);
            out["minimizer_count"] = cert.minimizer_count;
            return out;
        },
        py::arg("lattice"), py::arg("w"), py::arg("a") = py::none(), py::arg("m") = 0,
        py::arg("g") = 0, py::arg("b_plus") = 1, py::arg("max_nodes") = hlat::kDefaultMaxNodes);

    mod.def(
        "h_lower_from_e",
        [](const hlat::Lattice& l, py::handle g, py::handle b_plus, std::uint64_t max_nodes) {
            return to_py_int(hlat::h_lower_from_e(l, from_py_int(g), from_py_int(b_plus),
                                                  {max_nodes}, {}));
        },
        py::arg("lattice"), py::arg("g") = 0, py::arg("b_plus") = 1,
        py::arg("max_nodes") = hlat::kDefaultMaxNodes);

    mod.def(
        "surgery_upper",
        [](py::handle g) {
            auto bounds = hlat::surgery_upper(from_py_int(g));
            return py::make_tuple(to_py_int(bounds.first), to_py_int(bounds.second));
        },
        py::arg("g_slice"));

    mod.def(
        "brieskorn_h",
        [](int k, std::uint64_t max_nodes) {
            auto res = hlat::brieskorn_h(k, {max_nodes});
            py::dict out;
            out["k"] = res.k;
            out["ell"] = to_py_int(res.ell);
            out["lower"] = to_py_int(res.lower);
            out["upper"] = to_py_int(res.upper);
            out["value"] = to_py_int(res.value);
            out["w"] = to_py_vec(res.w_basis);
            out["w_ambient_doubled"] = to_py_vec(res.w_ambient_doubled);
            out["w_norm"] = to_py_int(res.w_norm);
            out["eta0"] = to_py_int(res.eta0);
            out["minimizer_count"] = res.minimizer_count;
            return out;
        },
        py::arg("k"), py::arg("max_nodes") = hlat::kDefaultMaxNodes);

    mod.def(
        "redhn_factor_check",
        [](int k, const hlat::Lattice& base, py::handle w, py::handle a, int m,
           std::uint64_t max_nodes) {
            return hlat::redhn_factor_check(k, base, from_py_vec(w), from_py_vec(a), m,
                                            {max_nodes});
        },
        py::arg("k"), py::arg("base"), py::arg("w"), py::arg("a"), py::arg("m"),
        py::arg("max_nodes") = hlat::kDefaultMaxNodes);

    mod.def(
        "detline_check",
        [](std::uint64_t trials, std::size_t max_dim, std::uint64_t seed) {
            auto rep = hlat::detline::detline_check(trials, max_dim, seed);
            py::dict out;
            out["square_pass"] = rep.square_pass;
            out["square_total"] = rep.square_total;
            out["square_odd_cases"] = rep.square_odd_cases;
            out["gamma_pass"] = rep.gamma_pass;
            out["gamma_total"] = rep.gamma_total;
            out["exact3_pass"] = rep.exact3_pass;
            out["exact3_total"] = rep.exact3_total;
            out["all_passed"] = rep.all_passed();
            return out;
        },
        py::arg("trials") = 100, py::arg("max_dim") = 4, py::arg("seed") = 1);
}
