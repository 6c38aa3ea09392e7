#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotwave/io.hpp"
#include "knotwave/poly_family.hpp"

namespace py = pybind11;
using namespace knotwave;

namespace {

std::vector<std::pair<double, double>> sample(const PiecewisePoly& f, double lo, double hi,
                                              int points) {
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < points; ++i) {
        double x = lo + (hi - lo) * i / (points - 1);
        out.emplace_back(x, f.eval(x));
    }
    return out;
}

py::dict dim_row_to_dict(const DimensionRow& r) {
    py::dict d;
    d["k0"] = r.k0;
    d["k1"] = r.k1;
    d["kbar0"] = r.kbar0;
    d["kbar1"] = r.kbar1;
    d["kbreve0"] = r.kbreve0;
    d["kbreve1"] = r.kbreve1;
    d["m"] = r.m;
    d["m_minus"] = r.m_minus;
    d["m_plus"] = r.m_plus;
    d["dim_w_hat"] = r.dim_w_hat;
    d["dim_w_tilde"] = r.dim_w_tilde;
    d["dim_w_bar"] = r.dim_w_bar();
    d["dim_w_breve"] = r.dim_w_breve;
    d["dim_t"] = r.dim_t;
    d["dim_t_minus"] = r.dim_t_minus;
    d["dim_t_plus"] = r.dim_t_plus;
    d["dim_u"] = r.dim_u;
    d["dim_s"] = r.dim_s;
    d["validated"] = r.validated;
    d["formulas_ok"] = r.formulas_ok;
    return d;
}

}  // namespace

PYBIND11_MODULE(_knotwave, m) {
    m.doc() = "orthogonal piecewise-polynomial bases and wavelets on irregular knots";

    py::register_exception<ConsistencyError>(m, "ConsistencyError");

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<std::vector<double>>())
        .def("__call__", &Polynomial::eval)
        .def_property_readonly("coeffs", &Polynomial::coeffs)
        .def_property_readonly("degree", &Polynomial::degree);

    py::class_<PiecewisePoly>(m, "PiecewisePoly")
        .def(py::init<>())
        .def_static("on_unit", &PiecewisePoly::on_unit)
        .def_static("indicator", &PiecewisePoly::indicator, py::arg("u"), py::arg("v"),
                    py::arg("value") = 1.0)
        .def("__call__", &PiecewisePoly::eval)
        .def_property_readonly("breakpoints", &PiecewisePoly::breakpoints)
        .def_property_readonly("support",
                               [](const PiecewisePoly& f) {
                                   return std::make_pair(f.support_left(), f.support_right());
                               })
        .def("compose_affine", &compose_affine)
        .def("restrict", &restrict_to)
        .def("translated", &PiecewisePoly::translated)
        .def("dilated", &PiecewisePoly::dilated)
        .def("scaled", &PiecewisePoly::scaled)
        .def("sample", &sample, py::arg("lo"), py::arg("hi"), py::arg("points") = 201);

    m.def("inner_product", &inner_product);
    m.def("norm", &norm);
    m.def("add", &add);
    m.def("subtract", &subtract);

    // knots
    py::class_<TauNumber>(m, "TauNumber")
        .def(py::init([](std::int64_t p, std::int64_t q) { return TauNumber{p, q}; }),
             py::arg("p"), py::arg("q") = 0)
        .def_readonly("p", &TauNumber::p)
        .def_readonly("q", &TauNumber::q)
        .def("__float__", &TauNumber::to_real)
        .def("__repr__", &TauNumber::str)
        .def("__eq__", [](TauNumber a, TauNumber b) { return a == b; })
        .def("__lt__", [](TauNumber a, TauNumber b) { return a < b; })
        .def("__add__", [](TauNumber a, TauNumber b) { return a + b; })
        .def("__sub__", [](TauNumber a, TauNumber b) { return a - b; })
        .def("__mul__", [](TauNumber a, TauNumber b) { return a * b; });

    m.def("tau", &tau_value);
    m.def("tau_integers", &tau_integers);
    m.def("is_tau_integer", &is_tau_integer);
    m.def("fibonacci_word", &fibonacci_word);
    m.def("classify", [](TauNumber a) {
        switch (classify(a)) {
            case GapClass::LS: return "LS";
            case GapClass::SL: return "SL";
            default: return "LL";
        }
    });
    m.def("beta_mu", [](TauNumber a) {
        auto bm = beta_mu(a);
        return std::make_pair(bm.beta, bm.mu);
    });

    py::class_<TauWindow>(m, "TauWindow")
        .def_readonly("level", &TauWindow::level)
        .def_property_readonly("scaled", [](const TauWindow& w) { return w.scaled; })
        .def_property_readonly("knots",
                               [](const TauWindow& w) { return w.to_window().knots; })
        .def("__len__", &TauWindow::size);
    m.def("tau_window", &tau_window, py::arg("level"), py::arg("count"));
    m.def("refine", &refine);

    // function-space linear algebra
    m.def("gram", py::overload_cast<const FunctionList&, const FunctionList&>(&gram));
    m.def("gram", py::overload_cast<const FunctionList&>(&gram));
    m.def("orthonormalize", &orthonormalize, py::arg("functions"), py::arg("tol") = kRankTol);
    m.def("project", &project, py::arg("f"), py::arg("onto"), py::arg("tol") = kRankTol);
    m.def("residual", &residual, py::arg("f"), py::arg("onto"), py::arg("tol") = kRankTol);
    m.def("complete_to_orthogonal", &complete_to_orthogonal);
    m.def("orthonormal_row_basis", &orthonormal_row_basis, py::arg("matrix"),
          py::arg("tol") = kRankTol);

    // centered bases
    py::class_<KnotWindow>(m, "KnotWindow")
        .def_property_readonly("knots", [](const KnotWindow& w) { return w.knots; });
    m.def(
        "make_window",
        [](std::vector<double> ks, bool left_endpoint, bool right_endpoint) {
            return make_window(std::move(ks), left_endpoint ? Role::endpoint : Role::cut,
                               right_endpoint ? Role::endpoint : Role::cut);
        },
        py::arg("knots"), py::arg("left_endpoint") = true, py::arg("right_endpoint") = true);

    py::class_<CenteredBasis>(m, "CenteredBasis")
        .def_property_readonly("knots",
                               [](const CenteredBasis& b) { return b.window.knots; })
        .def_property_readonly("window", [](const CenteredBasis& b) { return b.window; })
        .def_property_readonly("normalized",
                               [](const CenteredBasis& b) { return b.normalized; })
        .def("bar", [](const CenteredBasis& b, std::size_t i) { return b.bar.at(i); })
        .def("breve", [](const CenteredBasis& b, std::size_t i) { return b.breve.at(i); })
        .def("knot_functions", &CenteredBasis::knot_functions)
        .def("all", &CenteredBasis::all)
        .def("__len__", &CenteredBasis::total_count);

    m.def("verify_centered", [](const CenteredBasis& b) { return verify_centered(b).pass; });
    m.def(
        "verify_orth_condition",
        [](const CenteredBasis& b, double tol) {
            auto rep = verify_orth_condition(b, tol);
            return std::make_pair(rep.pass, rep.worst);
        },
        py::arg("basis"), py::arg("tol") = 1e-9);
    m.def("recenter", &recenter);

    // polynomial-reproduction family
    m.def("ultraspherical_monic", &ultraspherical_monic);
    m.def("phi_tilde", &phi_tilde);
    m.def("phi_tilde_norm2", &phi_tilde_norm2);
    m.def("alpha_coefficient", &alpha_coefficient);
    m.def(
        "poly_basis",
        [](int degree, const KnotWindow& w, bool normalized) {
            return omega_basis(build_family(degree), w, normalized);
        },
        py::arg("degree"), py::arg("window"), py::arg("normalized") = true);
    m.def("poly_wavelets", &poly_wavelets);

    // continuous quadratic family
    m.def("c_roots", &c_roots);
    py::class_<QuadLocal>(m, "QuadLocal")
        .def_readonly("theta", &QuadLocal::theta)
        .def_readonly("c_root", &QuadLocal::c_root)
        .def_readonly("q", &QuadLocal::q)
        .def_readonly("z", &QuadLocal::z)
        .def_readonly("r_theta", &QuadLocal::r_theta)
        .def_readonly("l_theta", &QuadLocal::l_theta);
    m.def("quad_local", &quad_local, py::arg("theta"), py::arg("branch") = '+');
    m.def(
        "quad_basis",
        [](const KnotWindow& w, double theta, bool normalized) {
            return omega(w, ThetaSequence::constant(theta, w.size()), normalized);
        },
        py::arg("window"), py::arg("theta"), py::arg("normalized") = true);
    m.def(
        "nesting_hypothesis",
        [](const KnotWindow& w0, double t0, const KnotWindow& w1, double t1) {
            return nesting_hypothesis(w0, ThetaSequence::constant(t0, w0.size()), w1,
                                      ThetaSequence::constant(t1, w1.size()));
        },
        py::arg("coarse"), py::arg("theta0"), py::arg("fine"), py::arg("theta1"));

    // wavelet machinery
    py::class_<WaveletScaffold>(m, "WaveletScaffold")
        .def_property_readonly("dimension_report",
                               [](const WaveletScaffold& sc) {
                                   py::list rows;
                                   for (const auto& r : sc.dims.rows)
                                       rows.append(dim_row_to_dict(r));
                                   return rows;
                               })
        .def_property_readonly("ok", [](const WaveletScaffold& sc) { return sc.dims.pass; });
    m.def("build_scaffold", &build_scaffold);
    m.def("build_wavelets", &build_wavelets);

    // tau instantiation
    m.def("haar_basis", &haar_basis);
    m.def("haar_mother", &haar_mother);
    m.def("haar_wavelets", &haar_wavelets);
    m.def("quad_tau_basis", &quad_tau_basis);
    m.def("quad_tau_wavelets", &quad_tau_wavelets);
    m.def("cd_tables", [](const TauWindow& w) {
        py::list out;
        for (const auto& blk : emit_cd_tables(w).blocks) {
            py::dict d;
            d["kind"] = std::string(1, blk.kind);
            d["knot_class"] = blk.knot_class;
            d["coarse"] = blk.coarse;
            d["fine"] = blk.fine;
            d["row_labels"] = blk.row_labels;
            d["col_labels"] = blk.col_labels;
            d["values"] = blk.values;
            out.append(std::move(d));
        }
        return out;
    });

#ifdef VERSION_INFO
#define KW_STR(x) #x
#define KW_XSTR(x) KW_STR(x)
    m.attr("__version__") = KW_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
