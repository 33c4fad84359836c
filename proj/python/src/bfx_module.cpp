#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "bfx/binomial.hpp"
#include "bfx/boolfn.hpp"
#include "bfx/erasure.hpp"
#include "bfx/families.hpp"
#include "bfx/spectral.hpp"
#include "bfx/theorems.hpp"

namespace py = pybind11;
using namespace bfx;

namespace {

// Rationals cross the boundary as "num/den" strings; python callers can
// hand them to fractions.Fraction directly.
Rational rat(const std::string& s) { return Rational::from_string(s); }

std::vector<std::string> poly_strings(const UniPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["claim"] = r.claim;
    d["n"] = r.n;
    d["param"] = r.param;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["pass"] = r.pass;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_bfx, m) {
    m.doc() = "exact noise-stability and erasure-correlation toolkit";

    py::class_<BooleanFunction>(m, "BooleanFunction")
        .def_static("majority", &make_majority, py::arg("n"))
        .def_static("dictator", &make_dictator, py::arg("n"), py::arg("i"))
        .def_static("gopi", &gopi_g, py::arg("n"))
        .def_static("from_hex", &BooleanFunction::from_hex, py::arg("n"), py::arg("hex"))
        .def_property_readonly("n", &BooleanFunction::n)
        .def("to_hex", &BooleanFunction::to_hex)
        .def("value", [](const BooleanFunction& f, uint32_t mask) {
            if (mask >= f.size()) throw std::out_of_range("mask out of range");
            return static_cast<int>(f.value(mask));
        })
        .def("negated", &BooleanFunction::negated)
        .def("sign_flip",
             [](const BooleanFunction& f, uint32_t mask) {
                 return apply_sign_flip(f, SignFlip{mask});
             })
        .def("predicates",
             [](const BooleanFunction& f) {
                 const auto p = structural_predicates(f);
                 py::dict d;
                 d["unbiased"] = p.unbiased;
                 d["odd"] = p.odd;
                 d["monotone"] = p.monotone;
                 d["unate"] = p.unate;
                 d["unate_orientation"] =
                     p.unate ? py::cast(p.unate_orientation->mask) : py::none();
                 return d;
             })
        .def("mu", [](const BooleanFunction& f) { return mu_and_disagreements(f).first.str(); })
        .def("disagreements",
             [](const BooleanFunction& f) { return mu_and_disagreements(f).second; })
        .def("first_level_gap",
             [](const BooleanFunction& f) { return first_level_gap(f).str(); })
        .def("__eq__", [](const BooleanFunction& a, const BooleanFunction& b) { return a == b; })
        .def("__repr__", [](const BooleanFunction& f) {
            return "BooleanFunction(n=" + std::to_string(f.n()) + ", hex=" + f.to_hex() + ")";
        });

    m.def("stab_coeffs",
          [](const BooleanFunction& f) { return poly_strings(stab_poly(f)); },
          "noise stability polynomial coefficients in rho, as num/den strings");
    m.def("phi_coeffs", [](const BooleanFunction& f) { return poly_strings(phi_poly(f)); },
          "erasure functional polynomial coefficients in p");
    m.def("stab_at", [](const BooleanFunction& f, const std::string& rho) {
        return stab_poly(f).eval(rat(rho)).str();
    });
    m.def("phi_at", [](const BooleanFunction& f, const std::string& p) {
        return phi_eval(f, rat(p)).str();
    });
    m.def("binom_equal_prob",
          [](int h, const std::string& q) { return binom_equal_prob(h, rat(q)).str(); });
    m.def("gap_formula_rhs",
          [](int n, const std::string& q) { return gap_formula_rhs(n, rat(q)).str(); });
    m.def("verify_gap_formula", [](int n, const std::string& q) {
        return report_dict(verify_gap_formula(n, rat(q)));
    });
    m.def("thresholds", [](int n) {
        py::dict d;
        d["eps"] = threshold_eps(n).str();
        d["eps_lemma"] = threshold_eps_lemma(n).str();
        d["gamma"] = threshold_gamma(n).str();
        d["gamma_prime"] = threshold_gamma_prime(n).str();
        return d;
    });
    m.def("is_ltf", [](const BooleanFunction& f) -> py::object {
        const auto w = is_ltf(f);
        if (!w) return py::none();
        py::dict d;
        d["weights"] = w->weights;
        d["theta"] = w->threshold;
        return d;
    });
    m.def("ltf_function", [](const std::vector<long>& weights, long theta) {
        return ltf_to_function(LTFWeights{weights, theta}, static_cast<int>(weights.size()));
    }, py::arg("weights"), py::arg("theta") = 0);
    m.def("sturm_sign", [](const std::vector<std::string>& coeffs, const std::string& lo,
                           const std::string& hi) {
        std::vector<Rational> c;
        for (const auto& s : coeffs) c.push_back(rat(s));
        return std::string(
            interval_sign_name(sturm_sign_on_interval(UniPoly(c, Var::P), rat(lo), rat(hi))));
    });
    m.def("run_claim",
          [](const std::string& claim, const std::vector<int>& n_list, int grid, uint64_t seed,
             unsigned jobs) {
              VerifyOptions o;
              o.n_list = n_list;
              o.grid = grid;
              o.seed = seed;
              o.jobs = jobs;
              py::list out;
              for (const auto& r : run_claim(claim, o)) out.append(report_dict(r));
              return out;
          },
          py::arg("claim"), py::arg("n_list") = std::vector<int>{}, py::arg("grid") = 0,
          py::arg("seed") = 12345, py::arg("jobs") = 1);
    m.def("catalog", [](const std::string& cls, int n, const std::string& group) {
        const Group g = group == "flips_perms" ? Group::FlipsPerms : Group::Flips;
        FunctionCatalog cat;
        if (cls == "unbiased_ltf") cat = enumerate_unbiased_ltfs(n, g);
        else if (cls == "monotone") cat = enumerate_monotone(n, g);
        else if (cls == "unate_unbiased") cat = enumerate_unate_unbiased(n, g);
        else throw std::invalid_argument("catalog class must be unbiased_ltf|monotone|unate_unbiased");
        py::list out;
        for (const auto& e : cat.entries) {
            py::dict d;
            d["table_hex"] = e.fn.to_hex();
            d["n"] = cat.n;
            d["orbit_size"] = e.orbit_size;
            if (e.weights) {
                d["weights"] = e.weights->weights;
                d["theta"] = e.weights->threshold;
            }
            out.append(d);
        }
        return out;
    }, py::arg("cls"), py::arg("n"), py::arg("group") = "flips");
}
