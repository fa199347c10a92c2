// Copyright 2026 The weakpolar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>

#include "weakpolar/bloch.hpp"
#include "weakpolar/error.hpp"
#include "weakpolar/experiment.hpp"
#include "weakpolar/protocol.hpp"
#include "weakpolar/values.hpp"
#include "weakpolar/verify.hpp"

namespace py = pybind11;
using namespace weakpolar;
using qmath::BlochVector;
using qmath::cplx;
using qmath::Operator;
using qmath::PureState;

namespace {

using Vec3 = std::array<double, 3>;
using Amps = std::array<cplx, 2>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

BlochVector vec(const Vec3 &v) {
    return {v[0], v[1], v[2]};
}
Vec3 tup(const BlochVector &v) {
    return {v.x, v.y, v.z};
}
PureState state(const Amps &a) {
    return PureState::normalize(a[0], a[1]);
}
Amps amps(const PureState &s) {
    return {s[0], s[1]};
}
Operator hermitian(const Mat2 &m) {
    qmath::Matrix x(2, 2);
    x << m[0][0], m[0][1], m[1][0], m[1][1];
    return Operator::make(x, qmath::Role::kHermitian);
}
Mat2 mat(const Operator &o) {
    return {{{o(0, 0), o(0, 1)}, {o(1, 0), o(1, 1)}}};
}

experiment::ScenarioSpec make_spec(double theta, double purity, std::optional<std::vector<double>> alphas,
                                   std::uint64_t counts, std::uint64_t seed) {
    experiment::ScenarioSpec spec;
    spec.theta = theta;
    spec.purity = purity;
    spec.alpha_grid = alphas ? *alphas : experiment::default_alpha_grid();
    spec.xi_grid = experiment::default_xi_grid();
    spec.counts_per_setting = counts;
    spec.seed = seed;
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weak and modular values of a qubit, the polarisation-meter protocol and its emulator.";

    py::exception<Error>(m, "WeakpolarError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object cls = py::module_::import("weakpolar._core").attr("WeakpolarError");
            py::object inst = cls(e.what());
            inst.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(cls.ptr(), inst.ptr());
        }
    });

    m.def("pauli_along", [](const Vec3 &n) { return mat(qmath::pauli_along(vec(n))); }, py::arg("n"));
    m.def("state_from_bloch", [](const Vec3 &v) { return amps(qmath::state_from_bloch(vec(v))); }, py::arg("v"));
    m.def("bloch_from_state", [](const Amps &a) { return tup(qmath::bloch_from_state(state(a))); }, py::arg("psi"));
    m.def("linear_polarization", [](double a) { return amps(protocol::linear_polarization(a)); }, py::arg("alpha"));

    m.def(
        "weak_value",
        [](const Mat2 &a, const Amps &i, const Amps &f) { return values::weak_value(hermitian(a), state(i), state(f)).value(); },
        py::arg("observable"), py::arg("psi_i"), py::arg("psi_f"));
    m.def(
        "modular_value",
        [](const Mat2 &a, double g, const Amps &i, const Amps &f) {
            return values::modular_value(hermitian(a), g, state(i), state(f)).value();
        },
        py::arg("observable"), py::arg("g"), py::arg("psi_i"), py::arg("psi_f"));

    m.def(
        "weak_argument_geometric",
        [](const Vec3 &i, const Vec3 &n, const Vec3 &f) { return bloch::weak_argument_geometric(vec(i), vec(n), vec(f)); },
        py::arg("i"), py::arg("n"), py::arg("f"));
    m.def(
        "solid_angle",
        [](const std::vector<Vec3> &loop) {
            std::vector<BlochVector> v;
            for (const auto &p : loop) {
                v.push_back(vec(p));
            }
            return bloch::bargmann_solid_angle(std::span<const BlochVector>(v)).value;
        },
        py::arg("loop"));

    py::class_<protocol::ProtocolConfig>(m, "ProtocolConfig")
        .def(py::init([](const Vec3 &meter, double purity, const Vec3 &control, const Mat2 &obs, double g, double delta,
                         const Amps &pre, const Amps &post) {
                 protocol::ProtocolConfig c;
                 c.meter = vec(meter);
                 c.purity = purity;
                 c.control = vec(control);
                 c.observable = hermitian(obs);
                 c.coupling = g;
                 c.gate_phase = delta;
                 c.pre = state(pre);
                 c.post = state(post);
                 c.validate();
                 return c;
             }),
             py::arg("meter"), py::arg("purity"), py::arg("control"), py::arg("observable"), py::arg("coupling"),
             py::arg("gate_phase"), py::arg("pre"), py::arg("post"))
        .def_property_readonly("meter", [](const protocol::ProtocolConfig &c) { return tup(c.meter); })
        .def_property_readonly("control", [](const protocol::ProtocolConfig &c) { return tup(c.control); })
        .def_readonly("purity", &protocol::ProtocolConfig::purity)
        .def_readonly("coupling", &protocol::ProtocolConfig::coupling)
        .def_readonly("gate_phase", &protocol::ProtocolConfig::gate_phase)
        .def_property_readonly("observable", [](const protocol::ProtocolConfig &c) { return mat(c.observable); })
        .def_property_readonly("pre", [](const protocol::ProtocolConfig &c) { return amps(c.pre); })
        .def_property_readonly("post", [](const protocol::ProtocolConfig &c) { return amps(c.post); })
        .def_property_readonly("strength", &protocol::ProtocolConfig::strength);

    m.def("cnot_config", &protocol::cnot_config, py::arg("theta"), py::arg("purity"), py::arg("alpha"));
    m.def(
        "effective_modular_value", [](const protocol::ProtocolConfig &c) { return protocol::effective_modular_value(c).value(); },
        py::arg("config"));
    m.def(
        "meter_configs",
        [](const Vec3 &meter, const Vec3 &control) {
            auto q = protocol::meter_configs(vec(meter), vec(control));
            return py::make_tuple(tup(q.q_re), tup(q.q_im));
        },
        py::arg("meter"), py::arg("control"));
    m.def(
        "conditional_meter_average",
        [](const protocol::ProtocolConfig &c, const Vec3 &q) { return protocol::conditional_meter_average(c, vec(q)).value; },
        py::arg("config"), py::arg("q"));
    m.def(
        "bruteforce_meter_average",
        [](const protocol::ProtocolConfig &c, const Vec3 &q, double xi) {
            return protocol::bruteforce_conditional(c, vec(q), xi).average;
        },
        py::arg("config"), py::arg("q"), py::arg("xi") = 0.0);
    m.def("visibility_closed_form", &protocol::visibility_closed_form, py::arg("theta"), py::arg("purity"),
          py::arg("modulus"));
    m.def(
        "modulus_from_visibility",
        [](double v, double theta, double purity) {
            auto r = protocol::modulus_from_visibility(v, theta, purity);
            return py::make_tuple(r.minus, r.plus);
        },
        py::arg("visibility"), py::arg("theta"), py::arg("purity"));
    m.def("branch_criterion", &protocol::branch_criterion, py::arg("theta"), py::arg("purity"), py::arg("modulus"));
    m.def("no_eraser_ratio", &protocol::no_eraser_ratio, py::arg("config"));
    m.def(
        "interference_scan",
        [](const protocol::ProtocolConfig &c) {
            auto s = protocol::interference_scan(c);
            py::dict d;
            d["visibility"] = s.visibility;
            d["phase"] = s.phase;
            d["p_max"] = s.p_max;
            d["p_min"] = s.p_min;
            d["postselect_prob"] = s.postselect_prob;
            return d;
        },
        py::arg("config"));
    m.def(
        "polar_modular_value",
        [](const protocol::ProtocolConfig &c) {
            auto e = protocol::polar_modular_value(c);
            py::dict d;
            d["visibility"] = e.visibility;
            d["argument"] = e.argument;
            d["criterion"] = e.criterion;
            d["modulus"] = e.modulus;
            d["value"] = e.value().value();
            return d;
        },
        py::arg("config"));

    m.def("snr", &experiment::snr, py::arg("visibility"), py::arg("n"));
    m.def("estimator_std", &experiment::estimator_std, py::arg("visibility"), py::arg("n"));
    m.def(
        "sample_counts",
        [](double p13, std::uint64_t n, std::uint64_t seed) {
            auto r = experiment::sample_counts(p13, n, seed);
            return py::make_tuple(r.n13, r.n23);
        },
        py::arg("p13"), py::arg("n_total"), py::arg("seed"));
    m.def(
        "estimate_visibility_phase",
        [](const std::vector<double> &xi, const std::vector<std::uint64_t> &n13, const std::vector<std::uint64_t> &n23) {
            if (xi.size() != n13.size() || xi.size() != n23.size()) {
                throw Error(ErrorCode::kInvalidArgument, "xi, n13 and n23 need equal lengths");
            }
            std::vector<experiment::CountRecord> recs;
            for (std::size_t k = 0; k < xi.size(); ++k) {
                recs.push_back({xi[k], n13[k], n23[k], n13[k] + n23[k]});
            }
            auto e = experiment::estimate_visibility_phase(recs);
            py::dict d;
            d["visibility"] = e.visibility;
            d["phase"] = e.phase;
            d["stderr"] = e.stderr_v;
            d["no_fringe"] = e.no_fringe;
            return d;
        },
        py::arg("xi"), py::arg("n13"), py::arg("n23"));
    m.def(
        "fit_purity",
        [](double theta, const std::vector<double> &alpha, const std::vector<double> &v,
           const std::vector<std::uint64_t> &counts, std::optional<std::function<double(double)>> modulus) {
            if (alpha.size() != v.size() || alpha.size() != counts.size()) {
                throw Error(ErrorCode::kInvalidArgument, "alpha, visibility and counts need equal lengths");
            }
            std::vector<experiment::PurityMeasurement> data;
            for (std::size_t k = 0; k < alpha.size(); ++k) {
                data.push_back({alpha[k], v[k], counts[k]});
            }
            auto f = modulus ? *modulus : std::function<double(double)>([](double a) { return std::abs(std::tan(a)); });
            auto fit = experiment::fit_purity(theta, data, f);
            py::dict d;
            d["purity"] = fit.purity;
            d["chi2"] = fit.chi2;
            d["boundary"] = fit.boundary;
            return d;
        },
        py::arg("theta"), py::arg("alpha"), py::arg("visibility"), py::arg("counts"), py::arg("modulus") = py::none());

    m.def(
        "run_figure2",
        [](double theta, double purity, std::optional<std::vector<double>> alphas, std::uint64_t counts,
           std::uint64_t seed) {
            py::dict cols;
            std::vector<double> a, vt, vs, arg, crit;
            for (const auto &r : experiment::run_figure2(make_spec(theta, purity, alphas, counts, seed))) {
                a.push_back(r.alpha);
                vt.push_back(r.v_theory);
                vs.push_back(r.v_sampled);
                arg.push_back(r.arg);
                crit.push_back(r.criterion);
            }
            cols["alpha_rad"] = a;
            cols["V_theory"] = vt;
            cols["V_sampled"] = vs;
            cols["arg_rad"] = arg;
            cols["criterion"] = crit;
            return cols;
        },
        py::arg("theta"), py::arg("purity"), py::arg("alpha_grid") = py::none(),
        py::arg("counts") = experiment::kDefaultCounts, py::arg("seed") = experiment::kDefaultSeed);
    m.def(
        "run_figure3",
        [](double theta, double purity, std::optional<std::vector<double>> alphas) {
            py::dict cols;
            std::vector<double> a, ex, po, wa;
            for (const auto &r : experiment::run_figure3(make_spec(theta, purity, alphas, 1, 0))) {
                a.push_back(r.alpha);
                ex.push_back(r.wv_exact);
                po.push_back(r.wv_polar);
                wa.push_back(r.wv_weakapprox);
            }
            cols["alpha_rad"] = a;
            cols["wv_exact"] = ex;
            cols["wv_polar"] = po;
            cols["wv_weakapprox"] = wa;
            return cols;
        },
        py::arg("theta"), py::arg("purity"), py::arg("alpha_grid") = py::none());
    m.def(
        "run_montecarlo",
        [](double v, std::uint64_t counts, std::uint64_t trials, std::uint64_t seed) {
            auto s = experiment::run_montecarlo(v, counts, trials, seed);
            std::vector<double> v_hat;
            for (const auto &r : s.rows) {
                v_hat.push_back(r.v_hat);
            }
            py::dict d;
            d["mean"] = s.mean;
            d["stddev"] = s.stddev;
            d["sigma_v"] = s.sigma_v;
            d["snr"] = s.snr;
            d["v_hat"] = v_hat;
            return d;
        },
        py::arg("visibility") = 0.6, py::arg("counts") = 10000, py::arg("trials") = 1000,
        py::arg("seed") = experiment::kDefaultSeed);

    m.def(
        "verify",
        [](std::uint64_t trials, std::uint64_t seed) {
            py::list out;
            for (const auto &r : verify::run_verification(trials, seed)) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["max_error"] = r.max_error;
                d["tolerance"] = r.tolerance;
                d["counterexample"] = r.counterexample;
                out.append(d);
            }
            return out;
        },
        py::arg("trials") = verify::kDefaultTrials, py::arg("seed") = 2024);

    m.attr("DEFAULT_SEED") = experiment::kDefaultSeed;
    m.attr("__version__") = "0.1.0";
}
