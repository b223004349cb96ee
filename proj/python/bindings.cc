// Copyright 2026 The stabopt Authors
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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stabopt/channel.h"
#include "stabopt/cli.h"
#include "stabopt/cyclic.h"
#include "stabopt/errors.h"
#include "stabopt/fer.h"
#include "stabopt/pauli.h"
#include "stabopt/search.h"

namespace py = pybind11;
using namespace stabopt;

namespace {

ErrorSetCache &shared_cache() {
    static ErrorSetCache cache;
    return cache;
}

py::dict estimate_dict(const FerEstimate &e) {
    py::dict d;
    d["value"] = e.value;
    d["kind"] = kind_name(e.kind);
    d["residual"] = e.residual;
    d["bound"] = e.bound;
    d["alpha"] = e.alpha;
    d["syndromes"] = e.syndromes;
    d["errors"] = e.error_count;
    d["complete"] = e.complete;
    return d;
}

py::dict structure_dict(const StructureReport &r) {
    py::dict d;
    d["css"] = r.is_css;
    d["cssy"] = r.is_cssy;
    d["dual_containing_css"] = r.is_dual_containing_css;
    d["linear"] = r.is_linear;
    d["weight4"] = r.has_weight4_rep;
    d["full_support"] = r.full_support;
    return d;
}

std::vector<ChannelSpec> channel_list(const std::vector<std::string> &items) {
    std::vector<ChannelSpec> out;
    for (const auto &item : items) {
        auto more = parse_channel_list(item);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_stabopt, m) {
    m.doc() = "Stabilizer code construction, evaluation and search on asymmetric Pauli channels";
    m.attr("__version__") = kVersion;

    py::register_exception<InfeasibleConstraint>(m, "InfeasibleConstraint");
    py::register_exception<MutationFailed>(m, "MutationFailed");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<UnsatisfiableChannel>(m, "UnsatisfiableChannel");

    py::class_<PauliVector>(m, "PauliVector")
        .def(py::init(&PauliVector::from_string), py::arg("text"))
        .def_property_readonly("n", [](const PauliVector &p) { return p.n; })
        .def_property_readonly("weight", &PauliVector::weight)
        .def("__str__", &PauliVector::str)
        .def("__repr__", [](const PauliVector &p) { return "PauliVector('" + p.str() + "')"; })
        .def("__mul__", [](const PauliVector &a, const PauliVector &b) { return a * b; })
        .def("commutes_with", [](const PauliVector &a, const PauliVector &b) { return symplectic_product(a, b) == 0; })
        .def("to_gf4", [](const PauliVector &p) { return to_gf4(p).str(); })
        .def(py::self == py::self);

    py::class_<Stabilizer>(m, "Stabilizer")
        .def(py::init([](const std::string &text) { return Stabilizer::parse(text); }), py::arg("generators"))
        .def_static("from_cyclic_word", &Stabilizer::from_cyclic_word, py::arg("word"))
        .def_property_readonly("n", &Stabilizer::n)
        .def_property_readonly("k", &Stabilizer::k)
        .def_property_readonly("generators", &Stabilizer::to_strings)
        .def("syndrome", [](const Stabilizer &s, const std::string &e) {
            return s.syndrome_of(PauliVector::from_string(e)).bits;
        })
        .def("contains", [](const Stabilizer &s, const std::string &e) {
            return s.in_stabilizer(PauliVector::from_string(e));
        })
        .def("permuted", [](const Stabilizer &s, const std::vector<int> &perm) { return s.permuted(perm); })
        .def("__str__", &Stabilizer::str)
        .def("__repr__", [](const Stabilizer &s) { return "Stabilizer('" + s.str() + "')"; });

    m.def("distance", &distance, py::arg("stabilizer"));
    m.def("classify", [](const Stabilizer &s) { return structure_dict(classify_structure(s)); }, py::arg("stabilizer"));
    m.def("permutation_equivalent", &permutation_equivalent, py::arg("a"), py::arg("b"));

    py::class_<PauliChannel>(m, "PauliChannel")
        .def_readonly("p_i", &PauliChannel::p_i)
        .def_readonly("p_x", &PauliChannel::p_x)
        .def_readonly("p_y", &PauliChannel::p_y)
        .def_readonly("p_z", &PauliChannel::p_z)
        .def("__repr__", [](const PauliChannel &c) {
            std::ostringstream o;
            o.precision(17);
            o << "PauliChannel(p_i=" << c.p_i << ", p_x=" << c.p_x << ", p_y=" << c.p_y << ", p_z=" << c.p_z << ")";
            return o.str();
        });
    m.def("resolve_channel", [](const std::string &spec) { return resolve(ChannelSpec::parse(spec)); },
          py::arg("spec"));
    m.def("channel_list", [](const std::string &text) {
        std::vector<std::string> out;
        for (const auto &s : parse_channel_list(text)) {
            out.push_back(s.str());
        }
        return out;
    }, py::arg("text"));

    m.def("enumerate_cyclic", [](int n, int k) {
        py::list out;
        for (const auto &c : enumerate_cyclic(n, k)) {
            py::dict d;
            d["p"] = c.p.to_bitstring();
            d["q"] = c.q.to_bitstring();
            d["r"] = c.r.to_bitstring();
            d["stabilizer"] = to_stabilizer(c);
            out.append(d);
        }
        return out;
    }, py::arg("n"), py::arg("k"));

    m.def("fer", [](const Stabilizer &s, const std::string &channel, const std::string &kind, double bound) {
        FerEstimate e;
        {
            py::gil_scoped_release release;
            e = fer_adaptive(s, ChannelSpec::parse(channel), parse_kind(kind), bound, shared_cache());
        }
        return estimate_dict(e);
    }, py::arg("stabilizer"), py::arg("channel"), py::arg("kind") = "map", py::arg("bound") = 0.01);

    m.def("geometric_mean_fer", [](const Stabilizer &s, const std::vector<std::string> &channels,
                                   const std::string &kind, double bound) {
        auto specs = channel_list(channels);
        GeometricMeanFer g;
        {
            py::gil_scoped_release release;
            g = geometric_mean_fer(s, specs, parse_kind(kind), bound, shared_cache());
        }
        py::dict d;
        d["value"] = g.value;
        d["bound"] = g.bound;
        py::list per;
        for (std::size_t i = 0; i < specs.size(); i++) {
            py::dict e = estimate_dict(g.per_channel[i]);
            e["channel"] = specs[i].str();
            per.append(e);
        }
        d["channels"] = per;
        return d;
    }, py::arg("stabilizer"), py::arg("channels"), py::arg("kind") = "map", py::arg("bound") = 0.01);

    m.def("random_stabilizer", [](int n, int k, const std::string &constraint, std::uint64_t seed) {
        Rng rng(seed);
        return random_stabilizer(n, k, parse_constraint(constraint), rng);
    }, py::arg("n"), py::arg("k"), py::arg("constraint") = "none", py::arg("seed") = 1);

    m.def("hill_climb", [](int n, int k, const std::vector<std::string> &channels, int restarts, int iterations,
                           const std::string &constraint, const std::string &mutation, std::uint64_t seed,
                           double bound, int threads) {
        SearchConfig c;
        c.n = n;
        c.k = k;
        c.channels = channel_list(channels);
        c.restarts = restarts;
        c.iterations = iterations;
        c.constraint = parse_constraint(constraint);
        c.mutation = parse_mutation(mutation);
        c.seed = seed;
        c.target_bound = bound;
        c.threads = threads;
        c.record_trace = true;
        SearchResult r = [&] {
            py::gil_scoped_release release;
            return hill_climb(c, shared_cache());
        }();
        py::dict d;
        d["best"] = r.best_stabilizer;
        d["objective_seo"] = r.objective_seo;
        d["final_fer_map"] = r.final_fer_map;
        d["final_fer_map_bound"] = r.final_fer_map_bound;
        d["trace"] = r.trace;
        std::vector<std::vector<double>> traces;
        for (const auto &inst : r.instances) {
            traces.push_back(inst.objective_trace);
        }
        d["instance_traces"] = traces;
        return d;
    }, py::arg("n"), py::arg("k"), py::arg("channels"), py::arg("restarts") = 10, py::arg("iterations") = 100,
       py::arg("constraint") = "none", py::arg("mutation") = "combined", py::arg("seed") = 1,
       py::arg("bound") = 0.01, py::arg("threads") = 0);

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
