// SPDX-License-Identifier: Apache-2.0
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coarray/experiments.hpp"
#include "coarray/hybrid.hpp"
#include "coarray/imaging.hpp"
#include "coarray/io.hpp"

namespace py = pybind11;
using namespace coarray;

namespace {

QuantizationSpec bits_of(int b) {
  return b <= 0 ? QuantizationSpec::infinite() : QuantizationSpec::finite(b);
}

std::vector<std::array<int, 2>> positions_of(const ArrayGeometry& g) {
  std::vector<std::array<int, 2>> out;
  for (const auto& p : g.positions) out.push_back(p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_coarray_bf, m) {
  m.doc() = "Sparse-array beamforming weight synthesis and coherent imaging";

  py::class_<ArrayGeometry>(m, "ArrayGeometry")
      .def_property_readonly("positions", &positions_of)
      .def_readonly("dim", &ArrayGeometry::dim)
      .def("size", &ArrayGeometry::size)
      .def_property_readonly("label", [](const ArrayGeometry& g) { return to_string(g.label); });

  m.def("make_ula", &make_ula, py::arg("n"));
  m.def("make_mra", &make_mra, py::arg("n"));
  m.def("make_ura", &make_ura, py::arg("side"));
  m.def("make_boundary", &make_boundary, py::arg("side"));
  m.def(
      "make_custom",
      [](const std::vector<std::array<int, 2>>& pos, int dim) {
        std::vector<LatticePoint> pts(pos.begin(), pos.end());
        return make_custom(std::move(pts), dim);
      },
      py::arg("positions"), py::arg("dim") = 1);

  py::class_<SumCoarray>(m, "SumCoarray")
      .def_property_readonly("support",
                             [](const SumCoarray& ca) {
                               std::vector<std::array<int, 2>> out(ca.support.begin(),
                                                                   ca.support.end());
                               return out;
                             })
      .def_readonly("multiplicity", &SumCoarray::multiplicity)
      .def_readonly("dim", &SumCoarray::dim)
      .def("n_sigma", &SumCoarray::n_sigma);

  py::class_<SelectionMatrix>(m, "SelectionMatrix")
      .def_readonly("row_of_col", &SelectionMatrix::row_of_col)
      .def_readonly("n_rows", &SelectionMatrix::n_rows)
      .def_readonly("n_tx", &SelectionMatrix::n_tx)
      .def_readonly("n_rx", &SelectionMatrix::n_rx)
      .def("to_dense", &SelectionMatrix::to_dense)
      .def("apply", &SelectionMatrix::apply)
      .def("apply_adjoint", &SelectionMatrix::apply_adjoint);

  m.def("sum_coarray", &sum_coarray, py::arg("tx"), py::arg("rx"));
  m.def("selection_matrix", &selection_matrix, py::arg("tx"), py::arg("rx"), py::arg("coarray"));
  m.def("q_lower_bound", &q_lower_bound, py::arg("n_t"), py::arg("n_r"), py::arg("n_sigma"));

  m.def(
      "quantize_phase",
      [](const RMat& phases, int b) { return quantize_phase(phases, bits_of(b)); },
      py::arg("phases"), py::arg("b"));

  py::class_<DigitalBank>(m, "DigitalBank")
      .def(py::init([](const CMat& wt, const CMat& wr) {
             DigitalBank bank;
             bank.wt = wt;
             bank.wr = wr;
             return bank;
           }),
           py::arg("wt"), py::arg("wr"))
      .def_readonly("wt", &DigitalBank::wt)
      .def_readonly("wr", &DigitalBank::wr)
      .def("q", &DigitalBank::q)
      .def("effective", &DigitalBank::effective);

  py::class_<HybridBank>(m, "HybridBank")
      .def_readonly("ft_phase", &HybridBank::ft_phase)
      .def_readonly("fr_phase", &HybridBank::fr_phase)
      .def_readonly("ct", &HybridBank::ct)
      .def_readonly("cr", &HybridBank::cr)
      .def_readonly("m_t", &HybridBank::m_t)
      .def_readonly("m_r", &HybridBank::m_r)
      .def_property_readonly("bits", [](const HybridBank& b) { return b.bits.bits; })
      .def("q", &HybridBank::q)
      .def("ft", &HybridBank::ft)
      .def("fr", &HybridBank::fr)
      .def("collapse", &HybridBank::collapse)
      .def("effective", &HybridBank::effective);

  py::class_<PsfOperator>(m, "PsfOperator")
      .def(py::init<CMat, int, int>(), py::arg("a_eff"), py::arg("n_t"), py::arg("n_r"))
      .def(py::init<SelectionMatrix>(), py::arg("selection"))
      .def("n_t", &PsfOperator::n_t)
      .def("n_r", &PsfOperator::n_r)
      .def("out_size", &PsfOperator::out_size)
      .def("realized", &PsfOperator::realized, py::arg("wt"), py::arg("wr"));

  m.def(
      "altmin",
      [](const PsfOperator& op, const CVec& target, int q, int k_max, double eps_rel,
         double alpha) {
        SolverConfig cfg;
        cfg.k_max = k_max;
        cfg.eps_rel = eps_rel;
        cfg.alpha = alpha;
        AltminResult r = altmin(op, target, q, cfg);
        return py::make_tuple(r.bank, r.final_error, r.error_trace);
      },
      py::arg("op"), py::arg("target"), py::arg("q"), py::arg("k_max") = 100,
      py::arg("eps_rel") = 1e-16, py::arg("alpha") = 1e-9);

  m.def(
      "greedy",
      [](const PsfOperator& op, const CVec& target, int m_t, int m_r, int b, int q, int k_max,
         int refine_k_max, double alpha) {
        GreedyConfig cfg;
        cfg.altmin.k_max = k_max;
        cfg.altmin.alpha = alpha;
        cfg.refine_k_max = refine_k_max;
        GreedyResult r = greedy_main(op, target, m_t, m_r, bits_of(b), q, cfg);
        return py::make_tuple(r.bank, r.final_error, r.error_trace);
      },
      py::arg("op"), py::arg("target"), py::arg("m_t"), py::arg("m_r"), py::arg("b"),
      py::arg("q"), py::arg("k_max") = 100, py::arg("refine_k_max") = 10,
      py::arg("alpha") = 1e-9);

  m.def(
      "greedy_sub",
      [](const CVec& w, int m, int b, double alpha) {
        GreedySubResult r = greedy_sub(w, m, bits_of(b), alpha);
        return py::make_tuple(r.f_phase, r.c);
      },
      py::arg("w"), py::arg("m"), py::arg("b"), py::arg("alpha") = 1e-9);

  m.def("svd_factorize", &svd_factorize, py::arg("w"), py::arg("q") = -1);
  m.def("thm1_hybrid_cont", &thm1_hybrid_cont, py::arg("bank"));
  m.def("thm2_hybrid_1bit", &thm2_hybrid_1bit, py::arg("w"));
  m.def("thm3_analog_cont", &thm3_analog_cont, py::arg("bank"));
  m.def("thm4_analog_1bit", &thm4_analog_1bit, py::arg("w"));
  m.def("lemma3_flatten", &lemma3_flatten, py::arg("bank"));
  m.def(
      "lemma1_factor",
      [](const CVec& w) {
        TwoPhasorFactor f = lemma1_factor(w);
        return py::make_tuple(f.phases, f.c);
      },
      py::arg("w"));
  m.def(
      "lemma2_analog",
      [](const CVec& w) {
        AnalogFactor f = lemma2_analog(w);
        return py::make_tuple(f.phases, f.c, f.value);
      },
      py::arg("w"));

  m.def(
      "target_stochastic",
      [](int n_sigma, std::uint64_t seed) { return target_stochastic(n_sigma, seed).values; },
      py::arg("n_sigma"), py::arg("seed"));
  m.def("chebyshev_window", &chebyshev_window, py::arg("n"), py::arg("attenuation_db"));
  m.def(
      "coarray_psf",
      [](const SumCoarray& ca, const CVec& w_sigma, int points) {
        DirectionGrid grid = uniform_sine_grid(points);
        CMat a = coarray_steering(ca, grid);
        RVec u(points);
        for (int i = 0; i < points; ++i) u[i] = grid.directions[i].u;
        CVec psf = a.transpose() * w_sigma;
        return py::make_tuple(u, psf);
      },
      py::arg("coarray"), py::arg("w_sigma"), py::arg("points") = 501,
      "PSF samples of a co-array weighting on a uniform sine grid");

  m.def(
      "run_experiment",
      [](const std::string& config_json) {
        ExperimentConfig cfg = experiment_config_from_json(json::parse(config_json));
        ResultTable table = run_experiment(cfg);
        return py::make_tuple(table.columns, table.rows);
      },
      py::arg("config_json"), "Run a sweep from a JSON config string");
}
