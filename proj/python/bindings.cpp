#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aptx/activation.hpp"
#include "aptx/analysis.hpp"
#include "aptx/calculus.hpp"
#include "aptx/cost_model.hpp"
#include "aptx/verify.hpp"
#include "aptx/version.hpp"

namespace py = pybind11;
using namespace aptx;

namespace {

ActivationSpec make_spec(const std::string& kind, double alpha, double beta,
                         double gamma, double rho, double slope,
                         double elu_alpha) {
  ActivationSpec spec;
  spec.kind = act_kind_from_string(kind);
  spec.aptx_alpha = alpha;
  spec.aptx_beta = beta;
  spec.aptx_gamma = gamma;
  spec.swish_rho = rho;
  spec.leak_alpha = slope;
  spec.elu_alpha = elu_alpha;
  spec.validate();
  return spec;
}

using DoubleArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

DoubleArray batch_values(const ActivationSpec& spec, DoubleArray xs) {
  auto in = xs.unchecked<1>();
  DoubleArray out(in.shape(0));
  auto res = out.mutable_unchecked<1>();
  eval_batch_into(spec,
                  std::span<const double>(in.data(0), std::size_t(in.shape(0))),
                  std::span<double>(res.mutable_data(0),
                                    std::size_t(in.shape(0))));
  return out;
}

DoubleArray batch_grads(const ActivationSpec& spec, DoubleArray xs) {
  auto in = xs.unchecked<1>();
  DoubleArray out(in.shape(0));
  auto res = out.mutable_unchecked<1>();
  grad_batch_into(spec,
                  std::span<const double>(in.data(0), std::size_t(in.shape(0))),
                  std::span<double>(res.mutable_data(0),
                                    std::size_t(in.shape(0))));
  return out;
}

py::dict counts_dict(const OpCounts& c) {
  py::dict d;
  d["tanh"] = c.tanh_calls;
  d["exp"] = c.exp_calls;
  d["log"] = c.log_calls;
  d["div"] = c.divisions;
  d["mul"] = c.multiplications;
  d["add"] = c.additions;
  d["cmp"] = c.comparisons;
  d["transcendental_total"] = c.transcendental_total();
  return d;
}

py::dict half_dict(const HalfDomainMetrics& m) {
  py::dict d;
  d["n_samples"] = m.n_samples;
  d["max_abs_err"] = m.max_abs_err;
  d["arg_max_err"] = m.arg_max_err;
  d["rmse"] = m.rmse;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "activation-function kernels with verified analytic derivatives";
  m.attr("__version__") = kToolVersion;

  py::class_<ActivationSpec>(m, "ActivationSpec")
      .def_readonly("alpha", &ActivationSpec::aptx_alpha)
      .def_readonly("beta", &ActivationSpec::aptx_beta)
      .def_readonly("gamma", &ActivationSpec::aptx_gamma)
      .def_readonly("rho", &ActivationSpec::swish_rho)
      .def_property_readonly(
          "kind", [](const ActivationSpec& s) { return to_string(s.kind); })
      .def("__repr__", [](const ActivationSpec& s) { return s.label(); });

  m.def("spec", &make_spec, py::arg("kind"), py::arg("alpha") = 1.0,
        py::arg("beta") = 1.0, py::arg("gamma") = 0.5, py::arg("rho") = 1.0,
        py::arg("slope") = 0.05, py::arg("elu_alpha") = 2.0,
        "build an activation spec by kind name");

  m.def("eval", [](const ActivationSpec& s, double x) { return eval(s, x); },
        py::arg("spec"), py::arg("x"));
  m.def("eval_grad",
        [](const ActivationSpec& s, double x) {
          ValueGrad vg = eval_grad(s, x);
          return py::make_tuple(vg.value, vg.grad);
        },
        py::arg("spec"), py::arg("x"), "returns (value, derivative)");
  m.def("eval_batch", &batch_values, py::arg("spec"), py::arg("xs"));
  m.def("grad_batch", &batch_grads, py::arg("spec"), py::arg("xs"));
  m.def("mish_grad_closed_form", &mish_grad_closed_form, py::arg("x"));

  m.def("find_min",
        [](const ActivationSpec& s, double lo, double hi, double tol) {
          MinResult r =
              find_min([&](double x) { return eval(s, x); }, lo, hi, tol);
          py::dict d;
          d["argmin"] = r.argmin;
          d["min_value"] = r.min_value;
          d["iterations"] = r.iterations;
          return d;
        },
        py::arg("spec"), py::arg("lo"), py::arg("hi"),
        py::arg("tol") = 1e-10);

  m.def("compare",
        [](const ActivationSpec& a, const ActivationSpec& b, double lo,
           double hi, double step) {
          ErrorReport r = compare(a, b, lo, hi, step);
          py::dict d;
          d["n_samples"] = r.n_samples;
          d["max_abs_err"] = r.max_abs_err;
          d["arg_max_err"] = r.arg_max_err;
          d["rmse"] = r.rmse;
          d["negative"] = half_dict(r.negative);
          d["positive"] = half_dict(r.positive);
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("lo") = -10.0,
        py::arg("hi") = 10.0, py::arg("step") = 1e-3);

  m.def("count_ops",
        [](const ActivationSpec& s) {
          CostProfile p = count_ops(s);
          py::dict d;
          d["forward"] = counts_dict(p.forward);
          d["derivative"] = counts_dict(p.derivative);
          d["fused"] = counts_dict(p.fused);
          return d;
        },
        py::arg("spec"));

  m.def("verify",
        [](const std::string& filter) {
          VerifyOptions opts;
          opts.filter = filter;
          VerifyReport rep = run_verify(opts);
          py::list out;
          for (const CheckResult& c : rep.checks)
            out.append(py::make_tuple(c.name, c.passed, c.measured));
          return out;
        },
        py::arg("filter") = "",
        "run the invariant suite; returns (name, passed, measured) tuples");
}
