// Python module cuntzpos._core. Matrices cross the boundary as complex
// numpy arrays; reports come back as dicts shaped like the CLI JSON.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuntzpos/certificate.hpp"
#include "cuntzpos/dilation.hpp"
#include "cuntzpos/fock.hpp"
#include "cuntzpos/io.hpp"
#include "cuntzpos/quotient.hpp"
#include "cuntzpos/words.hpp"

namespace py = pybind11;
using namespace cuntzpos;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

CMatrix to_cmatrix(const CArray& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-d array");
  const auto r = static_cast<std::size_t>(a.shape(0));
  const auto c = static_cast<std::size_t>(a.shape(1));
  std::vector<cplx> data(a.data(), a.data() + r * c);
  return CMatrix(r, c, std::move(data));
}

CArray to_array(const CMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

HermSElement element(const CArray& a0, const std::vector<CArray>& a) {
  std::vector<CMatrix> gens;
  for (const auto& x : a) gens.push_back(to_cmatrix(x));
  return HermSElement(HermMatrix(to_cmatrix(a0)), std::move(gens));
}

RowContraction contraction(const std::vector<CArray>& a) {
  std::vector<CMatrix> ms;
  for (const auto& x : a) ms.push_back(to_cmatrix(x));
  return RowContraction(std::move(ms));
}

/// nlohmann::json -> Python objects, turning [re, im] matrices into arrays
/// for the known matrix fields.
py::object to_python(const io::Json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& x : j) out.append(to_python(x));
    return out;
  }
  py::dict out;
  for (const auto& [k, v] : j.items()) {
    if (k == "B" || k == "Y") {
      out[py::str(k)] = to_array(io::matrix_from_json(v, k));
    } else if (k == "vector") {
      std::vector<cplx> vec;
      for (const auto& x : v) vec.emplace_back(x[0].get<double>(), x[1].get<double>());
      CArray arr(std::vector<py::ssize_t>{static_cast<py::ssize_t>(vec.size())});
      std::copy(vec.begin(), vec.end(), arr.mutable_data());
      out[py::str(k)] = arr;
    } else {
      out[py::str(k)] = to_python(v);
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Positivity certificates for Hermitian elements of M_p(S_n)";

  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<NotContractionError>(m, "NotContractionError", PyExc_ValueError);

  m.def(
      "decide_positivity",
      [](const CArray& a0, const std::vector<CArray>& a, std::uint64_t seed, int max_iter, double tol, int d_max) {
        const auto e = element(a0, a);
        SolverOptions opts;
        opts.seed = seed;
        opts.max_iter = max_iter;
        opts.cert_rel = tol;
        opts.fock_depth = d_max;
        py::gil_scoped_release release;
        const auto v = decide_positivity(e, opts);
        py::gil_scoped_acquire acquire;
        return to_python(io::verdict_to_json(e, v, opts));
      },
      py::arg("A0"), py::arg("A"), py::arg("seed") = 0, py::arg("max_iter") = 20000, py::arg("tol") = 1e-9,
      py::arg("d_max") = -1,
      "Verdict dict: 'verdict' in {positive, not_positive, undecided}, optional 'B', 'Y', 'fock_witness', "
      "and 'diagnostics'. Certificates are re-verified before they are returned.");

  m.def(
      "criterion_matrix", [](const CArray& a0, const std::vector<CArray>& a) {
        return to_array(criterion_matrix(element(a0, a)).mat());
      },
      py::arg("A0"), py::arg("A"));

  m.def(
      "verify_primal",
      [](const CArray& a0, const std::vector<CArray>& a, const CArray& b) {
        const auto e = element(a0, a);
        return verify_primal(e, HermMatrix(to_cmatrix(b)));
      },
      py::arg("A0"), py::arg("A"), py::arg("B"));

  m.def(
      "verify_dual",
      [](const CArray& a0, const std::vector<CArray>& a, const CArray& y) {
        return verify_dual(element(a0, a), HermMatrix(to_cmatrix(y)));
      },
      py::arg("A0"), py::arg("A"), py::arg("Y"));

  m.def("scalar_law", &scalar_law, py::arg("a0"), py::arg("alpha"));

  m.def(
      "compress_element",
      [](const CArray& a0, const std::vector<CArray>& a, int depth) {
        const auto e = element(a0, a);
        return to_array(compress_element(e, TruncatedFock(e.n, depth)).mat());
      },
      py::arg("A0"), py::arg("A"), py::arg("depth"));

  m.def(
      "fock_min_eig",
      [](const CArray& a0, const std::vector<CArray>& a, int depth) { return fock_min_eig(element(a0, a), depth); },
      py::arg("A0"), py::arg("A"), py::arg("depth"));

  m.def(
      "creation_matrix", [](int i, int n, int depth) { return to_array(creation_matrix(i, TruncatedFock(n, depth)).to_dense()); },
      py::arg("i"), py::arg("n"), py::arg("depth"));

  m.def(
      "dilate",
      [](const std::vector<CArray>& a, int depth) {
        const auto d = dilate(contraction(a), depth);
        py::list v;
        for (const auto& x : d.v) v.append(to_array(x));
        py::dict out;
        out["V"] = v;
        out["interior_dim"] = d.interior_dim;
        out["compression_residual"] = d.compression_residual;
        out["isometry_residual"] = d.isometry_residual;
        return out;
      },
      py::arg("A"), py::arg("depth") = 4);

  m.def(
      "ucp_evaluate",
      [](const CArray& a0, const std::vector<CArray>& a, const std::vector<CArray>& b) {
        return to_array(ucp_evaluate(element(a0, a), contraction(b)).mat());
      },
      py::arg("A0"), py::arg("A"), py::arg("B"));

  m.def(
      "choi_min_eig",
      [](const std::vector<std::vector<CArray>>& images) {
        std::vector<std::vector<CMatrix>> grid;
        for (const auto& row : images) {
          grid.emplace_back();
          for (const auto& x : row) grid.back().push_back(to_cmatrix(x));
        }
        return choi_min_eig(grid);
      },
      py::arg("images"));

  m.def("psi_choi_check", [](int n, int depth) { return psi_choi_check(TruncatedFock(n, depth)); }, py::arg("n"),
        py::arg("depth"));

  m.def(
      "words_mul",
      [](const std::string& x, const std::string& y, int n) {
        return render(mul(parse_element(x, n), parse_element(y, n)));
      },
      py::arg("x"), py::arg("y"), py::arg("n"));
}
