#include "cuntzpos/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace cuntzpos::io {

namespace {

cplx scalar_from_json(const Json& j, const std::string& what) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return cplx(j[0].get<double>(), j[1].get<double>());
  }
  throw InputError(what + ": entries must be [re, im] pairs or real numbers");
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<CMatrix> matrix_list(const Json& j, std::size_t p, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of matrices");
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(matrix_from_json(j[k], p, p, what + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::vector<cplx>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back({x.real(), x.imag()});
  return out;
}

Json to_json(const SparseOp& op) {
  Json entries = Json::array();
  for (const auto& e : op.entries) entries.push_back({e.row, e.col, {e.value.real(), e.value.imag()}});
  return Json{{"dim", op.dim}, {"entries", std::move(entries)}};
}

CMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InputError(what + " must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw InputError(what + " must be a nonempty array of rows");
  return matrix_from_json(j, rows, j[0].size(), what);
}

CMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows) throw InputError(what + " must be " + shape);
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError(what + " must be " + shape);
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = scalar_from_json(j[i][k], what);
      if (!std::isfinite(m(i, k).real()) || !std::isfinite(m(i, k).imag())) {
        throw InputError(what + ": non-finite entry");
      }
    }
  }
  return m;
}

void InstanceOptions::apply(SolverOptions& opts) const {
  if (tol) opts.cert_rel = *tol;
  if (max_iter) opts.max_iter = *max_iter;
  if (seed) opts.seed = *seed;
  if (d_max) opts.fock_depth = *d_max;
}

Instance parse_instance(const Json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  const int n = int_field(j, "n");
  const int p = int_field(j, "p");
  if (n < 2) throw InputError("n must be >= 2");
  if (p < 1) throw InputError("p must be >= 1");
  if (!j.contains("A0")) throw InputError("missing field \"A0\"");
  if (!j.contains("A")) throw InputError("missing field \"A\"");
  const auto pp = static_cast<std::size_t>(p);
  const CMatrix a0 = matrix_from_json(j.at("A0"), pp, pp, "A0");
  auto a = matrix_list(j.at("A"), pp, "A");
  if (a.size() != static_cast<std::size_t>(n)) {
    throw InputError("A holds " + std::to_string(a.size()) + " matrices, n = " + std::to_string(n));
  }
  Instance out;
  try {
    out.element = HermSElement(HermMatrix(a0), std::move(a));
  } catch (const ShapeError& err) {
    throw InputError(err.what());
  }
  if (j.contains("options")) {
    const Json& o = j.at("options");
    if (!o.is_object()) throw InputError("options must be an object");
    try {
      if (o.contains("tol")) {
        out.options.tol = o.at("tol").get<double>();
        if (!(*out.options.tol > 0.0)) throw InputError("options.tol must be positive");
      }
      if (o.contains("max_iter")) {
        out.options.max_iter = o.at("max_iter").get<int>();
        if (*out.options.max_iter < 0) throw InputError("options.max_iter must be >= 0");
      }
      if (o.contains("seed")) out.options.seed = o.at("seed").get<std::uint64_t>();
      if (o.contains("d_max")) {
        out.options.d_max = o.at("d_max").get<int>();
        if (*out.options.d_max < 0) throw InputError("options.d_max must be >= 0");
      }
    } catch (const Json::exception& err) {
      throw InputError(std::string("options: ") + err.what());
    }
  }
  return out;
}

Json to_json(const HermSElement& e) {
  Json a = Json::array();
  for (const auto& m : e.a) a.push_back(to_json(m));
  return Json{{"n", e.n}, {"p", e.p}, {"A0", to_json(e.a0.mat())}, {"A", std::move(a)}};
}

Json verdict_to_json(const HermSElement& e, const Verdict& v, const SolverOptions& opts) {
  Json out;
  const bool primal_ok = v.primal && verify_primal(e, v.primal->b, cert_tolerance(e, opts.cert_rel));
  const bool dual_ok = v.dual && verify_dual(e, v.dual->y);
  const bool fock_ok = v.fock && verify_fock_witness(e, *v.fock, opts.fock_tol);
  VerdictKind kind = VerdictKind::Undecided;
  if (v.kind == VerdictKind::Positive && primal_ok) kind = VerdictKind::Positive;
  if (v.kind == VerdictKind::NotPositive && (dual_ok || fock_ok)) kind = VerdictKind::NotPositive;
  out["verdict"] = to_string(kind);
  if (kind == VerdictKind::Positive) {
    out["B"] = to_json(v.primal->b.mat());
    out["eigmin"] = v.primal->achieved_eigmin;
  }
  if (kind == VerdictKind::NotPositive && dual_ok) {
    out["Y"] = to_json(v.dual->y.mat());
    out["pairing"] = v.dual->pairing;
  }
  if (kind == VerdictKind::NotPositive && fock_ok) {
    out["fock_witness"] = Json{{"depth", v.fock->depth}, {"eigmin", v.fock->eigmin}, {"vector", to_json(v.fock->vector)}};
  }
  const auto& d = v.diagnostics;
  out["diagnostics"] = Json{{"best_primal_eigmin", d.best_primal_eigmin},
                            {"primal_iterations", d.primal_iterations},
                            {"best_dual_pairing", d.best_dual_pairing},
                            {"dual_iterations", d.dual_iterations},
                            {"fock_depth_scanned", d.fock_depth_scanned},
                            {"cert_tolerance", cert_tolerance(e, opts.cert_rel)},
                            {"dual_tolerance", dual_tolerance(e)}};
  return out;
}

CsvRow csv_row(const std::string& id, const HermSElement& e, const Verdict& v, double wall_ms) {
  CsvRow row;
  row.instance_id = id;
  row.n = e.n;
  row.p = e.p;
  row.verdict = to_string(v.kind);
  row.eigmin_primal = v.primal ? v.primal->achieved_eigmin : v.diagnostics.best_primal_eigmin;
  if (v.dual) row.pairing_dual = v.dual->pairing;
  if (v.fock) row.fock_depth = v.fock->depth;
  row.wall_ms = wall_ms;
  return row;
}

std::string csv_header() { return "instance_id,n,p,verdict,eigmin_primal,pairing_dual,fock_depth,wall_ms"; }

std::string to_csv(const CsvRow& row) {
  std::string id = row.instance_id;
  if (id.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : id) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    id = quoted + "\"";
  }
  std::string out = id + "," + std::to_string(row.n) + "," + std::to_string(row.p) + "," + row.verdict + ",";
  if (row.eigmin_primal) out += number(*row.eigmin_primal);
  out += ",";
  if (row.pairing_dual) out += number(*row.pairing_dual);
  out += ",";
  if (row.fock_depth) out += std::to_string(*row.fock_depth);
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", row.wall_ms);
  return out + "," + ms;
}

RowContraction parse_row_contraction(const Json& j) {
  if (!j.is_object() || !j.contains("A")) throw InputError("row contraction file needs an \"A\" field");
  const Json& list = j.at("A");
  if (!list.is_array() || list.empty()) throw InputError("A must be a nonempty array of matrices");
  const CMatrix first = matrix_from_json(list[0], "A[0]");
  if (first.rows() != first.cols()) throw InputError("A[0] must be square");
  auto a = matrix_list(list, first.rows(), "A");
  if (j.contains("n") && int_field(j, "n") != static_cast<int>(a.size())) throw InputError("n disagrees with A");
  if (j.contains("p") && int_field(j, "p") != static_cast<int>(first.rows())) throw InputError("p disagrees with A");
  return RowContraction(std::move(a));
}

Json to_json(const DilationResult& d) {
  Json v = Json::array();
  for (const auto& m : d.v) v.push_back(to_json(m));
  return Json{{"dim", d.dim()},
              {"p", d.p},
              {"defect_dim", d.defect_dim},
              {"fock_dim", d.fock_dim},
              {"interior_dim", d.interior_dim},
              {"V", std::move(v)},
              {"residuals", {{"compression", d.compression_residual}, {"isometry_interior", d.isometry_residual}}}};
}

std::vector<std::vector<CMatrix>> parse_choi_images(const Json& j) {
  if (!j.is_object() || !j.contains("images")) throw InputError("Choi file needs an \"images\" field");
  const Json& grid = j.at("images");
  if (!grid.is_array() || grid.empty()) throw InputError("images must be a nonempty square grid");
  const std::size_t k = grid.size();
  const CMatrix probe = matrix_from_json(grid[0].is_array() && !grid[0].empty() ? grid[0][0] : Json(), "images[0][0]");
  if (probe.rows() != probe.cols()) throw InputError("images must be square matrices");
  std::vector<std::vector<CMatrix>> out;
  for (std::size_t r = 0; r < k; ++r) {
    if (!grid[r].is_array() || grid[r].size() != k) throw InputError("images must be a square grid");
    std::vector<CMatrix> row;
    for (std::size_t c = 0; c < k; ++c) {
      row.push_back(matrix_from_json(grid[r][c], probe.rows(), probe.cols(),
                                     "images[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw InputError(path + ": " + err.what());
  }
}

}  // namespace cuntzpos::io
