#pragma once

// JSON and CSV formats shared by the CLI and the Python bindings.
//
// Matrices are arrays of rows, each entry a [re, im] pair. A real number is
// accepted in place of a pair on input.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuntzpos/certificate.hpp"
#include "cuntzpos/dilation.hpp"
#include "cuntzpos/fock.hpp"

namespace cuntzpos::io {

using Json = nlohmann::json;

/// Malformed or inconsistent input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const CMatrix& m);
Json to_json(const std::vector<cplx>& v);
Json to_json(const SparseOp& op);

/// `what` names the field in error messages.
CMatrix matrix_from_json(const Json& j, const std::string& what);
CMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what);

/// Optional "options" object of an instance file.
struct InstanceOptions {
  std::optional<double> tol;        // relative primal acceptance tolerance
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
  std::optional<int> d_max;         // Fock scan depth

  /// Fills `opts` with every option present here.
  void apply(SolverOptions& opts) const;
};

struct Instance {
  HermSElement element;
  InstanceOptions options;
};

/// {"n": int, "p": int, "A0": p x p, "A": [n x (p x p)], "options": {...}}.
/// Requires n >= 2 and A0 Hermitian.
Instance parse_instance(const Json& j);
Json to_json(const HermSElement& e);

/// Certificates are re-verified here; one that fails is left out and the
/// verdict is downgraded accordingly.
Json verdict_to_json(const HermSElement& e, const Verdict& v, const SolverOptions& opts);

struct CsvRow {
  std::string instance_id;
  int n = 0;
  std::size_t p = 0;
  std::string verdict;
  std::optional<double> eigmin_primal;
  std::optional<double> pairing_dual;
  std::optional<int> fock_depth;
  double wall_ms = 0.0;
};

CsvRow csv_row(const std::string& id, const HermSElement& e, const Verdict& v, double wall_ms);
std::string csv_header();
std::string to_csv(const CsvRow& row);

/// {"A": [n x (p x p)]}. Throws NotContractionError for a non-contraction.
RowContraction parse_row_contraction(const Json& j);
Json to_json(const DilationResult& d);

/// {"images": (n+1) x (n+1) grid of equally sized square matrices}.
std::vector<std::vector<CMatrix>> parse_choi_images(const Json& j);

/// Reads and parses a JSON file; InputError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace cuntzpos::io
