// cuntzpos: positivity in M_p(S_n) from the command line.
//
// Exit codes: check-pos 0 positive, 1 not positive, 2 undecided (a batch
// reports the worst of these); 64 bad input; 65 a dilate input that is not a
// row contraction.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "cuntzpos/certificate.hpp"
#include "cuntzpos/dilation.hpp"
#include "cuntzpos/fock.hpp"
#include "cuntzpos/instances.hpp"
#include "cuntzpos/io.hpp"
#include "cuntzpos/quotient.hpp"
#include "cuntzpos/selftest.hpp"
#include "cuntzpos/words.hpp"

namespace io = cuntzpos::io;
using cuntzpos::VerdictKind;

namespace {

constexpr int kExitInput = 64;
constexpr int kExitNotContraction = 65;

struct Common {
  std::optional<int> n, p, depth, max_iter;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  bool quiet = false;
};

void print_json(const io::Json& j, const Common& c) {
  if (!c.quiet) std::cout << j.dump(2) << '\n';
}

struct CheckResult {
  int code = kExitInput;
  io::Json report;
  std::string csv;
  std::string error;
};

CheckResult check_one(const std::string& path, std::size_t index, const Common& c) {
  CheckResult r;
  try {
    const auto inst = io::parse_instance(io::read_json_file(path));
    const auto& e = inst.element;
    if (c.n && *c.n != e.n) throw io::InputError("--n " + std::to_string(*c.n) + " disagrees with the file");
    if (c.p && *c.p != static_cast<int>(e.p)) throw io::InputError("--p " + std::to_string(*c.p) + " disagrees with the file");

    // Library defaults, then file options, then explicit flags.
    cuntzpos::SolverOptions opts;
    opts.seed = cuntzpos::derive_seed(c.seed.value_or(0), index);
    inst.options.apply(opts);
    if (c.tol) opts.cert_rel = *c.tol;
    if (c.max_iter) opts.max_iter = *c.max_iter;
    if (c.seed) opts.seed = cuntzpos::derive_seed(*c.seed, index);
    if (c.depth) opts.fock_depth = *c.depth;

    const auto t0 = std::chrono::steady_clock::now();
    const auto v = cuntzpos::decide_positivity(e, opts);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    r.report = io::verdict_to_json(e, v, opts);
    r.report["instance_id"] = path;
    r.report["wall_ms"] = ms;
    auto row = io::csv_row(path, e, v, ms);
    row.verdict = r.report["verdict"].get<std::string>();
    r.csv = io::to_csv(row);
    const auto verdict = r.report["verdict"].get<std::string>();
    r.code = verdict == "positive" ? 0 : verdict == "not_positive" ? 1 : 2;
  } catch (const io::InputError& err) {
    r.error = err.what();
  } catch (const cuntzpos::ShapeError& err) {
    r.error = err.what();
  }
  return r;
}

int cmd_check_pos(const std::vector<std::string>& files, const Common& c, int jobs) {
  std::vector<CheckResult> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) results[k] = check_one(files[k], k, c);
  };
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(workers, files.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  const auto severity = [](int x) { return x == kExitInput ? 3 : x; };
  for (std::size_t k = 0; k < files.size(); ++k) {
    if (!results[k].error.empty()) std::cerr << files[k] << ": " << results[k].error << '\n';
    if (severity(results[k].code) > severity(code)) code = results[k].code;
  }
  if (c.quiet) return code;
  if (c.format == "csv") {
    std::cout << io::csv_header() << '\n';
    for (const auto& r : results)
      if (r.error.empty()) std::cout << r.csv << '\n';
  } else if (files.size() == 1) {
    if (results[0].error.empty()) std::cout << results[0].report.dump(2) << '\n';
  } else {
    io::Json all = io::Json::array();
    for (const auto& r : results)
      if (r.error.empty()) all.push_back(r.report);
    std::cout << all.dump(2) << '\n';
  }
  return code;
}

int cmd_dilate(const std::string& file, const Common& c) {
  const auto a = io::parse_row_contraction(io::read_json_file(file));
  const auto d = cuntzpos::dilate(a, c.depth.value_or(4));
  const double tol = c.tol.value_or(1e-10);
  auto j = io::to_json(d);
  j["tolerance"] = tol;
  print_json(j, c);
  return d.compression_residual <= tol ? 0 : 1;
}

int cmd_choi(const std::string& file, const Common& c) {
  const auto images = io::parse_choi_images(io::read_json_file(file));
  const double tol = c.tol.value_or(1e-10);
  const double lo = cuntzpos::choi_min_eig(images);
  print_json(io::Json{{"choi_min_eig", lo}, {"completely_positive", lo >= -tol}, {"tolerance", tol}}, c);
  return lo >= -tol ? 0 : 1;
}

int cmd_fock(const Common& c) {
  const int n = c.n.value_or(2);
  const int depth = c.depth.value_or(2);
  if (n < 1 || depth < 0) throw io::InputError("fock needs --n >= 1 and --depth >= 0");
  const cuntzpos::TruncatedFock f(n, depth);
  io::Json basis = io::Json::array();
  for (const auto& w : f.basis()) {
    std::string s;
    for (int l : w) s += (s.empty() ? "" : ".") + std::to_string(l);
    basis.push_back(s);
  }
  io::Json ops = io::Json::array();
  for (int i = 1; i <= n; ++i) ops.push_back(io::to_json(cuntzpos::creation_matrix(i, f)));
  print_json(io::Json{{"n", n}, {"depth", depth}, {"dim", f.dim()}, {"basis", basis}, {"creation", ops}}, c);
  return 0;
}

int cmd_selftest(const Common& c, int count, bool corrupt) {
  cuntzpos::SelftestOptions o;
  o.seed = c.seed.value_or(0);
  o.count = count;
  o.corrupt_certificate = corrupt;
  const auto results = cuntzpos::run_selftest(o);
  bool ok = true;
  if (!c.quiet) std::printf("%-22s %7s %9s %9s  %s\n", "suite", "cases", "failures", "seconds", "status");
  for (const auto& r : results) {
    ok = ok && r.passed();
    if (c.quiet) continue;
    std::printf("%-22s %7d %9d %9.2f  %s\n", r.name.c_str(), r.cases, r.failures, r.seconds, r.passed() ? "pass" : "FAIL");
    if (!r.passed()) std::printf("    %s\n", r.note.c_str());
  }
  return ok ? 0 : 1;
}

int cmd_words_mul(const std::string& x, const std::string& y, const Common& c) {
  int n = c.n.value_or(0);
  if (n == 0) {
    // Smallest alphabet containing every letter mentioned.
    for (const auto* s : {&x, &y}) {
      for (std::size_t k = 0; k + 1 < s->size(); ++k) {
        if ((*s)[k] != 'S') continue;
        std::size_t end = k + 1;
        while (end < s->size() && std::isdigit(static_cast<unsigned char>((*s)[end]))) ++end;
        if (end > k + 1) n = std::max(n, std::stoi(s->substr(k + 1, end - k - 1)));
      }
    }
    n = std::max(n, 1);
  }
  const auto px = cuntzpos::parse_element(x, n);
  const auto py = cuntzpos::parse_element(y, n);
  const auto product = cuntzpos::mul(px, py);
  if (c.quiet) return 0;
  if (c.format == "json") {  // text by default
    io::Json terms = io::Json::array();
    for (const auto& [t, coeff] : product.terms()) {
      terms.push_back({{"word", cuntzpos::render_term(t)}, {"coeff", {coeff(0, 0).real(), coeff(0, 0).imag()}}});
    }
    std::cout << io::Json{{"n", n}, {"product", cuntzpos::render(product)}, {"terms", terms}}.dump(2) << '\n';
  } else {
    std::cout << cuntzpos::render(product) << '\n';
  }
  return 0;
}

void add_common(CLI::App* app, Common& c, bool with_np) {
  if (with_np) {
    app->add_option("--n", c.n, "Number of generators");
    app->add_option("--p", c.p, "Coefficient size");
  }
  app->add_option("--depth", c.depth, "Fock truncation depth");
  app->add_option("--tol", c.tol, "Tolerance");
  app->add_option("--max-iter", c.max_iter, "Dykstra iterations per restart");
  app->add_option("--seed", c.seed, "Random seed");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_flag("--quiet", c.quiet, "Suppress output; exit code only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positivity of Hermitian elements of M_p(S_n) with primal/dual certificates and Fock-space oracles"};
  app.require_subcommand(1);
  Common c;

  std::vector<std::string> files;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* check = app.add_subcommand("check-pos", "Decide positivity of instance files");
  check->add_option("files", files, "Instance JSON files")->required();
  check->add_option("--jobs", jobs, "Concurrent instances");
  add_common(check, c, true);

  std::string file;
  auto* dil = app.add_subcommand("dilate", "Isometric dilation of a row contraction");
  dil->add_option("file", file, "Row contraction JSON")->required();
  add_common(dil, c, false);

  auto* choi = app.add_subcommand("choi", "Choi-matrix complete positivity test");
  choi->add_option("file", file, "Image grid JSON")->required();
  add_common(choi, c, false);

  auto* fock = app.add_subcommand("fock", "Creation matrices on a truncated Fock space");
  add_common(fock, c, true);

  int count = 100;
  bool corrupt = false;
  auto* self = app.add_subcommand("selftest", "Randomized cross-oracle checks");
  self->add_option("--count", count, "Instances per suite");
  self->add_flag("--corrupt-certificate", corrupt, "Negative control: corrupt one certificate");
  add_common(self, c, false);

  std::string x, y;
  auto* words = app.add_subcommand("words-mul", "Multiply two word elements, e.g. \"S1.S2*\" \"S2\"");
  words->add_option("x", x)->required();
  words->add_option("y", y)->required();
  add_common(words, c, true);

  c.format = "";
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitInput;
  }
  if (c.format.empty()) c.format = words->parsed() ? "text" : "json";

  try {
    if (check->parsed()) return cmd_check_pos(files, c, jobs);
    if (dil->parsed()) return cmd_dilate(file, c);
    if (choi->parsed()) return cmd_choi(file, c);
    if (fock->parsed()) return cmd_fock(c);
    if (self->parsed()) return cmd_selftest(c, count, corrupt);
    if (words->parsed()) return cmd_words_mul(x, y, c);
  } catch (const cuntzpos::NotContractionError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitNotContraction;
  } catch (const io::InputError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
