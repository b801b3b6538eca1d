// Command-line front end: run the full verification pipeline for one p,
// scan the closure dimension over a range of p, or print the constructed
// matrices. Exit codes: 0 success, 1 assertion failure / incomplete run,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "lvmono/lvmono.hpp"

namespace {

double time_cap_seconds() {
  const char* env = std::getenv("LVMONO_TIME_CAP_SECONDS");
  if (env == nullptr) return 0.0;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  return (end != env && v > 0) ? v : 0.0;
}

std::string compact(const lvmono::Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : " [";
    for (std::size_t j = 0; j < m.cols(); ++j)
      out += m(i, j).str() + (j + 1 < m.cols() ? "," : "");
    out += "]";
  }
  return out + "]";
}

void write_file(const std::string& path, const lvmono::Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

int run_verify(int p, int word_cap, const std::string& out_path, bool as_json) {
  const double cap = time_cap_seconds();
  const lvmono::Deadline deadline =
      cap > 0 ? lvmono::Deadline::after_seconds(cap) : lvmono::Deadline::none();
  const lvmono::VerifyRun run = lvmono::run_verification(p, word_cap, deadline);
  const lvmono::RunReport report = lvmono::make_report(run);
  const lvmono::Json report_json = lvmono::report_to_json(report);
  if (!out_path.empty()) write_file(out_path, report_json);

  if (as_json) {
    std::cout << report_json.dump(2) << "\n";
  } else {
    std::cout << "p = " << p << ", word cap = " << word_cap << "\n";
    for (const lvmono::Check& c : run.checks) {
      std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.pass && !c.detail.empty()) std::cout << "\n      " << c.detail;
      else if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
      std::cout << "\n";
    }
    if (run.cartan) {
      std::cout << "root spaces (ad_H1, ad_H2):\n";
      for (const lvmono::RootVector& r : run.cartan->roots) {
        std::cout << "  " << std::left << std::setw(5) << r.name << "("
                  << std::setw(2) << r.ad_h1.str() << ", " << std::setw(3)
                  << r.ad_h2.str() << ")  " << compact(r.value) << "\n";
      }
    }
    std::cout << "closure dimension: " << run.closure.dim() << " / "
              << lvmono::sp_dimension(run.rep.dim) << "\n"
              << "verdict: " << lvmono::to_string(run.verdict) << "\n"
              << "pf degree: " << run.pf_degree << "\n"
              << "result: " << (run.all_pass() ? "PASS" : "FAIL") << "\n";
  }
  return run.all_pass() ? 0 : 1;
}

int run_scan(int max_p, int word_cap, const std::string& out_path) {
  const std::vector<lvmono::ScanRow> rows =
      lvmono::run_scan(max_p, word_cap, time_cap_seconds());
  if (!out_path.empty()) write_file(out_path, lvmono::scan_to_json(rows, word_cap));

  std::cout << std::left << std::setw(4) << "p" << std::setw(9) << "dim"
            << std::setw(8) << "target" << std::setw(26) << "verdict"
            << std::setw(11) << "saturated" << "status\n";
  bool all_complete = true;
  for (const lvmono::ScanRow& r : rows) {
    all_complete = all_complete && r.complete;
    std::cout << std::left << std::setw(4) << r.p;
    if (r.complete) {
      std::cout << std::setw(9) << r.closure_dim << std::setw(8) << r.sp_target
                << std::setw(26) << r.verdict << std::setw(11)
                << (r.saturated ? "yes" : "no") << "complete\n";
    } else {
      std::cout << std::setw(9) << "-" << std::setw(8) << r.sp_target
                << std::setw(26) << "-" << std::setw(11) << "-"
                << "incomplete (" << r.error << ")\n";
    }
  }
  return all_complete ? 0 : 1;
}

int run_show(int p, const std::string& what, bool as_json) {
  const lvmono::MonodromyModel model = lvmono::make_model(p);
  lvmono::Json j;
  std::ostringstream text;
  if (what == "full") {
    j["m1"] = lvmono::matrix_to_json(model.m1);
    j["m2"] = lvmono::matrix_to_json(model.m2);
    text << "M1 =\n" << model.m1.str() << "M2 =\n" << model.m2.str();
  } else if (what == "reduced") {
    const lvmono::ReducedRep rep = lvmono::reduce(model);
    j["m1_red"] = lvmono::matrix_to_json(rep.m1_red);
    j["m2_red"] = lvmono::matrix_to_json(rep.m2_red);
    j["j_form"] = lvmono::matrix_to_json(rep.j_form);
    text << "M1 (reduced) =\n" << rep.m1_red.str() << "M2 (reduced) =\n"
         << rep.m2_red.str() << "J =\n" << rep.j_form.str();
  } else if (what == "germ") {
    const lvmono::Matrix germ = lvmono::germ_monodromy(p);
    j["germ"] = lvmono::matrix_to_json(germ);
    text << "germ monodromy =\n" << germ.str();
  } else {  // omega
    j["omega"] = lvmono::matrix_to_json(model.omega);
    text << "omega =\n" << model.omega.str();
  }
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monodromy of x^p y^p (1 - x - y): verification, "
               "closure scan and matrix dumps"};
  app.require_subcommand(1);

  int p = 2, max_p = 1, word_cap = 3;
  std::string out_path, what;
  bool as_json = false;

  CLI::App* verify = app.add_subcommand("verify", "run the full pipeline for one p");
  verify->add_option("--p", p, "parameter p (>= 1)")->check(CLI::PositiveNumber);
  verify->add_option("--word-cap", word_cap, "word length cap for seeds")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "write the JSON report to this path");
  verify->add_flag("--json", as_json, "print the JSON report to stdout");

  CLI::App* scan = app.add_subcommand("scan", "closure dimension for p = 1..max-p");
  scan->add_option("--max-p", max_p, "largest p to scan (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--word-cap", word_cap, "word length cap for seeds")
      ->check(CLI::PositiveNumber);
  scan->add_option("--out", out_path, "write the JSON table to this path");

  CLI::App* show = app.add_subcommand("show", "print constructed matrices");
  show->add_option("--p", p, "parameter p (>= 1)")->check(CLI::PositiveNumber);
  show->add_option("what", what, "full | reduced | germ | omega")
      ->required()
      ->check(CLI::IsMember({"full", "reduced", "germ", "omega"}));
  show->add_flag("--json", as_json, "print JSON instead of aligned text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(p, word_cap, out_path, as_json);
    if (app.got_subcommand(scan)) return run_scan(max_p, word_cap, out_path);
    return run_show(p, what, as_json);
  } catch (const lvmono::TimeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
