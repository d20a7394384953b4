// arrtool: exact computations on central hyperplane (multi)arrangements --
// derivation degree sequences, minimal free resolutions, freeness and
// plus-one-generated classification, deletion reports, and the embedded
// verification corpus.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "arr/golden.hpp"
#include "arr/oracle.hpp"
#include "arr/report_json.hpp"

using namespace arr;

namespace {

std::string seq(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
  return out.str();
}

std::string shifts_text(std::vector<int> shifts) {
  std::sort(shifts.begin(), shifts.end(), std::greater<int>());
  std::ostringstream out;
  for (std::size_t i = 0; i < shifts.size();) {
    std::size_t j = i;
    while (j < shifts.size() && shifts[j] == shifts[i]) ++j;
    if (i) out << " + ";
    out << "S[" << -shifts[i] << "]";
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

std::string resolution_text(const FreeResolution& res) {
  std::ostringstream out;
  out << "0 -> ";
  for (int j = res.pd(); j >= 0; --j) out << shifts_text(res.shifts_at(j)) << " -> ";
  out << "D -> 0";
  return out.str();
}

void print_classification(std::ostream& out, const ClassificationReport& r) {
  out << "verdict: " << to_string(r.verdict) << "\n";
  if (r.verdict == Verdict::Free) out << "exponents: " << seq(r.exponents) << "\n";
  if (r.verdict == Verdict::Spog) {
    out << "po_exponents: " << seq(r.po_exponents) << "\n";
    out << "level: " << r.level << "\n";
    out << "level_coefficient: " << r.level_coefficient->to_string() << "\n";
  }
  out << "ds: " << seq(r.ds) << "\n";
  out << "pd: " << r.pd << "\n";
  out << "resolution: " << resolution_text(r.res) << "\n";
  for (const auto& g : r.module.gens) out << "generator: " << derivation_to_string(g) << "\n";
  for (const auto& [k, v] : r.checks) out << "check " << k << ": " << (v ? "ok" : "FAIL") << "\n";
}

int thread_budget() {
  if (const char* env = std::getenv("ARRTOOL_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int run_verify_paper() {
  auto checks = golden_expectations();
  std::vector<int> results(checks.size(), -1);
  std::atomic<std::size_t> next{0};
  int nthreads = std::min<int>(thread_budget(), static_cast<int>(checks.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= checks.size()) return;
        bool ok = false;
        try {
          ok = checks[k].run();
        } catch (const std::exception&) {
          ok = false;
        }
        results[k] = ok ? 1 : 0;
      }
    });
  for (auto& th : pool) th.join();
  bool all = true;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    bool ok = results[k] == 1;
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << checks[k].id << " -- " << checks[k].claim
              << " [" << checks[k].citation << "]\n";
  }
  std::cout << (all ? "verify-paper: all expectations hold\n"
                    : "verify-paper: some expectations FAILED\n");
  return all ? 0 : 1;
}

std::vector<int> parse_indices_1based(const std::string& text, int count) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = std::stoi(item);
    if (v < 1 || v > count) throw std::out_of_range("hyperplane index out of range: " + item);
    out.push_back(v - 1);
  }
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact logarithmic derivation modules of hyperplane arrangements"};
  app.require_subcommand(1);

  std::string file;
  std::string indices_text;
  int opt_i = 0, opt_j = 0;
  int max_degree = -1;
  bool as_json = false;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "arrangement file (.arr)")->required();
    cmd->add_flag("--json", as_json, "JSON output");
  };

  CLI::App* cmd_ds = app.add_subcommand("ds", "derivation degree sequence DS(A)");
  add_file(cmd_ds);
  CLI::App* cmd_resolve = app.add_subcommand("resolve", "minimal free resolution of D(A)");
  add_file(cmd_resolve);
  CLI::App* cmd_classify = app.add_subcommand("classify", "free / SPOG / other classification");
  add_file(cmd_classify);
  CLI::App* cmd_delete = app.add_subcommand("delete", "delete hyperplanes and print the result");
  add_file(cmd_delete);
  cmd_delete->add_option("--indices", indices_text, "comma-separated 1-based indices")
      ->required();
  CLI::App* cmd_nt1 = app.add_subcommand("nt1", "single-deletion report for a free arrangement");
  add_file(cmd_nt1);
  cmd_nt1->add_option("--i", opt_i, "hyperplane index (1-based)")->required();
  CLI::App* cmd_nt2 = app.add_subcommand("nt2", "double-deletion report for a free arrangement");
  add_file(cmd_nt2);
  cmd_nt2->add_option("--i", opt_i, "first hyperplane index (1-based)")->required();
  cmd_nt2->add_option("--j", opt_j, "second hyperplane index (1-based)")->required();
  CLI::App* cmd_oracle = app.add_subcommand("oracle", "degree-by-degree dimension table");
  add_file(cmd_oracle);
  cmd_oracle->add_option("--max-degree", max_degree, "largest degree (default |A|)");
  app.add_subcommand("verify-paper", "run every embedded corpus expectation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("verify-paper")) return run_verify_paper();

    Arrangement a = parse_arrangement_file(file);

    if (app.got_subcommand(cmd_ds)) {
      std::vector<int> ds = degree_sequence(a);
      if (as_json) {
        Json j;
        j["ds"] = ds;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "DS = " << seq(ds) << "\n";
      }
    } else if (app.got_subcommand(cmd_resolve)) {
      FreeResolution res = minimal_free_resolution(a);
      if (as_json) {
        std::cout << resolution_json(res).dump(2) << "\n";
      } else {
        std::cout << resolution_text(res) << "\n";
        std::cout << "pd = " << res.pd() << "\n";
      }
    } else if (app.got_subcommand(cmd_classify)) {
      ClassificationReport r = classify_arrangement(a);
      if (as_json) std::cout << classification_json(r).dump(2) << "\n";
      else print_classification(std::cout, r);
    } else if (app.got_subcommand(cmd_delete)) {
      Deletion d = delete_hyperplanes(a, parse_indices_1based(indices_text, a.size()));
      if (as_json) {
        std::cout << deletion_json(d).dump(2) << "\n";
      } else {
        std::cout << serialize_arrangement(d.arr);
        for (std::size_t k = 0; k < d.new_to_old.size(); ++k)
          std::cout << "# H" << (k + 1) << " <- H" << (d.new_to_old[k] + 1) << "\n";
      }
    } else if (app.got_subcommand(cmd_nt1)) {
      if (opt_i < 1 || opt_i > a.size()) throw std::out_of_range("--i out of range");
      NT1Report r = nt1_report(a, opt_i - 1);
      if (as_json) {
        std::cout << nt1_json(r).dump(2) << "\n";
      } else {
        std::cout << "deletion: " << (r.i + 1) << "  (|A^H| = " << r.restriction_size
                  << ", case " << r.case_tag << ")\n";
        print_classification(std::cout, r.deletion);
        for (const auto& [k, v] : r.checks)
          std::cout << "check " << k << ": " << (v ? "ok" : "FAIL") << "\n";
      }
    } else if (app.got_subcommand(cmd_nt2)) {
      if (opt_i < 1 || opt_i > a.size() || opt_j < 1 || opt_j > a.size())
        throw std::out_of_range("--i/--j out of range");
      NT2Report r = nt2_report(a, opt_i - 1, opt_j - 1);
      if (as_json) {
        std::cout << nt2_json(r).dump(2) << "\n";
      } else {
        std::cout << "pair: (" << (r.i + 1) << ", " << (r.j + 1) << ")  case " << r.case_tag
                  << "\n";
        if (r.delegated) {
          std::cout << "one single deletion is free; analysed as a single deletion:\n";
          print_classification(std::cout, r.a12);
        } else {
          std::cout << "levels: c1 = " << r.c1 << " (H" << (r.h1 + 1) << "), c2 = " << r.c2
                    << " (H" << (r.h2 + 1) << ")\n";
          std::cout << "flat multiplicity |A_{H1 cap H2}| = " << r.flat_mult << "\n";
          std::cout << "kernel sums: side1 = " << (r.ker_sum_1 ? "equal" : "proper")
                    << ", side2 = " << (r.ker_sum_2 ? "equal" : "proper") << "\n";
          print_classification(std::cout, r.a12);
        }
        for (const auto& [k, v] : r.checks)
          std::cout << "check " << k << ": " << (v ? "ok" : "FAIL") << "\n";
      }
    } else if (app.got_subcommand(cmd_oracle)) {
      int maxd = max_degree >= 0 ? max_degree : a.size();
      auto counts = generator_counts(a, maxd);
      std::cout << "degree\tdim\tnew_generators\n";
      for (int d = 0; d <= maxd; ++d) {
        int dim = dim_slice_dimension(a, d);
        int fresh = counts.count(d) ? counts[d] : 0;
        std::cout << d << "\t" << dim << "\t" << fresh << "\n";
      }
    }
  } catch (const ArrParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PolyParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
