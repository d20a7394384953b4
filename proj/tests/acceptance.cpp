// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout. Exit code 0 only when every criterion holds.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "arr/golden.hpp"
#include "arr/oracle.hpp"
#include "arr/report_json.hpp"

using namespace arr;

namespace {

int thread_budget() {
  if (const char* env = std::getenv("ARRTOOL_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Runs tasks on the thread budget; tasks push failure strings.
class FailureCollector {
 public:
  void add_task(std::function<void(std::vector<std::string>&)> task) {
    tasks_.push_back(std::move(task));
  }
  std::vector<std::string> run() {
    std::vector<std::vector<std::string>> all(tasks_.size());
    std::atomic<std::size_t> next{0};
    int nthreads = std::min<int>(thread_budget(), static_cast<int>(tasks_.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t k = next.fetch_add(1);
          if (k >= tasks_.size()) return;
          try {
            tasks_[k](all[k]);
          } catch (const std::exception& e) {
            all[k].push_back(std::string("exception: ") + e.what());
          }
        }
      });
    for (auto& th : pool) th.join();
    std::vector<std::string> flat;
    for (auto& v : all)
      for (auto& s : v) flat.push_back(std::move(s));
    return flat;
  }

 private:
  std::vector<std::function<void(std::vector<std::string>&)>> tasks_;
};

std::string seq(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

// Laws every computed report must obey, golden arrangements and deletions.
void generic_laws(const std::string& tag, const Arrangement& a,
                  const ClassificationReport& r, std::vector<std::string>& fails) {
  if (!euler_characteristic_check(r.res, a))
    fails.push_back(tag + ": alternating shift sum != |A|");
  if (r.pd > std::max(0, a.nvars - 2)) fails.push_back(tag + ": pd exceeds l-2");
  if (a.is_simple() && !a.empty() &&
      std::find(r.ds.begin(), r.ds.end(), 1) == r.ds.end())
    fails.push_back(tag + ": 1 not in DS");
  if (r.verdict == Verdict::Free && !r.checks.at("saito_determinant"))
    fails.push_back(tag + ": Saito determinant check failed on a free verdict");
}

// Criterion 7: the property sweep over every golden arrangement and every
// single and double deletion.
std::vector<std::string> property_sweep() {
  FailureCollector col;
  for (const auto& gc : golden_corpus()) {
    col.add_task([id = gc.id](std::vector<std::string>& fails) {
      Arrangement a = golden(id);
      const int l = a.nvars;
      ClassificationReport cls_a = classify_arrangement(a);
      generic_laws(id, a, cls_a, fails);
      bool parent_free = cls_a.verdict == Verdict::Free;

      std::vector<ClassificationReport> dels(a.size());
      std::vector<int> restriction_size(a.size(), 0);
      for (int i = 0; i < a.size(); ++i) {
        Arrangement ai = delete_hyperplanes(a, {i}).arr;
        dels[i] = classify_arrangement(ai);
        restriction_size[i] = euler_restriction(a, i).arr.size();
        std::string tag = id + " \\ {" + std::to_string(i + 1) + "}";
        generic_laws(tag, ai, dels[i], fails);
        if (parent_free) {
          // Thm 1.4: free or SPOG with PO = exp(A) and the level formula.
          if (dels[i].verdict == Verdict::Other)
            fails.push_back(tag + ": single deletion of a free arrangement is neither free nor SPOG");
          if (dels[i].verdict == Verdict::Spog) {
            std::vector<int> po = dels[i].po_exponents;
            std::sort(po.begin(), po.end());
            if (po != cls_a.exponents)
              fails.push_back(tag + ": PO-exponents differ from exp(A)");
            if (dels[i].level != (a.size() - 1) - restriction_size[i])
              fails.push_back(tag + ": level formula |A'|-|A^H| violated");
          }
        }
      }

      for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
          Arrangement aij = delete_hyperplanes(a, {i, j}).arr;
          ClassificationReport cij = classify_arrangement(aij);
          std::string tag =
              id + " \\ {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
          generic_laws(tag, aij, cij, fails);
          if (!parent_free) continue;
          // Thm 1.5 equivalence on every NT-free-2 instance.
          if ((cij.pd <= 1) != (static_cast<int>(cij.ds.size()) <= l + 2))
            fails.push_back(tag + ": pd <= 1 iff |DS| <= l+2 violated");
          if (dels[i].verdict != Verdict::Spog || dels[j].verdict != Verdict::Spog)
            continue;
          int c1 = std::min(dels[i].level, dels[j].level);
          int c2 = std::max(dels[i].level, dels[j].level);
          // Cor 3.13: with both single deletions non-free, never free.
          if (cij.verdict == Verdict::Free)
            fails.push_back(tag + ": free despite both single deletions SPOG");
          // Cor 3.14 on every SPOG NT-free-2 instance.
          if (cij.verdict == Verdict::Spog) {
            std::vector<int> tail(cls_a.exponents.begin() + 1, cls_a.exponents.end());
            if (std::find(tail.begin(), tail.end(), c2) == tail.end())
              fails.push_back(tag + ": SPOG but c2 is not an exponent of A");
          }
          // Thm 1.6 exact shapes in dimension three.
          if (l == 3) {
            int fm = flat_multiplicity(a, i, j);
            std::vector<int> m0 = cij.res.shifts_at(0);
            std::vector<int> m1 = cij.res.shifts_at(1);
            std::vector<int> pm0 = cls_a.exponents, pm1;
            if (fm == 2) {
              pm0.push_back(c1);
              pm0.push_back(c2);
              pm1 = {c1 + 1, c2 + 1};
            } else if (c1 == c2) {
              pm0.push_back(c1 - 1);
              pm1 = {c1 + 1};
            } else {
              pm0.push_back(c1);
              pm0.push_back(c2 - 1);
              pm1 = {c1 + 1, c2};
            }
            std::sort(pm0.begin(), pm0.end());
            std::sort(pm1.begin(), pm1.end());
            if (cij.pd != 1 || m0 != pm0 || m1 != pm1)
              fails.push_back(tag + ": dimension-3 resolution shape mismatch, got " +
                              seq(m0) + " / " + seq(m1));
          }
        }
    });
  }
  return col.run();
}

// Criterion 8: oracle cross-validation.
std::vector<std::string> oracle_sweep() {
  FailureCollector col;
  for (const auto& gc : golden_corpus()) {
    col.add_task([id = gc.id](std::vector<std::string>& fails) {
      Arrangement a = golden(id);
      std::vector<int> ds = degree_sequence(a);
      std::map<int, int> hist;
      for (int d : ds) hist[d] += 1;
      if (generator_counts(a, ds.back() + 1) != hist)
        fails.push_back(id + ": oracle generator counts differ from DS histogram");
    });
  }
  for (const auto& gc : golden_corpus()) {
    Arrangement probe = golden(gc.id);
    DerivationModule dm = derivation_module(probe);
    if (static_cast<int>(dm.ds.size()) != probe.nvars) continue; // free ones only
    for (int d = 0; d <= probe.size(); ++d) {
      col.add_task([id = gc.id, d](std::vector<std::string>& fails) {
        Arrangement a = golden(id);
        DerivationModule dm2 = derivation_module(a);
        if (!free_hilbert_dim_check(a, dm2, d))
          fails.push_back(id + ": free Hilbert identity fails at degree " +
                          std::to_string(d));
      });
    }
  }
  return col.run();
}

// Criterion 9: Jacobian-syzygy route agrees with the kernel route.
std::vector<std::string> jacobian_sweep() {
  FailureCollector col;
  for (const auto& gc : golden_corpus())
    col.add_task([id = gc.id](std::vector<std::string>& fails) {
      if (!jacobian_crosscheck(golden(id)))
        fails.push_back(id + ": Jacobian syzygy module differs from D(A)");
    });
  return col.run();
}

} // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    std::function<std::vector<std::string>()> run;
  };

  auto golden_criterion = [](int n) {
    return [n]() {
      std::vector<std::string> fails;
      for (const auto& e : golden_expectations()) {
        if (e.criterion != n) continue;
        bool ok = false;
        try {
          ok = e.run();
        } catch (const std::exception& ex) {
          fails.push_back(e.id + ": exception: " + ex.what());
          continue;
        }
        if (!ok) fails.push_back(e.id + ": " + e.claim);
      }
      return fails;
    };
  };

  std::vector<Criterion> criteria = {
      {1, "seven-plane case: exponents and the (2,5) deletion pair", golden_criterion(1)},
      {2, "eleven-plane case: all stated deletions and pairs", golden_criterion(2)},
      {3, "twelve-hyperplane rank-4 case: levels and resolutions", golden_criterion(3)},
      {4, "ten-hyperplane rank-4 case: |DS|=7 pair and pd 2", golden_criterion(4)},
      {5, "ten-plane rank-3 case: no free addition", golden_criterion(5)},
      {6, "lattice-equivalent pair: DS data and lattice comparison", golden_criterion(6)},
      {7, "property sweep over all golden deletions", property_sweep},
      {8, "oracle cross-validation", oracle_sweep},
      {9, "Jacobian route cross-check", jacobian_sweep},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    std::vector<std::string> fails = c.run();
    std::sort(fails.begin(), fails.end());
    bool ok = fails.empty();
    all_ok = all_ok && ok;
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " -- "
              << c.title << "\n";
    for (const auto& f : fails) std::cout << "    " << f << "\n";
  }
  std::cout << (all_ok ? "acceptance: all criteria hold" : "acceptance: FAILURES present")
            << "\n";
  return all_ok ? 0 : 1;
}
