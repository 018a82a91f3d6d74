// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <string>

#include "distlab/double_cosets.hpp"
#include "distlab/report.hpp"

using namespace distlab;

namespace {

struct Run {
  std::map<std::string, std::string> artifacts;  // name -> rendered json
  std::map<int, std::pair<bool, std::string>> verdicts;
  std::map<int, double> seconds;
};

std::string js(const ReportDoc& d) { return render(d, Format::Json); }

bool involution_ok(const DoubleCosetReport& r) {
  return r.all_theta_stable() && r.sizes_ok() && r.galois_pair && r.bijection_ok && r.h_conjugacy_ok &&
         r.s_set_size * r.h_order == r.g_order && r.s_set_oracle == r.s_set_size &&
         r.h_orbits_on_s == static_cast<std::int64_t>(r.coset_reps.size());
}

Run run_all(const std::string& cache) {
  Run run;
  LabOptions opts{cache, 1, kDefaultGroupCeiling, 1};
  Lab lab2(FieldTower::build(2, 1), opts), lab3(FieldTower::build(3, 1), opts), lab5(FieldTower::build(5, 1), opts);
  bool oracles = true;

  auto timed = [&](int k, const std::function<std::pair<bool, std::string>()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    run.verdicts[k] = f();
    run.seconds[k] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  PairScanReport gl3;
  timed(1, [&] {
    gl3 = pair_scan(lab3, PairKind::GL_GL, 2);
    const auto gl5 = pair_scan(lab5, PairKind::GL_GL, 2);
    run.artifacts["pair-scan GL:GL q=3"] = js(pair_scan_report(gl3));
    run.artifacts["pair-scan GL:GL q=5"] = js(pair_scan_report(gl5));
    oracles = oracles && gl3.oracle_ok && gl5.oracle_ok;
    const bool ok = gl3.gelfand_ok && gl5.gelfand_ok && gl3.oracle_ok && gl5.oracle_ok;
    return std::pair{ok, "max dim " + std::to_string(gl3.max_dim) + " (q=3, " + std::to_string(gl3.rows.size()) +
                             " irreps), " + std::to_string(gl5.max_dim) + " (q=5, " +
                             std::to_string(gl5.rows.size()) + " irreps)"};
  });
  timed(2, [&] {
    const auto u = pair_scan(lab3, PairKind::GL_U, 2);
    run.artifacts["pair-scan GL:U q=3"] = js(pair_scan_report(u));
    oracles = oracles && u.oracle_ok;
    return std::pair{u.gelfand_ok && u.criterion_ok && u.oracle_ok,
                     "max dim " + std::to_string(u.max_dim) + ", Shintani " + (u.criterion_ok ? "holds" : "fails") +
                         ", " + std::to_string(u.distinguished) + " distinguished"};
  });
  timed(3, [&] {
    int agree = 0;
    for (const auto& r : gl3.rows) agree += r.criterion;
    return std::pair{gl3.rows.size() == 80 && gl3.criterion_ok,
                     std::to_string(agree) + "/" + std::to_string(gl3.rows.size()) +
                         " irreducibles satisfy distinguished <=> sigma-dual"};
  });
  timed(4, [&] {
    const auto sl = pair_scan(lab2, PairKind::SL_SL, 3);
    run.artifacts["pair-scan SL:SL n=3 q=2"] = js(pair_scan_report(sl));
    oracles = oracles && sl.oracle_ok;
    return std::pair{sl.gelfand_ok && sl.oracle_ok,
                     "max dim " + std::to_string(sl.max_dim) + " over " + std::to_string(sl.rows.size()) + " irreps"};
  });
  timed(5, [&] {
    bool ok = true;
    std::string detail;
    for (int p : {2, 3}) {
      for (int n : {2, 3}) {
        auto t = FieldTower::build(p, 1);
        auto h = MatrixGroup::build(t, GroupKind::GL, n, Side::Base);
        DoubleCosetReport r;
        if (group_order_formula(*t, GroupKind::GL, n, Side::Ext) <= 200000) {
          auto g = MatrixGroup::build(t, GroupKind::GL, n, Side::Ext);
          r = double_cosets(*g, *conjugacy_classes(*g), *h);
        } else {
          r = double_cosets_via_s(*h);
        }
        run.artifacts["double-cosets n=" + std::to_string(n) + " q=" + std::to_string(p)] = js(double_coset_report(r));
        ok = ok && involution_ok(r);
        detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " q=" + std::to_string(p) +
                  ": " + std::to_string(r.coset_reps.size()) + " cosets";
      }
    }
    return std::pair{ok, detail};
  });
  timed(6, [&] {
    const auto s = packet_suite(lab3, 2);
    run.artifacts["packets n=2 q=3"] = js(packet_suite_report(s));
    run.artifacts["theorem43 n=2 q=3"] = js(formula_report(s));
    bool oracle = true;
    for (const auto& p : s.packets) oracle = oracle && p.oracle_ok;
    oracles = oracles && oracle;
    return std::pair{s.ok() && s.packets.size() == 80,
                     std::to_string(s.packets.size()) + " packets, " + std::to_string(s.discrepancies) +
                         " discrepancies"};
  });
  timed(7, [&] {
    bool ok = oracles;
    int n = 0;
    std::string bad;
    for (Lab* lab : {&lab2, &lab3, &lab5}) {
      for (const auto* b : lab->built()) {
        ++n;
        const auto& v = b->validation;
        const bool small = b->g->order() <= 5000;
        if (!v.ok() || (small && !v.elementwise_run)) {
          ok = false;
          bad += " " + b->g->name();
        }
      }
    }
    return std::pair{ok, std::to_string(n) + " tables valid, oracles agree" + (bad.empty() ? "" : "; bad:" + bad)};
  });
  timed(8, [&] {
    const auto s5 = even_dihedral_example(11);
    const auto t11 = injection_suite(5, 3, 100, 1);
    run.artifacts["padic-example q=11"] = js(even_example_report(s5));
    run.artifacts["thm11 n=3 q=5"] = js(injection_report(t11));
    return std::pair{s5.ok() && t11.ok() && t11.cases.size() >= 100,
                     "|Z|=" + std::to_string(s5.z_size) + " |Y|=" + std::to_string(s5.y_size) +
                         " |Y'|=" + std::to_string(s5.yprime_size) + " q(pi)=" + std::to_string(s5.q_point) +
                         " (conjecture-based); thm11 " + std::to_string(t11.cases.size()) + " inputs, " +
                         std::to_string(t11.nonvacuous) + " with X-hat nonempty"};
  });
  return run;
}

}  // namespace

int main() {
  namespace fs = std::filesystem;
  const auto cache = fs::temp_directory_path() / "distlab_acceptance_cache";
  fs::remove_all(cache);
  fs::create_directories(cache);

  const auto first = run_all(cache.string());   // computes and fills the cache
  const auto second = run_all(cache.string());  // reads the cache
  const auto third = run_all("");               // recomputes without a cache

  bool all = true;
  for (const auto& [k, v] : first.verdicts) {
    std::printf("criterion %d: %s  %s  (%.1fs)\n", k, v.first ? "PASS" : "FAIL", v.second.c_str(), first.seconds.at(k));
    all = all && v.first;
  }
  int same = 0;
  std::string differ;
  for (const auto& [name, text] : first.artifacts) {
    const bool eq = second.artifacts.at(name) == text && third.artifacts.at(name) == text;
    same += eq;
    if (!eq) differ += " [" + name + "]";
  }
  const bool det = same == static_cast<int>(first.artifacts.size());
  std::printf("criterion 9: %s  %d/%zu JSON artifacts byte-identical across three runs%s\n", det ? "PASS" : "FAIL", same,
              first.artifacts.size(), differ.c_str());
  all = all && det;
  fs::remove_all(cache);
  return all ? 0 : 1;
}
