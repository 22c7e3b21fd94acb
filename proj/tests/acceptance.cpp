// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Exit status is 0 when every criterion passes except the ones named with
// --expect-fail, which must fail (a named criterion that passes is an error
// too, so a fix cannot go unnoticed).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "hsec/errors.hpp"
#include "hsec/flow.hpp"
#include "hsec/oracle.hpp"
#include "hsec/perm.hpp"
#include "hsec/section.hpp"
#include "hsec/solver.hpp"
#include "hsec/tables.hpp"
#include "hsec/zr.hpp"

using namespace hsec;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome done(std::string summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failed check(s), first: " + first_ + "; " + summary};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

Rational q(const char* s) { return parse_rational(s); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

ZipperedRectangles example1() { return solve_heights(Permutation({4, 3, 2, 1}), {1, 3}, {2, 3, 1, 2}, 28); }
ZipperedRectangles example2() { return solve_heights(Permutation({3, 1, 4, 2}), {6, 3}, {1, 1, 1, 2}, 23); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const PathCandidate* find(const std::vector<PathCandidate>& v, int start, const std::vector<int>& rects) {
  for (const auto& p : v)
    if (p.start_vertex == start && p.rects == rects) return &p;
  return nullptr;
}

// Shared sample set for criteria 6-9.
struct Sample {
  SectionPoint point;
  ZipperedRectangles z;
};

std::vector<Sample> samples_for(const Permutation& pi, int n, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<Sample> out;
  for (int i = 0; i < n; ++i) {
    SectionPoint p = sample_point(pi, s, SampleOptions::bounded());
    out.push_back({p, p.to_surface()});
  }
  return out;
}

Outcome criterion1() {
  Check c;
  GluingMap s = compute_sigma(Permutation({4, 3, 2, 1}));
  for (int j = 0; j <= 4; ++j) c.expect(s(j) == (j + 3) % 5, "(4321) sigma(" + std::to_string(j) + ")");
  c.expect(compute_sigma(Permutation({3, 1, 4, 2})).values == std::vector<int>{2, 3, 4, 0, 1}, "(3142) sigma");
  return c.done("sigma(4321) = j+3 mod 5, sigma(3142) = (2,3,4,0,1)");
}

Outcome criterion2() {
  Check c;
  auto cls = rauzy_class(Permutation({4, 3, 2, 1}));
  std::set<Permutation> headings;
  for (const char* p : {"3142", "3241", "4132", "2413", "2431", "4321", "4213"}) headings.insert(Permutation::parse(p));
  c.expect(cls.size() == 7, "class size");
  c.expect(cls == headings, "class members");
  c.expect(rauzy_class(Permutation({4, 3, 2, 1}), Traversal::DepthFirst) == cls, "bfs = dfs");
  return c.done(std::to_string(cls.size()) + " permutations");
}

Outcome criterion3() {
  Check c;
  ZipperedRectangles z1 = example1();
  c.expect(z1.alt == ints({0, 3, 1, 3, 0}), "(4321) a");
  c.expect(z1.height == ints({3, 4, 4, 3}), "(4321) h");
  ZipperedRectangles z2 = example2();
  c.expect(z2.alt == ints({0, 2, 6, 3, 0}), "(3142) a");
  c.expect(z2.height == ints({3, 6, 6, 4}), "(3142) h");
  c.expect(check_validity(z1).empty() && check_validity(z2).empty(), "validity");
  return c.done("a=(3,1,3,0) h=(3,4,4,3); a=(2,6,3,0) h=(3,6,6,4)");
}

Outcome criterion4() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  ZipperedRectangles z1 = example1();
  SaddleConnection s1 = smallest_slope(z1, 8);
  c.expect(s1.slope == q("1/5"), "example 1 slope");
  c.expect(s1.path.rects == std::vector<int>{1, 2}, "example 1 path");
  auto pre = filter_positive_nonterminal(enumerate_candidates(z1, 8), 4);
  const PathCandidate* p = find(pre, 2, {3, 4, 3, 2, 3});
  c.expect(p != nullptr, "(R3,R4,R3,R2,R3) in the pre-filter list");
  if (p) {
    c.expect(p->slope() == q("1/8"), "its slope is 1/8");
    c.expect(validity_violation(*p, z1, 8) == ValidityRule::Rule3c, "rejected by 3(c)");
  }
  ZipperedRectangles z2 = example2();
  SaddleConnection s2 = smallest_slope(z2, 5);
  c.expect(s2.slope == q("1/3"), "example 2 slope");
  c.expect(s2.path.rects == std::vector<int>{4, 2}, "example 2 path");
  c.expect(s2.start == 3 && s2.end == 2, "example 2 endpoints");
  double t = seconds_since(t0);
  c.expect(t < 1, "runtime");
  return c.done("1/5 on (R1, R2), 1/3 on (R4, R2) x3->x2, " + fmt(t) + " s");
}

Outcome criterion5() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  ZipperedRectangles z1 = example1();
  auto l1 = filter_positive_nonterminal(enumerate_candidates(z1, 8), 4);
  std::vector<std::pair<std::vector<int>, Rational>> x0;
  int x1 = 0;
  for (const auto& p : l1) {
    if (p.start_vertex == 0) x0.push_back({p.rects, p.slope()});
    if (p.start_vertex == 1) ++x1;
  }
  std::vector<std::pair<std::vector<int>, Rational>> want0 = {
      {{1}, q("3/2")}, {{1, 2}, q("1/5")}, {{1, 2, 3}, q("3/6")}};
  std::sort(x0.begin(), x0.end());
  std::sort(want0.begin(), want0.end());
  c.expect(x0 == want0, "example 1 x0 list");
  c.expect(x1 == 0, "example 1 x1 list is empty");
  // The value 2 in the x2 list belongs to (R3) from x2; the oracle traces it.
  const PathCandidate* r3 = find(l1, 2, {3});
  c.expect(r3 && r3->slope() == 2, "example 1 x2 has (R3) = 2");
  bool traced = false;
  for (const auto& cn : enumerate_connections(z1, 8, 2, 2))
    traced = traced || (cn.start == 2 && cn.path.rects == std::vector<int>{3});
  c.expect(traced, "oracle traces (R3) from x2 at slope 2");

  ZipperedRectangles z2 = example2();
  auto l2 = filter_positive_nonterminal(enumerate_candidates(z2, 5), 4);
  struct Want {
    int start;
    std::vector<int> rects;
    const char* slope;
  };
  std::vector<Want> want2 = {{0, {1}, "2/1"},          {0, {1, 2}, "6/2"},          {0, {1, 2, 3}, "3/3"},
                             {1, {2}, "4/1"},          {1, {2, 3}, "1/2"},          {1, {2, 3, 4, 2}, "2/5"},
                             {1, {2, 3, 1, 2}, "7/4"}, {1, {2, 3, 1, 2, 3}, "4/5"}, {3, {4, 2}, "1/3"}};
  for (const auto& w : want2) {
    const PathCandidate* p = find(l2, w.start, w.rects);
    c.expect(p && p->slope() == q(w.slope), "example 2 value " + std::string(w.slope));
  }
  double t = seconds_since(t0);
  c.expect(t < 1, "runtime");
  return c.done("x0 {3/2, 1/5, 3/6}, x1 empty, x2 value 2 is (R3); example 2 has all " +
                std::to_string(want2.size()) + " listed values, " + fmt(t) + " s");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--expect-fail" && i + 1 < argc) {
      expect_fail.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--expect-fail N]...\n";
      return 2;
    }
  }

  const int kSamples = 1000;
  const std::uint64_t kSeed = 42;
  std::map<int, Outcome> results;
  auto run = [&](int id, const std::function<Outcome()>& f) {
    try {
      results[id] = f();
    } catch (const std::exception& e) {
      results[id] = {false, std::string("exception: ") + e.what()};
    }
  };

  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);

  // Criteria 6-10 share one sample set.
  std::vector<std::pair<Permutation, std::vector<Sample>>> sets;
  for (const auto& pi : h2_class()) sets.push_back({pi, samples_for(pi, kSamples, kSeed)});

  std::vector<std::string> bound_failures;  // criterion 8, filled by 6 and 11
  std::size_t bound_checked = 0;

  run(6, [&] {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    std::size_t n = 0;
    for (const auto& [pi, samples] : sets) {
      for (const auto& s : samples) {
        c.expect(membership(s.point).member, pi.to_string() + " sample outside the section");
        SaddleConnection a = smallest_slope(s.z, 1);
        SaddleConnection b = brute_force_min_slope(s.z, 1, false);
        SaddleConnection t = brute_force_min_slope(s.z, 1, true);
        c.expect(a.slope == b.slope && same_path(a.path, b.path), pi.to_string() + " solver vs oracle");
        c.expect(a.slope == t.slope && same_path(a.path, t.path), pi.to_string() + " solver vs oracle with tops");
        ++bound_checked;
        if (!(a.slope <= s.z.a(1) / s.z.lam(1))) bound_failures.push_back(pi.to_string() + " sample");
        ++n;
      }
    }
    return c.done(std::to_string(n) + " points (" + std::to_string(kSamples) + " per permutation), " +
                  fmt(seconds_since(t0)) + " s");
  });

  run(7, [&] {
    Check c;
    std::size_t instances = 0, row_fail = 0, slope_fail = 0, cf_miss = 0, cf_throw = 0, n = 0;
    std::map<std::string, std::size_t> by_row;
    for (const auto& [pi, samples] : sets) {
      for (const auto& s : samples) {
        ++n;
        Coords co = Coords::of(s.z);
        for (const auto& row : slope_table(pi)) {
          for (long k = row.k_min;; ++k) {
            PathCandidate p = row.instantiate(s.z, k);
            if (p.dx > 1) break;
            if (row.applies(s.z, k, 1)) {
              ++instances;
              if (!trace_exists(p, s.z)) {
                ++row_fail;
                ++by_row[pi.to_string() + " " + row.pattern];
              }
              if (row.slope(co, k) != p.slope()) ++slope_fail;
            }
            if (!row.repeated()) break;
          }
        }
        SaddleConnection best = smallest_slope(s.z, 1);
        try {
          SaddleConnection cf = closed_form_smallest_slope(s.point);
          if (cf.slope != best.slope || !same_path(cf.path, best.path)) ++cf_miss;
        } catch (const ContractViolation&) {
          ++cf_throw;
        }
      }
    }
    c.expect(row_fail == 0, "rows whose conditions hold but do not trace");
    c.expect(slope_fail == 0, "row formulas that differ from the traced slope");
    c.expect(cf_miss + cf_throw == 0, "closed form differs from the solver");
    std::string worst;
    for (const auto& [row, count] : by_row) worst += (worst.empty() ? "" : ", ") + row + " x" + std::to_string(count);
    return c.done(std::to_string(instances) + " row instances, " + std::to_string(row_fail) + " untraceable, " +
                  std::to_string(slope_fail) + " formula mismatches; closed form differs on " +
                  std::to_string(cf_miss) + " and has no row on " + std::to_string(cf_throw) + " of " +
                  std::to_string(n) + " points" + (worst.empty() ? "" : "; untraceable rows: " + worst));
  });

  // Criterion 11 runs before 8 so its iterates count toward the bound.
  Outcome orbit_outcome;
  try {
    Check c;
    std::size_t area_checks = 0;
    for (const auto& [pi, samples] : sets) {
      for (int i = 0; i < 20; ++i) {
        const auto& z = samples[i].z;
        for (const char* s : {"0", "1/7", "3", "25/2"}) {
          ShearedSurface sh = apply_horocycle(z, q(s));
          c.expect(sh.area() == z.area, "area after shear");
          for (const char* t : {"0", "2/3", "9"}) {
            ShearedSurface twice = apply_horocycle(sh, q(t));
            ShearedSurface once = apply_horocycle(z, q(s) + q(t));
            c.expect(twice.width_vectors == once.width_vectors && twice.height_vectors == once.height_vectors &&
                         twice.zipper_vectors == once.zipper_vectors && twice.cone_points == once.cone_points,
                     "composition law");
            ++area_checks;
          }
        }
      }
    }
    int orbits_done = 0;
    std::size_t steps = 0, oracle_steps = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Permutation& pi = h2_class()[(seed - 1) % h2_class().size()];
      SectionPoint p = orbit_start(pi, seed);
      bool ok = true;
      for (int i = 0; i < 100 && ok; ++i) {
        try {
          ReturnStep st = return_map_step(p);
          ZipperedRectangles z = p.to_surface();
          c.expect(st.return_time > 0, "positive return time");
          ++bound_checked;
          if (!(st.return_time <= z.a(1) / z.lam(1)))
            bound_failures.push_back("orbit " + std::to_string(seed) + " step " + std::to_string(i));
          c.expect(membership(st.image).member, "orbit leaves the section");
          c.expect(area_of(st.image.to_surface()) == 1, "orbit area");
          oracle_steps += st.used_oracle;
          ++steps;
          p = st.image;
        } catch (const Error& e) {
          c.expect(false, "orbit " + std::to_string(seed) + " stopped at step " + std::to_string(i) + ": " +
                              e.kind() + " " + e.what());
          ok = false;
        }
      }
      orbits_done += ok;
    }
    orbit_outcome = c.done(std::to_string(area_checks) + " shear checks; " + std::to_string(orbits_done) +
                           "/10 orbits of 100 steps (" + std::to_string(steps) + " steps, " +
                           std::to_string(oracle_steps) + " outside the bounded regime)");
  } catch (const std::exception& e) {
    orbit_outcome = {false, std::string("exception: ") + e.what()};
  }

  run(8, [&] {
    Check c;
    c.expect(bound_failures.empty(), bound_failures.empty() ? "" : bound_failures.front());
    return c.done(std::to_string(bound_checked) + " return times checked against a1/lambda1");
  });

  run(9, [&] {
    Check c;
    std::size_t n = 0, worst_count = 0;
    for (const auto& [pi, samples] : sets) {
      for (const auto& s : samples) {
        long C = max_path_length(s.z, 1);
        std::size_t count = enumerate_candidates(s.z, 1).size();
        c.expect(Integer(static_cast<unsigned long>(count)) <= path_count_bound(C),
                 pi.to_string() + " count " + std::to_string(count) + " above the bound for C=" + std::to_string(C));
        worst_count = std::max(worst_count, count);
        ++n;
      }
    }
    return c.done(std::to_string(n) + " points, largest pruned count " + std::to_string(worst_count));
  });

  run(10, [&] {
    Check c;
    std::size_t n = 0, loop_points = 0, ties = 0;
    for (const auto& [pi, samples] : sets) {
      for (int i = 0; i < 20; ++i) {
        const auto& z = samples[i].z;
        std::optional<Rational> loop, distinct;
        for (const auto& cn : enumerate_connections(z, 1, z.a(1) / z.lam(1))) {
          if (cn.slope <= 0) continue;
          auto& slot = cn.start == cn.end ? loop : distinct;
          if (!slot || cn.slope < *slot) slot = cn.slope;
        }
        ++n;
        c.expect(distinct.has_value(), pi.to_string() + " no connection between distinct points");
        if (!loop || !distinct) continue;
        ++loop_points;
        c.expect(*loop >= *distinct, pi.to_string() + " a loop beats every connection between distinct points");
        if (*loop == std::min(*loop, *distinct)) {
          ++ties;
          c.expect(*loop == *distinct, "loop minimum without a matching distinct minimum");
        }
      }
    }
    return c.done(std::to_string(n) + " points, " + std::to_string(loop_points) + " with loops, " +
                  std::to_string(ties) + " where a loop attains the minimum");
  });

  results[11] = orbit_outcome;

  run(12, [&] {
    Check c;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("hsec-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string cli = HSEC_CLI;
    std::string data = HSEC_TEST_DATA;
    std::vector<std::string> commands = {
        "sigma 4321",
        "sigma [3,1,4,2]",
        "rauzy-class 4321",
        "rauzy-class 4321 --dfs",
        "describe 4132",
        "describe 2413 --format json",
        "solve " + data + "/example1.json",
        "check " + data + "/point3142.json",
        "check " + data + "/wide.json",
        "candidates " + data + "/example1.json",
        "candidates " + data + "/example2.json --format json",
        "candidates " + data + "/example1.json --no-pruning --all",
        "slope " + data + "/example1.json",
        "slope " + data + "/example2.json",
        "slope " + data + "/point3142.json --closed-form",
        "oracle " + data + "/example2.json",
        "oracle " + data + "/example1.json --allow-top-crossings --list --max-slope 3/2",
        "return-map " + data + "/point3142.json",
        "sample --perm 4321 --seed 5 -n 50 --histogram {dir}/hist.csv --summary {dir}/summary.json --points "
        "{dir}/points.json",
        "sample --perm 2413 --seed 9 -n 30 --mode orbit",
        "render " + data + "/example2.json",
        "render " + data + "/example1.json --highlight none -o {dir}/out.svg",
    };
    auto slurp = [](const fs::path& p) {
      std::ifstream f(p, std::ios::binary);
      return std::string(std::istreambuf_iterator<char>(f), {});
    };
    auto replace_dir = [&](std::string s, const fs::path& d) {
      for (std::size_t at; (at = s.find("{dir}")) != std::string::npos;) s.replace(at, 5, d.string());
      return s;
    };
    int idx = 0;
    for (const auto& cmd : commands) {
      std::string outputs[2];
      int codes[2];
      for (int run_no = 0; run_no < 2; ++run_no) {
        fs::path d = dir / (std::to_string(idx) + "-" + std::to_string(run_no));
        fs::create_directories(d);
        std::string line = "\"" + cli + "\" " + replace_dir(cmd, d) + " > \"" + (d / "stdout").string() +
                           "\" 2> \"" + (d / "stderr").string() + "\"";
        codes[run_no] = std::system(line.c_str());
        std::string all;
        for (const auto& e : fs::directory_iterator(d)) all += e.path().filename().string() + "\n";
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(d)) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) all += f.filename().string() + ":" + replace_dir(slurp(f), "{dir}");
        outputs[run_no] = all;
      }
      c.expect(codes[0] == codes[1], cmd + ": exit codes differ");
      c.expect(outputs[0] == outputs[1], cmd + ": outputs differ");
      c.expect(codes[0] == 0 || cmd.find("wide.json") != std::string::npos, cmd + ": exit status " +
                                                                               std::to_string(codes[0]));
      ++idx;
    }
    fs::remove_all(dir);
    return c.done(std::to_string(commands.size()) + " commands run twice, byte-identical");
  });

  int bad = 0;
  for (const auto& [id, r] : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << r.detail << "\n";
    bool expected_fail = expect_fail.count(id) > 0;
    if (r.pass == expected_fail) ++bad;
  }
  for (int id : expect_fail) {
    if (results.count(id) && results[id].pass)
      std::cout << "criterion " << id << " was expected to fail but passed\n";
    else
      std::cout << "criterion " << id << " is a known failure\n";
  }
  return bad == 0 ? 0 : 1;
}
