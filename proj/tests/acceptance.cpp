// Acceptance suite: one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "support.hpp"
#include "twc/verify.hpp"

using namespace twc;

namespace {

// time limits in seconds
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 5.0;
constexpr double kLimit3 = 1.0;  // per group
constexpr double kLimit4 = 60.0;
constexpr double kLimit6 = 60.0;
constexpr double kLimit8 = 30.0;

#ifndef TWC_CLI_PATH
#define TWC_CLI_PATH "twc"
#endif

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool check_names(const CheckList& cl, const std::vector<std::string>& names, std::string& failed) {
  for (const auto& c : cl.checks)
    for (const auto& n : names)
      if (c.name == n && !c.pass) {
        failed = c.name;
        return false;
      }
  return true;
}

bool has_check(const CheckList& cl, const std::string& name) {
  for (const auto& c : cl.checks)
    if (c.name == name) return true;
  return false;
}

Outcome criterion1() {
  Outcome o;
  const GammaAction act = fixtures::theta_inv(builtin_group("C4"));
  const auto classes = oracle::h2_classes(support::module(act));
  const H2Gamma h2 = second_cohomology(act);
  if (classes.size() != 2 || h2.size() != 2) o.fail("class count " + std::to_string(classes.size()) + "/" + std::to_string(h2.size()));
  const oracle::Grp c4 = support::grp(*act.g), c2 = support::grp(*act.gamma);
  const std::array<std::string, 2> want{"D4", "Q8"};
  for (size_t k = 0; k < classes.size() && k < 2; ++k) {
    // the oracle's class holding the all-zero table comes first
    const auto& rep = classes[k].front();
    const oracle::Table t = oracle::twisted_product(c4, c2, act.theta, rep);
    oracle::Grp g{8, t, 0};
    if (!oracle::isomorphic(g, support::grp(*builtin_group(want[k])))) o.fail("class " + std::to_string(k) + " is not " + want[k]);
    if (h2.class_of(rep) != static_cast<int>(k)) o.fail("library class order differs from the oracle");
  }
  // c_Q lies in the Q8 class
  const TwistedData cq = fixtures::c2_cocycle(act, 2);
  if (h2.class_of(cq.c) != 1) o.fail("c_Q not in the nontrivial class");
  o.detail = o.pass ? "|H2| = 2, trivial class D4, c_Q class Q8" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const GammaAction act = fixtures::theta_inv(builtin_group("C4"));
  const oracle::Module m = support::module(act);
  int normalized = 0, agree = 0, assoc_unnormalized = 0, total = 0;
  for (const auto& c : oracle::all_cochains(m)) {
    ++total;
    const bool assoc = oracle::associative(twisted_product_table(act, c));
    std::string kind;
    try {
      check_cocycle(act, c);
    } catch (const ValidationError& e) {
      kind = e.kind();
    }
    if (oracle::normalized(m, c)) {
      ++normalized;
      if (assoc == kind.empty()) ++agree;
      else o.fail("normalized cochain disagrees");
    } else {
      if (kind != "NotNormalized") o.fail("unnormalized cochain not rejected as NotNormalized");
      if (assoc != oracle::two_cocycle(m, c)) o.fail("associativity differs from the cocycle identity");
      assoc_unnormalized += assoc;
    }
  }
  std::ostringstream os;
  os << total << " cochains; normalized " << agree << "/" << normalized << " agree; " << assoc_unnormalized
     << " unnormalized tables are associative and are rejected as NotNormalized";
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome criterion3(double& worst) {
  Outcome o;
  std::ostringstream os;
  for (const std::string name : {"C4", "S3", "D4", "Q8"}) {
    const auto t0 = std::chrono::steady_clock::now();
    const GroupPtr h = builtin_group(name);
    const int got = plain_h1(fixtures::y_tri(), h).size();
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    const int want = oracle::conjugacy_class_count(support::grp(*h));
    os << name << " " << got << "/" << want << " ";
    if (got != want) o.fail(name + ": " + std::to_string(got) + " vs " + std::to_string(want));
    if (dt > kLimit3) o.fail(name + " over time limit");
  }
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome criterion4(const std::vector<CheckList>& corr, const std::vector<fixtures::GridPoint>& grid) {
  Outcome o;
  int hex_points = 0;
  for (size_t k = 0; k < grid.size(); ++k) {
    const auto& cl = corr[k];
    const long long r = cl.counts.at("H1_reduced"), f = cl.counts.at("fiber"), g = cl.counts.at("grothendieck_fiber");
    if (r != f || f != g) o.fail(grid[k].name + ": " + std::to_string(r) + "," + std::to_string(f) + "," + std::to_string(g));
    std::string failed;
    if (!check_names(cl, {"reduced H1 equals the fibre over the cover", "Grothendieck fibre matches from every base",
                          "fibre criteria agree"},
                     failed))
      o.fail(grid[k].name + ": " + failed);
    if (grid[k].space == "X_HEX") {
      ++hex_points;
      const CoverDescent ds = quotient(grid[k].x);
      const int brute = support::brute_fiber(ds, build_twisted_product(grid[k].data));
      if (brute != f) o.fail(grid[k].name + ": oracle fibre " + std::to_string(brute));
    }
    if (grid[k].name == "X_HEX,C4,inv,triv" && !(r == 2 && f == 2 && g == 2)) o.fail("X_HEX,C4,inv,triv is not 2 = 2 = 2");
  }
  if (o.pass)
    o.detail = std::to_string(grid.size()) + " grid points, " + std::to_string(hex_points) +
               " against the brute-force fibre; X_HEX,C4,inv,triv gives 2 = 2 = 2";
  return o;
}

Outcome criterion5(const std::vector<CheckList>& rts, const std::vector<fixtures::GridPoint>& grid) {
  Outcome o;
  for (size_t k = 0; k < grid.size(); ++k) {
    std::string failed;
    const std::vector<std::string> names{"ascend after descend is the identity on classes",
                                         "descend after ascend is the identity",
                                         "induced class of the Ghat cocycle rebuilds the cover"};
    for (const auto& n : names)
      if (!has_check(rts[k], n)) o.fail(grid[k].name + ": missing " + n);
    if (!check_names(rts[k], names, failed)) o.fail(grid[k].name + ": " + failed);
  }
  if (o.pass) o.detail = std::to_string(grid.size()) + " grid points";
  return o;
}

Outcome criterion6(const std::vector<fixtures::GridPoint>& grid) {
  Outcome o;
  int flip_points = 0, flip_caught = 0, checks = 0;
  for (const auto& p : grid) {
    const CheckList cl = les_verify(p.x, p.data);
    checks += static_cast<int>(cl.checks.size());
    for (const auto& c : cl.checks)
      if (!c.pass) o.fail(p.name + ": " + c.name);
    if (p.data.G().order > 2) {
      ++flip_points;
      flip_caught += !les_verify(p.x, p.data, {}, Fault::SignFlip).all_pass();
    }
  }
  if (flip_caught != flip_points) o.fail("sign flip caught on " + std::to_string(flip_caught) + "/" + std::to_string(flip_points));
  if (o.pass)
    o.detail = std::to_string(checks) + " checks pass; sign flip fails on " + std::to_string(flip_caught) + "/" +
               std::to_string(flip_points) + " points with |G| > 2 (on |G| = 2 it is the identity)";
  return o;
}

Outcome criterion7(const std::vector<fixtures::GridPoint>& grid) {
  Outcome o;
  int nonempty = 0;
  for (const auto& p : grid) {
    const bool exists = existence_check(p.x, p.data).exists;
    const int n = h1_twisted(p.x, p.data).size();
    nonempty += n > 0;
    if (exists != (n > 0)) o.fail(p.name);
  }
  // an instance where the answer is no
  const GammaNerve pt = fixtures::nerve_by_name("POINT_C2");
  const TwistedData d = fixtures::c2_cocycle(trivial_action(builtin_group("C2"), builtin_group("C2")), 1);
  if (existence_check(pt, d).exists || h1_twisted(pt, d).size() != 0) o.fail("POINT_C2 with nontrivial c");
  if (o.pass)
    o.detail = std::to_string(grid.size()) + " grid points (" + std::to_string(nonempty) +
               " nonempty) plus one empty instance";
  return o;
}

Outcome criterion8(const std::vector<fixtures::GridPoint>& grid) {
  Outcome o;
  int sets = 0, lemma_cases = 0;
  long long maps = 0;
  for (const auto& p : grid) {
    const CheckList cl = verify_action_roundtrips(p.data);
    sets += static_cast<int>(cl.counts.at("twisted sets"));
    for (const auto& c : cl.checks)
      if (!c.pass) o.fail(p.name + ": " + c.name);
    if (p.space != "X_HEX") continue;
    const auto hat = build_twisted_product(p.data);
    std::vector<TwistedGSet> es;
    if (hat->group->order <= 8) es.push_back(regular_right(*hat));
    for (const auto& e : es)
      for (const auto& ns : twisted_set_fixtures(p.data)) {
        const TwistedGSet m = ns.set.side == Side::Right ? ns.set : convert_side(ns.set);
        if (m.size > 4) continue;
        const LemmaCount r = equivariant_sections_lemma(e, m);
        ++lemma_cases;
        maps += r.g_maps;
        if (r.disagreements != 0) o.fail(p.name + " " + ns.name + ": lemma disagreement");
      }
  }
  if (lemma_cases == 0) o.fail("no lemma cases");
  if (o.pass)
    o.detail = std::to_string(sets) + " twisted sets; lemma on " + std::to_string(lemma_cases) + " (E, M) pairs, " +
               std::to_string(maps) + " G-maps";
  return o;
}

Outcome criterion9(const std::vector<CheckList>& rts, const std::vector<fixtures::GridPoint>& grid) {
  Outcome o;
  long long total = 0;
  for (size_t k = 0; k < grid.size(); ++k) {
    std::string failed;
    if (!check_names(rts[k], {"recocycling preserves |H1|", "recocycling transport is a class bijection"}, failed))
      o.fail(grid[k].name + ": " + failed);
    total += rts[k].counts.at("recocyclings");
  }
  if (total == 0) o.fail("no admissible recocyclings");
  if (o.pass) o.detail = std::to_string(total) + " admissible s over " + std::to_string(grid.size()) + " grid points";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome criterion10() {
  Outcome o;
  const std::string cli = TWC_CLI_PATH;
  std::array<std::string, 2> out;
  for (int run = 0; run < 2; ++run) {
    const std::string path = "acceptance_run" + std::to_string(run) + ".json";
    const std::string cmd = "\"" + cli + "\" verify all default-grid --out " + path;
    const int rc = std::system(cmd.c_str());
    if (rc != 0) o.fail("run " + std::to_string(run) + " exited with " + std::to_string(rc));
    out[run] = slurp(path);
  }
  if (out[0].empty()) o.fail("empty report");
  if (out[0] != out[1]) o.fail("reports differ");
  if (o.pass) o.detail = "two reports of " + std::to_string(out[0].size()) + " bytes are identical";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const Outcome& o, double dt, double limit) {
    const bool pass = o.pass && (limit <= 0 || dt <= limit);
    failures += !pass;
    std::printf("criterion %d: %s  %s  [%.2f s%s]\n", n, pass ? "PASS" : "FAIL", o.detail.c_str(), dt,
                limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + " s").c_str() : "");
    std::fflush(stdout);
  };
  auto timed = [](const std::function<Outcome()>& f, double& dt) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = f();
    dt = seconds_since(t0);
    return o;
  };
  double dt = 0;
  try {
    const auto grid = fixtures::default_grid();
    Outcome o = timed(criterion1, dt);
    report(1, o, dt, kLimit1);
    o = timed(criterion2, dt);
    report(2, o, dt, kLimit2);
    double worst = 0;
    o = timed([&] { return criterion3(worst); }, dt);
    report(3, o, worst, kLimit3);

    std::vector<CheckList> corr, rts;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& p : grid) {
      corr.push_back(verify_correspondence(p));
      rts.push_back(verify_roundtrips(p));
    }
    const double grid_time = seconds_since(t0);
    o = timed([&] { return criterion4(corr, grid); }, dt);
    report(4, o, grid_time + dt, kLimit4);
    o = criterion5(rts, grid);
    report(5, o, grid_time, kLimit4);
    o = timed([&] { return criterion6(grid); }, dt);
    report(6, o, dt, kLimit6);
    o = timed([&] { return criterion7(grid); }, dt);
    report(7, o, dt, 0);
    o = timed([&] { return criterion8(grid); }, dt);
    report(8, o, dt, kLimit8);
    o = criterion9(rts, grid);
    report(9, o, grid_time, 0);
    o = timed(criterion10, dt);
    report(10, o, dt, 0);
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
