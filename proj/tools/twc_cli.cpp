// twc: command-line front end for the twc library.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twc/fixtures.hpp"
#include "twc/io.hpp"
#include "twc/verify.hpp"

using twc::io::json;

namespace {

constexpr const char* kSchema = "twc-report/1";

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kBudget = 3 };

struct Options {
  int budget_order = 64;
  long long budget_enum = 20'000'000;
  std::string format = "json";
  std::string out;
  unsigned seed = 1;
};

struct Result {
  json report;
  int code = kPass;
  std::vector<std::vector<std::string>> tsv;  // rows; empty means flatten the report
};

json checks_json(const twc::CheckList& cl) {
  json checks = json::array();
  for (const auto& c : cl.checks) {
    json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(j);
  }
  return checks;
}

json counts_json(const twc::CheckList& cl) {
  json j = json::object();
  for (const auto& [k, v] : cl.counts) j[k] = v;
  return j;
}

json error_json(const twc::Error& e) {
  return json{{"kind", e.kind()}, {"message", e.what()}, {"witness", e.witness()}};
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& j, const std::string& path, std::vector<std::vector<std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), rows);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& v) { return v.is_structured(); })) {
    for (size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "." + std::to_string(k), rows);
  } else {
    rows.push_back({path, scalar(j)});
  }
}

std::string render(const Result& r, const std::string& format) {
  if (format == "json") return r.report.dump(2) + "\n";
  std::vector<std::vector<std::string>> rows = r.tsv;
  if (rows.empty()) flatten(r.report, "", rows);
  std::ostringstream os;
  for (const auto& row : rows) {
    for (size_t k = 0; k < row.size(); ++k) os << (k ? "\t" : "") << row[k];
    os << "\n";
  }
  return os.str();
}

json job_json(const Options& o, const std::string& command, json args) {
  return json{{"command", command},
              {"args", std::move(args)},
              {"seed", o.seed},
              {"budget", {{"order", o.budget_order}, {"enum", o.budget_enum}}}};
}

// catalogue used to name twisted products
std::vector<twc::GroupPtr> catalogue() {
  std::vector<twc::GroupPtr> cat;
  for (const auto& n : twc::builtin_group_names()) cat.push_back(twc::builtin_group(n));
  for (int n : {3, 5, 6, 7, 9, 10, 12, 16}) cat.push_back(twc::cyclic_group(n, "C" + std::to_string(n)));
  const auto c2 = twc::builtin_group("C2"), c4 = twc::builtin_group("C4");
  cat.push_back(twc::direct_product(*c2, *c4, "C2xC4"));
  cat.push_back(twc::direct_product(*c2, *twc::builtin_group("C2xC2"), "C2xC2xC2"));
  cat.push_back(twc::direct_product(*c4, *c4, "C4xC4"));
  cat.push_back(twc::direct_product(*c2, *twc::builtin_group("C8"), "C2xC8"));
  cat.push_back(twc::direct_product(*c2, *twc::builtin_group("D4"), "C2xD4"));
  cat.push_back(twc::direct_product(*c2, *twc::builtin_group("Q8"), "C2xQ8"));
  cat.push_back(twc::direct_product(*c2, *twc::builtin_group("S3"), "C2xS3"));
  return cat;
}

std::string identify(const twc::GroupPtr& g, const twc::SearchBudget& sb) {
  for (const auto& h : catalogue())
    if (h->order == g->order && twc::find_isomorphism(g, h, sb)) return h->label;
  return "unidentified";
}

Result cmd_group(const Options& o, const std::string& what, const std::string& ref) {
  Result r;
  json args{{"query", what}, {"group", ref}};
  const twc::GroupPtr g = twc::io::load_group(ref, o.budget_order);
  const twc::SearchBudget sb{o.budget_order, 2'000'000};
  json res{{"label", g->label}, {"order", g->order}};
  if (what == "info") {
    std::vector<int> orders;
    for (int x = 0; x < g->order; ++x) orders.push_back(twc::element_order(*g, x));
    res["abelian"] = twc::is_abelian(*g);
    res["center_order"] = twc::center(*g).elements.size();
    res["element_orders"] = orders;
    res["generators"] = twc::generating_set(*g);
    res["class_count"] = twc::conjugacy_classes(*g).size();
  } else if (what == "aut") {
    const auto aut = twc::automorphisms(g, sb);
    res["aut_order"] = aut.size();
    res["inner_order"] = twc::inner_automorphisms(g).size();
    res["outer_order"] = twc::outer_classes(g, sb).size();
  } else {
    const auto cls = twc::conjugacy_classes(*g);
    std::vector<size_t> sizes;
    for (const auto& c : cls) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    res["sizes"] = sizes;
    res["classes"] = cls;
  }
  r.report = json{{"schema", kSchema}, {"job", job_json(o, "group", args)}, {"status", "pass"}, {"result", res}};
  return r;
}

Result cmd_extensions(const Options& o, const std::string& gamma_ref, const std::string& z_ref,
                      const std::string& action_ref) {
  Result r;
  json args{{"gamma", gamma_ref}, {"z", z_ref}, {"action", action_ref}};
  const twc::GroupPtr gamma = twc::io::load_group(gamma_ref, o.budget_order);
  const twc::GroupPtr z = twc::io::load_group(z_ref, o.budget_order);
  if (!twc::is_abelian(*z)) throw twc::ValidationError("NotAbelian", "coefficient group must be abelian");
  const twc::GammaAction act = twc::io::load_action(gamma, z, action_ref);
  const twc::H2Gamma h2 = twc::second_cohomology(act, o.budget_enum);
  const twc::SearchBudget sb{o.budget_order, 2'000'000};
  json classes = json::array();
  for (const auto& rep : h2.reps) {
    const auto hat = twc::build_twisted_product(twc::check_cocycle(act, rep));
    classes.push_back(json{{"c", rep}, {"trivial", std::all_of(rep.begin(), rep.end(), [](int v) { return v == 0; })},
                           {"order", hat->group->order}, {"isomorphism_type", identify(hat->group, sb)}});
    r.tsv.push_back({std::to_string(classes.size() - 1), classes.back()["isomorphism_type"].get<std::string>(),
                     json(rep).dump()});
  }
  r.tsv.insert(r.tsv.begin(), {"class", "isomorphism_type", "c"});
  json res{{"h2_order", h2.size()}, {"cocycles", h2.cocycle_count}, {"coboundaries", h2.coboundaries.size()},
           {"classes", classes}};
  r.report = json{{"schema", kSchema}, {"job", job_json(o, "extensions classify", args)}, {"status", "pass"},
                  {"result", res}};
  return r;
}

struct H1Input {
  twc::GammaNerve x;
  twc::TwistedData data;
};

H1Input h1_input(const Options& o, const std::string& space, const std::string& group, const std::string& theta,
                 const std::string& cocycle, const std::string& data_file) {
  if (space.find(',') != std::string::npos) {
    const auto pts = twc::fixtures::filter_grid(twc::fixtures::default_grid(), space);
    return {pts.front().x, pts.front().data};
  }
  twc::GammaNerve x = twc::io::load_space(space, o.budget_order);
  if (!data_file.empty()) {
    twc::TwistedData d = twc::io::load_twisted_data(data_file, o.budget_order);
    if (d.Gamma().order != x.gamma->order || d.Gamma().mul != x.gamma->mul)
      throw twc::ValidationError("GammaMismatch", "data and space use different Gamma tables");
    return {x, d};
  }
  const twc::GroupPtr g = twc::io::load_group(group, o.budget_order);
  return {x, twc::io::load_cocycle(twc::io::load_action(x.gamma, g, theta), cocycle)};
}

Result cmd_h1(const Options& o, const std::string& space, const std::string& group, const std::string& theta,
              const std::string& cocycle, const std::string& data_file, bool reduced) {
  Result r;
  json args{{"space", space}, {"reduced", reduced}};
  if (data_file.empty()) {
    args["group"] = group;
    args["theta"] = theta;
    args["cocycle"] = cocycle;
  } else {
    args["data"] = data_file;
  }
  const H1Input in = h1_input(o, space, group, theta, cocycle, data_file);
  const twc::EnumBudget b{o.budget_enum};
  const twc::CohomologySet h = reduced ? twc::h1_reduced(in.x, in.data, b) : twc::h1_twisted(in.x, in.data, b);
  json reps = json::array();
  r.tsv.push_back({"class", "key"});
  for (size_t k = 0; k < h.reps.size(); ++k) {
    reps.push_back(twc::io::cocycle_json(in.x, twc::deserialize(in.x, h.reps[k])));
    r.tsv.push_back({std::to_string(k), json(h.reps[k]).dump()});
  }
  json res{{"kind", reduced ? "reduced" : "twisted"}, {"count", h.size()}, {"distinguished", h.distinguished},
           {"representatives", reps}};
  r.tsv.insert(r.tsv.begin(), {"count", std::to_string(h.size())});
  r.report = json{{"schema", kSchema}, {"job", job_json(o, "h1", args)}, {"status", "pass"}, {"result", res}};
  return r;
}

Result cmd_verify(const Options& o, const std::string& suite, const std::string& grid, const std::string& only,
                  const std::string& fault) {
  Result r;
  json args{{"suite", suite}, {"grid", grid}, {"only", only}};
  if (!fault.empty()) args["fault"] = fault;
  if (grid != "default-grid") throw twc::ValidationError("UnknownFixture", "unknown grid '" + grid + "'");
  const twc::Fault f = fault == "sign-flip" ? twc::Fault::SignFlip : twc::Fault::None;
  std::vector<std::string> suites =
      suite == "all" ? std::vector<std::string>{"les", "correspondence", "roundtrips"} : std::vector<std::string>{suite};
  const auto points = twc::fixtures::filter_grid(twc::fixtures::default_grid(), only);
  const twc::EnumBudget b{o.budget_enum};
  json results = json::array();
  long long total = 0, failed = 0;
  std::string status = "pass";
  r.tsv.push_back({"instance", "suite", "check", "status", "detail"});
  for (const auto& p : points) {
    if (p.data.G().order > o.budget_order) {
      throw twc::BudgetExceeded("instance " + p.name + ": group order above --budget-order", {p.data.G().order});
    }
    for (const auto& s : suites) {
      json item{{"instance", p.name}, {"suite", s}};
      try {
        const twc::CheckList cl = s == "les"              ? twc::verify_les(p, b, o.seed, f)
                                  : s == "correspondence" ? twc::verify_correspondence(p, b, o.seed)
                                                          : twc::verify_roundtrips(p, b, o.seed);
        item["status"] = cl.all_pass() ? "pass" : "fail";
        item["counts"] = counts_json(cl);
        item["checks"] = checks_json(cl);
        for (const auto& c : cl.checks) {
          ++total;
          failed += !c.pass;
          r.tsv.push_back({p.name, s, c.name, c.pass ? "pass" : "fail", c.detail});
        }
        if (!cl.all_pass()) status = "fail";
      } catch (const twc::BudgetExceeded& e) {
        item["status"] = "budget";
        item["error"] = error_json(e);
        results.push_back(item);
        r.report = json{{"schema", kSchema}, {"job", job_json(o, "verify", args)}, {"status", "budget"},
                        {"error", {{"instance", p.name}, {"suite", s}, {"kind", e.kind()}, {"message", e.what()}}},
                        {"results", results}};
        r.tsv.push_back({p.name, s, "budget", "budget", e.what()});
        r.code = kBudget;
        return r;
      }
      results.push_back(item);
    }
  }
  r.report = json{{"schema", kSchema},
                  {"job", job_json(o, "verify", args)},
                  {"status", status},
                  {"summary", {{"instances", points.size()}, {"checks", total}, {"failed", failed}}},
                  {"results", results}};
  r.code = status == "pass" ? kPass : kFail;
  return r;
}

int emit(const Result& r, const Options& o) {
  const std::string text = render(r, o.format);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return kInvalid;
    }
    f << text;
  }
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted equivariant bundle classification"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget-order", o.budget_order, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--budget-enum", o.budget_enum, "Largest cocycle enumeration")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", o.out, "Write the report to this path");
  app.add_option("--seed", o.seed, "Seed for sampled checks");

  std::string what, ref;
  auto* group = app.add_subcommand("group", "Group facts");
  group->add_option("query", what)->required()->check(CLI::IsMember({"info", "aut", "classes"}));
  group->add_option("group", ref, "Built-in name or JSON file")->required();

  std::string verb, gamma_ref, z_ref, action_ref;
  auto* ext = app.add_subcommand("extensions", "Classify extensions by H^2");
  ext->add_option("verb", verb)->required()->check(CLI::IsMember({"classify"}));
  ext->add_option("gamma", gamma_ref)->required();
  ext->add_option("z", z_ref)->required();
  ext->add_option("action", action_ref, "triv, inv, conj:<x> or a JSON file")->required();

  std::string space, g_ref = "C2", theta = "triv", cocycle = "triv", data_file;
  bool reduced = false;
  auto* h1 = app.add_subcommand("h1", "Twisted equivariant H^1");
  h1->add_option("space", space, "Fixture name, grid point name, or JSON file")->required();
  h1->add_option("--group", g_ref);
  h1->add_option("--theta", theta);
  h1->add_option("--cocycle", cocycle);
  h1->add_option("--data", data_file, "TwistedData JSON file");
  h1->add_flag("--reduced", reduced);

  std::string suite, grid, only, fault;
  auto* verify = app.add_subcommand("verify", "Run verification suites over a fixture grid");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember({"les", "correspondence", "roundtrips", "all"}));
  verify->add_option("grid", grid)->required();
  verify->add_option("--only", only, "Grid point names separated by ';'");
  verify->add_option("--inject-fault", fault, "Replace delta by a wrong sign convention")
      ->check(CLI::IsMember({"sign-flip"}));

  for (auto* sub : {group, ext, h1, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kInvalid;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*group) return emit(cmd_group(o, what, ref), o);
    if (*ext) return emit(cmd_extensions(o, gamma_ref, z_ref, action_ref), o);
    if (*h1) return emit(cmd_h1(o, space, g_ref, theta, cocycle, data_file, reduced), o);
    return emit(cmd_verify(o, suite, grid, only, fault), o);
  } catch (const twc::BudgetExceeded& e) {
    Result r{json{{"schema", kSchema}, {"job", {{"command", command}}}, {"status", "budget"}, {"error", error_json(e)}},
             kBudget, {{"budget", e.what()}}};
    return emit(r, o);
  } catch (const twc::ValidationError& e) {
    Result r{json{{"schema", kSchema}, {"job", {{"command", command}}}, {"status", "invalid"}, {"error", error_json(e)}},
             kInvalid, {{"invalid", e.kind(), e.what()}}};
    return emit(r, o);
  } catch (const twc::Error& e) {
    std::cerr << e.what() << "\n";
    return kFail;
  }
}
