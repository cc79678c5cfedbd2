#include "twc/io.hpp"

#include <filesystem>
#include <fstream>

#include "twc/fixtures.hpp"

namespace twc::io {

namespace {

ValidationError bad_input(const std::string& what) { return ValidationError("InvalidInput", what); }

template <class T>
T field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw bad_input(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw bad_input(where + ": field '" + key + "' has the wrong type");
  }
}

GroupPtr group_ref(const json& j, int max_order) {
  if (j.is_string()) return load_group(j.get<std::string>(), max_order);
  return group_from_json(j, max_order);
}

}  // namespace

json read_json_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw bad_input("no such file '" + path + "'");
  std::ifstream in(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw bad_input("'" + path + "' is not valid JSON: " + e.what());
  }
}

GroupPtr group_from_json(const json& j, int max_order) {
  const auto label = j.is_object() && j.contains("label") ? field<std::string>(j, "label", "group") : std::string{};
  const auto order = field<int>(j, "order", "group");
  const auto mul = field<Table>(j, "mul", "group");
  if (order > max_order) throw BudgetExceeded("group order " + std::to_string(order) + " above --budget-order", {order});
  if (static_cast<int>(mul.size()) != order) throw ValidationError("InvalidTable", "table size differs from order", {order});
  return make_group(mul, label);
}

GroupPtr load_group(const std::string& ref, int max_order) {
  GroupPtr g = has_builtin_group(ref) ? builtin_group(ref) : group_from_json(read_json_file(ref), max_order);
  if (g->order > max_order) throw BudgetExceeded("group order " + std::to_string(g->order) + " above --budget-order", {g->order});
  return g;
}

GammaAction load_action(const GroupPtr& gamma, const GroupPtr& g, const std::string& ref) {
  if (ref == "triv") return trivial_action(gamma, g);
  const bool c2 = gamma->order == 2;
  if (ref == "inv" || ref == "outer" || ref.rfind("conj:", 0) == 0) {
    if (!c2) throw ValidationError("InvalidAction", "'" + ref + "' needs Gamma of order 2");
    if (ref == "inv") return cyclic_action(gamma, g, g->inv);
    if (ref == "outer") {
      if (g->label != "Q8") throw ValidationError("InvalidAction", "'outer' is defined for Q8 only");
      return fixtures::theta_q8_swap(g);
    }
    int x = -1;
    try {
      x = std::stoi(ref.substr(5));
    } catch (const std::exception&) {
      throw bad_input("bad element in '" + ref + "'");
    }
    if (x < 0 || x >= g->order) throw bad_input("element out of range in '" + ref + "'");
    std::vector<int> aut(g->order);
    for (int y = 0; y < g->order; ++y) aut[y] = g->op(g->op(x, y), g->inv[x]);
    return cyclic_action(gamma, g, aut);
  }
  return make_action(gamma, g, field<Table>(read_json_file(ref), "theta", ref));
}

TwistedData load_cocycle(const GammaAction& act, const std::string& ref) {
  if (ref == "triv") return trivial_data(act);
  if (ref == "cQ") {
    if (act.gamma->order != 2) throw ValidationError("InvalidCocycle", "'cQ' needs Gamma of order 2");
    const int z = fixtures::order_two_central(*act.g);
    if (z < 0) throw ValidationError("InvalidCocycle", "G has no unique central involution");
    return fixtures::c2_cocycle(act, z);
  }
  return check_cocycle(act, field<Table>(read_json_file(ref), "c", ref));
}

TwistedData load_twisted_data(const std::string& path, int max_order) {
  const json j = read_json_file(path);
  if (!j.contains("gamma") || !j.contains("g")) throw bad_input(path + ": needs 'gamma' and 'g'");
  const GroupPtr gamma = group_ref(j["gamma"], max_order);
  const GroupPtr g = group_ref(j["g"], max_order);
  const GammaAction act = make_action(gamma, g, field<Table>(j, "theta", path));
  return check_cocycle(act, field<Table>(j, "c", path));
}

GammaNerve load_space(const std::string& ref, int max_order) {
  if (!std::filesystem::exists(ref)) return fixtures::nerve_by_name(ref);
  const json j = read_json_file(ref);
  const int n = field<int>(j, "vertices", ref);
  const auto simplices = field<std::vector<std::vector<int>>>(j, "simplices", ref);
  for (const auto& s : simplices)
    for (int v : s)
      if (v < 0 || v >= n) throw bad_input(ref + ": vertex out of range");
  const Nerve nerve = nerve_from_maximal(n, simplices);
  if (!j.contains("gamma")) return trivial_gamma_nerve(nerve);
  return validate_gamma_nerve(nerve, group_ref(j["gamma"], max_order), field<Table>(j, "act", ref));
}

json cocycle_json(const GammaNerve& x, const TwistedCocycle& c) {
  json a = json::object();
  for (size_t e = 0; e < x.nerve.edges.size(); ++e)
    a[std::to_string(x.nerve.edges[e][0]) + "-" + std::to_string(x.nerve.edges[e][1])] = c.a[e];
  json phi = json::object();
  for (size_t gm = 0; gm < c.phi.size(); ++gm) phi[std::to_string(gm)] = c.phi[gm];
  return json{{"a", a}, {"phi", phi}};
}

}  // namespace twc::io
