// taucat: predicates, completions, enumerations, theorem verifiers and graph
// exports for subcategories of modules over a bound quiver algebra.
//
// Exit codes: 0 pass, 2 parse error, 3 unknown member, 4 precondition
// violation, 5 resource cap exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "taucat/parallel.hpp"
#include "taucat/reports.hpp"

using namespace taucat;

namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

int inventory_cap() {
  const char* c = std::getenv("TAUCAT_CAP");
  if (!c || !*c) return 256;
  char* end = nullptr;
  long v = std::strtol(c, &end, 10);
  if (!end || *end != '\0' || v <= 0) throw FileError("invalid TAUCAT_CAP value");
  return (int)v;
}

// The inventory and tables hold pointers into the algebra and inventory, so
// everything lives behind one stable heap allocation.
struct Loaded {
  std::string file;
  std::string bytes;
  BoundAlgebra alg;
  Inventory inv;
  Tables tables;
};

std::unique_ptr<Loaded> load(const std::string& path) {
  auto t0 = std::chrono::steady_clock::now();
  auto L = std::make_unique<Loaded>();
  L->file = path;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  L->bytes = ss.str();
  L->alg = parse_algebra(L->bytes);
  L->inv = build_inventory(L->alg, inventory_cap());
  L->tables = build_tables(L->inv, true);
  std::cerr << "[taucat] " << path << ": dim " << L->alg.dim() << ", inventory "
            << L->inv.size() << ", tables ready in " << ms_since(t0) << " ms ("
            << thread_count() << " threads)\n";
  return L;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Subset support_of(const Inventory& inv, const Subset& s) {
  Subset out;
  for (int v = 0; v < inv.alg->n_vertices(); ++v) {
    bool supported = false;
    for (int i : s)
      if (inv.modules[i].dims[v] > 0) supported = true;
    if (supported) out.push_back(v);
  }
  return out;
}

int cmd_check(const std::string& path, const std::string& members) {
  auto L = load(path);
  Subset s = parse_member_spec(L->inv, members);
  SttReport stt = support_tau_tilting_report(L->tables, s);
  TiltReport tilt = tilting_report(L->tables, s);

  Json j;
  j["command"] = "check";
  j["algebra"] = algebra_json(L->alg, L->file, L->bytes, L->inv.size());
  j["subcat"] = subset_json(L->inv, s);
  j["tau_rigid_def"] = is_tau_rigid_def(L->tables, s);
  j["tau_rigid_ext"] = is_tau_rigid_ext(L->tables, s);
  j["support_tau_tilting"] = stt.support_tau_tilting;
  j["tau_tilting"] = stt.tau_tilting;
  j["partial_tilting"] = tilt.partial_tilting;
  j["tilting"] = tilt.tilting;
  j["fac"] = subset_json(L->inv, fac(L->tables, s));
  j["perp1"] = subset_json(L->inv, perp1(L->tables, s));
  j["support_report"] = stt_report_json(L->inv, stt);
  j["tilting_report"] = tilt_report_json(L->inv, tilt);
  emit(j);
  return 0;
}

int cmd_complete(const std::string& path, const std::string& members,
                 const std::string& method) {
  auto L = load(path);
  Subset s = parse_member_spec(L->inv, members);
  Completion c;
  if (method == "fac")
    c = completion_fac(L->tables, s);
  else if (method == "tau-perp")
    c = bongartz_tau_perp(L->tables, s);
  else
    c = tilting_completion(L->tables, s);

  Json j;
  j["command"] = "complete";
  j["algebra"] = algebra_json(L->alg, L->file, L->bytes, L->inv.size());
  j["completion"] = completion_json(L->inv, c);
  emit(j);
  return 0;
}

int cmd_enumerate(const std::string& path, const std::string& what) {
  auto L = load(path);
  Json j;
  j["command"] = "enumerate";
  j["algebra"] = algebra_json(L->alg, L->file, L->bytes, L->inv.size());
  j["what"] = what;
  Json items = Json::array();
  if (what == "stt") {
    std::vector<Subset> stt = enumerate_support_tau_tilting(L->tables, true);
    for (const Subset& m : stt) {
      Json e;
      e["members"] = subset_json(L->inv, m);
      e["tau_tilting"] = is_tau_tilting(L->tables, m);
      Json sup = Json::array();
      for (int v : support_of(L->inv, m)) sup.push_back(L->alg.quiver().vertices[v]);
      e["support"] = std::move(sup);
      items.push_back(std::move(e));
    }
    j["count"] = stt.size();
  } else {
    std::vector<Subset> fixed = enumerate_fac_fixed_points(L->tables, true);
    for (const Subset& m : fixed) {
      Json e;
      e["members"] = subset_json(L->inv, m);
      e["ext_projectives"] = subset_json(L->inv, ext_projectives(L->tables, m));
      items.push_back(std::move(e));
    }
    j["count"] = fixed.size();
  }
  j["items"] = std::move(items);
  emit(j);
  return 0;
}

TheoremResult run_theorem(const Tables& t, const std::string& id) {
  if (id == "2.2") return verify_lemma_2_2(t, true);
  if (id == "3.2") return verify_thm_3_2(t, true);
  if (id == "3.4") return verify_thm_3_4(t, true);
  if (id == "3.6") return verify_prop_3_6(t, true);
  if (id == "3.7") return verify_cor_3_7(t, true);
  if (id == "4.4") return verify_prop_4_4(t, true);
  if (id == "4.7") return verify_thm_4_7(t, true);
  return verify_lemma_4_8(t, true);
}

int cmd_verify(const std::string& path, const std::string& theorem) {
  auto L = load(path);
  const std::vector<std::string> all = {"2.2", "3.2", "3.4", "3.6", "3.7", "4.4", "4.7", "4.8"};
  std::vector<std::string> ids;
  if (theorem == "all")
    ids = all;
  else
    ids = {theorem};

  Json j;
  j["command"] = "verify";
  j["algebra"] = algebra_json(L->alg, L->file, L->bytes, L->inv.size());
  Json results = Json::array();
  bool all_pass = true;
  bool any_inapplicable_requested = false;
  for (const std::string& id : ids) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremResult r = run_theorem(L->tables, id);
    std::cerr << "[taucat] theorem " << id << ": "
              << (r.applicable ? (r.pass ? "pass" : "FAIL") : "skipped") << ", " << r.cases
              << " cases, " << ms_since(t0) << " ms\n";
    Json e = theorem_json(L->inv, r);
    if (id == "3.4") e["bijection"] = bijection_json(L->inv, verify_bijection(L->tables, true));
    results.push_back(std::move(e));
    if (!r.applicable) {
      if (theorem != "all") any_inapplicable_requested = true;
    } else if (!r.pass) {
      all_pass = false;
    }
  }
  j["theorems"] = std::move(results);
  j["all_pass"] = all_pass;
  emit(j);
  if (any_inapplicable_requested) {
    std::cerr << "[taucat] theorem " << theorem << " not applicable: not hereditary\n";
    return 4;
  }
  return all_pass ? 0 : 1;
}

int cmd_export(const std::string& path, const std::string& graph, const std::string& out) {
  auto L = load(path);
  std::string dot;
  size_t nodes = 0;
  if (graph == "tors-hasse") {
    std::vector<Subset> fixed = enumerate_fac_fixed_points(L->tables, true);
    nodes = fixed.size();
    dot = dot_tors_hasse(L->inv, fixed);
  } else {
    std::vector<Subset> stt = enumerate_support_tau_tilting(L->tables, true);
    nodes = stt.size();
    dot = dot_stt_exchange(L->inv, stt);
  }
  size_t edges = 0;
  for (size_t p = 0; (p = dot.find(graph == "tors-hasse" ? " -> " : " -- ", p)) !=
                     std::string::npos;
       ++p)
    edges++;
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw FileError("cannot write '" + out + "'");
    f << dot;
  }
  Json j;
  j["command"] = "export";
  j["algebra"] = algebra_json(L->alg, L->file, L->bytes, L->inv.size());
  j["graph"] = graph;
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["out"] = out;
  j["dot"] = dot;
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-tilting structure of module categories of bound quiver algebras"};
  app.require_subcommand(1);

  std::string file, members, method, what, theorem = "all", graph, out;

  CLI::App* check = app.add_subcommand("check", "run the predicates on a subcategory");
  check->add_option("file", file, "quiver algebra file")->required();
  check->add_option("--members", members, "member list (P1,S2,I3, indices, or d1,..,dn#k)");

  CLI::App* complete = app.add_subcommand("complete", "complete a subcategory");
  complete->add_option("file", file, "quiver algebra file")->required();
  complete->add_option("--members", members, "member list");
  complete->add_option("--method", method, "fac | tau-perp | tilting")
      ->required()
      ->check(CLI::IsMember({"fac", "tau-perp", "tilting"}));

  CLI::App* enumerate = app.add_subcommand("enumerate", "list stt subcategories or torsion classes");
  enumerate->add_option("file", file, "quiver algebra file")->required();
  enumerate->add_option("--what", what, "stt | tors")
      ->required()
      ->check(CLI::IsMember({"stt", "tors"}));

  CLI::App* verify = app.add_subcommand("verify", "machine-check the structure theorems");
  verify->add_option("file", file, "quiver algebra file")->required();
  verify->add_option("--theorem", theorem, "2.2|3.2|3.4|3.6|3.7|4.4|4.7|4.8|all")
      ->check(CLI::IsMember({"2.2", "3.2", "3.4", "3.6", "3.7", "4.4", "4.7", "4.8", "all"}));

  CLI::App* exp = app.add_subcommand("export", "emit a DOT graph");
  exp->add_option("file", file, "quiver algebra file")->required();
  exp->add_option("--graph", graph, "tors-hasse | stt-exchange")
      ->required()
      ->check(CLI::IsMember({"tors-hasse", "stt-exchange"}));
  exp->add_option("--out", out, "write the DOT text to this path as well");

  CLI11_PARSE(app, argc, argv);

  try {
    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    if (check->parsed()) rc = cmd_check(file, members);
    if (complete->parsed()) rc = cmd_complete(file, members, method);
    if (enumerate->parsed()) rc = cmd_enumerate(file, what);
    if (verify->parsed()) rc = cmd_verify(file, theorem);
    if (exp->parsed()) rc = cmd_export(file, graph, out);
    std::cerr << "[taucat] done in " << ms_since(t0) << " ms\n";
    return rc;
  } catch (const ParseError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 2;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MemberSyntaxError& e) {
    std::cerr << "member list error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownMemberError& e) {
    std::cerr << "unknown member: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 4;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
