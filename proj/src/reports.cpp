#include "taucat/reports.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace taucat {

namespace {

std::string field_str(Field f) {
  return f.is_rational() ? std::string("Q") : "F" + std::to_string(f.p);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::string dims_str(const Module& m) {
  std::string out;
  for (size_t v = 0; v < m.dims.size(); ++v) {
    if (v) out += ",";
    out += std::to_string(m.dims[v]);
  }
  return out;
}

}  // namespace

std::string member_name(const Inventory& inv, int i) {
  const Quiver& q = inv.alg->quiver();
  for (size_t v = 0; v < q.vertices.size(); ++v)
    if (inv.proj_of[v] == i) return "P" + q.vertices[v];
  for (size_t v = 0; v < q.vertices.size(); ++v)
    if (inv.simple_of[v] == i) return "S" + q.vertices[v];
  for (size_t v = 0; v < q.vertices.size(); ++v)
    if (inv.inj_of[v] == i) return "I" + q.vertices[v];
  int k = 0;
  for (int j = 0; j < i; ++j)
    if (inv.modules[j].dims == inv.modules[i].dims) k++;
  return dims_str(inv.modules[i]) + "#" + std::to_string(k);
}

std::vector<std::string> member_names(const Inventory& inv, const Subset& s) {
  std::vector<std::string> out;
  for (int i : s) out.push_back(member_name(inv, i));
  return out;
}

namespace {

int resolve_reserved(const Inventory& inv, const std::string& tok) {
  const Quiver& q = inv.alg->quiver();
  const char kind = tok[0];
  std::string label = tok.substr(1);
  int v = -1;
  if (label.empty()) {
    if (q.vertices.size() != 1)
      throw UnknownMemberError("bare '" + std::string(1, kind) +
                               "' needs a vertex label unless the quiver has one vertex");
    v = 0;
  } else {
    v = q.vertex_index(label);
    if (v < 0)
      throw UnknownMemberError("unknown vertex '" + label + "' in member '" + tok + "'");
  }
  if (kind == 'P') return inv.proj_of[v];
  if (kind == 'S') return inv.simple_of[v];
  return inv.inj_of[v];
}

int resolve_dimvec(const Inventory& inv, const std::vector<int>& dims, int k,
                   const std::string& shown) {
  for (int i = 0; i < inv.size(); ++i) {
    if (inv.modules[i].dims != dims) continue;
    if (k == 0) return i;
    k--;
  }
  throw UnknownMemberError("no inventory member named '" + shown + "'");
}

}  // namespace

Subset parse_member_spec(const Inventory& inv, const std::string& spec) {
  const int nv = inv.alg->n_vertices();
  std::vector<std::string> tokens;
  std::string cur;
  std::stringstream ss(spec);
  while (std::getline(ss, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) tokens.push_back(cur);
  }

  std::vector<int> pending;  // integer tokens awaiting a '#' closer
  std::vector<int> out;
  for (const std::string& tok : tokens) {
    size_t hash = tok.find('#');
    if (hash != std::string::npos) {
      std::string last = tok.substr(0, hash);
      std::string idx = tok.substr(hash + 1);
      if (!is_integer(last) || !is_integer(idx))
        throw MemberSyntaxError("malformed dimension-vector member '" + tok + "'");
      if ((int)pending.size() < nv - 1)
        throw MemberSyntaxError("dimension vector before '" + tok + "' has too few components");
      std::vector<int> dims(pending.end() - (nv - 1), pending.end());
      pending.resize(pending.size() - (nv - 1));
      dims.push_back(std::stoi(last));
      std::string shown = "";
      for (size_t i = 0; i < dims.size(); ++i) shown += (i ? "," : "") + std::to_string(dims[i]);
      shown += "#" + idx;
      out.push_back(resolve_dimvec(inv, dims, std::stoi(idx), shown));
    } else if (tok[0] == 'P' || tok[0] == 'S' || tok[0] == 'I') {
      out.push_back(resolve_reserved(inv, tok));
    } else if (is_integer(tok)) {
      pending.push_back(std::stoi(tok));
    } else {
      throw UnknownMemberError("unknown member name '" + tok + "'");
    }
  }
  for (int idx : pending) {
    if (idx < 0 || idx >= inv.size())
      throw UnknownMemberError("inventory index " + std::to_string(idx) + " out of range");
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  unsigned long long h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

Json algebra_json(const BoundAlgebra& a, const std::string& file,
                  const std::string& bytes, int inventory_size) {
  const Quiver& q = a.quiver();
  Json j;
  j["file"] = file;
  j["fingerprint"] = fnv1a_hex(bytes) + ":" + field_str(a.field());
  j["field"] = field_str(a.field());
  j["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const Arrow& ar : q.arrows)
    arrows.push_back(ar.name + ": " + q.vertices[ar.src] + " -> " + q.vertices[ar.tgt]);
  j["arrows"] = arrows;
  Json rels = Json::array();
  for (const Relation& r : a.relations()) rels.push_back(r.text);
  j["relations"] = rels;
  j["dim"] = a.dim();
  j["inventory_size"] = inventory_size;
  return j;
}

Json inventory_json(const Inventory& inv) {
  Json members = Json::array();
  for (int i = 0; i < inv.size(); ++i) {
    const Module& m = inv.modules[i];
    Json e;
    e["name"] = member_name(inv, i);
    e["index"] = i;
    e["dim_vector"] = m.dims;
    e["total_dim"] = m.total_dim();
    e["projective"] = (bool)inv.is_proj[i];
    e["injective"] = (bool)inv.is_inj[i];
    bool simple = false;
    for (size_t v = 0; v < inv.simple_of.size(); ++v)
      if (inv.simple_of[v] == i) simple = true;
    e["simple"] = simple;
    members.push_back(std::move(e));
  }
  Json j;
  j["count"] = inv.size();
  j["members"] = std::move(members);
  return j;
}

Json subset_json(const Inventory& inv, const Subset& s) {
  Json j = Json::array();
  for (int i : s) j.push_back(member_name(inv, i));
  return j;
}

Json approx_json(const Inventory& inv, const Approximation& ap) {
  Json j;
  j["side"] = ap.left ? "left" : "right";
  Json tg = Json::array();
  for (const ApproxSummand& sm : ap.summands) tg.push_back(member_name(inv, sm.member));
  j["target_summands"] = std::move(tg);
  j["map_zero"] = ap.map_zero;
  j["mono"] = ap.mono;
  j["epi"] = ap.epi;
  j["cokernel"] = subset_json(inv, ap.coker_pieces);
  return j;
}

namespace {

Json proj_witness_json(const Inventory& inv, const ProjWitness& w) {
  Json j;
  j["vertex"] = w.vertex;
  j["approximation"] = approx_json(inv, w.approx);
  j["cokernel_in_subcat"] = w.coker_in_s;
  j["map_nonzero"] = w.map_nonzero;
  return j;
}

Json tilt_witness_json(const Inventory& inv, const TiltWitness& w) {
  Json j;
  j["vertex"] = w.vertex;
  j["approximation"] = approx_json(inv, w.approx);
  j["mono"] = w.mono;
  j["cokernel_in_subcat"] = w.coker_in_s;
  return j;
}

}  // namespace

Json stt_report_json(const Inventory& inv, const SttReport& r) {
  Json j;
  j["subcat"] = subset_json(inv, r.s);
  j["tau_rigid"] = r.tau_rigid;
  j["support_tau_tilting"] = r.support_tau_tilting;
  j["tau_tilting"] = r.tau_tilting;
  Json ws = Json::array();
  for (const ProjWitness& w : r.projs) ws.push_back(proj_witness_json(inv, w));
  j["projectives"] = std::move(ws);
  return j;
}

Json tilt_report_json(const Inventory& inv, const TiltReport& r) {
  Json j;
  j["subcat"] = subset_json(inv, r.s);
  j["partial_tilting"] = r.partial_tilting;
  j["tilting"] = r.tilting;
  Json ws = Json::array();
  for (const TiltWitness& w : r.projs) ws.push_back(tilt_witness_json(inv, w));
  j["projectives"] = std::move(ws);
  return j;
}

Json completion_json(const Inventory& inv, const Completion& c) {
  Json j;
  j["method"] = c.method;
  j["input"] = subset_json(inv, c.input);
  j["intermediate"] = subset_json(inv, c.intermediate);
  j["output"] = subset_json(inv, c.output);
  j["contains_input"] = c.contains_input;
  j["verified"] = c.verified;
  Json ws = Json::array();
  for (const ProjWitness& w : c.stt_witness) ws.push_back(proj_witness_json(inv, w));
  for (const TiltWitness& w : c.tilt_witness) ws.push_back(tilt_witness_json(inv, w));
  j["witnesses"] = std::move(ws);
  return j;
}

Json theorem_json(const Inventory& inv, const TheoremResult& r) {
  Json j;
  j["theorem"] = r.id;
  j["applicable"] = r.applicable;
  j["cases"] = r.cases;
  j["pass"] = r.pass;
  j["note"] = r.note;
  Json fs = Json::array();
  for (const CaseFailure& f : r.failures) {
    Json e;
    e["what"] = f.what;
    e["subset"] = subset_json(inv, f.subset);
    fs.push_back(std::move(e));
  }
  j["failures"] = std::move(fs);
  return j;
}

Json bijection_json(const Inventory& inv, const BijectionReport& r) {
  Json j;
  j["stt_count"] = r.stt.size();
  j["fixed_point_count"] = r.fixed_points.size();
  j["injective"] = r.injective;
  j["retraction"] = r.retraction_ok;
  j["image_matches_fixed_points"] = r.image_is_fixed;
  j["quotient_closed"] = r.quotient_closed;
  j["extension_closed"] = r.extension_closed;
  j["pass"] = r.pass;
  Json pairs = Json::array();
  for (size_t k = 0; k < r.stt.size(); ++k) {
    Json e;
    e["stt"] = subset_json(inv, r.stt[k]);
    e["fac"] = subset_json(inv, r.images[k]);
    pairs.push_back(std::move(e));
  }
  j["bijection"] = std::move(pairs);
  return j;
}

namespace {

std::string node_label(const Inventory& inv, const Subset& s) {
  return "{" + join(member_names(inv, s), ",") + "}";
}

}  // namespace

std::string dot_tors_hasse(const Inventory& inv, const std::vector<Subset>& fixed) {
  std::ostringstream os;
  os << "digraph tors_hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < fixed.size(); ++i)
    os << "  n" << i << " [label=\"" << node_label(inv, fixed[i]) << "\"];\n";
  for (size_t i = 0; i < fixed.size(); ++i) {
    for (size_t j = 0; j < fixed.size(); ++j) {
      if (i == j) continue;
      if (!(fixed[i] != fixed[j] && subset_contains_all(fixed[j], fixed[i]))) continue;
      bool cover = true;
      for (size_t k = 0; k < fixed.size() && cover; ++k) {
        if (k == i || k == j) continue;
        if (subset_contains_all(fixed[k], fixed[i]) && fixed[k] != fixed[i] &&
            subset_contains_all(fixed[j], fixed[k]) && fixed[k] != fixed[j])
          cover = false;
      }
      if (cover) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string dot_stt_exchange(const Inventory& inv, const std::vector<Subset>& stt) {
  // Support-completed pair: the members, plus one marker per vertex outside
  // the support. Exchange edges join pairs differing in exactly one element.
  const int nv = inv.alg->n_vertices();
  auto pair_set = [&](const Subset& s) {
    std::vector<int> ps;  // members as-is; complement projectives as n + v
    for (int i : s) ps.push_back(i);
    for (int v = 0; v < nv; ++v) {
      bool supported = false;
      for (int i : s)
        if (inv.modules[i].dims[v] > 0) supported = true;
      if (!supported) ps.push_back(inv.size() + v);
    }
    std::sort(ps.begin(), ps.end());
    return ps;
  };
  std::vector<std::vector<int>> pairs;
  for (const Subset& s : stt) pairs.push_back(pair_set(s));

  std::ostringstream os;
  os << "graph stt_exchange {\n  node [shape=box];\n";
  for (size_t i = 0; i < stt.size(); ++i)
    os << "  n" << i << " [label=\"" << node_label(inv, stt[i]) << "\"];\n";
  for (size_t i = 0; i < stt.size(); ++i) {
    for (size_t j = i + 1; j < stt.size(); ++j) {
      std::vector<int> diff;
      std::set_symmetric_difference(pairs[i].begin(), pairs[i].end(), pairs[j].begin(),
                                    pairs[j].end(), std::back_inserter(diff));
      if (diff.size() == 2) os << "  n" << i << " -- n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace taucat
