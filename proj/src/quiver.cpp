#include "taucat/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace taucat {

int Quiver::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

struct Line {
  int no;
  std::string text;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool is_numeric_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  bool digit = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit = true;
    } else if (s[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else {
      return false;
    }
  }
  return digit;
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

// One relation polynomial: terms separated by top-level + / -.
std::vector<std::pair<int, std::string>> split_terms(const std::string& s) {
  std::vector<std::pair<int, std::string>> terms;  // (sign, body)
  int sign = 1;
  std::string cur;
  bool seen_any = false;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if ((c == '+' || c == '-') && (!seen_any || trim(cur).empty())) {
      // leading sign of the next term
      if (c == '-') sign = -sign;
      seen_any = true;
      continue;
    }
    if (c == '+' || c == '-') {
      terms.push_back({sign, trim(cur)});
      cur.clear();
      sign = (c == '-') ? -1 : 1;
      continue;
    }
    cur += c;
    seen_any = true;
  }
  terms.push_back({sign, trim(cur)});
  return terms;
}

}  // namespace

ParsedQuiver parse_quiver_text(const std::string& text) {
  ParsedQuiver pq;
  Quiver& q = pq.quiver;
  bool field_seen = false, vertices_seen = false;

  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (!raw.empty()) lines.push_back({no, raw});
    }
  }

  std::vector<std::pair<int, std::string>> relation_chunks;  // (line, text)

  for (const Line& ln : lines) {
    size_t colon = ln.text.find(':');
    if (colon == std::string::npos)
      throw ParseError(ln.no, 1, "expected 'key: value'");
    std::string key = trim(ln.text.substr(0, colon));
    std::string val = trim(ln.text.substr(colon + 1));

    if (key == "field") {
      if (field_seen) throw ParseError(ln.no, 1, "duplicate field declaration");
      field_seen = true;
      if (val == "Q") {
        q.field = Field{0};
      } else if (val.size() >= 2 && val[0] == 'F') {
        std::string num = val.substr(1);
        if (!is_numeric_literal(num) || num.find('/') != std::string::npos)
          throw ParseError(ln.no, static_cast<int>(colon) + 2, "bad field '" + val + "'");
        long p = std::stol(num);
        if (p < 2) throw ParseError(ln.no, static_cast<int>(colon) + 2, "field modulus must be >= 2");
        // primality check: trial division (desk scale)
        for (long d = 2; d * d <= p; ++d)
          if (p % d == 0)
            throw ParseError(ln.no, static_cast<int>(colon) + 2, "field modulus must be prime");
        q.field = Field{static_cast<unsigned long>(p)};
      } else {
        throw ParseError(ln.no, static_cast<int>(colon) + 2, "bad field '" + val + "' (use Q or Fp)");
      }
    } else if (key == "vertices") {
      vertices_seen = true;
      std::istringstream vs(val);
      std::string v;
      while (vs >> v) {
        if (!valid_label(v)) throw ParseError(ln.no, 1, "bad vertex label '" + v + "'");
        if (q.vertex_index(v) >= 0) throw ParseError(ln.no, 1, "duplicate vertex '" + v + "'");
        q.vertices.push_back(v);
      }
    } else if (key == "arrows") {
      if (trim(val).empty()) continue;
      for (const std::string& chunk : split(val, ',')) {
        std::string a = trim(chunk);
        if (a.empty()) throw ParseError(ln.no, 1, "empty arrow declaration");
        size_t c2 = a.find(':');
        if (c2 == std::string::npos) throw ParseError(ln.no, 1, "arrow needs 'name: src -> tgt'");
        std::string name = trim(a.substr(0, c2));
        std::string rest = trim(a.substr(c2 + 1));
        size_t arr = rest.find("->");
        if (arr == std::string::npos) throw ParseError(ln.no, 1, "arrow needs 'src -> tgt'");
        std::string sv = trim(rest.substr(0, arr));
        std::string tv = trim(rest.substr(arr + 2));
        if (!valid_label(name)) throw ParseError(ln.no, 1, "bad arrow label '" + name + "'");
        if (is_numeric_literal(name))
          throw ParseError(ln.no, 1, "arrow label '" + name + "' must not be a numeric literal");
        if (q.arrow_index(name) >= 0) throw ParseError(ln.no, 1, "duplicate arrow '" + name + "'");
        int si = q.vertex_index(sv), ti = q.vertex_index(tv);
        if (si < 0) throw ParseError(ln.no, 1, "unknown vertex '" + sv + "'");
        if (ti < 0) throw ParseError(ln.no, 1, "unknown vertex '" + tv + "'");
        q.arrows.push_back(Arrow{name, si, ti});
      }
    } else if (key == "relations") {
      if (trim(val).empty()) continue;
      for (const std::string& chunk : split(val, ','))
        relation_chunks.push_back({ln.no, trim(chunk)});
    } else {
      throw ParseError(ln.no, 1, "unknown directive '" + key + "'");
    }
  }

  if (!vertices_seen || q.vertices.empty())
    throw ParseError(lines.empty() ? 1 : lines.back().no, 1, "algebra needs at least one vertex");

  for (auto& [lno, chunk] : relation_chunks) {
    if (chunk.empty()) throw ParseError(lno, 1, "empty relation");
    Relation rel;
    rel.text = chunk;
    for (auto& [sign, body] : split_terms(chunk)) {
      if (body.empty()) throw ParseError(lno, 1, "empty term in relation '" + chunk + "'");
      RelTerm term;
      Scalar coeff(q.field, sign);
      std::vector<int> rl_arrows;  // right-to-left as written
      bool first_factor = true;
      for (const std::string& fraw : split(body, '*')) {
        std::string fct = trim(fraw);
        if (fct.empty()) throw ParseError(lno, 1, "empty factor in relation '" + chunk + "'");
        if (first_factor && is_numeric_literal(fct)) {
          coeff = coeff * Scalar::parse(q.field, fct);
          first_factor = false;
          continue;
        }
        first_factor = false;
        int ai = q.arrow_index(fct);
        if (ai < 0) throw ParseError(lno, 1, "unknown arrow '" + fct + "' in relation '" + chunk + "'");
        rl_arrows.push_back(ai);
      }
      if (rl_arrows.empty())
        throw ParseError(lno, 1, "relation term without arrows in '" + chunk + "'");
      term.coeff = coeff;
      term.arrows.assign(rl_arrows.rbegin(), rl_arrows.rend());  // to chronological
      for (size_t i = 0; i + 1 < term.arrows.size(); ++i)
        if (q.arrows[term.arrows[i]].tgt != q.arrows[term.arrows[i + 1]].src)
          throw ParseError(lno, 1, "term in relation '" + chunk + "' is not a composable path");
      if (term.arrows.size() < 2)
        throw ParseError(lno, 1, "relation '" + chunk + "' has a term of length < 2");
      if (term.coeff.is_zero())
        throw ParseError(lno, 1, "relation '" + chunk + "' has a zero coefficient");
      rel.terms.push_back(term);
    }
    int src = q.arrows[rel.terms[0].arrows.front()].src;
    int tgt = q.arrows[rel.terms[0].arrows.back()].tgt;
    for (const RelTerm& t : rel.terms) {
      if (q.arrows[t.arrows.front()].src != src || q.arrows[t.arrows.back()].tgt != tgt)
        throw ParseError(lno, 1, "relation '" + chunk + "' mixes non-parallel paths");
    }
    rel.src = src;
    rel.tgt = tgt;
    pq.relations.push_back(rel);
  }

  return pq;
}

}  // namespace taucat
