#include "dx/quiver.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "dx/ratlin.hpp"

namespace dx {

int Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (vertices[i] == label) return i;
  return -1;
}

bool Quiver::is_acyclic() const {
  std::vector<int> state(n(), 0);
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (const auto& a : arrows) {
      if (a.src != v) continue;
      if (state[a.tgt] == 1) return false;
      if (state[a.tgt] == 0 && !dfs(a.tgt)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < n(); ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

Quiver Quiver::opposite() const {
  Quiver q = *this;
  for (auto& a : q.arrows) std::swap(a.src, a.tgt);
  q.layout.clear();
  return q;
}

std::vector<Path> Quiver::paths(int u, int v) const {
  std::vector<Path> out;
  Path cur{u, u, {}};
  std::function<void(int)> walk = [&](int w) {
    if (w == v) {
      cur.tgt = v;
      out.push_back(cur);
    }
    for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
      if (arrows[i].src != w) continue;
      cur.arrows.push_back(i);
      walk(arrows[i].tgt);
      cur.arrows.pop_back();
    }
  };
  walk(u);
  return out;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Node {
  bool is_list = false;
  std::string token;
  std::vector<Node> items;
};

class ListParser {
 public:
  ListParser(const std::string& s, int line) : s_(s), line_(line) {}
  Node parse() {
    Node n = item();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing text");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw QuiverError("syntax error at line " + std::to_string(line_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  Node item() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of line");
    Node n;
    if (s_[pos_] == '[') {
      n.is_list = true;
      ++pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return n;
      }
      while (true) {
        n.items.push_back(item());
        skip();
        if (pos_ >= s_.size()) fail("unterminated list");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (s_[pos_] == ']') {
          ++pos_;
          return n;
        }
        fail(std::string("unexpected character '") + s_[pos_] + "'");
      }
    }
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '[') ++pos_;
    n.token = trim(s_.substr(b, pos_ - b));
    if (n.token.empty()) fail("empty token");
    return n;
  }
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace

Quiver parse_quiver(const std::string& text) {
  Quiver q;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool seen[3] = {false, false, false};
  int arrows_line = 0;
  std::vector<std::vector<std::string>> arrow_tokens;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string t = trim(raw);
    if (t.empty() || t[0] == '#') {
      q.layout.push_back({-1, raw});
      continue;
    }
    std::size_t hash = raw.find('#');
    std::string content = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::string body = trim(content);
    std::string tail;
    if (hash != std::string::npos) {
      std::size_t end = content.find_last_not_of(" \t\r");
      tail = raw.substr(end == std::string::npos ? 0 : end + 1);
    }
    std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw QuiverError("syntax error at line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(body.substr(0, eq)), val = trim(body.substr(eq + 1));
    int field = key == "name" ? 0 : key == "vertices" ? 1 : key == "arrows" ? 2 : -1;
    if (field < 0) throw QuiverError("syntax error at line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (seen[field]) throw QuiverError("syntax error at line " + std::to_string(lineno) + ": repeated key '" + key + "'");
    seen[field] = true;
    q.layout.push_back({field, tail});
    if (field == 0) {
      if (val.empty()) throw QuiverError("syntax error at line " + std::to_string(lineno) + ": empty name");
      q.name = val;
    } else if (field == 1) {
      Node n = ListParser(val, lineno).parse();
      if (!n.is_list) throw QuiverError("syntax error at line " + std::to_string(lineno) + ": vertices must be a list");
      std::set<std::string> seen_v;
      for (const auto& it : n.items) {
        if (it.is_list) throw QuiverError("syntax error at line " + std::to_string(lineno) + ": vertex must be a label");
        if (!seen_v.insert(it.token).second) throw QuiverError("duplicate label '" + it.token + "' at line " + std::to_string(lineno));
        q.vertices.push_back(it.token);
      }
    } else {
      arrows_line = lineno;
      Node n = ListParser(val, lineno).parse();
      if (!n.is_list) throw QuiverError("syntax error at line " + std::to_string(lineno) + ": arrows must be a list");
      for (const auto& it : n.items) {
        if (!it.is_list || it.items.size() != 3)
          throw QuiverError("syntax error at line " + std::to_string(lineno) + ": arrow must be [label, src, tgt]");
        std::vector<std::string> tok;
        for (const auto& x : it.items) {
          if (x.is_list) throw QuiverError("syntax error at line " + std::to_string(lineno) + ": nested list in arrow");
          tok.push_back(x.token);
        }
        arrow_tokens.push_back(tok);
      }
    }
  }
  for (int f = 0; f < 3; ++f)
    if (!seen[f]) {
      static const char* names[] = {"name", "vertices", "arrows"};
      throw QuiverError(std::string("syntax error at line ") + std::to_string(lineno) + ": missing key '" + names[f] + "'");
    }
  std::set<std::string> labels(q.vertices.begin(), q.vertices.end());
  for (const auto& tok : arrow_tokens) {
    if (!labels.insert(tok[0]).second) throw QuiverError("duplicate label '" + tok[0] + "' at line " + std::to_string(arrows_line));
    int s = q.vertex_index(tok[1]), t = q.vertex_index(tok[2]);
    if (s < 0 || t < 0)
      throw QuiverError("syntax error at line " + std::to_string(arrows_line) + ": arrow '" + tok[0] + "' uses an unknown vertex");
    q.arrows.push_back({tok[0], s, t});
  }
  if (!q.is_acyclic()) throw QuiverError("cycle: the quiver has an oriented cycle");
  return q;
}

std::string print_quiver(const Quiver& q) {
  auto field_text = [&](int f) {
    std::string s;
    if (f == 0) return "name = " + q.name;
    if (f == 1) {
      s = "vertices = [";
      for (int i = 0; i < q.n(); ++i) s += (i ? ", " : "") + q.vertices[i];
      return s + "]";
    }
    s = "arrows = [";
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
      const auto& a = q.arrows[i];
      s += (i ? ", [" : "[") + a.label + ", " + q.vertices[a.src] + ", " + q.vertices[a.tgt] + "]";
    }
    return s + "]";
  };
  std::string out;
  if (q.layout.empty()) {
    for (int f = 0; f < 3; ++f) out += field_text(f) + "\n";
    return out;
  }
  for (const auto& l : q.layout) out += (l.field < 0 ? l.text : field_text(l.field) + l.text) + "\n";
  return out;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw QuiverError("cannot read quiver file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver(ss.str());
}

Quiver linear_a(int n, const std::string& name) {
  Quiver q;
  q.name = name.empty() ? "A" + std::to_string(n) : name;
  for (int i = 1; i <= n; ++i) q.vertices.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
  return q;
}

bool tits_form_positive_definite(const Quiver& q) {
  const int n = q.n();
  QMat b(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = 2;
  for (const auto& a : q.arrows) {
    b(a.src, a.tgt) -= 1;
    b(a.tgt, a.src) -= 1;
  }
  // Leading principal minors via elimination without pivoting.
  for (int k = 0; k < n; ++k) {
    if (sgn(b(k, k)) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Q f = b(i, k) / b(k, k);
      for (int j = k; j < n; ++j) b(i, j) -= f * b(k, j);
    }
  }
  return true;
}

}  // namespace dx
