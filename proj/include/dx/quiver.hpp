#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dx {

struct Arrow {
  std::string label;
  int src = 0, tgt = 0;
};

// A path as a sequence of arrow indices, traversed left to right.
struct Path {
  int src = 0, tgt = 0;
  std::vector<int> arrows;
  bool operator==(const Path&) const = default;
};

struct Quiver {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  // Source layout for printing: field = -1 is a verbatim comment/blank line;
  // field 0/1/2 (name/vertices/arrows) carries its trailing comment in text.
  struct Line {
    int field = -1;
    std::string text;
  };
  std::vector<Line> layout;

  int n() const { return static_cast<int>(vertices.size()); }
  int vertex_index(const std::string& label) const;
  bool is_acyclic() const;
  Quiver opposite() const;

  // All paths u ~> v (including the trivial path when u == v).
  std::vector<Path> paths(int u, int v) const;
};

struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Quiver parse_quiver(const std::string& text);
std::string print_quiver(const Quiver& q);
Quiver load_quiver(const std::string& path);

Quiver linear_a(int n, const std::string& name = "");
// Positive definiteness of the symmetrized Tits form (Dynkin test).
bool tits_form_positive_definite(const Quiver& q);

}  // namespace dx
