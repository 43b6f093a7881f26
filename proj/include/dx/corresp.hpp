#pragma once
// Bijections between silting objects, SMCs, semibricks, torsion(-free)
// classes and wide subcategories, assembled into a cross-checked ledger.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "dx/smc.hpp"

namespace dx {

// {X in window : Hom(P, X[k]) = 0 for k > 0}
Subcat torsion_of_silting(const Window& w, const SiltObj& p);

// SMC of the silting object whose torsion class is T (none if no match).
std::optional<SMC> phi1(const Window& w, const Subcat& t, const std::vector<SiltObj>& silting);
std::optional<SMC> phi2(const Window& w, const Subcat& f, const std::vector<SiltObj>& silting);

// Simples of a wide subcategory W of the heart H_T.
Subcat wide_simples(const Window& w, const Subcat& t, const Subcat& wide);

struct LedgerRow {
  SiltObj silting;
  SMC smc;
  Subcat left, right;  // Pi_1, Pi_2
  Subcat torsion, torsionfree, wide;
};

struct Check {
  std::string check, subject, status, witness;  // status: pass | fail | inconclusive
};

struct Ledger {
  std::string algebra;
  int d = 1;
  std::vector<LedgerRow> rows;
  std::vector<std::vector<Summand>> semibricks;
  std::vector<std::pair<int, int>> hasse;  // torsion-class covers (upper, lower), row indices
  std::vector<Check> checks;
  bool ok() const;
};

Ledger build_ledger(const Window& w, const std::string& algebra);

// Directed graph isomorphism by backtracking on n vertices.
bool digraph_isomorphic(int n, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b);
// Edges of the A2, d=2 poset figure, 1-based, (upper, lower).
const std::vector<std::pair<int, int>>& figure_a2_edges();

nlohmann::json ledger_json(const IndTable& t, const Ledger& l);
std::string ledger_dot(const IndTable& t, const Ledger& l);

}  // namespace dx
