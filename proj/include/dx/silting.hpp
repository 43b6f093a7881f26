#pragma once
// (d+1)-term silting objects: enumeration, mutation, the Q-sequence of
// iterated approximations and the silting order.

#include <string>
#include <utility>
#include <vector>

#include "dx/subcat.hpp"

namespace dx {

// Sorted list of pairwise distinct summands.
using SiltObj = std::vector<Summand>;

enum class Direction { Left, Right };

// M@j for 0 <= j <= d-1 and P_v@d.
std::vector<Summand> silting_candidates(const Window& w);
bool is_candidate(const Window& w, const Summand& s);

bool is_presilting(const Window& w, const std::vector<Summand>& p);
// Presilting with n summands (n = number of vertices).
bool is_silting(const Window& w, const std::vector<Summand>& p);

std::vector<SiltObj> enumerate_silting_exhaustive(const Window& w);
std::vector<SiltObj> enumerate_by_mutation(const Window& w);

SiltObj regular(const Window& w, int shift = 0);  // Lambda@shift
WObj silt_wobj(const SiltObj& p);
std::string silt_str(const IndTable& t, const SiltObj& p);

struct MutationResult {
  bool ok = false;
  SiltObj result;
  Summand replaced{}, added{};
  std::string reason;  // why the mutation leaves the window
};
MutationResult mutate(const Window& w, const SiltObj& p, int i, Direction dir);

struct QSequence {
  std::vector<WObj> z, q;  // Z_0..Z_d, Q_0..Q_d
  std::vector<WMor> f;     // f_j : Z_j -> Q_j
};
QSequence q_sequence(const Window& w, const SiltObj& p);
// Triangle, approximation and vanishing properties of a computed sequence.
Verdict check_q_sequence(const Window& w, const SiltObj& p, const QSequence& qs);

bool mutation_exists(const Window& w, const SiltObj& p, int i, Direction dir);
bool mutation_exists(const SiltObj& p, const QSequence& qs, int i, Direction dir);

// P <= Q iff Hom(Q, P[k]) = 0 for all k > 0.
bool silting_leq(const Window& w, const SiltObj& p, const SiltObj& q);

struct Poset {
  std::vector<SiltObj> nodes;
  std::vector<std::vector<char>> leq;          // leq[i][j]: nodes[i] <= nodes[j]
  std::vector<std::pair<int, int>> hasse;      // (upper, lower) covers
};
Poset hasse_poset(const Window& w, const std::vector<SiltObj>& nodes);

// Mutation graph edges (upper, lower, mutated summand of the upper node).
struct MutationEdge {
  int upper, lower;
  Summand at;
};
std::vector<MutationEdge> mutation_edges(const Window& w, const std::vector<SiltObj>& nodes);

}  // namespace dx
