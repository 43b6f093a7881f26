#pragma once
// Covariant representations of an acyclic quiver: one space per vertex, one
// matrix per arrow of shape dim(tgt) x dim(src).

#include <random>
#include <vector>

#include "dx/quiver.hpp"
#include "dx/ratlin.hpp"

namespace dx {

struct Rep {
  std::vector<int> dims;
  std::vector<QMat> mats;

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  bool well_formed(const Quiver& q) const;
};

// One matrix per vertex, phi_v : M_v -> N_v.
struct RepMap {
  std::vector<QMat> comps;
};

// Ext class stored as one cocycle matrix per arrow, xi_a : M_src -> N_tgt.
struct ExtClass {
  std::vector<QMat> xi;
};

Rep zero_rep(const Quiver& q);
Rep projective(const Quiver& q, int v);
Rep injective(const Quiver& q, int v);
Rep simple(const Quiver& q, int v);
Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts);
Rep dual_rep(const Quiver& q, const Rep& m);  // a rep of q.opposite()

QMat path_matrix(const Quiver& q, const Rep& m, const Path& p);

RepMap zero_map(const Rep& m, const Rep& n);
RepMap identity_map(const Rep& m);
RepMap compose(const RepMap& g, const RepMap& f);
RepMap add(const RepMap& a, const RepMap& b);
RepMap scale(const RepMap& a, const Q& s);
bool is_zero(const RepMap& f);
bool is_morphism(const Quiver& q, const Rep& m, const Rep& n, const RepMap& f);

// Hom(M,N) as the kernel of the intertwining system. Basis element k is 1 at
// free slot k and 0 at the other free slots, so coordinates are read off there.
struct HomSpace {
  std::vector<RepMap> basis;
  struct Slot {
    int v;
    std::size_t row, col;
  };
  std::vector<Slot> free_slots;  // (vertex, row, col) of each free variable
  QVec coords(const RepMap& f) const;
};
HomSpace hom_space(const Quiver& q, const Rep& m, const Rep& n);
std::vector<RepMap> hom_basis(const Quiver& q, const Rep& m, const Rep& n);
int hom_dim(const Quiver& q, const Rep& m, const Rep& n);

// Ext^1(M,N) = coker(delta). Basis classes are standard cocycles; proj maps a
// flattened cocycle to its coordinates.
struct ExtSpace {
  std::vector<ExtClass> basis;
  QMat proj;                         // dim Ext x dim C
  std::vector<std::size_t> offsets;  // start of xi_a in the flattened cocycle
  QVec coords(const ExtClass& x) const;
  ExtClass combination(const QVec& c) const;
};
ExtSpace ext_space(const Quiver& q, const Rep& m, const Rep& n);
std::vector<ExtClass> ext1_basis(const Quiver& q, const Rep& m, const Rep& n);
int ext1_dim(const Quiver& q, const Rep& m, const Rep& n);

// Short exact sequence 0 -> N -> E -> M -> 0 for xi in Ext^1(M,N).
struct Extension {
  Rep e;
  RepMap incl;  // N -> E
  RepMap proj;  // E -> M
};
Extension middle_term(const Quiver& q, const Rep& m, const Rep& n, const ExtClass& xi);

// Subquotient V/U of X for subrepresentations U <= V given by column bases.
Rep subquotient(const Quiver& q, const Rep& x, const std::vector<QMat>& v, const std::vector<QMat>& u);
Rep kernel(const Quiver& q, const Rep& m, const Rep& n, const RepMap& f);
Rep cokernel(const Quiver& q, const Rep& m, const Rep& n, const RepMap& f);
Rep image(const Quiver& q, const Rep& m, const Rep& n, const RepMap& f);

// Direct sum of indecomposable projectives, listed by vertex.
struct ProjSum {
  std::vector<int> verts;
  Rep rep;
  std::vector<std::vector<std::size_t>> offset;  // offset[k][w]: block start of summand k at vertex w
};
ProjSum proj_sum(const Quiver& q, const std::vector<int>& verts);
// The map out of a projective sum sending the k-th generator to images[k] in X_{verts[k]}.
RepMap map_from_gens(const Quiver& q, const ProjSum& p, const Rep& x, const std::vector<QVec>& images);
// Value of the k-th generator of a projective sum under f.
QVec gen_image(const ProjSum& p, const RepMap& f, std::size_t k);

// Minimal projective resolution 0 -> P1 --d--> P0 --eps--> M -> 0.
struct ProjResolution {
  ProjSum p0, p1;
  std::vector<QVec> top_gens;  // images of the P0 generators in M
  RepMap d, eps;
};
ProjResolution proj_resolution(const Quiver& q, const Rep& m);

// Auslander-Reiten translates via the Nakayama functor; zero when undefined.
Rep tau(const Quiver& q, const Rep& m);
Rep tau_inv(const Quiver& q, const Rep& m);

bool is_iso(const Quiver& q, const Rep& m, const Rep& n, std::mt19937_64& rng);

int euler_form(const Quiver& q, const std::vector<int>& dm, const std::vector<int>& dn);

}  // namespace dx
