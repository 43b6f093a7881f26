#pragma once
// Registry of indecomposable modules with Hom/Ext tables, built by knitting.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dx/rep.hpp"

namespace dx {

// Raised when an algebra is outside the supported class (exit code 2 in the CLI).
struct ScopeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KnitOptions {
  int cap = 200;
  bool experimental = false;
  std::uint64_t seed = 1;
};

// Chain-level lifts of basis morphisms to the minimal projective resolutions.
// Hom lifts give the images of the P0 and P1 generators; Ext lifts give the
// images of the source P1 generators in the target P0.
struct HomLift {
  std::vector<std::vector<QVec>> g0, g1;
};
struct ExtLift {
  std::vector<std::vector<QVec>> g;
};

class IndTable {
 public:
  Quiver quiver;
  std::vector<Rep> inds;
  std::vector<std::string> names;
  std::vector<int> proj_vertex, inj_vertex, simple_vertex;  // -1 when not
  std::vector<int> tau_idx, tau_inv_idx;                    // -1 when undefined
  std::vector<std::vector<int>> G, E;                       // dim Hom, dim Ext^1
  std::vector<std::vector<HomSpace>> hom;
  std::vector<std::vector<ExtSpace>> ext;
  std::vector<ProjResolution> res;
  bool partial = false;

  int size() const { return static_cast<int>(inds.size()); }
  int find(const std::string& name) const;  // -1 if unknown
  int projective_index(int v) const;

  // Composition tensors. Column i*dim(first) + j holds the coordinates of
  // (basis i of the second map) o (basis j of the first map).
  const QMat& hh(int a, int b, int c) const;  // Hom(b,c) x Hom(a,b) -> Hom(a,c)
  const QMat& eh(int a, int b, int c) const;  // Ext(b,c) x Hom(a,b) -> Ext(a,c)
  const QMat& he(int a, int b, int c) const;  // Hom(b,c) x Ext(a,b) -> Ext(a,c)
  const HomLift& hom_lift(int a, int b) const;
  const ExtLift& ext_lift(int a, int b) const;

 private:
  mutable std::mutex mu_;
  mutable std::map<std::tuple<int, int, int, int>, std::unique_ptr<QMat>> tensors_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<HomLift>> hom_lifts_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<ExtLift>> ext_lifts_;
};

std::shared_ptr<const IndTable> knit_indecomposables(const Quiver& q, const KnitOptions& opt = {});

// Multiplicity of each table entry in X (Krull-Schmidt via the unitriangular G).
std::vector<int> decompose_module(const IndTable& t, const Rep& x);

}  // namespace dx
