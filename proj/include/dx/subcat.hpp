#pragma once
// Subcategories of the d-extended module category: factor closures, perps,
// torsion classes, semibricks, extension closures, hearts and W', W''.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dx/window.hpp"

namespace dx {

struct Window {
  std::shared_ptr<const IndTable> table;
  int d = 1;
  std::uint64_t seed = 1;
  int budget = 4;  // randomized witnesses per search step

  const IndTable& t() const { return *table; }
  std::vector<Summand> objects() const { return window_objects(*table, 0, d - 1); }
  Subcat all() const;
};

std::vector<Summand> to_list(const Subcat& s);

Subcat fac1(const Window& w, const Subcat& s);
Subcat sub1(const Window& w, const Subcat& s);
Subcat fac_d(const Window& w, const Subcat& s);
Subcat sub_d(const Window& w, const Subcat& s);

Subcat perp_right(const Window& w, const Subcat& s);      // Hom(S, Z) = 0
Subcat perp_left(const Window& w, const Subcat& s);       // Hom(Z, S) = 0
Subcat perp_le0_right(const Window& w, const Subcat& s);  // Hom(S, Z[j]) = 0, j <= 0
Subcat perp_le0_left(const Window& w, const Subcat& s);   // Hom(Z, S[j]) = 0, j <= 0

Subcat smallest_positive_torsion(const Window& w, const Subcat& s);
Subcat smallest_positive_torsionfree(const Window& w, const Subcat& s);

struct Verdict {
  bool ok = true;
  std::string witness;
};
Verdict is_positive_torsion_class(const Window& w, const Subcat& t);

struct TorsionSplit {
  WObj tpart, fpart;
};
TorsionSplit torsion_decomposition(const Window& w, const WObj& x, const Subcat& t);

bool is_semibrick(const Window& w, const std::vector<Summand>& s);
std::vector<std::vector<Summand>> enumerate_semibricks(const Window& w);

Subcat extension_closure(const Window& w, const Subcat& s);

struct PhiResult {
  Subcat phi;
  int rounds = 0;
  bool matches_t = false;
};
PhiResult phi_closure(const Window& w, const Subcat& s);

bool heart_membership(const Window& w, const WObj& x, const Subcat& t);
// Indecomposables of the heart H_T, shifts 0..d.
Subcat heart_objects(const Window& w, const Subcat& t);
// Simple objects of H_T by the subobject scan.
Subcat heart_simples(const Window& w, const Subcat& t);

Subcat w_prime(const Window& w, const Subcat& t);
Subcat w_prime_via_heart(const Window& w, const Subcat& t);

// Kernel, image and cokernel of a heart morphism g, when they could be found.
struct HeartFactorization {
  bool found = false;
  WObj ker, im, coker;
};
HeartFactorization heart_factorization(const Window& w, const Subcat& t, const WMor& g, std::mt19937_64& rng);

struct WppResult {
  Subcat members;
  bool conclusive = true;
  std::vector<std::string> inconclusive;
};
WppResult w_doubleprime_oracle(const Window& w, const Subcat& t, int budget);

}  // namespace dx
