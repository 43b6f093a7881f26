#pragma once
// Simple-minded collections with d+1 terms, paired with silting objects.

#include <string>
#include <vector>

#include "dx/silting.hpp"

namespace dx {

// X[i] pairs with the i-th summand of the silting object it came from.
using SMC = std::vector<Summand>;

SMC smc_of_silting(const Window& w, const SiltObj& p);
bool is_smc(const Window& w, const std::vector<Summand>& x);
std::string smc_str(const IndTable& t, const SMC& x);

struct SmcMutation {
  bool ok = false;
  SMC result;
  std::string reason;
};
SmcMutation smc_mutate(const Window& w, const SMC& x, int i, Direction dir);
bool smc_mutation_exists(const Window& w, const SMC& x, int i, Direction dir);

Subcat pi1(const Window& w, const SMC& x);
Subcat pi2(const Window& w, const SMC& x);

// Every SMC element with shift 0..d: exactly n, in silting order.
std::vector<SMC> enumerate_smc_bruteforce(const Window& w);

Verdict cohom_multiplicity_check(const Window& w, const SiltObj& p, const SMC& x, const QSequence& qs);
// Hom(f_j, X) : Hom(Q_j, X) -> Hom(Z_j, X) is bijective for every j and X.
Verdict distinct_top_check(const Window& w, const SMC& x, const QSequence& qs);

struct EndAlgebra {
  FDAlg alg;
  std::vector<QVec> idem;  // e_i for summand i
};
EndAlgebra end_algebra(const Window& w, const SiltObj& p);

struct WideCount {
  std::size_t simples_f = 0, pi1_size = 0;
  std::size_t simples_fdual = 0, pi2_size = 0;
  bool ok() const { return simples_f == pi1_size && simples_fdual == pi2_size; }
};
WideCount wide_modcat_check(const Window& w, const SiltObj& p, const SMC& x);

}  // namespace dx
