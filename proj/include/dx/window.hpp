#pragma once
// Objects and morphisms of the bounded derived category of a hereditary
// algebra, stored as sums of shifted indecomposable modules.

#include <compare>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dx/indtable.hpp"

namespace dx {

// M@j stands for M[j], cohomology concentrated in degree -j.
struct Summand {
  int ind = 0;
  int shift = 0;
  auto operator<=>(const Summand& o) const {
    if (auto c = shift <=> o.shift; c != 0) return c;
    return ind <=> o.ind;
  }
  bool operator==(const Summand&) const = default;
};

using Subcat = std::set<Summand>;

struct WObj {
  std::vector<Summand> s;  // sorted, repeated entries for multiplicity

  static WObj of(std::vector<Summand> parts);
  static WObj one(int ind, int shift) { return of({{ind, shift}}); }
  bool empty() const { return s.empty(); }
  std::size_t size() const { return s.size(); }
  std::map<Summand, int> counts() const;
  bool operator==(const WObj&) const = default;
};

WObj shifted(const WObj& x, int k);
WObj direct_sum(const WObj& a, const WObj& b);
WObj power(const Summand& s, int m);
int min_shift(const WObj& x);
int max_shift(const WObj& x);

// blocks[t][s] holds the coordinates of the component from source summand s
// to target summand t: Hom coordinates for equal shifts, Ext^1 coordinates
// when the target shift is one more, and an empty vector otherwise.
struct WMor {
  WObj src, tgt;
  std::vector<std::vector<QVec>> blocks;
};

int block_dim(const IndTable& t, const Summand& from, const Summand& to);
int hom_dim(const IndTable& t, const WObj& x, const WObj& y, int k = 0);
inline int hom_dim(const IndTable& t, const Summand& x, const Summand& y, int k = 0) {
  return hom_dim(t, WObj::one(x.ind, x.shift), WObj::one(y.ind, y.shift), k);
}
// Basis of Hom(X, Y[k]) as morphisms X -> Y[k].
std::vector<WMor> hom_basis_w(const IndTable& t, const WObj& x, const WObj& y, int k = 0);

WMor zero_mor(const IndTable& t, const WObj& x, const WObj& y);
WMor identity_mor(const IndTable& t, const WObj& x);
WMor compose(const IndTable& t, const WMor& g, const WMor& f);
WMor add(const WMor& a, const WMor& b);
WMor scale(const WMor& a, const Q& c);
bool is_zero(const WMor& f);
WMor random_mor(const IndTable& t, const WObj& x, const WObj& y, std::mt19937_64& rng);

// Coordinates of a morphism in the basis returned by hom_basis_w (and back).
QVec flatten(const WMor& f);
WMor unflatten(const IndTable& t, const WObj& x, const WObj& y, const QVec& v);

// Sum of all basis maps: Hom-universal map out of (resp. into) X.
// universal_into(S, Z): the map from the sum of sources of all basis maps in
// Hom(s, Z), s in S, to Z.
WMor universal_into(const IndTable& t, const std::vector<Summand>& from, const WObj& z);
WMor universal_from(const IndTable& t, const WObj& z, const std::vector<Summand>& to);

// Mapping cone via projective resolutions; cocone(f) = cone(f)[-1].
WObj cone(const IndTable& t, const WMor& f);
WObj cocone(const IndTable& t, const WMor& f);

// Cohomological truncations: keep summands with cohomological degree -shift
// in [m, +inf) (ge) or (-inf, n] (le).
WObj trunc_ge(const WObj& x, int m);
WObj trunc_le(const WObj& x, int n);

// Minimal add(A)-approximations. The result records the multiplicity of each
// A-summand and the approximation map.
struct Approx {
  WObj obj;
  WMor map;
};
Approx min_left_approx(const IndTable& t, const WObj& z, const std::vector<Summand>& a);
Approx min_right_approx(const IndTable& t, const WObj& z, const std::vector<Summand>& a);

// Window of indecomposables with shifts lo..hi.
std::vector<Summand> window_objects(const IndTable& t, int lo, int hi);
bool in_range(const WObj& x, int lo, int hi);
bool all_in(const WObj& x, const Subcat& s);

std::string summand_name(const IndTable& t, const Summand& s);
std::string wobj_str(const IndTable& t, const WObj& x);
// "P2@1,I1" style literal; shift omitted means 0.
WObj parse_wobj(const IndTable& t, const std::string& text);
std::string subcat_str(const IndTable& t, const Subcat& s);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dx
