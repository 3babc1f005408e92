// The q = 1 model of a building quotient: the apartment of an affine Weyl
// group W = Q^v x W0 divided by Gamma = k Q^v, a torus tiled by |W0| k^n
// chambers. Right multiplication by W permutes the chambers, which gives a
// representation of H_1(W,S), the group algebra.
#pragma once

#include "weylzeta/coxeter.hpp"
#include "weylzeta/hecke.hpp"
#include "weylzeta/matrix.hpp"
#include "weylzeta/rational_function.hpp"
#include "weylzeta/zeta.hpp"

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace weylzeta {

class FreeActionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class TorusQuotient
{
public:
  /// Builds Gamma\W for an affine system and k >= 2; throws FreeActionError
  /// if some nonidentity element of a finite parabolic subgroup fixes a
  /// chamber.
  TorusQuotient(const CoxeterSystem& system, int k);

  const CoxeterSystem& system() const { return system_; }
  int scale() const { return k_; }
  std::size_t chamber_count() const { return reps_.size(); }
  /// Representative g_i of the i-th chamber Gamma g_i (chamber 0 is Gamma).
  const ElementMatrix& representative(std::size_t i) const { return reps_[i]; }

  /// j = perm[i] when Gamma g_j = Gamma g_i w.
  std::vector<std::size_t> permutation(const Word& word) const;
  /// A_w with A_w(i,j) = 1 iff Gamma g_j = Gamma g_i w.
  Matrix<Integer> matrix(const Word& word) const;

  /// Whether an element (given by its matrix) lies in Gamma.
  bool in_lattice(const ElementMatrix& m) const;

  /// #{i : g_i w^n g_i^{-1} in Gamma}, evaluated on the geometric matrices
  /// rather than through the permutation action.
  std::size_t closed_strip_count(const Word& word, std::size_t n) const;

private:
  struct Key
  {
    std::vector<std::int64_t> finite;
    std::vector<std::int64_t> residue;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash
  {
    std::size_t operator()(const Key& k) const;
  };

  // finite part U and the delta row c of w in the basis (alpha_1..alpha_n, delta)
  void split(const ElementMatrix& m, std::vector<std::int64_t>& u, std::vector<std::int64_t>& c) const;
  // c in the basis of the translation lattice; throws if not integral
  std::vector<Integer> lattice_coords(const std::vector<std::int64_t>& c) const;
  Key key(const ElementMatrix& m) const;
  ElementMatrix inverse(const ElementMatrix& m) const;
  void check_free_action() const;

  CoxeterSystem system_;
  int k_;
  std::size_t n_;
  // inverse of the finite Cartan matrix, whose rows span the lattice of
  // translation rows
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<ElementMatrix> reps_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
  std::vector<std::vector<std::size_t>> generator_perm_;
};

/// The validated representation e_w -> A_w at q = 1, caching A_w for the
/// elements of `table`.
Representation<Integer> torus_quotient_rep(const TorusQuotient& torus, const ElementTable& table);

struct MainTheorem2Report
{
  /// det Alt(W)(pi,u)
  RationalFunction<Integer> alt;
  /// Z_{w1}(u^l1) Z_{w2}(u^l2)
  RationalFunction<Integer> zeta_product;
  StripZeta<Integer> zeta1;
  StripZeta<Integer> zeta2;
  bool corollary_pass = false;
  bool pass = false;
};

/// det Alt(W)(pi,u) = Z_{w1}(u^l1) Z_{w2}(u^l2) for a rank-2 affine torus.
/// The table must reach series_order and the longest elements of the
/// proper parabolic subgroups.
MainTheorem2Report verify_maintheorem2(const TorusQuotient& torus, const ElementTable& table,
                                       std::size_t series_order);

} // namespace weylzeta
