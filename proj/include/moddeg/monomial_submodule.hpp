#pragma once

#include <string>
#include <vector>

#include "moddeg/monomial.hpp"
#include "moddeg/ring.hpp"

namespace moddeg {

/// A monomial submodule U ⊆ F, stored by its unique minimal system of
/// monomial generators. U decomposes componentwise as U = ⊕ I_j e_j.
/// All values are immutable after construction.
class MonomialSubmodule {
 public:
  /// Minimalizes and canonically sorts the generating set.
  static MonomialSubmodule make(RingContext ring, FreeModuleShape shape,
                                std::vector<FMonomial> gens);

  /// Ideal convenience: rank-1 shape with twist 0.
  static MonomialSubmodule ideal(RingContext ring, std::vector<Monomial> gens);

  /// The full module F (generated by every basis element).
  static MonomialSubmodule full(RingContext ring, FreeModuleShape shape);

  const RingContext& ring() const { return ring_; }
  const FreeModuleShape& shape() const { return shape_; }
  int nvars() const { return ring_.nvars; }
  const std::vector<FMonomial>& gens() const { return gens_; }
  std::vector<Monomial> component_gens(int comp) const;

  bool is_zero_module() const { return gens_.empty(); }
  bool is_full() const;
  long long max_generator_degree() const;  // monomial part only; 0 if none

  /// Membership of a monomial of F.
  bool contains(const FMonomial& m) const;
  bool contains_submodule(const MonomialSubmodule& other) const;

  /// U : x_var^∞ (0-based variable index), by dividing each generator by its
  /// full x_var power and minimalizing.
  MonomialSubmodule colon_variable_power(int var) const;

  /// U : (x_1,...,x_i)^∞ as the intersection of the single-variable
  /// saturations for t = 1..i (i is a 1-based variable count).
  MonomialSubmodule colon_ideal_power(int i) const;

  static MonomialSubmodule intersect(const MonomialSubmodule& a,
                                     const MonomialSubmodule& b);

  /// U : x_i^∞ = U : (x_1,...,x_i)^∞ for every i.
  bool is_borel_type() const;
  /// As above, but reports the first failing i (1-based), or 0 if none.
  int first_non_borel_index() const;

  /// Same generators re-read over K[x_1,...,x_keep]; every generator must
  /// avoid the dropped variables.
  MonomialSubmodule restrict_variables(int keep) const;

  /// Image of U in F/x_nF over the smaller ring. Requires U Borel-type with
  /// x_n regular on F/U (i.e. U : x_n^∞ = U).
  MonomialSubmodule quotient_by_last_variable() const;

  bool operator==(const MonomialSubmodule& other) const {
    return ring_.nvars == other.ring_.nvars && shape_ == other.shape_ &&
           gens_ == other.gens_;
  }

  std::string str() const;

 private:
  MonomialSubmodule(RingContext ring, FreeModuleShape shape,
                    std::vector<FMonomial> gens)
      : ring_(std::move(ring)), shape_(std::move(shape)),
        gens_(std::move(gens)) {}

  RingContext ring_;
  FreeModuleShape shape_;
  std::vector<FMonomial> gens_;
};

/// Unique minimal generating set of the module generated by `gens`.
std::vector<FMonomial> minimalize(std::vector<FMonomial> gens);

}  // namespace moddeg
