#include "moddeg/monomial_submodule.hpp"

#include <algorithm>

namespace moddeg {

std::vector<FMonomial> minimalize(std::vector<FMonomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<FMonomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || gens[j].comp != gens[i].comp) continue;
      if (gens[j].mono.divides(gens[i].mono) && gens[j].mono != gens[i].mono)
        redundant = true;
      // equal monomials were deduplicated above
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

MonomialSubmodule MonomialSubmodule::make(RingContext ring,
                                          FreeModuleShape shape,
                                          std::vector<FMonomial> gens) {
  for (const auto& g : gens) {
    if (g.mono.nvars() != ring.nvars)
      fail("ring-mismatch", "generator has wrong variable count");
    if (g.comp < 0 || g.comp >= shape.rank())
      fail("shape-mismatch", "generator component outside module rank");
  }
  return MonomialSubmodule(std::move(ring), std::move(shape),
                           minimalize(std::move(gens)));
}

MonomialSubmodule MonomialSubmodule::ideal(RingContext ring,
                                           std::vector<Monomial> gens) {
  std::vector<FMonomial> fg;
  fg.reserve(gens.size());
  for (auto& m : gens) fg.push_back({std::move(m), 0});
  return make(std::move(ring), FreeModuleShape::ideal(), std::move(fg));
}

MonomialSubmodule MonomialSubmodule::full(RingContext ring,
                                          FreeModuleShape shape) {
  std::vector<FMonomial> gens;
  for (int j = 0; j < shape.rank(); ++j)
    gens.push_back({Monomial(ring.nvars), j});
  return make(std::move(ring), std::move(shape), std::move(gens));
}

std::vector<Monomial> MonomialSubmodule::component_gens(int comp) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_)
    if (g.comp == comp) out.push_back(g.mono);
  return out;
}

bool MonomialSubmodule::is_full() const {
  if (gens_.size() != static_cast<std::size_t>(shape_.rank())) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const FMonomial& g) { return g.mono.is_unit(); });
}

long long MonomialSubmodule::max_generator_degree() const {
  long long d = 0;
  for (const auto& g : gens_) d = std::max(d, g.mono.degree());
  return d;
}

bool MonomialSubmodule::contains(const FMonomial& m) const {
  if (m.mono.nvars() != ring_.nvars)
    fail("ring-mismatch", "membership test across different rings");
  for (const auto& g : gens_)
    if (g.comp == m.comp && g.mono.divides(m.mono)) return true;
  return false;
}

bool MonomialSubmodule::contains_submodule(const MonomialSubmodule& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [this](const FMonomial& g) { return contains(g); });
}

MonomialSubmodule MonomialSubmodule::colon_variable_power(int var) const {
  if (var < 0 || var >= ring_.nvars)
    fail("bad-ring", "colon by a variable outside the ring");
  std::vector<FMonomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_)
    out.push_back({g.mono.without_variable_power(var), g.comp});
  return make(ring_, shape_, std::move(out));
}

MonomialSubmodule MonomialSubmodule::intersect(const MonomialSubmodule& a,
                                               const MonomialSubmodule& b) {
  if (a.ring_.nvars != b.ring_.nvars)
    fail("ring-mismatch", "intersecting modules over different rings");
  if (!(a.shape_ == b.shape_))
    fail("shape-mismatch", "intersecting modules of different shapes");
  std::vector<FMonomial> out;
  for (const auto& g : a.gens_)
    for (const auto& h : b.gens_)
      if (g.comp == h.comp)
        out.push_back({Monomial::lcm(g.mono, h.mono), g.comp});
  return make(a.ring_, a.shape_, std::move(out));
}

MonomialSubmodule MonomialSubmodule::colon_ideal_power(int i) const {
  if (i < 1 || i > ring_.nvars)
    fail("bad-ring", "saturating by an ideal with an invalid variable count");
  MonomialSubmodule r = colon_variable_power(0);
  for (int t = 1; t < i; ++t)
    r = intersect(r, colon_variable_power(t));
  return r;
}

int MonomialSubmodule::first_non_borel_index() const {
  for (int i = 1; i <= ring_.nvars; ++i) {
    if (!(colon_variable_power(i - 1) == colon_ideal_power(i))) return i;
  }
  return 0;
}

bool MonomialSubmodule::is_borel_type() const {
  return first_non_borel_index() == 0;
}

MonomialSubmodule MonomialSubmodule::restrict_variables(int keep) const {
  std::vector<FMonomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back({g.mono.restricted(keep), g.comp});
  return make(ring_.restricted(keep), shape_, std::move(out));
}

MonomialSubmodule MonomialSubmodule::quotient_by_last_variable() const {
  if (ring_.nvars < 1)
    fail("bad-ring", "no variable left to quotient by");
  int n = ring_.nvars;
  if (!(colon_variable_power(n - 1) == *this))
    fail("not-regular",
         "x_n is not regular on F/U (U : x_n^inf differs from U)");
  if (!is_borel_type())
    fail("not-borel", "quotient_by_last_variable requires a Borel-type module");
  std::vector<FMonomial> out;
  for (const auto& g : gens_) {
    if (g.mono.exp(n - 1) > 0) continue;  // maps to zero in F/x_nF
    out.push_back({g.mono.restricted(n - 1), g.comp});
  }
  return make(ring_.restricted(n - 1), shape_, std::move(out));
}

std::string MonomialSubmodule::str() const {
  if (gens_.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str(ring_, shape_);
  }
  return s + ")";
}

}  // namespace moddeg
