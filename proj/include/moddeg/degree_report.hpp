#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "moddeg/saturation_chain.hpp"

namespace moddeg {

enum class ExtDataMode { SeqCM, Buchsbaum };

/// The four degree functions of one module, plus provenance. The structure
/// tag records which theorem backs the values:
///   borel-monomial — all four computed from the saturation chain of U itself;
///   via-gin        — sdeg is genuine, adeg/hdeg are the gin surrogates;
///   user-ext-data  — formula evaluation over caller-supplied Ext degrees.
struct DegreeReport {
  bool zero_module = false;
  int dim = -1;
  Int deg = 0;
  Int adeg = 0;
  Int sdeg = 0;
  Int hdeg = 0;
  bool depth_positive = false;
  std::string structure;
  std::vector<Int> ext_degrees;
  std::vector<std::string> disclaimers;
};

/// Degrees of F/U for a Borel-type monomial submodule, all theorem-backed.
DegreeReport report_for_borel(const MonomialSubmodule& U);

/// Formula evaluation from externally supplied Ext data; the structural
/// hypothesis (sequentially CM resp. Buchsbaum) is asserted by the caller
/// and not verified here. `ext` holds lambda_i = deg Ext^{n-i} for i < dim;
/// the index-dim entry may be omitted (it equals deg) but must match if given.
DegreeReport degrees_from_ext_data(const Int& deg, int dim,
                                   std::vector<Int> ext, ExtDataMode mode);

struct ChainCheckResult {
  bool ok = false;
  std::string violation;  // empty when ok
};

/// deg <= adeg <= sdeg <= hdeg.
ChainCheckResult check_degree_chain(const DegreeReport& r);

nlohmann::ordered_json report_to_json(const DegreeReport& r);

}  // namespace moddeg
