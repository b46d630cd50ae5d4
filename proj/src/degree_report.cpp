#include "moddeg/degree_report.hpp"

namespace moddeg {

DegreeReport report_for_borel(const MonomialSubmodule& U) {
  DegreeReport r;
  r.structure = "borel-monomial";
  r.ext_degrees = saturation_chain(U).lambdas();
  auto dd = dimension_and_degree(hilbert_series(U));
  if (dd.is_zero) {
    r.zero_module = true;
    r.disclaimers.push_back("F/U is the zero module; deg is undefined and "
                            "all degree values are reported as 0");
    return r;
  }
  r.dim = dd.dim;
  r.deg = dd.deg;
  for (std::size_t i = static_cast<std::size_t>(dd.dim) + 1;
       i < r.ext_degrees.size(); ++i)
    if (r.ext_degrees[i] != 0)
      fail("invariant", "nonzero ext degree above the dimension");
  if (r.ext_degrees[static_cast<std::size_t>(dd.dim)] != dd.deg)
    fail("invariant", "lambda_d does not equal deg F/U");
  Int total = 0;
  for (const auto& l : r.ext_degrees) total += l;
  r.sdeg = total;
  r.adeg = total;
  r.hdeg = hdeg_from_ext(r.deg, r.dim, r.ext_degrees);
  r.depth_positive = (r.ext_degrees[0] == 0);
  return r;
}

DegreeReport degrees_from_ext_data(const Int& deg, int dim,
                                   std::vector<Int> ext, ExtDataMode mode) {
  if (dim < 0) fail("inconsistent-ext", "dimension must be non-negative");
  if (deg < 1) fail("inconsistent-ext", "degree must be positive");
  for (const auto& l : ext)
    if (l < 0) fail("inconsistent-ext", "negative ext degree");
  for (std::size_t i = static_cast<std::size_t>(dim) + 1; i < ext.size(); ++i)
    if (ext[i] != 0)
      fail("inconsistent-ext", "nonzero ext degree above the dimension");
  ext.resize(static_cast<std::size_t>(dim) + 1, 0);
  auto& lam_d = ext[static_cast<std::size_t>(dim)];
  if (lam_d == 0) {
    lam_d = deg;  // implied by deg M = deg Ext^{n-d}(M)
  } else if (lam_d != deg) {
    fail("inconsistent-ext", "ext degree at index dim must equal deg");
  }

  DegreeReport r;
  r.structure = "user-ext-data";
  r.dim = dim;
  r.deg = deg;
  r.ext_degrees = ext;
  Int total = 0;
  for (const auto& l : ext) total += l;
  Int weighted = hdeg_from_ext(deg, dim, ext);
  if (mode == ExtDataMode::SeqCM) {
    r.adeg = total;
    r.sdeg = total;
    r.hdeg = weighted;
    r.disclaimers.push_back(
        "sequential Cohen-Macaulayness asserted by caller, not verified");
  } else {
    r.adeg = total;
    r.sdeg = weighted;
    r.hdeg = weighted;
    r.disclaimers.push_back(
        "Buchsbaum hypothesis asserted by caller, not verified");
  }
  r.depth_positive = (dim > 0 && ext[0] == 0);
  return r;
}

ChainCheckResult check_degree_chain(const DegreeReport& r) {
  auto le = [](const Int& a, const Int& b, const char* name,
               ChainCheckResult& out) {
    if (a > b) {
      out.ok = false;
      if (!out.violation.empty()) out.violation += "; ";
      out.violation += name;
    }
  };
  ChainCheckResult out;
  out.ok = true;
  le(r.deg, r.adeg, "deg > adeg", out);
  le(r.adeg, r.sdeg, "adeg > sdeg", out);
  le(r.sdeg, r.hdeg, "sdeg > hdeg", out);
  return out;
}

nlohmann::ordered_json report_to_json(const DegreeReport& r) {
  nlohmann::ordered_json j;
  j["dim"] = r.dim;
  j["deg"] = to_ll(r.deg);
  j["adeg"] = to_ll(r.adeg);
  j["sdeg"] = to_ll(r.sdeg);
  j["hdeg"] = to_ll(r.hdeg);
  j["structure"] = r.structure;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& l : r.ext_degrees) arr.push_back(to_ll(l));
  j["ext_degrees"] = arr;
  j["disclaimers"] = r.disclaimers;
  return j;
}

}  // namespace moddeg
