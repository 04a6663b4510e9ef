#ifndef CURCO_CATALOG_HPP
#define CURCO_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curco/comm.hpp"
#include "curco/lie.hpp"

namespace curco {

/// Built-in Lie algebra with named attached witnesses: invariant forms in sym
/// pair coordinates and 2-cochains in wedge pair coordinates.
struct LieEntry {
  std::string name;
  LieAlgebra algebra;
  std::map<std::string, Vec> form_witnesses;
  std::map<std::string, Vec> cochain_witnesses;
};

/// Constructors for every built-in Lie algebra:
///   abelian:N, heisenberg, oscillator, sl2, pelc:N, cotangent:BASE[:...]
/// The oscillator carries forms "kappa1"/"kappa2"; pelc:N with N divisible by
/// three carries "kappa" and the primitive "eta"; cotangent carries "kappa".
/// Throws std::invalid_argument on unknown names or bad parameters.
LieEntry lie_catalog(const std::string& name, const std::vector<std::string>& params = {});

/// Cotangent extension twisted by an alternating closed 3-cochain on the base
/// (wedge triple coordinates); rejects non-closed twists.
LieEntry twisted_cotangent(const LieAlgebra& base, const Vec& twist);

/// Constructors: field, dual_numbers, trunc_poly:N, function_alg:N, group_alg_z2.
CommAlgebra comm_catalog(const std::string& name, const std::vector<std::string>& params = {});

struct PelcWitnessReport {
  size_t n = 0;
  bool primitive_ok = false;    // d eta = -koszul(kappa), exactly
  bool nondegenerate = false;   // det of the Gram matrix nonzero
  bool ok() const { return primitive_ok && nondegenerate; }
};
/// Verifies the attached exactness witness for pelc:3m.
PelcWitnessReport pelc_exactness_witness(size_t m);

/// Parses "name[:param[:param...]]".
std::pair<std::string, std::vector<std::string>> split_catalog_ref(const std::string& ref);

struct CatalogInfo {
  std::string name;
  std::string kind;  // "lie" or "commutative"
  std::string summary;
};
std::vector<CatalogInfo> catalog_list();

}  // namespace curco

#endif
