#pragma once

// Endpoint layout and field mapping for the remote newform service.
// Everything that depends on the service's API lives here.

#include "ap5/json_io.hpp"
#include "ap5/newforms.hpp"

#include <string>

namespace ap5 {

struct RemoteAdapter {
  std::string default_base_url = "https://www.lmfdb.org";

  // One record per Galois orbit.
  std::string orbit_path = "/api/mf_newforms/";
  std::string orbit_query = "level={level}&weight=2&char_order=1&_format=json&_fields=label,dim,hecke_orbit_code";
  std::string orbit_label = "label";
  std::string orbit_dim = "dim";
  std::string orbit_code = "hecke_orbit_code";

  // Eigenvalue record, looked up by orbit code.
  std::string eigen_path = "/api/mf_hecke_nf/";
  std::string eigen_query =
      "hecke_orbit_code={code}&_format=json"
      "&_fields=field_poly,ap,hecke_ring_numerators,hecke_ring_denominators,hecke_ring_cyclotomic_generator";
  std::string field_poly = "field_poly";
  /// a_p for consecutive primes 2, 3, 5, ..., each in the Hecke ring basis.
  std::string ap = "ap";
  std::string basis_numerators = "hecke_ring_numerators";
  std::string basis_denominators = "hecke_ring_denominators";
  std::string cyclotomic_generator = "hecke_ring_cyclotomic_generator";

  // Paging.
  std::string data_key = "data";
  std::string next_key = "next";
  std::string offset_param = "_offset";
};

[[nodiscard]] const RemoteAdapter& lmfdb_adapter();

/// Substitutes {name} placeholders.
[[nodiscard]] std::string expand_template(std::string tmpl, const std::string& name, const std::string& value);

/// Converts one orbit record and its eigenvalue record into a NewformClass,
/// rewriting Hecke-ring coordinates in the power basis of field_poly.
/// Throws FetchError on records it cannot represent.
[[nodiscard]] NewformClass class_from_remote(const json& orbit, const json& eigen, std::uint64_t level,
                                             const RemoteAdapter& adapter);

}  // namespace ap5
