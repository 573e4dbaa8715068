#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "ap5/errors.hpp"
#include "ap5/remote_adapter.hpp"

#include <chrono>
#include <thread>

namespace ap5 {

const RemoteAdapter& lmfdb_adapter() {
  static const RemoteAdapter adapter;
  return adapter;
}

std::string expand_template(std::string tmpl, const std::string& name, const std::string& value) {
  const std::string key = "{" + name + "}";
  for (std::size_t pos = tmpl.find(key); pos != std::string::npos; pos = tmpl.find(key, pos + value.size())) {
    tmpl.replace(pos, key.size(), value);
  }
  return tmpl;
}

NewformClass class_from_remote(const json& orbit, const json& eigen, std::uint64_t level,
                               const RemoteAdapter& adapter) {
  NewformClass out;
  out.level = level;
  if (!orbit.contains(adapter.orbit_label) || !orbit[adapter.orbit_label].is_string()) {
    throw FetchError("orbit record without a label");
  }
  out.label = orbit[adapter.orbit_label].get<std::string>();
  const std::string where = "remote class " + out.label;
  try {
    if (eigen.contains(adapter.cyclotomic_generator) && eigen[adapter.cyclotomic_generator].is_number() &&
        eigen[adapter.cyclotomic_generator].get<long>() != 0) {
      throw FetchError(where + ": cyclotomic Hecke ring representation is not supported");
    }
    const json& fp = eigen.at(adapter.field_poly);
    std::vector<Int> coeffs;
    for (std::size_t k = 0; k < fp.size(); ++k) coeffs.push_back(json_to_int_lenient(fp[k], where + ".field_poly"));
    IntPoly poly(std::move(coeffs));
    if (poly.degree() < 1 || !poly.is_monic()) throw FetchError(where + ": field polynomial is not monic");
    out.field_poly = poly;
    const auto deg = static_cast<std::size_t>(poly.degree());

    // beta_i = (sum_j num[i][j] nu^j) / den[i]; the power basis when absent.
    std::vector<std::vector<Rat>> basis(deg, std::vector<Rat>(deg, Rat(0)));
    const bool has_basis = eigen.contains(adapter.basis_numerators) && !eigen[adapter.basis_numerators].is_null();
    for (std::size_t i = 0; i < deg; ++i) {
      if (!has_basis) {
        basis[i][i] = 1;
        continue;
      }
      const json& row = eigen[adapter.basis_numerators].at(i);
      const Int den = json_to_int_lenient(eigen.at(adapter.basis_denominators).at(i), where + ".denominators");
      if (den == 0 || row.size() > deg) throw FetchError(where + ": malformed Hecke ring basis");
      for (std::size_t j = 0; j < row.size(); ++j) {
        basis[i][j] = Rat(json_to_int_lenient(row[j], where + ".numerators"), den);
        basis[i][j].canonicalize();
      }
    }

    const json& ap = eigen.at(adapter.ap);
    const auto primes = primes_between(2, 1U << 16U);
    for (std::size_t k = 0; k < ap.size() && k < primes.size(); ++k) {
      if (primes[k] > kRequiredPrimeBound) break;
      const json& c = ap[k];
      if (!c.is_array() || c.size() > deg) throw FetchError(where + ": malformed a_p entry");
      std::vector<Rat> v(deg, Rat(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Int ci = json_to_int_lenient(c[i], where + ".ap");
        if (ci == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) v[j] += Rat(ci) * basis[i][j];
      }
      out.ap.emplace(primes[k], NumberFieldElem(poly, std::move(v)));
    }
  } catch (const json::exception& e) {
    throw FetchError(where + ": " + e.what());
  } catch (const SchemaError& e) {
    throw FetchError(where + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw FetchError(where + ": " + e.what());
  }
  for (std::uint64_t p : primes_between(2, kRequiredPrimeBound)) {
    if (level % p != 0 && out.ap.count(p) == 0) {
      throw FetchError(where + ": source lacks a_" + std::to_string(p));
    }
  }
  return out;
}

namespace {

class Session {
 public:
  Session(const std::string& base_url, const FetchOptions& opt) : client_(base_url), opt_(opt) {
    client_.set_connection_timeout(static_cast<time_t>(opt.timeout_seconds), 0);
    client_.set_read_timeout(static_cast<time_t>(opt.timeout_seconds), 0);
    client_.set_follow_location(true);
  }

  json get(const std::string& path_and_query) {
    std::string last_error;
    for (unsigned attempt = 0; attempt <= opt_.retries; ++attempt) {
      if (attempt > 0) std::this_thread::sleep_for(std::chrono::milliseconds(250U << attempt));
      auto res = client_.Get(path_and_query);
      if (!res) {
        last_error = httplib::to_string(res.error());
        continue;
      }
      if (res->status >= 500 || res->status == 429) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200) throw FetchError("GET " + path_and_query + ": HTTP " + std::to_string(res->status));
      try {
        return parse_json_exact(res->body);
      } catch (const SchemaError& e) {
        throw FetchError("GET " + path_and_query + ": " + e.what());
      }
    }
    throw FetchError("GET " + path_and_query + " failed after " + std::to_string(opt_.retries + 1) +
                     " attempts: " + last_error);
  }

  /// Follows offset paging until the service reports no next page.
  std::vector<json> get_all(const std::string& path, const std::string& query, const RemoteAdapter& ad) {
    std::vector<json> rows;
    for (std::size_t offset = 0;;) {
      std::string q = path + "?" + query;
      if (offset > 0) q += "&" + ad.offset_param + "=" + std::to_string(offset);
      const json page = get(q);
      if (!page.is_object() || !page.contains(ad.data_key) || !page[ad.data_key].is_array()) {
        throw FetchError("GET " + q + ": response lacks a \"" + ad.data_key + "\" array");
      }
      const json& data = page[ad.data_key];
      for (const auto& r : data) rows.push_back(r);
      const bool more = page.contains(ad.next_key) && page[ad.next_key].is_string() &&
                        !page[ad.next_key].get<std::string>().empty();
      if (!more || data.empty()) break;
      offset += data.size();
    }
    return rows;
  }

 private:
  httplib::Client client_;
  FetchOptions opt_;
};

}  // namespace

void fetch_remote(std::uint64_t level, const std::string& out_path, const FetchOptions& options) {
  const RemoteAdapter& ad = lmfdb_adapter();
  const std::string base = options.base_url.empty() ? ad.default_base_url : options.base_url;
  Session session(base, options);
  const auto orbits =
      session.get_all(ad.orbit_path, expand_template(ad.orbit_query, "level", std::to_string(level)), ad);
  std::vector<NewformClass> classes;
  for (const json& orbit : orbits) {
    if (!orbit.contains(ad.orbit_code)) throw FetchError("orbit record without " + ad.orbit_code);
    const std::string code = json_to_int_lenient(orbit[ad.orbit_code], ad.orbit_code).get_str();
    const auto eig = session.get_all(ad.eigen_path, expand_template(ad.eigen_query, "code", code), ad);
    if (eig.size() != 1) {
      throw FetchError("orbit " + code + ": expected one eigenvalue record, got " + std::to_string(eig.size()));
    }
    classes.push_back(class_from_remote(orbit, eig.front(), level, ad));
  }
  // Round-trip through the loader before anything touches out_path.
  const std::string text = canonical_json(level, classes);
  try {
    (void)parse_level_json(text, "download of level " + std::to_string(level));
  } catch (const Error& e) {
    throw FetchError(e.what());
  }
  write_text_file_atomic(out_path, text);
}

}  // namespace ap5
