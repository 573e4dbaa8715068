#include "ap5/newforms.hpp"

#include "ap5/errors.hpp"
#include "ap5/json_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>

namespace ap5 {

const NumberFieldElem& NewformClass::a(std::uint64_t p) const {
  auto it = ap.find(p);
  if (it == ap.end()) {
    throw DataGapError("class " + label + " (level " + std::to_string(level) + ") has no a_" + std::to_string(p));
  }
  return it->second;
}

std::size_t NewformStore::count(std::uint64_t level) const {
  auto it = levels.find(level);
  return it == levels.end() ? 0 : it->second.size();
}

std::size_t NewformStore::total() const {
  std::size_t n = 0;
  for (const auto& [level, classes] : levels) n += classes.size();
  return n;
}

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4U]);
    out.push_back(hex[md[i] & 15U]);
  }
  return out;
}

void require_keys(const json& obj, const std::set<std::string>& keys, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& k : keys) {
    if (!obj.contains(k)) throw SchemaError(where + ": missing field \"" + k + "\"");
  }
  for (const auto& [k, v] : obj.items()) {
    if (keys.count(k) == 0) throw SchemaError(where + ": unexpected field \"" + k + "\"");
  }
}

std::uint64_t small_uint(const json& j, const std::string& where) {
  const Int v = json_to_int(j, where);
  if (v < 1 || v > Int("1000000000000")) throw SchemaError(where + ": value out of range");
  return static_cast<std::uint64_t>(to_i64(v));
}

NewformClass parse_class(const json& c, std::uint64_t level, const std::string& where) {
  require_keys(c, {"label", "field_poly", "ap"}, where);
  NewformClass out;
  out.level = level;
  if (!c["label"].is_string() || c["label"].get<std::string>().empty()) {
    throw SchemaError(where + ".label: expected a non-empty string");
  }
  out.label = c["label"].get<std::string>();
  const std::string cw = where + "[" + out.label + "]";

  const json& fp = c["field_poly"];
  if (!fp.is_array() || fp.size() < 2) throw SchemaError(cw + ".field_poly: expected at least two coefficients");
  std::vector<Int> coeffs;
  for (std::size_t k = 0; k < fp.size(); ++k) {
    coeffs.push_back(json_to_int(fp[k], cw + ".field_poly[" + std::to_string(k) + "]"));
  }
  if (coeffs.back() != 1) throw SchemaError(cw + ".field_poly: not monic");
  out.field_poly = IntPoly(std::move(coeffs));
  const std::size_t deg = out.degree();

  const json& ap = c["ap"];
  if (!ap.is_array()) throw SchemaError(cw + ".ap: expected an array");
  for (std::size_t k = 0; k < ap.size(); ++k) {
    const std::string ew = cw + ".ap[" + std::to_string(k) + "]";
    require_keys(ap[k], {"p", "coords"}, ew);
    const std::uint64_t p = small_uint(ap[k]["p"], ew + ".p");
    if (!is_prime_u64(p)) throw SchemaError(ew + ".p: " + std::to_string(p) + " is not prime");
    const json& co = ap[k]["coords"];
    if (!co.is_array() || co.size() != deg) {
      throw SchemaError(ew + ".coords: expected " + std::to_string(deg) + " entries (degree of field_poly)");
    }
    std::vector<Rat> v;
    for (std::size_t i = 0; i < deg; ++i) {
      const std::string iw = ew + ".coords[" + std::to_string(i) + "]";
      if (!co[i].is_array() || co[i].size() != 2) throw SchemaError(iw + ": expected [num, den]");
      const Int num = json_to_int(co[i][0], iw);
      const Int den = json_to_int(co[i][1], iw);
      if (den <= 0) throw SchemaError(iw + ": denominator must be positive");
      v.emplace_back(num, den);
    }
    if (!out.ap.emplace(p, NumberFieldElem(out.field_poly, std::move(v))).second) {
      throw SchemaError(ew + ".p: duplicate prime " + std::to_string(p));
    }
  }
  for (std::uint64_t p : primes_between(2, kRequiredPrimeBound)) {
    if (level % p == 0) continue;
    if (out.ap.count(p) == 0) {
      throw DataGapError(cw + ": a_" + std::to_string(p) + " missing (required for every p <= " +
                         std::to_string(kRequiredPrimeBound) + " not dividing the level)");
    }
  }
  return out;
}

void add_file(NewformStore& store, const std::string& path) {
  const std::string text = read_text_file(path);
  std::uint64_t level = 0;
  std::vector<NewformClass> classes = parse_level_json(text, path, &level);
  auto& slot = store.levels[level];
  std::set<std::string> labels;
  for (const auto& c : slot) labels.insert(c.label);
  for (auto& c : classes) {
    if (!labels.insert(c.label).second) {
      throw SchemaError(path + ": duplicate label " + c.label + " at level " + std::to_string(level));
    }
    slot.push_back(std::move(c));
  }
  store.provenance.push_back(path + " sha256:" + sha256_hex(text));
}

}  // namespace

std::vector<NewformClass> parse_level_json(const std::string& text, const std::string& origin,
                                           std::uint64_t* level_out) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw SchemaError(origin + ": empty file");
  json doc;
  try {
    doc = parse_json_exact(text);
  } catch (const SchemaError& e) {
    throw SchemaError(origin + ": " + e.what());
  }
  require_keys(doc, {"level", "weight", "classes"}, origin);
  const std::uint64_t level = small_uint(doc["level"], origin + ".level");
  if (json_to_int(doc["weight"], origin + ".weight") != 2) throw SchemaError(origin + ".weight: must be 2");
  if (!doc["classes"].is_array()) throw SchemaError(origin + ".classes: expected an array");
  std::vector<NewformClass> out;
  std::set<std::string> labels;
  for (std::size_t k = 0; k < doc["classes"].size(); ++k) {
    NewformClass c = parse_class(doc["classes"][k], level, origin + ".classes[" + std::to_string(k) + "]");
    if (!labels.insert(c.label).second) throw SchemaError(origin + ": duplicate label " + c.label);
    out.push_back(std::move(c));
  }
  if (level_out != nullptr) *level_out = level;
  return out;
}

NewformStore load_store(const std::string& path) {
  namespace fs = std::filesystem;
  NewformStore store;
  if (fs::is_directory(path)) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) add_file(store, f);
  } else {
    add_file(store, path);
  }
  if (store.total() == 0) throw SchemaError(path + ": no newform classes found");
  return store;
}

std::string canonical_json(std::uint64_t level, std::vector<NewformClass> classes) {
  std::sort(classes.begin(), classes.end(),
            [](const NewformClass& x, const NewformClass& y) { return x.label < y.label; });
  std::string s = "{\"classes\":[";
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const NewformClass& c = classes[k];
    if (k > 0) s += ',';
    s += "{\"ap\":[";
    bool first = true;
    for (const auto& [p, e] : c.ap) {
      if (!first) s += ',';
      first = false;
      s += "{\"coords\":[";
      for (std::size_t i = 0; i < e.coords().size(); ++i) {
        if (i > 0) s += ',';
        s += '[' + e.coords()[i].get_num().get_str() + ',' + e.coords()[i].get_den().get_str() + ']';
      }
      s += "],\"p\":" + std::to_string(p) + '}';
    }
    s += "],\"field_poly\":[";
    for (std::size_t i = 0; i < c.field_poly.coeffs().size(); ++i) {
      if (i > 0) s += ',';
      s += c.field_poly.coeffs()[i].get_str();
    }
    s += "],\"label\":" + json(c.label).dump() + '}';
  }
  s += "],\"level\":" + std::to_string(level) + ",\"weight\":2}\n";
  return s;
}

void write_level_file(const std::string& path, std::uint64_t level, const std::vector<NewformClass>& classes) {
  write_text_file_atomic(path, canonical_json(level, classes));
}

std::map<std::uint64_t, std::size_t> default_expected_counts() {
  return {{70, 1}, {350, 8}, {8960, 64}, {44800, 196}};
}

bool ValidationReport::ok() const {
  if (!hasse_failures.empty()) return false;
  return std::all_of(levels.begin(), levels.end(), [](const LevelCheck& c) { return c.ok(); });
}

ValidationReport validate_store(const NewformStore& store,
                                const std::map<std::uint64_t, std::size_t>& expected_counts) {
  ValidationReport r;
  for (const auto& [level, expected] : expected_counts) {
    LevelCheck c;
    c.level = level;
    c.expected = expected;
    c.present = store.levels.count(level) != 0;
    c.found = store.count(level);
    r.levels.push_back(c);
  }
  for (const auto& [level, classes] : store.levels) {
    for (const auto& f : classes) {
      if (f.degree() != 1) continue;
      for (const auto& [p, e] : f.ap) {
        ++r.hasse_checked;
        const Rat v = e.coords()[0];
        if (v * v > Rat(4 * p)) {
          r.hasse_failures.push_back(f.label + " p=" + std::to_string(p) + " a_p=" + to_string(v));
        }
      }
    }
  }
  return r;
}

}  // namespace ap5
