#include "ap5/json_io.hpp"

#include "ap5/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

namespace ap5 {

namespace {

constexpr char kBigTag = '\x01';

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

// DOM builder; differs from the stock one only in how it treats integer
// literals that did not fit the 64-bit number types.
class ExactSax : public nlohmann::json_sax<json> {
 public:
  json root;

  bool null() override { return put(json(nullptr)); }
  bool boolean(bool v) override { return put(json(v)); }
  bool number_integer(number_integer_t v) override { return put(json(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(json(v)); }
  bool number_float(number_float_t v, const string_t& s) override {
    if (is_integer_literal(s)) return put(json(std::string(1, kBigTag) + s));
    return put(json(v));
  }
  bool string(string_t& v) override { return put(json(v)); }
  bool binary(binary_t& v) override { return put(json::binary(v)); }
  bool start_object(std::size_t) override { return open(json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(json::array()); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    throw SchemaError("JSON parse error at byte " + std::to_string(position) + ": " + ex.what());
  }

 private:
  json* insert(json v, bool descend) {
    json* slot = nullptr;
    if (stack_.empty()) {
      root = std::move(v);
      slot = &root;
    } else if (stack_.back()->is_array()) {
      stack_.back()->push_back(std::move(v));
      slot = &stack_.back()->back();
    } else {
      slot = &((*stack_.back())[key_] = std::move(v));
    }
    if (descend) stack_.push_back(slot);
    return slot;
  }
  bool put(json v) {
    insert(std::move(v), false);
    return true;
  }
  bool open(json v) {
    insert(std::move(v), true);
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  std::vector<json*> stack_;
  std::string key_;
};

}  // namespace

json parse_json_exact(const std::string& text) {
  ExactSax sax;
  const bool ok = json::sax_parse(text, &sax);
  if (!ok) throw SchemaError("JSON parse error");
  return std::move(sax.root);
}

Int json_to_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (!s.empty() && s[0] == kBigTag) return Int(s.substr(1));
  }
  throw SchemaError(where + ": expected an integer, found " + std::string(j.type_name()));
}

Int json_to_int_lenient(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (is_integer_literal(s)) return Int(s);
  }
  return json_to_int(j, where);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace ap5
