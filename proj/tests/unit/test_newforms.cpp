#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "ap5/errors.hpp"
#include "ap5/newforms.hpp"
#include "ap5/remote_adapter.hpp"

#include <doctest.h>
#include <httplib.h>

#include "../support/oracles.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

using namespace ap5;
namespace fs = std::filesystem;

namespace {

const std::string kData = AP5_DATA_DIR;

/// Level file for one class over Q(sqrt 2) (or Q when rational) with
/// a_p = p mod 5 - 2 + (p mod 3) sqrt 2, every required prime present.
json synthetic_class(std::uint64_t level, const std::string& label, bool rational, std::uint64_t skip_p = 0) {
  json ap = json::array();
  for (std::uint64_t p : primes_between(2, kRequiredPrimeBound)) {
    if (p == skip_p) continue;
    json coords = json::array();
    coords.push_back({static_cast<long>(p % 5) - 2, 1});
    if (!rational) coords.push_back({static_cast<long>(p % 3), 1});
    ap.push_back({{"p", p}, {"coords", coords}});
  }
  json fp = rational ? json{0, 1} : json{-2, 0, 1};
  return {{"label", label}, {"field_poly", fp}, {"ap", ap}};
}

std::string level_doc(std::uint64_t level, const std::vector<json>& classes) {
  return json{{"level", level}, {"weight", 2}, {"classes", json(classes)}}.dump();
}

fs::path temp_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("ap5_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("parse a well-formed level file") {
  std::uint64_t level = 0;
  const auto classes =
      parse_level_json(level_doc(70, {synthetic_class(70, "70.x.a", true), synthetic_class(70, "70.x.b", false)}),
                       "mem", &level);
  CHECK(level == 70);
  REQUIRE(classes.size() == 2);
  CHECK(classes[1].degree() == 2);
  CHECK(classes[1].a(13).coords() == std::vector<Rat>{1, 1});
  CHECK_THROWS_AS((void)classes[0].a(1009), DataGapError);
}

TEST_CASE("schema violations") {
  CHECK_THROWS_AS((void)parse_level_json("", "mem"), SchemaError);
  CHECK_THROWS_AS((void)parse_level_json("{\"level\": 70", "mem"), SchemaError);
  CHECK_THROWS_AS((void)parse_level_json(R"({"level":70,"weight":4,"classes":[]})", "mem"), SchemaError);
  CHECK_THROWS_AS((void)parse_level_json(R"({"level":70,"weight":2,"classes":[],"extra":1})", "mem"), SchemaError);

  json c = synthetic_class(70, "70.x.a", false);
  c["field_poly"] = {-2, 0, 3};
  CHECK_THROWS_AS((void)parse_level_json(level_doc(70, {c}), "mem"), SchemaError);

  c = synthetic_class(70, "70.x.a", false);
  c["ap"][3]["coords"] = {{1, 1}};
  CHECK_THROWS_AS((void)parse_level_json(level_doc(70, {c}), "mem"), SchemaError);

  c = synthetic_class(70, "70.x.a", true);
  c["ap"][3]["coords"] = {{1, 0}};
  CHECK_THROWS_AS((void)parse_level_json(level_doc(70, {c}), "mem"), SchemaError);

  c = synthetic_class(70, "70.x.a", true);
  c["ap"][3]["p"] = 9;
  CHECK_THROWS_AS((void)parse_level_json(level_doc(70, {c}), "mem"), SchemaError);

  c = synthetic_class(70, "70.x.a", true);
  c["ap"].push_back(c["ap"][4]);
  CHECK_THROWS_AS((void)parse_level_json(level_doc(70, {c}), "mem"), SchemaError);

  const json dup = synthetic_class(70, "70.x.a", true);
  CHECK_THROWS_AS((void)parse_level_json(level_doc(70, {dup, dup}), "mem"), SchemaError);
}

TEST_CASE("a missing required eigenvalue is a data gap") {
  CHECK_THROWS_AS((void)parse_level_json(level_doc(70, {synthetic_class(70, "70.x.a", true, 113)}), "mem"),
                  DataGapError);
  // Primes dividing the level are optional.
  CHECK_NOTHROW((void)parse_level_json(level_doc(70, {synthetic_class(70, "70.x.a", true, 7)}), "mem"));
}

TEST_CASE("large coordinates survive parsing exactly") {
  json c = synthetic_class(70, "70.x.a", false);
  std::string text = level_doc(70, {c});
  const std::string needle = R"({"coords":[[-1,1],[2,1]],"p":11})";
  const auto pos = text.find(needle);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, needle.size(), R"({"coords":[[123456789012345678901234567891,7],[2,1]],"p":11})");
  const auto classes = parse_level_json(text, "mem");
  CHECK(classes[0].a(11).coords()[0] == Rat(Int("123456789012345678901234567891"), 7));
}

TEST_CASE("canonical serialization round-trips and is stable") {
  const auto classes =
      parse_level_json(level_doc(350, {synthetic_class(350, "350.x.b", false), synthetic_class(350, "350.x.a", true)}),
                       "mem");
  const std::string once = canonical_json(350, classes);
  const std::string twice = canonical_json(350, parse_level_json(once, "round"));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
  CHECK(once.find("350.x.a") < once.find("350.x.b"));
  CHECK(once.rfind("{\"classes\":", 0) == 0);
}

TEST_CASE("store loading, provenance and validation") {
  const fs::path dir = temp_dir("store");
  write_level_file((dir / "level_70.json").string(), 70,
                   parse_level_json(level_doc(70, {synthetic_class(70, "70.x.a", true)}), "mem"));
  const NewformStore store = load_store(dir.string());
  CHECK(store.count(70) == 1);
  REQUIRE(store.provenance.size() == 1);
  CHECK(store.provenance[0].find("sha256:") != std::string::npos);
  const auto rep = validate_store(store, default_expected_counts());
  CHECK_FALSE(rep.ok());
  bool flagged_8960 = false;
  for (const auto& l : rep.levels) {
    if (l.level == 8960) flagged_8960 = !l.present;
  }
  CHECK(flagged_8960);
  // a_p = p mod 5 - 2 stays inside the Hasse bound.
  CHECK(rep.hasse_failures.empty());

  const fs::path empty = temp_dir("empty");
  CHECK_THROWS_AS((void)load_store(empty.string()), SchemaError);
  write_level_file((empty / "level_71.json").string(), 70,
                   parse_level_json(level_doc(70, {synthetic_class(70, "70.x.a", true)}), "mem"));
  write_level_file((empty / "level_72.json").string(), 70,
                   parse_level_json(level_doc(70, {synthetic_class(70, "70.x.a", true)}), "mem"));
  CHECK_THROWS_AS((void)load_store(empty.string()), SchemaError);
}

TEST_CASE("Hasse violations are reported for rational classes") {
  json c = synthetic_class(70, "70.x.a", true);
  c["ap"][4]["coords"] = {{9, 1}};  // p = 11, |9| > 2 sqrt 11
  const fs::path dir = temp_dir("hasse");
  write_level_file((dir / "l.json").string(), 70, parse_level_json(level_doc(70, {c}), "mem"));
  const auto rep = validate_store(load_store(dir.string()), {{70, 1}});
  CHECK(rep.hasse_failures.size() == 1);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("bundled data at levels 70 and 350") {
  const NewformStore store = load_store(kData + "/newforms");
  REQUIRE(store.count(70) == 1);
  CHECK(store.count(350) == 8);
  const NewformClass& f = store.levels.at(70).front();
  CHECK(f.degree() == 1);
  // The rational class at level 70 is attached to y^2 + xy + y = x^3 - x^2 + 2x - 3.
  for (std::uint64_t p : primes_between(3, kRequiredPrimeBound)) {
    if (70 % p == 0) continue;
    const auto P = static_cast<std::int64_t>(p);
    CHECK(f.a(p).coords()[0] == oracle::trace_by_count(P, 1, -1, 1, 2, -3));
  }
  const auto rep = validate_store(store, {{70, 1}, {350, 8}});
  CHECK(rep.ok());
}

TEST_CASE("remote record conversion rewrites the Hecke ring basis") {
  const RemoteAdapter& ad = lmfdb_adapter();
  json orbit{{"label", "99.2.a.z"}, {"dim", 2}, {"hecke_orbit_code", 12345}};
  json ap = json::array();
  for (std::uint64_t p : primes_between(2, kRequiredPrimeBound)) ap.push_back({static_cast<long>(p % 3), 1});
  // beta_0 = 1, beta_1 = (1 + nu) / 2 with nu^2 = 5.
  json eigen{{"field_poly", {-5, 0, 1}},
             {"ap", ap},
             {"hecke_ring_numerators", {{1, 0}, {1, 1}}},
             {"hecke_ring_denominators", {1, 2}},
             {"hecke_ring_cyclotomic_generator", 0}};
  const NewformClass c = class_from_remote(orbit, eigen, 99, ad);
  // a_2 = 2 + beta_1 = 5/2 + nu/2.
  CHECK(c.a(2).coords() == std::vector<Rat>{Rat(5, 2), Rat(1, 2)});
  eigen["hecke_ring_cyclotomic_generator"] = 8;
  CHECK_THROWS_AS((void)class_from_remote(orbit, eigen, 99, ad), FetchError);
  eigen["hecke_ring_cyclotomic_generator"] = 0;
  eigen["ap"] = json::array({{1, 0}});
  CHECK_THROWS_AS((void)class_from_remote(orbit, eigen, 99, ad), FetchError);
}

TEST_CASE("fetch against a local mock service") {
  const RemoteAdapter& ad = lmfdb_adapter();
  httplib::Server server;
  std::atomic<int> orbit_calls{0};
  std::atomic<int> flaky{0};
  json ap = json::array();
  for (std::uint64_t p : primes_between(2, kRequiredPrimeBound)) ap.push_back({static_cast<long>(p % 3) - 1});
  server.Get(ad.orbit_path, [&](const httplib::Request& req, httplib::Response& res) {
    ++orbit_calls;
    if (flaky++ == 0) {
      res.status = 503;
      return;
    }
    if (req.get_param_value("level") == "404") {
      res.status = 404;
      return;
    }
    // Two pages of one orbit each.
    json page;
    if (!req.has_param(ad.offset_param)) {
      page = {{"data", {{{"label", "70.2.a.b"}, {"dim", 1}, {"hecke_orbit_code", 2}}}}, {"next", "more"}};
    } else {
      page = {{"data", {{{"label", "70.2.a.a"}, {"dim", 1}, {"hecke_orbit_code", 1}}}}, {"next", nullptr}};
    }
    res.set_content(page.dump(), "application/json");
  });
  server.Get(ad.eigen_path, [&](const httplib::Request&, httplib::Response& res) {
    json page{{"data", {{{"field_poly", {0, 1}}, {"ap", ap}, {"hecke_ring_numerators", nullptr},
                         {"hecke_ring_denominators", nullptr}, {"hecke_ring_cyclotomic_generator", 0}}}}};
    res.set_content(page.dump(), "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread th([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const fs::path dir = temp_dir("fetch");
  FetchOptions opt;
  opt.base_url = "http://127.0.0.1:" + std::to_string(port);
  opt.retries = 2;
  opt.timeout_seconds = 5;
  const std::string out = (dir / "level_70.json").string();
  fetch_remote(70, out, opt);
  const NewformStore store = load_store(out);
  REQUIRE(store.count(70) == 2);
  CHECK(store.levels.at(70)[0].label == "70.2.a.a");
  CHECK(orbit_calls.load() == 3);  // one retried failure, then two pages

  const std::string missing = (dir / "level_404.json").string();
  CHECK_THROWS_AS(fetch_remote(404, missing, opt), FetchError);
  CHECK_FALSE(fs::exists(missing));

  server.stop();
  th.join();

  FetchOptions dead = opt;
  dead.retries = 0;
  dead.timeout_seconds = 1;
  CHECK_THROWS_AS(fetch_remote(70, (dir / "dead.json").string(), dead), FetchError);
}

TEST_CASE("new subspace dimensions") {
  CHECK(oracle::genus_x0(11) == 1);
  CHECK(oracle::genus_x0(37) == 2);
  CHECK(oracle::genus_x0(70) == 9);
  CHECK(oracle::new_dimension(11) == 1);
  CHECK(oracle::new_dimension(22) == 0);
  CHECK(oracle::new_dimension(70) == 1);
  CHECK(oracle::new_dimension(44800) == 912);
  // The bundled classes fill each new subspace: their degrees add up to its dimension.
  const NewformStore store = load_store(kData + "/newforms");
  for (const auto& [level, classes] : store.levels) {
    long total = 0;
    for (const auto& c : classes) total += static_cast<long>(c.degree());
    CHECK(total == oracle::new_dimension(static_cast<long>(level)));
  }
}
