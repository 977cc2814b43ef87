#include "doctest.h"

#include "tasep/cache.hpp"
#include "tasep/emit.hpp"

#include <filesystem>
#include <random>

using namespace tasep;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tasepkit-test-" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("permutation distributions serialise as a p/q map") {
  const auto d = continuum::p_exact(3);
  const auto j = emit::to_json(d);
  CHECK(j["p"]["213"] == "1/12");
  CHECK(j.dump().rfind("{\"n\":3,", 0) == 0);
  CHECK(emit::perm_dist_from_json(nlohmann::json::parse(j.dump())).p == d.p);
  CHECK(emit::perm_dist_csv(d).rfind("perm,p\n123,5/12\n", 0) == 0);
}

TEST_CASE("polynomials and correlation tables round trip") {
  const auto g = continuum::g_poly(parse_permutation("2143"));
  CHECK(emit::poly_from_json(emit::Json::parse(emit::to_json(g).dump())) == g);
  const auto c = continuum::correlations_exact(4);
  const auto back = emit::corr_table_from_json(emit::Json::parse(emit::to_json(c).dump()));
  CHECK(back.c == c.c);
  CHECK(emit::rational_from_json(emit::to_json(make_rational(-7, 3))) == make_rational(-7, 3));
  CHECK_THROWS(emit::poly_from_json(emit::Json::parse(R"({"vars":2,"terms":[{"coef":"1","exps":[1]}]})")));
}

TEST_CASE("Monte Carlo CSV has estimate and stderr columns") {
  const auto e = continuum::correlations_mc(3, 2000, 1);
  const auto csv = emit::corr_estimate_csv(e);
  CHECK(csv.rfind("i,j,estimate,stderr,conjecture\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6);
  const auto j = emit::to_json(e);
  CHECK(j["cells"][0].contains("stderr"));
  CHECK(emit::corr_table_csv(continuum::correlations_exact(3)).find("1,2,4/5,4/5") != std::string::npos);
}

TEST_CASE("field order is stable") {
  const auto j = emit::to_json(rs::rs_stationary(2, 1));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "k", "unique", "p"});
  CHECK(emit::to_json(rs::rs_stationary(2, 1)).dump() == j.dump());
  CHECK(emit::format_double(0.1) == "0.10000000000000001");
  CHECK(emit::parse_format("csv") == emit::Format::kCsv);
  CHECK_THROWS(emit::parse_format("xml"));
}

TEST_CASE("cache keys depend on command, parameters and version") {
  const auto k = cache::make_key("a", "x=1");
  CHECK(k.size() == 16);
  CHECK(k == cache::make_key("a", "x=1"));
  CHECK(k != cache::make_key("a", "x=2"));
  CHECK(k != cache::make_key("b", "x=1"));
  CHECK(k != cache::make_key("a", "x=1", "other-version"));
  CHECK(cache::fnv1a("") == 0xcbf29ce484222325ULL);
}

TEST_CASE("cache stores, hits and survives a new instance") {
  const auto dir = fresh_dir("hits");
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return std::string("value");
  };
  {
    cache::ResultCache c(dir, 0.0);
    CHECK(c.get_or_compute("cmd", "p", compute) == "value");
    CHECK(c.get_or_compute("cmd", "p", compute) == "value");
    CHECK(c.stats().misses == 1);
    CHECK(c.stats().hits == 1);
  }
  cache::ResultCache again(dir, 0.0);
  CHECK(again.get_or_compute("cmd", "p", compute) == "value");
  CHECK(calls == 1);
  fs::remove_all(dir);
}

TEST_CASE("audits recompute and replace stale entries") {
  const auto dir = fresh_dir("audit");
  cache::ResultCache c(dir, 1.0);
  c.store(cache::make_key("cmd", "p"), "stale");
  CHECK(c.get_or_compute("cmd", "p", [] { return std::string("fresh"); }) == "fresh");
  CHECK(c.stats().audits == 1);
  CHECK(c.stats().audit_failures == 1);
  CHECK(c.load(cache::make_key("cmd", "p")) == std::optional<std::string>("fresh"));
  CHECK(c.get_or_compute("cmd", "p", [] { return std::string("fresh"); }) == "fresh");
  CHECK(c.stats().audit_failures == 1);
  fs::remove_all(dir);
}

TEST_CASE("cached exact results equal fresh ones") {
  const auto dir = fresh_dir("sound");
  cache::ResultCache c(dir, 0.05, 3);
  auto compute = [] { return emit::to_json(continuum::correlations_exact(4)).dump(); };
  const auto first = c.get_or_compute("corr", "n=4", compute);
  for (int i = 0; i < 100; ++i) CHECK(c.get_or_compute("corr", "n=4", compute) == first);
  CHECK(c.stats().audit_failures == 0);
  CHECK(c.stats().audits > 0);
  fs::remove_all(dir);
}
