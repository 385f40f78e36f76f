#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "zetamoments/zm.h"

namespace {

std::string slurp(const std::string& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string tmp(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

int run(const std::string& args) {
  std::string cmd = std::string(ZM_CLI_PATH) + " " + args + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("C API basics") {
  double re = 0, im = 0, err = 0;
  REQUIRE(zm_zeta(2.0, 0.0, &re, &im, &err) == ZM_OK);
  CHECK(re == doctest::Approx(1.6449340668482264));
  CHECK(zm_zeta(1.0, 0.0, &re, &im, &err) == ZM_E_POLE);
  CHECK(std::string(zm_last_error_message()).size() > 0);
  CHECK(std::string(zm_status_name(ZM_E_POLE)) == "pole");
  CHECK(zm_zeta(2.0, 0.0, nullptr, &im, &err) == ZM_E_NULL_ARGUMENT);
  CHECK(std::string(zm_version()) == "0.1.0");

  zm_cache* c = nullptr;
  REQUIRE(zm_sweep(100.0, 1e-10, &c) == ZM_OK);
  CHECK(zm_cache_size(c) == 29);
  double g = 0;
  long idx = 0;
  CHECK(zm_cache_zero(c, 0, &idx, &g, nullptr) == ZM_OK);
  CHECK(idx == 1);
  CHECK(g == doctest::Approx(14.134725141734693));
  CHECK(zm_cache_zero(c, 29, &idx, &g, nullptr) == ZM_E_PRECONDITION);

  char* json = nullptr;
  CHECK(zm_moment_json(c, 1.0, 1, &json) == ZM_OK);
  CHECK(std::string(json).find("\"raw_sum\":") != std::string::npos);
  zm_string_free(json);
  CHECK(zm_moment_json(c, 1.0, 5, &json) == ZM_E_PRECONDITION);
  zm_cache_free(c);

  zm_cache* missing = nullptr;
  CHECK(zm_cache_load("/nonexistent/zcache", &missing) == ZM_E_IO);
  CHECK(missing == nullptr);
}

TEST_CASE("CLI round trip and exit codes") {
  std::string cache = tmp("zm_cli_cache.zcache");
  std::string out = tmp("zm_cli_moments.json");
  REQUIRE(run("sweep --tmax 100 --cache " + cache) == 0);
  REQUIRE(run("moments --cache " + cache + " --k 1 --ell 1 --out " + out) == 0);

  zm_cache* c = nullptr;
  REQUIRE(zm_sweep(100.0, 1e-10, &c) == ZM_OK);
  char* json = nullptr;
  REQUIRE(zm_moment_json(c, 1.0, 1, &json) == ZM_OK);
  CHECK(slurp(out) == std::string(json) + "\n");
  zm_string_free(json);
  zm_cache_free(c);

  std::string csv = tmp("zm_cli_moments.csv");
  REQUIRE(run("moments --cache " + cache + " --k 1 --ell 1 --out " + csv) == 0);
  CHECK(slurp(csv).rfind("k,ell,alpha_re,alpha_im,t_max,count,raw_sum", 0) == 0);

  std::string empty = tmp("zm_cli_empty.zcache");
  REQUIRE(run("sweep --tmax 14 --cache " + empty) == 0);
  std::string err = tmp("zm_cli_err.txt");
  int rc = std::system((std::string(ZM_CLI_PATH) + " moments --cache " + empty + " --k 1 --ell 1 2>" + err).c_str());
  CHECK(WEXITSTATUS(rc) == 1);
  CHECK(slurp(err).find("empty cache") != std::string::npos);

  CHECK(run("moments --cache " + cache + " --k abc") == 1);
  CHECK(run("moments --cache " + cache + " --k 1 --out x.txt") == 1);
  CHECK(run("bogus") == 1);

  std::string hist = tmp("zm_cli_hist.json");
  REQUIRE(run("largeval --cache " + cache + " --alpha-re 0.001 --alpha-im 0 --vmin 3 --vmax 8 --out " + hist) == 0);
  CHECK(slurp(hist).find("\"counts\":[") != std::string::npos);

  std::string bad = tmp("zm_cli_bad.json");
  std::ofstream(bad) << "{\"schema\":\"nope\"}";
  CHECK(run("diff " + bad + " " + bad) != 0);

  for (const char* sub : {"sweep", "moments", "shifted", "largeval", "gonek", "meansquare", "audit", "continuous", "diff"})
    CHECK(run(std::string(sub) + " --help >/dev/null") == 0);

  for (const auto& p : {cache, out, csv, empty, err, hist, bad}) std::filesystem::remove(p);
}
