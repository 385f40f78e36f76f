#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "../support/oracle.hpp"
#include "zetamoments/error.hpp"
#include "zetamoments/zeros.hpp"
#include "zetamoments/zeta.hpp"

using namespace zm;

namespace {

const ZeroCache& cache100() {
  static const ZeroCache c = sweep(100.0);
  return c;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

ErrorCode load_code(const std::string& text) {
  try {
    parse_cache(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

// Re-signs a cache body with a correct checksum.
std::string resign(const std::string& body) { return body + "#sha256=" + sha256_hex(body) + "\n"; }

std::string body_of(const std::string& text) { return text.substr(0, text.rfind("#sha256=")); }

}  // namespace

TEST_CASE("sweep small heights") {
  ZeroCache c20 = sweep(20.0);
  REQUIRE(c20.size() == 1);
  double ref = static_cast<double>(oracle::bisect_zero(14.0L, 14.3L));
  CHECK(std::fabs(c20.records[0].gamma - ref) < 1e-8);
  CHECK(std::fabs(c20.records[0].gamma - 14.134725141734693) < 1e-8);

  CHECK(sweep(14.0).empty());
  CHECK(cache100().size() == 29);
  CHECK(oracle::sign_changes(10.0L, 100.0L, 0.005L) == 29);
}

TEST_CASE("cache invariants") {
  const ZeroCache& c = cache100();
  validate_cache(c);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ZeroRecord& r = c.records[i];
    CHECK(r.index == static_cast<long>(i + 1));
    CHECK(r.gamma > 14.0);
    CHECK(r.residual <= max_residual);
    if (i) CHECK(r.gamma > c.records[i - 1].gamma);
    CHECK(std::abs(zeta({0.5, r.gamma}).value) <= 10.0 * r.residual + 1e-12);
  }
}

TEST_CASE("count audit") {
  CountAudit a = count_audit(cache100());
  CHECK(a.n_found == 29);
  CHECK(a.main_term == doctest::Approx(28.1).epsilon(0.01));
  CHECK(a.deviation_main == doctest::Approx(0.9).epsilon(0.05));
  CHECK(std::fabs(a.deviation_theta) <= 2.0);

  CountAudit e = count_audit(sweep(14.0));
  CHECK(e.n_found == 0);
  CHECK(std::fabs(e.deviation_main) < 1.0);
}

TEST_CASE("Gram law holds in most blocks up to 1000") {
  ZeroCache c = sweep(1000.0);
  CHECK(std::stod(c.meta.extra.at("gram_block_fraction")) >= 0.95);
  CHECK(std::fabs(count_audit(c).deviation_theta) <= 2.0);
}

TEST_CASE("sweep rejects invalid arguments") {
  CHECK_THROWS_AS(sweep(2e5), Error);
  CHECK_THROWS_AS(sweep(100.0, 1e-14), Error);
}

TEST_CASE("cache round trip") {
  const ZeroCache& c = cache100();
  std::string path = temp_path("zm_roundtrip.zcache");
  save_cache(c, path);
  ZeroCache back = load_cache(path);
  CHECK(back == c);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(back.records[i].gamma == c.records[i].gamma);
  std::filesystem::remove(path);
}

TEST_CASE("cache validation on load") {
  std::string text = serialize_cache(cache100());

  std::string body = body_of(text);
  auto pos = body.find("\n2,");
  REQUIRE(pos != std::string::npos);
  auto end = body.find('\n', pos + 1);
  std::string line2 = body.substr(pos + 1, end - pos - 1);
  std::string swapped = line2.substr(0, 2) + "30.5" + line2.substr(line2.find(',', 2));
  std::string bad_order = body.substr(0, pos + 1) + swapped + body.substr(end);
  CHECK(load_code(resign(bad_order)) == ErrorCode::invariant);

  std::string tampered = text;
  tampered[tampered.find("\n1,") + 4] ^= 1;
  CHECK(load_code(tampered) == ErrorCode::checksum);

  std::string v2 = text;
  v2.replace(v2.find("v1"), 2, "v2");
  CHECK(load_code(v2) == ErrorCode::version);
  CHECK(load_code("garbage\n") == ErrorCode::format);
}

TEST_CASE("header-only cache") {
  ZeroCache empty;
  empty.t_max = 12.5;
  std::string text = serialize_cache(empty);
  ZeroCache back = parse_cache(text);
  CHECK(back.empty());
  CHECK(back.t_max == 12.5);

  std::string minimal = "zcache v1 tmax=13 n=0 tol=1e-10\n";
  ZeroCache m = parse_cache(resign(minimal));
  CHECK(m.empty());
  CHECK(m.t_max == 13.0);
}
