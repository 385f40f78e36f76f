#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace zm {

struct ZeroRecord {
  long index = 0;
  double gamma = 0.0;
  double residual = 0.0;

  bool operator==(const ZeroRecord&) const = default;
};

struct CacheMeta {
  std::string tool_version;
  double refine_tol = 0.0;
  std::string created;
  std::map<std::string, std::string> extra;

  bool operator==(const CacheMeta&) const = default;
};

struct ZeroCache {
  double t_max = 0.0;
  std::vector<ZeroRecord> records;
  CacheMeta meta;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
  bool operator==(const ZeroCache&) const = default;
};

constexpr double default_refine_tol = 1e-10;
constexpr double max_residual = 1e-9;

// Zeros of Z(t) with 0 < gamma <= t_max, for t_max <= 1e5 and
// 1e-12 <= refine_tol <= 1e-9. Throws ErrorCode::unresolved_block when a
// Gram block cannot be reconciled with its expected count.
ZeroCache sweep(double t_max, double refine_tol = default_refine_tol);

struct CountAudit {
  double t_max = 0.0;
  long n_found = 0;
  double theta_count = 0.0;     // theta(T)/pi + 1
  double main_term = 0.0;       // T/2pi log(T/2pi) - T/2pi
  double deviation_theta = 0.0;  // n_found - theta_count
  double deviation_main = 0.0;   // n_found - main_term
};

CountAudit count_audit(const ZeroCache& cache);

// Cache file: a `zcache v1` header line, optional `# key=value` lines,
// `index,gamma,residual` records and a trailing `#sha256=<hex>` line.
std::string serialize_cache(const ZeroCache& cache);
ZeroCache parse_cache(std::string_view text);
void save_cache(const ZeroCache& cache, const std::string& path);
ZeroCache load_cache(const std::string& path);

// Validates ordering, indices, residuals and range; throws ErrorCode::invariant.
void validate_cache(const ZeroCache& cache);

std::string sha256_hex(std::string_view data);

}  // namespace zm
