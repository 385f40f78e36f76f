#include <openssl/evp.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zetamoments/error.hpp"
#include "zetamoments/zeros.hpp"

namespace zm {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(std::string_view sv, const char* what) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc() || p != sv.data() + sv.size())
    fail(ErrorCode::format, std::string("cache: malformed ") + what + " '" + std::string(sv) + "'");
  return v;
}

long parse_long(std::string_view sv, const char* what) {
  long v = 0;
  auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc() || p != sv.data() + sv.size())
    fail(ErrorCode::format, std::string("cache: malformed ") + what + " '" + std::string(sv) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view after_key(std::string_view field, std::string_view key) {
  if (field.substr(0, key.size()) != key) fail(ErrorCode::format, "cache: expected '" + std::string(key) + "' in header");
  return field.substr(key.size());
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorCode::internal, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string serialize_cache(const ZeroCache& c) {
  std::string body = "zcache v1 tmax=" + num(c.t_max) + " n=" + std::to_string(c.size()) +
                     " tol=" + num(c.meta.refine_tol) + "\n";
  if (!c.meta.tool_version.empty()) body += "# tool_version=" + c.meta.tool_version + "\n";
  if (!c.meta.created.empty()) body += "# created=" + c.meta.created + "\n";
  for (const auto& [k, v] : c.meta.extra) body += "# " + k + "=" + v + "\n";
  for (const ZeroRecord& r : c.records)
    body += std::to_string(r.index) + "," + num(r.gamma) + "," + num(r.residual) + "\n";
  body += "#sha256=" + sha256_hex(body) + "\n";
  return body;
}

ZeroCache parse_cache(std::string_view text) {
  const std::string_view tag = "#sha256=";
  if (text.substr(0, 7) != "zcache ") fail(ErrorCode::format, "cache: not a zcache file");
  std::size_t pos = text.rfind(tag);
  if (pos == std::string_view::npos || (pos > 0 && text[pos - 1] != '\n'))
    fail(ErrorCode::checksum, "cache: missing #sha256 trailer");
  std::string_view body = text.substr(0, pos);
  std::string_view digest = text.substr(pos + tag.size());
  while (!digest.empty() && (digest.back() == '\n' || digest.back() == '\r')) digest.remove_suffix(1);

  // Header first, so a version mismatch is reported as such.
  std::size_t eol = body.find('\n');
  if (eol == std::string_view::npos) fail(ErrorCode::format, "cache: missing header line");
  auto fields = split(body.substr(0, eol), ' ');
  if (fields.size() != 5 || fields[0] != "zcache") fail(ErrorCode::format, "cache: malformed header");
  if (fields[1] != "v1") fail(ErrorCode::version, "cache: unsupported format version '" + std::string(fields[1]) + "'");
  if (digest != sha256_hex(body)) fail(ErrorCode::checksum, "cache: checksum mismatch");

  ZeroCache c;
  c.t_max = parse_double(after_key(fields[2], "tmax="), "tmax");
  long n = parse_long(after_key(fields[3], "n="), "n");
  c.meta.refine_tol = parse_double(after_key(fields[4], "tol="), "tol");

  std::string_view rest = body.substr(eol + 1);
  while (!rest.empty()) {
    std::size_t e = rest.find('\n');
    std::string_view line = rest.substr(0, e);
    rest = e == std::string_view::npos ? std::string_view() : rest.substr(e + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string_view kv = line.substr(1);
      while (!kv.empty() && kv.front() == ' ') kv.remove_prefix(1);
      std::size_t eq = kv.find('=');
      if (eq == std::string_view::npos) continue;
      std::string key(kv.substr(0, eq)), value(kv.substr(eq + 1));
      if (key == "tool_version")
        c.meta.tool_version = value;
      else if (key == "created")
        c.meta.created = value;
      else
        c.meta.extra[key] = value;
      continue;
    }
    auto cols = split(line, ',');
    if (cols.size() != 3) fail(ErrorCode::format, "cache: record must have 3 columns: '" + std::string(line) + "'");
    c.records.push_back({parse_long(cols[0], "index"), parse_double(cols[1], "gamma"), parse_double(cols[2], "residual")});
  }
  if (static_cast<long>(c.records.size()) != n)
    fail(ErrorCode::format, "cache: header n=" + std::to_string(n) + " but " + std::to_string(c.records.size()) +
                                " records present");
  validate_cache(c);
  return c;
}

void save_cache(const ZeroCache& cache, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
  std::string text = serialize_cache(cache);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::io, "write failed for '" + path + "'");
}

ZeroCache load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cache(ss.str());
}

}  // namespace zm
