#include "run_store.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <fstream>
#include <sstream>

#include "sdalab/error.hpp"

namespace sdalab::tools {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(Errc::IoError, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { fail(Errc::SchemaError, "not a rational number: '" + s + "'"); };
  if (s.empty()) bad();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpq_class q;
    try {
      q = mpq_class(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      bad();
    }
    if (sgn(q.get_den()) == 0) bad();
    q.canonicalize();
    return q;
  }
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  long frac = 0;
  bool dot = false;
  for (; pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.'); ++pos) {
    if (s[pos] == '.') {
      if (dot) bad();
      dot = true;
    } else {
      digits += s[pos];
      if (dot) ++frac;
    }
  }
  if (digits.empty()) bad();
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') bad();
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(pos + 1), &used);
      if (pos + 1 + used != s.size()) bad();
    } catch (const std::logic_error&) {
      bad();
    }
  }
  mpz_class num(digits);
  mpz_class ten = 10, scale;
  const long e = exponent - frac;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  mpq_class q = e < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

RunStore::RunStore(fs::path dir) : dir_(std::move(dir)) {}

void RunStore::init(const json& header) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) fail(Errc::IoError, "cannot create " + dir_.string() + ": " + ec.message());
  json m = header;
  m["files"] = json::object();
  std::ofstream(dir_ / "manifest.json", std::ios::binary) << m.dump(2) << '\n';
}

json RunStore::manifest() const {
  const auto p = dir_ / "manifest.json";
  if (!fs::exists(p)) fail(Errc::IoError, "no manifest.json in " + dir_.string());
  try {
    return json::parse(read_text(p));
  } catch (const json::exception& e) {
    fail(Errc::SchemaError, std::string("manifest.json: ") + e.what());
  }
}

void RunStore::put(const std::string& name, const std::string& content) {
  json m = manifest();
  {
    std::ofstream out(dir_ / name, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoError, "cannot write " + (dir_ / name).string());
    out << content;
  }
  m["files"][name] = {{"sha256", sha256_hex(content)}, {"bytes", content.size()}};
  std::ofstream(dir_ / "manifest.json", std::ios::binary | std::ios::trunc) << m.dump(2) << '\n';
}

LoadedRun load_run(const fs::path& dir) {
  RunStore store(dir);
  const json m = store.manifest();
  if (!m.contains("exhausted_up_to")) fail(Errc::SchemaError, "manifest lacks exhausted_up_to");
  LoadedRun run;
  run.target = model::load_target(read_text(dir / "config.json"));
  std::istringstream csv(read_text(dir / "minimal_points.csv"));
  const auto points = minpoints::read_csv_points(csv);
  run.seq = minpoints::from_points(run.target.target, run.target.set, points,
                                   parse_rational(m["exhausted_up_to"].get<std::string>()));
  return run;
}

}  // namespace sdalab::tools
