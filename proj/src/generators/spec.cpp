#include "generators/spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "common/error.hpp"

namespace f2s {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const char* first = v.data();
  const char* last = v.data() + v.size();
  int base = 10;
  if (v.size() > 2 && v[0] == '0' && (v[1] == 'x' || v[1] == 'X')) {
    first += 2;
    base = 16;
  }
  auto [ptr, ec] = std::from_chars(first, last, out, base);
  if (ec != std::errc() || ptr != last) fail(ErrorCode::Parse, "spec key '" + key + "': bad integer '" + v + "'");
  return out;
}

WellTransform parse_transform(const std::string& key, const std::string& v) {
  WellTransform t;
  if (v == "M0") return {WellTransform::M0, 0};
  if (v == "M1") return {WellTransform::M1, 0};
  if (v.size() > 4 && (v.rfind("M2(", 0) == 0 || v.rfind("M3(", 0) == 0) && v.back() == ')') {
    t.kind = v[1] == '2' ? WellTransform::M2 : WellTransform::M3;
    const std::string num = v.substr(3, v.size() - 4);
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), t.shift);
    if (ec == std::errc() && ptr == num.data() + num.size() && t.shift != 0 && t.shift > -32 && t.shift < 32) return t;
  }
  fail(ErrorCode::Parse, "spec key '" + key + "': bad transform '" + v + "'");
}

Family parse_family(const std::string& v) {
  if (v == "MT32") return Family::MT32;
  if (v == "MT64_ID1") return Family::MT64_ID1;
  if (v == "MT64_ID3") return Family::MT64_ID3;
  if (v == "WELL") return Family::WELL;
  if (v == "MELG") return Family::MELG;
  fail(ErrorCode::Parse, "unknown family '" + v + "'");
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::MT32: return "MT32";
    case Family::MT64_ID1: return "MT64_ID1";
    case Family::MT64_ID3: return "MT64_ID3";
    case Family::WELL: return "WELL";
    case Family::MELG: return "MELG";
  }
  return "?";
}

GeneratorSpec parse_spec(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::Parse, "spec line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) fail(ErrorCode::Parse, "spec key '" + key + "' given twice");
    kv[key] = trim(line.substr(eq + 1));
  }
  auto take = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) fail(ErrorCode::Parse, "spec is missing key '" + key + "'");
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  auto take_uint = [&](const std::string& key) { return parse_uint(key, take(key)); };

  GeneratorSpec s;
  s.name = take("name");
  s.family = parse_family(take("family"));
  s.w = static_cast<unsigned>(take_uint("w"));
  s.n = static_cast<unsigned>(take_uint("n"));
  s.r = static_cast<unsigned>(take_uint("r"));
  if (s.w != 32 && s.w != 64) fail(ErrorCode::Parse, "w must be 32 or 64");
  if (s.n < 3 || s.r >= s.w) fail(ErrorCode::Parse, "inconsistent n or r");

  if (s.is_mt() || s.family == Family::MELG) {
    s.m = static_cast<unsigned>(take_uint("m"));
    s.a = take_uint("a");
    if (s.m == 0 || s.m >= s.n) fail(ErrorCode::Parse, "m must lie in (0, n)");
  }
  if (s.is_mt()) {
    s.temper_u = static_cast<unsigned>(take_uint("temper_u"));
    s.temper_d = take_uint("temper_d");
    s.temper_s = static_cast<unsigned>(take_uint("temper_s"));
    s.temper_b = take_uint("temper_b");
    s.temper_t = static_cast<unsigned>(take_uint("temper_t"));
    s.temper_c = take_uint("temper_c");
    s.temper_l = static_cast<unsigned>(take_uint("temper_l"));
    if (kv.count("taps")) {
      std::stringstream ts(take("taps"));
      std::string item;
      while (std::getline(ts, item, ',')) {
        unsigned tap = static_cast<unsigned>(parse_uint("taps", trim(item)));
        if (tap == 0 || tap >= s.n) fail(ErrorCode::Parse, "tap offsets must lie in (0, n)");
        s.taps.push_back(tap);
      }
    }
  } else if (s.family == Family::WELL) {
    if (s.w != 32) fail(ErrorCode::Parse, "WELL specs are 32-bit");
    s.m1 = static_cast<unsigned>(take_uint("m1"));
    s.m2 = static_cast<unsigned>(take_uint("m2"));
    s.m3 = static_cast<unsigned>(take_uint("m3"));
    if (s.m1 >= s.n || s.m2 >= s.n || s.m3 >= s.n) fail(ErrorCode::Parse, "WELL offsets must be below n");
    for (int i = 0; i < 8; ++i) {
      std::string key = "t" + std::to_string(i);
      s.transforms[i] = parse_transform(key, take(key));
    }
  } else {
    s.sigma1 = static_cast<unsigned>(take_uint("sigma1"));
    s.sigma2 = static_cast<unsigned>(take_uint("sigma2"));
    s.lag = static_cast<unsigned>(take_uint("lag"));
    s.shift = static_cast<unsigned>(take_uint("shift"));
    s.mask = take_uint("mask");
    s.has_lung = true;
    if (s.lag == 0 || s.lag >= s.n) fail(ErrorCode::Parse, "MELG lag must lie in (0, n)");
  }

  std::string init = kv.count("init") ? take("init") : "reference_knuth_style";
  if (init == "reference_knuth_style")
    s.init_scheme = InitScheme::reference_knuth_style;
  else if (init == "raw")
    s.init_scheme = InitScheme::raw;
  else
    fail(ErrorCode::Parse, "unknown init scheme '" + init + "'");

  if (!kv.empty()) fail(ErrorCode::Parse, "unknown spec key '" + kv.begin()->first + "'");
  if (s.w == 32 && (s.a >> 32)) fail(ErrorCode::Parse, "constant a does not fit in 32 bits");

  s.k = s.n * s.w - s.r + (s.has_lung ? s.w : 0);
  return s;
}

const std::vector<GeneratorSpec>& bundled_specs() {
  static const std::vector<GeneratorSpec> specs = [] {
    std::vector<GeneratorSpec> out;
    for (const auto& [stem, text] : detail::bundled_spec_texts()) out.push_back(parse_spec(text));
    return out;
  }();
  return specs;
}

const GeneratorSpec& find_spec(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto& s : bundled_specs())
    if (s.name == lower) return s;
  fail(ErrorCode::UnknownSpec, "unknown generator spec '" + name + "'");
}

}  // namespace f2s
