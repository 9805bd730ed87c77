#include "maxsurf/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace maxsurf {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double to_number(const std::string& key, const std::string& word) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(word, &used);
  } catch (const std::exception&) {
    throw ConfigError(key, "`" + word + "` is not a number");
  }
  if (used != word.size()) throw ConfigError(key, "`" + word + "` is not a number");
  if (!std::isfinite(v)) throw ConfigError(key, "value must be finite");
  return v;
}

std::vector<double> numbers(const std::string& key, const std::string& value, std::size_t count) {
  const auto words = split_words(value);
  if (words.size() != count)
    throw ConfigError(key, "expected " + std::to_string(count) + " numbers, got " + std::to_string(words.size()));
  std::vector<double> out;
  for (const auto& w : words) out.push_back(to_number(key, w));
  return out;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Puncture parse_puncture(const std::string& value) {
  const auto words = split_words(value);
  if (words.size() != 2 && words.size() != 4) throw ConfigError("puncture", "expected `re im` or `re im pole m`");
  Puncture p{cplx(to_number("puncture", words[0]), to_number("puncture", words[1])), 0};
  if (words.size() == 4) {
    if (words[2] != "pole") throw ConfigError("puncture", "expected `pole`, got `" + words[2] + "`");
    const double m = to_number("puncture", words[3]);
    if (m != std::floor(m) || m < 0 || m > 64) throw ConfigError("puncture", "pole order must be a small integer");
    p.pole_order = static_cast<int>(m);
  }
  return p;
}

expr::Expr parse_expr(const std::string& key, const std::string& text) {
  try {
    return expr::parse(text);
  } catch (const ParseError& e) {
    throw ConfigError(key, e.what());
  }
}

Domain parse_domain(const std::string& key, const std::string& text, const std::vector<Puncture>& punctures) {
  Domain d;
  try {
    d = Domain::parse(text);
  } catch (const Error& e) {
    throw ConfigError(key, e.what());
  }
  for (const auto& p : punctures) {
    try {
      d = d.with_puncture(p);
    } catch (const Error& e) {
      throw ConfigError("puncture", e.what());
    }
  }
  return d;
}

void check_base(const WeierstrassData& d, const char* key) {
  try {
    validate(d);
  } catch (const Error& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

std::optional<Plane> SurfaceConfig::plane() const {
  if (!plane_normal) return std::nullopt;
  return Plane(*plane_normal, plane_offset);
}

SurfaceConfig parse_config(std::string_view text) {
  SurfaceConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno), "expected `key = value`");
    const std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key != "puncture" && !seen.insert(key).second) throw ConfigError(key, "given more than once");

    if (key == "f") cfg.f = value;
    else if (key == "g") cfg.g = value;
    else if (key == "domain") cfg.domain = value;
    else if (key == "z0") {
      const auto v = numbers(key, value, 2);
      cfg.z0 = {v[0], v[1]};
    } else if (key == "X0") {
      const auto v = numbers(key, value, 3);
      cfg.X0 = {v[0], v[1], v[2]};
    } else if (key == "puncture") cfg.punctures.push_back(parse_puncture(value));
    else if (key == "tol") {
      cfg.tol = numbers(key, value, 1)[0];
      if (!(cfg.tol > 0.0)) throw ConfigError(key, "tolerance must be positive");
    } else if (key == "plane") {
      const auto v = numbers(key, value, 4);
      const LVector n{v[0], v[1], v[2]};
      if (n == LVector{}) throw ConfigError(key, "plane normal must be nonzero");
      cfg.plane_normal = n;
      cfg.plane_offset = v[3];
    } else if (key == "boundary") cfg.boundary = value;
    else if (key == "f_ext") cfg.f_ext = value;
    else if (key == "g_ext") cfg.g_ext = value;
    else if (key == "z0_ext") {
      const auto v = numbers(key, value, 2);
      cfg.z0_ext = cplx(v[0], v[1]);
    } else if (key == "X0_ext") {
      const auto v = numbers(key, value, 3);
      cfg.X0_ext = LVector{v[0], v[1], v[2]};
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  for (const char* k : {"f", "g", "domain", "z0"})
    if (!seen.count(k)) throw ConfigError(k, "missing required field");
  for (const char* k : {"f", "g", "domain"})
    if (trim(k[0] == 'f' ? cfg.f : k[0] == 'g' ? cfg.g : cfg.domain).empty()) throw ConfigError(k, "empty value");
  return cfg;
}

SurfaceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("file", "cannot read `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const SurfaceConfig& cfg) {
  std::ostringstream o;
  auto vec = [](const LVector& v) { return g17(v.x1) + " " + g17(v.x2) + " " + g17(v.x3); };
  o << "f = \"" << cfg.f << "\"\n";
  o << "g = \"" << cfg.g << "\"\n";
  o << "domain = " << cfg.domain << "\n";
  o << "z0 = " << g17(cfg.z0.real()) << " " << g17(cfg.z0.imag()) << "\n";
  o << "X0 = " << vec(cfg.X0) << "\n";
  for (const auto& p : cfg.punctures) {
    o << "puncture = " << g17(p.at.real()) << " " << g17(p.at.imag());
    if (p.pole_order > 0) o << " pole " << p.pole_order;
    o << "\n";
  }
  o << "tol = " << g17(cfg.tol) << "\n";
  if (cfg.plane_normal) o << "plane = " << vec(*cfg.plane_normal) << " " << g17(cfg.plane_offset) << "\n";
  if (cfg.boundary) o << "boundary = " << *cfg.boundary << "\n";
  if (cfg.f_ext) o << "f_ext = \"" << *cfg.f_ext << "\"\n";
  if (cfg.g_ext) o << "g_ext = \"" << *cfg.g_ext << "\"\n";
  if (cfg.z0_ext) o << "z0_ext = " << g17(cfg.z0_ext->real()) << " " << g17(cfg.z0_ext->imag()) << "\n";
  if (cfg.X0_ext) o << "X0_ext = " << vec(*cfg.X0_ext) << "\n";
  return o.str();
}

WeierstrassData to_data(const SurfaceConfig& cfg) {
  WeierstrassData d;
  d.f = parse_expr("f", cfg.f);
  d.g = parse_expr("g", cfg.g);
  d.domain = parse_domain("domain", cfg.domain, cfg.punctures);
  d.z0 = cfg.z0;
  d.X0 = cfg.X0;
  check_base(d, "z0");
  return d;
}

ExtendedData to_extended(const SurfaceConfig& cfg) {
  if (!cfg.boundary) throw ConfigError("boundary", "missing required field for an extended surface");
  if (!cfg.f_ext) throw ConfigError("f_ext", "missing required field for an extended surface");
  if (!cfg.g_ext) throw ConfigError("g_ext", "missing required field for an extended surface");
  if (!cfg.z0_ext) throw ConfigError("z0_ext", "missing required field for an extended surface");
  if (!cfg.X0_ext) throw ConfigError("X0_ext", "missing required field for an extended surface");
  ExtendedData out;
  out.primary = to_data(cfg);
  try {
    out.boundary = ReflectionBoundary::parse(*cfg.boundary);
  } catch (const Error& e) {
    throw ConfigError("boundary", e.what());
  }
  try {
    out.reflected.domain = out.primary.domain.reflected(out.boundary);
  } catch (const Error& e) {
    throw ConfigError("boundary", e.what());
  }
  out.reflected.f = parse_expr("f_ext", *cfg.f_ext);
  out.reflected.g = parse_expr("g_ext", *cfg.g_ext);
  out.reflected.z0 = *cfg.z0_ext;
  out.reflected.X0 = *cfg.X0_ext;
  check_base(out.reflected, "z0_ext");
  return out;
}

SurfaceConfig extended_config(const SurfaceConfig& base, const WeierstrassData& reflected,
                              const ReflectionBoundary& b) {
  SurfaceConfig out = base;
  out.boundary = b.describe();
  out.f_ext = expr::format(reflected.f);
  out.g_ext = expr::format(reflected.g);
  out.z0_ext = reflected.z0;
  out.X0_ext = reflected.X0;
  return out;
}

std::string catenoid_config_text() {
  return "# Lorentzian catenoid: X(e^(u+iv)) = (sinh u cos v, sinh u sin v, u).\n"
         "# |g| < 1 inside the unit circle; |z| = 1 is the conelike singularity.\n"
         "f = \"1/z^2\"\n"
         "g = \"z\"\n"
         "domain = annulus 0.22313016014842982 1\n"
         "z0 = 1 0\n"
         "X0 = 0 0 0\n"
         "tol = 1e-10\n";
}

}  // namespace maxsurf
