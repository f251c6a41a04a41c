#pragma once

// JSON model/generator specs, grid surfaces and their CSV/JSON encodings.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "shockcop/copulas.hpp"
#include "shockcop/distfn.hpp"
#include "shockcop/genfn.hpp"
#include "shockcop/model.hpp"

namespace shockcop {

using json = nlohmann::json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Numbers

/// Shortest decimal string that reads back to the same binary64 value.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc()) throw std::runtime_error("cannot format number");
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  if (s == "inf" || s == "+inf") return kInfinity;
  if (s == "-inf") return -kInfinity;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline double number(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_double(j.get<std::string>());
  throw ConfigError(where + ": expected a number");
}

inline double number_field(const json& j, const char* key, const std::string& where) {
  return number(need(j, key, where), where + "." + key);
}

}  // namespace detail

inline DistributionFn parse_distribution(const json& j, const std::string& where = "distribution") {
  const std::string kind = detail::need(j, "kind", where).get<std::string>();
  try {
    if (kind == "exponential") return DistributionFn::exponential(detail::number_field(j, "rate", where));
    if (kind == "dirac") return DistributionFn::dirac(detail::number_field(j, "location", where));
    if (kind == "uniform") {
      return DistributionFn::uniform(detail::number_field(j, "a", where), detail::number_field(j, "b", where));
    }
    if (kind == "discrete") {
      std::vector<Atom> atoms;
      for (const auto& p : detail::need(j, "points", where)) {
        if (!p.is_array() || p.size() != 2) throw ConfigError(where + ": discrete points are [location, mass] pairs");
        atoms.push_back({detail::number(p[0], where), detail::number(p[1], where)});
      }
      return DistributionFn::discrete(atoms);
    }
    if (kind == "pwl") {
      std::vector<Breakpoint> bps;
      for (const auto& b : detail::need(j, "breakpoints", where)) {
        if (!b.is_array() || b.size() != 4) throw ConfigError(where + ": pwl breakpoints are [x, left, point, right]");
        bps.push_back({detail::number(b[0], where), detail::number(b[1], where), detail::number(b[2], where),
                       detail::number(b[3], where)});
      }
      return DistributionFn::piecewise_linear(bps);
    }
    if (kind == "product") {
      return DistributionFn::product(parse_distribution(detail::need(j, "left", where), where + ".left"),
                                     parse_distribution(detail::need(j, "right", where), where + ".right"));
    }
    if (kind == "survival_complement_product") {
      return DistributionFn::survival_complement_product(
          parse_distribution(detail::need(j, "left", where), where + ".left"),
          parse_distribution(detail::need(j, "right", where), where + ".right"));
    }
    if (kind == "mixture") {
      return DistributionFn::mixture(detail::number_field(j, "weight", where),
                                     parse_distribution(detail::need(j, "left", where), where + ".left"),
                                     parse_distribution(detail::need(j, "right", where), where + ".right"));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
  throw ConfigError(where + ": unknown distribution kind '" + kind + "'");
}

inline PBox parse_pbox(const json& j, const std::string& where) {
  if (j.is_object() && j.contains("kind")) return PBox::precise(parse_distribution(j, where));
  try {
    return PBox(parse_distribution(detail::need(j, "lower", where), where + ".lower"),
                parse_distribution(detail::need(j, "upper", where), where + ".upper"));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

inline Generator parse_generator(const json& j, const std::string& where = "generator") {
  GeneratorKind kind;
  try {
    kind = parse_generator_kind(detail::need(j, "kind", where).get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(where + ": " + e.what());
  }
  try {
    if (j.contains("from_shocks")) {
      const auto& fs = j.at("from_shocks");
      const char* comp_key = fs.contains("x") ? "x" : "y";
      const auto comp = parse_distribution(detail::need(fs, comp_key, where + ".from_shocks"), where + ".from_shocks");
      const auto z = parse_distribution(detail::need(fs, "z", where + ".from_shocks"), where + ".from_shocks.z");
      switch (kind) {
        case GeneratorKind::Phi: return extend_phi(comp, z);
        case GeneratorKind::Psi: return extend_psi(comp, z);
        case GeneratorKind::Chi: return extend_chi(comp, z);
        case GeneratorKind::RmmF: return to_rmm(extend_phi(comp, z));
        case GeneratorKind::RmmG: return to_rmm(extend_chi(comp, z));
      }
    }
    const std::string form = detail::need(j, "form", where).get<std::string>();
    auto param = [&](const char* key, double fallback) {
      return j.contains(key) ? detail::number(j.at(key), where + "." + key) : fallback;
    };
    if (form == "identity") return forms::identity(kind);
    if (form == "unitStep") return forms::unit_step(kind);
    if (form == "zeroUntilOne") return forms::zero_until_one(kind);
    if (form == "truncatedLinear") return forms::truncated_linear(kind, detail::number_field(j, "c", where), param("s", 1.0));
    if (form == "maxLinear") return forms::max_linear(kind, detail::number_field(j, "c", where));
    if (form == "minLinear") return forms::min_linear(kind, detail::number_field(j, "c", where));
    if (form == "power") return forms::power(kind, detail::number_field(j, "a", where));
    if (form == "parabola") return forms::parabola(kind, param("s", 1.0));
    if (form == "table") {
      std::vector<detail::TableEntry> entries;
      for (const auto& p : detail::need(j, "points", where)) {
        if (!p.is_array() || p.size() != 2) throw ConfigError(where + ": table points are [u, value] pairs");
        entries.push_back({detail::number(p[0], where), detail::number(p[1], where)});
      }
      return tabulated(kind, std::move(entries));
    }
    throw ConfigError(where + ": unknown generator form '" + form + "'");
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

inline ShockModel parse_model(const json& j, std::optional<Family> family_override = std::nullopt) {
  std::optional<Family> family = family_override;
  try {
    if (j.contains("family")) {
      const Family declared = parse_family(j.at("family").get<std::string>());
      if (family && *family != declared) {
        throw ConfigError("--family " + to_string(*family) + " conflicts with the config's family " +
                          to_string(declared));
      }
      family = declared;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  if (!family) throw ConfigError("model: no family given in the config or on the command line");
  const auto& endo = detail::need(j, "endogenous", "model");
  if (!endo.is_array()) throw ConfigError("model: 'endogenous' must be an array");
  std::vector<PBox> boxes;
  for (std::size_t i = 0; i < endo.size(); ++i) {
    boxes.push_back(parse_pbox(endo[i], "model.endogenous[" + std::to_string(i) + "]"));
  }
  const int n = static_cast<int>(boxes.size());
  if (j.contains("n") && j.at("n").get<int>() != n) {
    throw ConfigError("model: n = " + std::to_string(j.at("n").get<int>()) + " but " + std::to_string(n) +
                      " endogenous shocks are listed");
  }
  int p = *family == Family::Marshall ? n : 1;
  if (j.contains("p")) p = j.at("p").get<int>();
  const auto z = parse_distribution(detail::need(j, "exogenous", "model"), "model.exogenous");
  try {
    return ShockModel(*family, p, std::move(boxes), z);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
}

/// {"family": ..., "p": ..., "generators": [...]}.
inline GeneratorVector parse_generator_vector(const json& j, std::optional<Family> family_override = std::nullopt) {
  std::optional<Family> family = family_override;
  try {
    if (j.contains("family")) {
      const Family declared = parse_family(j.at("family").get<std::string>());
      if (family && *family != declared) throw ConfigError("--family conflicts with the config's family");
      family = declared;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("generators: ") + e.what());
  }
  if (!family) throw ConfigError("generators: no family given");
  std::vector<Generator> gens;
  const auto& arr = detail::need(j, "generators", "config");
  for (std::size_t i = 0; i < arr.size(); ++i) gens.push_back(parse_generator(arr[i], "generators[" + std::to_string(i) + "]"));
  const int n = static_cast<int>(gens.size());
  const int p = j.contains("p") ? j.at("p").get<int>() : (*family == Family::Marshall ? n : 1);
  try {
    switch (*family) {
      case Family::Marshall: return GeneratorVector::marshall(std::move(gens));
      case Family::MaxMin: return GeneratorVector::maxmin(std::move(gens), p);
      case Family::Rmm: return GeneratorVector::rmm(std::move(gens), p);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("generators: ") + e.what());
  }
  throw ConfigError("generators: unknown family");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

/// 64-bit FNV-1a of the config's canonical (key-sorted, compact) JSON text.
inline std::string model_hash(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// Grid surfaces

struct SurfaceMetadata {
  std::string model_hash;
  std::string family;
  std::string level;
};

/// Values on a rectangular grid, stored with the last axis varying fastest.
struct GridSurface {
  std::vector<std::vector<double>> axes;
  std::vector<double> values;
  SurfaceMetadata metadata;

  std::size_t size() const {
    std::size_t s = 1;
    for (const auto& a : axes) s *= a.size();
    return s;
  }

  Point point(std::size_t idx) const {
    Point u(axes.size());
    for (std::size_t d = axes.size(); d-- > 0;) {
      u[d] = axes[d][idx % axes[d].size()];
      idx /= axes[d].size();
    }
    return u;
  }

  void validate() const {
    if (values.size() != size()) throw std::logic_error("surface value count does not match its axes");
    for (double v : values) {
      if (!(v >= 0.0 && v <= 1.0)) throw std::logic_error("surface value outside [0, 1]: " + format_double(v));
    }
  }
};

inline std::vector<double> unit_axis(int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least two points per axis");
  std::vector<double> a;
  for (int k = 0; k < points; ++k) a.push_back(static_cast<double>(k) / (points - 1));
  return a;
}

/// Evaluates `fn` at every grid point; `fn` must be safe to call concurrently.
/// Each value depends only on its point, so the result is independent of `threads`.
template <typename Fn>
GridSurface make_surface(std::vector<std::vector<double>> axes, Fn&& fn, SurfaceMetadata meta = {},
                         unsigned threads = 1) {
  GridSurface s{std::move(axes), {}, std::move(meta)};
  s.values.resize(s.size());
  const std::size_t total = s.values.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, total / 4096)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < total; ++k) s.values[k] = fn(s.point(k));
    return s;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < total; k += threads) s.values[k] = fn(s.point(k));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return s;
}

inline void write_csv(std::ostream& out, const GridSurface& s) {
  for (std::size_t d = 0; d < s.axes.size(); ++d) out << 'u' << (d + 1) << ',';
  out << "value\n";
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    for (double c : s.point(k)) out << format_double(c) << ',';
    out << format_double(s.values[k]) << '\n';
  }
}

inline json surface_to_json(const GridSurface& s) {
  json j;
  j["axes"] = s.axes;
  j["values"] = s.values;
  j["metadata"] = {{"model_hash", s.metadata.model_hash}, {"family", s.metadata.family}, {"level", s.metadata.level}};
  return j;
}

/// Rows of a surface CSV: coordinates and value per line.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

inline CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV");
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    while (std::getline(ls, cell, ',')) row.push_back(parse_double(cell));
    if (row.size() != t.header.size()) throw ConfigError("CSV row width does not match the header");
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace shockcop
