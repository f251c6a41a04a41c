#pragma once

// Copula surfaces of a config at a chosen bound level.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shockcop/copulas.hpp"
#include "shockcop/imprecise.hpp"
#include "shockcop/io.hpp"
#include "shockcop/model.hpp"
#include "shockcop/worked_example.hpp"

namespace shockcop {

enum class BoundLevel { Lower, Upper, Precise, EnvelopeInf, EnvelopeSup };

inline BoundLevel parse_bound_level(const std::string& s) {
  if (s == "lower") return BoundLevel::Lower;
  if (s == "upper") return BoundLevel::Upper;
  if (s == "precise") return BoundLevel::Precise;
  if (s == "envelope_inf") return BoundLevel::EnvelopeInf;
  if (s == "envelope_sup") return BoundLevel::EnvelopeSup;
  throw ConfigError("unknown bound level '" + s + "' (expected lower, upper, precise, envelope_inf, envelope_sup)");
}

inline std::string to_string(BoundLevel b) {
  switch (b) {
    case BoundLevel::Lower: return "lower";
    case BoundLevel::Upper: return "upper";
    case BoundLevel::Precise: return "precise";
    case BoundLevel::EnvelopeInf: return "envelope_inf";
    case BoundLevel::EnvelopeSup: return "envelope_sup";
  }
  return "?";
}

/// Copula function of dimension n described by a config and a bound level.
struct SurfaceFunction {
  int n = 0;
  Family family = Family::Marshall;
  std::function<double(const Point&)> fn;
};

namespace detail {
inline bool is_example_config(const json& j) {
  return j.is_object() && !j.contains("endogenous") && !j.contains("generators") &&
         (j.contains("lambda1") || j.contains("lambda2") || j.contains("mu1") || j.contains("mu2"));
}
}  // namespace detail

/// Accepts a model config, a generator-vector config, or the exponential
/// example parameters {lambda1, lambda2, mu1, mu2}.
inline SurfaceFunction surface_function(const json& config, std::optional<Family> family, BoundLevel level) {
  if (config.contains("generators")) {
    auto gv = std::make_shared<GeneratorVector>(parse_generator_vector(config, family));
    if (level != BoundLevel::Precise) {
      throw ConfigError("a generator config defines one copula; use --bound precise");
    }
    return {gv->n(), gv->family(), [gv](const Point& u) { return copula(*gv, u); }};
  }
  std::optional<ShockModel> model;
  if (detail::is_example_config(config)) {
    if (family && *family != Family::Rmm) throw ConfigError("the exponential example config is an rmm model");
    try {
      model = example::imprecise_model(example::parse_params(config));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("example config: ") + e.what());
    }
  } else {
    model = parse_model(config, family);
  }
  const Family fam = model->family();
  const int n = model->n();
  if (level == BoundLevel::Precise) {
    if (!model->is_precise()) throw ConfigError("model is imprecise; choose --bound lower, upper or an envelope");
    auto gv = std::make_shared<GeneratorVector>(model_generators(*model));
    return {n, fam, [gv](const Point& u) { return copula(*gv, u); }};
  }
  auto bf = std::make_shared<BoundFamily>(build_bounds(*model));
  switch (level) {
    case BoundLevel::Lower: return {n, fam, [bf](const Point& u) { return copula(bf->lower_gen, u); }};
    case BoundLevel::Upper: return {n, fam, [bf](const Point& u) { return copula(bf->upper_gen, u); }};
    case BoundLevel::EnvelopeInf:
    case BoundLevel::EnvelopeSup: {
      if (fam != Family::Rmm) throw ConfigError("envelope bounds are defined for the rmm family only");
      const bool inf = level == BoundLevel::EnvelopeInf;
      return {n, fam, [bf, inf](const Point& u) {
                const auto e = rmm_envelope_reduced(*bf, u);
                return inf ? e.lower : e.upper;
              }};
    }
    default: break;
  }
  throw std::logic_error("unreachable");
}

/// Surface on the uniform grid with `grid` points per axis.
inline GridSurface compute_surface(const json& config, std::optional<Family> family, BoundLevel level, int grid,
                                   unsigned threads = 0) {
  const auto sf = surface_function(config, family, level);
  std::size_t total = 1;
  for (int d = 0; d < sf.n; ++d) total *= static_cast<std::size_t>(grid);
  if (grid < 2) throw ConfigError("--grid must be at least 2");
  if (total > 50'000'000) throw ConfigError("grid has too many points (" + std::to_string(total) + ")");
  std::vector<std::vector<double>> axes(static_cast<std::size_t>(sf.n), unit_axis(grid));
  return make_surface(std::move(axes), sf.fn, {model_hash(config), to_string(sf.family), to_string(level)}, threads);
}

}  // namespace shockcop
