#pragma once

// Security-weighting resources as structural property sets, and their
// classification into scaling classes.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace influence_cost {

/// Only a fraction `alpha` of the aggregate allocation may be reassigned
/// across identities; the rest is identity-bound and renewed every window.
struct PartialTransfer {
  double alpha = 0.0;
  bool operator==(const PartialTransfer&) const = default;
};

/// An acquired allocation stays usable for at most `windows` consecutive
/// windows before it must be renewed.
struct BoundedReuse {
  unsigned windows = 1;
  bool operator==(const BoundedReuse&) const = default;
};

/// A resource is either fully (non-)transferable or partially transferable,
/// never both.
using Transferability = std::variant<bool, PartialTransfer>;
/// A resource is either fully (non-)reusable or reusable for a bounded horizon.
using Reusability = std::variant<bool, BoundedReuse>;

struct ResourceSpec {
  std::string name;
  bool divisible = false;
  bool additive_influence = false;
  Reusability reuse = false;
  Transferability transfer = false;
  /// Rate limit, non-transferability and window-locality all hold.
  bool throughput_bounded = false;
  /// Properties hold only partially (e.g. social-graph trust); no cost law.
  bool partial_properties = false;
  double r_min = 1.0;
  std::optional<double> tau;

  bool temporally_reusable() const {
    const bool* b = std::get_if<bool>(&reuse);
    return b && *b;
  }
  bool identity_transferable() const {
    const bool* b = std::get_if<bool>(&transfer);
    return b && *b;
  }
  std::optional<double> alpha() const {
    if (const auto* p = std::get_if<PartialTransfer>(&transfer)) return p->alpha;
    return std::nullopt;
  }
  std::optional<unsigned> reuse_horizon() const {
    if (const auto* p = std::get_if<BoundedReuse>(&reuse)) return p->windows;
    return std::nullopt;
  }
  bool has_intermediate_override() const { return alpha() || reuse_horizon(); }

  bool operator==(const ResourceSpec&) const = default;
};

/// Human-readable list of every violated invariant; empty when valid.
inline std::vector<std::string> spec_violations(const ResourceSpec& spec) {
  std::vector<std::string> out;
  if (!(spec.r_min > 0.0) || !std::isfinite(spec.r_min)) out.push_back("r_min must be positive and finite");
  if (spec.tau) {
    if (!(*spec.tau > 0.0) || !std::isfinite(*spec.tau)) out.push_back("tau must be positive and finite");
    else if (spec.r_min > *spec.tau) out.push_back("r_min must not exceed tau");
  }
  if (spec.throughput_bounded != spec.tau.has_value())
    out.push_back("tau must be present exactly when throughput_bounded is set");
  if (spec.throughput_bounded) {
    if (!std::holds_alternative<bool>(spec.reuse) || spec.temporally_reusable())
      out.push_back("throughput-bounded resources are window-local (not temporally reusable)");
    if (!std::holds_alternative<bool>(spec.transfer) || spec.identity_transferable())
      out.push_back("throughput-bounded resources are not identity-transferable");
  }
  if (auto a = spec.alpha(); a && !(*a >= 0.0 && *a <= 1.0)) out.push_back("alpha must lie in [0, 1]");
  if (auto k = spec.reuse_horizon(); k && *k == 0) out.push_back("reuse horizon k must be at least 1");
  return out;
}

inline void validate(const ResourceSpec& spec) {
  auto violations = spec_violations(spec);
  if (violations.empty()) return;
  std::string msg = "invalid resource spec '" + spec.name + "': " + violations.front();
  for (std::size_t i = 1; i < violations.size(); ++i) msg += "; " + violations[i];
  throw std::invalid_argument(msg);
}

inline bool is_parallelizable(const ResourceSpec& spec) {
  return spec.divisible && spec.additive_influence && spec.temporally_reusable() &&
         spec.identity_transferable() && !spec.has_intermediate_override() && !spec.partial_properties;
}

/// The flag alone is not trusted: window-locality and non-transferability are
/// constituent conditions, so they are re-checked here.
inline bool is_throughput_bounded(const ResourceSpec& spec) {
  return spec.throughput_bounded && spec.tau.has_value() && !spec.temporally_reusable() &&
         !spec.identity_transferable() && !spec.has_intermediate_override() && !spec.partial_properties;
}

enum class ResourceClass { Parallelizable, ThroughputBounded, Intermediate, Other };

inline std::string_view to_string(ResourceClass c) {
  switch (c) {
    case ResourceClass::Parallelizable: return "Parallelizable";
    case ResourceClass::ThroughputBounded: return "ThroughputBounded";
    case ResourceClass::Intermediate: return "Intermediate";
    case ResourceClass::Other: return "Other";
  }
  return "Other";
}

struct ResourceClassification {
  ResourceClass resource_class = ResourceClass::Other;
  std::vector<std::string> reasons;
};

inline ResourceClassification classify(const ResourceSpec& spec) {
  ResourceClassification out;
  auto& why = out.reasons;
  auto note = [&why](bool holds, const char* yes, const char* no) { why.emplace_back(holds ? yes : no); };

  if (spec.partial_properties) {
    why.emplace_back("structural properties hold only partially; scaling is model-dependent");
    out.resource_class = ResourceClass::Other;
    return out;
  }

  note(spec.divisible, "divisible", "not divisible");
  note(spec.additive_influence, "mechanism induces additive influence", "influence is not additive");
  if (auto k = spec.reuse_horizon())
    why.push_back("reusable for at most " + std::to_string(*k) + " window(s) before renewal");
  else
    note(spec.temporally_reusable(), "temporally reusable", "window-local (not reusable)");
  if (auto a = spec.alpha())
    why.push_back("only a fraction " + std::to_string(*a) + " is identity-transferable");
  else
    note(spec.identity_transferable(), "identity-transferable", "identity-bound (not transferable)");
  if (spec.throughput_bounded)
    why.emplace_back(spec.tau ? "per-channel rate limit tau is present" : "throughput flag set but tau is missing");

  if (spec.has_intermediate_override()) {
    out.resource_class = ResourceClass::Intermediate;
  } else if (is_parallelizable(spec)) {
    out.resource_class = ResourceClass::Parallelizable;
  } else if (is_throughput_bounded(spec)) {
    out.resource_class = ResourceClass::ThroughputBounded;
  } else {
    out.resource_class = ResourceClass::Other;
    why.emplace_back("satisfies neither the parallelizable nor the throughput-bounded definition");
  }
  return out;
}

/// Linear resource-to-influence map f(r) = coefficient * r.
struct InfluenceFunction {
  double coefficient = 1.0;
  double r_min = 1.0;

  InfluenceFunction() = default;
  InfluenceFunction(double coefficient_, double r_min_) : coefficient(coefficient_), r_min(r_min_) {
    if (!(coefficient > 0.0)) throw std::invalid_argument("influence coefficient must be positive");
    if (!(r_min > 0.0)) throw std::invalid_argument("r_min must be positive");
  }
  explicit InfluenceFunction(const ResourceSpec& spec, double coefficient_ = 1.0)
      : InfluenceFunction(coefficient_, spec.r_min) {}

  double operator()(double r) const { return coefficient * r; }
  /// Influence of one identity operating exactly at the activation threshold.
  double unit_weight() const { return coefficient * r_min; }
};

/// A per-actor participation channel with a per-window throughput bound.
struct ChannelSpec {
  std::string actor_id;
  double tau = 1.0;
};

inline ResourceSpec channel_resource(const ChannelSpec& channel, double r_min) {
  if (!(channel.tau > 0.0)) throw std::invalid_argument("channel tau must be positive");
  if (!(r_min > 0.0)) throw std::invalid_argument("r_min must be positive");
  if (r_min > channel.tau)
    throw std::invalid_argument("r_min exceeds channel tau: no identity on this channel can be active");
  ResourceSpec spec;
  spec.name = "channel:" + channel.actor_id;
  spec.reuse = false;
  spec.transfer = false;
  spec.throughput_bounded = true;
  spec.r_min = r_min;
  spec.tau = channel.tau;
  return spec;
}

/// Copy of `spec` with a different activation threshold; tau is scaled by the
/// same factor so the r_min/tau ratio is preserved.
inline ResourceSpec with_r_min(ResourceSpec spec, double r_min) {
  if (spec.tau) spec.tau = *spec.tau * (r_min / spec.r_min);
  spec.r_min = r_min;
  return spec;
}

namespace detail {

inline ResourceSpec make_spec(std::string name, bool div, bool add, bool reuse, bool transfer,
                              bool throughput, double r_min, std::optional<double> tau = std::nullopt) {
  ResourceSpec s;
  s.name = std::move(name);
  s.divisible = div;
  s.additive_influence = add;
  s.reuse = reuse;
  s.transfer = transfer;
  s.throughput_bounded = throughput;
  s.r_min = r_min;
  s.tau = tau;
  return s;
}

}  // namespace detail

/// The structural taxonomy of representative security resources.
inline std::vector<ResourceSpec> taxonomy_presets() {
  using detail::make_spec;
  std::vector<ResourceSpec> out;
  out.push_back(make_spec("pow-hardware", true, true, true, true, false, 1.0));
  out.push_back(make_spec("pow-energy", true, true, false, true, false, 1.0));
  out.push_back(make_spec("pos-stake", true, true, true, true, false, 32.0));
  auto social = make_spec("social-graph", false, false, false, false, false, 1.0);
  social.partial_properties = true;
  out.push_back(std::move(social));
  out.push_back(make_spec("device-bound", false, false, false, false, true, 1.0, 1.0));
  out.push_back(make_spec("human-participation", false, false, false, false, true, 1.0, 1.0));
  // Bound to non-transferable execution channels; tau deliberately above r_min.
  out.push_back(make_spec("rate-limited", false, false, false, false, true, 1.0, 2.0));
  return out;
}

inline std::optional<ResourceSpec> find_preset(std::string_view name) {
  for (auto& spec : taxonomy_presets())
    if (spec.name == name) return spec;
  return std::nullopt;
}

/// Scaling class each taxonomy row is documented to induce.
inline ResourceClass expected_preset_class(std::string_view name) {
  if (name == "pow-hardware" || name == "pos-stake") return ResourceClass::Parallelizable;
  if (name == "device-bound" || name == "human-participation" || name == "rate-limited")
    return ResourceClass::ThroughputBounded;
  return ResourceClass::Other;
}

struct PropertyFailure {
  std::string property;  // "zero_at_origin", "monotone" or "additive"
  double a = 0.0;
  double b = 0.0;
  double lhs = 0.0;  // f(a) + f(b) for additivity, f(a) otherwise
  double rhs = 0.0;  // f(a + b) for additivity, f(b) or 0 otherwise
};

struct InfluenceValidation {
  bool zero_at_origin = true;
  bool monotone = true;
  bool additive = true;
  std::vector<PropertyFailure> failures;

  bool passed() const { return zero_at_origin && monotone && additive; }
};

/// 0, 0.25, ..., 8.0
inline std::vector<double> influence_validation_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 32; ++i) grid.push_back(0.25 * i);
  return grid;
}

template <typename F>
  requires std::invocable<const F&, double>
InfluenceValidation validate_influence_function(const F& f, double rel_tol = 1e-9) {
  InfluenceValidation report;
  auto close = [rel_tol](double x, double y) {
    return std::abs(x - y) <= rel_tol * std::max({1.0, std::abs(x), std::abs(y)});
  };
  const auto grid = influence_validation_grid();

  const double f0 = f(0.0);
  if (!close(f0, 0.0)) {
    report.zero_at_origin = false;
    report.failures.push_back({"zero_at_origin", 0.0, 0.0, f0, 0.0});
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double lo = f(grid[i]), hi = f(grid[i + 1]);
    if (hi < lo && !close(lo, hi)) {
      report.monotone = false;
      report.failures.push_back({"monotone", grid[i], grid[i + 1], lo, hi});
    }
  }
  const double top = grid.back();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size() && grid[i] + grid[j] <= top; ++j) {
      const double lhs = f(grid[i]) + f(grid[j]);
      const double rhs = f(grid[i] + grid[j]);
      if (!close(lhs, rhs)) {
        report.additive = false;
        report.failures.push_back({"additive", grid[i], grid[j], lhs, rhs});
      }
    }
  }
  return report;
}

inline InfluenceValidation validate_influence_function(const InfluenceFunction& f, double rel_tol = 1e-9) {
  return validate_influence_function([&f](double r) { return f(r); }, rel_tol);
}

}  // namespace influence_cost
