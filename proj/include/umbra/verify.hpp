#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/rational.hpp"
#include "umbra/series.hpp"
#include "umbra/univar_poly.hpp"

namespace umbra {

/// Deterministic source of small random rationals, series and polynomials.
/// Numerators lie in [-9, 9] and denominators in [1, 9].
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::string_view stream);

  Rational rational();
  Rational nonzero();
  /// Arbitrary series.
  TruncatedSeries series(int order);
  /// Zero constant term, nonzero linear term.
  TruncatedSeries delta(int order);
  /// Zero constant term only.
  TruncatedSeries zero_constant(int order);
  /// Constant term one.
  TruncatedSeries unit(int order);
  UnivarPoly poly(int degree);
  int integer(int lo, int hi);

 private:
  std::uint64_t next();
  std::mt19937_64 engine_;
};

struct VerifyOptions {
  int order = 10;
  std::uint64_t seed = 0;
  /// Random instances per entry where the entry is randomised.
  int instances = 3;
};

struct VerifyResult {
  std::string tag;
  std::string citation;
  bool pass = true;
  int checks = 0;
  std::optional<std::string> first_failure;
  std::vector<std::string> notes;
};

/// Registry tags in report order.
const std::vector<std::string>& registry_tags();

/// The quoted phrase each entry is anchored to. UnknownIdentityTag otherwise.
std::string_view registry_citation(std::string_view tag);

/// Runs one entry. UnknownIdentityTag for an unregistered tag.
VerifyResult run_entry(std::string_view tag, const VerifyOptions& options);

/// Runs the given tags concurrently; results come back in input order.
std::vector<VerifyResult> run_entries(const std::vector<std::string>& tags, const VerifyOptions& options);

}  // namespace umbra
