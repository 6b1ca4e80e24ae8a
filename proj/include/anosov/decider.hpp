#pragma once

// Anosov decision pipeline for infra-nilmanifolds modeled on free nilpotent groups.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anosov/witness.hpp"

namespace anosov {

struct ComponentVerdict {
  std::size_t dimension = 0;
  std::size_t multiplicity = 0;
  std::size_t r_components = 0;
  /// c / m.
  Rational threshold;
  /// r_components > c / m.
  bool passes = false;
  ComponentProfile profile;
};

struct Timings {
  double decompose_ms = 0;
  double witness_ms = 0;
  double total_ms = 0;
};

enum class WitnessStatus { NotRequested, NotApplicable, Found, NotFoundWithinBounds };
std::string to_string(WitnessStatus s);

struct Verdict {
  bool admits_anosov = false;
  unsigned class_c = 0;
  std::vector<ComponentVerdict> components;
  std::optional<WitnessCertificate> witness;
  WitnessStatus witness_status = WitnessStatus::NotRequested;
  /// Construction path used for each component class.
  std::vector<std::string> witness_paths;
  /// Exponents applied to the class witnesses before assembly.
  std::vector<long> witness_exponents;
  std::uint64_t seed = 0;
  /// Solvable model G_{c,d,r}: derived length d, when requested.
  std::optional<unsigned> solvable_d;
  /// Porteous phrasing at c = 1 (multiplicity-1 classes need r >= 2) agrees with the verdict.
  std::optional<bool> porteous_agrees;
  Timings timings;
};

struct WitnessOptions {
  long height_bound = kDefaultHeightBound;
  /// Bound doublings after the first round.
  unsigned escalations = 2;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::size_t max_candidates = 200000;
};

/// Decompose, profile each class and compare r > c / m exactly.
Verdict decide(const RationalRep& rep, unsigned c, std::uint64_t seed = 1);
/// decide at c = 1 with the Porteous cross-check.
Verdict porteous_flat(const RationalRep& rep, std::uint64_t seed = 1);
/// Same criterion for the c-step nilpotent, d-step solvable model; d is metadata.
Verdict decide_solvable(const RationalRep& rep, unsigned c, unsigned d, std::uint64_t seed = 1);
/// decide, then on YES build a witness per class and assemble it in the original basis.
Verdict decide_with_witness(const RationalRep& rep, unsigned c, std::uint64_t seed = 1,
                            const WitnessOptions& options = {});

struct NoCertificateReport {
  unsigned c = 0;
  long height_bound = 0;
  std::size_t candidates = 0;
  std::size_t integer_like = 0;
  std::size_t hits = 0;
};

/// Exhaustive lattice census over the commutant for a NO verdict. Throws
/// InvalidInput when the verdict is YES.
NoCertificateReport no_certificate_search(const RationalRep& rep, unsigned c, long height_bound,
                                          std::uint64_t seed = 1, std::size_t max_candidates = 200000);

}  // namespace anosov
