#include "anosov/decider.hpp"

#include <chrono>

namespace anosov {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct Decision {
  Verdict verdict;
  std::vector<ComponentProfile> classes;
};

Decision decide_impl(const RationalRep& rep, unsigned c, std::uint64_t seed) {
  if (c == 0) throw InvalidInput("nilpotency class c must be at least 1");
  auto start = Clock::now();
  Decision d;
  d.classes = decompose(rep, seed);
  d.verdict.timings.decompose_ms = elapsed_ms(start);
  d.verdict.class_c = c;
  d.verdict.seed = seed;
  d.verdict.admits_anosov = true;
  for (const auto& cls : d.classes) {
    ComponentVerdict cv;
    cv.dimension = cls.dimension();
    cv.multiplicity = cls.multiplicity;
    cv.r_components = cls.r_components;
    cv.threshold = Rational(c) / Rational(static_cast<unsigned long>(cls.multiplicity));
    cv.passes = cls.r_components * cls.multiplicity > c;
    if (cv.passes != (Rational(static_cast<unsigned long>(cls.r_components)) > cv.threshold))
      throw InconsistentResult("rational and cross-multiplied comparisons disagree");
    cv.profile = cls;
    d.verdict.admits_anosov = d.verdict.admits_anosov && cv.passes;
    d.verdict.components.push_back(std::move(cv));
  }
  d.verdict.timings.total_ms = elapsed_ms(start);
  return d;
}

std::optional<WitnessCertificate> class_witness(const ComponentProfile& cls, unsigned c, std::uint64_t seed,
                                                const WitnessOptions& options) {
  RationalRep iso = cls.sub_rep.multiple(cls.multiplicity);
  if (cls.dim_E == 1) {
    auto t = tensor_shortcut(cls, c);
    if (t.certificate) return t.certificate;
  }
  long bound = options.height_bound;
  for (unsigned round = 0; round <= options.escalations; ++round, bound *= 2) {
    auto f = field_through_commutant(iso, c, seed, bound);
    if (f.certificate) return f.certificate;
    if (round == 0) {
      auto b = block_companion_witness(cls, c);
      if (b.certificate) return b.certificate;
    }
  }
  bound = std::min<long>(options.height_bound, 3);
  for (unsigned round = 0; round <= options.escalations; ++round, bound *= 2) {
    auto l = lattice_search(iso, c, bound, seed, options.max_candidates);
    if (l.certificate) return l.certificate;
  }
  return std::nullopt;
}

// Exponent vectors for the class witnesses: all ones, powers of c + 1, then small vectors.
std::vector<std::vector<long>> exponent_schedule(std::size_t k, unsigned c) {
  std::vector<std::vector<long>> out;
  out.emplace_back(k, 1);
  if (k == 1) return out;
  std::vector<long> staggered(k, 1);
  for (std::size_t i = 1; i < k; ++i) staggered[i] = staggered[i - 1] * static_cast<long>(c + 1);
  out.push_back(staggered);
  long top = static_cast<long>(c) + 2;
  std::vector<long> e(k, 1);
  for (std::size_t count = 0; count < 500; ++count) {
    std::size_t i = 0;
    while (i < k && e[i] == top) e[i++] = 1;
    if (i == k) break;
    ++e[i];
    out.push_back(e);
  }
  return out;
}

}  // namespace

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::NotRequested: return "not-requested";
    case WitnessStatus::NotApplicable: return "not-applicable";
    case WitnessStatus::Found: return "found";
    case WitnessStatus::NotFoundWithinBounds: return "not-found-within-bounds";
  }
  return "unknown";
}

Verdict decide(const RationalRep& rep, unsigned c, std::uint64_t seed) { return decide_impl(rep, c, seed).verdict; }

Verdict porteous_flat(const RationalRep& rep, std::uint64_t seed) {
  Verdict v = decide(rep, 1, seed);
  bool porteous = true;
  for (const auto& cv : v.components)
    if (cv.multiplicity == 1 && cv.r_components < 2) porteous = false;
  v.porteous_agrees = porteous == v.admits_anosov;
  return v;
}

Verdict decide_solvable(const RationalRep& rep, unsigned c, unsigned d, std::uint64_t seed) {
  if (d == 0) throw InvalidInput("derived length d must be at least 1");
  Verdict v = decide(rep, c, seed);
  v.solvable_d = d;
  return v;
}

Verdict decide_with_witness(const RationalRep& rep, unsigned c, std::uint64_t seed, const WitnessOptions& options) {
  auto start = Clock::now();
  Decision d = decide_impl(rep, c, seed);
  Verdict& v = d.verdict;
  if (!v.admits_anosov) {
    v.witness_status = WitnessStatus::NotApplicable;
    return v;
  }
  auto wstart = Clock::now();
  std::vector<RatMatrix> blocks;
  for (const auto& cls : d.classes) {
    auto cert = class_witness(cls, c, seed, options);
    if (!cert) {
      v.witness_status = WitnessStatus::NotFoundWithinBounds;
      v.timings.witness_ms = elapsed_ms(wstart);
      v.timings.total_ms = elapsed_ms(start);
      return v;
    }
    v.witness_paths.push_back(to_string(cert->construction_path));
    blocks.push_back(cert->witness);
  }
  RatMatrix s = aligned_basis(d.classes);
  RatMatrix s_inv = inverse(s);
  ConstructionPath path = ConstructionPath::LatticeSearch;
  if (d.classes.size() == 1) {
    if (v.witness_paths.front() == to_string(ConstructionPath::TensorShortcut)) path = ConstructionPath::TensorShortcut;
    if (v.witness_paths.front() == to_string(ConstructionPath::FieldThroughCommutant))
      path = ConstructionPath::FieldThroughCommutant;
    if (v.witness_paths.front() == to_string(ConstructionPath::BlockCompanion)) path = ConstructionPath::BlockCompanion;
  } else {
    path = ConstructionPath::BlockCompanion;
  }
  for (const auto& exps : exponent_schedule(blocks.size(), c)) {
    std::vector<RatMatrix> powered;
    for (std::size_t i = 0; i < blocks.size(); ++i) powered.push_back(power(blocks[i], exps[i]));
    RatMatrix global = s * block_diag(powered) * s_inv;
    auto cert = verify_witness(rep, global, c, path, options.precision_bits);
    if (cert.valid()) {
      v.witness = std::move(cert);
      v.witness_exponents = exps;
      v.witness_status = WitnessStatus::Found;
      break;
    }
  }
  if (!v.witness) v.witness_status = WitnessStatus::NotFoundWithinBounds;
  v.timings.witness_ms = elapsed_ms(wstart);
  v.timings.total_ms = elapsed_ms(start);
  return v;
}

NoCertificateReport no_certificate_search(const RationalRep& rep, unsigned c, long height_bound, std::uint64_t seed,
                                          std::size_t max_candidates) {
  if (decide(rep, c, seed).admits_anosov) throw InvalidInput("no-certificate search applies to NO verdicts only");
  auto census = lattice_census(rep, c, height_bound, max_candidates);
  NoCertificateReport r;
  r.c = c;
  r.height_bound = height_bound;
  r.candidates = census.candidates;
  r.integer_like = census.integer_like;
  r.hits = census.hits;
  return r;
}

}  // namespace anosov
