#include "anosov/json_io.hpp"

namespace anosov::json_io {

namespace {

Rational entry_from_json(const Json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) return Rational(e.get<long>());
  throw InvalidInput("matrix entries must be strings \"p/q\" or integers");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<RatMatrix> matrix_list(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InvalidInput(std::string(what) + " must be a nonempty array of matrices");
  std::vector<RatMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

Json timings_json(const Timings& t) {
  Json j;
  j["decompose_ms"] = t.decompose_ms;
  j["witness_ms"] = t.witness_ms;
  j["total_ms"] = t.total_ms;
  return j;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("a matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) throw InvalidInput("matrix rows must be nonempty arrays");
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(entry_from_json(e));
    if (!rows.empty() && r.size() != rows.front().size()) throw InvalidInput("matrix rows have different lengths");
    rows.push_back(std::move(r));
  }
  return RatMatrix::from_rows(rows);
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(anosov::to_string(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("a polynomial must be a nonempty coefficient array");
  std::vector<Integer> coeffs;
  for (const auto& e : j) {
    Rational q = entry_from_json(e);
    if (!is_integer(q)) throw InvalidInput("polynomial coefficients must be integers");
    coeffs.push_back(q.get_num());
  }
  return IntPoly(std::move(coeffs));
}

Json to_json(const IntPoly& f) {
  Json out = Json::array();
  for (const auto& a : f.coeffs()) out.push_back(anosov::to_string(a));
  return out;
}

RepInput rep_from_json(const Json& j, std::size_t max_order) {
  if (!j.is_object()) throw InvalidInput("representation input must be a JSON object");
  auto gens = matrix_list(require(j, "generators"), "generators");
  auto group = FiniteMatrixGroup::generate(gens, max_order);
  RepInput in{RationalRep::natural(group), std::nullopt};
  if (j.contains("rep_images")) {
    auto images = matrix_list(j.at("rep_images"), "rep_images");
    if (images.size() != gens.size()) throw InvalidInput("rep_images must have one matrix per generator");
    in.rep = RationalRep::from_generator_images(group, images);
  }
  if (j.contains("class")) {
    const Json& c = j.at("class");
    if (!c.is_number_integer() || c.get<long>() < 1) throw InvalidInput("class must be a positive integer");
    in.c = c.get<unsigned>();
  }
  return in;
}

std::string to_string(CircleStatus s) {
  switch (s) {
    case CircleStatus::NoneCertified: return "none-certified";
    case CircleStatus::NoneNumeric: return "none-numeric";
    case CircleStatus::Found: return "found";
  }
  return "unknown";
}

Json to_json(const HyperbolicityReport& r) {
  Json j;
  j["c_tested"] = r.c_tested;
  j["verdict"] = r.verdict;
  j["certified_exact"] = r.certified_exact;
  j["precision_bits"] = r.precision_bits;
  if (r.offending) {
    Json o;
    o["k"] = r.offending->k;
    o["indices"] = r.offending->indices;
    o["modulus"] = r.offending->modulus;
    j["offending"] = std::move(o);
  } else {
    j["offending"] = nullptr;
  }
  return j;
}

Json to_json(const ComponentProfile& p) {
  Json j;
  j["dimension"] = p.dimension();
  j["multiplicity"] = p.multiplicity;
  j["dim_E"] = p.dim_E;
  j["n"] = p.n_field;
  j["m"] = p.m_schur;
  j["e"] = p.e_complex;
  j["fs_sign"] = to_string(p.fs_sign);
  j["r_components"] = p.r_components;
  j["k"] = p.k_dim;
  j["certificate"] = p.certificate == Certificate::Exact ? "exact" : "randomized";
  return j;
}

Json decomposition_to_json(const std::vector<ComponentProfile>& classes) {
  Json j;
  Json list = Json::array();
  std::size_t total = 0;
  for (const auto& p : classes) {
    list.push_back(to_json(p));
    total += p.dimension() * p.multiplicity;
  }
  j["dimension"] = total;
  j["classes"] = std::move(list);
  return j;
}

Json to_json(const WitnessCertificate& w) {
  Json j;
  j["matrix"] = to_json(w.witness);
  j["construction_path"] = to_string(w.construction_path);
  j["char_poly"] = to_json(w.char_poly);
  j["c"] = w.c;
  j["commutes"] = w.commutes;
  j["commutes_per_generator"] = w.commutes_per_generator;
  j["integer_like"] = w.integer_like;
  j["hyperbolicity"] = to_json(w.hyperbolicity);
  j["valid"] = w.valid();
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["admits_anosov"] = v.admits_anosov;
  j["class_c"] = v.class_c;
  if (v.solvable_d) j["solvable_d"] = *v.solvable_d;
  Json comps = Json::array();
  for (const auto& cv : v.components) {
    Json c;
    c["dimension"] = cv.dimension;
    c["multiplicity"] = cv.multiplicity;
    c["r_components"] = cv.r_components;
    c["threshold"] = anosov::to_string(cv.threshold);
    c["passes"] = cv.passes;
    Json profile = to_json(cv.profile);
    for (const char* dup : {"dimension", "multiplicity", "r_components"}) profile.erase(dup);
    c["profile"] = std::move(profile);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  if (v.porteous_agrees) j["porteous_agrees"] = *v.porteous_agrees;
  j["witness_status"] = to_string(v.witness_status);
  if (v.witness) {
    j["witness"] = to_json(*v.witness);
    j["witness_paths"] = v.witness_paths;
    j["witness_exponents"] = v.witness_exponents;
  }
  j["seed"] = v.seed;
  j["timings"] = timings_json(v.timings);
  return j;
}

Json to_json(const NoCertificateReport& r) {
  Json j;
  j["c"] = r.c;
  j["height_bound"] = r.height_bound;
  j["candidates"] = r.candidates;
  j["integer_like"] = r.integer_like;
  j["hits"] = r.hits;
  return j;
}

Json units_to_json(const NumberField& k, unsigned c, long bound, const UnitSearchResult& r) {
  Json j;
  j["min_poly"] = to_json(k.min_poly());
  j["signature"] = {k.s(), k.t()};
  j["c"] = c;
  j["bound"] = bound;
  j["max_hyperbolicity"] = max_hyperbolicity_bound(k);
  j["candidates"] = r.candidates;
  j["found"] = r.unit.has_value();
  if (r.unit) {
    Json coords = Json::array();
    for (const auto& q : r.unit->coords) coords.push_back(anosov::to_string(q));
    j["coordinates"] = std::move(coords);
    Json logs = Json::array();
    for (const auto& x : r.unit->log_vector) logs.push_back(x.convert_to<double>());
    j["log_vector"] = std::move(logs);
    j["exponents"] = r.exponents;
    j["unit_min_poly"] = to_json(r.min_poly);
    j["certification"] = to_json(r.report);
  }
  return j;
}

Json graded_action_to_json(const RatMatrix& m, const HallBasis& basis, const FullActionReport& report) {
  Json j;
  j["r"] = basis.r();
  j["c"] = basis.c();
  j["hyperbolic"] = report.hyperbolic;
  Json degrees = Json::array();
  for (const auto& d : report.degrees) {
    Json e;
    e["degree"] = d.degree;
    e["dimension"] = d.dimension;
    e["matrix"] = to_json(graded_action(m, basis, d.degree));
    e["char_poly"] = to_json(d.char_poly);
    e["unit_circle"] = to_string(d.status);
    e["contained_in_products"] = d.contained_in_products;
    degrees.push_back(std::move(e));
  }
  j["degrees"] = std::move(degrees);
  return j;
}

Json hall_basis_to_json(const HallBasis& basis) {
  Json j;
  j["r"] = basis.r();
  j["c"] = basis.c();
  j["dimensions"] = basis.dimensions();
  j["total_dimension"] = basis.total_dimension();
  Json degrees = Json::array();
  for (std::size_t i = 1; i <= basis.c(); ++i) {
    Json labels = Json::array();
    for (std::size_t k = 0; k < basis.dimension(i); ++k) labels.push_back(basis.label(i, k));
    degrees.push_back(std::move(labels));
  }
  j["elements"] = std::move(degrees);
  return j;
}

}  // namespace anosov::json_io
