#include "anosov/demo.hpp"

#include <algorithm>

#include "anosov/corpus.hpp"

namespace anosov {

using json_io::Json;

namespace {

constexpr long kDemoUnitBound = 12;
constexpr long kDemoCensusHeight = 5;

Json character_table(const RationalRep& r1, const RationalRep& r2, const RationalRep& r3) {
  const auto classes = r1.group().conjugacy_classes();
  Json sizes = Json::array();
  for (const auto& cl : classes) sizes.push_back(cl.size());
  Json rows = Json::object();
  for (auto [name, rep] : {std::pair{"rho1", &r1}, std::pair{"rho2", &r2}, std::pair{"rho3", &r3}}) {
    auto chi = rep->character();
    Json row = Json::array();
    for (const auto& cl : classes) row.push_back(to_string(chi[cl.front()]));
    rows[name] = std::move(row);
  }
  Json j;
  j["class_sizes"] = std::move(sizes);
  j["rows"] = std::move(rows);
  return j;
}

Json demo_d3(std::uint64_t seed) {
  auto g = corpus::d3_group();
  Json j;
  j["name"] = "d3";
  j["group_order"] = g->order();
  j["character_table"] = character_table(corpus::d3_rho1(g), corpus::d3_rho2(g), corpus::d3_rho3(g));
  RatMatrix a = d3_degree2_action(corpus::rho3_a());
  RatMatrix b = d3_degree2_action(corpus::rho3_b());
  j["A"] = json_io::to_json(a);
  j["B"] = json_io::to_json(b);
  j["AB_decomposition"] = json_io::decomposition_to_json(decompose(corpus::d3_AB(g), seed));
  Json boundary = Json::array();
  for (std::size_t m = 1; m <= 4; ++m)
    for (unsigned c = 1; c <= 4; ++c) {
      Json e;
      e["m"] = m;
      e["c"] = c;
      e["admits_anosov"] = decide(corpus::d3_rho3(g).multiple(m), c, seed).admits_anosov;
      boundary.push_back(std::move(e));
    }
  j["boundary"] = std::move(boundary);
  return j;
}

Json demo_q8(std::uint64_t seed) {
  RationalRep rep = corpus::q8_regular();
  Json j;
  j["name"] = "q8";
  j["decomposition"] = json_io::decomposition_to_json(decompose(rep, seed));
  j["verdict"] = json_io::to_json(decide(rep, 1, seed));
  return j;
}

Json demo_klein(std::uint64_t seed) {
  RationalRep rep = corpus::klein();
  Json j;
  j["name"] = "klein";
  j["verdict"] = json_io::to_json(porteous_flat(rep, seed));
  j["no_certificate"] = json_io::to_json(no_certificate_search(rep, 1, kDemoCensusHeight, seed));
  return j;
}

Json demo_torus(std::uint64_t seed) {
  Json j;
  j["name"] = "torus";
  j["verdict"] = json_io::to_json(decide_with_witness(corpus::trivial(2), 1, seed));
  return j;
}

Json demo_c5(std::uint64_t seed) {
  Json j;
  j["name"] = "c5";
  j["verdict"] = json_io::to_json(decide_with_witness(corpus::cyclic_companion(5), 1, seed));
  return j;
}

Json demo_c4(std::uint64_t seed) {
  Json j;
  j["name"] = "c4";
  j["verdict"] = json_io::to_json(decide(corpus::cyclic_companion(4), 1, seed));
  NumberField k = cyclotomic_field(4);
  auto units = search_c_hyperbolic_unit(k, default_unit_generators(k), 1, kDemoUnitBound);
  j["units"] = json_io::units_to_json(k, 1, kDemoUnitBound, units);
  return j;
}

}  // namespace

RatMatrix d3_degree2_action(const RatMatrix& generator_image) {
  auto basis = HallBasis::make(4, 2);
  RatMatrix full = graded_action(block_diag({generator_image, generator_image}), basis, 2);
  return restrict_to_sub_basis(full, {basis.degree2_index(1, 3), basis.degree2_index(1, 4),
                                      basis.degree2_index(2, 3), basis.degree2_index(2, 4)});
}

Json run_demo(const std::string& name, std::uint64_t seed) {
  if (name == "d3") return demo_d3(seed);
  if (name == "q8") return demo_q8(seed);
  if (name == "klein") return demo_klein(seed);
  if (name == "torus") return demo_torus(seed);
  if (name == "c5") return demo_c5(seed);
  if (name == "c4") return demo_c4(seed);
  throw InvalidInput("unknown demo \"" + name + "\"");
}

}  // namespace anosov
