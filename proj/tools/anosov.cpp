// Command-line front end: decisions, witnesses, decompositions and the demo corpus.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "anosov/corpus.hpp"
#include "anosov/demo.hpp"
#include "anosov/json_io.hpp"

using namespace anosov;
using json_io::Json;

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUndecided = 3;

struct Options {
  std::string input = "-";
  std::optional<unsigned> c;
  std::uint64_t seed = 1;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::optional<long> height_bound;
  std::size_t max_order = kDefaultMaxOrder;
  bool pretty = false;
  bool witness = false;
  std::optional<unsigned> solvable_d;
  unsigned r = 2;
  std::string demo;
};

Json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return json_io::parse(text);
}

unsigned class_from(const Options& o, const std::optional<unsigned>& from_input) {
  if (o.c) return *o.c;
  if (from_input) return *from_input;
  throw InvalidInput("nilpotency class missing: pass --class or a \"class\" field");
}

// Pretty printing: matrices as grids, arrays of flat objects as tables.

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) return false;
    for (const auto& e : row)
      if (!is_scalar(e)) return false;
  }
  return true;
}

bool is_record_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& e : j)
    if (!e.is_object()) return false;
  return true;
}

void flatten(const Json& obj, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else if (is_scalar(*it)) {
      out.emplace_back(key, scalar_text(*it));
    }
  }
}

void print_grid(std::ostream& os, const std::vector<std::vector<std::string>>& cells, std::size_t indent) {
  std::vector<std::size_t> width;
  for (const auto& row : cells)
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (width.size() <= k) width.resize(k + 1, 0);
      width[k] = std::max(width[k], row[k].size());
    }
  for (const auto& row : cells) {
    os << std::string(indent, ' ');
    for (std::size_t k = 0; k < row.size(); ++k)
      os << std::string(width[k] - row[k].size() + (k == 0 ? 0 : 2), ' ') << row[k];
    os << '\n';
  }
}

void render(std::ostream& os, const Json& j, std::size_t indent);

void render_entry(std::ostream& os, const std::string& key, const Json& v, std::size_t indent) {
  const std::string pad(indent, ' ');
  if (is_scalar(v)) {
    os << pad << key << ": " << scalar_text(v) << '\n';
  } else if (is_matrix(v)) {
    os << pad << key << ":\n";
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : v) {
      cells.emplace_back();
      for (const auto& e : row) cells.back().push_back(scalar_text(e));
    }
    print_grid(os, cells, indent + 2);
  } else if (is_record_list(v)) {
    os << pad << key << ":\n";
    std::vector<std::string> header;
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    for (const auto& e : v) {
      rows.emplace_back();
      flatten(e, "", rows.back());
      for (const auto& [k, _] : rows.back())
        if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
    std::vector<std::vector<std::string>> cells{header};
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (const auto& h : header) {
        auto f = std::find_if(row.begin(), row.end(), [&](const auto& p) { return p.first == h; });
        line.push_back(f == row.end() ? "" : f->second);
      }
      cells.push_back(std::move(line));
    }
    print_grid(os, cells, indent + 2);
    for (std::size_t r = 0; r < v.size(); ++r)
      for (auto sub = v[r].begin(); sub != v[r].end(); ++sub)
        if (sub->is_array() && !sub->empty())
          render_entry(os, "#" + std::to_string(r + 1) + " " + sub.key(), *sub, indent + 2);
  } else if (v.is_array()) {
    std::string line;
    for (const auto& e : v) line += (line.empty() ? "" : ", ") + (is_scalar(e) ? scalar_text(e) : e.dump());
    os << pad << key << ": [" << line << "]\n";
  } else {
    os << pad << key << ":\n";
    render(os, v, indent + 2);
  }
}

void render(std::ostream& os, const Json& j, std::size_t indent) {
  for (auto it = j.begin(); it != j.end(); ++it) render_entry(os, it.key(), *it, indent);
}

void emit(const Json& j, bool pretty) {
  if (pretty && j.is_object()) {
    render(std::cout, j, 0);
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

NumberField field_from_json(const Json& in, unsigned bits) {
  if (in.contains("min_poly")) return NumberField::make(json_io::poly_from_json(in.at("min_poly")), bits);
  if (!in.contains("field") || !in.at("field").is_string())
    throw InvalidInput("units input needs \"min_poly\" or \"field\" (\"sqrt d\" or \"zeta d\")");
  std::istringstream words(in.at("field").get<std::string>());
  std::string kind;
  long d = 0;
  if (!(words >> kind >> d) || d < 1) throw InvalidInput("field must read \"sqrt d\" or \"zeta d\" with d >= 1");
  if (kind == "sqrt") return quadratic_field(static_cast<unsigned long>(d), bits);
  if (kind == "zeta") return cyclotomic_field(static_cast<unsigned long>(d), bits);
  throw InvalidInput("unknown field kind \"" + kind + "\"");
}

template <class T>
std::optional<T> optional_field(const Json& in, const char* key) {
  if (!in.contains(key)) return std::nullopt;
  const Json& v = in.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("\"") + key + "\" must be an integer");
  return v.get<T>();
}

int run(const std::string& command, const Options& o) {
  if (command == "decide") {
    auto in = json_io::rep_from_json(read_input(o.input), o.max_order);
    unsigned c = class_from(o, in.c);
    Verdict v;
    if (o.witness) {
      WitnessOptions wo;
      wo.precision_bits = o.precision_bits;
      if (o.height_bound) wo.height_bound = *o.height_bound;
      v = decide_with_witness(in.rep, c, o.seed, wo);
      if (o.solvable_d) v.solvable_d = *o.solvable_d;
    } else if (o.solvable_d) {
      v = decide_solvable(in.rep, c, *o.solvable_d, o.seed);
    } else {
      v = decide(in.rep, c, o.seed);
    }
    emit(json_io::to_json(v), o.pretty);
  } else if (command == "porteous") {
    auto in = json_io::rep_from_json(read_input(o.input), o.max_order);
    emit(json_io::to_json(porteous_flat(in.rep, o.seed)), o.pretty);
  } else if (command == "decompose") {
    auto in = json_io::rep_from_json(read_input(o.input), o.max_order);
    emit(json_io::decomposition_to_json(decompose(in.rep, o.seed)), o.pretty);
  } else if (command == "units") {
    Json in = read_input(o.input);
    if (!in.is_object()) throw InvalidInput("units input must be a JSON object");
    NumberField k = field_from_json(in, o.precision_bits);
    unsigned c = class_from(o, optional_field<unsigned>(in, "c"));
    long bound = o.height_bound ? *o.height_bound : optional_field<long>(in, "bound").value_or(kDefaultHeightBound);
    if (c < 1 || bound < 1) throw InvalidInput("c and bound must be positive");
    auto result = search_c_hyperbolic_unit(k, default_unit_generators(k), c, bound);
    emit(json_io::units_to_json(k, c, bound, result), o.pretty);
  } else if (command == "graded-action") {
    Json in = read_input(o.input);
    if (!in.is_object() || !in.contains("matrix")) throw InvalidInput("graded-action input needs r, c and matrix");
    RatMatrix m = json_io::matrix_from_json(in.at("matrix"));
    auto r = optional_field<unsigned>(in, "r").value_or(static_cast<unsigned>(m.rows()));
    if (r != m.rows()) throw InvalidInput("r does not match the matrix size");
    unsigned c = class_from(o, optional_field<unsigned>(in, "c"));
    auto basis = HallBasis::make(r, c);
    emit(json_io::graded_action_to_json(m, basis, full_action_hyperbolic(m, c, o.precision_bits)), o.pretty);
  } else if (command == "hall-basis") {
    emit(json_io::hall_basis_to_json(HallBasis::make(o.r, class_from(o, std::nullopt))), o.pretty);
  } else if (command == "no-cert") {
    auto in = json_io::rep_from_json(read_input(o.input), o.max_order);
    unsigned c = class_from(o, in.c);
    emit(json_io::to_json(no_certificate_search(in.rep, c, o.height_bound.value_or(5), o.seed)), o.pretty);
  } else if (command == "demo") {
    emit(run_demo(o.demo, o.seed), o.pretty);
  }
  return kExitDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide which infra-nilmanifolds modeled on free nilpotent groups admit Anosov diffeomorphisms"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("input", o.input, "JSON input file, or - for stdin");
    sub->add_option("--class", o.c, "Nilpotency class c");
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--precision-bits", o.precision_bits, "Working precision for numeric root isolation");
    sub->add_option("--height-bound", o.height_bound, "Search height or exponent bound");
    sub->add_option("--max-order", o.max_order, "Largest group order accepted");
    sub->add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");
  };

  auto* decide_cmd = app.add_subcommand("decide", "Decide the existence of an Anosov diffeomorphism");
  add_common(decide_cmd, true);
  decide_cmd->add_flag("--witness", o.witness, "Construct and verify a witness matrix on YES");
  decide_cmd->add_option("--solvable", o.solvable_d, "Use the solvable model with derived length d");
  add_common(app.add_subcommand("porteous", "Flat case (c = 1) with the Porteous cross-check"), true);
  add_common(app.add_subcommand("decompose", "Decompose into Q-irreducible classes"), true);
  add_common(app.add_subcommand("units", "Search a number field for a c-hyperbolic unit"), true);
  add_common(app.add_subcommand("graded-action", "Induced action on the free nilpotent Lie algebra"), true);
  auto* hall_cmd = app.add_subcommand("hall-basis", "Hall basis of the free nilpotent Lie algebra");
  add_common(hall_cmd, false);
  hall_cmd->add_option("-r,--rank", o.r, "Number of generators");
  add_common(app.add_subcommand("no-cert", "Exhaustive witness census for a NO verdict"), true);
  auto* demo_cmd = app.add_subcommand("demo", "Run a named example");
  add_common(demo_cmd, false);
  demo_cmd->add_option("name", o.demo, "Example name")->required()->check(CLI::IsMember(corpus::demo_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
