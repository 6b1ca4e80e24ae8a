#include "anosov/freenilp.hpp"

#include <algorithm>
#include <string>

namespace anosov {

namespace {

using Word = std::string;

Word to_word(const std::vector<std::uint8_t>& v) { return Word(v.begin(), v.end()); }
using NcPoly = std::map<Word, Rational>;

int mobius(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

void add_to(NcPoly& a, const NcPoly& b, const Rational& scale) {
  for (const auto& [w, q] : b) {
    auto it = a.find(w);
    if (it == a.end()) {
      a.emplace(w, q * scale);
    } else {
      it->second += q * scale;
      if (it->second == 0) a.erase(it);
    }
  }
}

NcPoly product(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, qa] : a)
    for (const auto& [wb, qb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      NcPoly term{{w, qa * qb}};
      add_to(out, term, 1);
    }
  return out;
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) {
  NcPoly out = product(a, b);
  add_to(out, product(b, a), -1);
  return out;
}

// Noncommutative expansions of the basis elements up to the given degree, with
// generator images substituted by `gen`.
std::vector<std::vector<NcPoly>> expansions(const HallBasis& basis, std::size_t top, const std::vector<NcPoly>& gen) {
  std::vector<std::vector<NcPoly>> out(top);
  for (std::size_t d = 1; d <= top; ++d) {
    for (const auto& e : basis.degree(d)) {
      if (d == 1)
        out[0].push_back(gen[e.word[0]]);
      else
        out[d - 1].push_back(
            commutator(out[e.left_degree - 1][e.left_index], out[e.right_degree - 1][e.right_index]));
    }
  }
  return out;
}

}  // namespace

Integer witt_number(unsigned r, unsigned i) {
  if (i == 0) throw InvalidInput("Witt number of degree 0");
  Integer sum = 0;
  for (unsigned d = 1; d <= i; ++d) {
    if (i % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), r, i / d);
    sum += mu * p;
  }
  return sum / i;
}

HallBasis HallBasis::make(unsigned r, unsigned c) {
  if (r == 0 || c == 0) throw InvalidInput("Hall basis needs r >= 1 and c >= 1");
  if (r > 255) throw InvalidInput("too many generators");
  Integer total = 0;
  for (unsigned i = 1; i <= c; ++i) {
    total += witt_number(r, i);
    if (total > 100000) throw InvalidInput("free nilpotent Lie algebra dimension exceeds 100000");
  }
  HallBasis b;
  b.r_ = r;
  b.c_ = c;
  b.elements_.resize(c);
  std::map<Word, std::pair<std::size_t, std::size_t>> where;
  // Duval's algorithm: Lyndon words of length <= c in lexicographic order.
  Word w(1, '\0');
  std::vector<Word> all;
  while (!w.empty()) {
    all.push_back(w);
    Word next;
    for (std::size_t i = 0; i < c; ++i) next.push_back(w[i % w.size()]);
    while (!next.empty() && static_cast<unsigned char>(next.back()) == r - 1) next.pop_back();
    if (!next.empty()) next.back() = static_cast<char>(next.back() + 1);
    w = next;
  }
  std::stable_sort(all.begin(), all.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (const auto& word : all) {
    HallElement e;
    e.word.assign(word.begin(), word.end());
    std::size_t d = word.size();
    if (d > 1) {
      // Standard factorization: right factor is the longest proper Lyndon suffix.
      for (std::size_t split = 1; split < d; ++split) {
        Word right(word.begin() + static_cast<long>(split), word.end());
        auto it = where.find(right);
        if (it == where.end()) continue;
        Word left(word.begin(), word.begin() + static_cast<long>(split));
        auto lt = where.find(left);
        if (lt == where.end()) throw InconsistentResult("Lyndon factorization failed");
        e.left_degree = lt->second.first;
        e.left_index = lt->second.second;
        e.right_degree = it->second.first;
        e.right_index = it->second.second;
        break;
      }
    }
    where[word] = {d, b.elements_[d - 1].size()};
    b.elements_[d - 1].push_back(std::move(e));
  }
  return b;
}

std::vector<std::size_t> HallBasis::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& e : elements_) out.push_back(e.size());
  return out;
}

std::size_t HallBasis::total_dimension() const {
  std::size_t t = 0;
  for (const auto& e : elements_) t += e.size();
  return t;
}

std::size_t HallBasis::degree2_index(unsigned i, unsigned j) const {
  if (c_ < 2 || i < 1 || j <= i || j > r_) throw InvalidInput("y_{i,j} needs 1 <= i < j <= r");
  const auto& d2 = degree(2);
  for (std::size_t k = 0; k < d2.size(); ++k)
    if (d2[k].word[0] == i - 1 && d2[k].word[1] == j - 1) return k;
  throw InconsistentResult("missing degree-2 basis element");
}

std::string HallBasis::label(std::size_t d, std::size_t index) const {
  const auto& e = degree(d).at(index);
  if (d == 1) return "x" + std::to_string(e.word[0] + 1);
  return "[" + label(e.left_degree, e.left_index) + "," + label(e.right_degree, e.right_index) + "]";
}

RatMatrix graded_action(const RatMatrix& m, const HallBasis& basis, std::size_t degree) {
  std::size_t r = basis.r();
  if (!m.is_square() || m.rows() != r) throw InvalidInput("action matrix must be r x r");
  if (degree < 1 || degree > basis.c()) throw InvalidInput("degree outside 1..c");
  if (det(m) == 0) throw InvalidInput("graded action needs an invertible matrix");
  if (degree == 1) return m;
  const auto& elems = basis.degree(degree);
  std::size_t dim = elems.size();
  RatMatrix out(dim, dim);
  if (degree == 2) {
    // Antisymmetric square: [M x_i, M x_j] = sum_{k<l} (M_ki M_lj - M_li M_kj) y_kl.
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t i = elems[col].word[0], j = elems[col].word[1];
      for (std::size_t row = 0; row < dim; ++row) {
        std::size_t k = elems[row].word[0], l = elems[row].word[1];
        out(row, col) = m(k, i) * m(l, j) - m(l, i) * m(k, j);
      }
    }
    return out;
  }
  std::vector<NcPoly> identity_gen(r), image_gen(r);
  for (std::size_t j = 0; j < r; ++j) {
    identity_gen[j][Word(1, static_cast<char>(j))] = 1;
    for (std::size_t k = 0; k < r; ++k)
      if (m(k, j) != 0) image_gen[j][Word(1, static_cast<char>(k))] = m(k, j);
  }
  auto plain = expansions(basis, degree, identity_gen);
  auto images = expansions(basis, degree, image_gen);
  std::map<Word, std::size_t> index;
  for (std::size_t k = 0; k < dim; ++k) index[to_word(elems[k].word)] = k;
  for (std::size_t col = 0; col < dim; ++col) {
    NcPoly rest = images[degree - 1][col];
    // The smallest word of a Lie polynomial is Lyndon and leads its basis element.
    while (!rest.empty()) {
      auto [w, q] = *rest.begin();
      auto it = index.find(w);
      if (it == index.end()) throw InconsistentResult("leading word of a Lie element is not Lyndon");
      out(it->second, col) = q;
      add_to(rest, plain[degree - 1][it->second], -q);
    }
  }
  return out;
}

RatMatrix restrict_to_sub_basis(const RatMatrix& action, const std::vector<std::size_t>& indices) {
  std::size_t k = indices.size();
  std::vector<bool> inside(action.rows(), false);
  for (auto i : indices) {
    if (i >= action.rows()) throw InvalidInput("sub-basis index out of range");
    inside[i] = true;
  }
  RatMatrix out(k, k);
  for (std::size_t b = 0; b < k; ++b) {
    for (std::size_t row = 0; row < action.rows(); ++row)
      if (!inside[row] && action(row, indices[b]) != 0) throw InvalidInput("sub-basis span is not invariant");
    for (std::size_t a = 0; a < k; ++a) out(a, b) = action(indices[a], indices[b]);
  }
  return out;
}

FullActionReport full_action_hyperbolic(const RatMatrix& m, unsigned c, unsigned precision_bits) {
  if (!m.is_square() || m.rows() == 0) throw InvalidInput("action matrix must be square");
  HallBasis basis = HallBasis::make(static_cast<unsigned>(m.rows()), c);
  IntPoly base = char_poly(m).primitive_integer_part();
  FullActionReport report;
  report.hyperbolic = true;
  for (std::size_t i = 1; i <= c; ++i) {
    DegreeReport d;
    d.degree = i;
    d.dimension = basis.dimension(i);
    if (d.dimension == 0) {
      report.degrees.push_back(std::move(d));
      continue;
    }
    RatMatrix g = graded_action(m, basis, i);
    d.char_poly = char_poly(g).primitive_integer_part();
    d.status = unit_circle_root_test(d.char_poly, precision_bits).status;
    d.contained_in_products =
        divides(squarefree_part(d.char_poly), eig_product_poly_squarefree(base, static_cast<unsigned>(i)));
    if (d.status == CircleStatus::Found) report.hyperbolic = false;
    report.degrees.push_back(std::move(d));
  }
  return report;
}

}  // namespace anosov
