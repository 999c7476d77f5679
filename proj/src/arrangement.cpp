#include "mfree/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <nlohmann/json.hpp>

#include "mfree/errors.hpp"
#include "mfree/flat.hpp"

namespace mfree {

Rational LinearForm::at(std::span<const Rational> v) const {
  if (v.size() != coeffs.size()) throw DimensionMismatch("linear form dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += coeffs[i] * v[i];
  return s;
}

Rational LinearForm::at(std::span<const std::int64_t> v) const {
  if (v.size() != coeffs.size()) throw DimensionMismatch("linear form dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += coeffs[i] * static_cast<long>(v[i]);
  return s;
}

Hyperplane::Hyperplane(std::span<const std::int64_t> normal) {
  RationalVector q;
  for (auto x : normal) q.emplace_back(static_cast<long>(x));
  normal_ = primitive_integer_vector(q);
}

Hyperplane Hyperplane::from_rational(std::span<const Rational> coeffs) {
  auto ints = primitive_integer_vector(RationalVector(coeffs.begin(), coeffs.end()));
  return Hyperplane(ints);
}

LinearForm Hyperplane::form() const {
  LinearForm f;
  for (auto x : normal_) f.coeffs.emplace_back(static_cast<long>(x));
  return f;
}

Integer Hyperplane::eval(std::span<const std::int64_t> v) const {
  if (v.size() != normal_.size()) throw DimensionMismatch("hyperplane dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += Integer(static_cast<long>(normal_[i])) * static_cast<long>(v[i]);
  return s;
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
  if (dim != 2 && dim != 3) throw UserError("ambient dimension must be 2 or 3, got " + std::to_string(dim));
  for (auto& h : hyperplanes) {
    if (h.dim() != dim) throw DimensionMismatch("hyperplane " + h.to_string() + " has the wrong dimension");
    if (contains(h)) throw Duplicate("hyperplane " + h.to_string() + " appears more than once");
    hyperplanes_.push_back(std::move(h));
  }
}

bool Arrangement::contains(const Hyperplane& h) const {
  return std::find(hyperplanes_.begin(), hyperplanes_.end(), h) != hyperplanes_.end();
}

Arrangement Arrangement::with(const Hyperplane& h) const {
  auto hs = hyperplanes_;
  hs.push_back(h);
  return Arrangement(dim_, std::move(hs));
}

Arrangement Arrangement::subset(std::span<const std::size_t> indices) const {
  std::vector<Hyperplane> hs;
  for (auto i : indices) hs.push_back(hyperplanes_.at(i));
  return Arrangement(dim_, std::move(hs));
}

std::vector<std::vector<std::int64_t>> Arrangement::normals() const {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& h : hyperplanes_) rows.emplace_back(h.normal().begin(), h.normal().end());
  return rows;
}

std::string Arrangement::to_forms_string() const {
  std::string s;
  for (const auto& h : hyperplanes_) {
    if (!s.empty()) s += "; ";
    s += h.to_string();
  }
  return s;
}

namespace {

class FormScanner {
 public:
  FormScanner(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Hyperplane parse() {
    RationalVector coeffs(dim_);
    Rational constant = 0;
    skip_space();
    if (at_end()) fail("empty linear form");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coeff = sign;
      bool have_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
        coeff *= parse_rational(number_token());
        have_number = true;
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (peek() != 'x') fail("expected a variable after '*'");
        }
      }
      if (peek() == 'x') {
        coeffs[variable()] += coeff;
      } else if (have_number) {
        constant += coeff;
      } else {
        fail("expected a number or a variable");
      }
      skip_space();
    }
    if (constant != 0)
      throw NotCentral("'" + std::string(text_) + "' has a constant term; only central hyperplanes are supported");
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; }))
      throw ZeroForm("'" + std::string(text_) + "' is the zero form");
    return Hyperplane::from_rational(coeffs);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view number_token() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    digits();
    if (peek() == '.') {
      ++pos_;
      digits();
    } else if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      digits();
    }
    return text_.substr(start, pos_ - start);
  }

  std::size_t variable() {
    ++pos_;  // 'x'
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a variable index after 'x'");
    std::size_t index = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (index < 1 || index > dim_)
      throw SyntaxError("variable x" + std::to_string(index) + " out of range for dimension " + std::to_string(dim_));
    return index - 1;
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return make_rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw SyntaxError("hyperplane coefficients must be integers or rational strings, got " + v.dump());
}

Arrangement from_matrix(const nlohmann::json& rows, std::optional<std::size_t> dim) {
  if (!rows.is_array()) throw SyntaxError("\"hyperplanes\" must be an array of coefficient rows");
  std::size_t l = dim.value_or(rows.empty() ? 3 : rows.front().size());
  std::vector<Hyperplane> hs;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != l)
      throw SyntaxError("coefficient row " + row.dump() + " does not have " + std::to_string(l) + " entries");
    RationalVector coeffs;
    for (const auto& v : row) coeffs.push_back(json_rational(v));
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; }))
      throw ZeroForm("coefficient row " + row.dump() + " is zero");
    hs.push_back(Hyperplane::from_rational(coeffs));
  }
  return Arrangement(l, std::move(hs));
}

Arrangement from_json(std::string_view text, std::optional<std::size_t> dim) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_array()) return from_matrix(doc, dim);
  if (!doc.is_object()) throw SyntaxError("arrangement JSON must be an object or an array");
  if (doc.contains("l")) {
    if (!doc["l"].is_number_unsigned()) throw SyntaxError("\"l\" must be a positive integer");
    dim = doc["l"].get<std::size_t>();
  }
  if (doc.contains("hyperplanes")) return from_matrix(doc["hyperplanes"], dim);
  if (doc.contains("forms")) {
    std::size_t l = dim.value_or(3);
    std::vector<Hyperplane> hs;
    for (const auto& f : doc["forms"]) {
      if (!f.is_string()) throw SyntaxError("\"forms\" entries must be strings");
      hs.push_back(parse_linear_form(f.get<std::string>(), l));
    }
    return Arrangement(l, std::move(hs));
  }
  throw SyntaxError("arrangement JSON needs \"hyperplanes\" or \"forms\"");
}

}  // namespace

Hyperplane parse_linear_form(std::string_view text, std::size_t dim) { return FormScanner(text, dim).parse(); }

Arrangement parse_arrangement(std::string_view text, std::optional<std::size_t> dim) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && (text[first] == '{' || text[first] == '['))
    return from_json(text.substr(first), dim);
  std::size_t l = dim.value_or(3);
  std::vector<Hyperplane> hs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of(";\n", start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r") != std::string_view::npos) hs.push_back(parse_linear_form(piece, l));
    start = end + 1;
  }
  return Arrangement(l, std::move(hs));
}

Poly defining_polynomial(const Arrangement& a) {
  Poly q = Poly::constant(a.dim(), 1);
  for (const auto& h : a.hyperplanes()) q *= h.poly();
  return q;
}

RankKernel rank_and_kernel(const Arrangement& a) { return integer_rank_kernel(a.normals(), a.dim()); }

bool is_essential(const Arrangement& a) { return rank_and_kernel(a).rank == a.dim(); }

std::vector<std::size_t> localization_indices(const Arrangement& a, std::span<const std::int64_t> direction) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].eval(direction) == 0) idx.push_back(i);
  return idx;
}

Arrangement localization(const Arrangement& a, const Flat1& x) {
  auto idx = localization_indices(a, x.direction);
  return a.subset(idx);
}

std::vector<Flat1> dim1_flats(const Arrangement& a) {
  std::vector<Flat1> flats;
  if (a.dim() == 2) {
    for (const auto& h : a.hyperplanes()) {
      std::int64_t dir[2] = {-h.normal()[1], h.normal()[0]};
      flats.push_back(make_flat_from_direction(a, dir));
    }
    return flats;
  }
  std::set<std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Flat1 x = make_flat(a, i, j);
      if (seen.insert(x.direction).second) flats.push_back(std::move(x));
    }
  return flats;
}

}  // namespace mfree
