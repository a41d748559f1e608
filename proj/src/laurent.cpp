#include "knotfold/laurent.hpp"

#include "knotfold/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace knotfold {

namespace {

char variable_char(Variable v) { return v == Variable::A ? 'A' : 'q'; }

// gcd of all exponent gaps relative to the smallest exponent; 0 for <= 1 term.
int exponent_stride(const std::vector<LaurentPolynomial::Term>& terms) {
  int g = 0;
  for (const auto& t : terms) g = std::gcd(g, t.first - terms.front().first);
  return g;
}

std::string exponent_text(int quarter) {
  if (quarter % 4 == 0) return std::to_string(quarter / 4);
  if (quarter % 2 == 0) return "(" + std::to_string(quarter / 2) + "/2)";
  return "(" + std::to_string(quarter) + "/4)";
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(Variable var, const BigInt& c) {
  return monomial_quarter(var, c, 0);
}

LaurentPolynomial LaurentPolynomial::monomial(Variable var, const BigInt& c, int exponent) {
  return monomial_quarter(var, c, 4 * exponent);
}

LaurentPolynomial LaurentPolynomial::monomial_quarter(Variable var, const BigInt& c, int quarter_exponent) {
  LaurentPolynomial p(var);
  if (c != 0) p.terms_.emplace_back(quarter_exponent, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(Variable var, std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPolynomial p(var);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_dense(Variable var, int min_exponent,
                                                const std::vector<std::int64_t>& coefficients) {
  LaurentPolynomial p(var);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0)
      p.terms_.emplace_back(4 * (min_exponent + static_cast<int>(i)), BigInt(coefficients[i]));
  }
  return p;
}

BigInt LaurentPolynomial::coefficient_quarter(int quarter_exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), quarter_exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == quarter_exponent) return it->second;
  return 0;
}

bool LaurentPolynomial::has_integral_exponents() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 4 == 0; });
}

void LaurentPolynomial::check_same_variable(const LaurentPolynomial& other) const {
  if (var_ != other.var_)
    throw Error(ErrorKind::VariableMismatch, "operands use different variables");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_same_variable(other);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  return *this += -other;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_same_variable(b);
  LaurentPolynomial r(a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& mono = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_)
      r.terms_.emplace_back(t.first + mono.terms_[0].first, t.second * mono.terms_[0].second);
    return r;
  }
  const int stride = std::gcd(exponent_stride(a.terms_), exponent_stride(b.terms_));
  const int lo = a.min_quarter_exponent() + b.min_quarter_exponent();
  const long span = (static_cast<long>(a.max_quarter_exponent()) - a.min_quarter_exponent() +
                     b.max_quarter_exponent() - b.min_quarter_exponent()) / stride;
  const long products = static_cast<long>(a.terms_.size()) * static_cast<long>(b.terms_.size());
  if (span <= 4 * products + 64) {
    std::vector<BigInt> dense(static_cast<std::size_t>(span + 1));
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        dense[static_cast<std::size_t>((x.first + y.first - lo) / stride)] += x.second * y.second;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (dense[i] != 0) r.terms_.emplace_back(lo + static_cast<int>(i) * stride, std::move(dense[i]));
    return r;
  }
  std::map<int, BigInt> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.first + y.first] += x.second * y.second;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int quarter_offset) const {
  LaurentPolynomial r = *this;
  for (auto& t : r.terms_) t.first += quarter_offset;
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const BigInt& factor) const {
  LaurentPolynomial r(var_);
  if (factor == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= factor;
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_inverse() const {
  LaurentPolynomial r(var_);
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentPolynomial LaurentPolynomial::rescaled_exponents(int factor, Variable target) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.emplace_back(term.first * factor, term.second);
  return from_terms(target, std::move(t));
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  check_same_variable(divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::InexactDivision, "division by zero polynomial");
  LaurentPolynomial quotient(var_);
  if (is_zero()) return quotient;

  int stride = std::gcd(exponent_stride(terms_), exponent_stride(divisor.terms_));
  stride = std::gcd(stride, min_quarter_exponent() - divisor.min_quarter_exponent());
  if (stride == 0) stride = 4;
  const int a_lo = min_quarter_exponent();
  const int b_lo = divisor.min_quarter_exponent();
  const std::size_t na = static_cast<std::size_t>((max_quarter_exponent() - a_lo) / stride) + 1;
  const std::size_t nb = static_cast<std::size_t>((divisor.max_quarter_exponent() - b_lo) / stride) + 1;
  if (na < nb) throw Error(ErrorKind::InexactDivision, "dividend shorter than divisor");

  std::vector<BigInt> rem(na);
  for (const auto& t : terms_) rem[static_cast<std::size_t>((t.first - a_lo) / stride)] = t.second;
  std::vector<BigInt> div(nb);
  for (const auto& t : divisor.terms_) div[static_cast<std::size_t>((t.first - b_lo) / stride)] = t.second;

  std::vector<BigInt> q(na - nb + 1);
  const BigInt& lead = div.back();
  for (std::size_t i = na; i-- > nb - 1;) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) throw Error(ErrorKind::InexactDivision, "leading coefficient does not divide");
    BigInt c = rem[i] / lead;
    const std::size_t shift = i - (nb - 1);
    for (std::size_t j = 0; j < nb; ++j) rem[shift + j] -= c * div[j];
    q[shift] = std::move(c);
  }
  for (std::size_t i = 0; i + 1 < nb; ++i)
    if (rem[i] != 0) throw Error(ErrorKind::InexactDivision, "nonzero remainder");

  const int q_lo = a_lo - b_lo;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] != 0) quotient.terms_.emplace_back(q_lo + static_cast<int>(i) * stride, std::move(q[i]));
  return quotient;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const char v = variable_char(var_);
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->second < 0;
    if (negative) out += '-';
    else if (!out.empty()) out += '+';
    out += (negative ? BigInt(-it->second) : it->second).str();
    out += '*';
    out += v;
    out += '^';
    out += exponent_text(it->first);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, Variable var) {
  const char v = variable_char(var);
  std::vector<Term> terms;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::MalformedInput, "polynomial '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](bool allow_sign) -> std::string {
    std::string s;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) s += text[i++];
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) s += text[i++];
    if (s.empty() || s == "-" || s == "+") fail("expected integer");
    return s;
  };

  skip_ws();
  if (text.substr(i) == "0") return LaurentPolynomial(var);
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    BigInt coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = BigInt(read_int(false));
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    int quarter = 0;
    if (i < text.size() && text[i] == v) {
      ++i;
      quarter = 4;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i < text.size() && text[i] == '(') {
          ++i;
          const long num = std::stol(read_int(true));
          long den = 1;
          if (i < text.size() && text[i] == '/') {
            ++i;
            den = std::stol(read_int(false));
          }
          if (i >= text.size() || text[i] != ')') fail("missing ')'");
          ++i;
          if (den != 1 && den != 2 && den != 4) fail("unsupported exponent denominator");
          quarter = static_cast<int>(num * (4 / den));
        } else {
          quarter = 4 * std::stoi(read_int(true));
        }
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    terms.emplace_back(quarter, sign * coeff);
  }
  return from_terms(var, std::move(terms));
}

LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op) {
  return op == ArithOp::add ? a + b : a * b;
}

}  // namespace knotfold
