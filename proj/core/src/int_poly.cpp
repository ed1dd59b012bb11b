#include "nagell/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nagell {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::linear_factor(const Integer& root) {
  return IntPoly(std::vector<Integer>{-root, Integer(1)});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

IntPoly IntPoly::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN, UTF-8 encoded.
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      s.push_back('-');
      i += 2;
    } else if (text[i] != ' ' && text[i] != '\t') {
      s.push_back(text[i]);
    }
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  std::vector<Integer> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = s.find(',', start);
    coeffs.push_back(parse_integer(std::string_view(s).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return IntPoly(std::move(coeffs));
}

Integer IntPoly::operator()(const Integer& v) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::compose_linear(const Integer& a, const Integer& b) const {
  const IntPoly inner(std::vector<Integer>{b, a});
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

IntPoly IntPoly::abs_envelope() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(abs(c));
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(coeffs_[i]);
  }
  return out;
}

std::string IntPoly::display(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& p) {
  std::vector<Integer> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(-c);
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly operator*(const Integer& k, const IntPoly& p) { return IntPoly::constant(k) * p; }

bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

Integer eval_poly(const IntPoly& p, const Integer& v) { return p(v); }

namespace {

// Breakpoints lo = b0 < b1 < ... < bk = hi such that on each [b_i, b_{i+1}]
// either p is monotone on the reals or the piece has length one.
std::vector<Integer> monotone_breaks(const IntPoly& p, const Integer& lo, const Integer& hi) {
  if (p.degree() <= 1 || lo >= hi) return {lo, hi};

  const IntPoly dp = p.derivative();
  const std::vector<Integer> inner = monotone_breaks(dp, lo, hi);
  std::vector<Integer> out{lo};
  auto push = [&out](const Integer& v) {
    if (v > out.back()) out.push_back(v);
  };
  for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
    const Integer& a = inner[i];
    const Integer& b = inner[i + 1];
    const int sa = sgn(dp(a));
    const int sb = sgn(dp(b));
    if (b - a > 1 && sa * sb < 0) {
      // dp is monotone on [a, b] and changes sign once: find the last c
      // with sgn(dp(c)) == sa. p is monotone on [a, c] and on [c+1, b].
      Integer left = a;
      Integer right = b;
      while (right - left > 1) {
        Integer mid = (left + right) / 2;
        if (sgn(dp(mid)) == sa) left = mid;
        else right = mid;
      }
      push(left);
      push(left + 1);
    }
    push(b);
  }
  return out;
}

}  // namespace

std::vector<Integer> integer_roots(const IntPoly& p, const Integer& lo, const Integer& hi) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  std::vector<Integer> roots;
  if (lo > hi) return roots;
  auto record = [&roots](const Integer& r) {
    if (roots.empty() || roots.back() < r) roots.push_back(r);
  };

  const std::vector<Integer> breaks = monotone_breaks(p, lo, hi);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const Integer& a = breaks[i];
    const Integer& b = breaks[i + 1];
    const Integer pa = p(a);
    const Integer pb = p(b);
    if (sgn(pa) == 0) record(a);
    if (sgn(pa) * sgn(pb) < 0 && b - a > 1) {
      Integer left = a;
      Integer right = b;
      const int sl = sgn(pa);
      while (right - left > 1) {
        Integer mid = (left + right) / 2;
        const int sm = sgn(p(mid));
        if (sm == 0) {
          left = mid;
          break;
        }
        if (sm == sl) left = mid;
        else right = mid;
      }
      if (sgn(p(left)) == 0) record(left);
    }
    if (sgn(pb) == 0) record(b);
  }
  return roots;
}

std::vector<Integer> integer_roots_from(const IntPoly& p, const Integer& lo) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots_from: zero polynomial");
  if (p.degree() == 0) return {};
  Integer max_abs = 0;
  for (const auto& c : p.coeffs()) max_abs = std::max(max_abs, Integer(abs(c)));
  return integer_roots(p, lo, max_abs + 1);
}

}  // namespace nagell
