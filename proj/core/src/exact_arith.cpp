#include "nagell/exact_arith.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nagell {
namespace {

constexpr unsigned long kFilterModulus = 64UL * 9 * 5 * 7 * 11 * 13;

class SquareResidueTable {
 public:
  SquareResidueTable() : bits_((kFilterModulus + 63) / 64, 0) {
    for (std::uint64_t x = 0; x < kFilterModulus; ++x) {
      const std::uint64_t r = (x * x) % kFilterModulus;
      bits_[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
  }

  bool contains(unsigned long r) const {
    return ((bits_[r >> 6] >> (r & 63)) & 1U) != 0;
  }

 private:
  std::vector<std::uint64_t> bits_;
};

const SquareResidueTable& residue_table() {
  static const SquareResidueTable table;
  return table;
}

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void require_nonnegative(const Integer& n, const char* what) {
  if (sgn(n) < 0) throw std::domain_error(std::string(what) + " must be nonnegative");
}

}  // namespace

Integer isqrt(const Integer& n) {
  require_nonnegative(n, "isqrt argument");
  if (n < 2) return n;

  // Start above the root; Newton steps then decrease monotonically to it.
  // For wide n the start comes from the root of the top half: with
  // r = isqrt(n >> 2k), (r+1)^2 4^k > n, and r+1 already carries about
  // bits/4 correct bits.
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (n.fits_ulong_p() && bits <= 64) {
    const std::uint64_t v = n.get_ui();
    std::uint64_t r = std::uint64_t{1} << ((bits + 1) / 2);
    for (std::uint64_t next = (r + v / r) / 2; next < r; next = (r + v / r) / 2) r = next;
    return Integer(static_cast<unsigned long>(r));
  }
  Integer x;
  if (bits > 256) {
    const auto k = static_cast<mp_bitcnt_t>(bits / 4);
    x = (isqrt(n >> (2 * k)) + 1) << k;
  } else {
    x = Integer(1) << static_cast<mp_bitcnt_t>((bits + 1) / 2);
  }
  for (;;) {
    Integer next = (x + n / x) >> 1;
    if (next >= x) break;
    x = std::move(next);
  }
  while (x * x > n) --x;
  for (Integer up = x + 1; up * up <= n; up = x + 1) x = up;
  return x;
}

bool may_be_square(const Integer& n) {
  if (sgn(n) < 0) return false;
  return residue_table().contains(mpz_fdiv_ui(n.get_mpz_t(), kFilterModulus));
}

SquareTest is_perfect_square(const Integer& n) {
  require_nonnegative(n, "is_perfect_square argument");
  SquareTest out;
  out.root = isqrt(n);
  out.is_square = may_be_square(n) && out.root * out.root == n;
  return out;
}

Integer pow_nat(const Integer& base, unsigned long exp) {
  if (exp == 0 && sgn(base) == 0) throw std::domain_error("0^0 is undefined");
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::strong_ordering cmp_scaled_power(const Integer& a, const Integer& y,
                                      unsigned long num_exp, unsigned long den,
                                      const Integer& v) {
  if (den == 0) throw std::invalid_argument("cmp_scaled_power: den must be positive");
  require_nonnegative(a, "cmp_scaled_power factor");
  require_nonnegative(y, "cmp_scaled_power base");
  require_nonnegative(v, "cmp_scaled_power right side");

  const unsigned long g = std::gcd(num_exp, den);
  num_exp /= g;
  den /= g;

  const Integer lhs = pow_nat(a, den) * pow_nat(y, num_exp);
  const Integer rhs = pow_nat(v, den);
  return to_ordering(cmp(lhs, rhs));
}

std::string to_decimal(const Integer& n) { return n.get_str(10); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t begin = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) begin = 1;
  if (begin == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t i = begin; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace nagell
