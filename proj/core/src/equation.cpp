#include "nagell/equation.hpp"

#include <stdexcept>

namespace nagell {

EquationSpec::EquationSpec(unsigned long base, IntPoly perturbation, long n_min)
    : base_(base), g_(std::move(perturbation)), n_min_(n_min) {
  if (base_ < 2) throw std::invalid_argument("equation base must be at least 2");
  if (n_min_ < 0) throw std::invalid_argument("exponent floor must be nonnegative");
}

Integer EquationSpec::rhs(long exponent) const {
  return pow_nat(Integer(base_), static_cast<unsigned long>(exponent)) + g_(exponent);
}

std::string EquationSpec::display() const {
  std::string out = "x^2 = " + std::to_string(base_) + "^N";
  if (g_.is_zero()) return out;
  const std::string g = g_.display("N");
  if (g.front() == '-') return out + " - " + g.substr(1);
  return out + " + " + g;
}

Integer SubCase::rhs(long t) const {
  return pow_nat(Integer(parent.base()), static_cast<unsigned long>(exponent(t))) + g_t(t);
}

SubCase make_subcase(const EquationSpec& spec, int parity) {
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  long t_min = 0;
  if (spec.n_min() > parity) t_min = (spec.n_min() - parity + 1) / 2;
  return SubCase{spec, parity, t_min, spec.perturbation().compose_linear(2, parity)};
}

std::array<SubCase, 2> parity_split(const EquationSpec& spec) {
  return {make_subcase(spec, 0), make_subcase(spec, 1)};
}

std::pair<Integer, long> TriangularMap::forward(long n, const Integer& m) const {
  return {2 * m + 1, n + 3};
}

TriangularPoint TriangularMap::backward(const Integer& x, long exponent) const {
  if (mpz_even_p(x.get_mpz_t())) throw std::invalid_argument("triangular back-map needs odd x");
  return {exponent - 3, Integer((x - 1) / 2)};
}

std::pair<EquationSpec, TriangularMap> triangular_transform(int sign, long n_min) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (n_min < 0) throw std::invalid_argument("n_min must be nonnegative");
  // x^2 = 2^N + sign*8(N - 3) + 1
  IntPoly g{1 - 24 * sign, 8 * sign};
  return {EquationSpec(2, std::move(g), n_min + 3), TriangularMap{sign}};
}

}  // namespace nagell
