#pragma once

// Grows polynomials D(n) such that x^2 + D(n) = 2^n has many prescribed
// solutions. D is kept in Newton form over the nodes 3, 4, 5, ...:
//
//   D = F_k + c_k F_(k-1) + ... + c_2 F_3 + 7,   F_j = (n-3)(n-4)...(n-j+1)...
//
// where each F is the monic product over a prefix of the nodes. Adding the
// next node multiplies the leading product by (n - node), so every added
// term vanishes at the earlier nodes and their solutions survive.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagell/int_poly.hpp"

namespace nagell {

struct PowerSolution {
  Integer x;
  long n;
  friend bool operator==(const PowerSolution&, const PowerSolution&) = default;
};

struct ConstructionState {
  std::vector<long> nodes;
  std::vector<Integer> coefficients;  // c_2, c_3, ... in the order chosen
  IntPoly leading;                    // monic product over all nodes
  IntPoly lower;                      // D - leading
  std::vector<PowerSolution> solutions;

  IntPoly d() const { return leading + lower; }
  /// e.g. "(n-3)(n-4)(n-5)(n-6) + 8(n-3)(n-4)(n-5) + 7"
  std::string falling_factorial_form() const;
};

struct Candidate {
  Integer x;
  Integer c;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct CoefficientChoice {
  long node;
  Integer modulus;  // prod (node - s) over existing nodes
  Integer target;   // 2^node - lower(node)
  std::vector<Candidate> candidates;  // c*modulus + x^2 == target, ascending x
};

class NoResidueSolution : public std::runtime_error {
 public:
  NoResidueSolution(const std::string& what, ConstructionState partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const ConstructionState& partial() const { return partial_; }

 private:
  ConstructionState partial_;
};

class ConstructionVerificationFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// D = (n-3)(n-4)(n-5) + 7 with solutions (1,3), (3,4), (5,5).
ConstructionState seed_state();

/// Candidates x in [0, x_cap] with x^2 == target (mod modulus). x_cap
/// defaults to modulus + isqrt(|target|). Throws NoResidueSolution when
/// the congruence has no root, std::invalid_argument when node is not past
/// every existing node.
CoefficientChoice propose_coefficient(const ConstructionState& state, long node,
                                      std::optional<Integer> x_cap = std::nullopt);

/// Appends the node with coefficient choice.c, records (choice.x, node)
/// and re-verifies every recorded solution.
ConstructionState extend(const ConstructionState& state, long node, const Candidate& choice);

enum class ChoicePolicy { SmallestX, Explicit };

/// Runs `steps` propose/extend rounds on nodes max+1, max+2, ... With
/// Explicit, `choices` must hold at least `steps` entries.
ConstructionState build_family(int steps, ChoicePolicy policy,
                               std::span<const Candidate> choices = {});

/// x^2 + D(n) == 2^n.
bool satisfies(const IntPoly& d, const PowerSolution& s);

}  // namespace nagell
