#include "cli/report.hpp"

#include <stdexcept>

namespace nagell::cli {
namespace {

Integer integer_from(const json& j) { return parse_integer(j.get<std::string>()); }

std::strong_ordering ordering_from(const std::string& s) {
  if (s == "less") return std::strong_ordering::less;
  if (s == "equal") return std::strong_ordering::equal;
  if (s == "greater") return std::strong_ordering::greater;
  throw std::runtime_error("unknown ordering '" + s + "'");
}

Requirement requirement_from(const std::string& s) {
  if (s == "greater") return Requirement::Greater;
  if (s == "greater_or_equal") return Requirement::GreaterOrEqual;
  throw std::runtime_error("unknown requirement '" + s + "'");
}

BoundMethod method_from(const std::string& s) {
  if (s == "sandwich") return BoundMethod::Sandwich;
  if (s == "hypergeometric") return BoundMethod::Hypergeometric;
  throw std::runtime_error("unknown method '" + s + "'");
}

}  // namespace

json integers_to_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

json to_json(const EquationSpec& spec) {
  return {{"base", spec.base()},
          {"g", integers_to_json(spec.perturbation().coeffs())},
          {"n_min", spec.n_min()},
          {"display", spec.display()}};
}

json to_json(const PowerCheck& check) {
  return {{"a", to_decimal(check.a)},
          {"y", check.base},
          {"num_exp", check.num_exp},
          {"den", check.den},
          {"v", to_decimal(check.v)},
          {"requirement", to_string(check.requirement)},
          {"verdict", to_string(check.verdict)}};
}

json to_json(const BoundCertificate& cert) {
  json j{{"method", to_string(cert.method)},
         {"parity", cert.parity},
         {"t_min", cert.t_min},
         {"t0", cert.t0},
         {"exponent_threshold", cert.exponent_threshold()},
         {"coeff_bound", to_decimal(cert.coeff_bound)},
         {"degree", cert.degree},
         {"envelope", integers_to_json(cert.envelope.coeffs())},
         {"lambda", nullptr},
         {"validity_floor", cert.validity_floor},
         {"base_check", to_json(cert.base_check)},
         {"induction_check", to_json(cert.induction_check)},
         {"zero_hits", cert.zero_hits}};
  if (cert.lambda) {
    j["lambda"] = {{"y", cert.lambda->base},
                   {"lambda_num", cert.lambda->num},
                   {"lambda_den", cert.lambda->den}};
  }
  return j;
}

json to_json(const Solution& s) {
  json j{{"x", to_decimal(s.x)}, {"N", s.exponent}};
  if (s.triangular) {
    j["n"] = s.triangular->n;
    j["m"] = to_decimal(s.triangular->m);
  }
  return j;
}

json to_json(const SolveReport& report) {
  json subcases = json::array();
  for (const auto& sub : report.subcases) {
    subcases.push_back({{"parity", sub.subcase.parity},
                        {"t_min", sub.subcase.t_min},
                        {"g_t", integers_to_json(sub.subcase.g_t.coeffs())},
                        {"certificate", sub.certificate ? to_json(*sub.certificate) : json(nullptr)},
                        {"diagnostic", sub.diagnostic},
                        {"scanned", {{"t_lo", sub.scanned.t_lo}, {"t_hi_exclusive", sub.scanned.t_hi}}}});
  }
  json solutions = json::array();
  for (const auto& s : report.solutions) solutions.push_back(to_json(s));
  return {{"equation", to_json(report.spec)},
          {"subcases", std::move(subcases)},
          {"solutions", std::move(solutions)},
          {"complete", report.complete}};
}

json to_json(const ConstructionState& state) {
  json solutions = json::array();
  for (const auto& s : state.solutions) solutions.push_back({{"x", to_decimal(s.x)}, {"n", s.n}});
  return {{"nodes", state.nodes},
          {"coefficients", integers_to_json(state.coefficients)},
          {"d", {{"coeffs", integers_to_json(state.d().coeffs())},
                 {"falling_factorial", state.falling_factorial_form()}}},
          {"solutions", std::move(solutions)}};
}

PowerCheck power_check_from_json(const json& j) {
  return PowerCheck{integer_from(j.at("a")),
                    j.at("y").get<unsigned long>(),
                    j.at("num_exp").get<unsigned long>(),
                    j.at("den").get<unsigned long>(),
                    integer_from(j.at("v")),
                    requirement_from(j.at("requirement").get<std::string>()),
                    ordering_from(j.at("verdict").get<std::string>())};
}

BoundCertificate certificate_from_json(const json& j) {
  std::vector<Integer> envelope;
  for (const auto& c : j.at("envelope")) envelope.push_back(integer_from(c));
  std::optional<LambdaEntry> lambda;
  if (!j.at("lambda").is_null()) {
    const auto& l = j.at("lambda");
    lambda = LambdaEntry{l.at("y").get<unsigned long>(), l.at("lambda_num").get<unsigned long>(),
                         l.at("lambda_den").get<unsigned long>()};
  }
  return BoundCertificate{method_from(j.at("method").get<std::string>()),
                          j.at("parity").get<int>(),
                          j.at("t_min").get<long>(),
                          j.at("t0").get<long>(),
                          integer_from(j.at("coeff_bound")),
                          j.at("degree").get<int>(),
                          IntPoly(std::move(envelope)),
                          lambda,
                          j.at("validity_floor").get<long>(),
                          power_check_from_json(j.at("base_check")),
                          power_check_from_json(j.at("induction_check")),
                          j.at("zero_hits").get<std::vector<long>>()};
}

std::size_t replay_document(const json& doc) {
  std::size_t replayed = 0;
  for (const auto& report : doc.at("reports")) {
    const auto& eq = report.at("equation");
    std::vector<Integer> g;
    for (const auto& c : eq.at("g")) g.push_back(integer_from(c));
    const EquationSpec spec(eq.at("base").get<unsigned long>(), IntPoly(std::move(g)),
                            eq.at("n_min").get<long>());
    for (const auto& sub : report.at("subcases")) {
      if (sub.at("certificate").is_null()) continue;
      const BoundCertificate cert = certificate_from_json(sub.at("certificate"));
      if (!cert.replay() || !verify_certificate(make_subcase(spec, cert.parity), cert)) {
        throw std::runtime_error("certificate for parity " + std::to_string(cert.parity) +
                                 " of " + report.at("equation").at("display").get<std::string>() +
                                 " does not replay");
      }
      ++replayed;
    }
  }
  return replayed;
}

}  // namespace nagell::cli
