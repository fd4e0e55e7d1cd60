#include "token_spectra/certificate.hpp"

#include "token_spectra/error.hpp"

namespace token_spectra {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::PreconditionUnmet: return "precondition_unmet";
  }
  return "fail";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "precondition_unmet") return Verdict::PreconditionUnmet;
  return std::nullopt;
}

void to_json(nlohmann::json& j, const Certificate& c) {
  j = nlohmann::json{{"check_id", c.check_id},
                     {"graph", {{"n", c.graph_n}, {"edges_hash", c.edges_hash}}},
                     {"verdict", std::string(to_string(c.verdict))},
                     {"witnesses", c.witnesses},
                     {"tolerances", c.tolerances},
                     {"runtime_ms", c.runtime_ms}};
}

void from_json(const nlohmann::json& j, Certificate& c) {
  c.check_id = j.at("check_id").get<std::string>();
  c.graph_n = j.at("graph").at("n").get<std::size_t>();
  c.edges_hash = j.at("graph").at("edges_hash").get<std::string>();
  const auto v = parse_verdict(j.at("verdict").get<std::string>());
  if (!v) throw Error(ErrorCode::ParseError, "unknown verdict");
  c.verdict = *v;
  c.witnesses = j.at("witnesses");
  c.tolerances = j.at("tolerances");
  c.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
}

CertificateBuilder::CertificateBuilder(std::string check_id, const Graph& g)
    : start_(std::chrono::steady_clock::now()) {
  cert_.check_id = std::move(check_id);
  cert_.graph_n = g.order();
  cert_.edges_hash = g.fingerprint_hex();
}

Certificate CertificateBuilder::finish(Verdict v) {
  cert_.verdict = v;
  cert_.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  return std::move(cert_);
}

}  // namespace token_spectra
