#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "token_spectra/graph.hpp"

namespace token_spectra {

enum class Verdict { Pass, Fail, PreconditionUnmet };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

/// Outcome of one check on one instance. Failures are data, not exceptions.
struct Certificate {
  std::string check_id;
  std::size_t graph_n = 0;
  std::string edges_hash;  // Graph::fingerprint_hex of the instance checked
  Verdict verdict = Verdict::Fail;
  nlohmann::json witnesses = nlohmann::json::object();
  nlohmann::json tolerances = nlohmann::json::object();
  std::int64_t runtime_ms = 0;

  bool passed() const noexcept { return verdict == Verdict::Pass; }
};

// {"check_id","graph":{"n","edges_hash"},"verdict","witnesses","tolerances","runtime_ms"}
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);

// Starts a certificate for `g` and stamps the elapsed time on finish().
class CertificateBuilder {
 public:
  CertificateBuilder(std::string check_id, const Graph& g);

  nlohmann::json& witnesses() { return cert_.witnesses; }
  nlohmann::json& tolerances() { return cert_.tolerances; }
  Certificate finish(Verdict v);

 private:
  Certificate cert_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace token_spectra
