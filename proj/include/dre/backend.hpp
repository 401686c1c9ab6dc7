#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dre {

// One chat message. Roles follow chat-completion conventions:
// "system", "user", "assistant", "tool".
struct Message {
  std::string role;
  std::string content;
};

struct SamplingParams {
  double temperature = 1.0;
  int max_tokens = 0;  // 0 = provider default
  std::uint64_t seed = 0;
};

class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stateless text-generation client: full message list in, assistant text
// out. Implementations must be safe for concurrent use.
class ModelBackend {
 public:
  virtual ~ModelBackend() = default;

  virtual std::string generate(const std::vector<Message>& messages,
                               const SamplingParams& sampling) = 0;

  virtual bool supports_logprobs() const { return false; }
};

// Chat-completion client over HTTP. Endpoint and model come from config;
// the API key is read from an environment variable, never from files.
struct HttpBackendConfig {
  std::string base_url;  // e.g. "https://api.example.com"
  std::string path = "/v1/chat/completions";
  std::string model;
  std::string api_key;  // resolved from the environment by the caller
  int timeout_seconds = 120;
};

class HttpModelBackend final : public ModelBackend {
 public:
  explicit HttpModelBackend(HttpBackendConfig config);

  std::string generate(const std::vector<Message>& messages,
                       const SamplingParams& sampling) override;

 private:
  HttpBackendConfig config_;
};

// Mixes a stream index into a base seed; used to derive per-rollout seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace dre
