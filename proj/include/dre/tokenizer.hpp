#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dre {

// Byte range of one token within the original text (end exclusive).
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Pluggable tokenizer. Mask semantics and chunking only need token
// boundaries, never a model vocabulary.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;

  virtual std::vector<TokenSpan> token_spans(std::string_view text) const = 0;

  std::vector<std::string> tokenize(std::string_view text) const;
  std::size_t count(std::string_view text) const;
};

// Splits on runs of ASCII whitespace. Default for tests and exports.
class WhitespaceTokenizer final : public Tokenizer {
 public:
  std::vector<TokenSpan> token_spans(std::string_view text) const override;
};

const Tokenizer& whitespace_tokenizer();

}  // namespace dre
