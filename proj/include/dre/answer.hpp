#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace dre {

// Canonical form of a final or candidate answer. For multiple-choice
// content the leading choice letter is lifted out; `text` always holds the
// case-folded, whitespace-collapsed surface form.
struct NormalizedAnswer {
  std::optional<char> letter;  // upper-case choice letter, when present
  std::string text;
};

// Case-folds, collapses whitespace runs, strips edge punctuation, and
// extracts a leading choice letter ("(D) ...", "B: ...", bare "d").
NormalizedAnswer normalize_answer(std::string_view raw);

// Letter precedence: when both sides carry a letter, letters decide;
// otherwise normalized text equality.
bool answers_equal(const NormalizedAnswer& a, const NormalizedAnswer& b);

struct GoldRecord {
  enum class Kind { MultipleChoice, OpenEnded };
  Kind kind = Kind::MultipleChoice;
  std::string value;
};

std::string to_string(GoldRecord::Kind kind);
GoldRecord::Kind gold_kind_from_string(std::string_view s);

}  // namespace dre
