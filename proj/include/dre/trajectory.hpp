#pragma once

#include "dre/jsonl.hpp"
#include "dre/tokenizer.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dre::trajectory {

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

enum class SegmentKind { Input, Reasoning, ToolCall, ToolResponse, Answer };

const char* to_string(SegmentKind kind);
SegmentKind segment_kind_from_string(std::string_view s);

// One delimiter-bounded slice of a transcript. `text` is the content between
// the delimiters; the tags themselves are never stored.
struct Segment {
  SegmentKind kind = SegmentKind::Input;
  std::string text;
  int turn_index = 0;  // 0 for Input; the answer carries last turn + 1

  bool operator==(const Segment&) const = default;
};

enum class Termination { Answered, BudgetExhausted, MonitorForced, FormatFailure };

const char* to_string(Termination t);
Termination termination_from_string(std::string_view s);

// Full record of one rollout: input, alternating reasoning / tool call /
// tool response turns, and an optional final answer. Immutable by
// convention once built.
struct Trajectory {
  std::string question_id;
  std::vector<Segment> segments;
  int turn_count = 0;  // number of tool-call segments
  Termination termination = Termination::Answered;
  std::vector<std::string> violations;  // parse/grammar problems, if any

  bool operator==(const Trajectory&) const = default;

  const Segment* find_answer() const;
  const Segment* input() const;
};

// Tags wrapping each segment kind in raw transcripts. Defaults follow the
// conventional think / tool_call / tool_response / answer tag set.
struct DelimiterConfig {
  std::string think_open = "<think>";
  std::string think_close = "</think>";
  std::string tool_call_open = "<tool_call>";
  std::string tool_call_close = "</tool_call>";
  std::string tool_response_open = "<tool_response>";
  std::string tool_response_close = "</tool_response>";
  std::string answer_open = "<answer>";
  std::string answer_close = "</answer>";
};

const DelimiterConfig& default_delimiters();

// ---------------------------------------------------------------------------
// Parsing and rendering
// ---------------------------------------------------------------------------

// Parses a full model-side transcript (tool responses already spliced in)
// into segments. Leading untagged text becomes the Input segment; when the
// transcript starts at a tag, `question` supplies the input instead.
//
// Grammar violations never throw: the trajectory keeps best-effort segments,
// records each violation, and is marked Termination::FormatFailure. A valid
// transcript without an answer parses as BudgetExhausted.
Trajectory parse_transcript(std::string_view raw, std::string_view question,
                            std::string_view question_id = "",
                            const DelimiterConfig& delims = default_delimiters());

// Inverse of parse_transcript for canonical (glue-free) transcripts:
// render(parse(t)) == t.
std::string render_transcript(const Trajectory& traj,
                              const DelimiterConfig& delims = default_delimiters());

// Checks segment ordering against Input (Reasoning ToolCall ToolResponse)*
// Reasoning? Answer?, tool-call/response pairing, and uniqueness rules.
std::vector<std::string> grammar_violations(const Trajectory& traj);

// ---------------------------------------------------------------------------
// Format verdict
// ---------------------------------------------------------------------------

struct FormatLimits {
  int max_turns = 30;
  std::size_t context_budget = 40000;  // tokens over all segment text
};

struct FormatVerdict {
  bool pass = false;
  std::vector<std::string> violations;
};

// The format predicate used for reward scoring: grammar holds, every tool
// call body is schema-valid, an answer exists, and both budget limits hold.
// Deterministic and pure; returns verdicts, never throws.
FormatVerdict validate_format(const Trajectory& traj, const FormatLimits& limits,
                              const Tokenizer& tokenizer = whitespace_tokenizer());

// ---------------------------------------------------------------------------
// Token spans and loss masks
// ---------------------------------------------------------------------------

// Alignment between a trajectory and its flat token sequence. Spans are
// ordered, non-overlapping, and partition the tokens; segment i maps to
// spans[i].
struct SegmentSpan {
  std::size_t segment_index = 0;
  std::size_t token_start = 0;
  std::size_t token_end = 0;  // exclusive

  bool operator==(const SegmentSpan&) const = default;
};

struct TokenSpanMap {
  std::vector<std::string> tokens;
  std::vector<SegmentSpan> spans;

  bool operator==(const TokenSpanMap&) const = default;
};

TokenSpanMap build_span_map(const Trajectory& traj,
                            const Tokenizer& tokenizer = whitespace_tokenizer());

// Per-token binary mask: 1 on model-generated spans (Reasoning, ToolCall,
// Answer), 0 on Input and ToolResponse spans.
using LossMask = std::vector<std::uint8_t>;

// Throws std::invalid_argument when span_map does not partition its tokens
// or does not cover every segment of traj.
LossMask compute_loss_mask(const Trajectory& traj, const TokenSpanMap& span_map);

// ---------------------------------------------------------------------------
// Record serialization (one JSON object per line, UTF-8)
// ---------------------------------------------------------------------------

jsonl::json to_json(const Trajectory& traj);

// Throws std::invalid_argument on missing/ill-typed fields. Unknown keys are
// ignored so sidecar metadata can ride along.
Trajectory trajectory_from_json(const jsonl::json& j);

std::string encode_records(const std::vector<Trajectory>& trajs);

struct DecodeResult {
  std::vector<Trajectory> records;
  std::vector<jsonl::LineError> errors;
};

DecodeResult decode_records(std::string_view text);

}  // namespace dre::trajectory
