#pragma once

#include "dre/answer.hpp"
#include "dre/backend.hpp"
#include "dre/jsonl.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

// Over-evidence monitor: a per-rollout state machine that caches proposed
// answers, counts how long the cache has gone unchanged, and forces early
// termination with the cached answer once verification has stalled.
namespace dre::oem {

struct Proposal {
  NormalizedAnswer answer;
  std::string surface;  // raw matched form, used when splicing the answer
};

// Reads one assistant turn and extracts a candidate final answer, if any.
class ProposalExtractor {
 public:
  virtual ~ProposalExtractor() = default;
  virtual std::optional<Proposal> extract(const std::string& turn_text) const = 0;
};

// Pattern rules over candidate-answer phrasings and choice-letter mentions.
// Tool call/response blocks are ignored; the last proposal in a turn wins.
class RuleBasedExtractor final : public ProposalExtractor {
 public:
  std::optional<Proposal> extract(const std::string& turn_text) const override;
};

const RuleBasedExtractor& default_extractor();

// Classifier-backed extraction for setups where rules are too blunt.
class BackendExtractor final : public ProposalExtractor {
 public:
  explicit BackendExtractor(ModelBackend& backend) : backend_(&backend) {}
  std::optional<Proposal> extract(const std::string& turn_text) const override;

 private:
  ModelBackend* backend_;
};

struct MonitorConfig {
  int stall_threshold = 3;   // consecutive unchanged-cache turns before firing
  int hard_cap_turn = 20;    // hard stop once a cached answer exists
  const ProposalExtractor* extractor = nullptr;  // null -> default rules
};

struct MonitorEvent {
  int turn = 0;
  std::string action;  // set | unchanged | replaced | none | fired
  std::string cached;
};

jsonl::json to_json(const MonitorEvent& event);
MonitorEvent monitor_event_from_json(const jsonl::json& j);

struct MonitorState {
  std::optional<NormalizedAnswer> cached_answer;
  std::string cached_surface;
  int unchanged_streak = 0;
  int turns_observed = 0;
  bool fired = false;
  std::vector<MonitorEvent> events;
};

// Folds one completed turn (called before its tool executes) into the state:
// a new proposal replaces the cache and resets the streak, a repeat extends
// the streak, no proposal leaves the streak untouched.
MonitorState observe(MonitorState state, const std::string& turn_output,
                     const MonitorConfig& config);

struct StopDecision {
  bool stop = false;
  std::optional<NormalizedAnswer> answer;
  std::string surface;
};

// Fires on a stalled cache (streak >= threshold) or at the hard cap when a
// cached answer exists. Never fires before any proposal has been seen.
StopDecision should_terminate(const MonitorState& state, const MonitorConfig& config);

// Marks the state fired and appends the "fired" event.
MonitorState mark_fired(MonitorState state);

}  // namespace dre::oem
