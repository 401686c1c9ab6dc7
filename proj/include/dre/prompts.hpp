#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Prompt templates used across the engine. Placeholders are written as
// {name} and filled with fill_template(); templates with a fixed contract
// (system prompt, summary model, evidence judge, tool schemas) must not be
// edited casually — downstream parsing depends on their output format.
namespace dre::prompts {

// Replaces every {key} occurrence; unknown placeholders are left intact.
std::string fill_template(std::string_view tpl,
                          const std::vector<std::pair<std::string, std::string>>& values);

// Default system prompt for research rollouts. Overridable per config.
const char* system_prompt();

// Goal-conditioned page summarization; output is JSON with "rational",
// "evidence", and "summary" fields. Placeholders: {content}, {goal}.
const char* summary_prompt();

// Pairwise evidence-completeness judge; output is JSON {"winner","reason"}.
// Placeholders: {question}, {evidence_a}, {evidence_b}.
const char* evidence_judge_prompt();

// Canonical function-calling schema advertisement for the search and visit
// tools (array form, two entries).
const char* tool_schemas_json();

// --- synthesis pipeline templates (engine-defined, documented here) -------

// {entity}, {pages} -> JSON {"summary": str, "aliases": [str]}
const char* entity_summary_prompt();

// {entity}, {summary} -> JSON [{"name","relation","rationale","score"}]
const char* next_hop_prompt();

// {entity}, {summary} -> plain anonymized description. Names are forbidden;
// numeric attributes (prevalence, counts, dosages) must be preserved.
const char* obfuscation_prompt();

// {descriptions}, {relations} -> plain question text ending in a single ask.
const char* compose_question_prompt();

// {question}, {answer}, {chain} -> JSON {"sound","unique","reason"}
const char* quality_judge_prompt();

// {prediction}, {gold} -> JSON {"match": bool}
const char* answer_judge_prompt();

// {turn} -> JSON {"proposal": str|null}; optional classifier backend for the
// over-evidence monitor.
const char* proposal_classifier_prompt();

}  // namespace dre::prompts
