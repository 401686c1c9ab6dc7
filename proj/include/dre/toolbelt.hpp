#pragma once

#include "dre/backend.hpp"
#include "dre/tokenizer.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dre::toolbelt {

// ---------------------------------------------------------------------------
// Tool-call schema
// ---------------------------------------------------------------------------

enum class ToolName { Search, Visit };

struct SearchArgs {
  std::vector<std::string> queries;  // 1..5 non-empty strings
};

struct VisitArgs {
  std::vector<std::string> urls;  // 1..3 non-empty strings
  std::optional<std::string> goal;
};

struct ToolRequest {
  ToolName name = ToolName::Search;
  std::optional<SearchArgs> search;
  std::optional<VisitArgs> visit;
};

enum class ToolCallError { None, ParseError, UnknownTool, SchemaViolation };

const char* to_string(ToolCallError e);

struct ParsedToolCall {
  ToolCallError error = ToolCallError::None;
  std::string message;
  std::optional<ToolRequest> request;

  bool ok() const { return error == ToolCallError::None; }
};

inline constexpr std::size_t kMinQueries = 1;
inline constexpr std::size_t kMaxQueries = 5;
inline constexpr std::size_t kMinUrls = 1;
inline constexpr std::size_t kMaxUrls = 3;

// Validates the raw text of a tool_call segment against the function-calling
// schema: {"name": "search"|"visit", "arguments": {...}} with "query" as a
// 1..5 string array for search and "url" as a 1..3 string array (plus an
// optional "goal") for visit. Never throws.
ParsedToolCall validate_tool_call(const std::string& body);

// ---------------------------------------------------------------------------
// Providers
// ---------------------------------------------------------------------------

struct SearchHit {
  std::string url;
  std::string title;
  std::string snippet;
};

class ToolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Query-in / ranked-results-out search plus url-in / full-text-out page
// fetch, behind one interface. Implementations must be concurrency-safe.
class WebBackend {
 public:
  virtual ~WebBackend() = default;

  virtual std::vector<SearchHit> search(const std::string& query) = 0;
  virtual std::string fetch_page(const std::string& url) = 0;
};

struct RetryPolicy {
  int retries = 0;       // extra attempts after the first
  int backoff_ms = 0;    // doubled per retry
};

inline RetryPolicy live_retry_policy() { return RetryPolicy{2, 250}; }

// Deterministic token bucket; time is injected so rate limits are testable.
class TokenBucket {
 public:
  TokenBucket(double capacity, double refill_per_second);

  bool try_acquire(double now_seconds, double tokens = 1.0);
  double available(double now_seconds) const;

 private:
  void refill(double now_seconds);

  double capacity_;
  double refill_per_second_;
  double level_;
  double last_refill_ = 0.0;
};

// ---------------------------------------------------------------------------
// Page cache
// ---------------------------------------------------------------------------

// url -> fetched page content, keyed by the exact url string. Entries are
// immutable once written; concurrent readers, exclusive writers.
class PageCache {
 public:
  struct Entry {
    std::int64_t fetched_at = 0;  // unix seconds
    std::string content;
  };

  std::optional<std::string> get(const std::string& url) const;
  bool contains(const std::string& url) const;
  void put(const std::string& url, std::string content);
  std::size_t size() const;

  void save(const std::string& path) const;
  void load(const std::string& path);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, Entry> entries_;
};

// ---------------------------------------------------------------------------
// Chunking
// ---------------------------------------------------------------------------

// Greedy left-to-right split into chunks of at most `limit` tokens, cut at
// token boundaries so that concatenating the chunks reproduces `text`
// exactly. Empty text yields an empty list.
std::vector<std::string> chunk_content(std::string_view text, std::size_t limit,
                                       const Tokenizer& tokenizer = whitespace_tokenizer());

// ---------------------------------------------------------------------------
// Search / visit execution
// ---------------------------------------------------------------------------

struct QueryResult {
  std::string query;
  std::vector<SearchHit> hits;
  bool ok = true;
  std::string error;
};

struct SearchResult {
  std::vector<QueryResult> per_query;  // one entry per query, order preserved
};

enum class SummaryStatus { Ok, FetchError, FallbackTruncation };

// Structured output of the summary model for one visited url. The rational /
// evidence / summary field names are the summary-model contract.
struct VisitSummary {
  std::string url;
  std::string rational;
  std::string evidence;
  std::string summary;
  std::size_t chunk_count = 1;
  SummaryStatus status = SummaryStatus::Ok;
  std::string warning;
};

struct ToolbeltConfig {
  std::size_t chunk_limit = 100000;     // tokens per summarization chunk
  RetryPolicy retry;                    // provider retries (0 for mocks)
  int summary_retries = 1;              // re-asks on malformed summarizer output
  std::size_t fallback_max_chars = 2000;
};

// One result list per query; provider failures are captured per query, not
// thrown, so the agent sees them as observations.
SearchResult run_search(const SearchArgs& args, WebBackend& web,
                        const RetryPolicy& retry = RetryPolicy{});

// Cache-first fetch, chunked goal-conditioned summarization, and a final
// re-summarization pass when a page spans multiple chunks.
std::vector<VisitSummary> run_visit(const VisitArgs& args, WebBackend& web,
                                    ModelBackend& summarizer, PageCache& cache,
                                    const ToolbeltConfig& config = ToolbeltConfig{});

std::string render_search_response(const SearchResult& result);
std::string render_visit_response(const std::vector<VisitSummary>& summaries);

// Shared tool services handed to the rollout loop.
struct ToolServices {
  WebBackend* web = nullptr;
  ModelBackend* summarizer = nullptr;
  PageCache* cache = nullptr;
  ToolbeltConfig config;
};

// Dispatches a validated request and renders the tool_response text.
std::string execute_tool_request(const ToolRequest& request, ToolServices& services);

// ---------------------------------------------------------------------------
// Live providers
// ---------------------------------------------------------------------------

struct HttpWebConfig {
  std::string search_url;   // POST, JSON {"q": query}, ranked results out
  std::string fetch_prefix; // GET fetch_prefix + url, page text out
  std::string api_key;      // resolved from the environment
  int timeout_seconds = 60;
  std::optional<double> rate_capacity;       // token-bucket settings
  std::optional<double> rate_refill_per_s;
};

class HttpWebBackend final : public WebBackend {
 public:
  explicit HttpWebBackend(HttpWebConfig config);

  std::vector<SearchHit> search(const std::string& query) override;
  std::string fetch_page(const std::string& url) override;

 private:
  void throttle();

  HttpWebConfig config_;
  std::optional<TokenBucket> bucket_;
  std::shared_mutex bucket_mutex_;
};

}  // namespace dre::toolbelt
