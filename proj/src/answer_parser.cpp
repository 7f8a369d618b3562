#include "tcon/answer_parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <vector>

#include "tcon/errors.hpp"

namespace tcon {

ParseOutcome ParseOutcome::from_moment(Moment m, bool clamped) {
  ParseOutcome out;
  out.type = Type::MomentResult;
  out.moment = m;
  out.clamped = clamped;
  return out;
}

ParseOutcome ParseOutcome::from_verdict(Verdict v) {
  ParseOutcome out;
  out.type = Type::VerdictResult;
  out.verdict = v;
  return out;
}

ParseOutcome ParseOutcome::invalid(std::string reason) {
  ParseOutcome out;
  out.type = Type::Invalid;
  out.reason = std::move(reason);
  return out;
}

namespace {

struct TimeToken {
  size_t begin = 0;
  size_t end = 0;       // one past the last character
  double value = 0.0;   // seconds (or raw frames before scaling)
  bool colon = false;
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Scan for colon times (mm:ss) and bare decimal numbers, left to right.
std::vector<TimeToken> scan_tokens(const std::string& text) {
  std::vector<TimeToken> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (!is_digit(text[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < n && is_digit(text[i])) ++i;
    // colon form: digits ':' two digits (optionally fractional seconds)
    if (i < n && text[i] == ':' && i + 2 < n + 1 && i + 1 < n && is_digit(text[i + 1])) {
      size_t colon_pos = i;
      size_t j = colon_pos + 1;
      while (j < n && is_digit(text[j])) ++j;
      size_t sec_digits = j - (colon_pos + 1);
      if (sec_digits == 2) {
        if (j < n && text[j] == '.' && j + 1 < n && is_digit(text[j + 1])) {
          ++j;
          while (j < n && is_digit(text[j])) ++j;
        }
        double minutes = std::stod(text.substr(start, colon_pos - start));
        double seconds = std::stod(text.substr(colon_pos + 1, j - colon_pos - 1));
        TimeToken tok;
        tok.begin = start;
        tok.end = j;
        tok.colon = true;
        // "0:65" cannot be a valid mm:ss; read it as raw seconds.
        tok.value = (minutes == 0.0 && seconds >= 60.0) ? seconds : minutes * 60.0 + seconds;
        tokens.push_back(tok);
        i = j;
        continue;
      }
    }
    // plain number, possibly fractional
    size_t j = i;
    if (j < n && text[j] == '.' && j + 1 < n && is_digit(text[j + 1])) {
      ++j;
      while (j < n && is_digit(text[j])) ++j;
    }
    TimeToken tok;
    tok.begin = start;
    tok.end = j;
    tok.colon = false;
    tok.value = std::stod(text.substr(start, j - start));
    tokens.push_back(tok);
    i = j;
  }
  return tokens;
}

// Lowercase, drop punctuation and unit words, collapse whitespace.
std::string normalize_between(const std::string& text, size_t begin, size_t end) {
  std::string words;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    static const std::array<const char*, 8> units = {"seconds", "second", "secs", "sec",
                                                     "s",       "frames", "frame", "the"};
    bool unit = std::any_of(units.begin(), units.end(), [&](const char* u) { return cur == u; });
    if (!unit) {
      if (!words.empty()) words += ' ';
      words += cur;
    }
    cur.clear();
  };
  for (size_t i = begin; i < end; ++i) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (c == '-' || c == '~') {
      flush();
      if (!words.empty()) words += ' ';
      words += c;
    } else {
      flush();
    }
  }
  flush();
  return words;
}

bool is_range_connector(const std::string& norm) {
  static const std::array<const char*, 12> forms = {
      "-",       "~",       "to",           "and",          "until",        "till",
      "through", "ends at", "and ends at", "finishes at", "and finishes at", "up to"};
  return std::any_of(forms.begin(), forms.end(), [&](const char* f) { return norm == f; });
}

bool is_duration_connector(const std::string& norm) {
  static const std::array<const char*, 8> forms = {
      "it lasts for", "lasts for",     "it lasts",          "lasting",
      "duration of",  "a duration of", "with a duration of", "it lasts about"};
  return std::any_of(forms.begin(), forms.end(), [&](const char* f) { return norm == f; });
}

double to_seconds(const TimeToken& tok, const ParseContext& ctx) {
  if (tok.colon) return tok.value;
  if (ctx.convention == TimeConvention::NormalizedFrames100)
    return tok.value / 100.0 * ctx.duration;
  return tok.value;
}

}  // namespace

ParseOutcome extract_moment(const std::string& text, const ParseContext& ctx) {
  if (text.empty()) return ParseOutcome::invalid("no timestamp");
  std::vector<TimeToken> tokens = scan_tokens(text);
  if (tokens.empty()) return ParseOutcome::invalid("no timestamp");

  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    std::string between = normalize_between(text, tokens[i].end, tokens[i + 1].begin);
    bool range = is_range_connector(between);
    bool duration = !range && is_duration_connector(between);
    if (!range && !duration) continue;
    double a = to_seconds(tokens[i], ctx);
    double b = to_seconds(tokens[i + 1], ctx);
    double start = a;
    double end = duration ? a + b : b;
    MomentCheck check = validate_moment(start, end, ctx.duration);
    if (check.error) return ParseOutcome::invalid(to_string(*check.error));
    return ParseOutcome::from_moment(*check.moment, check.clamped);
  }
  return ParseOutcome::invalid("single timestamp");
}

YesNo classify_yes_no(const std::string& text) {
  // first whitespace token, stripped of surrounding punctuation
  size_t i = 0;
  const size_t n = text.size();
  while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  size_t j = i;
  while (j < n && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
  std::string word;
  for (size_t k = i; k < j; ++k) {
    char c = text[k];
    if (std::isalpha(static_cast<unsigned char>(c)))
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (!std::ispunct(static_cast<unsigned char>(c)))
      return YesNo::Indirect;  // digits etc. inside the leading token
  }
  if (word == "yes") return YesNo::Yes;
  if (word == "no") return YesNo::No;
  return YesNo::Indirect;
}

TimeConvention time_convention_from(const std::string& s) {
  if (s == "seconds") return TimeConvention::Seconds;
  if (s == "minutes_seconds") return TimeConvention::MinutesSeconds;
  if (s == "normalized_frames_100") return TimeConvention::NormalizedFrames100;
  if (s == "start_plus_duration") return TimeConvention::StartPlusDuration;
  throw ConfigError("unknown time convention: " + s);
}

const char* to_string(TimeConvention c) {
  switch (c) {
    case TimeConvention::Seconds: return "seconds";
    case TimeConvention::MinutesSeconds: return "minutes_seconds";
    case TimeConvention::NormalizedFrames100: return "normalized_frames_100";
    case TimeConvention::StartPlusDuration: return "start_plus_duration";
  }
  return "?";
}

}  // namespace tcon
