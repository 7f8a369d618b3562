#pragma once

#include <optional>
#include <string>

#include "tcon/moment.hpp"

namespace tcon {

/// How a model talks about time in its answers.
///   Seconds            plain second values ("20 - 25 seconds")
///   MinutesSeconds     colon forms ("00:07", "0:45"); raw seconds still accepted
///   NormalizedFrames100 frame indices on a 0-100 scale; seconds = frame/100 * duration
///   StartPlusDuration  like Seconds, for models that phrase answers as
///                      "at X seconds ... lasts for Y seconds"
/// Colon tokens and start+duration phrasing are recognized under every
/// convention; the convention mostly pins how bare numbers are scaled.
enum class TimeConvention { Seconds, MinutesSeconds, NormalizedFrames100, StartPlusDuration };

struct ParseContext {
  double duration = 0.0;
  TimeConvention convention = TimeConvention::Seconds;
  std::string model_tag;
};

struct ParseOutcome {
  enum class Type { MomentResult, VerdictResult, Invalid };
  Type type = Type::Invalid;
  std::optional<Moment> moment;
  std::optional<Verdict> verdict;
  std::string reason;   // set when Invalid
  bool clamped = false; // end was clamped to the video duration

  static ParseOutcome from_moment(Moment m, bool clamped = false);
  static ParseOutcome from_verdict(Verdict v);
  static ParseOutcome invalid(std::string reason);

  bool is_moment() const { return type == Type::MomentResult; }
  bool is_verdict() const { return type == Type::VerdictResult; }
  bool is_invalid() const { return type == Type::Invalid; }
};

/// Pull the first complete start-end pair out of a free-text answer.
/// Deterministic and pure. Single timestamps and timestamp-free text are
/// Invalid with a reason.
ParseOutcome extract_moment(const std::string& text, const ParseContext& ctx);

enum class YesNo { Yes, No, Indirect };

/// Rule-based yes/no classification: a leading or standalone yes/no token
/// decides; anything else is Indirect and gets escalated to the judge.
YesNo classify_yes_no(const std::string& text);

TimeConvention time_convention_from(const std::string& s);
const char* to_string(TimeConvention c);

}  // namespace tcon
