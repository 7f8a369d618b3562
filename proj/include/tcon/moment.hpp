#pragma once

#include <optional>
#include <string>

namespace tcon {

/// A closed time interval [start, end] in seconds within a video.
/// Overlap arithmetic treats intervals as half-open so shared endpoints
/// are never counted twice.
struct Moment {
  double start = 0.0;
  double end = 0.0;

  double length() const { return end - start; }
  bool operator==(const Moment&) const = default;
};

/// start < end, both finite and non-negative.
bool moment_valid(const Moment& m);

struct VideoMeta {
  std::string video_id;
  double duration = 0.0;
  std::string source_dataset;
};

enum class Verdict { Yes, No };

inline Verdict negate(Verdict v) { return v == Verdict::Yes ? Verdict::No : Verdict::Yes; }

/// Temporal intersection-over-union. Symmetric, 1 iff identical,
/// 0 iff disjoint. Inputs must be valid Moments.
double iou(const Moment& a, const Moment& b);

enum class MomentError { NegativeTime, DegenerateInterval };

struct MomentCheck {
  std::optional<Moment> moment;
  std::optional<MomentError> error;
  bool clamped = false;  // end exceeded duration and was pulled back
};

/// Validate a raw (start, end) pair against a video duration.
/// Ends past the video are clamped rather than rejected because models
/// routinely emit them; the clamp is reported so callers can log it.
MomentCheck validate_moment(double raw_start, double raw_end, double duration);

std::string to_string(Verdict v);
std::string to_string(MomentError e);

}  // namespace tcon
