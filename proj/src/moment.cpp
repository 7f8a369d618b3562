#include "tcon/moment.hpp"

#include <algorithm>
#include <cmath>

namespace tcon {

bool moment_valid(const Moment& m) {
  return std::isfinite(m.start) && std::isfinite(m.end) && m.start >= 0.0 && m.start < m.end;
}

double iou(const Moment& a, const Moment& b) {
  double inter = std::max(0.0, std::min(a.end, b.end) - std::max(a.start, b.start));
  double uni = a.length() + b.length() - inter;
  if (uni <= 0.0) return 0.0;
  return inter / uni;
}

MomentCheck validate_moment(double raw_start, double raw_end, double duration) {
  MomentCheck out;
  if (!std::isfinite(raw_start) || !std::isfinite(raw_end)) {
    out.error = MomentError::DegenerateInterval;
    return out;
  }
  if (raw_start < 0.0) {
    out.error = MomentError::NegativeTime;
    return out;
  }
  double end = raw_end;
  if (end > duration) {
    end = duration;
    out.clamped = true;
  }
  if (raw_start >= end) {
    out.error = MomentError::DegenerateInterval;
    out.clamped = false;
    return out;
  }
  out.moment = Moment{raw_start, end};
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::Yes ? "yes" : "no"; }

std::string to_string(MomentError e) {
  switch (e) {
    case MomentError::NegativeTime:
      return "negative time";
    case MomentError::DegenerateInterval:
      return "degenerate interval";
  }
  return "unknown";
}

}  // namespace tcon
