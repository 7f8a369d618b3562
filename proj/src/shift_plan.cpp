#include "tcon/shift_plan.hpp"

#include <cmath>
#include <sstream>

#include "tcon/errors.hpp"

namespace tcon {

double ShiftPlan::duration() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.length();
  return total;
}

double remap_instant(const ShiftPlan& plan, double t) {
  double total = plan.duration();
  if (t < 0.0 || t > total + 1e-9) {
    throw OutOfRange("instant " + std::to_string(t) + " outside [0, " + std::to_string(total) + "]");
  }
  double offset = 0.0;
  for (size_t i = 0; i < plan.segments.size(); ++i) {
    const Moment& seg = plan.segments[i];
    bool last = i + 1 == plan.segments.size();
    // Segments are half-open on the edited timeline; the final one also
    // owns its right endpoint so t == duration stays mappable.
    if (t >= seg.start && (t < seg.end || (last && t <= seg.end + 1e-9))) {
      return offset + (t - seg.start);
    }
    offset += seg.length();
  }
  throw OutOfRange("instant " + std::to_string(t) + " not covered by any segment");
}

std::vector<long> frame_remap(const ShiftPlan& plan, double fps) {
  if (fps <= 0.0) throw ConfigError("fps must be positive");
  std::vector<long> map;
  long total_frames = std::lround(plan.duration() * fps);
  map.reserve(static_cast<size_t>(total_frames));
  for (const auto& seg : plan.segments) {
    long first = std::lround(seg.start * fps);
    long count = std::lround(seg.length() * fps);
    for (long f = 0; f < count; ++f) map.push_back(first + f);
  }
  return map;
}

namespace {
std::string fmt_sec(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << v;
  return os.str();
}
}  // namespace

std::vector<std::string> edit_commands(const ShiftPlan& plan, const std::string& input_path,
                                       const std::string& output_path) {
  std::vector<std::string> cmds;
  std::ostringstream concat;
  for (size_t i = 0; i < plan.segments.size(); ++i) {
    const Moment& seg = plan.segments[i];
    std::ostringstream cmd;
    cmd << "ffmpeg -y -ss " << fmt_sec(seg.start) << " -to " << fmt_sec(seg.end) << " -i "
        << input_path << " -c copy seg_" << i << ".mp4";
    cmds.push_back(cmd.str());
    concat << "file 'seg_" << i << ".mp4'\n";
  }
  cmds.push_back("printf \"" + concat.str() + "\" > concat.txt");
  cmds.push_back("ffmpeg -y -f concat -safe 0 -i concat.txt -c copy " + output_path);
  return cmds;
}

}  // namespace tcon
