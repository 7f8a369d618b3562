#pragma once

#include <string>
#include <vector>

#include "tcon/moment.hpp"

namespace tcon {

/// An edit plan that relocates the ground-truth moment within its video.
/// `segments` are source intervals whose concatenation, in order, forms the
/// edited timeline; they are pairwise disjoint, jointly cover [0, duration],
/// and frame order inside each segment is untouched.
struct ShiftPlan {
  Moment original_gt;
  Moment shifted_gt;
  std::vector<Moment> segments;
  double achieved_iou = 0.0;
  bool flagged = false;  // no placement under the cap existed; best effort used

  double duration() const;
};

/// Position of original instant `t` on the edited timeline.
/// Piecewise linear and bijective away from segment boundaries.
/// Throws OutOfRange when t is outside [0, duration].
double remap_instant(const ShiftPlan& plan, double t);

/// Frame remap table at a given fps: entry i is the source frame shown at
/// destination frame i of the edited video.
std::vector<long> frame_remap(const ShiftPlan& plan, double fps);

/// Shell command lines for an external media tool that would cut the
/// segments and concatenate them. Text generation only; nothing is executed.
std::vector<std::string> edit_commands(const ShiftPlan& plan, const std::string& input_path,
                                       const std::string& output_path);

}  // namespace tcon
