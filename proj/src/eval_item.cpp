#include "tcon/eval_item.hpp"

#include <cmath>

#include "tcon/errors.hpp"

namespace tcon {

bool QueryVariant::well_formed() const {
  if (text.empty()) return false;
  bool is_comp =
      kind == QueryKind::CompositionalAligned || kind == QueryKind::CompositionalMisaligned;
  if (rule.has_value() != (kind == QueryKind::Aligned)) return false;
  if (component.has_value() != is_comp) return false;
  return true;
}

Verdict expected_verdict(QueryKind kind, Polarity polarity) {
  bool aligned = kind == QueryKind::Aligned || kind == QueryKind::CompositionalAligned ||
                 kind == QueryKind::Original;
  bool affirmative = polarity == Polarity::Affirmative;
  return aligned == affirmative ? Verdict::Yes : Verdict::No;
}

bool EvalItem::well_formed(std::string* why) const {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (video.duration <= 0.0) return fail("non-positive duration");
  if (!moment_valid(gt)) return fail("invalid gt moment");
  if (gt.end > video.duration + 1e-9) return fail("gt exceeds duration");
  if (gt.length() > 0.7 * video.duration + 1e-9) return fail("gt longer than 70% of video");
  if (query.kind != QueryKind::Original) return fail("query is not Original");
  if (aligned.size() != 3) return fail("need exactly 3 aligned variants");
  if (misaligned.size() != 3) return fail("need exactly 3 misaligned variants");
  if (compositional.empty()) return fail("compositional list empty");
  for (const auto& v : aligned)
    if (v.kind != QueryKind::Aligned || !v.well_formed()) return fail("bad aligned variant");
  for (const auto& v : misaligned)
    if (v.kind != QueryKind::Misaligned || !v.well_formed()) return fail("bad misaligned variant");
  for (const auto& v : compositional) {
    if (!v.well_formed()) return fail("bad compositional variant");
    if (v.kind != QueryKind::CompositionalAligned && v.kind != QueryKind::CompositionalMisaligned)
      return fail("compositional variant with non-compositional kind");
  }
  if (std::abs(shift.duration() - video.duration) > 1e-6) return fail("shift plan length mismatch");
  if (std::abs(shift.shifted_gt.length() - gt.length()) > 0.05)
    return fail("shifted gt length drifted");
  return true;
}

const char* to_string(QueryKind k) {
  switch (k) {
    case QueryKind::Original: return "original";
    case QueryKind::Aligned: return "aligned";
    case QueryKind::Misaligned: return "misaligned";
    case QueryKind::CompositionalAligned: return "compositional_aligned";
    case QueryKind::CompositionalMisaligned: return "compositional_misaligned";
  }
  return "?";
}

const char* to_string(AlignRule r) {
  switch (r) {
    case AlignRule::WordReplacement: return "WR";
    case AlignRule::ActiveToPassive: return "AP";
    case AlignRule::WordOrder: return "WO";
  }
  return "?";
}

const char* to_string(Component c) {
  switch (c) {
    case Component::Subject: return "subject";
    case Component::Action: return "action";
    case Component::Relation: return "relation";
  }
  return "?";
}

const char* to_string(Polarity p) {
  return p == Polarity::Affirmative ? "affirmative" : "negated";
}

QueryKind query_kind_from(const std::string& s) {
  if (s == "original") return QueryKind::Original;
  if (s == "aligned") return QueryKind::Aligned;
  if (s == "misaligned") return QueryKind::Misaligned;
  if (s == "compositional_aligned") return QueryKind::CompositionalAligned;
  if (s == "compositional_misaligned") return QueryKind::CompositionalMisaligned;
  throw ConfigError("unknown query kind: " + s);
}

AlignRule align_rule_from(const std::string& s) {
  if (s == "WR") return AlignRule::WordReplacement;
  if (s == "AP") return AlignRule::ActiveToPassive;
  if (s == "WO") return AlignRule::WordOrder;
  throw ConfigError("unknown alignment rule: " + s);
}

Component component_from(const std::string& s) {
  if (s == "subject") return Component::Subject;
  if (s == "action") return Component::Action;
  if (s == "relation") return Component::Relation;
  throw ConfigError("unknown component: " + s);
}

Polarity polarity_from(const std::string& s) {
  if (s == "affirmative") return Polarity::Affirmative;
  if (s == "negated") return Polarity::Negated;
  throw ConfigError("unknown polarity: " + s);
}

}  // namespace tcon
