#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcon/moment.hpp"
#include "tcon/shift_plan.hpp"

namespace tcon {

enum class QueryKind {
  Original,
  Aligned,
  Misaligned,
  CompositionalAligned,
  CompositionalMisaligned,
};

enum class AlignRule { WordReplacement, ActiveToPassive, WordOrder };

enum class Component { Subject, Action, Relation };

enum class Polarity { Affirmative, Negated };

struct QueryVariant {
  std::string text;
  QueryKind kind = QueryKind::Original;
  std::optional<AlignRule> rule;       // present iff kind == Aligned
  std::optional<Component> component;  // present iff kind is compositional
  std::string provenance;              // backend id + prompt hash

  bool well_formed() const;
};

/// One holistic verification question: a template instance whose moment slot
/// is filled at run time with the model's own prediction.
struct VerificationQuestion {
  std::string text;  // still contains the {m} slot
  std::string template_id;
  Polarity polarity = Polarity::Affirmative;
  QueryKind query_kind = QueryKind::Aligned;
  Verdict expected = Verdict::Yes;
};

/// Truth table for holistic questions: the answer is Yes exactly when an
/// aligned query meets an affirmative template or a misaligned query meets
/// a negated one.
Verdict expected_verdict(QueryKind kind, Polarity polarity);

struct EvalItem {
  std::string item_id;
  VideoMeta video;
  QueryVariant query;  // kind == Original
  Moment gt;
  std::vector<QueryVariant> aligned;        // exactly 3
  std::vector<QueryVariant> misaligned;     // exactly 3
  std::vector<QueryVariant> compositional;  // non-empty, aligned + misaligned
  ShiftPlan shift;
  std::vector<VerificationQuestion> holistic;  // 6 once questions are built

  bool well_formed(std::string* why = nullptr) const;
};

const char* to_string(QueryKind k);
const char* to_string(AlignRule r);
const char* to_string(Component c);
const char* to_string(Polarity p);

QueryKind query_kind_from(const std::string& s);
AlignRule align_rule_from(const std::string& s);
Component component_from(const std::string& s);
Polarity polarity_from(const std::string& s);

}  // namespace tcon
