// classify.hpp: decision tree for ae-codimension 2 multigerms.
//
// A multigerm may split into an ordered pair {f, g} several ways; every
// two-part split is tried and each applicable labeling is reported together
// with the predicate values that drove the decision, so a label can be
// re-checked independently.

#pragma once

#include <map>

#include "invariants.hpp"

namespace germcalc {

enum class Codim2Label {
  Augmentation,
  AugmentationAndConcatenation,
  PrimitiveMonogermPlusMorse,
  Special34,
  MonicConcatenation,
  GeneralisedConcatenation,
  DoubleFoldConcatenation,
  SpecialP2,
  SpecialNadatrans,
};

const char* label_name(Codim2Label label);

struct SplitEvidence {
  std::vector<int> f_branches;
  std::vector<int> g_branches;
  Codim2Label label;
  std::string case_id;  // position in the decision tree, e.g. "1.ii"
  std::map<std::string, std::string> facts;
};

struct ClassifyResult {
  CodimReport total;
  std::vector<SplitEvidence> labels;
  std::vector<std::string> notes;
};

// Requires ae_codim(h) = 2 (throws PreconditionError otherwise, with the
// computed value in the message).
ClassifyResult classify_codim2(const MultiGerm& h, const JetOptions& opts = {});

}  // namespace germcalc
