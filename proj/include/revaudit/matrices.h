#ifndef REVAUDIT_MATRICES_H_
#define REVAUDIT_MATRICES_H_

#include <string>

#include "revaudit/labor.h"

namespace revaudit {

// Markdown tables of the direct mechanism's ex-post profits at each of the
// four true-type profiles. Agent 1 picks the row; each cell lists agent 1's
// profit first.
std::string RenderMatrices(const labor::LaborParams& params);

}  // namespace revaudit

#endif  // REVAUDIT_MATRICES_H_
