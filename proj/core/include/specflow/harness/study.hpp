#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "specflow/harness/config.hpp"

namespace specflow::harness {

struct StudyCell {
  Method method = Method::Etd;
  double h = 0.0;
  std::optional<double> error;  ///< empty when the run diverged
  std::string failure;
};

/// l2_error(solution(method, h), reference) at t_eval; cells[i][j] holds
/// h_values[i] with methods[j].
struct StudyTable {
  std::vector<double> h_values;
  std::vector<Method> methods;
  double h_ref = 0.0;
  double t_eval = 0.0;
  std::vector<std::vector<StudyCell>> cells;

  const StudyCell& at(double h, Method m) const;
};

/// Reference = ETD at h_ref from the same seed and initial field. Cells are
/// independent and may run on `jobs` threads; the table does not depend on
/// the thread count. A diverging cell is recorded and the study continues;
/// a diverging reference is an error.
StudyTable convergence_study(const RunConfig& base, std::span<const double> h_list,
                             std::span<const Method> methods, double h_ref, double t_eval,
                             int jobs = 1);

/// `h,<method>,...` rows behind a `# format_version=1` line; diverged cells
/// read "diverged".
void write_study_csv(std::ostream& out, const StudyTable& table);

}  // namespace specflow::harness
