#include "specflow/harness/study.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

#include "specflow/diagnostics.hpp"
#include "specflow/errors.hpp"
#include "specflow/harness/frames.hpp"
#include "specflow/harness/run.hpp"

namespace specflow::harness {

const StudyCell& StudyTable::at(double h, Method m) const {
  for (const auto& row : cells) {
    for (const auto& c : row) {
      if (c.h == h && c.method == m) return c;
    }
  }
  throw Error("no study cell for h=" + std::to_string(h) + " method=" + std::string(to_string(m)));
}

StudyTable convergence_study(const RunConfig& base, std::span<const double> h_list,
                             std::span<const Method> methods, double h_ref, double t_eval,
                             int jobs) {
  validate(base);
  if (h_list.empty()) throw ConfigError("study needs at least one step size", "h");
  if (methods.empty()) throw ConfigError("study needs at least one method", "methods");
  if (!(t_eval > 0.0)) throw ConfigError("t_eval must be positive", "t_eval");
  if (!(h_ref > 0.0)) throw ConfigError("reference step must be positive", "href");
  for (double h : h_list) {
    if (!(h > 0.0)) throw ConfigError("step sizes must be positive", "h");
    if (h < h_ref) throw ConfigError("reference step must not exceed any study step", "href");
    step_count(t_eval, h, "t_eval");
  }
  step_count(t_eval, h_ref, "t_eval");

  StudyTable table;
  table.h_values.assign(h_list.begin(), h_list.end());
  table.methods.assign(methods.begin(), methods.end());
  table.h_ref = h_ref;
  table.t_eval = t_eval;
  table.cells.resize(h_list.size());
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    for (Method m : methods) table.cells[i].push_back(StudyCell{m, h_list[i], std::nullopt, {}});
  }

  const RealField<double> reference = simulate(base, Method::Etd, h_ref, t_eval);

  const std::size_t n_methods = methods.size();
  const std::size_t total = h_list.size() * n_methods;
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      StudyCell& cell = table.cells[idx / n_methods][idx % n_methods];
      try {
        const RealField<double> sol = simulate(base, cell.method, cell.h, t_eval);
        cell.error = l2_error(sol, reference);
      } catch (const DivergenceError& e) {
        cell.failure = e.what();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

void write_study_csv(std::ostream& out, const StudyTable& table) {
  auto num = [](double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  out << "# format_version=" << kCsvFormatVersion << " t_eval=" << num(table.t_eval)
      << " h_ref=" << num(table.h_ref) << '\n';
  out << 'h';
  for (Method m : table.methods) out << ',' << to_string(m);
  out << '\n';
  for (std::size_t i = 0; i < table.h_values.size(); ++i) {
    out << num(table.h_values[i]);
    for (const auto& cell : table.cells[i]) {
      out << ',';
      if (cell.error) {
        out << num(*cell.error);
      } else {
        out << "diverged";
      }
    }
    out << '\n';
  }
}

}  // namespace specflow::harness
