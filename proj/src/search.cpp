#include "hyperconv/ramsey.hpp"

#include "hyperconv/errors.hpp"
#include "ramsey_detail.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace hyperconv {

namespace {

constexpr int kMaxDepth = 12;

struct SubtreeResult {
  bool ran = false;
  bool found = false;
  std::uint64_t nodes = 0;
  Elements sequence;
};

// One worker's DFS state. by_mask[mask] holds delta_F for the F encoded by
// mask over the current prefix.
class Dfs {
 public:
  Dfs(const ConvolutionRule& rule, const Coloring& coloring, const Criterion& criterion, int depth,
      const Elements& candidates)
      : rule_(rule),
        coloring_(coloring),
        criterion_(criterion),
        depth_(depth),
        candidates_(candidates),
        by_mask_(std::size_t{1} << depth, FiniteMeasure::point(candidates.front())),
        chosen_(),
        used_(candidates.size(), false) {}

  SubtreeResult run_from(std::size_t first) {
    SubtreeResult result;
    result.ran = true;
    chosen_.clear();
    std::fill(used_.begin(), used_.end(), false);
    survivors_.assign(1, std::vector<bool>(coloring_.arity(), true));
    result.found = place(0, first, result.nodes);
    if (result.found)
      for (std::size_t idx : chosen_) result.sequence.push_back(candidates_[idx]);
    return result;
  }

 private:
  // Places candidate `idx` at position `level` and extends. Returns true
  // when a full-depth witness was found; chosen_ then holds it.
  bool place(int level, std::size_t idx, std::uint64_t& nodes) {
    ++nodes;
    const Element& x = candidates_[idx];
    const FiniteMeasure dx = FiniteMeasure::point(x);
    std::vector<bool> alive = survivors_[level];
    const std::uint32_t bit = 1u << level;
    for (std::uint32_t rest = 0; rest < bit; ++rest) {
      const std::uint32_t mask = rest | bit;
      by_mask_[mask] = rest == 0 ? dx : convolve_measures(by_mask_[rest], dx, rule_);
      std::vector<int> indices;
      for (int i = 0; i <= level; ++i)
        if (mask & (1u << i)) indices.push_back(i + 1);
      if (criterion_.exempt(indices)) continue;
      const std::vector<Rational> masses = detail::class_masses(by_mask_[mask], coloring_);
      for (int c = 0; c < coloring_.arity(); ++c)
        if (alive[c] && !criterion_.accepts(masses[c])) alive[c] = false;
      if (std::none_of(alive.begin(), alive.end(), [](bool b) { return b; })) return false;
    }
    chosen_.push_back(idx);
    used_[idx] = true;
    if (level + 1 == depth_) return true;
    if (static_cast<int>(survivors_.size()) <= level + 1) survivors_.resize(level + 2);
    survivors_[level + 1] = alive;
    for (std::size_t next = 0; next < candidates_.size(); ++next) {
      if (used_[next]) continue;
      if (place(level + 1, next, nodes)) return true;
    }
    used_[idx] = false;
    chosen_.pop_back();
    return false;
  }

  const ConvolutionRule& rule_;
  const Coloring& coloring_;
  const Criterion& criterion_;
  int depth_;
  const Elements& candidates_;
  std::vector<FiniteMeasure> by_mask_;
  std::vector<std::size_t> chosen_;
  std::vector<bool> used_;
  std::vector<std::vector<bool>> survivors_;
};

unsigned worker_count(std::size_t subtrees) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERCONV_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) n = static_cast<unsigned>(requested);
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(subtrees, 1)));
}

ExperimentReport run_search(const std::string& name, const ConvolutionRule& rule, const Elements& candidates,
                            const Coloring& coloring, int depth, const Window& window, const Criterion& criterion) {
  if (depth < 1 || depth > kMaxDepth) throw InvalidSequence("search depth must lie in 1.." + std::to_string(kMaxDepth));
  ExperimentReport report;
  if (static_cast<int>(candidates.size()) >= depth) {
    std::vector<SubtreeResult> results(candidates.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{candidates.size()};
    auto worker = [&] {
      Dfs dfs(rule, coloring, criterion, depth, candidates);
      for (std::size_t i = next++; i < candidates.size(); i = next++) {
        if (i > best.load()) continue;
        results[i] = dfs.run_from(i);
        if (results[i].found) {
          std::size_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
        }
      }
    };
    const unsigned workers = worker_count(candidates.size());
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          try {
            worker();
          } catch (...) {
            errors[w] = std::current_exception();
            best.store(0);
          }
        });
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (const auto& r : results) {
      report.nodes += r.nodes;
      if (r.found) {
        report = [&] {
          ExperimentReport full = detail::evaluate(name, rule, r.sequence, coloring, depth, criterion);
          full.nodes = report.nodes;
          return full;
        }();
        break;
      }
    }
  }
  if (!report.found()) {
    const std::uint64_t nodes = report.nodes;
    report = ExperimentReport{};
    report.descriptor = name;
    report.coloring = coloring.describe();
    report.arity = coloring.arity();
    report.criterion = criterion.to_json();
    report.depth = depth;
    report.verdict = Verdict::Exhausted;
    report.nodes = nodes;
    report.note = "no injective sequence of length " + std::to_string(depth) + " from the window satisfies the criterion";
  }
  report.window = window.describe();
  return report;
}

}  // namespace

ExperimentReport search_sequence(const HypergroupDescriptor& k, const Coloring& coloring, int depth,
                                 const Window& window, const Criterion& criterion) {
  Elements candidates;
  for (const auto& x : window.elements()) {
    if (!k.contains(x)) throw InvalidSequence(to_string(x) + " is outside " + k.name());
    if (x != k.identity()) candidates.push_back(x);
  }
  return run_search(
      k.name(), [&k](const Element& a, const Element& b) { return k.convolve(a, b); }, candidates, coloring, depth,
      window, criterion);
}

ExperimentReport search_fp(const CarrierAlgebra& s, const Coloring& coloring, int depth, const Window& window,
                           const Criterion& criterion) {
  Elements candidates;
  for (const auto& x : window.elements())
    if (s.contains(x) && !s.is_idempotent(x)) candidates.push_back(x);
  auto report = run_search(
      s.name(), [&s](const Element& a, const Element& b) { return point_mass(s.multiply(a, b)); }, candidates,
      coloring, depth, window, criterion);
  report.note += (report.note.empty() ? "" : "; ") + std::string("idempotents and non-members of the window skipped");
  return report;
}

}  // namespace hyperconv
