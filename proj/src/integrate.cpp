#include "shalika/integrate.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <sstream>
#include <thread>

namespace shalika {

namespace {

// Per-cell weight exponent, excluding the integrand's own density factor:
// additive measure contributes q^{-(radius exponent)} per coordinate, the
// multiplicative normalization contributes q^{-(unit-ball depth)} per
// coordinate together with one global (q/(q-1)) factor handled in the fold.
int cell_log_q_weight(const std::vector<CoordinateSpec>& specs, const Cell& cell) {
  int e = 0;
  for (size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    const auto& cc = cell.coords[i];
    int k = cc.ball.radius_exponent();
    if (spec.measure == CoordinateSpec::Measure::additive) {
      e -= k;  // vol = q^{-k}, and for shells k = v + unit depth already
    } else {
      e -= (k - cc.shell_v);  // unit-ball depth only
    }
  }
  return e;
}

std::vector<int> cell_tag(const std::vector<CoordinateSpec>& specs, const Cell& cell) {
  std::vector<int> tag;
  for (size_t i = 0; i < specs.size(); ++i)
    if (specs[i].tagged) tag.push_back(cell.coords[i].shell_v);
  return tag;
}

struct Shared {
  const std::vector<CoordinateSpec>* specs;
  const CellFunction* fn;
  std::int64_t max_cells;
  int max_depth;
  std::atomic<std::int64_t> cells{0};
  std::atomic<bool> abort{false};
  std::atomic<int> max_depth_seen{0};
};

void process_subtree(Cell root, Shared& sh, TaggedSums& local) {
  std::vector<Cell> stack;
  stack.push_back(std::move(root));
  std::int64_t local_count = 0;
  int local_depth = 0;
  while (!stack.empty()) {
    if (sh.abort.load(std::memory_order_relaxed)) return;
    Cell cell = std::move(stack.back());
    stack.pop_back();
    ++local_count;
    if ((local_count & 0x3ff) == 0) {
      if (sh.cells.fetch_add(1024, std::memory_order_relaxed) + 1024 >
          sh.max_cells)
        sh.abort.store(true, std::memory_order_relaxed);
    }
    local_depth = std::max(local_depth, cell.depth);
    IntegrandVerdict v = sh.fn->evaluate(cell);
    switch (v.kind) {
      case IntegrandVerdict::Kind::zero:
        break;
      case IntegrandVerdict::Kind::constant: {
        int e = cell_log_q_weight(*sh.specs, cell) + v.log_q_weight;
        local[cell_tag(*sh.specs, cell)].add(v.angle, e);
        break;
      }
      case IntegrandVerdict::Kind::refine: {
        if (cell.depth + 1 > sh.max_depth) {
          sh.abort.store(true, std::memory_order_relaxed);
          return;
        }
        int ci = v.split_coord;
        auto children = cell.coords[ci].ball.split();
        for (auto& ch : children) {
          Cell child = cell;
          child.coords[ci].ball = std::move(ch);
          child.depth = cell.depth + 1;
          stack.push_back(std::move(child));
        }
        break;
      }
    }
  }
  sh.cells.fetch_add(local_count & 0x3ff, std::memory_order_relaxed);
  int prev = sh.max_depth_seen.load(std::memory_order_relaxed);
  while (prev < local_depth &&
         !sh.max_depth_seen.compare_exchange_weak(prev, local_depth)) {
  }
}

}  // namespace

TaggedSums integrate_cells(int p, const std::vector<CoordinateSpec>& specs,
                           const CellFunction& fn, const EngineConfig& cfg,
                           EngineStats& stats) {
  // Root cells: the cross product of shells (one unit residue class each)
  // and additive boxes, enumerated lexicographically.
  std::vector<Cell> frontier;
  {
    Cell seed;
    seed.coords.resize(specs.size());
    frontier.push_back(std::move(seed));
  }
  for (size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    std::vector<Cell> next;
    for (const Cell& base : frontier) {
      if (spec.domain == CoordinateSpec::Domain::additive_box) {
        Cell c = base;
        c.coords[i].ball =
            PAdicBall(PAdicScalar::zero(p), -spec.box_exponent);
        c.coords[i].shell_v = 0;
        next.push_back(std::move(c));
      } else {
        for (int v = spec.shell_min; v <= spec.shell_max; ++v) {
          for (int u = 1; u < p; ++u) {
            Cell c = base;
            c.coords[i].ball = PAdicBall(
                PAdicScalar::from_int(p, u) * PAdicScalar::uniformizer_pow(p, v),
                v + 1);
            c.coords[i].shell_v = v;
            next.push_back(std::move(c));
          }
        }
      }
    }
    frontier = std::move(next);
  }

  Shared sh;
  sh.specs = &specs;
  sh.fn = &fn;
  sh.max_cells = cfg.max_cells;
  sh.max_depth = cfg.max_depth;

  int workers = std::max(1, cfg.workers);
  TaggedSums total;
  if (workers == 1 || frontier.size() <= 1) {
    for (auto& cell : frontier) process_subtree(std::move(cell), sh, total);
  } else {
    std::vector<TaggedSums> partial(workers);
    std::atomic<size_t> next{0};
    auto work = [&](int w) {
      for (;;) {
        size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= frontier.size()) return;
        process_subtree(frontier[i], sh, partial[w]);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
    // Exact integer merge: order independent.
    for (auto& part : partial)
      for (auto& [tag, sum] : part) total[tag].merge(sum);
  }

  stats.cells = sh.cells.load();
  stats.max_depth = sh.max_depth_seen.load();
  stats.aborted = sh.abort.load();
  return total;
}

ExactValue::ExactValue(const ExactSum& sum, int q, int mult_coords) {
  Rational unit_factor(1);
  {
    Rational f(q, q - 1);
    for (int i = 0; i < mult_coords; ++i) unit_factor *= f;
  }
  for (const auto& [key, count] : sum.terms()) {
    const auto& [angle, e] = key;
    Rational w = unit_factor * count;
    if (e >= 0) {
      boost::multiprecision::cpp_int num = 1;
      for (int i = 0; i < e; ++i) num *= q;
      w *= Rational(num);
    } else {
      boost::multiprecision::cpp_int den = 1;
      for (int i = 0; i < -e; ++i) den *= q;
      w /= Rational(den);
    }
    coeffs_[angle] += w;
  }
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

std::complex<double> ExactValue::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [angle, coeff] : coeffs_)
    acc += static_cast<double>(coeff) * angle.to_complex();
  return acc;
}

std::string ExactValue::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [angle, coeff] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << coeff.str() << "*e(" << angle.num << "/" << angle.den << ")";
  }
  if (first) os << "0";
  return os.str();
}

OrbitalResult stabilize(const std::function<OrbitalResult(int, int)>& run,
                        int box0, int depth0, int max_rounds) {
  OrbitalResult prev = run(box0, depth0);
  if (prev.budget_exhausted) return prev;
  for (int round = 1; round <= max_rounds; ++round) {
    OrbitalResult cur = run(box0 + round, depth0 + 2 * round);
    cur.cells_visited += prev.cells_visited;
    cur.wall_ms += prev.wall_ms;
    if (cur.budget_exhausted) return cur;
    if (cur.exact == prev.exact) {
      cur.stabilized = true;
      return cur;
    }
    prev = std::move(cur);
  }
  prev.stabilized = false;
  return prev;
}

}  // namespace shalika
