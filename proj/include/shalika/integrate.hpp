#pragma once

// The adaptive enumeration engine.  Integrands are locally constant, so the
// integral is a finite sum of (character value) x (coset volume) over leaf
// cells; the engine refines only cells whose verdict is still undecided and
// accumulates leaf contributions EXACTLY, as integer counts keyed by
// (root-of-unity angle, q-power weight).  The one floating-point operation
// is a canonical fold at the very end.  Exactness makes the result
// independent of traversal order, worker count, and of how the support
// happens to be partitioned at different box sizes or depths.

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shalika/characters.hpp"
#include "shalika/padic.hpp"

namespace shalika {

using Rational = boost::multiprecision::cpp_rational;

// One integration coordinate.
struct CoordinateSpec {
  enum class Domain {
    additive_box,  // p^{-B} O, refined additively
    shells,        // p^v O^x for v in [shell_min, shell_max]
  };
  enum class Measure { additive, multiplicative };

  Domain domain = Domain::additive_box;
  Measure measure = Measure::additive;
  int box_exponent = 0;  // additive: B
  int shell_min = 0, shell_max = 0;
  bool tagged = false;  // shell valuation becomes a result-tag component

  static CoordinateSpec additive(int B) {
    CoordinateSpec c;
    c.domain = Domain::additive_box;
    c.measure = Measure::additive;
    c.box_exponent = B;
    return c;
  }
  static CoordinateSpec shell(int v, Measure m) {
    CoordinateSpec c;
    c.domain = Domain::shells;
    c.measure = m;
    c.shell_min = c.shell_max = v;
    return c;
  }
  static CoordinateSpec shell_range(int vmin, int vmax, Measure m,
                                    bool tagged = false) {
    CoordinateSpec c;
    c.domain = Domain::shells;
    c.measure = m;
    c.shell_min = vmin;
    c.shell_max = vmax;
    c.tagged = tagged;
    return c;
  }
};

struct CellCoord {
  PAdicBall ball;  // the set of coordinate values in this cell
  int shell_v = 0; // fixed valuation for shell coordinates
};

struct Cell {
  std::vector<CellCoord> coords;
  int depth = 0;
};

struct IntegrandVerdict {
  enum class Kind { zero, constant, refine };
  Kind kind = Kind::zero;
  Angle angle;           // constant: the character value
  int log_q_weight = 0;  // constant: extra q-power (quotient-measure density)
  int split_coord = -1;  // refine: coordinate to split

  static IntegrandVerdict zero() { return {}; }
  static IntegrandVerdict constant(Angle a, int logq = 0) {
    IntegrandVerdict v;
    v.kind = Kind::constant;
    v.angle = a;
    v.log_q_weight = logq;
    return v;
  }
  static IntegrandVerdict refine(int coord) {
    IntegrandVerdict v;
    v.kind = Kind::refine;
    v.split_coord = coord;
    return v;
  }
};

// The integrand contract: pure, locally constant.
class CellFunction {
 public:
  virtual ~CellFunction() = default;
  virtual IntegrandVerdict evaluate(const Cell& cell) const = 0;
};

// Exact accumulator: counts per (angle, q-exponent).
class ExactSum {
 public:
  void add(const Angle& a, int log_q, std::int64_t count = 1) {
    terms_[{a, log_q}] += count;
  }
  void merge(const ExactSum& o) {
    for (const auto& [k, c] : o.terms_) terms_[k] += c;
  }
  bool empty() const { return terms_.empty(); }
  const std::map<std::pair<Angle, int>, std::int64_t>& terms() const {
    return terms_;
  }

 private:
  std::map<std::pair<Angle, int>, std::int64_t> terms_;
};

// Canonical exact total: rational coefficient per angle, zero coefficients
// erased.  Equality of ExactValues is the engine's notion of "identical
// result"; the complex embedding is derived and deterministic.
class ExactValue {
 public:
  ExactValue() = default;
  // q-power fold with the global factor (q/(q-1))^mult_coords.
  ExactValue(const ExactSum& sum, int q, int mult_coords);

  std::complex<double> to_complex() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Angle, Rational>& coeffs() const { return coeffs_; }
  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const ExactValue& a, const ExactValue& b) {
    return !(a == b);
  }
  std::string to_string() const;

 private:
  std::map<Angle, Rational> coeffs_;
};

struct EngineConfig {
  int workers = 1;
  std::int64_t max_cells = 400'000'000;
  int max_depth = 200;
};

struct EngineStats {
  std::int64_t cells = 0;
  int max_depth = 0;
  bool aborted = false;  // budget exhausted before all cells decided
};

// Sums keyed by the tag (shell valuations of tagged coordinates, in
// coordinate order; empty tag for plain integrals).
using TaggedSums = std::map<std::vector<int>, ExactSum>;

TaggedSums integrate_cells(int p, const std::vector<CoordinateSpec>& coords,
                           const CellFunction& fn, const EngineConfig& cfg,
                           EngineStats& stats);

// The result of one orbital-integral evaluation.
struct OrbitalResult {
  std::complex<double> value{0.0, 0.0};
  int box = 0;         // additive box / shell range B in force
  int depth_used = 0;  // deepest refinement reached
  std::int64_t cells_visited = 0;
  bool stabilized = false;
  bool budget_exhausted = false;  // cells or depth budget hit; value partial
  ExactValue exact;
  double wall_ms = 0.0;
};

// Runs `run(B, depth_budget)` at growing box sizes until two consecutive
// results agree exactly, per the truncation discipline: every reported value
// must be a fixed point of B -> B+1, depth -> depth+2.
OrbitalResult stabilize(const std::function<OrbitalResult(int, int)>& run,
                        int box0, int depth0, int max_rounds);

}  // namespace shalika
