#include "certbounds/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace certbounds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kRoundSize = 64;

struct HeapNode {
  Box box;
  double ub = kNegInf;
};

double widest_width(const Box& b) {
  double w = 0.0;
  for (const Interval& c : b) w = std::max(w, c.width());
  return w;
}

// Max-heap priority: larger upper bound first, then wider boxes, then
// lexicographically smaller corners. Total order, so the pop sequence is
// identical from run to run.
bool lower_priority(const HeapNode& a, const HeapNode& b) {
  if (a.ub != b.ub) return a.ub < b.ub;
  double wa = widest_width(a.box), wb = widest_width(b.box);
  if (wa != wb) return wa < wb;
  for (std::size_t i = 0; i < a.box.size(); ++i)
    if (a.box[i].lo() != b.box[i].lo()) return a.box[i].lo() > b.box[i].lo();
  for (std::size_t i = 0; i < a.box.size(); ++i)
    if (a.box[i].hi() != b.box[i].hi()) return a.box[i].hi() > b.box[i].hi();
  return false;
}

enum class Feasibility { kInside, kBoundary, kOutside };

struct Candidate {
  std::vector<double> point;
  double value_lo = kNegInf;
  bool valid = false;
};

struct ChildResult {
  Box box;
  double ub = kNegInf;
  bool alive = false;
  std::vector<Candidate> candidates;
};

struct Expansion {
  ChildResult child[2];
  bool final_box = false;  // box too small to split further
  double final_ub = kNegInf;
};

class Search {
 public:
  Search(const BoundProblem& problem, const OptimizerConfig& cfg)
      : p_(problem), cfg_(cfg) {}

  Feasibility classify(const Box& b) const {
    if (!p_.domain.constraint) return Feasibility::kInside;
    Interval g = p_.domain.constraint->eval_interval(b);
    if (g.hi() < 0.0) return Feasibility::kOutside;
    if (g.lo() >= 0.0) return Feasibility::kInside;
    return Feasibility::kBoundary;
  }

  bool touches_domain_boundary(const Box& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].lo() <= p_.domain.box[i].lo()) return true;
      if (b[i].hi() >= p_.domain.box[i].hi()) return true;
    }
    return false;
  }

  // Monotonicity test: a strictly interior, strictly feasible box on which
  // some partial derivative excludes zero cannot contain the maximizer.
  bool derivative_pruned(const Box& b) const {
    if (!cfg_.use_derivative_pruning) return false;
    if (touches_domain_boundary(b)) return false;
    if (p_.domain.constraint) {
      Interval g = p_.domain.constraint->eval_interval(b);
      if (g.lo() < cfg_.constraint_feasibility_eps) return false;
    }
    for (int var = 0; var < p_.arity; ++var) {
      try {
        Interval d = p_.objective.eval_derivative_interval(b, var);
        if (d.lo() > 0.0 || d.hi() < 0.0) return true;
      } catch (const DomainError&) {
        return false;
      }
    }
    return false;
  }

  Candidate make_candidate(std::vector<double> point) const {
    Candidate c;
    if (p_.domain.project_feasible) {
      point = p_.domain.project_feasible(point);
      for (std::size_t i = 0; i < point.size(); ++i) {
        point[i] = std::clamp(point[i], p_.domain.box[i].lo(), p_.domain.box[i].hi());
      }
    } else if (p_.domain.constraint) {
      Box pb;
      for (double v : point) pb.push_back(Interval::point(v));
      try {
        if (p_.domain.constraint->eval_interval(pb).lo() < 0.0) return c;
      } catch (const DomainError&) {
        return c;
      }
    }
    Box pb;
    for (double v : point) pb.push_back(Interval::point(v));
    try {
      c.value_lo = p_.objective.eval_interval(pb).lo();
    } catch (const DomainError&) {
      return c;
    }
    c.point = std::move(point);
    c.valid = true;
    return c;
  }

  std::vector<Candidate> box_candidates(const Box& b) const {
    std::vector<Candidate> out;
    std::vector<double> mid(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) mid[i] = b[i].mid();
    out.push_back(make_candidate(mid));
    if (b.size() == 1) {
      out.push_back(make_candidate({b[0].lo()}));
      out.push_back(make_candidate({b[0].hi()}));
    } else {
      out.push_back(make_candidate({b[0].lo(), b[1].lo()}));
      out.push_back(make_candidate({b[0].lo(), b[1].hi()}));
      out.push_back(make_candidate({b[0].hi(), b[1].lo()}));
      out.push_back(make_candidate({b[0].hi(), b[1].hi()}));
    }
    return out;
  }

  // Widest coordinate, ties to the lowest index.
  static int split_dim(const Box& b) {
    int dim = 0;
    double w = b[0].width();
    for (std::size_t i = 1; i < b.size(); ++i) {
      if (b[i].width() > w) {
        w = b[i].width();
        dim = static_cast<int>(i);
      }
    }
    return dim;
  }

  void fill_child(const Box& box, ChildResult& out) const {
    if (classify(box) == Feasibility::kOutside) return;
    double ub;
    try {
      ub = p_.objective.eval_interval(box).hi();
    } catch (const DomainError&) {
      return;  // every feasible point of the box is outside the radicand domain
    }
    if (derivative_pruned(box)) return;
    out.box = box;
    out.ub = ub;
    out.candidates = box_candidates(box);
    out.alive = true;
  }

  Expansion expand(const HeapNode& node) const {
    Expansion e;
    int dim = split_dim(node.box);
    const Interval& c = node.box[dim];
    double m = c.mid();
    if (m <= c.lo() || m >= c.hi()) {
      e.final_box = true;
      e.final_ub = node.ub;
      return e;
    }
    Box left = node.box, right = node.box;
    left[dim] = Interval(c.lo(), m);
    right[dim] = Interval(m, c.hi());
    fill_child(left, e.child[0]);
    fill_child(right, e.child[1]);
    return e;
  }

  const BoundProblem& p_;
  const OptimizerConfig& cfg_;
};

struct Incumbent {
  double max_lo = kNegInf;
  std::vector<double> witness;

  void offer(const Candidate& c) {
    if (c.valid && c.value_lo > max_lo) {
      max_lo = c.value_lo;
      witness = c.point;
    }
  }
};

void heap_push(std::vector<HeapNode>& heap, HeapNode node) {
  heap.push_back(std::move(node));
  std::push_heap(heap.begin(), heap.end(), lower_priority);
}

HeapNode heap_pop(std::vector<HeapNode>& heap) {
  std::pop_heap(heap.begin(), heap.end(), lower_priority);
  HeapNode n = std::move(heap.back());
  heap.pop_back();
  return n;
}

Enclosure finish(const Search& s, const std::vector<HeapNode>& heap,
                 const std::vector<HeapNode>& final_boxes, const Incumbent& inc,
                 double max_hi, std::uint64_t processed, SearchStatus status) {
  if (inc.witness.empty())
    throw DomainError(s.p_.id + ": no certified feasible point found");
  Enclosure enc;
  enc.max_lo = inc.max_lo;
  enc.max_hi = std::max(max_hi, inc.max_lo);
  enc.boxes_processed = processed;
  enc.status = status;
  enc.witness = inc.witness;
  bool have_hull = false;
  Box hull_box;
  auto add_to_hull = [&](const HeapNode& n) {
    if (n.ub <= inc.max_lo) return;
    if (!have_hull) {
      hull_box = n.box;
      have_hull = true;
      return;
    }
    for (std::size_t i = 0; i < hull_box.size(); ++i) hull_box[i] = hull(hull_box[i], n.box[i]);
  };
  for (const HeapNode& n : heap) add_to_hull(n);
  for (const HeapNode& n : final_boxes) add_to_hull(n);
  if (!have_hull) {
    for (double v : inc.witness) hull_box.push_back(Interval::point(v));
  }
  enc.argmax_box = std::move(hull_box);
  return enc;
}

}  // namespace

namespace {

// A run is only converged once every box that could still hold the
// maximizer is narrower than the requested argmax resolution.
bool hull_resolved(const std::vector<HeapNode>& heap, double max_lo, double resolution) {
  for (const HeapNode& n : heap)
    if (n.ub > max_lo && widest_width(n.box) > resolution) return false;
  return true;
}

}  // namespace

Enclosure maximize(const BoundProblem& problem, const OptimizerConfig& cfg) {
  Search s(problem, cfg);
  if (s.classify(problem.domain.box) == Feasibility::kOutside)
    throw DomainError(problem.id + ": initial box is entirely infeasible");

  Incumbent inc;
  std::vector<HeapNode> heap;
  std::vector<HeapNode> final_boxes;
  double final_ub = kNegInf;

  {
    HeapNode root;
    root.box = problem.domain.box;
    root.ub = problem.objective.eval_interval(root.box).hi();
    for (const Candidate& c : s.box_candidates(root.box)) inc.offer(c);
    heap_push(heap, std::move(root));
  }

  std::uint64_t processed = 0;
  std::vector<HeapNode> round;
  std::vector<Expansion> results;

  while (true) {
    while (!heap.empty() && heap.front().ub <= inc.max_lo) heap_pop(heap);

    double top_ub = heap.empty() ? kNegInf : heap.front().ub;
    double cap = std::max({top_ub, final_ub, inc.max_lo});
    bool top_done = heap.empty() || top_ub - inc.max_lo <= cfg.tolerance;
    bool final_done = final_ub == kNegInf || final_ub - inc.max_lo <= cfg.tolerance;
    if (top_done && final_done &&
        hull_resolved(heap, inc.max_lo, cfg.argmax_resolution))
      return finish(s, heap, final_boxes, inc, cap, processed, SearchStatus::kConverged);
    if (top_done && !final_done)  // unsplittable boxes pin the gap open
      return finish(s, heap, final_boxes, inc, cap, processed, SearchStatus::kBudgetExhausted);
    if (processed >= cfg.max_boxes)
      return finish(s, heap, final_boxes, inc, cap, processed, SearchStatus::kBudgetExhausted);

    std::size_t want = std::min({kRoundSize, heap.size(),
                                 static_cast<std::size_t>(cfg.max_boxes - processed)});
    round.clear();
    while (round.size() < want && !heap.empty()) {
      HeapNode n = heap_pop(heap);
      if (n.ub <= inc.max_lo) continue;  // stale: certified not to improve
      round.push_back(std::move(n));
    }
    if (round.empty()) continue;
    processed += round.size();

    results.assign(round.size(), Expansion{});
    int nthreads = cfg.threads;
#ifdef _OPENMP
    if (nthreads <= 0) nthreads = omp_get_max_threads();
#else
    nthreads = 1;
#endif
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (std::size_t i = 0; i < round.size(); ++i) {  // NOLINT
      results[i] = s.expand(round[i]);
    }

    // Sequential merge in pop order keeps the incumbent, the heap content
    // and therefore the whole search independent of the thread count.
    for (std::size_t i = 0; i < round.size(); ++i) {
      Expansion& e = results[i];
      if (e.final_box) {
        final_ub = std::max(final_ub, e.final_ub);
        final_boxes.push_back(std::move(round[i]));
        continue;
      }
      for (ChildResult& ch : e.child) {
        if (!ch.alive) continue;
        for (const Candidate& c : ch.candidates) inc.offer(c);
        if (ch.ub > inc.max_lo) {
          HeapNode n;
          n.box = std::move(ch.box);
          n.ub = ch.ub;
          heap_push(heap, std::move(n));
        }
      }
    }
  }
}

Enclosure maximize_reference(const BoundProblem& problem, const OptimizerConfig& cfg) {
  Search s(problem, cfg);
  if (s.classify(problem.domain.box) == Feasibility::kOutside)
    throw DomainError(problem.id + ": initial box is entirely infeasible");

  Incumbent inc;
  std::vector<HeapNode> heap;
  std::vector<HeapNode> final_boxes;
  double final_ub = kNegInf;

  {
    HeapNode root;
    root.box = problem.domain.box;
    root.ub = problem.objective.eval_interval(root.box).hi();
    for (const Candidate& c : s.box_candidates(root.box)) inc.offer(c);
    heap_push(heap, std::move(root));
  }

  std::uint64_t processed = 0;
  while (true) {
    while (!heap.empty() && heap.front().ub <= inc.max_lo) heap_pop(heap);
    double top_ub = heap.empty() ? kNegInf : heap.front().ub;
    double cap = std::max({top_ub, final_ub, inc.max_lo});
    bool top_done = heap.empty() || top_ub - inc.max_lo <= cfg.tolerance;
    bool final_done = final_ub == kNegInf || final_ub - inc.max_lo <= cfg.tolerance;
    if (top_done && final_done &&
        hull_resolved(heap, inc.max_lo, cfg.argmax_resolution))
      return finish(s, heap, final_boxes, inc, cap, processed, SearchStatus::kConverged);
    if ((top_done && !final_done) || processed >= cfg.max_boxes)
      return finish(s, heap, final_boxes, inc, cap, processed, SearchStatus::kBudgetExhausted);

    HeapNode node = heap_pop(heap);
    ++processed;
    Expansion e = s.expand(node);
    if (e.final_box) {
      final_ub = std::max(final_ub, e.final_ub);
      final_boxes.push_back(std::move(node));
      continue;
    }
    for (ChildResult& ch : e.child) {
      if (!ch.alive) continue;
      for (const Candidate& c : ch.candidates) inc.offer(c);
      if (ch.ub > inc.max_lo) {
        HeapNode n;
        n.box = std::move(ch.box);
        n.ub = ch.ub;
        heap_push(heap, std::move(n));
      }
    }
  }
}

double stationary_residual_f6(double x, double y) {
  return x * x * (9.0 * y - 4.0) + 12.0 * y * y;
}

double box_point_distance(const Box& box, const std::vector<double>& p) {
  double d = 0.0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    d = std::max(d, std::abs(box[i].lo() - p[i]));
    d = std::max(d, std::abs(box[i].hi() - p[i]));
  }
  return d;
}

VerificationReport verify_bound(const BoundProblem& problem, const OptimizerConfig& cfg,
                                bool use_problem_tolerance) {
  OptimizerConfig run_cfg = cfg;
  if (use_problem_tolerance) run_cfg.tolerance = problem.enclosure_tolerance;

  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.bound_id = problem.id;
  r.expected_value = problem.expected_value;
  r.expected_argmax = problem.expected_argmax;
  r.value_tolerance = problem.value_tolerance;
  r.argmax_tolerance = problem.argmax_tolerance;
  r.enclosure = maximize(problem, run_cfg);
  r.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  r.value_pass = problem.expected_value >= r.enclosure.max_lo - problem.value_tolerance &&
                 problem.expected_value <= r.enclosure.max_hi + problem.value_tolerance;
  r.argmax_pass =
      box_point_distance(r.enclosure.argmax_box, problem.expected_argmax) <=
      problem.argmax_tolerance;
  r.convergence_pass = r.enclosure.status == SearchStatus::kConverged;
  if (problem.closed_form) {
    r.has_closed_form = true;
    r.closed_form_value = problem.closed_form->mid();
    r.closed_form_pass =
        std::abs(r.enclosure.max_hi - r.closed_form_value) <= kClosedFormTolerance &&
        std::abs(r.enclosure.max_lo - r.closed_form_value) <= kClosedFormTolerance;
  }
  return r;
}

}  // namespace certbounds
