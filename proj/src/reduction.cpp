#include "lpred/reduction.hpp"

#include "lpred/errors.hpp"

#include <cmath>

namespace lpred {

namespace {

constexpr double kCertificateTolerance = 1e-9;

}  // namespace

PiecewiseMaxProblem phase1_problem(const LinearProgram& lp) { return {lp.A, -lp.b}; }

PhaseOneResult phase1(const LinearProgram& lp, const MinMaxOptions& options, double eps_strict) {
  PiecewiseMaxProblem prob = phase1_problem(lp);
  MinMaxOptions opts = options;
  // (p, s) = (0, -min(b) + 1) is feasible for the epigraph; start the iterative backend there.
  if (!opts.subgradient.start) opts.subgradient.start = Vector::Zero(lp.A.cols());

  MinMaxResult res = solve_minmax(prob, opts);
  if (res.status == MinMaxStatus::UnboundedBelow) {
    // Some direction decreases every row; cap the descent with a constant piece.
    const double cap = -(1.0 + lp.b.cwiseAbs().maxCoeff());
    prob.G.conservativeResize(prob.G.rows() + 1, Eigen::NoChange);
    prob.G.row(prob.G.rows() - 1).setZero();
    prob.h.conservativeResize(prob.h.size() + 1);
    prob.h(prob.h.size() - 1) = cap;
    res = solve_minmax(prob, opts);
    if (res.status != MinMaxStatus::Minimized)
      throw NumericalError("capped phase-one problem is unbounded");
  }

  PhaseOneResult out;
  const Vector& p = *res.x_star;
  out.margin = max_residual(lp, p);
  out.p0 = p;
  out.status = *out.margin < -eps_strict ? PhaseOneStatus::StrictInterior
                                         : PhaseOneStatus::NoStrictInterior;
  return out;
}

std::vector<Point> dual_constraint_points(const LinearProgram& lp) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(lp.A.rows()));
  for (Eigen::Index i = 0; i < lp.A.rows(); ++i) {
    if (!(lp.b(i) > 0.0))
      throw NotInteriorError("row " + std::to_string(i) + " has b = " + std::to_string(lp.b(i)) +
                             " <= 0; the origin is not strictly interior");
    out.push_back(Point{-lp.A.row(i).transpose() / lp.b(i)});
  }
  return out;
}

SupportPlaneProblem build_support_problem(std::span<const Point> duals) {
  if (duals.empty()) throw InputError("no dual points");
  const Eigen::Index d = duals.front().dim();
  if (d < 2) throw DimensionError("support problem needs dimension >= 2");
  SupportPlaneProblem spp;
  spp.duals.assign(duals.begin(), duals.end());
  spp.minmax.G.resize(static_cast<Eigen::Index>(duals.size()), d - 1);
  spp.minmax.h.resize(static_cast<Eigen::Index>(duals.size()));
  for (std::size_t i = 0; i < duals.size(); ++i) {
    const auto& q = duals[i].coords;
    if (q.size() != d) throw DimensionError("dual points have mixed dimensions");
    const auto row = static_cast<Eigen::Index>(i);
    spp.minmax.G.row(row) = q.head(d - 1).transpose();
    spp.minmax.h(row) = -q(d - 1);
  }
  return spp;
}

Recovery classify_and_recover(const SupportPlaneProblem& spp, const MinMaxResult& result,
                              double eps_unbounded) {
  Recovery out;
  if (result.status == MinMaxStatus::UnboundedBelow) {
    out.status = SolveStatus::Unbounded;
    return out;
  }
  if (!result.x_star || !result.value)
    throw NumericalError("min-max result is missing its minimizer");
  const Vector& w = *result.x_star;
  if (w.size() != spp.minmax.dimension())
    throw NumericalError("min-max minimizer has the wrong dimension");
  const double value = evaluate(spp.minmax, w).value;
  if (std::abs(value - *result.value) > kCertificateTolerance * (1.0 + std::abs(value)))
    throw NumericalError("min-max value does not match its minimizer");

  const double t = -value;
  out.intercept = t;
  if (t >= -eps_unbounded) {
    out.status = SolveStatus::Unbounded;
    return out;
  }
  const auto d = w.size() + 1;
  Vector normal(d);
  normal.head(d - 1) = w;
  normal(d - 1) = -1.0;
  out.plane = Plane{normal, -t};
  out.point = dual_of_plane(*out.plane);
  out.status = SolveStatus::Optimal;
  return out;
}

SolveTrace solve_traced(const LinearProgram& lp, const std::optional<Vector>& interior_hint,
                        const SolveOptions& options) {
  SolveTrace trace;
  Solution& sol = trace.solution;
  auto fail = [&](SolveStatus status, std::string message) -> SolveTrace {
    sol.status = status;
    sol.message = std::move(message);
    return std::move(trace);
  };

  if (auto report = validate(lp); !report.ok()) return fail(SolveStatus::InputError, report.summary());

  try {
    LinearProgram work = lp;
    work.c = lp.max_objective();
    work.sense = Sense::Maximize;

    Vector p0;
    if (interior_hint) {
      if (interior_hint->size() != lp.dimension)
        return fail(SolveStatus::InputError, "interior point has the wrong length");
      if (!interior_hint->allFinite() || !(max_residual(lp, *interior_hint) < 0.0))
        return fail(SolveStatus::OriginNotInterior, "supplied interior point is not strictly interior");
      p0 = *interior_hint;
    } else {
      trace.phase_one = phase1(lp, options.minmax, options.eps_strict);
      if (trace.phase_one->status != PhaseOneStatus::StrictInterior)
        return fail(SolveStatus::Infeasible,
                    "no strictly interior point (phase-one margin " +
                        std::to_string(*trace.phase_one->margin) + ")");
      p0 = *trace.phase_one->p0;
    }
    sol.interior_point = p0;

    auto [translated, translation] = make_origin_strictly_feasible(work, p0);
    if (work.c.isZero(0.0)) {
      // Every feasible point is optimal.
      sol.status = SolveStatus::Optimal;
      sol.x = p0;
      sol.objective = 0.0;
      sol.residual = max_residual(lp, p0);
      return trace;
    }
    const HouseholderRotation rot = rotation_to_last_axis(work.c);
    trace.transformed = rotate_problem(translated, rot);
    trace.transform = ProblemTransform{rot, translation};

    const std::vector<Point> duals = dual_constraint_points(*trace.transformed);
    trace.support = build_support_problem(duals);
    if (options.build_only) {
      sol.status = SolveStatus::Optimal;
      return trace;
    }

    trace.minmax = solve_minmax(trace.support->minmax, options.minmax);
    trace.recovery = classify_and_recover(*trace.support, *trace.minmax, options.eps_unbounded);
    if (trace.recovery->status == SolveStatus::Unbounded) {
      sol.status = SolveStatus::Unbounded;
      return trace;
    }

    const Vector x = recover_solution(*trace.transform, trace.recovery->point->coords);
    sol.status = SolveStatus::Optimal;
    sol.objective = lp.c.dot(x);
    sol.residual = max_residual(lp, x);
    sol.x = x;
    return trace;
  } catch (const NotInteriorError& e) {
    return fail(SolveStatus::OriginNotInterior, e.what());
  } catch (const Error& e) {
    return fail(SolveStatus::InputError, e.what());
  }
}

Solution solve(const LinearProgram& lp, const std::optional<Vector>& interior_hint,
               const SolveOptions& options) {
  return solve_traced(lp, interior_hint, options).solution;
}

}  // namespace lpred
