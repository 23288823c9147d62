#include "lpred/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace lpred::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kPanel = 380.0;
constexpr double kPanelTop = 210.0;
constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                                  "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

const char* color(std::size_t i) { return kPalette[i % kPalette.size()]; }

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  void add(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }

  /// Square box, 1.2 times the extent, centered on the content.
  Box padded() const {
    Box b = *this;
    if (!std::isfinite(b.xmin)) b = Box{-1.0, 1.0, -1.0, 1.0};
    const double cx = 0.5 * (b.xmin + b.xmax);
    const double cy = 0.5 * (b.ymin + b.ymax);
    const double half = 0.6 * std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-6});
    return {cx - half, cx + half, cy - half, cy + half};
  }
};

/// Maps world coordinates of one panel onto the canvas.
struct Frame {
  Box world;
  double left;

  double sx(double x) const { return left + (x - world.xmin) / (world.xmax - world.xmin) * kPanel; }
  double sy(double y) const {
    return kPanelTop + kPanel - (y - world.ymin) / (world.ymax - world.ymin) * kPanel;
  }
};

/// Endpoints of {p : a·p = b} clipped to the frame's world box.
std::pair<Vector, Vector> clip_line(const Vector& a, double b, const Box& box) {
  std::vector<Vector> hits;
  auto try_x = [&](double x) {
    if (a(1) == 0.0) return;
    const double y = (b - a(0) * x) / a(1);
    if (y >= box.ymin - 1e-12 && y <= box.ymax + 1e-12) hits.push_back(Eigen::Vector2d(x, y));
  };
  auto try_y = [&](double y) {
    if (a(0) == 0.0) return;
    const double x = (b - a(1) * y) / a(0);
    if (x >= box.xmin - 1e-12 && x <= box.xmax + 1e-12) hits.push_back(Eigen::Vector2d(x, y));
  };
  try_x(box.xmin);
  try_x(box.xmax);
  try_y(box.ymin);
  try_y(box.ymax);
  if (hits.size() < 2) {
    const Vector foot = a * (b / a.squaredNorm());
    return {foot, foot};
  }
  std::size_t far = 1;
  for (std::size_t i = 1; i < hits.size(); ++i)
    if ((hits[i] - hits[0]).norm() > (hits[far] - hits[0]).norm()) far = i;
  return {hits[0], hits[far]};
}

void panel_chrome(std::ostringstream& out, const Frame& f, const char* title) {
  out << "  <rect x=\"" << fmt(f.left) << "\" y=\"" << fmt(kPanelTop) << "\" width=\"" << fmt(kPanel)
      << "\" height=\"" << fmt(kPanel) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  out << "  <text x=\"" << fmt(f.left + kPanel / 2) << "\" y=\"" << fmt(kPanelTop - 12)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << title
      << "</text>\n";
  if (f.world.xmin < 0 && f.world.xmax > 0)
    out << "  <path d=\"M " << fmt(f.sx(0)) << " " << fmt(kPanelTop) << " V "
        << fmt(kPanelTop + kPanel) << "\" stroke=\"#eeeeee\"/>\n";
  if (f.world.ymin < 0 && f.world.ymax > 0)
    out << "  <path d=\"M " << fmt(f.left) << " " << fmt(f.sy(0)) << " H " << fmt(f.left + kPanel)
        << "\" stroke=\"#eeeeee\"/>\n";
  out << "  <circle cx=\"" << fmt(f.sx(0)) << "\" cy=\"" << fmt(f.sy(0))
      << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
}

}  // namespace

std::string render_svg(const SolveTrace& trace) {
  const LinearProgram& lp = *trace.transformed;
  const auto n = static_cast<std::size_t>(lp.A.rows());
  const bool bounded = trace.recovery && trace.recovery->status == SolveStatus::Optimal;

  Box primal;
  primal.add(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector a = lp.A.row(static_cast<Eigen::Index>(i)).transpose();
    const double b = lp.b(static_cast<Eigen::Index>(i));
    const Vector foot = a * (b / a.squaredNorm());
    primal.add(foot(0), foot(1));
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector c = lp.A.row(static_cast<Eigen::Index>(j)).transpose();
      const double det = a(0) * c(1) - a(1) * c(0);
      if (std::abs(det) < 1e-12 * a.norm() * c.norm()) continue;
      const double d = lp.b(static_cast<Eigen::Index>(j));
      primal.add((b * c(1) - a(1) * d) / det, (a(0) * d - b * c(0)) / det);
    }
  }
  if (bounded) primal.add(trace.recovery->point->coords(0), trace.recovery->point->coords(1));

  Box dual;
  dual.add(0.0, 0.0);
  for (const auto& q : trace.support->duals) dual.add(q.coords(0), q.coords(1));

  const Frame left{primal.padded(), 10.0};
  const Frame right{dual.padded(), kCanvas / 2 + 10.0};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(kCanvas)
      << "\" height=\"" << fmt(kCanvas) << "\" viewBox=\"0 0 800 800\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  out << "  <defs><clipPath id=\"primal\"><rect x=\"" << fmt(left.left) << "\" y=\"" << fmt(kPanelTop)
      << "\" width=\"" << fmt(kPanel) << "\" height=\"" << fmt(kPanel)
      << "\"/></clipPath><clipPath id=\"dual\"><rect x=\"" << fmt(right.left) << "\" y=\""
      << fmt(kPanelTop) << "\" width=\"" << fmt(kPanel) << "\" height=\"" << fmt(kPanel)
      << "\"/></clipPath></defs>\n";

  panel_chrome(out, left, "Constraints (translated, rotated)");
  out << "  <g clip-path=\"url(#primal)\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const Vector a = lp.A.row(static_cast<Eigen::Index>(i)).transpose();
    const double b = lp.b(static_cast<Eigen::Index>(i));
    const auto [p, q] = clip_line(a, b, left.world);
    out << "    <line x1=\"" << fmt(left.sx(p(0))) << "\" y1=\"" << fmt(left.sy(p(1))) << "\" x2=\""
        << fmt(left.sx(q(0))) << "\" y2=\"" << fmt(left.sy(q(1))) << "\" stroke=\"" << color(i)
        << "\" stroke-width=\"2\"/>\n";
    // Ticks toward the feasible side (-a), in screen space.
    Eigen::Vector2d dir(-a(0), a(1));
    dir.normalize();
    std::string d;
    for (double s : {0.2, 0.5, 0.8}) {
      const double x = left.sx(p(0) + s * (q(0) - p(0)));
      const double y = left.sy(p(1) + s * (q(1) - p(1)));
      d += (d.empty() ? "M " : " M ") + fmt(x) + " " + fmt(y) + " L " + fmt(x + 10 * dir(0)) + " " +
           fmt(y + 10 * dir(1));
    }
    out << "    <path d=\"" << d << "\" stroke=\"" << color(i) << "\" stroke-width=\"1.5\"/>\n";
  }
  if (bounded) {
    const Vector& x = trace.recovery->point->coords;
    out << "    <circle cx=\"" << fmt(left.sx(x(0))) << "\" cy=\"" << fmt(left.sy(x(1)))
        << "\" r=\"5\" fill=\"black\"/>\n";
    out << "    <text x=\"" << fmt(left.sx(x(0)) + 8) << "\" y=\"" << fmt(left.sy(x(1)) - 8)
        << "\" font-family=\"sans-serif\" font-size=\"14\">F</text>\n";
  }
  out << "  </g>\n";

  panel_chrome(out, right, "Duals");
  out << "  <g clip-path=\"url(#dual)\">\n";
  if (bounded) {
    // The optimal supporting line, i.e. the dual plane F* of the optimum.
    const Plane& pl = *trace.recovery->plane;
    const auto [p, q] = clip_line(pl.pi, pl.sigma, right.world);
    out << "    <path d=\"M " << fmt(right.sx(p(0))) << " " << fmt(right.sy(p(1))) << " L "
        << fmt(right.sx(q(0))) << " " << fmt(right.sy(q(1)))
        << "\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    out << "    <text x=\"" << fmt(right.sx(q(0)) - 30) << "\" y=\"" << fmt(right.sy(q(1)) - 8)
        << "\" font-family=\"sans-serif\" font-size=\"14\">F*</text>\n";
  }
  for (std::size_t i = 0; i < trace.support->duals.size(); ++i) {
    const Vector& q = trace.support->duals[i].coords;
    out << "    <circle cx=\"" << fmt(right.sx(q(0))) << "\" cy=\"" << fmt(right.sy(q(1)))
        << "\" r=\"5\" fill=\"" << color(i) << "\"/>\n";
  }
  out << "  </g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace lpred::cli
