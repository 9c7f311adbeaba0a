#include "ordhull/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ordhull/errors.hpp"

namespace ordhull {

namespace {

constexpr double kLookupSlack = 1e-9;  // relative slack for sample-point hits

std::string num(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

bool nearly_equal(double a, double b, double rel_tol) {
  if (a == b) return true;
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) <= rel_tol * scale;
}

double model_identity(const RealModel& m) {
  return m.kind == RealKind::ExpHomog ? 0.0 : 1.0;
}

void check_real_model(const RealModel& m) {
  if (!(m.tolerance > 0)) throw Error("tolerance must be positive");
  if (m.kind == RealKind::BoundedHomog && !(m.r0 > 0))
    throw Error("lattice base r0 must be positive");
  if (m.sample_h.empty()) throw Error("acting sample is empty");
  if (m.sample_x.empty()) throw Error("evaluation sample is empty");

  const double id = model_identity(m);
  auto contains = [&](double v) {
    return std::any_of(m.sample_h.begin(), m.sample_h.end(),
                       [&](double h) { return nearly_equal(h, v, kLookupSlack); });
  };
  if (!contains(id)) throw Error("acting sample is missing the identity " + num(id));
  for (double h : m.sample_h) {
    if (m.kind != RealKind::ExpHomog && !(h > 0))
      throw Error("acting sample must be positive, got " + num(h));
    const double inv = m.kind == RealKind::ExpHomog ? -h : 1.0 / h;
    if (!contains(inv))
      throw Error("acting sample is not closed under inversion: missing " + num(inv) +
                  " for " + num(h));
  }
  if (m.kind == RealKind::BoundedHomog) {
    // Every sample must sit on the lattice {r0^k}.
    for (double h : m.sample_h) {
      const double k = std::log(h) / std::log(m.r0);
      if (!nearly_equal(k, std::round(k), 1e-9))
        throw Error("acting sample " + num(h) + " is off the r0 lattice");
    }
  }
}

double model_weight(const RealModel& m, double h) {
  switch (m.kind) {
    case RealKind::PosHomog:
    case RealKind::BoundedHomog:
      return std::pow(h, m.p);
    case RealKind::ExpHomog:
      return std::exp(m.p * h);
  }
  return 1.0;
}

double model_combine(const RealModel& m, double h, double x) {
  return m.kind == RealKind::ExpHomog ? h + x : h * x;
}

RealTable::RealTable(std::vector<double> points, std::vector<double> values) {
  if (points.size() != values.size()) throw Error("sample table size mismatch");
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  for (std::size_t i : order) {
    if (!points_.empty() && nearly_equal(points_.back(), points[i], kLookupSlack)) {
      if (!nearly_equal(values_.back(), values[i], kLookupSlack))
        throw Error("conflicting samples at point " + num(points[i]));
      continue;
    }
    points_.push_back(points[i]);
    values_.push_back(values[i]);
  }
}

bool RealTable::covers(double x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.end() && nearly_equal(*it, x, kLookupSlack)) return true;
  return it != points_.begin() && nearly_equal(*std::prev(it), x, kLookupSlack);
}

double RealTable::at(double x) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.end() && nearly_equal(*it, x, kLookupSlack))
    return values_[static_cast<std::size_t>(it - points_.begin())];
  if (it != points_.begin() && nearly_equal(*std::prev(it), x, kLookupSlack))
    return values_[static_cast<std::size_t>(it - points_.begin()) - 1];
  throw DomainEscape("point " + num(x) + " is not in the sampled domain");
}

RealTable tabulate(const RealModel& m, const std::function<double(double)>& f) {
  check_real_model(m);
  std::vector<double> pts, vals;
  auto add = [&](double x) {
    pts.push_back(x);
    vals.push_back(f(x));
  };
  for (double x : m.sample_x) {
    add(x);
    for (double h : m.sample_h) add(model_combine(m, h, x));
  }
  return RealTable(std::move(pts), std::move(vals));
}

std::vector<double> numeric_regularize(const RealModel& m, const RealTable& f,
                                       RegularizeSide side) {
  check_real_model(m);
  std::vector<double> out;
  out.reserve(m.sample_x.size());
  for (double x : m.sample_x) {
    double acc = side == RegularizeSide::Min ? std::numeric_limits<double>::infinity()
                                             : -std::numeric_limits<double>::infinity();
    for (double h : m.sample_h) {
      const double v = f.at(model_combine(m, h, x)) / model_weight(m, h);
      acc = side == RegularizeSide::Min ? std::min(acc, v) : std::max(acc, v);
    }
    out.push_back(acc);
  }
  return out;
}

RealOrbit classify_real_orbit(double x) {
  if (std::isnan(x)) throw Error("cannot classify NaN");
  if (std::isinf(x)) return x < 0 ? RealOrbit{"{-inf}", true} : RealOrbit{"{+inf}", true};
  if (x == 0) return {"{0}", true};
  return x < 0 ? RealOrbit{"]-inf,0[", false} : RealOrbit{"]0,+inf[", false};
}

}  // namespace ordhull
