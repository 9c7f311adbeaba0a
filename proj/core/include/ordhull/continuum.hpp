#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ordhull {

// Sampled numeric models over the reals, mirroring the exact finite engine:
// - PosHomog(p): positive reals act by multiplication, weight h^p;
// - BoundedHomog(r0, p): the multiplicative lattice {r0^k} acts, weight h^p;
// - ExpHomog(p): the reals act by shifts, weight e^{ph}.
enum class RealKind { PosHomog, BoundedHomog, ExpHomog };

struct RealModel {
  RealKind kind = RealKind::PosHomog;
  double p = 1.0;   // homogeneity degree (rate for ExpHomog)
  double r0 = 2.0;  // lattice base, BoundedHomog only
  std::vector<double> sample_h;
  std::vector<double> sample_x;
  double tolerance = 1e-12;  // relative comparison tolerance
};

// The truncated acting sample must contain the identity (1, or 0 for shifts)
// and be closed under inversion (negation for shifts); tolerance and model
// parameters must be admissible. Throws Error with the first violation.
void check_real_model(const RealModel& m);

double model_identity(const RealModel& m);
double model_weight(const RealModel& m, double h);
double model_combine(const RealModel& m, double h, double x);  // h.x or h+x

// A function known only on finitely many sample points. Lookups must hit a
// sampled point up to relative slack; anything else is a DomainEscape, never
// an interpolation.
class RealTable {
 public:
  RealTable() = default;
  RealTable(std::vector<double> points, std::vector<double> values);

  double at(double x) const;  // throws DomainEscape
  bool covers(double x) const;
  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> points_;  // sorted, deduplicated
  std::vector<double> values_;
};

// Samples f on sample_x and on every h.x needed by the regularizations, so
// the resulting table never escapes its own domain.
RealTable tabulate(const RealModel& m, const std::function<double(double)>& f);

enum class RegularizeSide { Min, Max };

// f_min(x) = inf over the truncated acting sample of w(h)^{-1} f(h.x), dually
// f_max. A bound for the untruncated value: enlarging the sample can only
// lower Min results and raise Max results.
std::vector<double> numeric_regularize(const RealModel& m, const RealTable& f,
                                       RegularizeSide side);

// Orbits of the extended real line under multiplication by positive reals.
struct RealOrbit {
  std::string label;  // one of {-inf}, ]-inf,0[, {0}, ]0,+inf[, {+inf}
  bool stationary = false;
};
RealOrbit classify_real_orbit(double x);

bool nearly_equal(double a, double b, double rel_tol);

}  // namespace ordhull
