#include "hrlab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hrlab/errors.hpp"

namespace hrlab {

namespace {

double ipow(double x, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc *= x;
  return acc;
}

bool all_zero(const std::vector<double>& c) {
  return std::all_of(c.begin(), c.end(), [](double v) { return v == 0.0; });
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// value, first and second derivative of a polynomial at t, by synthetic
// division (Horner) passes.
void horner2(const std::vector<double>& c, double t, double& v, double& dv, double& d2v) {
  v = dv = d2v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d2v = d2v * t + dv;
    dv = dv * t + v;
    v = v * t + *it;
  }
  d2v *= 2.0;
}

}  // namespace

RadialProfile::Kind RadialProfile::kind() const {
  return std::holds_alternative<PolyData>(data_) ? Kind::kPolyBump : Kind::kLogBump;
}

double RadialProfile::support_lo() const {
  return std::visit([](const auto& d) { return d.a; }, data_);
}

double RadialProfile::support_hi() const {
  return std::visit([](const auto& d) { return d.b; }, data_);
}

const std::vector<double>& RadialProfile::modulation() const {
  return std::visit([](const auto& d) -> const std::vector<double>& { return d.q; }, data_);
}

int RadialProfile::endpoint_order() const {
  if (const auto* d = std::get_if<PolyData>(&data_)) return d->p;
  throw DomainError("endpoint_order: not a poly bump");
}

double RadialProfile::power_exponent() const {
  if (const auto* d = std::get_if<LogData>(&data_)) return d->sigma;
  throw DomainError("power_exponent: not a log bump");
}

RadialProfile::Derivatives RadialProfile::eval(double r) const {
  Derivatives out;
  if (const auto* d = std::get_if<PolyData>(&data_)) {
    if (!(r > d->a) || !(r < d->b)) return out;
    const double u = r - d->a;
    const double v = d->b - r;
    const double up2 = ipow(u, d->p - 2);
    const double vp2 = ipow(v, d->p - 2);
    const double up1 = up2 * u;
    const double vp1 = vp2 * v;
    const double up = up1 * u;
    const double vp = vp1 * v;

    const double w = up * vp;
    const double dw = d->p * (up1 * vp - up * vp1);
    const double d2w =
        d->p * (d->p - 1) * (up2 * vp + up * vp2) - 2.0 * d->p * d->p * up1 * vp1;

    double q, dq, d2q;
    horner2(d->q, r, q, dq, d2q);
    out.f = w * q;
    out.df = dw * q + w * dq;
    out.d2f = d2w * q + 2.0 * dw * dq + w * d2q;
    return out;
  }

  const auto& d = std::get<LogData>(data_);
  if (!(r > d.a) || !(r < d.b)) return out;
  const double length = std::log(d.b / d.a);
  const double s = std::log(r / d.a);
  const double x = s / length;

  // arch sin^3(pi x) and s-derivatives
  const double w = M_PI / length;
  const double sn = std::sin(w * s);
  const double cn = std::cos(w * s);
  const double arch = sn * sn * sn;
  const double darch = 3.0 * w * sn * sn * cn;
  const double d2arch = 3.0 * w * w * sn * (2.0 * cn * cn - sn * sn);

  double q, dqx, d2qx;
  horner2(d.q, x, q, dqx, d2qx);
  const double dq = dqx / length;            // d/ds
  const double d2q = d2qx / (length * length);

  const double h = arch * q;
  const double dh = darch * q + arch * dq;
  const double d2h = d2arch * q + 2.0 * darch * dq + arch * d2q;

  const double rs = std::pow(r, d.sigma);
  out.f = rs * h;
  out.df = rs / r * (d.sigma * h + dh);
  out.d2f = rs / (r * r) *
            (d.sigma * (d.sigma - 1.0) * h + (2.0 * d.sigma - 1.0) * dh + d2h);
  return out;
}

RadialProfile make_poly_bump(double a, double b, int p, std::vector<double> modulation) {
  if (!(a > 0.0) || !(a < b)) throw BadSupport("poly bump needs 0 < a < b");
  if (p < 3) throw SmoothnessTooLow("poly bump needs endpoint order p >= 3");
  if (modulation.empty() || all_zero(modulation)) {
    throw DomainError("modulation polynomial must not be identically zero");
  }
  return RadialProfile(RadialProfile::PolyData{a, b, p, std::move(modulation)});
}

RadialProfile make_log_bump(double a, double b, double sigma, std::vector<double> modulation) {
  if (!(a > 0.0) || !(a < b)) throw BadSupport("log bump needs 0 < a < b");
  if (modulation.empty() || all_zero(modulation)) {
    throw DomainError("modulation polynomial must not be identically zero");
  }
  return RadialProfile(RadialProfile::LogData{a, b, sigma, std::move(modulation)});
}

RadialProfile rescale_to(const RadialProfile& profile, double rho, double radius) {
  if (!(rho > 0.0) || !(radius > 0.0)) throw DomainError("rescale_to: rho and R must be positive");
  if (!(profile.support_hi() < rho)) {
    throw BadSupport("rescale_to: profile support must lie inside (0, rho)");
  }
  const double s = rho / radius;  // F_hat(y) = F(s y)
  const double a = profile.support_lo() / s;
  const double b = profile.support_hi() / s;
  if (!(a > 0.0) || !(b < radius)) {
    throw BadSupport("rescale_to: rescaled support touches the domain boundary");
  }

  if (profile.kind() == RadialProfile::Kind::kPolyBump) {
    // (s y - a0)^p (b0 - s y)^p q(s y) = s^{2p} (y-a)^p (b-y)^p q(s y),
    // so the new modulation coefficients are q_k * s^{2p + k}.
    const int p = profile.endpoint_order();
    std::vector<double> q = profile.modulation();
    double factor = ipow(s, 2 * p);
    for (double& c : q) {
      c *= factor;
      factor *= s;
    }
    return RadialProfile(RadialProfile::PolyData{a, b, p, std::move(q)});
  }

  // (s y)^sigma h(ln(s y / a0)) = s^sigma y^sigma h(ln(y / a)): the normalized
  // log coordinate is unchanged, only the amplitude picks up s^sigma.
  const double sigma = profile.power_exponent();
  std::vector<double> q = profile.modulation();
  const double amp = std::pow(s, sigma);
  for (double& c : q) c *= amp;
  return RadialProfile(RadialProfile::LogData{a, b, sigma, std::move(q)});
}

RadialProfile::Derivatives eval_with_derivs(const RadialProfile& profile, double r) {
  return profile.eval(r);
}

std::string to_record(const RadialProfile& profile) {
  std::string rec;
  if (profile.kind() == RadialProfile::Kind::kPolyBump) {
    rec = "polybump a=" + format_double(profile.support_lo()) +
          " b=" + format_double(profile.support_hi()) +
          " p=" + std::to_string(profile.endpoint_order()) + " q=";
  } else {
    rec = "logbump a=" + format_double(profile.support_lo()) +
          " b=" + format_double(profile.support_hi()) +
          " sigma=" + format_double(profile.power_exponent()) + " q=";
  }
  const auto& q = profile.modulation();
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (k) rec += ',';
    rec += format_double(q[k]);
  }
  return rec;
}

RadialProfile profile_from_record(const std::string& record) {
  std::istringstream in(record);
  std::string kind;
  in >> kind;
  if (kind != "polybump" && kind != "logbump") {
    throw DomainError("unknown profile record kind: " + kind);
  }

  double a = 0.0, b = 0.0, sigma = 0.0;
  int p = 0;
  std::vector<double> q;
  std::string field;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw DomainError("malformed profile record field: " + field);
    const std::string key = field.substr(0, eq);
    const std::string val = field.substr(eq + 1);
    if (key == "a") {
      a = std::stod(val);
    } else if (key == "b") {
      b = std::stod(val);
    } else if (key == "p") {
      p = std::stoi(val);
    } else if (key == "sigma") {
      sigma = std::stod(val);
    } else if (key == "q") {
      std::istringstream qs(val);
      std::string item;
      while (std::getline(qs, item, ',')) q.push_back(std::stod(item));
    } else {
      throw DomainError("unknown profile record key: " + key);
    }
  }
  if (kind == "polybump") return make_poly_bump(a, b, p, std::move(q));
  return make_log_bump(a, b, sigma, std::move(q));
}

ModeExpansion::ModeExpansion(const ValidatedParameters& params, std::vector<ModeTerm> terms)
    : params_(params), terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("mode expansion must contain at least one term");
  std::sort(terms_.begin(), terms_.end(),
            [](const ModeTerm& x, const ModeTerm& y) { return x.mode.degree < y.mode.degree; });
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const ModeTerm& t = terms_[i];
    if (i > 0 && terms_[i - 1].mode.degree == t.mode.degree) {
      throw DomainError("mode expansion has two terms of degree " +
                        std::to_string(t.mode.degree));
    }
    if (t.mode.lambda != eigenvalue(params_.n(), t.mode.degree)) {
      throw DomainError("mode eigenvalue inconsistent with dimension n = " +
                        std::to_string(params_.n()));
    }
    if (!(t.profile.support_lo() > 0.0) || !(t.profile.support_hi() < params_.radius())) {
      throw BadSupport("profile support must lie strictly inside (0, R)");
    }
  }
}

}  // namespace hrlab
