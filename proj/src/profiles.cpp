#include "nonsplit/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nonsplit/numeric.hpp"

namespace nonsplit {

namespace {

const double kSqrtE = std::sqrt(std::exp(1.0));
const double kE14 = std::exp(0.25);

const std::map<std::string, SegmentKind> kKindNames = {
    {"constant", SegmentKind::constant},
    {"log_tminus1", SegmentKind::log_tminus1},
    {"log_AoverTminusA", SegmentKind::log_AoverTminusA},
    {"cubic_tail", SegmentKind::cubic_tail},
};

std::string kind_name(SegmentKind k) {
  for (auto& [name, kind] : kKindNames)
    if (kind == k) return name;
  return "?";
}

void push(Profile& p, double a, double b, SegmentForm f) {
  if (b > a) p.segments.push_back({a, b, f});
}

SegmentForm constant(double c) { return {SegmentKind::constant, c}; }

}  // namespace

double SegmentForm::operator()(double t) const {
  switch (kind) {
    case SegmentKind::constant:
      return a;
    case SegmentKind::log_tminus1:
      return a + b * std::log(t - 1.0) + e * t;
    case SegmentKind::log_AoverTminusA:
      return a + b * std::log(A / (t - A)) + e * t;
    case SegmentKind::cubic_tail:
      return a + b * std::log(A / (t - A)) + e * t + g * t * std::pow(t - 3.0, m);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> Profile::breakpoints() const {
  std::vector<double> out;
  for (std::size_t i = 1; i < segments.size(); ++i) out.push_back(segments[i].t_start);
  return out;
}

void Profile::validate() const {
  if (segments.empty()) throw std::invalid_argument("profile: no segments");
  if (!(lower_clamp <= k)) throw std::invalid_argument("profile: lower_clamp above k");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& s = segments[i];
    if (!(s.t_end > s.t_start)) throw std::invalid_argument("profile: empty or reversed segment");
    if (i > 0 && std::abs(segments[i - 1].t_end - s.t_start) > 1e-12)
      throw std::invalid_argument("profile: segments are not contiguous");
    if (s.form.kind == SegmentKind::cubic_tail && s.form.m != 2 && s.form.m != 3)
      throw std::invalid_argument("profile: cubic_tail exponent must be 2 or 3");
  }
}

namespace {

double clamp_value(const Profile& p, double v) { return std::clamp(v, p.lower_clamp, p.k); }

void check_range(const Profile& p, double t) {
  if (!(t >= p.t_min() - 1e-12 && t <= p.t_max() + 1e-12))
    throw std::out_of_range("eval_profile: t outside the profile domain");
}

}  // namespace

double eval_profile(const Profile& p, double t) {
  check_range(p, t);
  auto it = std::upper_bound(p.segments.begin(), p.segments.end(), t,
                             [](double x, const Segment& s) { return x < s.t_start; });
  if (it != p.segments.begin()) --it;
  return clamp_value(p, it->form(t));
}

double eval_left(const Profile& p, double t) {
  check_range(p, t);
  auto it = std::lower_bound(p.segments.begin(), p.segments.end(), t,
                             [](const Segment& s, double x) { return s.t_start < x; });
  if (it != p.segments.begin()) --it;
  return clamp_value(p, it->form(t));
}

Profile parse_profile(std::istream& in) {
  Profile p;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("profile line " + std::to_string(lineno) + ": " + what);
    };
    if (first == "k" || first == "lower_clamp") {
      double v;
      if (!(ls >> v)) fail("missing value");
      (first == "k" ? p.k : p.lower_clamp) = v;
      continue;
    }
    Segment s{};
    try {
      s.t_start = std::stod(first);
    } catch (const std::exception&) {
      fail("expected a number or directive, got '" + first + "'");
    }
    std::string kind;
    if (!(ls >> s.t_end >> kind)) fail("expected 't_start t_end kind params...'");
    auto k = kKindNames.find(kind);
    if (k == kKindNames.end()) fail("unknown segment kind '" + kind + "'");
    auto& f = s.form;
    f.kind = k->second;
    bool ok = true;
    switch (f.kind) {
      case SegmentKind::constant: ok = bool(ls >> f.a); break;
      case SegmentKind::log_tminus1: ok = bool(ls >> f.a >> f.b >> f.e); break;
      case SegmentKind::log_AoverTminusA: ok = bool(ls >> f.a >> f.b >> f.e >> f.A); break;
      case SegmentKind::cubic_tail: ok = bool(ls >> f.a >> f.b >> f.e >> f.g >> f.m >> f.A); break;
    }
    if (!ok) fail("wrong parameter count for '" + kind + "'");
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
    p.segments.push_back(s);
  }
  p.validate();
  return p;
}

Profile parse_profile(const std::string& text) {
  std::istringstream in(text);
  return parse_profile(in);
}

std::string serialize_profile(const Profile& p) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "k %.17g\nlower_clamp %.17g\n", p.k, p.lower_clamp);
  out += buf;
  for (const auto& s : p.segments) {
    const auto& f = s.form;
    std::snprintf(buf, sizeof buf, "%.17g %.17g %s", s.t_start, s.t_end, kind_name(f.kind).c_str());
    out += buf;
    switch (f.kind) {
      case SegmentKind::constant: std::snprintf(buf, sizeof buf, " %.17g", f.a); break;
      case SegmentKind::log_tminus1:
        std::snprintf(buf, sizeof buf, " %.17g %.17g %.17g", f.a, f.b, f.e);
        break;
      case SegmentKind::log_AoverTminusA:
        std::snprintf(buf, sizeof buf, " %.17g %.17g %.17g %.17g", f.a, f.b, f.e, f.A);
        break;
      case SegmentKind::cubic_tail:
        std::snprintf(buf, sizeof buf, " %.17g %.17g %.17g %.17g %d %.17g", f.a, f.b, f.e, f.g, f.m, f.A);
        break;
    }
    out += buf;
    out += '\n';
  }
  return out;
}

Profile extremal_profile(double k, double t_max) {
  if (!(t_max > 1.0)) throw std::invalid_argument("extremal_profile: t_max must exceed 1");
  Profile p;
  p.k = k;
  push(p, 0.0, 1.0, constant(k));
  push(p, 1.0, t_max, constant(-1.0));
  return p;
}

CharEnvelope make_envelope(double A) {
  if (!(A >= kSqrtE - 1e-12 && A <= 2.0))
    throw std::invalid_argument("envelope: A must lie in [sqrt(e), 2]");
  return {A, 2.0 * std::log(A) - 1.0};
}

double envelope_lower_1mP(const CharEnvelope& env, double t) {
  if (!(t >= 2.0 && t <= 4.0)) throw std::out_of_range("envelope_lower_1mP: t outside [2,4]");
  const double A = env.A;
  double v;
  if (t <= 1.0 + A)
    v = 4.0 / t * std::log(t - 1.0) - 2.0 * env.E;
  else
    v = 4.0 / t * std::log(A / (t - A)) - 2.0 * env.E;
  if (t > 3.0) v -= 2.0 / 3.0 * (t - 3.0) * (t - 3.0);
  return std::min(v, 2.0 / t);
}

double envelope_upper_1mP(const CharEnvelope& env, double t) {
  const double A = env.A;
  if (!(t >= 2.0 && t <= 2.0 * A + 1e-12))
    throw std::out_of_range("envelope_upper_1mP: t outside [2,2A]");
  double v = t <= 1.0 + A ? 4.0 / t * std::log(t - 1.0) : 4.0 / t * std::log(A / (t - A));
  return std::clamp(v, 0.0, 2.0 / t);
}

double interval_mass_lower(const CharEnvelope& env, double a, double b) {
  if (!(a >= 1.0 && b >= a && b <= env.A + 1e-12))
    throw std::out_of_range("interval_mass_lower: need 1 <= a <= b <= A");
  return std::max(0.0, 2.0 * std::log(b / a) - env.E);
}

double cubic_U(const CharEnvelope& env, double t, int m) {
  const double A = env.A, E = env.E;
  if (!(t >= A - 1e-12 && t <= 4.0)) throw std::out_of_range("cubic_U: t outside [A,4]");
  if (m != 2 && m != 3) throw std::invalid_argument("cubic_U: m must be 2 or 3");
  if (t <= 2.0) return 1.0;
  if (t <= 1.0 + A) return std::min(1.0, 1.0 - 2.0 * std::log(t - 1.0) + E * t);
  double v = 1.0 - 2.0 * std::log(A / (t - A)) + E * t;
  if (t > 3.0) v += t * std::pow(t - 3.0, m) / 3.0;
  return std::min(1.0, v);
}

double cubic_L(const CharEnvelope& env, double t) {
  const double A = env.A;
  if (!(t >= 1.0 && t <= 2.0 * A + 1e-12)) throw std::out_of_range("cubic_L: t outside [1,2A]");
  if (t <= A) return 0.0;
  if (t <= 2.0) return 1.0;
  if (t <= 1.0 + A) return std::min(1.0, 1.0 - 2.0 * std::log(t - 1.0));
  return std::min(1.0, 1.0 - 2.0 * std::log(A / (t - A)));
}

Profile cubic_U_profile(const CharEnvelope& env, int m) {
  const double A = env.A, E = env.E;
  Profile p;
  p.k = 1.0;
  push(p, A, 2.0, constant(1.0));
  push(p, 2.0, 1.0 + A, {SegmentKind::log_tminus1, 1.0, -2.0, E});
  push(p, 1.0 + A, 3.0, {SegmentKind::log_AoverTminusA, 1.0, -2.0, E, 0.0, A});
  push(p, 3.0, 4.0, {SegmentKind::cubic_tail, 1.0, -2.0, E, 1.0 / 3.0, A, m});
  return p;
}

Profile cubic_L_profile(const CharEnvelope& env) {
  const double A = env.A;
  Profile p;
  p.k = 1.0;
  push(p, 1.0, A, constant(0.0));
  push(p, A, 2.0, constant(1.0));
  push(p, 2.0, 1.0 + A, {SegmentKind::log_tminus1, 1.0, -2.0, 0.0});
  push(p, 1.0 + A, 2.0 * A, {SegmentKind::log_AoverTminusA, 1.0, -2.0, 0.0, 0.0, A});
  return p;
}

Profile cubic_lower_profile(const CharEnvelope& env, int m) {
  const double A = env.A, E = env.E;
  Profile p;
  p.k = 2.0;
  push(p, 0.0, 1.0, constant(2.0));
  push(p, 1.0, 2.0, constant(-1.0));
  push(p, 2.0, 1.0 + A, {SegmentKind::log_tminus1, -1.0, 2.0, -E});
  push(p, 1.0 + A, 3.0, {SegmentKind::log_AoverTminusA, -1.0, 2.0, -E, 0.0, A});
  push(p, 3.0, 4.0, {SegmentKind::cubic_tail, -1.0, 2.0, -E, -1.0 / 3.0, A, m});
  return p;
}

Profile cubic_upper_profile(const CharEnvelope& env) {
  const double A = env.A;
  Profile p;
  p.k = 2.0;
  push(p, 0.0, 1.0, constant(2.0));
  push(p, 1.0, A, constant(0.0));
  push(p, A, 2.0, constant(-1.0));
  push(p, 2.0, 1.0 + A, {SegmentKind::log_tminus1, -1.0, 2.0, 0.0});
  push(p, 1.0 + A, 2.0 * A, {SegmentKind::log_AoverTminusA, -1.0, 2.0, 0.0, 0.0, A});
  return p;
}

BiquadBreakpoints biquad_breakpoints(const CharEnvelope& env) {
  const double A = env.A, E = env.E;
  auto f0 = [&](double t) { return 2.0 * (1.0 - 2.0 * std::log(t - 1.0) + E * t) - 1.0; };
  auto f1 = [&](double t) { return 2.0 * (1.0 - 2.0 * std::log(A / (t - A)) + E * t) - 1.0; };
  BiquadBreakpoints bp{};
  // f0 > 0 at t=2; both caps equal 2AE at t=1+A, so the roots exist iff 2AE < 1.
  bool cross = f0(1.0 + A) < 0.0;
  bp.t0 = cross ? bisect_root(f0, 2.0, 1.0 + A, 1e-12) : 1.0 + A;
  bp.t1 = cross ? bisect_root(f1, 1.0 + A, 2.0 * A, 1e-12) : 1.0 + A;
  bp.t2 = A * (1.0 + kE14) / kE14;
  return bp;
}

double biquad_pointwise_upper(const CharEnvelope& env, double delta, double t) {
  const double A = env.A, E = env.E;
  const double B = (2.0 - delta) * A;
  if (!(t >= 2.0 && t <= B + 1e-12)) throw std::out_of_range("biquad_pointwise_upper: t outside [2,B]");
  double v = 2.0 / t;
  if (t <= 1.0 + kE14) v = std::min(v, 8.0 * std::log(t - 1.0) / t);
  if (t > 2.0 && t <= 1.0 + A) v = std::min(v, 4.0 * (1.0 - 2.0 * std::log(t - 1.0) + E * t) / t);
  if (t > 1.0 + A && t <= 3.0) v = std::min(v, 4.0 * (1.0 - 2.0 * std::log(A / (t - A)) + E * t) / t);
  if (t >= A * (1.0 + kE14) / kE14 && t <= 2.0 * A) v = std::min(v, 8.0 * std::log(A / (t - A)) / t);
  return std::max(v, 0.0);
}

double product_average(const SplitMasses& s) { return s.s_pp + s.s_mm - s.s_pm - s.s_mp; }

double product_average_2s(const SplitMasses& s) { return 2.0 * s.s_pp + 2.0 * s.s_mm - 1.0; }

}  // namespace nonsplit
