#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nonsplit {

enum class SegmentKind { constant, log_tminus1, log_AoverTminusA, cubic_tail };

// constant:         a
// log_tminus1:      a + b log(t-1) + e t
// log_AoverTminusA: a + b log(A/(t-A)) + e t
// cubic_tail:       a + b log(A/(t-A)) + e t + g t (t-3)^m
struct SegmentForm {
  SegmentKind kind = SegmentKind::constant;
  double a = 0.0, b = 0.0, e = 0.0, g = 0.0, A = 0.0;
  int m = 2;

  double operator()(double t) const;
};

struct Segment {
  double t_start, t_end;
  SegmentForm form;
};

struct Profile {
  double k = 1.0;
  double lower_clamp = -1.0;
  std::vector<Segment> segments;

  double t_min() const { return segments.front().t_start; }
  double t_max() const { return segments.back().t_end; }
  std::vector<double> breakpoints() const;  // interior segment boundaries
  void validate() const;
};

// Right-continuous clamped value; eval_left gives the limit from the left.
double eval_profile(const Profile& p, double t);
double eval_left(const Profile& p, double t);

Profile parse_profile(std::istream& in);
Profile parse_profile(const std::string& text);
std::string serialize_profile(const Profile& p);

// P = k on [0,1), -1 afterwards.
Profile extremal_profile(double k, double t_max);

struct CharEnvelope {
  double A, E;
};

CharEnvelope make_envelope(double A);

double envelope_lower_1mP(const CharEnvelope& env, double t);
double envelope_upper_1mP(const CharEnvelope& env, double t);
double interval_mass_lower(const CharEnvelope& env, double a, double b);

double cubic_U(const CharEnvelope& env, double t, int m = 2);
double cubic_L(const CharEnvelope& env, double t);

// Profiles for the cubic f with values in {2, 0, -1}: the smallest P allowed
// (-U after A) and the largest (-L), both equal to 2 on [0,1).
Profile cubic_lower_profile(const CharEnvelope& env, int m = 2);
Profile cubic_upper_profile(const CharEnvelope& env);
// U and L themselves as profiles on [A,4] and [1,2A].
Profile cubic_U_profile(const CharEnvelope& env, int m = 2);
Profile cubic_L_profile(const CharEnvelope& env);

struct BiquadBreakpoints {
  double t0, t1, t2;
};

BiquadBreakpoints biquad_breakpoints(const CharEnvelope& env);
double biquad_pointwise_upper(const CharEnvelope& env, double delta, double t);

// Masses of the four sign patterns (chi1, chi2) = (1,1), (-1,-1), (1,-1), (-1,1).
struct SplitMasses {
  double s_pp, s_mm, s_pm, s_mp;
};

double product_average(const SplitMasses& s);      // S1 + S-1 - S1,-1 - S-1,1
double product_average_2s(const SplitMasses& s);   // 2 S1 + 2 S-1 - 1

}  // namespace nonsplit
