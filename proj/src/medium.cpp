// SPDX-License-Identifier: Apache-2.0
#include "elastg/medium.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace elastg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveDiagonal: return "NonPositiveDiagonal";
    case ErrorCode::IndefiniteTensor: return "IndefiniteTensor";
    case ErrorCode::DecoupledMedium: return "DecoupledMedium";
    case ErrorCode::BranchMismatch: return "BranchMismatch";
    case ErrorCode::SpectralSingularity: return "SpectralSingularity";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::BranchCutHit: return "BranchCutHit";
    case ErrorCode::OriginSingularity: return "OriginSingularity";
    case ErrorCode::ProbeToleranceExceeded: return "ProbeToleranceExceeded";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::PointTooClose: return "PointTooClose";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DenominatorDegenerate: return "DenominatorDegenerate";
    case ErrorCode::TooFewNodes: return "TooFewNodes";
    case ErrorCode::IncompatibleGrids: return "IncompatibleGrids";
    case ErrorCode::NoRealMode: return "NoRealMode";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

const char* to_string(DeltaMinClass c) {
  switch (c) {
    case DeltaMinClass::NonNegative: return "NonNegative";
    case DeltaMinClass::FiniteNegative: return "FiniteNegative";
    case DeltaMinClass::MinusInfinity: return "MinusInfinity";
  }
  return "?";
}

const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::Negative: return "Negative";
    case SignClass::Degenerate: return "Degenerate";
    case SignClass::Positive: return "Positive";
  }
  return "?";
}

ElasticMedium validate_medium(double c11, double c12, double c22, double c33,
                              double rho, double omega) {
  if (!(c11 > 0) || !(c22 > 0) || !(c33 > 0))
    throw Error(ErrorCode::NonPositiveDiagonal,
                "condition (C0)(i) requires c11, c22, c33 > 0");
  const double scale = std::max({c11, c22, c33, std::abs(c12)});
  if (std::abs(c12 + c33) <= 1e-14 * scale)
    throw Error(ErrorCode::DecoupledMedium,
                "condition (C0)(ii) requires c12 + c33 != 0");
  if (!(c11 * c22 - c12 * c12 > 0))
    throw Error(ErrorCode::IndefiniteTensor,
                "condition (C0)(i) requires c11*c22 - c12^2 > 0");
  if (!(rho > 0) || !(omega > 0))
    throw Error(ErrorCode::InvalidArgument, "rho and omega must be positive");
  return ElasticMedium{c11, c12, c22, c33, rho, omega};
}

ElasticMedium medium_catalog(const std::string& name) {
  // The nine representative media, rho = omega = 1.
  if (name == "I") return validate_medium(4, 3.8, 20, 2, 1, 1);
  if (name == "II") return validate_medium(36, 2, 1, 1, 1, 1);
  if (name == "III") return validate_medium(0.9, 0.1, 10, 1, 1, 1);
  if (name == "IV") return validate_medium(0.9, 2.5, 10, 1, 1, 1);
  if (name == "V") return validate_medium(0.9, std::sqrt(10.0) - 1.0, 10, 1, 1, 1);
  if (name == "VI") return validate_medium(0.9, 2, 10, 1, 1, 1);
  if (name == "VII") return validate_medium(0.9, 1.835, 10, 1, 1, 1);
  if (name == "VIII") return validate_medium(0.9, 1.5, 10, 1, 1, 1);
  if (name == "IX") return validate_medium(0.9, 1, 10, 1, 1, 1);
  if (name == "iso") return validate_medium(3, 1, 3, 1, 1, 1);
  throw Error(ErrorCode::InvalidArgument, "unknown catalog medium '" + name + "'");
}

std::vector<std::string> medium_catalog_names() {
  return {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "iso"};
}

ElasticMedium medium_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::IoError, std::string("bad medium JSON: ") + e.what());
  }
  for (const char* key : {"c11", "c12", "c22", "c33"})
    if (!j.contains(key))
      throw Error(ErrorCode::InvalidArgument, std::string("medium JSON missing ") + key);
  return validate_medium(j["c11"].get<double>(), j["c12"].get<double>(),
                         j["c22"].get<double>(), j["c33"].get<double>(),
                         j.value("rho", 1.0), j.value("omega", 1.0));
}

ElasticMedium medium_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return medium_from_json_text(ss.str());
}

SignClass classify_sign(double value, double scale) {
  const double tol = 1e-12 * scale;
  if (value > tol) return SignClass::Positive;
  if (value < -tol) return SignClass::Negative;
  return SignClass::Degenerate;
}

DerivedCoefficients derive_coefficients(const ElasticMedium& medium, Axis axis) {
  DerivedCoefficients k;
  k.axis = axis;
  k.c11 = axis == Axis::X2 ? medium.c11 : medium.c22;
  k.c22 = axis == Axis::X2 ? medium.c22 : medium.c11;
  k.c12 = medium.c12;
  k.c33 = medium.c33;
  const double c11 = k.c11, c12 = k.c12, c22 = k.c22, c33 = k.c33;

  k.beta0 = c22 + c33;
  k.beta1 = c12 * c12 + 2 * c12 * c33 - c11 * c22;
  k.alpha0 = (c22 - c33) * (c22 - c33);
  k.alpha1 = (c22 + c33) * (c12 + c33) * (c12 + c33) -
             (c22 - c33) * (c11 * c22 - c33 * c33);
  k.alpha2 = (c11 * c22 - c12 * c12) * (c11 * c22 - (c12 + 2 * c33) * (c12 + 2 * c33));
  k.gamma2 = ((c12 + c33) * (c12 + c33) - c11 * (c22 - c33)) *
             ((c12 + c33) * (c12 + c33) + c33 * (c22 - c33));
  k.gamma1 = ((c12 + c33) * (c12 + c33) - c22 * (c11 - c33)) *
             ((c12 + c33) * (c12 + c33) + c33 * (c11 - c33));
  k.xi0_sq = (c11 + c33) / (2 * c11 * c33);

  const double cmax = std::max({c11, c22, c33, std::abs(c12)});
  k.sign_scale = cmax * cmax;
  k.sign_beta1 = classify_sign(k.beta1, k.sign_scale);
  // gamma and alpha coefficients carry four powers of c.
  const double scale4 = k.sign_scale * k.sign_scale;
  k.sign_gamma2 = classify_sign(k.gamma2, scale4);
  k.sign_alpha1 = classify_sign(k.alpha1, scale4 / cmax);
  k.sign_alpha2 = classify_sign(k.alpha2, scale4);

  // min over t >= 0 of Delta(t) = alpha0 + 2 alpha1 t + alpha2 t^2, exact
  // vertex form, no sampling.
  if (k.sign_alpha2 == SignClass::Positive) {
    const double tv = -k.alpha1 / k.alpha2;
    if (tv > 0) {
      k.delta_min_arg = tv;
      k.delta_min = k.alpha0 - k.alpha1 * k.alpha1 / k.alpha2;
    } else {
      k.delta_min_arg = 0;
      k.delta_min = k.alpha0;
    }
    if (classify_sign(k.delta_min, scale4) == SignClass::Degenerate) {
      k.delta_min_class = DeltaMinClass::NonNegative;
      k.delta_entire = tv > 0;
      k.delta_min = 0;
    } else if (k.delta_min < 0) {
      k.delta_min_class = DeltaMinClass::FiniteNegative;
    } else {
      k.delta_min_class = DeltaMinClass::NonNegative;
    }
  } else if (k.sign_alpha2 == SignClass::Degenerate) {
    if (k.sign_alpha1 == SignClass::Negative) {
      k.delta_min_class = DeltaMinClass::MinusInfinity;
      k.delta_min = -std::numeric_limits<double>::infinity();
    } else {
      k.delta_min_class = DeltaMinClass::NonNegative;
      k.delta_min = k.alpha0;
      k.delta_min_arg = 0;
    }
  } else {
    k.delta_min_class = DeltaMinClass::MinusInfinity;
    k.delta_min = -std::numeric_limits<double>::infinity();
  }

  // Crossing roots of (realroot) at epsilon = 0.
  {
    auto roots = crossing_points(k, 0.0);
    if (k.sign_beta1 != SignClass::Degenerate) {
      if (roots.size() == 2) k.crossings = {roots[0].first, roots[1].first};
      else if (roots.size() == 1) k.crossings = {roots[0].first, roots[0].first};
    }
  }

  // xi*^2 selection for the unbounded incoming interval.
  if (k.delta_min_class == DeltaMinClass::MinusInfinity) {
    if (k.sign_beta1 == SignClass::Degenerate) {
      if (k.sign_gamma2 == SignClass::Positive) k.xi_star_sq = k.xi0_sq;
    } else if (k.sign_beta1 == SignClass::Positive) {
      if (k.crossings) k.xi_star_sq = k.crossings->first;  // xi1^2
    } else {
      if (k.crossings) k.xi_star_sq = k.crossings->second;  // xi2^2
    }
  }
  return k;
}

std::vector<std::pair<double, double>> crossing_points(
    const DerivedCoefficients& k, double epsilon) {
  std::vector<std::pair<double, double>> out;
  if (epsilon < 0)
    throw Error(ErrorCode::InvalidArgument, "crossing_points needs epsilon >= 0");
  const double c11 = k.c11, c33 = k.c33;
  if (k.beta1_zero()) {
    // Lemma realcros(i): both crossings at xi0^2; report the negative member
    // of the mu^2 pair there (the pair product is negative).
    const double t0 = k.xi0_sq;
    const double d = k.delta(t0);
    const double r = d > 0 ? std::sqrt(d) : 0.0;
    const double zeta = (k.beta0 - r) / (2 * k.c33 * k.c22);
    out.emplace_back(t0, zeta);
    return out;
  }
  // alpha2 u^2 + 2 alpha1 u + (-gamma2/(c11 c33) + beta1^2 eps^2) = 0
  const double c0 = -k.gamma2 / (c11 * c33) + k.beta1 * k.beta1 * epsilon * epsilon;
  auto zeta0 = [&](double u) {
    return (2 * c11 * c33 * u - (c11 + c33)) / k.beta1;
  };
  if (k.alpha2_zero()) {
    if (!k.alpha1_zero()) {
      const double u = -c0 / (2 * k.alpha1);
      if (u > 0) out.emplace_back(u, zeta0(u));
    }
    return out;
  }
  const double disc = k.alpha1 * k.alpha1 - k.alpha2 * c0;
  if (disc < 0) return out;
  const double sq = std::sqrt(disc);
  // Stable quadratic roots.
  const double q = -(k.alpha1 + (k.alpha1 >= 0 ? sq : -sq));
  double u1 = q / k.alpha2;
  double u2 = (q != 0) ? c0 / q : 0.0;
  if (u1 > u2) std::swap(u1, u2);
  for (double u : {u1, u2})
    if (u > 0) out.emplace_back(u, zeta0(u));
  return out;
}

WaveRegime classify_regime(const DerivedCoefficients& k) {
  WaveRegime r;
  r.axis = k.axis;
  r.delta_min_class = k.delta_min_class;
  const double c11 = k.c11, c12 = k.c12, c22 = k.c22, c33 = k.c33;
  const double s = (c12 + c33) * (c12 + c33);
  const bool c1 = k.sign_gamma2 != SignClass::Positive;        // gamma2 <= 0
  const bool c1p = classify_sign(k.gamma1, k.sign_scale * k.sign_scale) !=
                   SignClass::Positive;                        // gamma1 <= 0
  const bool c2i = (c12 + 2 * c33) * (c12 + 2 * c33) <= c11 * c22;
  const bool c2ii = s < c11 * c22 + c33 * c33;
  const bool c31 = s <= (c11 - c33) * (c22 - c33);
  const bool c32 = (c22 + c33) * s >= (c22 - c33) * (c11 * c22 - c33 * c33);
  r.bfj_strong = c1 && c2i && c2ii && (c31 || c32);
  r.bfj_weak = c1p && c2i && c2ii && (c31 || c32);
  r.plus_branch_outgoing = true;
  switch (k.delta_min_class) {
    case DeltaMinClass::NonNegative:
      break;
    case DeltaMinClass::FiniteNegative:
      if (k.crossings) r.minus_branch_incoming = *k.crossings;
      break;
    case DeltaMinClass::MinusInfinity:
      if (k.xi_star_sq)
        r.minus_branch_incoming = {
            *k.xi_star_sq, std::numeric_limits<double>::infinity()};
      break;
  }
  return r;
}

}  // namespace elastg
