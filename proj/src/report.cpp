#include "bettiforge/report.hpp"

#include <iomanip>
#include <sstream>

namespace bettiforge {

using nlohmann::ordered_json;

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

// (2_9) style: runs of equal entries as value_count.
std::string compact(const std::vector<int>& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size();) {
    std::size_t j = i;
    while (j < seq.size() && seq[j] == seq[i]) ++j;
    if (i) out += ",";
    out += std::to_string(seq[i]);
    if (j - i > 1) out += "_" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

std::string list(const std::vector<int>& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? "," : "") + std::to_string(seq[i]);
  return out + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string classification(SigmaDimension s) {
  switch (s) {
    case SigmaDimension::kEmpty: return "smooth";
    case SigmaDimension::kZero: return "isolated";
    case SigmaDimension::kOne: return "one_dimensional";
    case SigmaDimension::kTwoOrMore: return "not_reduced";
  }
  return "unknown";
}

}  // namespace

ordered_json rational_json(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return ordered_json(c.get_num().get_si());
  return ordered_json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

ordered_json betti_json(const BettiData& b) {
  return ordered_json{{"d", b.d}, {"c", b.c}, {"b", b.b}, {"p", b.p()}, {"q", b.q()}, {"r", b.r()}};
}

ordered_json arithmetic_json(const BettiArithmetic& a) {
  ordered_json j;
  j["degree"] = a.betti.degree;
  j["betti"] = betti_json(a.betti);
  const auto& id = a.identities;
  j["identities"] = ordered_json{{"count_check", id.count_check},
                                 {"p_plus_r", id.p_plus_r},
                                 {"q_plus_3", id.q_plus_3},
                                 {"sum_check", id.sum_check},
                                 {"sum", id.sum},
                                 {"square_check", id.square_check},
                                 {"q2", id.q2},
                                 {"q3", id.q3},
                                 {"cube_tau", opt(id.cube_tau)}};
  const auto& hp = a.hilbert;
  j["sigma_dimension"] = to_string(hp.sigma);
  j["classification"] = classification(hp.sigma);
  j["tau"] = opt(hp.tau);
  if (hp.A && hp.B) {
    j["hilbert_polynomial"] = ordered_json{{"A_half", rational_json(ratio(*hp.A, 2))},
                                           {"B", rational_json(*hp.B)},
                                           {"A_even", hp.A_even},
                                           {"B_integral", hp.B_integral},
                                           {"k0", hp.k0}};
  } else if (hp.tau) {
    j["hilbert_polynomial"] = ordered_json{{"A_half", 0}, {"B", -*hp.tau}, {"k0", hp.k0}};
  } else {
    j["hilbert_polynomial"] = nullptr;
  }
  ordered_json bounds;
  if (a.tau_window)
    bounds["tau_window"] = ordered_json{{"lower", a.tau_window->lower},
                                        {"upper", a.tau_window->upper},
                                        {"tau", a.tau_window->tau},
                                        {"satisfied", a.tau_window->satisfied}};
  else
    bounds["tau_window"] = nullptr;
  if (a.cube_printed)
    bounds["cube_window_printed"] = ordered_json{{"lower", a.cube_printed->lower},
                                                 {"middle", a.cube_printed->middle},
                                                 {"upper", a.cube_printed->upper},
                                                 {"satisfied", a.cube_printed->satisfied}};
  else
    bounds["cube_window_printed"] = nullptr;
  if (a.cube_derived)
    bounds["cube_window_derived"] = ordered_json{
        {"lower", a.cube_derived->lower}, {"upper", a.cube_derived->upper}, {"satisfied", a.cube_derived->satisfied}};
  else
    bounds["cube_window_derived"] = nullptr;
  bounds["cube_window_discrepancy"] = a.cube_discrepancy;
  bounds["suspension_bound"] = opt(a.suspension_bound);
  j["bounds"] = bounds;
  if (a.type)
    j["type"] = ordered_json{{"t", a.type->t},
                             {"alpha", a.type->alpha},
                             {"beta", a.type->beta},
                             {"alpha_minus_beta", a.type->alpha_minus_beta},
                             {"consistent", a.type->consistent}};
  else
    j["type"] = nullptr;
  ordered_json coefs = ordered_json::array();
  for (const auto& c : a.coefficients) coefs.push_back(c.fits_slong_p() ? ordered_json(c.get_si()) : ordered_json(c.get_str()));
  j["dimension_coefficients"] = coefs;
  j["shape_ok"] = a.shape_ok;
  return j;
}

ordered_json report_json(const SurfaceReport& r) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "surface";
  j["field"] = r.field;
  j["modular"] = r.modular;
  const auto arith = arithmetic_json(r.arithmetic);
  for (const auto& [k, v] : arith.items()) j[k] = v;
  j["bounds"]["nodal_mdr_bound"] = opt(r.nodal_bound);
  if (r.mdr) {
    j["mdr"] = opt(r.mdr->mdr);
    j["mdr_bound"] = r.mdr->bound;
  } else {
    j["mdr"] = nullptr;
    j["mdr_bound"] = nullptr;
  }
  j["generators_of_degree_d_minus_1"] = r.generators_of_degree_d_minus_1;
  j["resolution_text"] = r.resolution_text;
  j["frame_ranks"] = r.frame_ranks;
  j["seconds"] = r.seconds;
  return j;
}

ordered_json report_json(const CurveReport& r) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "curve";
  j["degree"] = r.degree;
  j["field"] = r.field;
  j["modular"] = r.modular;
  j["betti"] = ordered_json{{"d", r.betti.d}, {"c", r.betti.c}, {"p", r.betti.p()}, {"q", r.betti.q()}};
  j["identities"] = ordered_json{{"count_check", r.count_check}, {"sum_check", r.sum_check}};
  j["epsilon"] = r.epsilon;
  j["epsilon_positive"] = r.epsilon_positive;
  j["type"] = ordered_json{{"t", r.type_t}, {"t_equals_epsilon_sum", opt(r.t_equals_epsilon_sum)}};
  j["classification"] = r.classification;
  j["tau"] = r.tau;
  if (r.exponents)
    j["exponents"] = {r.exponents->first, r.exponents->second};
  else
    j["exponents"] = nullptr;
  j["free_tau_check"] = opt(r.free_tau_check);
  j["resolution_text"] = r.resolution_text;
  return j;
}

std::string serialize_report(const SurfaceReport& r) { return report_json(r).dump(2); }
std::string serialize_report(const CurveReport& r) { return report_json(r).dump(2); }

std::string format_resolution(const BettiData& b) {
  auto modules = modules_from_betti(b);
  // Padded zero relations are bookkeeping, not summands.
  int pad = b.padded;
  if (pad > 0 && modules.size() > 2) {
    modules[1].shifts.resize(modules[1].shifts.size() - static_cast<std::size_t>(pad));
    auto& s = modules[2].shifts;
    s.erase(s.begin(), s.begin() + pad);
  }
  return format_modules(modules);
}

std::string render_arithmetic(const BettiArithmetic& a) {
  std::ostringstream os;
  const auto& b = a.betti;
  const auto& id = a.identities;
  os << "degree d = " << b.degree << "\n";
  os << "betti: d = " << compact(b.d) << ", c = " << compact(b.c) << ", b = " << compact(b.b) << "  (p, q, r) = ("
     << b.p() << ", " << b.q() << ", " << b.r() << ")\n";
  os << "identities: p + r = q + 3: " << yes_no(id.count_check) << " (" << id.p_plus_r << " vs " << id.q_plus_3 << ")"
     << "; sum = d - 1: " << yes_no(id.sum_check) << " (" << id.sum << ")"
     << "; q2 = " << id.q2 << "; q3 = " << id.q3 << "\n";
  const auto& hp = a.hilbert;
  os << "singular locus: " << to_string(hp.sigma);
  if (hp.sigma == SigmaDimension::kEmpty) os << " (smooth)";
  os << "\n";
  if (hp.tau) os << "tau = " << *hp.tau << (hp.B_integral ? "" : " (6 tau not divisible by 6!)") << "\n";
  if (hp.A && hp.B) {
    os << "Hilbert polynomial: P(u) = " << ratio(*hp.A, 2).get_str() << " u - " << hp.B->get_str() << "\n";
    if (!hp.A_even) os << "  note: A is odd\n";
    if (!hp.B_integral) os << "  note: B is not an integer\n";
  }
  if (hp.sigma != SigmaDimension::kTwoOrMore) os << "H(k) = P(k) from k0 = " << hp.k0 << " (scanned to " << hp.scan_bound << ")\n";
  if (a.tau_window)
    os << "tau window: " << a.tau_window->lower << " <= " << a.tau_window->tau << " <= " << a.tau_window->upper << ": "
       << yes_no(a.tau_window->satisfied) << "\n";
  if (a.cube_printed)
    os << "q3 window (printed form): " << a.cube_printed->lower << " <= " << a.cube_printed->middle
       << " <= " << a.cube_printed->upper << ": " << yes_no(a.cube_printed->satisfied) << "\n";
  if (a.cube_derived)
    os << "q3 window (from tau window): " << a.cube_derived->lower << " <= " << id.q3 << " <= " << a.cube_derived->upper
       << ": " << yes_no(a.cube_derived->satisfied) << "\n";
  if (a.cube_discrepancy) os << "  note: the two q3 windows disagree\n";
  if (a.suspension_bound) os << "suspension bound on tau: " << *a.suspension_bound << "\n";
  if (a.type)
    os << "type t = " << a.type->t << ", alpha = " << list(a.type->alpha) << ", beta = " << list(a.type->beta)
       << ", sum alpha - sum beta = " << a.type->alpha_minus_beta << "\n";
  if (!a.shape_ok) os << "  note: Betti data violates p >= 3 or has entries < 1\n";
  return os.str();
}

std::string render_text(const SurfaceReport& r) {
  std::ostringstream os;
  os << "field: " << r.field << (r.modular ? " (modular result: Betti numbers may exceed those over Q)" : "") << "\n";
  os << "resolution: " << r.resolution_text << "\n";
  os << render_arithmetic(r.arithmetic);
  if (r.mdr) {
    if (r.mdr->mdr)
      os << "mdr = " << *r.mdr->mdr << "\n";
    else
      os << "mdr: none <= " << r.mdr->bound << "\n";
  }
  if (r.nodal_bound) os << "nodal mdr bound = " << *r.nodal_bound << ", d - 1 = " << r.degree - 1 << "\n";
  os << "generators of degree d - 1: " << r.generators_of_degree_d_minus_1 << "\n";
  os << std::fixed << std::setprecision(3) << "time: " << r.seconds << " s\n";
  return os.str();
}

std::string render_text(const CurveReport& r) {
  std::ostringstream os;
  os << "field: " << r.field << (r.modular ? " (modular result)" : "") << "\n";
  os << "resolution: " << r.resolution_text << "\n";
  os << "degree d = " << r.degree << "\n";
  os << "betti: d' = " << compact(r.betti.d) << ", c' = " << compact(r.betti.c) << "\n";
  os << "identities: p' = q' + 2: " << yes_no(r.count_check) << "; sum = d - 1: " << yes_no(r.sum_check) << "\n";
  os << "epsilon = " << list(r.epsilon) << (r.epsilon_positive ? "" : " (entry below 1!)") << "\n";
  os << "type t(C) = " << r.type_t << " -> " << r.classification << "\n";
  if (r.t_equals_epsilon_sum) os << "t(C) = sum epsilon: " << yes_no(*r.t_equals_epsilon_sum) << "\n";
  os << "tau = " << r.tau << "\n";
  if (r.exponents)
    os << "exponents = (" << r.exponents->first << ", " << r.exponents->second << "), tau formula holds: "
       << yes_no(r.free_tau_check.value_or(false)) << "\n";
  return os.str();
}

}  // namespace bettiforge
