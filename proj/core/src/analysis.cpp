#include "coxalg/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include <json.hpp>

#include "coxalg/reference.hpp"

namespace coxalg {

namespace {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Parses a plain decimal like "1.1064" into an exact rational.
Rat parse_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(Int(s));
  std::string whole = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  Int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  Int num = Int(whole) * scale + Int(frac);
  return Rat(num, scale);
}

std::string cyclo_list_str(const reference::CycloList& list) {
  std::string s;
  for (const auto& [index, mult] : list) {
    if (!s.empty()) s += ' ';
    s += "phi_" + std::to_string(index);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s.empty() ? "1" : s;
}

std::string weight_str(const std::vector<unsigned>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

nlohmann::json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (lo <= v && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

nlohmann::json coeffs_json(const IntPoly& f) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int& c : f.coeffs()) a.push_back(json_int(c));
  return a;
}

nlohmann::json poly_json(const IntPoly& f) {
  return {{"degree", f.degree()}, {"coeffs", coeffs_json(f)}, {"str", f.str()}};
}

void compare_with_reference(AnalysisReport& r) {
  namespace ref = coxalg::reference;

  if (auto row = ref::table1_find(r.weight.parts())) {
    if (row->label_mismatch)
      r.annotations.push_back("reference row label reads " +
                              weight_str(row->label) + "; the data matches " +
                              r.weight.str());
    std::vector<Int> tail(row->tail.begin(), row->tail.end());
    IntPoly rebuilt = cyclotomic_product(row->cyclo) * IntPoly(tail);
    if (rebuilt != r.f_extended) {
      std::string msg = "reference factorization " +
                        cyclo_list_str(row->cyclo) + " with tail " +
                        IntPoly(tail).str() +
                        " does not rebuild f_hat; recomputed " +
                        r.factorization.str();
      if (row->tail_misprint_known) msg += " (known duplicated-term misprint)";
      r.annotations.push_back(msg);
    }
    Rat printed = parse_decimal(row->rho);
    Rat mid = r.spectral.interval.mid();
    if (abs(mid - printed) > Rat(5, 100000))
      r.annotations.push_back("reference spectral radius " + row->rho +
                              " is more than 5e-5 from the certified value " +
                              r.spectral.decimal(6));
    if (r.dynkin && dynkin_index(*r.dynkin) != row->dynkin_index)
      r.annotations.push_back(
          "reference index " + std::to_string(row->dynkin_index) +
          " disagrees with " + std::to_string(dynkin_index(*r.dynkin)));
  }

  if (auto row = ref::table2_find(r.weight.parts())) {
    if (cyclotomic_product(row->cyclo) != r.f_extended)
      r.annotations.push_back("reference factorization " +
                              cyclo_list_str(row->cyclo) +
                              " does not rebuild f_hat; recomputed " +
                              r.factorization.str());
    Period ref_period =
        row->period_finite ? Period::of(row->period) : Period::infinite();
    if (!(ref_period == r.period))
      r.annotations.push_back("reference period " + ref_period.str() +
                              "; recomputed " + r.period.str());
    if (r.decomposition &&
        (r.decomposition->d != row->d || r.decomposition->c != row->c))
      r.annotations.push_back(
          "reference decomposition d=(" + join(row->d) + ") c=(" +
          join(row->c) + "); recomputed d=(" + join(r.decomposition->d) +
          ") c=(" + join(r.decomposition->c) + ")");
  }

  for (const auto& row : ref::table3()) {
    if (row.actual != r.weight.parts()) continue;
    if (row.label_collision)
      r.annotations.push_back("reference monoid row label reads " +
                              weight_str(row.label) + "; the data matches " +
                              r.weight.str());
    if (r.monoid && (r.monoid->generators != row.generators ||
                     r.monoid->frobenius != row.frobenius))
      r.annotations.push_back(
          "reference monoid <" + join(row.generators) + "> with frobenius " +
          std::to_string(row.frobenius) + "; recomputed <" +
          join(r.monoid->generators) + "> with frobenius " +
          std::to_string(r.monoid->frobenius));
  }

  if (r.hypersurface && r.hypersurface->flagged) {
    std::string msg = "bundled equation for " + r.hypersurface->name +
                      " fails verification";
    if (auto fix = derive_correction(*r.hypersurface))
      msg += "; corrected to " + relation_str(*fix) + " of degree " +
             std::to_string(fix->rel_degree);
    r.annotations.push_back(msg);
  }
}

}  // namespace

AnalysisReport analyze(const WeightSequence& p) {
  CoxeterReport cox = coxeter_report(p);
  AnalysisReport r{
      .weight = p,
      .euler = euler_char(p),
      .repr_type = classify(p),
      .dynkin = std::nullopt,
      .f_canonical = canonical_coxeter_poly(p),
      .f_extended = cox.f_hat,
      .factorization = cox.factorization,
      .on_circle = cox.on_circle,
      .off_circle = cox.off_circle,
      .spectral = cox.spectral,
      .period = cox.period,
  };

  if (r.repr_type == ReprType::Wild) {
    r.dynkin = dynkin_label(p);
    PoincareProfile profile = poincare_profile(p);
    r.poincare = profile.series;
    r.series_coeffs = profile.coeffs;
    r.monoid = profile.monoid;
    r.decomposition = profile.decomposition;
    r.complete_intersection = profile.complete_intersection;
    r.three_gen =
        profile.decomposition && profile.decomposition->d.size() == 3;
    r.hypersurface = find_hypersurface(p);
  }

  compare_with_reference(r);
  return r;
}

std::string render_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["weight"] = r.weight.parts();
  j["euler_char"] = rat_str(r.euler);
  j["type"] = repr_type_name(r.repr_type);

  if (r.dynkin)
    j["dynkin"] = {{"name", dynkin_name(*r.dynkin)},
                   {"index", dynkin_index(*r.dynkin)}};
  else
    j["dynkin"] = nullptr;

  j["f_canonical"] = poly_json(r.f_canonical);
  j["f_extended"] = poly_json(r.f_extended);

  nlohmann::json factors = nlohmann::json::array();
  for (const auto& [index, mult] : r.factorization.factors)
    factors.push_back({index, mult});
  j["factorization"] = {
      {"factors", factors},
      {"remainder", r.factorization.fully_cyclotomic()
                        ? nlohmann::json(nullptr)
                        : coeffs_json(r.factorization.remainder)},
      {"str", r.factorization.str()}};

  j["roots_on_circle"] = r.on_circle;
  j["off_circle_count"] = r.off_circle;

  j["spectral_radius"] = {{"lo", rat_str(r.spectral.interval.lo)},
                          {"hi", rat_str(r.spectral.interval.hi)},
                          {"decimal", r.spectral.decimal(6)},
                          {"on_circle", r.spectral.on_circle},
                          {"dominant_real", r.spectral.dominant_real},
                          {"complex_quadruple", r.spectral.complex_quadruple}};

  j["period"] = r.period.finite ? nlohmann::json(r.period.value)
                                : nlohmann::json(nullptr);

  if (r.poincare)
    j["poincare"] = {{"num", coeffs_json(r.poincare->num())},
                     {"den", coeffs_json(r.poincare->den())},
                     {"str", r.poincare->str()}};
  else
    j["poincare"] = nullptr;

  nlohmann::json series = nlohmann::json::array();
  for (const Int& c : r.series_coeffs) series.push_back(json_int(c));
  j["series"] = series;

  if (r.monoid)
    j["monoid"] = {{"generators", r.monoid->generators},
                   {"frobenius", r.monoid->frobenius},
                   {"conductor", r.monoid->conductor}};
  else
    j["monoid"] = nullptr;

  if (r.decomposition)
    j["decomposition"] = {{"d", r.decomposition->d}, {"c", r.decomposition->c}};
  else
    j["decomposition"] = nullptr;

  j["complete_intersection"] = r.complete_intersection
                                   ? nlohmann::json(*r.complete_intersection)
                                   : nlohmann::json(nullptr);
  j["three_generated"] =
      r.three_gen ? nlohmann::json(*r.three_gen) : nlohmann::json(nullptr);

  if (r.hypersurface)
    j["hypersurface"] = {
        {"name", r.hypersurface->name},
        {"degrees", r.hypersurface->degrees},
        {"relation", relation_str(*r.hypersurface)},
        {"rel_degree", r.hypersurface->rel_degree},
        {"exceptional_unimodal", r.hypersurface->exceptional_unimodal},
        {"flagged", r.hypersurface->flagged}};
  else
    j["hypersurface"] = nullptr;

  j["annotations"] = r.annotations;
  return j.dump(2) + "\n";
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  auto line = [&os](const std::string& label, const std::string& value) {
    os << "  " << label;
    for (std::size_t i = label.size(); i < 24; ++i) os << ' ';
    os << value << "\n";
  };

  os << "weight " << r.weight.str() << "\n";
  line("euler characteristic", rat_str(r.euler));
  line("type", repr_type_name(r.repr_type));
  if (r.dynkin)
    line("dynkin label", dynkin_name(*r.dynkin) + " (index " +
                             std::to_string(dynkin_index(*r.dynkin)) + ")");
  line("f_C", r.f_canonical.str());
  line("f_hat", r.f_extended.str());
  line("factorization", r.factorization.str());
  if (r.on_circle)
    line("roots", "all on the unit circle");
  else
    line("roots", std::to_string(r.off_circle) + " off the unit circle");

  std::string sp = r.spectral.decimal(6);
  if (r.spectral.on_circle)
    sp += " (radius exactly 1)";
  else if (r.spectral.dominant_real)
    sp += " (dominant real pair)";
  else if (r.spectral.complex_quadruple)
    sp += " (complex quadruple)";
  line("spectral radius", sp);
  line("coxeter period", r.period.str());

  if (r.poincare) line("poincare series", r.poincare->str());
  if (!r.series_coeffs.empty()) {
    std::string s;
    std::size_t shown = std::min<std::size_t>(r.series_coeffs.size(), 16);
    for (std::size_t i = 0; i < shown; ++i) {
      if (i) s += ',';
      s += r.series_coeffs[i].str();
    }
    if (shown < r.series_coeffs.size()) s += ",...";
    line("series coefficients", s);
  }
  if (r.monoid)
    line("support monoid", "<" + join(r.monoid->generators) + ">, frobenius " +
                               std::to_string(r.monoid->frobenius) +
                               ", conductor " +
                               std::to_string(r.monoid->conductor));
  if (r.decomposition)
    line("decomposition",
         "d=(" + join(r.decomposition->d) + ") c=(" + join(r.decomposition->c) + ")");
  else if (r.repr_type == ReprType::Wild)
    line("decomposition", "none (roots leave the unit circle)");
  if (r.complete_intersection)
    line("complete intersection", *r.complete_intersection ? "yes" : "no");
  if (r.three_gen) line("three-generated", *r.three_gen ? "yes" : "no");
  if (r.hypersurface)
    line("hypersurface",
         r.hypersurface->name + ": " + relation_str(*r.hypersurface) +
             " = 0, degrees (" +
             join({r.hypersurface->degrees.begin(),
                   r.hypersurface->degrees.end()}) +
             "), degree " + std::to_string(r.hypersurface->rel_degree));

  if (!r.annotations.empty()) {
    os << "  notes\n";
    for (const auto& a : r.annotations) os << "    - " << a << "\n";
  }
  return os.str();
}

}  // namespace coxalg
