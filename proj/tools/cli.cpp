#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxalg/analysis.hpp"
#include "coxalg/cartan.hpp"
#include "coxalg/reference.hpp"

namespace coxalg::cli {

namespace {

// ---------------------------------------------------------------- helpers

std::string weight_str(const std::vector<unsigned>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::string join_u(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

Rat parse_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(Int(s));
  std::string frac = s.substr(dot + 1);
  Int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rat(Int(s.substr(0, dot)) * scale + Int(frac), scale);
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

IntPoly square_subst(const IntPoly& f) {
  std::vector<Int> c(2 * static_cast<std::size_t>(f.degree()) + 1);
  for (int k = 0; k <= f.degree(); ++k)
    c[2 * static_cast<std::size_t>(k)] = f.coeff(static_cast<std::size_t>(k));
  return IntPoly(c);
}

// ------------------------------------------------------------- table docs

struct TableDoc {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string note_cell(const std::vector<std::string>& notes) {
  std::string s;
  for (const auto& n : notes) {
    if (!s.empty()) s += "; ";
    s += n;
  }
  return s;
}

TableDoc table1_doc() {
  TableDoc doc{{"weight", "factorization", "spectral_radius", "index", "notes"}, {}};
  for (const auto& row : reference::table1()) {
    WeightSequence p(row.actual);
    CoxeterReport rep = coxeter_report(p);
    unsigned index = dynkin_index(dynkin_label(p));

    std::vector<std::string> notes;
    if (row.label_mismatch)
      notes.push_back("reference label " + weight_str(row.label));
    std::vector<Int> tail(row.tail.begin(), row.tail.end());
    if (cyclotomic_product(row.cyclo) * IntPoly(tail) != rep.f_hat) {
      std::string n = "reference factorization " + cyclo_list_str(row.cyclo) +
                      " with tail " + IntPoly(tail).str();
      if (row.tail_misprint_known) n += " (known duplicated-term misprint)";
      notes.push_back(n);
    }
    if (abs(rep.spectral.interval.mid() - parse_decimal(row.rho)) >
        Rat(5, 100000))
      notes.push_back("reference spectral radius " + row.rho);
    if (index != row.dynkin_index)
      notes.push_back("reference index " + std::to_string(row.dynkin_index));

    doc.rows.push_back({p.str(), rep.factorization.str(),
                        rep.spectral.decimal(4), std::to_string(index),
                        note_cell(notes)});
  }
  return doc;
}

TableDoc table2_doc() {
  TableDoc doc{{"weight", "factorization", "d", "c", "period", "singularity", "notes"},
               {}};
  for (const auto& row : reference::table2()) {
    WeightSequence p(row.weight);
    CoxeterReport rep = coxeter_report(p);
    auto dec = formal_decomposition(p);
    auto hyp = find_hypersurface(p);

    std::vector<std::string> notes;
    if (cyclotomic_product(row.cyclo) != rep.f_hat)
      notes.push_back("reference factorization " + cyclo_list_str(row.cyclo));
    Period ref_period =
        row.period_finite ? Period::of(row.period) : Period::infinite();
    if (!(ref_period == rep.period))
      notes.push_back("reference period " + ref_period.str());
    if (dec && (dec->d != row.d || dec->c != row.c))
      notes.push_back("reference d=(" + join_u(row.d) + ") c=(" +
                      join_u(row.c) + ")");

    doc.rows.push_back({p.str(), rep.factorization.str(),
                        dec ? "(" + join_u(dec->d) + ")" : "",
                        dec ? "(" + join_u(dec->c) + ")" : "",
                        rep.period.str(), hyp ? hyp->name : "",
                        note_cell(notes)});
  }
  return doc;
}

TableDoc table3_doc() {
  TableDoc doc{{"weight", "generators", "frobenius", "conductor", "notes"}, {}};
  for (const auto& row : reference::table3()) {
    WeightSequence p(row.actual);
    NumericalSemigroup m = support_monoid(p);

    std::vector<std::string> notes;
    if (row.label_collision)
      notes.push_back("reference label " + weight_str(row.label));
    if (m.generators != row.generators || m.frobenius != row.frobenius)
      notes.push_back("reference <" + join_u(row.generators) +
                      ">, frobenius " + std::to_string(row.frobenius));

    doc.rows.push_back({p.str(), "<" + join_u(m.generators) + ">",
                        std::to_string(m.frobenius),
                        std::to_string(m.conductor), note_cell(notes)});
  }
  return doc;
}

TableDoc hypersurface_doc(bool exceptional) {
  TableDoc doc{{"weight", "degrees", "relation", "degree", "name", "notes"}, {}};
  for (const auto& rec : hypersurface_registry()) {
    if (rec.exceptional_unimodal != exceptional) continue;

    HypersurfaceRecord shown = rec;
    std::vector<std::string> notes;
    if (!verify_record(rec).all()) {
      if (auto fix = derive_correction(rec)) {
        shown = *fix;
        notes.push_back("reference relation " + relation_str(rec) +
                        " of degree " + std::to_string(rec.rel_degree));
      } else {
        notes.push_back("fails verification; no unambiguous correction");
      }
    }
    doc.rows.push_back(
        {rec.weight.str(),
         "(" + join_u({shown.degrees.begin(), shown.degrees.end()}) + ")",
         relation_str(shown), std::to_string(shown.rel_degree), rec.name,
         note_cell(notes)});
  }
  return doc;
}

TableDoc build_table(unsigned which) {
  switch (which) {
    case 1: return table1_doc();
    case 2: return table2_doc();
    case 3: return table3_doc();
    case 4: return hypersurface_doc(true);
    default: return hypersurface_doc(false);
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render_csv(const TableDoc& doc) {
  std::ostringstream os;
  for (std::size_t i = 0; i < doc.columns.size(); ++i)
    os << (i ? "," : "") << csv_escape(doc.columns[i]);
  os << "\n";
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_escape(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_markdown(const TableDoc& doc) {
  std::ostringstream os;
  os << "|";
  for (const auto& c : doc.columns) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : doc.rows) {
    os << "|";
    for (const auto& cell : row) os << " " << cell << " |";
    os << "\n";
  }
  return os.str();
}

std::string render_json_table(unsigned which, const TableDoc& doc) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : doc.rows) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < doc.columns.size(); ++i)
      obj[doc.columns[i]] = row[i];
    rows.push_back(obj);
  }
  nlohmann::json j{{"table", which}, {"columns", doc.columns}, {"rows", rows}};
  return j.dump(2) + "\n";
}

// ----------------------------------------------------------------- output

int emit(const std::string& text, const std::string& out_file,
         std::ostream& out, std::ostream& err) {
  if (out_file.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(out_file);
  if (!f) {
    err << "error: cannot open '" << out_file << "' for writing\n";
    return 1;
  }
  f << text;
  return 0;
}

// --------------------------------------------------------------- commands

int cmd_analyze(const std::string& weight_text, bool as_json,
                std::ostream& out, std::ostream& err) {
  auto p = WeightSequence::parse(weight_text);
  if (!p) {
    err << "error: cannot parse weight sequence '" << weight_text << "'\n";
    return 2;
  }
  AnalysisReport r = analyze(*p);
  out << (as_json ? render_json(r) : render_text(r));
  return 0;
}

int cmd_table(unsigned which, std::string format, const std::string& out_file,
              std::ostream& out, std::ostream& err) {
  TableDoc doc = build_table(which);
  std::string text;
  if (format == "csv")
    text = render_csv(doc);
  else if (format == "json")
    text = render_json_table(which, doc);
  else
    text = render_markdown(doc);
  return emit(text, out_file, out, err);
}

struct Check {
  std::string name;
  unsigned pass = 0;
  unsigned fail = 0;
  std::vector<std::string> details;

  void tally(bool ok, const WeightSequence& p) {
    if (ok) {
      ++pass;
    } else {
      ++fail;
      if (details.size() < 10) details.push_back(p.str());
    }
  }
};

int cmd_verify(unsigned max_sum, unsigned max_t, unsigned max_entry,
               bool strict, std::ostream& out, std::ostream& err) {
  std::vector<WeightSequence> wild = enumerate_wild(max_sum, max_entry, max_t);
  std::vector<WeightSequence> all = enumerate_weights(max_sum, max_entry, max_t);

  Check shape{"f_hat shape"};
  Check poincare{"poincare identities"};
  Check represent{"representability"};
  Check circle{"circle criterion"};
  Check bound{"off-circle bound"};
  Check decomposition{"decomposition"};
  Check value_one{"value at one"};
  Check pole{"pole order at one"};
  Check monoid_min{"monoid minimum"};
  Check periodicity{"periodicity"};
  Check top_cyclo{"top cyclotomic"};
  Check matrices{"matrix agreement"};
  Check tits{"tits witness"};
  std::vector<std::string> exceptions;

  const WeightSequence box1({3, 3, 3, 3}), box2({2, 2, 2, 2, 4});

  for (const WeightSequence& p : wild) {
    try {
      IntPoly f_hat = extended_coxeter_poly(p);
      IntPoly f_can = canonical_coxeter_poly(p);

      shape.tally(f_hat.leading() == 1 && f_hat.coeff(0) == 1 &&
                      f_hat.palindromic() &&
                      f_hat.degree() == 3 + static_cast<int>(p.sum_minus_t()),
                  p);

      RatFunc closed = poincare_closed(p);
      poincare.tally(closed == poincare_via_coxeter(p) &&
                         closed == poincare_via_star(p),
                     p);

      represent.tally(represent_transform(q_poly(p)) == square_subst(f_hat), p);

      bool on_circle = roots_on_circle(p);
      circle.tally(on_circle == in_circle_list(p), p);

      unsigned off = off_circle_count(p);
      bound.tally(off <= 4 && off % 2 == 0 && (on_circle == (off == 0)), p);

      auto dec = formal_decomposition(p);
      bool dec_ok = dec.has_value() == on_circle;
      if (dec) {
        unsigned sum_d = 0, sum_c = 0;
        for (unsigned x : dec->d) sum_d += x;
        for (unsigned x : dec->c) sum_c += x;
        dec_ok = dec_ok && dec->d.size() >= 3 &&
                 dec->c.size() + 2 == dec->d.size() && 1 + sum_d == sum_c;
      }
      decomposition.tally(dec_ok, p);

      Rat rhs = Rat(p.t()) - 2;
      Int prod = 1;
      for (unsigned pi : p.parts()) {
        rhs -= Rat(1, pi);
        prod *= pi;
      }
      value_one.tally(Rat(f_hat.eval(Int(1))) == rhs * prod, p);

      pole.tally(closed.pole_order_at_one() == 2, p);

      NumericalSemigroup m = support_monoid(p);
      monoid_min.tally(!m.generators.empty() &&
                           m.generators.front() ==
                               dynkin_index(dynkin_label(p)),
                       p);

      bool expect_periodic = on_circle && p != box1 && p != box2;
      periodicity.tally(coxeter_period(p).finite == expect_periodic, p);

      top_cyclo.tally(periodic_with_top_cyclotomic(p) == three_generated(p), p);

      matrices.tally(
          char_poly(coxeter_matrix(cartan_extended(p))) == f_hat &&
              char_poly(coxeter_matrix(cartan_canonical(p))) == f_can,
          p);
    } catch (const std::exception& e) {
      if (exceptions.size() < 10)
        exceptions.push_back(p.str() + ": " + e.what());
    }
  }

  for (const WeightSequence& p : all) {
    try {
      tits.tally(tits_form(p, wildness_witness(p)) == -1, p);
    } catch (const std::exception& e) {
      if (exceptions.size() < 10)
        exceptions.push_back(p.str() + ": " + e.what());
    }
  }

  out << "verifying " << wild.size() << " wild weight sequences (sum <= "
      << max_sum << ", entries <= " << max_entry << ", arms <= " << max_t
      << ")\n";
  bool failed = !exceptions.empty();
  for (const Check* c :
       {&shape, &poincare, &represent, &circle, &bound, &decomposition,
        &value_one, &pole, &monoid_min, &periodicity, &top_cyclo, &matrices}) {
    out << "  " << c->name;
    for (std::size_t i = c->name.size(); i < 24; ++i) out << ' ';
    out << c->pass << "/" << (c->pass + c->fail) << "\n";
    failed = failed || c->fail > 0;
    for (const auto& d : c->details) out << "    fail: " << d << "\n";
  }
  out << "  " << tits.name;
  for (std::size_t i = tits.name.size(); i < 24; ++i) out << ' ';
  out << tits.pass << "/" << (tits.pass + tits.fail) << " (all types)\n";
  failed = failed || tits.fail > 0;
  for (const auto& d : tits.details) out << "    fail: " << d << "\n";
  for (const auto& e : exceptions) out << "  exception: " << e << "\n";

  unsigned deviations = 0;
  if (strict) {
    std::set<std::vector<unsigned>> targets;
    for (const auto& row : reference::table1()) targets.insert(row.actual);
    for (const auto& row : reference::table2()) targets.insert(row.weight);
    for (const auto& row : reference::table3()) targets.insert(row.actual);
    for (const auto& rec : hypersurface_registry())
      targets.insert(rec.weight.parts());

    std::vector<std::string> lines;
    for (const auto& parts : targets) {
      AnalysisReport r = analyze(WeightSequence(parts));
      for (const auto& a : r.annotations)
        lines.push_back(WeightSequence(parts).str() + ": " + a);
    }
    deviations = static_cast<unsigned>(lines.size());
    out << "reference comparison: " << targets.size() << " weights, "
        << deviations << " deviations\n";
    for (const auto& l : lines) out << "  " << l << "\n";
  }

  if (failed || (strict && deviations > 0)) {
    err << "verification failed\n";
    return 1;
  }
  out << "all invariants hold\n";
  return 0;
}

// ---------------------------------------------------------------- diagram

void dot_chain(std::ostringstream& os, const std::string& from, unsigned arm,
               unsigned count, const std::string& to, const std::string& label) {
  // Chain from -> a_arm_1 -> ... -> a_arm_count [-> to], each edge labeled.
  std::string prev = from;
  for (unsigned j = 1; j <= count; ++j) {
    std::string v = "a_" + std::to_string(arm) + "_" + std::to_string(j);
    os << "  " << prev << " -> " << v;
    if (!label.empty()) os << " [label=\"" << label << "\"]";
    os << ";\n";
    prev = v;
  }
  if (!to.empty()) {
    os << "  " << prev << " -> " << to;
    if (!label.empty()) os << " [label=\"" << label << "\"]";
    os << ";\n";
  }
}

std::string dot_quiver(const WeightSequence& p, bool extended) {
  std::ostringstream os;
  os << "digraph \"" << (extended ? "extended_canonical" : "canonical")
     << "\" {\n";
  os << "  // " << (extended ? "extended canonical algebra" : "canonical algebra")
     << ", weight " << p.str() << "\n";
  const auto& parts = p.parts();
  for (unsigned i = 3; i <= p.t(); ++i)
    os << "  // relation " << i - 2 << ": x_" << i << "^" << parts[i - 1]
       << " = x_2^" << parts[1] << " - lambda_" << i << " x_1^" << parts[0]
       << "\n";
  if (p.t() >= 3)
    os << "  // lambda_3 = 1; the lambda_i are pairwise distinct and nonzero\n";
  os << "  rankdir=LR;\n";
  for (unsigned i = 1; i <= p.t(); ++i)
    dot_chain(os, "v0", i, parts[i - 1] - 1, "omega",
              "x_" + std::to_string(i));
  if (extended) os << "  star -> omega;\n";
  os << "}\n";
  return os.str();
}

std::string dot_star(const WeightSequence& p) {
  std::ostringstream os;
  os << "digraph \"star\" {\n";
  os << "  // star [" << p.csv() << "]; arm i carries p_i - 1 vertices\n";
  os << "  // orientation immaterial: any orientation of a tree gives the"
        " same Coxeter polynomial\n";
  os << "  rankdir=LR;\n";
  for (unsigned i = 1; i <= p.t(); ++i)
    dot_chain(os, "v0", i, p.parts()[i - 1] - 1, "", "");
  os << "}\n";
  return os.str();
}

// Star graph with the given arm vertex counts and the tip of the last arm
// renamed star: the shape of the three exceptional double extended graphs.
void dot_star_with_tip(std::ostringstream& os, const std::vector<unsigned>& arms) {
  for (unsigned i = 1; i + 1 <= arms.size(); ++i)
    dot_chain(os, "v0", i, arms[i - 1], "", "");
  unsigned last = static_cast<unsigned>(arms.size());
  dot_chain(os, "v0", last, arms[last - 1] - 1, "star", "");
}

std::optional<std::string> dot_double_extended(const WeightSequence& p,
                                               std::string& error) {
  if (classify(p) != ReprType::Domestic) {
    error = "double-extended requires a domestic weight sequence; " +
            p.str() + " is not domestic";
    return std::nullopt;
  }
  std::ostringstream os;
  os << "digraph \"double_extended\" {\n";
  os << "  // double extended graph for weight " << p.str() << "\n";
  os << "  // orientation immaterial: any orientation of the graph gives the"
        " same Coxeter polynomial\n";
  os << "  rankdir=LR;\n";

  const auto& parts = p.parts();
  if (p.t() == 2) {
    // Cycle through v0 and omega with a pendant vertex at omega.
    os << "  // cycle of length " << p.sum() << " with a pendant vertex\n";
    dot_chain(os, "v0", 1, parts[0] - 1, "omega", "");
    dot_chain(os, "v0", 2, parts[1] - 1, "omega", "");
    os << "  omega -> star;\n";
  } else if (parts[1] == 2) {
    // (2,2,n): forked path, one far tip extended by the new vertex.
    unsigned n = parts[2];
    if (n == 2) {
      os << "  // star [2,2,2,3]\n";
      dot_star_with_tip(os, {1, 1, 1, 2});
    } else {
      os << "  // forked path, one fork tip carrying the pendant vertex\n";
      dot_chain(os, "v0", 1, 1, "", "");
      dot_chain(os, "v0", 2, 1, "", "");
      dot_chain(os, "v0", 3, n - 3, "omega", "");
      dot_chain(os, "omega", 4, 1, "", "");
      dot_chain(os, "omega", 5, 1, "star", "");
    }
  } else {
    // (2,3,3) -> [3,3,4], (2,3,4) -> [2,4,5], (2,3,5) -> [2,3,7].
    std::vector<unsigned> bracket =
        parts[2] == 3 ? std::vector<unsigned>{3, 3, 4}
        : parts[2] == 4 ? std::vector<unsigned>{2, 4, 5}
                        : std::vector<unsigned>{2, 3, 7};
    os << "  // star [" << join_u(bracket) << "]\n";
    std::vector<unsigned> arms;
    for (unsigned b : bracket) arms.push_back(b - 1);
    dot_star_with_tip(os, arms);
  }
  os << "}\n";
  return os.str();
}

int cmd_diagram(const std::string& weight_text, const std::string& kind,
                const std::string& out_file, std::ostream& out,
                std::ostream& err) {
  auto p = WeightSequence::parse(weight_text);
  if (!p) {
    err << "error: cannot parse weight sequence '" << weight_text << "'\n";
    return 2;
  }
  std::string text;
  if (kind == "canonical") {
    text = dot_quiver(*p, false);
  } else if (kind == "extended") {
    text = dot_quiver(*p, true);
  } else if (kind == "star") {
    text = dot_star(*p);
  } else {
    std::string error;
    auto dot = dot_double_extended(*p, error);
    if (!dot) {
      err << "error: " << error << "\n";
      return 2;
    }
    text = *dot;
  }
  return emit(text, out_file, out, err);
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  std::ostringstream out, err;

  CLI::App app{"Coxeter polynomials of extended canonical algebras"};
  app.name("coxalg");
  app.require_subcommand(1);

  std::string weight_text, format = "markdown", out_file, kind;
  bool as_json = false, strict = false;
  unsigned which = 1, max_sum = 18, max_t = 8, max_entry = 13;

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Full report for one weight sequence");
  analyze_cmd->add_option("weight", weight_text, "weight sequence, e.g. 2,3,7")
      ->required();
  analyze_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* table_cmd =
      app.add_subcommand("table", "Recompute one of the five bundled tables");
  table_cmd->add_option("which", which, "table number")
      ->required()
      ->check(CLI::Range(1u, 5u));
  table_cmd->add_option("--format", format, "csv, json, or markdown")
      ->check(CLI::IsMember({"csv", "json", "markdown", "md"}));
  table_cmd->add_option("--out", out_file, "write to a file instead of stdout");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check the cross-module invariants over an enumeration");
  verify_cmd->add_option("--max-sum", max_sum, "largest weight sum");
  verify_cmd->add_option("--max-t", max_t, "largest number of arms");
  verify_cmd->add_option("--max-entry", max_entry, "largest single weight");
  verify_cmd->add_flag("--strict", strict,
                       "treat reference-data deviations as failures");

  CLI::App* diagram_cmd =
      app.add_subcommand("diagram", "Emit a quiver or graph in DOT form");
  diagram_cmd->add_option("weight", weight_text, "weight sequence")->required();
  diagram_cmd
      ->add_option("--kind", kind,
                   "canonical, extended, star, or double-extended")
      ->required()
      ->check(CLI::IsMember({"canonical", "extended", "star", "double-extended"}));
  diagram_cmd->add_option("--out", out_file, "write to a file instead of stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    if (analyze_cmd->parsed())
      result.exit_code = cmd_analyze(weight_text, as_json, out, err);
    else if (table_cmd->parsed())
      result.exit_code = cmd_table(which, format, out_file, out, err);
    else if (verify_cmd->parsed())
      result.exit_code = cmd_verify(max_sum, max_t, max_entry, strict, out, err);
    else if (diagram_cmd->parsed())
      result.exit_code = cmd_diagram(weight_text, kind, out_file, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  }

  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace coxalg::cli
