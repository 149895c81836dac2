#include "orbispec/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "json.hpp"

namespace orbispec {

using nlohmann::ordered_json;

ReportFormat parse_format(const std::string& s) {
  if (s == "table") return ReportFormat::Table;
  if (s == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown format: " + s);
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string layout_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> w;
  for (const auto& r : rows)
    for (size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i) w.resize(i + 1, 0);
      w[i] = std::max(w[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

namespace {

std::string dump(ordered_json doc) { return doc.dump(2) + "\n"; }

ordered_json sym_json(const SymValue& v) {
  return ordered_json{{"exact", v.to_string()}, {"approx", v.approx()}};
}

ordered_json segment_json(const SpectrumSegment& seg) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : seg.entries)
    entries.push_back(
        ordered_json{{"eigenvalue", sym_json(e.lambda)}, {"mult", e.mult}});
  ordered_json out;
  out["entries"] = std::move(entries);
  out["cutoff"] = seg.cutoff ? sym_json(*seg.cutoff) : ordered_json(nullptr);
  return out;
}

ordered_json row_json(const SectorSpectrumRow& r, bool with_spectrum) {
  ordered_json out;
  out["label"] = r.label;
  out["nontwisted"] = r.nontwisted;
  out["m"] = r.m;
  out["dimension"] = r.dimension;
  out["kernel_order"] = r.kernel_order;
  out["supported"] = r.supported;
  if (!r.supported) out["reason"] = r.reason;
  out["volume"] = r.volume_known ? sym_json(r.volume_eff) : ordered_json(nullptr);
  if (with_spectrum && r.supported) out["spectrum"] = segment_json(r.seg);
  return out;
}

ordered_json spec_json(const GammaSpectrum& s, bool with_spectrum) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : s.rows) rows.push_back(row_json(r, with_spectrum));
  ordered_json out;
  out["name"] = s.orbifold;
  out["gamma"] = s.gamma;
  out["physical"] = s.physical;
  out["rows"] = std::move(rows);
  out["zero_multiplicity"] = s.zero_multiplicity;
  out["all_supported"] = s.all_supported;
  if (with_spectrum) out["merged"] = segment_json(s.merged);
  return out;
}

void spec_table(std::ostringstream& os, const GammaSpectrum& s, bool with_spectrum) {
  os << "orbifold " << s.orbifold << "  gamma " << s.gamma;
  if (s.physical) os << "  (physical flat eigenvalues 4 pi^2 mu)";
  os << "\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"sector", "dim", "m", "kernel", "volume", "status"});
  for (const auto& r : s.rows)
    rows.push_back({r.label, std::to_string(r.dimension), std::to_string(r.m),
                    std::to_string(r.kernel_order),
                    r.volume_known ? r.volume_eff.to_string() : "?",
                    r.supported ? "ok" : "unsupported: " + r.reason});
  os << layout_table(rows);
  os << "total components " << s.zero_multiplicity << "\n";
  if (!with_spectrum) return;
  os << "merged spectrum";
  if (s.merged.cutoff)
    os << " (complete below " << s.merged.cutoff->to_string() << ")";
  else
    os << " (complete)";
  if (!s.all_supported) os << "  [unsupported sectors missing]";
  os << "\n";
  std::vector<std::vector<std::string>> t{{"eigenvalue", "mult", "approx"}};
  for (const auto& e : s.merged.entries)
    t.push_back({e.lambda.to_string(), std::to_string(e.mult),
                 format_double(e.lambda.approx())});
  os << layout_table(t);
}

std::string render_specs(const std::vector<GammaSpectrum>& specs, ReportFormat f,
                         const char* command, bool with_spectrum) {
  if (f == ReportFormat::Json) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = command;
    ordered_json arr = ordered_json::array();
    for (const auto& s : specs) arr.push_back(spec_json(s, with_spectrum));
    doc["orbifolds"] = std::move(arr);
    return dump(std::move(doc));
  }
  std::ostringstream os;
  for (size_t i = 0; i < specs.size(); ++i) {
    if (i) os << "\n";
    spec_table(os, specs[i], with_spectrum);
  }
  return os.str();
}

// distinct eigenvalues of both merged segments below the compared region
std::vector<SymValue> union_eigenvalues(const GammaSpectrum& a, const GammaSpectrum& b,
                                        const std::optional<SymValue>& cutoff) {
  std::vector<SymValue> lams;
  auto push = [&lams](const SymValue& v) {
    for (const auto& x : lams)
      if (x == v) return;
    lams.push_back(v);
  };
  for (const auto& e : a.merged.entries) push(e.lambda);
  for (const auto& e : b.merged.entries) push(e.lambda);
  std::sort(lams.begin(), lams.end(),
            [](const SymValue& x, const SymValue& y) { return x.less_than(y); });
  if (cutoff) {
    while (!lams.empty() && !lams.back().less_than(*cutoff)) lams.pop_back();
  }
  return lams;
}

}  // namespace

std::string render_sectors(const std::vector<GammaSpectrum>& specs, ReportFormat f) {
  return render_specs(specs, f, "sectors", false);
}

std::string render_spectrum(const std::vector<GammaSpectrum>& specs, ReportFormat f) {
  return render_specs(specs, f, "spectrum", true);
}

std::string render_compare(const GammaSpectrum& a, const GammaSpectrum& b,
                           const CompareResult& r, ReportFormat f) {
  std::vector<SymValue> lams = union_eigenvalues(a, b, r.cutoff);
  if (f == ReportFormat::Json) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = "compare";
    doc["a"] = spec_json(a, true);
    doc["b"] = spec_json(b, true);
    ordered_json res;
    res["decided"] = r.decided;
    res["isospectral_below_cutoff"] = r.isospectral_below_cutoff;
    res["inconclusive_unsupported"] = r.inconclusive_unsupported;
    res["disagreement"] =
        r.disagreement ? sym_json(*r.disagreement) : ordered_json(nullptr);
    res["mult_a"] = r.mult_a;
    res["mult_b"] = r.mult_b;
    res["twisted_annotation"] = r.twisted_annotation;
    res["cutoff"] = r.cutoff ? sym_json(*r.cutoff) : ordered_json(nullptr);
    res["verdict"] = r.verdict;
    doc["result"] = std::move(res);
    return dump(std::move(doc));
  }
  std::ostringstream os;
  os << "compare " << a.orbifold << " vs " << b.orbifold << "  gamma " << a.gamma
     << "\n";
  os << "zero multiplicity " << a.zero_multiplicity << " vs " << b.zero_multiplicity
     << "\n";
  std::vector<std::vector<std::string>> t{{"eigenvalue", a.orbifold, b.orbifold, ""}};
  for (const auto& lam : lams)
    t.push_back({lam.to_string(), std::to_string(a.merged.multiplicity_of(lam)),
                 std::to_string(b.merged.multiplicity_of(lam)),
                 r.disagreement && *r.disagreement == lam ? "<- differs" : ""});
  os << layout_table(t);
  if (r.cutoff) os << "compared region: below " << r.cutoff->to_string() << "\n";
  os << "verdict: " << r.verdict << "\n";
  return os.str();
}

std::string render_heat(const std::vector<HeatReport>& reports, ReportFormat f) {
  if (f == ReportFormat::Json) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = "heat";
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json o;
      o["name"] = rep.spec.orbifold;
      o["gamma"] = rep.spec.gamma;
      ordered_json terms = ordered_json::array();
      for (const auto& term : rep.expansion.terms) {
        ordered_json tj;
        tj["dimension"] = term.dimension;
        tj["volume_sum"] = sym_json(term.volume_sum);
        tj["heat_coefficient"] = sym_json(term.heat_coefficient);
        terms.push_back(std::move(tj));
      }
      o["expansion"] = std::move(terms);
      o["unknown_volume_rows"] = rep.expansion.unknown_volume_rows;
      ordered_json vals = ordered_json::array();
      for (const auto& [t, hv] : rep.values) {
        ordered_json vj;
        vj["t"] = t;
        vj["heat_trace"] = hv.value;
        vj["terms_used"] = hv.terms_used;
        vj["truncated"] = hv.truncated;
        vals.push_back(std::move(vj));
      }
      o["values"] = std::move(vals);
      arr.push_back(std::move(o));
    }
    doc["orbifolds"] = std::move(arr);
    return dump(std::move(doc));
  }
  std::ostringstream os;
  for (size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    if (i) os << "\n";
    os << "orbifold " << rep.spec.orbifold << "  gamma " << rep.spec.gamma << "\n";
    os << "leading asymptotics, coefficient of (4 pi t)^(-d/2):\n";
    std::vector<std::vector<std::string>> t{
        {"dim", "volume sum", "approx", "heat coefficient", "approx"}};
    for (const auto& term : rep.expansion.terms)
      t.push_back({std::to_string(term.dimension), term.volume_sum.to_string(),
                   format_double(term.volume_sum.approx()),
                   term.heat_coefficient.to_string(),
                   format_double(term.heat_coefficient.approx())});
    os << layout_table(t);
    for (const auto& lbl : rep.expansion.unknown_volume_rows)
      os << "volume unknown for " << lbl << "\n";
    std::vector<std::vector<std::string>> v{{"t", "heat trace", "terms", "truncated"}};
    for (const auto& [tt, hv] : rep.values)
      v.push_back({format_double(tt), format_double(hv.value),
                   std::to_string(hv.terms_used), hv.truncated ? "yes" : "no"});
    os << layout_table(v);
  }
  return os.str();
}

std::string render_witness(const std::string& name_a, const std::string& name_b,
                           const AlmostConjugacyWitness& w, ReportFormat f) {
  if (f == ReportFormat::Json) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = "sunada";
    doc["a"] = name_a;
    doc["b"] = name_b;
    doc["invariant"] = w.invariant;
    ordered_json rows = ordered_json::array();
    for (const auto& [key, ca] : w.table_a) {
      auto it = w.table_b.find(key);
      ordered_json rj;
      rj["class"] = key;
      rj["count_a"] = ca;
      rj["count_b"] = it == w.table_b.end() ? 0 : it->second;
      rows.push_back(std::move(rj));
    }
    for (const auto& [key, cb] : w.table_b)
      if (!w.table_a.count(key)) {
        ordered_json rj;
        rj["class"] = key;
        rj["count_a"] = 0;
        rj["count_b"] = cb;
        rows.push_back(std::move(rj));
      }
    doc["classes"] = std::move(rows);
    doc["almost_conjugate"] = w.almost_conjugate;
    doc["conjugacy_checked"] = w.conjugacy_checked;
    if (w.conjugacy_checked) doc["conjugate_in_ambient"] = w.conjugate_in_ambient;
    doc["mismatched_classes"] = w.mismatched_keys;
    return dump(std::move(doc));
  }
  std::ostringstream os;
  os << "almost conjugacy " << name_a << " vs " << name_b << "\n";
  os << "invariant: " << w.invariant << "\n";
  std::vector<std::vector<std::string>> t{{"class", name_a, name_b}};
  for (const auto& [key, ca] : w.table_a) {
    auto it = w.table_b.find(key);
    t.push_back({key, std::to_string(ca),
                 std::to_string(it == w.table_b.end() ? 0 : it->second)});
  }
  for (const auto& [key, cb] : w.table_b)
    if (!w.table_a.count(key)) t.push_back({key, "0", std::to_string(cb)});
  os << layout_table(t);
  os << "almost conjugate: " << (w.almost_conjugate ? "yes" : "no") << "\n";
  if (w.conjugacy_checked)
    os << "conjugate in the ambient group: " << (w.conjugate_in_ambient ? "yes" : "no")
       << "\n";
  return os.str();
}

std::string render_certificate(const std::string& name_a, const std::string& name_b,
                               const std::string& gamma, const GammaCertificate& c,
                               ReportFormat f) {
  if (f == ReportFormat::Json) {
    ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["command"] = "certify";
    doc["a"] = name_a;
    doc["b"] = name_b;
    doc["gamma"] = gamma;
    doc["groups_almost_conjugate"] = c.groups.almost_conjugate;
    ordered_json rows = ordered_json::array();
    for (const auto& p : c.pairing) {
      ordered_json rj;
      rj["bucket"] = p.bucket;
      rj["sector_a"] = p.label_a;
      rj["sector_b"] = p.label_b;
      rj["passed"] = p.passed;
      if (!p.detail.empty()) rj["detail"] = p.detail;
      rows.push_back(std::move(rj));
    }
    doc["pairing"] = std::move(rows);
    doc["failures"] = c.failures;
    doc["certified"] = c.certified;
    doc["verdict"] = c.verdict;
    doc["note"] = c.proxy_note;
    return dump(std::move(doc));
  }
  std::ostringstream os;
  os << "certificate " << name_a << " vs " << name_b << "  gamma " << gamma << "\n";
  os << "acting groups almost conjugate: " << (c.groups.almost_conjugate ? "yes" : "no")
     << "\n";
  std::vector<std::vector<std::string>> t{{"bucket", "sector a", "sector b", "match"}};
  for (const auto& p : c.pairing)
    t.push_back({p.bucket, p.label_a, p.label_b, p.passed ? "yes" : "no"});
  os << layout_table(t);
  for (const auto& msg : c.failures) os << "failure: " << msg << "\n";
  os << "verdict: " << c.verdict << "\n";
  if (!c.proxy_note.empty()) os << "note: " << c.proxy_note << "\n";
  return os.str();
}

}  // namespace orbispec
