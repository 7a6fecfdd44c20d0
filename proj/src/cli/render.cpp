#include "cmalg/render.hpp"

#include <algorithm>
#include <sstream>

namespace cma {

using json = nlohmann::ordered_json;

json ext_json(int v) {
  if (is_neg_inf(v)) return nullptr;
  if (is_pos_inf(v)) return "inf";
  return v;
}

std::string ext_text(int v) {
  if (is_neg_inf(v)) return "-inf";
  if (is_pos_inf(v)) return "inf";
  return std::to_string(v);
}

std::string render_betti(const BettiTable& T) {
  if (T.empty()) return "0\n";
  const int L = T.length();
  int lo = kPosInf, hi = kNegInf;
  for (auto& [ij, v] : T.entries) {
    lo = std::min(lo, ij.second - ij.first);
    hi = std::max(hi, ij.second - ij.first);
  }
  std::vector<std::string> labels{""};
  std::vector<std::vector<std::string>> cells(1);
  for (int i = 0; i <= L; ++i) cells[0].push_back(std::to_string(i));
  labels.push_back("total:");
  cells.emplace_back();
  for (int i = 0; i <= L; ++i) cells.back().push_back(std::to_string(T.total(i)));
  for (int r = lo; r <= hi; ++r) {
    labels.push_back(std::to_string(r) + ":");
    cells.emplace_back();
    for (int i = 0; i <= L; ++i) {
      long long v = T.at(i, i + r);
      cells.back().push_back(v ? std::to_string(v) : ".");
    }
  }
  size_t lw = 0;
  for (auto& l : labels) lw = std::max(lw, l.size());
  std::vector<size_t> cw(L + 1, 0);
  for (auto& row : cells)
    for (int i = 0; i <= L; ++i) cw[i] = std::max(cw[i], row[i].size());
  std::ostringstream out;
  for (size_t r = 0; r < cells.size(); ++r) {
    std::string line = std::string(lw - labels[r].size(), ' ') + labels[r];
    for (int i = 0; i <= L; ++i) line += " " + std::string(cw[i] - cells[r][i].size(), ' ') + cells[r][i];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

json ring_json(const RingContext& R) { return json{{"p", R.F().p}, {"vars", R.names}}; }

json betti_json(const RingContext& R, const BettiTable& T) {
  json entries = json::array();
  for (auto& [ij, v] : T.entries) entries.push_back(json::array({ij.first, ij.second, v}));
  json t = json::array();
  for (int p = 0; p <= T.length(); ++p) t.push_back(ext_json(T.t(p)));
  json pd = T.empty() ? json(nullptr) : json(T.length());
  return json{{"ring", ring_json(R)}, {"betti", entries}, {"reg", ext_json(T.regularity())}, {"pd", pd}, {"t", t}};
}

BettiTable betti_from_json(const json& j) {
  BettiTable T;
  for (auto& e : j.at("betti")) T.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<long long>();
  return T;
}

json summary_json(const GradedVectorSpaceSummary& s) {
  json dims = json::array();
  for (auto& [d, v] : s.dims) dims.push_back(json::array({d, v}));
  return json{{"dims", dims}, {"bottom", ext_json(s.bottom)}, {"top", ext_json(s.top)}, {"total", s.total()}};
}

std::string render_summary(const GradedVectorSpaceSummary& s) {
  if (s.dims.empty()) return "0\n";
  std::ostringstream out;
  for (auto& [d, v] : s.dims) out << "  degree " << d << ": " << v << "\n";
  return out.str();
}

std::string verdict(const BoundReport& r) {
  if (!r.applicable()) return "not-applicable";
  return r.numeric_holds() ? "holds" : "fails";
}

static const char* kind_name(StatementKind k) {
  switch (k) {
    case StatementKind::Theorem:
      return "theorem";
    case StatementKind::Conjecture:
      return "conjecture";
    default:
      return "informational";
  }
}

json report_json(const BoundReport& r) {
  json params = json::object();
  for (auto& [k, v] : r.params) params[k] = v;
  json hyps = json::array();
  for (auto& h : r.hypotheses) {
    json w = json::object();
    for (auto& [k, v] : h.witness) w[k] = ext_json(static_cast<int>(v));
    hyps.push_back(json{{"name", h.name}, {"pass", h.pass}, {"witness", w}});
  }
  json out{{"theorem_id", r.theorem_id},
           {"kind", kind_name(r.kind)},
           {"relation", r.relation == Relation::Eq ? "=" : "<="},
           {"params", params},
           {"hypothesis_results", hyps},
           {"lhs", ext_json(r.lhs)},
           {"rhs", ext_json(r.rhs)}};
  if (r.rhs_parts)
    out["rhs_parts"] = json{{"X", ext_json((*r.rhs_parts)[0])}, {"Y", ext_json((*r.rhs_parts)[1])},
                            {"Z", ext_json((*r.rhs_parts)[2])}};
  if (r.applicable())
    out["holds"] = r.numeric_holds();
  else
    out["holds"] = "not-applicable";
  out["numeric_holds"] = r.numeric_holds();
  out["sharp"] = r.sharp();
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

std::string render_report(const BoundReport& r) {
  std::ostringstream out;
  out << r.theorem_id;
  for (auto& [k, v] : r.params) out << " " << k << "=" << v;
  out << ": lhs " << ext_text(r.lhs) << (r.relation == Relation::Eq ? " = " : " <= ") << "rhs " << ext_text(r.rhs);
  if (r.rhs_parts)
    out << " (X " << ext_text((*r.rhs_parts)[0]) << ", Y " << ext_text((*r.rhs_parts)[1]) << ", Z "
        << ext_text((*r.rhs_parts)[2]) << ")";
  out << " [" << verdict(r);
  if (!r.applicable()) out << ", numerically " << (r.numeric_holds() ? "true" : "false");
  if (r.applicable() && r.sharp()) out << ", sharp";
  out << "]\n";
  for (auto& h : r.hypotheses) {
    out << "  " << (h.pass ? "pass" : "FAIL") << " " << h.name;
    for (auto& [k, v] : h.witness) out << " " << k << "=" << ext_text(static_cast<int>(v));
    out << "\n";
  }
  if (!r.note.empty()) out << "  note: " << r.note << "\n";
  return out.str();
}

static json finding_json(const FuzzFinding& f) {
  return json{{"instance", f.instance}, {"source", f.source}, {"report", report_json(f.report)}};
}

json fuzz_json(const FuzzReport& f) {
  json cfg{{"seed", f.config.seed},
           {"count", f.config.count},
           {"n", json::array({f.config.n_min, f.config.n_max})},
           {"d", json::array({f.config.d_min, f.config.d_max})},
           {"conjectures", f.config.conjectures},
           {"linearly_presented_only", f.config.linearly_presented_only},
           {"only", f.config.only}};
  json stats = json::object();
  for (auto& [id, s] : f.stats)
    stats[id] = json{{"checks", s.checks},
                     {"applicable", s.applicable},
                     {"holds", s.holds},
                     {"sharp", s.sharp},
                     {"near_sharp", s.near_sharp}};
  json v = json::array(), c = json::array(), ns = json::array(), errs = json::array();
  for (auto& x : f.violations) v.push_back(finding_json(x));
  for (auto& x : f.conjecture_violations) c.push_back(finding_json(x));
  for (auto& x : f.near_sharp) ns.push_back(finding_json(x));
  for (auto& [i, m] : f.errors) errs.push_back(json{{"instance", i}, {"message", m}});
  return json{{"config", cfg},
              {"instances", f.instances},
              {"hypothesis_satisfying", f.hypothesis_satisfying},
              {"checks", f.checks},
              {"violations", v},
              {"conjecture_violations", c},
              {"near_sharp", ns},
              {"errors", errs},
              {"stats", stats}};
}

std::string render_fuzz(const FuzzReport& f) {
  std::ostringstream out;
  out << "seed " << f.config.seed << ", n " << f.config.n_min << ".." << f.config.n_max << ", d " << f.config.d_min
      << ".." << f.config.d_max << "\n";
  out << "instances " << f.instances << ", hypothesis-satisfying " << f.hypothesis_satisfying << ", checks "
      << f.checks << "\n";
  out << "theorem violations " << f.violations.size() << ", conjecture violations " << f.conjecture_violations.size()
      << ", errors " << f.errors.size() << "\n";
  size_t w = 0;
  for (auto& [id, s] : f.stats) w = std::max(w, id.size());
  out << std::string(w, ' ') << "  checks applicable  holds  sharp\n";
  for (auto& [id, s] : f.stats) {
    out << id << std::string(w - id.size(), ' ');
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %6lld %10lld %6lld %6lld\n", s.checks, s.applicable, s.holds, s.sharp);
    out << buf;
  }
  for (auto& x : f.violations) out << "violation at instance " << x.instance << ":\n" << render_report(x.report) << x.source;
  for (auto& x : f.conjecture_violations)
    out << "conjecture violation at instance " << x.instance << ":\n" << render_report(x.report) << x.source;
  for (auto& [i, m] : f.errors) out << "error at instance " << i << ": " << m << "\n";
  return out.str();
}

}  // namespace cma
