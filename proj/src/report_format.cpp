#include <sstream>

#include <json.hpp>

#include "packdense/verifier.hpp"

namespace packdense {

namespace {

using ojson = nlohmann::ordered_json;

std::string range_text(const CheckReport& r) {
  if (!r.range_lo) return "(empty)";
  return r.param + "=" + std::to_string(*r.range_lo) + ".." + std::to_string(*r.range_hi);
}

std::string interval_text(const RationalInterval& iv) {
  if (iv.degenerate()) return iv.lo.get_str();
  return "[" + to_decimal(iv.lo, 15) + ", " + to_decimal(iv.hi, 15) + "]";
}

ojson interval_json(const RationalInterval& iv) {
  return ojson{{"lo", iv.lo.get_str()},
               {"hi", iv.hi.get_str()},
               {"lo_decimal", to_decimal(iv.lo, 15)},
               {"hi_decimal", to_decimal(iv.hi, 15)}};
}

ojson report_json(const CheckReport& r) {
  ojson j;
  j["check_id"] = std::string(check_name(r.id));
  j["category"] = std::string(category_name(r.category));
  j["ell"] = r.ell;
  j["param"] = r.param;
  j["range"] = r.range_lo ? ojson{{"lo", *r.range_lo}, {"hi", *r.range_hi}} : ojson(nullptr);
  j["verdict"] = std::string(verdict_name(r.overall()));
  j["verdict_summary"] = ojson{{"PASS", r.count(Verdict::Pass)},
                               {"FAIL", r.count(Verdict::Fail)},
                               {"INCONCLUSIVE", r.count(Verdict::Inconclusive)},
                               {"NOT_APPLICABLE", r.count(Verdict::NotApplicable)}};
  j["threshold"] = r.threshold ? ojson(*r.threshold) : ojson(nullptr);
  j["note"] = r.note;
  ojson ws = ojson::array();
  for (const auto& w : r.witnesses) {
    ojson wj;
    wj["param"] = w.param;
    wj["value"] = w.value;
    wj["verdict"] = std::string(verdict_name(w.verdict));
    wj["detail"] = w.detail;
    wj["observed"] = w.observed ? ojson(*w.observed) : ojson(nullptr);
    wj["relation"] = w.relation ? ojson(*w.relation) : ojson(nullptr);
    wj["bound"] = w.bound ? interval_json(*w.bound) : ojson(nullptr);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

}  // namespace

std::string format_reports_human(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "[" << check_name(r.id) << "] " << verdict_name(r.overall()) << "  " << category_name(r.category)
        << "  ell=" << r.ell << "  " << range_text(r) << '\n';
    out << "  PASS=" << r.count(Verdict::Pass) << " FAIL=" << r.count(Verdict::Fail)
        << " INCONCLUSIVE=" << r.count(Verdict::Inconclusive) << " NOT_APPLICABLE=" << r.count(Verdict::NotApplicable)
        << '\n';
    if (r.threshold) out << "  threshold: " << r.param << "0=" << *r.threshold << '\n';
    if (!r.note.empty()) out << "  note: " << r.note << '\n';
    for (const auto& w : r.witnesses) {
      out << "  - " << w.param << "=" << w.value << " " << verdict_name(w.verdict) << ": " << w.detail;
      if (w.observed && w.relation && w.bound) {
        out << "; " << *w.observed << " " << *w.relation << " " << interval_text(*w.bound);
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string format_reports_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream out;
  out << "check_id,category,ell,param,range_lo,range_hi,verdict,pass,fail,inconclusive,not_applicable,threshold,"
         "witnesses\n";
  for (const auto& r : reports) {
    out << check_name(r.id) << ',' << category_name(r.category) << ',' << r.ell << ',' << r.param << ',';
    if (r.range_lo) out << *r.range_lo;
    out << ',';
    if (r.range_hi) out << *r.range_hi;
    out << ',' << verdict_name(r.overall()) << ',' << r.count(Verdict::Pass) << ',' << r.count(Verdict::Fail) << ','
        << r.count(Verdict::Inconclusive) << ',' << r.count(Verdict::NotApplicable) << ',';
    if (r.threshold) out << *r.threshold;
    out << ',' << r.witnesses.size() << '\n';
  }
  return out.str();
}

std::string format_reports_json(const std::vector<CheckReport>& reports) {
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace packdense
