#include "sumfree/report.hpp"

#include <sstream>

#include "json.hpp"

namespace sumfree {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json optional_text(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

}  // namespace

std::string to_json(const Report& r) {
  json j;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["looped_removed"] = r.looped;
  j["mis"] = r.mis;
  j["nu"] = r.nu;
  j["branch"] = to_string(r.branch);
  j["matching_bound"] = r.matching_bound.to_string();
  json stability = json::array();
  for (const auto& b : r.stability) {
    json e;
    e["name"] = b.name;
    e["k"] = b.k;
    if (b.name == "tl") e["l"] = b.l;
    e["m"] = b.m;
    e["value"] = b.value.to_string();
    stability.push_back(std::move(e));
  }
  j["stability"] = std::move(stability);
  j["bound"] = r.bound.to_string();
  j["satisfied"] = r.satisfied;
  j["tight"] = r.tight;
  j["extremal_class"] = to_string(r.extremal);
  j["equality_matches_class"] = r.equality_matches_class;
  return dump(j);
}

std::string to_json(const SweepSummary& s) {
  json j;
  j["n_max"] = s.n_max;
  j["graphs"] = s.graphs;
  j["violations"] = s.violations;
  json levels = json::array();
  for (const auto& l : s.levels) {
    json e;
    e["n"] = l.n;
    e["graphs"] = l.graphs;
    e["matching_tight"] = l.matching_tight;
    e["type_a_tight"] = l.type_a_tight;
    e["type_b_tight"] = l.type_b_tight;
    e["moon_moser_tight"] = l.moon_moser_tight;
    e["triangle_free"] = l.triangle_free;
    e["hujter_tuza_tight"] = l.hujter_tuza_tight;
    e["identities_checked"] = l.identities_checked;
    e["max_mis_by_nu"] = l.max_mis_by_nu;
    e["violations"] = l.violations;
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  json recorded = json::array();
  for (const auto& v : s.recorded) {
    json e;
    e["n"] = v.n;
    e["mask"] = v.mask;
    e["check"] = v.check;
    e["detail"] = v.detail;
    e["graph6"] = v.graph6;
    recorded.push_back(std::move(e));
  }
  j["recorded_violations"] = std::move(recorded);
  return dump(j);
}

std::string to_json(const PipelineReport& p) {
  json j;
  j["group"] = p.group;
  j["order"] = p.order;
  j["two_rank"] = p.two_rank;
  j["exceptional"] = p.exceptional;
  j["half_sets"] = p.half_sets;
  j["half_sets_structured"] = p.half_sets_structured;
  j["distinct_half_sets"] = p.distinct_half_sets;
  j["distinct_half_sets_structured"] = p.distinct_half_sets_structured;
  j["distinct_oversize_sets"] = p.distinct_oversize_sets;
  j["distinct_pairs"] = p.distinct_pairs;
  j["order_two_cases"] = p.order_two_cases;
  j["order_two_matching_failures"] = p.order_two_matching_failures;
  j["half_cases"] = p.half_cases;
  j["half_cases_within"] = p.half_cases_within;
  j["pairs_above_quarter"] = p.pairs_above_quarter;
  j["max_mis"] = p.max_mis;
  j["full_pairs"] = p.full_pairs;
  j["full_exceeds_distinct"] = p.full_exceeds_distinct;
  j["ok"] = p.ok();
  j["first_failure"] = optional_text(p.first_failure);
  return dump(j);
}

std::string to_json(const LinkReductionSummary& s) {
  json j;
  j["maximal_sets"] = s.maximal_sets;
  j["pairs"] = s.pairs;
  j["violations_full"] = s.violations_full;
  j["violations_distinct"] = s.violations_distinct;
  j["equal_full"] = s.equal_full;
  j["equal_distinct"] = s.equal_distinct;
  j["first_violation"] = optional_text(s.first_violation);
  return dump(j);
}

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "n,edges,looped_removed,mis,nu,branch,matching_bound,bound,satisfied,tight,extremal_class,"
        "equality_matches_class\n";
  os << r.n << ',' << r.edges << ',' << r.looped << ',' << r.mis << ',' << r.nu << ',' << to_string(r.branch) << ','
     << r.matching_bound.to_string() << ',' << r.bound.to_string() << ',' << r.satisfied << ',' << r.tight << ','
     << to_string(r.extremal) << ',' << r.equality_matches_class << '\n';
  return os.str();
}

std::string to_csv(const SweepSummary& s) {
  std::ostringstream os;
  os << "n,graphs,matching_tight,type_a_tight,type_b_tight,moon_moser_tight,triangle_free,hujter_tuza_tight,"
        "identities_checked,violations\n";
  for (const auto& l : s.levels) {
    os << l.n << ',' << l.graphs << ',' << l.matching_tight << ',' << l.type_a_tight << ',' << l.type_b_tight << ','
       << l.moon_moser_tight << ',' << l.triangle_free << ',' << l.hujter_tuza_tight << ',' << l.identities_checked
       << ',' << l.violations << '\n';
  }
  if (!s.recorded.empty()) {
    os << "\nn,mask,check,detail,graph6\n";
    for (const auto& v : s.recorded) {
      os << v.n << ',' << v.mask << ',' << v.check << ",\"" << v.detail << "\"," << v.graph6 << '\n';
    }
  }
  return os.str();
}

std::string to_csv(const PipelineReport& p) {
  std::ostringstream os;
  os << "group,order,exceptional,half_sets,half_sets_structured,distinct_pairs,order_two_cases,"
        "order_two_matching_failures,half_cases,half_cases_within,pairs_above_quarter,max_mis,full_pairs,"
        "full_exceeds_distinct,ok\n";
  os << '"' << p.group << "\"," << p.order << ',' << p.exceptional << ',' << p.half_sets << ','
     << p.half_sets_structured << ',' << p.distinct_pairs << ',' << p.order_two_cases << ','
     << p.order_two_matching_failures << ',' << p.half_cases << ',' << p.half_cases_within << ','
     << p.pairs_above_quarter << ',' << p.max_mis << ',' << p.full_pairs << ',' << p.full_exceeds_distinct << ','
     << p.ok() << '\n';
  return os.str();
}

}  // namespace sumfree
