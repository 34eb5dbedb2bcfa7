#include "borank/engine.hpp"

#include "json.hpp"

namespace borank {

namespace {

using json = nlohmann::ordered_json;

const char* grading_label(Grading g) {
  switch (g) {
    case Grading::AB: return "110";
    case Grading::AC: return "101";
    default: return "011";
  }
}

json test_json(const TestResult& t) {
  json j;
  j["test"] = t.name;
  j["shape"] = {t.rows, t.cols};
  j["required_kernel"] = t.required_kernel;
  if (t.parametric) {
    j["parametric"] = true;
    j["locus_branches"] = t.locus_branches;
  } else {
    j["rank"] = t.observed_rank;
    j["kernel"] = t.kernel_dim;
  }
  j["pass"] = t.pass;
  if (t.undecided) j["undecided"] = true;
  return j;
}

json point_json(const std::map<std::string, Rational>& pt) {
  json j = json::object();
  for (const auto& [k, v] : pt) j[k] = v.get_str();
  return j;
}

json stage_json(const StageReport& st) {
  json j;
  j["grading"] = grading_label(st.grading);
  j["eprime_dim"] = st.eprime_dim;
  j["candidates"] = st.families;
  j["passed"] = st.survivors;
  if (st.free_parameter_survivors) j["free_parameter_survivors"] = true;
  if (st.undecided) j["undecided"] = true;
  json details = json::array();
  for (const auto& o : st.outcomes) {
    json d;
    d["family"] = o.description;
    if (o.parametric) {
      d["parametric"] = true;
      d["params"] = o.params;
    }
    json tests = json::array();
    for (const auto& t : o.tests) tests.push_back(test_json(t));
    d["tests"] = tests;
    d["survivors"] = static_cast<int>(o.survivors.size());
    if (!o.survivor_points.empty()) {
      json pts = json::array();
      for (const auto& pt : o.survivor_points) pts.push_back(point_json(pt));
      d["survivor_points"] = pts;
    }
    if (o.survives_with_free_parameters) d["free_parameters"] = true;
    if (o.undecided) d["undecided"] = true;
    details.push_back(d);
  }
  j["details"] = details;
  return j;
}

json certificate_json(const Certificate& cert, bool with_hash) {
  json j;
  j["schema_version"] = cert.schema_version;
  j["tensor"] = cert.tensor;
  j["r"] = cert.r;
  j["degree_cap"] = cert.degree_cap;
  j["concise"] = cert.concise;
  j["flattening_ranks"] = {cert.flattening_ranks[0], cert.flattening_ranks[1],
                           cert.flattening_ranks[2]};
  if (cert.below_conciseness) j["below_conciseness"] = true;
  json stages = json::array();
  for (const auto& st : cert.stages) stages.push_back(stage_json(st));
  j["stages"] = stages;
  json triples;
  triples["total"] = cert.triples.total;
  triples["mod_symmetry"] = cert.triples.mod_symmetry;
  triples["tested"] = cert.triples.tested;
  triples["passed"] = cert.triples.passed;
  if (!cert.triples.passing.empty()) {
    json p = json::array();
    for (std::size_t i = 0; i < cert.triples.passing.size(); ++i) {
      const auto& t = cert.triples.passing[i];
      p.push_back({t[0], t[1], t[2], cert.triples.intersection_dims[i]});
    }
    triples["passing"] = p;
  }
  j["triples"] = triples;
  if (cert.quadratic.ran) {
    json q;
    q["triples_checked"] = cert.quadratic.triples_checked;
    q["fully_extended"] = cert.quadratic.fully_extended;
    if (cert.quadratic.undecided) q["undecided"] = true;
    j["quadratic_stage"] = q;
  }
  j["conclusion"] = cert.conclusion_string();
  if (with_hash) j["hash"] = cert.hash;
  return j;
}

}  // namespace

std::uint64_t certificate_hash(const Certificate& cert) {
  return fnv1a(certificate_json(cert, false).dump());
}

std::string to_json(const Certificate& cert) { return certificate_json(cert, true).dump(2); }

}  // namespace borank
