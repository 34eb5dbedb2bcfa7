#include "borank/engine.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>

#include "borank/parallel.hpp"

namespace borank {

namespace {

const char* grading_name(Grading g) {
  switch (g) {
    case Grading::AB: return "110";
    case Grading::AC: return "101";
    default: return "011";
  }
}

SpacePtr third_factor(const TensorSystem& sys, Grading g) {
  return g == Grading::AB ? sys.C : (g == Grading::AC ? sys.B : sys.A);
}

struct GradingData {
  Grading g;
  Subspace flat;  // T's flattening image in pair coordinates
  std::shared_ptr<const WeightedModule> comp;
  int eprime_dim = 0;
};

GradingData grading_data(const TensorSystem& sys, Grading g, int r) {
  GradingData gd;
  gd.g = g;
  gd.flat = flattening(sys, g);
  gd.comp = std::make_shared<const WeightedModule>(complement_module(sys, g));
  gd.eprime_dim = r - gd.flat.dim();
  return gd;
}

std::vector<SparseRow> full_basis(const GradingData& gd, const Subspace& eprime) {
  std::vector<SparseRow> rows;
  rows.reserve(gd.flat.dim() + eprime.dim());
  for (int i = 0; i < gd.flat.dim(); ++i) rows.push_back(gd.flat.basis_rows().row(i));
  for (int i = 0; i < eprime.dim(); ++i) rows.push_back(gd.comp->embed(eprime.basis_rows().row(i)));
  return rows;
}

Subspace full_subspace(const TensorSystem& sys, const GradingData& gd, const Subspace& eprime) {
  return Subspace::span(sys.pair_space(gd.g)->dim(), full_basis(gd, eprime));
}

const char* side_name(Grading g, PairSide side) {
  switch (g) {
    case Grading::AB: return side == PairSide::S210 ? "210" : "120";
    case Grading::AC: return side == PairSide::S210 ? "201" : "102";
    default: return side == PairSide::S210 ? "021" : "012";
  }
}

TestResult pairwise_exact(const TensorSystem& sys, const GradingData& gd, const Subspace& eprime,
                          PairSide side, int r) {
  TestResult t;
  t.name = side_name(gd.g, side);
  t.required_kernel = r;
  SparseMatrix m = skew_map_matrix(sys, gd.g, full_basis(gd, eprime), side);
  t.rows = m.nrows();
  t.cols = m.ncols();
  t.observed_rank = rank(m);
  t.kernel_dim = t.cols - t.observed_rank;
  t.pass = t.kernel_dim >= r;
  return t;
}

// stacked parametric skew matrix: constant flattening block plus family rows
PolyMatrix pairwise_poly_matrix(const TensorSystem& sys, const GradingData& gd,
                                const BorelFixedFamily& fam, PairSide side) {
  const int pair_dim = sys.pair_space(gd.g)->dim();
  PolyMatrix rows(gd.flat.dim() + fam.dim(), pair_dim, fam.ring);
  for (int i = 0; i < gd.flat.dim(); ++i)
    for (const auto& [c, v] : gd.flat.basis_rows().row(i))
      rows.add_to(i, c, Poly::constant(fam.ring, v));
  for (int i = 0; i < fam.dim(); ++i)
    for (const auto& [mc, p] : fam.rows.row(i))
      for (const auto& [pc, coeff] : gd.comp->basis[mc])
        rows.add_to(gd.flat.dim() + i, pc, p * coeff);
  return skew_map_matrix(sys, gd.g, rows, side);
}

std::vector<LocusRecord> pairwise_locus(const TensorSystem& sys, const GradingData& gd,
                                        const BorelFixedFamily& fam, PairSide side, int r,
                                        TestResult* info) {
  PolyMatrix m = pairwise_poly_matrix(sys, gd, fam, side);
  info->name = side_name(gd.g, side);
  info->required_kernel = r;
  info->rows = m.nrows();
  info->cols = m.ncols();
  info->parametric = true;
  // kernel >= r  <=>  rank <= cols - r  <=>  rank < cols - r + 1
  auto recs = rank_locus(m, m.ncols() - r + 1);
  info->locus_branches = static_cast<int>(recs.size());
  info->pass = !recs.empty();
  return recs;
}

// exact verification of a parameter point: B-fixed and both kernels >= r
bool verify_point(const TensorSystem& sys, const GradingData& gd, const BorelFixedFamily& fam,
                  const std::map<std::string, Rational>& pt, Subspace* eprime_out) {
  std::map<std::string, Rational> full = pt;
  for (const auto& p : fam.params)
    if (!full.count(p)) return false;
  for (const Poly& eq : fam.closure_eqs)
    if (!is_zero(eq.evaluate(full))) return false;
  Subspace eprime = fam.specialize(full);
  if (!fam.is_raising_stable(eprime)) return false;
  const int r = gd.eprime_dim + gd.flat.dim();
  if (!pairwise_exact(sys, gd, eprime, PairSide::S210, r).pass) return false;
  if (!pairwise_exact(sys, gd, eprime, PairSide::S120, r).pass) return false;
  if (eprime_out) *eprime_out = eprime;
  return true;
}

void push_survivor(FamilyOutcome& out, const Subspace& eprime,
                   const std::map<std::string, Rational>& pt) {
  for (const auto& s : out.survivors)
    if (s == eprime) return;
  out.survivors.push_back(eprime);
  out.survivor_points.push_back(pt);
}

// small grid sampling fallback for families the solver cannot finish
void grid_sample(const TensorSystem& sys, const GradingData& gd, const BorelFixedFamily& fam,
                 FamilyOutcome& out) {
  if (fam.params.size() > 4) return;
  const std::vector<Rational> grid = {rat(0), rat(1), rat(-1), rat(2)};
  std::vector<std::size_t> idx(fam.params.size(), 0);
  while (true) {
    std::map<std::string, Rational> pt;
    for (std::size_t i = 0; i < fam.params.size(); ++i) pt[fam.params[i]] = grid[idx[i]];
    bool ok = true;
    for (const Poly& eq : fam.closure_eqs)
      if (!is_zero(eq.evaluate(pt))) { ok = false; break; }
    if (ok) {
      Subspace eprime;
      if (verify_point(sys, gd, fam, pt, &eprime)) push_survivor(out, eprime, pt);
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
    if (idx.empty() || i == idx.size()) break;
  }
}

FamilyOutcome resolve_family(const TensorSystem& sys, const GradingData& gd,
                             const BorelFixedFamily& fam, int r) {
  FamilyOutcome out;
  out.description = fam.describe();
  out.parametric = !fam.discrete();
  out.params = fam.params;
  if (fam.discrete()) {
    Subspace eprime = fam.as_subspace();
    TestResult t1 = pairwise_exact(sys, gd, eprime, PairSide::S210, r);
    out.tests.push_back(t1);
    if (t1.pass) {
      TestResult t2 = pairwise_exact(sys, gd, eprime, PairSide::S120, r);
      out.tests.push_back(t2);
      if (t2.pass) push_survivor(out, eprime, {});
    }
    return out;
  }
  TestResult t1, t2;
  auto l1 = pairwise_locus(sys, gd, fam, PairSide::S210, r, &t1);
  out.tests.push_back(t1);
  if (l1.empty()) return out;  // certified: no parameter passes the first test
  auto l2 = pairwise_locus(sys, gd, fam, PairSide::S120, r, &t2);
  out.tests.push_back(t2);
  if (l2.empty()) return out;
  // both loci nonempty somewhere; a candidate needs a common point that also
  // satisfies the cell's residual closure equations
  for (const auto& rec1 : l1) {
    for (const auto& rec2 : l2) {
      std::vector<Poly> eqs = rec1.generators;
      eqs.insert(eqs.end(), rec2.generators.begin(), rec2.generators.end());
      eqs.insert(eqs.end(), fam.closure_eqs.begin(), fam.closure_eqs.end());
      std::vector<Poly> inverted = rec1.inverted;
      inverted.insert(inverted.end(), rec2.inverted.begin(), rec2.inverted.end());
      SolveResult sol = solve_system(fam.ring, eqs, inverted, fam.params);
      switch (sol.kind) {
        case SolveResult::Empty:
          break;
        case SolveResult::Points: {
          for (const auto& pt : sol.points) {
            Subspace eprime;
            if (verify_point(sys, gd, fam, pt, &eprime)) push_survivor(out, eprime, pt);
          }
          break;
        }
        case SolveResult::FreeComponent: {
          for (const auto& pt : sol.points) {
            Subspace eprime;
            if (verify_point(sys, gd, fam, pt, &eprime)) push_survivor(out, eprime, pt);
          }
          // exhibit a point of the free component if the grid finds one
          FamilyOutcome probe;
          grid_sample(sys, gd, fam, probe);
          if (!probe.survivors.empty()) {
            for (std::size_t i = 0; i < probe.survivors.size(); ++i)
              push_survivor(out, probe.survivors[i], probe.survivor_points[i]);
            out.survives_with_free_parameters = true;
          } else {
            out.undecided = true;
          }
          break;
        }
        case SolveResult::Stuck: {
          grid_sample(sys, gd, fam, out);
          out.undecided = true;  // refutation/completeness not certified
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace

StageReport run_stage(const TensorSystem& sys, Grading g, int r, int workers) {
  StageReport rep;
  rep.grading = g;
  GradingData gd = grading_data(sys, g, r);
  rep.eprime_dim = gd.eprime_dim;
  if (gd.eprime_dim < 0) return rep;  // no candidate can contain the flattening
  auto families = enumerate_borel_fixed(gd.comp, gd.eprime_dim);
  rep.families = static_cast<int>(families.size());
  std::function<FamilyOutcome(int)> task = [&](int i) {
    return resolve_family(sys, gd, families[static_cast<std::size_t>(i)], r);
  };
  rep.outcomes = parallel_index_map<FamilyOutcome>(rep.families, workers, task);
  for (const auto& o : rep.outcomes) {
    rep.survivors += static_cast<int>(o.survivors.size());
    rep.free_parameter_survivors |= o.survives_with_free_parameters;
    rep.undecided |= o.undecided;
  }
  return rep;
}

namespace {

struct SurvivorList {
  std::vector<Subspace> eprime;       // complement-module coordinates
  std::vector<Subspace> full;         // pair coordinates, flattening included
};

SurvivorList collect_survivors(const TensorSystem& sys, const GradingData& gd,
                               const StageReport& rep) {
  SurvivorList list;
  for (const auto& o : rep.outcomes)
    for (const auto& s : o.survivors) {
      list.eprime.push_back(s);
      list.full.push_back(full_subspace(sys, gd, s));
    }
  return list;
}

// --- symmetry transports -------------------------------------------------

// cyclic transport of complement-module coordinates for M<n>:
// AB -> BC, BC -> AC, AC -> AB (see the derivation in the tests).
std::vector<int> cyclic_index_map(const TensorSystem& sys, Grading from) {
  const int n = sys.groups[0].second;  // l = m = n
  const int v = n;
  const int sl = v * v - 1;
  const int nroots = v * v - v;
  auto root_pair = [&](int x) {
    int cnt = 0;
    for (int a = 0; a < v; ++a)
      for (int b = 0; b < v; ++b) {
        if (a == b) continue;
        if (cnt == x) return std::pair<int, int>(a, b);
        ++cnt;
      }
    throw std::logic_error("root_pair");
  };
  auto root_index = [&](int a, int b) {
    int cnt = 0;
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j) {
        if (i == j) continue;
        if (i == a && j == b) return cnt;
        ++cnt;
      }
    throw std::logic_error("root_index");
  };
  std::vector<int> out(n * n * sl);
  for (int o1 = 0; o1 < n; ++o1)
    for (int o2 = 0; o2 < n; ++o2)
      for (int x = 0; x < sl; ++x) {
        const int idx = (o1 * n + o2) * sl + x;
        int tgt;
        if (from == Grading::AB) {
          // (s, xi, t) -> BC (j=s, xi, i=t), same arithmetic layout
          tgt = (o1 * n + o2) * sl + x;
        } else if (from == Grading::BC) {
          // (j, xi=(c,d), i) -> AC (j'=i, k'=j, xi'=(d,c))
          int x2 = x;
          if (x < nroots) {
            auto [c, d] = root_pair(x);
            x2 = root_index(d, c);
          }
          tgt = (o2 * n + o1) * sl + x2;
        } else {
          // AC (j, k, xi=(a,b)) -> AB (s=k, t=j, xi'=(b,a))
          int x2 = x;
          if (x < nroots) {
            auto [a, b] = root_pair(x);
            x2 = root_index(b, a);
          }
          tgt = (o2 * n + o1) * sl + x2;
        }
        out[idx] = tgt;
      }
  return out;
}

Subspace transport_subspace(const Subspace& s, const std::vector<int>& index_map) {
  std::vector<SparseRow> rows;
  for (int i = 0; i < s.dim(); ++i) {
    SparseRow v;
    for (const auto& [c, val] : s.basis_rows().row(i)) v.emplace_back(index_map[c], val);
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    rows.push_back(std::move(v));
  }
  return Subspace::span(s.ambient_dim(), rows);
}

int find_subspace(const std::vector<Subspace>& list, const Subspace& s) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == s) return static_cast<int>(i);
  return -1;
}

}  // namespace

namespace {

struct TripleAction {
  // new_triple[dest[i]] = map[i][old_triple[i]]
  std::array<int, 3> dest;
  std::array<std::vector<int>, 3> map;
};

long orbit_count(const std::array<int, 3>& sizes, const std::vector<TripleAction>& gens) {
  std::set<std::array<int, 3>> seen;
  long orbits = 0;
  for (int p = 0; p < sizes[0]; ++p)
    for (int q = 0; q < sizes[1]; ++q)
      for (int s = 0; s < sizes[2]; ++s) {
        std::array<int, 3> t{p, q, s};
        if (seen.count(t)) continue;
        ++orbits;
        // BFS over the orbit
        std::vector<std::array<int, 3>> stack{t};
        seen.insert(t);
        while (!stack.empty()) {
          auto cur = stack.back();
          stack.pop_back();
          for (const auto& g : gens) {
            std::array<int, 3> nxt{};
            for (int i = 0; i < 3; ++i) nxt[g.dest[i]] = g.map[i][cur[i]];
            if (!seen.count(nxt)) {
              seen.insert(nxt);
              stack.push_back(nxt);
            }
          }
        }
      }
  return orbits;
}

}  // namespace

namespace {

// quadratic-stage candidate search for one direction: is there a B-fixed
// r-dimensional E_2 inside S^2(factor) passing the three tests that involve
// it, given the fixed triple pieces?
struct QuadResult {
  bool found = false;
  bool undecided = false;
};

QuadResult quadratic_direction(const TensorSystem& sys, int dir, int r,
                               const Subspace& e110, const Subspace& e101,
                               const Subspace& e011) {
  QuadResult res;
  const SpacePtr factor = dir == 0 ? sys.A : (dir == 1 ? sys.B : sys.C);
  SpacePtr s2 = TensorSpace::sym(2, factor);
  if (r > s2->dim()) return res;  // codim-r piece cannot exist
  auto module = std::make_shared<const WeightedModule>(
      WeightedModule::whole_space(s2, sys.ops()));
  auto families = enumerate_borel_fixed(module, r);
  // tests: pure cube (3 e_dir) plus the two mixed tests with the adjacent
  // gradings
  auto run_tests = [&](const Subspace& e2) -> bool {
    auto opt = [&](const Subspace& s) { return std::optional<Subspace>(s); };
    std::optional<Subspace> none;
    int dims[3];
    if (dir == 0) {
      dims[0] = degree_test_dim(sys, 3, 0, 0, opt(e2), none, none);
      dims[1] = degree_test_dim(sys, 2, 1, 0, opt(e110), opt(e2), none);
      dims[2] = degree_test_dim(sys, 2, 0, 1, opt(e101), none, opt(e2));
    } else if (dir == 1) {
      dims[0] = degree_test_dim(sys, 0, 3, 0, none, opt(e2), none);
      dims[1] = degree_test_dim(sys, 1, 2, 0, opt(e2), opt(e110), none);
      dims[2] = degree_test_dim(sys, 0, 2, 1, none, opt(e011), opt(e2));
    } else {
      dims[0] = degree_test_dim(sys, 0, 0, 3, none, none, opt(e2));
      dims[1] = degree_test_dim(sys, 1, 0, 2, opt(e2), none, opt(e101));
      dims[2] = degree_test_dim(sys, 0, 1, 2, none, opt(e2), opt(e011));
    }
    return dims[0] >= r && dims[1] >= r && dims[2] >= r;
  };
  for (const auto& fam : families) {
    if (fam.discrete()) {
      if (run_tests(fam.as_subspace())) {
        res.found = true;
        return res;
      }
      continue;
    }
    // parametric: sample the cell on a small grid (existence semantics; a
    // verified sample proves the extension exists)
    if (fam.params.size() > 4) {
      res.undecided = true;
      continue;
    }
    const std::vector<Rational> grid = {rat(0), rat(1), rat(-1), rat(2)};
    std::vector<std::size_t> idx(fam.params.size(), 0);
    bool any_valid_point = false;
    while (true) {
      std::map<std::string, Rational> pt;
      for (std::size_t i = 0; i < fam.params.size(); ++i) pt[fam.params[i]] = grid[idx[i]];
      bool ok = true;
      for (const Poly& eq : fam.closure_eqs)
        if (!is_zero(eq.evaluate(pt))) { ok = false; break; }
      if (ok) {
        any_valid_point = true;
        Subspace e2 = fam.specialize(pt);
        if (fam.is_raising_stable(e2) && run_tests(e2)) {
          res.found = true;
          return res;
        }
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
      if (idx.empty() || i == idx.size()) break;
    }
    if (any_valid_point) res.undecided = true;  // sampling is not a refutation
  }
  return res;
}

}  // namespace

std::string Certificate::conclusion_string() const {
  switch (conclusion) {
    case Conclusion::BorderRankExceedsR: return "border_rank_exceeds_r";
    case Conclusion::SurvivorsRemain: return "survivors_remain";
    default: return "undecided_branches";
  }
}

Certificate certify(const TensorSystem& sys, int r, const CertifyOptions& opts) {
  Certificate cert;
  cert.tensor = sys.name;
  cert.r = r;
  cert.degree_cap = opts.degree_cap;
  const int workers = opts.workers > 0 ? opts.workers : default_workers();

  cert.flattening_ranks = {flattening_rank(sys, Grading::AB), flattening_rank(sys, Grading::AC),
                           flattening_rank(sys, Grading::BC)};
  cert.concise = cert.flattening_ranks[0] == sys.C->dim() &&
                 cert.flattening_ranks[1] == sys.B->dim() &&
                 cert.flattening_ranks[2] == sys.A->dim();
  const int conciseness_bound =
      std::max({cert.flattening_ranks[0], cert.flattening_ranks[1], cert.flattening_ranks[2]});
  if (r < conciseness_bound) {
    cert.below_conciseness = true;
    cert.conclusion = Conclusion::BorderRankExceedsR;
    cert.hash = std::to_string(certificate_hash(cert));
    return cert;
  }

  const bool cyclic = sys.name.rfind("mamu:", 0) == 0 && sys.groups[0].second == sys.groups[1].second &&
                      sys.groups[1].second == sys.groups[2].second;
  const bool det_like = sys.name == "det3";

  // stage (i) for grading 110
  GradingData gd_ab = grading_data(sys, Grading::AB, r);
  StageReport st_ab = run_stage(sys, Grading::AB, r, workers);
  cert.stages.push_back(st_ab);
  auto finish = [&](Conclusion c) {
    cert.conclusion = c;
    if (!opts.keep_outcomes)
      for (auto& st : cert.stages) st.outcomes.clear();
    cert.hash = std::to_string(certificate_hash(cert));
    return cert;
  };
  if (st_ab.survivors == 0 && !st_ab.free_parameter_survivors) {
    if (st_ab.undecided) return finish(Conclusion::UndecidedBranches);
    return finish(Conclusion::BorderRankExceedsR);
  }
  if (st_ab.free_parameter_survivors || st_ab.undecided) {
    // survivors exist but the lists are not certified complete; the triple
    // stage cannot refute, so the outcome is already determined
    return finish(st_ab.survivors > 0 || st_ab.free_parameter_survivors
                      ? Conclusion::SurvivorsRemain
                      : Conclusion::UndecidedBranches);
  }

  SurvivorList surv_ab = collect_survivors(sys, gd_ab, st_ab);

  // stages for the other gradings: transported for symmetric tensors,
  // computed directly otherwise
  GradingData gd_ac = grading_data(sys, Grading::AC, r);
  GradingData gd_bc = grading_data(sys, Grading::BC, r);
  StageReport st_ac, st_bc;
  SurvivorList surv_ac, surv_bc;
  if (det_like) {
    st_ac = st_ab;
    st_ac.grading = Grading::AC;
    st_bc = st_ab;
    st_bc.grading = Grading::BC;
    surv_ac = surv_ab;
    surv_bc = surv_ab;
  } else if (cyclic) {
    auto map_ab_bc = cyclic_index_map(sys, Grading::AB);
    st_bc = st_ab;
    st_bc.grading = Grading::BC;
    for (auto& o : st_bc.outcomes)
      for (auto& s : o.survivors) s = transport_subspace(s, map_ab_bc);
    surv_bc = collect_survivors(sys, gd_bc, st_bc);
    auto map_bc_ac = cyclic_index_map(sys, Grading::BC);
    st_ac = st_bc;
    st_ac.grading = Grading::AC;
    for (auto& o : st_ac.outcomes)
      for (auto& s : o.survivors) s = transport_subspace(s, map_bc_ac);
    surv_ac = collect_survivors(sys, gd_ac, st_ac);
    // verify the transported survivors exactly; fall back if anything fails
    auto verify_list = [&](const GradingData& gd, const std::vector<Subspace>& list) {
      for (const Subspace& s : list) {
        for (const auto& rmat : gd.comp->raising) {
          SparseMatrix rt = rmat.transpose();
          for (int i = 0; i < s.dim(); ++i) {
            SparseRow img;
            for (const auto& [c, v] : s.basis_rows().row(i)) img = row_axpy(img, v, rt.row(c));
            if (!s.contains(img)) return false;
          }
        }
        if (!pairwise_exact(sys, gd, s, PairSide::S210, r).pass ||
            !pairwise_exact(sys, gd, s, PairSide::S120, r).pass)
          return false;
      }
      return true;
    };
    bool ok = verify_list(gd_bc, surv_bc.eprime) && verify_list(gd_ac, surv_ac.eprime);
    if (!ok) {
      st_ac = run_stage(sys, Grading::AC, r, workers);
      st_bc = run_stage(sys, Grading::BC, r, workers);
      surv_ac = collect_survivors(sys, gd_ac, st_ac);
      surv_bc = collect_survivors(sys, gd_bc, st_bc);
    }
  } else {
    st_ac = run_stage(sys, Grading::AC, r, workers);
    st_bc = run_stage(sys, Grading::BC, r, workers);
    surv_ac = collect_survivors(sys, gd_ac, st_ac);
    surv_bc = collect_survivors(sys, gd_bc, st_bc);
  }
  cert.stages.push_back(st_ac);
  cert.stages.push_back(st_bc);

  for (const StageReport* st : {&st_ac, &st_bc}) {
    if (st->survivors == 0 && !st->free_parameter_survivors) {
      if (st->undecided) return finish(Conclusion::UndecidedBranches);
      return finish(Conclusion::BorderRankExceedsR);
    }
    if (st->free_parameter_survivors || st->undecided)
      return finish(Conclusion::SurvivorsRemain);
  }

  // triple stage: test every combination; count orbits for the certificate
  const long na = surv_ab.full.size(), nb = surv_ac.full.size(), nc = surv_bc.full.size();
  cert.triples.total = na * nb * nc;
  cert.triples.mod_symmetry = cert.triples.total;
  if (cyclic) {
    // identify the survivor lists through the cyclic transport and count
    // orbits of (p,q,s) -> (psi2 q, psi3 s, psi1 p)
    auto map_ab_bc = cyclic_index_map(sys, Grading::AB);
    auto map_bc_ac = cyclic_index_map(sys, Grading::BC);
    auto map_ac_ab = cyclic_index_map(sys, Grading::AC);
    TripleAction act;
    act.dest = {2, 0, 1};  // AB->BC, AC->AB, BC->AC
    bool ok = true;
    act.map[0].resize(na);
    act.map[1].resize(nb);
    act.map[2].resize(nc);
    for (long i = 0; i < na && ok; ++i) {
      int j = find_subspace(surv_bc.eprime, transport_subspace(surv_ab.eprime[i], map_ab_bc));
      ok = j >= 0;
      if (ok) act.map[0][i] = j;
    }
    for (long i = 0; i < nb && ok; ++i) {
      int j = find_subspace(surv_ab.eprime, transport_subspace(surv_ac.eprime[i], map_ac_ab));
      ok = j >= 0;
      if (ok) act.map[1][i] = j;
    }
    for (long i = 0; i < nc && ok; ++i) {
      int j = find_subspace(surv_ac.eprime, transport_subspace(surv_bc.eprime[i], map_bc_ac));
      ok = j >= 0;
      if (ok) act.map[2][i] = j;
    }
    if (ok)
      cert.triples.mod_symmetry =
          orbit_count({static_cast<int>(na), static_cast<int>(nb), static_cast<int>(nc)}, {act});
  } else if (det_like) {
    // S3 slot permutations and the U<->V transpose act on the common list
    const SpacePtr X = sys.A;
    const SpacePtr XX = sys.AB;
    std::vector<int> swap12(XX->dim()), tau(XX->dim());
    for (int i = 0; i < XX->dim(); ++i) {
      const auto& t = XX->tuple(i);
      swap12[i] = XX->encode_tensor({t[1], t[0]});
      const auto& uv1 = X->tuple(t[0]);
      const auto& uv2 = X->tuple(t[1]);
      tau[i] = XX->encode_tensor(
          {X->encode_tensor({uv1[1], uv1[0]}), X->encode_tensor({uv2[1], uv2[0]})});
    }
    // index maps on the survivor list (full pair coordinates)
    auto list_map = [&](const std::vector<int>& imap) {
      std::vector<int> out(na);
      for (long i = 0; i < na; ++i) {
        int j = find_subspace(surv_ab.full, transport_subspace(surv_ab.full[i], imap));
        if (j < 0) return std::vector<int>();
        out[i] = j;
      }
      return out;
    };
    std::vector<int> ident(na);
    for (long i = 0; i < na; ++i) ident[i] = static_cast<int>(i);
    auto m_swap = list_map(swap12);
    auto m_tau = list_map(tau);
    if (!m_swap.empty() && !m_tau.empty()) {
      std::vector<TripleAction> gens;
      // (12): AB stays (slot swap), AC <-> BC
      gens.push_back({{0, 2, 1}, {m_swap, ident, ident}});
      // (23): AB <-> AC, BC stays (slot swap)
      gens.push_back({{1, 0, 2}, {ident, ident, m_swap}});
      // transpose U<->V: all components in place
      gens.push_back({{0, 1, 2}, {m_tau, m_tau, m_tau}});
      cert.triples.mod_symmetry = orbit_count(
          {static_cast<int>(na), static_cast<int>(nb), static_cast<int>(nc)}, gens);
    }
  }

  // (111) test on all triples, with the pairwise kernels cached
  std::vector<std::array<int, 3>> all;
  all.reserve(static_cast<std::size_t>(cert.triples.total));
  for (int p = 0; p < na; ++p)
    for (int q = 0; q < nb; ++q)
      for (int s = 0; s < nc; ++s) all.push_back({p, q, s});
  std::vector<Subspace> pair_cache(static_cast<std::size_t>(na * nb));
  {
    std::function<int(int)> task = [&](int i) {
      const int p = i / static_cast<int>(nb), q = i % static_cast<int>(nb);
      pair_cache[i] = pair_intersection(sys, surv_ab.full[p], surv_ac.full[q]);
      return 0;
    };
    parallel_index_map<int>(static_cast<int>(na * nb), workers, task);
  }
  std::function<int(int)> task = [&](int i) {
    const auto& t = all[static_cast<std::size_t>(i)];
    const Subspace& pk = pair_cache[static_cast<std::size_t>(t[0] * nb + t[1])];
    return triple_finish(sys, surv_ab.full[t[0]], pk, surv_bc.full[t[2]]);
  };
  std::vector<int> dims = parallel_index_map<int>(static_cast<int>(all.size()), workers, task);
  cert.triples.tested = static_cast<long>(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (dims[i] >= r) {
      ++cert.triples.passed;
      cert.triples.passing.push_back(all[i]);
      cert.triples.intersection_dims.push_back(dims[i]);
    }
  }
  if (cert.triples.passed == 0) return finish(Conclusion::BorderRankExceedsR);

  // step (iv): quadratic pieces for the surviving triples
  cert.quadratic.ran = true;
  bool any_extends = false, any_undecided = false;
  for (const auto& t : cert.triples.passing) {
    ++cert.quadratic.triples_checked;
    bool all_found = true, this_undecided = false;
    for (int dir = 0; dir < 3; ++dir) {
      QuadResult qr = quadratic_direction(sys, dir, r, surv_ab.full[t[0]], surv_ac.full[t[1]],
                                          surv_bc.full[t[2]]);
      if (!qr.found) {
        all_found = false;
        this_undecided |= qr.undecided;
      }
    }
    if (all_found) {
      any_extends = true;
      ++cert.quadratic.fully_extended;
    } else if (this_undecided) {
      any_undecided = true;
    }
  }
  cert.quadratic.undecided = any_undecided;
  if (any_extends) return finish(Conclusion::SurvivorsRemain);
  if (any_undecided) return finish(Conclusion::UndecidedBranches);
  return finish(Conclusion::BorderRankExceedsR);
}

BoundLadder bound_ladder(const TensorSystem& sys, int r_min, int r_max,
                         const CertifyOptions& opts) {
  BoundLadder ladder;
  ladder.refuted_from = r_min;
  ladder.first_surviving_r = r_max + 1;
  for (int r = r_min; r <= r_max; ++r) {
    CertifyOptions o = opts;
    o.keep_outcomes = false;
    Certificate c = certify(sys, r, o);
    ladder.steps.emplace_back(r, c.conclusion);
    if (c.conclusion != Conclusion::BorderRankExceedsR) {
      ladder.first_surviving_r = r;
      break;
    }
  }
  return ladder;
}

}  // namespace borank
