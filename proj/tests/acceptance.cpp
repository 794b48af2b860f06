// Acceptance suite: one line per criterion, each with its runtime budget.
// Run all criteria (default) or a single one with --criterion <name>.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperalg/axioms.hpp"
#include "hyperalg/census.hpp"
#include "hyperalg/constructions.hpp"
#include "hyperalg/errors.hpp"
#include "hyperalg/hlinalg.hpp"
#include "hyperalg/structure_file.hpp"
#include "hyperalg/theorems.hpp"
#include "support/census_oracle.hpp"
#include "support/gf_oracle.hpp"

using namespace hyperalg;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string golden_path(const std::string& name) {
  return std::string(HYPERALG_GOLDEN_DIR) + "/" + name;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(HYPERALG_CLI_PATH) + " " + args + " 2>&1";
  std::FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  CliResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      pass = false;
      notes.push_back(message);
    }
  }
  void info(const std::string& message) { notes.push_back(message); }
};

// ---- exemplars -------------------------------------------------------------
// K2, S3, GF(2), GF(3) validate; every single-cell mutation of K2's
// hyperaddition must fail with a located witness.
Outcome criterion_exemplars() {
  Outcome out;
  for (const char* name : {"K2", "S3", "GF2", "GF3"}) {
    Hyperfield f = builtin_hyperfield(name);
    HyperfieldCheck check = check_hyperfield(f.add, f.mul, f.zero, f.one);
    out.require(check.ok(), std::string(name) + " failed validation");
  }

  Hyperfield k2 = k2_hyperfield();
  std::size_t mutants = 0, failed = 0;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::uint32_t mask = 1; mask < 4; ++mask) {
        IndexSubset cell(2);
        for (std::size_t i = 0; i < 2; ++i)
          if ((mask >> i) & 1u) cell.insert(i);
        if (cell == k2.add.cell(a, b)) continue;
        ++mutants;
        std::vector<IndexSubset> cells;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            cells.push_back(i == a && j == b ? cell : k2.add.cell(i, j));
        HyperTable mutated(k2.carrier, std::move(cells));
        HyperfieldCheck check = check_hyperfield(mutated, k2.mul, 0, 1);
        if (!check.ok() && !check.failures.empty()) {
          ++failed;
        } else {
          out.require(false,
                      "mutant add " + std::to_string(a) + " " +
                          std::to_string(b) + " -> " + cell.to_string() +
                          " validates (it is the table of GF(2), which this "
                          "criterion also requires to pass)");
        }
      }
  out.info(std::to_string(failed) + "/" + std::to_string(mutants) +
           " mutants fail with located witnesses");
  return out;
}

// ---- classical-oracle ------------------------------------------------------
// Dependence, spans and dimension on GF(p)^n agree exactly with Gaussian
// elimination.
Outcome criterion_classical_oracle() {
  Outcome out;
  for (std::size_t p : {2u, 3u}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      ProductSpace ps = product_space(gf_hyperfield(p), n);
      const HyperVectorSpace& space = ps.space;
      const std::size_t nv = space.dim_carrier();

      auto coords = [&](std::size_t v) {
        gf_oracle::Vec c(n);
        for (std::size_t k = 0; k < n; ++k) c[k] = ps.coordinate(v, k);
        return c;
      };

      std::vector<gf_oracle::Vec> everything;
      for (std::size_t v = 0; v < nv; ++v) everything.push_back(coords(v));
      out.require(dimension(space) == gf_oracle::rank(everything, p),
                  "dimension mismatch on GF(" + std::to_string(p) + ")^" +
                      std::to_string(n));

      std::vector<std::vector<std::size_t>> lists;
      for (std::size_t a = 0; a < nv; ++a) {
        lists.push_back({a});
        for (std::size_t b = a; b < nv; ++b) {
          lists.push_back({a, b});
          for (std::size_t c = b; c < nv; ++c) lists.push_back({a, b, c});
        }
      }
      for (const auto& list : lists) {
        std::vector<gf_oracle::Vec> rows;
        for (std::size_t v : list) rows.push_back(coords(v));
        bool oracle_dep = gf_oracle::dependent(rows, p);
        bool hyper_dep = is_dependent(space, list).has_value();
        if (oracle_dep != hyper_dep) {
          out.require(false, "dependence mismatch on GF(" + std::to_string(p) +
                                 ")^" + std::to_string(n));
          break;
        }
        IndexSubset oracle_span(nv);
        for (const gf_oracle::Vec& vec : gf_oracle::span_set(rows, p)) {
          std::vector<std::size_t> c(vec.begin(), vec.end());
          oracle_span.insert(ps.encode(c));
        }
        if (!(span(space, list) == oracle_span)) {
          out.require(false, "span mismatch on GF(" + std::to_string(p) + ")^" +
                                 std::to_string(n));
          break;
        }
      }
    }
  }
  out.info("p in {2,3}, n in {1,2,3}, all lists of length <= 3");
  return out;
}

// ---- theorem-sweep ---------------------------------------------------------
// Every harness verdict across the census PASSes; SKIP appears only for the
// strong-left hypothesis on spaces that genuinely lack it.
Outcome criterion_theorem_sweep() {
  Outcome out;
  std::size_t verdicts = 0, skips = 0;

  auto consume = [&](const std::vector<PropertyVerdict>& vs, bool strong_left,
                     bool commutative, bool degenerate_field) {
    for (const PropertyVerdict& v : vs) {
      ++verdicts;
      if (v.skipped()) {
        ++skips;
        bool ok_reason =
            (*v.skipped_reason == "not strongly left distributive" &&
             !strong_left) ||
            (*v.skipped_reason == "not commutative" && !commutative) ||
            (*v.skipped_reason == "degenerate hyperfield (1 = 0)" &&
             degenerate_field);
        out.require(ok_reason, v.property_id + " " + v.structure_id +
                                   " skipped without an unmet hypothesis");
      } else {
        out.require(v.pass, render_verdict(v));
      }
    }
  };

  for (std::size_t order = 1; order <= 3; ++order)
    for (const CensusEntry& e :
         enumerate_census(CensusKind::kCommutativeHypergroup, order))
      consume(verify_hypergroup_laws(e.add, e.name), true, true, false);

  for (std::size_t order = 1; order <= 3; ++order)
    for (const CensusEntry& e : enumerate_census(CensusKind::kHyperfield, order)) {
      consume(verify_hypergroup_laws(e.add, e.name), true, true, false);
      HyperfieldCheck check = check_hyperfield(e.add, *e.mul, e.zero, e.one);
      out.require(check.ok(), e.name + " failed re-validation");
      if (!check.ok()) continue;
      for (std::size_t n = 1; n <= 2; ++n) {
        ProductSpace ps = product_space(*check.field, n);
        std::string id = e.name + "^" + std::to_string(n);
        bool sl = ps.space.cls.strong_left;
        bool degenerate = ps.space.field.size() == 1;
        consume(verify_hypergroup_laws(ps.space.vadd, id), sl, true, degenerate);
        consume(verify_space_laws(ps.space, id), sl, true, degenerate);
        consume(verify_linalg_theorems(ps.space, id), sl, true, degenerate);
        consume(verify_basis_theorems(ps.space, id), sl, true, degenerate);
      }
    }

  out.info(std::to_string(verdicts) + " verdicts, " + std::to_string(skips) +
           " hypothesis skips, 0 failures expected");
  return out;
}

// ---- dimension-formula -----------------------------------------------------
// dim(U # W) = dim(U) + dim(W) - dim(U n W) over every ordered subspace pair
// of K2^2, K2^3, S3^1, S3^2.
Outcome criterion_dimension_formula() {
  Outcome out;
  struct Instance {
    std::string name;
    HyperVectorSpace space;
  };
  std::vector<Instance> instances;
  instances.push_back({"K2^2", product_space(k2_hyperfield(), 2).space});
  instances.push_back({"K2^3", product_space(k2_hyperfield(), 3).space});
  instances.push_back({"S3^1", product_space(sign_hyperfield(), 1).space});
  instances.push_back({"S3^2", product_space(sign_hyperfield(), 2).space});

  std::size_t pairs = 0;
  for (const Instance& inst : instances) {
    std::vector<IndexSubset> subspaces = all_subspaces(inst.space);
    for (const IndexSubset& u : subspaces)
      for (const IndexSubset& w : subspaces) {
        ++pairs;
        Basis bu = basis_of_subspace(inst.space, u);
        Basis bw = basis_of_subspace(inst.space, w);
        Basis bmeet =
            basis_of_subspace(inst.space, set_intersection(u, w));
        IndexSubset sum = sum_subspaces(inst.space, u, w);
        Basis bsum = basis_of_subspace(inst.space, sum);
        // greedy bases are re-verified: independent and spanning
        for (const Basis* b : {&bu, &bw, &bmeet, &bsum})
          out.require(b->vectors.empty() ||
                          !is_dependent(inst.space, b->vectors),
                      inst.name + ": greedy basis is dependent");
        out.require(combination_union(inst.space, bsum.vectors) == sum,
                    inst.name + ": basis of the sum does not span it");
        if (bsum.dim() + bmeet.dim() != bu.dim() + bw.dim()) {
          out.require(false,
                      inst.name + ": dim(U#W)=" + std::to_string(bsum.dim()) +
                          " dim(U)=" + std::to_string(bu.dim()) + " dim(W)=" +
                          std::to_string(bw.dim()) + " dim(UnW)=" +
                          std::to_string(bmeet.dim()));
        }
      }
  }
  out.info(std::to_string(pairs) + " ordered subspace pairs checked exactly");
  return out;
}

// ---- union-counterexample --------------------------------------------------
// The union of the two coordinate subspaces of K2^2 is not a subspace, with
// the stated witness pair; each axis individually passes.
Outcome criterion_union_counterexample() {
  Outcome out;
  ProductSpace ps = product_space(k2_hyperfield(), 2);
  IndexSubset w1 = coordinate_subspace(ps, IndexSubset::singleton(2, 0));
  IndexSubset w2 = coordinate_subspace(ps, IndexSubset::singleton(2, 1));
  out.require(check_subspace(ps.space, w1).pass, "first axis fails");
  out.require(check_subspace(ps.space, w2).pass, "second axis fails");

  SubspaceReport report = check_subspace(ps.space, set_union(w1, w2));
  out.require(!report.pass, "union unexpectedly passes");
  out.require(!report.failures.empty(), "no witness recorded");
  if (!report.failures.empty()) {
    const AxiomFailure& f = report.failures.front();
    out.require(f.axiom == "subspace-add-closure" &&
                    f.where == std::vector<std::size_t>{1, 2},
                "witness is not the pair ((1,0), (0,1)): got " + f.detail);
  }
  out.info("witness pair (v10, v01) reproduced");
  return out;
}

// ---- unique-representation -------------------------------------------------
// In K2^2 with basis ((1,0), (0,1)) every non-null vector has exactly one
// representation; theta's count is reported informationally.
Outcome criterion_unique_representation() {
  Outcome out;
  HyperVectorSpace space = product_space(k2_hyperfield(), 2).space;
  Basis basis{{1, 2}};
  for (std::size_t x = 0; x < 4; ++x) {
    std::size_t count = representations(space, basis, x).size();
    if (x == space.theta)
      out.info("theta has " + std::to_string(count) + " representation(s)");
    else
      out.require(count == 1, "vector " + space.vectors.label(x) + " has " +
                                  std::to_string(count) + " representations");
  }
  return out;
}

// ---- census-oracle ---------------------------------------------------------
// Pruned census equals the unpruned brute-force census for commutative
// hypergroups of order 2 and 3; the order-2 hyperfield census contains K2;
// golden files are byte-stable.
Outcome criterion_census_oracle() {
  Outcome out;

  auto canon_set = [](const std::vector<CensusEntry>& entries) {
    std::set<std::string> forms;
    for (const CensusEntry& e : entries) forms.insert(e.canonical_form);
    return forms;
  };

  auto chg2 = enumerate_census(CensusKind::kCommutativeHypergroup, 2);
  out.require(canon_set(chg2) == census_oracle::commutative_hypergroups(2),
              "order-2 commutative census diverges from the 81-table oracle");
  auto chg3 = enumerate_census(CensusKind::kCommutativeHypergroup, 3);
  out.require(canon_set(chg3) == census_oracle::commutative_hypergroups(3),
              "order-3 commutative census diverges from the brute-force oracle");

  auto hf2 = enumerate_census(CensusKind::kHyperfield, 2);
  Hyperfield k2 = k2_hyperfield();
  std::vector<std::size_t> mul_cells;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) mul_cells.push_back(k2.mul.cell(a, b));
  auto [cadd, cmul] =
      canonical_hyperfield_tables(table_masks(k2.add), mul_cells, 2, k2.zero);
  out.require(canon_set(hf2).count(canonical_form_string(
                  CensusKind::kHyperfield, 2, cadd, &cmul)) == 1,
              "order-2 hyperfield census does not contain K2");

  struct Golden {
    CensusKind kind;
    std::size_t order;
    const char* file;
  };
  for (const Golden& g :
       {Golden{CensusKind::kCommutativeHypergroup, 2, "census_chg2.hyp"},
        Golden{CensusKind::kCommutativeHypergroup, 3, "census_chg3.hyp"},
        Golden{CensusKind::kHyperfield, 2, "census_hf2.hyp"},
        Golden{CensusKind::kHyperfield, 3, "census_hf3.hyp"}}) {
    auto entries = enumerate_census(g.kind, g.order);
    std::string rendered =
        render_structure_file(census_to_file(entries, g.kind, g.order));
    out.require(rendered == read_file(golden_path(g.file)),
                std::string(g.file) + " diverges from the frozen census");
  }
  out.info("counts: chg2=" + std::to_string(chg2.size()) + " chg3=" +
           std::to_string(chg3.size()) + " hf2=" + std::to_string(hf2.size()));
  return out;
}

// ---- determinism -----------------------------------------------------------
// enumerate and verify are byte-identical across repeated runs and across
// 1 vs N concurrent tasks, both in-process and through the CLI.
Outcome criterion_determinism() {
  Outcome out;

  for (CensusKind kind :
       {CensusKind::kCommutativeHypergroup, CensusKind::kHyperfield}) {
    EnumerateOptions serial, parallel;
    parallel.jobs = 4;
    std::string a = render_structure_file(
        census_to_file(enumerate_census(kind, 3, serial), kind, 3));
    std::string b = render_structure_file(
        census_to_file(enumerate_census(kind, 3, parallel), kind, 3));
    std::string c = render_structure_file(
        census_to_file(enumerate_census(kind, 3, serial), kind, 3));
    out.require(a == b, "census differs between 1 and 4 jobs");
    out.require(a == c, "census differs between repeated runs");
  }

  CliResult e1 = run_cli("enumerate --kind hypergroup --commutative --order 3");
  CliResult e2 = run_cli("enumerate --kind hypergroup --commutative --order 3");
  CliResult e3 =
      run_cli("enumerate --kind hypergroup --commutative --order 3 --jobs 4");
  out.require(e1.exit_code == 0 && e1.output == e2.output &&
                  e1.output == e3.output,
              "CLI enumerate output is not byte-stable");

  // a structure file exercising verify end to end
  Hyperfield k2 = k2_hyperfield();
  ProductSpace ps = product_space(k2, 2);
  StructureFile file;
  file.blocks.push_back(HyperfieldBlock{"K2", k2.add, k2.mul, k2.zero, k2.one});
  file.blocks.push_back(SpaceBlock{"V", "K2", 0, ps.space.vectors,
                                   ps.space.vadd, ps.space.action,
                                   ps.space.theta});
  std::ofstream("acceptance_verify.hyp") << render_structure_file(file);
  CliResult v1 = run_cli("verify acceptance_verify.hyp --suite all");
  CliResult v2 = run_cli("verify acceptance_verify.hyp --suite all");
  CliResult v3 = run_cli("verify acceptance_verify.hyp --suite all --jobs 2");
  out.require(v1.exit_code == 0, "verify failed on the K2 square");
  out.require(v1.output == v2.output && v1.output == v3.output,
              "CLI verify output is not byte-stable");
  out.info("enumerate and verify stable across runs and jobs");
  return out;
}

// ---- round-trip ------------------------------------------------------------
// parse(render) is bit-exact on every golden census file.
Outcome criterion_round_trip() {
  Outcome out;
  for (const char* name : {"census_chg2.hyp", "census_chg3.hyp",
                           "census_hf2.hyp", "census_hf3.hyp"}) {
    std::string bytes = read_file(golden_path(name));
    StructureFile parsed = parse_structure_file(bytes);
    out.require(render_structure_file(parsed) == bytes,
                std::string(name) + " does not round-trip bit-exactly");
    out.require(parsed.manifest.has_value(),
                std::string(name) + " lost its manifest");
  }
  out.info("4 golden files round-trip bit-exactly");
  return out;
}

struct Criterion {
  const char* name;
  double seconds_budget;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--criterion") only = argv[i + 1];

  const std::vector<Criterion> criteria = {
      {"exemplars", 1.0, criterion_exemplars},
      {"classical-oracle", 10.0, criterion_classical_oracle},
      {"theorem-sweep", 60.0, criterion_theorem_sweep},
      {"dimension-formula", 30.0, criterion_dimension_formula},
      {"union-counterexample", 1.0, criterion_union_counterexample},
      {"unique-representation", 1.0, criterion_unique_representation},
      {"census-oracle", 120.0, criterion_census_oracle},
      {"determinism", 60.0, criterion_determinism},
      {"round-trip", 10.0, criterion_round_trip},
  };

  bool all_pass = true;
  bool matched = false;
  for (const Criterion& criterion : criteria) {
    if (!only.empty() && only != criterion.name) continue;
    matched = true;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.notes.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= criterion.seconds_budget) {
      outcome.pass = false;
      outcome.notes.push_back("runtime budget " +
                              std::to_string(criterion.seconds_budget) +
                              " s exceeded");
    }
    all_pass = all_pass && outcome.pass;
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2f", elapsed);
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << criterion.name
              << " (" << timing << " s)";
    for (const std::string& note : outcome.notes) std::cout << "\n       " << note;
    std::cout << '\n';
  }
  if (!matched) {
    std::cerr << "unknown criterion: " << only << '\n';
    return 2;
  }
  return all_pass ? 0 : 1;
}
