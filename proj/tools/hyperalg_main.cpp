// hyperalg CLI: structure-file checking, hyper-linear-algebra queries,
// the small-order census, and the theorem harness.
//
// Exit codes: 0 all checks pass, 1 semantic failure (with witnesses),
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperalg/axioms.hpp"
#include "hyperalg/census.hpp"
#include "hyperalg/constructions.hpp"
#include "hyperalg/errors.hpp"
#include "hyperalg/hlinalg.hpp"
#include "hyperalg/structure_file.hpp"
#include "hyperalg/theorems.hpp"

namespace {

using namespace hyperalg;

constexpr int kExitPass = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

enum class Format { kText, kMachine };

struct Shared {
  std::string structure;  // optional name filter
  DistributivityMode mode = DistributivityMode::kEqual;
  Format format = Format::kText;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(1, 1, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

StructureFile load(const std::string& path) {
  return parse_structure_file(read_file(path));
}

// ---- check ---------------------------------------------------------------

struct CheckPrinter {
  Format format;
  bool any_fail = false;

  void line(const std::string& structure, const std::string& axiom, bool pass,
            const std::string& note) {
    if (!pass) any_fail = true;
    if (format == Format::kMachine) {
      std::cout << "check\t" << structure << '\t' << axiom << '\t'
                << (pass ? "PASS" : "FAIL") << '\t' << (note.empty() ? "-" : note)
                << '\n';
    } else {
      std::cout << structure << ": " << axiom << ' ' << (pass ? "PASS" : "FAIL");
      if (!note.empty()) std::cout << " (" << note << ")";
      std::cout << '\n';
    }
  }

  void info(const std::string& structure, const std::string& key,
            const std::string& value) {
    if (format == Format::kMachine)
      std::cout << "check\t" << structure << '\t' << key << "\tINFO\t" << value
                << '\n';
    else
      std::cout << structure << ": " << key << " = " << value << '\n';
  }
};

void check_hypergroup_block(const HypergroupBlock& block, CheckPrinter& out) {
  HypergroupReport report = check_hypergroup(block.table);
  out.line(block.name, "hypergroupoid", report.is_hypergroupoid,
           report.is_hypergroupoid ? "" : report.failures.front().detail);
  if (!report.is_hypergroupoid) return;
  out.line(block.name, "associativity", report.is_semihypergroup,
           report.is_semihypergroup ? "" : report.failures.front().detail);
  std::string zero_note;
  if (!report.zeros.empty())
    zero_note = "zero=" +
                block.table.carrier().label(*report.canonical_zero()) +
                (report.zero_ambiguous ? ", ambiguous" : "");
  else if (!report.failures.empty())
    zero_note = report.failures.back().detail;
  out.line(block.name, "zero-and-inverses", !report.zeros.empty(), zero_note);
  out.line(block.name, "reversibility", report.reversible, "");
  out.info(block.name, "commutative", report.is_commutative ? "yes" : "no");
  out.line(block.name, "hypergroup", report.is_hypergroup(), "");
}

std::optional<Hyperfield> check_hyperfield_block(const HyperfieldBlock& block,
                                                 DistributivityMode mode,
                                                 CheckPrinter& out) {
  HyperfieldCheck check = check_hyperfield(block.add, block.mul, block.zero,
                                           block.one, mode);
  if (check.ok()) {
    out.line(block.name, "hyperring", true, "");
    out.line(block.name, "identity", true, "");
    out.line(block.name, "inverses", true, "");
    out.line(block.name, "mul-commutativity", true, "");
    out.line(block.name, "hyperfield", true, "");
    return std::move(check.field);
  }
  for (const AxiomFailure& f : check.failures)
    out.line(block.name, f.axiom, false, f.detail);
  out.line(block.name, "hyperfield", false, "");
  return std::nullopt;
}

std::optional<HyperVectorSpace> check_space_block(const StructureFile& file,
                                                  const SpaceBlock& block,
                                                  DistributivityMode mode,
                                                  CheckPrinter& out) {
  const auto& field_block = std::get<HyperfieldBlock>(file.blocks[block.field_block]);
  HyperfieldCheck field = check_hyperfield(field_block.add, field_block.mul,
                                           field_block.zero, field_block.one,
                                           mode);
  if (!field.ok()) {
    out.line(block.name, "field", false,
             "referenced hyperfield " + block.field_name + " is invalid");
    return std::nullopt;
  }
  SpaceCheck check = check_hypervectorspace(*field.field, block.vectors,
                                            block.vadd, block.action,
                                            block.theta);
  if (!check.ok()) {
    for (const AxiomFailure& f : check.failures)
      out.line(block.name, f.axiom, false, f.detail);
    out.line(block.name, "hvspace", false, "");
    return std::nullopt;
  }
  out.line(block.name, "vector-hypergroup", true, "");
  out.line(block.name, "axiom-i", true, "");
  out.line(block.name, "axiom-ii", true, "");
  out.line(block.name, "axiom-iii", true, "");
  out.line(block.name, "axiom-iv", true, "");
  const SpaceClass& cls = check.space->cls;
  out.info(block.name, "class",
           cls.good            ? "good"
           : cls.strong_left   ? "strongly-left-distributive"
           : cls.strong_right  ? "strongly-right-distributive"
                               : "plain");
  out.line(block.name, "hvspace", true, "");
  return std::move(check.space);
}

int run_check(const std::string& path, const Shared& shared) {
  StructureFile file = load(path);
  CheckPrinter out{shared.format};
  bool matched = false;
  for (const StructureBlock& block : file.blocks) {
    if (!shared.structure.empty() && block_name(block) != shared.structure)
      continue;
    matched = true;
    if (const auto* g = std::get_if<HypergroupBlock>(&block))
      check_hypergroup_block(*g, out);
    else if (const auto* f = std::get_if<HyperfieldBlock>(&block))
      check_hyperfield_block(*f, shared.mode, out);
    else
      check_space_block(file, std::get<SpaceBlock>(block), shared.mode, out);
  }
  if (!shared.structure.empty() && !matched) {
    std::cerr << "no structure named '" << shared.structure << "' in " << path
              << '\n';
    return kExitUsage;
  }
  return out.any_fail ? kExitSemantic : kExitPass;
}

// ---- space-valued queries ------------------------------------------------

HyperVectorSpace build_space(const StructureFile& file, const std::string& name,
                             DistributivityMode mode) {
  const StructureBlock* block = file.find(name);
  if (block == nullptr)
    throw ParseError(1, 1, "no structure named '" + name + "'");
  const auto* space_block = std::get_if<SpaceBlock>(block);
  if (space_block == nullptr)
    throw ParseError(1, 1, "structure '" + name + "' is not an hvspace");
  const auto& field_block =
      std::get<HyperfieldBlock>(file.blocks[space_block->field_block]);
  HyperfieldCheck field = check_hyperfield(field_block.add, field_block.mul,
                                           field_block.zero, field_block.one,
                                           mode);
  if (!field.ok())
    throw PreconditionError("hyperfield " + field_block.name + " is invalid: " +
                            field.failures.front().detail);
  SpaceCheck check = check_hypervectorspace(*field.field, space_block->vectors,
                                            space_block->vadd,
                                            space_block->action,
                                            space_block->theta);
  if (!check.ok())
    throw PreconditionError("hvspace " + name + " is invalid: " +
                            check.failures.front().detail);
  return std::move(*check.space);
}

std::vector<std::size_t> resolve_vectors(const HyperVectorSpace& space,
                                         const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const std::string& name : names) {
    auto idx = space.vectors.find(name);
    if (!idx) throw ParseError(1, 1, "unknown vector '" + name + "'");
    out.push_back(*idx);
  }
  return out;
}

void print_members(const HyperVectorSpace& space, const IndexSubset& s,
                   const std::string& command, Format format) {
  if (format == Format::kMachine)
    std::cout << command << '\t' << space.vectors.render_subset(s) << '\n';
  else
    std::cout << space.vectors.render_subset(s) << '\n';
}

// ---- verify ----------------------------------------------------------------

std::vector<PropertyVerdict> verdicts_for_block(const StructureFile& file,
                                                const StructureBlock& block,
                                                const std::string& suite,
                                                DistributivityMode mode) {
  std::vector<PropertyVerdict> out;
  const std::string& name = block_name(block);
  bool want_laws = suite == "laws" || suite == "all";
  bool want_linalg = suite == "linalg" || suite == "all";
  bool want_basis = suite == "basis" || suite == "all";

  if (const auto* g = std::get_if<HypergroupBlock>(&block)) {
    if (want_laws) {
      auto local = verify_hypergroup_laws(g->table, name);
      out.insert(out.end(), local.begin(), local.end());
    }
    return out;
  }
  if (const auto* f = std::get_if<HyperfieldBlock>(&block)) {
    if (want_laws) {
      HyperfieldCheck check = check_hyperfield(f->add, f->mul, f->zero, f->one,
                                               mode);
      if (!check.ok())
        throw PreconditionError("hyperfield " + name + " is invalid: " +
                                check.failures.front().detail);
      auto local = verify_hypergroup_laws(f->add, name);
      out.insert(out.end(), local.begin(), local.end());
    }
    return out;
  }

  HyperVectorSpace space = build_space(file, name, mode);
  if (want_laws) {
    auto group = verify_hypergroup_laws(space.vadd, name);
    out.insert(out.end(), group.begin(), group.end());
    auto laws = verify_space_laws(space, name);
    out.insert(out.end(), laws.begin(), laws.end());
  }
  if (want_linalg) {
    auto linalg = verify_linalg_theorems(space, name);
    out.insert(out.end(), linalg.begin(), linalg.end());
  }
  if (want_basis) {
    auto basis = verify_basis_theorems(space, name);
    out.insert(out.end(), basis.begin(), basis.end());
  }
  return out;
}

int run_verify(const std::string& path, const std::string& suite,
               std::size_t jobs, const Shared& shared) {
  StructureFile file = load(path);
  std::vector<const StructureBlock*> selected;
  for (const StructureBlock& block : file.blocks)
    if (shared.structure.empty() || block_name(block) == shared.structure)
      selected.push_back(&block);
  if (!shared.structure.empty() && selected.empty()) {
    std::cerr << "no structure named '" << shared.structure << "' in " << path
              << '\n';
    return kExitUsage;
  }

  std::vector<std::vector<PropertyVerdict>> results(selected.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      results[i] = verdicts_for_block(file, *selected[i], suite, shared.mode);
  } else {
    std::vector<std::future<std::vector<PropertyVerdict>>> futures;
    for (std::size_t i = 0; i < selected.size(); ++i)
      futures.push_back(std::async(std::launch::async, [&, i] {
        return verdicts_for_block(file, *selected[i], suite, shared.mode);
      }));
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = futures[i].get();
  }

  bool any_fail = false;
  for (const auto& verdicts : results)
    for (const PropertyVerdict& v : verdicts) {
      if (!v.pass && !v.skipped()) any_fail = true;
      if (shared.format == Format::kMachine) {
        std::cout << "verify\t" << v.property_id << '\t' << v.structure_id
                  << '\t'
                  << (v.skipped() ? "SKIP" : v.pass ? "PASS" : "FAIL") << '\t'
                  << (v.skipped()  ? *v.skipped_reason
                      : v.witness ? *v.witness
                                  : "-")
                  << '\n';
      } else {
        std::cout << render_verdict(v) << '\n';
      }
    }
  return any_fail ? kExitSemantic : kExitPass;
}

double budget_from_env() {
  if (const char* env = std::getenv("HYPERALG_BUDGET")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw ParseError(1, 1, "HYPERALG_BUDGET is not a number");
    }
  }
  return EnumerateOptions{}.budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite hyperstructure checker, census and theorem harness"};
  app.require_subcommand(1);

  Shared shared;
  auto add_shared = [&shared](CLI::App* cmd, bool with_structure = true) {
    if (with_structure)
      cmd->add_option("--structure", shared.structure,
                      "restrict to the named structure");
    std::map<std::string, DistributivityMode> modes{
        {"equal", DistributivityMode::kEqual},
        {"inclusive", DistributivityMode::kInclusive}};
    cmd->add_option("--distributive", shared.mode,
                    "distributivity reading (equal|inclusive)")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    std::map<std::string, Format> formats{{"text", Format::kText},
                                          {"machine", Format::kMachine}};
    cmd->add_option("--format", shared.format, "output format (text|machine)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  std::string path, space_name, suite = "all", kind_name = "hypergroup";
  std::vector<std::string> vector_names, left_names, right_names;
  std::size_t order = 2, jobs = 1;
  bool commutative = false;

  CLI::App* check = app.add_subcommand("check", "validate structure axioms");
  check->add_option("file", path)->required();
  add_shared(check);

  auto add_space_query = [&](const std::string& name, const std::string& desc,
                             bool needs_vectors) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("file", path)->required();
    cmd->add_option("--space", space_name, "hvspace structure name")->required();
    if (needs_vectors)
      cmd->add_option("--vectors", vector_names, "vector names")
          ->delimiter(',');
    add_shared(cmd, false);
    return cmd;
  };

  CLI::App* span_cmd = add_space_query("span", "hyperlinear span of vectors", true);
  CLI::App* closure_cmd =
      add_space_query("closure", "subspace closure of a vector set", true);
  CLI::App* depend_cmd =
      add_space_query("depend", "linear dependence of a vector list", true);
  CLI::App* basis_cmd =
      add_space_query("basis", "extend vectors to a basis", true);
  CLI::App* dim_cmd = add_space_query("dim", "dimension of the space", false);
  CLI::App* sum_cmd = app.add_subcommand("sum", "linear sum of two subspaces");
  sum_cmd->add_option("file", path)->required();
  sum_cmd->add_option("--space", space_name)->required();
  sum_cmd->add_option("--left", left_names, "members of the left subspace")
      ->delimiter(',')
      ->required();
  sum_cmd->add_option("--right", right_names, "members of the right subspace")
      ->delimiter(',')
      ->required();
  add_shared(sum_cmd, false);

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "census of small structures");
  enumerate_cmd->add_option("--kind", kind_name, "hypergroup|hyperfield")
      ->required();
  enumerate_cmd->add_option("--order", order, "carrier size")->required();
  enumerate_cmd->add_flag("--commutative", commutative,
                          "restrict to commutative hypergroups");
  enumerate_cmd->add_option("--jobs", jobs, "concurrent search tasks");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the theorem harness");
  verify_cmd->add_option("file", path)->required();
  verify_cmd
      ->add_option("--suite", suite, "laws|linalg|basis|all")
      ->check(CLI::IsMember({"laws", "linalg", "basis", "all"}));
  verify_cmd->add_option("--jobs", jobs, "concurrent structures");
  add_shared(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(path, shared);

    if (enumerate_cmd->parsed()) {
      auto kind = census_kind_from(kind_name, commutative);
      if (!kind) {
        std::cerr << "unknown census kind: " << kind_name << '\n';
        return kExitUsage;
      }
      EnumerateOptions options;
      options.jobs = jobs;
      options.budget = budget_from_env();
      options.mode = shared.mode;
      auto entries = enumerate_census(*kind, order, options);
      std::cout << render_structure_file(census_to_file(entries, *kind, order));
      return kExitPass;
    }

    if (verify_cmd->parsed()) return run_verify(path, suite, jobs, shared);

    // remaining subcommands all operate on one hvspace
    StructureFile file = load(path);
    HyperVectorSpace space = build_space(file, space_name, shared.mode);

    if (span_cmd->parsed()) {
      if (vector_names.empty()) {
        std::cerr << "span needs at least one vector\n";
        return kExitUsage;
      }
      print_members(space, span(space, resolve_vectors(space, vector_names)),
                    "span", shared.format);
      return kExitPass;
    }
    if (closure_cmd->parsed()) {
      IndexSubset seed(space.dim_carrier());
      for (std::size_t v : resolve_vectors(space, vector_names)) seed.insert(v);
      print_members(space, subspace_closure(space, seed), "closure",
                    shared.format);
      return kExitPass;
    }
    if (depend_cmd->parsed()) {
      if (vector_names.empty()) {
        std::cerr << "depend needs at least one vector\n";
        return kExitUsage;
      }
      auto witness = is_dependent(space, resolve_vectors(space, vector_names));
      if (shared.format == Format::kMachine) {
        std::cout << "depend\t" << (witness ? "dependent" : "independent")
                  << '\t';
        if (witness) {
          for (std::size_t i = 0; i < witness->coeffs.size(); ++i)
            std::cout << (i ? " " : "")
                      << space.field.carrier.label(witness->coeffs[i]);
        } else {
          std::cout << '-';
        }
        std::cout << '\n';
      } else if (witness) {
        std::cout << "dependent:";
        for (std::size_t c : witness->coeffs)
          std::cout << ' ' << space.field.carrier.label(c);
        std::cout << '\n';
      } else {
        std::cout << "independent\n";
      }
      return kExitPass;
    }
    if (basis_cmd->parsed()) {
      Basis basis =
          extend_to_basis(space, resolve_vectors(space, vector_names));
      std::string members;
      for (std::size_t v : basis.vectors) {
        if (!members.empty()) members += ' ';
        members += space.vectors.label(v);
      }
      if (shared.format == Format::kMachine)
        std::cout << "basis\t" << basis.dim() << '\t'
                  << (members.empty() ? "-" : members) << '\n';
      else
        std::cout << members << '\n';
      return kExitPass;
    }
    if (dim_cmd->parsed()) {
      std::size_t d = dimension(space);
      if (shared.format == Format::kMachine)
        std::cout << "dim\t" << d << '\n';
      else
        std::cout << d << '\n';
      return kExitPass;
    }
    if (sum_cmd->parsed()) {
      IndexSubset left(space.dim_carrier()), right(space.dim_carrier());
      for (std::size_t v : resolve_vectors(space, left_names)) left.insert(v);
      for (std::size_t v : resolve_vectors(space, right_names)) right.insert(v);
      print_members(space, sum_subspaces(space, left, right), "sum",
                    shared.format);
      return kExitPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << '\n';
    return kExitSemantic;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSemantic;
  }
  return kExitUsage;
}
