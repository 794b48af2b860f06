// The .hyp structure-file format: line-oriented, whitespace-separated,
// `#` starts a comment. Three block kinds:
//
//   structure hypergroup G          structure hyperfield K2
//     elements a b                    elements 0 1
//     add a a = { a }                 zero 0
//     ...                             one 1
//   end                               add 0 0 = { 0 }
//                                     ...
//   structure hvspace V over K2      mul 1 1 = 1
//     vectors v00 v10 v01 v11         ...
//     theta v00                     end
//     vadd v00 v00 = { v00 }
//     ...
//     act 1 v10 = { v10 }
//     ...
//   end
//
// Every cell must be listed exactly once (no defaults). Parsing checks
// totality, reference resolution and set non-emptiness, but no semantic
// axioms. A census manifest comment (`# census kind=<k> order=<n>
// count=<c>`) is retained and re-rendered so census exports round-trip
// bit-exactly.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperalg/axioms.hpp"
#include "hyperalg/census.hpp"
#include "hyperalg/table.hpp"

namespace hyperalg {

struct CensusManifest {
  std::string kind;
  std::size_t order = 0;
  std::size_t count = 0;
};

struct HypergroupBlock {
  std::string name;
  HyperTable table;
};

struct HyperfieldBlock {
  std::string name;
  HyperTable add;
  MulTable mul;
  std::size_t zero = 0;
  std::size_t one = 0;
};

struct SpaceBlock {
  std::string name;
  std::string field_name;
  std::size_t field_block = 0;  // index into StructureFile::blocks
  Carrier vectors;
  HyperTable vadd;
  ActionTable action;
  std::size_t theta = 0;
};

using StructureBlock = std::variant<HypergroupBlock, HyperfieldBlock, SpaceBlock>;

const std::string& block_name(const StructureBlock& block);

struct StructureFile {
  std::optional<CensusManifest> manifest;
  std::vector<StructureBlock> blocks;

  const StructureBlock* find(const std::string& name) const;
};

// Throws ParseError (with 1-based line/column) on any defect.
StructureFile parse_structure_file(const std::string& text);

std::string render_block(const StructureBlock& block);
std::string render_space_block(const SpaceBlock& block, const Carrier& scalars);
std::string render_structure_file(const StructureFile& file);

// Census export: manifest line plus one block per entry.
StructureFile census_to_file(const std::vector<CensusEntry>& entries,
                             CensusKind kind, std::size_t order);

}  // namespace hyperalg
