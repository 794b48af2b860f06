#include "hyperalg/structure_file.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "hyperalg/errors.hpp"

namespace hyperalg {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// One logical line, already split on whitespace with the comment stripped.
struct Line {
  std::vector<Token> tokens;
  std::size_t number = 0;
};

[[noreturn]] void fail(const Token& at, const std::string& message) {
  throw ParseError(at.line, at.column, message);
}

[[noreturn]] void fail_line(std::size_t line, const std::string& message) {
  throw ParseError(line, 1, message);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == '{' || c == '}' || c == '=' || c == '#') return false;
  return true;
}

std::optional<CensusManifest> parse_manifest_comment(const std::string& comment) {
  std::istringstream in(comment);
  std::string word;
  if (!(in >> word) || word != "census") return std::nullopt;
  CensusManifest manifest;
  bool have_kind = false, have_order = false, have_count = false;
  while (in >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) return std::nullopt;
    std::string key = word.substr(0, eq);
    std::string value = word.substr(eq + 1);
    if (key == "kind") {
      manifest.kind = value;
      have_kind = true;
    } else if (key == "order") {
      manifest.order = std::stoul(value);
      have_order = true;
    } else if (key == "count") {
      manifest.count = std::stoul(value);
      have_count = true;
    } else {
      return std::nullopt;
    }
  }
  if (!have_kind || !have_order || !have_count) return std::nullopt;
  return manifest;
}

class Parser {
 public:
  explicit Parser(const std::string& text) { split(text); }

  StructureFile run() {
    StructureFile file;
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      const Token& head = line.tokens.front();
      if (head.text != "structure")
        fail(head, "expected 'structure', got '" + head.text + "'");
      if (line.tokens.size() < 3)
        fail(head, "structure header needs a kind and a name");
      const Token& kind = line.tokens[1];
      const Token& name = line.tokens[2];
      if (!valid_name(name.text)) fail(name, "invalid structure name");
      if (names_.count(name.text))
        fail(name, "duplicate structure name '" + name.text + "'");

      if (kind.text == "hypergroup") {
        if (line.tokens.size() != 3) fail(line.tokens[3], "unexpected token");
        ++pos_;
        file.blocks.push_back(parse_hypergroup(name.text));
      } else if (kind.text == "hyperfield") {
        if (line.tokens.size() != 3) fail(line.tokens[3], "unexpected token");
        ++pos_;
        file.blocks.push_back(parse_hyperfield(name.text));
      } else if (kind.text == "hvspace") {
        if (line.tokens.size() != 5 || line.tokens[3].text != "over")
          fail(kind, "hvspace header must be 'structure hvspace NAME over FIELD'");
        const Token& field_ref = line.tokens[4];
        std::size_t field_block = 0;
        const HyperfieldBlock* field = nullptr;
        for (std::size_t i = 0; i < file.blocks.size(); ++i)
          if (auto* f = std::get_if<HyperfieldBlock>(&file.blocks[i]);
              f != nullptr && f->name == field_ref.text) {
            field = f;
            field_block = i;
          }
        if (field == nullptr)
          fail(field_ref,
               "unresolved reference: no hyperfield named '" + field_ref.text +
                   "' declared before this block");
        ++pos_;
        file.blocks.push_back(parse_space(name.text, *field, field_block));
      } else {
        fail(kind, "unknown structure kind '" + kind.text + "'");
      }
      names_.insert(name.text);
    }
    file.manifest = manifest_;
    return file;
  }

 private:
  void split(const std::string& text) {
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      std::string raw = text.substr(
          start, nl == std::string::npos ? std::string::npos : nl - start);
      parse_line(raw, line_no);
      if (nl == std::string::npos) break;
      start = nl + 1;
      ++line_no;
    }
  }

  void parse_line(const std::string& raw, std::size_t line_no) {
    Line line;
    line.number = line_no;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      if (raw[i] == '#') {
        if (line.tokens.empty() && !manifest_) {
          auto manifest = parse_manifest_comment(raw.substr(i + 1));
          if (manifest) manifest_ = manifest;
        }
        break;
      }
      std::size_t begin = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r' && raw[i] != '#')
        ++i;
      line.tokens.push_back(Token{raw.substr(begin, i - begin), line_no, begin + 1});
    }
    if (!line.tokens.empty()) lines_.push_back(std::move(line));
  }

  const Line& expect_line(const std::string& context) {
    if (pos_ >= lines_.size())
      fail_line(lines_.empty() ? 1 : lines_.back().number + 1,
                "unexpected end of file inside " + context);
    return lines_[pos_];
  }

  Carrier parse_element_list(const Line& line, const std::string& keyword) {
    const Token& head = line.tokens.front();
    if (head.text != keyword)
      fail(head, "expected '" + keyword + "', got '" + head.text + "'");
    std::vector<std::string> labels;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const Token& t = line.tokens[i];
      if (!valid_name(t.text)) fail(t, "invalid element label '" + t.text + "'");
      if (!seen.insert(t.text).second)
        fail(t, "duplicate element label '" + t.text + "'");
      labels.push_back(t.text);
    }
    if (labels.empty()) fail(head, "element list must not be empty");
    return Carrier(std::move(labels));
  }

  std::size_t lookup(const Carrier& carrier, const Token& token,
                     const std::string& what) {
    auto idx = carrier.find(token.text);
    if (!idx) fail(token, "unknown " + what + " '" + token.text + "'");
    return *idx;
  }

  // { a b c } after the '=' token; returns the subset over `carrier`.
  IndexSubset parse_set(const Line& line, std::size_t from, const Carrier& carrier) {
    const Token& eq = line.tokens[from - 1];
    if (eq.text != "=") fail(eq, "expected '='");
    if (from >= line.tokens.size())
      fail(eq, "expected a set literal after '='");
    if (line.tokens[from].text == "{}")
      fail(line.tokens[from], "empty set literal");
    if (line.tokens[from].text != "{")
      fail(line.tokens[from], "expected '{'");
    IndexSubset out(carrier.size());
    std::size_t i = from + 1;
    for (; i < line.tokens.size(); ++i) {
      if (line.tokens[i].text == "}") break;
      std::size_t idx = lookup(carrier, line.tokens[i], "element");
      if (out.contains(idx))
        fail(line.tokens[i], "repeated member '" + line.tokens[i].text + "'");
      out.insert(idx);
    }
    if (i >= line.tokens.size())
      fail(line.tokens.back(), "unterminated set literal");
    if (i + 1 != line.tokens.size())
      fail(line.tokens[i + 1], "unexpected token after '}'");
    if (out.empty()) fail(line.tokens[from], "empty set literal");
    return out;
  }

  // Shared cell-accumulation for set-valued tables.
  struct SetTableBuilder {
    std::vector<std::optional<IndexSubset>> cells;
    std::size_t rows = 0, cols = 0;

    void init(std::size_t r, std::size_t c) {
      rows = r;
      cols = c;
      cells.assign(r * c, std::nullopt);
    }
    bool put(std::size_t r, std::size_t c, IndexSubset v) {
      if (cells[r * cols + c]) return false;
      cells[r * cols + c] = std::move(v);
      return true;
    }
  };

  void require_total(const SetTableBuilder& b, const Carrier& rows,
                     const Carrier& cols, const std::string& keyword,
                     std::size_t at_line) {
    for (std::size_t r = 0; r < b.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c)
        if (!b.cells[r * b.cols + c])
          fail_line(at_line, "missing cell: " + keyword + " " + rows.label(r) +
                                 " " + cols.label(c));
  }

  StructureBlock parse_hypergroup(const std::string& name) {
    const Line& first = expect_line("hypergroup " + name);
    Carrier carrier = parse_element_list(first, "elements");
    ++pos_;
    SetTableBuilder add;
    add.init(carrier.size(), carrier.size());
    for (;;) {
      const Line& line = expect_line("hypergroup " + name);
      const Token& head = line.tokens.front();
      if (head.text == "end") {
        if (line.tokens.size() != 1) fail(line.tokens[1], "unexpected token");
        require_total(add, carrier, carrier, "add", line.number);
        ++pos_;
        break;
      }
      if (head.text != "add") fail(head, "expected 'add' or 'end'");
      if (line.tokens.size() < 5) fail(head, "add line needs: add A B = { ... }");
      std::size_t a = lookup(carrier, line.tokens[1], "element");
      std::size_t b = lookup(carrier, line.tokens[2], "element");
      IndexSubset value = parse_set(line, 4, carrier);
      if (!add.put(a, b, std::move(value)))
        fail(head, "duplicate cell: add " + line.tokens[1].text + " " +
                       line.tokens[2].text);
      ++pos_;
    }
    std::vector<IndexSubset> cells;
    for (auto& c : add.cells) cells.push_back(std::move(*c));
    return HypergroupBlock{name, HyperTable(carrier, std::move(cells))};
  }

  StructureBlock parse_hyperfield(const std::string& name) {
    const Line& first = expect_line("hyperfield " + name);
    Carrier carrier = parse_element_list(first, "elements");
    ++pos_;
    SetTableBuilder add;
    add.init(carrier.size(), carrier.size());
    std::vector<std::optional<std::size_t>> mul(carrier.size() * carrier.size());
    std::optional<std::size_t> zero, one;
    for (;;) {
      const Line& line = expect_line("hyperfield " + name);
      const Token& head = line.tokens.front();
      if (head.text == "end") {
        if (line.tokens.size() != 1) fail(line.tokens[1], "unexpected token");
        if (!zero) fail_line(line.number, "missing 'zero' declaration");
        if (!one) fail_line(line.number, "missing 'one' declaration");
        require_total(add, carrier, carrier, "add", line.number);
        for (std::size_t r = 0; r < carrier.size(); ++r)
          for (std::size_t c = 0; c < carrier.size(); ++c)
            if (!mul[r * carrier.size() + c])
              fail_line(line.number, "missing cell: mul " + carrier.label(r) +
                                         " " + carrier.label(c));
        ++pos_;
        break;
      }
      if (head.text == "zero" || head.text == "one") {
        if (line.tokens.size() != 2) fail(head, head.text + " needs one element");
        std::size_t idx = lookup(carrier, line.tokens[1], "element");
        auto& slot = head.text == "zero" ? zero : one;
        if (slot) fail(head, "duplicate '" + head.text + "' declaration");
        slot = idx;
      } else if (head.text == "add") {
        if (line.tokens.size() < 5) fail(head, "add line needs: add A B = { ... }");
        std::size_t a = lookup(carrier, line.tokens[1], "element");
        std::size_t b = lookup(carrier, line.tokens[2], "element");
        IndexSubset value = parse_set(line, 4, carrier);
        if (!add.put(a, b, std::move(value)))
          fail(head, "duplicate cell: add " + line.tokens[1].text + " " +
                         line.tokens[2].text);
      } else if (head.text == "mul") {
        if (line.tokens.size() != 5 || line.tokens[3].text != "=")
          fail(head, "mul line needs: mul A B = C");
        std::size_t a = lookup(carrier, line.tokens[1], "element");
        std::size_t b = lookup(carrier, line.tokens[2], "element");
        std::size_t v = lookup(carrier, line.tokens[4], "element");
        auto& slot = mul[a * carrier.size() + b];
        if (slot)
          fail(head, "duplicate cell: mul " + line.tokens[1].text + " " +
                         line.tokens[2].text);
        slot = v;
      } else {
        fail(head, "expected 'add', 'mul', 'zero', 'one' or 'end'");
      }
      ++pos_;
    }
    std::vector<IndexSubset> add_cells;
    for (auto& c : add.cells) add_cells.push_back(std::move(*c));
    std::vector<std::size_t> mul_cells;
    for (auto& c : mul) mul_cells.push_back(*c);
    return HyperfieldBlock{name, HyperTable(carrier, std::move(add_cells)),
                           MulTable(carrier, std::move(mul_cells)), *zero, *one};
  }

  StructureBlock parse_space(const std::string& name,
                             const HyperfieldBlock& field,
                             std::size_t field_block) {
    const Line& first = expect_line("hvspace " + name);
    Carrier vectors = parse_element_list(first, "vectors");
    ++pos_;
    const Carrier& scalars = field.add.carrier();
    SetTableBuilder vadd, act;
    vadd.init(vectors.size(), vectors.size());
    act.init(scalars.size(), vectors.size());
    std::optional<std::size_t> theta;
    for (;;) {
      const Line& line = expect_line("hvspace " + name);
      const Token& head = line.tokens.front();
      if (head.text == "end") {
        if (line.tokens.size() != 1) fail(line.tokens[1], "unexpected token");
        if (!theta) fail_line(line.number, "missing 'theta' declaration");
        require_total(vadd, vectors, vectors, "vadd", line.number);
        require_total(act, scalars, vectors, "act", line.number);
        ++pos_;
        break;
      }
      if (head.text == "theta") {
        if (line.tokens.size() != 2) fail(head, "theta needs one vector");
        if (theta) fail(head, "duplicate 'theta' declaration");
        theta = lookup(vectors, line.tokens[1], "vector");
      } else if (head.text == "vadd") {
        if (line.tokens.size() < 5)
          fail(head, "vadd line needs: vadd A B = { ... }");
        std::size_t a = lookup(vectors, line.tokens[1], "vector");
        std::size_t b = lookup(vectors, line.tokens[2], "vector");
        IndexSubset value = parse_set(line, 4, vectors);
        if (!vadd.put(a, b, std::move(value)))
          fail(head, "duplicate cell: vadd " + line.tokens[1].text + " " +
                         line.tokens[2].text);
      } else if (head.text == "act") {
        if (line.tokens.size() < 5)
          fail(head, "act line needs: act SCALAR VECTOR = { ... }");
        std::size_t a = lookup(scalars, line.tokens[1], "scalar");
        std::size_t v = lookup(vectors, line.tokens[2], "vector");
        IndexSubset value = parse_set(line, 4, vectors);
        if (!act.put(a, v, std::move(value)))
          fail(head, "duplicate cell: act " + line.tokens[1].text + " " +
                         line.tokens[2].text);
      } else {
        fail(head, "expected 'vadd', 'act', 'theta' or 'end'");
      }
      ++pos_;
    }
    std::vector<IndexSubset> vadd_cells;
    for (auto& c : vadd.cells) vadd_cells.push_back(std::move(*c));
    std::vector<IndexSubset> act_cells;
    for (auto& c : act.cells) act_cells.push_back(std::move(*c));
    return SpaceBlock{name,
                      field.name,
                      field_block,
                      vectors,
                      HyperTable(vectors, std::move(vadd_cells)),
                      ActionTable(scalars.size(), vectors.size(),
                                  std::move(act_cells)),
                      *theta};
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::optional<CensusManifest> manifest_;
  std::unordered_set<std::string> names_;
};

}  // namespace

const std::string& block_name(const StructureBlock& block) {
  return std::visit([](const auto& b) -> const std::string& { return b.name; },
                    block);
}

const StructureBlock* StructureFile::find(const std::string& name) const {
  for (const StructureBlock& block : blocks)
    if (block_name(block) == name) return &block;
  return nullptr;
}

StructureFile parse_structure_file(const std::string& text) {
  return Parser(text).run();
}

std::string render_space_block(const SpaceBlock& s, const Carrier& scalars) {
  const Carrier& v = s.vectors;
  std::string out;
  out += "structure hvspace " + s.name + " over " + s.field_name + "\n";
  out += "  vectors " + v.render_subset(IndexSubset::full(v.size())) + "\n";
  out += "  theta " + v.label(s.theta) + "\n";
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      out += "  vadd " + v.label(a) + " " + v.label(b) + " = { " +
             v.render_subset(s.vadd.cell(a, b)) + " }\n";
  for (std::size_t a = 0; a < scalars.size(); ++a)
    for (std::size_t x = 0; x < v.size(); ++x)
      out += "  act " + scalars.label(a) + " " + v.label(x) + " = { " +
             v.render_subset(s.action.cell(a, x)) + " }\n";
  out += "end\n";
  return out;
}

std::string render_block(const StructureBlock& block) {
  std::string out;
  if (const auto* g = std::get_if<HypergroupBlock>(&block)) {
    const Carrier& c = g->table.carrier();
    out += "structure hypergroup " + g->name + "\n";
    out += "  elements " + c.render_subset(IndexSubset::full(c.size())) + "\n";
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        out += "  add " + c.label(a) + " " + c.label(b) + " = { " +
               c.render_subset(g->table.cell(a, b)) + " }\n";
    out += "end\n";
  } else if (const auto* f = std::get_if<HyperfieldBlock>(&block)) {
    const Carrier& c = f->add.carrier();
    out += "structure hyperfield " + f->name + "\n";
    out += "  elements " + c.render_subset(IndexSubset::full(c.size())) + "\n";
    out += "  zero " + c.label(f->zero) + "\n";
    out += "  one " + c.label(f->one) + "\n";
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        out += "  add " + c.label(a) + " " + c.label(b) + " = { " +
               c.render_subset(f->add.cell(a, b)) + " }\n";
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = 0; b < c.size(); ++b)
        out += "  mul " + c.label(a) + " " + c.label(b) + " = " +
               c.label(f->mul.cell(a, b)) + "\n";
    out += "end\n";
  } else {
    throw ContractError(
        "space blocks need the field's scalar labels; render through "
        "render_structure_file");
  }
  return out;
}

std::string render_structure_file(const StructureFile& file) {
  std::string out;
  if (file.manifest)
    out += "# census kind=" + file.manifest->kind +
           " order=" + std::to_string(file.manifest->order) +
           " count=" + std::to_string(file.manifest->count) + "\n";
  for (const StructureBlock& block : file.blocks) {
    if (const auto* s = std::get_if<SpaceBlock>(&block)) {
      const auto& field = std::get<HyperfieldBlock>(file.blocks[s->field_block]);
      out += render_space_block(*s, field.add.carrier());
    } else {
      out += render_block(block);
    }
  }
  return out;
}

StructureFile census_to_file(const std::vector<CensusEntry>& entries,
                             CensusKind kind, std::size_t order) {
  StructureFile file;
  file.manifest = CensusManifest{census_kind_name(kind), order, entries.size()};
  for (const CensusEntry& entry : entries) {
    if (entry.kind == CensusKind::kHyperfield) {
      file.blocks.push_back(HyperfieldBlock{entry.name, entry.add, *entry.mul,
                                            entry.zero, entry.one});
    } else {
      file.blocks.push_back(HypergroupBlock{entry.name, entry.add});
    }
  }
  return file;
}

}  // namespace hyperalg
