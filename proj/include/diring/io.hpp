// Plain-text structure files.
//
//   # comment to end of line
//   diring H
//   elements 0 a b c
//   add
//   0 a b c
//   ...
//   end
//   lprod ... end
//   rprod ... end
//
//   module M over H
//   elements ...
//   add ... end
//   lact ... end      one row per element of H, in H's declared order
//   ract ... end
//
// A file may hold several structures. The zero element is detected from the
// addition table, not from its label.

#ifndef DIRING_IO_HPP_
#define DIRING_IO_HPP_

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core.hpp"
#include "diring.hpp"
#include "finite_group.hpp"
#include "module.hpp"

namespace diring {

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  enum class StructureKind { diring, module };

  struct Location {
    std::size_t line   = 0;
    std::size_t column = 0;
  };

  struct TableBlock {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::vector<Location>>    where;
    Location                              start;
  };

  struct StructureFile {
    StructureKind                     kind = StructureKind::diring;
    std::string                       name;
    std::optional<std::string>        over;
    std::vector<std::string>          elements;
    std::map<std::string, TableBlock> tables;
    Location                          start;
  };

  namespace detail {
    struct Token {
      std::string text;
      Location    loc;
    };

    // One vector of tokens per nonblank line.
    inline std::vector<std::vector<Token>> tokenize(std::string const& text) {
      std::vector<std::vector<Token>> lines;
      std::size_t                     line = 1;
      std::istringstream              in(text);
      std::string                     raw;
      while (std::getline(in, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        std::vector<Token> toks;
        std::size_t        i = 0;
        while (i < raw.size()) {
          if (std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
            continue;
          }
          std::size_t const start = i;
          while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
          }
          toks.push_back(Token{raw.substr(start, i - start), Location{line, start + 1}});
        }
        if (!toks.empty()) {
          lines.push_back(std::move(toks));
        }
        ++line;
      }
      return lines;
    }

    inline std::vector<std::string> const& blocks_for(StructureKind k) {
      static std::vector<std::string> const d{"add", "lprod", "rprod"};
      static std::vector<std::string> const m{"add", "lact", "ract"};
      return k == StructureKind::diring ? d : m;
    }
  }  // namespace detail

  // Structural parse: headers, element lists, blocks, row arity and declared
  // labels. Module rows are checked against the referenced diring, which must
  // appear earlier in the same text.
  inline std::vector<StructureFile> parse_structures(std::string const& text) {
    auto const                 lines = detail::tokenize(text);
    std::vector<StructureFile> out;
    std::size_t                li = 0;
    auto find_diring = [&out](std::string const& name) -> StructureFile const* {
      for (auto const& s : out) {
        if (s.kind == StructureKind::diring && s.name == name) {
          return &s;
        }
      }
      return nullptr;
    };
    while (li < lines.size()) {
      auto const&   head = lines[li];
      StructureFile s;
      s.start = head[0].loc;
      if (head[0].text == "diring") {
        if (head.size() != 2) {
          throw ParseError(head[0].loc.line, head[0].loc.column, "expected 'diring NAME'");
        }
        s.kind = StructureKind::diring;
        s.name = head[1].text;
      } else if (head[0].text == "module") {
        if (head.size() != 4 || head[2].text != "over") {
          throw ParseError(head[0].loc.line, head[0].loc.column, "expected 'module NAME over DIRING'");
        }
        s.kind = StructureKind::module;
        s.name = head[1].text;
        s.over = head[3].text;
        if (!find_diring(*s.over)) {
          throw ParseError(head[3].loc.line, head[3].loc.column,
                           "diring '" + *s.over + "' is not defined earlier in this file");
        }
      } else {
        throw ParseError(head[0].loc.line, head[0].loc.column, "expected 'diring' or 'module', got '" + head[0].text + "'");
      }
      ++li;
      if (li >= lines.size() || lines[li][0].text != "elements") {
        Location const at = li < lines.size() ? lines[li][0].loc : head[0].loc;
        throw ParseError(at.line, at.column, "expected 'elements' line");
      }
      for (std::size_t k = 1; k < lines[li].size(); ++k) {
        auto const& t = lines[li][k];
        if (std::find(s.elements.begin(), s.elements.end(), t.text) != s.elements.end()) {
          throw ParseError(t.loc.line, t.loc.column, "duplicate label '" + t.text + "'");
        }
        s.elements.push_back(t.text);
      }
      if (s.elements.empty()) {
        throw ParseError(lines[li][0].loc.line, lines[li][0].loc.column, "no elements declared");
      }
      ++li;
      auto const& names = detail::blocks_for(s.kind);
      std::vector<std::string> const* row_labels = &s.elements;
      std::size_t                     row_count  = s.elements.size();
      if (s.kind == StructureKind::module) {
        row_labels = &find_diring(*s.over)->elements;
      }
      while (li < lines.size() && lines[li][0].text != "diring" && lines[li][0].text != "module") {
        auto const& bh = lines[li][0];
        if (std::find(names.begin(), names.end(), bh.text) == names.end()) {
          throw ParseError(bh.loc.line, bh.loc.column, "unknown block '" + bh.text + "'");
        }
        if (lines[li].size() != 1) {
          throw ParseError(lines[li][1].loc.line, lines[li][1].loc.column, "unexpected token after block name");
        }
        if (s.tables.count(bh.text) != 0) {
          throw ParseError(bh.loc.line, bh.loc.column, "duplicate block '" + bh.text + "'");
        }
        bool const  action   = bh.text == "lact" || bh.text == "ract";
        std::size_t expected = action ? row_labels->size() : row_count;
        TableBlock  block;
        block.start = bh.loc;
        ++li;
        bool ended = false;
        while (li < lines.size()) {
          auto const& row = lines[li];
          if (row[0].text == "end") {
            if (row.size() != 1) {
              throw ParseError(row[1].loc.line, row[1].loc.column, "unexpected token after 'end'");
            }
            ended = true;
            ++li;
            break;
          }
          if (row[0].text == "diring" || row[0].text == "module"
              || std::find(names.begin(), names.end(), row[0].text) != names.end()) {
            break;
          }
          if (row.size() != s.elements.size()) {
            throw ParseError(row[0].loc.line, row[0].loc.column,
                             "row has " + std::to_string(row.size()) + " entries, expected "
                                 + std::to_string(s.elements.size()));
          }
          std::vector<std::string> vals;
          std::vector<Location>    locs;
          for (auto const& t : row) {
            if (std::find(s.elements.begin(), s.elements.end(), t.text) == s.elements.end()) {
              throw ParseError(t.loc.line, t.loc.column, "'" + t.text + "' is not a declared element");
            }
            vals.push_back(t.text);
            locs.push_back(t.loc);
          }
          block.rows.push_back(std::move(vals));
          block.where.push_back(std::move(locs));
          ++li;
        }
        if (!ended) {
          Location const at = li < lines.size() ? lines[li][0].loc : bh.loc;
          throw ParseError(at.line, at.column, "missing 'end' for block '" + bh.text + "'");
        }
        if (block.rows.size() != expected) {
          throw ParseError(bh.loc.line, bh.loc.column,
                           "block '" + bh.text + "' has " + std::to_string(block.rows.size()) + " rows, expected "
                               + std::to_string(expected));
        }
        s.tables.emplace(bh.text, std::move(block));
      }
      for (auto const& b : names) {
        if (s.tables.count(b) == 0) {
          throw ParseError(s.start.line, s.start.column, "structure '" + s.name + "' has no '" + b + "' block");
        }
      }
      out.push_back(std::move(s));
    }
    if (out.empty()) {
      throw ParseError(1, 1, "no structure in input");
    }
    return out;
  }

  inline StructureFile parse_structure(std::string const& text) {
    return parse_structures(text).front();
  }

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  namespace detail {
    inline std::vector<std::vector<Elem>> label_rows(TableBlock const& b, std::vector<std::string> const& labels) {
      std::vector<std::vector<Elem>> out;
      for (auto const& row : b.rows) {
        std::vector<Elem> r;
        for (auto const& v : row) {
          r.push_back(static_cast<Elem>(std::find(labels.begin(), labels.end(), v) - labels.begin()));
        }
        out.push_back(std::move(r));
      }
      return out;
    }
  }  // namespace detail

  // Semantic validation of a parsed diring. Either one-sided bar-unit is
  // accepted.
  inline Checked<DiringTable> build_diring(StructureFile const& s) {
    if (s.kind != StructureKind::diring) {
      throw Error("build_diring: '" + s.name + "' is a module");
    }
    require_cap(s.elements.size(), kMaxOrder, "build_diring");
    return make_left_diring(s.elements, detail::label_rows(s.tables.at("add"), s.elements),
                            detail::label_rows(s.tables.at("lprod"), s.elements),
                            detail::label_rows(s.tables.at("rprod"), s.elements), Side::any);
  }

  inline Checked<LeftModuleTable> build_module(StructureFile const& s, DiringRef ring,
                                               std::vector<std::string> const& ring_labels) {
    if (s.kind != StructureKind::module) {
      throw Error("build_module: '" + s.name + "' is a diring");
    }
    std::size_t const n = s.elements.size();
    require_cap(n, kMaxOrder, "build_module");
    auto const add_rows = detail::label_rows(s.tables.at("add"), s.elements);
    Table      add(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        add(i, j) = add_rows[i][j];
      }
    }
    auto g = validate_abelian_group(s.elements, add);
    if (!g) {
      return g.report();
    }
    FiniteAbelianGroup const& grp = g.value();
    std::vector<Elem>         pos(n);
    for (std::size_t i = 0; i < n; ++i) {
      pos[i] = *grp.index_of(s.elements[i]);
    }
    std::size_t const nr = ring->order();
    auto              remap = [&](TableBlock const& b) {
      auto const rows = detail::label_rows(b, s.elements);
      Table      t(nr, n);
      for (std::size_t a = 0; a < rows.size(); ++a) {
        Elem const ra = *ring->group().index_of(ring_labels[a]);
        for (std::size_t x = 0; x < n; ++x) {
          t(ra, pos[x]) = pos[rows[a][x]];
        }
      }
      return t;
    };
    if (!ring->is_left()) {
      ValidationReport rep;
      rep.add("ring", {}, "modules are defined over left dirings only");
      return rep;
    }
    return verify_module(std::move(ring), grp, remap(s.tables.at("lact")), remap(s.tables.at("ract")));
  }

  // A parsed and validated file. Structures that fail validation keep their
  // reports; modules over an invalid diring are reported as such.
  struct LoadedStructure {
    StructureFile                            file;
    std::optional<Checked<DiringTable>>      diring;
    std::optional<Checked<LeftModuleTable>>  module;

    bool             ok() const { return diring ? diring->ok() : module->ok(); }
    ValidationReport const& report() const { return diring ? diring->report() : module->report(); }
  };

  inline std::vector<LoadedStructure> load_structures(std::string const& text) {
    std::vector<LoadedStructure>     out;
    std::map<std::string, DiringRef> rings;
    std::map<std::string, std::vector<std::string>> labels;
    for (auto& s : parse_structures(text)) {
      LoadedStructure ls{s, std::nullopt, std::nullopt};
      if (s.kind == StructureKind::diring) {
        ls.diring = build_diring(s);
        if (ls.diring->ok()) {
          rings[s.name]  = share(ls.diring->value());
          labels[s.name] = s.elements;
        }
      } else {
        auto it = rings.find(*s.over);
        if (it == rings.end()) {
          ValidationReport rep;
          rep.add("ring", {}, "diring '" + *s.over + "' failed validation");
          ls.module = Checked<LeftModuleTable>(rep);
        } else {
          ls.module = build_module(s, it->second, labels.at(*s.over));
        }
      }
      out.push_back(std::move(ls));
    }
    return out;
  }

  inline std::vector<LoadedStructure> load_file(std::string const& path) {
    return load_structures(read_file(path));
  }

  // The first structure of a file as a validated diring; throws otherwise.
  inline DiringTable load_diring(std::string const& path) {
    auto loaded = load_file(path);
    if (!loaded.front().diring) {
      throw Error(path + ": first structure is not a diring");
    }
    return loaded.front().diring->value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void write_table(std::ostringstream& os, char const* name, Table const& t,
                            std::vector<std::string> const& labels) {
      os << name << '\n';
      for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
          os << (j ? " " : "") << labels[t(i, j)];
        }
        os << '\n';
      }
      os << "end\n";
    }

    inline void write_elements(std::ostringstream& os, std::vector<std::string> const& labels) {
      os << "elements";
      for (auto const& l : labels) {
        os << ' ' << l;
      }
      os << '\n';
    }
  }  // namespace detail

  inline std::string serialize(DiringTable const& d, std::string const& name) {
    std::ostringstream os;
    auto const&        labels = d.group().names();
    os << "diring " << name << '\n';
    detail::write_elements(os, labels);
    detail::write_table(os, "add", d.group().add_table(), labels);
    detail::write_table(os, "lprod", d.lprod(), labels);
    detail::write_table(os, "rprod", d.rprod(), labels);
    return os.str();
  }

  // Rows of lact/ract follow the ring's element order, which is also the
  // order serialize() writes for the ring.
  inline std::string serialize(LeftModuleTable const& m, std::string const& name, std::string const& ring_name) {
    std::ostringstream os;
    auto const&        labels = m.carrier().names();
    os << "module " << name << " over " << ring_name << '\n';
    detail::write_elements(os, labels);
    detail::write_table(os, "add", m.carrier().add_table(), labels);
    detail::write_table(os, "lact", m.lact_table(), labels);
    detail::write_table(os, "ract", m.ract_table(), labels);
    return os.str();
  }

  inline std::vector<std::string> labels_of(DiringTable const& d, SubsetMask const& m) {
    std::vector<std::string> out;
    for (Elem x : m.elements()) {
      out.push_back(d.name(x));
    }
    return out;
  }

  // Subset given by element labels.
  inline SubsetMask mask_from_labels(DiringTable const& d, std::vector<std::string> const& labels) {
    SubsetMask m(d.order());
    for (auto const& l : labels) {
      auto idx = d.group().index_of(l);
      if (!idx) {
        throw Error("'" + l + "' is not an element");
      }
      m.insert(*idx);
    }
    return m;
  }

}  // namespace diring

#endif  // DIRING_IO_HPP_
