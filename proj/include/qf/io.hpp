#pragma once

// JSON file formats and text rendering.
//
//   quandle      {"order": n, "table": [[...]], "names": [...]?}, table[i][j] = i*j
//   group        {"order": n, "mul": [[...]], "labels": [...]?}
//   certificate  {"quandle": <file name or inline quandle>, "group": <group>, "images": [...]}
//   presentation {"generators": [...], "relations": [["(op x y)", "z"], ...]}

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "envelope.hpp"
#include "error.hpp"
#include "fingroup.hpp"
#include "freealg.hpp"
#include "ga.hpp"
#include "quandle.hpp"

namespace qf::io {

  using json = nlohmann::ordered_json;

  class format_error : public invalid_argument {
   public:
    using invalid_argument::invalid_argument;
  };

  // Pretty printing with arrays of scalars kept on one line.
  namespace detail {
    inline bool is_flat(json const& j) {
      if (!j.is_array()) {
        return false;
      }
      return std::all_of(j.begin(), j.end(), [](json const& e) { return e.is_primitive(); });
    }

    inline void write(std::ostream& os, json const& j, int indent) {
      std::string const pad(static_cast<std::size_t>(indent), ' ');
      std::string const inner(static_cast<std::size_t>(indent + 2), ' ');
      if (j.is_object()) {
        if (j.empty()) {
          os << "{}";
          return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
          if (!first) {
            os << ",\n";
          }
          first = false;
          os << inner << json(it.key()).dump() << ": ";
          write(os, it.value(), indent + 2);
        }
        os << "\n" << pad << "}";
      } else if (j.is_array() && !is_flat(j)) {
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) {
            os << ",\n";
          }
          os << inner;
          write(os, j[i], indent + 2);
        }
        os << "\n" << pad << "]";
      } else if (j.is_array()) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          os << (i ? ", " : "") << j[i].dump();
        }
        os << "]";
      } else {
        os << j.dump();
      }
    }
  }  // namespace detail

  inline std::string pretty(json const& j) {
    std::ostringstream os;
    detail::write(os, j, 0);
    os << "\n";
    return os.str();
  }

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw format_error("cannot open '" + path + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw format_error("'" + path + "' is not valid JSON: " + e.what());
    }
  }

  inline void write_text_file(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw format_error("cannot write '" + path + "'");
    }
    out << text;
  }

  namespace detail {
    inline std::vector<std::vector<std::size_t>> square(json const& j, char const* key, std::size_t& order) {
      if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
        throw format_error(std::string("missing array '") + key + "'");
      }
      for (auto const& row : j.at(key)) {
        if (!row.is_array()
            || !std::all_of(row.begin(), row.end(), [](json const& v) { return v.is_number_unsigned(); })) {
          throw format_error(std::string("'") + key + "' must be a square array of non-negative integers");
        }
      }
      std::vector<std::vector<std::size_t>> t;
      try {
        t = j.at(key).get<std::vector<std::vector<std::size_t>>>();
      } catch (json::exception const&) {
        throw format_error(std::string("'") + key + "' must be a square array of non-negative integers");
      }
      if (j.contains("order")) {
        if (!j.at("order").is_number_unsigned() || j.at("order").get<std::size_t>() != t.size()) {
          throw format_error("'order' does not match the table size");
        }
      }
      order = t.size();
      return t;
    }

    inline std::vector<std::string> strings(json const& j, char const* key, std::size_t n) {
      if (!j.contains(key)) {
        return {};
      }
      std::vector<std::string> v;
      try {
        v = j.at(key).get<std::vector<std::string>>();
      } catch (json::exception const&) {
        throw format_error(std::string("'") + key + "' must be an array of strings");
      }
      if (v.size() != n) {
        throw format_error(std::string("'") + key + "' has the wrong length");
      }
      return v;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Quandles and groups
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(FiniteQuandle const& Q) {
    json j;
    j["order"] = Q.order();
    j["table"] = Q.table();
    if (!Q.names().empty()) {
      j["names"] = Q.names();
    }
    return j;
  }

  // Validates the axioms; a violation surfaces as axiom_violation.
  inline FiniteQuandle quandle_from_json(json const& j) {
    std::size_t n = 0;
    auto        t = detail::square(j, "table", n);
    return FiniteQuandle::from_table(t, detail::strings(j, "names", n));
  }

  inline Table table_from_json(json const& j) {
    std::size_t n = 0;
    return detail::square(j, "table", n);
  }

  inline FiniteQuandle load_quandle(std::string const& path) {
    return quandle_from_json(read_json_file(path));
  }

  inline json to_json(FiniteGroup const& G) {
    json j;
    j["order"]  = G.order();
    j["mul"]    = G.table();
    j["labels"] = G.labels();
    return j;
  }

  inline FiniteGroup group_from_json(json const& j) {
    std::size_t n = 0;
    auto        t = detail::square(j, "mul", n);
    return FiniteGroup::from_table(t, detail::strings(j, "labels", n));
  }

  // A path to a group file, or else a spec string such as "S3xZ4".
  inline FiniteGroup load_group(std::string const& arg) {
    if (std::filesystem::is_regular_file(arg)) {
      return group_from_json(read_json_file(arg));
    }
    return parse_group_spec(arg);
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(Certificate const& c, json quandle_ref) {
    json j;
    j["quandle"] = std::move(quandle_ref);
    j["group"]   = to_json(c.group);
    j["images"]  = c.images;
    return j;
  }

  struct LoadedCertificate {
    Certificate               cert;
    std::optional<FiniteQuandle> quandle;  // inline quandle, or the file it names
  };

  // Relative quandle paths are resolved against the certificate's directory.
  inline LoadedCertificate certificate_from_json(json const& j, std::filesystem::path const& base = {}) {
    if (!j.is_object() || !j.contains("group") || !j.contains("images")) {
      throw format_error("certificate needs 'group' and 'images'");
    }
    LoadedCertificate out{Certificate{group_from_json(j.at("group")), {}}, std::nullopt};
    try {
      out.cert.images = j.at("images").get<std::vector<std::size_t>>();
    } catch (json::exception const&) {
      throw format_error("'images' must be an array of element indices");
    }
    if (j.contains("quandle")) {
      auto const& q = j.at("quandle");
      if (q.is_object()) {
        out.quandle = quandle_from_json(q);
      } else if (q.is_string()) {
        std::filesystem::path p = q.get<std::string>();
        if (p.is_relative() && !std::filesystem::exists(p)) {
          p = base / p;
        }
        out.quandle = load_quandle(p.string());
      }
    }
    return out;
  }

  inline LoadedCertificate load_certificate(std::string const& path) {
    return certificate_from_json(read_json_file(path), std::filesystem::path(path).parent_path());
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(QuandlePresentation const& P) {
    json j;
    j["generators"] = P.generators;
    json rel        = json::array();
    for (auto const& [l, r] : P.relations) {
      rel.push_back(json::array({to_string(l), to_string(r)}));
    }
    j["relations"] = rel;
    return j;
  }

  inline QuandlePresentation presentation_from_json(json const& j) {
    if (!j.is_object() || !j.contains("generators")) {
      throw format_error("presentation needs 'generators'");
    }
    QuandlePresentation P;
    try {
      P.generators = j.at("generators").get<std::vector<std::string>>();
    } catch (json::exception const&) {
      throw format_error("'generators' must be an array of names");
    }
    if (j.contains("relations")) {
      for (auto const& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string()) {
          throw format_error("each relation must be a pair of word strings");
        }
        P.relations.emplace_back(parse_quandle_word(r[0].get<std::string>()),
                                 parse_quandle_word(r[1].get<std::string>()));
      }
    }
    P.validate();
    return P;
  }

  inline QuandlePresentation load_presentation(std::string const& path) {
    return presentation_from_json(read_json_file(path));
  }

  inline json to_json(GroupPresentation const& P) {
    json j;
    j["generators"] = P.num_generators;
    if (!P.names.empty()) {
      j["names"] = P.names;
    }
    json rel = json::array();
    for (auto const& r : P.relators) {
      json w = json::array();
      for (auto const& l : r) {
        // generator index g as g+1, its inverse as -(g+1)
        w.push_back(l.exponent > 0 ? static_cast<long long>(l.generator) + 1
                                   : -static_cast<long long>(l.generator) - 1);
      }
      rel.push_back(w);
    }
    j["relators"] = rel;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Q(G,A)
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(GAQuandle const& QA) {
    json j = to_json(QA.quandle());
    j["base"] = QA.base();
    json labels = json::array();
    for (auto const& e : QA.element_labels()) {
      labels.push_back(json::array({e.a_index, e.coset_rep}));
    }
    j["element_labels"] = labels;
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text rendering
  ////////////////////////////////////////////////////////////////////////

  inline std::string render_table(FiniteQuandle const& Q) {
    std::size_t width = 1;
    for (std::size_t x = 0; x < Q.order(); ++x) {
      width = std::max(width, Q.name(x).size());
    }
    auto cell = [&](std::string const& s) { return std::string(width - s.size() + 1, ' ') + s; };
    std::string out = cell("*") + " |";
    for (std::size_t y = 0; y < Q.order(); ++y) {
      out += cell(Q.name(y));
    }
    out += "\n" + std::string(width + 3, '-') + std::string((width + 1) * Q.order(), '-') + "\n";
    for (std::size_t x = 0; x < Q.order(); ++x) {
      out += cell(Q.name(x)) + " |";
      for (std::size_t y = 0; y < Q.order(); ++y) {
        out += cell(Q.name(Q.op(x, y)));
      }
      out += "\n";
    }
    return out;
  }

}  // namespace qf::io
