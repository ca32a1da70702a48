#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "arcwords/error.hpp"
#include "arcwords/semigroup.hpp"
#include "arcwords/transform.hpp"

namespace arcwords::cli {

  using json = nlohmann::ordered_json;

  namespace {

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw PreconditionError("cannot open `" + path + "`");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    std::string edge_list(Digraph const& d) {
      std::string out;
      for (auto const& e : d.edges()) {
        out += (out.empty() ? "" : " ") + std::to_string(e.from) + "->" + std::to_string(e.to);
      }
      return out.empty() ? "(no edges)" : out;
    }

    json digraph_json(Digraph const& d) {
      json edges = json::array();
      for (auto const& e : d.edges()) {
        edges.push_back({e.from, e.to});
      }
      return {{"n", d.size()}, {"edges", edges}};
    }

    std::string csv_field(std::string const& s) {
      if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
      }
      std::string out = "\"";
      for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
      }
      return out + "\"";
    }

    template <typename T>
    std::string opt(std::optional<T> const& x) {
      if (!x) {
        return "";
      }
      if constexpr (std::is_same_v<T, Transformation>) {
        return to_string(*x);
      } else {
        return std::to_string(*x);
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // len / word
    ////////////////////////////////////////////////////////////////////////

    int cmd_len(Config const& c, std::ostream& out) {
      if (!c.alpha) {
        throw PreconditionError("len needs --alpha");
      }
      Digraph const        d     = load_digraph(c);
      Transformation const alpha = parse_transformation(*c.alpha);
      if (alpha.degree() != d.size()) {
        throw PreconditionError("--alpha has degree " + std::to_string(alpha.degree())
                                + " but the digraph has " + std::to_string(d.size())
                                + " vertices");
      }
      auto const idx = explore(d);
      auto const len = length_of(idx, alpha);
      std::optional<Word> w;
      bool                verified = false;
      if (len && c.word) {
        w        = shortest_word(idx, alpha);
        verified = evaluate(*w, d.size()) == alpha && uses_edges_of(*w, d) && w->size() == *len;
      }
      switch (c.format) {
        case Format::json: {
          json j{{"alpha", to_string(alpha)}, {"digraph", digraph_json(d)}, {"member", len.has_value()}};
          if (len) {
            j["length"] = *len;
          }
          if (w) {
            j["word"]     = to_string(*w);
            j["verified"] = verified;
          }
          out << j.dump(2) << '\n';
          break;
        }
        case Format::csv:
          out << "alpha,member,length,word,verified\n"
              << csv_field(to_string(alpha)) << ',' << (len ? "true" : "false") << ','
              << opt(len) << ',' << (w ? csv_field(to_string(*w)) : "") << ','
              << (w ? (verified ? "true" : "false") : "") << '\n';
          break;
        case Format::text:
          if (!len) {
            out << "not a member\n";
          } else {
            out << *len << '\n';
            if (w) {
              out << to_string(*w) << '\n'
                  << "evaluates to " << to_string(evaluate(*w, d.size()))
                  << (verified ? " (verified)" : " (MISMATCH)") << '\n';
            }
          }
          break;
      }
      if (!len) {
        return kFailed;
      }
      return w && !verified ? kInternal : kOk;
    }

    ////////////////////////////////////////////////////////////////////////
    // table
    ////////////////////////////////////////////////////////////////////////

    int table_single(Config const& c, std::ostream& out) {
      Digraph const d       = load_digraph(c);
      auto const    idx     = explore(d);
      auto const&   profile = idx.profile();
      std::size_t const n   = d.size();
      switch (c.format) {
        case Format::json: {
          json rows = json::array();
          for (std::size_t r = 1; r < n; ++r) {
            json row{{"r", r}, {"count", profile.count(r)}};
            if (auto l = profile.length(r)) {
              row["length"] = *l;
              row["witness_alpha"] = to_string(*profile.witness(r));
            }
            rows.push_back(row);
          }
          json j{{"digraph", digraph_json(d)}, {"size", profile.size()}, {"rows", rows}};
          if (auto l = profile.overall()) {
            j["length"] = *l;
          }
          out << j.dump(2) << '\n';
          break;
        }
        case Format::csv:
          out << "r,count,length,witness_alpha\n";
          for (std::size_t r = 1; r < n; ++r) {
            out << r << ',' << profile.count(r) << ',' << opt(profile.length(r)) << ','
                << csv_field(opt(profile.witness(r))) << '\n';
          }
          break;
        case Format::text:
          out << "|<D>| = " << profile.size() << ", l(D) = "
              << (profile.overall() ? std::to_string(*profile.overall()) : "-") << '\n';
          out << std::left << std::setw(4) << "r" << std::setw(10) << "count" << std::setw(8)
              << "l(D,r)"
              << "witness\n";
          for (std::size_t r = 1; r < n; ++r) {
            out << std::setw(4) << r << std::setw(10) << profile.count(r) << std::setw(8)
                << (profile.length(r) ? std::to_string(*profile.length(r)) : "-")
                << opt(profile.witness(r)) << '\n';
          }
          break;
      }
      return kOk;
    }

    json result_json(ExtremalResult const& r) {
      json rows = json::array();
      for (auto const& row : r.rows) {
        json j{{"r", row.r}};
        if (row.min) {
          j["min"]                     = *row.min;
          j["min_witness_digraph_hex"] = row.min_witness.to_hex();
          j["min_witness_alpha"]       = opt(row.min_alpha);
        }
        if (row.max) {
          j["max"]                 = *row.max;
          j["witness_digraph_hex"] = row.max_witness.to_hex();
          j["witness_alpha"]       = opt(row.max_alpha);
          j["max_attainers"]       = row.max_attainers;
        }
        rows.push_back(j);
      }
      return {{"class", to_string(r.spec.kind)},
              {"n", r.spec.n},
              {"connectivity", to_string(r.spec.connectivity)},
              {"labelled", !r.spec.upto_iso},
              {"rows", rows},
              {"runtime_seconds", r.seconds},
              {"enumerated_count", r.enumerated},
              {"verified", r.verified}};
    }

    ExtremalResult result_from_json(json const& j) {
      ExtremalResult r;
      r.spec.kind         = parse_class_kind(j.at("class").get<std::string>());
      r.spec.n            = j.at("n").get<std::size_t>();
      r.spec.connectivity = parse_connectivity(j.at("connectivity").get<std::string>());
      r.spec.upto_iso     = !j.value("labelled", false);
      r.seconds           = j.at("runtime_seconds").get<double>();
      r.enumerated        = j.at("enumerated_count").get<std::size_t>();
      r.verified          = j.at("verified").get<bool>();
      for (auto const& row : j.at("rows")) {
        ExtremalRow x{row.at("r").get<std::size_t>(), {}, {}, {}, {}, {}, {}, 0};
        if (row.contains("max")) {
          x.max           = row["max"].get<std::size_t>();
          x.max_witness   = CanonicalForm::from_hex(row["witness_digraph_hex"].get<std::string>());
          x.max_alpha     = parse_transformation(row["witness_alpha"].get<std::string>());
          x.max_attainers = row.value("max_attainers", std::size_t(0));
        }
        if (row.contains("min")) {
          x.min         = row["min"].get<std::size_t>();
          x.min_witness = CanonicalForm::from_hex(row["min_witness_digraph_hex"].get<std::string>());
          x.min_alpha   = parse_transformation(row["min_witness_alpha"].get<std::string>());
        }
        r.rows.push_back(std::move(x));
      }
      return r;
    }

    // Runs the table, going through the cache directory when one is given.
    ExtremalResult cached_table(Config const& c, ClassSpec const& spec, std::ostream& err) {
      std::optional<std::vector<Digraph>> members;
      std::string                         from_digest = "-";
      if (c.from) {
        std::string const text = read_file(*c.from);
        std::istringstream in(text);
        members = read_tournaments(in);
        std::erase_if(*members, [](Digraph const& d) { return !is_strong_tournament(d); });
        from_digest = std::to_string(cache_key(text));
      }
      auto compute = [&] {
        if (members) {
          return extremal_table(spec, *members, {c.jobs, c.long_run});
        }
        return extremal_table(spec, {c.jobs, c.long_run});
      };
      if (!c.cache_dir) {
        return compute();
      }
      std::string const key = "arcwords-table|" + std::to_string(kCacheFormatVersion) + "|"
                              + to_string(spec.kind) + "|" + std::to_string(spec.n) + "|"
                              + to_string(spec.connectivity) + "|"
                              + (spec.upto_iso ? "iso" : "labelled") + "|"
                              + (c.long_run ? "long" : "short") + "|" + from_digest;
      std::ostringstream name;
      name << "table-" << std::hex << std::setw(16) << std::setfill('0') << cache_key(key)
           << ".json";
      std::filesystem::path const path = std::filesystem::path(*c.cache_dir) / name.str();
      if (std::filesystem::exists(path)) {
        try {
          json const j = json::parse(read_file(path.string()));
          if (j.at("format_version").get<int>() == kCacheFormatVersion
              && j.at("key").get<std::string>() == key) {
            return result_from_json(j.at("result"));
          }
        } catch (std::exception const& e) {
          err << "ignoring unreadable cache entry " << path.string() << ": " << e.what() << '\n';
        }
      }
      auto result = compute();
      std::filesystem::create_directories(*c.cache_dir);
      std::ofstream f(path);
      f << json{{"format_version", kCacheFormatVersion}, {"key", key}, {"result", result_json(result)}}
               .dump(2)
        << '\n';
      return result;
    }

    std::string published(ExtremalResult const& r, std::size_t rank) {
      switch (r.spec.kind) {
        case ClassKind::all_digraphs:
        case ClassKind::connected_digraphs:
          return opt(reference_lmax(r.spec.n, rank));
        case ClassKind::strong_tournaments:
          if (auto p = reference_tournament(r.spec.n, rank)) {
            return "(" + std::to_string(p->first) + ", " + std::to_string(p->second) + ")";
          }
          return "";
        case ClassKind::acyclic_digraphs:
          if (rank >= 2) {
            std::size_t const n = r.spec.n;
            return std::to_string((n - rank) * (n + rank - 3) / 2 + 1);
          }
          return "";
      }
      return "";
    }

    void print_result_text(ExtremalResult const& r, std::ostream& out) {
      bool const tour = r.spec.kind == ClassKind::strong_tournaments;
      out << to_string(r.spec.kind);
      if (r.spec.kind == ClassKind::connected_digraphs) {
        out << " (" << to_string(r.spec.connectivity) << ")";
      }
      out << " on " << r.spec.n << " vertices: " << r.enumerated
          << (r.spec.upto_iso ? " classes" : " labelled digraphs") << ", " << std::fixed
          << std::setprecision(2) << r.seconds << " s, witnesses "
          << (r.verified ? "re-verified" : "NOT reproduced") << '\n';
      out.unsetf(std::ios::floatfield);
      out << std::left << std::setw(4) << "r";
      if (tour) {
        out << std::setw(6) << "min";
      }
      out << std::setw(6) << "max" << std::setw(12)
          << (r.spec.kind == ClassKind::acyclic_digraphs ? "formula" : "published")
          << std::setw(22) << "witness" << "alpha\n";
      for (auto const& row : r.rows) {
        out << std::setw(4) << row.r;
        if (tour) {
          out << std::setw(6) << opt(row.min);
        }
        out << std::setw(6) << opt(row.max) << std::setw(12) << published(r, row.r)
            << std::setw(22) << (row.max ? row.max_witness.to_hex() : "") << opt(row.max_alpha)
            << '\n';
      }
    }

    void print_result_csv_rows(ExtremalResult const& r, std::ostream& out) {
      for (auto const& row : r.rows) {
        out << to_string(r.spec.kind) << ',' << r.spec.n << ',' << to_string(r.spec.connectivity)
            << ',' << row.r << ',' << opt(row.min) << ',' << opt(row.max) << ','
            << (row.max ? row.max_witness.to_hex() : "") << ',' << csv_field(opt(row.max_alpha))
            << ',' << (row.min ? row.min_witness.to_hex() : "") << ','
            << csv_field(opt(row.min_alpha)) << '\n';
      }
    }

    constexpr char const* kCsvHeader
        = "class,n,connectivity,r,min,max,witness_digraph_hex,witness_alpha,"
          "min_witness_digraph_hex,min_witness_alpha\n";

    int table_class(Config const& c, std::ostream& out, std::ostream& err) {
      if (c.n == 0) {
        throw PreconditionError("table --class needs --n");
      }
      std::vector<ExtremalResult> results;
      if (*c.class_name == "both") {
        // All digraphs and connected digraphs, one after the other.
        for (auto kind : {ClassKind::all_digraphs, ClassKind::connected_digraphs}) {
          results.push_back(
              cached_table(c, {kind, c.n, !c.labelled, c.connectivity}, err));
        }
      } else {
        ClassSpec const spec{parse_class_kind(*c.class_name), c.n, !c.labelled, c.connectivity};
        if (c.from && spec.kind != ClassKind::strong_tournaments) {
          throw PreconditionError("--from is only supported with --class tournaments");
        }
        results.push_back(cached_table(c, spec, err));
      }
      switch (c.format) {
        case Format::json:
          if (results.size() == 1) {
            out << result_json(results.front()).dump(2) << '\n';
          } else {
            json j = json::array();
            for (auto const& r : results) {
              j.push_back(result_json(r));
            }
            out << json{{"class", "both"}, {"n", c.n}, {"readings", j}}.dump(2) << '\n';
          }
          break;
        case Format::csv:
          out << kCsvHeader;
          for (auto const& r : results) {
            print_result_csv_rows(r, out);
          }
          break;
        case Format::text:
          for (std::size_t i = 0; i < results.size(); ++i) {
            if (i > 0) {
              out << '\n';
            }
            print_result_text(results[i], out);
          }
          break;
      }
      bool ok = true;
      for (auto const& r : results) {
        ok = ok && r.verified;
      }
      return ok ? kOk : kInternal;
    }

    int cmd_table(Config const& c, std::ostream& out, std::ostream& err) {
      bool const single = c.digraph_path || c.family || c.hex;
      if (single == c.class_name.has_value()) {
        throw PreconditionError("table needs either a digraph (--digraph, --family, --hex) "
                                "or --class, but not both");
      }
      return single ? table_single(c, out) : table_class(c, out, err);
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    char const* direction_text(Direction d) {
      return d == Direction::length_implies_structure ? "length condition holds, structure fails"
                                                      : "structure holds, length condition fails";
    }

    json report_json(VerificationReport const& r) {
      json cex = json::array();
      for (auto const& x : r.counterexamples) {
        json j{{"digraph", digraph_json(x.digraph)},
               {"direction", x.direction == Direction::length_implies_structure
                                 ? "length_implies_structure"
                                 : "structure_implies_length"}};
        if (x.witness) {
          j["witness"] = to_string(*x.witness);
        }
        cex.push_back(j);
      }
      return {{"suite", to_string(r.theorem)},
              {"n", r.n},
              {"digraphs_checked", r.digraphs_checked},
              {"satisfying", r.satisfying},
              {"holds", r.holds},
              {"counterexamples", cex}};
    }

    json report_json(SuiteReport const& r) {
      json checks = json::array();
      for (auto const& c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      }
      return {{"suite", r.suite}, {"n", r.n}, {"items", r.items}, {"passed", r.passed()},
              {"checks", checks}};
    }

    void print_text(VerificationReport const& r, Connectivity conn, std::ostream& out) {
      out << "suite " << to_string(r.theorem) << ", n = " << r.n << ", connectivity "
          << to_string(conn) << ": " << (r.holds ? "PASS" : "FAIL") << '\n'
          << "  " << r.digraphs_checked << " digraphs checked, " << r.satisfying
          << " satisfy both sides, " << r.counterexamples.size() << " counterexamples\n";
      for (auto const& x : r.counterexamples) {
        out << "  " << direction_text(x.direction) << ": " << edge_list(x.digraph);
        if (x.witness) {
          auto const len = length_of(explore(x.digraph), *x.witness);
          out << "; alpha = " << to_string(*x.witness) << ", length " << opt(len)
              << ", rank " << x.witness->rank() << ", n + cycl - fix = "
              << hi_bound(*x.witness);
        }
        out << '\n';
      }
    }

    void print_text(SuiteReport const& r, std::ostream& out) {
      out << "suite " << r.suite << ", n = " << r.n << ": " << (r.passed() ? "PASS" : "FAIL")
          << " (" << r.items << " items)\n";
      for (auto const& c : r.checks) {
        out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) {
          out << ": " << c.detail;
        }
        out << '\n';
      }
      if (r.suite == "conjectures") {
        out << "  " << (r.passed() ? "supported" : "refuted") << " at n = " << r.n << '\n';
      }
    }

    std::optional<Theorem> theorem_suite(std::string const& name) {
      try {
        return parse_theorem(name);
      } catch (PreconditionError const&) {
        return std::nullopt;
      }
    }

    SuiteReport named_suite(std::string const& name, std::size_t n, RunOptions const& o) {
      if (name == "conjectures") {
        return check_conjectures(n, o);
      } else if (name == "bounds") {
        return bounds_audit(n, o);
      } else if (name == "complete") {
        return verify_complete(n);
      } else if (name == "chain") {
        return verify_inequality_chain(n, o);
      } else if (name == "named") {
        return verify_named_semigroups(n);
      } else if (name == "constructions") {
        return verify_constructions(n, o);
      } else if (name == "arcs") {
        return verify_arc_lengths(n);
      } else if (name == "acyclic") {
        return verify_acyclic(n, o);
      }
      throw PreconditionError("unknown suite `" + name
                              + "` (expected C1, C2, C3, CyclFree, conjectures, bounds, "
                                "complete, chain, named, constructions, arcs or acyclic)");
    }

    int cmd_verify(Config const& c, std::ostream& out) {
      if (!c.suite) {
        throw PreconditionError("verify needs --suite");
      }
      if (c.n == 0) {
        throw PreconditionError("verify needs --n");
      }
      RunOptions const opts{c.jobs, c.long_run};
      bool             passed = true;
      if (auto t = theorem_suite(*c.suite)) {
        auto const r = verify_characterization(*t, c.n, c.connectivity, opts);
        passed       = r.holds;
        switch (c.format) {
          case Format::json:
            out << report_json(r).dump(2) << '\n';
            break;
          case Format::csv:
            out << "suite,n,direction,digraph,witness\n";
            for (auto const& x : r.counterexamples) {
              out << to_string(r.theorem) << ',' << r.n << ','
                  << (x.direction == Direction::length_implies_structure ? "length_implies_structure"
                                                                          : "structure_implies_length")
                  << ',' << csv_field(edge_list(x.digraph)) << ',' << csv_field(opt(x.witness))
                  << '\n';
            }
            break;
          case Format::text:
            print_text(r, c.connectivity, out);
            break;
        }
      } else {
        auto const r = named_suite(*c.suite, c.n, opts);
        passed       = r.passed();
        switch (c.format) {
          case Format::json:
            out << report_json(r).dump(2) << '\n';
            break;
          case Format::csv:
            out << "suite,n,check,passed,detail\n";
            for (auto const& x : r.checks) {
              out << r.suite << ',' << r.n << ',' << csv_field(x.name) << ','
                  << (x.passed ? "true" : "false") << ',' << csv_field(x.detail) << '\n';
            }
            break;
          case Format::text:
            print_text(r, out);
            break;
        }
      }
      return passed ? kOk : kFailed;
    }

    ////////////////////////////////////////////////////////////////////////
    // gen / ingest
    ////////////////////////////////////////////////////////////////////////

    int cmd_gen(Config const& c, std::ostream& out) {
      Digraph const d = load_digraph(c);
      switch (c.format) {
        case Format::json: {
          json j = digraph_json(d);
          j["canonical_hex"] = canonical_form(d).to_hex();
          out << j.dump(2) << '\n';
          break;
        }
        case Format::csv:
          out << "from,to\n";
          for (auto const& e : d.edges()) {
            out << e.from << ',' << e.to << '\n';
          }
          break;
        case Format::text:
          out << to_text(d);
          break;
      }
      return kOk;
    }

    int cmd_ingest(Config const& c, std::ostream& out) {
      if (!c.from) {
        throw PreconditionError("ingest needs --from");
      }
      std::string const  text = read_file(*c.from);
      std::istringstream in(text);
      auto const         all = read_tournaments(in);
      std::vector<std::string> classes;
      std::size_t              strong = 0;
      for (auto const& t : all) {
        if (c.n != 0 && t.size() != c.n) {
          throw PreconditionError("tournament on " + std::to_string(t.size())
                                  + " vertices, expected " + std::to_string(c.n));
        }
        if (is_strong_tournament(t)) {
          ++strong;
          classes.push_back(canonical_form(t).to_hex());
        }
      }
      std::sort(classes.begin(), classes.end());
      classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
      switch (c.format) {
        case Format::json:
          out << json{{"tournaments", all.size()}, {"strong", strong}, {"classes", classes}}.dump(2)
              << '\n';
          break;
        case Format::csv:
          out << "canonical_hex\n";
          for (auto const& h : classes) {
            out << h << '\n';
          }
          break;
        case Format::text:
          out << all.size() << " tournaments, " << strong << " strong, " << classes.size()
              << " strong classes\n";
          for (auto const& h : classes) {
            out << h << '\n';
          }
          break;
      }
      return kOk;
    }

    Format parse_format(std::string const& s) {
      if (s == "text") {
        return Format::text;
      } else if (s == "csv") {
        return Format::csv;
      } else if (s == "json") {
        return Format::json;
      }
      throw PreconditionError("unknown format `" + s + "` (expected text, csv or json)");
    }

  }  // namespace

  Digraph load_digraph(Config const& c) {
    int const sources = int(c.digraph_path.has_value()) + int(c.family.has_value())
                        + int(c.hex.has_value());
    if (sources != 1) {
      throw PreconditionError("give exactly one of --digraph, --family, --hex");
    }
    if (c.digraph_path) {
      return parse_digraph(read_file(*c.digraph_path));
    } else if (c.family) {
      return family_from_spec(*c.family);
    }
    return from_canonical_form(CanonicalForm::from_hex(*c.hex));
  }

  Digraph tournament_from_bits(std::string_view bits) {
    std::size_t n = 1;
    while (n * (n - 1) / 2 < bits.size()) {
      ++n;
    }
    if (n * (n - 1) / 2 != bits.size() || n < 2) {
      throw ParseError(ParseError::Kind::malformed, 0,
                       "tournament bitstring length " + std::to_string(bits.size())
                           + " is not n(n-1)/2");
    }
    if (n > kMaxVertices) {
      throw SizeLimitError("tournaments support n <= " + std::to_string(kMaxVertices));
    }
    Digraph     t(n);
    std::size_t k = 0;
    for (vertex_type i = 1; i <= n; ++i) {
      for (vertex_type j = i + 1; j <= n; ++j, ++k) {
        if (bits[k] == '1') {
          t.add_edge(i, j);
        } else if (bits[k] == '0') {
          t.add_edge(j, i);
        } else {
          throw ParseError(ParseError::Kind::malformed, 0, "tournament bits must be 0 or 1");
        }
      }
    }
    return t;
  }

  std::vector<Digraph> read_tournaments(std::istream& in) {
    std::vector<Digraph> out;
    std::string          line;
    std::size_t          line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      auto const last = line.find_last_not_of(" \t\r");
      try {
        out.push_back(tournament_from_bits(std::string_view(line).substr(first, last - first + 1)));
      } catch (ParseError const& e) {
        throw ParseError(e.kind(), line_no, e.what());
      }
      if (out.back().size() != out.front().size()) {
        throw ParseError(ParseError::Kind::malformed, line_no,
                         "tournament on " + std::to_string(out.back().size())
                             + " vertices after one on " + std::to_string(out.front().size()));
      }
    }
    return out;
  }

  std::uint64_t cache_key(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shortest words over the arcs of a digraph", "arcwords"};
    app.require_subcommand(1);
    Config      c;
    std::string format = "text", connectivity = "unilateral";

    auto digraph_options = [&](CLI::App* sub) {
      sub->add_option("--digraph", c.digraph_path, "digraph file (`digraph n` then `u v` lines)");
      sub->add_option("--family", c.family, "named family, e.g. K:4, pi:6, theta:5, gamma1");
      sub->add_option("--hex", c.hex, "canonical form in hex, as printed by table");
    };
    auto output_options = [&](CLI::App* sub) {
      sub->add_option("--format", format, "text, csv or json")
          ->check(CLI::IsMember({"text", "csv", "json"}));
    };
    auto run_options = [&](CLI::App* sub) {
      sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
      sub->add_flag("--long", c.long_run, "allow the long-running sizes");
      sub->add_option("--connectivity", connectivity, "unilateral or weak")
          ->check(CLI::IsMember({"unilateral", "weak"}));
    };

    auto* len = app.add_subcommand("len", "length of alpha over the arcs of a digraph");
    digraph_options(len);
    output_options(len);
    len->add_option("--alpha", c.alpha, "transformation in one-line notation")->required();
    len->add_flag("--word", c.word, "also print a shortest word");

    auto* word = app.add_subcommand("word", "len --word");
    digraph_options(word);
    output_options(word);
    word->add_option("--alpha", c.alpha, "transformation in one-line notation")->required();

    auto* table = app.add_subcommand("table", "per-rank lengths of a digraph or a class");
    digraph_options(table);
    output_options(table);
    run_options(table);
    table->add_option("--class", c.class_name, "all, connected, both, acyclic or tournaments")
        ->check(CLI::IsMember({"all", "connected", "both", "acyclic", "tournaments"}));
    table->add_option("--n", c.n, "number of vertices");
    table->add_flag("--labelled", c.labelled, "enumerate labelled digraphs (n <= 5)");
    table->add_option("--cache-dir", c.cache_dir, "reuse results stored here");
    table->add_option("--from", c.from, "tournaments as pair-order bitstrings, one per line");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    output_options(verify);
    run_options(verify);
    verify->add_option("--suite", c.suite, "C1, C2, C3, CyclFree, conjectures, bounds, "
                                           "complete, chain, named, constructions, arcs, acyclic")
        ->required();
    verify->add_option("--n", c.n, "number of vertices")->required();

    auto* gen = app.add_subcommand("gen", "print a digraph file");
    digraph_options(gen);
    output_options(gen);

    auto* ingest = app.add_subcommand("ingest", "read a tournament archive");
    output_options(ingest);
    ingest->add_option("--from", c.from, "tournaments as pair-order bitstrings")->required();
    ingest->add_option("--n", c.n, "expected number of vertices");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kOk : kBadInput;
    }

    try {
      c.format       = parse_format(format);
      c.connectivity = parse_connectivity(connectivity);
      if (len->parsed()) {
        c.command = "len";
        return cmd_len(c, out);
      } else if (word->parsed()) {
        c.command = "word";
        c.word    = true;
        return cmd_len(c, out);
      } else if (table->parsed()) {
        c.command = "table";
        return cmd_table(c, out, err);
      } else if (verify->parsed()) {
        c.command = "verify";
        return cmd_verify(c, out);
      } else if (gen->parsed()) {
        c.command = "gen";
        return cmd_gen(c, out);
      } else if (ingest->parsed()) {
        c.command = "ingest";
        return cmd_ingest(c, out);
      }
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << '\n';
      return kBadInput;
    } catch (PreconditionError const& e) {
      err << "error: " << e.what() << '\n';
      return kBadInput;
    } catch (SizeLimitError const& e) {
      err << "size limit: " << e.what() << '\n';
      return kSizeLimit;
    } catch (NotMemberError const& e) {
      err << e.what() << '\n';
      return kFailed;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return kInternal;
    }
    return kBadInput;
  }

}  // namespace arcwords::cli
