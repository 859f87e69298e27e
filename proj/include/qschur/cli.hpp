#pragma once

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qschur/io.hpp"
#include "qschur/qschur.hpp"

namespace qschur::cli {

inline constexpr const char* version_string = "qschur 1.0.0";

// Exit codes: 0 success, 1 check failure or golden mismatch, 2 usage or
// scope error.
enum exit_code : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

struct run_config {
  std::string command;
  int n = 0;
  std::vector<int> kappa;
  int e = 0;
  std::string block_selector;  // content text "a<res>:<mult>,...", empty = all blocks
  std::string format = "text";  // json | csv | latex | text
  std::string golden_path;
  int threads = 1;
};

inline int default_threads() {
  if (const char* env = std::getenv("QSCHUR_THREADS")) {
    int value = std::atoi(env);
    if (value >= 1) return value;
  }
  return 1;
}

// Order-preserving parallel map over blocks; results are assembled in input
// order regardless of the thread count.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& f, int threads) {
  using result_t = decltype(f(items.front()));
  std::vector<result_t> results;
  results.reserve(items.size());
  if (threads <= 1 || items.size() <= 1) {
    for (const T& item : items) results.push_back(f(item));
    return results;
  }
  std::vector<std::future<result_t>> futures;
  futures.reserve(items.size());
  for (const T& item : items)
    futures.push_back(std::async(std::launch::async, [&f, &item] { return f(item); }));
  for (auto& fut : futures) results.push_back(fut.get());
  return results;
}

namespace detail {

inline std::string validity_name(regime r) {
  return r == regime::exact ? "exact" : "conjectural";
}

// Matrices are emitted with a named kind so golden files are self-describing.
struct matrix_document {
  std::string kind;
  block_t blk;
  graded_matrix matrix;
  regime validity = regime::exact;
};

inline json matrix_document_to_json(const matrix_document& doc) {
  json obj = matrix_to_json(doc.matrix);
  obj["kind"] = doc.kind;
  obj["beta"] = format_root_vector(doc.blk.beta);
  obj["defect"] = doc.blk.defect;
  obj["validity"] = validity_name(doc.validity);
  return obj;
}

inline void emit_matrix_documents(const std::vector<matrix_document>& docs,
                                  const std::string& format, std::ostream& out) {
  if (format == "json") {
    if (docs.size() == 1) {
      out << matrix_document_to_json(docs.front()).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& doc : docs) arr.push_back(matrix_document_to_json(doc));
      out << arr.dump(2) << '\n';
    }
    return;
  }
  for (const auto& doc : docs) {
    char comment = format == "latex" ? '%' : '#';
    out << comment << ' ' << doc.kind << " block " << format_root_vector(doc.blk.beta)
        << " defect " << doc.blk.defect;
    if (doc.validity != regime::exact) out << " [" << validity_name(doc.validity) << ']';
    out << '\n';
    if (format == "latex")
      out << matrix_to_latex(doc.matrix);
    else if (format == "csv")
      out << matrix_to_csv(doc.matrix);
    else
      out << matrix_to_text(doc.matrix);
  }
}

// Golden comparison: triple sets for matrices, structural equality for
// JSON documents (nlohmann::json sorts object keys, so this is the
// canonical-key-sorted byte comparison required of JSON goldens).
inline int compare_matrix_golden(const std::vector<matrix_document>& docs,
                                 const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open golden file: " << path << '\n';
    return exit_usage;
  }
  json golden = json::parse(in);
  json produced = json::array();
  for (const auto& doc : docs) produced.push_back(matrix_document_to_json(doc));
  if (golden.is_object()) golden = json::array({golden});
  if (golden.size() != produced.size()) {
    err << "golden mismatch: expected " << golden.size() << " matrices, produced "
        << produced.size() << '\n';
    return exit_failed;
  }
  for (size_t i = 0; i < golden.size(); ++i) {
    graded_matrix want = matrix_from_json(golden.at(i));
    graded_matrix got = matrix_from_json(produced.at(i));
    if (!matrices_equal_as_triples(want, got)) {
      auto want_triples = matrix_triples(want);
      auto got_triples = matrix_triples(got);
      err << "golden mismatch in matrix " << i << ":\n";
      int shown = 0;
      for (const auto& t : want_triples)
        if (!got_triples.count(t) && shown++ < 5)
          err << "  missing (" << std::get<0>(t) << ", " << std::get<1>(t) << ") = "
              << std::get<2>(t) << '\n';
      for (const auto& t : got_triples)
        if (!want_triples.count(t) && shown++ < 10)
          err << "  unexpected (" << std::get<0>(t) << ", " << std::get<1>(t) << ") = "
              << std::get<2>(t) << '\n';
      return exit_failed;
    }
  }
  return exit_ok;
}

inline int compare_json_golden(const std::string& produced, const std::string& path,
                               std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open golden file: " << path << '\n';
    return exit_usage;
  }
  nlohmann::json golden = nlohmann::json::parse(in);
  nlohmann::json got = nlohmann::json::parse(produced);
  if (golden != got) {
    err << "golden mismatch: canonical JSON differs\n";
    return exit_failed;
  }
  return exit_ok;
}

}  // namespace detail

// Execute one parsed command, writing the document to `out` and
// diagnostics to `err`.  Throws nothing: scope violations map to exit
// codes.
inline int dispatch(const run_config& cfg, std::ostream& out, std::ostream& err) {
  using detail::matrix_document;
  try {
    multicharge mc(cfg.kappa, cfg.e);
    if (cfg.command == "level2" && mc.level() != 2) {
      err << "level2 requires a multicharge of level 2\n";
      return exit_usage;
    }

    std::vector<block_t> selected = blocks(cfg.n, mc);
    if (!cfg.block_selector.empty()) {
      root_vector beta = parse_root_vector(cfg.block_selector, mc);
      std::vector<block_t> filtered;
      for (block_t& blk : selected)
        if (blk.beta == beta) filtered.push_back(std::move(blk));
      if (filtered.empty()) {
        err << "no block with content " << cfg.block_selector << " for n=" << cfg.n << '\n';
        return exit_usage;
      }
      selected = std::move(filtered);
    }

    if (cfg.command == "blocks") {
      json arr = json::array();
      for (const block_t& blk : selected) arr.push_back(block_to_json(blk));
      if (cfg.format == "json") {
        std::string doc = arr.dump(2) + "\n";
        if (!cfg.golden_path.empty())
          return detail::compare_json_golden(doc, cfg.golden_path, err);
        out << doc;
      } else {
        for (const block_t& blk : selected) {
          out << "block " << format_root_vector(blk.beta) << " defect " << blk.defect << '\n';
          for (const auto& mu : blk.members)
            out << "  (" << format_multipartition(mu, true) << ")\n";
        }
      }
      return exit_ok;
    }

    if (cfg.command == "tableaux") {
      json arr = json::array();
      for (const block_t& blk : selected)
        for (const auto& lam : blk.members) {
          json shape_doc;
          shape_doc["shape"] = format_multipartition(lam);
          shape_doc["block"] = format_root_vector(blk.beta);
          json list = json::array();
          for (const auto& t : enumerate_standard(lam)) {
            auto [deg, codeg] = degree_codegree(t, mc);
            json item = tableau_to_json(t);
            item["degree"] = deg;
            item["codegree"] = codeg;
            item["residues"] = t.residue_sequence(mc);
            list.push_back(item);
          }
          shape_doc["tableaux"] = list;
          arr.push_back(shape_doc);
        }
      if (cfg.format == "json") {
        std::string doc = arr.dump(2) + "\n";
        if (!cfg.golden_path.empty())
          return detail::compare_json_golden(doc, cfg.golden_path, err);
        out << doc;
      } else {
        for (const auto& shape_doc : arr) {
          out << shape_doc["shape"].get<std::string>() << ":\n";
          for (const auto& item : shape_doc["tableaux"])
            out << "  deg " << item["degree"] << " codeg " << item["codegree"] << '\n';
        }
      }
      return exit_ok;
    }

    if (cfg.command == "dims") {
      json arr = json::array();
      auto dims_of = [&](const block_t& blk) {
        json doc;
        doc["beta"] = format_root_vector(blk.beta);
        doc["defect"] = blk.defect;
        doc["schur_dim"] = dim_schur_block(blk, mc).to_string();
        doc["hecke_dim"] = dim_hecke_block(blk, mc).to_string();
        json members = json::object();
        for (const auto& mu : blk.members)
          members[format_multipartition(mu)] =
              json{{"G_upper", dim_g_upper(mu, mc).to_string()},
                   {"G_lower", dim_g_lower(mu, mc).to_string()}};
        doc["members"] = members;
        return doc;
      };
      for (json doc : parallel_map(selected, dims_of, cfg.threads)) arr.push_back(doc);
      if (cfg.format == "json") {
        std::string doc = arr.dump(2) + "\n";
        if (!cfg.golden_path.empty())
          return detail::compare_json_golden(doc, cfg.golden_path, err);
        out << doc;
      } else {
        for (const auto& doc : arr) {
          out << "block " << doc["beta"].get<std::string>() << " defect " << doc["defect"]
              << '\n';
          out << "  schur: " << doc["schur_dim"].get<std::string>() << '\n';
          out << "  hecke: " << doc["hecke_dim"].get<std::string>() << '\n';
        }
      }
      return exit_ok;
    }

    if (cfg.command == "decomp" || cfg.command == "cartan" || cfg.command == "level2" ||
        cfg.command == "tilting") {
      auto compute = [&](const block_t& blk) {
        matrix_document doc;
        doc.blk = blk;
        doc.validity = classify_regime(mc, cfg.n);
        if (cfg.command == "level2") {
          doc.kind = "level2";
          doc.matrix = level2_decomposition(blk, mc);
        } else if (cfg.command == "tilting") {
          doc.kind = "tilting";
          doc.matrix = straighten_tilting(blk, mc).matrix;
        } else {
          graded_matrix d = straighten_canonical(blk, mc).matrix;
          if (cfg.command == "cartan") {
            doc.kind = "cartan";
            doc.matrix = cartan_matrix(d);
          } else {
            doc.kind = "decomp";
            doc.matrix = d;
          }
        }
        return doc;
      };
      std::vector<matrix_document> docs = parallel_map(selected, compute, cfg.threads);
      if (!cfg.golden_path.empty())
        return detail::compare_matrix_golden(docs, cfg.golden_path, err);
      detail::emit_matrix_documents(docs, cfg.format, out);
      return exit_ok;
    }

    if (cfg.command == "verify") {
      int cap = mc.level() <= 2 ? 8 : (mc.level() == 3 ? 7 : 6);
      if (cfg.n > cap) {
        err << "verify caps n at " << cap << " for level " << mc.level() << '\n';
        return exit_usage;
      }
      auto check = [&](const block_t& blk) {
        std::vector<check_report> reports;
        reports.push_back(verify_block_invariants(blk, mc));
        reports.push_back(conjugate_duality_check(blk, mc));
        return reports;
      };
      std::vector<check_report> all;
      for (auto& reports : parallel_map(selected, check, cfg.threads))
        for (auto& r : reports) all.push_back(std::move(r));
      if (cfg.block_selector.empty()) {
        check_report dims{"dimension_identity", describe_scope(cfg.n, mc)};
        if (!dimension_identity(cfg.n, mc.level()))
          dims.fail("sum of squared tableau counts differs from level^n * n!");
        all.push_back(dims);
      }
      bool ok = true;
      if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : all) {
          arr.push_back(check_report_to_json(r));
          ok = ok && r.passed;
        }
        std::string doc = arr.dump(2) + "\n";
        if (!cfg.golden_path.empty()) {
          int rc = detail::compare_json_golden(doc, cfg.golden_path, err);
          if (rc != exit_ok) return rc;
        } else {
          out << doc;
        }
      } else {
        for (const auto& r : all) {
          out << (r.passed ? "pass" : "FAIL") << ' ' << r.name << " [" << r.scope << ']';
          if (r.counterexample) out << ' ' << *r.counterexample;
          out << '\n';
          ok = ok && r.passed;
        }
      }
      return ok ? exit_ok : exit_failed;
    }

    err << "unknown command: " << cfg.command << '\n';
    return exit_usage;
  } catch (const unsupported_error& ex) {
    err << "scope error: " << ex.what() << '\n';
    return exit_usage;
  } catch (const not_level_two_error& ex) {
    err << "scope error: " << ex.what() << '\n';
    return exit_usage;
  } catch (const parse_error& ex) {
    err << "usage error: " << ex.what() << '\n';
    return exit_usage;
  } catch (const error& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_failed;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return exit_failed;
  }
}

// Parse argv and dispatch.  Each subcommand takes the shared option set:
//   --n, --charge, --e, --block, --format, --golden, --threads.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"graded combinatorics of cyclotomic quiver Schur algebras"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(0, 1);

  run_config cfg;
  cfg.threads = default_threads();
  std::vector<CLI::App*> subs;
  for (const char* name : {"blocks", "tableaux", "decomp", "cartan", "dims", "level2",
                           "tilting", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--n", cfg.n, "number of boxes")->required();
    sub->add_option("--charge", cfg.kappa, "multicharge, comma separated")
        ->required()
        ->delimiter(',');
    sub->add_option("--e", cfg.e, "quantum characteristic, 0 or >= 2");
    sub->add_option("--block", cfg.block_selector,
                    "block content selector, e.g. a-1:1,a0:3,a1:1");
    sub->add_option("--format", cfg.format, "json | csv | latex | text")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    sub->add_option("--golden", cfg.golden_path, "compare output against a golden file");
    sub->add_option("--threads", cfg.threads, "block-level parallelism");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << version_string << '\n';
    return exit_ok;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n';
    return exit_usage;
  }

  for (CLI::App* sub : subs)
    if (sub->parsed()) {
      cfg.command = sub->get_name();
      return dispatch(cfg, out, err);
    }
  err << "missing command; try --help\n";
  return exit_usage;
}

}  // namespace qschur::cli
