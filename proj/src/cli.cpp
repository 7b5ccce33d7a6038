#include "normord/cli.hpp"

#include "normord/checks.hpp"
#include "normord/contractions.hpp"
#include "normord/diagrams.hpp"
#include "normord/gen_polynomial.hpp"
#include "normord/json_io.hpp"
#include "normord/representation.hpp"
#include "normord/rewrite.hpp"
#include "normord/stirling.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace normord::cli {

namespace {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::size_t modes = 2;
  bool noncoupled = false;
  bool json = false;
  std::size_t cap = 16;
  bool no_cap = false;
  unsigned threads = 1;

  ModeSystem system() const { return noncoupled ? ModeSystem::noncoupled(modes) : ModeSystem::coupled(modes); }

  void enforce_cap(std::size_t length) const {
    if (!no_cap && length > cap)
      throw CapExceeded("word length " + std::to_string(length) + " exceeds the cap of " + std::to_string(cap) +
                        " (raise --length-cap or pass --no-length-cap)");
  }
};

void add_system_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--modes", c.modes, "Number of modes")->check(CLI::PositiveNumber);
  auto* coupled = cmd->add_flag("--coupled", "Coupled preset: [a_i, a_j+] = 1 (default)");
  cmd->add_flag("--noncoupled", c.noncoupled, "Noncoupled preset: [a_i, a_j+] = delta_ij")->excludes(coupled);
}

void add_cap_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--length-cap", c.cap, "Maximum word length")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-length-cap", c.no_cap, "Disable the word length cap");
}

std::string index_string(const std::vector<std::uint32_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

std::string pairs_string(const Matching& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.pairs.size(); ++i)
    s += (i ? "," : "") + std::string("(") + std::to_string(m.pairs[i].first + 1) + "," +
         std::to_string(m.pairs[i].second + 1) + ")";
  return s + "}";
}

Matching parse_pairs(const std::string& text) {
  Matching m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("expected p-q in --pairs", 0);
    const std::size_t p = std::stoul(item.substr(0, dash));
    const std::size_t q = std::stoul(item.substr(dash + 1));
    if (p == 0 || q == 0) throw ParseError("positions are one-based", 0);
    m.pairs.emplace_back(p - 1, q - 1);
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

void print_report(std::ostream& out, const RecursionReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (";
    for (std::size_t i = 0; i < c.params.size(); ++i) out << (i ? "," : "") << c.params[i];
    out << ")";
    if (!c.regime.empty()) out << " [" << c.regime << "]";
    if (c.counterexample) {
      out << " at (";
      for (std::size_t i = 0; i < c.counterexample->index.size(); ++i)
        out << (i ? "," : "") << c.counterexample->index[i];
      out << "): table " << c.counterexample->table_value << ", predicted " << c.counterexample->predicted;
    }
    out << "\n";
  }
}

void print_table(std::ostream& out, const StirlingTable& t) {
  const auto params = t.params();
  out << t.kind_name() << "-type coloured Stirling numbers, params "
      << index_string({params.begin(), params.end()}) << "\n";
  for (const auto& [idx, v] : t.entries) out << "S" << index_string(idx) << " = " << v << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal ordering of coupled multi-mode boson operators", "normord"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // normal-order
  Common no;
  std::string no_word;
  std::string engine = "rewrite";
  auto* normal = app.add_subcommand("normal-order", "Normal-order a word");
  normal->add_option("word", no_word, "Operator word, e.g. \"a^2 a+ b^2 b+\"")->required();
  add_system_flags(normal, no);
  add_cap_flags(normal, no);
  normal->add_option("--engine", engine, "rewrite | contraction | both")
      ->check(CLI::IsMember({"rewrite", "contraction", "both"}));
  normal->add_flag("--json", no.json, "JSON output");

  // contractions
  Common co;
  std::string co_word;
  std::string render_dir;
  bool co_shapes = false;
  auto* contr = app.add_subcommand("contractions", "List the contractions of a word");
  contr->add_option("word", co_word, "Operator word")->required();
  add_system_flags(contr, co);
  add_cap_flags(contr, co);
  contr->add_option("--render-dir,--gallery", render_dir, "Write contraction_<k>.svg for every contraction");
  contr->add_flag("--shapes", co_shapes, "Monochrome diagrams with one marker shape per mode");
  contr->add_flag("--json", co.json, "JSON output");

  // stirling
  Common st;
  st.cap = 24;
  std::vector<unsigned> st_first;
  unsigned st_second = 0;
  bool st_csv = false;
  auto* stir = app.add_subcommand("stirling", "Coloured Stirling numbers");
  auto* st_first_opt = stir->add_option("--first", st_first, "First type, one exponent per mode");
  auto* st_second_opt = stir->add_option("--second", st_second, "Second type with power m");
  st_first_opt->excludes(st_second_opt);
  stir->add_option("--modes", st.modes, "Number of modes for the second type")->check(CLI::PositiveNumber);
  add_cap_flags(stir, st);
  stir->add_flag("--json", st.json, "JSON output");
  stir->add_flag("--csv", st_csv, "CSV output");

  // bell
  Common be;
  be.cap = 24;
  std::vector<unsigned> be_first;
  unsigned be_second = 0;
  unsigned be_classical = 0;
  auto* bell = app.add_subcommand("bell", "Classical and coloured Bell numbers");
  auto* be_first_opt = bell->add_option("--first", be_first, "First type, one exponent per mode");
  auto* be_second_opt = bell->add_option("--second", be_second, "Second type with power m");
  auto* be_classical_opt = bell->add_option("--classical", be_classical, "Classical B(n)");
  be_first_opt->excludes(be_second_opt)->excludes(be_classical_opt);
  be_second_opt->excludes(be_classical_opt);
  bell->add_option("--modes", be.modes, "Number of modes for the second type")->check(CLI::PositiveNumber);
  add_cap_flags(bell, be);

  // cnr
  Common cn;
  cn.cap = 24;
  unsigned cnr_r = 0, cnr_n = 0;
  bool cn_csv = false;
  auto* cnr = app.add_subcommand("cnr", "Coefficients of N[(b^r a+ a)^n]");
  cnr->add_option("r", cnr_r, "Power of b")->required();
  cnr->add_option("n", cnr_n, "Number of factors")->required();
  add_cap_flags(cnr, cn);
  cnr->add_flag("--json", cn.json, "JSON output");
  cnr->add_flag("--csv", cn_csv, "CSV output");

  // check
  Common ch;
  std::string check_kind;
  unsigned max_exp = 3, max_m = 3, max_len = 6, samples = 500, max_r = 3, max_n = 2;
  std::uint64_t seed = 0;
  bool max_len_set = false;
  auto* check = app.add_subcommand("check", "Property checks: recursions | oracle | gen-poly | sun | cnr");
  check->add_option("kind", check_kind, "What to check")
      ->required()
      ->check(CLI::IsMember({"recursions", "oracle", "gen-poly", "sun", "cnr"}));
  add_system_flags(check, ch);
  check->add_option("--max-exp", max_exp, "Largest n_a, n_b");
  check->add_option("--max-m", max_m, "Largest second-type power");
  auto* max_len_opt = check->add_option("--max-len", max_len, "Largest word length");
  check->add_option("--samples", samples, "Random samples (sun)");
  check->add_option("--seed", seed, "Random seed (sun)");
  check->add_option("--max-r", max_r, "Largest r (cnr)");
  check->add_option("--max-n", max_n, "Largest n (cnr)");
  check->add_option("--threads", ch.threads, "Worker threads (oracle)")->check(CLI::PositiveNumber);
  check->add_flag("--json", ch.json, "JSON output");

  // rep-verify
  Common rv;
  bool literal_sign = false;
  std::int64_t m_range = 3;
  std::uint32_t k_range = 3;
  auto* rep = app.add_subcommand("rep-verify", "Verify the differential-operator representation");
  rep->add_option("--modes", rv.modes, "Number of modes")->check(CLI::PositiveNumber);
  rep->add_flag("--paper-literal", literal_sign, "Use the creator e^{-s} without the sign correction");
  rep->add_option("--m-range", m_range, "Check phi_{m,k} with |m| <= m-range")->check(CLI::NonNegativeNumber);
  rep->add_option("--k-range", k_range, "Check phi_{m,k} with k <= k-range");
  rep->add_flag("--json", rv.json, "JSON output");

  // diagram
  Common dg;
  std::string dg_word, dg_pairs, dg_svg;
  std::size_t dg_contraction = 0;
  bool dg_shapes = false;
  auto* diagram = app.add_subcommand("diagram", "Draw the linear representation of one contraction");
  diagram->add_option("word", dg_word, "Operator word")->required();
  add_system_flags(diagram, dg);
  add_cap_flags(diagram, dg);
  auto* pairs_opt = diagram->add_option("--pairs", dg_pairs, "Contracted positions, e.g. 1-3,2-6");
  diagram->add_option("--contraction", dg_contraction, "Use the k-th contraction (1-based) in listing order")
      ->excludes(pairs_opt);
  diagram->add_option("--svg", dg_svg, "Write SVG to this file instead of ASCII to stdout");
  diagram->add_flag("--shapes", dg_shapes, "Monochrome markers with one shape per mode");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "normord: " << e.what() << "\n";
    return parse_error;
  }
  max_len_set = max_len_opt->count() > 0;

  try {
    if (normal->parsed()) {
      const auto sys = no.system();
      const Word w = parse_word(no_word, sys);
      no.enforce_cap(w.size());
      NormalForm nf(sys.modes());
      if (engine == "contraction") {
        nf = normal_order_contraction(w, sys);
      } else {
        nf = normal_order_rewrite(w, sys);
        if (engine == "both" && normal_order_contraction(w, sys) != nf) {
          err << "normord: rewrite and contraction engines disagree\n";
          return oracle_mismatch;
        }
      }
      if (no.json)
        out << to_json(nf).dump(2) << "\n";
      else
        out << format_normal_form(nf) << "\n";
      return ok;
    }

    if (contr->parsed()) {
      const auto sys = co.system();
      const Word w = parse_word(co_word, sys);
      co.enforce_cap(w.size());
      const auto cs = enumerate_contractions(w, sys);
      const auto hist = degree_histogram(cs);
      if (co.json) {
        json j = {{"word", format_word(w, sys.modes())}, {"matchings", json::array()}, {"histogram", json::object()}};
        for (const auto& m : cs.matchings) {
          json mj = to_json(m);
          mj["residual"] = format_word(residual_word(w, m), sys.modes());
          j["matchings"].push_back(std::move(mj));
        }
        for (const auto& [d, c] : hist) j["histogram"][std::to_string(d)] = c;
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t k = 0; k < cs.matchings.size(); ++k) {
          const auto residual = format_word(residual_word(w, cs.matchings[k]), sys.modes());
          out << k + 1 << ": " << pairs_string(cs.matchings[k]) << "  " << (residual.empty() ? "1" : residual)
              << "\n";
        }
        out << "total " << cs.matchings.size() << "\n";
        for (const auto& [d, c] : hist) out << "degree " << d << ": " << c << "\n";
      }
      if (!render_dir.empty()) {
        std::filesystem::create_directories(render_dir);
        for (std::size_t k = 0; k < cs.matchings.size(); ++k) {
          auto spec = make_diagram(w, cs.matchings[k], sys.modes());
          spec.shape_encoding = co_shapes;
          std::ofstream f(std::filesystem::path(render_dir) / ("contraction_" + std::to_string(k + 1) + ".svg"));
          if (!f) throw std::runtime_error("cannot write into " + render_dir);
          f << render_svg(spec);
        }
      }
      return ok;
    }

    if (stir->parsed()) {
      StirlingTable t;
      if (!st_first.empty()) {
        std::size_t len = 0;
        for (auto e : st_first) len += 2 * e;
        st.enforce_cap(len);
        t = coloured_stirling_first(st_first);
      } else if (st_second_opt->count() > 0) {
        st.enforce_cap(2 * st.modes * st_second);
        t = coloured_stirling_second(st.modes, st_second);
      } else {
        err << "normord: stirling needs --first or --second\n";
        return parse_error;
      }
      if (st.json)
        out << to_json(t).dump(2) << "\n";
      else if (st_csv)
        out << to_csv(t);
      else
        print_table(out, t);
      return ok;
    }

    if (bell->parsed()) {
      if (!be_first.empty()) {
        std::size_t len = 0;
        for (auto e : be_first) len += 2 * e;
        be.enforce_cap(len);
        out << coloured_bell_first(be_first) << "\n";
      } else if (be_second_opt->count() > 0) {
        be.enforce_cap(2 * be.modes * be_second);
        out << coloured_bell_second(be.modes, be_second) << "\n";
      } else if (be_classical_opt->count() > 0) {
        out << classical_bell(be_classical) << "\n";
      } else {
        err << "normord: bell needs --first, --second or --classical\n";
        return parse_error;
      }
      return ok;
    }

    if (cnr->parsed()) {
      cn.enforce_cap(static_cast<std::size_t>(cnr_n) * (cnr_r + 2));
      const auto t = cnr_table(cnr_r, cnr_n);
      if (cn.json) {
        out << to_json(t).dump(2) << "\n";
      } else if (cn_csv) {
        out << to_csv(t);
      } else {
        out << "c_" << cnr_n << "^(" << cnr_r << ")(i,j,k)\n";
        for (const auto& [idx, v] : t.entries)
          out << "c(" << idx[0] << "," << idx[1] << "," << idx[2] << ") = " << v << "\n";
      }
      return ok;
    }

    if (check->parsed()) {
      if (check_kind == "recursions") {
        const auto report = check_stirling_recursions({max_exp, max_exp, max_m});
        if (ch.json) out << to_json(report).dump(2) << "\n"; else print_report(out, report);
        return report.passed() ? ok : check_failed;
      }
      if (check_kind == "gen-poly") {
        const auto report = check_gen_recurrences(max_exp, max_m);
        if (ch.json) out << to_json(report).dump(2) << "\n"; else print_report(out, report);
        return report.passed() ? ok : check_failed;
      }
      if (check_kind == "cnr") {
        // The resolved recursion and the expansion are the properties; the
        // printed coefficient is reported for comparison only.
        RecursionReport must, info;
        for (unsigned r = 0; r <= max_r; ++r)
          for (unsigned n = 0; n < max_n; ++n) {
            must.checks.push_back(check_cnr_expansion(r, n));
            must.checks.push_back(check_cnr_recursion(r, n, CnrRecursionForm::resolved));
            info.checks.push_back(check_cnr_recursion(r, n, CnrRecursionForm::printed));
          }
        if (ch.json) {
          out << json{{"pass", must.passed()}, {"checks", to_json(must)["checks"]},
                      {"printed_form", to_json(info)["checks"]}}
                     .dump(2)
              << "\n";
        } else {
          print_report(out, must);
          out << "printed coefficient (j+r), for comparison:\n";
          print_report(out, info);
        }
        return must.passed() ? ok : check_failed;
      }
      EquivalenceReport report;
      if (check_kind == "oracle") {
        const unsigned len = max_len_set ? max_len : 6;
        report = check_engine_equivalence(ch.system(), len, ch.threads);
      } else {
        const unsigned len = max_len_set ? max_len : 8;
        report = check_sunglasses(ch.modes, len, samples, seed);
      }
      if (ch.json) {
        json j = {{"kind", check_kind}, {"words", report.words_checked}, {"mismatches", report.mismatches},
                  {"pass", report.passed()}};
        if (report.first_mismatch) j["first_mismatch"] = format_word(*report.first_mismatch, ch.modes);
        out << j.dump(2) << "\n";
      } else {
        out << (report.passed() ? "PASS " : "FAIL ") << check_kind << ": " << report.words_checked << " words, "
            << report.mismatches << " mismatches";
        if (report.first_mismatch) out << " (first: " << format_word(*report.first_mismatch, ch.modes) << ")";
        out << "\n";
      }
      return report.passed() ? ok : check_failed;
    }

    if (rep->parsed()) {
      const RepConfig cfg{rv.modes, literal_sign ? CreatorSign::literal : CreatorSign::corrected};
      const auto report = verify_relations(cfg, m_range, k_range);
      if (rv.json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << "representation on " << rv.modes << " modes, " << sign_name(cfg.sign) << " creator sign\n";
        for (const auto& r : report.relations)
          out << (r.pass ? "PASS " : "FAIL ") << r.pair << " expected " << r.expected << ", observed "
              << r.observed << "\n";
      }
      return report.passed() ? ok : check_failed;
    }

    if (diagram->parsed()) {
      const auto sys = dg.system();
      const Word w = parse_word(dg_word, sys);
      dg.enforce_cap(w.size());
      Matching m;
      if (!dg_pairs.empty()) {
        m = parse_pairs(dg_pairs);
      } else if (dg_contraction > 0) {
        const auto cs = enumerate_contractions(w, sys);
        if (dg_contraction > cs.matchings.size()) {
          err << "normord: the word has only " << cs.matchings.size() << " contractions\n";
          return parse_error;
        }
        m = cs.matchings[dg_contraction - 1];
      }
      if (!is_valid_matching(w, m, sys)) {
        err << "normord: pairs do not form a contraction of the word\n";
        return parse_error;
      }
      auto spec = make_diagram(w, m, sys.modes());
      spec.shape_encoding = dg_shapes;
      if (dg_svg.empty()) {
        out << render_ascii(spec);
      } else {
        std::ofstream f(dg_svg);
        if (!f) throw std::runtime_error("cannot write " + dg_svg);
        f << render_svg(spec);
      }
      return ok;
    }
  } catch (const ParseError& e) {
    err << "normord: " << e.what() << "\n";
    return parse_error;
  } catch (const CapExceeded& e) {
    err << "normord: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const std::invalid_argument& e) {
    err << "normord: " << e.what() << "\n";
    return parse_error;
  } catch (const std::exception& e) {
    err << "normord: " << e.what() << "\n";
    return check_failed;
  }
  return parse_error;
}

}  // namespace normord::cli
