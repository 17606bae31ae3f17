#include "trefoil/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "trefoil/acceptance.hpp"
#include "trefoil/continued_fraction.hpp"
#include "trefoil/error.hpp"
#include "trefoil/fraction.hpp"
#include "trefoil/groups.hpp"
#include "trefoil/long_knot.hpp"
#include "trefoil/orbit.hpp"
#include "trefoil/word.hpp"

namespace trefoil::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_small(const std::string& text, const char* what) {
  Int v = parse_int(text);
  if (!v.fits_slong_p()) throw ParseError(std::string(what) + " out of range: " + text);
  return v.get_si();
}

std::size_t parse_size(const std::string& text, const char* what) {
  std::int64_t v = parse_small(text, what);
  if (v < 0) throw ParseError(std::string(what) + " must be non-negative: " + text);
  return static_cast<std::size_t>(v);
}

// "a,b;c,d" -> rows
std::vector<std::vector<std::int64_t>> parse_gram(const std::string& text) {
  std::vector<std::vector<std::int64_t>> gram;
  for (const auto& row : split(text, ';')) {
    gram.emplace_back();
    for (const auto& entry : split(row, ',')) gram.back().push_back(parse_small(entry, "form entry"));
  }
  for (const auto& row : gram)
    if (row.size() != gram.size()) throw ParseError("symplectic: Gram matrix must be square");
  return gram;
}

std::string braid_text(const BraidElement& u) {
  std::string s = to_string(u);
  return s.empty() ? "1" : s;
}

}  // namespace

FiniteQuandle quandle_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon), rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "dihedral") return dihedral_quandle(parse_size(rest, "dihedral order"));
  if (kind == "alexander") {
    auto c = rest.find(':');
    if (c == std::string::npos) throw ParseError("alexander spec is alexander:<modulus>:<h(t)>");
    std::int64_t n = parse_small(rest.substr(0, c), "modulus");
    if (n < 1 || n > 1 << 16) throw ParseError("alexander modulus out of range");
    return alexander_quandle(LaurentQuotientRing(static_cast<std::uint32_t>(n), parse_polynomial(rest.substr(c + 1))));
  }
  if (kind == "conj") return conj_quandle(parse_group(rest));
  if (kind == "core") return core_quandle(parse_group(rest));
  if (kind == "aut") {
    auto c = rest.rfind(':');
    if (c == std::string::npos) throw ParseError("aut spec is aut:<group>:<images> or aut:<group>:inner=<g>");
    FiniteGroup g = parse_group(rest.substr(0, c));
    std::string map = rest.substr(c + 1);
    std::vector<Index> tau;
    if (map.rfind("inner=", 0) == 0) {
      std::size_t h = parse_size(map.substr(6), "group element");
      if (h >= g.size()) throw DomainError("aut: element " + std::to_string(h) + " is not in the group");
      for (Index x = 0; x < g.size(); ++x) tau.push_back(g.mul(g.mul(g.inverse(h), x), h));
    } else {
      for (const auto& image : split(map, ',')) tau.push_back(static_cast<Index>(parse_size(image, "image")));
    }
    return automorphism_quandle(g, tau);
  }
  if (kind == "symplectic") {
    auto c = rest.find(':');
    if (c == std::string::npos) throw ParseError("symplectic spec is symplectic:<modulus>:<gram rows a,b;c,d>");
    std::int64_t n = parse_small(rest.substr(0, c), "modulus");
    if (n < 2 || n > 1 << 16) throw ParseError("symplectic modulus must be between 2 and 65536");
    return bilinear_form_quandle({static_cast<std::uint32_t>(n), parse_gram(rest.substr(c + 1))});
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw ParseError("cannot open " + rest);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(rest + ": " + e.what());
    }
    return quandle_from_json(j);
  }
  throw ParseError("unknown quandle spec '" + spec + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for the trefoil quandle, fractions under transvection, and the long trefoil", "trefoil"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");
  std::function<int()> action;
  auto emit = [&](const nlohmann::json& j, const std::string& text) { out << (json ? j.dump() : text) << '\n'; };

  std::string x_text, y_text, k_text;
  bool inverse = false;

  auto* op = app.add_subcommand("op", "x * y on fractions");
  op->add_option("x", x_text)->required();
  op->add_option("y", y_text)->required();
  op->add_flag("--inverse", inverse, "Compute x *bar y instead");
  op->callback([&] {
    action = [&] {
      PFrac x = parse_frac(x_text), y = parse_frac(y_text);
      PFrac r = inverse ? pf_op_inv(x, y) : pf_op(x, y);
      emit(to_json(r), to_string(r));
      return kExitOk;
    };
  });

  auto* pow = app.add_subcommand("pow", "x * y^k on fractions (k < 0 iterates the inverse)");
  pow->add_option("x", x_text)->required();
  pow->add_option("y", y_text)->required();
  pow->add_option("k", k_text)->required();
  pow->callback([&] {
    action = [&] {
      PFrac r = pf_op_pow(parse_frac(x_text), parse_frac(y_text), parse_int(k_text));
      emit(to_json(r), to_string(r));
      return kExitOk;
    };
  });

  auto* matrix = app.add_subcommand("matrix", "Transvection matrix of a fraction");
  matrix->add_option("y", y_text)->required();
  matrix->callback([&] {
    action = [&] {
      TransvectionMatrix m = transvection_matrix(parse_frac(y_text));
      emit(to_json(m), to_string(m));
      return kExitOk;
    };
  });

  std::string word_text;
  bool trace = false;
  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a trefoil-quandle word");
  normalize_cmd->add_option("word", word_text)->required();
  normalize_cmd->add_flag("--trace", trace, "Print every rewriting step");
  normalize_cmd->callback([&] {
    action = [&] {
      QWord w = parse_word(word_text);
      std::vector<RewriteStep> steps;
      NormalForm nf = normalize(w, trace ? &steps : nullptr);
      if (json) {
        nlohmann::json j = word_report_json(word_text, nf, word_to_frac(w));
        if (trace) {
          j["trace"] = nlohmann::json::array();
          for (const auto& s : steps) j["trace"].push_back({{"rule", to_string(s.rule)}, {"word", s.word}});
        }
        out << j.dump() << '\n';
      } else {
        for (const auto& s : steps) out << to_string(s.rule) << ": " << s.word << '\n';
        out << to_string(nf) << '\n';
      }
      return kExitOk;
    };
  });

  auto* word2frac = app.add_subcommand("word2frac", "Fraction image of a word");
  word2frac->add_option("word", word_text)->required();
  word2frac->callback([&] {
    action = [&] {
      PFrac r = word_to_frac(parse_word(word_text));
      emit(to_json(r), to_string(r));
      return kExitOk;
    };
  });

  auto* frac2word = app.add_subcommand("frac2word", "Normal-form word of a fraction");
  frac2word->add_option("x", x_text)->required();
  frac2word->callback([&] {
    action = [&] {
      PFrac x = parse_frac(x_text);
      NormalForm nf = frac_to_word(x);
      emit(word_report_json(x_text, nf, x), to_string(nf));
      return kExitOk;
    };
  });

  auto* cf = app.add_subcommand("cf", "Continued fractions");
  cf->require_subcommand(1);
  auto* cf_expand_cmd = cf->add_subcommand("expand", "Terms of p/q");
  cf_expand_cmd->add_option("x", x_text)->required();
  cf_expand_cmd->callback([&] {
    action = [&] {
      ContinuedFraction c = cf_expand(parse_frac(x_text));
      emit(to_json(c), to_string(c));
      return kExitOk;
    };
  });
  std::string cf_text;
  auto* cf_eval_cmd = cf->add_subcommand("eval", "Value of [k1;k2,...,kn]");
  cf_eval_cmd->add_option("terms", cf_text)->required();
  cf_eval_cmd->callback([&] {
    action = [&] {
      PFrac r = cf_eval(parse_cf(cf_text));
      emit(to_json(r), to_string(r));
      return kExitOk;
    };
  });

  std::string quandle_spec;
  bool show_table = false;
  auto* axioms = app.add_subcommand("axioms", "Check quandle axioms on a finite quandle");
  axioms->add_option("spec", quandle_spec, "dihedral:N, alexander:N:h(t), conj:G, core:G, aut:G:images, symplectic:N:gram, file:path")
      ->required();
  axioms->add_flag("--table", show_table, "Include the operation table");
  axioms->callback([&] {
    action = [&] {
      FiniteQuandle q = quandle_from_spec(quandle_spec);
      AxiomReport r = check_quandle(q);
      if (json) {
        nlohmann::json j = to_json(r);
        j["size"] = q.size();
        if (show_table) j["table"] = to_json(q)["table"];
        out << j.dump() << '\n';
        return kExitOk;
      }
      auto yes = [](bool b) { return b ? "yes" : "no"; };
      out << "size: " << q.size() << '\n'
          << "idempotent: " << yes(r.idempotent) << '\n'
          << "right translations bijective: " << yes(r.right_translations_bijective) << '\n'
          << "right distributive: " << yes(r.right_distributive) << '\n'
          << "rack: " << yes(r.is_rack()) << '\n'
          << "quandle: " << yes(r.is_quandle()) << '\n';
      if (r.counterexample) {
        const auto& c = *r.counterexample;
        out << "counterexample (" << to_string(*r.failed_axiom) << "): " << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
      }
      if (show_table)
        for (Index i = 0; i < q.size(); ++i) {
          for (Index j = 0; j < q.size(); ++j) out << (j ? " " : "") << q.op(i, j);
          out << '\n';
        }
      return kExitOk;
    };
  });

  std::vector<std::string> targets;
  std::string bound_text;
  bool dot = false;
  auto* orbit = app.add_subcommand("orbit", "Breadth-first orbit of {0/1, 1/0} with witness words");
  orbit->add_option("targets", targets)->required();
  orbit->add_option("--bound", bound_text, "Keep points with |p|, |q| <= bound")->required();
  orbit->add_flag("--dot", dot, "Print the explored orbit as a DOT graph");
  orbit->callback([&] {
    action = [&] {
      std::vector<PFrac> fracs;
      for (const auto& t : targets) fracs.push_back(parse_frac(t));
      OrbitReport report = orbit_bfs(fracs, parse_int(bound_text));
      if (dot) {
        out << to_dot(report);
        return kExitOk;
      }
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 0; i < fracs.size(); ++i) {
        auto node = report.find(fracs[i]);
        if (json) {
          nlohmann::json row{{"target", to_string(fracs[i])}, {"reached", node.has_value()}};
          if (node) {
            row["depth"] = report.nodes()[*node].depth;
            row["witness"] = report.witness(*node);
          }
          rows.push_back(row);
        } else if (node) {
          out << to_string(fracs[i]) << ": reached at depth " << report.nodes()[*node].depth << " by "
              << report.witness(*node) << '\n';
        } else {
          out << to_string(fracs[i]) << ": not reached within bound " << bound_text << '\n';
        }
      }
      if (json) out << rows.dump() << '\n';
      return kExitOk;
    };
  });

  auto* long_cmd = app.add_subcommand("long", "Covering quandle of the long trefoil; elements are given by g'");
  long_cmd->require_subcommand(1);
  std::string g1_text, g2_text, h_text;
  auto covered = [](const std::string& text) { return qt_new(BraidElement(parse_braid_word(text))); };
  auto print_covered = [&](const CoveredElement& p) {
    emit(to_json(p), "g_prime: " + braid_text(p.g_prime()) + "\nx: " + braid_text(p.x()) + "\neps: " +
                         std::to_string(p.x().exponent_sum()));
  };
  auto* long_op = long_cmd->add_subcommand("op", "(x, g') * (y, h')");
  long_op->add_option("g", g1_text)->required();
  long_op->add_option("h_prime", g2_text)->required();
  long_op->add_flag("--inverse", inverse, "Compute *bar instead");
  long_op->callback([&] {
    action = [&] {
      CoveredElement p = covered(g1_text), q = covered(g2_text);
      print_covered(inverse ? qt_op_inv(p, q) : qt_op(p, q));
      return kExitOk;
    };
  });
  auto* long_act = long_cmd->add_subcommand("act", "Right action of a braid h on (x, g')");
  long_act->add_option("g", g1_text)->required();
  long_act->add_option("braid", h_text)->required();
  long_act->callback([&] {
    action = [&] {
      print_covered(pi1_act(covered(g1_text), BraidElement(parse_braid_word(h_text))));
      return kExitOk;
    };
  });
  auto* long_lambda = long_cmd->add_subcommand("lambda", "Longitude action lambda^k on (x, g')");
  long_lambda->add_option("k", k_text)->required();
  long_lambda->add_option("g", g1_text)->required();
  long_lambda->callback([&] {
    action = [&] {
      print_covered(lambda_act(parse_small(k_text, "k"), covered(g1_text)));
      return kExitOk;
    };
  });
  auto* long_fiber = long_cmd->add_subcommand("fiber", "The k with g'2 = lambda^k g'1");
  long_fiber->add_option("g1", g1_text)->required();
  long_fiber->add_option("g2", g2_text)->required();
  long_fiber->callback([&] {
    action = [&] {
      std::int64_t k = fiber_compare(covered(g1_text), covered(g2_text));
      emit(nlohmann::json{{"k", k}}, std::to_string(k));
      return kExitOk;
    };
  });

  AcceptanceOptions options;
  std::vector<int> only;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--seed", options.seed, "Random seed");
  selftest->add_option("--threads", options.threads, "Worker threads for the exhaustive grids (0: all cores)");
  selftest->add_option("--only", only, "Run only these criteria")->delimiter(',')->check(CLI::Range(1, kCriterionCount));
  selftest->callback([&] {
    action = [&] {
      options.only = only;
      nlohmann::json rows = nlohmann::json::array();
      auto results = run_acceptance(options, [&](const CriterionResult& r) {
        if (json) {
          rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        } else {
          out << format_result(r) << '\n' << std::flush;
        }
      });
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed;
      if (json) out << nlohmann::json{{"criteria", rows}, {"passed", passed}, {"total", results.size()}}.dump() << '\n';
      else out << passed << "/" << results.size() << " criteria passed\n";
      return all_passed(results) ? kExitOk : kExitSelftestFailed;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace trefoil::cli
