#include "hyperoct/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "hyperoct/diag_poly.hpp"
#include "hyperoct/ediagram.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/frobenius.hpp"
#include "hyperoct/io.hpp"
#include "hyperoct/odiagram.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/straighten.hpp"
#include "hyperoct/verify.hpp"

namespace hyperoct {

void RunConfig::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be at least 1");
  if (n > cap)
    throw Error(ErrorCode::CapExceeded,
                "n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  if (effective_truncation() < n * n)
    throw Error(ErrorCode::InvalidArgument, "--trunc must be at least n^2");
}

namespace {

using io::Json;

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string bracket(const std::vector<int>& v) { return "(" + join(v, ",") + ")"; }

std::string latex_perm(const SignedPermutation& b) {
  std::string s;
  for (int v : b.window()) s += v < 0 ? "\\bar{" + std::to_string(-v) + "}" : std::to_string(v);
  return s;
}

std::string latex_partition(const Partition& p) {
  if (p.empty()) return "\\varnothing";
  std::string s;
  for (int v : p.parts()) s += std::to_string(v);
  return s;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

std::vector<Cell> parse_cells(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::Parse, e.what());
    }
    return io::cells_from_json(j);
  }
  return io::parse_two_line(text);
}

// ---- stats

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  struct Row {
    SignedPermutation beta;
    StatRecord st;
    int fmaj_inv;
    std::vector<int> g, ghat;
  };
  std::vector<Row> rows;
  for (const SignedPermutation& b : enumerate_signed_permutations(cfg.n, cfg.cap))
    rows.push_back({b, stats(b), fmaj(inverse(b)), g_vector(b), g_hat_vector(b)});

  switch (cfg.format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const Row& r : rows)
        arr.push_back(Json{{"window", r.beta.window()}, {"des", r.st.des}, {"maj", r.st.maj},
                           {"neg", r.st.neg}, {"fmaj", r.st.fmaj}, {"fmaj_inv", r.fmaj_inv},
                           {"g", r.g}, {"ghat", r.ghat}});
      out << Json{{"n", cfg.n}, {"rows", arr}}.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "window,des,maj,neg,fmaj,fmaj_inv,g,ghat\n";
      for (const Row& r : rows)
        out << r.beta.to_string() << ',' << join(r.st.des) << ',' << r.st.maj << ',' << r.st.neg
            << ',' << r.st.fmaj << ',' << r.fmaj_inv << ',' << join(r.g) << ',' << join(r.ghat)
            << '\n';
      break;
    case OutputFormat::Latex:
      out << "\\begin{tabular}{lllllll}\n"
          << "$\\beta$ & Des & maj & neg & fmaj & $\\mathbf{g}$ & $\\hat{\\mathbf{g}}$ \\\\ \\hline\n";
      for (const Row& r : rows)
        out << '$' << latex_perm(r.beta) << "$ & \\{" << join(r.st.des, ",") << "\\} & "
            << r.st.maj << " & " << r.st.neg << " & " << r.st.fmaj << " & " << bracket(r.g)
            << " & " << bracket(r.ghat) << " \\\\\n";
      out << "\\end{tabular}\n";
      break;
    case OutputFormat::Text: {
      out << "window        des      maj neg fmaj fmaj_inv g             ghat\n";
      for (const Row& r : rows) {
        std::ostringstream line;
        auto pad = [&](const std::string& s, std::size_t w) {
          line << s << std::string(s.size() < w ? w - s.size() : 1, ' ');
        };
        pad(r.beta.to_string(), 14);
        pad("{" + join(r.st.des, ",") + "}", 9);
        pad(std::to_string(r.st.maj), 4);
        pad(std::to_string(r.st.neg), 4);
        pad(std::to_string(r.st.fmaj), 5);
        pad(std::to_string(r.fmaj_inv), 9);
        pad(bracket(r.g), 14);
        line << bracket(r.ghat);
        out << line.str() << '\n';
      }
      break;
    }
  }
  return kExitOk;
}

// ---- compactify

struct CompactReport {
  std::string kind;
  std::vector<Cell> input, compact, psi_image;
  SignedPermutation beta;
  Partition lam, mu;
  std::pair<int, int> w_in, w_compact;
  bool weight_ok = false;
  std::optional<bool> self_check;
};

int cmd_compactify(const RunConfig& cfg, const std::string& kind, const std::string& path,
                   bool n_given, std::istream& in, std::ostream& out) {
  std::vector<Cell> cells = parse_cells(read_input(path, in));
  if (n_given && static_cast<int>(cells.size()) != cfg.n)
    throw Error(ErrorCode::WrongCount, "expected " + std::to_string(cfg.n) + " cells, got " +
                                           std::to_string(cells.size()));
  CompactReport rep;
  rep.kind = kind;
  if (kind == "e") {
    const EDiagram d = EDiagram::normalize(std::move(cells));
    const PhiResult r = phi(d);
    rep.input = d.cells();
    rep.beta = classifying_perm(d);
    rep.compact = compactify(d).cells();
    rep.lam = r.lam;
    rep.mu = r.mu;
    rep.w_in = d.weight();
    rep.w_compact = r.compact.weight();
    rep.psi_image = psi(r.compact).cells();
    if (cfg.self_check) {
      std::mt19937_64 rng(cfg.seed);
      rep.self_check = phi_inverse(r) == d && r.compact.cells() == rep.compact &&
                       compactify_by_moves(d, &rng) == r.compact &&
                       classifying_perm(r.compact) == rep.beta;
    }
  } else {
    const ODiagram d = ODiagram::normalize(std::move(cells));
    const PhiOResult r = phi_o(d);
    rep.input = d.cells();
    rep.beta = colabel_classifying_perm(d);
    rep.compact = r.compact.cells();
    rep.lam = r.lam;
    rep.mu = r.mu;
    rep.w_in = d.weight();
    rep.w_compact = r.compact.weight();
    if (cfg.self_check)
      rep.self_check = phi_o_inverse(r) == d && colabel_classifying_perm(r.compact) == rep.beta;
  }
  rep.weight_ok = rep.w_in.first == rep.w_compact.first + 2 * rep.lam.size() &&
                  rep.w_in.second == rep.w_compact.second + 2 * rep.mu.size();

  auto cells_json = [](const std::vector<Cell>& c) {
    Json a = Json::array();
    for (const Cell& x : c) a.push_back(Json::array({x.a, x.b}));
    return a;
  };
  const std::string weight_line =
      "(" + std::to_string(rep.w_in.first) + "," + std::to_string(rep.w_in.second) + ") = (" +
      std::to_string(rep.w_compact.first) + "," + std::to_string(rep.w_compact.second) + ") + 2(" +
      std::to_string(rep.lam.size()) + "," + std::to_string(rep.mu.size()) + ")";

  switch (cfg.format) {
    case OutputFormat::Json: {
      Json j{{"kind", rep.kind},
             {"input", cells_json(rep.input)},
             {"beta", io::to_json(rep.beta)},
             {"compact", cells_json(rep.compact)},
             {"lam", io::to_json(rep.lam)},
             {"mu", io::to_json(rep.mu)},
             {"weight", Json{{"input", {rep.w_in.first, rep.w_in.second}},
                             {"compact", {rep.w_compact.first, rep.w_compact.second}},
                             {"holds", rep.weight_ok}}}};
      if (rep.kind == "e") j["psi"] = cells_json(rep.psi_image);
      if (rep.self_check) j["self_check"] = *rep.self_check;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "kind,beta,compact_top,compact_bottom,lam,mu,weight_holds"
          << (rep.self_check ? ",self_check" : "") << '\n';
      {
        std::vector<int> top, bottom;
        for (const Cell& c : rep.compact) {
          top.push_back(c.a);
          bottom.push_back(c.b);
        }
        out << rep.kind << ',' << rep.beta.to_string() << ',' << join(top) << ',' << join(bottom)
            << ',' << join(rep.lam.parts()) << ',' << join(rep.mu.parts()) << ','
            << (rep.weight_ok ? "true" : "false");
        if (rep.self_check) out << ',' << (*rep.self_check ? "true" : "false");
        out << '\n';
      }
      break;
    case OutputFormat::Latex:
      out << "\\beta = " << latex_perm(rep.beta) << "\n"
          << io::to_latex(rep.input) << " \\mapsto " << io::to_latex(rep.compact) << "\n"
          << "\\lambda = " << latex_partition(rep.lam) << ", \\mu = " << latex_partition(rep.mu)
          << "\n";
      if (rep.kind == "e") out << "\\psi: " << io::to_latex(rep.psi_image) << "\n";
      break;
    case OutputFormat::Text:
      out << "kind: " << rep.kind << "\n"
          << "beta: " << rep.beta.to_string() << "\n"
          << "compact:\n"
          << cells_to_text(rep.compact) << "lam: " << rep.lam.to_string() << "\n"
          << "mu: " << rep.mu.to_string() << "\n"
          << "weight: " << weight_line << (rep.weight_ok ? "  holds" : "  FAILS") << "\n";
      if (rep.kind == "e") out << "psi:\n" << cells_to_text(rep.psi_image);
      if (rep.self_check) out << "self-check: " << (*rep.self_check ? "pass" : "FAIL") << "\n";
      break;
  }
  const bool ok = rep.weight_ok && rep.self_check.value_or(true);
  return ok ? kExitOk : kExitIdentityFailure;
}

// ---- straighten

int cmd_straighten(const RunConfig& cfg, const std::string& path, std::istream& in,
                   std::ostream& out) {
  const EDiagram d = [&] {
    try {
      return EDiagram::normalize(parse_cells(read_input(path, in)));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      throw Error(ErrorCode::NotEDiagram, e.what());
    }
  }();
  const StraightenedForm form = straighten(d);
  const bool certificate = expand_straightened(form) == monomial_invariant(d);

  switch (cfg.format) {
    case OutputFormat::Json: {
      Json j{{"input", io::to_json(d)}, {"terms", io::to_json(form)}, {"certificate", certificate}};
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "lam,mu,beta,coeff\n";
      for (const StraightenedTerm& t : form.terms)
        out << join(t.lam.parts()) << ',' << join(t.mu.parts()) << ',' << t.beta.to_string()
            << ',' << t.coeff.get_str() << '\n';
      break;
    case OutputFormat::Latex: {
      out << "M" << io::to_latex(d.cells()) << " = ";
      bool first = true;
      for (const StraightenedTerm& t : form.terms) {
        const Rational mag = abs(t.coeff);
        out << (sgn(t.coeff) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mag != 1) out << mag.get_str() << "\\,";
        out << "m_{" << latex_partition(t.lam) << "}(\\mathbf{x}^2)\\,m_{" << latex_partition(t.mu)
            << "}(\\mathbf{y}^2)\\,M_{" << latex_perm(t.beta) << "}";
        first = false;
      }
      if (first) out << "0";
      out << "\n";
      break;
    }
    case OutputFormat::Text: {
      std::vector<int> top = d.top(), bottom = d.bottom();
      out << "M(" << join(top) << " / " << join(bottom) << ") =\n";
      for (const StraightenedTerm& t : form.terms) {
        const Rational mag = abs(t.coeff);
        out << "  " << (sgn(t.coeff) < 0 ? "- " : "+ ");
        if (mag != 1) out << mag.get_str() << " ";
        out << "m" << t.lam.to_string() << "(x^2) m" << t.mu.to_string() << "(y^2) M["
            << t.beta.to_string() << "]\n";
      }
      out << "certificate: " << (certificate ? "exact" : "MISMATCH") << "\n";
      break;
    }
  }
  return certificate ? kExitOk : kExitIdentityFailure;
}

// ---- verify

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out) {
  cfg.validate();
  const int n = cfg.n, trunc = cfg.effective_truncation();
  std::vector<VerifyReport> reports;
  if (suite == "all") reports = verify_all(n, trunc);
  else if (suite == "genfunction") reports.push_back(verify_genfunction(n, trunc));
  else if (suite == "ogenfunction") reports.push_back(verify_ogenfunction(n, trunc));
  else if (suite == "flip") reports.push_back(verify_flip_symmetry(n));
  else if (suite == "corollary") reports.push_back(verify_corollary(n));
  else if (suite == "table3") reports.push_back(verify_table3());
  else if (suite == "regular") reports.push_back(verify_regular(n));
  else if (suite == "psi") reports.push_back(verify_psi_all(n));
  else throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");

  bool all_pass = true;
  for (const VerifyReport& r : reports) all_pass = all_pass && r.pass;

  switch (cfg.format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const VerifyReport& r : reports) arr.push_back(io::to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "identity,n,status,checks,q_exp,t_exp,lhs,rhs,label\n";
      for (const VerifyReport& r : reports) {
        out << r.identity << ',' << r.n << ',' << (r.pass ? "PASS" : "FAIL") << ',' << r.checks;
        if (r.first_discrepancy) {
          const Discrepancy& d = *r.first_discrepancy;
          out << ',' << d.q_exp << ',' << d.t_exp << ',' << d.lhs << ',' << d.rhs << ',' << d.label;
        } else {
          out << ",,,,,";
        }
        out << '\n';
      }
      break;
    case OutputFormat::Latex:
      if (suite == "table3") {
        out << "\\begin{array}{|c|c|}\n\\hline\n(\\lambda,\\rho) & m_{\\lambda,\\rho}(q) \\\\\n\\hline\n";
        for (const ReferenceRow& row : reference_table3()) {
          const QTSeries m = mult_graded(row.label, default_truncation(3));
          std::string poly;
          for (auto it = m.terms().rbegin(); it != m.terms().rend(); ++it) {
            if (!poly.empty()) poly += "+";
            const int e = it->first.first;
            poly += e == 0 ? "1" : e == 1 ? "q" : "q^{" + std::to_string(e) + "}";
          }
          out << "(" << latex_partition(row.label.lam) << "," << latex_partition(row.label.rho)
              << ") & " << poly << " \\\\\n\\hline\n";
        }
        out << "\\end{array}\n";
      }
      out << "\\begin{tabular}{llll}\nidentity & $n$ & status & checks \\\\ \\hline\n";
      for (const VerifyReport& r : reports)
        out << r.identity << " & " << r.n << " & " << (r.pass ? "PASS" : "FAIL") << " & "
            << r.checks << " \\\\\n";
      out << "\\end{tabular}\n";
      break;
    case OutputFormat::Text:
      for (const VerifyReport& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << r.identity << " n=" << r.n << " (" << r.checks
            << (r.checks == 1 ? " check" : " checks") << ")";
        if (r.first_discrepancy) {
          const Discrepancy& d = *r.first_discrepancy;
          out << ": first discrepancy";
          if (!d.label.empty()) out << " for " << d.label;
          out << " at q^" << d.q_exp << " t^" << d.t_exp << ": " << d.lhs << " vs " << d.rhs;
        }
        out << '\n';
      }
      break;
  }
  return all_pass ? kExitOk : kExitIdentityFailure;
}

// ---- enumerate

int cmd_enumerate(const RunConfig& cfg, const std::string& kind, int max_entry, std::ostream& out) {
  cfg.validate();
  std::vector<std::vector<Cell>> diagrams;
  std::vector<SignedPermutation> perms;
  if (kind == "perm") {
    perms = enumerate_signed_permutations(cfg.n, cfg.cap);
  } else if (kind == "e") {
    for (const EDiagram& d : enumerate_ediagrams(cfg.n, max_entry)) diagrams.push_back(d.cells());
  } else {
    for (const ODiagram& d : enumerate_odiagrams(cfg.n, max_entry)) diagrams.push_back(d.cells());
  }

  switch (cfg.format) {
    case OutputFormat::Json: {
      Json arr = Json::array();
      for (const auto& p : perms) arr.push_back(io::to_json(p));
      for (const auto& d : diagrams) {
        Json cells = Json::array();
        for (const Cell& c : d) cells.push_back(Json::array({c.a, c.b}));
        Json j;
        if (kind == "o") j["kind"] = "o";
        j["cells"] = cells;
        arr.push_back(j);
      }
      out << arr.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << (kind == "perm" ? "window\n" : "top,bottom\n");
      for (const auto& p : perms) out << p.to_string() << '\n';
      for (const auto& d : diagrams) {
        std::vector<int> top, bottom;
        for (const Cell& c : d) {
          top.push_back(c.a);
          bottom.push_back(c.b);
        }
        out << join(top) << ',' << join(bottom) << '\n';
      }
      break;
    case OutputFormat::Latex:
      for (const auto& p : perms) out << '$' << latex_perm(p) << "$\n";
      for (const auto& d : diagrams) out << '$' << io::to_latex(d) << "$\n";
      break;
    case OutputFormat::Text:
      for (const auto& p : perms) out << p.to_string() << '\n';
      for (std::size_t i = 0; i < diagrams.size(); ++i)
        out << (i ? "\n" : "") << cells_to_text(diagrams[i]);
      break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Signed permutations, bipartite diagrams and diagonal coinvariants of B_n"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  std::string input = "-";
  std::string kind = "e";
  std::string enum_kind = "perm";
  std::string suite;
  int max_entry = 2;
  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json},
                                                   {"csv", OutputFormat::Csv},
                                                   {"latex", OutputFormat::Latex},
                                                   {"text", OutputFormat::Text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json|csv|latex|text")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--cap", cfg.cap, "largest admissible n");
  };

  CLI::App* stats_cmd = app.add_subcommand("stats", "statistics of every element of B_n");
  common(stats_cmd);
  stats_cmd->add_option("--n", cfg.n, "rank");

  CLI::App* compact_cmd = app.add_subcommand("compactify", "classify and compactify a diagram");
  common(compact_cmd);
  compact_cmd->add_option("input", input, "diagram file (two-line text or JSON), '-' for stdin");
  compact_cmd->add_option("--kind", kind, "e|o")->check(CLI::IsMember({"e", "o"}));
  CLI::Option* compact_n = compact_cmd->add_option("--n", cfg.n, "expected number of cells");
  compact_cmd->add_flag("--self-check", cfg.self_check, "re-derive the result by inverse maps");

  CLI::App* straighten_cmd =
      app.add_subcommand("straighten", "expand M(a,b) in the compact basis");
  common(straighten_cmd);
  straighten_cmd->add_option("input", input, "e-diagram file (two-line text or JSON), '-' for stdin");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check generating-function identities");
  common(verify_cmd);
  verify_cmd->add_option("suite", suite, "all|genfunction|ogenfunction|flip|corollary|table3|regular|psi")
      ->required()
      ->check(CLI::IsMember(
          {"all", "genfunction", "ogenfunction", "flip", "corollary", "table3", "regular", "psi"}));
  verify_cmd->add_option("--n", cfg.n, "rank");
  verify_cmd->add_option("--trunc", cfg.truncation, "truncation order (default 2n^2)");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list B_n or bounded diagrams");
  common(enum_cmd);
  enum_cmd->add_option("--n", cfg.n, "rank / number of cells");
  enum_cmd->add_option("--kind", enum_kind, "perm|e|o")->check(CLI::IsMember({"perm", "e", "o"}));
  enum_cmd->add_option("--max-entry", max_entry, "largest cell coordinate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  cfg.format = formats.at(format);

  try {
    if (stats_cmd->parsed()) return cmd_stats(cfg, out);
    if (compact_cmd->parsed())
      return cmd_compactify(cfg, kind, input, compact_n->count() > 0, in, out);
    if (straighten_cmd->parsed()) return cmd_straighten(cfg, input, in, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, suite, out);
    if (enum_cmd->parsed()) return cmd_enumerate(cfg, enum_kind, max_entry, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::IdentityFailed ? kExitIdentityFailure : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperoct
