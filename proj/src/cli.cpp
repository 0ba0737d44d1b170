#include "subst/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subst/json_io.hpp"

namespace subst::cli {

namespace {

Substitution load_substitution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_substitution(buf.str());
}

Letter resolve_seed(const Substitution& s, const std::string& token) {
  auto seeds = fixed_point_seeds(s);
  if (seeds.empty()) throw domain_error("substitution has no fixed-point seed");
  if (token.empty()) return seeds[0];
  Letter a = s.alphabet().index_of(token);
  if (std::find(seeds.begin(), seeds.end(), a) == seeds.end())
    throw domain_error("letter " + token + " is not a fixed-point seed");
  return a;
}

// Period word over an alphabet inferred from its distinct tokens, in order
// of first appearance.
std::pair<Alphabet, Word> parse_free_word(const std::string& text) {
  std::vector<std::string> tokens;
  {
    std::istringstream in(text);
    std::string t;
    while (in >> t) tokens.push_back(t);
  }
  if (tokens.size() <= 1 && !text.empty()) {
    // Single run of characters: split per character.
    std::string run = tokens.empty() ? text : tokens[0];
    tokens.clear();
    for (char c : run) tokens.push_back(std::string(1, c));
  }
  if (tokens.empty()) throw domain_error("empty word");
  std::vector<std::string> distinct;
  for (const auto& t : tokens)
    if (std::find(distinct.begin(), distinct.end(), t) == distinct.end()) distinct.push_back(t);
  Alphabet alphabet(distinct);
  Word w;
  for (const auto& t : tokens) w.append(alphabet.index_of(t));
  return {alphabet, w};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write " + path);
  out << content;
}

struct Options {
  bool json = false;
  size_t horizon = 10000;
  int precision = 15;
  long budget = 1000000;
};

void emit(std::ostream& out, bool json, const Json& payload,
          const std::string& human) {
  if (json)
    out << payload.dump(2) << "\n";
  else
    out << human;
}

std::string fmt_algebraic(const AlgebraicReal& x, int digits) {
  if (x.is_rational()) return x.rational_value().str();
  return "root of " + x.defining().to_string() + " ~ " + x.decimal(std::min(digits, 12));
}

int run_analyze(const std::string& path, const Options& opt, std::ostream& out) {
  Substitution s = load_substitution(path);
  GrowthReport report = growth_types(s);
  ComponentDecomposition d = decompose(s);
  int k = condition_c_exponent(s);
  GoodnessVerdict verdict = is_good(s);

  Json j;
  j["rules"] = serialize(s);
  j["growth"] = growth_report_json(s, report, opt.precision);
  j["decomposition"] = decomposition_json(s, d, k, opt.precision);
  Json subs = Json::array();
  for (const auto& sub : sub_substitutions(s)) {
    Json e;
    e["part"] = sub.part;
    e["main"] = sub.main;
    e["rules"] = serialize(sub.restricted);
    e["eigenvalue"] = algebraic_json(sub.eigenvalue, opt.precision);
    subs.push_back(e);
  }
  j["sub_substitutions"] = subs;
  j["good"] = goodness_json(s, verdict, opt.precision);

  std::ostringstream human;
  human << "alphabet:";
  for (const auto& t : s.alphabet().tokens()) human << " " << t;
  human << "\ngrowth types:\n";
  for (Letter a = 0; a < s.alphabet().size(); ++a)
    human << "  " << s.alphabet().token(a) << ": d=" << report.letters[a].d
          << "  theta = " << fmt_algebraic(report.letters[a].theta, opt.precision)
          << "  c ~= " << report.c_estimates[a].value << " (+/- "
          << report.c_estimates[a].error << ")\n";
  human << "Theta = " << fmt_algebraic(report.theta, opt.precision) << ", D = " << report.jordan
        << ", A_max = {";
  for (size_t i = 0; i < report.a_max.size(); ++i)
    human << (i ? " " : "") << s.alphabet().token(report.a_max[i]);
  human << "}\n";
  human << "decomposition: p=" << d.p << " q=" << d.q << " l=" << d.parts.size() << " parts:";
  for (size_t i = 0; i < d.parts.size(); ++i) {
    human << " {";
    for (size_t k2 = 0; k2 < d.parts[i].size(); ++k2)
      human << (k2 ? " " : "") << s.alphabet().token(d.parts[i][k2]);
    human << "}" << (int(i) >= d.q ? "*" : "");
  }
  human << "   (* principal)\n";
  human << "condition (C) exponent: " << k << "\n";
  human << (verdict.good ? "good substitution\n" : "not a good substitution\n");
  for (const auto& sub : sub_substitutions(s))
    if (sub.main)
      human << "  main sub-substitution eigenvalue: "
            << fmt_algebraic(sub.eigenvalue, opt.precision) << "\n";
  emit(out, opt.json, j, human.str());
  return 0;
}

int run_good(const std::string& path, const Options& opt, std::ostream& out) {
  Substitution s = load_substitution(path);
  GoodnessVerdict v = is_good(s);
  Json j = goodness_json(s, v, opt.precision);
  std::ostringstream human;
  if (v.good) {
    human << "good: main sub-substitution with eigenvalue "
          << fmt_algebraic(v.witness->eigenvalue, opt.precision);
    if (v.p > 1) human << " at power p=" << v.p;
    human << " matches Theta" << (v.p > 1 ? "^p" : "") << "\n";
  } else {
    human << "not good: Theta = " << fmt_algebraic(v.theta, opt.precision);
    auto subs = sub_substitutions(s);
    size_t mains = 0;
    for (const auto& sub : subs) mains += sub.main ? 1 : 0;
    for (const auto& sub : subs)
      if (sub.main)
        human << (mains == 1 ? " but sole main sub-substitution has eigenvalue "
                             : " but a main sub-substitution has eigenvalue ")
              << fmt_algebraic(sub.eigenvalue, opt.precision);
    human << "\n";
  }
  emit(out, opt.json, j, human.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"substkit: growth, decomposition and construction toolkit for substitutions"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON on stdout");
  app.add_option("--horizon", opt.horizon, "prefix length for sequence scans");
  app.add_option("--precision", opt.precision, "significant digits in reports");
  app.add_option("--budget", opt.budget, "search budget for density walks");

  std::string file, seed_tok, word_tok, out_prefix, period_tok, preperiod_tok;
  std::string alpha_expr, beta_expr;
  size_t length = 32;
  size_t max_pre = 16, max_per = 16;
  int block_n = 2;
  int dd = 0, ee = 0;
  double target = 1.0, eps = 0.05;

  auto* analyze = app.add_subcommand("analyze", "growth report, decomposition, goodness");
  analyze->add_option("file", file)->required();

  auto* fixpoint = app.add_subcommand("fixpoint", "prefix of a fixed point");
  fixpoint->add_option("file", file)->required();
  fixpoint->add_option("--seed", seed_tok);
  fixpoint->add_option("--length", length);

  auto* returns = app.add_subcommand("returns", "return words to a word");
  returns->add_option("file", file)->required();
  returns->add_option("--seed", seed_tok);
  returns->add_option("--word", word_tok)->required();

  auto* gaps = app.add_subcommand("gaps", "max occurrence gap at the horizon");
  gaps->add_option("file", file)->required();
  gaps->add_option("--seed", seed_tok);
  gaps->add_option("--word", word_tok)->required();

  auto* periodicity = app.add_subcommand("periodicity", "certify ultimate periodicity");
  periodicity->add_option("file", file)->required();
  periodicity->add_option("--seed", seed_tok);
  periodicity->add_option("--max-pre", max_pre);
  periodicity->add_option("--max-per", max_per);

  auto* decomp_cmd = app.add_subcommand("decompose", "primitive component decomposition");
  decomp_cmd->add_option("file", file)->required();

  auto* good = app.add_subcommand("good", "good-substitution verdict");
  good->add_option("file", file)->required();

  auto* cperiodic = app.add_subcommand("construct-periodic",
                                       "periodic word as letter-to-letter image of a fixed point");
  cperiodic->add_option("file", file)->required();
  cperiodic->add_option("--period", period_tok)->required();
  cperiodic->add_option("--out", out_prefix);

  auto* czeta = app.add_subcommand("construct-zeta",
                                   "ultimately periodic word via the block substitution");
  czeta->add_option("file", file)->required();
  czeta->add_option("--period", period_tok)->required();
  czeta->add_option("--preperiod", preperiod_tok)->required();
  czeta->add_option("--out", out_prefix);

  auto* blocks = app.add_subcommand("blocks", "n-block presentation of a fixed point");
  blocks->add_option("file", file)->required();
  blocks->add_option("--seed", seed_tok);
  blocks->add_option("--n", block_n);
  blocks->add_option("--word", word_tok);
  blocks->add_option("--out", out_prefix);

  auto* density = app.add_subcommand("density", "witness for n^d a^n / m^e b^m near a target");
  density->add_option("--alpha", alpha_expr)->required();
  density->add_option("--beta", beta_expr)->required();
  density->add_option("--d", dd);
  density->add_option("--e", ee);
  density->add_option("--target", target)->required();
  density->add_option("--eps", eps)->required();

  auto* star = app.add_subcommand("star", "starlike prefix decomposition");
  star->add_option("file", file)->required();
  star->add_option("--seed", seed_tok);
  star->add_option("--letter", word_tok)->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) return run_analyze(file, opt, out);
    if (*good) return run_good(file, opt, out);

    if (*fixpoint) {
      Substitution s = load_substitution(file);
      Letter seed = resolve_seed(s, seed_tok);
      Word w = fixed_point_prefix(s, seed, length);
      Json j;
      j["seed"] = s.alphabet().token(seed);
      j["length"] = length;
      j["prefix"] = render_word(s.alphabet(), w);
      emit(out, opt.json, j, render_word(s.alphabet(), w) + "\n");
      return 0;
    }
    if (*returns) {
      Substitution s = load_substitution(file);
      Letter seed = resolve_seed(s, seed_tok);
      Word u = read_word(s.alphabet(), word_tok);
      auto rs = return_words(s, seed, u, opt.horizon);
      Json j = return_words_json(s, rs);
      std::ostringstream human;
      human << "return words to " << render_word(s.alphabet(), u) << " (horizon "
            << rs.horizon << (rs.complete ? ", complete" : ", may be incomplete") << "):\n";
      for (const Word& w : rs.returns) human << "  " << render_word(s.alphabet(), w) << "\n";
      emit(out, opt.json, j, human.str());
      return 0;
    }
    if (*gaps) {
      Substitution s = load_substitution(file);
      Letter seed = resolve_seed(s, seed_tok);
      Word u = read_word(s.alphabet(), word_tok);
      size_t g = max_gap(s, seed, u, opt.horizon);
      Json j = gap_json(s, u, opt.horizon, g);
      std::ostringstream human;
      human << "max gap of " << render_word(s.alphabet(), u) << " in the first " << opt.horizon
            << " letters: " << g << "\n";
      emit(out, opt.json, j, human.str());
      return 0;
    }
    if (*periodicity) {
      Substitution s = load_substitution(file);
      Letter seed = resolve_seed(s, seed_tok);
      auto cert = certify_ultimate_periodicity(s, seed, max_pre, max_per);
      Json j = periodicity_json(s, cert);
      std::ostringstream human;
      switch (cert.kind) {
        case PeriodicityKind::periodic:
          human << "periodic: v = " << render_word(s.alphabet(), cert.witness->period)
                << " (verified)\n";
          break;
        case PeriodicityKind::ultimately_periodic:
          human << "ultimately periodic: u = "
                << render_word(s.alphabet(), cert.witness->preperiod)
                << ", v = " << render_word(s.alphabet(), cert.witness->period)
                << " (verified)\n";
          break;
        case PeriodicityKind::none_found:
          human << "none-found within bounds (not a proof of non-periodicity)\n";
          break;
      }
      emit(out, opt.json, j, human.str());
      return 0;
    }
    if (*decomp_cmd) {
      Substitution s = load_substitution(file);
      auto d = decompose(s);
      int k = condition_c_exponent(s);
      Json j = decomposition_json(s, d, k, opt.precision);
      std::ostringstream human;
      human << "p=" << d.p << " q=" << d.q << " l=" << d.parts.size() << "\n";
      for (size_t i = 0; i < d.parts.size(); ++i) {
        human << "  part " << i << (int(i) >= d.q ? " (principal)" : "") << ": {";
        for (size_t k2 = 0; k2 < d.parts[i].size(); ++k2)
          human << (k2 ? " " : "") << s.alphabet().token(d.parts[i][k2]);
        human << "} " << (d.zero[i] ? "zero" : "primitive") << "\n";
      }
      human << "condition (C) exponent: " << k << "\n";
      emit(out, opt.json, j, human.str());
      return 0;
    }
    if (*cperiodic) {
      Substitution s = load_substitution(file);
      auto [alphabet, period] = parse_free_word(period_tok);
      IntertwinedSystem sys = build_periodic_system(alphabet, period, s);
      Json sidecar = intertwined_sidecar_json(sys);
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".sub", serialize(sys.built));
        write_file(out_prefix + ".json", sidecar.dump(2) + "\n");
      }
      Json j;
      j["rules"] = serialize(sys.built);
      j["sidecar"] = sidecar;
      emit(out, opt.json, j, serialize(sys.built));
      return 0;
    }
    if (*czeta) {
      Substitution s = load_substitution(file);
      auto [alphabet, period] = parse_free_word(period_tok);
      IntertwinedSystem sys = build_periodic_system(alphabet, period, s);
      std::vector<std::string> pre_tokens;
      {
        auto [pre_alpha, pre_word] = parse_free_word(preperiod_tok);
        for (Letter a : pre_word.letters) pre_tokens.push_back(pre_alpha.token(a));
      }
      ZetaSystem zs = build_zeta_system(pre_tokens, sys);
      Json sidecar = zeta_sidecar_json(zs);
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".sub", serialize(zs.zeta));
        write_file(out_prefix + ".json", sidecar.dump(2) + "\n");
      }
      Json j;
      j["rules"] = serialize(zs.zeta);
      j["sidecar"] = sidecar;
      emit(out, opt.json, j, serialize(zs.zeta));
      return 0;
    }
    if (*blocks) {
      Substitution s = load_substitution(file);
      Letter seed = resolve_seed(s, seed_tok);
      BlockSystem bs = build_block_system(s, seed, block_n);
      std::optional<Word> u;
      if (!word_tok.empty()) u = read_word(s.alphabet(), word_tok);
      Json sidecar = block_sidecar_json(bs, u);
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".sub", serialize(bs.block_subst));
        write_file(out_prefix + ".json", sidecar.dump(2) + "\n");
      }
      Json j;
      j["rules"] = serialize(bs.block_subst);
      j["sidecar"] = sidecar;
      emit(out, opt.json, j, serialize(bs.block_subst));
      return 0;
    }
    if (*density) {
      CertifiedReal alpha = CertifiedReal::parse(alpha_expr);
      CertifiedReal beta = CertifiedReal::parse(beta_expr);
      DensityWitness w = densite_search(alpha, beta, dd, ee, target, eps, opt.budget);
      Json j = density_witness_json(w);
      std::ostringstream human;
      human << "n=" << w.n << " m=" << w.m << "  n^d alpha^n / m^e beta^m ~= " << w.achieved
            << " (target " << w.target << ", eps " << w.eps << ")\n";
      emit(out, opt.json, j, human.str());
      return 0;
    }
    if (*star) {
      Substitution s = load_substitution(file);
      Letter seed = resolve_seed(s, seed_tok);
      Letter a = s.alphabet().index_of(word_tok);
      auto st = starlike_decomposition(s, seed, a);
      Json j = starlike_json(s, st);
      std::ostringstream human;
      human << "p=" << st.p << " u=" << render_word(s.alphabet(), st.u)
            << " v=" << render_word(s.alphabet(), st.v)
            << " w=" << render_word(s.alphabet(), st.w) << " a=" << s.alphabet().token(st.a)
            << " gamma ~= " << st.gamma_estimate << " (+/- " << st.gamma_error << ")\n";
      emit(out, opt.json, j, human.str());
      return 0;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const budget_exhausted& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command executed\n";
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace subst::cli
