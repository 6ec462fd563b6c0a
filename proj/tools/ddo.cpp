#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ddo/automata.hpp"
#include "ddo/decide.hpp"
#include "ddo/factorize.hpp"
#include "ddo/langexpr.hpp"
#include "ddo/logic.hpp"
#include "ddo/oracles.hpp"
#include "ddo/recognition.hpp"

using namespace ddo;

namespace {

constexpr int exit_input = 2;
constexpr int exit_verification = 3;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnyWord word_arg(std::string const& word, std::string const& upword) {
  if (!upword.empty()) return parse_upword(upword);
  return word;
}

void require_verified(CertificateCheck const& c, std::string_view against) {
  if (!c.ok) {
    throw VerificationFailure("certificate failed re-verification against "
                              + std::string(against) + ": " + c.failure);
  }
}

// Shared by decide and factorize: an automaton path or a --hom document.
struct Source {
  std::string automaton;
  std::string hom;

  void add(CLI::App* cmd) {
    auto* a = cmd->add_option("automaton", automaton, "automaton JSON file");
    auto* h = cmd->add_option("--hom", hom, "recognizing homomorphism JSON file");
    a->excludes(h);
  }
  void require() const {
    if (automaton.empty() == hom.empty()) {
      throw std::invalid_argument("give exactly one of an automaton file or --hom");
    }
  }
};

int run_decide(Source const& src, std::string const& format, bool oracle_check) {
  src.require();
  Verdict v;
  if (!src.automaton.empty()) {
    auto a = load_automaton(src.automaton);
    v = decide_all(a);
    require_verified(verify_verdict(v, Language::of(a)), "the automaton");
    if (oracle_check) {
      require_verified(verify_verdict(v, brute_language(a)), "the brute-force oracle");
    }
  } else {
    auto doc = load_hom(src.hom);
    auto lang = Language::of(doc.hom);
    v = decide(doc.hom, doc.mode.value_or(Mode::infty), lang);
    // Without an automaton the homomorphism is the only independent source.
    require_verified(verify_verdict(v, lang), "the homomorphism");
  }
  std::cout << (format == "json" ? report_json(v) : report_text(v));
  return 0;
}

int run_eval(std::string const& formula, std::string const& monomial,
             std::string const& word, std::string const& upword, bool have_word) {
  if (formula.empty() == monomial.empty()) {
    throw std::invalid_argument("give exactly one of --formula or --monomial");
  }
  if (!have_word && upword.empty()) {
    throw std::invalid_argument("give exactly one of --word or --upword");
  }
  auto w = word_arg(word, upword);
  bool result;
  if (!monomial.empty()) {
    auto m = parse_monomial(monomial);
    result = std::visit([&](auto const& x) { return member(m, x); }, w);
  } else {
    auto s = parse_sentence(read_file(formula));
    if (auto const* uw = std::get_if<UPWord>(&w)) {
      auto c = classify(s);
      if (c.fragment == Fragment::other) {
        throw std::invalid_argument("not in BΣ₁ (classify: "
                                    + std::string(to_string(c.fragment)) + ")");
      }
      result = eval_up(s, *uw);
    } else {
      result = eval_finite(s, std::get<Word>(w));
    }
  }
  std::cout << (result ? "true" : "false") << "\n";
  return 0;
}

int run_syntactic(std::string const& path) {
  auto a = load_automaton(path);
  std::cout << serialize(syntactic_quotient(build_pure_profile_hom(a)), a.mode());
  return 0;
}

int run_factorize(Source const& src, std::string const& word,
                  std::string const& upword, bool have_word, std::size_t k,
                  std::string const& side) {
  src.require();
  if (!have_word && upword.empty()) {
    throw std::invalid_argument("give exactly one of --word or --upword");
  }
  auto w = word_arg(word, upword);
  bool infinite = std::holds_alternative<UPWord>(w);
  bool want_l = side == "l" || side == "both";
  bool want_r = side == "r" || side == "both";
  if (infinite && want_l && side != "auto") {
    throw std::invalid_argument("L-factorizations are defined for finite words only");
  }
  if (side == "auto") {
    want_r = true;
    want_l = !infinite;
  }
  RecognizingHom h = !src.hom.empty()
                         ? load_hom(src.hom).hom
                         : syntactic_quotient(build_pure_profile_hom(load_automaton(src.automaton)));
  if (want_r) {
    std::cout << "R: " << to_string(r_factorization(h, w)) << "\n";
    if (k) std::cout << "R(" << k << "): " << to_string(rk_factorization(h, w, k)) << "\n";
  }
  if (want_l) {
    std::cout << "L: " << to_string(l_factorization(h, w)) << "\n";
    if (k) std::cout << "L(" << k << "): " << to_string(lk_factorization(h, w, k)) << "\n";
  }
  if (want_r && want_l && k) {
    std::cout << "join: "
              << to_string(join(rk_factorization(h, w, k), lk_factorization(h, w, k), w))
              << "\n";
  }
  return 0;
}

std::set<Tail> parse_tails(std::vector<std::string> const& names) {
  std::set<Tail> out;
  for (auto const& n : names) {
    if (n == "finite") out.insert(Tail::finite);
    else if (n == "any") out.insert(Tail::any_infty);
    else if (n == "omega") out.insert(Tail::omega_only);
    else throw std::invalid_argument("unknown tail \"" + n + "\" (finite, any, omega)");
  }
  return out;
}

int run_fingerprint(std::string const& alphabet, std::size_t d,
                    std::vector<std::string> const& tails, std::string const& word,
                    std::string const& upword, bool have_word) {
  if (!have_word && upword.empty()) {
    throw std::invalid_argument("give exactly one of --word or --upword");
  }
  auto fp = fingerprint(Alphabet(alphabet), word_arg(word, upword), d, parse_tails(tails));
  for (auto const& m : fp) std::cout << to_string(m) << "\n";
  return 0;
}

int run_fuzz(std::size_t count, std::size_t states, std::uint64_t seed) {
  AutomatonGrid g;
  g.max_states = states;
  g.modes = {Mode::star, Mode::omega, Mode::infty};
  g.sample = count;
  g.seed = seed;
  auto automata = enumerate_automata(g);
  std::size_t bad = 0;
  for (auto const& a : automata) {
    auto v = pipeline_invariant_violations(a);
    if (v.empty()) continue;
    ++bad;
    std::cerr << serialize(a);
    for (auto const& msg : v) std::cerr << "  " << msg << "\n";
  }
  std::cout << "checked " << automata.size() << " automata, " << bad
            << " with violations\n";
  return bad ? exit_verification : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dot-depth-one decision procedures for regular languages of finite and infinite words"};
  app.require_subcommand(1);

  auto* decide_cmd = app.add_subcommand("decide", "decide dot-depth-one definability");
  Source decide_src;
  decide_src.add(decide_cmd);
  std::string report = "text";
  bool oracle_check = false;
  decide_cmd->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
  decide_cmd->add_flag("--oracle-check", oracle_check,
                       "re-verify certificates with the brute-force oracles");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula or monomial on a word");
  std::string formula, monomial, word, upword;
  eval_cmd->add_option("--formula", formula, "s-expression sentence file");
  eval_cmd->add_option("--monomial", monomial, "monomial such as \"ab *ba $\"");
  auto* eval_word = eval_cmd->add_option("--word", word, "finite word");
  auto* eval_up = eval_cmd->add_option("--upword", upword, "ultimately periodic word stem:loop");
  eval_word->excludes(eval_up);

  auto* synt_cmd = app.add_subcommand("syntactic", "export the syntactic homomorphism");
  std::string synt_path;
  synt_cmd->add_option("automaton", synt_path)->required();

  auto* fact_cmd = app.add_subcommand("factorize", "R-, L- and context factorizations");
  Source fact_src;
  fact_src.add(fact_cmd);
  std::string fword, fupword, side = "auto";
  std::size_t k = 0;
  auto* fact_word = fact_cmd->add_option("--word", fword);
  auto* fact_up = fact_cmd->add_option("--upword", fupword);
  fact_word->excludes(fact_up);
  fact_cmd->add_option("--k", k, "context radius for R(k)/L(k)");
  fact_cmd->add_option("--side", side, "r, l, both or auto")
      ->check(CLI::IsMember({"auto", "r", "l", "both"}));

  auto* fp_cmd = app.add_subcommand("fingerprint", "monomials of degree <= d containing a word");
  std::string fp_alphabet = "ab", fp_word, fp_upword;
  std::size_t fp_degree = 2;
  std::vector<std::string> fp_tails{"any"};
  fp_cmd->add_option("--alphabet", fp_alphabet);
  fp_cmd->add_option("--degree", fp_degree);
  fp_cmd->add_option("--tails", fp_tails, "finite, any, omega")->delimiter(',');
  auto* fp_w = fp_cmd->add_option("--word", fp_word);
  auto* fp_u = fp_cmd->add_option("--upword", fp_upword);
  fp_w->excludes(fp_u);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "check pipeline invariants on random automata");
  std::size_t fuzz_count = 200, fuzz_states = 3;
  std::uint64_t fuzz_seed = 1;
  fuzz_cmd->add_option("--count", fuzz_count);
  fuzz_cmd->add_option("--states", fuzz_states)->check(CLI::Range(1, 3));
  fuzz_cmd->add_option("--seed", fuzz_seed);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*decide_cmd) return run_decide(decide_src, report, oracle_check);
    if (*eval_cmd) return run_eval(formula, monomial, word, upword, eval_word->count() > 0);
    if (*synt_cmd) return run_syntactic(synt_path);
    if (*fact_cmd) {
      return run_factorize(fact_src, fword, fupword, fact_word->count() > 0, k, side);
    }
    if (*fp_cmd) {
      return run_fingerprint(fp_alphabet, fp_degree, fp_tails, fp_word, fp_upword,
                             fp_w->count() > 0);
    }
    if (*fuzz_cmd) return run_fuzz(fuzz_count, fuzz_states, fuzz_seed);
  } catch (VerificationFailure const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_verification;
  } catch (std::logic_error const& e) {
    // distinguishing_context reports internal disagreement as logic_error,
    // but invalid_argument and domain_error are input errors.
    if (dynamic_cast<std::invalid_argument const*>(&e) == nullptr
        && dynamic_cast<std::domain_error const*>(&e) == nullptr
        && dynamic_cast<std::out_of_range const*>(&e) == nullptr
        && dynamic_cast<std::length_error const*>(&e) == nullptr) {
      std::cerr << "error: internal verification failure: " << e.what() << "\n";
      return exit_verification;
    }
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
