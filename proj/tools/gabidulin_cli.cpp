// Command-line front end: code construction from JSON spec files, encoding,
// rank-error channel simulation, list decoding, golden self-tests and
// counter benchmarks.
//
// Exit codes: 0 success, 1 failed self-test, 2 usage or parse error,
// 3 invariant violation, 4 internal guard tripped.

#include <charconv>
#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gabidulin/decoder.hpp"
#include "gabidulin/selftest.hpp"
#include "gabidulin/specfile.hpp"

namespace {

using namespace gabidulin;

std::uint64_t parse_u64(const std::string& token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("not a non-negative integer: '" + token + "'");
  return value;
}

Word parse_word(const Field& f, const std::vector<std::string>& tokens,
                std::size_t expected, const char* what) {
  if (tokens.size() != expected)
    throw ParseError(std::string(what) + ": expected " +
                     std::to_string(expected) + " integers, got " +
                     std::to_string(tokens.size()));
  Word w;
  w.reserve(expected);
  for (const auto& t : tokens) w.push_back(f.element(parse_u64(t)));
  return w;
}

void print_word(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << w[i].code;
  }
  std::cout << '\n';
}

int cmd_encode(const std::string& spec_path,
               const std::vector<std::string>& coeff_tokens) {
  CodeSpec spec = load_code_spec(spec_path);
  Word coeffs = parse_word(spec.field(), coeff_tokens, spec.k(),
                           "message coefficients");
  Message msg(spec.field(), std::vector<Element>(coeffs.begin(), coeffs.end()));
  print_word(encode(spec, msg));
  return 0;
}

int cmd_corrupt(const std::string& spec_path,
                const std::vector<std::string>& word_tokens, std::int64_t t,
                std::uint64_t seed) {
  CodeSpec spec = load_code_spec(spec_path);
  const auto t_limit = static_cast<std::int64_t>(
      std::min<std::size_t>(spec.field().m(), spec.n()));
  if (t < 0 || t > t_limit)
    throw ParseError("error rank t must lie in [0, " +
                     std::to_string(t_limit) + "]");
  Word w = parse_word(spec.field(), word_tokens, spec.n(), "word");
  Word e = random_error(spec, static_cast<std::size_t>(t), seed);
  print_word(word_add(spec.field(), w, e));
  return 0;
}

int cmd_decode(const std::string& spec_path,
               const std::vector<std::string>& word_tokens,
               const std::string& basis, bool as_json) {
  CodeSpec spec = load_code_spec(spec_path);
  Word r = parse_word(spec.field(), word_tokens, spec.n(), "received word");
  BasisAlg alg;
  if (basis == "eea")
    alg = BasisAlg::Eea;
  else if (basis == "iter")
    alg = BasisAlg::Iterative;
  else
    throw ParseError("--basis must be 'eea' or 'iter'");

  DecodeOutput out = decode_closest(spec, r, alg);
  if (as_json) {
    nlohmann::json j;
    j["messages"] = nlohmann::json::array();
    for (const Message& m : out.messages)
      j["messages"].push_back(message_codes(m, spec.k()));
    j["t"] = out.t;
    j["j_final"] = out.j_final;
    j["ell1"] = out.ell1;
    j["ell2"] = out.ell2;
    j["counters"] = {
        {"basis",
         {{"field_muls", out.counters.basis.field_muls},
          {"field_divs", out.counters.basis.field_divs},
          {"sym_divs", out.counters.basis.sym_divs}}},
        {"search",
         {{"field_muls", out.counters.search.field_muls},
          {"field_divs", out.counters.search.field_divs},
          {"sym_divs", out.counters.search.sym_divs}}}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (const Message& m : out.messages) {
      auto codes = message_codes(m, spec.k());
      for (std::size_t i = 0; i < codes.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << codes[i];
      }
      std::cout << '\n';
    }
  }
  return 0;
}

struct BenchRow {
  std::size_t n, k, t;
  std::string alg;
  double mean_muls;
  double wall_ms;
};

int cmd_bench(const std::vector<std::size_t>& n_list, std::size_t t,
              std::size_t trials, std::uint64_t seed, unsigned q, unsigned m,
              std::size_t k_opt) {
  using clock = std::chrono::steady_clock;
  std::cout << "n,k,t,algorithm,mean_field_mults,wall_ms\n";
  for (std::size_t n : n_list) {
    if (n > m) throw ParseError("bench requires n <= m");
    auto field = std::make_shared<const Field>(q, m);
    std::size_t k = k_opt ? k_opt : std::max<std::size_t>(1, n / 2);

    std::vector<Element> gens;
    Element a = field->alpha();
    Element g = field->one();
    for (std::size_t i = 0; i < n; ++i) {
      gens.push_back(g);
      g = field->mul(g, a);
    }
    CodeSpec spec(field, n, k, gens);
    if (t > std::min<std::size_t>(m, n)) throw ParseError("t out of range");

    // same received words for every algorithm
    std::mt19937_64 rng(seed);
    std::vector<Word> received;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::vector<Element> coeffs(k);
      for (auto& c : coeffs) c = Element{rng() % field->size()};
      Word c = encode(spec, Message(*field, std::move(coeffs)));
      Word e = random_error(spec, t, rng());
      received.push_back(word_add(*field, c, e));
    }

    std::vector<BenchRow> rows;
    auto run = [&](const char* name, auto&& decode_fn) {
      double total_muls = 0;
      auto start = clock::now();
      for (const Word& r : received) {
        DecodeOutput out = decode_fn(r);
        total_muls += static_cast<double>(out.counters.basis.field_muls +
                                          out.counters.search.field_muls);
      }
      double ms = std::chrono::duration<double, std::milli>(clock::now() -
                                                            start)
                      .count();
      rows.push_back({n, k, t, name, total_muls / trials,
                      ms / static_cast<double>(trials)});
    };

    run("param", [&](const Word& r) {
      return decode_closest(spec, r, BasisAlg::Iterative);
    });
    if (t >= spec.min_distance() / 2) {
      try {
        run("chase", [&](const Word& r) { return decode_chase(spec, r, t); });
      } catch (const GuardError&) {
        // enumeration infeasible at these parameters; skip the row
      }
    }
    try {
      run("exhaustive",
          [&](const Word& r) { return decode_exhaustive(spec, r); });
    } catch (const GuardError&) {
    }

    for (const BenchRow& row : rows)
      std::cout << row.n << ',' << row.k << ',' << row.t << ',' << row.alg
                << ',' << row.mean_muls << ',' << row.wall_ms << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabidulin rank-metric list decoding"};
  app.require_subcommand(1);

  std::string spec_path;
  std::vector<std::string> tokens;

  auto* enc = app.add_subcommand("encode", "evaluate a message polynomial");
  enc->add_option("spec", spec_path, "code spec JSON file")->required();
  enc->add_option("coeffs", tokens, "k message coefficients, ascending q-degree");

  std::int64_t t_arg = 0;
  std::uint64_t seed = 0;
  auto* cor = app.add_subcommand("corrupt", "add a random error of given rank");
  cor->add_option("spec", spec_path, "code spec JSON file")->required();
  cor->add_option("word", tokens, "n word entries");
  cor->add_option("--t", t_arg, "error rank")->required();
  cor->add_option("--seed", seed, "PRNG seed");

  std::string basis = "eea";
  bool as_json = false;
  auto* dec = app.add_subcommand("decode", "list all closest messages");
  dec->add_option("spec", spec_path, "code spec JSON file")->required();
  dec->add_option("word", tokens, "n received entries");
  dec->add_option("--basis", basis, "minimal basis algorithm: eea or iter");
  dec->add_flag("--json", as_json, "emit a JSON report with counters");

  auto* self = app.add_subcommand("selftest", "run the golden self-checks");

  std::vector<std::size_t> n_list;
  std::size_t bench_t = 1, trials = 10, bench_k = 0;
  unsigned bench_q = 2, bench_m = 32;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "decoder counter benchmark (CSV)");
  bench->add_option("--n-list", n_list, "code lengths")
      ->required()
      ->delimiter(',');
  bench->add_option("--t", bench_t, "error rank per trial");
  bench->add_option("--trials", trials, "trials per configuration");
  bench->add_option("--seed", bench_seed, "PRNG seed");
  bench->add_option("--q", bench_q, "base field characteristic");
  bench->add_option("--m", bench_m, "extension degree");
  bench->add_option("--k", bench_k, "code dimension (default n/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (*enc) return cmd_encode(spec_path, tokens);
    if (*cor) return cmd_corrupt(spec_path, tokens, t_arg, seed);
    if (*dec) return cmd_decode(spec_path, tokens, basis, as_json);
    if (*self) return run_selftest(std::cout) ? 0 : 1;
    if (*bench)
      return cmd_bench(n_list, bench_t, trials, bench_seed, bench_q, bench_m,
                       bench_k);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
