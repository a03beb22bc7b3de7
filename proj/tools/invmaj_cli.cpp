// Command-line frontend: polynomial computation, bijection application and
// verification runs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invmaj/cocharge.hpp"
#include "invmaj/codes.hpp"
#include "invmaj/enumerate.hpp"
#include "invmaj/errors.hpp"
#include "invmaj/genfun.hpp"
#include "invmaj/hall_littlewood.hpp"
#include "invmaj/hook.hpp"
#include "invmaj/statistics.hpp"
#include "invmaj/t1.hpp"
#include "invmaj/verify.hpp"
#include "invmaj/word_codes.hpp"

using json = nlohmann::json;
using namespace invmaj;

namespace {

json poly_json(const QTPolynomial& p) {
  json terms = json::array();
  for (const auto& t : p.to_triples()) terms.push_back({t[0], t[1], t[2]});
  return terms;
}

json poly_json(const QPolynomial& p, bool t_variable) {
  json terms = json::array();
  for (auto [d, c] : p.terms()) {
    if (t_variable)
      terms.push_back({0, d, c});
    else
      terms.push_back({d, 0, c});
  }
  return terms;
}

int cmd_poly(const std::string& shape_text, const std::string& content_text,
             int alphabet_size, bool q0, bool as_json) {
  Partition mu = parse_partition(shape_text);
  std::vector<std::vector<int>> contents;
  if (!content_text.empty()) {
    contents.push_back(parse_word(content_text));
  } else {
    if (alphabet_size <= 0)
      throw precondition_error("poly: give --content or --alphabet-size");
    contents = compositions_of(mu.size(), alphabet_size);
  }
  bool label = contents.size() > 1;
  json out = json::array();
  for (const auto& alpha : contents) {
    if (q0) {
      QPolynomial p = hall_littlewood_coefficient(mu, alpha);
      if (as_json)
        out.push_back({{"content", alpha}, {"terms", poly_json(p, true)}});
      else if (label)
        std::cout << word_to_string(alpha) << ": " << p.to_string("t") << "\n";
      else
        std::cout << p.to_string("t") << "\n";
    } else {
      QTPolynomial p = macdonald_coefficient(mu, alpha);
      if (as_json)
        out.push_back({{"content", alpha}, {"terms", poly_json(p)}});
      else if (label)
        std::cout << word_to_string(alpha) << ": " << p.to_string() << "\n";
      else
        std::cout << p.to_string() << "\n";
    }
  }
  if (as_json) std::cout << (out.size() == 1 ? out[0]["terms"] : out).dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, int jobs, bool as_json) {
  std::vector<SuiteReport> reports;
  if (suite == "all") {
    for (const auto& name : verify_suite_names())
      reports.push_back(run_verify_suite(name, max_n, jobs));
  } else {
    reports.push_back(run_verify_suite(suite, max_n, jobs));
  }
  bool ok = true;
  if (as_json) {
    json out = json::array();
    for (const auto& r : reports) {
      out.push_back({{"suite", r.suite}, {"cases", r.cases}, {"failures", r.failures}});
      ok = ok && r.ok();
    }
    std::cout << (out.size() == 1 ? out[0] : out).dump() << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.suite << ": " << (r.cases - static_cast<long long>(r.failures.size()))
                << "/" << r.cases << " cases pass\n";
      for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
      ok = ok && r.ok();
    }
  }
  return ok ? 0 : 1;
}

bool looks_like_filling(const std::string& text) {
  return !text.empty() && text.front() == '[';
}

void print_filling_stats(const Filling& before, const Filling& after) {
  std::cout << after.to_string() << "\n";
  std::cout << "inv=" << inv_relative(before) << " maj=" << maj(before) << " -> inv="
            << inv_relative(after) << " maj=" << maj(after) << "\n";
}

int cmd_map(const std::string& name, const std::string& input, const std::string& alphabet_text) {
  std::vector<int> alphabet;
  if (!alphabet_text.empty()) {
    alphabet = parse_word(alphabet_text);
    std::sort(alphabet.begin(), alphabet.end());
  }
  if (name == "carlitz") {
    std::vector<int> w = parse_word(input);
    std::cout << word_to_string(carlitz_bijection(w)) << "\n";
    return 0;
  }
  if (name == "invcode") {
    if (looks_like_filling(input)) {
      Filling f = parse_filling(input);
      Code c = invcode_filling(f);
      std::cout << code_to_string(c) << "\n";
      std::cout << "inv=" << inv_relative(f) << " sum=" << code_sum(c) << "\n";
    } else if (!alphabet.empty()) {
      // with an alphabet the input is a code and the inverse map applies
      std::vector<int> w = invcode_word_inverse(parse_word(input), alphabet);
      std::cout << word_to_string(w) << "\n";
      std::cout << "inv=" << inv_relative(row_filling(w)) << "\n";
    } else {
      std::vector<int> w = parse_word(input);
      Code c = invcode_word(w);
      std::cout << code_to_string(c) << "\n";
      std::cout << "inv=" << code_sum(c) << "\n";
    }
    return 0;
  }
  if (name == "majcode") {
    if (looks_like_filling(input)) {
      Filling f = parse_filling(input);
      Code c = majcode_filling(f);
      std::cout << code_to_string(c) << "\n";
      std::cout << "maj=" << maj(f) << " sum=" << code_sum(c) << "\n";
    } else if (!alphabet.empty()) {
      std::vector<int> w = majcode_column_word_inverse(parse_word(input), alphabet);
      std::cout << word_to_string(w) << "\n";
      std::cout << "maj=" << maj_word(w) << "\n";
    } else {
      std::vector<int> w = parse_word(input);  // column word, top to bottom
      Code c = majcode_column_word(w);
      std::cout << code_to_string(c) << "\n";
      std::cout << "maj=" << maj_word(w) << " sum=" << code_sum(c) << "\n";
    }
    return 0;
  }
  if (name == "hook-phi") {
    Filling f = parse_filling(input);
    Filling g = hook_phi(f);
    print_filling_stats(f, g);
    return 0;
  }
  if (name == "t1") {
    Filling f = parse_filling(input);
    Filling g = t1_map(f);
    print_filling_stats(f, g);
    return 0;
  }
  if (name == "hl-symmetry") {
    Filling f = parse_filling(input);
    Filling g = hl_symmetry_map(f);
    print_filling_stats(f, g);
    return 0;
  }
  if (name == "zero-bump") {
    Filling f = parse_filling(input);
    Filling g = zero_bump(f);
    print_filling_stats(f, g);
    return 0;
  }
  if (name == "cocharge") {
    std::vector<int> w = parse_word(input);
    std::cout << word_to_string(w) << "  cc=" << cocharge(w) << "\n";
    return 0;
  }
  if (name == "reduce") {
    std::vector<int> w = parse_word(input);
    std::vector<int> reduced = first_letter_reduction(w);
    std::cout << word_to_string(reduced) << "  cc=" << cocharge(reduced) << "\n";
    return 0;
  }
  throw precondition_error("unknown map: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inv/maj statistics, generating polynomials and bijections on "
               "Young-diagram fillings"};
  app.require_subcommand(1);

  std::string shape, content, suite, map_name, map_input, map_alphabet;
  int alphabet_size = 0, max_n = 5, jobs = 1;
  bool q0 = false, as_json = false;

  CLI::App* poly = app.add_subcommand("poly", "coefficient polynomial of a shape and content");
  poly->add_option("shape", shape, "partition, e.g. 3,2")->required();
  poly->add_option("--content", content, "letter multiplicities, e.g. 1,1");
  poly->add_option("--alphabet-size", alphabet_size, "print every content over k letters");
  poly->add_flag("--q0", q0, "Hall-Littlewood slice (inversion-free fillings)");
  poly->add_flag("--json", as_json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "symmetry|hl-bijection|hook|t1|cocharge|codes|zero-bump|all")
      ->required();
  verify->add_option("--max-n", max_n, "largest size to check");
  verify->add_option("--jobs", jobs, "shards to run in parallel");
  verify->add_flag("--json", as_json, "machine-readable report");

  CLI::App* map = app.add_subcommand("map", "apply a bijection or statistic");
  map->add_option("name", map_name,
                  "carlitz|invcode|majcode|hook-phi|t1|hl-symmetry|zero-bump|cocharge|reduce")
      ->required();
  map->add_option("input", map_input, "word 4,1,3,2 or filling [[1,2,3],[2,1]]")->required();
  map->add_option("--alphabet", map_alphabet, "alphabet for code inverses");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (poly->parsed()) return cmd_poly(shape, content, alphabet_size, q0, as_json);
    if (verify->parsed()) return cmd_verify(suite, max_n, jobs, as_json);
    if (map->parsed()) return cmd_map(map_name, map_input, map_alphabet);
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const not_in_image_error& e) {
    std::cerr << "not in image: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
