#include "invmaj/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "invmaj/cocharge.hpp"
#include "invmaj/codes.hpp"
#include "invmaj/enumerate.hpp"
#include "invmaj/errors.hpp"
#include "invmaj/genfun.hpp"
#include "invmaj/hall_littlewood.hpp"
#include "invmaj/hook.hpp"
#include "invmaj/statistics.hpp"
#include "invmaj/t1.hpp"
#include "invmaj/word_codes.hpp"

namespace invmaj {

namespace {

struct Reporter {
  SuiteReport* report;
  void check(bool ok, const std::string& what) {
    ++report->cases;
    if (!ok) report->failures.push_back(what);
  }
};

std::vector<int> alphabet_for_content(const std::vector<int>& alpha) {
  std::vector<int> a;
  for (size_t i = 0; i < alpha.size(); ++i)
    a.insert(a.end(), alpha[i], static_cast<int>(i) + 1);
  return a;
}

std::string case_name(const Partition& mu, const std::vector<int>& alpha) {
  std::ostringstream os;
  os << "mu=" << mu.to_string() << " alpha=" << word_to_string(alpha);
  return os.str();
}

// run fn(i) for i in [0, count) across shards, merging reports in order
SuiteReport run_sharded(const std::string& suite, long long count, int jobs,
                        const std::function<void(long long, Reporter&)>& fn) {
  if (jobs < 1) jobs = 1;
  std::vector<SuiteReport> parts(jobs);
  auto worker = [&](int shard) {
    Reporter r{&parts[shard]};
    for (long long i = shard; i < count; i += jobs) fn(i, r);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int s = 0; s < jobs; ++s) threads.emplace_back(worker, s);
    for (auto& t : threads) t.join();
  }
  SuiteReport out;
  out.suite = suite;
  for (auto& p : parts) {
    out.cases += p.cases;
    out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(out.failures.begin(), out.failures.end());
  return out;
}

}  // namespace

SuiteReport verify_symmetry(int max_n, int jobs) {
  std::vector<std::pair<Partition, std::vector<int>>> work;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& mu : partitions_of(n))
      for (const auto& alpha : compositions_of(n, n)) work.push_back({mu, alpha});
  return run_sharded("symmetry", static_cast<long long>(work.size()), jobs,
                     [&](long long i, Reporter& r) {
                       const auto& [mu, alpha] = work[i];
                       QTPolynomial lhs = macdonald_coefficient(mu, alpha);
                       QTPolynomial rhs =
                           macdonald_coefficient(conjugate(mu), alpha).with_swapped_variables();
                       r.check(lhs == rhs, "symmetry " + case_name(mu, alpha));
                       r.check(lhs.evaluate_at_one_one() == multinomial(alpha),
                               "fillings count " + case_name(mu, alpha));
                     });
}

SuiteReport verify_hl_bijection(int max_n, int jobs) {
  std::vector<std::pair<Partition, std::vector<int>>> work;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& mu : partitions_of(n, 3))
      for (const auto& alpha : compositions_of(n, 3)) work.push_back({mu, alpha});

  return run_sharded("hl-bijection", static_cast<long long>(work.size()), jobs,
                     [&](long long i, Reporter& r) {
    const auto& [mu, alpha] = work[i];
    std::string name = case_name(mu, alpha);
    std::vector<int> A = alphabet_for_content(alpha);
    std::vector<int> comp = complement_alphabet(A);
    std::vector<int> ralpha = reverse_content(alpha);
    std::set<Code> expected = enumerate_codes(mu, comp);

    // majcode side: inversion-free fillings of mu with content alpha
    std::set<Code> image;
    bool stats_ok = true, round_ok = true, swap_ok = true;
    QPolynomial hl_from_codes;
    enumerate_fillings(mu, alpha, [&](const Filling& f) {
      if (inv_relative(f) != 0) return;
      Code code = majcode_filling(f);
      image.insert(code);
      hl_from_codes.add_term(static_cast<int>(code_sum(code)), 1);
      if (code_sum(code) != maj(f)) stats_ok = false;
      if (!(majcode_filling_inverse(code, mu, A) == f)) round_ok = false;
      Filling rho = hl_symmetry_map(f);
      if (maj(rho) != 0 || inv_relative(rho) != maj(f) ||
          !(rho.shape() == conjugate(mu)) || content_of(rho, alpha.size()) != ralpha)
        swap_ok = false;
    });
    r.check(stats_ok, "majcode sum " + name);
    r.check(image == expected, "majcode image " + name);
    r.check(round_ok, "majcode roundtrip " + name);
    r.check(swap_ok, "hl symmetry map " + name);
    r.check(hl_from_codes == hall_littlewood_coefficient(mu, alpha),
            "hl polynomial " + name);

    // invcode side: descent-free fillings of mu* with content r(alpha)
    std::set<Code> inv_image;
    bool inv_stats = true, inv_round = true;
    Partition conj = conjugate(mu);
    enumerate_fillings(conj, ralpha, [&](const Filling& f) {
      if (maj(f) != 0) return;
      Code code = invcode_filling(f);
      inv_image.insert(code);
      if (code_sum(code) != inv_relative(f)) inv_stats = false;
      if (!(invcode_filling_inverse(code, mu, comp) == f)) inv_round = false;
    });
    r.check(inv_stats, "invcode sum " + name);
    r.check(inv_image == expected, "invcode image " + name);
    r.check(inv_round, "invcode roundtrip " + name);
  });
}

SuiteReport verify_hook(int max_n, int jobs) {
  std::vector<std::pair<Partition, std::vector<int>>> work;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& mu : partitions_of(n))
      if (is_hook(mu))
        for (const auto& alpha : compositions_of(n, 3)) work.push_back({mu, alpha});

  return run_sharded("hook", static_cast<long long>(work.size()), jobs,
                     [&](long long i, Reporter& r) {
    const auto& [mu, alpha] = work[i];
    std::string name = case_name(mu, alpha);
    std::vector<int> ralpha = reverse_content(alpha);
    bool round_ok = true, swap_ok = true, involution_ok = true, bijection_ok = true;
    std::set<Filling> images;
    long long count = 0;
    enumerate_fillings(mu, alpha, [&](const Filling& f) {
      ++count;
      HookCodePair p = hook_codes(f);
      std::vector<int> letters = p.letters;
      if (!(hook_codes_inverse(p, letters, mu) == f)) round_ok = false;
      Filling g = hook_phi(f);
      images.insert(g);
      if (inv_relative(g) != maj(f) || maj(g) != inv_relative(f) ||
          content_of(g, alpha.size()) != ralpha)
        swap_ok = false;
      if (!(hook_phi(g) == f)) involution_ok = false;
    });
    if (static_cast<long long>(images.size()) != count) bijection_ok = false;
    r.check(round_ok, "hook code roundtrip " + name);
    r.check(swap_ok, "hook statistic swap " + name);
    r.check(involution_ok, "hook involution " + name);
    r.check(bijection_ok, "hook injectivity " + name);
  });
}

SuiteReport verify_t1(int max_n, int jobs) {
  std::vector<Partition> shapes;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& mu : partitions_of(n)) shapes.push_back(mu);

  SuiteReport out = run_sharded("t1", static_cast<long long>(shapes.size()), jobs,
                                [&](long long i, Reporter& r) {
    const Partition& mu = shapes[i];
    std::string name = "mu=" + mu.to_string();
    int n = mu.size();
    std::vector<int> ones(n, 1);
    bool stat_ok = true, round_ok = true;
    std::set<Filling> images;
    long long count = 0;
    enumerate_fillings(mu, ones, [&](const Filling& f) {
      ++count;
      Filling rho = t1_map(f);
      images.insert(rho);
      if (inv_relative(rho) != maj(f) || !(rho.shape() == conjugate(mu))) stat_ok = false;
      if (!(t1_map_inverse(rho) == f)) round_ok = false;
    });
    r.check(stat_ok, "t1 statistic transfer " + name);
    r.check(round_ok, "t1 roundtrip " + name);
    r.check(static_cast<long long>(images.size()) == count, "t1 injectivity " + name);
  });

  // row identities: inversion distributions over a fixed base row are
  // q-multinomials in the letter multiplicities
  Reporter r{&out};
  int base_len = std::min(max_n, 5);
  for (int L = 1; L <= base_len; ++L) {
    std::vector<std::vector<int>> bases;
    std::vector<int> base(L, 1);
    while (true) {
      bases.push_back(base);
      int p = L - 1;
      while (p >= 0 && base[p] == 3) base[p--] = 1;
      if (p < 0) break;
      ++base[p];
    }
    for (const auto& b : bases) {
      for (int k = 1; k <= L; ++k) {
        for (const auto& mult : compositions_of(k, 5)) {
          std::vector<int> letters = alphabet_for_content(mult);
          QPolynomial dist = row_inversion_distribution(letters, b);
          QPolynomial expected = q_multinomial(k, mult);
          std::ostringstream os;
          os << "row distribution base=" << word_to_string(b)
             << " letters=" << word_to_string(letters);
          r.check(dist == expected, os.str());
        }
      }
    }
  }
  return out;
}

SuiteReport verify_cocharge(int max_n, int jobs) {
  // maj = cocharge of the cocharge word on inversion-free fillings
  std::vector<std::pair<Partition, std::vector<int>>> work;
  int filling_max = std::min(max_n, 7);
  for (int n = 1; n <= filling_max; ++n)
    for (const Partition& mu : partitions_of(n))
      for (const auto& alpha : compositions_of(n, n)) work.push_back({mu, alpha});

  SuiteReport out = run_sharded("cocharge", static_cast<long long>(work.size()), jobs,
                                [&](long long i, Reporter& r) {
    const auto& [mu, alpha] = work[i];
    bool ok = true;
    enumerate_fillings(mu, alpha, [&](const Filling& f) {
      if (inv_relative(f) != 0) return;
      if (cocharge(cocharge_word(f)) != maj(f)) ok = false;
    });
    r.check(ok, "maj = cc(cw) " + case_name(mu, alpha));
  });

  // word-level recursions over all words with partition content
  Reporter r{&out};
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      std::vector<int> word = alphabet_for_content(lambda.parts());
      std::sort(word.begin(), word.end());
      bool reduction_ok = true, cyclage_ok = true, knuth_ok = true;
      do {
        int cc = cocharge(word);
        if (word.front() == 1) {
          if (cocharge(first_letter_reduction(word)) != cc) reduction_ok = false;
        } else {
          if (cocharge(cyclage(word)) != cc - 1) cyclage_ok = false;
        }
        if (n <= 7) {
          for (const auto& w2 : knuth_neighbors(word))
            if (cocharge(w2) != cc) knuth_ok = false;
        }
      } while (std::next_permutation(word.begin(), word.end()));
      std::string name = "content=" + lambda.to_string();
      r.check(reduction_ok, "first letter reduction " + name);
      r.check(cyclage_ok, "cyclage drop " + name);
      if (n <= 7) r.check(knuth_ok, "knuth invariance " + name);
    }
  }
  return out;
}

SuiteReport verify_codes(int max_n, int jobs) {
  std::vector<std::pair<Partition, std::vector<int>>> work;
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      std::vector<int> standard(n);
      for (int i = 0; i < n; ++i) standard[i] = i + 1;
      work.push_back({mu, standard});
      for (const auto& alpha : compositions_of(n, 3))
        work.push_back({mu, alphabet_for_content(alpha)});
    }
  }
  return run_sharded("codes", static_cast<long long>(work.size()), jobs,
                     [&](long long i, Reporter& r) {
    const auto& [mu, A] = work[i];
    std::ostringstream os;
    os << "mu=" << mu.to_string() << " A=" << word_to_string(A);
    std::set<Code> rec = enumerate_codes(mu, A);
    std::set<Code> brute = enumerate_codes_bruteforce(mu, A);
    r.check(rec == brute, "recursion agreement " + os.str());
    bool standard_alphabet = true;
    for (size_t k = 0; k < A.size(); ++k)
      if (A[k] != static_cast<int>(k) + 1) standard_alphabet = false;
    if (standard_alphabet) {
      std::vector<int> parts = mu.parts();
      r.check(static_cast<long long>(rec.size()) == multinomial(parts),
              "code count " + os.str());
    }
  });
}

SuiteReport verify_zero_bump(int max_n, int jobs) {
  std::vector<std::pair<Partition, std::vector<int>>> work;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& mu : partitions_of(n))
      for (const auto& alpha : compositions_of(n, n)) work.push_back({mu, alpha});

  SuiteReport out = run_sharded("zero-bump", static_cast<long long>(work.size()), jobs,
                                [&](long long i, Reporter& r) {
    const auto& [mu, alpha] = work[i];
    bool maj_ok = true, round_ok = true;
    enumerate_inversion_free_fillings(mu, alpha, [&](const Filling& f) {
      int m = f.max_entry();
      bool bottom = false;
      for (int c = 1; c <= mu.row_length(1); ++c)
        if (f.at(1, c) == m) bottom = true;
      if (!bottom) return;
      Filling down = zero_bump(f);
      if (maj(down) != maj(f)) maj_ok = false;
      // the pull-up reconstruction must invert the bump when the removed
      // entry was the unique maximum
      std::vector<int> alphabet = alphabet_of(f);
      long long copies = std::count(alphabet.begin(), alphabet.end(), m);
      if (copies == 1) {
        if (!(zero_bump_inverse(down, m, mu) == f)) round_ok = false;
      }
    });
    r.check(maj_ok, "zero bump maj invariance " + case_name(mu, alpha));
    r.check(round_ok, "zero bump roundtrip " + case_name(mu, alpha));
  });

  // rectangle fibers: psi is a bijection and each fiber realizes every drop
  Reporter r{&out};
  int area_cap = std::min(12, max_n + 5);
  for (int h = 1; h <= 3; ++h) {
    for (int w = 1; w <= 4; ++w) {
      if (h * w > area_cap) continue;
      Partition mu(std::vector<int>(h, w));
      int n = h * w;
      std::vector<int> ones(n, 1);
      std::map<Filling, std::vector<int>> fibers;  // psi image -> drops seen
      std::set<std::pair<Filling, int>> image;
      bool range_ok = true, cor2_ok = true;
      long long count = 0;
      enumerate_inversion_free_fillings(mu, ones, [&](const Filling& f) {
        ++count;
        auto [down, d] = rect_psi(f);
        if (d < 0 || d >= h) range_ok = false;
        fibers[down].push_back(d);
        image.insert({down, d});
        // drop equals the one-column insertion difference through the
        // bumping sequence
        std::vector<int> seq = bumping_sequence(f);
        Cell mc{0, 0};
        for (int row = 1; row <= h; ++row)
          for (int col = 1; col <= w; ++col)
            if (f.at(row, col) == n) mc = {row, col};
        std::vector<int> column(seq.rbegin(), seq.rend());  // a_{h-1},...,a_1
        std::vector<int> with_max(column);
        with_max.insert(with_max.end() - (mc.row - 1), n);
        if (maj_word(with_max) - maj_word(column) != d) cor2_ok = false;
      });
      bool fibers_ok = static_cast<long long>(image.size()) == count;
      for (const auto& [down, drops] : fibers) {
        std::vector<int> sorted(drops);
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expected(h);
        for (int d = 0; d < h; ++d) expected[d] = d;
        if (sorted != expected) fibers_ok = false;
      }
      std::string name = "rectangle " + mu.to_string();
      r.check(range_ok && fibers_ok, "psi fiber drops " + name);
      r.check(cor2_ok, "one-column drop prediction " + name);
    }
  }
  return out;
}

std::vector<std::string> verify_suite_names() {
  return {"symmetry", "hl-bijection", "hook", "t1", "cocharge", "codes", "zero-bump"};
}

SuiteReport run_verify_suite(const std::string& name, int max_n, int jobs) {
  if (name == "symmetry") return verify_symmetry(max_n, jobs);
  if (name == "hl-bijection") return verify_hl_bijection(max_n, jobs);
  if (name == "hook") return verify_hook(max_n, jobs);
  if (name == "t1") return verify_t1(max_n, jobs);
  if (name == "cocharge") return verify_cocharge(max_n, jobs);
  if (name == "codes") return verify_codes(max_n, jobs);
  if (name == "zero-bump") return verify_zero_bump(max_n, jobs);
  throw precondition_error("unknown suite: " + name);
}

}  // namespace invmaj
