// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "altgraph/cheeger.hpp"
#include "altgraph/partition.hpp"
#include "altgraph/spectra.hpp"
#include "altgraph/verify.hpp"

using namespace altgraph;

namespace {

constexpr Family kFamilies[] = {Family::AG, Family::EAG, Family::CAG};

// Collects the first few failure messages of a criterion.
struct Ledger {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(15);
    s << what << ": got " << got << ", want " << want << " +- " << tol;
    expect(std::abs(got - want) <= tol, s.str());
  }
};

std::string label(Family f, int n) { return to_string(f) + "_" + std::to_string(n); }

long long binom3(long long n) { return n * (n - 1) * (n - 2) / 6; }

long long factorial(long long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Divisor matrices as displayed for the three block partitions.
IntMatrix displayed_divisor(Family f, long long n) {
  if (f == Family::AG) {
    IntMatrix b(4, 4);
    b << 2 * n - 6, 1, 1, 0,
         1, 0, n - 2, n - 3,
         1, n - 2, 0, n - 3,
         0, 1, 1, 2 * n - 6;
    return b;
  }
  IntMatrix b(n, n);
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c) {
      if (f == Family::EAG) {
        if (r == 0 && c == 0) b(r, c) = 0;
        else if (r == 0 || c == 0) b(r, c) = n - 2;
        else if (r == c) b(r, c) = (n - 2) * (n - 3);
        else b(r, c) = 1;
      } else {
        b(r, c) = r == c ? 2 * binom3(n - 1) : n - 2;
      }
    }
  return b;
}

// Eigenvalues of the displayed divisor matrix, descending.
std::vector<double> displayed_divisor_spectrum(Family f, double n) {
  std::vector<double> v;
  if (f == Family::AG) {
    v = {2 * n - 4, 2 * n - 6, n - 4, 2 - n};
  } else if (f == Family::EAG) {
    v.push_back((n - 1) * (n - 2));
    v.insert(v.end(), static_cast<std::size_t>(n - 2), n * n - 5 * n + 5);
    v.push_back(2 - n);
  } else {
    v.push_back(2 * binom3(static_cast<long long>(n)));
    v.insert(v.end(), static_cast<std::size_t>(n - 1), n * (n - 2) * (n - 4) / 3);
  }
  std::sort(v.rbegin(), v.rend());
  return v;
}

double lambda2_formula(Family f, double n) {
  if (f == Family::AG) return 2 * n - 6;
  if (f == Family::EAG) return n * n - 5 * n + 5;
  return n * (n - 2) * (n - 4) / 3;
}

double gap_formula(Family f, double n) {
  if (f == Family::AG) return 2;
  if (f == Family::EAG) return 2 * n - 3;
  return n * n - 2 * n;
}

// Blocks on which eigenvectors outside the divisor spectrum must sum to zero.
std::vector<std::vector<Vertex>> vanishing_blocks(Family f, int n) {
  std::vector<std::vector<Vertex>> out;
  if (f == Family::AG) {
    for (int i = 1; i <= n; ++i)
      for (auto& b : blocks_ag(n, i).blocks) out.push_back(std::move(b));
  } else {
    for (int position = 1; position <= n; ++position)
      for (int value = 1; value <= n; ++value) out.push_back(block_vertices(n, position, value));
  }
  return out;
}

std::string run_binary(const std::string& args) {
  std::string out;
  FILE* pipe = popen((std::string(ALTGRAPH_CLI_PATH) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  if (pclose(pipe) != 0) out.clear();
  return out;
}

void criterion1(Ledger& l) {
  for (int n = 4; n <= 7; ++n) {
    const CayleyGraph g = build_family(Family::AG, n);
    const double want = 2.0 * n - 6;
    l.near(lambda2_iterative(g, 1e-8).lambda2, want, 1e-6, "iterative lambda2 " + label(Family::AG, n));
    if (n <= 6) l.near(dense_spectrum(g, 1e-10).lambda2, want, 1e-6, "dense lambda2 " + label(Family::AG, n));
  }
}

void criterion2(Ledger& l) {
  for (int n = 4; n <= 7; ++n) {
    const CayleyGraph g = build_family(Family::EAG, n);
    l.near(lambda2_iterative(g, 1e-8).lambda2, n * n - 5.0 * n + 5, 1e-6, "lambda2 " + label(Family::EAG, n));
    l.near(spectral_gap(g, 1e-8), 2.0 * n - 3, 2e-6, "gap " + label(Family::EAG, n));
  }
}

void criterion3(Ledger& l) {
  for (int n = 4; n <= 7; ++n) {
    const CayleyGraph g = build_family(Family::CAG, n);
    l.near(lambda2_iterative(g, 1e-8).lambda2, n * (n - 2.0) * (n - 4) / 3, 1e-6,
           "lambda2 " + label(Family::CAG, n));
  }
  l.near(dense_spectrum(build_family(Family::CAG, 3), 1e-10).lambda2, -1, 1e-6, "lambda2 CAG_3");
}

void criterion4(Ledger& l) {
  for (Family f : kFamilies)
    for (int n = 4; n <= 9; ++n) {
      const CayleyGraph g = build_family(f, n);
      const IntMatrix want = displayed_divisor(f, n);
      for (int i = 1; i <= n; ++i) {
        const auto result = check_equitable(g, family_partition(f, n, i));
        const auto* b = std::get_if<DivisorMatrix>(&result);
        l.expect(b && b->entries == want,
                 label(f, n) + " i=" + std::to_string(i) + ": " +
                     (b ? "divisor matrix differs"
                        : describe(std::get<EquitableCounterexample>(result))));
      }
      DivisorMatrix displayed;
      displayed.entries = want;
      const auto got = divisor_spectrum(displayed);
      const auto expected = displayed_divisor_spectrum(f, n);
      l.expect(got.size() == expected.size(), label(f, n) + " divisor spectrum size");
      for (std::size_t k = 0; k < std::min(got.size(), expected.size()); ++k)
        l.near(got[k], expected[k], 1e-8, label(f, n) + " divisor eigenvalue " + std::to_string(k));
    }
}

void criterion5(Ledger& l) {
  for (Family f : kFamilies)
    for (int n = 4; n <= 5; ++n) {
      const SpectrumReport r = dense_spectrum(build_family(f, n), 1e-10);
      for (double d : displayed_divisor_spectrum(f, n)) {
        const bool found = std::any_of(r.eigenvalues.begin(), r.eigenvalues.end(),
                                       [&](double x) { return std::abs(x - d) <= 1e-6; });
        l.expect(found, label(f, n) + " misses divisor eigenvalue " + std::to_string(d));
      }
    }
}

void criterion6(Ledger& l) {
  for (auto [f, n] : {std::pair{Family::AG, 5}, std::pair{Family::EAG, 4}}) {
    const SpectrumReport r = dense_spectrum(build_family(f, n), 1e-10, {.eigenvectors = true});
    const auto divisor = displayed_divisor_spectrum(f, n);
    const auto blocks = vanishing_blocks(f, n);
    int checked = 0;
    for (Eigen::Index k = 0; k < r.eigenvectors.cols(); ++k) {
      const double lambda = r.eigenvalues[static_cast<std::size_t>(k)];
      if (std::any_of(divisor.begin(), divisor.end(), [&](double d) { return std::abs(d - lambda) <= 1e-6; }))
        continue;
      ++checked;
      for (const auto& block : blocks) {
        double sum = 0;
        for (Vertex v : block) sum += r.eigenvectors(v, k);
        l.near(sum, 0, 1e-6, label(f, n) + " block sum for eigenvalue " + std::to_string(lambda));
      }
    }
    l.expect(checked > 0, label(f, n) + " has no eigenvector outside the divisor spectrum");
  }
}

void criterion7(Ledger& l) {
  const SpectrumReport ag4 = dense_spectrum(build_family(Family::AG, 4), 1e-10);
  const std::vector<double> want{4, 2, 0, -2};
  l.expect(ag4.distinct.size() == want.size(), "AG_4 distinct eigenvalue count");
  for (std::size_t k = 0; k < std::min(want.size(), ag4.distinct.size()); ++k)
    l.near(ag4.distinct[k], want[k], 1e-8, "AG_4 distinct eigenvalue");
  const SpectrumReport k3 = dense_spectrum(Graph::complete(3), 1e-10);
  l.expect(k3.eigenvalues.size() == 3, "K_3 spectrum size");
  for (std::size_t k = 0; k < 3 && k < k3.eigenvalues.size(); ++k)
    l.near(k3.eigenvalues[k], k == 0 ? 2 : -1, 1e-8, "K_3 eigenvalue");
  for (int n = 4; n <= 5; ++n) {
    const Integrality i = integrality_check(dense_spectrum(build_family(Family::CAG, n), 1e-10), 1e-8);
    l.expect(i.integral, label(Family::CAG, n) + " not integral, offset " + std::to_string(i.worst_offset));
  }
}

void criterion8(Ledger& l) {
  for (Family f : kFamilies)
    for (long long n = 4; n <= 7; ++n) {
      const CutReport cut = canonical_cut(build_family(f, static_cast<int>(n)), 1);
      long long ratio = 0;
      long long boundary = 0;
      if (f == Family::AG) {
        ratio = 2;
        boundary = factorial(n - 1);
      } else if (f == Family::EAG) {
        ratio = 2 * n - 4;
        boundary = (n - 2) * factorial(n - 1);
      } else {
        ratio = n * n - 3 * n + 2;
        boundary = (n - 1) * (n - 2) * factorial(n - 1) / 2;
      }
      l.expect(cut.ratio == Rational(ratio), label(f, static_cast<int>(n)) + " ratio " + cut.ratio.str());
      l.expect(static_cast<long long>(cut.boundary) == boundary,
               label(f, static_cast<int>(n)) + " boundary " + std::to_string(cut.boundary));
    }
}

void criterion9(Ledger& l) {
  const IsoperimetricResult ag4 = brute_force_h(build_family(Family::AG, 4));
  l.expect(Rational(1) <= ag4.h && ag4.h <= Rational(2), "h(AG_4) = " + ag4.h.str() + " outside [1, 2]");
  for (Family f : kFamilies) {
    const CayleyGraph g = build_family(f, 4);
    const IsoperimetricResult h = brute_force_h(g);
    const double mu = dense_spectrum(g, 1e-10).gap;
    const long long upper = f == Family::AG ? 2 : f == Family::EAG ? 4 : 6;
    l.expect(h.h.value() >= mu / 2 - 1e-9, label(f, 4) + " h=" + h.h.str() + " below mu/2");
    l.expect(h.h <= Rational(upper), label(f, 4) + " h=" + h.h.str() + " above the upper bound");
  }
}

void criterion10(Ledger& l) {
  for (int n = 4; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) {
      const CheckResult m = check_matchings(n, i);
      l.expect(m.pass, "matchings n=" + std::to_string(n) + " i=" + std::to_string(i) + " " + m.detail);
      for (Family f : kFamilies)
        l.expect(check_subgraph_isomorphism(f, n, i).pass,
                 "isomorphism " + label(f, n) + " i=" + std::to_string(i));
    }
    for (Family f : {Family::EAG, Family::CAG}) {
      const CheckResult d = check_edge_decomposition(f, n);
      l.expect(d.pass, "decomposition " + label(f, n) + " " + d.detail);
    }
  }
  l.expect(check_edge_decomposition(Family::EAG, 4).detail == "36 = 12 + 24", "EAG_4 edge count identity");
  l.expect(check_edge_decomposition(Family::EAG, 5).detail == "360 = 180 + 180", "EAG_5 edge count identity");
}

void criterion11(Ledger& l) {
  auto l2 = [](Family f, int n) {
    return n == 3 ? -1.0 : lambda2_iterative(build_family(f, n), 1e-8).lambda2;
  };
  for (int n = 4; n <= 6; ++n) {
    const double eag = l2(Family::EAG, n);
    const double cag = l2(Family::CAG, n);
    l.expect(eag <= l2(Family::EAG, n - 1) + l2(Family::AG, n) + 1e-6, "EAG inequality n=" + std::to_string(n));
    l.expect(cag <= eag + l2(Family::CAG, n - 1) + 1e-6, "CAG inequality n=" + std::to_string(n));
    for (Family f : {Family::EAG, Family::CAG}) {
      const CheckResult c = check_decomposition_bound(f, n, {.tol = 1e-6});
      l.expect(c.pass, "decomposition bound " + label(f, n));
    }
  }
}

void criterion12(Ledger& l) {
  const std::string args = "verify --family EAG --n 5 --seed 42 --format json";
  const std::string first = run_binary(args);
  const std::string second = run_binary(args);
  l.expect(!first.empty(), "CLI produced no output or failed");
  l.expect(first == second, "CLI outputs differ between runs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Ledger&)>>> criteria = {
      {"AG_n lambda2 = 2n-6, n=4..7 (dense cross-check n<=6)", criterion1},
      {"EAG_n lambda2 = n^2-5n+5 and gap = 2n-3, n=4..7", criterion2},
      {"CAG_n lambda2 = n(n-2)(n-4)/3, n=4..7; CAG_3 lambda2 = -1", criterion3},
      {"divisor matrices and their spectra, n=4..9", criterion4},
      {"divisor eigenvalues lift to the graph spectrum, n=4,5", criterion5},
      {"eigenvectors outside the divisor spectrum vanish on blocks (AG_5, EAG_4)", criterion6},
      {"exact spectra of AG_4 and K_3; CAG_4, CAG_5 integral", criterion7},
      {"canonical cut ratios and boundary sizes, n=4..7", criterion8},
      {"brute-force h within the spectral and closed-form bounds, n=4", criterion9},
      {"matchings, edge decompositions and block isomorphisms, n=4..6", criterion10},
      {"induction-step inequalities on solver output, n=4..6", criterion11},
      {"verify output is byte-identical across runs", criterion12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Ledger ledger;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(ledger);
    } catch (const std::exception& e) {
      ledger.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = ledger.failures.empty();
    failed += !ok;
    std::printf("%s %2zu  %-78s %7.2fs\n", ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), seconds);
    for (std::size_t m = 0; m < std::min<std::size_t>(ledger.failures.size(), 5); ++m)
      std::printf("        %s\n", ledger.failures[m].c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
