// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Usage: gapcube_acceptance <path-to-gapcube-cli> <golden-dir>

#include "gapcube/counting.hpp"
#include "gapcube/cube.hpp"
#include "gapcube/enumeration.hpp"

#include "support/brute.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gapcube;

namespace {

std::string g_cli;
std::string g_golden;

// Collects mismatches; keeps the first one for the report line.
struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first;

  template <class A, class B>
  void equal(const A& expected, const B& actual, const std::string& where) {
    ++cases;
    if (expected == actual) return;
    if (failures++ == 0) {
      std::ostringstream os;
      os << where << ": expected " << expected << ", got " << actual;
      first = os.str();
    }
  }
  void check(bool ok, const std::string& where) {
    ++cases;
    if (!ok && failures++ == 0) first = where;
  }
};

std::string at(int n, int h) { return "n=" + std::to_string(n) + " h=" + std::to_string(h); }
std::string at(int n, int h, int k) { return at(n, h) + " k=" + std::to_string(k); }

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --- criteria ----------------------------------------------------------------

void tables(Tally& t) {
  const std::array<const char*, 12> args{
      "pk --h 1", "pk --h 2", "pk --h 3", "p", "F", "H", "ck --h 1", "ck --h 2", "ck --h 3", "c", "L", "M",
  };
  for (std::size_t i = 0; i < args.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    const std::string file = g_golden + (number < 10 ? "/table0" : "/table") + std::to_string(number) + ".tsv";
    const Run r = run_cli(std::string("table ") + args[i] + " --paper-layout");
    t.check(r.status == 0 && r.out == slurp(file), "table " + std::to_string(number) + " differs from " + file);
  }
}

void path_edge_convolution(Tally& t) {
  for (int h = 0; h <= 10; ++h) {
    for (int n = 0; n <= 40; ++n) t.equal(path_edges(n, h), path_edges_conv(n, h), at(n, h));
  }
}

void cycle_edge_forms(Tally& t) {
  for (int h = 0; h <= 10; ++h) {
    for (int n = h + 1; n <= 40; ++n) {
      const Nat m = cycle_edges(n, h);
      t.equal(m, cycle_edges_closed(n, h), at(n, h) + " closed form");
      t.equal(m, cycle_edges_conv(n, h), at(n, h) + " convolution");
    }
  }
}

void oracle_equivalence(Tally& t) {
  for (int h = 0; h <= 6; ++h) {
    for (int n = 0; n <= 20; ++n) {
      for (const GraphKind kind : {GraphKind::path, GraphKind::cycle}) {
        const bool path = kind == GraphKind::path;
        const std::string tag = std::string(path ? "path " : "cycle ") + at(n, h);
        const CubeGraph c = build_cube(GapGraph(kind, n, h));
        const auto profile = rank_profile(c);
        if (n <= 16) {
          for (int k = 0; k <= n + 1; ++k) {
            const auto it = profile.find(k);
            const Nat enumerated = it == profile.end() ? Nat{} : it->second;
            t.equal(path ? path_count_k(n, h, k) : cycle_count_k(n, h, k), enumerated, tag + " k=" + std::to_string(k));
          }
        }
        t.equal(path ? path_count(n, h) : cycle_count(n, h), Nat{c.vertices().size()}, tag + " vertices");
        if (path) {
          t.equal(path_edges(n, h), Nat{c.covers().size()}, tag + " covers");
        } else if (n > h) {
          t.equal(cycle_edges(n, h), Nat{c.covers().size()}, tag + " covers");
        } else {
          Nat weighted;
          for (const auto& [k, count] : profile) weighted += Nat{k} * count;
          t.equal(weighted, Nat{c.covers().size()}, tag + " covers by rank");
        }
      }
    }
  }
}

void bijection(Tally& t) {
  for (int n = 0; n <= 14; ++n) {
    for (int h = 0; h <= 4; ++h) {
      for (int k = 0; k <= n && n - h * k + h >= 0; ++k) {
        const int m = n - h * k + h;
        std::set<std::uint64_t> image;
        std::uint64_t domain = 0;
        bool all_valid = true;
        bool inverts = true;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int next) {
          if (static_cast<int>(cur.size()) == k) {
            ++domain;
            const VertexMask s = bijection_f(cur, n, h);
            image.insert(s.bits());
            all_valid = all_valid && s.size() == k && gap_check(s, h, Wrap::linear);
            inverts = inverts && bijection_f_inv(s, h) == cur;
            return;
          }
          for (int x = next; x <= m; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
          }
        };
        rec(1);
        const std::string where = at(n, h, k);
        t.equal(domain, image.size(), where + " injective");
        t.equal(binom(m, k), Nat{image.size()}, where + " image size");
        t.check(all_valid, where + " image fails the gap check");
        t.check(inverts, where + " inverse does not undo f");
      }
    }
  }
}

void t_identities(Tally& t) {
  for (int n = 0; n <= 16; ++n) {
    for (int h = 0; h <= 4; ++h) {
      const auto sets = enumerate(GapGraph(GraphKind::path, n, h));
      // filtered[k][i]: enumerated k-sets containing v_i.
      std::vector<std::vector<std::uint64_t>> filtered(static_cast<std::size_t>(n) + 2,
                                                       std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
      for (const auto& s : sets) {
        for (int i : s.indices()) ++filtered[static_cast<std::size_t>(s.size())][static_cast<std::size_t>(i)];
      }
      Nat total;
      for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= n; ++i) {
          const Nat tki = t_count(n, h, k, i);
          t.equal(Nat{filtered[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]}, tki,
                  at(n, h, k) + " i=" + std::to_string(i));
          total += tki;
        }
      }
      t.equal(path_edges(n, h), total, at(n, h) + " double sum");
    }
  }
}

void substrings(Tally& t) {
  for (int n = 0; n <= 14; ++n) {
    for (int h = 1; h <= 5; ++h) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const VertexMask s(n, b);
        for (const Wrap w : {Wrap::linear, Wrap::circular}) {
          ++t.cases;
          if (gap_check(s, h, w) != avoids_substrings(s, h, w) && t.failures++ == 0) {
            t.first = s.str() + " h=" + std::to_string(h) + (w == Wrap::linear ? " linear" : " circular");
          }
        }
      }
    }
  }
}

void sequence_bridges(Tally& t) {
  for (int h = 0; h <= 10; ++h) {
    for (int i = 1; i <= 40; ++i) {
      t.equal(path_count_clamped(i - h - 1, h), h_fibonacci(h, i), "F " + at(i, h));
      if (i > h + 1) t.equal(cycle_count(i - 1, h), h_lucas(h, i), "L " + at(i, h));
      if (i > h) {
        t.equal(h_fibonacci(h, i) + Nat{h + 1} * h_fibonacci(h, i - h), h_lucas(h, i + 1), "L(n+1) " + at(i, h));
      }
      if (h >= 2) {
        t.equal(h_fibonacci(h, i), extended_fib(h, i), "extended F " + at(i, h));
        t.equal(h_lucas(h, i).value(), extended_lucas(h, i), "extended L " + at(i, h));
      }
    }
  }
}

void classical(Tally& t) {
  for (int n = 0; n <= 40; ++n) {
    t.equal(Nat{brute::fib(n + 2)}, path_count(n, 1), "p " + std::to_string(n));
    if (n > 1) {
      t.equal(Nat{brute::lucas(n)}, cycle_count(n, 1), "c " + std::to_string(n));
      t.equal(Nat{static_cast<std::uint64_t>(n) * brute::fib(n - 1)}, cycle_edges(n, 1), "M " + std::to_string(n));
    }
    std::uint64_t conv = 0;
    for (int i = 1; i <= n; ++i) conv += brute::fib(i) * brute::fib(n - i + 1);
    t.equal(Nat{conv}, path_edges(n, 1), "H " + std::to_string(n));
    t.equal(Nat{std::uint64_t{1} << n}, path_count(n, 0), "2^n at n=" + std::to_string(n));
    t.equal(Nat{n == 0 ? 0 : static_cast<std::uint64_t>(n) << (n - 1)}, path_edges(n, 0),
            "n 2^(n-1) at n=" + std::to_string(n));
  }
}

void mutation(Tally& t) {
  const Run healthy = run_cli("verify");
  t.check(healthy.status == 0, "healthy verify exited " + std::to_string(healthy.status));
  struct Expect {
    const char* fault;
    std::vector<std::string> must_fail;
  };
  const std::vector<Expect> expectations{
      {"fibonacci-seed", {"path-edges-convolution", "fibonacci-path-bridge"}},
      {"lucas-seed", {"cycle-edges-convolution", "lucas-fibonacci-relation"}},
      {"binomial-negative-top", {"path-k-vanishing", "path-k-oracle"}},
  };
  for (const auto& e : expectations) {
    const Run r = run_cli(std::string("verify --inject-fault ") + e.fault);
    t.check(r.status == 1, std::string(e.fault) + ": verify exited " + std::to_string(r.status));
    for (const auto& id : e.must_fail) {
      t.check(r.out.find(id + "\tFAIL") != std::string::npos, std::string(e.fault) + " did not fail " + id);
    }
  }
}

struct Criterion {
  int number;
  const char* title;
  double limit_s;  // 0 = no limit
  void (*body)(Tally&);
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gapcube_acceptance <gapcube-cli> <golden-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_golden = argv[2];

  const std::array<Criterion, 10> criteria{{
      {1, "table reproduction, tables 1-12 byte-identical", 5.0, tables},
      {2, "path edges equal the Fibonacci self-convolution, n<=40, h<=10", 1.0, path_edge_convolution},
      {3, "cycle edges: sum = n F(n-h) = (F*L)(n-h), h<n<=40, h<=10", 1.0, cycle_edge_forms},
      {4, "enumeration and cube counts equal closed forms, n<=20, h<=6", 60.0, oracle_equivalence},
      {5, "bijection f injective onto independent k-sets, n<=14, h<=4", 30.0, bijection},
      {6, "T(k,i) matches filtered enumeration and sums to H(n), n<=16, h<=4", 30.0, t_identities},
      {7, "gap check equals forbidden-substring check, n<=14, 1<=h<=5", 30.0, substrings},
      {8, "sequence bridges and extended agreement, n<=40, h<=10", 1.0, sequence_bridges},
      {9, "classical Fibonacci, Lucas and hypercube specializations, n<=40", 1.0, classical},
      {10, "each base-case mutation makes verify exit nonzero", 0.0, mutation},
  }};

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      ++t.failures;
      t.first = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_s > 0 && secs >= c.limit_s;
    const bool pass = t.failures == 0 && !slow;
    if (!pass) ++failed;

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " [" << t.cases
         << " cases, " << secs << " s";
    if (c.limit_s > 0) line << " of " << c.limit_s << " s";
    line << "]";
    if (t.failures) line << " " << t.failures << " mismatches, first: " << t.first;
    if (slow) line << " time limit exceeded";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all 10 criteria pass" : std::to_string(failed) + " of 10 criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
