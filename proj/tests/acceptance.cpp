// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "opcat/free_monoidal.hpp"
#include "support.hpp"

using namespace opcat;

namespace {

constexpr double kDecSeconds = 1.0;        // per fixture
constexpr double kGrothSeconds = 5.0;      // per (base, operad) pair
constexpr double kAdjunctionSeconds = 10.0;  // per (X, M) pair
constexpr double kSuiteSeconds = 120.0;
constexpr int kRandomOperads = 100;
constexpr int kRandomTermPairs = 50;
constexpr int kMinMutants = 20;
constexpr int kMinGrothPairs = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::ostringstream why;
  bool ok = true;
  void fail(const std::string& s) {
    if (ok) why << s;
    ok = false;
  }
};

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<CategoricalOperad> random_operads() {
  std::mt19937 rng(20261019);
  std::vector<CategoricalOperad> v;
  for (int i = 0; i < kRandomOperads; ++i) v.push_back(support::random_discrete_operad(rng));
  return v;
}

// 1 --------------------------------------------------------------------------------------

void dec_nerve(Criterion& c) {
  // level k of dec N C is level k+1 of N C; closed forms for these fixtures:
  // terminal 1, B(Z/m) m^(k+1), [1] k+3, and the 2-cell category 2^(k+2)
  // (a simplex there is a 0/1 split plus a monotone f<g labelling of the a x b grid).
  struct Case {
    std::string name;
    Finite2Category C;
    std::function<long long(int)> count;
  };
  const std::vector<Case> cases = {
      {"terminal", terminal_2category(), [](int) { return 1LL; }},
      {"deloop Z/2", deloop(cyclic_moncat(2)), [](int k) { return ipow(2, k + 1); }},
      {"deloop Z/3", deloop(cyclic_moncat(3)), [](int k) { return ipow(3, k + 1); }},
      {"walking arrow", walking_arrow(), [](int k) { return k + 3LL; }},
      {"K2cat", two_cell_2category(), [](int k) { return ipow(2, k + 2); }},
  };
  for (const auto& cs : cases) {
    const auto t0 = Clock::now();
    const auto R = dec_nerve_comparison(cs.C);
    const double dt = seconds_since(t0);
    if (!R.iso.certified) c.fail(cs.name + ": not certified");
    for (int k = 0; k <= 3; ++k) {
      if (R.dec->size(k) != cs.count(k) || R.ND.X.size(k) != cs.count(k))
        c.fail(cs.name + ": level " + std::to_string(k) + " count " + std::to_string(R.dec->size(k)) + "/" +
               std::to_string(R.ND.X.size(k)) + " expected " + std::to_string(cs.count(k)));
    }
    if (dt > kDecSeconds) c.fail(cs.name + ": too slow");
  }
  c.why << cases.size() << " fixtures";
}

// 2 --------------------------------------------------------------------------------------

void operadic_validity(Criterion& c) {
  for (const auto& [n, O] : support::operadic_fixtures())
    if (!validate_operadic(O).ok()) c.fail(n + " invalid");
  const auto mutants = support::operadic_mutants();
  std::set<std::string> items;
  for (const auto& m : mutants) {
    const auto e = support::check_mutant(m);
    if (!e.empty()) c.fail(e);
    items.insert(m.item);
  }
  if (static_cast<int>(mutants.size()) < kMinMutants) c.fail("too few mutants");
  if (items.size() != 9) c.fail("not every item exercised");
  c.why << mutants.size() << " mutants over " << items.size() << " items";
}

// 3 --------------------------------------------------------------------------------------

void grothendieck_validity(Criterion& c) {
  const auto corpus = support::operad_corpus();
  for (const auto& cs : corpus) {
    const auto t0 = Clock::now();
    const auto G = grothendieck(cs.operad.base, cs.operad);
    if (!validate_operadic(*G.total).ok()) c.fail(cs.name + ": total invalid");
    if (!validate_operadic_functor(G.projection).ok()) c.fail(cs.name + ": projection invalid");
    const auto F = canonical_fibration(G);
    if (!F.report.ok()) c.fail(cs.name + ": not a split fibration\n" + F.report.str());
    if (seconds_since(t0) > kGrothSeconds) c.fail(cs.name + ": too slow");
  }
  const auto P = operad_from_moncat(cyclic_moncat(2));
  if (!(*grothendieck(P.base, P).total == para(cyclic_moncat(2)))) c.fail("total over odot differs from para");
  if (static_cast<int>(corpus.size()) < kMinGrothPairs) c.fail("too few pairs");
  c.why << corpus.size() << " pairs";
}

// 4, 5, 6 --------------------------------------------------------------------------------

void round_trips(Criterion& c, const std::vector<CategoricalOperad>& rnd) {
  int n = 0;
  auto run = [&](const std::string& name, const CategoricalOperad& P) {
    ++n;
    if (!roundtrip_operad(P.base, P).certified) c.fail(name + ": operad round trip");
    if (!roundtrip_fibration(canonical_fibration(grothendieck(P.base, P))).certified)
      c.fail(name + ": fibration round trip");
  };
  for (const auto& cs : support::operad_corpus()) run(cs.name, cs.operad);
  for (std::size_t i = 0; i < rnd.size(); ++i) run("random " + std::to_string(i), rnd[i]);
  c.why << n << " operads";
}

void quasibijections(Criterion& c, const std::vector<CategoricalOperad>& rnd) {
  int n = 0;
  auto run = [&](const std::string& name, const CategoricalOperad& P) {
    ++n;
    if (!quasibijection_mismatches(grothendieck(P.base, P)).empty()) c.fail(name);
  };
  for (const auto& cs : support::operad_corpus()) run(cs.name, cs.operad);
  for (std::size_t i = 0; i < rnd.size(); ++i) run("random " + std::to_string(i), rnd[i]);
  c.why << n << " totals";
}

void components(Criterion& c, const std::vector<CategoricalOperad>& rnd) {
  int n = 0;
  auto run = [&](const std::string& name, const CategoricalOperad& P) {
    ++n;
    const auto F = canonical_fibration(grothendieck(P.base, P));
    if (!pi0_iso_check(F)) c.fail(name + ": pi0");
    if (!unique_trivial_check(F)) c.fail(name + ": unique trivial");
  };
  for (const auto& cs : support::operad_corpus()) run(cs.name, cs.operad);
  for (std::size_t i = 0; i < rnd.size(); ++i) run("random " + std::to_string(i), rnd[i]);
  c.why << n << " fibrations";
}

// 7 --------------------------------------------------------------------------------------

void adjunction(Criterion& c) {
  const std::vector<std::pair<std::string, TruncatedSimplicialSet>> xs = {
      {"D0", standard_simplex(0, 3)},
      {"D1", standard_simplex(1, 3)},
      {"D2", standard_simplex(2, 3)},
      {"D3", standard_simplex(3, 3)},
      {"tr3 N(WA)", truncate(duskin_nerve(walking_arrow()), 3)},
      {"tr3 Bq2", truncate(to_simplicial(bouquets(2)), 3)}};
  const std::vector<std::pair<std::string, StrictMonCat>> ms = {
      {"trivial", trivial_moncat()}, {"Z2", cyclic_moncat(2)}, {"Z3", cyclic_moncat(3)}, {"poset", poset_moncat()}};
  int n = 0;
  for (const auto& [xn, X] : xs)
    for (const auto& [mn, M] : ms) {
      const auto t0 = Clock::now();
      const auto cert = adjunction_check(X, M);
      ++n;
      if (!cert.certified || cert.maps != cert.assignments) c.fail(xn + " x " + mn + "\n" + cert.report.str());
      if (seconds_since(t0) > kAdjunctionSeconds) c.fail(xn + " x " + mn + ": too slow");
    }
  const std::vector<std::size_t> expected = {2, 4, 8};
  for (int k = 1; k <= 3; ++k)
    if (hom_moncat(phi0(k), cyclic_moncat(2)).size() != expected[k - 1])
      c.fail("hom(Phi0[" + std::to_string(k) + "], Z2)");
  c.why << n << " pairs";
}

// 8 --------------------------------------------------------------------------------------

void word_problem(Criterion& c) {
  enum { f01, f02, f03, f12, f13, f23 };
  enum { a012, a013, a023, a123, sigma };
  const auto P = phi0(3);
  auto g = [&](int i) { return generator_term(P, i); };
  const Term L = layers_term(P, P.relations[0].left), R = layers_term(P, P.relations[0].right), S = g(sigma);
  auto eq = [&](const Term& a, const Term& b) { return presentation_equal(P, a, b).outcome == Equality::equal; };
  if (!eq(L, S) || !eq(S, R) || !eq(L, R)) c.fail("L = sigma = R");

  const Term top = tensor(tensor(g(a123), identity_term({f01, f02, f23, f02})), g(sigma));
  const Term bottom = tensor(tensor(tensor(g(a013), identity_term({f02})), g(a023)), identity_term({f03}));
  const Term normal = tensor(tensor(tensor(g(sigma), identity_term({f02})), g(a023)), g(sigma));
  if (!eq(compose(P, top, bottom), normal)) c.fail("composition figure");

  std::mt19937 rng(8);
  const std::vector<Term> shapes = {S, L, R};
  std::uniform_int_distribution<int> pick(0, 2), len(1, 3);
  auto random_term = [&](std::size_t n) {
    Term t;
    for (std::size_t i = 0; i < n; ++i) t = tensor(t, shapes[pick(rng)]);
    return t;
  };
  const Term pre = identity_term({f23, f12, f01});
  for (int i = 0; i < kRandomTermPairs; ++i) {
    const std::size_t n = len(rng);
    const Term a = random_term(n), b = random_term(n), d = random_term(len(rng));
    const auto ab = presentation_equal(P, a, b);
    if (ab.outcome == Equality::undecided) c.fail("pair " + std::to_string(i) + " undecided");
    if (ab.outcome != Equality::equal) c.fail("pair " + std::to_string(i) + " not equal");
    if (presentation_equal(P, b, a).outcome != ab.outcome) c.fail("symmetry");
    if (!eq(a, a)) c.fail("reflexivity");
    if (!eq(tensor(a, d), tensor(b, d)) || !eq(tensor(d, a), tensor(d, b))) c.fail("tensor congruence");
    if (n == 1 && !eq(compose(P, pre, a), compose(P, pre, b))) c.fail("composition congruence");
    if (d.size() == a.size() && eq(a, b) && eq(b, d) && !eq(a, d)) c.fail("transitivity");
  }
  c.why << kRandomTermPairs << " random pairs";
}

}  // namespace

int main() {
  const auto start = Clock::now();
  bool all = true;
  auto report = [&](int n, const std::string& title, const std::function<void(Criterion&)>& body) {
    Criterion c;
    const auto t0 = Clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    all &= c.ok;
    std::printf("%s %d %s (%s; %.2fs)\n", c.ok ? "PASS" : "FAIL", n, title.c_str(), c.why.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  };
  const auto rnd = random_operads();
  report(1, "dec of the nerve is the nerve of the lax slice", dec_nerve);
  report(2, "operadic validation and mutants", operadic_validity);
  report(3, "Grothendieck construction and split fibrations", grothendieck_validity);
  report(4, "operad and fibration round trips", [&](Criterion& c) { round_trips(c, rnd); });
  report(5, "quasibijections of the total are (quasibijection, unit, -)",
         [&](Criterion& c) { quasibijections(c, rnd); });
  report(6, "pi0 isomorphism and unique trivial cells", [&](Criterion& c) { components(c, rnd); });
  report(7, "free monoidal adjunction", adjunction);
  report(8, "word problem", word_problem);
  report(9, "whole run within budget", [&](Criterion& c) {
    const double t = seconds_since(start);
    if (t > kSuiteSeconds) c.fail("over budget");
    c.why << "limit " << kSuiteSeconds << "s";
  });
  return all ? 0 : 1;
}
