#include <catch_amalgamated.hpp>

#include <random>

#include "walker/expr/eval.hpp"
#include "walker/expr/render.hpp"
#include "walker/liealg/adjoint.hpp"
#include "walker/liealg/algebra.hpp"
#include "walker/liealg/replay.hpp"
#include "walker/liealg/subalgebra.hpp"
#include "walker/liealg/vector_field.hpp"

using namespace walker;

namespace {

const VectorField& X(int i) { return symmetry_basis()[i - 1]; }

bool same_field(const VectorField& v, const VectorField& w) {
  for (std::size_t k = 0; k < 5; ++k)
    if (is_zero(v.comp[k] - w.comp[k]).verdict != Verdict::ZeroSymbolic) return false;
  return true;
}

VectorField zero_field() {
  VectorField z;
  for (auto& c : z.comp) c = Expr(0);
  return z;
}

// Hand-derived bracket table, 1-based: [X_j, X_k] for j < k.
RVector hand_bracket(int j, int k) {
  RVector r(7, Rational(0));
  auto set = [&](int i, long v) { r[i - 1] = v; };
  if (j == 1 && k == 3) set(1, 1);
  if (j == 1 && k == 4) set(2, 1);
  if (j == 2 && k == 5) set(1, 1);
  if (j == 2 && k == 6) set(2, 1);
  if (j == 3 && k == 4) set(4, 1);
  if (j == 3 && k == 5) set(5, -1);
  if (j == 4 && k == 5) {
    set(3, 1);
    set(6, -1);
    set(7, 2);
  }
  if (j == 4 && k == 6) set(4, 1);
  if (j == 5 && k == 6) set(5, -1);
  return r;
}

CoeffVector G(const std::string& s) { return parse_generator(s); }

bool coeffs_equal(const CoeffVector& u, const CoeffVector& v) {
  for (std::size_t i = 0; i < 7; ++i)
    if (is_zero(u[i] - v[i]).verdict != Verdict::ZeroSymbolic) return false;
  return true;
}

}  // namespace

TEST_CASE("bracket of generators, worked examples") {
  CHECK(same_field(bracket(X(1), X(7)), zero_field()));
  CHECK(same_field(bracket(X(1), X(4)), X(2)));
  CHECK(same_field(bracket(X(3), X(4)), X(4)));
  CHECK_FALSE(same_field(bracket(X(3), X(4)), X(3)));
}

TEST_CASE("bracket is antisymmetric and obeys the coefficient rule on general fields") {
  const Expr x = sym::x(), t = sym::t(), a = sym::a();
  VectorField v, w;
  v.comp = {x * t, pow(a, 2), Expr(0), t, x + a};
  w.comp = {Expr(1), x, a * t, Expr(0), Expr(3)};
  VectorField vw = bracket(v, w), wv = bracket(w, v);
  for (std::size_t k = 0; k < 5; ++k) CHECK(is_zero(vw.comp[k] + wv.comp[k]).zero());
  // xi^x component: v(1) - w(x t) = -(1*t + x*x)
  CHECK(is_zero(vw.comp[0] + t + pow(x, 2)).verdict == Verdict::ZeroSymbolic);
}

TEST_CASE("structure constants match the hand table") {
  const auto& sc = symmetry_algebra();
  for (int j = 1; j <= 7; ++j)
    for (int k = j + 1; k <= 7; ++k) {
      RVector want = hand_bracket(j, k);
      for (int i = 1; i <= 7; ++i) {
        INFO("C^" << i << "_{" << j << k << "}");
        CHECK(sc(i - 1, j - 1, k - 1) == want[i - 1]);
        CHECK(sc(i - 1, k - 1, j - 1) == -want[i - 1]);
      }
    }
  CHECK(sc(1, 0, 3) == 1);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(sc(i, j, j) == 0);
}

TEST_CASE("every basis bracket recombines from the structure constants") {
  const auto& sc = symmetry_algebra();
  for (int j = 1; j <= 7; ++j)
    for (int k = 1; k <= 7; ++k) {
      VectorField rhs = zero_field();
      for (int i = 1; i <= 7; ++i) rhs = rhs + Expr(sc(i - 1, j - 1, k - 1)) * X(i);
      INFO("[X" << j << ", X" << k << "]");
      CHECK(same_field(bracket(X(j), X(k)), rhs));
    }
}

TEST_CASE("Jacobi identity holds exactly") {
  CHECK(jacobi_failures() == 0);
  // field-level check on a few triples, independent of the constants
  for (auto [i, j, k] : {std::tuple{3, 4, 5}, std::tuple{4, 5, 6}, std::tuple{1, 4, 5}, std::tuple{2, 5, 6}}) {
    VectorField s = bracket(X(i), bracket(X(j), X(k))) + bracket(X(j), bracket(X(k), X(i))) +
                    bracket(X(k), bracket(X(i), X(j)));
    CHECK(s.is_zero_field());
  }
}

TEST_CASE("decomposition rejects fields outside the span") {
  VectorField v;
  v.comp = {pow(sym::x(), 2), Expr(0), Expr(0), Expr(0), Expr(0)};
  CHECK_FALSE(decompose(v, symmetry_basis()).has_value());
  auto basis = symmetry_basis();
  basis[2] = v;
  CHECK_THROWS_AS(structure_constants(basis), NotClosed);
  auto d = decompose(X(4) + Expr(3) * X(2), symmetry_basis());
  REQUIRE(d.has_value());
  CHECK((*d)[1] == 3);
  CHECK((*d)[3] == 1);
}

TEST_CASE("generator text parsing") {
  CoeffVector v = G("X3 + 2*X6 - X7");
  CHECK(v[2] == Expr(1));
  CHECK(v[5] == Expr(2));
  CHECK(v[6] == Expr(-1));
  CoeffVector w = G("eps*X2 + X5");
  CHECK(w[1] == param("eps"));
  CHECK(render_generator(v) == "X3 + 2*X6 - X7");
  CHECK(render_generator(w) == "eps*X2 + X5");
  CHECK(coeffs_equal(G(render_generator(G("X3 + alpha*X6 + beta*X7"))), G("X3 + alpha*X6 + beta*X7")));
  CHECK(render_generator(G("-X5 + (1/2)*X6")) == "-X5 + 1/2*X6");
  CHECK_THROWS_AS(G("X1*X2"), ParseError);
  CHECK_THROWS_AS(G("X1 + 1"), ParseError);
  CHECK_THROWS_AS(G("x*X1"), ParseError);
  CHECK_THROWS_AS(G("0*X1"), ParseError);
}

TEST_CASE("adjoint action, worked examples") {
  const Expr s = param("s");
  CoeffVector y = adjoint_apply(0, s, G("X3"));
  CHECK(coeffs_equal(y, lin_comb(Expr(1), G("X3"), -s, G("X1"))));
  for (std::size_t i = 0; i < 7; ++i) {
    EMatrix m = adjoint_matrix(i, Expr(0));
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c) CHECK(is_zero(m[r][c] - Expr(r == c ? 1 : 0)).zero());
  }
  // numeric cross-check of the exact matrices
  for (auto sign : {AdjointSign::Minus, AdjointSign::Plus})
    for (std::size_t i = 0; i < 7; ++i) {
      auto exact = eval_matrix(adjoint_matrix(i, s, sign), {{"s", 0.7}});
      auto num = adjoint_matrix_numeric(i, 0.7, sign);
      CHECK((exact - num).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("ad spectra: nilpotent or integer diagonalizable") {
  for (std::size_t i : {0u, 1u, 3u, 4u, 6u}) CHECK(ad_nilpotent(i));
  for (std::size_t i : {2u, 5u}) {
    CHECK_FALSE(ad_nilpotent(i));
    auto ev = rational_roots(charpoly(ad_matrix(i)));
    CHECK(ev == std::vector<Rational>{-1, 0, 1});
  }
}

TEST_CASE("adjoint group law") {
  const Expr s = param("s"), sp = param("sp");
  for (std::size_t i = 0; i < 7; ++i) {
    if (!ad_nilpotent(i)) continue;
    EMatrix lhs = emul(adjoint_matrix(i, s), adjoint_matrix(i, sp));
    EMatrix rhs = adjoint_matrix(i, s + sp);
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c) CHECK(is_zero(lhs[r][c] - rhs[r][c]).verdict == Verdict::ZeroSymbolic);
  }
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2, 2);
  for (std::size_t i = 0; i < 7; ++i)
    for (int n = 0; n < 10; ++n) {
      double a = u(rng), b = u(rng);
      auto lhs = adjoint_matrix_numeric(i, a) * adjoint_matrix_numeric(i, b);
      auto rhs = adjoint_matrix_numeric(i, a + b);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      auto ex = eval_matrix(emul(adjoint_matrix(i, s), adjoint_matrix(i, sp)), {{"s", a}, {"sp", b}});
      CHECK((ex - rhs).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("adjoint derivative at the identity is -ad") {
  const Expr s = param("s");
  Substitution at0;
  at0.bind(s, Expr(0));
  for (std::size_t i = 0; i < 7; ++i) {
    EMatrix m = adjoint_matrix(i, s);
    RMatrix ad = ad_matrix(i);
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c) CHECK(is_zero(at0(partial(m[r][c], s)) + Expr(ad[r][c])).zero());
  }
}

TEST_CASE("subalgebra closure, worked examples") {
  auto r = subalgebra_closed(make_subalgebra({"X1", "X3 + alpha*X6 + beta*X7"}));
  REQUIRE(r.closed);
  CHECK(r.branches.front().lambda == Expr(1));
  CHECK(r.branches.front().mu == Expr(0));
  auto e = subalgebra_closed(make_subalgebra({"X1", "X4"}));
  CHECK_FALSE(e.closed);
  CHECK(subalgebra_closed(make_subalgebra({"X7"})).closed);
  CHECK_FALSE(subalgebra_closed(make_subalgebra({"X1", "2*X1"})).closed);
  // sign parameters: eps^2 = 1 is needed for closure here
  auto a11 = subalgebra_closed(make_subalgebra({"X3 + eps*X4", "eps*X5 + X6 - 2*X7"}));
  CHECK(a11.closed);
  // sign-or-zero parameter splits three ways
  auto z = subalgebra_closed(make_subalgebra({"X1", "X3 + epz*X5 + X6 + alpha*X7"}));
  CHECK(z.closed);
  CHECK(z.branches.size() == 3);
}

TEST_CASE("closure is invariant under change of basis of the span") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::pair<std::string, std::string>> pairs{
      {"X1", "X3 + alpha*X6 + beta*X7"}, {"X2", "X1 + X6 + alpha*X7"}, {"X5", "X3 + alpha*X6 + beta*X7"},
      {"X1", "X4"},                      {"X3", "X5 + X2"},             {"eps*X2 + X5", "X3 + 1/2*X6 + alpha*X7"}};
  for (const auto& [p, q] : pairs) {
    bool base = subalgebra_closed(make_subalgebra({p, q})).closed;
    for (int n = 0; n < 5; ++n) {
      int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
      if (a * e - b * c == 0) continue;
      Subalgebra h;
      CoeffVector g1 = G(p), g2 = G(q);
      h.gens = {lin_comb(Expr(a), g1, Expr(b), g2), lin_comb(Expr(c), g1, Expr(e), g2)};
      h.params = make_subalgebra({p, q}).params;
      INFO(p << " | " << q);
      CHECK(subalgebra_closed(h).closed == base);
    }
  }
}

TEST_CASE("normalizer equations") {
  auto x7 = normalizer_solve(*rational_coeffs(G("X7")));
  REQUIRE(x7.branches.size() == 1);
  CHECK(x7.branches[0].mu == 0);
  CHECK(x7.branches[0].basis.size() == 7);  // any Y, lambda = 0
  for (const auto& v : x7.branches[0].basis) CHECK(v[7] == 0);

  for (const char* text : {"X1", "X3", "X4 + X5", "X2 + X3 + X4"}) {
    RVector x = *rational_coeffs(G(text));
    auto sol = normalizer_solve(x);
    CHECK(normalizer_admits(sol, x));
  }

  auto x1 = normalizer_solve(*rational_coeffs(G("X1")));
  CHECK(x1.complete);
  CHECK(normalizer_admits(x1, *rational_coeffs(G("X3 + 5*X6"))));
  CHECK_FALSE(normalizer_admits(x1, *rational_coeffs(G("X4 + X5 + X7"))));
  CHECK_FALSE(normalizer_admits(x1, *rational_coeffs(G("X4"))));
  // every solution has no X4 component
  for (const auto& br : x1.branches)
    for (const auto& v : br.basis) CHECK(v[3] == 0);
}

TEST_CASE("normalizer solutions agree with closure") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-1, 1);
  for (const char* text : {"X1", "X2", "X3", "X6", "X3 + X6"}) {
    RVector x = *rational_coeffs(G(text));
    auto sol = normalizer_solve(x);
    for (int n = 0; n < 30; ++n) {
      RVector y(7);
      for (auto& c : y) c = d(rng);
      Subalgebra h;
      h.gens = {to_coeffs(x), to_coeffs(y)};
      auto cl = subalgebra_closed(h);
      bool dependent = !cl.closed && cl.branches[0].detail.find("dependent") != std::string::npos;
      if (dependent) continue;
      INFO(text << " with " << render_generator(to_coeffs(y)));
      CHECK(cl.closed == normalizer_admits(sol, y));
    }
  }
}

TEST_CASE("normalization replay next to X1") {
  auto rep = replay_all();
  CHECK(rep.pass);
  CHECK(rep.switched);
  CHECK(rep.sign == AdjointSign::Plus);
  bool f_failed_first = false;
  for (const auto& o : rep.first_attempt)
    if (o.id == "f") f_failed_first = !o.pass;
  CHECK(f_failed_first);
  for (const auto& o : rep.outcomes) {
    INFO(o.id << ": " << o.detail);
    CHECK(o.pass);
  }
}

TEST_CASE("replayed normal forms close with X1") {
  for (const auto& rc : x1_normalization_cases()) {
    auto o = replay(rc, AdjointSign::Plus);
    Subalgebra h;
    CoeffVector y = o.result;
    y[0] = Expr(0);
    h.gens = {unit(0), y};
    for (const char* p : {"b2", "b3", "b5", "b6", "b7", "q5"}) h.params.push_back(p);
    INFO(rc.id);
    CHECK(subalgebra_closed(h).closed);
  }
}
