#include "quiverhh/oracle.hpp"

#include <map>

#include "quiverhh/cochain.hpp"
#include "quiverhh/errors.hpp"
#include "quiverhh/report.hpp"

namespace quiverhh {

namespace {

// Position of each basis path inside its parallel_basis(source, target) list.
std::vector<std::size_t> parallel_positions(const MonomialAlgebra& A) {
  std::vector<std::size_t> pos(A.dimension(), 0);
  const Quiver& q = A.quiver();
  for (VertexId s = 0; s < q.vertex_count(); ++s)
    for (VertexId t = 0; t < q.vertex_count(); ++t) {
      const auto& ids = A.parallel_basis(s, t);
      for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
    }
  return pos;
}

std::vector<std::size_t> nontrivial_basis(const MonomialAlgebra& A) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.dimension(); ++i)
    if (!A.basis_path(i).is_trivial()) out.push_back(i);
  return out;
}

std::map<std::vector<std::size_t>, std::size_t> chain_index(const BarChainBasis& c) {
  std::map<std::vector<std::size_t>, std::size_t> idx;
  for (std::size_t i = 0; i < c.chains.size(); ++i) idx.emplace(c.chains[i], i);
  return idx;
}

}  // namespace

BarChainBasis bar_chains(const MonomialAlgebra& A, std::size_t n, const OracleOptions& opts) {
  if (n > opts.max_degree + 1) throw DegreeTooLarge("degree " + std::to_string(n) + " exceeds the oracle guard");
  BarChainBasis c;
  c.degree = n;
  const Quiver& q = A.quiver();
  if (n == 0) {
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      c.chains.push_back({v});
      c.chain_source.push_back(v);
      c.chain_target.push_back(v);
    }
  } else {
    const auto nontrivial = nontrivial_basis(A);
    std::vector<std::vector<std::size_t>> by_target(q.vertex_count());
    for (std::size_t b : nontrivial) by_target[A.basis_path(b).target()].push_back(b);

    std::vector<std::vector<std::size_t>> layer;
    for (std::size_t b : nontrivial) layer.push_back({b});
    for (std::size_t d = 1; d < n; ++d) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& ch : layer)
        for (std::size_t b : by_target[A.basis_path(ch.back()).source()]) {
          if (next.size() >= opts.chain_cap) throw DegreeTooLarge("bar chain count exceeds the cap");
          auto ext = ch;
          ext.push_back(b);
          next.push_back(std::move(ext));
        }
      layer = std::move(next);
    }
    if (layer.size() > opts.chain_cap) throw DegreeTooLarge("bar chain count exceeds the cap");
    for (auto& ch : layer) {
      c.chain_source.push_back(A.basis_path(ch.back()).source());
      c.chain_target.push_back(A.basis_path(ch.front()).target());
      c.chains.push_back(std::move(ch));
    }
  }
  for (std::size_t i = 0; i < c.chains.size(); ++i) {
    c.offset.push_back(c.dimension);
    c.dimension += A.parallel_basis(c.chain_source[i], c.chain_target[i]).size();
  }
  return c;
}

std::size_t bar_cochain_dim(const MonomialAlgebra& A, std::size_t n, const OracleOptions& opts) {
  if (n > opts.max_degree) throw DegreeTooLarge("degree " + std::to_string(n) + " exceeds the oracle guard");
  return bar_chains(A, n, opts).dimension;
}

RationalMatrix bar_differential(const MonomialAlgebra& A, const BarChainBasis& from, const BarChainBasis& to) {
  if (to.degree != from.degree + 1) throw DimensionMismatch("bar differential between non-adjacent degrees");
  const std::size_t n = from.degree;
  const auto pos = parallel_positions(A);
  const auto idx = chain_index(from);
  RationalMatrix m(to.dimension, from.dimension);

  auto column = [&](const std::vector<std::size_t>& key, std::size_t u) {
    auto it = idx.find(key);
    if (it == idx.end()) throw DimensionMismatch("bar chain missing from basis");
    return from.offset[it->second] + pos[u];
  };
  auto outputs = [&](const std::vector<std::size_t>& key) -> const std::vector<std::size_t>& {
    const std::size_t i = idx.at(key);
    return A.parallel_basis(from.chain_source[i], from.chain_target[i]);
  };

  for (std::size_t ci = 0; ci < to.chains.size(); ++ci) {
    const auto& b = to.chains[ci];  // b_0 .. b_n
    const std::size_t row0 = to.offset[ci];
    const Rational last_sign = (n + 1) % 2 == 0 ? 1 : -1;

    // b_0 f(b_1 .. b_n)
    std::vector<std::size_t> tail = n == 0 ? std::vector<std::size_t>{A.basis_path(b[0]).source()}
                                           : std::vector<std::size_t>(b.begin() + 1, b.end());
    for (std::size_t u : outputs(tail))
      if (auto p = A.product(b[0], u)) m.add(row0 + pos[*p], column(tail, u), 1);

    // inner contractions
    for (std::size_t i = 0; i + 1 <= n; ++i) {
      auto merged = A.product(b[i], b[i + 1]);
      if (!merged) continue;
      std::vector<std::size_t> key(b.begin(), b.begin() + i);
      key.push_back(*merged);
      key.insert(key.end(), b.begin() + i + 2, b.end());
      const Rational sign = (i + 1) % 2 == 0 ? 1 : -1;
      for (std::size_t u : outputs(key)) m.add(row0 + pos[u], column(key, u), sign);
    }

    // f(b_0 .. b_{n-1}) b_n
    std::vector<std::size_t> head = n == 0 ? std::vector<std::size_t>{A.basis_path(b[0]).target()}
                                           : std::vector<std::size_t>(b.begin(), b.end() - 1);
    for (std::size_t u : outputs(head))
      if (auto p = A.product(u, b[n])) m.add(row0 + pos[*p], column(head, u), last_sign);
  }
  return m;
}

std::vector<std::size_t> bar_hh_range(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts) {
  if (max_degree > opts.max_degree)
    throw DegreeTooLarge("degree " + std::to_string(max_degree) + " exceeds the oracle guard");
  std::vector<BarChainBasis> c;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) c.push_back(bar_chains(A, n, opts));
  std::vector<RationalMatrix> d;
  std::vector<std::size_t> r;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    d.push_back(bar_differential(A, c[n], c[n + 1]));
    r.push_back(rank(d.back()));
    if (n > 0 && !(d[n] * d[n - 1]).is_zero())
      throw ComplexBroken("bar differential squares to a nonzero map in degree " + std::to_string(n));
  }
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= max_degree; ++n) dims.push_back(c[n].dimension - r[n] - (n > 0 ? r[n - 1] : 0));
  return dims;
}

std::size_t bar_hh(const MonomialAlgebra& A, std::size_t n, const OracleOptions& opts) {
  return bar_hh_range(A, n, opts).at(n);
}

LieAlgebraPresentation derivation_hh1(const MonomialAlgebra& A, const OracleOptions& opts) {
  if (A.dimension() > opts.max_algebra_dim)
    throw DegreeTooLarge("algebra dimension " + std::to_string(A.dimension()) + " exceeds the derivation oracle limit");
  const Quiver& q = A.quiver();
  const auto pos = parallel_positions(A);
  const auto nontrivial = nontrivial_basis(A);

  // Variable (p, u): coefficient of u in D(p).
  std::vector<std::size_t> var_offset(A.dimension(), 0);
  std::size_t nvars = 0;
  auto outs = [&](std::size_t p) -> const std::vector<std::size_t>& {
    const Path& path = A.basis_path(p);
    return A.parallel_basis(path.source(), path.target());
  };
  for (std::size_t p : nontrivial) {
    var_offset[p] = nvars;
    nvars += outs(p).size();
  }
  auto var = [&](std::size_t p, std::size_t u) { return var_offset[p] + pos[u]; };

  // Leibniz rule D(xy) = D(x) y + x D(y), one block of rows per composable pair.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> blocks;
  std::size_t nrows = 0;
  for (std::size_t x : nontrivial)
    for (std::size_t y : nontrivial) {
      const Path& px = A.basis_path(x);
      const Path& py = A.basis_path(y);
      if (px.source() != py.target()) continue;
      blocks.emplace_back(x, y, nrows);
      nrows += A.parallel_basis(py.source(), px.target()).size();
    }
  RationalMatrix leibniz(nrows, nvars);
  for (const auto& [x, y, row0] : blocks) {
    if (auto xy = A.product(x, y))
      for (std::size_t u : outs(*xy)) leibniz.add(row0 + pos[u], var(*xy, u), 1);
    for (std::size_t u : outs(x))
      if (auto uy = A.product(u, y)) leibniz.add(row0 + pos[*uy], var(x, u), -1);
    for (std::size_t v : outs(y))
      if (auto xv = A.product(x, v)) leibniz.add(row0 + pos[*xv], var(y, v), -1);
  }

  // ad_z for z a basis cycle at a vertex.
  std::vector<SparseVector> inner;
  for (VertexId e = 0; e < q.vertex_count(); ++e)
    for (std::size_t z : A.parallel_basis(e, e)) {
      SparseVector v;
      for (std::size_t p : nontrivial) {
        if (auto zp = A.product(z, p)) v.add(var(p, *zp), 1);
        if (auto pz = A.product(p, z)) v.add(var(p, *pz), -1);
      }
      inner.push_back(std::move(v));
    }

  SubquotientBasis sq = quotient(kernel(leibniz), span_basis(inner), nvars);

  // D(u) for a basis path u as a combination of basis ids.
  auto eval = [&](const SparseVector& D, std::size_t u) {
    SparseVector out;
    if (A.basis_path(u).is_trivial()) return out;
    for (std::size_t w : outs(u))
      if (Rational c = D.at(var(u, w)); c != 0) out.add(w, c);
    return out;
  };
  auto compose = [&](const SparseVector& D1, const SparseVector& D2) {
    SparseVector out;
    for (std::size_t p : nontrivial) {
      const SparseVector image = eval(D2, p);
      for (const auto& [u, c] : image.entries()) {
        const SparseVector next = eval(D1, u);
        for (const auto& [w, d] : next.entries()) out.add(var(p, w), c * d);
      }
    }
    return out;
  };
  BracketFn commutator = [&](const SparseVector& D1, const SparseVector& D2) {
    return compose(D1, D2) - compose(D2, D1);
  };

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sq.quotient_reps.size(); ++i) labels.push_back("D" + std::to_string(i + 1));
  return subquotient_lie(sq, commutator, std::move(labels));
}

bool OracleComparison::agree() const {
  for (const auto& d : degrees)
    if (!d.agree) return false;
  return lie_agree;
}

OracleComparison compare_unchecked(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts) {
  OracleComparison cmp;
  const auto oracle = bar_hh_range(A, max_degree, opts);
  const VanishingVerdict vanish = vanishing_verdict(A);
  cmp.vanishing_claimed = vanish.hypotheses_hold;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    DegreeComparison row;
    row.degree = n;
    row.oracle = oracle[n];
    if (n == 0)
      row.combinatorial = hh0(A).dimension();
    else if (n == 1)
      row.combinatorial = hh1(A).dimension();
    else if (vanish.hypotheses_hold)
      row.combinatorial = 0;
    row.agree = !row.combinatorial || *row.combinatorial == row.oracle;
    cmp.degrees.push_back(row);
  }
  cmp.combinatorial_lie = invariants(hh1_lie(A));
  cmp.derivation_lie = invariants(derivation_hh1(A, opts));
  cmp.lie_agree = cmp.combinatorial_lie == cmp.derivation_lie;
  return cmp;
}

OracleComparison compare(const MonomialAlgebra& A, std::size_t max_degree, const OracleOptions& opts) {
  OracleComparison cmp = compare_unchecked(A, max_degree, opts);
  if (!cmp.agree()) throw Mismatch("oracle disagrees with the combinatorial computation", to_json(cmp).dump(2));
  return cmp;
}

}  // namespace quiverhh
