#include "fixtures.hpp"

#include <iterator>

namespace tatepol::testing {

ComplexTorus square_curve() { return standard_torus(1); }

IntMatrix principal_form(std::size_t g) {
  IntMatrix E(2 * g, 2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    E(2 * k, 2 * k + 1) = -1;
    E(2 * k + 1, 2 * k) = 1;
  }
  return E;
}

IntVector random_vector(Rng& rng, std::size_t n, std::int64_t bound) {
  IntVector v(n);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

IntMatrix random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

IntMatrix random_alternating(Rng& rng, std::size_t n, std::int64_t bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = rng.uniform(-bound, bound);
      m(j, i) = -m(i, j);
    }
  return m;
}

IntMatrix filtered_unimodular(const IntMatrix& A, const IntMatrix& B, const IntMatrix& D) {
  const std::size_t r = A.rows(), n = r + D.rows();
  IntMatrix M(n, n);
  M.set_block(0, 0, A);
  M.set_block(0, r, B);
  M.set_block(r, r, D);
  return M;
}

IntMatrix random_endomorphism(Rng& rng, const ComplexTorus& t) {
  Integer k = 1;
  for (std::size_t i = 0; i < t.J().rows(); ++i)
    for (std::size_t j = 0; j < t.J().cols(); ++j) mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), t.J()(i, j).get_den_mpz_t());
  const RatMatrix f = Rational(rng.uniform(-3, 3)) * RatMatrix::identity(t.lattice_rank()) +
                      Rational(rng.uniform(-2, 2) * k) * t.J();
  return *to_integer(f);
}

AppellHumbertBundle random_small_bundle(Rng& rng, std::size_t g, FormKind kind, std::int64_t bound) {
  for (;;) {
    RandomBundleOptions opts;
    opts.kind = kind;
    opts.conjugation_steps = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(2 * g)));
    AppellHumbertBundle b = random_bundle(rng, g, opts);
    bool small = true;
    for (std::size_t i = 0; i < b.E().rows() && small; ++i)
      for (std::size_t j = 0; j < b.E().cols(); ++j)
        if (abs(b.E()(i, j)) > bound) {
          small = false;
          break;
        }
    if (small) return b;
  }
}

namespace {

IntMatrix random_filtered(Rng& rng, std::size_t r, std::size_t n_ab, const IntMatrix& D) {
  return filtered_unimodular(random_unimodular(rng, r, r + 1), random_int_matrix(rng, r, n_ab, 2), D);
}

}  // namespace

TorusFamily random_coherent_family(Rng& rng, const FamilyOptions& opts) {
  const std::size_t r = opts.toric_rank;
  const std::size_t n_ab = 2 * opts.genus;
  RandomBundleOptions bo;
  bo.kind = FormKind::ample;
  const AppellHumbertBundle base = random_bundle(rng, opts.genus, bo);

  // Node i sees the base through chart M_i : T(base) -> T(G_i).
  TorusFamily f;
  std::vector<std::string> ids;
  std::vector<IntMatrix> charts, chart_inv;
  for (std::size_t i = 0; i < opts.nodes; ++i) {
    const IntMatrix D = random_unimodular(rng, n_ab, n_ab);
    const IntMatrix Dinv = unimodular_inverse(D);
    const ComplexTorus t = make_torus(opts.genus, to_rational(D) * base.torus().J() * to_rational(Dinv));
    const AppellHumbertBundle b = pullback(check_homomorphism(Dinv, t, base.torus()), base);
    const std::string id = "n" + std::to_string(i);
    f.nodes.emplace(id, SemiabelianModel(r, b));
    ids.push_back(id);
    charts.push_back(random_filtered(rng, r, n_ab, D));
    chart_inv.push_back(unimodular_inverse(charts.back()));
  }

  // Automorphisms of the base pairing: +-I on the abelian part, anything
  // filtered on the toric part.
  auto automorphism = [&] {
    IntMatrix D = IntMatrix::identity(n_ab);
    if (rng.coin()) D = -D;
    return random_filtered(rng, r, n_ab, D);
  };
  auto connect = [&](std::size_t i, std::size_t j) {
    f.edges.push_back({ids[i], ids[j], charts[j] * automorphism() * chart_inv[i]});
  };

  for (std::size_t i = 1; i < opts.nodes; ++i) connect(i - 1, i);
  const auto last = static_cast<std::int64_t>(opts.nodes) - 1;
  for (std::size_t k = 0; k < opts.extra_edges; ++k)
    connect(static_cast<std::size_t>(rng.uniform(0, last)), static_cast<std::size_t>(rng.uniform(0, last)));
  for (std::size_t k = 0; k < opts.loops; ++k) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, last));
    connect(i, i);
  }
  return f;
}

BaseMap random_base_map(Rng& rng, const TorusFamily& f, std::size_t nodes, std::size_t edges) {
  BaseMap m;
  std::vector<std::string> targets;
  for (const auto& kv : f.nodes) targets.push_back(kv.first);
  std::map<std::string, std::vector<std::string>> fibers;
  for (std::size_t i = 0; i < nodes; ++i) {
    const std::string id = "p" + std::to_string(i);
    const auto& t = targets[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(targets.size()) - 1))];
    m.phi.emplace(id, t);
    fibers[t].push_back(id);
  }
  if (f.edges.empty()) return m;
  for (std::size_t k = 0; k < edges; ++k) {
    const auto over = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(f.edges.size()) - 1));
    const auto& s = fibers[f.edges[over].src];
    const auto& d = fibers[f.edges[over].dst];
    if (s.empty() || d.empty()) continue;
    m.edges.push_back({s[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.size()) - 1))],
                       d[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(d.size()) - 1))], over});
  }
  return m;
}

TorusFamily incoherent_family() {
  const ComplexTorus t = square_curve();
  TorusFamily f;
  f.nodes.emplace("a", SemiabelianModel(0, make_bundle(t, principal_form(1), {0, 0})));
  f.nodes.emplace("b", SemiabelianModel(0, make_bundle(t, Integer(2) * principal_form(1), {0, 0})));
  f.edges.push_back({"a", "b", IntMatrix::identity(2)});
  return f;
}

}  // namespace tatepol::testing
