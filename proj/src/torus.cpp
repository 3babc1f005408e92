#include "weylzeta/torus.hpp"

#include "weylzeta/strips.hpp"

#include <deque>

namespace weylzeta {

namespace {

// Gauss-Jordan inverse over Q; the finite Cartan matrix is always invertible
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& a)
{
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = Rational(static_cast<long>(a[i][j]));
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0)
      ++pivot;
    if (pivot == n)
      throw std::logic_error("finite Cartan matrix is singular");
    std::swap(m[col], m[pivot]);
    const Rational p = m[col][col];
    for (auto& x : m[col])
      x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0)
        continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        m[r][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = m[i][n + j];
  return inv;
}

} // namespace

std::size_t TorusQuotient::KeyHash::operator()(const Key& k) const
{
  std::size_t h = 0;
  for (auto x : k.finite)
    h = h * 1000003u + static_cast<std::size_t>(x + 7);
  for (auto x : k.residue)
    h = h * 1000003u + static_cast<std::size_t>(x);
  return h;
}

TorusQuotient::TorusQuotient(const CoxeterSystem& system, int k)
: system_(system), k_(k), n_(system.rank() - 1)
{
  if (!system.affine())
    throw std::invalid_argument("the torus quotient needs an affine system, not " + system.type_tag());
  if (k < 2)
    throw std::invalid_argument("torus scale must be at least 2");
  // the affine node is last and has coefficient 1 in delta
  if (system.null_root().back() != 1)
    throw std::invalid_argument("unexpected null root for " + system.type_tag());

  IntMatrix finite(n_, std::vector<std::int64_t>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      finite[i][j] = system.cartan()[i][j];
  cartan_inverse_ = rational_inverse(finite);

  // breadth-first search over cosets, right multiplying by generators
  const std::size_t r = system.rank();
  reps_.push_back(system.identity());
  index_.emplace(key(reps_[0]), 0);
  generator_perm_.assign(r, {});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < r; ++s) {
      ElementMatrix next = system.multiply(reps_[i], system.generator(s));
      auto [it, fresh] = index_.emplace(key(next), reps_.size());
      if (fresh) {
        reps_.push_back(std::move(next));
        queue.push_back(it->second);
      }
      auto& perm = generator_perm_[s];
      if (perm.size() <= i)
        perm.resize(i + 1, 0);
      perm[i] = it->second;
    }
  }
  for (auto& perm : generator_perm_)
    perm.resize(reps_.size(), 0);
  check_free_action();
}

void TorusQuotient::split(const ElementMatrix& m, std::vector<std::int64_t>& u, std::vector<std::int64_t>& c) const
{
  const std::size_t r = system_.rank();
  const auto& delta = system_.null_root();
  u.assign(n_ * n_, 0);
  c.assign(n_, 0);
  // column j of m is w(alpha_j); rewrite x = sum x_i alpha_i as
  // sum_{i<n} (x_i - x_n delta_i) alpha_i + x_n delta
  for (std::size_t j = 0; j < n_; ++j) {
    const std::int64_t xn = m[(r - 1) * r + j];
    for (std::size_t i = 0; i < n_; ++i)
      u[i * n_ + j] = m[i * r + j] - xn * delta[i];
    c[j] = xn;
  }
}

std::vector<Integer> TorusQuotient::lattice_coords(const std::vector<std::int64_t>& c) const
{
  std::vector<Integer> out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < n_; ++i)
      acc += Rational(static_cast<long>(c[i])) * cartan_inverse_[i][j];
    if (!is_integral(acc))
      throw std::logic_error("translation part outside the coroot lattice");
    out[j] = acc.get_num();
  }
  return out;
}

TorusQuotient::Key TorusQuotient::key(const ElementMatrix& m) const
{
  Key out;
  split(m, out.finite, out.residue);
  const std::vector<Integer> coords = lattice_coords(out.residue);
  const Integer kk(k_);
  for (std::size_t j = 0; j < n_; ++j) {
    Integer res;
    mpz_fdiv_r(res.get_mpz_t(), coords[j].get_mpz_t(), kk.get_mpz_t());
    out.residue[j] = res.get_si();
  }
  return out;
}

bool TorusQuotient::in_lattice(const ElementMatrix& m) const
{
  std::vector<std::int64_t> u;
  std::vector<std::int64_t> c;
  split(m, u, c);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (u[i * n_ + j] != (i == j ? 1 : 0))
        return false;
  for (const Integer& x : lattice_coords(c))
    if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(k_)))
      return false;
  return true;
}

std::vector<std::size_t> TorusQuotient::permutation(const Word& word) const
{
  std::vector<std::size_t> perm(reps_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t j = i;
    for (int s : word)
      j = generator_perm_.at(static_cast<std::size_t>(s))[j];
    perm[i] = j;
  }
  return perm;
}

Matrix<Integer> TorusQuotient::matrix(const Word& word) const
{
  const auto perm = permutation(word);
  Matrix<Integer> a(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    a(i, perm[i]) = 1;
  return a;
}

ElementMatrix TorusQuotient::inverse(const ElementMatrix& m) const
{
  // the inverse of a reflection product, found by reducing m back to 1
  // along right descents
  ElementMatrix cur = m;
  ElementMatrix inv = system_.identity();
  const std::size_t r = system_.rank();
  for (;;) {
    bool moved = false;
    for (std::size_t s = 0; s < r && !moved; ++s) {
      bool descent = true;
      bool nonzero = false;
      for (std::size_t i = 0; i < r; ++i) {
        const auto x = cur[i * r + s];
        if (x > 0)
          descent = false;
        nonzero = nonzero || x != 0;
      }
      if (descent && nonzero) {
        cur = system_.multiply(cur, system_.generator(s));
        inv = system_.multiply(inv, system_.generator(s));
        moved = true;
      }
    }
    if (!moved)
      break;
  }
  if (cur != system_.identity())
    throw std::logic_error("descent walk did not reach the identity");
  return inv;
}

std::size_t TorusQuotient::closed_strip_count(const Word& word, std::size_t n) const
{
  ElementMatrix wn = system_.identity();
  const ElementMatrix w = system_.evaluate(word);
  for (std::size_t i = 0; i < n; ++i)
    wn = system_.multiply(wn, w);
  std::size_t count = 0;
  for (const auto& g : reps_)
    if (in_lattice(system_.multiply(system_.multiply(g, wn), inverse(g))))
      ++count;
  return count;
}

void TorusQuotient::check_free_action() const
{
  // every torsion element of W is conjugate into a finite parabolic subgroup,
  // so it suffices that no nonidentity u in W_{S-{s}} fixes a chamber
  const std::size_t r = system_.rank();
  for (std::size_t drop = 0; drop < r; ++drop) {
    GeneratorSet subset;
    for (std::size_t s = 0; s < r; ++s)
      if (s != drop)
        subset.push_back(static_cast<int>(s));
    const ElementTable table = enumerate_finite_parabolic(system_, subset);
    for (const auto& u : table.elements()) {
      if (u.length == 0)
        continue;
      const auto perm = permutation(u.word);
      for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == i)
          throw FreeActionError("Gamma is not torsion free: " + format_word(u.word) + " fixes chamber " +
                                std::to_string(i));
    }
  }
}

Representation<Integer> torus_quotient_rep(const TorusQuotient& torus, const ElementTable& table)
{
  std::vector<Matrix<Integer>> gens;
  for (std::size_t s = 0; s < torus.system().rank(); ++s)
    gens.push_back(torus.matrix(Word{static_cast<int>(s)}));
  return Representation<Integer>::validate(torus.system(), std::move(gens), Integer(1), &table);
}

MainTheorem2Report verify_maintheorem2(const TorusQuotient& torus, const ElementTable& table, std::size_t series_order)
{
  const Representation<Integer> rho = torus_quotient_rep(torus, table);
  const auto specs = strip_generators(torus.system());
  MainTheorem2Report out;
  const Corollary1Result<Integer> cor = verify_corollary1(table, rho, series_order);
  out.corollary_pass = cor.pass;
  out.alt = cor.alt;
  out.zeta1 = strip_zeta(torus.matrix(specs.first.word), specs.first.length, series_order);
  out.zeta2 = strip_zeta(torus.matrix(specs.second.word), specs.second.length, series_order);
  out.zeta_product = out.zeta1.zeta_in_length() * out.zeta2.zeta_in_length();
  out.pass = out.corollary_pass && out.alt == out.zeta_product;
  return out;
}

} // namespace weylzeta
