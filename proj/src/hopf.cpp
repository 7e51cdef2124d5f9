#include "hopfo/hopf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopfo {

namespace {

std::vector<ProjectiveCover> compute_projective_covers(const HopfAlgebra& h);

std::string idx(std::size_t i) { return std::to_string(i); }

// Coordinates of Delta(b_i) in H (x) H, index j * n + k.
Matrix comult_vector(const std::vector<SweedlerExpansion>& comult, std::size_t i, const Field& f,
                     std::size_t n) {
  Matrix v(f, n * n, 1);
  for (const auto& t : comult[i]) v.add_to(t.left * n + t.right, 0, t.coeff);
  return v;
}

// Delta applied to an arbitrary element.
Matrix comult_of(const std::vector<SweedlerExpansion>& comult, const Matrix& element, const Field& f,
                 std::size_t n) {
  Matrix v(f, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar c = element.at(i, 0);
    if (c.is_zero()) continue;
    v.add_scaled(c, comult_vector(comult, i, f, n));
  }
  return v;
}

// Product in the algebra H (x) H of two vectors indexed j * n + k.
Matrix tensor_square_product(const Algebra& alg, const Matrix& x, const Matrix& y) {
  const auto& f = alg.field();
  const std::size_t n = alg.dim();
  Matrix r(f, n * n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Scalar cx = x.at(a * n + b, 0);
      if (cx.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          Scalar cy = y.at(c * n + d, 0);
          if (cy.is_zero()) continue;
          r.add_scaled(cx * cy, kronecker(alg.left_mult(a).col(c), alg.left_mult(b).col(d)));
        }
      }
    }
  }
  return r;
}

SweedlerExpansion expansion_from_vector(const Matrix& v, std::size_t n) {
  SweedlerExpansion out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Scalar c = v.at(j * n + k, 0);
      if (!c.is_zero()) out.push_back({j, k, c});
    }
  }
  return out;
}

}  // namespace

std::string HopfAlgebra::name() const {
  if (raw_.family.empty()) return "custom";
  std::ostringstream os;
  os << raw_.family;
  if (raw_.family == "group") {
    os << ':' << (raw_.params[0] == 0 ? std::string("q") : std::to_string(raw_.params[0]));
    for (std::size_t i = 1; i < raw_.params.size(); ++i) os << ':' << raw_.params[i];
  } else {
    for (auto p : raw_.params) os << ':' << p;
  }
  return os.str();
}

Scalar HopfAlgebra::counit_of(const Matrix& element) const {
  Scalar s = Scalar::zero(field());
  for (std::size_t i = 0; i < dim(); ++i) s += raw_.counit[i] * element.at(i, 0);
  return s;
}

HopfPtr HopfAlgebra::validate(const RawHopf& raw) {
  const Field& f = raw.field;
  const std::size_t n = raw.basis.size();
  if (n == 0) throw ValidationError("Hopf algebra must have dimension >= 1");
  if (raw.unit.rows() != n || raw.unit.cols() != 1) throw ValidationError("unit has wrong length");
  if (raw.counit.size() != n) throw ValidationError("counit has wrong length");
  if (raw.antipode.rows() != n || raw.antipode.cols() != n) {
    throw ValidationError("antipode must be " + idx(n) + "x" + idx(n));
  }
  auto check_term = [&](const StructureTerm& t, const char* what) {
    if (t.i >= n || t.j >= n || t.k >= n) {
      throw ValidationError(std::string(what) + " term index out of range: (" + idx(t.i) + "," +
                            idx(t.j) + "," + idx(t.k) + ")");
    }
  };

  std::vector<Matrix> left(n, Matrix(f, n, n));
  for (const auto& t : raw.mult) {
    check_term(t, "mult");
    left[t.i].add_to(t.k, t.j, t.coeff);
  }
  std::vector<SweedlerExpansion> comult(n);
  {
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> acc(n);
    for (const auto& t : raw.comult) {
      check_term(t, "comult");
      auto [it, inserted] = acc[t.i].try_emplace({t.j, t.k}, t.coeff);
      if (!inserted) it->second += t.coeff;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [jk, c] : acc[i]) {
        if (!c.is_zero()) comult[i].push_back({jk.first, jk.second, c});
      }
    }
  }

  auto hopf = std::shared_ptr<HopfAlgebra>(new HopfAlgebra());
  hopf->raw_ = raw;
  hopf->algebra_ = Algebra::create(f, std::move(left), raw.unit);
  hopf->comult_ = std::move(comult);
  const Algebra& alg = *hopf->algebra_;
  const auto& cm = hopf->comult_;

  // Coassociativity: (Delta (x) 1) Delta = (1 (x) Delta) Delta.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lhs(f, n * n * n, 1);
    Matrix rhs(f, n * n * n, 1);
    for (const auto& t : cm[i]) {
      for (const auto& u : cm[t.left]) {
        lhs.add_to((u.left * n + u.right) * n + t.right, 0, t.coeff * u.coeff);
      }
      for (const auto& u : cm[t.right]) {
        rhs.add_to((t.left * n + u.left) * n + u.right, 0, t.coeff * u.coeff);
      }
    }
    if (!(lhs == rhs)) throw ValidationError("coassociativity of Delta violated at basis index " + idx(i));
  }

  // Counit: (epsilon (x) 1) Delta = id = (1 (x) epsilon) Delta.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix left_c(f, n, 1);
    Matrix right_c(f, n, 1);
    for (const auto& t : cm[i]) {
      left_c.add_to(t.right, 0, raw.counit[t.left] * t.coeff);
      right_c.add_to(t.left, 0, raw.counit[t.right] * t.coeff);
    }
    if (!(left_c == hopf->basis_vector(i)) || !(right_c == hopf->basis_vector(i))) {
      throw ValidationError("counit axiom violated at basis index " + idx(i));
    }
  }

  // Delta and epsilon are algebra maps.
  Matrix unit_sq = kronecker(raw.unit, raw.unit);
  if (!(comult_of(cm, raw.unit, f, n) == unit_sq)) {
    throw ValidationError("Delta(1) != 1 (x) 1");
  }
  if (!hopf->counit_of(raw.unit).is_one()) throw ValidationError("epsilon(1) != 1");
  for (std::size_t i = 0; i < n; ++i) {
    Matrix di = comult_vector(cm, i, f, n);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = alg.left_mult(i).col(j);
      if (!(hopf->counit_of(prod) == raw.counit[i] * raw.counit[j])) {
        throw ValidationError("epsilon is not multiplicative at basis pair (" + idx(i) + "," +
                              idx(j) + ")");
      }
      Matrix lhs = comult_of(cm, prod, f, n);
      Matrix rhs = tensor_square_product(alg, di, comult_vector(cm, j, f, n));
      if (!(lhs == rhs)) {
        throw ValidationError("Delta is not multiplicative at basis pair (" + idx(i) + "," +
                              idx(j) + ")");
      }
    }
  }

  // Antipode: mu (S (x) 1) Delta = eta epsilon = mu (1 (x) S) Delta.
  for (std::size_t i = 0; i < n; ++i) {
    Matrix left_s(f, n, 1);
    Matrix right_s(f, n, 1);
    for (const auto& t : cm[i]) {
      Matrix s_left = raw.antipode.col(t.left);
      Matrix s_right = raw.antipode.col(t.right);
      left_s.add_scaled(t.coeff, alg.left_mult_of(s_left).col(t.right));
      right_s.add_scaled(t.coeff, alg.left_mult(t.left) * s_right);
    }
    Matrix expected = raw.unit.scaled(raw.counit[i]);
    if (!(left_s == expected) || !(right_s == expected)) {
      throw ValidationError("antipode axiom violated at basis index " + idx(i));
    }
  }

  hopf->antipode_inverse_ = hopfo::antipode_inverse(*hopf);
  hopf->left_integral_ = hopfo::left_integral(*hopf);

  Matrix counit_row(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) counit_row.set(0, i, raw.counit[i]);
  hopf->counit_kernel_ = kernel(counit_row);
  hopf->integral_ideal_ = Subspace::from_columns(hopf->left_integral_);
  hopf->compute_characters();
  if (hopf->simples_are_characters_ && !hopf->is_semisimple())
    hopf->projective_covers_ = compute_projective_covers(*hopf);
  return hopf;
}

namespace {

// Idempotent e with chi(e) = 1 and psi(e) = 0 for the other characters,
// lifted from H / rad H by e <- 3e^2 - 2e^3.
Matrix lift_idempotent(const HopfAlgebra& h, std::size_t c) {
  const auto& f = h.field();
  const auto& chars = h.characters();
  Matrix rows = vstack(chars);
  Matrix target(f, chars.size(), 1);
  target.set(c, 0, 1);
  auto e = solve(rows, target);
  if (!e) throw InternalError("characters are linearly dependent");
  Matrix x = *e;
  for (int iter = 0; iter < 64; ++iter) {
    Matrix x2 = h.algebra()->multiply(x, x);
    if (x2 == x) return x;
    Matrix x3 = h.algebra()->multiply(x2, x);
    x = x2.scaled(Scalar(f, 3)) - x3.scaled(Scalar(f, 2));
  }
  throw InternalError("idempotent lifting did not converge");
}

// For each character, a primitive idempotent e and an element spanning the
// socle of H e: the nonzero one among lambda_psi e, where lambda_psi spans
// {x : h x = psi(h) x}.
std::vector<ProjectiveCover> compute_projective_covers(const HopfAlgebra& h) {
  const auto& f = h.field();
  std::vector<Matrix> integrals;
  for (const auto& psi : h.characters()) {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < h.dim(); ++i)
      blocks.push_back(h.algebra()->left_mult(i) - Matrix::identity(f, h.dim()).scaled(psi.at(0, i)));
    Subspace sol = kernel(vstack(blocks));
    if (sol.dim() != 1) throw InternalError("twisted integral space is not one-dimensional");
    integrals.push_back(sol.basis_vector(0));
  }
  std::vector<ProjectiveCover> out;
  for (std::size_t c = 0; c < h.characters().size(); ++c) {
    Matrix e = lift_idempotent(h, c);
    std::optional<Matrix> soc;
    for (const auto& l : integrals) {
      Matrix s = h.algebra()->multiply(l, e);
      if (!s.is_zero()) {
        soc = s;
        break;
      }
    }
    if (!soc) throw InternalError("projective cover has no socle element");
    out.push_back({e, *soc});
  }
  return out;
}

}  // namespace

void HopfAlgebra::compute_characters() {
  const Field& f = field();
  const std::size_t n = dim();
  if (!f.is_prime() || f.characteristic() > 4096) return;
  const std::uint64_t p = f.characteristic();
  const auto& gens = algebra_->generators();
  std::vector<Matrix> transposed;
  std::vector<std::vector<std::uint64_t>> eigen;
  for (const auto& g : gens) {
    Matrix lt = algebra_->left_mult_of(g).transpose();
    std::vector<std::uint64_t> values;
    for (std::uint64_t c = 0; c < p; ++c) {
      if (rank(lt - Matrix::identity(f, n).scaled(Scalar::from_residue(f, c))) < n) values.push_back(c);
    }
    transposed.push_back(std::move(lt));
    eigen.push_back(std::move(values));
  }
  std::size_t combos = 1;
  for (const auto& e : eigen) combos *= e.size();
  if (combos > 100000) return;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<Matrix> blocks;
    std::size_t rest = code;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::uint64_t c = eigen[g][rest % eigen[g].size()];
      rest /= eigen[g].size();
      blocks.push_back(transposed[g] - Matrix::identity(f, n).scaled(Scalar::from_residue(f, c)));
    }
    Subspace sol = blocks.empty() ? Subspace::full(f, n) : kernel(vstack(blocks));
    if (sol.dim() != 1) continue;
    Matrix chi = sol.basis_vector(0).transpose();
    Scalar at_unit = (chi * unit()).at(0, 0);
    if (at_unit.is_zero()) continue;
    characters_.push_back(chi.scaled(at_unit.inverse()));
  }
  if (characters_.empty()) return;
  // Common kernel J of the characters; simple modules are characters iff J is
  // nilpotent.
  Subspace j = kernel(vstack(characters_));
  Subspace power = j;
  for (std::size_t step = 0; step <= n && power.dim() > 0; ++step) {
    std::vector<Matrix> products;
    Matrix jc = j.basis_columns();
    for (std::size_t a = 0; a < power.dim(); ++a) products.push_back(algebra_->left_mult_of(power.basis_vector(a)) * jc);
    Subspace next = Subspace::from_columns(hstack(products));
    if (next == power) break;
    power = std::move(next);
  }
  simples_are_characters_ = power.dim() == 0;
}

Matrix antipode_inverse(const HopfAlgebra& h) {
  auto inv = inverse(h.antipode());
  if (!inv) throw ValidationError("antipode is not invertible");
  return *inv;
}

Matrix left_integral(const HopfAlgebra& h) {
  const auto& f = h.field();
  const std::size_t n = h.dim();
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < n; ++i) {
    blocks.push_back(h.algebra()->left_mult(i) - Matrix::identity(f, n).scaled(h.counit(i)));
  }
  Subspace sol = kernel(vstack(blocks));
  if (sol.dim() != 1) {
    throw ValidationError("space of left integrals has dimension " + idx(sol.dim()) + ", expected 1");
  }
  // The echelon basis vector already has leading coordinate 1.
  return sol.basis_vector(0);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

RawHopf raw_from_tables(const Field& f, std::vector<std::string> labels,
                        const std::vector<Matrix>& left_mult, const std::vector<Matrix>& comult_vecs,
                        const std::vector<Scalar>& counit, const Matrix& antipode) {
  const std::size_t n = labels.size();
  RawHopf raw;
  raw.field = f;
  raw.basis = std::move(labels);
  raw.unit = Matrix::unit_vector(f, n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar c = left_mult[i].at(k, j);
        if (!c.is_zero()) raw.mult.push_back({i, j, k, c});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : expansion_from_vector(comult_vecs[i], n)) {
      raw.comult.push_back({i, t.left, t.right, t.coeff});
    }
  }
  raw.counit = counit;
  raw.antipode = antipode;
  return raw;
}

std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = modp::mul(num, (n - i) % p, p);
    den = modp::mul(den, (i + 1) % p, p);
  }
  return modp::mul(num, modp::inv(den, p), p);
}

std::string power_label(const std::string& base, std::uint64_t e) {
  if (e == 0) return "";
  return e == 1 ? base : base + std::to_string(e);
}

}  // namespace

HopfPtr divided_power(std::uint64_t p) {
  Field f = Field::prime(p);
  const std::size_t n = p;
  std::vector<std::string> labels;
  std::vector<Matrix> left(n, Matrix(f, n, n));
  std::vector<Matrix> comult(n, Matrix(f, n * n, 1));
  std::vector<Scalar> counit(n, Scalar::zero(f));
  Matrix antipode(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : power_label("d", i));
    for (std::size_t j = 0; i + j < n; ++j) left[i].set(i + j, j, 1);
    for (std::size_t a = 0; a <= i; ++a) {
      comult[i].set(a * n + (i - a), 0, Scalar::from_residue(f, binomial_mod(i, a, p)));
    }
    antipode.set(i, i, i % 2 == 0 ? 1 : -1);
  }
  counit[0] = Scalar::one(f);
  RawHopf raw = raw_from_tables(f, std::move(labels), left, comult, counit, antipode);
  raw.family = "divided_power";
  raw.params = {static_cast<std::int64_t>(p)};
  return HopfAlgebra::validate(raw);
}

HopfPtr group_algebra(const Field& field, const std::vector<std::uint64_t>& factors) {
  if (factors.empty()) throw ValidationError("group algebra needs at least one invariant factor");
  std::size_t n = 1;
  for (auto q : factors) {
    if (q < 1) throw ValidationError("invariant factors must be positive");
    n *= q;
  }
  if (n > 64) throw ValidationError("group order " + std::to_string(n) + " exceeds 64");
  auto decode = [&](std::size_t index) {
    std::vector<std::uint64_t> e(factors.size());
    for (std::size_t r = factors.size(); r-- > 0;) {
      e[r] = index % factors[r];
      index /= factors[r];
    }
    return e;
  };
  auto encode = [&](const std::vector<std::uint64_t>& e) {
    std::size_t index = 0;
    for (std::size_t r = 0; r < factors.size(); ++r) index = index * factors[r] + e[r];
    return index;
  };
  std::vector<std::string> labels;
  std::vector<Matrix> left(n, Matrix(field, n, n));
  std::vector<Matrix> comult(n, Matrix(field, n * n, 1));
  std::vector<Scalar> counit(n, Scalar::one(field));
  Matrix antipode(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ei = decode(i);
    std::string label;
    for (std::size_t r = 0; r < factors.size(); ++r) {
      std::string base = factors.size() == 1 ? "g" : "g" + std::to_string(r + 1) + "^";
      if (ei[r] == 0) continue;
      label += factors.size() == 1 ? power_label("g", ei[r]) : base + std::to_string(ei[r]);
    }
    labels.push_back(label.empty() ? "1" : label);
    for (std::size_t j = 0; j < n; ++j) {
      auto ej = decode(j);
      std::vector<std::uint64_t> sum(factors.size());
      for (std::size_t r = 0; r < factors.size(); ++r) sum[r] = (ei[r] + ej[r]) % factors[r];
      left[i].set(encode(sum), j, 1);
    }
    comult[i].set(i * n + i, 0, 1);
    std::vector<std::uint64_t> neg(factors.size());
    for (std::size_t r = 0; r < factors.size(); ++r) neg[r] = (factors[r] - ei[r]) % factors[r];
    antipode.set(encode(neg), i, 1);
  }
  RawHopf raw = raw_from_tables(field, std::move(labels), left, comult, counit, antipode);
  raw.family = "group";
  raw.params.push_back(static_cast<std::int64_t>(field.characteristic()));
  for (auto q : factors) raw.params.push_back(static_cast<std::int64_t>(q));
  return HopfAlgebra::validate(raw);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (std::uint64_t r = 2; r < p; ++r) {
    bool ok = std::all_of(prime_factors.begin(), prime_factors.end(),
                          [&](auto q) { return modp::pow(r, (p - 1) / q, p) != 1; });
    if (ok) return r;
  }
  throw InternalError("no primitive root mod " + std::to_string(p));
}

namespace {

HopfPtr taft_impl(std::uint64_t n, std::uint64_t p, const std::string& family) {
  if (n < 2) throw ValidationError("Taft algebra needs n >= 2");
  if (!is_prime_number(p)) throw ValidationError(std::to_string(p) + " is not prime");
  if ((p - 1) % n != 0) {
    throw ValidationError("Taft algebra T_" + std::to_string(n) + " needs n | p-1, but p = " +
                          std::to_string(p));
  }
  Field f = Field::prime(p);
  const std::uint64_t omega = modp::pow(primitive_root(p), (p - 1) / n, p);
  const std::size_t dim = n * n;
  auto index = [n](std::size_t a, std::size_t b) { return a * n + b; };

  std::vector<std::string> labels;
  std::vector<Matrix> left(dim, Matrix(f, dim, dim));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::string l = power_label("g", a) + power_label("x", b);
      labels.push_back(l.empty() ? "1" : l);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (b + d >= n) continue;
          // x^b g^c = omega^(b c) g^c x^b
          left[index(a, b)].set(index((a + c) % n, b + d), index(c, d),
                                Scalar::from_residue(f, modp::pow(omega, b * c, p)));
        }
      }
    }
  }
  std::vector<Matrix> unit_mult = left;
  Matrix one(f, dim, 1);
  one.set(0, 0, 1);
  auto alg = Algebra::create(f, unit_mult, one);

  Matrix dg(f, dim * dim, 1);
  dg.set(index(1, 0) * dim + index(1, 0), 0, 1);
  Matrix dx(f, dim * dim, 1);
  dx.set(index(0, 1) * dim + index(0, 0), 0, 1);
  dx.set(index(1, 0) * dim + index(0, 1), 0, 1);
  Matrix sg = Matrix::unit_vector(f, dim, index(n - 1, 0));
  Matrix sx = Matrix::unit_vector(f, dim, index(n - 1, 1)).scaled(Scalar(f, std::int64_t{-1}));

  std::vector<Matrix> comult(dim, Matrix(f, dim * dim, 1));
  Matrix antipode(f, dim, dim);
  std::vector<Scalar> counit(dim, Scalar::zero(f));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Matrix d = kronecker(one, one);
      for (std::size_t r = 0; r < a; ++r) d = tensor_square_product(*alg, d, dg);
      for (std::size_t r = 0; r < b; ++r) d = tensor_square_product(*alg, d, dx);
      comult[index(a, b)] = d;
      // S(g^a x^b) = S(x)^b S(g)^a
      Matrix s = one;
      for (std::size_t r = 0; r < b; ++r) s = alg->multiply(s, sx);
      for (std::size_t r = 0; r < a; ++r) s = alg->multiply(s, sg);
      antipode.set_block(0, index(a, b), s);
      if (b == 0) counit[index(a, b)] = Scalar::one(f);
    }
  }
  RawHopf raw = raw_from_tables(f, std::move(labels), left, comult, counit, antipode);
  raw.family = family;
  raw.params = family == "sweedler" ? std::vector<std::int64_t>{static_cast<std::int64_t>(p)}
                                    : std::vector<std::int64_t>{static_cast<std::int64_t>(n),
                                                                static_cast<std::int64_t>(p)};
  return HopfAlgebra::validate(raw);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ValidationError("expected a nonnegative integer in '" + context + "', got '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

HopfPtr taft(std::uint64_t n, std::uint64_t p) { return taft_impl(n, p, "taft"); }

HopfPtr sweedler(std::uint64_t p) {
  if (p == 2) throw ValidationError("Sweedler's algebra needs an odd characteristic");
  return taft_impl(2, p, "sweedler");
}

HopfPtr catalog_hopf(const std::string& spec) {
  auto parts = split(spec, ':');
  const auto& family = parts[0];
  auto need = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw ValidationError("'" + family + "' takes " + std::to_string(count) +
                            " parameter(s): " + spec);
    }
  };
  if (family == "divided_power") {
    need(1);
    return divided_power(parse_uint(parts[1], spec));
  }
  if (family == "taft") {
    need(2);
    return taft(parse_uint(parts[1], spec), parse_uint(parts[2], spec));
  }
  if (family == "sweedler") {
    need(1);
    return sweedler(parse_uint(parts[1], spec));
  }
  if (family == "group") {
    if (parts.size() < 3) throw ValidationError("group needs a field and invariant factors: " + spec);
    Field f = parts[1] == "q" || parts[1] == "0" ? Field::rationals()
                                                 : Field::prime(parse_uint(parts[1], spec));
    std::vector<std::uint64_t> factors;
    for (std::size_t i = 2; i < parts.size(); ++i) factors.push_back(parse_uint(parts[i], spec));
    return group_algebra(f, factors);
  }
  throw ValidationError("unknown Hopf algebra family '" + family + "'");
}

}  // namespace hopfo
