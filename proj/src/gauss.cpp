#include "gaussian/gauss.hpp"

#include <algorithm>
#include <utility>

#include "gaussian/errors.hpp"

namespace gaussian {

namespace {

std::vector<std::string> coefficient_names(char base, std::uint32_t degree) {
  std::vector<std::string> names;
  names.reserve(degree + 1);
  for (std::uint32_t i = 0; i <= degree; ++i)
    names.push_back(std::string(1, base) + std::to_string(i));
  return names;
}

UniPoly generic_poly(const RingPtr& ring, std::size_t first_var, std::uint32_t degree) {
  std::vector<Polynomial> coeffs;
  coeffs.reserve(degree + 1);
  for (std::uint32_t i = 0; i <= degree; ++i)
    coeffs.push_back(Polynomial::variable(ring, first_var + i));
  return UniPoly::make(ring, std::move(coeffs));
}

void require_pair(const GenericSetup& s) {
  if (s.count() != 2) throw DomainError("expected a two-polynomial setup");
}

void require_triple(const GenericSetup& s) {
  if (s.count() != 3) throw DomainError("expected a three-polynomial setup");
}

// Containment J <= I, as a precondition for reduction questions.
void require_contained(const Ideal& J, const Ideal& I, EffortMeter& meter) {
  require_same_ring(J.ring(), I.ring());
  GroebnerBasis G = buchberger(I, meter);
  for (const Polynomial& gen : J.generators())
    if (!ideal_member(gen, G, meter))
      throw DomainError("candidate reduction is not contained in the ideal");
}

bool reduction_identity(const Ideal& J, const Ideal& I, std::uint32_t r,
                        EffortMeter& meter) {
  Ideal lhs = ideal_power(I, r + 1);
  Ideal rhs = ideal_product(J, ideal_power(I, r));
  return ideal_equal(lhs, rhs, meter);
}

}  // namespace

GenericSetup GenericSetup::pair(std::uint32_t m, std::uint32_t n, const FieldSpec& field) {
  if (m > n) std::swap(m, n);
  std::vector<std::string> names = coefficient_names('x', m);
  for (auto& name : coefficient_names('y', n)) names.push_back(std::move(name));
  GenericSetup s;
  s.ring_ = PolyRing::make(std::move(names), field, MonomialOrder::degrevlex());
  s.degrees_ = {m, n};
  s.polys_.push_back(generic_poly(s.ring_, 0, m));
  s.polys_.push_back(generic_poly(s.ring_, m + 1, n));
  return s;
}

GenericSetup GenericSetup::triple(std::uint32_t m, std::uint32_t n, std::uint32_t p,
                                  const FieldSpec& field) {
  std::vector<std::uint32_t> degs = {m, n, p};
  std::sort(degs.begin(), degs.end());
  m = degs[0];
  n = degs[1];
  p = degs[2];
  std::vector<std::string> names = coefficient_names('x', m);
  for (auto& name : coefficient_names('y', n)) names.push_back(std::move(name));
  for (auto& name : coefficient_names('z', p)) names.push_back(std::move(name));
  GenericSetup s;
  s.ring_ = PolyRing::make(std::move(names), field, MonomialOrder::degrevlex());
  s.degrees_ = {m, n, p};
  s.polys_.push_back(generic_poly(s.ring_, 0, m));
  s.polys_.push_back(generic_poly(s.ring_, m + 1, n));
  s.polys_.push_back(generic_poly(s.ring_, m + n + 2, p));
  return s;
}

Ideal content(const UniPoly& u) { return Ideal::make(u.ring(), u.coeffs()); }

bool is_reduction(const Ideal& J, const Ideal& I, std::uint32_t r, EffortMeter& meter) {
  require_contained(J, I, meter);
  return reduction_identity(J, I, r, meter);
}

bool is_reduction(const Ideal& J, const Ideal& I, std::uint32_t r, const GBOptions& opts) {
  EffortMeter meter(opts);
  return is_reduction(J, I, r, meter);
}

std::optional<std::uint32_t> reduction_number(const Ideal& J, const Ideal& I,
                                              std::uint32_t r_max, EffortMeter& meter) {
  require_contained(J, I, meter);
  for (std::uint32_t r = 0; r <= r_max; ++r)
    if (reduction_identity(J, I, r, meter)) return r;
  return std::nullopt;
}

std::optional<std::uint32_t> reduction_number(const Ideal& J, const Ideal& I,
                                              std::uint32_t r_max, const GBOptions& opts) {
  EffortMeter meter(opts);
  return reduction_number(J, I, r_max, meter);
}

ContentFormulaCheck check_dedekind_mertens(const GenericSetup& s, EffortMeter& meter) {
  require_pair(s);
  std::uint32_t m = s.degree(0);
  Ideal cf = content(s.f());
  Ideal cg = content(s.g());
  Ideal cfg = content(s.f() * s.g());

  ContentFormulaCheck out;
  out.main_identity = ideal_equal(ideal_product(cfg, ideal_power(cg, m)),
                                  ideal_product(cf, ideal_power(cg, m + 1)), meter);
  Ideal I = ideal_product(cf, cg);
  out.decayed_identity =
      ideal_equal(ideal_product(cfg, ideal_power(I, m)), ideal_power(I, m + 1), meter);
  return out;
}

ContentFormulaCheck check_dedekind_mertens(const GenericSetup& s, const GBOptions& opts) {
  EffortMeter meter(opts);
  return check_dedekind_mertens(s, meter);
}

bool dedekind_mertens_with_dropped_exponent(const GenericSetup& s, EffortMeter& meter) {
  require_pair(s);
  std::uint32_t m = s.degree(0);
  if (m == 0) throw DomainError("dropped exponent needs deg f >= 1");
  Ideal cf = content(s.f());
  Ideal cg = content(s.g());
  Ideal cfg = content(s.f() * s.g());
  return ideal_equal(ideal_product(cfg, ideal_power(cg, m - 1)),
                     ideal_product(cf, ideal_power(cg, m)), meter);
}

Ideal linkage_pair(const UniPoly& a, const UniPoly& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) throw DomainError("linkage needs nonzero polynomials");
  auto da = static_cast<std::uint32_t>(a.degree());
  auto db = static_cast<std::uint32_t>(b.degree());
  Ideal out = content(a * b);
  out = ideal_sum(out, ideal_power(content(a), db + 1));
  out = ideal_sum(out, ideal_power(content(b), da + 1));
  return out;
}

Ideal L2(const GenericSetup& s) {
  require_pair(s);
  return linkage_pair(s.f(), s.g());
}

Ideal L3(const GenericSetup& s) {
  require_triple(s);
  std::uint32_t m = s.degree(0), n = s.degree(1), p = s.degree(2);
  const UniPoly &f = s.f(), &g = s.g(), &h = s.h();
  Ideal out = content(f * g * h);
  out = ideal_sum(out, ideal_power(content(f * g), p + 1));
  out = ideal_sum(out, ideal_power(content(f * h), n + 1));
  out = ideal_sum(out, ideal_power(content(g * h), m + 1));
  out = ideal_sum(out, ideal_power(content(f), n + p + 1));
  out = ideal_sum(out, ideal_power(content(g), m + p + 1));
  out = ideal_sum(out, ideal_power(content(h), m + n + 1));
  return out;
}

bool check_primary_decomposition2(const GenericSetup& s, EffortMeter& meter) {
  require_pair(s);
  Ideal meet = ideal_intersect(content(s.f()), content(s.g()), meter);
  meet = ideal_intersect(meet, L2(s), meter);
  return ideal_equal(meet, content(s.f() * s.g()), meter);
}

bool check_primary_decomposition2(const GenericSetup& s, const GBOptions& opts) {
  EffortMeter meter(opts);
  return check_primary_decomposition2(s, meter);
}

bool check_primary_decomposition3(const GenericSetup& s, EffortMeter& meter) {
  require_triple(s);
  const UniPoly &f = s.f(), &g = s.g(), &h = s.h();
  Ideal meet = ideal_intersect(content(f), content(g), meter);
  meet = ideal_intersect(meet, content(h), meter);
  meet = ideal_intersect(meet, linkage_pair(f, g), meter);
  meet = ideal_intersect(meet, linkage_pair(f, h), meter);
  meet = ideal_intersect(meet, linkage_pair(g, h), meter);
  meet = ideal_intersect(meet, L3(s), meter);
  return ideal_equal(meet, content(f * g * h), meter);
}

bool check_primary_decomposition3(const GenericSetup& s, const GBOptions& opts) {
  EffortMeter meter(opts);
  return check_primary_decomposition3(s, meter);
}

bool check_triple_condensed(const GenericSetup& s, EffortMeter& meter) {
  require_triple(s);
  const UniPoly &f = s.f(), &g = s.g(), &h = s.h();
  Ideal meet = ideal_intersect(content(f * g), content(f * h), meter);
  meet = ideal_intersect(meet, content(g * h), meter);
  meet = ideal_intersect(meet, L3(s), meter);
  return ideal_equal(meet, content(f * g * h), meter);
}

HUData hu_data(const GenericSetup& s) {
  require_pair(s);
  std::uint32_t m = s.degree(0), n = s.degree(1);
  HUData data;
  data.X = s.f().coeffs();
  const std::vector<Polynomial>& y = s.g().coeffs();
  data.phi.assign(m + 1, std::vector<Polynomial>(m + n + 1, Polynomial::zero(s.ring())));
  for (std::uint32_t i = 0; i <= m; ++i)
    for (std::uint32_t j = 0; j <= n; ++j) data.phi[i][i + j] = y[j];
  return data;
}

HUCheck hu_check(const GenericSetup& s, EffortMeter& meter) {
  require_pair(s);
  std::uint32_t m = s.degree(0), n = s.degree(1);
  HUData data = hu_data(s);

  std::vector<Polynomial> row_times_matrix;
  for (std::size_t j = 0; j < data.phi[0].size(); ++j) {
    Polynomial entry = Polynomial::zero(s.ring());
    for (std::size_t i = 0; i < data.X.size(); ++i) entry = entry + data.X[i] * data.phi[i][j];
    row_times_matrix.push_back(std::move(entry));
  }

  HUCheck out;
  out.row_times_matrix = ideal_equal(Ideal::make(s.ring(), row_times_matrix),
                                     content(s.f() * s.g()), meter);
  out.row_power = ideal_equal(ideal_power(Ideal::make(s.ring(), data.X), n + 1),
                              ideal_power(content(s.f()), n + 1), meter);
  out.maximal_minors = ideal_equal(maximal_minors(data.phi, s.ring()),
                                   ideal_power(content(s.g()), m + 1), meter);
  return out;
}

HUCheck hu_check(const GenericSetup& s, const GBOptions& opts) {
  EffortMeter meter(opts);
  return hu_check(s, meter);
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& mat, const RingPtr& ring) {
  std::size_t n = mat.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : mat)
    if (row.size() != n) throw DomainError("determinant needs a square matrix");

  // Cofactor expansion along the first row of the submatrix spanned by `cols`.
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  auto expand = [&](auto&& self, std::size_t row, std::vector<std::size_t>& active)
      -> Polynomial {
    if (active.size() == 1) return mat[row][active[0]];
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t pick = 0; pick < active.size(); ++pick) {
      const Polynomial& pivot = mat[row][active[pick]];
      if (pivot.is_zero()) continue;
      std::size_t removed = active[pick];
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
      Polynomial minor = self(self, row + 1, active);
      active.insert(active.begin() + static_cast<std::ptrdiff_t>(pick), removed);
      Polynomial piece = pivot * minor;
      acc = (pick % 2 == 0) ? acc + piece : acc - piece;
    }
    return acc;
  };
  return expand(expand, 0, cols);
}

Ideal maximal_minors(const std::vector<std::vector<Polynomial>>& mat, const RingPtr& ring) {
  std::size_t r = mat.size();
  if (r == 0) throw DomainError("minors of an empty matrix");
  std::size_t s = mat[0].size();
  for (const auto& row : mat)
    if (row.size() != s) throw DomainError("ragged matrix");
  if (r > s) throw DomainError("maximal minors expect rows <= columns");

  std::vector<Polynomial> minors;
  std::vector<std::size_t> pick(r);
  auto choose = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
    if (pos == r) {
      std::vector<std::vector<Polynomial>> sub(r, std::vector<Polynomial>());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sub[i].push_back(mat[i][pick[j]]);
      minors.push_back(determinant(sub, ring));
      return;
    }
    for (std::size_t c = next; c + (r - pos) <= s; ++c) {
      pick[pos] = c;
      self(self, pos + 1, c + 1);
    }
  };
  choose(choose, 0, 0);
  return Ideal::make(ring, std::move(minors));
}

StructureAlgebra StructureAlgebra::make(
    RingPtr base, std::vector<std::string> labels,
    std::vector<std::vector<std::vector<Polynomial>>> table) {
  if (labels.empty()) throw DomainError("structure algebra needs rank >= 1");
  std::size_t rank = labels.size();
  if (table.size() != rank) throw DomainError("structure table must be rank^3");
  for (const auto& plane : table) {
    if (plane.size() != rank) throw DomainError("structure table must be rank^3");
    for (const auto& row : plane) {
      if (row.size() != rank) throw DomainError("structure table must be rank^3");
      for (const auto& entry : row) require_same_ring(entry.ring(), base);
    }
  }
  StructureAlgebra A;
  A.base_ = std::move(base);
  A.labels_ = std::move(labels);
  A.table_ = std::move(table);
  return A;
}

StructureAlgebra StructureAlgebra::truncated_power(RingPtr base, std::size_t rank) {
  if (rank == 0) throw DomainError("structure algebra needs rank >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rank; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
  std::vector table(rank, std::vector(rank, std::vector(rank, Polynomial::zero(base))));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (i + j < rank) table[i][j][i + j] = Polynomial::one(base);
  return make(std::move(base), std::move(labels), std::move(table));
}

StructureAlgebra StructureAlgebra::cyclic_group(RingPtr base, std::size_t rank) {
  if (rank == 0) throw DomainError("structure algebra needs rank >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rank; ++i) labels.push_back("e" + std::to_string(i));
  std::vector table(rank, std::vector(rank, std::vector(rank, Polynomial::zero(base))));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) table[i][j][(i + j) % rank] = Polynomial::one(base);
  return make(std::move(base), std::move(labels), std::move(table));
}

const Polynomial& StructureAlgebra::table(std::size_t i, std::size_t j, std::size_t k) const {
  return table_.at(i).at(j).at(k);
}

std::vector<Polynomial> StructureAlgebra::multiply(const std::vector<Polynomial>& u,
                                                   const std::vector<Polynomial>& v) const {
  std::size_t r = rank();
  if (u.size() != r || v.size() != r)
    throw DomainError("element length must equal the algebra rank");
  for (const auto& c : u) require_same_ring(c.ring(), base_);
  for (const auto& c : v) require_same_ring(c.ring(), base_);

  std::vector<Polynomial> w(r, Polynomial::zero(base_));
  for (std::size_t i = 0; i < r; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (v[j].is_zero()) continue;
      Polynomial uv = u[i] * v[j];
      for (std::size_t k = 0; k < r; ++k) {
        const Polynomial& c = table_[i][j][k];
        if (!c.is_zero()) w[k] = w[k] + uv * c;
      }
    }
  }
  return w;
}

bool StructureAlgebra::is_associative() const {
  std::size_t r = rank();
  auto basis_vec = [&](std::size_t i) {
    std::vector<Polynomial> e(r, Polynomial::zero(base_));
    e[i] = Polynomial::one(base_);
    return e;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        auto left = multiply(multiply(basis_vec(i), basis_vec(j)), basis_vec(k));
        auto right = multiply(basis_vec(i), multiply(basis_vec(j), basis_vec(k)));
        if (left != right) return false;
      }
  return true;
}

Ideal struct_content(const StructureAlgebra& A, const std::vector<Polynomial>& element) {
  if (element.size() != A.rank())
    throw DomainError("element length must equal the algebra rank");
  return Ideal::make(A.base(), element);
}

StructureProbe probe_structure_elements(const StructureAlgebra& A,
                                        const std::vector<Polynomial>& u,
                                        const std::vector<Polynomial>& v,
                                        EffortMeter& meter) {
  std::vector<Polynomial> w = A.multiply(u, v);
  Ideal cu = struct_content(A, u);
  Ideal cv = struct_content(A, v);
  Ideal cuv = struct_content(A, w);
  Ideal I = ideal_product(cu, cv);

  StructureProbe out;
  GroebnerBasis G = buchberger(I, meter);
  out.containment = true;
  for (const Polynomial& coeff : cuv.generators())
    if (!ideal_member(coeff, G, meter)) {
      out.containment = false;
      break;
    }
  if (out.containment)
    out.reduction = reduction_number(cuv, I, static_cast<std::uint32_t>(A.rank()), meter);
  return out;
}

StructureProbe probe_structure_algebra(const StructureAlgebra& A, EffortMeter& meter) {
  std::size_t r = A.rank();
  if (A.base()->arity() < 2 * r)
    throw DomainError("probe needs a base ring with at least 2*rank variables");
  std::vector<Polynomial> u, v;
  for (std::size_t i = 0; i < r; ++i) u.push_back(Polynomial::variable(A.base(), i));
  for (std::size_t i = 0; i < r; ++i) v.push_back(Polynomial::variable(A.base(), r + i));
  return probe_structure_elements(A, u, v, meter);
}

}  // namespace gaussian
