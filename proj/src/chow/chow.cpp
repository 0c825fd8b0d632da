#include "zc/chow.hpp"

#include <bit>

namespace zc {

TriClass TriClass::monomial(unsigned mask, const BigInt& coeff) {
  if (mask > 7) throw InvalidInput("generator mask out of range");
  TriClass t;
  t.c_[mask] = coeff;
  return t;
}

TriClass TriClass::codim_part(int k) const {
  TriClass t;
  for (unsigned m = 0; m < 8; ++m)
    if (std::popcount(m) == k) t.c_[m] = c_[m];
  return t;
}

bool TriClass::is_homogeneous(int k) const {
  for (unsigned m = 0; m < 8; ++m)
    if (std::popcount(m) != k && c_[m] != 0) return false;
  return true;
}

bool TriClass::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

TriClass& TriClass::operator+=(const TriClass& o) {
  for (std::size_t m = 0; m < 8; ++m) c_[m] += o.c_[m];
  return *this;
}

TriClass& TriClass::operator-=(const TriClass& o) {
  for (std::size_t m = 0; m < 8; ++m) c_[m] -= o.c_[m];
  return *this;
}

TriClass operator*(const TriClass& a, const TriClass& b) {
  TriClass r;
  for (unsigned i = 0; i < 8; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < 8; ++j)
      if ((i & j) == 0 && b.c_[j] != 0) r.c_[i | j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TriClass operator*(const BigInt& k, TriClass a) {
  for (auto& c : a.c_) c *= k;
  return a;
}

TriClass tri_mul(const TriClass& a, const TriClass& b) { return a * b; }

std::string TriClass::str() const {
  static const char* names[] = {"alpha", "beta", "gamma"};
  // Graded order: 1, alpha, beta, gamma, alpha*beta, alpha*gamma, beta*gamma, alpha*beta*gamma.
  static const unsigned order[] = {0, 1, 2, 4, 3, 5, 6, 7};
  std::string out;
  for (unsigned m : order) {
    const BigInt& c = c_[m];
    if (c == 0) continue;
    std::string mon;
    for (unsigned g = 0; g < 3; ++g)
      if (m & (1u << g)) mon += (mon.empty() ? "" : "*") + std::string(names[g]);
    BigInt mag = abs(c);
    std::string term = mon.empty() ? mag.get_str() : (mag == 1 ? mon : mag.get_str() + "*" + mon);
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

Json TriClass::to_json() const {
  Json j = Json::object();
  static const char* keys[] = {"1", "alpha", "beta", "alpha*beta", "gamma", "alpha*gamma", "beta*gamma",
                               "alpha*beta*gamma"};
  for (unsigned m = 0; m < 8; ++m)
    if (c_[m] != 0) j[keys[m]] = c_[m].get_str();
  return j;
}

TriClass segre_total(const std::array<TriClass, 3>& c1) {
  TriClass total = TriClass::one();
  for (const auto& c : c1) {
    TriClass c2 = c * c;
    total = total * (TriClass::one() - c + c2 - c2 * c);
  }
  return total;
}

TriClass segre_s2(const std::array<TriClass, 3>& c1) { return segre_total(c1).codim_part(2); }

std::array<TriClass, 3> dual_tautological_bundle() { return {-TriClass::alpha(), -TriClass::beta(), -TriClass::gamma()}; }

BigInt degree_wrt_Hx(const TriClass& c, const CurveDegrees& degs) {
  if (degs.x <= 0 || degs.y <= 0 || degs.z <= 0) throw InvalidInput("curve degrees must be positive");
  if (!c.is_homogeneous(2)) throw InvalidInput("degree_wrt_Hx needs a class of codimension 2, got " + c.str());
  TriClass top = TriClass::alpha() * c;
  return top.coeff(7) * BigInt(degs.x) * BigInt(degs.y) * BigInt(degs.z);
}

BigInt diagonal_locus_degree(const CurveDegrees& degs, long cy_cz) {
  if (degs.x <= 0) throw InvalidInput("curve degrees must be positive");
  return BigInt(cy_cz) * BigInt(degs.x);
}

Json chow_report(const CurveDegrees& degs) {
  TriClass s2 = segre_s2(dual_tautological_bundle());
  BigInt d2 = degree_wrt_Hx(s2, degs);
  BigInt d2p = diagonal_locus_degree(degs);
  auto as_json = [](const BigInt& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); };
  Json j;
  j["deg_D2"] = as_json(d2);
  j["deg_D2_prime"] = as_json(d2p);
  j["strict_inequality"] = d2 > d2p;
  j["segre_s2"] = s2.str();
  j["segre_total"] = segre_total(dual_tautological_bundle()).str();
  j["curve_degrees"] = {degs.x, degs.y, degs.z};
  j["cy_cz"] = kCyCzIntersection;
  return j;
}

// ---------------------------------------------------------------- pencils

namespace {

RatVec4 unit(int i) {
  RatVec4 v{};
  v[static_cast<std::size_t>(i)] = Rational(1);
  return v;
}

RatMatrix rows_of(std::initializer_list<RatVec4> vs) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vs) rows.emplace_back(v.begin(), v.end());
  return RatMatrix(rows);
}

bool same_line(const RatLine& a, const RatLine& b) {
  return rows_of({a.a, a.b}).rank() == 2 && rows_of({a.a, a.b, b.a, b.b}).rank() == 2;
}

// Coordinates of v in the basis {a1, a2, b1, b2} (columns of `basis_inv`'s inverse).
std::vector<Rational> coords_in(const RatMatrix& basis_inv, const RatVec4& v) {
  return basis_inv.apply({v.begin(), v.end()});
}

std::array<Rational, 2> proj_normalize(std::array<Rational, 2> p) {
  const Rational& s = !p[1].is_zero() ? p[1] : p[0];
  if (s.is_zero()) return p;
  Rational inv = Rational(1) / s;
  return {p[0] * inv, p[1] * inv};
}

bool proportional2(const std::array<Rational, 2>& a, const std::array<Rational, 2>& b) {
  return a[0] * b[1] == a[1] * b[0];
}

}  // namespace

std::array<RatLine, 3> standard_skew_lines() {
  RatVec4 d0{1, 0, 1, 0}, d1{0, 1, 0, 1};
  return {RatLine{unit(2), unit(3)}, RatLine{unit(0), unit(1)}, RatLine{d0, d1}};
}

RatMatrix normalize_skew_triple(const std::array<RatLine, 3>& lines) {
  for (const auto& l : lines)
    if (rows_of({l.a, l.b}).rank() != 2) throw InvalidInput("degenerate line in skew triple");
  const RatLine &l1 = lines[0], &l2 = lines[1], &l3 = lines[2];
  // Columns a1, a2, b1, b2.
  RatMatrix basis(4, 4);
  const RatVec4* cols[] = {&l1.a, &l1.b, &l2.a, &l2.b};
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) basis(r, c) = (*cols[c])[static_cast<std::size_t>(r)];
  auto inv = basis.inverse();
  if (!inv) throw InvalidInput("the first two lines meet");
  auto f0 = coords_in(*inv, l3.a), f1 = coords_in(*inv, l3.b);
  // Parts of l3's basis along l1 (first two coordinates) and l2 (last two).
  RatMatrix along_l1({{f0[0], f0[1]}, {f1[0], f1[1]}});
  RatMatrix along_l2({{f0[2], f0[3]}, {f1[2], f1[3]}});
  if (along_l1.rank() < 2) throw InvalidInput("the third line meets the second");
  if (along_l2.rank() < 2) throw InvalidInput("the third line meets the first");
  // N sends e0, e1 to the l2-parts and e2, e3 to the l1-parts of l3's basis,
  // so that it maps the standard triple onto the given one.
  RatMatrix n(4, 4);
  for (int r = 0; r < 4; ++r) {
    Rational a1 = (*cols[0])[static_cast<std::size_t>(r)], a2 = (*cols[1])[static_cast<std::size_t>(r)];
    Rational b1 = (*cols[2])[static_cast<std::size_t>(r)], b2 = (*cols[3])[static_cast<std::size_t>(r)];
    n(r, 0) = f0[2] * b1 + f0[3] * b2;
    n(r, 1) = f1[2] * b1 + f1[3] * b2;
    n(r, 2) = f0[0] * a1 + f0[1] * a2;
    n(r, 3) = f1[0] * a1 + f1[1] * a2;
  }
  auto m = n.inverse();
  if (!m) throw InvalidInput("skew triple normalization failed");
  return *m;
}

RatMatrix pencil_planes(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v,
                        const std::array<Rational, 2>& w) {
  return RatMatrix({{u[0], u[1], 0, 0}, {0, 0, v[0], v[1]}, {w[0], w[1], -w[0], -w[1]}});
}

int pencil_rank(const std::array<Rational, 2>& u, const std::array<Rational, 2>& v, const std::array<Rational, 2>& w) {
  return pencil_planes(u, v, w).rank();
}

PencilSolution pencil_condition_solve(const std::array<RatLine, 3>& lines, const std::array<Rational, 2>& u) {
  auto std_lines = standard_skew_lines();
  for (std::size_t i = 0; i < 3; ++i)
    if (!same_line(lines[i], std_lines[i])) throw InvalidInput("lines are not in standard position");
  if (u[0].is_zero() && u[1].is_zero()) throw InvalidInput("plane parameter must be nonzero");
  // Unknowns (lambda, v2, v3, w, w'): third plane = lambda * first + second.
  RatMatrix sys({{-u[0], 0, 0, 1, 0}, {-u[1], 0, 0, 0, 1}, {0, -1, 0, -1, 0}, {0, 0, -1, 0, -1}});
  auto ker = sys.kernel();
  if (ker.size() != 1) throw InvalidInput("pencil system is not one-dimensional");
  const auto& k = ker.front();
  PencilSolution s;
  s.u = proj_normalize(u);
  s.v = proj_normalize({k[1], k[2]});
  s.w = proj_normalize({k[3], k[4]});
  s.rank = pencil_rank(s.u, s.v, s.w);
  s.diagonal = proportional2(s.u, s.v) && proportional2(s.u, s.w);
  return s;
}

}  // namespace zc
