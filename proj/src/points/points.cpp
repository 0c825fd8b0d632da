#include "zc/points.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace zc {

std::string to_string(PointSource s) {
  switch (s) {
    case PointSource::Enumerated: return "Enumerated";
    case PointSource::LineIntersection: return "LineIntersection";
    case PointSource::ThirdPoint: return "ThirdPoint";
    case PointSource::TangentProcess: return "TangentProcess";
  }
  return "Enumerated";
}

PointSource point_source_from_string(const std::string& s) {
  for (auto v : {PointSource::Enumerated, PointSource::LineIntersection, PointSource::ThirdPoint,
                 PointSource::TangentProcess})
    if (to_string(v) == s) return v;
  throw InvalidInput("unknown point source '" + s + "'");
}

std::array<BigInt, 4> primitive_coords(const ProjPoint& p) {
  auto r = p.rational_coords();
  BigInt l = 1;
  for (const auto& c : r) l = lcm(l, c.den());
  std::array<BigInt, 4> out;
  BigInt g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = r[i].num() * (l / r[i].den());
    g = gcd(g, out[i]);
  }
  int sign = 0;
  for (const auto& c : out)
    if (sgn(c) != 0) {
      sign = sgn(c);
      break;
    }
  for (auto& c : out) c = c / g * sign;
  return out;
}

namespace {

ProjPoint from_integers(const std::array<BigInt, 4>& c) {
  return ProjPoint::rational({Rational(c[0]), Rational(c[1]), Rational(c[2]), Rational(c[3])});
}

BigInt max_abs(const std::array<BigInt, 4>& c) {
  BigInt h = 0;
  for (const auto& x : c) h = std::max<BigInt>(h, abs(x));
  return h;
}

}  // namespace

PointRecord PointRecord::make(const ProjPoint& p, PointSource source) {
  if (!p.is_rational()) return PointRecord{p, p.algebra().degree(), std::nullopt, source};
  auto c = primitive_coords(p);
  return PointRecord{from_integers(c), 1, max_abs(c), source};
}

Json PointRecord::to_json() const {
  Json j;
  j["point"] = point.to_json();
  j["degree"] = degree;
  j["height"] = height ? Json(height->get_str()) : Json(nullptr);
  j["source"] = to_string(source);
  return j;
}

PointRecord PointRecord::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("point")) throw InvalidInput("point record needs \"point\"");
  PointSource src = j.contains("source") ? point_source_from_string(j.at("source").get<std::string>())
                                          : PointSource::Enumerated;
  return make(ProjPoint::from_json(j.at("point")), src);
}

// ---------------------------------------------------------------- enumeration

namespace {

// S(a0, a1, a2, X3) = k[3] X3^3 + ... + k[0] for integer coefficients.
template <class Int>
struct IntegerCubic {
  std::vector<std::pair<Exponent, Int>> terms;

  std::array<Int, 4> in_last(const std::array<long, 3>& a) const {
    std::array<Int, 4> k{};
    for (const auto& [e, c] : terms) {
      Int v = c;
      for (std::size_t i = 0; i < 3; ++i)
        for (int p = 0; p < e[i]; ++p) v *= a[i];
      k[static_cast<std::size_t>(e[3])] += v;
    }
    return k;
  }
};

long lgcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

using Tuple = std::array<long, 4>;

template <class Int>
void scan_shard(const IntegerCubic<Int>& f, long a0, long B, std::vector<Tuple>& out) {
  for (long a1 = -B; a1 <= B; ++a1) {
    if (a0 == 0 && a1 < 0) continue;
    for (long a2 = -B; a2 <= B; ++a2) {
      if (a0 == 0 && a1 == 0 && a2 < 0) continue;
      auto k = f.in_last({a0, a1, a2});
      long g012 = lgcd(lgcd(a0, a1), a2);
      bool lead_zero = a0 == 0 && a1 == 0 && a2 == 0;
      for (long a3 = lead_zero ? 1 : -B; a3 <= B; ++a3) {
        if (lgcd(g012, a3) != 1) continue;
        Int x = a3;
        Int v = ((k[3] * x + k[2]) * x + k[1]) * x + k[0];
        if (v == 0) out.push_back({a0, a1, a2, a3});
      }
    }
  }
}

template <class Int>
std::vector<Tuple> scan(const IntegerCubic<Int>& f, long B, unsigned threads) {
  std::vector<std::vector<Tuple>> shards(static_cast<std::size_t>(B + 1));
  std::atomic<long> next{0};
  auto work = [&] {
    for (long a0 = next++; a0 <= B; a0 = next++) scan_shard(f, a0, B, shards[static_cast<std::size_t>(a0)]);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<long>(threads, B + 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<Tuple> all;
  for (auto& s : shards) all.insert(all.end(), s.begin(), s.end());
  return all;
}

bool fits_int128(const std::vector<std::pair<Exponent, BigInt>>& terms, long B) {
  // |value| <= sum |c| * B^3 must stay far below 2^127.
  BigInt bound = 0;
  for (const auto& [e, c] : terms) bound += abs(c);
  bound *= BigInt(B) * B * B * 4;
  return mpz_sizeinbase(bound.get_mpz_t(), 2) < 120;
}

__int128 to_int128(const BigInt& v) {
  // Exact for |v| < 2^120 via two 60-bit limbs.
  BigInt a = abs(v);
  BigInt lo = a % (BigInt(1) << 60), hi = a >> 60;
  __int128 r = (static_cast<__int128>(hi.get_ui()) << 60) + static_cast<__int128>(lo.get_ui());
  return sgn(v) < 0 ? -r : r;
}

}  // namespace

std::vector<PointRecord> enumerate_rational(const CubicForm& S, long height_bound, unsigned threads) {
  if (height_bound < 1) throw InvalidInput("height bound must be >= 1");
  BigInt l = 1;
  for (const auto& [e, c] : S.coefficients()) l = lcm(l, c.den());
  std::vector<std::pair<Exponent, BigInt>> terms;
  for (const auto& [e, c] : S.coefficients()) terms.push_back({e, c.num() * (l / c.den())});

  std::vector<Tuple> found;
  if (fits_int128(terms, height_bound)) {
    IntegerCubic<__int128> f;
    for (const auto& [e, c] : terms) f.terms.push_back({e, to_int128(c)});
    found = scan(f, height_bound, threads);
  } else {
    IntegerCubic<BigInt> f;
    f.terms = terms;
    found = scan(f, height_bound, threads);
  }

  auto height = [](const Tuple& t) {
    long h = 0;
    for (long x : t) h = std::max(h, x < 0 ? -x : x);
    return h;
  };
  std::sort(found.begin(), found.end(), [&](const Tuple& a, const Tuple& b) {
    long ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  std::vector<PointRecord> out;
  out.reserve(found.size());
  for (const auto& t : found)
    out.push_back(PointRecord::make(from_integers({BigInt(t[0]), BigInt(t[1]), BigInt(t[2]), BigInt(t[3])}),
                                    PointSource::Enumerated));
  return out;
}

// ---------------------------------------------------------------- lines

PointRecord degree3_from_line(const CubicForm& S, const Line& L) {
  if (L.p().is_rational() && L.q().is_rational() && on_surface(S, L.p()) && on_surface(S, L.q()))
    return PointRecord::make(third_point(S, L.p(), L.q()), PointSource::ThirdPoint);
  LengthThreeScheme z = delta_point(S, L);
  const ProjPoint& p = z.point();
  if (p.algebra().degree() == 1) return PointRecord::make(z.rational_points.front(), PointSource::LineIntersection);
  return PointRecord::make(p, PointSource::LineIntersection);
}

// ---------------------------------------------------------------- saturation

namespace {

std::vector<Line> coordinate_axes() {
  std::vector<Line> axes;
  auto e = [](int i) {
    std::array<Rational, 4> c{};
    c[static_cast<std::size_t>(i)] = Rational(1);
    return ProjPoint::rational(c);
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) axes.emplace_back(e(i), e(j));
  return axes;
}

}  // namespace

std::vector<PointRecord> saturate(const CubicForm& S, const std::vector<PointRecord>& seeds, int rounds,
                                  const SaturateOptions& options) {
  if (rounds < 0) throw InvalidInput("rounds must be >= 0");
  const std::vector<Line> axes = options.axes.empty() ? coordinate_axes() : options.axes;
  std::vector<PointRecord> out;
  std::set<std::string> seen;
  auto add = [&](const ProjPoint& p, PointSource src) {
    if (out.size() >= options.cap) return false;
    PointRecord r = PointRecord::make(p, src);
    if (!seen.insert(canonical_key(r.point.normalized())).second) return false;
    out.push_back(std::move(r));
    return true;
  };
  for (const auto& s : seeds) {
    if (!on_surface(S, s.point)) throw GeometryError("NotOnSurface", "seed point is not on the surface");
    PointRecord r = s;
    if (out.size() < options.cap && seen.insert(canonical_key(r.point.normalized())).second) out.push_back(r);
  }

  std::size_t fresh_from = 0;
  for (int round = 0; round < rounds && out.size() < options.cap; ++round) {
    const std::size_t end = out.size();
    std::vector<std::pair<ProjPoint, PointSource>> found;
    for (std::size_t j = fresh_from; j < end; ++j) {
      const PointRecord& y = out[j];
      if (y.degree != 1) continue;
      for (std::size_t i = 0; i < j; ++i) {
        const PointRecord& x = out[i];
        if (x.degree != 1) continue;
        try {
          found.emplace_back(third_point(S, x.point, y.point), PointSource::ThirdPoint);
        } catch (const GeometryError&) {
        }
      }
      for (const Line& axis : axes) {
        try {
          found.emplace_back(tangent_residual(S, PlanePencil{axis}, y.point), PointSource::TangentProcess);
        } catch (const GeometryError&) {
        }
      }
    }
    for (const auto& [p, src] : found) add(p, src);
    fresh_from = end;
  }
  return out;
}

}  // namespace zc
