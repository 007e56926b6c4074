#include "sumfree/bounds.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace sumfree {

namespace mp = boost::multiprecision;

BoundValue BoundValue::fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return BoundValue(Rational(num, den));
}

Integer BoundValue::numerator() const { return mp::numerator(value_); }

Integer BoundValue::denominator() const { return mp::denominator(value_); }

bool BoundValue::is_integral() const { return denominator() == 1; }

Integer BoundValue::floor() const {
  const Integer num = numerator();
  const Integer den = denominator();
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

double BoundValue::approx() const { return value_.convert_to<double>(); }

std::string BoundValue::to_string() const { return sumfree::to_string(value_); }

std::string to_string(const Rational& r) {
  const Integer den = mp::denominator(r);
  if (den == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { return std::invalid_argument("malformed rational '" + text + "'"); };
  auto integer = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw bad();
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Integer den = integer(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(integer(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
    std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    const Integer scale = mp::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer magnitude = mp::abs(integer(whole)) * scale + Integer(frac);
    return Rational(negative ? Integer(-magnitude) : magnitude, scale);
  }
  return Rational(integer(text));
}

BoundValue power(const Rational& base, std::int64_t exp) {
  if (exp < 0 && base == 0) throw std::invalid_argument("zero to a negative power");
  const auto e = static_cast<unsigned>(exp < 0 ? -exp : exp);
  const Integer num = mp::pow(mp::numerator(base), e);
  const Integer den = mp::pow(mp::denominator(base), e);
  return exp < 0 ? BoundValue(Rational(den, num)) : BoundValue(Rational(num, den));
}

BoundValue bound_matching(int m, int n) {
  if (n < 0 || m < 0 || 2 * m > n) {
    throw std::invalid_argument("matching size " + std::to_string(m) + " impossible on " + std::to_string(n) +
                                " vertices");
  }
  if (3 * m <= n) return power(3, m);
  return power(2, 3 * m - n) * power(3, n - 2 * m);
}

BoundValue bound_degree4(int k, int m, int n) {
  return power(Rational(59, 64), k) * power(2, 3 * m - n) * power(3, n - 2 * m);
}

BoundValue bound_tl(int k, int l, int m, int n) {
  const int e = m + l * k;
  return power(Rational(31, 32), k) * power(2, 3 * e - n) * power(3, n - 2 * e);
}

BoundValue bound_c4(int k, int m, int n) {
  return power(Rational(4, 7), k) * power(2, 6 * k + 3 * m - n) * power(3, n - 2 * m - 4 * k);
}

std::string to_string(ExtremalClass c) {
  switch (c) {
    case ExtremalClass::TypeA: return "type-A";
    case ExtremalClass::TypeB: return "type-B";
    case ExtremalClass::Neither: return "neither";
  }
  return "?";
}

std::string to_string(MatchingBranch b) { return b == MatchingBranch::Triangles ? "triangles" : "mixed"; }

namespace {

VertexMask packing_vertices(const Packing& p) {
  VertexMask used = 0;
  auto add = [&](int v) {
    if (v >= 0 && v < kMaxVertices) used |= bit(v);
  };
  for (auto [u, v] : p.matching) {
    add(u);
    add(v);
  }
  for (const auto& c : p.c4s) {
    for (int v : c) add(v);
  }
  for (const auto& t : p.tls) {
    for (int v : t.vertices) add(v);
  }
  for (const auto& s : p.deg4sets) {
    for (int v : s) add(v);
  }
  return used;
}

}  // namespace

Report check_graph(const Graph& g, const std::optional<Packing>& packing) {
  Report r;
  const Graph h = g.without_looped_vertices();
  r.looped = std::popcount(g.loops());
  r.n = h.order();
  r.edges = h.edge_count();
  r.mis = mis_count(h);
  r.nu = matching_number(h);
  r.branch = 3 * r.nu <= r.n ? MatchingBranch::Triangles : MatchingBranch::Mixed;
  r.matching_bound = bound_matching(r.nu, r.n);
  r.bound = r.matching_bound;

  if (packing) {
    if (auto bad = validate_packing(g, *packing)) throw std::invalid_argument("invalid packing: " + bad->message);
    if (packing_vertices(*packing) & g.loops()) throw std::invalid_argument("invalid packing: uses a looped vertex");
    const int m = static_cast<int>(packing->matching.size());
    if (!packing->deg4sets.empty()) {
      const int k = static_cast<int>(packing->deg4sets.size());
      r.stability.push_back({"degree4", k, 0, m, bound_degree4(k, m, r.n)});
    }
    if (!packing->tls.empty()) {
      const int k = static_cast<int>(packing->tls.size());
      const int l = packing->tls.front().l;
      r.stability.push_back({"tl", k, l, m, bound_tl(k, l, m, r.n)});
    }
    if (!packing->c4s.empty()) {
      const int k = static_cast<int>(packing->c4s.size());
      r.stability.push_back({"c4", k, 0, m, bound_c4(k, m, r.n)});
    }
    for (const auto& b : r.stability) r.bound = std::min(r.bound, b.value);
  }

  const BoundValue mis(static_cast<std::int64_t>(r.mis));
  r.satisfied = mis <= r.bound;
  r.tight = r.bound.is_integral() && mis == r.bound;
  const bool type_a = is_type_a(h);
  const bool type_b = is_type_b(h);
  r.extremal = type_a ? ExtremalClass::TypeA : type_b ? ExtremalClass::TypeB : ExtremalClass::Neither;
  const bool matching_tight = mis == r.matching_bound;
  r.equality_matches_class = matching_tight == (r.branch == MatchingBranch::Triangles ? type_a : type_b);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct ScaledSide {
  Integer num{1};
  Integer den{1};
};

}  // namespace

bool power_less(const PowerProduct& lhs, const PowerProduct& rhs) {
  Integer lcm_den = 1;
  for (const auto* side : {&lhs, &rhs}) {
    for (const auto& t : *side) {
      if (t.base <= 0) throw std::invalid_argument("power bases must be positive");
      const Integer d = mp::denominator(t.exponent);
      lcm_den = lcm_den / mp::gcd(lcm_den, d) * d;
    }
  }
  std::uint64_t bits = 0;
  auto scaled = [&](const PowerProduct& side) {
    ScaledSide out;
    for (const auto& t : side) {
      const Integer e = mp::numerator(t.exponent) * (lcm_den / mp::denominator(t.exponent));
      const Integer mag = mp::abs(e);
      const std::uint64_t size = mp::msb(mp::numerator(t.base)) + mp::msb(mp::denominator(t.base)) + 2;
      if (mag > Integer(kPowerBitCap) || mag * size > Integer(kPowerBitCap) ||
          (bits += static_cast<std::uint64_t>(mag * size)) > kPowerBitCap) {
        throw std::invalid_argument("exact comparison needs more than " + std::to_string(kPowerBitCap) + " bits");
      }
      const auto u = mag.convert_to<unsigned>();
      const Integer pn = mp::pow(mp::numerator(t.base), u);
      const Integer pd = mp::pow(mp::denominator(t.base), u);
      if (e >= 0) {
        out.num *= pn;
        out.den *= pd;
      } else {
        out.num *= pd;
        out.den *= pn;
      }
    }
    return out;
  };
  const auto l = scaled(lhs);
  const auto r = scaled(rhs);
  return l.num * r.den < r.num * l.den;
}

std::vector<ConstantCheck> constant_checks(const ConstantPoint& p) {
  const Rational& n = p.n;
  const Rational& big = p.big_c;
  const Rational& c = p.small_c;
  const Rational l(p.l);
  if (n <= 0 || big <= 0 || p.l <= 0) throw std::invalid_argument("C, n and l must be positive");
  const PowerProduct quarter{{2, n / 4}};
  const PowerProduct gap{{2, n / 4 - c * n}};
  auto with_quarter = [&](PowerTerm t) { return PowerProduct{t, {2, n / 4}}; };

  std::vector<ConstantCheck> out;
  auto add = [&](std::string name, std::string relation, const PowerProduct& a, const PowerProduct& b) {
    out.push_back({std::move(name), std::move(relation), power_less(a, b)});
  };
  add("small_link", "3^(4n/27) < 2^(n/4)", {{3, 4 * n / 27}}, quarter);
  add("triangle_components", "3^(n/12) 6^(n/24) < 2^(n/4)", {{3, n / 12}, {6, n / 24}}, quarter);
  add("degree4_blocks", "59^(n/2l) 2^(n(l-15)/4l) 3^(n/2l) < 2^(n/4)",
      {{59, n / (2 * l)}, {2, n * (l - 15) / (4 * l)}, {3, n / (2 * l)}}, quarter);
  add("small_link_gap", "3^(4n/27) < 2^(n/4-cn)", {{3, 4 * n / 27}}, gap);
  add("few_torsion_gap", "(2/3)^(n/C) 2^(n/4) < 2^(n/4-cn)", with_quarter({Rational(2, 3), n / big}), gap);
  add("c4_gap", "(4/7)^(n/16) 2^(n/4) < 2^(n/4-cn)", with_quarter({Rational(4, 7), n / 16}), gap);
  add("triangle_components_gap", "3^(n/12) 6^(n/24) < 2^(n/4-cn)", {{3, n / 12}, {6, n / 24}}, gap);
  add("elementary_gap", "2^(n/6) < 2^(n/4-cn)", {{2, n / 6}}, gap);
  add("tl_gap", "(31/32)^(n/8C) 2^(n/4) < 2^(n/4-cn)", with_quarter({Rational(31, 32), n / (8 * big)}), gap);
  add("dense_blocks_gap", "0.96^(n/16C^2) 2^(n/4) < 2^(n/4-cn)",
      with_quarter({Rational(24, 25), n / (16 * big * big)}), gap);
  add("dense_blocks_ratio", "(3^2 59^2 / 2^15)^(n/4l) < 0.96^(n/16C^2)",
      {{Rational(9 * 59 * 59, 32768), n / (4 * l)}}, {{Rational(24, 25), n / (16 * big * big)}});
  return out;
}

}  // namespace sumfree
