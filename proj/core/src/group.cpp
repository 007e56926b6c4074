#include "sumfree/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sumfree {

namespace {

int mod(std::int64_t a, int m) {
  auto r = static_cast<int>(a % m);
  return r < 0 ? r + m : r;
}

void require_same_shape(const GroupSpec& g, const Element& a) {
  if (a.coords.size() != g.rank()) {
    throw std::invalid_argument("element has " + std::to_string(a.coords.size()) +
                                " coordinates, group " + g.to_string() + " has rank " +
                                std::to_string(g.rank()));
  }
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

long long parse_int(std::string_view s, std::string_view what) {
  long long v = 0;
  auto* first = s.data();
  auto* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

GroupSpec make_group(std::vector<int> moduli, std::uint64_t cap) {
  if (moduli.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  std::uint64_t order = 1;
  for (int m : moduli) {
    if (m < 2) throw std::invalid_argument("cyclic factor Z" + std::to_string(m) + " has order < 2");
    if (order > cap / static_cast<std::uint64_t>(m)) {
      throw std::invalid_argument("group order exceeds the cap of " + std::to_string(cap));
    }
    order *= static_cast<std::uint64_t>(m);
  }
  if (order > cap) throw std::invalid_argument("group order exceeds the cap of " + std::to_string(cap));

  GroupSpec g;
  g.moduli_ = std::move(moduli);
  g.order_ = order;
  g.strides_.assign(g.moduli_.size(), 1);
  for (std::size_t i = g.moduli_.size(); i-- > 1;) {
    g.strides_[i - 1] = g.strides_[i] * static_cast<std::uint64_t>(g.moduli_[i]);
  }
  return g;
}

GroupSpec parse_group(std::string_view literal, std::uint64_t cap) {
  const std::string text = strip_spaces(literal);
  if (text.empty()) throw std::invalid_argument("empty group literal");
  std::vector<int> moduli;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('x', pos);
    if (next == std::string::npos) next = text.size();
    std::string_view term(text.data() + pos, next - pos);
    if (term.size() < 2 || (term[0] != 'Z' && term[0] != 'z')) {
      throw std::invalid_argument("malformed group term '" + std::string(term) + "' in '" +
                                  std::string(literal) + "'");
    }
    term.remove_prefix(1);
    long long repeat = 1;
    if (auto caret = term.find('^'); caret != std::string_view::npos) {
      repeat = parse_int(term.substr(caret + 1), "repetition count");
      term = term.substr(0, caret);
      if (repeat < 1 || repeat > 64) throw std::invalid_argument("repetition count out of range");
    }
    const long long m = parse_int(term, "modulus");
    if (m > std::numeric_limits<int>::max()) throw std::invalid_argument("modulus too large");
    for (long long r = 0; r < repeat; ++r) moduli.push_back(static_cast<int>(m));
    pos = next + 1;
  }
  return make_group(std::move(moduli), cap);
}

Element parse_element(const GroupSpec& g, std::string_view literal) {
  const std::string text = strip_spaces(literal);
  std::vector<long long> values;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unterminated element tuple '" + text + "'");
    std::string_view body(text.data() + 1, text.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      if (comma == std::string_view::npos) comma = body.size();
      values.push_back(parse_int(body.substr(pos, comma - pos), "element coordinate"));
      pos = comma + 1;
    }
  } else {
    if (g.rank() != 1) {
      throw std::invalid_argument("bare integer '" + text + "' only allowed for cyclic groups");
    }
    values.push_back(parse_int(text, "element"));
  }
  if (values.size() != g.rank()) {
    throw std::invalid_argument("element '" + text + "' has " + std::to_string(values.size()) +
                                " coordinates, group " + g.to_string() + " has rank " + std::to_string(g.rank()));
  }
  Element e{std::vector<int>(values.size())};
  for (std::size_t i = 0; i < values.size(); ++i) e.coords[i] = mod(values[i], g.moduli()[i]);
  return e;
}

Element GroupSpec::zero() const { return Element{std::vector<int>(moduli_.size(), 0)}; }

Element GroupSpec::add(const Element& a, const Element& b) const {
  require_same_shape(*this, a);
  require_same_shape(*this, b);
  Element r{std::vector<int>(moduli_.size())};
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r.coords[i] = mod(static_cast<std::int64_t>(a.coords[i]) + b.coords[i], moduli_[i]);
  }
  return r;
}

Element GroupSpec::neg(const Element& a) const {
  require_same_shape(*this, a);
  Element r{std::vector<int>(moduli_.size())};
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.coords[i] = mod(-static_cast<std::int64_t>(a.coords[i]), moduli_[i]);
  return r;
}

Element GroupSpec::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element GroupSpec::scale(std::int64_t k, const Element& a) const {
  require_same_shape(*this, a);
  Element r{std::vector<int>(moduli_.size())};
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::int64_t kk = k % moduli_[i];
    r.coords[i] = mod(kk * a.coords[i], moduli_[i]);
  }
  return r;
}

std::uint64_t GroupSpec::order_of(const Element& a) const {
  require_same_shape(*this, a);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(moduli_[i]);
    const auto c = static_cast<std::uint64_t>(mod(a.coords[i], moduli_[i]));
    ord = lcm_u64(ord, m / gcd_u64(m, c));
  }
  return ord;
}

bool GroupSpec::contains(const Element& a) const noexcept {
  if (a.coords.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= moduli_[i]) return false;
  }
  return true;
}

std::uint64_t GroupSpec::index_of(const Element& a) const {
  require_same_shape(*this, a);
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    idx += strides_[i] * static_cast<std::uint64_t>(mod(a.coords[i], moduli_[i]));
  }
  return idx;
}

Element GroupSpec::element_at(std::uint64_t index) const {
  if (index >= order_) throw std::out_of_range("element index " + std::to_string(index) + " out of range");
  Element e{std::vector<int>(moduli_.size())};
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    e.coords[i] = static_cast<int>((index / strides_[i]) % static_cast<std::uint64_t>(moduli_[i]));
  }
  return e;
}

std::uint64_t GroupSpec::add_index(std::uint64_t a, std::uint64_t b) const noexcept {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(moduli_[i]);
    auto d = (a / strides_[i]) % m + (b / strides_[i]) % m;
    if (d >= m) d -= m;
    r += d * strides_[i];
  }
  return r;
}

std::uint64_t GroupSpec::neg_index(std::uint64_t a) const noexcept {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto m = static_cast<std::uint64_t>(moduli_[i]);
    const auto d = (a / strides_[i]) % m;
    r += (d == 0 ? 0 : m - d) * strides_[i];
  }
  return r;
}

std::uint64_t GroupSpec::sub_index(std::uint64_t a, std::uint64_t b) const noexcept {
  return add_index(a, neg_index(b));
}

std::uint64_t GroupSpec::exponent() const {
  std::uint64_t e = 1;
  for (int m : moduli_) e = lcm_u64(e, static_cast<std::uint64_t>(m));
  return e;
}

int GroupSpec::two_rank() const {
  return static_cast<int>(std::count_if(moduli_.begin(), moduli_.end(), [](int m) { return m % 2 == 0; }));
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size();) {
    std::size_t j = i;
    while (j < moduli_.size() && moduli_[j] == moduli_[i]) ++j;
    if (i > 0) os << " x ";
    os << 'Z' << moduli_[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string GroupSpec::format(const Element& a) const {
  require_same_shape(*this, a);
  if (moduli_.size() == 1) return std::to_string(a.coords[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(a.coords[i]);
  }
  return s + ')';
}

std::vector<Element> elements(const GroupSpec& g) {
  std::vector<Element> out;
  out.reserve(g.order());
  for (std::uint64_t i = 0; i < g.order(); ++i) out.push_back(g.element_at(i));
  return out;
}

// ---------------------------------------------------------------------------

std::string TypeClass::to_string() const {
  switch (variant) {
    case TypeVariant::I: return "I(" + std::to_string(p) + ")";
    case TypeVariant::II: return "II";
    case TypeVariant::III: return "III(m=" + std::to_string(exponent) + ")";
  }
  return "?";
}

TypeClass classify(const GroupSpec& g) {
  // Prime divisors of n in increasing order.
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = g.order();
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) primes.push_back(rest);

  TypeClass t;
  for (auto p : primes) {
    if (p % 3 == 2) {
      t.variant = TypeVariant::I;
      t.p = p;
      return t;
    }
  }
  if (std::find(primes.begin(), primes.end(), 3) != primes.end()) {
    t.variant = TypeVariant::II;
    return t;
  }
  t.variant = TypeVariant::III;
  t.exponent = g.exponent();
  return t;
}

std::uint64_t mu_formula(const GroupSpec& g) {
  const auto n = g.order();
  const auto t = classify(g);
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  switch (t.variant) {
    case TypeVariant::I:
      num = (t.p + 1) * n;
      den = 3 * t.p;
      break;
    case TypeVariant::II:
      num = n;
      den = 3;
      break;
    case TypeVariant::III:
      num = (t.exponent - 1) * n;
      den = 3 * t.exponent;
      break;
  }
  if (num % den != 0) {
    throw std::logic_error("mu formula for " + g.to_string() + " is not integral: " + std::to_string(num) + "/" +
                           std::to_string(den));
  }
  return num / den;
}

// ---------------------------------------------------------------------------

std::uint64_t Homomorphism::apply(const Element& a) const {
  if (a.coords.size() != images.size()) throw std::invalid_argument("homomorphism/element rank mismatch");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    r = (r + images[i] * static_cast<std::uint64_t>(a.coords[i])) % target;
  }
  return r;
}

std::uint64_t Homomorphism::apply_index(const GroupSpec& g, std::uint64_t index) const {
  return apply(g.element_at(index));
}

bool Homomorphism::is_trivial() const noexcept {
  return std::all_of(images.begin(), images.end(), [](std::uint64_t r) { return r == 0; });
}

std::vector<Homomorphism> homomorphisms_to_cyclic(const GroupSpec& g, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("target modulus must be >= 2");
  std::vector<std::vector<std::uint64_t>> choices(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto m = static_cast<std::uint64_t>(g.moduli()[i]);
    for (std::uint64_t r = 0; r < q; ++r) {
      if ((m % q) * r % q == 0) choices[i].push_back(r);
    }
  }
  std::vector<Homomorphism> out;
  Homomorphism h{q, std::vector<std::uint64_t>(g.rank(), 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == g.rank()) {
      out.push_back(h);
      return;
    }
    for (auto r : choices[i]) {
      h.images[i] = r;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Element> doubling_solutions(const GroupSpec& g, const Element& s) {
  const auto target = g.index_of(s);
  std::vector<Element> out;
  for (std::uint64_t x = 0; x < g.order(); ++x) {
    if (g.double_index(x) == target) out.push_back(g.element_at(x));
  }
  return out;
}

DoublingObservation check_doubling_observation(const GroupSpec& g) {
  DoublingObservation obs;
  obs.two_rank = g.two_rank();
  const auto n = g.order();

  // Solutions of 2x = s, bucketed by s.
  std::vector<std::vector<std::uint64_t>> halves(n);
  for (std::uint64_t x = 0; x < n; ++x) halves[g.double_index(x)].push_back(x);

  const std::uint64_t expected = std::uint64_t{1} << obs.two_rank;
  obs.torsion_solutions = halves[0].size();
  if (obs.torsion_solutions != expected) {
    obs.failure = "2x = 0 has " + std::to_string(obs.torsion_solutions) + " solutions, expected 2^" +
                  std::to_string(obs.two_rank);
    return obs;
  }

  const auto homs = homomorphisms_to_cyclic(g, 2);
  std::vector<std::uint8_t> phi(n);
  for (const auto& h : homs) {
    ++obs.homomorphisms_checked;
    for (std::uint64_t x = 0; x < n; ++x) phi[x] = static_cast<std::uint8_t>(h.apply_index(g, x));

    const auto odd_torsion =
        std::count_if(halves[0].begin(), halves[0].end(), [&](std::uint64_t x) { return phi[x] == 1; });
    if (2 * static_cast<std::uint64_t>(odd_torsion) > expected) {
      obs.failure = "more than half of the 2-torsion maps to 1";
      return obs;
    }
    for (std::uint64_t s = 0; s < n; ++s) {
      ++obs.shifts_checked;
      const auto& sols = halves[s];
      const auto ones = static_cast<std::uint64_t>(
          std::count_if(sols.begin(), sols.end(), [&](std::uint64_t x) { return phi[x] == 1; }));
      if (ones > 0 && 2 * ones < expected) {
        obs.failure = "2x = " + g.format(g.element_at(s)) + " has only " + std::to_string(ones) +
                      " solutions with phi(x) = 1";
        return obs;
      }
    }
  }
  return obs;
}

// ---------------------------------------------------------------------------

std::vector<GroupSpec> groups_of_order(std::uint64_t n) {
  std::vector<GroupSpec> out;
  if (n < 2) return out;
  std::vector<int> current;
  std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t rest, std::uint64_t min_factor) {
    if (rest == 1) {
      out.push_back(make_group(current, std::numeric_limits<std::uint64_t>::max()));
      return;
    }
    for (std::uint64_t f = min_factor; f <= rest; ++f) {
      if (rest % f != 0) continue;
      current.push_back(static_cast<int>(f));
      rec(rest / f, f);
      current.pop_back();
    }
  };
  rec(n, 2);
  return out;
}

bool is_elementary_two_by_three(const GroupSpec& g) {
  const auto r = g.two_rank();
  if (r < 1) return false;
  if (g.order() != 3 * (std::uint64_t{1} << r)) return false;
  return std::all_of(g.moduli().begin(), g.moduli().end(), [](int m) { return m % 4 != 0; });
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace sumfree
