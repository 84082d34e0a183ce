#include "coinc/gpoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace coinc {

namespace {

void trim_zeros(std::vector<Exponent>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) { trim_zeros(exps_); }

bool Monomial::is_one() const { return exps_.empty(); }

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() > other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  const auto& a = exps_.size() >= other.exps_.size() ? exps_ : other.exps_;
  const auto& b = exps_.size() >= other.exps_.size() ? other.exps_ : exps_;
  std::vector<Exponent> out(a);
  for (std::size_t i = 0; i < b.size(); ++i) {
    unsigned s = unsigned(out[i]) + b[i];
    if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    out[i] = Exponent(s);
  }
  Monomial m;
  m.exps_ = std::move(out);
  return m;
}

bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Ring

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Residue mod_p(long long c, std::uint32_t p) {
  long long r = c % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

class RingPresentation {
 public:
  std::uint32_t p = 2;
  std::vector<Generator> gens;
  std::vector<Monomial> relations;
  std::string id;
  std::optional<int> top;
};

namespace {

std::string render_monomial(std::span<const Generator> gens, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

Ring Ring::create(std::uint32_t p, std::vector<Generator> generators,
                  const std::vector<ExponentMap>& relations) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  auto impl = std::make_shared<RingPresentation>();
  impl->p = p;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (!valid_name(g.name)) throw std::invalid_argument("invalid generator name '" + g.name + "'");
    if (g.degree < 1) throw std::invalid_argument("generator " + g.name + " must have degree >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j].name == g.name)
        throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  }
  impl->gens = std::move(generators);

  std::vector<Monomial> rels;
  for (const auto& rel : relations) {
    std::vector<Exponent> e(impl->gens.size(), 0);
    for (const auto& [name, exp] : rel) {
      auto it = std::find_if(impl->gens.begin(), impl->gens.end(),
                             [&](const Generator& g) { return g.name == name; });
      if (it == impl->gens.end())
        throw std::invalid_argument("relation uses undeclared generator '" + name + "'");
      e[std::size_t(it - impl->gens.begin())] += Exponent(exp);
    }
    Monomial m(std::move(e));
    if (m.is_one()) throw std::invalid_argument("relation 1 = 0 collapses the ring");
    rels.push_back(std::move(m));
  }
  // Minimal generating set: drop relations divisible by another relation.
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < rels.size() && !redundant; ++j) {
      if (i == j) continue;
      if (rels[j].divides(rels[i]) && (!(rels[j] == rels[i]) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(rels[i]);
  }
  impl->relations = std::move(minimal);

  // Pure-power relations bound the top degree.
  std::vector<int> cap(impl->gens.size(), -1);
  for (const auto& r : impl->relations) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) ++nz, idx = i;
    if (nz == 1) cap[idx] = int(r[idx]) - 1;
  }
  if (std::all_of(cap.begin(), cap.end(), [](int c) { return c >= 0; })) {
    int top = 0;
    for (std::size_t i = 0; i < cap.size(); ++i) top += cap[i] * impl->gens[i].degree;
    impl->top = top;
  }

  std::string id = "Z" + std::to_string(p) + "[";
  for (std::size_t i = 0; i < impl->gens.size(); ++i) {
    if (i) id += ',';
    id += impl->gens[i].name;
    if (impl->gens[i].degree != 1) id += ":" + std::to_string(impl->gens[i].degree);
  }
  id += "]";
  if (!impl->relations.empty()) {
    id += "/(";
    for (std::size_t i = 0; i < impl->relations.size(); ++i) {
      if (i) id += ',';
      id += render_monomial(impl->gens, impl->relations[i]);
    }
    id += ")";
  }
  impl->id = std::move(id);
  return Ring(std::move(impl));
}

Ring Ring::truncated(std::uint32_t p, std::vector<Generator> generators,
                     const std::vector<unsigned>& powers) {
  if (powers.size() != generators.size())
    throw std::invalid_argument("one truncation power per generator required");
  std::vector<ExponentMap> rels;
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (powers[i] > 0) rels.push_back({{generators[i].name, powers[i]}});
  return create(p, std::move(generators), rels);
}

std::uint32_t Ring::characteristic() const { return impl_->p; }
std::span<const Generator> Ring::generators() const { return impl_->gens; }
std::size_t Ring::num_generators() const { return impl_->gens.size(); }
const std::vector<Monomial>& Ring::relations() const { return impl_->relations; }
std::optional<int> Ring::top_degree() const { return impl_->top; }
const std::string& Ring::id() const { return impl_->id; }

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < impl_->gens.size(); ++i)
    if (impl_->gens[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown generator '" + std::string(name) + "' in " + id());
  return *i;
}

Monomial Ring::monomial(const ExponentMap& exps) const {
  std::vector<Exponent> e(num_generators(), 0);
  for (const auto& [name, exp] : exps) e[require_index(name)] += Exponent(exp);
  return Monomial(std::move(e));
}

int Ring::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += int(m[i]) * impl_->gens[i].degree;
  return d;
}

bool Ring::is_zero(const Monomial& m) const {
  for (const auto& r : impl_->relations)
    if (r.divides(m)) return true;
  return false;
}

bool Ring::precedes(const Monomial& a, const Monomial& b) const {
  int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::string Ring::render(const Monomial& m) const { return render_monomial(impl_->gens, m); }

bool operator==(const Ring& a, const Ring& b) { return a.impl_ == b.impl_ || a.impl_->id == b.impl_->id; }

// ---------------------------------------------------------------------------
// GradedPoly

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw std::invalid_argument("ring mismatch: " + a.id() + " vs " + b.id());
}

}  // namespace

GradedPoly::GradedPoly(Ring ring) : ring_(std::move(ring)) {}

GradedPoly::GradedPoly(Ring ring, std::vector<Term> raw_terms) : ring_(std::move(ring)) {
  const std::uint32_t p = ring_.characteristic();
  std::unordered_map<Monomial, Residue, MonomialHash> acc;
  acc.reserve(raw_terms.size());
  for (auto& t : raw_terms) {
    if (t.coeff % p == 0) continue;
    if (t.mono.size() > ring_.num_generators())
      throw std::invalid_argument("monomial has more variables than " + ring_.id());
    if (ring_.is_zero(t.mono)) continue;
    auto& c = acc[std::move(t.mono)];
    c = Residue((std::uint64_t(c) + t.coeff % p) % p);
  }
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms_.push_back({m, c});
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ring_.precedes(a.mono, b.mono); });
}

GradedPoly GradedPoly::constant(const Ring& ring, long long c) {
  return GradedPoly(ring, {{Monomial(), mod_p(c, ring.characteristic())}});
}

GradedPoly GradedPoly::gen(const Ring& ring, std::string_view name) {
  std::vector<Exponent> e(ring.num_generators(), 0);
  e[ring.require_index(name)] = 1;
  return GradedPoly(ring, {{Monomial(std::move(e)), 1}});
}

GradedPoly GradedPoly::monomial(const Ring& ring, const ExponentMap& exps, long long c) {
  return GradedPoly(ring, {{ring.monomial(exps), mod_p(c, ring.characteristic())}});
}

Residue GradedPoly::constant_term() const { return coefficient(Monomial()); }

Residue GradedPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

bool GradedPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = ring_.degree(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_.degree(t.mono) == d; });
}

std::optional<int> GradedPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return ring_.degree(terms_.front().mono);
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& g) {
  require_same_ring(ring_, g.ring_);
  const std::uint32_t p = ring_.characteristic();
  std::vector<Term> merged;
  merged.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size() || (i < terms_.size() && ring_.precedes(terms_[i].mono, g.terms_[j].mono))) {
      merged.push_back(terms_[i++]);
    } else if (i == terms_.size() || ring_.precedes(g.terms_[j].mono, terms_[i].mono)) {
      merged.push_back(g.terms_[j++]);
    } else {
      Residue c = Residue((std::uint64_t(terms_[i].coeff) + g.terms_[j].coeff) % p);
      if (c != 0) merged.push_back({terms_[i].mono, c});
      ++i, ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(*this);
  const std::uint32_t p = ring_.characteristic();
  for (auto& t : out.terms_) t.coeff = p - t.coeff;
  return out;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& g) { return *this += -g; }

GradedPoly& GradedPoly::operator*=(const GradedPoly& g) {
  *this = *this * g;
  return *this;
}

GradedPoly operator*(const GradedPoly& f, const GradedPoly& g) {
  require_same_ring(f.ring_, g.ring_);
  const Ring& ring = f.ring_;
  const std::uint64_t p = ring.characteristic();
  std::unordered_map<Monomial, Residue, MonomialHash> acc;
  acc.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      Monomial m = a.mono * b.mono;
      if (ring.is_zero(m)) continue;
      auto& c = acc[std::move(m)];
      c = Residue((c + std::uint64_t(a.coeff) * b.coeff) % p);
    }
  }
  GradedPoly out(ring);
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  std::sort(out.terms_.begin(), out.terms_.end(),
            [&](const Term& x, const Term& y) { return ring.precedes(x.mono, y.mono); });
  return out;
}

GradedPoly operator*(long long c, const GradedPoly& f) {
  const std::uint32_t p = f.ring_.characteristic();
  Residue r = mod_p(c, p);
  GradedPoly out(f.ring_);
  if (r == 0) return out;
  out.terms_ = f.terms_;
  for (auto& t : out.terms_) t.coeff = Residue(std::uint64_t(t.coeff) * r % p);
  return out;
}

bool operator==(const GradedPoly& f, const GradedPoly& g) {
  if (!(f.ring_ == g.ring_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
      out += ring_.render(t.mono);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

GradedPoly pow(const GradedPoly& f, unsigned n) {
  GradedPoly result = GradedPoly::constant(f.ring(), 1);
  GradedPoly base = f;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

GradedPoly normal_form(const Ring& ring, std::vector<Term> raw_terms) {
  return GradedPoly(ring, std::move(raw_terms));
}

GradedPoly normal_form(const GradedPoly& f) {
  return GradedPoly(f.ring(), std::vector<Term>(f.terms().begin(), f.terms().end()));
}

GradedPoly coefficient_of(const GradedPoly& f, const ExponentMap& selector) {
  const Ring& ring = f.ring();
  std::vector<std::pair<std::size_t, unsigned>> sel;
  for (const auto& [name, exp] : selector) sel.emplace_back(ring.require_index(name), exp);
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    bool match = std::all_of(sel.begin(), sel.end(),
                             [&](const auto& s) { return t.mono[s.first] == s.second; });
    if (!match) continue;
    std::vector<Exponent> e = t.mono.exponents();
    for (const auto& s : sel)
      if (s.first < e.size()) e[s.first] = 0;
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return GradedPoly(ring, std::move(out));
}

GradedPoly graded_component(const GradedPoly& f, int k) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (f.ring().degree(t.mono) == k) out.push_back(t);
  return GradedPoly(f.ring(), std::move(out));
}

GradedPoly truncate_degree(const GradedPoly& f, int max_degree) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (f.ring().degree(t.mono) <= max_degree) out.push_back(t);
  return GradedPoly(f.ring(), std::move(out));
}

GradedPoly invert_unit_series(const GradedPoly& f, int trunc) {
  if (f.constant_term() != 1)
    throw std::invalid_argument("series " + f.to_string() + " does not have constant term 1");
  const Ring& ring = f.ring();
  // f = 1 - h with h of positive degree; 1/f = sum_k h^k, h^k has degree >= k.
  GradedPoly h = GradedPoly::constant(ring, 1) - f;
  GradedPoly result = GradedPoly::constant(ring, 1);
  GradedPoly power = GradedPoly::constant(ring, 1);
  for (int k = 1; k <= trunc; ++k) {
    power = truncate_degree(power * h, trunc);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

GradedPoly substitute(const GradedPoly& f, const Ring& target, std::span<const GradedPoly> images) {
  const Ring& src = f.ring();
  if (images.size() != src.num_generators())
    throw std::invalid_argument("substitute: need one image per generator of " + src.id());
  for (const auto& img : images) require_same_ring(img.ring(), target);
  if (target.characteristic() != src.characteristic())
    throw std::invalid_argument("substitute: characteristic mismatch");
  // Cache powers of each image.
  std::vector<std::vector<GradedPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned e) -> const GradedPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(GradedPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  GradedPoly out(target);
  for (const auto& t : f.terms()) {
    GradedPoly term = GradedPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < t.mono.size() && !term.is_zero(); ++i)
      if (t.mono[i] != 0) term *= power_of(i, t.mono[i]);
    out += term;
  }
  return out;
}

GradedPoly transfer(const GradedPoly& f, const Ring& target) {
  const Ring& src = f.ring();
  if (src.characteristic() != target.characteristic())
    throw std::invalid_argument("transfer: characteristic mismatch");
  std::vector<std::size_t> map(src.num_generators());
  std::vector<bool> present(src.num_generators(), false);
  for (std::size_t i = 0; i < src.num_generators(); ++i) {
    auto j = target.index_of(src.generators()[i].name);
    if (j) map[i] = *j, present[i] = true;
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target.num_generators(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!present[i])
        throw std::invalid_argument("transfer: generator " + src.generators()[i].name +
                                    " missing from " + target.id());
      e[map[i]] = t.mono[i];
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return GradedPoly(target, std::move(out));
}

Residue evaluate(const GradedPoly& f, std::span<const Residue> values) {
  const std::uint64_t p = f.ring().characteristic();
  if (values.size() < f.ring().num_generators())
    throw std::invalid_argument("evaluate: too few values");
  std::uint64_t sum = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (Exponent e = 0; e < t.mono[i]; ++e) v = v * (values[i] % p) % p;
    sum = (sum + v) % p;
  }
  return Residue(sum);
}

// ---------------------------------------------------------------------------
// Parser: sum of signed terms, each term "c", "c*m", "m" with m = g^e*g^e...

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), s_(text) {}

  GradedPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(parse_term(negative));
      skip_ws();
      if (pos_ == s_.size()) break;
    }
    return GradedPoly(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    const std::uint32_t p = ring_.characteristic();
    std::uint64_t coeff = 1;
    std::vector<Exponent> exps(ring_.num_generators(), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = coeff * (parse_uint() % p) % p;
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::size_t idx = ring_.require_index(s_.substr(start, pos_ - start));
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = unsigned(parse_uint());
        }
        exps[idx] = Exponent(exps[idx] + e);
      } else {
        fail("expected coefficient or generator");
      }
      any = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    Residue c = Residue(coeff % p);
    if (negative) c = Residue((p - c) % p);
    return {Monomial(std::move(exps)), c};
  }

  std::uint64_t parse_uint() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range");
    return v;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly parse_poly(const Ring& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace coinc
