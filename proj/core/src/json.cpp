#include "coinc/json.hpp"

#include <stdexcept>

namespace coinc {

using nlohmann::ordered_json;

ordered_json to_json(const GradedPoly& f) {
  ordered_json terms = ordered_json::array();
  const Ring& ring = f.ring();
  for (const auto& t : f.terms()) {
    ordered_json exps = ordered_json::object();
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0) exps[ring.generators()[i].name] = t.mono[i];
    terms.push_back({{"coeff", t.coeff}, {"exps", std::move(exps)}});
  }
  return {{"ring", ring.id()}, {"terms", std::move(terms)}};
}

GradedPoly poly_from_json(const Ring& ring, const ordered_json& j) {
  std::vector<Term> raw;
  for (const auto& t : j.at("terms")) {
    ExponentMap exps;
    for (const auto& [name, e] : t.at("exps").items()) exps.push_back({name, e.get<unsigned>()});
    raw.push_back({ring.monomial(exps), Residue(t.at("coeff").get<long long>() % ring.characteristic())});
  }
  return GradedPoly(ring, std::move(raw));
}

ordered_json to_json(const charclass::SqdResult& r) {
  return {{"q", r.q},
          {"d", r.d},
          {"degree", (r.q - 1) * (r.d + 1)},
          {"nu", r.nu},
          {"mu", r.mu},
          {"text", r.formula.to_string()},
          {"formula", to_json(r.formula)}};
}

ordered_json to_json(const charclass::AlphaResult& r) {
  return {{"p", r.p},
          {"i", r.i},
          {"k", r.k},
          {"degree", 2 * int(r.p - 1) * r.i},
          {"text", r.formula.to_string()},
          {"formula", to_json(r.formula)}};
}

ordered_json to_json(const spaces::ClassSeries& s) {
  return {{"ring", s.ring.id()}, {"virtual_dim", s.virtual_dim}, {"total", to_json(s.total)}};
}

ordered_json to_json(const certify::Certificate& c) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : c.params) std::visit([&](const auto& x) { params[k] = x; }, v);
  return {{"kind", certify::kind_name(c.kind)},
          {"params", std::move(params)},
          {"evaluated", to_json(c.evaluated)},
          {"witness", c.witness ? to_json(*c.witness) : ordered_json(nullptr)},
          {"bound", c.bound ? ordered_json(*c.bound) : ordered_json(nullptr)},
          {"conclusive", c.conclusive},
          {"notes", c.notes}};
}

namespace {

std::string rational_text(const oracle::Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

template <class S>
ordered_json tuple_json(const oracle::CoincidentTuple<S>& t, bool exact) {
  ordered_json points = ordered_json::array();
  for (const auto& p : t.points) {
    ordered_json row = ordered_json::array();
    for (const auto& x : p) row.push_back(to_json(x));
    points.push_back(std::move(row));
  }
  ordered_json image = ordered_json::array();
  for (const auto& x : t.image) image.push_back(to_json(x));
  return {{"exact", exact},
          {"points", std::move(points)},
          {"image", std::move(image)},
          {"residual", to_json(t.residual)},
          {"min_separation", to_json(t.min_separation)}};
}

}  // namespace

ordered_json to_json(const oracle::Rational& r) { return rational_text(r); }
ordered_json to_json(double x) { return x; }

ordered_json to_json(const oracle::CoincidentTuple<oracle::Rational>& t) { return tuple_json(t, true); }
ordered_json to_json(const oracle::CoincidentTuple<double>& t) { return tuple_json(t, false); }

}  // namespace coinc
