#include "coinc/spaces.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace coinc::spaces {

ClassSeries make_series(GradedPoly total, int virtual_dim) {
  if (total.constant_term() != 1 || !(graded_component(total, 0) == GradedPoly::constant(total.ring(), 1)))
    throw std::invalid_argument("total class " + total.to_string() + " must have degree-0 part 1");
  Ring ring = total.ring();
  return {std::move(ring), std::move(total), virtual_dim};
}

Ring rp_ring(int m) {
  if (m < 1) throw std::invalid_argument("RP^m needs m >= 1");
  return Ring::truncated(2, {{"u", 1}}, {unsigned(m + 1)});
}

ClassSeries normal_sw_rp(int m) {
  Ring ring = rp_ring(m);
  GradedPoly tangent = pow(GradedPoly::constant(ring, 1) + GradedPoly::gen(ring, "u"), unsigned(m + 1));
  return make_series(invert_unit_series(tangent, m), -m);
}

ClassSeries virtual_sw_rp(int m, int n) {
  if (n < 1) throw std::invalid_argument("target dimension n must be >= 1");
  ClassSeries s = normal_sw_rp(m);
  s.virtual_dim = n - m;
  return s;
}

ClassSeries cp_pontryagin_virtual(int m, int n, std::uint32_t p) {
  if (m < 1) throw std::invalid_argument("CP^m needs m >= 1");
  Ring ring = Ring::truncated(p, {{"x", 2}}, {unsigned(m + 1)});
  GradedPoly x = GradedPoly::gen(ring, "x");
  GradedPoly tangent = pow(GradedPoly::constant(ring, 1) + x * x, unsigned(m + 1));
  return make_series(invert_unit_series(tangent, 2 * m), n - 2 * m);
}

GradedPoly evaluate_class(const GradedPoly& F, const ClassSeries& S) {
  const Ring& fr = F.ring();
  if (fr.characteristic() != S.ring.characteristic())
    throw std::invalid_argument("class over Z" + std::to_string(fr.characteristic()) +
                                " evaluated on a series over Z" + std::to_string(S.ring.characteristic()));
  std::vector<GradedPoly> images;
  images.reserve(fr.num_generators());
  for (const auto& g : fr.generators()) images.push_back(graded_component(S.total, g.degree));
  return substitute(F, S.ring, images);
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ClassSeries parse_manifest(std::string_view text) {
  std::uint32_t p = 0;
  std::vector<Generator> gens;
  std::vector<ExponentMap> rels;
  std::string total_text;
  std::optional<int> vdim;
  std::vector<std::pair<int, std::string>> relation_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("manifest line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    std::istringstream args(rest);
    if (key == "characteristic") {
      long long v = 0;
      if (!(args >> v) || v < 2) fail("bad characteristic");
      p = std::uint32_t(v);
    } else if (key == "generator") {
      Generator g;
      if (!(args >> g.name >> g.degree)) fail("expected 'generator NAME DEGREE'");
      gens.push_back(g);
    } else if (key == "truncate") {
      std::string name;
      long long e = 0;
      if (!(args >> name >> e) || e < 1) fail("expected 'truncate NAME EXPONENT'");
      rels.push_back({{name, unsigned(e)}});
    } else if (key == "relation") {
      relation_lines.emplace_back(lineno, rest);
    } else if (key == "total") {
      if (rest.empty()) fail("empty total class");
      total_text = rest;
    } else if (key == "virtual_dim") {
      int v = 0;
      if (!(args >> v)) fail("expected integer virtual dimension");
      vdim = v;
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  lineno = 0;
  if (p == 0) fail("missing 'characteristic'");
  if (gens.empty()) fail("no generators declared");
  if (total_text.empty()) fail("missing 'total'");
  if (!vdim) fail("missing 'virtual_dim'");

  // Relations are monomials; parse them against a relation-free ring.
  Ring free_ring = Ring::create(p, gens);
  for (const auto& [ln, txt] : relation_lines) {
    lineno = ln;
    GradedPoly m = parse_poly(free_ring, txt);
    if (m.size() != 1 || m.terms()[0].coeff != 1) fail("relation must be a single monomial");
    ExponentMap exps;
    const Monomial& mono = m.terms()[0].mono;
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] != 0) exps.push_back({gens[i].name, mono[i]});
    rels.push_back(std::move(exps));
  }
  Ring ring = Ring::create(p, gens, rels);
  return make_series(parse_poly(ring, total_text), *vdim);
}

ClassSeries load_manifest(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open space manifest '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_manifest(buf.str());
}

}  // namespace coinc::spaces
