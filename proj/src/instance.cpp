/*
   Copyright 2026 The hwm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hwm/instance.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hwm/errors.hpp"
#include "hwm/modp.hpp"

namespace hwm {

using nlohmann::json;

AugmentedVector augment(std::span<const int> exponents) {
  AugmentedVector v(exponents.begin(), exponents.end());
  v.push_back(1);
  return v;
}

std::uint64_t HypersurfaceSpec::q() const { return field->size(); }

int HypersurfaceSpec::mu() const { return (n + 1 + d - 1) / d - 1; }

MonomialSupport HypersurfaceSpec::support() const {
  MonomialSupport s{n, d, {}};
  for (const auto& t : terms) s.vectors.push_back(augment(t.exponents));
  return s;
}

std::vector<FieldElement> HypersurfaceSpec::coefficients() const {
  std::vector<FieldElement> out;
  for (const auto& t : terms) out.push_back(t.coeff);
  return out;
}

bool HypersurfaceSpec::all_coefficients_zero() const {
  for (const auto& t : terms)
    if (!t.coeff.is_zero()) return false;
  return true;
}

bool operator==(const HypersurfaceSpec& x, const HypersurfaceSpec& y) {
  if (x.p != y.p || x.a != y.a || x.n != y.n || x.d != y.d || x.terms.size() != y.terms.size()) return false;
  for (std::size_t j = 0; j < x.terms.size(); ++j)
    if (x.terms[j].exponents != y.terms[j].exponents || x.terms[j].coeff != y.terms[j].coeff) return false;
  return true;
}

HypersurfaceSpec make_spec(std::uint32_t p, std::uint32_t a, int n, int d, std::vector<Term> terms) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (a < 1) throw InputError("a must be at least 1");
  if (n < 1) throw InputError("n must be at least 1");
  if (d < 2) throw InputError("degree d must be at least 2");
  if (terms.empty()) throw InputError("instance has no terms");
  HypersurfaceSpec spec;
  spec.p = p;
  spec.a = a;
  spec.n = n;
  spec.d = d;
  spec.field = make_field(p, a);
  std::set<std::vector<int>> seen;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& e = terms[j].exponents;
    const std::string where = "term " + std::to_string(j + 1);
    if (e.size() != static_cast<std::size_t>(n + 1))
      throw InputError(where + ": expected " + std::to_string(n + 1) + " exponents");
    int sum = 0;
    for (int x : e) {
      if (x < 0) throw InputError(where + ": negative exponent");
      sum += x;
    }
    if (sum != d)
      throw InputError(where + ": non-homogeneous term (exponent sum " + std::to_string(sum) + " != d = " +
                       std::to_string(d) + ")");
    if (!seen.insert(e).second) throw InputError(where + ": duplicate exponent vector");
    if (terms[j].coeff.ctx() != spec.field.get()) throw InputError(where + ": coefficient is not in F_q");
  }
  spec.terms = std::move(terms);
  return spec;
}

namespace {

struct CoeffParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool at_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (std::int64_t{1} << 40)) throw InputError("malformed coefficient '" + std::string(s) + "': integer too large");
      ++pos;
    }
    if (pos == start) fail("expected an integer");
    return v;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("malformed coefficient '" + std::string(s) + "': " + why + " at offset " + std::to_string(pos));
  }
};

constexpr std::int64_t kMaxGeneratorPower = 4096;

}  // namespace

FieldElement parse_coefficient(std::string_view text, const FieldCtx& field) {
  CoeffParser ps{text};
  std::vector<std::int64_t> poly;
  const std::uint32_t p = field.characteristic();
  bool first = true;
  ps.skip_ws();
  if (ps.pos == text.size()) ps.fail("empty coefficient");
  while (true) {
    ps.skip_ws();
    if (ps.pos == text.size()) break;
    std::int64_t sign = 1;
    if (ps.peek('+') || ps.peek('-')) {
      sign = text[ps.pos] == '-' ? -1 : 1;
      ++ps.pos;
    } else if (!first) {
      ps.fail("expected '+' or '-'");
    }
    first = false;
    std::int64_t c = 1;
    bool have_int = false;
    if (ps.at_digit()) {
      c = ps.integer();
      have_int = true;
    }
    bool star = false;
    if (ps.peek('*')) {
      if (!have_int) ps.fail("'*' needs an integer before it");
      ++ps.pos;
      star = true;
    }
    std::int64_t power = 0;
    if (ps.peek('g')) {
      ++ps.pos;
      power = 1;
      if (ps.peek('^')) {
        ++ps.pos;
        power = ps.integer();
        if (power > kMaxGeneratorPower) ps.fail("generator power too large");
      }
      if (field.degree() == 1)
        throw InputError("coefficient '" + std::string(text) + "' uses g, which is undefined over a prime field");
    } else if (star || !have_int) {
      ps.fail("expected a term");
    }
    if (poly.size() <= static_cast<std::size_t>(power)) poly.resize(power + 1, 0);
    poly[power] = modp::reduce(poly[power] + sign * modp::reduce(c, p), p);
  }
  return field.from_coeffs(poly);
}

std::string format_element(const FieldElement& x) {
  const auto c = x.coeffs();
  if (c.size() == 1) return std::to_string(c[0]);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "g";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::uint32_t read_uint(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InputError(std::string("key '") + key + "' must be a nonnegative integer");
  return v.get<std::uint32_t>();
}

}  // namespace

HypersurfaceSpec parse_spec(std::string_view text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  static const std::set<std::string> kTopKeys{"p", "a", "n", "d", "terms"};
  for (const auto& [key, value] : doc.items())
    if (!kTopKeys.count(key)) throw InputError("unknown key '" + key + "'");

  const std::uint32_t p = read_uint(doc, "p");
  const std::uint32_t a = read_uint(doc, "a");
  const int n = static_cast<int>(read_uint(doc, "n"));
  const int d = static_cast<int>(read_uint(doc, "d"));
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (a < 1) throw InputError("a must be at least 1");
  if (d < 2) throw InputError("degree d must be at least 2");
  const FieldPtr field = make_field(p, a);

  if (!doc.contains("terms") || !doc["terms"].is_array()) throw InputError("missing array 'terms'");
  std::vector<Term> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object()) throw InputError("each term must be an object");
    for (const auto& [key, value] : t.items())
      if (key != "exponents" && key != "coeff") throw InputError("unknown term key '" + key + "'");
    if (!t.contains("exponents") || !t["exponents"].is_array()) throw InputError("term without 'exponents' array");
    if (!t.contains("coeff")) throw InputError("term without 'coeff'");
    Term term;
    for (const auto& e : t["exponents"]) {
      if (!e.is_number_integer()) throw InputError("exponents must be integers");
      term.exponents.push_back(e.get<int>());
    }
    const auto& c = t["coeff"];
    if (c.is_string()) {
      term.coeff = parse_coefficient(c.get<std::string>(), *field);
    } else if (c.is_number_integer()) {
      term.coeff = field->from_int(c.get<std::int64_t>());
    } else {
      throw InputError("coefficient must be a string or an integer");
    }
    terms.push_back(std::move(term));
  }
  HypersurfaceSpec spec = make_spec(p, a, n, d, std::move(terms));
  if (warnings) {
    for (std::size_t j = 0; j < spec.terms.size(); ++j)
      if (spec.terms[j].coeff.is_zero())
        warnings->push_back("term " + std::to_string(j + 1) + " has coefficient zero");
  }
  return spec;
}

HypersurfaceSpec load_spec(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), warnings);
}

std::string serialize_spec(const HypersurfaceSpec& spec) {
  json doc;
  doc["p"] = spec.p;
  doc["a"] = spec.a;
  doc["n"] = spec.n;
  doc["d"] = spec.d;
  doc["terms"] = json::array();
  for (const auto& t : spec.terms) doc["terms"].push_back({{"exponents", t.exponents}, {"coeff", format_element(t.coeff)}});
  return doc.dump(2);
}

std::vector<std::vector<int>> all_monomials(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n + 1, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace hwm
