#include "tce/poly.hpp"

#include <cctype>

namespace tce {

std::string poly_to_string(const Poly& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  if (static_cast<int>(vars.size()) != f.nvars())
    throw std::invalid_argument("variable list does not match polynomial");
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out << "+";
    first = false;
    bool constant_term = mono_degree(m) == 0;
    bool printed = false;
    if (c != 1 || constant_term) {
      out << c;
      printed = true;
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) out << "*";
      out << vars[i];
      if (m[i] > 1) out << "^" << m[i];
      printed = true;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(i) + ": " + why + " in \"" + s + "\"");
  }
};

std::int64_t parse_number(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) c.fail("expected a number");
  return std::stoll(c.s.substr(start, c.i - start));
}

std::optional<int> parse_var(Cursor& c, const std::vector<std::string>& vars) {
  c.skip_ws();
  // longest match so multi-character names work
  int best = -1;
  std::size_t best_len = 0;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const std::string& name = vars[v];
    if (name.size() > best_len && c.s.compare(c.i, name.size(), name) == 0) {
      best = static_cast<int>(v);
      best_len = name.size();
    }
  }
  if (best < 0) return std::nullopt;
  c.i += best_len;
  return best;
}

} // namespace

Poly parse_poly(const PrimeField& field, const std::vector<std::string>& vars,
                const std::string& text) {
  int nvars = static_cast<int>(vars.size());
  Poly result(field, nvars);
  Cursor c{text};
  if (c.done()) c.fail("empty polynomial");
  bool first = true;
  while (!c.done()) {
    std::int64_t sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;

    std::int64_t coeff = 1;
    Monomial mono(nvars, 0);
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      c.skip_ws();
      if (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        coeff = field.mul(field.normalize(coeff), field.normalize(parse_number(c)));
        saw_factor = true;
      } else if (auto v = parse_var(c, vars)) {
        int e = 1;
        if (c.peek() == '^') {
          ++c.i;
          e = static_cast<int>(parse_number(c));
          if (e < 0) c.fail("negative exponent");
        }
        mono[*v] += e;
        saw_factor = true;
      } else {
        c.fail("expected a coefficient or variable");
      }
      if (c.peek() == '*') {
        ++c.i;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) c.fail("empty term");
    result.add_term(std::move(mono), sign * field.normalize(coeff));
  }
  return result;
}

std::vector<Monomial> monomials_of_degree(int nvars, int n) {
  std::vector<Monomial> out;
  if (n < 0 || nvars <= 0) return out;
  Monomial cur(nvars, 0);
  // depth-first, largest exponent on the first variable first: grlex desc
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur[var] = remaining;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  rec(rec, 0, n);
  return out;
}

} // namespace tce
