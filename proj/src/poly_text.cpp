#include <cctype>
#include <charconv>
#include <map>
#include <string>

#include "cyclofactor/error.hpp"
#include "cyclofactor/poly.hpp"

namespace cyclofactor::poly {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  const std::string t = strip(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("invalid " + what + ": '" + s + "'");
  return v;
}

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool done() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(start, i_ - start);
  }
  std::string until(char c) {
    const std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != c) ++i_;
    if (i_ >= s_.size()) throw ParseError("missing '" + std::string(1, c) + "' in '" + s_ + "'");
    std::string out = s_.substr(start, i_ - start);
    ++i_;
    return out;
  }
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(i_) + " in '" + s_ + "'");
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = c[i].is_one();
    if (i == 0) {
      out += c[i].to_string();
      continue;
    }
    if (!unit) out += c[i].to_string() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FieldElem parse_element(Field f, const std::string& text) {
  const std::string t = strip(text);
  if (t.empty()) throw ParseError("empty field element");
  if (t.front() == '[') {
    if (t.back() != ']') throw ParseError("unterminated coordinate list: '" + text + "'");
    const std::string body = t.substr(1, t.size() - 2);
    std::vector<std::uint64_t> high_first;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      high_first.push_back(parse_u64(body.substr(start, comma - start), "coordinate"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (high_first.size() != f.m())
      throw ParseError("expected " + std::to_string(f.m()) + " coordinates in '" + text + "'");
    ff::Coords c(f.m(), 0);
    for (std::size_t i = 0; i < high_first.size(); ++i) {
      if (high_first[i] >= f.p()) throw ParseError("coordinate out of range in '" + text + "'");
      c[f.m() - 1 - i] = high_first[i];
    }
    return f.from_coords(std::move(c));
  }
  bool negative = false;
  std::string digits = t;
  if (digits.front() == '-') {
    negative = true;
    digits = strip(digits.substr(1));
  }
  const std::uint64_t v = parse_u64(digits, "field element") % f.p();
  const FieldElem e = f.from_int(static_cast<std::int64_t>(v));
  return negative ? -e : e;
}

Poly parse_poly(Field f, const std::string& text) {
  Cursor cur(text);
  std::map<std::size_t, FieldElem> terms;
  if (cur.done()) throw ParseError("empty polynomial");
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('+')) {
      if (first) cur.error("leading '+'");
    } else if (cur.accept('-')) {
      negative = true;
    } else if (!first) {
      cur.error("expected '+' or '-'");
    }
    first = false;

    std::optional<FieldElem> coeff;
    if (cur.peek() == '[') {
      cur.accept('[');
      coeff = parse_element(f, "[" + cur.until(']') + "]");
    } else if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = parse_element(f, cur.digits());
    }
    std::size_t exp = 0;
    bool has_x = false;
    if (coeff) cur.accept('*');
    const char c = cur.peek();
    if (c == 'x' || c == 'X') {
      cur.accept(c);
      has_x = true;
      exp = 1;
      if (cur.accept('^')) {
        const std::string d = cur.digits();
        if (d.empty()) cur.error("expected exponent");
        exp = parse_u64(d, "exponent");
      }
    }
    if (!coeff && !has_x) cur.error("expected a term");
    FieldElem value = coeff ? *coeff : f.one();
    if (negative) value = -value;
    auto it = terms.find(exp);
    if (it == terms.end())
      terms.emplace(exp, value);
    else
      it->second += value;
  }
  const std::size_t top = terms.rbegin()->first;
  std::vector<FieldElem> coeffs(top + 1, f.zero());
  for (auto& [e, v] : terms) coeffs[e] = v;
  return Poly(f, std::move(coeffs));
}

Field parse_field(const std::string& spec_in) {
  const std::string spec = strip(spec_in);
  if (spec.empty()) throw ParseError("empty field specification");
  const std::size_t slash = spec.find('/');
  const std::string head = strip(spec.substr(0, slash));
  const std::size_t caret = head.find('^');
  std::uint64_t p = 0;
  unsigned m = 1;
  if (caret == std::string::npos) {
    const std::uint64_t q = parse_u64(head, "field size");
    if (q < 2) fail(Errc::NotPrime, head + " is not a prime power");
    const auto fac = nt::factor(q);
    if (fac.factors.size() != 1) fail(Errc::NotPrime, head + " is not a prime power");
    p = fac.factors.begin()->first;
    m = fac.factors.begin()->second;
  } else {
    p = parse_u64(head.substr(0, caret), "characteristic");
    const std::uint64_t mm = parse_u64(head.substr(caret + 1), "extension degree");
    if (mm == 0 || mm > 4096) throw ParseError("extension degree out of range in '" + spec + "'");
    m = static_cast<unsigned>(mm);
  }
  if (slash == std::string::npos) return ff::make_extension(p, m);
  std::vector<std::uint64_t> high_first;
  const std::string body = spec.substr(slash + 1);
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    high_first.push_back(parse_u64(body.substr(start, comma - start), "modulus coefficient"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::vector<std::uint64_t> low_first(high_first.rbegin(), high_first.rend());
  return ff::make_extension(p, m, low_first);
}

}  // namespace cyclofactor::poly
