#include "vh/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <tuple>

#include "vh/errors.hpp"

namespace vh {

namespace {

template <class T>
bool key_less(const T& a, const T& b) {
  if constexpr (requires { a.s; }) {
    if (a.s != b.s) return a.s < b.s;
  }
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

template <class T>
bool key_eq(const T& a, const T& b) {
  if constexpr (requires { a.s; }) {
    if (a.s != b.s) return false;
  }
  return a.p == b.p && a.q == b.q;
}

// Sorts, merges equal keys and drops zeros.
template <class T>
void canonicalize(std::vector<T>& v) {
  std::sort(v.begin(), v.end(), [](const T& a, const T& b) { return key_less(a, b); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    while (j < v.size() && key_eq(v[i], v[j])) {
      v[i].c += v[j].c;
      ++j;
    }
    if (v[i].c != 0) {
      if (out != i) v[out] = std::move(v[i]);
      ++out;
    }
    i = j;
  }
  v.resize(out);
}

// Merge of two canonical sorted lists with sign on the right operand.
template <class T>
std::vector<T> merge_add(const std::vector<T>& a, const std::vector<T>& b, bool subtract) {
  std::vector<T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && key_less(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || key_less(b[j], a[i])) {
      out.push_back(b[j++]);
      if (subtract) out.back().c = -out.back().c;
    } else {
      T t = a[i];
      if (subtract)
        t.c -= b[j].c;
      else
        t.c += b[j].c;
      if (t.c != 0) out.push_back(std::move(t));
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint32_t add_deg(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("p/q degree overflow");
  return r;
}

void append_factor(std::string& out, bool& first_factor, const char* var, std::int64_t e) {
  if (e == 0) return;
  if (!first_factor) out += '*';
  first_factor = false;
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

// Writes |c| * p^a * q^b * s^k with unit parts omitted.
std::string monomial_body(const mpz_class& abs_c, std::uint32_t a, std::uint32_t b, std::int64_t k) {
  std::string out;
  bool first = true;
  bool bare = a == 0 && b == 0 && k == 0;
  if (abs_c != 1 || bare) {
    out += abs_c.get_str();
    first = false;
  }
  append_factor(out, first, "p", a);
  append_factor(out, first, "q", b);
  append_factor(out, first, "s", k);
  return out;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view t) : t_(t) {}

  LaurentPoly parse() {
    std::vector<LaurentPoly::Term> terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    for (;;) {
      skip();
      if (at_end()) break;
      int sign = 1;
      if (peek_minus()) {
        eat_minus();
        sign = -1;
      } else if (t_[pos_] == '+') {
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip();
      terms.push_back(parse_term(sign));
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  LaurentPoly::Term parse_term(int sign) {
    LaurentPoly::Term term{0, 0, 0, mpz_class(sign)};
    bool any = false;
    for (;;) {
      skip();
      if (at_end()) break;
      char c = t_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
        term.c *= mpz_class(std::string(t_.substr(start, pos_ - start)));
      } else if (c == 'p' || c == 'q' || c == 's') {
        ++pos_;
        std::int64_t e = 1;
        skip();
        if (!at_end() && t_[pos_] == '^') {
          ++pos_;
          skip();
          e = parse_int();
        }
        if (c == 's') {
          term.s += e;
        } else {
          if (e < 0) fail("negative power of p or q");
          if (c == 'p') term.p = add_deg(term.p, static_cast<std::uint32_t>(e));
          else term.q = add_deg(term.q, static_cast<std::uint32_t>(e));
        }
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip();
      if (!at_end() && t_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return term;
  }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    if (peek_minus()) {
      eat_minus();
    }
    bool neg = pos_ != start;
    std::size_t ds = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (ds == pos_) fail("expected exponent");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(t_.data() + ds, t_.data() + pos_, v);
    if (ec != std::errc() || ptr != t_.data() + pos_) fail("exponent out of range");
    return neg ? -v : v;
  }

  // ASCII '-' or U+2212
  bool peek_minus() const {
    if (at_end()) return false;
    if (t_[pos_] == '-') return true;
    return t_.substr(pos_, 3) == "\xE2\x88\x92";
  }
  void eat_minus() { pos_ += t_[pos_] == '-' ? 1 : 3; }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= t_.size(); }
  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + m);
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

// ---- PQCoef ----

PQCoef::PQCoef(mpz_class c) {
  if (c != 0) terms_.push_back({0, 0, std::move(c)});
}

PQCoef PQCoef::monomial(mpz_class c, std::uint32_t p, std::uint32_t q) {
  PQCoef r;
  if (c != 0) r.terms_.push_back({p, q, std::move(c)});
  return r;
}

mpz_class PQCoef::coeff(std::uint32_t a, std::uint32_t b) const {
  for (const auto& t : terms_)
    if (t.p == a && t.q == b) return t.c;
  return 0;
}

PQCoef PQCoef::operator+(const PQCoef& o) const {
  PQCoef r;
  r.terms_ = merge_add(terms_, o.terms_, false);
  return r;
}

PQCoef PQCoef::operator-(const PQCoef& o) const {
  PQCoef r;
  r.terms_ = merge_add(terms_, o.terms_, true);
  return r;
}

PQCoef PQCoef::operator-() const {
  PQCoef r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

PQCoef PQCoef::operator*(const PQCoef& o) const {
  PQCoef r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.terms_.push_back({add_deg(a.p, b.p), add_deg(a.q, b.q), a.c * b.c});
  canonicalize(r.terms_);
  return r;
}

bool PQCoef::operator==(const PQCoef& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!key_eq(terms_[i], o.terms_[i]) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::string PQCoef::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool neg = it->c < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += monomial_body(abs(it->c), it->p, it->q, 0);
  }
  return out;
}

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({0, 0, 0, mpz_class(c)});
}

LaurentPoly LaurentPoly::monomial(mpz_class c, std::int64_t s, std::uint32_t p, std::uint32_t q) {
  LaurentPoly r;
  if (c != 0) r.terms_.push_back({s, p, q, std::move(c)});
  return r;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly r;
  r.terms_ = std::move(terms);
  canonicalize(r.terms_);
  return r;
}

PQCoef LaurentPoly::coeff(std::int64_t k) const {
  PQCoef r;
  for (const auto& t : terms_)
    if (t.s == k) r.terms_.push_back({t.p, t.q, t.c});
  return r;
}

LaurentPoly LaurentPoly::add(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_ = merge_add(terms_, o.terms_, false);
  return r;
}

LaurentPoly LaurentPoly::sub(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_ = merge_add(terms_, o.terms_, true);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

LaurentPoly LaurentPoly::mul(const LaurentPoly& o) const {
  LaurentPoly r;
  if (terms_.empty() || o.terms_.empty()) return r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      std::int64_t s;
      if (__builtin_add_overflow(a.s, b.s, &s)) throw Error("s-exponent overflow");
      r.terms_.push_back({s, add_deg(a.p, b.p), add_deg(a.q, b.q), a.c * b.c});
    }
  canonicalize(r.terms_);
  return r;
}

bool LaurentPoly::equals(const LaurentPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!key_eq(terms_[i], o.terms_[i]) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  // descending s; inside one power of s, descending (p, q)
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    bool neg = it->c < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += monomial_body(abs(it->c), it->p, it->q, it->s);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b != std::string_view::npos && text.substr(b) == "0") return LaurentPoly();
  return PolyParser(text).parse();
}

LeadingForm leading_form(const LaurentPoly& d) {
  if (d.is_zero()) throw ZeroPolynomial("leading form of the zero polynomial");
  std::int64_t k = d.terms().back().s;
  return {k, d.coeff(k)};
}

bool q_divides(const LaurentPoly& d) {
  return std::all_of(d.terms().begin(), d.terms().end(), [](const auto& t) { return t.q >= 1; });
}

bool is_linear_pq(const LaurentPoly& d) {
  return std::all_of(d.terms().begin(), d.terms().end(),
                     [](const auto& t) { return t.p + t.q == 1; });
}

bool equal_up_to_unit(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.terms().size() != g.terms().size()) return false;
  std::int64_t shift = f.terms().front().s - g.terms().front().s;
  for (int sign : {1, -1}) {
    if (f == LaurentPoly::monomial(sign, shift) * g) return true;
  }
  return false;
}

LaurentPoly specialize_pq(const LaurentPoly& d, long p, long q) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(d.terms().size());
  for (const auto& t : d.terms()) {
    mpz_class pp, qq;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p < 0 ? -p : p), t.p);
    mpz_ui_pow_ui(qq.get_mpz_t(), static_cast<unsigned long>(q < 0 ? -q : q), t.q);
    if (p < 0 && (t.p & 1)) pp = -pp;
    if (q < 0 && (t.q & 1)) qq = -qq;
    out.push_back({t.s, 0, 0, t.c * pp * qq});
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace vh
