#include "qwalk/algebra.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

double Spinor3::norm_squared() const {
  return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]);
}

double Spinor3::norm() const { return std::sqrt(norm_squared()); }

bool Spinor3::is_finite() const {
  for (const auto& z : c) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

Spinor3 Spinor3::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("cannot normalize a zero or non-finite spinor");
  }
  Spinor3 out = *this;
  for (auto& z : out.c) z /= n;
  return out;
}

Spinor3& Spinor3::operator+=(const Spinor3& o) {
  for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
  return *this;
}

Spinor3& Spinor3::operator-=(const Spinor3& o) {
  for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
  return *this;
}

Spinor3& Spinor3::operator*=(Complex s) {
  for (auto& z : c) z *= s;
  return *this;
}

Complex inner(const Spinor3& a, const Spinor3& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
}

double max_abs_diff(const Spinor3& a, const Spinor3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Mat3 Mat3::identity() {
  Mat3 m;
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  return m;
}

Mat3 Mat3::from_real(const std::array<double, 9>& rows) {
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m.e[i] = rows[i];
  return m;
}

Mat3 Mat3::adjoint() const {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

Mat3 Mat3::conjugate() const {
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m.e[i] = std::conj(e[i]);
  return m;
}

Mat3 Mat3::mirrored() const {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = (*this)(2 - r, 2 - c);
  return m;
}

Complex Mat3::trace() const { return e[0] + e[4] + e[8]; }

Complex Mat3::determinant() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool Mat3::is_finite() const {
  for (const auto& z : e) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

Mat3& Mat3::operator+=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) e[i] += o.e[i];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) e[i] -= o.e[i];
  return *this;
}

Mat3& Mat3::operator*=(Complex s) {
  for (auto& z : e) z *= s;
  return *this;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      m(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return m;
}

Spinor3 operator*(const Mat3& m, const Spinor3& v) {
  Spinor3 out;
  for (std::size_t r = 0; r < 3; ++r) out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2];
  return out;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 9; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

double unitarity_defect(const Mat3& m) { return max_abs_diff(m.adjoint() * m, Mat3::identity()); }

double quadratic_form(const Mat3& m, const Spinor3& v) { return inner(v, m * v).real(); }

Mat3 grover_coin() {
  constexpr double a = -1.0 / 3.0;
  constexpr double b = 2.0 / 3.0;
  return Mat3::from_real({a, b, b, b, a, b, b, b, a});
}

HopMatrices hop_matrices() {
  constexpr double a = -1.0 / 3.0;
  constexpr double b = 2.0 / 3.0;
  HopMatrices h;
  h.right_hop = Mat3::from_real({0, 0, 0, 0, 0, 0, b, b, a});
  h.left_hop = Mat3::from_real({a, b, b, 0, 0, 0, 0, 0, 0});
  h.stay = Mat3::from_real({0, 0, 0, b, a, b, 0, 0, 0});
  return h;
}

namespace {

double parse_real(std::string_view s, std::string_view token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ParseError("invalid complex literal '" + std::string(token) + "'");
  }
  return value;
}

Complex parse_complex(std::string_view token) {
  if (token.empty()) throw ParseError("empty complex literal");
  if (token.back() != 'i') return {parse_real(token, token), 0.0};

  std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  double im = 0.0;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_text, token);
  }
  const double re = re_text.empty() ? 0.0 : parse_real(re_text, token);
  return {re, im};
}

}  // namespace

Spinor3 parse_spinor(std::string_view text, bool normalize) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') compact.push_back(ch);
  }

  std::vector<std::string_view> tokens;
  std::string_view rest = compact;
  while (true) {
    auto pos = rest.find(',');
    tokens.push_back(rest.substr(0, pos));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  if (tokens.size() != 3) {
    throw ParseError("expected three comma-separated components, got " +
                     std::to_string(tokens.size()) + " in '" + std::string(text) + "'");
  }

  Spinor3 s;
  for (std::size_t i = 0; i < 3; ++i) s[i] = parse_complex(tokens[i]);
  if (normalize) {
    if (s.norm_squared() == 0.0) throw DomainError("cannot normalize the zero spinor");
    s = s.normalized();
  }
  return s;
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e%+.16ei", z.real(), z.imag());
  return buf;
}

std::string format_spinor(const Spinor3& s) {
  return format_complex(s[0]) + "," + format_complex(s[1]) + "," + format_complex(s[2]);
}

}  // namespace qwalk
