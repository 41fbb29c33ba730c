#include "e7/weight.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace e7 {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
          ch == '+' || ch == '/'))
      throw std::invalid_argument("bad rational: " + s);
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Weight Weight::operator+(const Weight& o) const {
  Weight r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r;
  for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
  return r;
}

Weight Weight::operator*(const Rat& s) const {
  Weight r;
  for (int i = 0; i < 8; ++i) r.c[i] = c[i] * s;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < 8; ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
  return *this;
}

bool Weight::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Rat dot(const Weight& a, const Weight& b) {
  Rat s = 0;
  for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
  return s;
}

Weight reflect(const Weight& v, const Weight& alpha) {
  return v - alpha * dot(v, alpha);
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (int i = 0; i < 8; ++i) {
    if (i) os << ',';
    os << w.c[i].get_str();
  }
  return os << ')';
}

int64_t dot_int(const Lat8& a, const Lat8& b) {
  int64_t raw = dot_raw(a, b);
  if (raw % (LAT_SCALE * LAT_SCALE) != 0)
    throw std::logic_error("lattice pairing is not integral");
  return raw / (LAT_SCALE * LAT_SCALE);
}

Rat norm_sq_rat(const Lat8& a) {
  return rat(dot_raw(a, a), LAT_SCALE * LAT_SCALE);
}

Lat8 reflect(const Lat8& v, const Lat8& root) {
  int64_t b = dot_int(v, root);
  Lat8 r;
  for (int i = 0; i < 8; ++i) r.v[i] = v.v[i] - b * root.v[i];
  return r;
}

Lat8 to_lat(const Weight& w) {
  Lat8 r;
  for (int i = 0; i < 8; ++i) {
    Rat s = w.c[i] * LAT_SCALE;
    if (s.get_den() != 1)
      throw std::domain_error("weight not in the scale-" +
                              std::to_string(LAT_SCALE) + " lattice: " +
                              w.str());
    if (!s.get_num().fits_slong_p())
      throw std::domain_error("lattice coordinate overflow");
    r.v[i] = s.get_num().get_si();
  }
  return r;
}

Weight to_weight(const Lat8& v) {
  Weight w;
  for (int i = 0; i < 8; ++i) w.c[i] = rat(v.v[i], LAT_SCALE);
  return w;
}

Mat mat_identity(int n) {
  Mat m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_inverse(const Mat& m) {
  const int n = static_cast<int>(m.size());
  Mat a = m;
  Mat inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<Rat> mat_apply(const Mat& m, const std::vector<Rat>& x) {
  std::vector<Rat> y(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

std::vector<Rat> mat_solve(const Mat& m, const std::vector<Rat>& rhs) {
  return mat_apply(mat_inverse(m), rhs);
}

}  // namespace e7
