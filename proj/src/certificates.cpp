#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <regex>
#include <stdexcept>

#include "raagrep/path.hpp"

namespace raagrep {

using cd = std::complex<double>;

CMatrix quaternion_to_su2(const Quaternion& q) {
  CMatrix m(2, 2);
  m << cd(q.x0, q.x1), cd(q.x2, q.x3), cd(-q.x2, q.x3), cd(q.x0, -q.x1);
  return m;
}

PropertyACertificate property_a_failure_certificate(std::string_view group, std::size_t n) {
  if (group == "SO3") {
    return {"SO3", quaternion_to_su2(Quaternion::i()), quaternion_to_su2(Quaternion::j()),
            -CMatrix::Identity(2, 2)};
  }
  if (group != "PSL") throw std::invalid_argument("certificates exist for SO3 and PSL only");
  if (n < 2) throw std::invalid_argument("PSL(n, C) needs n >= 2");
  const auto m = static_cast<Eigen::Index>(n);
  const double nn = static_cast<double>(n);
  const cd zeta = std::polar(1.0, 2 * std::numbers::pi / nn);
  const cd omega = std::polar(1.0, std::numbers::pi * (nn - 1) / nn);
  CMatrix g = CMatrix::Zero(m, m), h = CMatrix::Zero(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    g(k, k) = omega * std::pow(zeta, static_cast<double>(k));
    h((k + 1) % m, k) = omega;
  }
  return {"PSL(" + std::to_string(n) + ",C)", g, h, zeta * CMatrix::Identity(m, m)};
}

CertificateCheck verify_certificate(const PropertyACertificate& cert, double tol) {
  CertificateCheck c;
  const CMatrix& g = cert.g_lift;
  const CMatrix& h = cert.h_lift;
  const Eigen::Index n = g.rows();
  if (n == 0 || g.cols() != n || h.rows() != n || h.cols() != n || cert.c.rows() != n || cert.c.cols() != n) return c;
  c.in_cover = std::abs(g.determinant() - 1.0) <= tol && std::abs(h.determinant() - 1.0) <= tol;
  const CMatrix comm = g * h * g.inverse() * h.inverse();
  c.commutator_matches = (comm - cert.c).cwiseAbs().maxCoeff() <= tol;
  const CMatrix scalar = cert.c(0, 0) * CMatrix::Identity(n, n);
  c.central = (cert.c - scalar).cwiseAbs().maxCoeff() <= tol;
  c.nontrivial = std::abs(cert.c(0, 0) - 1.0) > tol;
  return c;
}

namespace {

const std::array kTable = {
    PropertyAEntry{"abelian", PropertyA::Has, "every element is central", ""},
    PropertyAEntry{"U(n)", PropertyA::Has, "eigenspace retraction through a maximal torus", ""},
    PropertyAEntry{"SU(n)", PropertyA::Has, "eigenspace retraction with the determinant held at 1", ""},
    PropertyAEntry{"Sp(1)", PropertyA::Has, "isomorphic to SU(2)", ""},
    PropertyAEntry{"Sp(n), n >= 2", PropertyA::Lacks, "explicit counterexample",
                   "diag(1, -1) in Sp(2) commutes with a finite set generating a dense subgroup of Sp(1) x Sp(1); "
                   "the centralizer of that set is the finite group {diag(+-1, +-1)}, so diag(1, -1) cannot reach "
                   "the center +-I inside it. A torus retraction moves the conjugate eigenvectors of -1 apart, "
                   "which no eigenspace-containment argument allows."},
    PropertyAEntry{"products of the above", PropertyA::Has, "coordinatewise paths", ""},
    PropertyAEntry{"SO(n), n >= 3", PropertyA::Lacks, "central commutator of lifts in Spin(n)", ""},
    PropertyAEntry{"Spin(n), n >= 3", PropertyA::Lacks, "semisimple, not a product of SU and Sp factors", ""},
    PropertyAEntry{"PSL(n, C), n >= 2", PropertyA::Lacks, "central commutator of lifts in SL(n, C)", ""},
    PropertyAEntry{"compact exceptional", PropertyA::Lacks, "semisimple, not a product of SU and Sp factors", ""},
    PropertyAEntry{"compact semisimple, not simply connected", PropertyA::Lacks,
                   "central commutator of lifts in the universal cover", ""},
};

PropertyA lookup_factor(const std::string& f) {
  static const std::regex family(R"((SU|U|Sp|SO|Spin|PSL)\((\d+)(,C)?\))");
  if (f == "abelian" || f == "T") return PropertyA::Has;
  if (f == "G2" || f == "F4" || f == "E6" || f == "E7" || f == "E8") return PropertyA::Lacks;
  std::smatch m;
  if (!std::regex_match(f, m, family)) return PropertyA::NotListed;
  const std::string name = m[1];
  const int n = std::stoi(m[2]);
  const bool complex_field = m[3].matched;
  if (complex_field != (name == "PSL") || n < 1) return PropertyA::NotListed;
  if (name == "SU" || name == "U") return PropertyA::Has;
  if (name == "Sp") return n == 1 ? PropertyA::Has : PropertyA::Lacks;
  if (name == "PSL") return n >= 2 ? PropertyA::Lacks : PropertyA::Has;
  return n >= 3 ? PropertyA::Lacks : PropertyA::Has;  // SO(1), SO(2), Spin(1), Spin(2) are abelian
}

}  // namespace

std::span<const PropertyAEntry> property_a_table() { return kTable; }

PropertyA property_a_lookup(std::string_view group) {
  std::string s;
  for (char ch : group)
    if (ch != ' ') s += ch;
  if (s.empty()) return PropertyA::NotListed;
  PropertyA result = PropertyA::Has;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find('x', start), s.size());
    const PropertyA f = lookup_factor(s.substr(start, end - start));
    if (f == PropertyA::Lacks) return PropertyA::Lacks;
    if (f == PropertyA::NotListed) result = PropertyA::NotListed;
    start = end + 1;
  }
  return result;
}

std::string to_string(PropertyA p) {
  switch (p) {
    case PropertyA::Has: return "Has";
    case PropertyA::Lacks: return "Lacks";
    case PropertyA::NotListed: return "NotListed";
  }
  return "?";
}

}  // namespace raagrep
