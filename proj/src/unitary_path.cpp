#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "raagrep/path.hpp"

namespace raagrep {

using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCheckTol = 1e-7;

CMatrix identity(Eigen::Index n) { return CMatrix::Identity(n, n); }

struct Cluster {
  cd lambda;
  CMatrix basis;  // orthonormal columns spanning the eigenspace
};

std::vector<Cluster> eigen_clusters(const CMatrix& a) {
  Eigen::ComplexSchur<CMatrix> schur(a);
  const CMatrix& t = schur.matrixT();
  const CMatrix& u = schur.matrixU();
  const Eigen::Index n = a.rows();
  const CMatrix off = t.triangularView<Eigen::StrictlyUpper>();
  if (off.norm() > kEigenClusterTol) throw std::invalid_argument("matrix is not normal within tolerance");

  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Eigen::Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q)
      if (std::abs(t(p, p) - t(q, q)) <= kEigenClusterTol) parent[find(q)] = find(p);

  std::vector<Cluster> out;
  std::vector<Eigen::Index> root_of_cluster;
  for (Eigen::Index p = 0; p < n; ++p) {
    const Eigen::Index r = find(p);
    auto it = std::find(root_of_cluster.begin(), root_of_cluster.end(), r);
    std::vector<Eigen::Index> members;
    if (it != root_of_cluster.end()) continue;
    root_of_cluster.push_back(r);
    for (Eigen::Index q = 0; q < n; ++q)
      if (find(q) == r) members.push_back(q);
    Cluster c;
    c.basis.resize(n, static_cast<Eigen::Index>(members.size()));
    cd sum = 0;
    for (std::size_t m = 0; m < members.size(); ++m) {
      c.basis.col(static_cast<Eigen::Index>(m)) = u.col(members[m]);
      sum += t(members[m], members[m]);
    }
    c.lambda = sum / static_cast<double>(members.size());
    out.push_back(std::move(c));
  }
  return out;
}

CMatrix projector(const CMatrix& basis) { return basis * basis.adjoint(); }

// J conj(v): the antilinear map whose invariant structure defines Sp(n).
CMatrix sigma(const CMatrix& v) { return symplectic_form(static_cast<std::size_t>(v.rows() / 2)) * v.conjugate(); }

// E = W + sigma(W) with W invariant under S. The commutant of S in sp(E) is
// solved for as a real linear system; a generic element X of it has
// eigenvalues +-i mu, and W is the span of the +i mu eigenvectors. nullopt
// when that commutant only has singular elements.
std::optional<std::pair<CMatrix, CMatrix>> compatible_split(const CMatrix& basis, std::span<const CMatrix> s) {
  const Eigen::Index d = basis.cols();
  if (d % 2 != 0) return std::nullopt;
  const CMatrix sig = basis.adjoint() * sigma(basis);
  std::vector<CMatrix> restricted;
  for (const CMatrix& m : s) restricted.push_back(basis.adjoint() * m * basis);

  const Eigen::Index unknowns = 2 * d * d;
  auto element = [&](Eigen::Index idx) {
    CMatrix x = CMatrix::Zero(d, d);
    const Eigen::Index flat = idx % (d * d);
    x(flat / d, flat % d) = idx < d * d ? cd(1, 0) : cd(0, 1);
    return x;
  };
  auto constraints = [&](const CMatrix& x) {
    std::vector<CMatrix> out{x + x.adjoint(), x * sig - sig * x.conjugate()};
    for (const CMatrix& m : restricted) out.push_back(x * m - m * x);
    return out;
  };
  const Eigen::Index blocks = 2 + static_cast<Eigen::Index>(restricted.size());
  Eigen::MatrixXd system(blocks * unknowns, unknowns);
  for (Eigen::Index c = 0; c < unknowns; ++c) {
    const auto images = constraints(element(c));
    for (Eigen::Index b = 0; b < blocks; ++b)
      for (Eigen::Index r = 0; r < d * d; ++r) {
        const cd z = images[static_cast<std::size_t>(b)](r / d, r % d);
        system(b * unknowns + r, c) = z.real();
        system(b * unknowns + d * d + r, c) = z.imag();
      }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  lu.setThreshold(1e-9);
  if (lu.dimensionOfKernel() == 0) return std::nullopt;
  const Eigen::MatrixXd kernel = lu.kernel();

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> g;
  Eigen::VectorXd coeffs(unknowns);
  coeffs = kernel * Eigen::VectorXd::NullaryExpr(kernel.cols(), [&] { return g(rng); });
  CMatrix x = CMatrix::Zero(d, d);
  for (Eigen::Index c = 0; c < unknowns; ++c) x += coeffs(c) * element(c);

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(cd(0, -1) * x);
  const Eigen::VectorXd& mu = eig.eigenvalues();
  const double scale = mu.cwiseAbs().maxCoeff();
  if (!(scale > 0) || mu.cwiseAbs().minCoeff() <= 1e-6 * scale) return std::nullopt;
  CMatrix w(basis.rows(), 0), sw(basis.rows(), 0);
  for (Eigen::Index k = 0; k < d; ++k) {
    CMatrix& target = mu(k) > 0 ? w : sw;
    target.conservativeResize(Eigen::NoChange, target.cols() + 1);
    target.col(target.cols() - 1) = basis * eig.eigenvectors().col(k);
  }
  if (w.cols() != sw.cols()) return std::nullopt;
  return std::pair{w, sw};
}

double commutator_norm(const CMatrix& a, const CMatrix& b) { return (a * b - b * a).norm(); }

bool segment_commutes(const PathSegment& seg, std::span<const CMatrix> s, GroupTag group) {
  for (double t : {0.25, 0.5, 0.75, 1.0}) {
    const CMatrix at = seg.eval(t);
    if (membership_residual(at, group) > kCheckTol) return false;
    for (const CMatrix& m : s)
      if (commutator_norm(at, m) > kCheckTol) return false;
  }
  return true;
}

PathSegment su_or_u_segment(const CMatrix& a, const std::vector<Cluster>& clusters, GroupTag group) {
  PathSegment seg;
  seg.left = a;
  double total = 0;
  for (const Cluster& c : clusters) total += static_cast<double>(c.basis.cols()) * std::arg(c.lambda);
  const double n = static_cast<double>(a.rows());
  const double phi = group == GroupTag::SU ? 2 * kPi * std::round(total / (2 * kPi)) / n : 0.0;
  for (const Cluster& c : clusters) {
    seg.projectors.push_back(projector(c.basis));
    seg.deltas.push_back(phi - std::arg(c.lambda));
  }
  return seg;
}

// Symplectic retraction to +I (target = 1) or -I (target = -1). The
// eigenvalue -target is self-conjugate and must be split into W + sigma(W).
std::optional<PathSegment> sp_segment(const CMatrix& a, const std::vector<Cluster>& clusters, int target,
                                      std::span<const CMatrix> s) {
  PathSegment seg;
  seg.left = a;
  for (const Cluster& c : clusters) {
    if (std::abs(c.lambda + static_cast<double>(target)) <= kEigenClusterTol) {
      const auto split = compatible_split(c.basis, s);
      if (!split) return std::nullopt;
      const auto& [w, sw] = *split;
      seg.projectors.push_back(projector(w));
      seg.deltas.push_back(-kPi);
      seg.projectors.push_back(projector(sw));
      seg.deltas.push_back(kPi);
      continue;
    }
    const double theta = std::arg(c.lambda);
    seg.projectors.push_back(projector(c.basis));
    if (target == 1) {
      seg.deltas.push_back(-theta);
    } else {
      seg.deltas.push_back((theta >= 0 ? kPi : -kPi) - theta);
    }
  }
  return seg;
}

bool has_eigenvalue(const std::vector<Cluster>& clusters, double value) {
  return std::any_of(clusters.begin(), clusters.end(),
                     [&](const Cluster& c) { return std::abs(c.lambda - value) <= kEigenClusterTol; });
}

double max_entry_distance(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

CMatrix PathSegment::eval(double t) const {
  CMatrix mid = CMatrix::Zero(left.rows(), left.cols());
  for (std::size_t c = 0; c < projectors.size(); ++c) mid += std::exp(cd(0, t * deltas[c])) * projectors[c];
  return left * mid;
}

bool PathSegment::is_constant() const {
  return std::all_of(deltas.begin(), deltas.end(), [](double d) { return std::abs(d) <= 1e-14; });
}

PathSegment centralizer_path(const CMatrix& a, std::span<const CMatrix> s, GroupTag group) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("matrix must be square and nonempty");
  if (membership_residual(a, group) > kConstructTol)
    throw std::invalid_argument("matrix is not in " + to_string(group) + " within tolerance");
  for (const CMatrix& m : s) {
    if (m.rows() != a.rows() || m.cols() != a.cols()) throw std::invalid_argument("dimension mismatch in S");
    if (commutator_norm(a, m) > kConstructTol) throw std::invalid_argument("matrix does not commute with S");
  }
  const auto clusters = eigen_clusters(a);

  if (group != GroupTag::Sp) {
    PathSegment seg = su_or_u_segment(a, clusters, group);
    if (!segment_commutes(seg, s, group)) throw std::domain_error("eigenspace retraction left the centralizer");
    return seg;
  }
  std::vector<int> targets = has_eigenvalue(clusters, -1) && !has_eigenvalue(clusters, 1) ? std::vector{-1, 1}
                                                                                            : std::vector{1, -1};
  for (int target : targets) {
    const auto seg = sp_segment(a, clusters, target, s);
    if (seg && segment_commutes(*seg, s, group)) return *seg;
  }
  throw std::domain_error(
      "no torus retraction of this matrix stays in the centralizer of S: no S-invariant complex structure on "
      "its +1 or -1 eigenspace");
}

PathSegment central_to_identity(const CMatrix& z, GroupTag group) {
  const Eigen::Index n = z.rows();
  const cd zeta = z(0, 0);
  if (max_entry_distance(z, zeta * identity(n)) > kDecideTol) throw std::invalid_argument("matrix is not central");
  PathSegment seg;
  seg.left = z;
  const double phi = std::arg(zeta);
  switch (group) {
    case GroupTag::U:
      seg.projectors = {identity(n)};
      seg.deltas = {-phi};
      break;
    case GroupTag::SU: {
      const double k = std::round(static_cast<double>(n) * phi / (2 * kPi));
      for (Eigen::Index i = 0; i < n; ++i) {
        CMatrix p = CMatrix::Zero(n, n);
        p(i, i) = 1;
        seg.projectors.push_back(std::move(p));
        seg.deltas.push_back(i + 1 < n ? -phi : 2 * kPi * k - phi);
      }
      break;
    }
    case GroupTag::Sp: {
      const Eigen::Index h = n / 2;
      CMatrix top = CMatrix::Zero(n, n), bottom = CMatrix::Zero(n, n);
      top.topLeftCorner(h, h) = identity(h);
      bottom.bottomRightCorner(h, h) = identity(h);
      const double d = std::abs(zeta + 1.0) < std::abs(zeta - 1.0) ? kPi : 0.0;
      seg.projectors = {top, bottom};
      seg.deltas = {d, -d};
      break;
    }
  }
  return seg;
}

GroupPath::GroupPath(MatrixRepresentation start) { snapshots_.push_back(std::move(start)); }

void GroupPath::push(PathSegment s) {
  MatrixRepresentation next = snapshots_.back();
  if (s.vertex >= next.values.size()) throw std::out_of_range("segment vertex out of range");
  next.values[s.vertex] = s.eval(1.0);
  segments_.push_back(std::move(s));
  snapshots_.push_back(std::move(next));
}

MatrixRepresentation GroupPath::eval(double t) const {
  if (segments_.empty()) return snapshots_.front();
  t = std::clamp(t, 0.0, 1.0);
  const double scaled = t * static_cast<double>(segments_.size());
  const std::size_t k = std::min(static_cast<std::size_t>(scaled), segments_.size() - 1);
  MatrixRepresentation out = snapshots_[k];
  out.values[segments_[k].vertex] = segments_[k].eval(scaled - static_cast<double>(k));
  return out;
}

GroupPath path_to_trivial(const Graph& k, const MatrixRepresentation& x) {
  if (x.values.size() != k.vertex_count()) throw std::invalid_argument("representation does not match the graph");
  const auto n = static_cast<Eigen::Index>(x.dimension());
  for (const CMatrix& m : x.values)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrices of mixed dimension");
  if (!is_representation(k, x).ok) throw std::invalid_argument("not a representation within tolerance");

  GroupPath path(x);
  for (std::size_t r = 0; r < k.vertex_count(); ++r) {
    std::vector<CMatrix> s;
    for (std::size_t u : k.neighbors(r)) s.push_back(path.end().values[u]);
    PathSegment seg = centralizer_path(path.end().values[r], s, x.group);
    seg.vertex = r;
    if (!seg.is_constant()) path.push(std::move(seg));
  }
  for (std::size_t r = 0; r < k.vertex_count(); ++r) {
    PathSegment seg = central_to_identity(path.end().values[r], x.group);
    seg.vertex = r;
    if (!seg.is_constant()) path.push(std::move(seg));
  }
  return path;
}

namespace {

struct SampleResult {
  double commutator = 0;
  double membership = 0;
};

SampleResult check_sample(const Graph& k, const GroupPath& p, GroupTag group, double t) {
  const MatrixRepresentation at = p.eval(t);
  SampleResult r;
  r.commutator = is_representation(k, at, std::numeric_limits<double>::infinity()).max_residual;
  for (const CMatrix& m : at.values) r.membership = std::max(r.membership, membership_residual(m, group));
  return r;
}

PathCheck endpoints(const GroupPath& p, const MatrixRepresentation& x) {
  PathCheck c;
  const MatrixRepresentation a = p.eval(0.0), b = p.eval(1.0);
  for (std::size_t v = 0; v < x.values.size(); ++v) {
    c.start_error = std::max(c.start_error, max_entry_distance(a.values[v], x.values[v]));
    c.end_error = std::max(c.end_error, max_entry_distance(b.values[v], identity(b.values[v].rows())));
  }
  return c;
}

double sample_time(std::size_t i, std::size_t samples) {
  return static_cast<double>(i) / static_cast<double>(samples - 1);
}

}  // namespace

PathCheck check_path_serial(const Graph& k, const GroupPath& p, const MatrixRepresentation& x, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  PathCheck c = endpoints(p, x);
  for (std::size_t i = 0; i < samples; ++i) {
    const SampleResult r = check_sample(k, p, x.group, sample_time(i, samples));
    c.max_commutator = std::max(c.max_commutator, r.commutator);
    c.max_membership = std::max(c.max_membership, r.membership);
  }
  return c;
}

PathCheck check_path_parallel(const Graph& k, const GroupPath& p, const MatrixRepresentation& x, std::size_t samples,
                              int jobs) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  PathCheck c = endpoints(p, x);
  double comm = 0, memb = 0;
  const auto n = static_cast<std::int64_t>(samples);
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for reduction(max : comm, memb) schedule(static) num_threads(threads)
#else
  (void)jobs;
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    const SampleResult r = check_sample(k, p, x.group, sample_time(static_cast<std::size_t>(i), samples));
    comm = std::max(comm, r.commutator);
    memb = std::max(memb, r.membership);
  }
  c.max_commutator = comm;
  c.max_membership = memb;
  return c;
}

}  // namespace raagrep
