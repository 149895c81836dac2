#include "orbispec/sunada.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbispec {

namespace {

std::string table_signature(const CharPolyTable& t) {
  std::ostringstream os;
  for (const auto& [key, cnt] : t) os << key << "*" << cnt << ";";
  return os.str();
}

struct SectorNode {
  std::string label;
  std::string signature;  // restricted char-poly table + kernel order
};

std::string bucket_key(const OrthogonalAction& act, const SectorDescriptor& sec) {
  std::ostringstream os;
  os << (act.space == SpaceKind::Sphere ? "sphere" : "frames") << " d=" << sec.fixed.d;
  if (act.space == SpaceKind::Stiefel) os << " k=" << sec.fixed.k;
  os << " dim=" << sec.fixed.dimension << " components=" << sec.fixed.manifold_components
     << " m=" << sec.m;
  return os.str();
}

std::map<std::string, std::vector<SectorNode>> bucketize(const OrthogonalAction& act,
                                                         const Presentation& gamma,
                                                         long long budget) {
  std::map<std::string, std::vector<SectorNode>> out;
  for (const SectorDescriptor& sec : sector_list(act, gamma, budget)) {
    RestrictedAction restr = restrict_centralizer(act, sec);
    SectorNode node;
    node.label = sec.label;
    node.signature = table_signature(char_poly_table(restr.distinct)) +
                     "|kernel=" + std::to_string(restr.kernel_order);
    out[bucket_key(act, sec)].push_back(std::move(node));
  }
  return out;
}

}  // namespace

GammaCertificate certify_gamma_isospectral(const Orbifold& a, const Orbifold& b,
                                           const Presentation& gamma,
                                           long long budget) {
  if (a.kind != OrbifoldKind::Orthogonal || b.kind != OrbifoldKind::Orthogonal)
    throw UnsupportedSector("certificates are implemented for orthogonal actions only");
  const OrthogonalAction& aa = *a.action;
  const OrthogonalAction& ab = *b.action;
  if (aa.space != ab.space || aa.n != ab.n || aa.k != ab.k)
    throw std::invalid_argument("certify: model-space mismatch");

  GammaCertificate cert;
  cert.proxy_note =
      "fixed-set isometry groups are modeled by the restricted orthogonal "
      "actions; this test is sufficient but possibly stricter than the "
      "general hypothesis";
  cert.groups = almost_conjugacy_witness(aa.group.elements(), ab.group.elements());
  if (!cert.groups.almost_conjugate)
    cert.failures.push_back("acting groups are not almost conjugate");

  auto buckets_a = bucketize(aa, gamma, budget);
  auto buckets_b = bucketize(ab, gamma, budget);
  std::vector<std::string> keys;
  for (const auto& [k, v] : buckets_a) keys.push_back(k);
  for (const auto& [k, v] : buckets_b)
    if (!buckets_a.count(k)) keys.push_back(k);
  std::sort(keys.begin(), keys.end());

  for (const std::string& key : keys) {
    std::vector<SectorNode> na =
        buckets_a.count(key) ? buckets_a.at(key) : std::vector<SectorNode>{};
    std::vector<SectorNode> nb =
        buckets_b.count(key) ? buckets_b.at(key) : std::vector<SectorNode>{};
    if (na.size() != nb.size()) {
      std::ostringstream os;
      os << "bucket [" << key << "]: class counts differ (" << na.size() << " vs "
         << nb.size() << ")";
      cert.failures.push_back(os.str());
      continue;
    }
    auto by_sig = [](const SectorNode& x, const SectorNode& y) {
      return x.signature < y.signature || (x.signature == y.signature && x.label < y.label);
    };
    std::sort(na.begin(), na.end(), by_sig);
    std::sort(nb.begin(), nb.end(), by_sig);
    for (size_t i = 0; i < na.size(); ++i) {
      SectorMatchRecord rec;
      rec.bucket = key;
      rec.label_a = na[i].label;
      rec.label_b = nb[i].label;
      rec.passed = (na[i].signature == nb[i].signature);
      if (!rec.passed) {
        rec.detail = "restricted centralizer actions are not almost conjugate";
        cert.failures.push_back("bucket [" + key + "]: " + rec.label_a + " vs " +
                                rec.label_b + ": " + rec.detail);
      }
      cert.pairing.push_back(std::move(rec));
    }
  }

  cert.certified = cert.failures.empty();
  if (cert.certified) {
    cert.verdict = "certified: Gamma-isospectral by matched sector data";
  } else {
    cert.verdict = "failed: " + cert.failures.front() +
                   " (a failed certificate does not imply non-isospectrality)";
  }
  return cert;
}

}  // namespace orbispec
