#include "bicon/virial.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "bicon/error.hpp"
#include "json.hpp"

namespace bicon {

void PotentialSpec::validate() const {
  if (!(sigma > 0.0)) throw InvalidArgument("sigma must be positive");
  if (kind == PotentialKind::LennardJones && !(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (!(reduced_temperature > 0.0)) throw InvalidArgument("reduced temperature must be positive");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kCutoffTolerance = 1e-6;
constexpr std::uint64_t kChunkSamples = std::uint64_t{1} << 16;

// Both functions take x = r / sigma.
double reduced_potential(double x, const PotentialSpec& p) {
  if (p.kind == PotentialKind::HardSphere) return x < 1.0 ? kInf : 0.0;
  if (x == 0.0) return kInf;
  const double inv6 = 1.0 / (x * x * x * x * x * x);
  return 4.0 / p.reduced_temperature * (inv6 * inv6 - inv6);
}

double reduced_f(double x, const PotentialSpec& p) {
  if (p.kind == PotentialKind::HardSphere) return x < 1.0 ? -1.0 : 0.0;
  const double u = reduced_potential(x, p);
  return u == kInf ? -1.0 : std::expm1(-u);
}

double reduced_cutoff(const PotentialSpec& p) {
  if (p.kind == PotentialKind::HardSphere) return 1.0;
  // |f| falls monotonically past the well minimum at 2^(1/6).
  double lo = std::pow(2.0, 1.0 / 6.0);
  double hi = lo;
  while (std::abs(reduced_f(hi, p)) >= kCutoffTolerance) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::abs(reduced_f(mid, p)) >= kCutoffTolerance ? lo : hi) = mid;
  }
  return hi;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// 53 random bits mapped to [0, 1); identical on every platform, unlike
// std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Eigen::Vector3d uniform_in_ball(std::mt19937_64& rng, double radius) {
  while (true) {
    Eigen::Vector3d p(2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0, 2.0 * unit_uniform(rng) - 1.0);
    if (p.squaredNorm() < 1.0) return radius * p;
  }
}

std::vector<int> distances_from(const Graph& g, Vertex root) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  VertexMask seen = VertexMask{1} << root;
  VertexMask frontier = seen;
  dist[static_cast<std::size_t>(root)] = 0;
  for (int d = 1; frontier != 0; ++d) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= frontier;
    for_each_vertex(frontier, [&](Vertex v) { dist[static_cast<std::size_t>(v)] = d; });
  }
  return dist;
}

// The pinned particle together with per-vertex sampling radii.
struct SamplingDomain {
  Vertex root = 0;
  std::vector<double> radius;  // zero for the root
  double volume = 1.0;
};

SamplingDomain make_domain(const Graph& g, double cutoff) {
  SamplingDomain best;
  int best_ecc = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.order(); ++v) {
    auto dist = distances_from(g, v);
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
      throw InvalidArgument("star integral needs a connected graph");
    }
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc < best_ecc) {
      best_ecc = ecc;
      best.root = v;
      best.radius.assign(dist.size(), 0.0);
      best.volume = 1.0;
      for (std::size_t i = 0; i < dist.size(); ++i) {
        if (static_cast<Vertex>(i) == v) continue;
        const double r = dist[i] * cutoff;
        best.radius[i] = r;
        best.volume *= 4.0 / 3.0 * std::numbers::pi * r * r * r;
      }
    }
  }
  return best;
}

struct ChunkSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

ChunkSums run_chunk(const Graph& g, const std::vector<Edge>& edges, const SamplingDomain& domain,
                    const PotentialSpec& p, std::uint64_t stream_seed, std::uint64_t chunk, std::uint64_t count) {
  std::mt19937_64 rng(splitmix64(stream_seed ^ splitmix64(chunk)));
  std::vector<Eigen::Vector3d> pos(static_cast<std::size_t>(g.order()), Eigen::Vector3d::Zero());
  const bool hard = p.kind == PotentialKind::HardSphere;
  ChunkSums sums;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (static_cast<Vertex>(i) != domain.root) pos[i] = uniform_in_ball(rng, domain.radius[i]);
    }
    double product = 1.0;
    for (const Edge& e : edges) {
      const double d2 = (pos[static_cast<std::size_t>(e.u)] - pos[static_cast<std::size_t>(e.v)]).squaredNorm();
      product *= hard ? (d2 < 1.0 ? -1.0 : 0.0) : reduced_f(std::sqrt(d2), p);
      if (product == 0.0) break;
    }
    sums.sum += product;
    sums.sum_sq += product * product;
  }
  return sums;
}

// Runs task(i) for i in [0, count) on up to `jobs` threads.
template <typename Task>
void parallel_for(std::size_t count, int jobs, Task&& task) {
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& t : threads) t.join();
}

std::string sci(double x) { return fmt::format("{:.12e}", x); }

const char* potential_name(PotentialKind k) { return k == PotentialKind::HardSphere ? "hs" : "lj"; }

}  // namespace

double pair_potential(double r, const PotentialSpec& p) {
  p.validate();
  if (r < 0.0) throw InvalidArgument("separation must be non-negative");
  return reduced_potential(r / p.sigma, p);
}

double mayer_f(double r, const PotentialSpec& p) {
  p.validate();
  if (r < 0.0) throw InvalidArgument("separation must be non-negative");
  return reduced_f(r / p.sigma, p);
}

double interaction_cutoff(const PotentialSpec& p) {
  p.validate();
  return reduced_cutoff(p) * p.sigma;
}

IntegralEstimate star_integral(const GraphClass& cls, const PotentialSpec& p, std::uint64_t samples,
                               std::uint64_t seed, int jobs) {
  p.validate();
  if (samples == 0) throw InvalidArgument("star integral needs at least one sample");
  const Graph& g = cls.representative;
  if (g.order() < 2) throw InvalidArgument("star integral needs at least two particles");

  const SamplingDomain domain = make_domain(g, reduced_cutoff(p));
  const std::vector<Edge> edges = g.edges();
  const std::size_t chunks = static_cast<std::size_t>((samples + kChunkSamples - 1) / kChunkSamples);
  std::vector<ChunkSums> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::uint64_t begin = c * kChunkSamples;
    const std::uint64_t count = std::min(kChunkSamples, samples - begin);
    partial[c] = run_chunk(g, edges, domain, p, seed, c, count);
  });

  double sum = 0.0;
  double sum_sq = 0.0;
  for (const ChunkSums& cs : partial) {
    sum += cs.sum;
    sum_sq += cs.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  double variance = 0.0;
  if (samples > 1) variance = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));

  IntegralEstimate est;
  est.mean = domain.volume * mean;
  est.std_error = domain.volume * std::sqrt(variance / n);
  est.samples = samples;
  est.seed = seed;
  return est;
}

std::vector<WeightedClass> s_prime_expansion(int n, const Catalog& cat) {
  if (cat.n != n) throw InvalidArgument("catalog order does not match requested order");
  std::vector<WeightedClass> out;
  out.reserve(cat.size());
  for (const GraphClass& cls : cat.classes) out.push_back({&cls, labeling_count(cls)});
  return out;
}

std::uint64_t class_stream_seed(std::uint64_t seed, const CanonicalKey& key) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : key) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return seed ^ h;
}

VirialResult virial_coefficient(int order, const PotentialSpec& p, std::uint64_t samples, std::uint64_t seed,
                                const Catalog& cat, int jobs) {
  if (order < 2 || order > 6) throw InvalidArgument("virial order must be in [2, 6]");
  if (cat.n != order) throw InvalidArgument("catalog size mismatch: need the catalog at n = order");
  p.validate();

  const int j = order - 1;
  const double prefactor = -static_cast<double>(j) / static_cast<double>(order) / static_cast<double>(factorial(j));

  VirialResult result;
  result.order = order;
  double weighted = 0.0;
  double var = 0.0;
  for (const WeightedClass& wc : s_prime_expansion(order, cat)) {
    const std::uint64_t stream = class_stream_seed(seed, wc.cls->key);
    IntegralEstimate est = star_integral(*wc.cls, p, samples, stream, jobs);
    const double w = static_cast<double>(wc.weight);
    weighted += w * est.mean;
    var += w * w * est.std_error * est.std_error;
    result.per_class.push_back({wc.cls->key, wc.weight, est});
  }
  result.value = prefactor * weighted;
  result.uncertainty = std::abs(prefactor) * std::sqrt(var);
  return result;
}

double hard_sphere_b2(double sigma) { return 2.0 * std::numbers::pi / 3.0 * sigma * sigma * sigma; }

std::string format_virial_report(const VirialResult& result, const PotentialSpec& p, std::uint64_t samples,
                                 std::uint64_t seed) {
  std::string out;
  for (const ClassContribution& c : result.per_class) {
    out += fmt::format(
        "{{\"record\":\"class\",\"key\":{},\"weight\":{},\"mean\":{},\"std_error\":{},\"samples\":{},\"seed\":{}}}\n",
        nlohmann::json(c.key).dump(), c.weight, sci(c.estimate.mean), sci(c.estimate.std_error),
        c.estimate.samples, c.estimate.seed);
  }
  out += fmt::format(
      "{{\"record\":\"virial\",\"order\":{},\"potential\":\"{}\",\"sigma\":{},\"epsilon\":{},\"tstar\":{},"
      "\"samples\":{},\"seed\":{},\"value\":{},\"uncertainty\":{}",
      result.order, potential_name(p.kind), sci(p.sigma), sci(p.epsilon), sci(p.reduced_temperature), samples,
      seed, sci(result.value), sci(result.uncertainty));
  if (p.kind == PotentialKind::HardSphere) {
    // Reduced values are in units of sigma, so B2 here is 2 pi / 3.
    const double b2_power = std::pow(hard_sphere_b2(1.0), result.order - 1);
    out += fmt::format(",\"ratio_to_b2_power\":{},\"ratio_uncertainty\":{}", sci(result.value / b2_power),
                       sci(result.uncertainty / b2_power));
  }
  out += "}\n";
  return out;
}

}  // namespace bicon
