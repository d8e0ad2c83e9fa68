#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicon/canon.hpp"
#include "bicon/generator.hpp"

namespace bicon {

enum class PotentialKind { HardSphere, LennardJones };

/// Spherically symmetric pair potential. Lennard-Jones energies enter only
/// through the reduced temperature T* = kT / epsilon; hard spheres ignore it.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::HardSphere;
  double sigma = 1.0;
  double epsilon = 1.0;
  double reduced_temperature = 1.0;

  static PotentialSpec hard_sphere(double sigma = 1.0) { return {PotentialKind::HardSphere, sigma, 1.0, 1.0}; }
  static PotentialSpec lennard_jones(double sigma, double epsilon, double tstar) {
    return {PotentialKind::LennardJones, sigma, epsilon, tstar};
  }

  /// Throws InvalidArgument unless sigma, epsilon and T* are positive.
  void validate() const;
};

/// u(r) / kT. Infinite inside a hard core and at r = 0 for Lennard-Jones.
double pair_potential(double r, const PotentialSpec& p);

/// exp(-u(r)/kT) - 1, never below -1.
double mayer_f(double r, const PotentialSpec& p);

/// Separation beyond which |f| < 1e-6 (exactly sigma for hard spheres).
double interaction_cutoff(const PotentialSpec& p);

struct IntegralEstimate {
  double mean = 0.0;       ///< sigma-reduced volume^(n-1)
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;  ///< stream seed actually used for this class
};

/// Monte Carlo estimate of the integral of prod_{(i,j) in E} f(|r_i - r_j|)
/// over r_2..r_n with one particle pinned at the origin.
///
/// The pinned particle is a minimum-eccentricity vertex. Every other vertex
/// is drawn uniformly from a ball around the origin of radius
/// d(v) * r_cut, d(v) being its graph distance to the pinned vertex: no
/// configuration with all edges shorter than r_cut lies outside that
/// product domain. The sample mean is scaled by the domain volume.
///
/// `seed` is used as given; per-class stream derivation happens in
/// virial_coefficient. Results do not depend on `jobs`.
IntegralEstimate star_integral(const GraphClass& cls, const PotentialSpec& p, std::uint64_t samples,
                               std::uint64_t seed, int jobs = 1);

struct WeightedClass {
  const GraphClass* cls = nullptr;
  std::uint64_t weight = 0;
};

/// Each class of the catalog with its number of labelings.
std::vector<WeightedClass> s_prime_expansion(int n, const Catalog& cat);

struct ClassContribution {
  CanonicalKey key;
  std::uint64_t weight = 0;
  IntegralEstimate estimate;
};

struct VirialResult {
  int order = 0;
  double value = 0.0;        ///< B_order / sigma^(3(order-1))
  double uncertainty = 0.0;  ///< weighted per-class errors in quadrature
  std::vector<ClassContribution> per_class;
};

/// Stream seed for one class: seed XOR FNV-1a(key).
std::uint64_t class_stream_seed(std::uint64_t seed, const CanonicalKey& key);

/// B_{j+1} = -j/(j+1) * (1/j!) * sum_classes weight * star_integral.
/// Requires 2 <= order <= 6 and cat.n == order.
VirialResult virial_coefficient(int order, const PotentialSpec& p, std::uint64_t samples, std::uint64_t seed,
                                const Catalog& cat, int jobs = 1);

/// Exact hard-sphere B2 = 2 pi sigma^3 / 3.
double hard_sphere_b2(double sigma = 1.0);

/// JSON-lines report: one "class" record per class, then one "virial"
/// summary record. Floating-point fields use fixed 12-digit scientific
/// notation.
std::string format_virial_report(const VirialResult& result, const PotentialSpec& p, std::uint64_t samples,
                                 std::uint64_t seed);

}  // namespace bicon
