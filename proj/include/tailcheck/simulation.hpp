#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tailcheck/rng.hpp"
#include "tailcheck/statistics.hpp"

namespace tailcheck {

// Underlying distributions used in the simulation study. Pareto is the
// standard form, survival x^-theta0 on [1, inf), so the conditional law of
// X/x0 - 1 above any threshold x0 >= 1 is exactly the null family. Cauchy is
// standard (location 0, scale 1), regularly varying with exponent 1.
struct DistributionSpec {
  enum class Family { pareto, cauchy };
  Family family = Family::pareto;
  double theta0 = 1.0;  // pareto only

  bool operator==(const DistributionSpec&) const = default;
};

struct SimulationConfig {
  DistributionSpec distribution;
  std::size_t n = 1000;          // raw sample size per replication
  double x0 = 3.0;               // threshold
  std::size_t reps = 1000;       // replication count
  std::uint64_t master_seed = 0;
  GridSpec grid;
  std::vector<StatKind> stats = {StatKind::ks, StatKind::cvm, StatKind::ad};
  std::size_t min_tail = kDefaultMinTail;  // replications below this are discarded

  bool operator==(const SimulationConfig&) const = default;
};

// Inverse-cdf draws; u must lie in (0,1).
double pareto_draw(double u, double theta0);  // u^(-1/theta0)
double cauchy_draw(double u);                 // tan(pi (u - 1/2))

std::vector<double> sample_pareto(double theta0, std::size_t n, RngStream& rng);
std::vector<double> sample_cauchy(std::size_t n, RngStream& rng);
std::vector<double> sample_from(const DistributionSpec& dist, std::size_t n,
                                RngStream& rng);

// Monte Carlo null distribution of one statistic: the sorted retained draws.
struct EcdfCurve {
  StatKind statistic = StatKind::ks;
  std::vector<double> values;  // sorted ascending
  std::size_t retained = 0;
  std::size_t discarded = 0;
  SimulationConfig config;  // echo

  double ecdf(double x) const;  // fraction of draws <= x
};

using CurveSet = std::map<StatKind, EcdfCurve>;

// Runs config.reps independent replications (sample -> tail -> fit ->
// transform -> statistics), discarding (and counting) replications whose
// tail ends up below config.min_tail. Replication r draws only from the
// stream derived from (master_seed, r), and the final reduction sorts, so
// results are bit-identical for any worker count or schedule. Throws
// SimulationError when more than half of the replications are discarded.
CurveSet run_monte_carlo(const SimulationConfig& config);

// Plain-loop reference implementation of the same contract; kept for tests
// and the benchmark.
CurveSet run_monte_carlo_serial(const SimulationConfig& config);

// Two-sample Kolmogorov-Smirnov sup distance between the step ECDFs.
// Requires matching statistic kinds.
double ecdf_sup_distance(const EcdfCurve& a, const EcdfCurve& b);

// Linear interpolation quantile (type 7) of an ascending sample.
double quantile_type7(std::span<const double> sorted, double p);

// An EcdfCurve persisted with named quantiles for p-value lookups.
struct CriticalValueTable {
  int format_version = 1;
  EcdfCurve curve;
  double q90 = 0.0, q95 = 0.0, q99 = 0.0;
};

// Builds one table per kind in config.stats from a single Monte Carlo run.
// The null is the configured distribution; by distribution-freeness the
// default Pareto theta0 = 1 is as good as any.
std::vector<CriticalValueTable> build_critical_tables(const SimulationConfig& config);

// p-value of `value` against the table, after checking that the table was
// built for `kind` on `grid` (else TableMismatchError).
double table_p_value(const CriticalValueTable& table, StatKind kind,
                     const GridSpec& grid, double value);

}  // namespace tailcheck
