// Copyright 2026 The statorsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "statorsim/analysis.hpp"
#include "statorsim/improved.hpp"
#include "statorsim/linalg.hpp"
#include "statorsim/multiparty.hpp"
#include "statorsim/protocol.hpp"
#include "statorsim/rng.hpp"
#include "statorsim/state_vector.hpp"
#include "statorsim/tolerances.hpp"

using namespace statorsim;

namespace {

constexpr double kPi = 3.14159265358979323846;

ResourceSpec normalized_spec(double l0, double l1, double l2, double l3) {
  const double n = std::sqrt(l0 * l0 + l1 * l1 + l2 * l2 + l3 * l3);
  return ResourceSpec{{l0 / n, l1 / n, l2 / n, l3 / n}};
}

MultipartySpec general_spec(std::size_t n_partners, const ResourceSpec& lambda,
                            const MeasurementAngles& angles) {
  MultipartySpec spec;
  spec.num_partners = n_partners;
  spec.lambda = lambda;
  spec.partner_axes.assign(n_partners, make_axis(0.0, 0.0, 1.0));
  spec.mode = MultipartyMode::General;
  spec.angles = angles;
  return spec;
}

StateVector random_multiparty_target(SplitMix64& rng, const MultipartySpec& spec) {
  const std::vector<std::string> labels = multiparty_target_labels(spec);
  return StateVector(labels, random_state(rng, labels.size()));
}

// All size-k label subsets of the partner ancillas, as partition candidates.
void partner_subsets(std::size_t n, std::vector<std::vector<std::string>>& out) {
  for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::string> part;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) part.push_back("a" + std::to_string(i + 1));
    }
    out.push_back(std::move(part));
  }
}

}  // namespace

TEST_CASE("label layout for partners and targets") {
  MultipartySpec spec = general_spec(3, ResourceSpec{{0.5, 0.5, 0.5, 0.5}},
                                     MeasurementAngles{0.3, 0.3});
  CHECK(quasi_ghz_labels(spec) ==
        std::vector<std::string>{"a1", "a2", "a3", "c0", "c1"});
  CHECK(multiparty_target_labels(spec) == std::vector<std::string>{"A1", "A2", "A3"});
  spec.charlie_axis = make_axis(1.0, 0.0, 0.0);
  CHECK(multiparty_target_labels(spec) ==
        std::vector<std::string>{"A1", "A2", "A3", "C"});
}

TEST_CASE("build_quasi_ghz amplitude placement") {
  const double r = 1.0 / std::sqrt(2.0);
  const MultipartySpec ghz = general_spec(2, ResourceSpec{{r, 0.0, 0.0, r}},
                                          MeasurementAngles{0.3, 0.3});
  const StateVector psi = build_quasi_ghz(ghz);
  REQUIRE(psi.amplitudes.size() == 16);
  CHECK(std::abs(psi.amplitudes[0] - cplx{r, 0.0}) <= EPS_ALG);
  CHECK(std::abs(psi.amplitudes[15] - cplx{r, 0.0}) <= EPS_ALG);
  for (std::size_t i = 1; i < 15; ++i) CHECK(std::abs(psi.amplitudes[i]) == 0.0);

  const ResourceSpec lambda = normalized_spec(0.2, 0.4, 0.7, 0.5);
  const MultipartySpec spec = general_spec(3, lambda, MeasurementAngles{0.3, 0.3});
  const StateVector big = build_quasi_ghz(spec);
  REQUIRE(big.amplitudes.size() == 32);
  CHECK(std::abs(big.amplitudes[0] - cplx{lambda.lambda[0], 0.0}) <= EPS_ALG);
  CHECK(std::abs(big.amplitudes[1] - cplx{lambda.lambda[1], 0.0}) <= EPS_ALG);
  CHECK(std::abs(big.amplitudes[30] - cplx{lambda.lambda[2], 0.0}) <= EPS_ALG);
  CHECK(std::abs(big.amplitudes[31] - cplx{lambda.lambda[3], 0.0}) <= EPS_ALG);
  for (std::size_t i = 2; i < 30; ++i) CHECK(std::abs(big.amplitudes[i]) == 0.0);
}

TEST_CASE("MultipartySpec validation") {
  MultipartySpec spec = general_spec(2, ResourceSpec{{0.5, 0.5, 0.5, 0.5}},
                                     MeasurementAngles{0.3, 0.3});
  CHECK_NOTHROW(spec.validate());
  spec.num_partners = 1;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = general_spec(9, ResourceSpec{{0.5, 0.5, 0.5, 0.5}}, MeasurementAngles{0.3, 0.3});
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = general_spec(3, ResourceSpec{{0.5, 0.5, 0.5, 0.5}}, MeasurementAngles{0.3, 0.3});
  spec.partner_axes.pop_back();
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec = general_spec(2, ResourceSpec{{0.5, 0.5, 0.5, 0.5}}, MeasurementAngles{0.3, 0.3});
  spec.mode = MultipartyMode::Improved;
  spec.improved_b = 1.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("bipartition entropies equal h(H) on partner-respecting cuts") {
  // H = 0.3 resource.
  const ResourceSpec lambda{{std::sqrt(0.15), std::sqrt(0.15), std::sqrt(0.35),
                             std::sqrt(0.35)}};
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    const MultipartySpec spec = general_spec(n, lambda, MeasurementAngles{0.3, 0.3});
    const StateVector psi = build_quasi_ghz(spec);
    std::vector<std::vector<std::string>> parts;
    partner_subsets(n, parts);
    parts.push_back({"c0", "c1"});
    for (const auto& part : parts) {
      CHECK(std::abs(bipartition_entropy(psi, part) - 0.881290899230693) <= EPS_SIM);
      CHECK(bipartition_entropy(psi, part) < 1.0);
    }
  }

  // H = 1/2: every cut carries a full ebit.
  const MultipartySpec half = general_spec(3, ResourceSpec{{0.5, 0.5, 0.5, 0.5}},
                                           MeasurementAngles{0.3, 0.3});
  const StateVector hpsi = build_quasi_ghz(half);
  std::vector<std::vector<std::string>> parts;
  partner_subsets(3, parts);
  parts.push_back({"c0", "c1"});
  for (const auto& part : parts) {
    CHECK(std::abs(bipartition_entropy(hpsi, part) - 1.0) <= EPS_SIM);
  }

  // Product state.
  const MultipartySpec product = general_spec(2, ResourceSpec{{1.0, 0.0, 0.0, 0.0}},
                                              MeasurementAngles{0.3, 0.3});
  CHECK(bipartition_entropy(build_quasi_ghz(product), {"a1"}) <= EPS_SIM);
}

TEST_CASE("bipartition_entropy rejects bad partitions") {
  const MultipartySpec spec = general_spec(2, ResourceSpec{{0.5, 0.5, 0.5, 0.5}},
                                           MeasurementAngles{0.3, 0.3});
  const StateVector psi = build_quasi_ghz(spec);
  CHECK_THROWS_AS(bipartition_entropy(psi, {}), std::invalid_argument);
  CHECK_THROWS_AS(bipartition_entropy(psi, {"a1", "a2", "c0", "c1"}), std::invalid_argument);
  CHECK_THROWS_AS(bipartition_entropy(psi, {"a1", "a1"}), std::invalid_argument);
  CHECK_THROWS_AS(bipartition_entropy(psi, {"bogus"}), std::invalid_argument);
}

TEST_CASE("reduced pair of a quasi-GHZ is the diagonal classical mixture") {
  const ResourceSpec lambda = normalized_spec(0.3, 0.45, 0.6, 0.4);
  const double h = lambda.entanglement_parameter();
  const MultipartySpec spec = general_spec(3, lambda, MeasurementAngles{0.3, 0.3});
  const DensityMatrix rho = reduced_density_matrix(build_quasi_ghz(spec), {"a1", "a2"});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      cplx expect{0.0, 0.0};
      if (i == 0 && j == 0) expect = cplx{h, 0.0};
      if (i == 3 && j == 3) expect = cplx{1.0 - h, 0.0};
      CHECK(std::abs(rho.entries[i * 4 + j] - expect) <= EPS_SIM);
    }
  }
}

TEST_CASE("every pair of quasi-GHZ qubits is separable") {
  const ResourceSpec lambda = normalized_spec(0.6, 0.3, 0.55, 0.48);
  const MultipartySpec spec = general_spec(3, lambda, MeasurementAngles{0.3, 0.3});
  const StateVector psi = build_quasi_ghz(spec);
  const std::vector<std::string> labels = quasi_ghz_labels(spec);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const SeparabilityResult r = pairwise_separability(psi, {labels[i], labels[j]});
      CHECK(r.separable);
      CHECK(r.min_pt_eigenvalue >= -1e-12);
    }
  }
}

TEST_CASE("pairwise_separability flags a Bell pair") {
  const double r = 1.0 / std::sqrt(2.0);
  const StateVector bell({"x", "y"}, {cplx{r, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0},
                                      cplx{r, 0.0}});
  const SeparabilityResult res = pairwise_separability(bell, {"x", "y"});
  CHECK_FALSE(res.separable);
  CHECK(res.min_pt_eigenvalue == doctest::Approx(-0.5).epsilon(EPS_SIM));
  CHECK_THROWS_AS(pairwise_separability(bell, {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(pairwise_separability(bell, {"x", "nope"}), std::invalid_argument);
}

TEST_CASE("multiparty_target_gate is the N-fold sigma rotation") {
  MultipartySpec spec = general_spec(2, ResourceSpec{{0.5, 0.5, 0.5, 0.5}},
                                     MeasurementAngles{0.3, 0.3});
  spec.partner_axes = {make_axis(0, 0, 1), make_axis(1, 0, 0)};
  const double xi = 0.27;
  const Operator gate = multiparty_target_gate(spec, xi);
  const Operator sigma = kron(pauli_axis_matrix(spec.partner_axes[0]),
                              pauli_axis_matrix(spec.partner_axes[1]));
  const Operator expect = cplx{std::cos(xi), 0.0} * Operator::identity(4) +
                          cplx{0.0, std::sin(xi)} * sigma;
  for (std::size_t i = 0; i < expect.entries.size(); ++i) {
    CHECK(std::abs(gate.entries[i] - expect.entries[i]) <= EPS_ALG);
  }
  CHECK(is_unitary(gate, EPS_ALG));

  spec.charlie_axis = make_axis(0, 1, 0);
  const Operator extended = multiparty_target_gate(spec, xi);
  CHECK(extended.dim == 8);
  CHECK(is_unitary(extended, EPS_ALG));
}

TEST_CASE("deterministic multiparty run realizes the collective gate") {
  SplitMix64 rng(173);
  const GateSpec g{0.31, make_axis(0, 0, 1), make_axis(0, 0, 1)};
  const auto [lambda, angles] = deterministic_config(g);
  for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
    MultipartySpec spec = general_spec(n, lambda, angles);
    for (std::size_t i = 0; i < n; ++i) spec.partner_axes[i] = random_axis(rng);
    const ProtocolReport report =
        run_multiparty_protocol(spec, g.xi, random_multiparty_target(rng, spec));
    CHECK(report.fidelity == doctest::Approx(1.0).epsilon(EPS_SIM));
    CHECK(report.entanglement == doctest::Approx(1.0).epsilon(EPS_ALG));
    CHECK(report.classical_bits == static_cast<int>(2 * n));
    double total = 0.0;
    for (const auto& b : report.branches) {
      CHECK(b.success);
      total += b.probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(EPS_ALG));
  }
}

TEST_CASE("deterministic multiparty run with Charlie's target") {
  SplitMix64 rng(179);
  const GateSpec g{0.24, make_axis(0, 0, 1), make_axis(0, 0, 1)};
  const auto [lambda, angles] = deterministic_config(g);
  MultipartySpec spec = general_spec(2, lambda, angles);
  spec.partner_axes = {random_axis(rng), random_axis(rng)};
  spec.charlie_axis = random_axis(rng);
  const ProtocolReport report =
      run_multiparty_protocol(spec, g.xi, random_multiparty_target(rng, spec));
  CHECK(report.fidelity == doctest::Approx(1.0).epsilon(EPS_SIM));
  const Operator gate = multiparty_target_gate(spec, g.xi);
  for (const auto& b : report.branches) {
    CHECK(b.success);
    CHECK(b.distance <= EPS_SIM);
    CHECK(distance_up_to_phase(b.conditional_operator, gate) <= EPS_SIM);
  }
}

TEST_CASE("multiparty general mode matches the bipartite protocol") {
  SplitMix64 rng(181);
  const ResourceSpec lambda = normalized_spec(0.62, 0.27, 0.5, 0.53);
  const MeasurementAngles angles{0.41, 0.58};
  const GateSpec g{0.3, random_axis(rng), random_axis(rng)};
  const StateVector bipartite_target({"A", "B"}, random_state(rng, 2));
  const ProtocolReport bi = run_general_protocol(lambda, angles, g, bipartite_target);

  MultipartySpec spec = general_spec(2, lambda, angles);
  spec.partner_axes = {g.axis_a, g.axis_b};
  const ProtocolReport multi =
      run_multiparty_protocol(spec, g.xi, random_multiparty_target(rng, spec));
  CHECK(std::abs(multi.fidelity - bi.fidelity) <= EPS_SIM);
  CHECK(std::abs(multi.entanglement - bi.entanglement) <= EPS_ALG);
  // Same collective-outcome distribution.
  for (const char* label : {"B00", "B01", "B10", "B11"}) {
    CHECK(std::abs(multi.basis_probability(label) - bi.basis_probability(label)) <=
          EPS_SIM);
  }
}

TEST_CASE("multiparty improved mode at xi = 0.17 reproduces the bipartite plan") {
  const double xi = 0.17;
  const GatePlan plan = plan_for_xi(xi, 1.001);
  REQUIRE(plan.use_improved);
  const ImprovedParams params = params_from_nb(plan.n, 1.001, xi);
  const ResourceSpec lambda = coefficients_from_angles(params.theta0, params.theta1);

  SplitMix64 rng(191);
  const GateSpec g{xi, make_axis(0, 0, 1), make_axis(0, 0, 1)};
  const StateVector bipartite_target({"A", "B"}, random_state(rng, 2));
  const ProtocolReport bi = run_improved_protocol(params, g, bipartite_target);

  MultipartySpec spec;
  spec.num_partners = 3;
  spec.lambda = lambda;
  spec.partner_axes.assign(3, make_axis(0.0, 0.0, 1.0));
  spec.mode = MultipartyMode::Improved;
  spec.improved_n = plan.n;
  spec.improved_b = 1.001;
  const ProtocolReport multi =
      run_multiparty_protocol(spec, xi, random_multiparty_target(rng, spec));

  CHECK(std::abs(multi.fidelity - bi.fidelity) <= EPS_SIM);
  CHECK(multi.fidelity == doctest::Approx(0.856).epsilon(1e-3));
  CHECK(std::abs(multi.fidelity - plan.fidelity) <= EPS_SIM);
  CHECK(multi.classical_bits == 6);
}

TEST_CASE("improved mode requires the matching resource coefficients") {
  MultipartySpec spec;
  spec.num_partners = 2;
  spec.lambda = ResourceSpec{{0.5, 0.5, 0.5, 0.5}};
  spec.partner_axes.assign(2, make_axis(0.0, 0.0, 1.0));
  spec.mode = MultipartyMode::Improved;
  spec.improved_n = 2.0;
  spec.improved_b = 1.2;
  SplitMix64 rng(193);
  CHECK_THROWS_AS(
      run_multiparty_protocol(spec, 0.3, random_multiparty_target(rng, spec)),
      std::invalid_argument);

  const ImprovedParams params = params_from_nb(2.0, 1.2, 0.3);
  spec.lambda = coefficients_from_angles(params.theta0, params.theta1);
  const ProtocolReport report =
      run_multiparty_protocol(spec, 0.3, random_multiparty_target(rng, spec));
  CHECK(std::abs(report.fidelity -
                 (1.0 - failure_probability_closed(2.0, 1.2, 0.3))) <= EPS_SIM);
}

TEST_CASE("multiparty run input validation") {
  const MultipartySpec spec = general_spec(2, ResourceSpec{{0.5, 0.5, 0.5, 0.5}},
                                           MeasurementAngles{0.3, 0.3});
  SplitMix64 rng(197);
  const StateVector good = random_multiparty_target(rng, spec);
  CHECK_THROWS_AS(run_multiparty_protocol(spec, 0.0, good), std::invalid_argument);
  CHECK_THROWS_AS(run_multiparty_protocol(spec, kPi / 2.0, good), std::invalid_argument);

  const StateVector bad_labels({"A1", "B2"}, random_state(rng, 2));
  CHECK_THROWS_AS(run_multiparty_protocol(spec, 0.3, bad_labels), std::invalid_argument);

  StateVector unnormalized = good;
  unnormalized.amplitudes[0] *= 3.0;
  CHECK_THROWS_AS(run_multiparty_protocol(spec, 0.3, unnormalized), std::invalid_argument);
}
