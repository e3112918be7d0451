// Copyright 2026 The aamsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>

#include "aam/circuits.hpp"
#include "aam/qcore.hpp"

namespace aam {

// Outcome of one ancilla-interferometry run.  The ancilla is qubit 0,
// prepared in |+>, and its transverse readout encodes the target trace.
struct MoussaResult {
  Complex value{0.0, 0.0};  // <sx> + i<sy> of the ancilla
  Circuit circuit_used;
  std::pair<double, double> ancilla_readout{0.0, 0.0};
};

// tr(rho u) via a single controlled-u between the |+> ancilla and the
// system; system dim must be a power of two.
MoussaResult expect_unitary(const DensityMatrix& rho, const UnitaryMatrix& u);

// <a> for Hermitian-unitary a (a^2 = 1): real part of the run above, with
// the imaginary residue checked below 1e-9.
double expect_hermitian_unitary(const DensityMatrix& rho,
                                const HermitianObservable& a);

// <p> for a projector, through the reflection 2p - 1; result in [0, 1].
double expect_projector(const DensityMatrix& rho,
                        const HermitianObservable& p);

// tr(rho a) for diagonal a, as the a_kk-weighted sum of basis-projector
// runs.
double expect_diagonal_hermitian(const DensityMatrix& rho,
                                 const HermitianObservable& a);

// tr(rho v u): controlled-u then controlled-v on the same ancilla.
MoussaResult joint_expect(const DensityMatrix& rho, const UnitaryMatrix& u,
                          const UnitaryMatrix& v);

}  // namespace aam
