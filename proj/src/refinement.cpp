#include "subdiv/refinement.hpp"

namespace subdiv {

std::string to_string(MeshKind mesh) { return mesh == MeshKind::Primal ? "primal" : "dual"; }

double mesh_parameter(int index, int level, MeshKind mesh) {
    const double offset = mesh == MeshKind::Dual ? 0.5 : 0.0;
    return std::ldexp(static_cast<double>(index) + offset, -level);
}

SampledCurve basis_experiment(const Mask& mask, int iters) {
    return parameterize(basis_polygon<Rational>(mask, iters), -kBasisInterval, kBasisInterval);
}

}  // namespace subdiv
