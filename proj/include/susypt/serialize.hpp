#ifndef SUSYPT_SERIALIZE_HPP
#define SUSYPT_SERIALIZE_HPP

#include <string>
#include <vector>

#include "susypt/bifurcation.hpp"
#include "susypt/shape_invariance.hpp"
#include "susypt/wavefunctions.hpp"

namespace susypt {

// Deterministic serialization: complex numbers as separate re/im fields,
// doubles printed with shortest round-trip formatting, no timestamps.

std::string spectrum_to_json(const SuperpotentialSpec& spec, const AlgebraicSpectrum& spectrum);
std::string spectrum_to_csv(const SuperpotentialSpec& spec, const AlgebraicSpectrum& spectrum);

std::string wavefunction_to_json(const SuperpotentialSpec& spec, const WaveFunctionSample& psi);
std::string wavefunction_to_csv(const WaveFunctionSample& psi);

std::string scan_to_json(const std::vector<ScanRecord>& records);
std::string scan_to_csv(const std::vector<ScanRecord>& records);

std::string class_token(const SpectrumClass& cls);

// Family <-> CLI name mapping ("ahmed", "rosen-morse", "eckart", "tan",
// "cot", "pt1", "pt2", "coulomb").
std::string family_cli_name(Family f);
Family family_from_cli_name(const std::string& name);

}  // namespace susypt

#endif
