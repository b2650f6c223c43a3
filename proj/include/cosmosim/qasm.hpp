#pragma once

#include <string>

#include "cosmosim/circuit.hpp"

namespace cosmosim {

/// OpenQASM 2.0 text for a circuit: header, one qreg, one line per gate with
/// the mnemonics x/s/sdg/rx/rz/cx. Rotation angles are printed with 17
/// significant digits so a double round-trips exactly; output is
/// byte-deterministic for a given circuit.
std::string export_qasm(const Circuit& c);

}  // namespace cosmosim
