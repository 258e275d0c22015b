#ifndef PYX_TEST_PYXIL_PARSER_HPP
#define PYX_TEST_PYXIL_PARSER_HPP

#include "pyx/codegen.hpp"

namespace pyxtest {

// Test-only PyxIL reader: rebuilds a PyxilProgram from the emitted text so
// emit -> parse -> emit is an identity. Statement ids are freshly numbered
// (the text does not carry them); hosts, sync ops, classes, locals and
// structure round-trip.
pyx::PyxilProgram parse_pyxil(const std::string &text);

} // namespace pyxtest

#endif
