#ifndef PYX_TEST_FUZZGEN_HPP
#define PYX_TEST_FUZZGEN_HPP

#include <cstdint>
#include <string>

namespace pyxtest {

// Deterministic random program + workload generator. Generated programs are
// closed under the interpreter: variables are initialized before use, array
// indices stay in bounds, loops are bounded, divisors are non-zero, prints
// carry scalars only.
struct FuzzCase {
  std::string program;
  std::string workload;
};

FuzzCase generate_fuzz_case(uint64_t seed);

} // namespace pyxtest

#endif
