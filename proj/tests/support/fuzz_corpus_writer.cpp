// Regenerates the bundled fuzz corpus (corpus/fuzz/fNN.{pyx,workload}).
// Seeds are fixed so the files only change when the generator does.

#include "fuzzgen.hpp"
#include "pyx/support.hpp"

#include <cstdio>
#include <string>

int main(int argc, char **argv) {
  std::string dir = argc > 1 ? argv[1] : "corpus/fuzz";
  for (int i = 1; i <= 20; ++i) {
    pyxtest::FuzzCase fc = pyxtest::generate_fuzz_case(1000 + i);
    char name[32];
    std::snprintf(name, sizeof(name), "f%02d", i);
    pyx::write_file(dir + "/" + name + ".pyx", fc.program);
    pyx::write_file(dir + "/" + name + ".workload", fc.workload);
  }
  std::printf("wrote 20 fuzz cases to %s\n", dir.c_str());
  return 0;
}
