// Writes one golden coefficient file per type from the closed-form tables.
#include "adeh/coefficients.hpp"
#include "adeh/serialize.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: make_golden <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto &t : adeh::standard_types()) {
    const int h = adeh::build_root_system(t).coxeter_number;
    std::ofstream out(adeh::golden_path(dir, t));
    out << adeh::golden_json(t, h, adeh::closed_form_reference(t)).dump(2) << "\n";
    if (!out) {
      std::cerr << "cannot write " << adeh::golden_path(dir, t) << "\n";
      return 1;
    }
  }
  return 0;
}
