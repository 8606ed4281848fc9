// Write generations 0..15 of one rule as a scaled PBM montage.
#include <iostream>
#include <string>

#include "oddrule/catalog.hpp"
#include "oddrule/render.hpp"

int main(int argc, char** argv) {
  using namespace oddrule;
  std::string rule = argc > 1 ? argv[1] : "365";
  std::string out = "gallery_" + rule + ".pbm";
  write_pbm(out, render_montage(parse_rule(rule), 15, 4), 4);
  std::cout << "wrote " << out << "\n";
  return 0;
}
