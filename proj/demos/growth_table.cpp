// Print early population terms and the guessed generating function for a
// handful of rules.
#include <iostream>

#include "oddrule/catalog.hpp"
#include "oddrule/genfunc.hpp"
#include "oddrule/sequence.hpp"

int main() {
  using namespace oddrule;
  for (const char* rule : {"003", "013", "365", "537", "757"}) {
    Mask m = parse_rule(rule);
    auto a = a_seq(mask_to_poly(m), 12);
    GuessOutcome g = guess_checked(b_seq_window(m, 35));
    std::cout << rule << ": a =";
    for (std::int64_t v : a) std::cout << " " << v;
    std::cout << "\n     G(x) = " << format_gf(g.gf) << "\n";
  }
  return 0;
}
