// Two-part alternating rhythm: the same score from a covariant and a
// contravariant generator.

#include <iostream>

#include "tempora/tempora.hpp"

int main() {
  using namespace tempora;
  const auto initial = parse("(0,1) (x) (0,1/2)");
  const auto covariant = iterate_generate(initial, parse("((1,1) (x) (1/2,1)) . braid"), 4, Variance::Covariant);
  const auto contravariant =
      iterate_generate(initial, parse("((1,1/2) (x) (1,2)) . braid"), 4, Variance::Contravariant);

  std::cout << render_score_text(covariant);
  std::cout << "contravariant run identical: " << (covariant == contravariant ? "yes" : "no") << "\n";

  const auto analysis = analyze(covariant, Variance::Covariant);
  if (analysis.generator) std::cout << "generator: " << to_string(*analysis.generator) << "\n";
}
