// Single timeline, dilating rhythm generated from a bracketed cell of two
// notes.

#include <iostream>

#include "tempora/tempora.hpp"

int main() {
  using namespace tempora;
  const auto cell = parse("(0,1/2) (x) (1/2,1/4) ; box");
  std::cout << render_ascii(cell) << "\n";

  const auto score = iterate_generate(cell, parse("(3/4,2)"), 3, Variance::Covariant);
  std::cout << render_score_text(score);

  // The same step, read as a dilation by 2 and a shift of one cell length
  // in the frame of the first note.
  const auto step = contextual_transform(cell, 1, AffElem(make_rational(3, 2), 2));
  std::cout << "contextual step equals (3/4,2) step: "
            << (terms_equal(step, Term::seq(cell, parse("(3/4,2)"))) ? "yes" : "no") << "\n";
  std::cout << "relative interval of the cell: " << to_string(relative_interval(cell, 1, 2)) << "\n";

  std::vector<TimeSpan> notes;
  for (const auto& e : score.timelines[0]) notes.push_back(e.span);
  std::cout << "note-to-note left intervals:";
  for (const auto& g : span_intervals(notes, Variance::Covariant)) std::cout << " " << to_string(g);
  std::cout << "\n";
}
