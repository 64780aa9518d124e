#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tempora/tempora.hpp"

namespace tempora {
namespace {

Rational q(long long n, long long d = 1) { return make_rational(n, d); }
AffElem A(long long tn, long long td, long long dn, long long dd = 1) { return {q(tn, td), q(dn, dd)}; }
TimeSpan S(long long on, long long od, long long dn, long long dd = 1) { return {q(on, od), q(dn, dd)}; }
const Perm kSwap = Perm::adjacent_swap(2, 0);

const char* kFig1Initial = "(0,1) (x) (0,1/2)";
const char* kFig1Cov = "braid ; (1,1) (x) (1/2,1)";
const char* kFig1Contra = "braid ; (1,1/2) (x) (1,2)";
const char* kFig5Cell = "(0,1/2) (x) (1/2,1/4) ; box";

std::vector<TimeSpan> spans_at(const RhythmScore& score, std::size_t step) {
  std::vector<TimeSpan> out;
  for (const auto& line : score.timelines)
    for (const auto& e : line)
      if (e.step == step) out.push_back(e.span);
  return out;
}

TEST(Interpret, Identity) {
  const auto step = interpret(EndoNormal{WreathElem::identity(2)});
  ASSERT_EQ(step.timelines.size(), 2u);
  EXPECT_EQ(step.timelines[0].front().span, S(0, 1, 1));
  EXPECT_EQ(step.timelines[1].front().span, S(0, 1, 1));
  EXPECT_TRUE(step.exchange.is_identity());
}

TEST(Interpret, InitialTwoPartSpans) {
  const auto step = interpret(EndoNormal{WreathElem({A(0, 1, 1), A(0, 1, 1, 2)}, Perm::identity(2))});
  EXPECT_EQ(step.timelines[0].front().span, S(0, 1, 1));
  EXPECT_EQ(step.timelines[1].front().span, S(0, 1, 1, 2));
}

TEST(Interpret, BracketedCellIsOneTimeline) {
  const auto step = interpret(normalize_bracket(parse(kFig5Cell)));
  ASSERT_EQ(step.timelines.size(), 1u);
  ASSERT_EQ(step.timelines[0].size(), 2u);
  EXPECT_EQ(step.timelines[0][0], (TimelineEvent{S(0, 1, 1, 2), 1, {0}, 0}));
  EXPECT_EQ(step.timelines[0][1], (TimelineEvent{S(1, 2, 1, 4), 2, {1}, 0}));
}

TEST(Interpret, BasepointIsAppliedAndChecked) {
  const SpanConfig base({S(2, 1, 3)});
  const auto step = interpret(normalize_bracket(parse("(1,1/2)")), base);
  EXPECT_EQ(step.timelines[0][0].span, S(5, 1, 3, 2));
  EXPECT_THROW(interpret(normalize_bracket(parse("id2")), base), SizeMismatch);
}

TEST(Generate, TwoPartRhythmBothVariancesAgreeWithMatrixOracle) {
  const auto cov = iterate_generate(parse(kFig1Initial), parse(kFig1Cov), 6, Variance::Covariant);
  const auto contra = iterate_generate(parse(kFig1Initial), parse(kFig1Contra), 6, Variance::Contravariant);
  EXPECT_EQ(cov, contra);
  EXPECT_EQ(spans_at(cov, 1), (std::vector<TimeSpan>{S(1, 1, 1, 2), S(1, 2, 1)}));
  EXPECT_EQ(spans_at(cov, 2), (std::vector<TimeSpan>{S(3, 2, 1), S(3, 2, 1, 2)}));

  MatrixAffine m{{q(0), q(0)}, {{q(1), q(0)}, {q(0), q(1, 2)}}};
  const MatrixAffine gen{{q(1), q(1)}, {{q(0), q(1, 2)}, {q(2), q(0)}}};
  EXPECT_EQ(spans_at(cov, 0), testing::oracle_spans(m));
  for (std::size_t k = 1; k <= 6; ++k) {
    m = testing::oracle_matmul(m, gen);
    ASSERT_EQ(spans_at(cov, k), testing::oracle_spans(m)) << "step " << k;
  }
  EXPECT_EQ(cov.exchanges, (std::vector<Perm>{Perm::identity(2), kSwap, Perm::identity(2), kSwap, Perm::identity(2),
                                              kSwap, Perm::identity(2)}));
}

TEST(Generate, EventsAreSortedByOnset) {
  const auto cov = iterate_generate(parse(kFig1Initial), parse(kFig1Cov), 6, Variance::Covariant);
  for (const auto& line : cov.timelines)
    for (std::size_t k = 1; k < line.size(); ++k) EXPECT_LE(line[k - 1].span.onset(), line[k].span.onset());
}

TEST(Generate, DilatingCell) {
  const auto score = iterate_generate(parse(kFig5Cell), parse("(3/4,2)"), 3, Variance::Covariant);
  EXPECT_EQ(spans_at(score, 1), (std::vector<TimeSpan>{S(3, 4, 1), S(7, 4, 1, 2)}));
  EXPECT_EQ(spans_at(score, 2), (std::vector<TimeSpan>{S(9, 4, 2), S(17, 4, 1)}));

  // Alternating right actions from the first span.
  std::vector<TimeSpan> flat{S(0, 1, 1, 2)};
  for (int k = 0; k < 7; ++k) flat.push_back(right_action(flat.back(), k % 2 ? A(1, 1, 4) : A(1, 1, 1, 2)));
  std::vector<TimeSpan> generated;
  for (const auto& e : score.timelines[0]) generated.push_back(e.span);
  EXPECT_EQ(generated, flat);
}

TEST(Generate, Errors) {
  EXPECT_THROW(iterate_generate(parse(kFig5Cell), parse("(3/4,2)"), 2, Variance::Contravariant), VarianceError);
  EXPECT_THROW(iterate_generate(parse(kFig1Initial), parse("(3/4,2)"), 2, Variance::Covariant), ArityMismatch);
  EXPECT_THROW(iterate_generate(parse(kFig1Initial), parse("box"), 2, Variance::Covariant), NotEndo);
  EXPECT_THROW(iterate_generate(parse(kFig1Initial), parse(kFig1Cov), 0, Variance::Covariant), SemanticError);
  EXPECT_THROW(iterate_generate(parse("box ; braid"), parse(kFig1Cov), 1, Variance::Covariant), ArityMismatch);
}

TEST(Contextual, IdentityChangesNothing) {
  const auto cell = parse(kFig5Cell);
  EXPECT_TRUE(terms_equal(contextual_transform(cell, 1, AffElem()), cell));
  EXPECT_THROW(contextual_transform(cell, 3, AffElem()), IndexOutOfRange);
}

TEST(Contextual, LocalFrameMatchesGlobalDilation) {
  Term ctx = parse(kFig5Cell);
  Term global = ctx;
  for (int k = 0; k < 3; ++k) {
    ctx = contextual_transform(ctx, 1, A(3, 2, 2));
    global = Term::seq(global, parse("(3/4,2)"));
    ASSERT_TRUE(terms_equal(ctx, global)) << "step " << k;
  }
  EXPECT_EQ(leaf_decoration(normalize_bracket(contextual_transform(parse(kFig5Cell), 1, A(3, 2, 2))), 1),
            A(0, 1, 1, 2) * A(3, 2, 2));
}

TEST(Contextual, RandomBracketsAgreeWithConjugatedGlobalStep) {
  testing::Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    const auto t = testing::random_term(rng, testing::uniform(rng, 2, 6), 3, true);
    const auto nf = normalize_bracket(t);
    const auto leaf = testing::uniform(rng, 1, nf.dom());
    const auto h = testing::random_aff(rng);
    const auto out = contextual_transform(t, leaf, h);
    const auto after = normalize_bracket(out);
    ASSERT_EQ(leaf_decoration(after, leaf), leaf_decoration(nf, leaf) * h);
    const auto tree = tree_of_leaf(nf, leaf);
    for (std::size_t i = 1; i <= nf.dom(); ++i) {
      if (tree_of_leaf(nf, i) != tree) {
        ASSERT_EQ(leaf_decoration(after, i), leaf_decoration(nf, i));
        continue;
      }
      ASSERT_EQ(relative_interval(out, leaf, i), relative_interval(t, leaf, i));
    }
  }
}

TEST(RelativeInterval, Examples) {
  const auto cell = parse(kFig5Cell);
  EXPECT_EQ(relative_interval(cell, 1, 1), AffElem());
  EXPECT_EQ(relative_interval(cell, 1, 2), A(1, 1, 1, 2));
  EXPECT_EQ(relative_interval(cell, 1, 2), aff_inv(A(0, 1, 1, 2)) * A(1, 2, 1, 4));
  EXPECT_THROW(relative_interval(cell, 1, 3), IndexOutOfRange);
}

TEST(Analyze, ConstantScore) {
  const auto score = iterate_generate(parse("id2"), parse("id2"), 3, Variance::Covariant);
  const auto a = analyze(score, Variance::Covariant);
  ASSERT_EQ(a.intervals.size(), 3u);
  for (const auto& e : a.intervals) EXPECT_TRUE(e.wreath.is_identity());
  ASSERT_TRUE(a.generator);
  EXPECT_TRUE(a.generator->wreath.is_identity());
}

TEST(Analyze, TwoPartRhythmRecoversGeneralForm) {
  const auto score = iterate_generate(parse(kFig1Initial), parse(kFig1Cov), 6, Variance::Covariant);
  const auto cov = analyze(score, Variance::Covariant);
  ASSERT_TRUE(cov.generator);
  EXPECT_EQ(cov.generator->wreath, WreathElem({A(1, 1, 1), A(1, 2, 1)}, kSwap));
  const auto contra = analyze(score, Variance::Contravariant);
  ASSERT_TRUE(contra.generator);
  EXPECT_EQ(contra.generator->wreath, WreathElem({A(1, 1, 1, 2), A(1, 1, 2)}, kSwap));
}

TEST(Analyze, DilatingCell) {
  const auto score = iterate_generate(parse(kFig5Cell), parse("(3/4,2)"), 3, Variance::Covariant);
  const auto a = analyze(score, Variance::Covariant);
  ASSERT_TRUE(a.generator);
  EXPECT_EQ(a.generator->wreath, WreathElem({A(3, 4, 2)}, Perm::identity(1)));
  EXPECT_THROW(analyze(score, Variance::Contravariant), VarianceError);
}

TEST(Analyze, NoteByNoteIntervalsOfTheCell) {
  const auto score = iterate_generate(parse(kFig5Cell), parse("(3/4,2)"), 2, Variance::Covariant);
  std::vector<TimeSpan> flat;
  for (const auto& e : score.timelines[0]) flat.push_back(e.span);
  const auto left = span_intervals(flat, Variance::Covariant);
  EXPECT_EQ(std::vector<AffElem>(left.begin(), left.begin() + 4),
            (std::vector<AffElem>{A(1, 2, 1, 2), A(-5, 4, 4), A(11, 8, 1, 2), A(-19, 4, 4)}));
  for (std::size_t k = 0; k < left.size(); ++k) EXPECT_EQ(left_action(left[k], flat[k]), flat[k + 1]);
  const auto right = span_intervals(flat, Variance::Contravariant);
  for (std::size_t k = 0; k < right.size(); ++k) EXPECT_EQ(right[k], k % 2 ? A(1, 1, 4) : A(1, 1, 1, 2));
}

TEST(Analyze, Errors) {
  const auto one = iterate_generate(parse("id2"), parse("id2"), 1, Variance::Covariant);
  auto broken = one;
  broken.timelines.pop_back();
  EXPECT_THROW(analyze(broken, Variance::Covariant), InconsistentWidths);
  RhythmScore single;
  single.timelines = {{TimelineEvent{}}};
  single.exchanges = {Perm::identity(1)};
  EXPECT_THROW(analyze(single, Variance::Covariant), SemanticError);
}

TEST(Analyze, RoundTripOnRandomGenerators) {
  testing::Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    const auto v = k % 2 ? Variance::Contravariant : Variance::Covariant;
    const auto n = testing::uniform(rng, 1, 4);
    const auto gen = testing::random_endo_term(rng, n, 3);
    // Covariant runs also start from bracketed morphisms.
    const bool bracketed = v == Variance::Covariant && k % 4 == 0;
    const auto initial = bracketed ? testing::random_bracket_term(rng, n, 2) : testing::random_endo_term(rng, n, 2);
    const auto arity = typecheck(initial);
    ASSERT_EQ(arity.cod, n);
    const auto steps = testing::uniform(rng, 1, 6);
    const auto score = iterate_generate(initial, gen, steps, v);
    for (const auto& line : score.timelines)
      for (const auto& e : line) ASSERT_GT(e.span.duration(), 0);
    const auto expected = normalize_endo(gen);
    const auto a = analyze(score, v);
    ASSERT_EQ(a.intervals.size(), steps);
    for (const auto& e : a.intervals) ASSERT_EQ(e, expected) << print_term(initial) << " / " << print_term(gen);
    ASSERT_TRUE(a.generator);
  }
}

TEST(Score, TextRendering) {
  const auto score = iterate_generate(parse(kFig5Cell), parse("(3/4,2)"), 1, Variance::Covariant);
  EXPECT_EQ(render_score_text(score),
            "step 0  exchange [1 2]\n  line 1: [ (0,1/2) (1/2,1/4) ]\n"
            "step 1  exchange [1 2]\n  line 1: [ (3/4,1) (7/4,1/2) ]\n");
}

}  // namespace
}  // namespace tempora
