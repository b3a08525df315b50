#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "trop/quotient_partition.hpp"

using namespace trop;

namespace {

QuotientGroup remark_group() { return QuotientGroup(hnf(2, {{4, 0}})); }

std::vector<IntVec> remark_block_pts() {
    return {{0, 0}, {2, 0}, {0, 1}, {2, 1}};
}

}  // namespace

TEST_CASE("remark block passes the d=3 axioms over Z^2/<(4,0)>") {
    QuotientGroup Q = remark_group();
    QuotientGeneratorSet A(Q, 3, {QBlock::finite(Q, remark_block_pts())});
    REQUIRE(check_generator_axioms_q(A).ok);
}

TEST_CASE("remark block fails the d=2 axioms (overlap two under a unit shift)") {
    QuotientGroup Q = remark_group();
    QuotientGeneratorSet A(Q, 2, {QBlock::finite(Q, remark_block_pts())});
    AxiomCheck c = check_generator_axioms_q(A);
    REQUIRE_FALSE(c.ok);
    REQUIRE(c.axiom == "A3");
}

TEST_CASE("remark block is stabilized by [(2,0)] and is not a coset") {
    QuotientGroup Q = remark_group();
    QBlock S = QBlock::finite(Q, remark_block_pts());
    REQUIRE(translate_qblock(Q, S.reps, {2, 0}) == S.reps);
    REQUIRE(translate_qblock(Q, S.reps, {0, 1}) != S.reps);
    REQUIRE_FALSE(is_subgroup_coset(Q, S.reps));
    // a genuine coset for contrast
    std::vector<IntVec> K = {{0, 0}, {2, 0}};
    REQUIRE(is_subgroup_coset(Q, K));
    REQUIRE(is_subgroup_coset(Q, translate_qblock(Q, K, {1, 5})));
}

TEST_CASE("find_block_q on the remark partition") {
    QuotientGroup Q = remark_group();
    QuotientInvariantPartition P(
        QuotientGeneratorSet(Q, 3, {QBlock::finite(Q, remark_block_pts())}));
    BlockRef r = find_block_q(P, {{0, 0}, {2, 0}, {0, 1}});
    REQUIRE(r.listed);
    REQUIRE(r.block == 0);
    // a d-set spanning three distinct x-classes cannot fit any translate
    BlockRef d = find_block_q(P, {{0, 0}, {1, 0}, {2, 0}});
    REQUIRE_FALSE(d.listed);
    // shifting by the identity leaves the canonical block unchanged
    REQUIRE(translate_qblock(Q, P.blocks()[0].reps, zero_vec(2)) == P.blocks()[0].reps);
}

TEST_CASE("coset blocks: intermediate lattice checks") {
    QuotientGroup Q = remark_group();
    REQUIRE_THROWS_AS(QBlock::coset(Q, hnf(2, {{3, 0}})), ValidationError);  // L not inside
    REQUIRE_THROWS_AS(QBlock::coset(Q, hnf(2, {{4, 0}})), ValidationError);  // trivial
    QBlock c = QBlock::coset(Q, hnf(2, {{2, 0}}));
    auto sz = c.size(Q);
    REQUIRE(sz.has_value());
    REQUIRE(*sz == 2);
    REQUIRE(c.materialize(Q, zero_vec(2)) == std::vector<IntVec>{{0, 0}, {2, 0}});
    QBlock inf = QBlock::coset(Q, hnf(2, {{2, 0}, {0, 1}}));
    REQUIRE_FALSE(inf.size(Q).has_value());
}

TEST_CASE("a finite coset block of index >= d is a valid generator") {
    QuotientGroup Q = remark_group();
    QuotientGeneratorSet A(Q, 2, {QBlock::coset(Q, hnf(2, {{2, 0}}))});
    REQUIRE(check_generator_axioms_q(A).ok);
    QuotientGeneratorSet B(Q, 3, {QBlock::coset(Q, hnf(2, {{2, 0}}))});
    AxiomCheck c = check_generator_axioms_q(B);
    REQUIRE_FALSE(c.ok);
    REQUIRE(c.axiom == "A2");  // only two elements
}

TEST_CASE("distinct coset blocks with a large common subgroup violate (A3)") {
    QuotientGroup Q(QuotientGroup(hnf(2, {{8, 0}})));
    QBlock a = QBlock::coset(Q, hnf(2, {{2, 0}}));
    QBlock b = QBlock::coset(Q, hnf(2, {{2, 0}, {0, 3}}));
    QuotientGeneratorSet A(Q, 2, {a, b});
    AxiomCheck c = check_generator_axioms_q(A);
    REQUIRE_FALSE(c.ok);
    REQUIRE(c.axiom == "A3");
}

TEST_CASE("(A1): whole group rejected in both shapes") {
    QuotientGroup Qfin(hnf(1, {{3}}));
    QuotientGeneratorSet A(Qfin, 1, {QBlock::finite(Qfin, {{0}, {1}, {2}})});
    AxiomCheck c = check_generator_axioms_q(A);
    REQUIRE_FALSE(c.ok);
    REQUIRE(c.axiom == "A1");

    QuotientGroup Q = remark_group();
    QuotientGeneratorSet B(Q, 2, {QBlock::coset(Q, IntegerLattice::full(2))});
    AxiomCheck cb = check_generator_axioms_q(B);
    REQUIRE_FALSE(cb.ok);
    REQUIRE(cb.axiom == "A1");
}

TEST_CASE("two coset blocks may coexist when their common subgroup is small") {
    // over Z^2/<(12,0)>: cosets of <(2,0)> (6 elements) and <(3,0)> (4
    // elements) meet in cosets of <(6,0)> (2 elements), below d = 3
    QuotientGroup Q(hnf(2, {{12, 0}}));
    QBlock a = QBlock::coset(Q, hnf(2, {{2, 0}}));
    QBlock b = QBlock::coset(Q, hnf(2, {{3, 0}}));
    QuotientGeneratorSet gens(Q, 3, {a, b});
    REQUIRE(check_generator_axioms_q(gens).ok);
    QuotientInvariantPartition P(gens);
    // the even multiples of (2,0) land in the first block
    BlockRef r = find_block_q(P, {{0, 0}, {2, 0}, {4, 0}});
    REQUIRE(r.listed);
    BlockRef s = find_block_q(P, {{0, 0}, {3, 0}, {6, 0}});
    REQUIRE(s.listed);
    REQUIRE(r.block != s.block);
    // a mixed triple lies in neither coset family
    REQUIRE_FALSE(find_block_q(P, {{0, 0}, {2, 0}, {3, 0}}).listed);
    // with d = 2 the two families clash (their overlap reaches 2)
    QuotientGeneratorSet bad(Q, 2, {a, b});
    AxiomCheck c = check_generator_axioms_q(bad);
    REQUIRE_FALSE(c.ok);
    REQUIRE(c.axiom == "A3");
}

TEST_CASE("quotient variant with L = 0 agrees with the Z^n machinery") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coord(-4, 4);
    QuotientGroup Q(IntegerLattice::zero(1));
    std::vector<IntVec> block_pts = {{1}, {2}, {4}, {8}};
    InvariantPartition P(GeneratorSet(1, 2, {Block::finite(block_pts)}));
    QuotientInvariantPartition QP(
        QuotientGeneratorSet(Q, 2, {QBlock::finite(Q, block_pts)}));
    for (int trial = 0; trial < 300; ++trial) {
        IntVec a{Int(coord(rng))}, b{Int(coord(rng))};
        if (a == b) continue;
        BlockRef r1 = find_block(P, {a, b});
        BlockRef r2 = find_block_q(QP, {a, b});
        REQUIRE(r1.listed == r2.listed);
        if (r1.listed) REQUIRE(r1.block == r2.block);
        std::vector<IntVec> X = {a, b, {Int(coord(rng))}};
        X = normalize_points(X);
        if (static_cast<int>(X.size()) < 2) continue;
        REQUIRE(contains_in_block(P, X).has_value() == contains_in_block_q(QP, X).has_value());
    }
}
