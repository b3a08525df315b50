#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "trop/catalog.hpp"
#include "trop/io.hpp"

using namespace trop;

namespace {

template <typename T, typename W, typename R>
T roundtrip(const T& value, W&& write, R&& read) {
    std::ostringstream os;
    write(os, value);
    std::istringstream is(os.str());
    T back = read(is);
    // writing again must give identical bytes
    std::ostringstream os2;
    write(os2, back);
    REQUIRE(os.str() == os2.str());
    return back;
}

}  // namespace

TEST_CASE("lattice format") {
    IntegerLattice L = hnf(3, {{4, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    IntegerLattice back = roundtrip(
        L, [](std::ostream& o, const IntegerLattice& x) { write_lattice(o, x); },
        [](std::istream& i) { return read_lattice(i); });
    REQUIRE(back == L);
    // the parser accepts arbitrary generating sets and canonicalizes
    std::istringstream gen("lattice 2 3\n2 0\n0 2\n2 2\n");
    REQUIRE(read_lattice(gen) == hnf(2, {{2, 0}, {0, 2}}));
    std::istringstream bad("lattice 0 0\n");
    REQUIRE_THROWS_AS(read_lattice(bad), ValidationError);
}

TEST_CASE("partition format") {
    for (const auto& e : shipped_ideals()) {
        if (e.ideal.kind() != TropicalIdeal::Kind::Paving) continue;
        const InvariantPartition& P = e.ideal.partition();
        InvariantPartition back = roundtrip(
            P, [](std::ostream& o, const InvariantPartition& x) { write_partition(o, x); },
            [](std::istream& i) { return read_partition(i); });
        REQUIRE(back == P);
    }
    // an affine block round-trips
    InvariantPartition P(GeneratorSet(2, 1, {Block::affine(hnf(2, {{2, 0}, {0, 2}}))}));
    InvariantPartition back = roundtrip(
        P, [](std::ostream& o, const InvariantPartition& x) { write_partition(o, x); },
        [](std::istream& i) { return read_partition(i); });
    REQUIRE(back == P);
}

TEST_CASE("corrupted partition files fail with a witness") {
    std::istringstream bad("dpartition 1 2 2\nfinite 3\n0\n1\n2\nfinite 3\n0\n1\n3\n");
    try {
        read_partition(bad);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        REQUIRE(std::string(e.what()).find("A3") != std::string::npos);
    }
}

TEST_CASE("quotient partition format") {
    TropicalIdeal I = remark_example(3);
    const QuotientGeneratorSet& g = I.qpartition().generators();
    std::ostringstream os;
    write_qgenerator_set(os, g);
    std::istringstream is(os.str());
    QuotientGeneratorSet back = read_qgenerator_set(is);
    REQUIRE(back == g);
    std::ostringstream os2;
    write_qgenerator_set(os2, back);
    REQUIRE(os.str() == os2.str());
}

TEST_CASE("matroid format: tokens and circuits") {
    FiniteMatroid M = non_pappus();
    FiniteMatroid back = roundtrip(
        M, [](std::ostream& o, const FiniteMatroid& x) { write_matroid(o, x); },
        [](std::istream& i) { return read_matroid(i); });
    REQUIRE(back == M);
}

TEST_CASE("matroid format: point labels") {
    FiniteMatroid M = restrict_matroid(shipped_ideal("lattice2-2Z"), Window::box1(0, 4));
    FiniteMatroid back = roundtrip(
        M, [](std::ostream& o, const FiniteMatroid& x) { write_matroid(o, x); },
        [](std::istream& i) { return read_matroid(i); });
    REQUIRE(back == M);
}

TEST_CASE("matroid format: hyperplane input") {
    std::istringstream in(
        "matroid 4 2\ntoken a\ntoken b\ntoken c\ntoken d\n"
        "hyperplanes 4\n1 0\n1 1\n1 2\n1 3\n");
    FiniteMatroid M = read_matroid(in);
    REQUIRE(M.rank() == 2);
    REQUIRE(M.circuit_indices().size() == 4);  // all 3-subsets of a U_{2,4}
}

TEST_CASE("support format") {
    Support S = make_support({{0, 1}, {2, 3}, {-1, 5}});
    std::ostringstream os;
    write_support(os, S, 2);
    std::istringstream is(os.str());
    REQUIRE(read_support(is, 2) == S);
}

TEST_CASE("ideal format round trips for all shipped ideals") {
    for (const auto& e : shipped_ideals()) {
        std::ostringstream os;
        write_ideal(os, e.ideal);
        std::istringstream is(os.str());
        TropicalIdeal back = read_ideal(is);
        REQUIRE(back == e.ideal);
        std::ostringstream os2;
        write_ideal(os2, back);
        REQUIRE(os.str() == os2.str());
    }
}

TEST_CASE("ideal format rejects malformed input") {
    std::istringstream a("ideal nonsense 2\n");
    REQUIRE_THROWS_AS(read_ideal(a), ValidationError);
    std::istringstream b("ideal lattice2 1\nlattice 1 1\n1\n");
    REQUIRE_THROWS_AS(read_ideal(b), ValidationError);  // full lattice is not proper
}
