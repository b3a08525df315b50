#pragma once

#include <istream>
#include <ostream>

#include "trop/ideal.hpp"

namespace trop {

namespace detail {

inline std::string expect_word(std::istream& in, const char* what) {
    std::string w;
    if (!(in >> w)) throw ValidationError(std::string("parse: expected ") + what);
    return w;
}

inline Int read_int(std::istream& in, const char* what) {
    Int v;
    if (!(in >> v)) throw ValidationError(std::string("parse: expected integer for ") + what);
    return v;
}

inline long long read_count(std::istream& in, const char* what, long long lo = 0,
                            long long hi = 1'000'000) {
    Int v = read_int(in, what);
    if (v < lo || v > hi) throw ValidationError(std::string("parse: out-of-range ") + what);
    return static_cast<long long>(v);
}

inline IntVec read_point(std::istream& in, int n) {
    IntVec p;
    for (int i = 0; i < n; ++i) p.push_back(read_int(in, "coordinate"));
    return p;
}

inline void write_point(std::ostream& out, const IntVec& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ' ';
        out << p[i];
    }
    out << '\n';
}

}  // namespace detail

// --- lattice: `lattice <n> <k>` then k generator rows ----------------------

inline void write_lattice(std::ostream& out, const IntegerLattice& L) {
    out << "lattice " << L.dim() << ' ' << L.rank() << '\n';
    for (const auto& row : L.basis()) detail::write_point(out, row);
}

inline IntegerLattice read_lattice(std::istream& in) {
    if (detail::expect_word(in, "'lattice'") != "lattice")
        throw ValidationError("parse: missing 'lattice' header");
    long long n = detail::read_count(in, "dimension", 1, 64);
    long long k = detail::read_count(in, "row count");
    std::vector<IntVec> rows;
    for (long long i = 0; i < k; ++i) rows.push_back(detail::read_point(in, static_cast<int>(n)));
    return hnf(static_cast<int>(n), std::move(rows));
}

// --- d-partition: `dpartition <n> <d> <#blocks>` ---------------------------

inline void write_generator_set(std::ostream& out, const GeneratorSet& A) {
    out << "dpartition " << A.dim() << ' ' << A.d() << ' ' << A.blocks().size() << '\n';
    for (const auto& b : A.blocks()) {
        if (b.is_finite()) {
            out << "finite " << b.points.size() << '\n';
            for (const auto& p : b.points) detail::write_point(out, p);
        } else {
            out << "affine\n";
            detail::write_point(out, zero_vec(A.dim()));
            write_lattice(out, b.lattice);
        }
    }
}

inline GeneratorSet read_generator_set(std::istream& in) {
    if (detail::expect_word(in, "'dpartition'") != "dpartition")
        throw ValidationError("parse: missing 'dpartition' header");
    long long n = detail::read_count(in, "dimension", 1, 64);
    long long d = detail::read_count(in, "d", 1, 64);
    long long k = detail::read_count(in, "block count");
    std::vector<Block> blocks;
    for (long long i = 0; i < k; ++i) {
        std::string kind = detail::expect_word(in, "block kind");
        if (kind == "finite") {
            long long m = detail::read_count(in, "point count", 1);
            std::vector<IntVec> pts;
            for (long long j = 0; j < m; ++j)
                pts.push_back(detail::read_point(in, static_cast<int>(n)));
            blocks.push_back(Block::finite(std::move(pts)));
        } else if (kind == "affine") {
            IntVec offset = detail::read_point(in, static_cast<int>(n));  // folded into orbit rep
            (void)offset;
            blocks.push_back(Block::affine(read_lattice(in)));
        } else {
            throw ValidationError("parse: unknown block kind '" + kind + "'");
        }
    }
    return GeneratorSet(static_cast<int>(n), static_cast<int>(d), std::move(blocks));
}

inline void write_partition(std::ostream& out, const InvariantPartition& P) {
    write_generator_set(out, P.generators());
}

inline InvariantPartition read_partition(std::istream& in) {
    return InvariantPartition(read_generator_set(in));
}

// --- quotient d-partition: `qdpartition <n> <d> <#blocks>` + lattice for L -

inline void write_qgenerator_set(std::ostream& out, const QuotientGeneratorSet& A) {
    out << "qdpartition " << A.dim() << ' ' << A.d() << ' ' << A.blocks().size() << '\n';
    write_lattice(out, A.group().lattice());
    for (const auto& b : A.blocks()) {
        if (b.is_finite()) {
            out << "finite " << b.reps.size() << '\n';
            for (const auto& p : b.reps) detail::write_point(out, p);
        } else {
            out << "coset\n";
            detail::write_point(out, zero_vec(A.dim()));
            write_lattice(out, b.mid);
        }
    }
}

inline QuotientGeneratorSet read_qgenerator_set(std::istream& in) {
    if (detail::expect_word(in, "'qdpartition'") != "qdpartition")
        throw ValidationError("parse: missing 'qdpartition' header");
    long long n = detail::read_count(in, "dimension", 1, 64);
    long long d = detail::read_count(in, "d", 1, 64);
    long long k = detail::read_count(in, "block count");
    QuotientGroup Q(read_lattice(in));
    if (Q.ambient_dim() != static_cast<int>(n))
        throw ValidationError("parse: quotient lattice dimension mismatch");
    std::vector<QBlock> blocks;
    for (long long i = 0; i < k; ++i) {
        std::string kind = detail::expect_word(in, "block kind");
        if (kind == "finite") {
            long long m = detail::read_count(in, "point count", 1);
            std::vector<IntVec> pts;
            for (long long j = 0; j < m; ++j)
                pts.push_back(detail::read_point(in, static_cast<int>(n)));
            blocks.push_back(QBlock::finite(Q, std::move(pts)));
        } else if (kind == "coset") {
            IntVec offset = detail::read_point(in, static_cast<int>(n));
            (void)offset;
            blocks.push_back(QBlock::coset(Q, read_lattice(in)));
        } else {
            throw ValidationError("parse: unknown quotient block kind '" + kind + "'");
        }
    }
    return QuotientGeneratorSet(std::move(Q), static_cast<int>(d), std::move(blocks));
}

// --- matroid: ground labels, then circuits or hyperplanes by index ---------

inline void write_matroid(std::ostream& out, const FiniteMatroid& M) {
    out << "matroid " << M.size() << ' ' << M.rank() << '\n';
    for (const auto& l : M.ground()) {
        if (l.is_point()) {
            out << "point ";
            detail::write_point(out, l.vec());
        } else {
            out << "token " << l.tok() << '\n';
        }
    }
    out << "circuits " << M.circuit_indices().size() << '\n';
    for (const auto& c : M.circuit_indices()) {
        out << c.size();
        for (int i : c) out << ' ' << i;
        out << '\n';
    }
}

inline FiniteMatroid read_matroid(std::istream& in) {
    if (detail::expect_word(in, "'matroid'") != "matroid")
        throw ValidationError("parse: missing 'matroid' header");
    long long sz = detail::read_count(in, "ground size", 1, 4096);
    long long rank = detail::read_count(in, "rank", 0, 4096);
    LabelSet ground;
    int point_dim = -1;
    for (long long i = 0; i < sz; ++i) {
        std::string kind = detail::expect_word(in, "label kind");
        if (kind == "point") {
            if (point_dim < 0) {
                // dimension inferred from the first point line: read the rest
                // of the line as integers
                std::string line;
                std::getline(in, line);
                std::istringstream ls(line);
                IntVec p;
                Int v;
                while (ls >> v) p.push_back(v);
                if (p.empty()) throw ValidationError("parse: empty point label");
                point_dim = static_cast<int>(p.size());
                ground.push_back(Label::point(std::move(p)));
            } else {
                ground.push_back(Label::point(detail::read_point(in, point_dim)));
            }
        } else if (kind == "token") {
            ground.push_back(Label::token(detail::expect_word(in, "token")));
        } else {
            throw ValidationError("parse: unknown label kind '" + kind + "'");
        }
    }
    LabelSet sorted = normalize_labels(ground);
    if (sorted.size() != ground.size()) throw ValidationError("parse: repeated ground label");
    std::string section = detail::expect_word(in, "'circuits' or 'hyperplanes'");
    long long k = detail::read_count(in, "set count");
    std::vector<LabelSet> sets;
    for (long long i = 0; i < k; ++i) {
        long long m = detail::read_count(in, "set size", 1, sz);
        LabelSet s;
        for (long long j = 0; j < m; ++j) {
            long long idx = detail::read_count(in, "ground index", 0, sz - 1);
            s.push_back(ground[static_cast<size_t>(idx)]);
        }
        sets.push_back(std::move(s));
    }
    if (section == "circuits") {
        FiniteMatroid M(std::move(sorted), std::move(sets));
        if (M.rank() != static_cast<int>(rank))
            throw ValidationError("parse: declared rank disagrees with circuits");
        return M;
    }
    if (section == "hyperplanes") {
        if (rank < 2) throw ValidationError("parse: hyperplane input needs rank >= 2");
        return matroid_from_hyperplanes(sets, sorted, static_cast<int>(rank) - 1);
    }
    throw ValidationError("parse: unknown matroid section '" + section + "'");
}

// --- support: `support <k>` then k point lines -----------------------------

inline void write_support(std::ostream& out, const Support& S, int n) {
    out << "support " << S.size() << '\n';
    for (const auto& p : S) {
        check_dim(p, n, "write_support");
        detail::write_point(out, p);
    }
}

inline Support read_support(std::istream& in, int n) {
    if (detail::expect_word(in, "'support'") != "support")
        throw ValidationError("parse: missing 'support' header");
    long long k = detail::read_count(in, "point count");
    std::vector<IntVec> pts;
    for (long long i = 0; i < k; ++i) pts.push_back(detail::read_point(in, n));
    return make_support(std::move(pts));
}

// --- ideal: `ideal <kind> <n>` with an embedded record ---------------------

inline void write_ideal(std::ostream& out, const TropicalIdeal& I) {
    switch (I.kind()) {
        case TropicalIdeal::Kind::Paving:
            out << "ideal paving " << I.dim() << '\n';
            write_partition(out, I.partition());
            break;
        case TropicalIdeal::Kind::Lattice2:
            out << "ideal lattice2 " << I.dim() << '\n';
            write_lattice(out, I.lattice());
            break;
        case TropicalIdeal::Kind::QuotientPair:
            out << "ideal degree3 " << I.dim() << '\n';
            write_qgenerator_set(out, I.qpartition().generators());
            break;
    }
}

inline TropicalIdeal read_ideal(std::istream& in) {
    if (detail::expect_word(in, "'ideal'") != "ideal")
        throw ValidationError("parse: missing 'ideal' header");
    std::string kind = detail::expect_word(in, "ideal kind");
    long long n = detail::read_count(in, "dimension", 1, 64);
    if (kind == "paving") {
        GeneratorSet g = read_generator_set(in);
        if (g.dim() != static_cast<int>(n))
            throw ValidationError("parse: partition dimension mismatch");
        return TropicalIdeal::paving(g.dim(), g.d(), InvariantPartition(std::move(g)));
    }
    if (kind == "lattice2") {
        IntegerLattice L = read_lattice(in);
        if (L.dim() != static_cast<int>(n)) throw ValidationError("parse: lattice dimension mismatch");
        return TropicalIdeal::from_lattice(std::move(L));
    }
    if (kind == "degree3") {
        QuotientGeneratorSet g = read_qgenerator_set(in);
        if (g.dim() != static_cast<int>(n))
            throw ValidationError("parse: quotient partition dimension mismatch");
        IntegerLattice L = g.group().lattice();
        return TropicalIdeal::from_quotient_pair(std::move(L),
                                                 QuotientInvariantPartition(std::move(g)));
    }
    throw ValidationError("parse: unknown ideal kind '" + kind + "'");
}

}  // namespace trop
