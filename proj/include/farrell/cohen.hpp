#pragma once

#include <string>
#include <vector>

#include "farrell/common.hpp"
#include "farrell/fpdata.hpp"
#include "farrell/fplinalg.hpp"

namespace farrell::cohen {

// Integral cohomology of the kernel group K_t (torsion free, vanishing above
// degree 2): Betti numbers per degree.
inline std::vector<int> betti(int t) {
    switch (t) {
        case 3: return {1, 0, 0};
        case 4: return {1, 2, 0};
        case 5: return {1, 5, 6};
        default: throw unsupported_case("betti: K_t tabulated for t in {3,4,5} only");
    }
}

// Generator labels of H^1(K_t): B_{jk} in the standard listing.
inline std::vector<std::string> labels_deg1(int t) {
    switch (t) {
        case 3: return {};
        case 4: return {"B42", "B43"};
        case 5: return {"B42", "B43", "B52", "B53", "B54"};
        default: throw unsupported_case("labels_deg1: t in {3,4,5} only");
    }
}

// Product basis of H^2(K_5); H^2(K_3) and H^2(K_4) vanish.
inline std::vector<std::string> labels_deg2(int t) {
    switch (t) {
        case 3:
        case 4: return {};
        case 5:
            return {"B42B52", "B42B53", "B42B54", "B43B52", "B43B53", "B43B54"};
        default: throw unsupported_case("labels_deg2: t in {3,4,5} only");
    }
}

enum class Perm { s34, s45, s345 };

inline std::string perm_name(Perm perm) {
    switch (perm) {
        case Perm::s34: return "(34)";
        case Perm::s45: return "(45)";
        case Perm::s345: return "(345)";
    }
    return "?";
}

inline long perm_order(Perm perm) { return perm == Perm::s345 ? 3 : 2; }

using IntMatrix = std::vector<std::vector<long>>;
using IntVectors = std::vector<std::vector<long>>;

// Curated permutation actions on H^*(K_t) and the hand-computed degree-2
// answers. Matrices are integral, rows/columns in label order, column j
// holding the image of generator j; they reduce mod p on demand. Each column
// is annotated with the relation it encodes.
struct Tables {
    // (34) on H^1(K_4):  B42 -> -B42,  B43 -> B42 + B43
    IntMatrix k4_34{
        {-1, 1},
        {0, 1},
    };

    // (45) on H^1(K_5), the involution with the two tiers swapped:
    //   B42 -> B52,  B43 -> B53,  B52 -> B42,  B53 -> B43,
    //   B54 -> -B42 - B43 + B52 + B53 + B54
    IntMatrix k5_45{
        {0, 0, 1, 0, -1},
        {0, 0, 0, 1, -1},
        {1, 0, 0, 0, 1},
        {0, 1, 0, 0, 1},
        {0, 0, 0, 0, 1},
    };

    // Literal variant of the same table as printed in the source listing:
    //   B42 -> -B52 but B52 -> B42. Kept for audit; it is not an involution
    //   over F_3 (sigma^2 sends B42 to -B42), so the engine never uses it.
    IntMatrix k5_45_literal{
        {0, 0, 1, 0, -1},
        {0, 0, 0, 1, -1},
        {-1, 0, 0, 0, 1},
        {0, 1, 0, 0, 1},
        {0, 0, 0, 0, 1},
    };

    // (345) on H^1(K_5):
    //   B42 -> -B42 + B52,  B43 -> B53 + B54,  B52 -> -B42,
    //   B53 -> B42 + B43,   B54 -> -B42 - B43 + B52 + B53
    IntMatrix k5_345{
        {-1, 0, -1, 1, -1},
        {0, 0, 0, 1, -1},
        {1, 0, 0, 0, 1},
        {0, 1, 0, 0, 1},
        {0, 1, 0, 0, 0},
    };

    // (45)-invariants of H^2(K_5, F_3), coordinates in labels_deg2 order:
    //   2*B42B52 + B42B54 + B43B52,  B42B53 + 2*B43B52,  2*B43B53 + B43B54
    IntVectors k5_deg2_45_invariants{
        {2, 0, 1, 1, 0, 0},
        {0, 1, 0, 2, 0, 0},
        {0, 0, 0, 0, 2, 1},
    };

    // (345)-invariants of H^2(K_5, F_3):  B42B52,  B42B54 + B43B52
    IntVectors k5_deg2_345_invariants{
        {1, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0},
    };

    // Coinvariant representatives of H^2(K_5, F_3) under (345):
    //   B42B53,  B43B53; the norm maps them isomorphically onto the
    //   invariants, so positive-degree Tate groups vanish.
    IntVectors k5_deg2_345_coinvariant_reps{
        {0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0},
    };
    int k5_deg2_345_tate_pos = 0;

    // Swap in the literal (45) table (diagnostic runs only).
    bool use_literal_45 = false;

    const IntMatrix& integral_matrix(int t, Perm perm) const {
        if (t == 4 && perm == Perm::s34) return k4_34;
        if (t == 5 && perm == Perm::s45) return use_literal_45 ? k5_45_literal : k5_45;
        if (t == 5 && perm == Perm::s345) return k5_345;
        throw unsupported_case("action table curated for (K4,(34)), (K5,(45)), (K5,(345)) only");
    }

    // Structural violations; empty when the tables are intact. The literal
    // (45) variant is exempt from the order check by design.
    std::vector<std::string> validate() const {
        std::vector<std::string> bad;
        auto check_shape = [&](const IntMatrix& m, std::size_t n, const std::string& name) {
            if (m.size() != n) {
                bad.push_back(name + ": wrong row count");
                return false;
            }
            for (const auto& row : m)
                if (row.size() != n) {
                    bad.push_back(name + ": ragged row");
                    return false;
                }
            return true;
        };
        struct Entry {
            const IntMatrix* m;
            std::size_t n;
            long q;
            std::string name;
        };
        const std::vector<Entry> entries{
            {&k4_34, 2, 2, "k4-34"},
            {&(use_literal_45 ? k5_45_literal : k5_45), 5, 2, "k5-45"},
            {&k5_345, 5, 3, "k5-345"},
        };
        for (const Entry& e : entries) {
            if (!check_shape(*e.m, e.n, e.name)) continue;
            for (long p : {2L, 3L, 5L, 7L}) {
                const auto m = fplinalg::FpMatrix::from_rows(p, *e.m);
                if (!m.pow(e.q).is_identity())
                    bad.push_back(e.name + ": sigma^" + std::to_string(e.q) +
                                  " != identity over F_" + std::to_string(p));
            }
        }
        auto check_vectors = [&](const IntVectors& vs, std::size_t len, std::size_t count,
                                 const std::string& name) {
            if (vs.size() != count) {
                bad.push_back(name + ": wrong vector count");
                return;
            }
            for (const auto& v : vs)
                if (v.size() != len) bad.push_back(name + ": wrong vector length");
        };
        check_vectors(k5_deg2_45_invariants, 6, 3, "k5-deg2-45-invariants");
        check_vectors(k5_deg2_345_invariants, 6, 2, "k5-deg2-345-invariants");
        check_vectors(k5_deg2_345_coinvariant_reps, 6, 2, "k5-deg2-345-coinvariants");
        if (k5_deg2_345_tate_pos != 0) bad.push_back("k5-deg2-345-tate: expected 0");
        return bad;
    }
};

// Pristine tables, order-checked on first use.
inline const Tables& builtin() {
    static const Tables tables = [] {
        Tables t;
        const auto bad = t.validate();
        if (!bad.empty()) throw std::logic_error("curated tables failed load check: " + bad[0]);
        return t;
    }();
    return tables;
}

inline fplinalg::FpMatrix action_matrix(int t, Perm perm, long p,
                                        const Tables& tables = builtin()) {
    if (!is_prime(p)) throw std::invalid_argument("action_matrix: p must be prime");
    return fplinalg::FpMatrix::from_rows(p, tables.integral_matrix(t, perm));
}

// Mod-p cohomology dimensions of a graded object: explicit head, then a
// constant tail repeating forever.
struct GradedDims {
    std::vector<int> head;
    int tail = 0;

    int at(int degree) const {
        if (degree < 0) throw std::invalid_argument("GradedDims::at: negative degree");
        if (degree < static_cast<int>(head.size())) return head[degree];
        return tail;
    }

    bool eventually_zero() const { return tail == 0; }

    friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

// H^*(K_t x_sym / sym; F_p): cohomology of the extension of sym by K_t, for
// the symmetry shapes the curated data covers.
inline GradedDims quotient_cohomology(int t, long p, const fpdata::SymPart& sym,
                                      const Tables& tables = builtin()) {
    if (!is_prime(p)) throw std::invalid_argument("quotient_cohomology: p must be prime");
    const std::vector<int> ranks = betti(t);
    if (sym.trivial())
        return {ranks, 0};
    if (sym.multiplicities.size() > 1)
        throw unsupported_case("quotient_cohomology: more than one symmetric factor is not curated");
    if (t == 3) {
        if (p % sym.order() == 0)
            throw unsupported_case("quotient_cohomology: K3 needs sym order coprime to p");
        return {{1, 0, 0}, 0};
    }
    if (sym.multiplicities != std::vector<int>{2})
        throw unsupported_case("quotient_cohomology: only S2 symmetry is curated for t in {4,5}");
    if (t == 4) {
        const auto sigma = action_matrix(4, Perm::s34, p, tables);
        if (p == 2) {
            // 2-group symmetry: the extension spectral sequence collapses;
            // degree n >= 1 is H^n(S2) plus H^{n-1}(S2, H^1(K_4)), and the
            // latter is periodic from degree 1 on (equal dims by Herbrand).
            const auto tate = fplinalg::tate_cyclic(sigma, 2);
            return {{1, 1 + tate.dim_fixed}, 1 + tate.dim_odd};
        }
        const int inv = static_cast<int>(fplinalg::invariants({sigma}).size());
        return {{1, inv, 0}, 0};
    }
    if (t == 5) {
        if (p != 3)
            throw unsupported_case("quotient_cohomology: degree-2 data for K5/S2 curated at p=3 only");
        const auto sigma = action_matrix(5, Perm::s45, p, tables);
        const int inv1 = static_cast<int>(fplinalg::invariants({sigma}).size());
        const int inv2 = static_cast<int>(
            fplinalg::rref_basis(tables.k5_deg2_45_invariants, p).size());
        return {{1, inv1, inv2}, 0};
    }
    throw unsupported_case("quotient_cohomology: t in {3,4,5} only");
}

} // namespace farrell::cohen
