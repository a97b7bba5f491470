#pragma once

#include "affadm/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace affadm {

/// Finite simple type, e.g. {'E', 7}. Simple roots follow Bourbaki numbering.
struct CartanKind {
    char family = 'A';
    int rank = 1;

    /// Parses "A1", "e7", "G2". Throws std::invalid_argument on bad input.
    static CartanKind parse(const std::string& text);
    std::string name() const;
    bool operator==(const CartanKind&) const = default;
};

void validate_kind(const CartanKind& kind);

/// Element of the finite Weyl group: integer matrix acting on simple-coroot
/// coordinates (column j is the image of alpha_j^vee) together with a reduced word.
/// The word is read left to right, so word {i1,i2} means s_i1 s_i2.
struct WeylElement {
    int rank = 0;
    IntVec matrix;  // row-major rank x rank
    std::vector<int> word;

    std::int64_t at(int i, int j) const { return matrix[static_cast<std::size_t>(i * rank + j)]; }
    int length() const { return static_cast<int>(word.size()); }
    int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const;
};

struct RootSystem {
    CartanKind kind;
    int rank = 0;
    IntMat cartan;           // a_ij = <alpha_j, alpha_i^vee>, 0-based
    IntVec marks;            // a_0..a_l, a_0 = 1
    IntVec comarks;          // a_0^vee..a_l^vee, a_0^vee = 1
    int dual_coxeter = 0;    // h^vee
    int coxeter = 0;         // h
    int lacing = 1;          // r^vee
    std::int64_t m = 1;      // (P^vee, P^vee) = Z/m
    std::int64_t e = 1;      // |P^vee / Q^vee|
    std::vector<int> J;      // nodes with mark 1 (1-based)
    RatMat gram;             // (alpha_i^vee, alpha_j^vee)
    RatMat gram_inv;
    RatMat cartan_inv;       // row i = fundamental coweight i in coroot coordinates
    std::vector<IntVec> positive_coroots;  // coroot coordinates, ordered by height then lex
    std::vector<IntVec> positive_roots;    // root coordinates, aligned with positive_coroots
    IntVec theta_coroot;
    RatVec rho_nu;           // rho-bar as a coweight-space vector
    Rational rho_norm2;      // |rho-bar|^2
    std::vector<int> exponents;
    std::uint64_t weyl_order = 1;

    // --- coordinate helpers; CoweightVector == RatVec in simple-coroot coordinates ---

    /// <alpha_i, v>, i 0-based.
    Rational pair_simple(int i, const RatVec& v) const;
    /// (<alpha_1,v>, ..., <alpha_l,v>): coordinates in the fundamental coweight basis.
    RatVec to_coweight_coords(const RatVec& v) const;
    RatVec from_coweight_coords(const RatVec& x) const;
    RatVec fundamental_coweight(int i) const;  // i 1-based
    /// Height of a coroot: (alpha^vee, rho-bar) = sum of coordinates.
    std::int64_t height(const IntVec& coroot) const;
    Rational norm2(const RatVec& v) const;
    bool is_coroot(const IntVec& v) const;
    bool is_long_coroot(const IntVec& v) const;
    bool in_coweight_lattice(const RatVec& v) const;

    // --- Weyl group ---
    WeylElement identity() const;
    WeylElement simple_reflection(int i) const;  // i 0-based
    WeylElement from_word(const std::vector<int>& word) const;
    /// Builds an element from its matrix; the reduced word is recovered by descent.
    WeylElement from_matrix(IntVec matrix) const;
    WeylElement multiply(const WeylElement& x, const WeylElement& y) const;
    WeylElement inverse(const WeylElement& x) const;
    /// Reflection in the coroot beta^vee: v -> v - <beta, v> beta^vee.
    WeylElement reflection(std::size_t positive_index) const;
    RatVec act(const WeylElement& w, const RatVec& v) const;
    IntVec act(const WeylElement& w, const IntVec& v) const;
    /// All elements generated by the given simple reflections (0-based), BFS order.
    std::vector<WeylElement> enumerate_parabolic(const std::vector<int>& nodes) const;
    std::vector<WeylElement> enumerate_weyl_group() const;
    /// Integer matrix of w in fundamental-coweight coordinates (row-major).
    IntVec coweight_matrix(const WeylElement& w) const;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(const CartanKind& kind);

/// (v, w) under the normalized invariant form.
Rational inner(const RootSystem& rs, const RatVec& v, const RatVec& w);

/// Positive coroots of a coroot system from its Cartan matrix, by reflection closure.
std::vector<IntVec> positive_coroots_of(const IntMat& cartan);

/// Exponents from the height distribution of positive roots.
std::vector<int> exponents_from_heights(const std::vector<IntVec>& positive);

/// |W| of an irreducible type.
std::uint64_t weyl_group_order(const CartanKind& kind);

struct LeviDatum {
    std::vector<int> subset;              // 1-based, sorted
    std::vector<CartanKind> components;
    std::vector<std::vector<int>> component_nodes;
    int j = 0;
    std::vector<int> exponents;           // sorted multiset
    std::uint64_t order = 1;              // |W_f|
    std::vector<IntVec> coroots;          // positive coroots supported on the subset

    std::string label() const;            // e.g. "A2xA1", "0" for empty
};

LeviDatum levi_datum(const RootSystem& rs, const std::vector<int>& subset);

}  // namespace affadm
