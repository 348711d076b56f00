#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "cayley/element_set.hpp"

namespace cayley {

using Complex = std::complex<double>;

struct Character {
    std::string label;
    int degree = 1;
    /// Value on each conjugacy class, indexed like CharacterTable::classes.
    std::vector<Complex> values;
};

/// Closed-form irreducible characters for cyclic groups, direct products of
/// cyclic groups, and dihedral groups.
struct CharacterTable {
    FiniteGroup group;
    std::vector<std::vector<Element>> classes;
    std::vector<int> class_of;  // element -> class index
    std::vector<Character> characters;

    Complex value(const Character& chi, Element g) const { return chi.values[class_of[g]]; }
};

/// Memoized per group; safe for concurrent callers. Throws Unsupported for
/// other group families.
std::shared_ptr<const CharacterTable> character_table(const FiniteGroup& g);

/// chi(X) = sum over x in X of chi(x).
Complex char_sum(const CharacterTable& table, const Character& chi, const ElementSet& x);

inline constexpr double kCharacterTolerance = 1e-6;

struct CharacterRow {
    std::string label;
    int degree = 1;
    Complex chi_s, chi_t, chi_u;
    /// |chi(U) chi(1) - chi(S) chi(T)|
    double residual = 0;
};

struct CharacterCriterionReport {
    bool holds = false;
    /// Empty when the character identity was evaluated; otherwise the reason
    /// the triple was rejected before evaluation (asymmetric, contains e).
    std::string rejected;
    std::vector<CharacterRow> rows;
};

/// chi(U) chi(1) = chi(S) chi(T) for every irreducible chi, within
/// kCharacterTolerance. Throws PreconditionViolation naming the offending
/// element when a set is not a union of conjugacy classes. Sets that are not
/// symmetric or contain e give holds = false with a reason.
CharacterCriterionReport criterion_check(const ElementSet& s, const ElementSet& t, const ElementSet& u);

struct Eigenvalue {
    Complex value;
    int multiplicity = 1;
};

/// lambda_X(chi) = chi(X)/chi(1) with multiplicity chi(1)^2, one entry per
/// irreducible character. X must be class-closed.
std::vector<Eigenvalue> cayley_eigenvalues(const ElementSet& x);

/// Real parts of cayley_eigenvalues expanded by multiplicity, ascending.
std::vector<double> sorted_spectrum(const std::vector<Eigenvalue>& eigenvalues);

/// Eigenvalues of adjacency(x) by dense symmetric diagonalization, ascending.
/// X must be symmetric.
std::vector<double> numeric_spectrum(const ElementSet& x);

/// Max |character route - numeric route| over the sorted spectra.
double spectrum_discrepancy(const ElementSet& x);

}  // namespace cayley
