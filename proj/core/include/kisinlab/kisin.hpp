#pragma once

#include "kisinlab/mat2.hpp"

#include <cstdint>
#include <vector>

namespace kisinlab {

/**
 * Rank-2 Kisin modules mod p with trivial coefficient action, presented
 * componentwise.
 *
 * The residue field k = F_q splits k (x) F into r components indexed
 * 0..r-1 (printed 1..r); Frobenius carries component i to component i+1,
 * cyclically. A presentation A = (A_0, ..., A_{r-1}) means
 *
 *     phi(e^i) = A_i * e^{i+1},   e^i = (e^i_1, e^i_2)^T,
 *
 * i.e. row k of A_i lists the coordinates of phi(e^i_k) in the basis of the
 * next component. Lattices are spanned by the ROWS of their basis matrices:
 * for B = (B_i), B*M is spanned by the rows of B_i applied to e^i, and
 *
 *     B*M ~ ( phi(B_i) A_i B_{i+1}^{-1} ).
 *
 * Transpose dictionary: if the generators of a lattice are instead written
 * as the columns of G_i, the matrix acting on column coordinates is
 * G_{i+1}^{-1} phi(G_i), which is the transpose of the row-convention A_i
 * for B_i = G_i^T. lattice_presentation() takes column generators and
 * returns the row-convention presentation.
 *
 * Validity: A_i integral and val(det A_i) = e for every i. The cokernel
 * condition (u^e A_i^{-1} integral) then holds for free in rank 2, since
 * u^e A^{-1} = adj(A) * (u^e / det A) and u^e / det A is a unit.
 */

// A length-r tuple indexed cyclically; next(r-1) == 0.
template <class T>
class CyclicTuple {
public:
    CyclicTuple() = default;
    explicit CyclicTuple(std::vector<T> items) : items_(std::move(items)) {}

    std::size_t size() const noexcept { return items_.size(); }
    std::size_t next(std::size_t i) const noexcept { return (i + 1) % items_.size(); }
    const T& operator[](std::size_t i) const { return items_.at(i); }
    T& operator[](std::size_t i) { return items_.at(i); }
    const std::vector<T>& items() const noexcept { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    friend bool operator==(const CyclicTuple&, const CyclicTuple&) = default;

private:
    std::vector<T> items_;
};

using MatTuple = CyclicTuple<Mat2>;

struct KisinParams {
    FieldPtr field;
    std::int64_t e = 1;
    std::int64_t work_prec = 0;

    std::uint32_t p() const noexcept { return field->p(); }
    std::uint32_t r() const noexcept { return field->r(); }
    // e / (p-1): the exponent of the base lattice.
    std::int64_t height() const noexcept { return e / (static_cast<std::int64_t>(p()) - 1); }
};

// Checks p odd prime, r >= 2, e >= 1, (p-1) | e. work_prec <= 0 selects 4ep + 8.
KisinParams make_params(std::uint32_t p, std::uint32_t r, std::int64_t e, std::int64_t work_prec = 0);
KisinParams make_params(FieldPtr field, std::int64_t e, std::int64_t work_prec = 0);
std::int64_t default_work_prec(std::uint32_t p, std::int64_t e);
bool same_params(const KisinParams& a, const KisinParams& b);
void require_same_params(const KisinParams& a, const KisinParams& b);

struct Presentation {
    KisinParams params;
    MatTuple A;
};

// Unit-determinant basis change; construction rejects det valuations != 0.
class BasisChange {
public:
    BasisChange(KisinParams params, MatTuple B);
    static BasisChange identity(const KisinParams& params);

    const KisinParams& params() const noexcept { return params_; }
    const MatTuple& B() const noexcept { return B_; }
    const Mat2& operator[](std::size_t i) const { return B_[i]; }

private:
    KisinParams params_;
    MatTuple B_;
};

// (B' o B)_i = B'_i B_i: first B, then B'.
BasisChange compose(const BasisChange& outer, const BasisChange& inner);

// A'_i = phi(B_i) A_i B_{i+1}^{-1}.
Presentation change_basis(const Presentation& A, const BasisChange& B);
// Same formula without the unit-determinant restriction on B.
Presentation change_basis(const Presentation& A, const MatTuple& B);

bool is_valid_presentation(const Presentation& A);

// A_i = diag(u^e, 1): the lattice spanned by u^{e/(p-1)} v_1 and v_2.
Presentation base_model(const KisinParams& params);
// A_i = Id: the etale module everything lives in.
Presentation ambient_phi(const KisinParams& params);
// Generators as columns of G_i inside the ambient module.
Presentation lattice_presentation(const KisinParams& params, const MatTuple& G);

// C_i = B2_i B1_i^{-1} integral with unit determinant for every i.
bool same_lattice(const BasisChange& B1, const BasisChange& B2);
bool same_lattice(const Mat2& B1, const Mat2& B2, std::int64_t work_prec);

struct NormalForm {
    std::int64_t a = 0;
    Series v;            // support below u^a
    Mat2 unit_cofactor;  // Q with B = Q * T
    // T = (u^-a, v; 0, u^a)
    Mat2 triangular() const;
};

// B = Q * (u^-a, v; 0, u^a) with Q integral of unit determinant.
// Requires val(det B) = 0.
NormalForm iwasawa_normal_form(const Mat2& B, std::int64_t work_prec);

}  // namespace kisinlab
