#include "kisinlab/kisin.hpp"

#include "kisinlab/errors.hpp"

#include <string>
#include <utility>

namespace kisinlab {

std::int64_t default_work_prec(std::uint32_t p, std::int64_t e) { return 4 * e * static_cast<std::int64_t>(p) + 8; }

KisinParams make_params(FieldPtr field, std::int64_t e, std::int64_t work_prec) {
    if (!field) throw precondition_error("missing field");
    const std::uint32_t p = field->p();
    if (p <= 2) throw precondition_error("p must be an odd prime");
    if (field->r() < 2) throw precondition_error("r must be at least 2");
    if (e < 1) throw precondition_error("e must be at least 1");
    if (e % (static_cast<std::int64_t>(p) - 1) != 0) throw precondition_error("(p-1) must divide e");
    KisinParams out;
    out.field = std::move(field);
    out.e = e;
    out.work_prec = work_prec > 0 ? work_prec : default_work_prec(p, e);
    return out;
}

KisinParams make_params(std::uint32_t p, std::uint32_t r, std::int64_t e, std::int64_t work_prec) {
    if (!is_prime(p) || p == 2) throw precondition_error("p must be an odd prime, got " + std::to_string(p));
    if (r < 2) throw precondition_error("r must be at least 2, got " + std::to_string(r));
    if (e < 1) throw precondition_error("e must be at least 1");
    if (e % (static_cast<std::int64_t>(p) - 1) != 0) throw precondition_error("(p-1) must divide e");
    return make_params(Field::make(p, r), e, work_prec);
}

bool same_params(const KisinParams& a, const KisinParams& b) {
    return same_field(a.field, b.field) && a.e == b.e && a.work_prec == b.work_prec;
}

void require_same_params(const KisinParams& a, const KisinParams& b) {
    if (!same_params(a, b)) throw precondition_error("objects built from different parameters");
}

namespace {

void require_length(const KisinParams& params, std::size_t n) {
    if (n != params.r())
        throw precondition_error("tuple has length " + std::to_string(n) + ", expected r = " +
                                 std::to_string(params.r()));
}

MatTuple constant_tuple(const KisinParams& params, const Mat2& m) {
    return MatTuple(std::vector<Mat2>(params.r(), m));
}

}  // namespace

BasisChange::BasisChange(KisinParams params, MatTuple B) : params_(std::move(params)), B_(std::move(B)) {
    require_length(params_, B_.size());
    for (std::size_t i = 0; i < B_.size(); ++i) {
        require_same_field(params_.field, B_[i].field());
        if (B_[i].det().valuation() != 0)
            throw precondition_error("basis change component " + std::to_string(i + 1) +
                                     " does not have unit determinant");
    }
}

BasisChange BasisChange::identity(const KisinParams& params) {
    return {params, constant_tuple(params, Mat2::identity(params.field))};
}

BasisChange compose(const BasisChange& outer, const BasisChange& inner) {
    require_same_params(outer.params(), inner.params());
    std::vector<Mat2> items;
    for (std::size_t i = 0; i < inner.B().size(); ++i) items.push_back(outer[i] * inner[i]);
    return {inner.params(), MatTuple(std::move(items))};
}

Presentation change_basis(const Presentation& A, const MatTuple& B) {
    require_length(A.params, A.A.size());
    require_length(A.params, B.size());
    std::vector<Mat2> out;
    out.reserve(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
        const Mat2 next_inv = B[B.next(i)].inverse(A.params.work_prec);
        out.push_back(frobenius(B[i]) * A.A[i] * next_inv);
    }
    return {A.params, MatTuple(std::move(out))};
}

Presentation change_basis(const Presentation& A, const BasisChange& B) {
    require_same_params(A.params, B.params());
    return change_basis(A, B.B());
}

bool is_valid_presentation(const Presentation& A) {
    require_length(A.params, A.A.size());
    for (const auto& m : A.A) {
        if (!m.is_integral()) return false;
        if (m.det().valuation() != A.params.e) return false;
    }
    return true;
}

Presentation base_model(const KisinParams& params) {
    if (params.e % (static_cast<std::int64_t>(params.p()) - 1) != 0)
        throw precondition_error("(p-1) must divide e");
    return {params, constant_tuple(params, Mat2::diag_u(params.field, params.e, 0))};
}

Presentation ambient_phi(const KisinParams& params) {
    return {params, constant_tuple(params, Mat2::identity(params.field))};
}

Presentation lattice_presentation(const KisinParams& params, const MatTuple& G) {
    require_length(params, G.size());
    std::vector<Mat2> rows;
    for (const auto& g : G) {
        if (g.det().is_zero()) throw singular_matrix("lattice generators are linearly dependent");
        rows.push_back(g.transposed());
    }
    return change_basis(ambient_phi(params), MatTuple(std::move(rows)));
}

bool same_lattice(const Mat2& B1, const Mat2& B2, std::int64_t work_prec) {
    const std::int64_t v1 = B1.det().valuation();
    const std::int64_t v2 = B2.det().valuation();
    if (v1 == Series::infinite_valuation || v2 == Series::infinite_valuation)
        throw singular_matrix("same_lattice on a singular matrix");
    if (v1 != v2) return false;
    return (B2 * B1.inverse(work_prec)).is_integral();
}

bool same_lattice(const BasisChange& B1, const BasisChange& B2) {
    require_same_params(B1.params(), B2.params());
    for (std::size_t i = 0; i < B1.B().size(); ++i)
        if (!same_lattice(B1[i], B2[i], B1.params().work_prec)) return false;
    return true;
}

Mat2 NormalForm::triangular() const {
    const FieldPtr& F = v.field();
    return {Series::u_power(F, -a), v, Series(F), Series::u_power(F, a)};
}

NormalForm iwasawa_normal_form(const Mat2& B, std::int64_t work_prec) {
    const FieldPtr& F = B.field();
    const Series det = B.det();
    if (det.is_zero() || det.valuation() != 0)
        throw precondition_error("Iwasawa normal form needs a unit determinant");

    Mat2 T = B;
    if (!T(1, 0).is_zero()) {
        // Pivot on the first-column entry of least valuation.
        const std::int64_t low = T(1, 0).valuation();
        const std::int64_t top = T(0, 0).valuation();
        if (low < top) T = Mat2(T(1, 0), T(1, 1), T(0, 0), T(0, 1));
        const Series c = T(1, 0) * inverse(T(0, 0), work_prec);
        T = Mat2(T(0, 0), T(0, 1), Series(F), T(1, 1) - c * T(0, 1));
    }

    const std::int64_t a = -T(0, 0).valuation();
    if (T(1, 1).valuation() != a) throw error("triangularization lost the unit determinant");
    const Series mu1 = T(0, 0).shifted(a);
    const Series v = (inverse(mu1, work_prec) * T(0, 1)).reduced_mod(a);

    NormalForm out{a, v, Mat2::identity(F)};
    const Mat2 tri_inv(Series::u_power(F, a), -v, Series(F), Series::u_power(F, -a));
    out.unit_cofactor = B * tri_inv;
    return out;
}

}  // namespace kisinlab
