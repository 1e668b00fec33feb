#include "clp/forms.hpp"

#include <set>
#include <stdexcept>

namespace clp {

std::string form_type_name(FormType t) {
    switch (t) {
        case FormType::none: return "none";
        case FormType::plus: return "plus";
        case FormType::minus: return "minus";
    }
    throw std::logic_error("form_type_name: unreachable");
}

std::uint8_t least_nonsquare(const Field& F) {
    if (F.p() == 2) throw std::invalid_argument("least_nonsquare: needs odd characteristic");
    std::set<std::uint8_t> squares;
    for (int x = 1; x < F.size(); ++x)
        squares.insert(F.mul(std::uint8_t(x), std::uint8_t(x)));
    for (int c = 2; c < F.size(); ++c)
        if (!squares.count(std::uint8_t(c))) return std::uint8_t(c);
    throw std::logic_error("least_nonsquare: every unit is a square");
}

std::uint8_t least_irreducible_a(const Field& F) {
    if (F.p() != 2) throw std::invalid_argument("least_irreducible_a: needs characteristic 2");
    // t^2 + t + a has a root exactly when a = x^2 + x for some x
    std::set<std::uint8_t> image;
    for (int x = 0; x < F.size(); ++x)
        image.insert(F.add(F.mul(std::uint8_t(x), std::uint8_t(x)), std::uint8_t(x)));
    for (int a = 1; a < F.size(); ++a)
        if (!image.count(std::uint8_t(a))) return std::uint8_t(a);
    throw std::logic_error("least_irreducible_a: no irreducible t^2+t+a");
}

FormSpec standard_form(Family f, int dim, long q, FormType type) {
    validate_family_q(f, q);
    if (dim < 1) throw std::invalid_argument("standard_form: dimension must be positive");
    long p = 0;
    int k = 0;
    is_prime_power(q, &p, &k);

    FormSpec spec;
    spec.family = f;
    spec.dim = dim;
    spec.type = type;

    auto need_type = [&](bool two_types) {
        if (two_types && type == FormType::none)
            throw std::invalid_argument("standard_form: this family needs a form type");
        if (!two_types && type != FormType::none)
            throw std::invalid_argument("standard_form: this family takes no form type");
    };

    switch (f) {
        case Family::GL:
            need_type(false);
            spec.field = Field::make(p, k);
            return spec;

        case Family::U:
            need_type(false);
            spec.field = Field::make(p, 2 * k);
            spec.gram = Mat::identity(dim);
            return spec;

        case Family::SP: {
            need_type(false);
            if (dim % 2 != 0) throw std::invalid_argument("standard_form: SP needs even dimension");
            spec.field = Field::make(p, k);
            int m = dim / 2;
            spec.gram = Mat(dim, dim);
            for (int i = 0; i < m; ++i) {
                spec.gram.at(i, m + i) = 1;
                spec.gram.at(m + i, i) = spec.field->neg(1);
            }
            return spec;
        }

        case Family::O_ODD: {
            need_type(true);
            spec.field = Field::make(p, k);
            const Field& F = *spec.field;
            if (dim % 2 != 0) {
                spec.gram = Mat::identity(dim);
                if (type == FormType::minus) spec.gram.at(dim - 1, dim - 1) = least_nonsquare(F);
            } else {
                spec.gram = Mat(dim, dim);
                if (type == FormType::plus) {
                    for (int i = 0; i < dim; ++i) spec.gram.at(i, dim - 1 - i) = 1;
                } else {
                    for (int i = 0; i < dim - 2; ++i) spec.gram.at(i, dim - 3 - i) = 1;
                    spec.gram.at(dim - 2, dim - 2) = 1;
                    spec.gram.at(dim - 1, dim - 1) = F.neg(least_nonsquare(F));
                }
            }
            return spec;
        }

        case Family::O_EVEN: {
            need_type(true);
            if (dim % 2 != 0)
                throw std::invalid_argument("standard_form: even-characteristic O needs even dimension");
            spec.field = Field::make(p, k);
            const Field& F = *spec.field;
            spec.quad = Mat(dim, dim);
            int m = dim / 2;
            for (int i = 0; i < m - 1; ++i) spec.quad.at(2 * i, 2 * i + 1) = 1;
            if (type == FormType::plus) {
                spec.quad.at(dim - 2, dim - 1) = 1;
            } else {
                spec.quad.at(dim - 2, dim - 2) = 1;
                spec.quad.at(dim - 2, dim - 1) = 1;
                spec.quad.at(dim - 1, dim - 1) = least_irreducible_a(F);
            }
            spec.bilin = Mat(dim, dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    spec.bilin.at(i, j) = F.add(spec.quad.at(i, j), spec.quad.at(j, i));
            return spec;
        }
    }
    throw std::logic_error("standard_form: unreachable");
}

std::uint8_t quad_value(const FormSpec& spec, const std::vector<std::uint8_t>& v) {
    const Field& F = *spec.field;
    std::uint8_t acc = 0;
    for (int i = 0; i < spec.dim; ++i) {
        if (v[i] == 0) continue;
        for (int j = i; j < spec.dim; ++j) {
            std::uint8_t c = spec.quad.at(i, j);
            if (c == 0 || v[j] == 0) continue;
            acc = F.add(acc, F.mul(c, F.mul(v[size_t(i)], v[size_t(j)])));
        }
    }
    return acc;
}

namespace {

Mat conj_transpose(const Field& F, const Mat& g) {
    Mat out(g.cols, g.rows);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) out.at(j, i) = F.conj(g.at(i, j));
    return out;
}

}  // namespace

bool is_member(const FormSpec& spec, const Mat& g) {
    if (g.rows != spec.dim || g.cols != spec.dim) return false;
    const Field& F = *spec.field;
    switch (spec.family) {
        case Family::GL:
            return rank(F, g) == spec.dim;
        case Family::U:
            return mat_mul(F, conj_transpose(F, g), g) == Mat::identity(spec.dim);
        case Family::SP:
        case Family::O_ODD:
            return mat_mul(F, transpose(g), mat_mul(F, spec.gram, g)) == spec.gram;
        case Family::O_EVEN: {
            std::vector<std::uint8_t> col(spec.dim);
            for (int j = 0; j < spec.dim; ++j) {
                for (int i = 0; i < spec.dim; ++i) col[i] = g.at(i, j);
                if (quad_value(spec, col) != spec.quad.at(j, j)) return false;
            }
            return mat_mul(F, transpose(g), mat_mul(F, spec.bilin, g)) == spec.bilin;
        }
    }
    throw std::logic_error("is_member: unreachable");
}

}  // namespace clp
