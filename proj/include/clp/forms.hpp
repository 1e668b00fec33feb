#pragma once

#include "clp/matrix.hpp"
#include "clp/measures.hpp"

namespace clp {

enum class FormType { none, plus, minus };

std::string form_type_name(FormType t);

/* A classical group presented concretely: the acting dimension, the field the
 * matrices live over (the quadratic extension for the unitary family), and
 * the invariant form.  The bilinear matrix `gram` serves U (hermitian, with
 * entrywise conjugation on the left argument), SP and odd-characteristic O;
 * even-characteristic O instead carries the quadratic form's
 * upper-triangular coefficients in `quad` with its polarization in `bilin`. */
struct FormSpec {
    Family family;
    int dim = 0;
    FieldPtr field;
    FormType type = FormType::none;
    Mat gram;
    Mat quad;
    Mat bilin;
};

/* The representative form used throughout: U takes the identity gram over
 * GF(q^2); SP takes [[0, I], [-I, 0]]; odd-characteristic O takes the
 * identity in odd dimension ("-" swaps the last entry for the least
 * non-square delta), and in even dimension the anti-diagonal of ones ("-"
 * keeps that on the first dim-2 coordinates and puts diag(1, -delta) on the
 * last two); even-characteristic O takes the sum of hyperbolic pairs
 * x_1 x_2 + x_3 x_4 + ... ("-" replaces the last pair by x^2 + xy + a y^2
 * with t^2 + t + a irreducible). */
FormSpec standard_form(Family f, int dim, long q, FormType type);

/* Exact membership test for the group the form cuts out (full rank for GL,
 * form preservation otherwise). */
bool is_member(const FormSpec& spec, const Mat& g);

/* Value of the quadratic form stored in `quad` on a coordinate vector. */
std::uint8_t quad_value(const FormSpec& spec, const std::vector<std::uint8_t>& v);

/* Least element code that is not a square in GF(q)*, q odd. */
std::uint8_t least_nonsquare(const Field& F);

/* Least a making t^2 + t + a irreducible over GF(q), q even. */
std::uint8_t least_irreducible_a(const Field& F);

}  // namespace clp
