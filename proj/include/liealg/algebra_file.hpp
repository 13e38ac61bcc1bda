#ifndef LIEALG_ALGEBRA_FILE_HPP
#define LIEALG_ALGEBRA_FILE_HPP

#include "liealg/errors.hpp"
#include "liealg/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liealg {

/// Input that does not follow one of the file formats below.
class MalformedInput : public Error {
public:
    using Error::Error;
};

/*
 * "liealg-v1" algebra file:
 *
 *   { "format": "liealg-v1", "field": "Q" | "F<p>", "dim": N,
 *     "labels": [...], "brackets": [{"i": I, "j": J, "terms": [{"k": K, "c": "3/2"}]}],
 *     "grading": [...], "metric": [["1", "0"], ...] }
 *
 * labels, grading and metric are optional. Scalars are canonical strings.
 * Records need i < j, strictly increasing k per record and no repeated
 * pair; serialization emits records in (i, j) order with nonzero terms only.
 */
struct AlgebraFile {
    LieAlgebra algebra;
    std::optional<BilinearForm> metric;

    friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

AlgebraFile parse_algebra_file(const std::string& text);
std::string serialize_algebra_file(const AlgebraFile& file);

/// "liealg-action-v1": { "format", "field", "a_dim": N, "matrices": [M_0, ...] }
/// where M_b is an N x N array of rows; column c is the image of a_c.
struct ActionFile {
    FieldDesc field;
    std::size_t a_dim = 0;
    std::vector<Matrix> matrices;
};

ActionFile parse_action_file(const std::string& text);
std::string serialize_action_file(const ActionFile& file);

/// "liealg-form-v1": { "format", "field", "dim": N, "matrix": [[...], ...] }
BilinearForm parse_form_file(const std::string& text);
std::string serialize_form_file(const BilinearForm& form);

FieldDesc parse_field_name(const std::string& name);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace liealg

#endif // LIEALG_ALGEBRA_FILE_HPP
