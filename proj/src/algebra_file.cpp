#include "liealg/algebra_file.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace liealg {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedInput(what); }

ojson parse_json(const std::string& text)
{
    try {
        return ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

const ojson& member(const ojson& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) malformed(std::string("missing key \"") + key + "\"");
    return *it;
}

void only_keys(const ojson& obj, std::initializer_list<const char*> allowed, const std::string& where)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) malformed("unexpected key \"" + it.key() + "\" in " + where);
    }
}

const ojson& object(const ojson& j, const std::string& where)
{
    if (!j.is_object()) malformed(where + " must be an object");
    return j;
}

std::size_t index(const ojson& j, const std::string& what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        malformed(what + " must be a non-negative integer");
    return j.get<std::size_t>();
}

Scalar scalar(const FieldDesc& f, const ojson& j, const std::string& what)
{
    if (!j.is_string()) malformed(what + " must be a string");
    try {
        return Scalar::parse(f, j.get<std::string>());
    } catch (const InvalidInput& e) {
        malformed(what + ": " + e.what());
    }
}

Matrix matrix(const FieldDesc& f, const ojson& j, std::size_t n, const std::string& what)
{
    if (!j.is_array() || j.size() != n) malformed(what + " must have " + std::to_string(n) + " rows");
    Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const ojson& row = j[r];
        if (!row.is_array() || row.size() != n) malformed(what + " must have " + std::to_string(n) + " columns");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar(f, row[c], what + " entry");
    }
    return m;
}

ojson matrix_json(const Matrix& m)
{
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

BilinearForm symmetric_form(Matrix m, const std::string& what)
{
    if (!m.is_symmetric()) malformed(what + " must be symmetric");
    return BilinearForm(std::move(m));
}

void check_format(const ojson& doc, const char* tag)
{
    const ojson& f = member(doc, "format");
    if (!f.is_string() || f.get<std::string>() != tag) malformed(std::string("format must be \"") + tag + "\"");
}

FieldDesc field_of(const ojson& doc)
{
    const ojson& f = member(doc, "field");
    if (!f.is_string()) malformed("field must be a string");
    return parse_field_name(f.get<std::string>());
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

} // namespace

FieldDesc parse_field_name(const std::string& name)
{
    if (name == "Q") return FieldDesc::rationals();
    if (name.size() >= 2 && name[0] == 'F' && name[1] != '0') {
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
        if (ec == std::errc{} && ptr == name.data() + name.size() && is_prime(p)) return FieldDesc::prime(p);
    }
    malformed("field must be \"Q\" or \"F<p>\" with p prime, got \"" + name + "\"");
}

AlgebraFile parse_algebra_file(const std::string& text)
{
    const ojson doc = parse_json(text);
    object(doc, "algebra file");
    only_keys(doc, {"format", "field", "dim", "labels", "brackets", "grading", "metric"}, "algebra file");
    check_format(doc, "liealg-v1");
    const FieldDesc f = field_of(doc);
    const std::size_t dim = index(member(doc, "dim"), "dim");

    std::vector<std::string> labels;
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array() || it->size() != dim) malformed("labels must be a list of dim strings");
        for (const auto& l : *it) {
            if (!l.is_string()) malformed("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }

    std::vector<BracketRecord> records;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const ojson& brackets = member(doc, "brackets");
    if (!brackets.is_array()) malformed("brackets must be a list");
    for (const auto& rec : brackets) {
        object(rec, "bracket record");
        only_keys(rec, {"i", "j", "terms"}, "bracket record");
        const std::size_t i = index(member(rec, "i"), "i");
        const std::size_t j = index(member(rec, "j"), "j");
        if (i >= j) malformed("bracket records need i < j");
        if (j >= dim) malformed("bracket index out of range");
        if (!seen.insert({i, j}).second) malformed("repeated bracket record");
        const ojson& terms = member(rec, "terms");
        if (!terms.is_array()) malformed("terms must be a list");
        BracketRecord out{i, j, {}};
        for (const auto& t : terms) {
            object(t, "term");
            only_keys(t, {"k", "c"}, "term");
            const std::size_t k = index(member(t, "k"), "k");
            if (k >= dim) malformed("term index out of range");
            if (!out.terms.empty() && out.terms.back().k >= k) malformed("term indices must increase");
            out.terms.push_back({k, scalar(f, member(t, "c"), "coefficient")});
        }
        records.push_back(std::move(out));
    }

    std::optional<std::vector<std::int64_t>> grading;
    if (auto it = doc.find("grading"); it != doc.end()) {
        if (!it->is_array() || it->size() != dim) malformed("grading must be a list of dim integers");
        grading.emplace();
        for (const auto& g : *it) {
            if (!g.is_number_integer()) malformed("grading entries must be integers");
            grading->push_back(g.get<std::int64_t>());
        }
    }

    AlgebraFile out{LieAlgebra(f, dim, records, std::move(labels), std::move(grading)), std::nullopt};
    if (auto it = doc.find("metric"); it != doc.end()) out.metric = symmetric_form(matrix(f, *it, dim, "metric"), "metric");
    return out;
}

std::string serialize_algebra_file(const AlgebraFile& file)
{
    const LieAlgebra& L = file.algebra;
    ojson doc;
    doc["format"] = "liealg-v1";
    doc["field"] = L.field().name();
    doc["dim"] = L.dim();
    if (!L.labels().empty()) doc["labels"] = L.labels();
    ojson brackets = ojson::array();
    for (const auto& rec : L.records()) {
        ojson terms = ojson::array();
        for (const auto& t : rec.terms) terms.push_back(ojson{{"k", t.k}, {"c", t.c.to_string()}});
        brackets.push_back(ojson{{"i", rec.i}, {"j", rec.j}, {"terms", std::move(terms)}});
    }
    doc["brackets"] = std::move(brackets);
    if (L.grading()) doc["grading"] = *L.grading();
    if (file.metric) {
        if (file.metric->dim() != L.dim()) throw ShapeError("metric dimension does not match the algebra");
        doc["metric"] = matrix_json(file.metric->matrix());
    }
    return dump(doc);
}

ActionFile parse_action_file(const std::string& text)
{
    const ojson doc = parse_json(text);
    object(doc, "action file");
    only_keys(doc, {"format", "field", "a_dim", "matrices"}, "action file");
    check_format(doc, "liealg-action-v1");
    ActionFile out;
    out.field = field_of(doc);
    out.a_dim = index(member(doc, "a_dim"), "a_dim");
    const ojson& ms = member(doc, "matrices");
    if (!ms.is_array()) malformed("matrices must be a list");
    for (const auto& m : ms) out.matrices.push_back(matrix(out.field, m, out.a_dim, "action matrix"));
    return out;
}

std::string serialize_action_file(const ActionFile& file)
{
    ojson doc;
    doc["format"] = "liealg-action-v1";
    doc["field"] = file.field.name();
    doc["a_dim"] = file.a_dim;
    ojson ms = ojson::array();
    for (const auto& m : file.matrices) ms.push_back(matrix_json(m));
    doc["matrices"] = std::move(ms);
    return dump(doc);
}

BilinearForm parse_form_file(const std::string& text)
{
    const ojson doc = parse_json(text);
    object(doc, "form file");
    only_keys(doc, {"format", "field", "dim", "matrix"}, "form file");
    check_format(doc, "liealg-form-v1");
    const FieldDesc f = field_of(doc);
    const std::size_t dim = index(member(doc, "dim"), "dim");
    return symmetric_form(matrix(f, member(doc, "matrix"), dim, "form"), "form");
}

std::string serialize_form_file(const BilinearForm& form)
{
    ojson doc;
    doc["format"] = "liealg-form-v1";
    doc["field"] = form.field().name();
    doc["dim"] = form.dim();
    doc["matrix"] = matrix_json(form.matrix());
    return dump(doc);
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error("cannot write " + path);
}

} // namespace liealg
