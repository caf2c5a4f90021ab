#include "divknot/report.hpp"

#include <sstream>

namespace divknot {

namespace {

const char* kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::BlackRegion: return "black_region";
        case GeneratorKind::WhiteRegion: return "white_region";
        case GeneratorKind::DoublePoint: return "double_point";
    }
    return "unknown";
}

const char* colour_name(Colour c) {
    switch (c) {
        case Colour::Black: return "black";
        case Colour::White: return "white";
        case Colour::Unset: return "unset";
    }
    return "unset";
}

}  // namespace

Json to_json(const BigInt& value) {
    if (auto small = to_int64(value)) return *small;
    return value.get_str();
}

BigInt bigint_from_json(const Json& value) {
    if (value.is_number_integer()) return BigInt(std::to_string(value.get<std::int64_t>()));
    if (value.is_string()) return BigInt(value.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + value.dump());
}

Json to_json(const Laurent& poly) {
    Json out = Json::array();
    for (const auto& [e, c] : poly.terms()) out.push_back(Json::array({e, to_json(c)}));
    return out;
}

Laurent laurent_from_json(const Json& value) {
    Laurent p;
    for (const auto& term : value) p.add_term(term.at(0).get<long>(), bigint_from_json(term.at(1)));
    return p;
}

Json to_json(const IntMatrix& matrix) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < matrix.cols(); ++j) row.push_back(to_json(matrix(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& value, Eigen::Index columns_if_empty) {
    const auto rows = static_cast<Eigen::Index>(value.size());
    const Eigen::Index cols = rows == 0 ? columns_if_empty : static_cast<Eigen::Index>(value.at(0).size());
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = value.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("ragged matrix in JSON");
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = bigint_from_json(row.at(static_cast<std::size_t>(j)));
    }
    return m;
}

Json to_json(const Generator& g) {
    Json out{{"index", g.ordinal}, {"kind", kind_name(g.kind)}, {"label", g.label}};
    if (g.kind == GeneratorKind::DoublePoint)
        out["vertex"] = g.label;
    else
        out["region"] = g.region;
    return out;
}

Json to_json(const InvariantSet& inv) {
    return Json{{"genus", inv.genus},
                {"smooth_g4", inv.smooth_g4},
                {"alexander", to_json(inv.alexander)},
                {"determinant", to_json(inv.determinant)},
                {"signature", inv.signature},
                {"signature_convention", "sigma(A + A^T); the mirror convention negates it"}};
}

Json to_json(const DefectCertificate& c) {
    return Json{{"source", c.source},
                {"rank", c.subgroup.rank()},
                {"vectors", to_json(c.subgroup.vectors)},
                {"restricted_matrix", to_json(c.restricted)},
                {"unit", {{"sign", c.unit.sign}, {"exponent", c.unit.exponent}}},
                {"upper_bound", c.upper_bound}};
}

DefectCertificate certificate_from_json(const Json& value, Eigen::Index ambient_dimension) {
    DefectCertificate c;
    c.source = value.at("source").get<std::string>();
    c.subgroup.vectors = matrix_from_json(value.at("vectors"), ambient_dimension);
    c.restricted = matrix_from_json(value.at("restricted_matrix"));
    c.unit.sign = value.at("unit").at("sign").get<int>();
    c.unit.exponent = value.at("unit").at("exponent").get<long>();
    c.upper_bound = value.at("upper_bound").get<long>();
    return c;
}

Json report_json(const DivideDiagram& diagram, const SeifertData& data, const BoundsReport& bounds) {
    Json regions = Json::array();
    for (const auto& r : diagram.regions)
        regions.push_back(Json{{"id", r.id},
                               {"inner", r.is_inner},
                               {"colour", colour_name(r.colour)},
                               {"boundary_length", r.boundary.size()}});
    Json divide{{"gauss", diagram.divide.gauss_code()},
                {"double_points", diagram.map.double_points},
                {"regions", std::move(regions)}};

    Json basis = Json::array();
    for (const auto& g : data.basis) basis.push_back(to_json(g));

    Json certificates = Json::array();
    for (const auto& c : bounds.certificates) certificates.push_back(to_json(c));

    return Json{{"divide", std::move(divide)},
                {"basis", std::move(basis)},
                {"seifert_matrix", to_json(data.matrix)},
                {"invariants", to_json(bounds.invariants)},
                {"g4top", {{"lower", bounds.g4top_lower}, {"upper", bounds.g4top_upper}, {"exact", bounds.exact}}},
                {"certificates", std::move(certificates)}};
}

std::string report_text(const DivideDiagram& diagram, const SeifertData& data, const BoundsReport& bounds) {
    std::ostringstream os;
    const auto& inv = bounds.invariants;
    os << "divide          " << (diagram.divide.visits.empty() ? "(chord)" : diagram.divide.gauss_code()) << "\n";
    os << "double points   " << diagram.map.double_points << "\n";
    os << "basis           ";
    for (const auto& g : data.basis) {
        os << g.label << (g.kind == GeneratorKind::BlackRegion ? "(b) " : g.kind == GeneratorKind::WhiteRegion ? "(w) " : " ");
    }
    os << "\n";
    os << "seifert matrix\n";
    for (Eigen::Index i = 0; i < data.matrix.rows(); ++i) {
        os << "   ";
        for (Eigen::Index j = 0; j < data.matrix.cols(); ++j) os << " " << data.matrix(i, j);
        os << "\n";
    }
    os << "genus           " << inv.genus << "\n";
    os << "smooth g4       " << inv.smooth_g4 << "\n";
    os << "alexander       " << inv.alexander << "\n";
    os << "determinant     " << inv.determinant << "\n";
    os << "signature       " << inv.signature << "\n";
    os << "g4 top          [" << bounds.g4top_lower << ", " << bounds.g4top_upper << "]"
       << (bounds.exact ? " exact" : "") << "\n";
    for (const auto& c : bounds.certificates)
        os << "certificate     " << c.source << ": rank " << c.subgroup.rank() << ", det = "
           << (c.unit.sign < 0 ? "-" : "") << "t^" << c.unit.exponent << ", g4top <= " << c.upper_bound << "\n";
    return os.str();
}

std::string dump(const Json& document) { return document.dump(2) + "\n"; }

}  // namespace divknot
